#!/usr/bin/env python3
# The value does not depend on the triangulation, the branching, the
# cocycle within its class, and it conjugates under orientation reversal.

# %%
import numpy as np

from gendw import (
    coboundary2,
    cochain_product,
    cyclic_generator_cocycle,
    cyclic_group,
    invariant,
    load_triangulation,
    mirror,
    random_cochain2,
    random_moves,
)

group, alpha = cyclic_group(12), cyclic_generator_cocycle(12, 5)
tri = load_triangulation("s788")
z = invariant(tri, group, alpha)
print("Z(s788), p = 5:", z.approx())

# %%
# Random (1,4), (2,3), (3,2) moves: interior vertices appear and the
# 1/|G|^a prefactor compensates.
for seed in range(5):
    moved = random_moves(tri, 4, seed=seed)
    print(f"seed {seed}: {moved.tet_count} tets, {moved.interior_vertex_count} interior vertices,",
          invariant(moved, group, alpha) == z)

# %%
rng = np.random.default_rng(0)
twisted = cochain_product(alpha, coboundary2(group, random_cochain2(group, 144, rng)))
print("alpha * d(beta):", invariant(tri, group, twisted) == z)
print("mirror gives the conjugate:", invariant(mirror(tri), group, alpha) == z.conjugate())
