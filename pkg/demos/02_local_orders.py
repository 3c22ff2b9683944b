#!/usr/bin/env python3
# Local orders and positive (2,3) moves.
#
# The state sum needs a branching: edge directions with no cyclic face.
# Minimal census triangulations often have none; a few positive (2,3)
# moves fix that.

# %%
from gendw import derive_formula, find_branching, load_triangulation, make_orderable

for name in ("m004", "m009", "m003", "m010", "s778", "s788"):
    tri = load_triangulation(name)
    b = find_branching(tri)
    print(f"{name}: {tri.tet_count} tetrahedra, {len(tri.edge_classes)} edge classes, "
          f"orderable: {b is not None}")

# %%
# Iterative deepening finds the shortest sequence of moves.
tri, moves, branching = make_orderable(load_triangulation("m003"))
print("m003 moves:", moves)
for t, (order, eps) in enumerate(zip(branching.vertex_orders, branching.signs)):
    print(f"  tet {t}: v0..v3 = {order}, eps = {eps:+d}")

# %%
# Colorings can be parametrized symbolically: free edge classes become
# variables, the rest are words in them, and the leftover face relations
# become constraints.  The result is a reduced formula.
formula = derive_formula(branching, "m003")
print("variables:", formula.variables)
print("constraints:", formula.constraints)
for w1, w2, w3, power in formula.factors:
    print(f"  alpha({w1}, {w2}, {w3})^{power:+d}")
