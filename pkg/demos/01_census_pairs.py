#!/usr/bin/env python3
# Census pairs with equal volume, separated by a Dijkgraaf-Witten invariant.
#
# Each pair below shares its hyperbolic volume.  We evaluate the invariant
# over Z_m with the cocycle alpha_p(a, b, c) = exp(2 pi i p a (b + c - [b + c]) / m^2)
# for every power p and print the values side by side.

# %%
from math import gcd

from gendw import cyclic_generator_cocycle, cyclic_group, invariant, load_triangulation
from gendw.census import pairs, CENSUS

# %%
for a, b in pairs():
    m = CENSUS[a].group_order
    group = cyclic_group(m)
    ta, tb = load_triangulation(a), load_triangulation(b)
    print(f"{a} vs {b} over Z{m}")
    for p in range(m):
        alpha = cyclic_generator_cocycle(m, p)
        za, zb = invariant(ta, group, alpha), invariant(tb, group, alpha)
        flag = "" if za != zb else "   equal"
        note = "" if gcd(p, m) == 1 else " (not a generator)"
        print(f"  p={p:<2d} {za.approx():>28s} {zb.approx():>28s}{flag}{note}")
    print()

# %%
# The exact values live in Q(zeta_{m^2}).  For instance Z(m003) at p = 1:
z = invariant(load_triangulation("m003"), cyclic_group(5), cyclic_generator_cocycle(5, 1))
print("exact:", z)
print("squared:", z * z)  # = 5, so Z(m003) = sqrt(5)
