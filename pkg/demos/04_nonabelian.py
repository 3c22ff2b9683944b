#!/usr/bin/env python3
# Nothing in the state sum assumes the group is abelian.  Here G = S3 with
# the Z2 generator cocycle pulled back along the sign homomorphism.

# %%
import numpy as np

from gendw import Cochain3, cyclic_generator_cocycle, compute, load_triangulation, symmetric_group

s3 = symmetric_group(3)
odd = [int(g != s3.identity and s3.mul(g, g) == s3.identity) for g in range(6)]
z2 = cyclic_generator_cocycle(2, 1)
alpha = Cochain3(4, np.array([[[z2(odd[g], odd[h], odd[k]) for k in range(6)]
                               for h in range(6)] for g in range(6)]))

for name in ("m003", "m004", "m006", "m007", "m009", "m010", "s778", "s788"):
    res = compute(load_triangulation(name), s3, alpha)
    print(f"{name}: {res.coloring_count:3d} colorings, Z = {res.value.approx()}")
