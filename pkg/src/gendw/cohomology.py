"""Finite groups given by multiplication tables and their 3-cochains.

Cochains take values in the roots of unity mu_N and are stored as integer
exponent tables: a 3-cochain ``alpha`` is ``zeta_N ** e[g, h, k]``.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Cochain2",
    "Cochain3",
    "FiniteGroup",
    "NotACocycle",
    "coboundary2",
    "cochain_inverse",
    "cochain_product",
    "cyclic_generator_cocycle",
    "cyclic_group",
    "is_cocycle",
    "load_cocycle",
    "random_cochain2",
    "symmetric_group",
]


class NotACocycle(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group on the element ids ``0 .. order-1``.

    ``table[g, h]`` is the id of the product ``g h``.
    """

    table: np.ndarray
    name: str = ""
    identity: int = field(init=False)
    inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.int64)
        n = table.shape[0]
        if table.shape != (n, n) or n == 0:
            raise ValueError(f"multiplication table must be square and nonempty, got {table.shape}")
        if table.min() < 0 or table.max() >= n:
            raise ValueError("multiplication table entries out of range")
        ident = [e for e in range(n) if np.array_equal(table[e], np.arange(n))
                 and np.array_equal(table[:, e], np.arange(n))]
        if not ident:
            raise ValueError("multiplication table has no identity")
        e = ident[0]
        inv = np.full(n, -1, dtype=np.int64)
        for g in range(n):
            hits = np.flatnonzero(table[g] == e)
            if len(hits) != 1 or table[hits[0], g] != e:
                raise ValueError(f"element {g} has no two-sided inverse")
            inv[g] = hits[0]
        _check_associative(table)
        table.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", inv)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    @classmethod
    def from_json(cls, text: str) -> FiniteGroup:
        data = json.loads(text)
        return cls(np.array(data["table"]), name=data.get("name", ""))


def _check_associative(table: np.ndarray, samples: int = 20000) -> None:
    n = table.shape[0]
    if n <= 24:
        g, h, k = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    else:
        rng = np.random.default_rng(0)
        g, h, k = rng.integers(0, n, size=(3, samples))
    if not np.array_equal(table[table[g, h], k], table[g, table[h, k]]):
        raise ValueError("multiplication table is not associative")


def cyclic_group(m: int) -> FiniteGroup:
    """Additive group Z_m."""
    if m < 1:
        raise ValueError(f"cyclic group order must be positive, got {m}")
    r = np.arange(m)
    return FiniteGroup((r[:, None] + r[None, :]) % m, name=f"Z{m}")


def symmetric_group(k: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(k))] for q in perms] for p in perms]
    return FiniteGroup(np.array(table), name=f"S{k}")


@dataclass(frozen=True, eq=False)
class Cochain3:
    """alpha(g, h, k) = zeta_modulus ** exponents[g, h, k]."""

    modulus: int
    exponents: np.ndarray

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        e = np.mod(np.asarray(self.exponents, dtype=np.int64), self.modulus)
        n = e.shape[0]
        if e.shape != (n, n, n):
            raise ValueError(f"3-cochain table must be cubic, got {e.shape}")
        e.setflags(write=False)
        object.__setattr__(self, "exponents", e)

    @property
    def group_order(self) -> int:
        return self.exponents.shape[0]

    def __call__(self, g: int, h: int, k: int) -> int:
        return int(self.exponents[g, h, k])

    def lift(self, n: int) -> Cochain3:
        if n % self.modulus:
            raise ValueError(f"cannot lift modulus {self.modulus} to {n}")
        return Cochain3(n, self.exponents * (n // self.modulus))

    def is_normalized(self, identity: int = 0) -> bool:
        e = self.exponents
        return not (e[identity].any() or e[:, identity].any() or e[:, :, identity].any())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain3) or other.group_order != self.group_order:
            return NotImplemented
        n = math.lcm(self.modulus, other.modulus)
        return np.array_equal(self.lift(n).exponents, other.lift(n).exponents)

    __hash__ = None

    def to_dict(self) -> dict:
        return {"N": self.modulus, "exponents": self.exponents.tolist()}


@dataclass(frozen=True, eq=False)
class Cochain2:
    """beta(g, h) = zeta_modulus ** exponents[g, h]."""

    modulus: int
    exponents: np.ndarray

    def __post_init__(self):
        e = np.mod(np.asarray(self.exponents, dtype=np.int64), self.modulus)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError(f"2-cochain table must be square, got {e.shape}")
        e.setflags(write=False)
        object.__setattr__(self, "exponents", e)

    def is_normalized(self, identity: int = 0) -> bool:
        return not (self.exponents[identity].any() or self.exponents[:, identity].any())


def cyclic_generator_cocycle(m: int, p: int = 1) -> Cochain3:
    """The p-th power of the standard generator of H^3(Z_m, U(1)).

    alpha(a, b, c) = exp(2 pi i p a (b + c - [b + c]) / m^2) with a, b, c in
    0..m-1 and [x] the residue of x mod m.  Values lie in mu_{m^2}.
    """
    if m < 1:
        raise ValueError(f"cyclic group order must be positive, got {m}")
    r = np.arange(m)
    carry = r[:, None] + r[None, :] - (r[:, None] + r[None, :]) % m
    exps = (p % m) * r[:, None, None] * carry[None, :, :]
    return Cochain3(m * m, exps)


def is_cocycle(group: FiniteGroup, alpha: Cochain3) -> bool:
    """Check alpha(h,k,l) alpha(g,hk,l) alpha(g,h,k) = alpha(gh,k,l) alpha(g,h,kl) on all of G^4."""
    n = group.order
    if alpha.group_order != n:
        raise ValueError("cochain and group have different orders")
    t, e = group.table, alpha.exponents
    g, h, k, l = np.meshgrid(*(np.arange(n),) * 4, indexing="ij", sparse=True)
    lhs = e[h, k, l] + e[g, t[h, k], l] + e[g, h, k]
    rhs = e[t[g, h], k, l] + e[g, h, t[k, l]]
    return not np.any((lhs - rhs) % alpha.modulus)


def check_cocycle(group: FiniteGroup, alpha: Cochain3) -> None:
    """Raise NotACocycle unless alpha is a normalized 3-cocycle on group."""
    if alpha.group_order != group.order:
        raise NotACocycle(f"cochain on {alpha.group_order} elements, group has {group.order}")
    if not alpha.is_normalized(group.identity):
        raise NotACocycle("3-cochain is not normalized")
    if not is_cocycle(group, alpha):
        raise NotACocycle("cocycle condition fails")


def coboundary2(group: FiniteGroup, beta: Cochain2) -> Cochain3:
    """(d beta)(g,h,k) = beta(h,k) beta(gh,k)^-1 beta(g,hk) beta(g,h)^-1."""
    n = group.order
    t, b = group.table, beta.exponents
    g, h, k = np.meshgrid(*(np.arange(n),) * 3, indexing="ij", sparse=True)
    return Cochain3(beta.modulus, b[h, k] - b[t[g, h], k] + b[g, t[h, k]] - b[g, h])


def random_cochain2(group: FiniteGroup, modulus: int, rng: np.random.Generator) -> Cochain2:
    """A uniformly random normalized 2-cochain with values in mu_modulus."""
    n = group.order
    b = rng.integers(0, modulus, size=(n, n))
    b[group.identity, :] = 0
    b[:, group.identity] = 0
    return Cochain2(modulus, b)


def cochain_product(a: Cochain3, b: Cochain3, lift: bool = True) -> Cochain3:
    if a.group_order != b.group_order:
        raise ValueError("cochains live on different groups")
    if a.modulus != b.modulus:
        if not lift:
            raise ValueError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
        n = math.lcm(a.modulus, b.modulus)
        a, b = a.lift(n), b.lift(n)
    return Cochain3(a.modulus, a.exponents + b.exponents)


def cochain_inverse(a: Cochain3) -> Cochain3:
    return Cochain3(a.modulus, -a.exponents)


def load_cocycle(text: str, group: FiniteGroup | None = None) -> Cochain3:
    """Parse ``{"m": .., "p": ..}`` or ``{"N": .., "exponents": [...]}``."""
    data = json.loads(text)
    if "m" in data:
        alpha = cyclic_generator_cocycle(int(data["m"]), int(data.get("p", 1)))
    elif "N" in data and "exponents" in data:
        alpha = Cochain3(int(data["N"]), np.array(data["exponents"]))
    else:
        raise ValueError("cocycle document needs either 'm'/'p' or 'N'/'exponents'")
    if group is not None and alpha.group_order != group.order:
        raise NotACocycle(f"cocycle defined on {alpha.group_order} elements, group has {group.order}")
    return alpha
