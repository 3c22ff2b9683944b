"""Decoding of isomorphism signatures for 3-dimensional triangulations.

Census databases distribute triangulations as isomorphism signatures; this
module turns one into a :class:`Triangulation`.  Decorations after an
underscore (peripheral curve data) are ignored.
"""
from __future__ import annotations

import itertools

from .triangulation import ParseError, Triangulation, perm_inverse

__all__ = ["from_isosig"]

_ALPHABET = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-"
_VALUE = {c: i for i, c in enumerate(_ALPHABET)}
_ORDERED_S4 = tuple(itertools.permutations(range(4)))


def _value(c: str) -> int:
    try:
        return _VALUE[c]
    except KeyError:
        raise ParseError(f"invalid isosig character {c!r}") from None


def from_isosig(sig: str) -> Triangulation:
    """Decode a single-component isosig without boundary faces."""
    sig = sig.split("_", 1)[0]
    if not sig:
        raise ParseError("empty isosig")
    pos = 1
    n = _value(sig[0])
    if n == 63:
        width = _value(sig[1])
        n = sum(_value(sig[2 + i]) << (6 * i) for i in range(width))
        pos = 2 + width
    width, tmp = 0, n
    while tmp:
        tmp >>= 6
        width += 1

    total = 4 * n
    actions: list[int] = []
    filled = 0
    try:
        while filled < total:
            c = _value(sig[pos])
            pos += 1
            for k in range(3):
                a = (c >> (2 * k)) & 3
                if filled == total:
                    if a:
                        raise ParseError("trailing facet action in isosig")
                    continue
                actions.append(a)
                filled += 1 if a == 0 else 2
        joins = actions.count(2)
        dests = []
        for _ in range(joins):
            dests.append(sum(_value(sig[pos + i]) << (6 * i) for i in range(width)))
            pos += width
        perms = [_ORDERED_S4[_value(sig[pos + i])] for i in range(joins)]
        pos += joins
    except IndexError:
        raise ParseError("truncated isosig") from None
    if pos != len(sig):
        raise ParseError("isosig has trailing characters or several components")

    rows: list[list] = [[None] * 4 for _ in range(n)]
    nxt, ai, ji = 1, 0, 0
    for t in range(n):
        for f in range(4):
            if rows[t][f] is not None:
                continue
            a = actions[ai]
            ai += 1
            if a == 0:
                raise ParseError(f"face ({t}, {f}) is a boundary face")
            if a == 1:
                u, perm = nxt, (0, 1, 2, 3)
                nxt += 1
            else:
                u, perm = dests[ji], perms[ji]
                ji += 1
            if u >= n or rows[u][perm[f]] is not None:
                raise ParseError("inconsistent isosig gluing data")
            rows[t][f] = (u, perm)
            rows[u][perm[f]] = (t, perm_inverse(perm))
    return Triangulation(tuple(tuple(r) for r in rows))
