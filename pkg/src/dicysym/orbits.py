"""Multi-index and sequence combinatorics under the regular embedding.

Exponent tuples (degree-d multi-indices over m = 4n positions) carry the
right action (alpha * sigma)_i = alpha_{sigma(i)}; tensor index sequences
carry the left action (sigma . gamma)_i = gamma_{sigma^{-1}(i)}.  Orbit
representatives are lexicographic minima and are streamed without
materializing the full index set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

__all__ = [
    "DegreeTooSmallError",
    "OrbitData",
    "act_poly",
    "act_tensor",
    "stabilizer_poly",
    "stabilizer_tensor",
    "orbit_poly",
    "orbit_tensor",
    "orbit_reps_poly",
    "orbit_reps_tensor",
    "compositions",
    "sequences",
    "construct_free_multiindex",
]


class DegreeTooSmallError(ValueError):
    """The degree budget cannot separate the cycle values."""


def act_poly(alpha, g, group):
    """Right action of a group element on an exponent tuple."""
    perm = group.regular_permutation(g)
    if len(alpha) != len(perm):
        raise ValueError("multi-index length does not match the embedding degree")
    return tuple(alpha[perm[i]] for i in range(len(alpha)))


def act_tensor(gamma, g, group):
    """Left action of a group element on an index sequence."""
    perm = group.regular_permutation(g.inverse())
    if len(gamma) != len(perm):
        raise ValueError("sequence length does not match the embedding degree")
    return tuple(gamma[perm[i]] for i in range(len(gamma)))


def stabilizer_poly(alpha, group, elements=None):
    elements = group.elements if elements is None else elements
    return tuple(g for g in elements if act_poly(alpha, g, group) == alpha)


def stabilizer_tensor(gamma, group, elements=None):
    elements = group.elements if elements is None else elements
    return tuple(g for g in elements if act_tensor(gamma, g, group) == gamma)


@dataclass(frozen=True)
class OrbitData:
    """One orbit: lexicographically minimal representative, the transversal
    of elements producing each distinct member (in canonical group order),
    the members they produce, and the stabilizer subgroup."""

    representative: tuple
    transversal: tuple
    members: tuple
    stabilizer: tuple

    @property
    def size(self) -> int:
        return len(self.transversal)


def _orbit(x, group, action, elements):
    seen = {}
    for g in elements:
        y = action(x, g, group)
        if y not in seen:
            seen[y] = g
    members = tuple(seen)
    transversal = tuple(seen[y] for y in members)
    return members, transversal


def orbit_poly(alpha, group, elements=None) -> OrbitData:
    elements = group.elements if elements is None else elements
    members, transversal = _orbit(alpha, group, act_poly, elements)
    rep = min(members)
    if rep != alpha:
        members, transversal = _orbit(rep, group, act_poly, elements)
    stab = tuple(g for g in elements if act_poly(rep, g, group) == rep)
    return OrbitData(rep, transversal, members, stab)


def orbit_tensor(gamma, group, elements=None) -> OrbitData:
    elements = group.elements if elements is None else elements
    members, transversal = _orbit(gamma, group, act_tensor, elements)
    rep = min(members)
    if rep != gamma:
        members, transversal = _orbit(rep, group, act_tensor, elements)
    stab = tuple(g for g in elements if act_tensor(rep, g, group) == rep)
    return OrbitData(rep, transversal, members, stab)


def compositions(m: int, d: int):
    """All tuples of m non-negative integers summing to d, lexicographically
    ascending."""
    if m == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in compositions(m - 1, d - first):
            yield (first,) + rest


def sequences(m: int, dim_v: int):
    """All length-m tuples over 1..dim_v, lexicographically ascending."""
    yield from product(range(1, dim_v + 1), repeat=m)


def _stream_reps(candidates, group, action, elements):
    for x in candidates:
        minimal = True
        seen = {}
        stab = []
        for g in elements:
            y = action(x, g, group)
            if y < x:
                minimal = False
                break
            if y not in seen:
                seen[y] = g
            if y == x:
                stab.append(g)
        if not minimal:
            continue
        members = tuple(seen)
        transversal = tuple(seen[y] for y in members)
        yield OrbitData(x, transversal, members, tuple(stab))


def orbit_reps_poly(group, d: int):
    """Stream one OrbitData per orbit of degree-d exponent tuples, in
    increasing representative order."""
    m = group.order
    yield from _stream_reps(compositions(m, d), group, act_poly, group.elements)


def orbit_reps_tensor(group, dim_v: int):
    """Stream one OrbitData per orbit of index sequences over 1..dim_v."""
    m = group.order
    yield from _stream_reps(sequences(m, dim_v), group, act_tensor, group.elements)


def _cycles(perm):
    """Disjoint cycles of length >= 2 (ordered by least point) and the fixed
    points of a permutation tuple."""
    seen = [False] * len(perm)
    cycles = []
    fixed = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        if len(cyc) == 1:
            fixed.append(start)
        else:
            cycles.append(cyc)
    return cycles, fixed


def construct_free_multiindex(g, d: int, group):
    """A degree-d multi-index with trivial stabilizer, built from the disjoint
    cycle decomposition of g's regular permutation.

    The leading point of each cycle gets its own value, the remaining points
    of the cycle share another, points outside all cycles share a base value;
    values are the smallest distinct non-negative integers, with the degree
    deficit absorbed by the last leading value (which stays the unique
    maximum, so distinctness is preserved).
    """
    m = group.order
    perm = group.regular_permutation(g)
    cycles, fixed = _cycles(perm)
    alpha = [0] * m
    next_value = 0
    if g == group.identity:
        # every point is its own cycle: all positions get distinct values
        base = list(range(m))
        deficit = d - sum(base)
        if deficit < 0:
            raise DegreeTooSmallError(
                f"degree {d} cannot separate {m} positions (needs >= {sum(base)})")
        base[-1] += deficit
        alpha = base
    else:
        if fixed:
            omega = next_value
            next_value += 1
            for i in fixed:
                alpha[i] = omega
        thetas = []
        for _ in cycles:
            thetas.append(next_value)
            next_value += 1
        xis = []
        for _ in cycles:
            xis.append(next_value)
            next_value += 1
        for cyc, theta, xi in zip(cycles, thetas, xis):
            alpha[cyc[0]] = xi
            for i in cyc[1:]:
                alpha[i] = theta
        deficit = d - sum(alpha)
        if deficit < 0:
            raise DegreeTooSmallError(
                f"degree {d} is too small to separate the cycle values of {g} "
                f"(needs >= {sum(alpha)})")
        alpha[cycles[-1][0]] += deficit
    alpha = tuple(alpha)
    if stabilizer_poly(alpha, group) != (group.identity,):
        raise DegreeTooSmallError(f"construction failed to free {g} at degree {d}")
    return alpha
