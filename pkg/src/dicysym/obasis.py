"""Orthogonal-basis decisions for orbital subspaces: exact rank of the
translated symmetrized vectors plus an exhaustive orthogonality-clique
search.

A pairwise-orthogonal set of nonzero symmetrized vectors whose size equals
the exact rank of the orbital subspace is automatically an orthogonal basis
of it, so per orbit the decision is: compute the rank, build the graph whose
edges are exactly-zero Gram entries, and search for a clique of that size.
The search is complete (exhaustive with degree and counting pruning), so a
failed search is a certificate of non-existence.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import euler_phi, root_of_unity
from .exactlinalg import rational_rank
from .orbits import OrbitData, act_poly, act_tensor, orbit_reps_poly, orbit_reps_tensor
from .symmetrize import (
    gram_poly_closed,
    gram_tensor_closed,
    inner_direct,
    symmetrize_poly,
    symmetrize_tensor,
)

__all__ = [
    "WorkCeilingExceeded",
    "OrthogonalityGraph",
    "OrbitDecision",
    "ObasisReport",
    "default_work_ceiling",
    "vector_rank",
    "orbital_rank",
    "build_orthogonality_graph",
    "find_orthogonal_basis",
    "decide_orbit",
    "decide_obasis",
]

_ENV_CEILING = "DICYSYM_WORK_CEILING"
_DEFAULT_CEILING = 10_000_000


class WorkCeilingExceeded(RuntimeError):
    """Raised when a requested computation exceeds the desk-scale ceiling."""

    def __init__(self, units, ceiling, point):
        super().__init__(
            f"work estimate {units} exceeds ceiling {ceiling} at {point}")
        self.units = units
        self.ceiling = ceiling
        self.point = point


def default_work_ceiling() -> int:
    raw = os.environ.get(_ENV_CEILING)
    return int(raw) if raw else _DEFAULT_CEILING


def vector_rank(vectors) -> int:
    """Exact rank of a family of sparse cyclotomic vectors.

    The family is expanded over the rational field: with L the lcm of the
    minimal orders of all coefficients, each vector v contributes the rows
    zeta_L^t * v (t < phi(L)) written out in power-basis coordinates, and the
    rational rank of that stack is phi(L) times the rank over Q(zeta_L).
    """
    vecs = [v for v in vectors if not v.is_zero()]
    if not vecs:
        return 0
    order = 1
    for v in vecs:
        for c in v.coeffs.values():
            order = math.lcm(order, c.reduced().order)
    phi = euler_phi(order)
    support = sorted(set().union(*(set(v.coeffs) for v in vecs)))
    col = {key: i * phi for i, key in enumerate(support)}
    width = len(support) * phi
    rows = []
    zero = Fraction(0)
    for v in vecs:
        reduced = {key: c.reduced() for key, c in v.coeffs.items()}
        for t in range(phi):
            zt = root_of_unity(order, t)
            row = [zero] * width
            for key, c in reduced.items():
                value = (c * zt).lift(order)
                base = col[key]
                for j, x in enumerate(value.coeffs):
                    row[base + j] = x
            rows.append(row)
    r = rational_rank(rows)
    assert r % phi == 0, "rank blow-up must be divisible by the field degree"
    return r // phi


def _translates(orbit: OrbitData, char, kind):
    group = char.group
    if kind == "monomial":
        return [
            symmetrize_poly(act_poly(orbit.representative, s, group), char,
                            translate=s)
            for s in orbit.transversal
        ]
    dim_v = max(max(orbit.representative), 1)
    return [
        symmetrize_tensor(act_tensor(orbit.representative, s, group), char,
                          dim_v, translate=s)
        for s in orbit.transversal
    ]


def orbital_rank(orbit: OrbitData, char, kind="monomial") -> int:
    """Exact rank over the cyclotomic field of the translated symmetrized
    vectors across the orbit transversal."""
    distinct = []
    for v in _translates(orbit, char, kind):
        if v.is_zero() or any(v == u for u in distinct):
            continue
        distinct.append(v)
    return vector_rank(distinct)


@dataclass
class OrthogonalityGraph:
    """Vertices are transversal elements with distinct nonzero symmetrized
    vectors; edges join pairs whose closed-form Gram entry is exactly zero."""

    vertices: tuple
    vectors: tuple
    adjacency: tuple
    gram: list


def build_orthogonality_graph(orbit: OrbitData, char, kind="monomial") -> OrthogonalityGraph:
    translates = _translates(orbit, char, kind)
    vertices = []
    vectors = []
    for sigma, v in zip(orbit.transversal, translates):
        if v.is_zero() or any(v == u for u in vectors):
            continue
        vertices.append(sigma)
        vectors.append(v)
    entry = gram_poly_closed if kind == "monomial" else gram_tensor_closed
    size = len(vertices)
    gram = [[None] * size for _ in range(size)]
    adjacency = [set() for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = entry(orbit.representative, vertices[i], vertices[j], char,
                          stabilizer=orbit.stabilizer)
            gram[i][j] = value
            gram[j][i] = value.conjugate()
            if i != j and value.is_zero():
                adjacency[i].add(j)
                adjacency[j].add(i)
    return OrthogonalityGraph(tuple(vertices), tuple(vectors),
                              tuple(frozenset(a) for a in adjacency), gram)


def find_orthogonal_basis(graph: OrthogonalityGraph, target: int):
    """Lexicographically-first clique of the given size, or None after a
    complete search.  Deterministic in the canonical vertex order."""
    if target < 0:
        raise ValueError("target must be non-negative")
    if target == 0:
        return ()
    count = len(graph.vertices)
    adjacency = graph.adjacency
    alive = set(range(count))
    # vertices that cannot sit inside a clique of the target size
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if len(adjacency[v] & alive) < target - 1:
                alive.discard(v)
                changed = True
    if len(alive) < target:
        return None
    found = None

    def extend(current, candidates):
        nonlocal found
        if len(current) == target:
            found = tuple(current)
            return True
        for i, v in enumerate(candidates):
            if len(current) + len(candidates) - i < target:
                return False
            rest = [u for u in candidates[i + 1:] if u in adjacency[v]]
            if len(current) + 1 + len(rest) >= target:
                if extend(current + [v], rest):
                    return True
        return False

    extend([], sorted(alive))
    return found


@dataclass
class OrbitDecision:
    representative: tuple
    orbit_size: int
    stabilizer_size: int
    rank: int
    vertex_count: int
    has_obasis: bool
    witness: tuple | None
    exhausted: bool


@dataclass
class ObasisReport:
    kind: str
    n: int
    parameter: int  # degree d for monomials, dim V for tensors
    character: str
    hat: bool
    records: list = field(default_factory=list)
    verdict: bool = True
    dimension: int = 0
    complete: bool = True

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "parameter": self.parameter,
            "character": self.character,
            "hat": self.hat,
            "verdict": self.verdict,
            "dimension": self.dimension,
            "complete": self.complete,
            "orbits": [
                {
                    "representative": list(rec.representative),
                    "orbit_size": rec.orbit_size,
                    "stabilizer_size": rec.stabilizer_size,
                    "rank": rec.rank,
                    "vertices": rec.vertex_count,
                    "has_obasis": rec.has_obasis,
                    "witness": [s.word() for s in rec.witness]
                    if rec.witness is not None else None,
                    "exhausted": rec.exhausted,
                }
                for rec in self.records
            ],
        }


def _verify_witness(witness_vectors):
    for i, v in enumerate(witness_vectors):
        if v.is_zero():
            raise AssertionError("witness vector re-verified as zero")
        for w in witness_vectors[i + 1:]:
            if not inner_direct(v, w).is_zero():
                raise AssertionError("witness pair re-verified as non-orthogonal")


def decide_orbit(orbit: OrbitData, char, kind="monomial") -> OrbitDecision:
    """Per-orbit o-basis decision: exact rank, orthogonality clique of that
    size if one exists, with the witness re-verified against the direct
    inner-product oracle."""
    graph = build_orthogonality_graph(orbit, char, kind)
    rank = vector_rank(graph.vectors)
    if rank == 0:
        return OrbitDecision(orbit.representative, orbit.size,
                             len(orbit.stabilizer), 0, len(graph.vertices),
                             True, (), False)
    clique = find_orthogonal_basis(graph, rank)
    if clique is None:
        return OrbitDecision(orbit.representative, orbit.size,
                             len(orbit.stabilizer), rank, len(graph.vertices),
                             False, None, True)
    witness = tuple(graph.vertices[i] for i in clique)
    _verify_witness([graph.vectors[i] for i in clique])
    return OrbitDecision(orbit.representative, orbit.size,
                         len(orbit.stabilizer), rank, len(graph.vertices),
                         True, witness, False)


def _work_units(group, kind, parameter):
    if kind == "monomial":
        size = math.comb(group.order + parameter - 1, parameter)
    else:
        size = parameter ** group.order
    return group.order * size


def decide_obasis(group, char, kind, parameter, early_stop=False,
                  work_ceiling=None) -> ObasisReport:
    """Decide o-basis existence for the whole symmetry class: conjunction of
    the per-orbit decisions, with the dimension as the sum of orbital ranks.

    With early_stop the scan ends at the first failing orbit (the verdict is
    already final); the report is then marked incomplete.
    """
    ceiling = work_ceiling if work_ceiling is not None else default_work_ceiling()
    units = _work_units(group, kind, parameter)
    if units > ceiling:
        raise WorkCeilingExceeded(units, ceiling, {
            "n": group.n, "kind": kind, "parameter": parameter,
            "character": char.selector})
    if kind == "monomial":
        reps = orbit_reps_poly(group, parameter)
    elif kind == "tensor":
        reps = orbit_reps_tensor(group, parameter)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    report = ObasisReport(kind, group.n, parameter, char.selector, char.hat)
    for orbit in reps:
        decision = decide_orbit(orbit, char, kind)
        report.records.append(decision)
        report.dimension += decision.rank
        if not decision.has_obasis:
            report.verdict = False
            if early_stop:
                report.complete = False
                break
    return report
