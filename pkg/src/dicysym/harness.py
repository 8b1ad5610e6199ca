"""Verification harness: sweeps (n, p, d, dimV, character) grids, compares
the closed-form existence criteria against the exhaustive o-basis decision,
and checks the structural identities (dimension decomposition, census of
Brauer characters against p-regular classes).

Claims are addressed by short ids; each also has a descriptive alias:

    2.3 / linear-poly      linear Brauer characters, polynomial classes
    2.4 / degree2-poly     degree-2 Brauer characters, polynomial classes
    2.5 / ordinary-poly    ordinary degree-2 characters, polynomial classes
    3.1 / linear-tensor    linear Brauer characters, tensor classes
    3.2 / degree2-tensor   degree-2 Brauer characters, tensor classes
    3.3 / ordinary-tensor  ordinary degree-2 characters, tensor classes
    1.1 / dimension-sum    ranks across all ordinary characters fill the space
    2.1 / brauer-census    Brauer count equals p-regular class count
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .dicyclic import DicyclicGroup, dicyclic_group
from .obasis import decide_obasis, orbital_rank, build_orthogonality_graph
from .orbits import orbit_reps_poly, orbit_poly, orbit_tensor

__all__ = [
    "ALIASES",
    "CLAIMS",
    "HypothesisError",
    "SweepSpec",
    "VerificationRecord",
    "TheoremDisagreement",
    "predict",
    "compute",
    "verify",
    "default_sweeps",
    "run_default",
    "two_part",
]

ALIASES = {
    "linear-poly": "2.3",
    "degree2-poly": "2.4",
    "ordinary-poly": "2.5",
    "linear-tensor": "3.1",
    "degree2-tensor": "3.2",
    "ordinary-tensor": "3.3",
    "dimension-sum": "1.1",
    "brauer-census": "2.1",
}
CLAIMS = tuple(ALIASES.values())


class HypothesisError(ValueError):
    """Parameter point outside the hypotheses of the selected claim."""


class TheoremDisagreement(AssertionError):
    """A computed verdict contradicts the closed-form prediction; carries a
    reproducible counterexample bundle."""

    def __init__(self, record, bundle):
        super().__init__(f"disagreement at {record.claim} {record.params}")
        self.record = record
        self.bundle = bundle


@dataclass(frozen=True)
class SweepSpec:
    """Parameter grid for one verification run."""

    claims: tuple
    ns: tuple = ()
    primes: tuple = ()
    degrees: tuple = (2,)
    dims: tuple = (2,)
    points: tuple = ()  # explicit parameter dicts, checked against hypotheses
    work_ceiling: int | None = None


@dataclass
class VerificationRecord:
    claim: str
    params: dict
    predicted: bool
    computed: bool
    detail: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return self.predicted == self.computed

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "predicted": self.predicted,
            "computed": self.computed,
            "agrees": self.agrees,
            "detail": self.detail,
        }


def normalize_claim(claim: str) -> str:
    claim = ALIASES.get(claim, claim)
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; known: {sorted(CLAIMS)} "
                         f"or aliases {sorted(ALIASES)}")
    return claim


def two_part(h: int) -> int:
    """Largest power of two dividing h."""
    if h <= 0:
        raise ValueError("positive integer required")
    return h & (-h)


def _epsilon(p: int) -> int:
    return 1 if p == 2 else 4


def _require(cond, message):
    if not cond:
        raise HypothesisError(message)


def predict(claim: str, **params) -> bool:
    """The closed-form verdict at a parameter point, by pure arithmetic."""
    claim = normalize_claim(claim)
    if claim == "2.3":
        n, p = params["n"], params["p"]
        j = params.get("j", 0)
        _require(0 <= j < _epsilon(p), f"j={j} outside 0..{_epsilon(p) - 1}")
        return p == 2 or (4 * n) % p != 0
    if claim == "2.4":
        n, p, h = params["n"], params["p"], params["h"]
        _, l = dicyclic_group(n).p_decomposition(p)
        _require(1 <= h < l / 2, f"h={h} outside 1 <= h < l/2 = {l / 2}")
        return (l // math.gcd(l, h)) % 2 == 0
    if claim == "2.5":
        n, h = params["n"], params["h"]
        _require(1 <= h <= n - 1, f"h={h} outside 1..{n - 1}")
        return n % (2 * two_part(h)) == 0
    if claim == "3.1":
        n, p, dim_v = params["n"], params["p"], params["dim_v"]
        j = params.get("j", 0)
        _require(0 <= j < _epsilon(p), f"j={j} outside 0..{_epsilon(p) - 1}")
        return dim_v == 1 or p == 2 or (4 * n) % p != 0
    if claim == "3.2":
        n, p, h, dim_v = params["n"], params["p"], params["h"], params["dim_v"]
        _, l = dicyclic_group(n).p_decomposition(p)
        _require(1 <= h < l / 2, f"h={h} outside 1 <= h < l/2 = {l / 2}")
        return dim_v == 1 or (l // math.gcd(l, h)) % 2 == 0
    if claim == "3.3":
        n, h, dim_v = params["n"], params["h"], params["dim_v"]
        _require(dim_v >= 2, "dim V >= 2 required")
        _require(1 <= h <= n - 1, f"h={h} outside 1..{n - 1}")
        return n % (2 * two_part(h)) == 0
    if claim == "1.1":
        return True
    if claim == "2.1":
        return True
    raise AssertionError(claim)


def _claim_character(claim, group, params):
    if claim in ("2.3", "3.1"):
        ghat = group.p_regular_elements(params["p"])
        return group.linear_characters()[params.get("j", 0)].restrict(ghat)
    if claim in ("2.4", "3.2"):
        ghat = group.p_regular_elements(params["p"])
        return group.degree2_character(params["h"]).restrict(ghat)
    if claim in ("2.5", "3.3"):
        return group.degree2_character(params["h"])
    raise AssertionError(claim)


def compute(claim: str, work_ceiling=None, **params):
    """Ground-truth verdict at a parameter point, via the exhaustive
    decision procedure.  Returns (verdict, ObasisReport-or-detail)."""
    claim = normalize_claim(claim)
    group = dicyclic_group(params["n"])
    if claim in ("2.3", "2.4", "2.5"):
        char = _claim_character(claim, group, params)
        report = decide_obasis(group, char, "monomial", params["d"],
                               early_stop=True, work_ceiling=work_ceiling)
        return report.verdict, report
    if claim in ("3.1", "3.2", "3.3"):
        char = _claim_character(claim, group, params)
        report = decide_obasis(group, char, "tensor", params["dim_v"],
                               early_stop=True, work_ceiling=work_ceiling)
        return report.verdict, report
    if claim == "1.1":
        d = params["d"]
        total = 0
        chars = group.character_table()
        for orbit in orbit_reps_poly(group, d):
            for char in chars:
                total += orbital_rank(orbit, char, "monomial")
        expected = math.comb(group.order + d - 1, d)
        return total == expected, {"dimension_sum": total, "expected": expected}
    if claim == "2.1":
        p = params["p"]
        count = len(group.brauer_characters(p))
        classes = len(group.p_regular_classes(p))
        return count == classes, {"brauer_count": count,
                                  "p_regular_classes": classes}
    raise AssertionError(claim)


def _counterexample_bundle(claim, group, params, report):
    """Reproducible payload for a disagreement: the failing orbit with its
    exact Gram matrix and the witness-search summary."""
    failing = next((rec for rec in report.records if not rec.has_obasis), None)
    if failing is None:
        return {"note": "predicted false but every orbit admits an o-basis",
                "orbits": [rec.representative for rec in report.records]}
    char = _claim_character(claim, group, params)
    kind = "monomial" if claim.startswith("2") else "tensor"
    if kind == "monomial":
        orbit = orbit_poly(failing.representative, group)
    else:
        orbit = orbit_tensor(failing.representative, group)
    graph = build_orthogonality_graph(orbit, char, kind)
    gram = [[repr(entry) for entry in row] for row in graph.gram]
    return {
        "representative": failing.representative,
        "rank": failing.rank,
        "vertices": [v.word() for v in graph.vertices],
        "edges": sorted(
            (i, j) for i in range(len(graph.vertices))
            for j in graph.adjacency[i] if i < j
        ),
        "gram": gram,
    }


def _brauer_degree2_hs(group, p):
    """h-values of the irreducible degree-2 Brauer characters at p."""
    hs = []
    for char in group.brauer_characters(p):
        if char.degree == 2:
            hs.append(int(char.selector.split(":")[1]))
    return hs


def _points_for(claim, spec: SweepSpec):
    if spec.points:
        yield from spec.points
        return
    if claim == "2.3":
        for n in spec.ns:
            for p in spec.primes:
                for d in spec.degrees:
                    for j in range(_epsilon(p)):
                        yield {"n": n, "p": p, "d": d, "j": j}
    elif claim == "2.4":
        for n in spec.ns:
            group = dicyclic_group(n)
            for p in spec.primes:
                for d in spec.degrees:
                    for h in _brauer_degree2_hs(group, p):
                        yield {"n": n, "p": p, "d": d, "h": h}
    elif claim == "2.5":
        for n in spec.ns:
            for d in spec.degrees:
                for h in range(1, n):
                    yield {"n": n, "d": d, "h": h}
    elif claim == "3.1":
        for n in spec.ns:
            for p in spec.primes:
                for dim_v in spec.dims:
                    for j in range(_epsilon(p)):
                        yield {"n": n, "p": p, "dim_v": dim_v, "j": j}
    elif claim == "3.2":
        for n in spec.ns:
            group = dicyclic_group(n)
            for p in spec.primes:
                for dim_v in spec.dims:
                    for h in _brauer_degree2_hs(group, p):
                        yield {"n": n, "p": p, "dim_v": dim_v, "h": h}
    elif claim == "3.3":
        for n in spec.ns:
            for dim_v in spec.dims:
                if dim_v < 2:
                    continue  # outside the hypotheses: no record
                for h in range(1, n):
                    yield {"n": n, "dim_v": dim_v, "h": h}
    elif claim == "1.1":
        for n in spec.ns:
            for d in spec.degrees:
                yield {"n": n, "d": d}
    elif claim == "2.1":
        for n in spec.ns:
            for p in spec.primes:
                yield {"n": n, "p": p}


def verify(spec: SweepSpec, halt=True):
    """One record per applicable parameter point per claim.  A disagreement
    raises TheoremDisagreement with a counterexample bundle unless halt is
    False, in which case the record simply carries agrees=False."""
    records = []
    for claim in spec.claims:
        claim = normalize_claim(claim)
        for params in _points_for(claim, spec):
            predicted = predict(claim, **params)
            computed, detail = compute(claim, work_ceiling=spec.work_ceiling,
                                       **params)
            if hasattr(detail, "to_json"):
                summary = {
                    "dimension": detail.dimension,
                    "orbits_checked": len(detail.records),
                    "complete": detail.complete,
                }
            else:
                summary = detail
            record = VerificationRecord(claim, params, predicted, computed,
                                        summary)
            if not record.agrees and halt:
                group = dicyclic_group(params["n"])
                bundle = (_counterexample_bundle(claim, group, params, detail)
                          if hasattr(detail, "records") else summary)
                raise TheoremDisagreement(record, bundle)
            records.append(record)
    return records


def default_sweeps():
    """The desk-scale battery: every existence criterion at the parameter
    grid it is verified on, plus the structural identities."""
    return (
        SweepSpec(claims=("2.3",), ns=(2, 3, 5), primes=(2, 3, 5), degrees=(2,)),
        SweepSpec(claims=("2.4",), points=(
            {"n": 15, "p": 5, "d": 2, "h": 4},
            {"n": 3, "p": 3, "d": 2, "h": 1},
        )),
        SweepSpec(claims=("2.5",), ns=(2, 3, 4, 6), degrees=(2,)),
        SweepSpec(claims=("3.1",), ns=(2, 3), primes=(2, 3), dims=(1, 2)),
        SweepSpec(claims=("3.2",), ns=(2, 3), primes=(2, 3), dims=(2,)),
        SweepSpec(claims=("3.3",), ns=(2, 3), dims=(2,)),
        SweepSpec(claims=("1.1",), ns=(2, 3), degrees=(1, 2)),
        SweepSpec(claims=("2.1",), ns=(2, 3, 4, 5, 6), primes=(2, 3, 5)),
    )


def run_default(halt=True, work_ceiling=None):
    records = []
    for spec in default_sweeps():
        if work_ceiling is not None:
            spec = SweepSpec(claims=spec.claims, ns=spec.ns, primes=spec.primes,
                             degrees=spec.degrees, dims=spec.dims,
                             points=spec.points, work_ceiling=work_ceiling)
        records.extend(verify(spec, halt=halt))
    return records
