"""Command-line front door.

Subcommands: table, brauer, orbits, gram, obasis, verify.  Structured output
is line-delimited JSON with a versioned schema header; every scalar carries
its exact coefficient vector alongside a floating approximation.  Output is
byte-deterministic for a fixed configuration.

Exit codes: 0 success (and, for verify, all records agree); 1 verification
disagreement; 2 invalid parameters; 3 work ceiling exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .dicyclic import DicyclicGroup, scalar_json, table_report
from .harness import (
    ALIASES,
    HypothesisError,
    SweepSpec,
    TheoremDisagreement,
    normalize_claim,
    run_default,
    verify,
)
from .obasis import WorkCeilingExceeded, decide_obasis, default_work_ceiling
from .orbits import orbit_poly, orbit_reps_poly, orbit_reps_tensor, orbit_tensor
from .symmetrize import gram_matrix

SCHEMA = "dicysym/1"

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_CEILING = 3


@dataclass
class CommandConfig:
    subcommand: str
    n: int | None = None
    p: int | None = None
    d: int | None = None
    dim_v: int | None = None
    char: str | None = None
    theorem: str | None = None
    h: int | None = None
    j: int | None = None
    orbit: str | None = None
    orbit_index: int = 0
    early_stop: bool = False
    fmt: str = "structured"
    output: str | None = None
    work_ceiling: int | None = None


class _Emitter:
    def __init__(self, config: CommandConfig):
        self.fmt = config.fmt
        self.lines = []

    def record(self, kind, payload):
        if self.fmt == "structured":
            self.lines.append(json.dumps({"record": kind, **payload},
                                         sort_keys=True))
        else:
            self.lines.append(f"[{kind}] " + _human(payload))

    def header(self, config: CommandConfig):
        if self.fmt == "structured":
            self.lines.append(json.dumps(
                {"schema": SCHEMA, "command": config.subcommand}, sort_keys=True))

    def flush(self, output):
        text = "\n".join(self.lines) + "\n"
        if output:
            with open(output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _human(payload, depth=0):
    if isinstance(payload, dict):
        parts = []
        for key in sorted(payload):
            parts.append(f"{key}={_human(payload[key], depth + 1)}")
        return " ".join(parts)
    if isinstance(payload, (list, tuple)):
        return "[" + ", ".join(_human(x, depth + 1) for x in payload) + "]"
    return str(payload)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _resolve_character(group, config: CommandConfig):
    selector = config.char
    if selector is None:
        raise ValueError("--char is required (psi:j or chi:h)")
    try:
        family, idx = selector.split(":")
        idx = int(idx)
    except ValueError:
        raise ValueError(f"malformed character selector {selector!r}") from None
    if family == "psi":
        if not 0 <= idx <= 3:
            raise ValueError("psi index must be 0..3")
        char = group.linear_characters()[idx]
    elif family == "chi":
        if idx < 1:
            raise ValueError("chi index must be >= 1")
        char = group.degree2_character(idx)
    else:
        raise ValueError(f"unknown character family {family!r}")
    if config.p is not None:
        char = char.restrict(group.p_regular_elements(config.p))
    return char


def _cmd_table(config: CommandConfig, emit: _Emitter):
    group = DicyclicGroup(config.n)
    report = table_report(group)
    emit.record("character-table", report)
    if config.p is not None:
        brauer = table_report(group, group.brauer_characters(config.p), p=config.p)
        emit.record("brauer-table", brauer)
    return EXIT_OK


def _cmd_brauer(config: CommandConfig, emit: _Emitter):
    group = DicyclicGroup(config.n)
    p = config.p
    ghat = group.p_regular_elements(p)
    t, l = group.p_decomposition(p)
    emit.record("p-regular", {
        "n": group.n, "p": p, "t": t, "l": l,
        "elements": [g.word() for g in ghat],
        "classes": [[g.word() for g in cls] for cls in group.p_regular_classes(p)],
    })
    emit.record("brauer-table",
                table_report(group, group.brauer_characters(p), p=p))
    return EXIT_OK


def _space_args(config: CommandConfig):
    if (config.d is None) == (config.dim_v is None):
        raise ValueError("exactly one of --d and --dimv is required")
    if config.d is not None:
        return "monomial", config.d
    return "tensor", config.dim_v


def _cmd_orbits(config: CommandConfig, emit: _Emitter):
    group = DicyclicGroup(config.n)
    kind, parameter = _space_args(config)
    reps = (orbit_reps_poly(group, parameter) if kind == "monomial"
            else orbit_reps_tensor(group, parameter))
    total = 0
    count = 0
    for orbit in reps:
        emit.record("orbit", {
            "representative": list(orbit.representative),
            "size": orbit.size,
            "stabilizer_size": len(orbit.stabilizer),
            "stabilizer": [g.word() for g in orbit.stabilizer],
        })
        total += orbit.size
        count += 1
    emit.record("orbit-census", {"kind": kind, "parameter": parameter,
                                 "orbits": count, "points": total})
    return EXIT_OK


def _select_orbit(group, kind, parameter, config: CommandConfig):
    if config.orbit is not None:
        entries = tuple(int(x) for x in config.orbit.split(","))
        if kind == "monomial":
            if len(entries) != group.order or sum(entries) != parameter:
                raise ValueError("orbit representative does not match the space")
            return orbit_poly(entries, group)
        if len(entries) != group.order or not all(1 <= e <= parameter for e in entries):
            raise ValueError("orbit representative does not match the space")
        return orbit_tensor(entries, group)
    reps = (orbit_reps_poly(group, parameter) if kind == "monomial"
            else orbit_reps_tensor(group, parameter))
    for i, orbit in enumerate(reps):
        if i == config.orbit_index:
            return orbit
    raise ValueError(f"orbit index {config.orbit_index} out of range")


def _cmd_gram(config: CommandConfig, emit: _Emitter):
    group = DicyclicGroup(config.n)
    kind, parameter = _space_args(config)
    char = _resolve_character(group, config)
    orbit = _select_orbit(group, kind, parameter, config)
    matrix = gram_matrix(orbit, char, kind)
    emit.record("gram", {
        "kind": kind,
        "parameter": parameter,
        "character": char.selector,
        "hat": char.hat,
        "representative": list(orbit.representative),
        "transversal": [g.word() for g in orbit.transversal],
        "entries": [[scalar_json(x) for x in row] for row in matrix],
    })
    return EXIT_OK


def _cmd_obasis(config: CommandConfig, emit: _Emitter):
    group = DicyclicGroup(config.n)
    kind, parameter = _space_args(config)
    char = _resolve_character(group, config)
    report = decide_obasis(group, char, kind, parameter,
                           early_stop=config.early_stop,
                           work_ceiling=config.work_ceiling)
    emit.record("obasis", report.to_json())
    return EXIT_OK


def _cmd_verify(config: CommandConfig, emit: _Emitter):
    if config.theorem is None:
        records = run_default(halt=False, work_ceiling=config.work_ceiling)
    else:
        claim = normalize_claim(config.theorem)
        if config.n is None:
            raise ValueError("--n is required with --theorem")
        point_keys = {
            "2.3": ("n", "p", "d", "j"), "2.4": ("n", "p", "d", "h"),
            "2.5": ("n", "d", "h"), "3.1": ("n", "p", "dim_v", "j"),
            "3.2": ("n", "p", "dim_v", "h"), "3.3": ("n", "dim_v", "h"),
            "1.1": ("n", "d"), "2.1": ("n", "p"),
        }[claim]
        supplied = {"n": config.n, "p": config.p, "d": config.d,
                    "dim_v": config.dim_v, "h": config.h, "j": config.j}
        if all(supplied.get(k) is not None for k in point_keys):
            spec = SweepSpec(claims=(claim,),
                             points=({k: supplied[k] for k in point_keys},),
                             work_ceiling=config.work_ceiling)
        else:
            spec = SweepSpec(
                claims=(claim,),
                ns=(config.n,),
                primes=(config.p,) if config.p is not None else (),
                degrees=(config.d,) if config.d is not None else (2,),
                dims=(config.dim_v,) if config.dim_v is not None else (2,),
                work_ceiling=config.work_ceiling,
            )
        records = verify(spec, halt=False)
    disagreements = 0
    for record in records:
        emit.record("verification", record.to_json())
        if not record.agrees:
            disagreements += 1
    emit.record("verify-summary", {
        "records": len(records),
        "disagreements": disagreements,
    })
    return EXIT_OK if disagreements == 0 else EXIT_DISAGREEMENT


_COMMANDS = {
    "table": _cmd_table,
    "brauer": _cmd_brauer,
    "orbits": _cmd_orbits,
    "gram": _cmd_gram,
    "obasis": _cmd_obasis,
    "verify": _cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dicysym",
        description="Exact symmetry classes of polynomials and tensors for "
                    "the dicyclic groups T_{4n}.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp, need_n=True):
        if need_n:
            sp.add_argument("--n", type=int, required=True,
                            help="group parameter n of T_{4n}")
        else:
            sp.add_argument("--n", type=int)
        sp.add_argument("--format", choices=("structured", "human"),
                        default="structured", dest="fmt")
        sp.add_argument("--output", help="write the report here instead of stdout")
        sp.add_argument("--work-ceiling", type=int, dest="work_ceiling",
                        help=f"override the work ceiling "
                             f"(default {default_work_ceiling()}, "
                             f"env DICYSYM_WORK_CEILING)")

    sp = sub.add_parser("table", help="ordinary (and Brauer) character tables")
    common(sp)
    sp.add_argument("--p", type=int, help="also emit the Brauer table at p")

    sp = sub.add_parser("brauer", help="p-regular structure and Brauer characters")
    common(sp)
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("orbits", help="orbit census for a space")
    common(sp)
    sp.add_argument("--d", type=int, help="polynomial degree")
    sp.add_argument("--dimv", type=int, dest="dim_v", help="tensor base dimension")

    sp = sub.add_parser("gram", help="exact Gram matrix for one orbit")
    common(sp)
    sp.add_argument("--d", type=int)
    sp.add_argument("--dimv", type=int, dest="dim_v")
    sp.add_argument("--char", required=True, help="psi:j or chi:h")
    sp.add_argument("--p", type=int, help="restrict to the p-regular domain")
    sp.add_argument("--orbit", help="comma-separated orbit representative")
    sp.add_argument("--orbit-index", type=int, default=0, dest="orbit_index")

    sp = sub.add_parser("obasis", help="orthogonal-basis decision for a space")
    common(sp)
    sp.add_argument("--d", type=int)
    sp.add_argument("--dimv", type=int, dest="dim_v")
    sp.add_argument("--char", required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--early-stop", action="store_true", dest="early_stop")

    sp = sub.add_parser("verify", help="run verification sweeps")
    common(sp, need_n=False)
    sp.add_argument("--theorem", help="claim id (2.3, 2.4, 2.5, 3.1, 3.2, 3.3, "
                                      "1.1, 2.1) or alias "
                                      f"({', '.join(sorted(ALIASES))}); "
                                      "omit to run the default battery")
    sp.add_argument("--p", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--dimv", type=int, dest="dim_v")
    sp.add_argument("--h", type=int)
    sp.add_argument("--j", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = CommandConfig(
        subcommand=args.subcommand,
        n=getattr(args, "n", None),
        p=getattr(args, "p", None),
        d=getattr(args, "d", None),
        dim_v=getattr(args, "dim_v", None),
        char=getattr(args, "char", None),
        theorem=getattr(args, "theorem", None),
        h=getattr(args, "h", None),
        j=getattr(args, "j", None),
        orbit=getattr(args, "orbit", None),
        orbit_index=getattr(args, "orbit_index", 0),
        early_stop=getattr(args, "early_stop", False),
        fmt=args.fmt,
        output=args.output,
        work_ceiling=args.work_ceiling,
    )
    emit = _Emitter(config)
    emit.header(config)
    try:
        if config.n is not None and config.n < 1:
            raise ValueError("n must be >= 1")
        if config.p is not None and not _is_prime(config.p):
            raise ValueError(f"p must be prime, got {config.p}")
        status = _COMMANDS[config.subcommand](config, emit)
    except WorkCeilingExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except TheoremDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except (ValueError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit.flush(config.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
