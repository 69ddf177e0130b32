"""
Command-line front end.

Every subcommand prints one JSON document on stdout; diagnostics go to stderr.
Exit codes: 0 success, 1 failed verification, 2 invalid input or exceeded cap.
"""

import argparse
import json
import sys
from fractions import Fraction

from rootlength.operation.monoid import certify_generators, monoid_context, proper_generators
from rootlength.operation.reducible import ReducibleSystem
from rootlength.operation.verify import SUITES, run_suite
from rootlength.utils import (
    DEFAULT_LEVEL_BOUND,
    CapExceeded,
    LengthExceeded,
    set_verbose,
)


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ValueError(f"Malformed coordinates {text!r}; expected comma-separated integers")


def _system(args) -> ReducibleSystem:
    return ReducibleSystem.from_text(args.type, args.rank)


def _irreducible(args):
    system = _system(args)
    if not system.is_irreducible:
        raise ValueError(f"{args.subcommand} needs an irreducible type, got {system.name}")
    return system.components[0]


def _gamma(args, system: ReducibleSystem) -> tuple[int, ...]:
    coords = _parse_vector(args.gamma)
    if len(coords) != system.rank:
        raise ValueError(f"--gamma has {len(coords)} coordinates, {system.name} has rank {system.rank}")
    if args.basis == "weight":
        return system.from_weight_coordinates(coords)
    return coords


################################################################################
# subcommands
################################################################################
def cmd_length(args) -> tuple[dict, int]:
    system = _system(args)
    gamma = _gamma(args, system)
    out = {"type": system.name, "gamma": list(gamma)}
    if system.is_irreducible:
        result = system.components[0].length(gamma, with_decomposition=args.decompose)
        out["length"] = result.length
    else:
        result = None
        out["length"] = system.length(gamma)
    out["positive_length"] = None
    if all(g >= 0 for g in gamma):
        try:
            out["positive_length"] = system.positive_length(gamma)
        except CapExceeded as e:
            print(f"rootlength: {e}", file=sys.stderr)
    if result is not None:
        out["attaining_facets"] = [
            {"alpha": f.alpha, "tau": list(f.tau)} for f in result.attaining_facets
        ]
    if args.decompose:
        decomposition = result.decomposition if result is not None else system.decompose(gamma)
        out["decomposition"] = [list(b) for b in decomposition]
    return out, 0


def cmd_decompose(args) -> tuple[dict, int]:
    system = _system(args)
    gamma = _gamma(args, system)
    decomposition = system.decompose(gamma)
    return {
        "type": system.name,
        "gamma": list(gamma),
        "length": len(decomposition),
        "decomposition": [list(b) for b in decomposition],
    }, 0


def cmd_positive_length(args) -> tuple[dict, int]:
    system = _system(args)
    gamma = _gamma(args, system)
    return {
        "type": system.name,
        "gamma": list(gamma),
        "positive_length": system.positive_length(gamma),
    }, 0


def cmd_facets(args) -> tuple[dict, int]:
    rs = _irreducible(args)
    records = rs.facets_to_json()
    return {"type": rs.name, "count": len(records), "facets": records}, 0


def cmd_faces(args) -> tuple[dict, int]:
    rs = _irreducible(args)
    out = {"type": rs.name, "index_set": rs.faces_summary()}
    if args.all:
        out["faces"] = [rs.face_to_dict(spec) for spec in rs.faces(proper_only=False)]
    return out, 0


def cmd_generators(args) -> tuple[dict, int]:
    rs = _irreducible(args)
    tau = _parse_vector(args.tau) if args.tau else ()
    facet = rs.facet_of(args.facet, tau)
    ctx = monoid_context(rs, facet)
    bound = Fraction(args.level_bound)
    if args.method == "criterion":
        report = certify_generators(ctx, bound)
    else:
        report = proper_generators(ctx, bound)
    out = {"type": rs.name, **report.to_dict()}
    return out, 0


def cmd_verify(args) -> tuple[dict, int]:
    reports = run_suite(
        args.suite,
        max_rank=args.max_rank,
        level_bound=args.level_bound,
        r_max=args.r_max,
        samples=args.samples,
        seed=args.seed,
    )
    passed = all(r.passed for r in reports)
    return {"passed": passed, "suites": [r.to_dict() for r in reports]}, 0 if passed else 1


COMMANDS = {
    "length": cmd_length,
    "decompose": cmd_decompose,
    "positive-length": cmd_positive_length,
    "facets": cmd_facets,
    "faces": cmd_faces,
    "generators": cmd_generators,
    "verify": cmd_verify,
}


################################################################################
# parser
################################################################################
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootlength",
        description="Exact lengths in root lattices and the structure of the root polytope.",
    )
    parser.add_argument("--verbose", action="store_true", help="progress messages on stderr")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def with_type(p, gamma=False):
        p.add_argument("--type", required=True, help="family (with --rank), B3, or a product like A2xB3")
        p.add_argument("--rank", type=int, default=None)
        if gamma:
            p.add_argument("--gamma", required=True, help="comma-separated integer coordinates")
            p.add_argument("--basis", choices=("root", "weight"), default="root")
        return p

    p = with_type(sub.add_parser("length", help="length via the facet formula"), gamma=True)
    p.add_argument("--decompose", action="store_true", help="include a minimal decomposition")
    with_type(sub.add_parser("decompose", help="a minimal decomposition into roots"), gamma=True)
    with_type(sub.add_parser("positive-length", help="least number of positive roots"), gamma=True)
    with_type(sub.add_parser("facets", help="every facet with functional and vertices"))
    p = with_type(sub.add_parser("faces", help="the index set of standard faces"))
    p.add_argument("--all", action="store_true", help="also list every face with its word")

    p = with_type(sub.add_parser("generators", help="proper minimal elements of a facet"))
    p.add_argument("--facet", type=int, required=True, help="maximal simple root alpha")
    p.add_argument("--tau", default="", help="Weyl word as comma-separated indices")
    p.add_argument("--level-bound", type=int, default=DEFAULT_LEVEL_BOUND)
    p.add_argument("--method", choices=("exhaustive", "criterion"), default="exhaustive")

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("--suite", default="all", choices=("all", *SUITES))
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--level-bound", type=int, default=None)
    p.add_argument("--r-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    return parser


def run(argv: list[str] | None = None) -> int:
    """
    Parse ``argv``, run the subcommand and print its JSON result.

    Returns
    -------
    int
        The exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    if args.verbose:
        set_verbose(True)
    try:
        out, code = COMMANDS[args.subcommand](args)
    except (ValueError, CapExceeded, LengthExceeded) as e:
        print(f"rootlength: {e}", file=sys.stderr)
        return 2
    print(json.dumps(out, indent=2))
    return code


def main() -> None:
    sys.exit(run())
