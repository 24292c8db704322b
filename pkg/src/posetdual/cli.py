"""Command-line front end: ``posetdual {gen,hom,ideal,dual,check,sweep}``.

Exit status: 0 on success, 1 on bad input or an exceeded cap, 2 when a
check or sweep finds a pair where prediction and computation disagree.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .classifier import verify_pair
from .duality import COVER_CAP, alexander_dual
from .errors import CapExceeded, PosetError
from .homset import HOM_CAP, enumerate_hom
from .ideal import Ideal, build_L
from .poset import GENERATE_MAX_N, Poset, antichain, chain, generate_posets
from .sweep import SweepConfig, run_sweep

_NAMED = {
    "V": lambda: Poset(3, [(2, 0), (2, 1)]),
    "L": lambda: Poset(3, [(0, 2), (1, 2)]),
    "LAMBDA": lambda: Poset(3, [(0, 2), (1, 2)]),
    "N": lambda: Poset(4, [(0, 2), (1, 2), (1, 3)]),
}


def parse_poset(text: str) -> Poset:
    """Poset from inline JSON, a JSON file path, or a name (C3, A2, V, L, N)."""
    s = text.strip()
    if s.startswith("{"):
        return Poset.from_json(s)
    m = re.fullmatch(r"([CA])(\d+)", s, flags=re.IGNORECASE)
    if m:
        make = chain if m.group(1).upper() == "C" else antichain
        return make(int(m.group(2)))
    if s.upper() in _NAMED:
        return _NAMED[s.upper()]()
    path = Path(s)
    if path.is_file():
        return Poset.from_json(path.read_text())
    raise PosetError(f"cannot read poset from {text!r}")


def _emit(obj, out=None):
    print(json.dumps(obj), file=out or sys.stdout)


def cmd_gen(args) -> int:
    for P in generate_posets(args.n, max_n=args.max_n):
        _emit(P.to_dict())
    return 0


def cmd_hom(args) -> int:
    P, Q = parse_poset(args.P), parse_poset(args.Q)
    maps = enumerate_hom(P, Q, cap=args.hom_cap)
    _emit({"P": P.to_dict(), "Q": Q.to_dict(), "maps": [m.to_list() for m in maps]})
    return 0


def cmd_ideal(args) -> int:
    P, Q = parse_poset(args.P), parse_poset(args.Q)
    _emit(build_L(P, Q, cap=args.hom_cap).to_dict())
    return 0


def cmd_dual(args) -> int:
    if args.ideal is not None:
        try:
            I = Ideal.from_dict(json.loads(Path(args.ideal).read_text()))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise PosetError(f"malformed ideal JSON: {exc}") from None
    elif args.P is not None and args.Q is not None:
        I = build_L(parse_poset(args.P), parse_poset(args.Q), cap=args.hom_cap)
    else:
        raise PosetError("dual needs either P Q or --ideal FILE")
    _emit(alexander_dual(I, cap=args.cover_cap).to_dict())
    return 0


def cmd_check(args) -> int:
    P, Q = parse_poset(args.P), parse_poset(args.Q)
    report = verify_pair(P, Q, hom_cap=args.hom_cap, cover_cap=args.cover_cap)
    _emit(report.to_dict())
    return 0 if report.agree else 2


def cmd_sweep(args) -> int:
    config = SweepConfig(
        max_n=args.max_n,
        min_n=args.min_n,
        hom_cap=args.hom_cap,
        cover_cap=args.cover_cap,
        workers=args.workers,
        output=args.output,
        format=args.format,
    )
    report = run_sweep(config)
    if config.format == "csv":
        text = report.to_csv()
    else:
        text = json.dumps(report.to_dict(config), indent=2) + "\n"
    if config.output:
        Path(config.output).write_text(text)
    else:
        sys.stdout.write(text)
    print(
        f"{report.pairs_checked} pairs, {report.agreements} agree, "
        f"{len(report.disagreements)} disagree ({report.wall_time:.1f}s)",
        file=sys.stderr,
    )
    return 0 if not report.disagreements else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetdual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def caps(p):
        p.add_argument("--hom-cap", type=int, default=HOM_CAP)
        p.add_argument("--cover-cap", type=int, default=COVER_CAP)

    p = sub.add_parser("gen", help="posets of size n up to isomorphism, one JSON per line")
    p.add_argument("n", type=int)
    p.add_argument("--max-n", type=int, default=GENERATE_MAX_N)
    p.set_defaults(func=cmd_gen)

    for name, func, text in [
        ("hom", cmd_hom, "isotone maps P -> Q"),
        ("ideal", cmd_ideal, "generators of L(P,Q)"),
        ("check", cmd_check, "predicted vs computed duality for one pair"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("P")
        p.add_argument("Q")
        caps(p)
        p.set_defaults(func=func)

    p = sub.add_parser("dual", help="Alexander dual of L(P,Q) or of an ideal JSON file")
    p.add_argument("P", nargs="?")
    p.add_argument("Q", nargs="?")
    p.add_argument("--ideal", help="path to an ideal JSON file")
    caps(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("sweep", help="verify all pairs of posets up to a size bound")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--min-n", type=int, default=None, help="smallest size (default: max-n)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    caps(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PosetError, CapExceeded, ValueError, OSError) as exc:
        print(f"posetdual: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
