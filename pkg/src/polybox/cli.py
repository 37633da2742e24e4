"""Command-line surface: JSON in, JSON out, deterministic bytes.

Exit codes: 0 for success or an affirmative verdict, 1 for a negative
domain verdict (not equivalent, not covered, not 2-extremal, premise
failed), 2 for any input problem.  Errors are machine readable:
{"error": {"code": ..., "detail": ...}}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import serialize as ser
from .boxes import Box
from .canon import canonical_form, suits_equivalent
from .errors import (
    CriteriaDisagree,
    InputError,
    NoWitness,
    PolyboxError,
    TheoremViolation,
)
from .genomes import (
    covers,
    equivalent_by_canon,
    equivalent_by_cover,
    equivalent_by_index,
    genome_canonical,
    genomes_equivalent,
    reconstruct_minus,
)
from .indices import (
    binary_code_profile,
    even_odd_code,
    more_less_code,
    polybox_equal_by_index,
    suit_index,
)
from .oracle import points_equal
from .suits import DEFAULT_BUDGET, Suit, box_number, union_points, verify_suit
from .tilings import (
    TorusTiling,
    chessboard_check,
    decompose,
    generate_two_extremal,
    is_two_extremal,
    reconstruct,
)

# Faults in the library itself must escape loudly instead of becoming
# polite input errors.
_INTERNAL = (TheoremViolation, CriteriaDisagree, NoWitness)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load(path: str) -> dict:
    return ser.loads(_read(path))


def _load_suit(path: str, require_proper: bool = False) -> Suit:
    space, boxes = ser.parse_suit(_load(path))
    return verify_suit(boxes, require_proper=require_proper)


def _emit(doc: dict, fmt: str) -> None:
    sys.stdout.write(ser.dumps(doc, fmt))


def _cmd_verify_suit(args) -> int:
    suit = _load_suit(args.input, require_proper=args.proper)
    _emit(
        ser.report(
            "verify-suit",
            valid=True,
            proper=suit.is_proper,
            box_count=len(suit),
        ),
        args.format,
    )
    return 0


def _cmd_boxnum(args) -> int:
    kind, parsed = ser.parse_point_source(_load(args.input))
    if kind == "suit":
        space, boxes = parsed
        points = union_points(verify_suit(boxes))
    else:
        points = parsed
    value = box_number(points, args.budget)
    _emit(
        ser.report(
            "boxnum",
            box_number=str(value),
            integral=value.denominator == 1,
            point_count=len(points),
        ),
        args.format,
    )
    return 0


def _cmd_canon(args) -> int:
    suit = _load_suit(args.input, require_proper=True)
    _emit(ser.serialize_canonical_form(canonical_form(suit)), args.format)
    return 0


def _cmd_equiv(args) -> int:
    f = _load_suit(args.a, require_proper=True)
    g = _load_suit(args.b, require_proper=True)
    methods = {}
    if args.method in ("canon", "all"):
        methods["canon"] = suits_equivalent(f, g)
    if args.method in ("index", "all"):
        methods["index"] = polybox_equal_by_index(f, g, args.budget)
    if args.method in ("oracle", "all"):
        methods["oracle"] = points_equal(f, g, args.budget)
    verdicts = set(methods.values())
    if len(verdicts) > 1:
        raise CriteriaDisagree(f"methods disagree: {methods}")
    equal = verdicts.pop()
    _emit(ser.report("equiv", equal=equal, methods=methods), args.format)
    return 0 if equal else 1


def _cmd_index(args) -> int:
    suit = _load_suit(args.suit, require_proper=True)
    try:
        raw = json.loads(args.box)
        box = Box.from_sets(suit.space, [list(s) for s in raw])
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"invalid box: {exc}") from exc
    _emit(ser.report("index", index=suit_index(suit, box)), args.format)
    return 0


def _cmd_codes(args) -> int:
    suit = _load_suit(args.input, require_proper=True)
    code = even_odd_code(suit.space) if args.pattern == "eo" else more_less_code(
        suit.space
    )
    profile = binary_code_profile(suit, code)
    _emit(
        ser.report(
            "codes",
            pattern=args.pattern,
            codewords=[list(w) for w in profile.codewords],
            weight_histogram=list(profile.weight_histogram),
        ),
        args.format,
    )
    return 0


def _cmd_genome_canon(args) -> int:
    genome = ser.parse_genome(_load(args.input))
    _emit(ser.serialize_word_canonical_form(genome_canonical(genome)), args.format)
    return 0


def _cmd_genome_equiv(args) -> int:
    v = ser.parse_genome(_load(args.a))
    w = ser.parse_genome(_load(args.b))
    methods = {}
    if args.method == "all":
        equal = genomes_equivalent(v, w)
        methods = {"canon": equal, "index": equal, "cover": equal}
    elif args.method == "canon":
        methods["canon"] = equivalent_by_canon(v, w)
    elif args.method == "index":
        methods["index"] = equivalent_by_index(v, w)
    else:
        methods["cover"] = equivalent_by_cover(v, w)
    equal = all(methods.values())
    _emit(ser.report("genome-equiv", equal=equal, methods=methods), args.format)
    return 0 if equal else 1


def _parse_word(raw: str) -> tuple[str, ...]:
    letters = tuple(s.strip() for s in raw.split(","))
    if not all(letters):
        raise InputError(f"malformed word {raw!r}")
    return letters


def _cmd_cover(args) -> int:
    genome = ser.parse_genome(_load(args.genome))
    try:
        result = covers(_parse_word(args.word), genome)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(
        ser.report(
            "cover", covered=result.covered, gap=result.gap, g_sum=result.g_sum
        ),
        args.format,
    )
    return 0 if result.covered else 1


def _cmd_rigidity(args) -> int:
    fragment = ser.parse_genome(_load(args.plus))
    universe = None
    if args.universe:
        universe = ser.parse_genome(_load(args.universe)).alphabet
    try:
        minus = reconstruct_minus(fragment, 1 << fragment.d, universe)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(ser.serialize_genome(minus), args.format)
    return 0


def _cmd_tiling_verify(args) -> int:
    tiling = ser.parse_tiling(_load(args.input))
    _emit(
        ser.report(
            "tiling-verify", valid=True, d=tiling.d, cube_count=len(tiling.cubes)
        ),
        args.format,
    )
    return 0


def _cmd_tiling_extremal(args) -> int:
    tiling = ser.parse_tiling(_load(args.input))
    result = is_two_extremal(tiling)
    _emit(
        ser.report(
            "tiling-extremal",
            two_extremal=result.two_extremal,
            partners=[list(p) for p in result.partners],
        ),
        args.format,
    )
    return 0 if result.two_extremal else 1


def _decomposition(tiling: TorusTiling, args):
    return decompose(tiling, select=args.select, seed=args.seed)


def _cubes_json(cubes) -> list[list[str]]:
    return [[str(x) for x in c] for c in cubes]


def _cmd_tiling_decompose(args) -> int:
    tiling = ser.parse_tiling(_load(args.input))
    dec = _decomposition(tiling, args)
    _emit(
        ser.report(
            "tiling-decompose",
            select=args.select,
            plus=_cubes_json(dec.plus),
            minus=_cubes_json(dec.minus),
        ),
        args.format,
    )
    return 0


def _cmd_tiling_reconstruct(args) -> int:
    cubes = ser.parse_cubes(_load(args.input))
    try:
        minus = reconstruct(cubes)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(
        ser.report(
            "tiling-reconstruct",
            d=len(cubes[0]),
            minus=_cubes_json(minus),
        ),
        args.format,
    )
    return 0


def _cmd_tiling_gen(args) -> int:
    if args.count < 1:
        raise InputError("count must be positive")
    tilings = [
        generate_two_extremal(args.d, args.seed + k) for k in range(args.count)
    ]
    _emit(
        ser.report(
            "tiling-gen",
            d=args.d,
            seed=args.seed,
            count=args.count,
            tilings=[_cubes_json(t.cubes) for t in tilings],
        ),
        args.format,
    )
    return 0


def _cmd_tiling_chessboard(args) -> int:
    tiling = ser.parse_tiling(_load(args.input))
    dec = _decomposition(tiling, args)
    try:
        z = tuple(Fraction(s.strip()) for s in args.z.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid z: {exc}") from exc
    result = chessboard_check(tiling, dec, z)
    _emit(
        ser.report(
            "tiling-chessboard",
            z=[str(x) for x in z],
            in_minus=result.in_minus,
            overlap=None if result.overlap is None else [str(x) for x in result.overlap],
        ),
        args.format,
    )
    return 0 if result.in_minus else 1


def _default_budget() -> int:
    raw = os.environ.get("POLYBOX_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"POLYBOX_BUDGET must be an integer, got {raw!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=_default_budget(),
                        help="enumeration budget in bits of |X|_1 "
                             "(env override: POLYBOX_BUDGET)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "pretty"), default="json")

    parser = argparse.ArgumentParser(
        prog="polybox",
        description="Exact verification toolkit for dichotomous boxes, "
        "polybox invariants, word genomes, and torus cube tilings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("verify-suit", _cmd_verify_suit, help="validate a suit document")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--proper", action="store_true")

    p = add("boxnum", _cmd_boxnum, help="box number of a suit union or point set")
    p.add_argument("input", nargs="?", default="-")

    p = add("canon", _cmd_canon, help="canonical form of a proper suit")
    p.add_argument("input", nargs="?", default="-")

    p = add("equiv", _cmd_equiv, help="polybox equality of two proper suits")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--method", choices=("canon", "index", "oracle", "all"),
                   default="all")

    p = add("index", _cmd_index, help="index of a suit relative to a box")
    p.add_argument("--suit", required=True)
    p.add_argument("--box", required=True,
                   help="JSON array of factor subsets, e.g. [[0],[0,1,2]]")

    p = add("codes", _cmd_codes, help="binary code profile of a proper suit")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--pattern", choices=("eo", "ml"), required=True)

    p = add("genome-canon", _cmd_genome_canon, help="canonical form of a genome")
    p.add_argument("input", nargs="?", default="-")

    p = add("genome-equiv", _cmd_genome_equiv, help="genome equivalence")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--method", choices=("canon", "index", "cover", "all"),
                   default="all")

    p = add("cover", _cmd_cover, help="decide whether a genome covers a word")
    p.add_argument("--word", required=True, help="comma-separated letters")
    p.add_argument("--genome", required=True)

    p = add("rigidity", _cmd_rigidity,
            help="reconstruct the minus half of a genome from its plus half")
    p.add_argument("--plus", required=True)
    p.add_argument("--universe", default=None,
                   help="genome document supplying the search alphabet")

    p = add("tiling-verify", _cmd_tiling_verify, help="validate a tiling document")
    p.add_argument("input", nargs="?", default="-")

    p = add("tiling-extremal", _cmd_tiling_extremal, help="check 2-extremality")
    p.add_argument("input", nargs="?", default="-")

    p = add("tiling-decompose", _cmd_tiling_decompose,
            help="split a 2-extremal tiling into plus and minus halves")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--select", choices=("lex", "seed"), default="lex")

    p = add("tiling-reconstruct", _cmd_tiling_reconstruct,
            help="recover the minus half from a plus half")
    p.add_argument("input", nargs="?", default="-")

    p = add("tiling-gen", _cmd_tiling_gen, help="generate 2-extremal tilings")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--count", type=int, default=1)

    p = add("tiling-chessboard", _cmd_tiling_chessboard,
            help="chess-board membership test for a translation vector")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--z", required=True, help="comma-separated rationals")
    p.add_argument("--select", choices=("lex", "seed"), default="lex")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _INTERNAL:
        raise
    except PolyboxError as exc:
        sys.stdout.write(ser.dumps(ser.error_document(exc), args.format))
        return 2


if __name__ == "__main__":
    sys.exit(main())
