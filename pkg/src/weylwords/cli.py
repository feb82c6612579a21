"""Command-line front door.

Subcommands: ``roots`` (inspect root systems and affine windows), ``weyl``
(inspect a finite Weyl element), ``biconvex`` (realize / parametrize /
classify / enumerate), ``word`` (make / act / equiv / classify), and
``verify`` (run an exhaustive verification suite).

Exit codes: 0 succeeded (verify: all checks passed), 1 a check found a
counterexample or an input set failed a structural test, 2 usage errors.
All machine output is JSON; ``--format table`` renders it for humans.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cartan import build_root_system, root_system_to_json, sub_system
from .finweyl import from_word, inversion_set
from .affine import (
    affine_root_to_json,
    affine_root_from_json,
    affine_window,
    element_from_json,
    element_to_json,
)
from .biconvex import (
    NotBiconvexError,
    WindowSet,
    classify_biconvex,
    enumerate_biconvex,
    param_from_json,
    param_to_json,
    parametrize,
    realize,
    view_from_json,
    view_to_json,
)
from .words import (
    act_on_word,
    classify_word,
    limit_inversions,
    translation_word,
    word_from_json,
    word_of_param,
    word_to_json,
    words_equivalent,
)
from .verify import SUITES


class UsageError(Exception):
    pass


def _parse_subset(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(sorted({int(part) for part in text.split(",") if part != ""}))
    except ValueError as exc:
        raise UsageError(f"bad index list {text!r}") from exc


def _parse_json(text: str, what: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad {what} JSON: {exc}") from exc


def _rational(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _emit(data, args) -> None:
    if args.format == "json":
        text = json.dumps(data, indent=2, default=str)
    else:
        text = _as_table(data)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _as_table(data, indent=0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for key, value in data.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_as_table(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(
            _as_table(item, indent) if isinstance(item, (dict, list))
            else f"{pad}- {item}" for item in data
        )
    return f"{pad}{data}"


def cmd_roots(args) -> int:
    rs = build_root_system(args.type)
    J = _parse_subset(args.J) or rs.index_set
    sub = sub_system(rs, J)
    data = root_system_to_json(rs)
    data["gram_printed"] = [[_rational(x) for x in row] for row in rs.gram]
    data["J"] = list(sub.J)
    data["subsystem_roots"] = [list(r) for r in sub.roots]
    data["components"] = [list(c) for c in sub.components]
    data["highest_roots"] = [list(r) for r in sub.highest_roots]
    if args.cutoff is not None:
        window = affine_window(sub, args.cutoff)
        data["window"] = {
            "cutoff": args.cutoff,
            "count": len(window),
            "roots": [affine_root_to_json(b) for b in window],
            "printed": [str(b) for b in window],
        }
    _emit(data, args)
    return 0


def cmd_weyl(args) -> int:
    rs = build_root_system(args.type)
    J = _parse_subset(args.J) or rs.index_set
    sub = sub_system(rs, J)
    try:
        word = [int(part) for part in args.word.split(",")] if args.word else []
    except ValueError as exc:
        raise UsageError(f"bad word {args.word!r}") from exc
    w = from_word(rs, word)
    inv = sorted(inversion_set(w, sub))
    _emit(
        {
            "type": rs.label,
            "word": list(w.word),
            "length": w.length,
            "images": [list(r) for r in w.images],
            "inversions": [list(r) for r in inv],
        },
        args,
    )
    return 0


def _window_from_json(rs, data) -> WindowSet:
    sub = sub_system(rs, data["J"])
    return WindowSet(
        sub=sub,
        cutoff=int(data["cutoff"]),
        elements=frozenset(affine_root_from_json(b) for b in data["elements"]),
        tail=frozenset(tuple(r) for r in data.get("tail", [])),
        imaginary_tail=bool(data.get("imaginary_tail", False)),
    )


def cmd_biconvex(args) -> int:
    rs = build_root_system(args.type)
    if args.action == "realize":
        param = param_from_json(rs, _parse_json(args.param, "parameter"))
        view = realize(param, args.cutoff if args.cutoff is not None else 3)
        data = view_to_json(view)
        data["members"] = [str(b) for b in sorted(view.truncate())]
        _emit(data, args)
        return 0
    if args.action == "parametrize":
        if args.view:
            view_data = _parse_json(args.view, "view")
            J = _parse_subset(args.J)
            if not J:
                raise UsageError("parametrize --view needs --J")
            source = view_from_json(rs, J, view_data)
        elif args.window:
            source = _window_from_json(rs, _parse_json(args.window, "window"))
        else:
            raise UsageError("parametrize needs --view or --window")
        try:
            param = parametrize(source)
        except NotBiconvexError as exc:
            _emit({"biconvex": False, "reason": str(exc)}, args)
            return 1
        _emit(param_to_json(param), args)
        return 0
    if args.action == "classify":
        if not args.window:
            raise UsageError("classify needs --window")
        window = _window_from_json(rs, _parse_json(args.window, "window"))
        try:
            case, witness = classify_biconvex(window)
        except NotBiconvexError as exc:
            _emit({"biconvex": False, "reason": str(exc)}, args)
            return 1
        payload = {"biconvex": True, "case": case}
        if case in ("a", "b"):
            payload["element"] = element_to_json(witness)
        else:
            payload["param"] = param_to_json(witness)
        _emit(payload, args)
        return 0
    if args.action == "enumerate":
        J = _parse_subset(args.J) or rs.index_set
        sub = sub_system(rs, J)
        cutoff = args.cutoff if args.cutoff is not None else 2
        sets = enumerate_biconvex(
            sub, cutoff, args.max_size, window_limit=args.window_limit
        )
        _emit(
            {
                "count": len(sets),
                "sets": [[affine_root_to_json(b) for b in sorted(s)] for s in sets],
                "printed": [sorted(str(b) for b in s) for s in sets],
            },
            args,
        )
        return 0
    raise UsageError(f"unknown biconvex action {args.action!r}")


def cmd_word(args) -> int:
    rs = build_root_system(args.type)
    if args.action == "make":
        if args.param:
            param = param_from_json(rs, _parse_json(args.param, "parameter"))
            word = word_of_param(param)
        else:
            J = _parse_subset(args.J) or rs.index_set
            sub = sub_system(rs, J)
            word = translation_word(sub, _parse_subset(args.K))
        data = word_to_json(word)
        if args.cutoff is not None:
            data["inversions"] = [
                str(b) for b in sorted(limit_inversions(word, args.cutoff))
            ]
        _emit(data, args)
        return 0
    if not args.word:
        raise UsageError(f"word {args.action} needs --word")
    word = word_from_json(rs, _parse_json(args.word, "word"))
    if args.action == "act":
        if not args.x:
            raise UsageError("word act needs --x")
        x = element_from_json(rs, _parse_json(args.x, "element"))
        _emit(word_to_json(act_on_word(x, word)), args)
        return 0
    if args.action == "equiv":
        if not args.word2:
            raise UsageError("word equiv needs --word2")
        other = word_from_json(rs, _parse_json(args.word2, "word"))
        _emit({"equivalent": words_equivalent(word, other)}, args)
        return 0
    if args.action == "classify":
        cls = classify_word(word)
        _emit({"K": list(cls.K), "param": param_to_json(cls.param)}, args)
        return 0
    raise UsageError(f"unknown word action {args.action!r}")


def cmd_verify(args) -> int:
    kwargs = {}
    if args.type:
        kwargs["labels"] = tuple(args.type.split(","))
    if args.len is not None:
        first = {
            "finite-bijection": "max_length",
            "roundtrip": "max_y",
            "diagram": "max_y",
            "length": "max_length",
            "four-cases": "max_y",
            "action": "max_x",
        }.get(args.suite)
        if first is None:
            raise UsageError(f"--len does not apply to suite {args.suite!r}")
        kwargs[first] = args.len
    if args.cutoff is not None and args.suite in (
        "finite-bijection", "words", "action", "four-cases"
    ):
        kwargs["cutoff"] = args.cutoff
    result = SUITES[args.suite](**kwargs)
    _emit(
        {
            "suite": result.name,
            "passed": result.passed,
            "checks": result.checked,
            "seconds": round(result.seconds, 3),
            "detail": result.detail,
            "counterexamples": result.counterexamples,
        },
        args,
    )
    print(result.line(), file=sys.stderr)
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylwords",
        description="Exact computations with affine root systems, biconvex "
        "sets, and infinite reduced words.",
    )
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--out", help="write output to a file instead of stdout")
    commands = parser.add_subparsers(dest="command", required=True)

    def output_flags(sub):
        sub.add_argument(
            "--format", choices=("json", "table"), default=argparse.SUPPRESS
        )
        sub.add_argument("--out", default=argparse.SUPPRESS)

    p_roots = commands.add_parser("roots", help="root system and window listing")
    p_roots.add_argument("--type", required=True)
    p_roots.add_argument("--J")
    p_roots.add_argument("--cutoff", "-N", type=int)
    output_flags(p_roots)
    p_roots.set_defaults(func=cmd_roots)

    p_weyl = commands.add_parser("weyl", help="inspect a finite Weyl element")
    p_weyl.add_argument("--type", required=True)
    p_weyl.add_argument("--word", help="comma-separated simple indices")
    p_weyl.add_argument("--J")
    output_flags(p_weyl)
    p_weyl.set_defaults(func=cmd_weyl)

    p_bi = commands.add_parser("biconvex", help="biconvex set operations")
    p_bi.add_argument("action", choices=("realize", "parametrize", "classify", "enumerate"))
    p_bi.add_argument("--type", required=True)
    p_bi.add_argument("--param", help="parameter triple as JSON")
    p_bi.add_argument("--view", help="view JSON (tail/finite/cutoff)")
    p_bi.add_argument("--window", help="window JSON (elements/tail/cutoff)")
    p_bi.add_argument("--J")
    p_bi.add_argument("--cutoff", "-N", type=int)
    p_bi.add_argument("--max-size", type=int, default=4)
    p_bi.add_argument("--window-limit", type=int, default=64)
    output_flags(p_bi)
    p_bi.set_defaults(func=cmd_biconvex)

    p_word = commands.add_parser("word", help="infinite reduced word operations")
    p_word.add_argument("action", choices=("make", "act", "equiv", "classify"))
    p_word.add_argument("--type", required=True)
    p_word.add_argument("--J")
    p_word.add_argument("--K")
    p_word.add_argument("--param", help="make the standard word of this parameter")
    p_word.add_argument("--word", help="word JSON (J/head/period)")
    p_word.add_argument("--word2", help="second word JSON for equiv")
    p_word.add_argument("--x", help="acting element as JSON (lambda/wbar)")
    p_word.add_argument("--cutoff", "-N", type=int)
    output_flags(p_word)
    p_word.set_defaults(func=cmd_word)

    p_verify = commands.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("--type", help="comma-separated type labels")
    p_verify.add_argument("--len", type=int, help="main size bound of the suite")
    p_verify.add_argument("--cutoff", "-N", type=int)
    output_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
