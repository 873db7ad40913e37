"""Command-line interface: one ``plat`` binary exposing every operation.

Exit codes: 0 success (or positive decision), 1 negative decision (e.g.
``equiv`` on inequivalent plats), 2 usage or precondition failure.  All
domain errors print a machine-parsable code on stderr; ``--json`` switches
stdout to JSON lines.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import braid as braidmod
from . import canonical, hilden, invariants, spheres, twobridge
from .errors import FormatError, PlatError
from .plat import (
    PlatClosureStyle,
    TwistMatrix,
    braid_closure,
    closure,
    to_braid_word,
    validate,
)

__all__ = ["main"]


def _load_matrix(path: str) -> TwistMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return TwistMatrix.from_json_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON in {path}: {exc}") from None
    return TwistMatrix.from_text(text)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _style(args) -> PlatClosureStyle:
    return PlatClosureStyle.from_name(args.style)


def _cmd_validate(args) -> int:
    mat = _load_matrix(args.file)
    validate(mat)
    _emit(args, {"ok": True, "m": mat.m, "n": mat.n}, f"ok: width {mat.m}, height {mat.n}")
    return 0


def _cmd_canon(args) -> int:
    mat = _load_matrix(args.file)
    canon = canonical.canonical_form(mat, force=args.force)
    if args.json:
        print(json.dumps(canon.to_json_dict(), sort_keys=True))
    else:
        sys.stdout.write(canon.to_text())
    return 0


def _cmd_equiv(args) -> int:
    mat1, mat2 = _load_matrix(args.file1), _load_matrix(args.file2)
    same = canonical.equivalent(mat1, mat2, force=args.force)
    _emit(args, {"equivalent": same}, "equivalent" if same else "not equivalent")
    return 0 if same else 1


def _cmd_symmetries(args) -> int:
    mat = _load_matrix(args.file)
    group = [g.value for g in canonical.symmetry_group(mat)]
    _emit(args, {"symmetries": group}, " ".join(group))
    return 0


def _cmd_braid(args) -> int:
    mat = _load_matrix(args.file)
    word = to_braid_word(mat)
    _emit(args,
          {"strands": word.strands,
           "word": [[lt.index, lt.sign] for lt in word.letters]},
          f"{word.strands} strands: {braidmod.format_word(word)}")
    return 0


def _cmd_pd(args) -> int:
    diagram = closure(_load_matrix(args.file), _style(args))
    if args.json:
        print(json.dumps({"pd": [list(q) for q in diagram.quadruples],
                          "free_loops": diagram.free_loops}))
    else:
        for line in diagram.pd_lines():
            print(line)
        for _ in range(diagram.free_loops):
            print("(circle)")
    return 0


def _cmd_gauss(args) -> int:
    diagram = closure(_load_matrix(args.file), _style(args))
    lines = diagram.gauss_lines()
    if args.json:
        print(json.dumps({"gauss": lines}))
    else:
        for line in lines:
            print(line)
    return 0


def _format_jones(poly: invariants.LaurentPoly) -> str:
    return poly.format("t", 2)


def _cmd_invariants(args) -> int:
    mat = _load_matrix(args.file)
    diagram = closure(mat, _style(args))
    payload = {
        "components": diagram.n_components,
        "crossings": diagram.crossing_count,
        "writhe": diagram.writhe,
        "determinant": invariants.determinant(diagram),
    }
    lines = [f"components:  {payload['components']}",
             f"crossings:   {payload['crossings']}",
             f"writhe:      {payload['writhe']}",
             f"determinant: {payload['determinant']}"]
    if diagram.crossing_count <= args.jones_cap:
        jv = invariants.jones(diagram, args.jones_cap)
        payload["jones"] = {str(e): c for e, c in sorted(jv.coeffs.items())}
        payload["jones-exponent-unit"] = "t^(1/2)"
        lines.append(f"jones:       {_format_jones(jv)}")
    else:
        payload["jones"] = None
        lines.append(f"jones:       skipped ({diagram.crossing_count} crossings "
                     f"> cap {args.jones_cap})")
    _emit(args, payload, "\n".join(lines))
    return 0


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {text!r}: {exc}") from None


def _parse_coeff_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise FormatError(f"bad coefficient list {text!r}: {exc}") from None


def _cmd_twobridge(args) -> int:
    if args.rational is not None:
        r = _parse_fraction(args.rational)
        expansion = twobridge.cf_reconstruct(r)
        head, tail = expansion[0], expansion[1:]
        rendered = f"[{head}; {', '.join(str(a) for a in tail)}]" if tail else f"[{head}]"
        _emit(args,
              {"rational": str(r), "expansion": list(expansion)},
              f"{r} = {rendered}")
        return 0
    if args.coeffs is not None:
        coeffs = _parse_coeff_list(args.coeffs)
    else:
        mat = _load_matrix(args.file)
        coeffs = list(twobridge.left_boundary_coeffs(mat) if args.side == "left"
                      else twobridge.right_boundary_coeffs(mat))
    pair = sorted(twobridge.schubert_pair(coeffs))
    _emit(args,
          {"coeffs": coeffs, "schubert-pair": [str(r) for r in pair]},
          " ".join(str(r) for r in pair))
    return 0


def _parse_moves(text: str | None, side: str) -> list[hilden.HildenMove]:
    moves = []
    for tok in (text or "").replace(",", " ").split():
        if "@" not in tok:
            raise FormatError(f"bad Hilden move {tok!r}, expected kind@index")
        kind, _, idx = tok.partition("@")
        try:
            moves.append(hilden.HildenMove(kind, int(idx), side))
        except ValueError:
            raise FormatError(f"bad Hilden move index in {tok!r}") from None
    return moves


def _print_word_invariants(args, word) -> int:
    diagram = braid_closure(word)
    payload = {
        "strands": word.strands,
        "word": braidmod.format_word(word),
        "components": diagram.n_components,
        "crossings": diagram.crossing_count,
        "determinant": invariants.determinant(diagram),
    }
    lines = [f"word:        {payload['word']}",
             f"components:  {payload['components']}",
             f"crossings:   {payload['crossings']}",
             f"determinant: {payload['determinant']}"]
    if diagram.crossing_count <= args.jones_cap:
        jv = invariants.jones(diagram, args.jones_cap)
        payload["jones"] = {str(e): c for e, c in sorted(jv.coeffs.items())}
        lines.append(f"jones:       {_format_jones(jv)}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_hilden_apply(args) -> int:
    mat = _load_matrix(args.file)
    word = hilden.apply_moves(to_braid_word(mat),
                              _parse_moves(args.left, "left"),
                              _parse_moves(args.right, "right"))
    return _print_word_invariants(args, word)


def _cmd_hilden_random(args) -> int:
    word = hilden.random_hilden_element(args.strands, args.length, args.seed)
    return _print_word_invariants(args, word)


def _cmd_hilden_coset(args) -> int:
    report = hilden.coset_consistency(_load_matrix(args.file1), _load_matrix(args.file2),
                                      samples=args.samples, seed=args.seed,
                                      jones_cap=args.jones_cap)
    if args.json:
        print(json.dumps({"verdict": report.verdict,
                          "rotation_related": report.rotation_related,
                          "consistent": report.consistent,
                          "violations": list(report.violations)}))
    else:
        print(report.summary())
    return 0 if report.consistent else 1


def _cmd_spheres(args) -> int:
    chain = spheres.maximal_collection(args.m, args.n)
    if args.json:
        print(json.dumps({"r": len(chain), "spheres": [list(s.c) for s in chain]}))
    else:
        print(f"r = {len(chain)}")
        for s in chain:
            print(str(s))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plat",
        description="Highly twisted plat diagrams: canonical forms, invariants, "
                    "2-bridge data, Hilden moves and vertical spheres.")
    parser.add_argument("--json", action="store_true", help="emit JSON lines")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", _cmd_validate, "check the row-length pattern of a matrix file")
    p.add_argument("file")

    p = add("canon", _cmd_canon, "print the canonical form (rotation-orbit minimum)")
    p.add_argument("file")
    p.add_argument("--force", action="store_true",
                   help="normalize even outside the uniqueness hypotheses")

    p = add("equiv", _cmd_equiv, "decide plat equivalence (exit 0 yes / 1 no)")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--force", action="store_true")

    p = add("symmetries", _cmd_symmetries, "rotations fixing the matrix")
    p.add_argument("file")

    p = add("braid", _cmd_braid, "standard-form braid word of a matrix")
    p.add_argument("file")

    for name, fn, help_ in (("pd", _cmd_pd, "PD code of the plat closure"),
                            ("gauss", _cmd_gauss, "Gauss code of the plat closure")):
        p = add(name, fn, help_)
        p.add_argument("file")
        p.add_argument("--style", default="standard",
                       choices=[s.value for s in PlatClosureStyle])

    p = add("invariants", _cmd_invariants, "components, writhe, determinant, Jones")
    p.add_argument("file")
    p.add_argument("--style", default="standard",
                   choices=[s.value for s in PlatClosureStyle])
    p.add_argument("--jones-cap", type=int, default=invariants.BRACKET_CAP)

    p = add("twobridge", _cmd_twobridge, "Schubert pair / expansion reconstruction")
    p.add_argument("file", nargs="?")
    p.add_argument("--coeffs", help='coefficient list, e.g. "3,-3,3"')
    p.add_argument("--rational", help="reconstruct the |a_i| >= 3 expansion of p/q")
    p.add_argument("--side", default="left", choices=["left", "right"],
                   help="boundary column when reading coefficients from FILE")

    ph = sub.add_parser("hilden", help="Hilden moves and double-coset probes")
    hsub = ph.add_subparsers(dest="subcommand", required=True)
    p = hsub.add_parser("apply", help="multiply the standard word by Hilden moves")
    p.set_defaults(fn=_cmd_hilden_apply)
    p.add_argument("file")
    p.add_argument("--left", help='moves multiplied on the left, e.g. "h2@1,h1@3"')
    p.add_argument("--right", help="moves multiplied on the right")
    p.add_argument("--jones-cap", type=int, default=invariants.BRACKET_CAP)
    p = hsub.add_parser("random", help="seeded random element of the Hilden subgroup")
    p.set_defaults(fn=_cmd_hilden_random)
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jones-cap", type=int, default=invariants.BRACKET_CAP)
    p = hsub.add_parser("coset", help="falsification harness for coset equality")
    p.set_defaults(fn=_cmd_hilden_coset)
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jones-cap", type=int, default=invariants.BRACKET_CAP)

    p = add("spheres", _cmd_spheres, "canonical maximal collection of vertical spheres")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "twobridge":
        given = [x for x in (args.file, args.coeffs, args.rational) if x is not None]
        if len(given) != 1:
            parser.error("twobridge needs exactly one of FILE, --coeffs, --rational")
    try:
        return args.fn(args)
    except PlatError as exc:
        if args.json:
            print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        else:
            print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
