"""Command-line front door over .cys files.

Exit codes: 0 on success, 1 for domain errors (printed as a single
``ERR <code>: <detail>`` line) and for an Invalid verdict from ``validate``,
2 for usage errors.  Words on the command line are comma-separated 1-based
generator indices; element arguments also accept ``cp:`` vectors.
"""

from __future__ import annotations

import argparse
import sys

from . import calculus, census, garside, zappa
from .germ import class_bounds, dehornoy_class, germ, is_permutation_free, retraction
from .core import (
    CycleSet,
    decompose,
    diagonal_map,
    perm_group,
    validate,
)
from .cys import format_cys, read_cys
from .errors import CycleSetError, FormatError
from .monomial import MonomialElement
from .perms import cycle_string


def _parse_word(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise FormatError(f"not a comma-separated word: {text!r}") from None


def _parse_element(cs: CycleSet, text: str) -> MonomialElement:
    """Either a word ('1,2,3' or 'word:1,2,3') or exponents ('cp:2,1,0,0')."""
    if text.startswith("cp:"):
        return calculus.cp_to_element(cs, _parse_word(text[3:]))
    if text.startswith("word:"):
        text = text[5:]
    return calculus.word_to_element(cs, _parse_word(text))


def _print_element(g: MonomialElement) -> None:
    print(f"cp={','.join(map(str, g.cp))}")
    print(f"perm={cycle_string(g.perm)}")


def _witness_text(w) -> str:
    return f"witness {w.i} {w.j} {w.u}: left s_{w.left}, right s_{w.right}"


def cmd_validate(args) -> int:
    cs = read_cys(args.file)
    result = validate(cs)
    if result.valid:
        print("Valid")
        return 0
    print(f"Invalid ({_witness_text(result.witness)})")
    return 1


def cmd_info(args) -> int:
    cs = read_cys(args.file)
    result = validate(cs)
    if not result.valid:
        print(f"Invalid ({_witness_text(result.witness)})")
        return 1
    diag = diagonal_map(cs)
    info = perm_group(cs)
    report = dehornoy_class(cs, info)
    print(f"n={cs.n}")
    print(f"square_free={'true' if diag.square_free else 'false'}")
    print(f"T={cycle_string(diag.perm)}")
    print(f"o_T={diag.order}")
    order = f"{info.order}" + ("+" if info.order_is_lower_bound else "")
    print(f"G_order={order}")
    print(f"G_abelian={'true' if info.abelian else 'false'}")
    print(f"G_transitive={'true' if info.transitive else 'false'}")
    print("orbits=" + ";".join(",".join(map(str, orb)) for orb in info.orbits))
    components = decompose(cs)
    print(f"components={len(components)}")
    print(f"class_d={report.d}")
    for name, ok in report.checks.items():
        print(f"check {name}: {'pass' if ok else 'FAIL'}")
    return 0


def cmd_pi(args) -> int:
    cs = read_cys(args.file)
    word = _parse_word(args.word)
    expr = calculus.pi_expression(cs, word)
    element = calculus.word_to_element(cs, word)
    print(f"tuple={','.join(map(str, expr))}")
    print(f"cp={','.join(map(str, element.cp))}")
    print(f"lambda={element.lam}")
    return 0


def cmd_equal(args) -> int:
    cs = read_cys(args.file)
    w1, w2 = _parse_word(args.w1), _parse_word(args.w2)
    if args.mod_d:
        same = calculus.germ_words_equal(cs, w1, w2)
    else:
        same = calculus.words_equal(cs, w1, w2)
    print("true" if same else "false")
    return 0


def cmd_gcd(args) -> int:
    cs = read_cys(args.file)
    a, b = _parse_element(cs, args.a), _parse_element(cs, args.b)
    op = garside.gcd_left if args.side == "left" else garside.gcd_right
    _print_element(op(cs, a, b))
    return 0


def cmd_lcm(args) -> int:
    cs = read_cys(args.file)
    a, b = _parse_element(cs, args.a), _parse_element(cs, args.b)
    op = garside.lcm_left if args.side == "left" else garside.lcm_right
    _print_element(op(cs, a, b))
    return 0


def cmd_divides(args) -> int:
    cs = read_cys(args.file)
    a, b = _parse_element(cs, args.a), _parse_element(cs, args.b)
    op = garside.left_divides if args.side == "left" else garside.right_divides
    print("true" if op(a, b) else "false")
    return 0


def cmd_delta(args) -> int:
    cs = read_cys(args.file)
    _print_element(garside.delta(cs, args.k))
    return 0


def cmd_class(args) -> int:
    cs = read_cys(args.file)
    report = dehornoy_class(cs)
    print(f"d={report.d}")
    print(f"per_generator={','.join(map(str, report.per_generator))}")
    print(f"o_T={report.o_T}")
    print(f"G_order={report.g_order}")
    for name, ok in report.checks.items():
        print(f"check {name}: {'pass' if ok else 'FAIL'}")
    return 0


def cmd_germ(args) -> int:
    cs = read_cys(args.file)
    g = germ(cs, modulus=args.modulus)
    free = is_permutation_free(g)  # caches the closure on valid tables
    print(f"d={g.d}")
    print(f"order={g.order()}")
    print(f"permutation_free={'true' if free else 'false'}")
    return 0


def cmd_retract(args) -> int:
    cs = read_cys(args.file)
    sys.stdout.write(format_cys(retraction(cs, args.k)))
    return 0


def cmd_zappa(args) -> int:
    s1 = read_cys(args.file1)
    s2 = read_cys(args.file2)
    result = zappa.zappa_compose(s1, s2)
    sys.stdout.write(format_cys(result.cycle_set))
    print()
    if result.valid:
        print("valid")
    else:
        w = result.validation.witness
        print(f"invalid (witness {w.i} {w.j} {w.u})")
    return 0


def cmd_sylow(args) -> int:
    cs = read_cys(args.file)
    factors = zappa.sylow_decompose(cs)
    for f in factors:
        print(f"factor p={f.prime} a={f.exponent} beta={f.beta} class={f.prime ** f.exponent}")
        sys.stdout.write(format_cys(f.cycle_set))
        print()
    if args.recompose:
        rebuilt = zappa.sylow_recompose(factors)
        print(f"round_trip={'exact' if rebuilt.rows == cs.rows else 'mismatch'}")
    return 0


def cmd_census(args) -> int:
    mode = "up_to_iso" if args.iso else "labeled"
    total, dmax, hist = census.run_census(args.n, mode, out_path=args.out)
    for line in census.summary_lines(total, dmax, hist):
        print(line)
    return 0


def cmd_bounds(args) -> int:
    bounds = class_bounds(args.n)
    print(f"a_n={bounds.a_n} g_n={bounds.landau_g_n}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycleset",
        description="Exact computations on finite cycle sets stored as .cys tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the cycle-set law")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="structure overview of a cycle set")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("pi", help="canonical expression of a word")
    p.add_argument("file")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("equal", help="word problem")
    p.add_argument("file")
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.add_argument("--mod-d", action="store_true", dest="mod_d")
    p.set_defaults(func=cmd_equal)

    for name, func in (("gcd", cmd_gcd), ("lcm", cmd_lcm), ("divides", cmd_divides)):
        p = sub.add_parser(name, help=f"{name} in the divisibility order")
        p.add_argument("file")
        p.add_argument("--a", required=True, help="word '1,2' or exponents 'cp:1,0'")
        p.add_argument("--b", required=True)
        p.add_argument("--side", choices=("left", "right"), default="left")
        p.set_defaults(func=func)

    p = sub.add_parser("delta", help="Garside element power")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("class", help="class and divisibility report")
    p.add_argument("file")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("germ", help="finite quotient order and permutation-freeness")
    p.add_argument("file")
    p.add_argument("--modulus", type=int, default=None)
    p.set_defaults(func=cmd_germ)

    p = sub.add_parser("retract", help="bracket-power cycle set, as .cys")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("zappa", help="compose two coprime-class structures")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_zappa)

    p = sub.add_parser("sylow", help="prime-power factor tables")
    p.add_argument("file")
    p.add_argument("--recompose", action="store_true")
    p.set_defaults(func=cmd_sylow)

    p = sub.add_parser("census", help="enumerate all cycle sets of size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--iso", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("bounds", help="class bounds for size n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CycleSetError as exc:
        print(f"ERR {exc.code}: {exc}")
        return 1
    except OSError as exc:
        print(f"ERR io: {exc}")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
