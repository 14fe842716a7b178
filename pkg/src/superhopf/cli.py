"""Command line interface: ``superhopf <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import snsym, sqsym, ssym, verify
from .compositions import Composition, covers, enumerate_degree
from .linalg import LinComb, TensorComb, parse_element
from .ribbon import to_h, to_ribbon
from .trees import admissible_cuts, cut_split, forest_of, format_cut, parse_cut

DEFAULT_MAX_DEGREE = 10

FAMILIES = ({"H", "R"}, {"M", "L"}, {"h", "r"})


class UsageError(Exception):
    pass


# -- basis plumbing ------------------------------------------------------------

def convert(x: LinComb, target: str) -> LinComb:
    if x.basis == target:
        return x
    pair = (x.basis, target)
    if pair == ("R", "H"):
        return to_h(x)
    if pair == ("H", "R"):
        return to_ribbon(x)
    if pair == ("M", "L"):
        return sqsym.to_l(x)
    if pair == ("L", "M"):
        return sqsym.to_m(x)
    if pair == ("r", "h"):
        return ssym.r_to_h(x)
    raise UsageError(f"cannot convert basis {x.basis} to {target}")


def _convert_tensor(t: TensorComb, target: str) -> TensorComb:
    if all(b == target for b in t.bases):
        return t
    maps = [(lambda idx, b=b: convert(LinComb.term(b, idx), target)) for b in t.bases]
    return t.apply(*maps)


def _coproduct(x: LinComb) -> TensorComb:
    if x.basis == "H":
        return snsym.coproduct(x)
    if x.basis == "R":
        return _convert_tensor(snsym.coproduct(to_h(x)), "R")
    if x.basis in ("M", "L"):
        return sqsym.coproduct(x)
    if x.basis == "h":
        return ssym.ssym_coproduct(x)
    raise UsageError(f"no coproduct for basis {x.basis}")


def _antipode(x: LinComb) -> LinComb:
    if x.basis == "H":
        return snsym.antipode_closed(x)
    if x.basis == "R":
        return to_ribbon(snsym.antipode_closed(to_h(x)))
    if x.basis in ("h", "r"):
        return ssym.ssym_antipode(convert(x, "h"))
    raise UsageError(f"no antipode for basis {x.basis}")


def _parse(text: str) -> LinComb:
    try:
        return parse_element(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# -- output --------------------------------------------------------------------

def _payload(x):
    if isinstance(x, LinComb):
        return {"basis": x.basis, "terms": x.to_json()}
    return {"bases": list(x.bases), "terms": x.to_json()}


def _emit(args, text_lines: list, data) -> None:
    if args.format == "json":
        print(json.dumps({"command": args.command, "result": data}, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- subcommands ---------------------------------------------------------------

def cmd_enumerate(args) -> int:
    n = args.n
    if not 1 <= n <= args.max_degree:
        raise UsageError(f"degree must lie in 1..{args.max_degree}, got {n}")
    comps = enumerate_degree(n)
    if args.count:
        _emit(args, [str(len(comps))], {"count": len(comps)})
        return 0
    lines = [str(a) for a in comps]
    data = {"compositions": lines}
    if args.edges:
        edges = [(a, b) for a in comps for b in sorted(covers(a), key=Composition.key)]
        lines = lines + [f"{a} < {b}" for a, b in edges]
        data["edges"] = [[str(a), str(b)] for a, b in edges]
    _emit(args, lines, data)
    return 0


def cmd_convert(args) -> int:
    x = _parse(args.element)
    y = convert(x, args.to)
    _emit(args, [str(y)], _payload(y))
    return 0


def cmd_product(args) -> int:
    x, y = _parse(args.left), _parse(args.right)
    if x.basis != y.basis:
        y = convert(y, x.basis)
    z = x * y
    if args.basis:
        z = convert(z, args.basis)
    _emit(args, [str(z)], _payload(z))
    return 0


def cmd_coproduct(args) -> int:
    x = _parse(args.element)
    t = _coproduct(x)
    if args.basis:
        t = _convert_tensor(t, args.basis)
    _emit(args, [str(t)], _payload(t))
    return 0


def cmd_antipode(args) -> int:
    x = _parse(args.element)
    y = _antipode(x)
    if args.basis:
        y = convert(y, args.basis)
    _emit(args, [str(y)], _payload(y))
    return 0


def cmd_pair(args) -> int:
    x, y = _parse(args.left), _parse(args.right)
    try:
        v = sqsym.pairing(x, y)
    except TypeError as exc:
        raise UsageError(str(exc)) from exc
    _emit(args, [str(v)], {"value": str(v)})
    return 0


def cmd_project(args) -> int:
    x = _parse(args.element)
    if x.basis in ("H", "R"):
        y = ssym.project_pi(x)
    elif x.basis in ("r", "h"):
        y = convert(x, "h")
    else:
        raise UsageError(f"cannot project basis {x.basis}")
    _emit(args, [str(y)], _payload(y))
    return 0


def cmd_verify(args) -> int:
    try:
        rep = verify.run(args.identity, args.max_degree)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    lines = [rep.summary()] + [f"counterexample: {w}" for w in rep.failures]
    data = {"identity": args.identity, "max_degree": args.max_degree, "ok": rep.ok,
            "instances": rep.instances, "failures": rep.failures}
    _emit(args, lines, data)
    return 0 if rep.ok else 1


def cmd_trees(args) -> int:
    try:
        alpha = Composition.parse(args.composition)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    f = forest_of(alpha)
    try:
        cuts = [parse_cut(args.cut)] if args.cut else admissible_cuts(f)
        rows = [(c, *cut_split(f, c)) for c in cuts]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    lines = [f"{format_cut(c)}  {'+' if s > 0 else '-'}  {p} (x) {r}" for c, p, r, s in rows]
    data = [{"cut": format_cut(c), "sign": s, "P": str(p), "R": str(r)} for c, p, r, s in rows]
    _emit(args, lines, data)
    return 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="superhopf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list dotted compositions of degree n")
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true", help="print only the number of compositions")
    p.add_argument("--edges", action="store_true", help="also list covering pairs")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("convert", parents=[common], help="change basis within a family")
    p.add_argument("element")
    p.add_argument("--to", required=True, choices=("H", "R", "M", "L", "h"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("product", parents=[common], help="multiply two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--basis", choices=("H", "R", "M", "L", "h"))
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coproduct", parents=[common], help="coproduct of an element")
    p.add_argument("element")
    p.add_argument("--basis", choices=("H", "R", "M", "L"))
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("antipode", parents=[common], help="antipode of an element")
    p.add_argument("element")
    p.add_argument("--basis", choices=("H", "R", "h"))
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("pair", parents=[common], help="pair an H/R element with an M/L element")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("project", parents=[common], help="image under pi in the h basis")
    p.add_argument("element")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify", parents=[common], help="run a catalogued identity check")
    p.add_argument("identity", help="one of: " + ", ".join(verify.names()))
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trees", parents=[common], help="admissible cuts of the forest of a composition")
    p.add_argument("composition")
    p.add_argument("--cut", help="a single cut such as [-,0,-,0,0]")
    p.set_defaults(func=cmd_trees)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
