"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 parse or usage error, 3 capacity
guard.  Diagnostics are a single line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import metrics, report
from .errors import CapacityGuard, ParseError, TamariError
from .group import eval_word, format_dyadic, lambda_of, parse_dyadic, pl_eval, to_pl_map
from .polish_nf import is_normal, normal_form
from .reversing import double_reverse, left_gcd, reverse_left, reverse_right, right_lcm
from .tamari import (
    c_word, catalan, covering_of, enumerate_polish, hasse_edges, join, leq, meet,
)
from .trees import (
    Tree, parse_address, parse_tree, polish_decode, polish_encode, skeleton, to_dot, to_text,
)
from .words import (
    a_length, a_to_x, act, format_word, format_xword, parse_word, word_from_json,
    word_to_json,
)

PROG = "tamari"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


# -- argument readers --------------------------------------------------------

def read_tree(text: str) -> Tree:
    body = text.strip()
    if body and set(body) <= set("xo•◦"):
        return polish_decode(body)
    return parse_tree(body)


def read_word(text: str):
    if text.lstrip().startswith("[{") or text.strip() == "[]":
        return word_from_json(text)
    return parse_word(text)


def tree_out(t: Tree) -> dict:
    return {"tree": to_text(t), "polish": polish_encode(t), "size": t.size}


def word_out(w) -> dict:
    return {"word": format_word(w), "letters": word_to_json(w), "a_length": a_length(w)}


def elem_out(f) -> dict:
    return {"neg": to_text(f.neg), "pos": to_text(f.pos), "size": f.neg.size}


# -- commands ----------------------------------------------------------------

def cmd_tree(args):
    t = read_tree(args.tree)
    if args.dot:
        return None, to_dot(t)
    data = tree_out(t)
    data["skeleton"] = sorted(skeleton(t), key=lambda a: (len(a), a))
    data["c_word"] = format_word(c_word(t))
    text = f"{data['tree']}\npolish {data['polish']}\nsize {t.size}\nc_T {data['c_word']}"
    return data, text


def cmd_word(args):
    w = read_word(args.word) if getattr(args, "word", None) is not None else ()
    if args.action == "act":
        t = act(read_tree(args.tree), w)
        return tree_out(t), to_text(t)
    if args.action == "reverse":
        fn = {"right": reverse_right, "left": reverse_left, "double": double_reverse}[args.side]
        res = fn(w)
        data = {
            "numerator": word_to_json(res.numerator),
            "denominator": word_to_json(res.denominator),
            "steps": res.steps,
            "a_length": res.a_length,
        }
        text = f"N {format_word(res.numerator)}\nD {format_word(res.denominator)}\nsteps {res.steps}"
        return data, text
    if args.action == "nf":
        nf = normal_form(eval_word(w))
        return word_out(nf), format_word(nf)
    if args.action == "check-normal":
        ok = is_normal(w)
        return {"normal": ok}, "normal" if ok else "not normal"
    if args.action in ("lcm", "gcd"):
        u, v = read_word(args.u), read_word(args.v)
        if args.action == "lcm":
            res = right_lcm(u, v)
            data = {
                "lcm": word_to_json(res.lcm),
                "u_complement": word_to_json(res.u_complement),
                "v_complement": word_to_json(res.v_complement),
            }
            text = (f"lcm {format_word(res.lcm)}\nu' {format_word(res.u_complement)}"
                    f"\nv' {format_word(res.v_complement)}")
            return data, text
        g = left_gcd(u, v)
        return word_out(g), format_word(g)
    if args.action == "xform":
        xw = a_to_x(parse_address(args.address), args.base)
        return {"x": [list(p) for p in xw], "text": format_xword(xw)}, format_xword(xw)
    raise ParseError(f"unknown word action {args.action}")  # pragma: no cover


def cmd_elem(args):
    f = eval_word(read_word(args.w1))
    if args.action == "mul":
        g = f * eval_word(read_word(args.w2))
        return elem_out(g), f"{to_text(g.neg)} {to_text(g.pos)}"
    if args.action == "inv":
        g = f.inverse()
        return elem_out(g), f"{to_text(g.neg)} {to_text(g.pos)}"
    if args.action == "eq":
        same = f == eval_word(read_word(args.w2))
        return {"equal": same}, "equal" if same else "different"
    if args.action == "lambda":
        lam = lambda_of(f)
        return {"lambda": lam}, str(lam)
    if args.action == "plmap":
        m = to_pl_map(f)
        if args.at is not None:
            y = pl_eval(m, parse_dyadic(args.at))
            return {"value": format_dyadic(y)}, format_dyadic(y)
        pts = m.to_json()
        return {"breakpoints": pts}, "\n".join(f"{x} {y}" for x, y in pts)
    raise ParseError(f"unknown elem action {args.action}")  # pragma: no cover


def cmd_order(args):
    t = read_tree(args.t1)
    if args.action == "covering":
        cov = covering_of(t)
        pairs = sorted(cov.pairs())
        return {"pairs": pairs, "lows": list(cov.lows)}, " ".join(f"{j}>{i}" for j, i in pairs) or "∅"
    if args.t2 is None:
        raise ParseError(f"order {args.action} needs two trees")
    t2 = read_tree(args.t2)
    if args.action == "leq":
        ok = leq(t, t2)
        return {"leq": ok}, "true" if ok else "false"
    r = join(t, t2, args.method) if args.action == "join" else meet(t, t2, args.method)
    return tree_out(r), to_text(r)


def cmd_lattice(args):
    n = args.n
    words = enumerate_polish(n)
    if args.count:
        return {"n": n, "count": len(words)}, str(len(words))
    if args.dot:
        lines = ["digraph tamari {", "  rankdir=BT;"]
        lines += [f'  "{w}";' for w in words]
        lines += [f'  "{polish_encode(a)}" -> "{polish_encode(b)}";' for a, b in hasse_edges(n)]
        lines.append("}")
        return None, "\n".join(lines)
    if args.hasse:
        edges = [(polish_encode(a), polish_encode(b)) for a, b in hasse_edges(n)]
        return {"n": n, "edges": edges}, "\n".join(f"{a} {b}" for a, b in edges)
    return {"n": n, "trees": list(words)}, "\n".join(words)


def cmd_dist(args):
    t, t2 = read_tree(args.t1), read_tree(args.t2)
    d = metrics.dist_plus(t, t2, args.cap) if args.plus else metrics.dist(t, t2, args.cap)
    return {"dist_plus" if args.plus else "dist": d}, str(d)


def _table(args, rows, plotter=None):
    if args.plot and plotter is not None:
        plotter(rows, args.plot)
    if args.csv:
        return rows, report.csv_table(rows)
    return rows, report.text_table(rows)


def cmd_diameter(args):
    if args.table or args.plot:
        rows = metrics.diameter_table(range(1, args.n + 1), args.cap)
        return _table(args, rows, report.plot_diameters)
    d = metrics.diameter(args.n, args.cap)
    return {"n": args.n, "diameter": d, "trees": catalan(args.n)}, str(d)


def cmd_exp(args):
    if args.family == "upfamily":
        rows = [metrics.ratio_experiment(p, args.cap) for p in range(1, args.size + 1)]
        return _table(args, rows, report.plot_upfamily)
    if args.family == "zigzag":
        start = args.start if args.start is not None else args.size
        rows = [metrics.zigzag_experiment(n, args.cap) for n in range(start, args.size + 1)]
        return _table(args, rows, report.plot_zigzag)
    rows = [metrics.sharp_experiment(args.size, args.q)]
    return _table(args, rows)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog=PROG, description="Tamari lattices, rotations and Thompson's group F.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", metavar="PATH", help="also write the output to PATH")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("tree", help="describe a tree")
    s.add_argument("tree")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("word", help="act, reverse, normalise words")
    ws = s.add_subparsers(dest="action", required=True, parser_class=_Parser)
    a = ws.add_parser("act")
    a.add_argument("-t", "--tree", required=True)
    a.add_argument("-w", "--word", required=True)
    a = ws.add_parser("reverse")
    a.add_argument("-w", "--word", required=True)
    a.add_argument("--side", choices=["right", "left", "double"], default="right")
    for name in ("nf", "check-normal"):
        a = ws.add_parser(name)
        a.add_argument("-w", "--word", required=True)
    for name in ("lcm", "gcd"):
        a = ws.add_parser(name)
        a.add_argument("-u", required=True)
        a.add_argument("-v", required=True)
    a = ws.add_parser("xform", help="express a_α in the x_i generators")
    a.add_argument("address")
    a.add_argument("--base", type=int, default=0, choices=[0, 1])
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("elem", help="group elements given by words")
    es = s.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("mul", "eq"):
        a = es.add_parser(name)
        a.add_argument("w1")
        a.add_argument("w2")
    for name in ("inv", "lambda"):
        a = es.add_parser(name)
        a.add_argument("w1")
    a = es.add_parser("plmap")
    a.add_argument("w1")
    a.add_argument("--at", metavar="T", help="evaluate at a dyadic point such as 3/2^2")
    s.set_defaults(func=cmd_elem)

    s = sub.add_parser("order", help="Tamari order operations")
    s.add_argument("action", choices=["leq", "join", "meet", "covering"])
    s.add_argument("t1")
    s.add_argument("t2", nargs="?")
    s.add_argument("--method", choices=["covering", "polish", "reversing"], default="covering")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("lattice", help="enumerate T_n")
    s.add_argument("action", choices=["enum"])
    s.add_argument("n", type=int)
    s.add_argument("--count", action="store_true")
    s.add_argument("--hasse", action="store_true")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("dist", help="rotation distance")
    s.add_argument("t1")
    s.add_argument("t2")
    s.add_argument("--plus", action="store_true", help="left rotations only")
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("diameter", help="diameter of T_n")
    s.add_argument("n", type=int)
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--table", action="store_true", help="all sizes 1..n")
    s.add_argument("--csv", action="store_true")
    s.add_argument("--plot", metavar="PNG")
    s.set_defaults(func=cmd_diameter)

    s = sub.add_parser("exp", help="distance experiments")
    s.add_argument("family", choices=["upfamily", "zigzag", "sharp"])
    s.add_argument("size", type=int, help="p for upfamily/sharp, n for zigzag")
    s.add_argument("q", type=int, nargs="?", default=1, help="q for sharp")
    s.add_argument("--start", type=int, default=None, help="first zigzag size of a sweep")
    s.add_argument("--cap", type=int, default=None)
    s.add_argument("--csv", action="store_true")
    s.add_argument("--plot", metavar="PNG")
    s.set_defaults(func=cmd_exp)
    return p


def run(argv: Sequence[str], err=None) -> tuple[int, str]:
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
        data, text = args.func(args)
        out = json.dumps(data, ensure_ascii=False, sort_keys=True) if args.json and data is not None else text
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out + "\n")
        return 0, out
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""
    except CapacityGuard as exc:
        print(f"{PROG}: capacity: {exc}", file=err)
        return 3, ""
    except (ParseError, ValueError) as exc:
        print(f"{PROG}: parse error: {exc}", file=err)
        return 2, ""
    except TamariError as exc:
        print(f"{PROG}: {type(exc).__name__}: {exc}", file=err)
        return 1, ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
