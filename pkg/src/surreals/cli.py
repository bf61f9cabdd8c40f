"""Command-line front end.  Plain text by default, deterministic output.

Exit status: 0 on success, 1 on a domain error (diagnostic on stderr,
with the source span for expression errors), 2 on a usage error.
Negative expressions must be passed after "--" or via standard input.
"""

from __future__ import annotations

import argparse
import sys

from . import genesis, names, parser
from . import normalform as nf
from .dyadic import Dyadic, birthday as dy_birthday, by_birthday, children, \
    lineage, parent, sign_expansion
from .errors import LimitExceededError, SurrealError, UnsupportedError


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=_positive, default=names.DEFAULT_RECURSION_CAP,
                        help="birthday cap for the genetic oracle layer (default 12)")
    common.add_argument("--genesis-cap", type=_positive,
                        default=genesis.DEFAULT_GENESIS_CAP,
                        help="generation cap for gens/tree (default 12)")
    common.add_argument("--format", choices=("text", "tsv", "dot"), default=None,
                        help="output format (dot applies to tree only)")

    p = argparse.ArgumentParser(
        prog="surreals",
        description="Exact surreal-number calculator: dyadic genealogy, "
                    "name resolution, and normal forms.")
    sub = p.add_subparsers(dest="command", metavar="command", required=True)

    def add(name, help_text, **kwargs):
        sp = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        return sp

    for name, help_text in (
            ("eval", "evaluate an expression and print its canonical form"),
            ("birthday", "generation index of a value (or omega-or-later)"),
            ("sign", "sign expansion of a finite-birthday value"),
            ("lineage", "strict ancestors of a value, oldest first"),
            ("parent", "parent of a nonzero finite-birthday value"),
            ("children", "the two successors of a finite-birthday value"),
            ("simplest", "mediator of a name literal {X|Y}"),
            ("normal", "explicit normal-form view of a value")):
        sp = add(name, help_text)
        sp.add_argument("expr", nargs="?", default=None,
                        help="expression (stdin when omitted)")

    sp = add("cmp", "compare two expressions: LT, EQ or GT")
    sp.add_argument("lhs")
    sp.add_argument("rhs")

    sp = add("isname", "does the name literal designate the value?")
    sp.add_argument("name", help="a name literal {X|Y}")
    sp.add_argument("expr")

    sp = add("gens", "build generations 0..N by literal cuts and dump them")
    sp.add_argument("n", type=int)

    sp = add("tree", "emit the genealogical tree as DOT, down to DEPTH")
    sp.add_argument("depth", type=int)
    return p


def _read_expr(args) -> str:
    if args.expr is not None:
        return args.expr
    return sys.stdin.read().strip()


def _eval_text(text: str):
    return parser.evaluate(parser.parse(text))


def _finite(value) -> Dyadic:
    if not isinstance(value, Dyadic):
        raise UnsupportedError(
            f"{nf.render(value)} has no finite genealogy")
    return value


def _join(values, fmt: str) -> str:
    sep = "\t" if fmt == "tsv" else "  "
    return sep.join(nf.render(v) for v in values)


def _cmd_eval(args, fmt):
    return nf.render(_eval_text(_read_expr(args)))


def _cmd_birthday(args, fmt):
    return str(nf.birthday(_eval_text(_read_expr(args))))


def _cmd_sign(args, fmt):
    return sign_expansion(_finite(_eval_text(_read_expr(args))))


def _cmd_lineage(args, fmt):
    return _join(lineage(_finite(_eval_text(_read_expr(args)))), fmt)


def _cmd_parent(args, fmt):
    return nf.render(parent(_finite(_eval_text(_read_expr(args)))))


def _cmd_children(args, fmt):
    return _join(children(_finite(_eval_text(_read_expr(args)))), fmt)


def _name_literal(text: str) -> names.Name:
    node = parser.parse(text)
    if not isinstance(node, parser.NameLit):
        raise UnsupportedError("a name literal {X|Y} is required")
    return names.Name([parser.evaluate(e) for e in node.left],
                      [parser.evaluate(e) for e in node.right])


def _cmd_simplest(args, fmt):
    return nf.render(names.resolve(_name_literal(_read_expr(args))))


def _cmd_cmp(args, fmt):
    c = nf.compare(_eval_text(args.lhs), _eval_text(args.rhs))
    return ("LT", "EQ", "GT")[c + 1]


def _cmd_normal(args, fmt):
    return nf.render_explicit(_eval_text(_read_expr(args)))


def _cmd_isname(args, fmt):
    name = _name_literal(args.name)
    return "true" if names.is_name_of(name, _eval_text(args.expr)) else "false"


def _cmd_gens(args, fmt):
    u = genesis.build_universe(args.n, cap=args.genesis_cap)
    values = genesis.map_to_dyadic(u)
    lines = genesis.dump(u)
    counts = [str(len(ids)) for ids in u.by_generation]
    order = [nf.render(values[i]) for i in u.order]
    if fmt == "tsv":
        lines.append("counts\t" + "\t".join(counts))
        lines.append("order\t" + "\t".join(order))
    else:
        lines.append("counts: " + " ".join(counts))
        lines.append("order: " + " ".join(order))
    return "\n".join(lines)


def _cmd_tree(args, fmt):
    if args.depth > args.genesis_cap:
        raise LimitExceededError(
            f"depth {args.depth} exceeds cap {args.genesis_cap}")
    if args.depth < 0:
        raise LimitExceededError("depth must be nonnegative")
    levels = by_birthday(args.depth)
    lines = ["digraph surreals {", "  rankdir=TB;"]
    for level in levels:
        for v in level:
            lines.append(f'  "{v}";')
    for level in levels[:-1]:
        for v in level:
            lo, hi = children(v)
            lines.append(f'  "{v}" -> "{lo}";')
            lines.append(f'  "{v}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines)


_COMMANDS = {
    "eval": _cmd_eval,
    "birthday": _cmd_birthday,
    "sign": _cmd_sign,
    "lineage": _cmd_lineage,
    "parent": _cmd_parent,
    "children": _cmd_children,
    "simplest": _cmd_simplest,
    "cmp": _cmd_cmp,
    "normal": _cmd_normal,
    "isname": _cmd_isname,
    "gens": _cmd_gens,
    "tree": _cmd_tree,
}


def main(argv=None) -> int:
    p = build_parser()
    args = p.parse_args(argv)
    fmt = args.format
    if args.command == "tree":
        if fmt not in (None, "dot"):
            print(f"surreals tree: error: tree only emits dot, not {fmt}",
                  file=sys.stderr)
            return 2
        fmt = "dot"
    else:
        if fmt == "dot":
            print(f"surreals {args.command}: error: dot format applies to "
                  "tree only", file=sys.stderr)
            return 2
        fmt = fmt or "text"
    names.set_default_recursion_cap(args.cap)
    try:
        out = _COMMANDS[args.command](args, fmt)
    except (SurrealError, ZeroDivisionError) as err:
        span = getattr(err, "span", None)
        where = f" at {span}" if span is not None else ""
        print(f"surreals {args.command}: error{where}: {err}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
