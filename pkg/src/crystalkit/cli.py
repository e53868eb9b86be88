"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse, 3 validation, 4 budget, 5 suite failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import multisegment as ms
from . import pbw, verify
from .core import (
    BudgetError,
    IntegrityError,
    ParseError,
    UsageError,
    ValidationError,
)
from .multisegment import Multisegment
from .pbw import LusztigDatum
from .serialize import canonical, dumps, kind_of, loads, to_doc
from .tableau import Tableau, embed, enumerate_ssyt

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_VALIDATION, EXIT_BUDGET, EXIT_FAILED = range(6)

OPS = ("e", "f", "e*", "f*", "sigma", "sigma-chain", "flip")
MS_ONLY = {"sigma", "sigma-chain", "flip"}
STAR_OPS = {"e*", "f*"}
INDEXED = {"e", "f", "e*", "f*", "sigma"}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _shape(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"shape must look like 2,1 (got {text!r})") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load(args: argparse.Namespace) -> Any:
    elem = loads(_read(args.input))
    if args.rank is not None and args.rank != elem.rank:
        raise ValidationError(f"document has rank {elem.rank}, --rank says {args.rank}")
    return elem


def cmd_apply(args: argparse.Namespace) -> int:
    elem = _load(args)
    kind, op = kind_of(elem), args.op
    if args.kind is not None and args.kind != kind:
        raise UsageError(f"--kind {args.kind} does not match document kind {kind}")
    if op in MS_ONLY and kind != "ms":
        raise UsageError(f"{op} is only defined on multisegments")
    if op in STAR_OPS and kind == "tab":
        raise UsageError(f"{op} is not defined on tableaux")
    if op in INDEXED and args.index is None:
        raise UsageError(f"{op} needs --index")
    if args.trace and op != "sigma-chain":
        raise UsageError("--trace only applies to sigma-chain")

    if op == "sigma-chain":
        if args.trace:
            trace = ms.sigma_chain_trace(elem)
            lines = [
                dumps({"k": k, "a": a, "stage": to_doc(stage)})
                for k, (a, stage) in enumerate(zip(trace.a, trace.stages), start=1)
            ]
            lines.append(dumps({"result": to_doc(trace.result)}))
            _write(args.output, "\n".join(lines))
            return EXIT_OK
        out = ms.sigma_chain(elem)
    elif op == "flip":
        out = ms.flip(elem)
    elif op == "sigma":
        out = ms.sigma(elem, args.index)
    else:
        method = {"e": "e", "f": "f", "e*": "e_star", "f*": "f_star"}[op]
        out = getattr(elem, method)(args.index)
    _write(args.output, "null" if out is None else canonical(out))
    return EXIT_OK


CONVERSIONS = {("pbw", "ms"), ("ms", "pbw"), ("tab", "ms")}


def cmd_convert(args: argparse.Namespace) -> int:
    elem = _load(args)
    src = kind_of(elem)
    if args.source is not None and args.source != src:
        raise UsageError(f"--from {args.source} does not match document kind {src}")
    if (src, args.to) not in CONVERSIONS:
        raise UsageError(f"conversion {src} -> {args.to} is not supported")
    if src == "pbw":
        out: Any = pbw.phi(elem)
    elif src == "tab":
        out = embed(elem)
    else:
        out = pbw.phi_inv(elem)
    _write(args.output, canonical(out))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        reports = verify.run_battery()
        doc = {"ok": all(r.ok for r in reports), "reports": [r.to_dict() for r in reports]}
        text = json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        ok = doc["ok"]
    else:
        rank = 2 if args.rank is None else args.rank
        max_size = 8 if args.max_size is None else args.max_size
        rep = verify.run_suite(args.suite, rank=rank, max_size=max_size, shape=args.shape)
        text, ok = rep.to_json(), rep.ok
    _write(args.output, text)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_graph(args: argparse.Namespace) -> int:
    rank = 2 if args.rank is None else args.rank
    graph = verify.build_graph(args.model, rank, args.max_size, args.shape, args.star)
    fmt = args.format or "dot"
    if fmt not in ("dot", "json"):
        raise UsageError(f"graph format must be dot or json, got {fmt!r}")
    _write(args.output, graph.to_dot() if fmt == "dot" else graph.to_json())
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    rank = 2 if args.rank is None else args.rank
    if args.model == "tab":
        shape = args.shape or (1,)
        verify.check_budget(rank, sum(shape))
        elems: list[Any] = enumerate_ssyt(shape, rank)
    else:
        size = 2 if args.max_size is None else args.max_size
        verify.check_budget(rank, size)
        elems = verify.enumerate_multisegments(rank, size)
        if args.model == "pbw":
            elems = [pbw.phi_inv(M) for M in elems]
    elems = verify.sort_elements(elems)
    _write(args.output, "\n".join(canonical(x) for x in elems) if elems else "")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--rank", type=int, help="n, for sl(n+1)")
    common.add_argument("--input", default="-", metavar="FILE", help="input document (default stdin)")
    common.add_argument("--output", default="-", metavar="FILE", help="output file (default stdout)")
    common.add_argument("--format", choices=("dot", "json"), help="output format where applicable")

    parser = _Parser(prog="crystalkit", description="Crystals of type A: multisegments, tableaux, Lusztig data.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("apply", parents=[common], help="apply a crystal operator to a document")
    p.add_argument("op", choices=OPS)
    p.add_argument("--index", "-i", type=int)
    p.add_argument("--kind", choices=("ms", "tab", "pbw"))
    p.add_argument("--trace", action="store_true", help="with sigma-chain: print a_k and M^(k)")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("convert", parents=[common], help="convert between realizations")
    p.add_argument("--from", dest="source", choices=("ms", "tab", "pbw"))
    p.add_argument("--to", required=True, choices=("ms", "tab", "pbw"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite ('all' for the battery)")
    p.add_argument("suite")
    p.add_argument("--max-size", type=int)
    p.add_argument("--shape", type=_shape)
    p.set_defaults(func=cmd_verify)

    for name, func, helptext in (
        ("graph", cmd_graph, "export a crystal graph"),
        ("enumerate", cmd_enumerate, "list the elements of a graded piece"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("model", choices=("ms", "tab", "pbw"))
        p.add_argument("--max-size", type=int)
        p.add_argument("--shape", type=_shape)
        if name == "graph":
            p.add_argument("--star", action="store_true", help="include f_i* edges")
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify" and args.suite != "all":
            verify.suite_name(args.suite)
        return args.func(args)
    except ParseError as exc:
        code, msg = EXIT_PARSE, f"parse error: {exc}"
    except ValidationError as exc:
        code, msg = EXIT_VALIDATION, f"validation error: {exc}"
    except BudgetError as exc:
        code, msg = EXIT_BUDGET, f"budget exceeded: {exc}"
    except UsageError as exc:
        code, msg = EXIT_USAGE, f"usage error: {exc}"
    except IntegrityError as exc:
        code, msg = EXIT_FAILED, f"integrity failure: {exc}"
    except OSError as exc:
        code, msg = EXIT_USAGE, f"error: {exc}"
    print(f"crystalkit: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
