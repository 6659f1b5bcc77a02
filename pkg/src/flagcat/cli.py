"""Command-line interface.

Every command takes ``--n``, the number of weights, because it changes the
meaning of every tuple and label argument. Output is a JSON envelope
(query, result, elapsed_seconds, engine_version, cache_hit) unless
``--format text`` or, for the quiver, ``--format dot`` is given.

Ext convention: ``ext1 --lam L --mu M`` reports ``Ext^1(S_L, S_M)``; it can be
nonzero only when the degree tuple of M covers that of L.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from typing import Any, Sequence

from . import __version__, bridge, modules, verify, weighted
from .cache import ResultCache, cache_key
from .exceptions import FlagcatError, ParseError
from .grammar import format_partition_tuple, format_weight_tuple, parse_partition_tuple, parse_weight_tuple, split_label
from .modules import GrothClass, Kind, ObjectLabel

MODULE_LETTERS = ("M", "P", "I", "Q", "J", "D:M")
REPG_LETTERS = ("T", "U", "K", "S", "F")


def load_schema(name: str) -> dict:
    """One of the shipped JSON schemas: envelope, grothclass, quiver, verify."""
    text = resources.files("flagcat").joinpath("schemas", f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _parse_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--n must be a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"--n must be at least 1, got {n}")
    return n


def _parse_label(text: str, n: int) -> ObjectLabel | bridge.RepGLabel:
    letters, _, _ = split_label(text)
    if letters in MODULE_LETTERS:
        return ObjectLabel.parse(text, n)
    if letters in REPG_LETTERS:
        return bridge.RepGLabel.parse(text, n)
    raise ParseError("unknown label letter", letters)


def _module_label(text: str, n: int) -> ObjectLabel:
    label = _parse_label(text, n)
    if not isinstance(label, ObjectLabel):
        raise ParseError("expected a module label (M, P, I, Q, J or D:M)", text)
    return label


def _repg_label(text: str, n: int) -> bridge.RepGLabel:
    label = _parse_label(text, n)
    if not isinstance(label, bridge.RepGLabel):
        raise ParseError("expected a group-side label (T, U, K, S or F)", text)
    return label


def _class_payload(cls: GrothClass) -> dict:
    return {"class": cls.to_json_dict(), "length": cls.length}


def cmd_hom_dim(args) -> dict:
    a, b = parse_weight_tuple(args.a, args.n), parse_weight_tuple(args.b, args.n)
    out: dict[str, Any] = {"a": format_weight_tuple(a), "b": format_weight_tuple(b), "dimension": weighted.count_u_morphisms(a, b)}
    if args.oracle:
        brute = len(weighted.enumerate_u_morphisms(a, b, args.bound))
        out["brute_force"] = brute
        out["agree"] = brute == out["dimension"]
    return out


def cmd_ext1(args) -> dict:
    lam, mu = parse_partition_tuple(args.lam, args.n), parse_partition_tuple(args.mu, args.n)
    return modules.ext1_explain(lam, mu).to_json_dict()


def cmd_quiver(args) -> dict:
    return modules.ext_quiver(args.n, args.max_degree, args.bound).to_json_dict()


def cmd_decompose_principal(args) -> dict:
    a = parse_weight_tuple(args.a, args.n)
    summands = modules.decompose_principal(args.kind, a)
    return {"kind": args.kind, "a": format_weight_tuple(a), "summands": GrothClass(summands).to_json_dict()}


def cmd_jh(args) -> dict:
    label = _parse_label(args.label, args.n)
    if isinstance(label, ObjectLabel):
        cls = modules.jh_multiplicities(label, args.bound)
        simple_letter = "D:M" if label.side == "D" else "M"
    else:
        cls = bridge.jh_repg(label, args.bound)
        simple_letter = "S"
    return {"object": str(label), "simple": simple_letter, **_class_payload(cls)}


def cmd_socle_t(args) -> dict:
    a = parse_weight_tuple(args.a, args.n)
    return {"a": format_weight_tuple(a), "simple": "S", **_class_payload(bridge.socle_T(a))}


def cmd_jh_t(args) -> dict:
    a = parse_weight_tuple(args.a, args.n)
    return {"a": format_weight_tuple(a), "simple": "S", **_class_payload(bridge.jh_T(a, args.bound))}


def cmd_tensor(args) -> dict:
    left, right = _parse_label(args.left, args.n), _parse_label(args.right, args.n)
    kinds = {type(left), type(right)}
    if kinds == {ObjectLabel} and left.kind is right.kind is Kind.PRINCIPAL_PROJECTIVE and left.side == right.side == "U":
        a, b = left.index, right.index
        target = modules.tensor_principal_projectives(a, b)
        audit = []
        for u in weighted.tuples_of_total(sum(target.index), args.n):
            conv = modules.day_tensor_value_dim(a, b, u)
            hom = weighted.count_u_morphisms(target.index, u)
            audit.append({"U": format_weight_tuple(u), "convolution": conv, "hom": hom})
        return {
            "left": str(left),
            "right": str(right),
            "object": str(target),
            "dimension_audit": audit,
            "audit_passed": all(row["convolution"] == row["hom"] for row in audit),
        }
    if kinds == {ObjectLabel} and left.kind is right.kind is Kind.SIMPLE and left.side == right.side:
        letter = "D:M" if left.side == "D" else "M"
    elif kinds == {bridge.RepGLabel} and left.kind in ("S", "Flam") and right.kind == left.kind:
        # the tensor of simples is computed weight by weight, so it commutes with the reversal to module labels
        letter = "S" if left.kind == "S" else "F"
    else:
        raise ParseError("tensor takes two simples of one kind (M, D:M, S or F) or two principal projectives P(..)", f"{args.left} {args.right}")
    cls = modules.day_tensor_simples(left.index, right.index)
    return {"left": str(left), "right": str(right), "simple": letter, **_class_payload(cls)}


def cmd_eval_flag(args) -> dict:
    lam = parse_partition_tuple(args.lam, args.n)
    dims = parse_weight_tuple(args.dims, args.n)
    fn = {"simple": bridge.eval_flag, "injective": bridge.eval_flag_injective, "projective": bridge.eval_flag_projective}[args.envelope]
    return {"lam": format_partition_tuple(lam), "dims": format_weight_tuple(dims), "envelope": args.envelope, "dimension": fn(lam, dims)}


def cmd_dual(args) -> dict:
    obj = _module_label(args.label, args.n)
    return {"input": str(obj), "output": str(modules.dual_vee(obj))}


def cmd_tau(args) -> dict:
    obj = _module_label(args.label, args.n)
    return {"input": str(obj), "output": str(modules.tau_push(obj))}


def cmd_to_umod(args) -> dict:
    label = _repg_label(args.label, args.n)
    return {"input": str(label), "output": str(bridge.to_umod(label))}


def cmd_from_umod(args) -> dict:
    obj = _module_label(args.label, args.n)
    return {"input": str(obj), "output": str(bridge.from_umod(obj, args.model))}


def cmd_verify(args) -> dict:
    reports = verify.run_suite(args.suite, n=args.max_n, max_total=args.max_total, max_degree=args.max_degree)
    return {"passed": all(r.passed for r in reports), "suites": [r.to_json_dict() for r in reports]}


def _add_bound(p: argparse.ArgumentParser, what: str) -> None:
    p.add_argument("--bound", type=int, default=None, help=f"override the oracle limit on {what}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flagcat", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"flagcat {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", action="store_true", help="use the on-disk result cache")
    common.add_argument("--cache-dir", default=None, help="cache directory (default $FLAGCAT_CACHE_DIR or ~/.cache/flagcat)")
    needs_n = argparse.ArgumentParser(add_help=False, parents=[common])
    needs_n.add_argument("--n", type=_parse_n, required=True, help="number of weights")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name, help, formats=("json", "text"), with_n=True):
        p = sub.add_parser(name, parents=[needs_n if with_n else common], help=help)
        p.add_argument("--format", choices=formats, default="json")
        return p

    p = command("hom-dim", help="|Hom(a, b)| in the upward category, equal to dim Hom_G(T_a, T_b)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--oracle", action="store_true", help="also count by exhaustive enumeration")
    _add_bound(p, "the total for enumeration")
    p.set_defaults(func=cmd_hom_dim)

    p = command("ext1", help="dim Ext^1(S_lam, S_mu), with the conditions that decide it")
    p.add_argument("--lam", required=True, help="source simple; its degree tuple is b")
    p.add_argument("--mu", required=True, help="target simple; its degree tuple a must cover b")
    p.set_defaults(func=cmd_ext1)

    p = command("quiver", formats=("json", "text", "dot"), help="Ext quiver on all labels up to a total degree")
    p.add_argument("--max-degree", type=int, required=True)
    _add_bound(p, "the degree")
    p.set_defaults(func=cmd_quiver)

    p = command("decompose-principal", help="indecomposable summands of P_a or I_a")
    p.add_argument("--kind", choices=("projective", "injective"), required=True)
    p.add_argument("--a", required=True)
    p.set_defaults(func=cmd_decompose_principal)

    p = command("jh", help="composition factors of a module or group-side label")
    p.add_argument("label", help="e.g. I[1;1], P(2,0), J[-;2], T(2,0), K(0,3), U[1;2]")
    _add_bound(p, "the total for character computations")
    p.set_defaults(func=cmd_jh)

    p = command("socle-T", help="class of the socle K_a of T_a")
    p.add_argument("--a", required=True)
    p.set_defaults(func=cmd_socle_t)

    p = command("jh-T", help="composition factors of T_a")
    p.add_argument("--a", required=True)
    _add_bound(p, "the total for character computations")
    p.set_defaults(func=cmd_jh_t)

    p = command("tensor", help="tensor of two simples, or of two principal projectives with a dimension audit")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_tensor)

    p = command("eval-flag", help="dimension of F_lam, or of its envelope, on a finite flag")
    p.add_argument("--lam", required=True)
    p.add_argument("--dims", required=True, help="graded dimensions d_i = dim V_i / V_{i-1}")
    p.add_argument("--envelope", choices=("simple", "injective", "projective"), default="simple")
    p.set_defaults(func=cmd_eval_flag)

    for name, func, text in (
        ("dual", cmd_dual, "linear dual of a module label"),
        ("tau", cmd_tau, "weight reversal of a module label"),
        ("to-umod", cmd_to_umod, "module label of a group-side label"),
        ("from-umod", cmd_from_umod, "group-side label of a module label"),
    ):
        p = command(name, help=text)
        p.add_argument("label")
        if name == "from-umod":
            p.add_argument("--model", choices=("G", "A"), default="G", help="name simples S (G) or F (A)")
        p.set_defaults(func=func)

    p = command("verify", with_n=False, help="run a self-verification suite")
    p.add_argument("suite", choices=(*verify.SUITES, "all"))
    p.add_argument("--n", dest="max_n", type=_parse_n, default=None, help="sweep n = 1..N (default 3)")
    p.add_argument("--max-total", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def _query(args) -> dict:
    skip = {"func", "format", "cache", "cache_dir", "command"}
    return {"command": args.command, "args": {k: v for k, v in sorted(vars(args).items()) if k not in skip}}


def _text(result: Any, indent: str = "") -> list[str]:
    if isinstance(result, dict) and "class" in result:
        letter = result.get("simple", "M")
        terms = [f"{m} {letter}[{key}]" if m != 1 else f"{letter}[{key}]" for key, m in result["class"].items()]
        rest = {k: v for k, v in result.items() if k not in ("class", "simple")}
        return [indent + ("class: " + (" + ".join(terms) or "0"))] + _text(rest, indent)
    if isinstance(result, dict):
        lines = []
        for key, value in result.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{indent}{key}:")
                lines.extend(_text(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {json.dumps(value)}")
        return lines
    if isinstance(result, list):
        lines = []
        for item in result:
            if isinstance(item, (dict, list)):
                lines.append(f"{indent}-")
                lines.extend(_text(item, indent + "  "))
            else:
                lines.append(f"{indent}- {item}")
        return lines
    return [indent + json.dumps(result)]


def run(argv: Sequence[str] | None = None) -> tuple[int, dict | None, str]:
    """Parse and execute; returns ``(exit status, envelope, rendered output)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    query = _query(args)
    started = time.perf_counter()
    cache_hit = False
    result = None
    store = ResultCache(args.cache_dir) if args.cache and args.command != "verify" else None
    key = cache_key(__version__, args.command, query["args"]) if store else None
    if store:
        result = store.get(key)
        cache_hit = result is not None
    if result is None:
        result = args.func(args)
        if store:
            store.put(key, result)
    envelope = {
        "query": query,
        "result": result,
        "elapsed_seconds": round(time.perf_counter() - started, 6),
        "engine_version": __version__,
        "cache_hit": cache_hit,
    }
    status = 0
    if args.command == "verify" and not result["passed"]:
        status = 1
    if args.command == "hom-dim" and result.get("agree") is False:
        status = 1
    if args.command == "tensor" and result.get("audit_passed") is False:
        status = 1
    if args.format == "dot":
        rendered = _quiver_from_json(result).to_dot()
    elif args.format == "text":
        rendered = "\n".join(_text(result)) + "\n"
    else:
        rendered = json.dumps(envelope, indent=2) + "\n"
    return status, envelope, rendered


def _quiver_from_json(data: dict) -> modules.Quiver:
    n = data["n"]
    nodes = [parse_partition_tuple(x, n) for x in data["nodes"]]
    edges = [(parse_partition_tuple(s, n), parse_partition_tuple(t, n)) for s, t in data["edges"]]
    return modules.Quiver(n, data["max_degree"], nodes, edges)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        status, _, rendered = run(argv)
    except (FlagcatError, ValueError) as exc:
        print(f"flagcat: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(rendered)
    return status


if __name__ == "__main__":
    sys.exit(main())
