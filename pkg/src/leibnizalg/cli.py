"""Command-line interface.

Structural reports go to standard output, deterministically (sorted keys,
no timestamps); diagnostics go to standard error. Exit codes: 0 when a
verdict was computed (including "no" and "undetermined"), 1 on input
errors, 2 when an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import InternalCheckError, LeibnizAlgebra
from .decompose import (
    complete_reducibility_necessary, decompose, example_5_3, example_5_5,
)
from .fileio import (
    ParseError, frac_str, parse_algebra, parse_rep, serialize_algebra,
    serialize_rep, rep_to_object,
)
from .linalg import Subspace
from .reps import Representation, adjoint_rep, equivalence, irreducibility, restrict
from .sl2 import (
    classify_extension_irreps, simple_ext_algebra, sl2_algebra,
    sl2_leibniz_irrep,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 for bad usage, not argparse's 2
        raise _UsageError(f"{self.prog}: {message}")


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_algebra(path: str) -> LeibnizAlgebra:
    return parse_algebra(_read_source(path))


def _load_rep(path: str) -> Representation:
    import os
    base = "." if path == "-" else (os.path.dirname(path) or ".")
    return parse_rep(_read_source(path), base_dir=base)


def _rows(space: Subspace) -> list:
    return [[frac_str(x) for x in row] for row in space.basis.data]


# -- report handlers; each returns a JSON-ready dict --

def _cmd_check(args):
    alg = _load_algebra(args.file)
    report = {"name": alg.name, "dim": alg.dim, "leibniz": alg.is_valid}
    if alg.is_valid:
        report["lie"] = alg.is_lie()
        report["kernel_dim"] = alg.leibniz_kernel().dim
    else:
        names = alg.basis_names
        report["violation_count"] = len(alg.leibniz_violations)
        report["violations"] = [
            [names[i], names[j], names[k]]
            for (i, j, k) in alg.leibniz_violations[:10]]
    return report


def _cmd_kernel(args):
    kern = _load_algebra(args.file).leibniz_kernel()
    return {"kernel_dim": kern.dim, "basis": _rows(kern)}


def _cmd_series(args):
    alg = _load_algebra(args.file)
    lower = alg.lower_central_series()
    derived = alg.derived_series()
    return {
        "lower_central_dims": [t.dim for t in lower.terms],
        "lower_central_stabilized": lower.stabilized,
        "derived_dims": [t.dim for t in derived.terms],
        "derived_stabilized": derived.stabilized,
        "solvable": alg.is_solvable(),
        "nilpotent": alg.is_nilpotent(),
    }


def _cmd_radical(args):
    alg = _load_algebra(args.file)
    rad = alg.radical()
    return {
        "radical_dim": rad.dim,
        "basis": _rows(rad),
        "equals_kernel": rad == alg.leibniz_kernel(),
    }


def _cmd_semisimple(args):
    alg = _load_algebra(args.file)
    return {
        "semisimple": alg.is_semisimple(),
        "radical_dim": alg.radical().dim,
        "kernel_dim": alg.leibniz_kernel().dim,
    }


def _cmd_simple(args):
    verdict = _load_algebra(args.file).is_simple()
    report = {"verdict": verdict.value}
    if verdict.reason:
        report["reason"] = verdict.reason
    if verdict.witness is not None:
        report["witness_dim"] = verdict.witness.dim
    return report


def _cmd_derivations(args):
    alg = _load_algebra(args.file)
    return {
        "derivation_dim": alg.derivations().dim,
        "inner_dim": alg.inner_derivations().dim,
        "inner_is_ideal": alg.check_inn_ideal(),
    }


def _cmd_levi(args):
    levi = _load_algebra(args.file).levi_subalgebra()
    return {"levi_dim": levi.dim, "basis": _rows(levi)}


def _cmd_rep_check(args):
    rep = _load_rep(args.file)
    report = {"valid": rep.is_valid, "module_dim": rep.space_dim}
    if not rep.is_valid:
        names = rep.algebra.basis_names
        report["violation_count"] = len(rep.axiom_violations)
        report["violations"] = [
            {"axiom": a, "left": names[i], "right": names[j]}
            for (a, i, j) in rep.axiom_violations[:10]]
    return report


def _cmd_rep_irreducible(args):
    verdict = irreducibility(_load_rep(args.file))
    report = {"verdict": verdict.value}
    if verdict.detail:
        report["detail"] = verdict.detail
    if verdict.witness is not None:
        report["witness_dim"] = verdict.witness.dim
    return report


def _cmd_rep_classify(args):
    alg = _load_algebra(args.file)
    m = args.m
    if m < 0:
        raise ParseError("--m must be nonnegative")
    if alg.same_table(sl2_algebra()):
        family = "sl2"
        variants = ("zero_lambda",) if m == 0 else ("zero_lambda", "anti_symmetric")
        reps = [sl2_leibniz_irrep(m, v) for v in variants]
    elif alg.dim >= 5 and alg.same_table(simple_ext_algebra(alg.dim)):
        family = "simple_ext"
        reps = classify_extension_irreps(alg.dim, m)
        variants = ("zero_lambda",) if m == 0 else ("zero_lambda", "anti_symmetric")
    else:
        raise ParseError(
            "classification covers the (e, f, h) table and its simple extensions only")
    out = []
    for variant, rep in zip(variants, reps):
        obj = rep_to_object(rep)
        del obj["algebra"]
        obj["variant"] = variant
        out.append(obj)
    return {"family": family, "n": alg.dim, "m": m,
            "module_dim": m + 1, "reps": out}


def _cmd_rep_equivalent(args):
    a = _load_rep(args.file_a)
    b = _load_rep(args.file_b)
    verdict = equivalence(a, b)
    report = {"verdict": verdict.value}
    if verdict.detail:
        report["detail"] = verdict.detail
    if verdict.certificate is not None:
        report["certificate"] = [
            [frac_str(x) for x in row] for row in verdict.certificate.data]
    return report


def _cmd_rep_decompose(args):
    rep = _load_rep(args.file)
    necessary = complete_reducibility_necessary(rep)
    result = decompose(rep)
    report = {
        "verdict": result.verdict,
        "kernel_acts_trivially": necessary.ok,
        "component_dims": [c.dim for c in result.components],
        "components": [_rows(c) for c in result.components],
    }
    if result.obstruction:
        report["obstruction"] = result.obstruction
    return report


# -- data handlers; each returns file-format text --

def _cmd_rep_restrict(args):
    rep = _load_rep(args.file)
    labels = [x.strip() for x in args.span.split(",") if x.strip()]
    if not labels:
        raise ParseError("--span: expected a comma-separated list of labels")
    names = rep.algebra.basis_names
    pos = {b: i for i, b in enumerate(names)}
    unknown = [x for x in labels if x not in pos]
    if unknown:
        raise ParseError(f"--span: unknown label {unknown[0]!r}")
    n = rep.algebra.dim
    units = []
    for x in labels:
        units.append(tuple(1 if j == pos[x] else 0 for j in range(n)))
    span = Subspace.from_vectors(n, units)
    return serialize_rep(restrict(rep, span))


def _cmd_gen_sl2_irrep(args):
    return serialize_rep(sl2_leibniz_irrep(args.m, args.variant))


def _cmd_gen_simple_ext(args):
    return serialize_algebra(simple_ext_algebra(args.n))


def _cmd_gen_example_5_3(args):
    alg, rep = example_5_3()
    if args.adjoint:
        return serialize_rep(rep)
    return serialize_algebra(alg)


def _cmd_gen_example_5_5(args):
    return serialize_rep(example_5_5(args.top, args.bottom))


_VARIANTS = ("zero_lambda", "anti_symmetric")


def _build_parser() -> _Parser:
    parser = _Parser(prog="leibnizalg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def report_cmd(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="algebra file, or - for standard input")
        p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(handler=handler, kind="report")
        return p

    report_cmd("check", _cmd_check, "bracket identity, Lie flag, kernel size")
    report_cmd("kernel", _cmd_kernel, "kernel dimension and basis")
    report_cmd("series", _cmd_series, "lower central and derived series")
    report_cmd("radical", _cmd_radical, "maximal solvable ideal")
    report_cmd("semisimple", _cmd_semisimple, "radical equals kernel?")
    report_cmd("simple", _cmd_simple, "simplicity verdict")
    report_cmd("derivations", _cmd_derivations, "derivation algebra dimensions")
    report_cmd("levi", _cmd_levi, "Levi complement of a semisimple algebra")

    rep = sub.add_parser("rep", help="representation commands")
    rep_sub = rep.add_subparsers(dest="rep_command", required=True)

    p = rep_sub.add_parser("check", help="axiom report")
    p.add_argument("file", help="representation file, or -")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_rep_check, kind="report")

    p = rep_sub.add_parser("irreducible", help="irreducibility verdict")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_rep_irreducible, kind="report")

    p = rep_sub.add_parser("classify", help="irreducible reps of a catalog algebra")
    p.add_argument("file", help="algebra file, or -")
    p.add_argument("--m", type=int, required=True, help="ladder size parameter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_rep_classify, kind="report")

    p = rep_sub.add_parser("equivalent", help="equivalence of two representations")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_rep_equivalent, kind="report")

    p = rep_sub.add_parser("decompose", help="invariant direct-sum splitting")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_rep_decompose, kind="report")

    p = rep_sub.add_parser("restrict", help="restrict to a spanned subalgebra")
    p.add_argument("file")
    p.add_argument("--span", required=True,
                   help="comma-separated basis labels, e.g. e,f,h")
    p.set_defaults(handler=_cmd_rep_restrict, kind="data")

    gen = sub.add_parser("gen", help="emit catalog objects as files")
    gen_sub = gen.add_subparsers(dest="gen_command", required=True)

    p = gen_sub.add_parser("sl2-irrep", help="ladder representation file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--variant", choices=_VARIANTS, default="zero_lambda")
    p.set_defaults(handler=_cmd_gen_sl2_irrep, kind="data")

    p = gen_sub.add_parser("simple-ext", help="simple extension algebra file")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_gen_simple_ext, kind="data")

    p = gen_sub.add_parser("example-5-3", help="benchmark simple algebra")
    p.add_argument("--adjoint", action="store_true",
                   help="emit its adjoint representation instead")
    p.set_defaults(handler=_cmd_gen_example_5_3, kind="data")

    p = gen_sub.add_parser("example-5-5", help="benchmark split module")
    p.add_argument("--top", choices=_VARIANTS, default="zero_lambda")
    p.add_argument("--bottom", choices=_VARIANTS, default="zero_lambda")
    p.set_defaults(handler=_cmd_gen_example_5_5, kind="data")

    return parser


def _human_lines(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_human_lines(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(value)}")
    elif isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            lines.append(pad + "[" + ", ".join(json.dumps(x) for x in obj) + "]")
        else:
            for x in obj:
                lines.extend(_human_lines(x, indent))
    else:
        lines.append(pad + json.dumps(obj))
    return lines


def run_command(argv) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    try:
        out = args.handler(args)
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.kind == "data":
        sys.stdout.write(out)
    elif getattr(args, "json", False):
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(_human_lines(out)) + "\n")
    return 0


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
