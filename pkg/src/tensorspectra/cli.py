"""Command-line interface.

Exit codes: 0 success, 1 a check or solve did not verify, 2 malformed input
or violated precondition, 3 a resource limit was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import algebra as alg
from . import special as sp
from .audit import format_report, run_audit
from .decomp import TuckerTriple, rank1_objective, total_orthogonality_residual, tucker_core, tucker_reconstruct
from .errors import ParseError, PreconditionError, ShapeError, TensorSpectraError
from .groebner.buchberger import Limits, buchberger
from .groebner.ideals import characteristic_set, matrix_char_ideal, tensor3_char_ideal
from .io import _load, dump_json, parse_permutation, read_rational_tensor, read_tensor, tensor_to_json, write_tensor
from .spectral.hierarchy import HierarchyNode, reconstruct, spectral_hierarchy
from .spectral.oracle import matrix_spectral_oracle
from .spectral.solver import SolveConfig, solve_spectral3
from .spectral.system import hermitian_generator, planted_instance
from .tensor import adjoint_k, as_array, conformance, max_abs, transpose_k

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(TensorSpectraError):
    """Bad command-line usage detected after argument parsing."""

    code = "usage"


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else dump_json(payload)
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_tensor(args, T) -> None:
    _emit(args, tensor_to_json(T))


def _complex(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _tensors(paths):
    return [read_tensor(p) for p in paths]


# gen


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "kronecker":
        T = sp.kronecker(args.order, args.side)
    elif kind == "identity":
        T = sp.identity_family(args.side)[args.power % 3]
    elif kind == "permutation":
        if args.sigma is None:
            raise InputError("gen permutation needs --sigma")
        sigma = parse_permutation(_load(args.sigma) if Path(args.sigma).is_file() else args.sigma)
        T = sp.permutation_tensor(sigma)
    elif kind == "scaling":
        if args.weights is None:
            raise InputError("gen scaling needs --weights W.json")
        W = as_array(read_tensor(args.weights))
        fam = sp.scaling_family(W.real if not np.any(W.imag) else W, args.order)
        if not 1 <= args.member <= len(fam.members):
            raise InputError(f"--member must lie in 1..{len(fam.members)}")
        T = fam.members[args.member - 1]
    elif kind == "hermitian":
        T = hermitian_generator(args.side, args.seed)
    else:  # planted
        A, _ = planted_instance(args.side, np.random.default_rng(args.seed))
        T = A
    _emit_tensor(args, T)
    return EXIT_OK


# product


def cmd_product(args) -> int:
    ts = _tensors(args.inputs)
    kind = args.kind
    if kind == "ternary":
        if len(ts) != 3:
            raise InputError("ternary product takes three tensors")
        out = alg.ternary_product(*ts)
    elif kind == "nary":
        out = alg.nary_product(ts)
    elif kind == "action":
        out = alg.tensor_action(ts[0], ts[1:])
    elif kind == "outer":
        out = alg.outer_product(ts)
    else:  # background
        if len(ts) != 4:
            raise InputError("background products take three operands and a background tensor")
        if all(t.order == 1 for t in ts[:3]):
            _emit(args, _complex(alg.bg_triple_dot(*ts)))
            return EXIT_OK
        out = alg.bg_matrix_product(*ts)
    _emit_tensor(args, out)
    return EXIT_OK


def cmd_transpose(args) -> int:
    A = read_tensor(args.input)
    fn = transpose_k if args.command == "transpose" else adjoint_k
    _emit_tensor(args, fn(A, args.k))
    return EXIT_OK


def cmd_norm(args) -> int:
    A = read_tensor(args.input)
    _emit(args, {"norm": alg.lp_norm(A, args.p), "p": args.p})
    return EXIT_OK


def cmd_inner(args) -> int:
    _emit(args, _complex(alg.inner_p(_tensors(args.inputs))))
    return EXIT_OK


# check


def cmd_check(args) -> int:
    ts = _tensors(args.inputs)
    kind = args.kind
    need = 5 if kind == "inverse-pair" else 1
    if len(ts) != need:
        raise InputError(f"check {kind} takes {need} tensor file(s)")
    extra = {}
    if kind in ("symmetric", "hermitian"):
        dev = conformance(ts[0], kind, args.tol).deviation
    elif kind == "diagonal":
        dev = sp.diagonal_residual(ts[0])
    elif kind == "orthogonal":
        dev, inv = sp.orthogonality_residuals(ts[0])
        extra["kronecker_invariance"] = inv
    elif kind == "total-orthogonality":
        dev = total_orthogonality_residual(ts[0])
    else:
        dev = sp.inverse_pair_residual(*ts)
    ok = dev <= args.tol
    _emit(args, {"check": kind, "deviation": dev, "tol": args.tol, "ok": ok, **extra})
    return EXIT_OK if ok else EXIT_FAIL


# solve and hierarchy


def _solve_config(args) -> SolveConfig:
    return SolveConfig(
        seed=args.seed,
        restarts=args.restarts,
        max_iter=args.max_iter,
        tol=args.tol,
        max_seconds=args.max_seconds,
    )


def cmd_solve(args) -> int:
    A = read_tensor(args.input)
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    if args.kind == "matrix-oracle":
        r = matrix_spectral_oracle(A)
        report = {
            "eigenvalues": [float(x) for x in r.eigenvalues],
            "residual_a": r.residual_a,
            "residual_delta": r.residual_delta,
        }
        if out_dir:
            for name in ("Q", "R", "Mu", "Nu"):
                write_tensor(out_dir / f"{name}.json", getattr(r, name))
            report["factors"] = {n: f"{n}.json" for n in ("Q", "R", "Mu", "Nu")}
        ok = max(r.residual_a, r.residual_delta) <= max(args.tol, 1e-9)
        _emit(args, report)
        return EXIT_OK if ok else EXIT_FAIL
    rep = solve_spectral3(A, _solve_config(args))
    report = {
        "converged": rep.converged,
        "iterations": rep.iterations,
        "residual_a": rep.residual_a,
        "residual_delta": rep.residual_delta,
        "restart": rep.restart,
        "seed": rep.seed,
        "timed_out": rep.timed_out,
    }
    if out_dir:
        c = rep.candidate
        for name in ("Q", "R", "S", "Mu", "Nu", "Xi"):
            write_tensor(out_dir / f"{name}.json", getattr(c, name))
        report["factors"] = {n: f"{n}.json" for n in ("Q", "R", "S", "Mu", "Nu", "Xi")}
    _emit(args, report)
    if rep.converged:
        return EXIT_OK
    return EXIT_LIMIT if rep.timed_out else EXIT_FAIL


def _node_summary(node: HierarchyNode) -> dict:
    out = {"label": node.label, "level_order": node.level_order, "truncated": node.truncated}
    if node.eigenvalues is not None:
        out["eigenvalues"] = [_complex(complex(g)) for g in node.eigenvalues]
    if node.children:
        out["children"] = [_node_summary(c) for c in node.children]
    return out


def cmd_hierarchy(args) -> int:
    A = read_tensor(args.input)
    root = spectral_hierarchy(A, _solve_config(args))
    err = max_abs(reconstruct(root) - as_array(A))
    payload = {"reconstruction_error": err, "tree": _node_summary(root)}
    if root.report is not None:
        payload["solve"] = {"converged": root.report.converged, "residual": root.report.residual}
    _emit(args, payload)
    if root.report is not None and root.report.timed_out and not root.report.converged:
        return EXIT_LIMIT
    return EXIT_OK if err <= max(args.tol, 1e-6) else EXIT_FAIL


# charpoly


def cmd_charpoly(args) -> int:
    A = read_rational_tensor(args.input)
    if args.kind == "matrix":
        if A.ndim != 2:
            raise ShapeError(f"charpoly matrix needs a matrix, got order {A.ndim}")
        gens = matrix_char_ideal(A, upper_only=args.upper_only)
        keep = [f"l{A.shape[0]}"]
    else:
        gens = tensor3_char_ideal(A)
        reg = gens[0].registry
        keep = [v for v in reg if v.startswith(("mu", "nu", "xi"))]
    if args.keep:
        keep = args.keep.split(",")
    limits = Limits(args.max_basis, args.max_degree, args.max_seconds)
    G = buchberger(gens, limits)
    payload = {"generators": len(gens), "keep": keep, "limits_hit": G.limits_hit, "basis_size": len(G.generators)}
    if G.limits_hit is None:
        cs = characteristic_set(G, keep)
        payload["characteristic_set"] = [g.to_text() for g in cs]
    if args.format == "text" and G.limits_hit is None:
        _emit(args, "".join(p + "\n" for p in payload["characteristic_set"]))
    else:
        _emit(args, payload)
    return EXIT_LIMIT if G.limits_hit else EXIT_OK


# tucker and rank-1


def cmd_tucker(args) -> int:
    T = read_tensor(args.input)
    mats = [as_array(read_tensor(p)) for p in (args.q, args.s, args.u)]
    triple = TuckerTriple(*mats)
    out = tucker_core(T, triple) if args.kind == "core" else tucker_reconstruct(T, triple)
    _emit_tensor(args, out)
    return EXIT_OK


def cmd_rank1(args) -> int:
    A = read_tensor(args.input)
    payload = _load(args.factors)
    if not isinstance(payload, dict) or "factors" not in payload or "lambdas" not in payload:
        raise ParseError('factor files need "factors" and "lambdas"')
    factors = []
    for triple in payload["factors"]:
        if not isinstance(triple, list) or len(triple) != 3:
            raise ParseError("each factor is a list of three vectors or slices")
        factors.append([np.asarray(x, dtype=np.float64) for x in triple])
    lambdas = [float(x) for x in payload["lambdas"]]
    _emit(args, {"objective": rank1_objective(factors, lambdas, A)})
    return EXIT_OK


def cmd_audit(args) -> int:
    rows = run_audit(args.seed)
    _emit(args, format_report(rows, args.seed))
    failed = any(r.kind == "invariant" and not r.passed for r in rows)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--tol", type=float, default=None, help="verification tolerance (command-specific default)")
    common.add_argument("--max-seconds", type=float, default=60.0, help="wall-clock budget")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")

    parser = argparse.ArgumentParser(prog="tensorspectra", description="Ternary-product tensor algebra and spectral tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a special tensor")
    g.add_argument("kind", choices=["kronecker", "identity", "permutation", "scaling", "hermitian", "planted"])
    g.add_argument("--order", type=int, default=3)
    g.add_argument("--side", type=int, default=2)
    g.add_argument("--power", type=int, default=0, help="transpose power of the identity tensor")
    g.add_argument("--sigma", help="permutation as '2,1,3' or a JSON file")
    g.add_argument("--weights", help="symmetric weight matrix file for scaling tensors")
    g.add_argument("--member", type=int, default=1, help="which scaling tensor (1-based)")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("product", parents=[common], help="tensor products")
    p.add_argument("kind", choices=["ternary", "nary", "action", "outer", "background"])
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_product)

    for name in ("transpose", "adjoint"):
        t = sub.add_parser(name, parents=[common], help=f"cyclic {name}")
        t.add_argument("input")
        t.add_argument("-k", type=int, default=1, help="power (default 1)")
        t.set_defaults(func=cmd_transpose)

    n = sub.add_parser("norm", parents=[common], help="l_p norm")
    n.add_argument("input")
    n.add_argument("-p", type=int, default=3)
    n.set_defaults(func=cmd_norm)

    i = sub.add_parser("inner", parents=[common], help="inner product of p tensors")
    i.add_argument("inputs", nargs="+")
    i.set_defaults(func=cmd_inner)

    c = sub.add_parser("check", parents=[common], help="structural checks")
    c.add_argument("kind", choices=["symmetric", "hermitian", "diagonal", "orthogonal", "total-orthogonality", "inverse-pair"])
    c.add_argument("inputs", nargs="+")
    c.set_defaults(func=cmd_check)

    for name, func, help_text in (("solve", cmd_solve, "spectral solves"), ("hierarchy", cmd_hierarchy, "spectral hierarchy")):
        s = sub.add_parser(name, parents=[common], help=help_text)
        if name == "solve":
            s.add_argument("kind", choices=["matrix-oracle", "spectral3"])
            s.add_argument("--out-dir", help="directory for factor tensors")
        s.add_argument("input")
        s.add_argument("--restarts", type=int, default=8)
        s.add_argument("--max-iter", type=int, default=300)
        s.set_defaults(func=func, default_tol=1e-8)

    ch = sub.add_parser("charpoly", parents=[common], help="characteristic sets via Groebner bases")
    ch.add_argument("kind", choices=["matrix", "tensor3"])
    ch.add_argument("input")
    ch.add_argument("--keep", help="comma-separated kept variables")
    ch.add_argument("--upper-only", action="store_true", help="matrix ideal over m <= n only")
    ch.add_argument("--max-basis", type=int, default=500)
    ch.add_argument("--max-degree", type=int, default=12)
    ch.add_argument("--format", choices=["text", "json"], default="text")
    ch.set_defaults(func=cmd_charpoly)

    tk = sub.add_parser("tucker", parents=[common], help="Tucker core and reconstruction")
    tk.add_argument("kind", choices=["core", "reconstruct"])
    tk.add_argument("input")
    tk.add_argument("--q", required=True)
    tk.add_argument("--s", required=True)
    tk.add_argument("--u", required=True)
    tk.set_defaults(func=cmd_tucker)

    r = sub.add_parser("rank1-objective", parents=[common], help="rank-1 fitting objective")
    r.add_argument("input")
    r.add_argument("--factors", required=True, help='JSON with "factors" and "lambdas"')
    r.set_defaults(func=cmd_rank1)

    a = sub.add_parser("audit", parents=[common], help="seeded invariant and claim suite")
    a.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol is None:
        args.tol = getattr(args, "default_tol", 1e-12)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, ShapeError, InputError) as exc:
        code = getattr(exc, "code", "input")
        print(f"error [{code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error [input]: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
