"""Command-line entry point.

Verbs: schur, dim, lr, weights, kernel-row, verify, simulate.  All output is
machine readable (JSON by default, CSV where it makes sense) and every
invocation is stateless.  Exit codes: 0 success / all checks pass, 1 a check
failed, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .sigcore import DomainError, parse_signature, dimension
from .symfunc import schur_eval, lr_coeff, weight_expansion
from . import kernels as K
from . import chains as C
from . import verify as V


def _parse_theta(s: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(part) for part in s.split(","))


def _rat(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


def spectral_to_json(F: K.SpectralFunction) -> dict:
    if F.kind in (K.ALPHA_PLUS, K.ALPHA_MINUS):
        return {"family": F.kind, "q": _rat(F.param)}
    if F.kind in (K.BETA_PLUS, K.BETA_MINUS):
        return {"family": F.kind, "p": _rat(F.param)}
    if F.kind in (K.GAMMA_PLUS, K.GAMMA_MINUS):
        return {"family": F.kind, "t": repr(float(F.param))}
    if F.kind == K.LAURENT:
        return {"family": "laurent",
                "coeffs": {str(m): _rat(c) for m, c in sorted(F.coeffs)}}
    return {"family": "prod",
            "factors": [spectral_to_json(g) for g in F.factors]}


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_schur(args) -> int:
    lam = parse_signature(args.lam)
    theta = _parse_theta(args.theta)
    print(_rat(schur_eval(lam, theta)))
    return 0


def cmd_dim(args) -> int:
    print(dimension(parse_signature(args.lam)))
    return 0


def cmd_lr(args) -> int:
    print(lr_coeff(parse_signature(args.lam), parse_signature(args.mu),
                   parse_signature(args.tau)))
    return 0


def cmd_weights(args) -> int:
    lam = parse_signature(args.lam)
    terms = [{"x": list(x), "mult": m}
             for x, m in sorted(weight_expansion(lam).items())]
    _emit_json({"lambda": list(lam), "terms": terms})
    return 0


def cmd_kernel_row(args) -> int:
    F = K.parse_spectral(args.F)
    lam = parse_signature(args.lam)
    theta = _parse_theta(args.theta) if args.theta else (Fraction(1),) * len(lam)
    if len(theta) != len(lam):
        raise DomainError("theta and lambda must have the same length")
    eps = Fraction(args.eps)
    row = K.tn_row(theta, F, lam, eps)
    items = sorted(row.entries.items())
    if args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["mu", "value"])
        for mu, v in items:
            w.writerow([",".join(str(p) for p in mu), _rat(v)])
    else:
        _emit_json({
            "n": len(lam),
            "theta": [_rat(t) for t in theta],
            "F": spectral_to_json(F),
            "lambda": list(lam),
            "entries": [{"mu": list(mu), "value": _rat(v)} for mu, v in items],
            "exact": row.exact,
            "tail": _rat(row.tail),
        })
    return 0


def cmd_verify(args) -> int:
    if args.check == "all":
        reports = V.run_all()
    elif args.F is not None and args.check in ("stochastic", "qrw", "doob"):
        # targeted single-family run
        F = K.parse_spectral(args.F)
        n = args.n or 2
        win = V.window(n, args.window)
        eps = Fraction(args.eps) if F.is_exact else float(Fraction(args.eps))
        if args.check == "stochastic":
            reports = [K.check_stochastic(F, n, win, eps)]
        elif args.check == "qrw":
            from .quantum import check_qrw
            reports = [check_qrw(F, n, win, eps)]
        else:
            reports = [C.check_doob(F, n, win, float(Fraction(args.eps)))]
    elif args.check in V.CHECKS:
        kwargs = {}
        if args.check == "empirical":
            kwargs = {"samples": args.samples, "seed": args.seed}
        reports = V.CHECKS[args.check](**kwargs)
    else:
        raise DomainError(f"unknown check {args.check!r}")
    for rep in reports:
        _emit_json(rep)
    return 0 if all(rep["pass"] for rep in reports) else 1


def cmd_simulate(args) -> int:
    F = K.parse_spectral(args.F)
    lam0 = parse_signature(args.lam)
    traj = C.simulate(lam0, F, args.steps, args.seed)
    if args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["step", "i", "position"])
        for rowt in traj.to_csv_rows():
            w.writerow(rowt)
    else:
        _emit_json(traj.summary())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sigwalk",
                                description="Exact signature-chain toolkit")
    sub = p.add_subparsers(dest="verb", required=True)

    ps = sub.add_parser("schur", help="evaluate a Schur polynomial")
    ps.add_argument("--lambda", dest="lam", required=True)
    ps.add_argument("--theta", required=True)
    ps.set_defaults(func=cmd_schur)

    pd = sub.add_parser("dim", help="dimension of an irreducible")
    pd.add_argument("--lambda", dest="lam", required=True)
    pd.set_defaults(func=cmd_dim)

    pl = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    pl.add_argument("--lambda", dest="lam", required=True)
    pl.add_argument("--mu", required=True)
    pl.add_argument("--tau", required=True)
    pl.set_defaults(func=cmd_lr)

    pw = sub.add_parser("weights", help="weight multiplicity expansion")
    pw.add_argument("--lambda", dest="lam", required=True)
    pw.set_defaults(func=cmd_weights)

    pk = sub.add_parser("kernel-row", help="one row of the kernel matrix")
    pk.add_argument("--F", required=True)
    pk.add_argument("--lambda", dest="lam", required=True)
    pk.add_argument("--theta", default=None)
    pk.add_argument("--eps", default="1/1000000000")
    pk.add_argument("--format", choices=("json", "csv"), default="json")
    pk.set_defaults(func=cmd_kernel_row)

    pv = sub.add_parser("verify", help="run an identity check suite")
    pv.add_argument("check",
                    choices=sorted(V.CHECKS) + ["all"])
    pv.add_argument("--F", default=None)
    pv.add_argument("--n", type=int, default=None)
    pv.add_argument("--window", type=int, default=3)
    pv.add_argument("--eps", default="1/1000000000")
    pv.add_argument("--samples", type=int, default=100_000)
    pv.add_argument("--seed", type=int, default=2024)
    pv.set_defaults(func=cmd_verify)

    pm = sub.add_parser("simulate", help="sample a trajectory")
    pm.add_argument("--F", required=True)
    pm.add_argument("--lambda", dest="lam", required=True)
    pm.add_argument("--steps", type=int, default=100)
    pm.add_argument("--seed", type=int, default=7)
    pm.add_argument("--format", choices=("json", "csv"), default="json")
    pm.set_defaults(func=cmd_simulate)
    return p


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
