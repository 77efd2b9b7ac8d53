"""Command-line front end.

Single values (li, li-inv, pi, nth-prime), the identity-verification suite
(verify), and the convergence scans (scan). Output is CSV or plain text;
identical configuration always produces byte-identical output.

Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass, field

from . import analysis, prime_zeta, special_fn
from .errors import LiprimeError, NearZeroError, PoleError
from .primes import PrimeTable, cached_sieve
from .prime_zeta import TruncationPolicy
from .reports import IdentityReport

IDENTITY_CSV_HEADER = "s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,residual,tail"
ERROR_TABLE_CSV_HEADER = "n,p_n,li_inv,abs_err,scaled_err"

DEFAULT_SIEVE_LIMIT = 10**6
DEFAULT_PRIME_LIMIT = 10**7
DEFAULT_K_MAX = 64


@dataclass
class RunConfig:
    command: str
    sieve_limit: int = DEFAULT_SIEVE_LIMIT
    prime_limit: int | None = None  # None: command-specific default
    k_max: int = DEFAULT_K_MAX
    threshold: float | None = None
    tail_tol: float | None = None
    output_path: str | None = None
    format: str = "csv"
    extra: dict = field(default_factory=dict)


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _parse_range(spec: str, flag: str) -> list[float]:
    """a:b:step (inclusive of b up to rounding) or a single number."""
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) == 3:
            a, b, step = (float(p) for p in parts)
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"{flag}: expected NUMBER or A:B:STEP, got {spec!r}") from None
    if step <= 0 or b < a:
        raise UsageError(f"{flag}: need A <= B and STEP > 0 in {spec!r}")
    out = []
    k = 0
    while True:
        v = a + k * step
        if v > b + 1e-12:
            break
        out.append(round(v, 12))
        k += 1
    return out


def _parse_complex(text: str, flag: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise UsageError(f"{flag}: cannot parse {text!r} as a (complex) number") from None


class UsageError(LiprimeError):
    pass


# identity registry: callable(s, policy, table) -> IdentityReport, with the
# documented default grid and residual threshold.
def _eq21_value(s, policy, table):
    return analysis.integral_identity_check(s.real)[0]


def _eq21_deriv(s, policy, table):
    return analysis.integral_identity_check(s.real)[1]


_IDENTITIES = {
    "eq12": (prime_zeta.euler_log_deriv_sum, "1.2:3:0.6", "0:10:5", 1e-6),
    # 1e-6 matches the suite-wide bar: at the default prime limit 1e7 the
    # Euler-product side carries ~5e-7 of prime-count fluctuation at Re(s)=1.2;
    # pass --prime-limit 1000000000 to push residuals below 1e-7 there.
    "eq24": (prime_zeta.product_identity, "0.6:3:0.2", "0:10:2", 1e-6),
    "eq26": (prime_zeta.tilde_log_deriv_series, "1.2:3:0.6", "0:10:5", 1e-6),
    "eq27": (prime_zeta.odd_k_identity, "1.2:3:0.6", "0:10:5", 1e-6),
    "eq28": (prime_zeta.mobius_inversion_identity, "1.2:3:0.6", "0:10:5", 1e-6),
    "eq29": (prime_zeta.cross_method_identity, "1.5:3:0.5", "0:0:1", 1e-9),
    "eq21": (None, "1.5:3:0.5", "0:0:1", 1e-8),  # handled specially: two checks per s
}


def _identity_row(s: complex, rep: IdentityReport) -> list[str]:
    lhs, rhs = complex(rep.lhs), complex(rep.rhs)
    return [_fmt(s.real), _fmt(s.imag), _fmt(lhs.real), _fmt(lhs.imag),
            _fmt(rhs.real), _fmt(rhs.imag), _fmt(rep.residual), _fmt(rep.tail_estimate)]


# identities whose residual rides on the k = 1 direct prime sum: at
# Re(s) = 1.2 clearing 1e-6 takes the prime limit to 1e9
_DEEP_SUM_IDENTITIES = frozenset({"eq12", "eq26", "eq27", "eq28"})


def cmd_verify(cfg: RunConfig, out: io.TextIOBase) -> int:
    name = cfg.extra["identity"]
    fn, re_default, im_default, thr_default = _IDENTITIES[name]
    threshold = cfg.threshold if cfg.threshold is not None else thr_default
    res = _parse_range(cfg.extra.get("re") or re_default, "--re")
    ims = _parse_range(cfg.extra.get("im") or im_default, "--im")
    if cfg.extra.get("s") is not None:
        points = [_parse_complex(cfg.extra["s"], "--s")]
    else:
        points = [complex(r, i) for r in res for i in ims]

    prime_limit = cfg.prime_limit
    if prime_limit is None:
        prime_limit = 10**9 if name in _DEEP_SUM_IDENTITIES else DEFAULT_PRIME_LIMIT
    tail_tol = cfg.tail_tol if cfg.tail_tol is not None else threshold / 20.0
    policy = TruncationPolicy(prime_limit=prime_limit, k_max=cfg.k_max,
                              tail_tol=tail_tol)
    table: PrimeTable | None = None
    if name != "eq21":
        table = cached_sieve(prime_limit)

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(IDENTITY_CSV_HEADER.split(","))
    worst = 0.0
    failures = 0
    skipped = 0
    checks = [_eq21_value, _eq21_deriv] if name == "eq21" else [fn]
    deriv_threshold = cfg.threshold if cfg.threshold is not None else 1e-6
    for s in points:
        for j, check in enumerate(checks):
            thr = threshold if j == 0 else deriv_threshold
            try:
                rep = check(s, policy, table)
            except (PoleError, NearZeroError):
                skipped += 1
                continue
            writer.writerow(_identity_row(s, rep))
            worst = max(worst, rep.residual)
            if rep.residual >= thr:
                failures += 1
    evaluated = len(points) * len(checks) - skipped
    print(
        f"{name}: {evaluated} points, max residual {worst:.3e}, "
        f"threshold {threshold:g}, {failures} failures, {skipped} skipped",
        file=sys.stderr,
    )
    return 0 if failures == 0 and evaluated > 0 else 1


def cmd_scan(cfg: RunConfig, out: io.TextIOBase) -> int:
    scan = cfg.extra["scan"]
    table = cached_sieve(cfg.sieve_limit)
    writer = csv.writer(out, lineterminator="\n")
    if scan == "error-table":
        n_max = cfg.extra["n_max"]
        if n_max is None or n_max < 1:
            raise UsageError("scan error-table: --n-max must be a positive integer")
        try:
            rows = analysis.approx_error_table(n_max, table)
        except LiprimeError:
            raise
        except ValueError as exc:
            raise UsageError(f"{exc}; raise --sieve-limit") from None
        writer.writerow(ERROR_TABLE_CSV_HEADER.split(","))
        for r in rows:
            writer.writerow([r.n, r.p_n, _fmt(r.li_inv), _fmt(r.abs_err), _fmt(r.scaled_err)])
        return 0
    if scan == "exponent-fit":
        lo, hi = cfg.extra["range"]
        alpha = analysis.exponent_fit(lo, hi, table)
        if cfg.format == "plain":
            out.write(_fmt(alpha) + "\n")
        else:
            writer.writerow(["n_min", "n_max", "alpha"])
            writer.writerow([lo, hi, _fmt(alpha)])
        return 0
    if scan == "error-series":
        sigma, eps, n_max = cfg.extra["sigma"], cfg.extra["epsilon"], cfg.extra["n_max"]
        if n_max is None or n_max < 1:
            raise UsageError("scan error-series: --n-max must be a positive integer")
        a, b = analysis.error_series_partial(sigma, eps, n_max, table)
        writer.writerow(["sigma", "epsilon", "n_max", "sum_li_inv", "sum_prime",
                         "converged", "tail_estimate"])
        writer.writerow([_fmt(sigma), _fmt(eps), n_max, _fmt(a.value), _fmt(b.value),
                         str(a.converged).lower(), _fmt(a.tail_estimate)])
        return 0
    if scan == "sum-vs-integral":
        s = _parse_complex(cfg.extra.get("s") or "2", "--s")
        n_max = cfg.extra["n_max"] or 500
        rep = analysis.integral_vs_sum(s, n_max)
        writer.writerow(IDENTITY_CSV_HEADER.split(","))
        writer.writerow(_identity_row(s, rep))
        return 0
    raise UsageError(f"unknown scan {scan!r}")


def _load_config_file(path: str) -> dict[str, str]:
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, val = line.split("=", 1)
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file; flags override it")
    common.add_argument("--output", help="write output to this path instead of stdout")
    common.add_argument("--format", choices=["csv", "plain"], default=None,
                        help="output format (default: csv)")
    common.add_argument("--sieve-limit", type=int, default=None,
                        help=f"sieve table limit (default: {DEFAULT_SIEVE_LIMIT})")
    common.add_argument("--prime-limit", type=int, default=None,
                        help=f"prime-sum truncation P (default: {DEFAULT_PRIME_LIMIT})")
    common.add_argument("--k-max", type=int, default=None,
                        help=f"dilation-sum truncation (default: {DEFAULT_K_MAX})")
    common.add_argument("--tail-tol", type=float, default=None,
                        help="truncation tail tolerance (default: 1e-12)")
    p = argparse.ArgumentParser(
        prog="liprime",
        parents=[common],
        description="Inverse logarithmic integral, prime tables, prime zeta "
                    "identities, and error-series scans.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("li", parents=[common],
                        help="offset logarithmic integral li(x), li(2) = 0")
    sp.add_argument("x", type=float)
    sp = sub.add_parser("li-inv", parents=[common], help="inverse of li by safeguarded Newton")
    sp.add_argument("y", type=float)
    sp = sub.add_parser("pi", parents=[common], help="prime counting function")
    sp.add_argument("x", type=float)
    sp = sub.add_parser("nth-prime", parents=[common], help="n-th prime (1-indexed)")
    sp.add_argument("n", type=int)

    sp = sub.add_parser("verify", parents=[common],
                        help="run one identity over a grid, emit CSV")
    sp.add_argument("identity", choices=sorted(_IDENTITIES))
    sp.add_argument("--re", help="real-part grid A:B:STEP (identity-specific default)")
    sp.add_argument("--im", help="imaginary-part grid A:B:STEP")
    sp.add_argument("--s", help="single point, e.g. 2 or 2+1j (overrides --re/--im)")
    sp.add_argument("--threshold", type=float, default=None,
                    help="residual threshold (identity-specific default)")

    sp = sub.add_parser("scan", parents=[common],
                        help="error-table / exponent-fit / error-series / sum-vs-integral")
    sp.add_argument("scan", choices=["error-table", "exponent-fit", "error-series",
                                     "sum-vs-integral"])
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--range", default="100:10000", help="N_MIN:N_MAX for exponent-fit")
    sp.add_argument("--sigma", type=float, default=1.0)
    sp.add_argument("--epsilon", type=float, default=0.05)
    sp.add_argument("--s", help="point for sum-vs-integral (default 2)")
    return p


_CONFIG_KEYS = {"sieve_limit": int, "prime_limit": int, "k_max": int,
                "tail_tol": float, "format": str, "output": str, "threshold": float}


def _make_config(args: argparse.Namespace) -> RunConfig:
    file_vals: dict[str, str] = {}
    if args.config:
        file_vals = _load_config_file(args.config)

    def pick(name, default, cast):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        if name in file_vals:
            try:
                return cast(file_vals[name])
            except ValueError:
                raise UsageError(f"config: bad value for {name}: {file_vals[name]!r}") from None
        return default

    cfg = RunConfig(
        command=args.command,
        sieve_limit=pick("sieve_limit", DEFAULT_SIEVE_LIMIT, int),
        prime_limit=pick("prime_limit", None, int),
        k_max=pick("k_max", DEFAULT_K_MAX, int),
        threshold=pick("threshold", None, float),
        tail_tol=pick("tail_tol", None, float),
        output_path=pick("output", None, str),
        format=pick("format", "csv", str),
    )
    if cfg.sieve_limit < 2 or cfg.k_max < 1 or (
        cfg.prime_limit is not None and cfg.prime_limit < 100
    ):
        raise UsageError("limits must be positive (sieve_limit >= 2, prime_limit >= 100)")
    if args.command == "verify":
        cfg.extra = {"identity": args.identity, "re": args.re, "im": args.im,
                     "s": args.s, }
    elif args.command == "scan":
        rng = args.range.split(":")
        if len(rng) != 2:
            raise UsageError("--range: expected N_MIN:N_MAX")
        cfg.extra = {"scan": args.scan, "n_max": args.n_max,
                     "range": (int(rng[0]), int(rng[1])),
                     "sigma": args.sigma, "epsilon": args.epsilon, "s": args.s}
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _make_config(args)
        if cfg.command == "li":
            result = _fmt(special_fn.li(args.x)) + "\n"
        elif cfg.command == "li-inv":
            result = _fmt(special_fn.li_inverse(args.y)) + "\n"
        elif cfg.command == "pi":
            result = f"{cached_sieve(cfg.sieve_limit).pi(args.x)}\n"
        elif cfg.command == "nth-prime":
            result = f"{cached_sieve(cfg.sieve_limit).nth_prime(args.n)}\n"
        else:
            buf = io.StringIO()
            code = cmd_verify(cfg, buf) if cfg.command == "verify" else cmd_scan(cfg, buf)
            _emit(buf.getvalue(), cfg.output_path)
            return code
        _emit(result, cfg.output_path)
        return 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (LiprimeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
