"""Command-line surface: one subcommand family per module.

Every library operation is reachable from exactly one subcommand; unknown
flags are hard errors.  Output is deterministic (no timestamps): tables
render as csv, markdown, or aligned plain text, and single-row results
print as key=value pairs in plain mode.
"""

import argparse
import math
import sys

import numpy as np

from . import calibration, counting, elementary, engine, pretentious, progressions, render, zeta
from .errors import (
    ArgumentError,
    DomainError,
    FormatError,
    ParseError,
    RangeError,
    ResourceError,
)


def _num(text):
    """Integer argument that tolerates scientific notation (1e9)."""
    try:
        return int(text)
    except ValueError:
        return int(float(text))


def parse_mf(spec):
    """Multiplicative function registry: 1 | mu | nit:T | chi:Q:INDEX | tau | sigma."""
    name = spec.strip().lower()
    if name in ("1", "one"):
        return pretentious.mf_one()
    if name == "mu":
        return pretentious.mf_mobius()
    if name == "tau":
        return pretentious.mf_divisor_count()
    if name == "sigma":
        return pretentious.mf_divisor_sum()
    if name.startswith("nit:"):
        return pretentious.mf_nit(float(name.split(":", 1)[1]))
    if name.startswith("chi:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise ArgumentError(f"character spec must be chi:Q:INDEX, got {spec!r}")
        table = progressions.character_table(int(parts[1]))
        return pretentious.mf_character(table.characters[int(parts[2])])
    raise ArgumentError(f"unknown multiplicative function {spec!r}")


def chernac_page(base, width=3):
    """Factor-table page for one block of 1000 integers.

    Lists every n in [base, base + 1000) coprime to 30; multiples of 2, 3,
    and 5 are omitted entirely (the reader can extract those factors).
    Each line shows the offset within the block and either the complete
    factorization (factors repeated to multiplicity) or a prime marker.
    """
    base = int(base)
    if base % 1000:
        raise ArgumentError(f"page base must be a multiple of 1000, got {base}")
    if base < 0 or base + 1000 > engine.config.FACTORIZE_MAX:
        raise RangeError(f"page base {base} out of range")
    lines = []
    for n in range(max(base, 1), base + 1000):
        if math.gcd(n, 30) != 1:
            continue
        offset = n - base
        if n == 1:
            desc = "unit"
        else:
            f = engine.factorize(n)
            if len(f.factors) == 1 and f.factors[0][1] == 1:
                desc = "prime"
            else:
                desc = "·".join(str(p) for p, e in f.factors for _ in range(e))
        lines.append(f"{offset:>{width}} : {desc}")
    return lines


def _complex_arg(args):
    return complex(args.sigma, getattr(args, "t", 0.0) or 0.0)


def _emit(out, headers, rows, fmt):
    if fmt == "plain" and len(rows) == 1:
        print(" ".join(f"{h}={render.format_cell(v)}" for h, v in zip(headers, rows[0])), file=out)
    else:
        print(render.render_table(headers, rows, fmt), file=out)


def _zero_table(args):
    if args.zeros:
        return zeta.load_zeros(args.zeros)
    return zeta.bundled_zeros()


def build_parser():
    top = argparse.ArgumentParser(
        prog="primelab",
        description="Prime counting, zeta-series diagnostics, and multiplicative-function distances.",
    )
    top.add_argument("--format", choices=render.FORMATS, default="plain")
    top.add_argument("--zeros", metavar="PATH", help="zeros file (one ascending ordinate per line)")
    top.add_argument("--max", type=_num, default=None, help="upper cutoff for table sweeps")
    top.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="prime table, mobius range, factorization, mangoldt")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("build")
    q.add_argument("limit", type=_num)
    q = ps.add_parser("mobius")
    q.add_argument("lo", type=_num)
    q.add_argument("hi", type=_num)
    q = ps.add_parser("factor")
    q.add_argument("n", type=_num)
    q = ps.add_parser("mangoldt")
    q.add_argument("n", type=_num)

    p = sub.add_parser("count", help="one-pass counting snapshot at x")
    p.add_argument("x", type=_num)
    p.add_argument("--no-mertens", action="store_true")

    p = sub.add_parser("tables", help="prediction-vs-count comparison rows")
    p.add_argument("--xs", help="comma-separated cutoffs (default: powers of 10 up to --max)")
    p.add_argument("--legendre-a", type=float, default=1.08366)
    p.add_argument("--max", type=_num, default=argparse.SUPPRESS, dest="max")

    p = sub.add_parser("mertens", help="sum of log(p)/p against log N")
    p.add_argument("ns", nargs="+", type=_num)

    p = sub.add_parser("chebyshev", help="binomial-coefficient prime machinery")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("binom")
    q.add_argument("n", type=_num)
    q = ps.add_parser("kummer")
    q.add_argument("p", type=_num)
    q.add_argument("n", type=_num)
    q = ps.add_parser("valuation")
    q.add_argument("p", type=_num)
    q.add_argument("n", type=_num)
    q = ps.add_parser("bertrand")
    q.add_argument("n", type=_num)
    q = ps.add_parser("erato")
    q.add_argument("x", type=_num)
    q.add_argument("y", type=_num)
    q = ps.add_parser("log-factorial")
    q.add_argument("n", type=_num)

    p = sub.add_parser("lcm-identity", help="factorial product identity checks")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("check")
    q.add_argument("x", type=_num)
    q = ps.add_parser("truncated")
    q.add_argument("x", type=_num)
    q.add_argument("n_cutoff", type=_num)
    q.add_argument("--primes", default="", help="comma-separated primes to query")

    p = sub.add_parser("selberg", help="normalized prime-pair remainder at x")
    p.add_argument("x", type=_num)

    p = sub.add_parser("functional", help="bounded self-referencing error average")
    p.add_argument("x", type=_num)
    p.add_argument("which", choices=["theta-error", "mertens"])

    p = sub.add_parser("distance", help="multiplicative-function distances and means")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("pair")
    q.add_argument("x", type=_num)
    q.add_argument("f")
    q.add_argument("g")
    q = ps.add_parser("min-t")
    q.add_argument("x", type=_num)
    q.add_argument("f")
    q.add_argument("t_max", type=float)
    q.add_argument("step", type=float)
    q = ps.add_parser("mean")
    q.add_argument("n", type=_num)
    q.add_argument("f")
    q = ps.add_parser("eval")
    q.add_argument("n", type=_num)
    q.add_argument("f")
    q = ps.add_parser("nit-check")
    q.add_argument("t", type=float)
    q.add_argument("n", type=_num)

    p = sub.add_parser("eta", help="scalar distance kernel on the unit disk")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("val")
    q.add_argument("w", type=complex)
    q.add_argument("y", type=complex)
    q = ps.add_parser("triangle")
    q.add_argument("w", type=complex)
    q.add_argument("y", type=complex)
    q.add_argument("z", type=complex)
    q = ps.add_parser("sweep")
    q.add_argument("count", type=_num)
    q.add_argument("--seed", type=int, default=argparse.SUPPRESS, dest="seed")

    p = sub.add_parser("halasz", help="series magnitude vs distance prediction")
    p.add_argument("x", type=_num)
    p.add_argument("f")
    p.add_argument("t", type=float)

    p = sub.add_parser("zeta", help="Dirichlet series evaluations right of 1")
    ps = p.add_subparsers(dest="mode", required=True)
    for name in ("series", "log-deriv"):
        q = ps.add_parser(name)
        q.add_argument("sigma", type=float)
        q.add_argument("t", type=float, nargs="?", default=0.0)
        q.add_argument("--terms", type=_num, default=10**6)
    q = ps.add_parser("euler")
    q.add_argument("sigma", type=float)
    q.add_argument("t", type=float, nargs="?", default=0.0)
    q.add_argument("--cutoff", type=_num, default=10**5)

    p = sub.add_parser("perron", help="line-integral indicator of z vs 1")
    p.add_argument("z", type=float)
    p.add_argument("sigma", type=float)
    p.add_argument("T", type=float)

    p = sub.add_parser("explicit", help="zero-sum reconstruction of psi*")
    p.add_argument("x", type=float)
    p.add_argument("--T", type=float, default=None)
    p.add_argument("--zeros", default=argparse.SUPPRESS, dest="zeros")

    p = sub.add_parser("goldbach", help="prime-pair count, direct vs circle")
    p.add_argument("n", type=_num)

    p = sub.add_parser("prh", help="derivative growth of the corrected log derivative")
    p.add_argument("k", type=int)
    p.add_argument("sigma", type=float)
    p.add_argument("t", type=float, nargs="?", default=0.0)
    p.add_argument("--terms", type=_num, default=10**6)

    p = sub.add_parser("chars", help="Dirichlet character tables")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("table")
    q.add_argument("q", type=_num)
    q = ps.add_parser("orthogonality")
    q.add_argument("q", type=_num)
    q = ps.add_parser("mu-mean")
    q.add_argument("q", type=_num)
    q.add_argument("index", type=int)
    q.add_argument("n", type=_num)

    p = sub.add_parser("pi-ap", help="primes up to x in one residue class")
    p.add_argument("x", type=_num)
    p.add_argument("q", type=_num)
    p.add_argument("a", type=_num)

    p = sub.add_parser("equidist", help="class-count spread at a target average")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("find")
    q.add_argument("q", type=_num)
    q.add_argument("target", type=_num)
    q = ps.add_parser("classes")
    q.add_argument("q", type=_num)
    q.add_argument("x", type=_num)

    p = sub.add_parser("lone", help="L(1, chi) partial sums with tail bounds")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("eval")
    q.add_argument("q", type=_num)
    q.add_argument("index", type=int)
    q.add_argument("n", type=_num)
    q = ps.add_parser("real-sweep")
    q.add_argument("q_max", type=_num)
    q.add_argument("--n-mult", type=_num, default=1000)

    p = sub.add_parser("least-prime", help="least prime in a progression")
    ps = p.add_subparsers(dest="mode", required=True)
    q = ps.add_parser("one")
    q.add_argument("q", type=_num)
    q.add_argument("a", type=_num)
    q = ps.add_parser("sweep")
    q.add_argument("q", type=_num)

    p = sub.add_parser("chernac", help="factor-table page for one block of 1000")
    p.add_argument("base", type=_num)

    return top


def _dispatch(args, out):
    fmt = args.format
    cmd = args.command

    if cmd == "sieve":
        if args.mode == "build":
            t = engine.build_table(args.limit)
            _emit(out, ("limit", "primes", "largest"),
                  [(t.limit, len(t.primes), int(t.primes[-1]))], fmt)
        elif args.mode == "mobius":
            mu = engine.mobius_range(args.lo, args.hi)
            _emit(out, ("n", "mu"),
                  [(n, int(mu[n - args.lo])) for n in range(args.lo, args.hi + 1)], fmt)
        elif args.mode == "factor":
            f = engine.factorize(args.n)
            _emit(out, ("n", "factorization"), [(f.n, str(f))], fmt)
        else:
            _emit(out, ("n", "mangoldt"), [(args.n, engine.mangoldt(args.n))], fmt)

    elif cmd == "count":
        s = counting.count_snapshot(args.x, include_mertens=not args.no_mertens)
        _emit(out, ("x", "pi", "theta", "psi", "psi_star", "mertens"),
              [(s.x, s.pi, s.theta, s.psi, s.psi_star, s.mertens)], fmt)

    elif cmd == "tables":
        if args.xs:
            xs = [_num(v) for v in args.xs.split(",")]
        else:
            top_x = args.max or 10**6
            xs = [10**k for k in range(3, 11) if 10**k <= top_x]
        rows = counting.comparison_table(xs, A=args.legendre_a)
        _emit(out, counting.TABLE_HEADER,
              [(r.x, r.pi, r.li_overcount, r.legendre_error) for r in rows], fmt)

    elif cmd == "mertens":
        sums = counting.mertens_logsum_at(args.ns)
        _emit(out, ("n", "logsum", "gap_to_log_n"),
              [(n, sums[n], sums[n] - math.log(n)) for n in sorted(sums)], fmt)

    elif cmd == "chebyshev":
        if args.mode == "binom":
            r = elementary.binom_prime_bounds(args.n)
            _emit(out, ("n", "central_log", "prime_block_log", "max_prime_power"),
                  [(r.n, r.central_log, r.prime_block_log, r.max_prime_power)], fmt)
        elif args.mode == "kummer":
            _emit(out, ("p", "n", "exponent"),
                  [(args.p, args.n, elementary.kummer_exponent(args.p, args.n))], fmt)
        elif args.mode == "valuation":
            _emit(out, ("p", "n", "valuation"),
                  [(args.p, args.n, elementary.factorial_valuation(args.p, args.n))], fmt)
        elif args.mode == "bertrand":
            _emit(out, ("n", "prime"), [(args.n, elementary.bertrand_check(args.n))], fmt)
        elif args.mode == "erato":
            r = elementary.eratosthenes_bound(args.x, args.y)
            _emit(out, ("x", "y", "rough_count", "bound"),
                  [(args.x, args.y, r["rough_count"], r["bound"])], fmt)
        else:
            r = elementary.log_factorial_estimate(args.n)
            _emit(out, ("n", "exact", "estimate", "gap"),
                  [(args.n, r["exact"], r["estimate"], r["exact"] - r["estimate"])], fmt)

    elif cmd == "lcm-identity":
        if args.mode == "check":
            r = elementary.lcm_identity_check(args.x)
            exact = "-" if r["exact_match"] is None else str(r["exact_match"]).lower()
            _emit(out, ("x", "lhs_log", "rhs_log", "exact_match"),
                  [(args.x, r["lhs_log"], r["rhs_log"], exact)], fmt)
        else:
            ps = [_num(v) for v in args.primes.split(",") if v]
            r = elementary.truncated_identity(args.x, args.n_cutoff, ps)
            rows = [(args.x, args.n_cutoff, "log_value", r["log_value"])]
            rows += [(args.x, args.n_cutoff, f"exponent({p})", e) for p, e in r["exponents"].items()]
            _emit(out, ("x", "n_cutoff", "quantity", "value"), rows, fmt)

    elif cmd == "selberg":
        _emit(out, ("x", "error", "frozen_bound"),
              [(args.x, elementary.selberg_error(args.x), calibration.SELBERG_ERROR_BOUND)], fmt)

    elif cmd == "functional":
        _emit(out, ("x", "which", "error", "frozen_bound"),
              [(args.x, args.which, elementary.functional_error(args.x, args.which),
                calibration.FUNCTIONAL_ERROR_BOUND)], fmt)

    elif cmd == "distance":
        if args.mode == "pair":
            d = pretentious.distance(parse_mf(args.f), parse_mf(args.g), args.x)
            _emit(out, ("f", "g", "x", "distance", "squared"),
                  [(d.f_name, d.g_name, d.x, d.value, d.squared)], fmt)
        elif args.mode == "min-t":
            r = pretentious.distance_min_t(parse_mf(args.f), args.x, args.t_max, args.step)
            _emit(out, ("f", "x", "t_min", "d_min"),
                  [(args.f, args.x, r["t_min"], r["d_min"])], fmt)
        elif args.mode == "mean":
            m = pretentious.mean_value(parse_mf(args.f), args.n)
            _emit(out, ("f", "n", "mean", "abs"), [(args.f, args.n, m, abs(m))], fmt)
        elif args.mode == "eval":
            v = pretentious.mf_eval(parse_mf(args.f), args.n)
            _emit(out, ("f", "n", "value"), [(args.f, args.n, v)], fmt)
        else:
            r = pretentious.nit_mean_check(args.t, args.n)
            _emit(out, ("t", "n", "computed", "predicted", "gap"),
                  [(args.t, args.n, r["computed"], r["predicted"], r["gap"])], fmt)

    elif cmd == "eta":
        if args.mode == "val":
            _emit(out, ("w", "y", "eta"), [(args.w, args.y, pretentious.eta(args.w, args.y))], fmt)
        elif args.mode == "triangle":
            ok = pretentious.eta_triangle_check(args.w, args.y, args.z)
            _emit(out, ("w", "y", "z", "holds"), [(args.w, args.y, args.z, ok)], fmt)
        else:
            bad = pretentious.eta_triangle_sweep(args.count, seed=args.seed)
            _emit(out, ("count", "seed", "violations"), [(args.count, args.seed, bad)], fmt)

    elif cmd == "halasz":
        r = pretentious.halasz_ratio(parse_mf(args.f), args.x, args.t)
        _emit(out, ("f", "x", "t", "series_mag", "pretentious_mag", "ratio", "tail_bound"),
              [(args.f, args.x, args.t, r["series_mag"], r["pretentious_mag"],
                r["ratio"], r["tail_bound"])], fmt)

    elif cmd == "zeta":
        s = _complex_arg(args)
        if args.mode == "series":
            r = zeta.zeta_eval(s, args.terms)
            _emit(out, ("sigma", "t", "value", "tail_bound"),
                  [(s.real, s.imag, r.value, r.tail_bound)], fmt)
        elif args.mode == "log-deriv":
            r = zeta.log_deriv_eval(s, args.terms)
            _emit(out, ("sigma", "t", "value", "tail_bound"),
                  [(s.real, s.imag, r.value, r.tail_bound)], fmt)
        else:
            r = zeta.euler_product_check(s, args.cutoff)
            _emit(out, ("sigma", "t", "series", "product", "gap"),
                  [(s.real, s.imag, r["series"], r["product"], r["gap"])], fmt)

    elif cmd == "perron":
        v = zeta.perron_indicator(args.z, args.sigma, args.T)
        _emit(out, ("z", "sigma", "T", "value"), [(args.z, args.sigma, args.T, v)], fmt)

    elif cmd == "explicit":
        zt = _zero_table(args)
        r = zeta.explicit_psi(args.x, zt, args.T)
        _emit(out, ("x", "zeros_used", "approx", "truth", "error"),
              [(args.x, len(zt.up_to(args.T)) if args.T else len(zt),
                r["approx"], r["truth"], r["error"])], fmt)

    elif cmd == "goldbach":
        r = zeta.goldbach_check(args.n)
        _emit(out, ("direct", "circle"), [(r["direct"], r["circle"])], fmt)

    elif cmd == "prh":
        r = zeta.prh_bound_check(args.k, _complex_arg(args), args.terms)
        _emit(out, ("k", "sigma", "t", "magnitude", "budget", "ratio"),
              [(args.k, args.sigma, args.t, r["magnitude"], r["budget"], r["ratio"])], fmt)

    elif cmd == "chars":
        if args.mode == "table":
            ct = progressions.character_table(args.q)
            rows = [
                (ct.q, c.index, c.order,
                 "principal" if c.is_principal else ("real" if c.is_real else "complex"))
                for c in ct.characters
            ]
            _emit(out, ("q", "index", "order", "kind"), rows, fmt)
        elif args.mode == "orthogonality":
            ok = progressions.character_table(args.q).orthogonality_exact()
            _emit(out, ("q", "exact"), [(args.q, ok)], fmt)
        else:
            chi = progressions.character_table(args.q).characters[args.index]
            m = progressions.mu_chi_mean(chi, args.n)
            _emit(out, ("q", "index", "n", "mean", "abs"),
                  [(args.q, args.index, args.n, m, abs(m))], fmt)

    elif cmd == "pi-ap":
        c = progressions.pi_ap(args.x, args.q, args.a)
        _emit(out, ("x", "q", "a", "count"), [(args.x, args.q, args.a, c)], fmt)

    elif cmd == "equidist":
        if args.mode == "find":
            r = progressions.equidist_stats(args.q, args.target)
            _emit(out, ("q", "target_avg", "x_reached", "min_count", "max_count"),
                  [(args.q, args.target, r["x_reached"], r["min_count"], r["max_count"])], fmt)
        else:
            counts = progressions.pi_ap_all(args.x, args.q)
            rows = [(args.q, a, int(counts[a]))
                    for a in range(args.q) if math.gcd(a, args.q) == 1]
            _emit(out, ("q", "a", "value"), rows, fmt)

    elif cmd == "lone":
        if args.mode == "eval":
            chi = progressions.character_table(args.q).characters[args.index]
            r = progressions.l_one(chi, args.n)
            _emit(out, ("q", "index", "n", "value", "tail_bound"),
                  [(args.q, args.index, args.n, r["value"], r["tail_bound"])], fmt)
        else:
            rows = []
            for q in range(3, args.q_max + 1):
                ct = progressions.character_table(q)
                for chi in ct.real_nonprincipal():
                    r = progressions.l_one(chi, args.n_mult * q)
                    rows.append((q, chi.index, r["value"], r["tail_bound"]))
            _emit(out, ("q", "index", "value", "tail_bound"), rows, fmt)

    elif cmd == "least-prime":
        if args.mode == "one":
            r = progressions.least_prime_ap(args.q, args.a)
            _emit(out, ("q", "a", "value", "linnik_exponent"),
                  [(args.q, args.a, r["p"],
                    r["linnik_exponent"] if r["linnik_exponent"] is not None else "-")], fmt)
        else:
            rows = []
            for a in range(1, args.q):
                if math.gcd(a, args.q) == 1:
                    r = progressions.least_prime_ap(args.q, a)
                    rows.append((args.q, a, r["p"]))
            _emit(out, ("q", "a", "value"), rows, fmt)

    else:  # chernac
        for line in chernac_page(args.base):
            print(line, file=out)

    return 0


def run(argv, out=None):
    """Parse and execute; returns the process exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _dispatch(args, out)
    except (RangeError, DomainError, ArgumentError, ParseError, FormatError,
            ResourceError, AssertionError) as e:
        print(f"error in {args.command}: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
