"""Command line surface: roots, enumerate, dim, verify, spectrum.

Every command prints a human-readable table on stdout (or NDJSON with
--format json) and can mirror machine-readable records to a file with
--out.  Exit codes: 0 all checks pass, 1 at least one mathematical mismatch,
2 usage or input error.  Output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import get_context

from .lie import default_prime, is_prime
from .orthoset import (
    OrthoSet,
    build_blocks,
    enumerate_normalized,
    normalize,
    ones_xi,
    orthogonal_set,
    seeded_xi,
)
from .oracle import certify_polarization, full_orbit_census, skew_rank_dim
from .reduction import recursion_report
from .rootsys import (
    RootSystem,
    build_system,
    format_root_set,
    format_xi,
    parse_root_set,
    parse_xi,
)
from .weyl import (
    defect,
    inversion_length,
    involution_of,
    mu_max,
    predicted_dim,
    spectrum_witness,
)

VERIFY_RANK_BUDGET = 6


def _system_from_args(args) -> RootSystem:
    family = args.family.upper()
    if family not in ("B", "C", "D"):
        raise ValueError(f"family must be B, C or D, got {args.family!r}")
    if args.n < 0:
        raise ValueError(f"rank must be nonnegative, got {args.n}")
    return build_system(family, args.n)


def _parse_primes(text: str | None, rs: RootSystem) -> list[int]:
    if not text or text == "auto":
        return [default_prime(rs)]
    primes = []
    for tok in text.split(","):
        p = int(tok.strip())
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < rs.m:
            raise ValueError(f"prime {p} is smaller than the matrix size {rs.m}")
        primes.append(p)
    return primes


def _resolve_xi(D: OrthoSet, xi_text: str | None, xi_seed, bound: int):
    """Returns (xi dict, seed descriptor or None)."""
    if xi_text is not None:
        xi = parse_xi(D.system, xi_text)
        if set(xi) != set(D.roots):
            raise ValueError("scalar literal does not cover exactly the given set")
        return xi, None
    if xi_seed is not None:
        return seeded_xi(D, xi_seed, bound), str(xi_seed)
    return ones_xi(D), None


def build_record(rs: RootSystem, set_text: str, xi_text: str | None, xi_seed,
                 primes: list[int], perturb_theta: int = 0,
                 with_recursion: bool = False) -> dict:
    """One verification record: prediction, oracles, polarization, blocks."""
    roots = parse_root_set(rs, set_text)
    D0 = orthogonal_set(rs, roots)
    xi0, seed_desc = _resolve_xi(D0, xi_text, xi_seed, default_prime(rs))
    D, xi = normalize(D0, xi0)

    sigma = involution_of(D)
    _, l = inversion_length(rs, sigma)
    s = len(D.roots)
    d = defect(D)
    predicted = predicted_dim(D) - 2 * perturb_theta

    oracle = {}
    certs = {}
    for p in primes:
        oracle[str(p)] = skew_rank_dim(D, xi, p)
        certs[p] = certify_polarization(D, xi, p)
    ref = certs[primes[0]]
    pol = {
        "P_size": ref.main_size,
        "p0_size": ref.correction_size,
        "dim": ref.dim,
        "subalgebra_ok": all(c.subalgebra_ok for c in certs.values()),
        "isotropic_ok": all(c.isotropic_ok for c in certs.values()),
        "maximal_ok": all(c.maximal_ok for c in certs.values()),
    }

    blocks = [[j, [str(a) for a in roots_]] for j, roots_ in build_blocks(D).items]
    match = (all(v == predicted for v in oracle.values())
             and pol["subalgebra_ok"] and pol["isotropic_ok"] and pol["maximal_ok"])

    record = {
        "family": rs.family,
        "n": rs.n,
        "primes": primes,
        "set": set_text,
        "normalized_set": str(D),
        "xi": format_xi(rs, xi),
        "xi_seed": seed_desc,
        "l_sigma": l,
        "s_sigma": s,
        "defect": {"d1": d.d1, "d2": d.d2, "d3": d.d3, "d4": d.d4,
                   "theta": d.theta + perturb_theta},
        "predicted_dim": predicted,
        "oracle_rank": oracle,
        "polarization": pol,
        "blocks": blocks,
        "match": match,
    }
    if with_recursion:
        if rs.n > 0:
            report = recursion_report(D, xi)
            record["recursion_ok"] = report.ok
            record["recursion_failures"] = [
                {"name": i.name, "lhs": i.lhs, "rhs": i.rhs}
                for i in report.identities if not i.ok
            ]
        else:
            record["recursion_ok"] = True
            record["recursion_failures"] = []
    return record


def _emit(records: list[dict], args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")


def _print_record(rec: dict) -> None:
    d = rec["defect"]
    print(f"{rec['family']}{rec['n']}  set=[{rec['normalized_set']}]  xi=[{rec['xi']}]")
    print(f"  l(sigma)={rec['l_sigma']}  s(sigma)={rec['s_sigma']}  "
          f"defect=({d['d1']},{d['d2']},{d['d3']},{d['d4']})  theta={d['theta']}")
    ranks = "  ".join(f"p={p}:{v}" for p, v in rec["oracle_rank"].items())
    print(f"  predicted_dim={rec['predicted_dim']}  oracle {ranks}")
    pol = rec["polarization"]
    print(f"  polarization dim={pol['dim']} (|P|={pol['P_size']}, |p0|={pol['p0_size']})  "
          f"subalgebra={pol['subalgebra_ok']}  isotropic={pol['isotropic_ok']}  "
          f"maximal={pol['maximal_ok']}")
    for j, roots in rec["blocks"]:
        print(f"  block col {j}: {','.join(roots)}")
    print(f"  match={rec['match']}")


# ---------------------------------------------------------------------------
# Subcommands

def cmd_roots(args) -> int:
    rs = _system_from_args(args)
    if args.format == "json":
        for k, a in enumerate(rs.positives):
            print(json.dumps({"index": k, "root": str(a), "row": a.row, "col": a.col},
                             sort_keys=True))
    else:
        print(f"{rs.family}{rs.n}: {len(rs.positives)} positive roots, matrix size {rs.m}")
        for k, a in enumerate(rs.positives):
            print(f"  {k:3d}  {str(a):10s} row={a.row:3d} col={a.col}")
    return 0


def cmd_enumerate(args) -> int:
    rs = _system_from_args(args)
    if args.count_only:
        print(sum(1 for _ in enumerate_normalized(rs)))
        return 0
    for D in enumerate_normalized(rs):
        if args.format == "json":
            print(json.dumps({"set": str(D)}, sort_keys=True))
        else:
            print(str(D))
    return 0


def cmd_dim(args) -> int:
    rs = _system_from_args(args)
    primes = _parse_primes(args.primes, rs)
    rec = build_record(rs, args.set, args.xi, args.xi_seed, primes)
    if args.format == "json":
        print(json.dumps(rec, sort_keys=True))
    else:
        _print_record(rec)
    _emit([rec], args)
    return 0 if rec["match"] else 1


def _verify_chunk(payload) -> list[dict]:
    family, n, chunk, xi_samples, xi_seed, primes, perturb = payload
    rs = build_system(family, n)
    records = []
    for ordinals in chunk:
        set_text = format_root_set(rs.positives[k] for k in ordinals)
        specs = [(None, None)]
        specs += [(None, f"{xi_seed}:{set_text}:{s}") for s in range(xi_samples)]
        for xi_text, seed in specs:
            records.append(build_record(rs, set_text, xi_text, seed, primes,
                                        perturb_theta=perturb, with_recursion=True))
    return records


def cmd_verify(args) -> int:
    rs = _system_from_args(args)
    if rs.n > VERIFY_RANK_BUDGET:
        count = 0
        for D in enumerate_normalized(rs):
            count += 1
            if count >= 200_000:
                break
        bound = ">=" if count >= 200_000 else ""
        print(f"refusing: rank {rs.n} exceeds the verify budget ({VERIFY_RANK_BUDGET}); "
              f"{rs.family}{rs.n} has {bound}{count} normalized subsets to sweep",
              file=sys.stderr)
        return 2
    primes = _parse_primes(args.primes, rs)
    subsets = [tuple(rs.index(a) for a in D.roots) for D in enumerate_normalized(rs)]
    perturb = 1 if args.perturb_defect else 0
    jobs = max(1, args.jobs)
    if jobs == 1:
        records = _verify_chunk((rs.family, rs.n, subsets, args.xi_samples,
                                 args.xi_seed, primes, perturb))
    else:
        step = -(-len(subsets) // jobs)
        chunks = [subsets[k:k + step] for k in range(0, len(subsets), step)]
        payloads = [(rs.family, rs.n, c, args.xi_samples, args.xi_seed, primes, perturb)
                    for c in chunks if c]
        with get_context("fork").Pool(len(payloads)) as pool:
            parts = pool.map(_verify_chunk, payloads)
        records = [rec for part in parts for rec in part]
    failures = [r for r in records if not (r["match"] and r["recursion_ok"])]
    if args.format == "json":
        for rec in records:
            print(json.dumps(rec, sort_keys=True))
    print(f"verify {rs.family}{rs.n}: {len(subsets)} normalized subsets, "
          f"{len(records)} records, {len(failures)} mismatches")
    for rec in failures:
        _print_record(rec)
    _emit(records, args)
    return 0 if not failures else 1


def cmd_spectrum(args) -> int:
    rs = _system_from_args(args)
    mu = mu_max(rs.family, rs.n)
    p = default_prime(rs)
    rows = []
    status = 0
    for l in range(mu + 1):
        D = spectrum_witness(rs.family, rs.n, l)
        xi = ones_xi(D)
        oracle = skew_rank_dim(D, xi, p) if rs.positives else 0
        ok = oracle == 2 * l
        if not ok:
            status = 1
        rows.append({"exponent": l, "set": str(D), "dim": 2 * l,
                     "oracle_rank": oracle, "ok": ok})
    if args.format == "json":
        for row in rows:
            print(json.dumps(row, sort_keys=True))
    else:
        print(f"spectrum {rs.family}{rs.n}: mu={mu}, {mu + 1} exponents, prime {p}")
        for row in rows:
            print(f"  l={row['exponent']:3d} dim={row['dim']:3d} "
                  f"oracle={row['oracle_rank']:3d} ok={row['ok']}  [{row['set']}]")
    if args.census:
        census = full_orbit_census(rs.family, rs.n, args.census)
        expected = {2 * l for l in range(mu + 1)}
        ok = census.dimensions == expected and census.total_size == census.n_functionals
        if not ok:
            status = 1
        print(f"census q={census.q}: {census.n_functionals} functionals, "
              f"dimensions {sorted(census.dimensions)}, "
              f"orbit counts {census.orbit_counts}, ok={ok}")
    _emit(rows, args)
    return status


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="coadjoint",
        description="Orbit dimensions and polarizations for orthogonal subsets "
                    "of the classical root systems, with exact verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_out=True):
        sp.add_argument("family", help="B, C or D")
        sp.add_argument("n", type=int, help="rank")
        sp.add_argument("--format", choices=("table", "json"), default="table")
        if with_out:
            sp.add_argument("--out", help="write NDJSON records to this file")

    sp = sub.add_parser("roots", help="list the positive roots in canonical order")
    add_common(sp, with_out=False)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("enumerate", help="stream all normalized orthogonal subsets")
    add_common(sp, with_out=False)
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("dim", help="dimension and polarization report for one subset")
    add_common(sp)
    sp.add_argument("--set", default="", help='set literal, e.g. "e1-e6,e1+e6,e2"')
    sp.add_argument("--xi", default=None, help='scalar literal, e.g. "e1-e6=3,e1+e6=1"')
    sp.add_argument("--xi-seed", default=None, help="seed for nonzero scalar sampling")
    sp.add_argument("--primes", "--prime", default="auto",
                    help="comma-separated primes >= m (default: smallest)")
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("verify", help="sweep every normalized subset against the oracles")
    add_common(sp)
    sp.add_argument("--xi-samples", type=int, default=3)
    sp.add_argument("--xi-seed", default=0, help="base seed for scalar sampling")
    sp.add_argument("--primes", "--prime", default="auto")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--perturb-defect", action="store_true",
                    help="inject a defect fault to self-test the harness")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("spectrum", help="witness sets for every representation exponent")
    add_common(sp)
    sp.add_argument("--census", type=int, default=None,
                    help="also brute-force the full orbit census at this prime")
    sp.set_defaults(func=cmd_spectrum)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"mathematical inconsistency: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
