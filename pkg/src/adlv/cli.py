"""
Command-line front end: one subcommand per object, JSON/CSV output, and a
content-addressed result cache (directory from ADLV_CACHE_DIR, off when
unset).  Identical configuration and seed give byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import tempfile

from . import __version__
from . import weyl as W
from . import admissible as AD
from . import semimodule as SM
from . import crystal as C
from . import reduction as R
from . import compare as CP

CACHE_ENV = "ADLV_CACHE_DIR"


def _parse_mu(text: str) -> tuple[int, ...]:
    try:
        mu = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise SystemExit(2)
    return mu


def _require(cond: bool, message: str):
    if not cond:
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _cache_path(payload: dict) -> str | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    key = hashlib.sha256(
        json.dumps({"version": __version__, **payload}, sort_keys=True).encode()
    ).hexdigest()
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, key + ".json")


def _emit(text: str, out: str | None):
    if out:
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(out) or ".", suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    else:
        sys.stdout.write(text)


def _run_cached(key_payload: dict, compute, out: str | None) -> str:
    path = _cache_path(key_payload)
    if path and os.path.exists(path):
        with open(path) as fh:
            text = fh.read()
    else:
        text = compute()
        if path:
            fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
    _emit(text, out)
    return text


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_semimodules(args) -> int:
    mu = _parse_mu(args.mu)
    n = args.n or len(mu)
    _require(len(mu) == n, "--mu must have n entries")
    _require(W.is_dominant(mu), "--mu must be dominant")
    _require(mu[-1] == 0, "--mu must end in 0")
    if sum(mu) == 0:
        records = [{"lambda": [0] * n, "abar": list(range(n)),
                    "phi": [[a, 0] for a in range(n)], "dim": 0,
                    "cyclic": True, "type": [0] * n}]
        text = json.dumps(records, indent=2) + "\n"
        _emit(text, args.out)
        return 0
    _require(math.gcd(sum(mu), n) == 1, "sum(mu) must be coprime to n")

    def compute() -> str:
        exts = SM.enumerate_extended(mu, n, window_scale=args.window_scale)
        records = []
        for e in exts:
            records.append({
                "lambda": list(e.base.lam),
                "abar": list(e.base.abar),
                "phi": [[a, v] for a, v in e.phi_window(args.window_scale)],
                "dim": e.dim,
                "cyclic": e.is_cyclic,
                "type": list(SM.type_of(e.base)),
            })
        return json.dumps(records, indent=2) + "\n"

    _run_cached({"cmd": "semimodules", "mu": mu, "n": n,
                 "window_scale": args.window_scale}, compute, args.out)
    return 0


def cmd_crystal(args) -> int:
    mu = _parse_mu(args.mu)
    n = args.n or len(mu)
    _require(len(mu) == n and W.is_dominant(mu) and mu[-1] == 0,
             "--mu must be dominant with last entry 0")
    m = args.m if args.m is not None else sum(mu)
    _require(m == sum(mu), "--m must equal sum(mu)")
    _require(math.gcd(m, n) == 1, "sum(mu) must be coprime to n")

    def compute() -> str:
        records = []
        for b in C.enumerate_weight_space(mu, SM.lambda_b(m, n), n):
            cd = C.build_construction(b, m, n)
            lam, cyc = C.lambda_and_cyclicity(cd)
            records.append({
                "b": [list(row) for row in b],
                "w_list": [list(W.perm_word(p)) for p in cd.w_list],
                "w_of_b": list(W.perm_word(cd.w_of_b)),
                "lambda_of_b": list(lam),
                "xi1_normalized": list(C.top_lambda(cd)),
                "cyclic": cyc,
            })
        return json.dumps(records, indent=2) + "\n"

    _run_cached({"cmd": "crystal", "mu": mu, "n": n, "m": m}, compute, args.out)
    return 0


def cmd_adm(args) -> int:
    mu = _parse_mu(args.mu)
    n = args.n or len(mu)
    _require(len(mu) == n and W.is_dominant(mu), "--mu must be dominant")
    m = sum(mu)

    def compute() -> str:
        records = []
        for w in sorted(AD.s_adm(mu)):
            records.append({
                "element": W.encode_element(w),
                "length": W.length(w),
                "finite_part_cycle_type": list(W.cycle_type(w.perm)),
                "nonempty": AD.x_w_nonempty(w, m),
            })
        return json.dumps(records, indent=2) + "\n"

    _run_cached({"cmd": "adm", "mu": mu, "n": n}, compute, args.out)
    return 0


def cmd_lp(args) -> int:
    _require(args.n is not None, "--n is required")
    _require(args.w is not None, "--w is required")
    try:
        w = W.parse_element(args.w, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    def compute() -> str:
        data = AD.lp(w)
        record = {
            "w": W.encode_element(w),
            "lp": sorted(",".join(str(v + 1) for v in p) for p in data.lp),
            "phi_w": sorted([a + 1, b + 1] for a, b in data.phi_w),
            "coxeter_witness": None,
        }
        witness = AD.condition_ii_witness(w)
        if witness is not None:
            record["coxeter_witness"] = ",".join(str(v + 1) for v in witness)
        return json.dumps(record, indent=2) + "\n"

    _run_cached({"cmd": "lp", "w": W.encode_element(w), "n": args.n},
                compute, args.out)
    return 0


def cmd_classpoly(args) -> int:
    _require(args.n is not None, "--n is required")
    _require(args.m is not None, "--m is required")
    _require(args.w is not None, "--w is required")
    _require(math.gcd(args.m, args.n) == 1, "m must be coprime to n")
    try:
        w = W.parse_element(args.w, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    def compute() -> str:
        cp = R.class_polynomial(w, args.m, seed=args.seed)
        tree = R.build_tree(w, seed=args.seed)
        ends = {}
        for end, prof in R.path_profiles(tree).items():
            ends[W.encode_element(end)] = sum(prof.values())
        record = {
            "w": W.encode_element(w),
            "end_counts": dict(sorted(ends.items())),
            "paths": [{"lI": a, "lII": b, "count": c}
                      for (a, b), c in cp.path_profile],
            "F_as_q_polynomial": list(cp.coefficients),
            "dim": cp.dim_from_tree,
            "top_components": cp.top_components,
            "seed": args.seed,
        }
        return json.dumps(record, indent=2) + "\n"

    _run_cached({"cmd": "classpoly", "w": W.encode_element(w), "n": args.n,
                 "m": args.m, "seed": args.seed}, compute, args.out)
    return 0


def _report_row(mu: tuple[int, ...], n: int, seed: int) -> dict:
    rep = CP.full_report(mu, n, seed=seed, with_dims=False)
    return {
        "n": n,
        "mu": ",".join(str(v) for v in mu),
        "cond_ii": rep.cond_ii,
        "cond_iii": rep.cond_iii,
        "thm12_member": rep.thm12_member,
        "all_top_cyclic": rep.all_top_cyclic,
        "point_count_identity": rep.point_count_identity,
    }


def _report_detail(mu: tuple[int, ...], n: int, seed: int) -> dict:
    rep = CP.full_report(mu, n, seed=seed, with_dims=True)
    return {
        **_report_row(mu, n, seed),
        "eo_rows": [{
            "element": W.encode_element(r.element),
            "length": r.length,
            "finite_part_cycle_type": list(r.cycle_type),
            "nonempty": r.nonempty,
            "coxeter_witness": None if r.coxeter_witness is None
            else ",".join(str(v + 1) for v in r.coxeter_witness),
            "dim": r.dim,
        } for r in rep.eo_rows],
        "sm_rows": [{
            "lambda": list(r.lam), "dim": r.dim, "cyclic": r.cyclic,
            "type": list(r.type),
        } for r in rep.sm_rows],
    }


def cmd_compare(args) -> int:
    rows = []
    if args.mu:
        mu = _parse_mu(args.mu)
        n = args.n or len(mu)
        if args.format == "json":
            detail = _report_detail(mu, n, args.seed)
            bad = (detail["cond_ii"] != detail["cond_iii"]
                   or (detail["all_top_cyclic"] is not None
                       and detail["all_top_cyclic"] != detail["thm12_member"])
                   or detail["point_count_identity"] is False)
            _emit(json.dumps(detail, indent=2) + "\n", args.out)
            return 1 if bad else 0
        rows.append(_report_row(mu, n, args.seed))
    else:
        _require(args.max_n is not None and args.max_mu1 is not None,
                 "either --mu or both --max-n/--max-mu1 are required")
        _require(args.max_n <= CP.HARD_MAX_N and args.max_mu1 <= CP.HARD_MAX_MU1,
                 "sweep bounds exceed the hard guards")
        jobs = []
        for n in range(2, args.max_n + 1):
            for mu in CP.dominant_shapes(n, args.max_mu1):
                jobs.append((mu, n))
        if args.jobs > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                rows = list(pool.map(_report_row, *zip(*jobs),
                                     [args.seed] * len(jobs)))
        else:
            rows = [_report_row(mu, n, args.seed) for mu, n in jobs]
        rows.sort(key=lambda r: (r["n"], r["mu"]))

    violations = [r for r in rows
                  if r["cond_ii"] != r["cond_iii"]
                  or (r["all_top_cyclic"] is not None
                      and r["all_top_cyclic"] != r["thm12_member"])
                  or r["point_count_identity"] is False]

    if args.format == "csv":
        import io

        buf = io.StringIO()
        cols = ["n", "mu", "cond_ii", "cond_iii", "thm12_member",
                "all_top_cyclic", "point_count_identity"]
        buf.write(",".join(cols) + "\n")
        for r in rows:
            buf.write(",".join(_csv_cell(r[c]) for c in cols) + "\n")
        text = buf.getvalue()
    else:
        text = json.dumps(rows, indent=2) + "\n"
    _emit(text, args.out)
    return 1 if violations else 0


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return f'"{v}"' if "," in str(v) else str(v)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adlv",
        description="Exact strata combinatorics for superbasic affine "
                    "Deligne-Lusztig varieties of GL_n.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mu=False, w=False):
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        if mu:
            p.add_argument("--mu", help="comma separated entries")
        if w:
            p.add_argument("--w", help="element, e.g. 's0*s4*tau^2' or 't[..]*p[..]'")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out")
        p.add_argument("--window-scale", type=int, default=1)

    p = sub.add_parser("semimodules", help="extended semi-modules for mu")
    common(p, mu=True)
    p.set_defaults(func=cmd_semimodules)

    p = sub.add_parser("crystal", help="the weight space B_mu(lambda_b) with construction data")
    common(p, mu=True)
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("adm", help="minimal-coset admissible elements for mu")
    common(p, mu=True)
    p.set_defaults(func=cmd_adm)

    p = sub.add_parser("lp", help="length-positive data of one element")
    common(p, w=True)
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("classpoly", help="reduction tree and class polynomial")
    common(p, w=True)
    p.set_defaults(func=cmd_classpoly)

    p = sub.add_parser("compare", help="stratification comparison verdicts")
    common(p, mu=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-mu1", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
