"""Command line front end.

Subcommands:

  verify-paper   re-derive the claim tables from the bundled catalog
  codim          codimension triples (c_n, c_n^z, c_n^delta)
  exponent       PI-exponent and proper-central exponent bounds
  certify        witness-pattern certifier for exp^delta > 2
  check          classify one polynomial on one algebra

Each check emits one JSON record per line; a human summary table follows
(on stderr when records go to stdout). Records are stable-ordered:
catalog order, then n ascending. Exit status is 0 iff every executed
check passed; skipped checks never mask a failure.

Results are cached under --cache DIR (or $PICENTRAL_CACHE) keyed by a
content hash of the algebra definition and the check parameters, so
cache hits reproduce byte-identical records.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys
import time

from . import __version__, catalog, codim, linalg, witnesses
from .algebra import center, supercenter_component, verify_wedderburn
from .exponents import delta_exponent_bounds, pi_exponent

PRIME_POOL = tuple(linalg.DEFAULT_PRIMES) + (
    67108819, 67108777, 67108763, 67108757)

VARIANT_FAMILIES = {
    "A_6": ["A_6^1", "A_6^2", "A_6^3"],
    "A_7": ["A_7^1", "A_7^2", "A_7^3"],
}

DEGREE7_CLAIMS = {
    "A_6": "x1[x2,x3][x4,x5,x6]x7",
    "A_7": "x1[x2,x3,x4][x5,x6]x7",
}


# -- plumbing ---------------------------------------------------------------

def _algebra(name, define=None):
    if define and name in define:
        return define[name]
    return catalog.catalog_algebra(name)


def _target(name, define=None):
    if define and name in define:
        B, entry = define[name]
        if entry.envelope:
            from .grassmann import EnvelopeContext
            return EnvelopeContext(B)
        return B
    return catalog.catalog_target(name)


def _span_equal(A, computed, labels):
    want = [list(A.vector_from_expr(s)) for s in labels]
    have = [list(v) for v in computed]
    return (all(linalg.in_span(have, w) for w in want)
            and all(linalg.in_span(want, h) for h in have))


def _format_vec(A, vec):
    return A.expr_from_vector(vec)


# -- individual checks ------------------------------------------------------
# Each runner takes a descriptor dict and returns (status, detail).

def _run_wedderburn(desc, cfg):
    B, entry = _algebra(desc["algebra"], cfg.get("define"))
    rep = verify_wedderburn(B, B.wedderburn)
    return ("pass" if rep.ok else "fail",
            {"dim": B.dim, "failures": list(rep.failures)})


def _run_exponent(desc, cfg):
    B, entry = _algebra(desc["algebra"], cfg.get("define"))
    res = delta_exponent_bounds(B, degree_cap=cfg["degree_cap"])
    exp_want = entry.expected.get("exp")
    delta_want = entry.expected.get("exp_delta")
    ok = res.exp == exp_want
    if delta_want is not None:
        ok = ok and res.delta_lower <= delta_want <= res.delta_upper
    detail = {
        "exp": res.exp,
        "exp_expected": exp_want,
        "delta_interval": [res.delta_lower, res.delta_upper],
        "delta_expected": delta_want,
        "delta_certified": res.delta_lower == res.delta_upper,
        "blocks": list(res.best_subset),
        "radical_path": [_format_vec(B, v) for v in res.radical_path],
        "delta_witness": (str(res.delta_witness[0])
                          if res.delta_witness else None),
    }
    return ("pass" if ok else "fail", detail)


def _run_center(desc, cfg):
    B, entry = _algebra(desc["algebra"], cfg.get("define"))
    even_want = entry.expected.get("center_even", [])
    odd_want = entry.expected.get("center_odd", [])
    if entry.envelope:
        even = supercenter_component(B, 0)
        odd = supercenter_component(B, 1)
    else:
        even, odd = center(B), []
    ok = _span_equal(B, even, even_want) and _span_equal(B, odd, odd_want)
    return ("pass" if ok else "fail", {
        "even": [_format_vec(B, v) for v in even],
        "odd": [_format_vec(B, v) for v in odd],
        "even_expected": even_want, "odd_expected": odd_want})


def _run_witness(desc, cfg):
    from . import valuespans
    B, entry = _algebra(desc["algebra"], cfg.get("define"))
    spec = entry.expected["proper_central_witness"]
    target = _target(desc["algebra"], cfg.get("define"))
    verdict, method = codim.is_proper_central_detailed(target, spec["poly"])
    detail = {"poly": spec["poly"], "verdict": verdict, "method": method}
    ok = verdict == "proper_central"
    value = spec.get("value")
    if ok and value:
        tree = valuespans.parse_factor_tree(spec["poly"])
        _v, spans = valuespans.classify_tree(B, tree, entry.envelope)
        vec = list(B.vector_from_expr(value))
        q = next((B.parity[i] for i, c in enumerate(vec) if c), 0)
        rows = [list(r) for (qq, _t), rr in spans.items() if qq == q
                for r in rr]
        ok = bool(rows) and linalg.in_span(rows, vec)
        detail["value"] = value
        detail["value_attained"] = ok
    return ("pass" if ok else "fail", detail)


def _run_codim(desc, cfg):
    entry = (cfg["define"][desc["algebra"]][1] if cfg.get("define")
             and desc["algebra"] in cfg["define"]
             else catalog.catalog_entry(desc["algebra"]))
    target = _target(desc["algebra"], cfg.get("define"))
    n = desc["n"]
    res = codim.central_space(target, n, mode=cfg["mode"],
                              primes=cfg["primes"], window=cfg["window"])
    ok = True
    want = entry.expected.get("codim")
    if want and n <= len(want):
        ok = res.c_n == want[n - 1]
    want_delta = entry.expected.get("codim_delta")
    if want_delta and n <= len(want_delta):
        ok = ok and res.c_n_delta == want_delta[n - 1]
    return ("pass" if ok else "fail", {
        "c_n": res.c_n, "c_n_z": res.c_n_z, "c_n_delta": res.c_n_delta,
        "expected_c_n": want[n - 1] if want and n <= len(want) else None,
        "method": res.method, "certified": res.certified})


def _run_identity(desc, cfg):
    target = _target(desc["algebra"], cfg.get("define"))
    verdict, method = codim.is_proper_central_detailed(target, desc["poly"])
    member = verdict == "identity"
    ok = member == desc["member"]
    return ("pass" if ok else "fail", {
        "poly": desc["poly"], "verdict": verdict, "method": method,
        "expected_member": desc["member"]})


def _run_tideal(desc, cfg):
    entry = catalog.catalog_entry(desc["algebra"])
    gens = entry.expected["tideal_generators"]
    target = _target(desc["algebra"], cfg.get("define"))
    n = desc["n"]
    if n <= 5:
        td = codim.tideal_span_dim_exact(gens, n)
        sp = codim.identity_space(target, n, mode="exact")
        ok = td == sp.dim
        detail = {"tideal_dim": td, "id_dim": sp.dim, "method": "exact"}
    else:
        dims, samples = codim.tideal_span_dim_modular(
            gens, n, primes=cfg["primes"], window=cfg["window"],
            sample=False)
        sp = codim.identity_space(target, n, primes=cfg["primes"],
                                  window=cfg["window"])
        ok = all(d == sp.dim for d in dims)
        detail = {"tideal_dims": list(dims), "id_dim": sp.dim,
                  "method": "modular", "samples": samples}
    return ("pass" if ok else "fail", detail)


def _run_variant_equal(desc, cfg):
    a = _target(desc["algebra"], cfg.get("define"))
    b = _target(desc["other"], cfg.get("define"))
    eq, det = codim.identity_spaces_equal(
        a, b, desc["n"], primes=cfg["primes"], window=cfg["window"])
    return ("pass" if eq else "fail",
            {"other": desc["other"], "ranks": [list(r) for r in det["ranks"]],
             "primes": det["primes"]})


def _run_certifier(desc, cfg):
    B, entry = _algebra(desc["algebra"], cfg.get("define"))
    rep = witnesses.certify_delta_gt_two(B)
    expected_delta = entry.expected.get("exp_delta")
    if expected_delta is not None:
        want = expected_delta >= 3
    else:
        want = desc["algebra"].startswith("A_")
    ok = rep.certified == want
    return ("pass" if ok else "fail", {
        "verdict": rep.verdict,
        "lemma": rep.matches[0].lemma if rep.matches else None,
        "target": rep.matches[0].target if rep.matches else None,
        "checks_passed": rep.checks_passed,
        "delta_bounds": list(rep.delta_bounds) if rep.delta_bounds else None})


def _run_degree7(desc, cfg):
    gen = DEGREE7_CLAIMS[desc["algebra"]]
    target = _target(desc["algebra"], cfg.get("define"))
    dims, samples = codim.tideal_span_dim_modular(
        [gen], 7, primes=cfg["primes"], window=cfg["window"])
    sp = codim.identity_space(target, 7, mode="modular",
                              primes=cfg["primes"], window=cfg["window"])
    ok = all(d == sp.dim for d in dims)
    return ("pass" if ok else "fail", {
        "generator": gen, "tideal_dims": list(dims),
        "id_dim": sp.dim, "c_7": sp.c_n, "samples": samples})


_RUNNERS = {
    "wedderburn": _run_wedderburn,
    "exponent": _run_exponent,
    "center": _run_center,
    "witness": _run_witness,
    "codim": _run_codim,
    "identity": _run_identity,
    "tideal": _run_tideal,
    "variant_equal": _run_variant_equal,
    "certifier": _run_certifier,
    "degree7": _run_degree7,
}


def _execute(desc, cfg):
    t0 = time.perf_counter()
    try:
        status, detail = _RUNNERS[desc["check"]](desc, cfg)
    except codim.ResourceCapError as exc:
        status, detail = "skipped", {"reason": str(exc)}
    except Exception as exc:  # a crashed check is a failed check
        status, detail = "fail", {"error": f"{type(exc).__name__}: {exc}"}
    record = {"check": desc["check"], "algebra": desc.get("algebra"),
              "n": desc.get("n"), "status": status, "detail": detail,
              "seconds": round(time.perf_counter() - t0, 2)}
    return json.dumps(record, sort_keys=True)


# -- caching ----------------------------------------------------------------

def _cache_dir(args):
    return args.cache or os.environ.get("PICENTRAL_CACHE")


def _cache_key(desc, cfg):
    payload = {"version": __version__, "desc": desc,
               "mode": cfg["mode"], "primes": list(cfg["primes"]),
               "window": cfg["window"], "degree_cap": cfg["degree_cap"]}
    for key in ("algebra", "other"):
        name = desc.get(key)
        if name:
            try:
                entry = catalog.catalog_entry(name)
                payload[f"def_{key}"] = entry.definition
            except Exception:
                pass
    blob = json.dumps(payload, sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cached_run(desc, cfg, cache):
    if cache:
        path = os.path.join(cache, _cache_key(desc, cfg) + ".json")
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                return fh.read().rstrip("\n")
    line = _execute(desc, cfg)
    if cache:
        os.makedirs(cache, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(line + "\n")
    return line


# -- the verify-paper task table ---------------------------------------------

def _verify_tasks(names, degree_cap, with_degree7):
    tasks = []
    for name in names:
        entry = catalog.catalog_entry(name)
        exp = entry.expected
        tasks.append({"check": "wedderburn", "algebra": name})
        if "exp" in exp:
            tasks.append({"check": "exponent", "algebra": name})
        if "center_even" in exp or "center_odd" in exp:
            tasks.append({"check": "center", "algebra": name})
        if "proper_central_witness" in exp:
            tasks.append({"check": "witness", "algebra": name})
        for n in range(1, len(exp.get("codim", [])) + 1):
            tasks.append({"check": "codim", "algebra": name, "n": n})
        for poly in exp.get("identities", []):
            tasks.append({"check": "identity", "algebra": name,
                          "poly": poly, "member": True})
        for poly in exp.get("non_identities", []):
            tasks.append({"check": "identity", "algebra": name,
                          "poly": poly, "member": False})
        if "tideal_generators" in exp:
            for n in range(4, min(6, degree_cap) + 1):
                tasks.append({"check": "tideal", "algebra": name, "n": n})
        tasks.append({"check": "certifier", "algebra": name})
        base = next((b for b, vs in VARIANT_FAMILIES.items() if name in vs),
                    None)
        if base is not None:
            for n in range(1, min(6, degree_cap) + 1):
                tasks.append({"check": "variant_equal", "algebra": name,
                              "other": base, "n": n})
        if with_degree7 and name in DEGREE7_CLAIMS:
            tasks.append({"check": "degree7", "algebra": name, "n": 7})
    return tasks


# -- output -----------------------------------------------------------------

def _emit(lines, args):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")
        summary_stream = sys.stdout
    else:
        for line in lines:
            print(line)
        summary_stream = sys.stderr
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    rows = []
    for line in lines:
        rec = json.loads(line)
        counts[rec["status"]] += 1
        rows.append((rec["check"], rec["algebra"] or "-",
                     str(rec["n"] or "-"), rec["status"],
                     f"{rec['seconds']:.2f}s"))
    widths = [max(len(r[i]) for r in rows + [("check", "algebra", "n",
                                              "status", "time")])
              for i in range(5)]
    print("", file=summary_stream)
    header = ("check", "algebra", "n", "status", "time")
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)),
          file=summary_stream)
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)),
              file=summary_stream)
    print(f"\n{counts['pass']} passed, {counts['fail']} failed, "
          f"{counts['skipped']} skipped", file=summary_stream)
    return 0 if counts["fail"] == 0 else 1


def _run_all(tasks, cfg, args):
    cache = _cache_dir(args)
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(args.jobs) as pool:
            futures = [pool.submit(_cached_run, d, cfg, cache)
                       for d in tasks]
            lines = [f.result() for f in futures]
    else:
        lines = [_cached_run(d, cfg, cache) for d in tasks]
    return _emit(lines, args)


# -- subcommands -------------------------------------------------------------

def _parse_n_range(text):
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _select_names(args):
    if args.define:
        _B, entry = catalog.load_definition_file(args.define)
        return [entry.name], {entry.name: catalog.load_definition_file(
            args.define)}
    names = catalog.catalog_names()
    if args.algebra:
        wanted = []
        for spec in args.algebra:
            wanted.extend(s.strip() for s in spec.split(","))
        for w in wanted:
            catalog.catalog_entry(w)  # raise early on typos
        names = [n for n in names if n in wanted]
    return names, None


def _config(args):
    return {"mode": args.mode,
            "primes": PRIME_POOL[:args.primes],
            "window": 3,
            "degree_cap": args.degree_cap,
            "define": None}


def cmd_verify_paper(args):
    names, define = _select_names(args)
    cfg = _config(args)
    cfg["define"] = define
    tasks = _verify_tasks(names, args.degree_cap, args.with_degree7)
    return _run_all(tasks, cfg, args)


def cmd_codim(args):
    names, define = _select_names(args)
    cfg = _config(args)
    cfg["define"] = define
    tasks = [{"check": "codim", "algebra": name, "n": n}
             for name in names for n in _parse_n_range(args.n)]
    return _run_all(tasks, cfg, args)


def cmd_exponent(args):
    names, define = _select_names(args)
    cfg = _config(args)
    cfg["define"] = define
    tasks = [{"check": "exponent", "algebra": name} for name in names]
    return _run_all(tasks, cfg, args)


def cmd_certify(args):
    names, define = _select_names(args)
    cfg = _config(args)
    cfg["define"] = define
    tasks = [{"check": "certifier", "algebra": name} for name in names]
    return _run_all(tasks, cfg, args)


def cmd_check(args):
    cfg = _config(args)
    define = None
    if args.define:
        pair = catalog.load_definition_file(args.define)
        define = {pair[1].name: pair}
        name = pair[1].name
    else:
        name = args.algebra_name
    cfg["define"] = define
    target = _target(name, define)
    B = target.base if hasattr(target, "base") else target
    t0 = time.perf_counter()
    verdict, method = codim.is_proper_central_detailed(target, args.poly)
    detail = {"poly": args.poly, "verdict": verdict, "method": method}
    if verdict != "identity":
        from . import valuespans
        try:
            tree = valuespans.parse_factor_tree(args.poly)
        except Exception:
            tree = None
        if tree is not None:
            entry = (define[name][1] if define
                     else catalog.catalog_entry(name))
            _v, spans = valuespans.classify_tree(B, tree, entry.envelope)
            for (_q, _touched), rows in sorted(
                    spans.items(), key=lambda kv: kv[0]):
                if rows:
                    detail["witness_value"] = _format_vec(B, rows[0])
                    break
    record = {"check": "check", "algebra": name, "n": None,
              "status": "pass", "detail": detail,
              "seconds": round(time.perf_counter() - t0, 2)}
    line = json.dumps(record, sort_keys=True)
    code = _emit([line], args)
    extra = (f", witness value {detail['witness_value']}"
             if "witness_value" in detail else "")
    print(f"{verdict}{extra}", file=sys.stderr if args.out is None
          else sys.stdout)
    return code


def build_parser():
    ap = argparse.ArgumentParser(
        prog="picentral",
        description="codimension growth and proper central polynomials "
                    "of superalgebra envelopes")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", action="append",
                        help="restrict to these catalog algebras "
                             "(repeatable, comma separated)")
    common.add_argument("--mode", choices=["auto", "exact", "modular"],
                        default="auto")
    common.add_argument("--primes", type=int, default=2,
                        help="number of independent primes (default 2)")
    common.add_argument("--jobs", type=int, default=1,
                        help="parallel worker processes")
    common.add_argument("--degree-cap", type=int, default=8, dest="degree_cap",
                        help="degree budget for witness search and variant "
                             "comparisons")
    common.add_argument("--cache", help="cache directory "
                                        "(or $PICENTRAL_CACHE)")
    common.add_argument("--out", help="write records to this file")
    common.add_argument("--define", help="YAML definition of a user algebra")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-paper", parents=[common],
                       help="re-derive the bundled claim tables")
    p.add_argument("--with-degree7", action="store_true",
                   help="include the degree-7 T-ideal checks (slow)")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("codim", parents=[common],
                       help="codimension triples")
    p.add_argument("--n", default="1..5",
                   help="degree or range, e.g. 4 or 1..6")
    p.set_defaults(func=cmd_codim)

    p = sub.add_parser("exponent", parents=[common],
                       help="PI and proper-central exponents")
    p.set_defaults(func=cmd_exponent)

    p = sub.add_parser("certify", parents=[common],
                       help="witness-pattern certifier")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("check", parents=[common],
                       help="classify a polynomial on an algebra")
    p.add_argument("poly", help='polynomial, e.g. "[x1,x2][x3,x4][x5,x6]"')
    p.add_argument("algebra_name", nargs="?",
                   help="catalog algebra name (or use --define)")
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "check" and not (args.algebra_name or args.define):
        build_parser().error("check needs an algebra name or --define")
    if args.primes < 1:
        build_parser().error("--primes must be at least 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
