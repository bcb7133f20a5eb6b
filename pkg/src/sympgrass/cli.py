"""Command line front end and the verification sweep.

Subcommands: poset, monw, hilbert, mult, paths, smt-count, grobner,
verify.  Counts are serialized as decimal strings so arbitrary precision
survives JSON.  Exit codes: 0 success, 1 input error, 2 internal
assertion failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

from . import groebner as grb
from . import hilbert as hb
from . import paths as pth
from . import smt
from .grid import VGrid
from .monw import monw_points
from .poset import IndexSet, enumerate_isotropic, parse_index_set, top_isotropic

SCHEMA = "sympgrass-verify/1"


class InputError(ValueError):
    pass


def _parse_v(text: str, d: int) -> IndexSet:
    try:
        u = parse_index_set(text, 2 * d)
    except ValueError as e:
        raise InputError(str(e))
    if u.d != d:
        raise InputError(f"expected {d} entries, got {u.d} in {text!r}")
    return u


def _require_isotropic(u: IndexSet, name: str) -> IndexSet:
    if not u.is_isotropic():
        raise InputError(
            f"{name}={u} is not isotropic: needs exactly one of j, {u.n}+1-j per j <= {u.d}"
        )
    return u


def _require_leq(v: IndexSet, w: IndexSet):
    if not v.leq(w):
        raise InputError(f"v={v} is not componentwise below w={w}")


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, payload):
    _emit(args, json.dumps(payload, indent=2) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_poset(args) -> int:
    d = args.d
    if args.u is None:
        _emit_json(args, {"d": d, "isotropic": [str(u) for u in enumerate_isotropic(d)]})
        return 0
    u = _parse_v(args.u, d)
    _emit_json(
        args,
        {
            "u": str(u),
            "star": str(u.star()),
            "sharp": str(u.sharp()),
            "isotropic": u.is_isotropic(),
        },
    )
    return 0


def cmd_monw(args) -> int:
    v = _parse_v(args.v, args.d)
    w = _parse_v(args.w, args.d)
    _require_leq(v, w)
    pts = monw_points(v, w)
    _emit_json(
        args,
        {"d": args.d, "v": str(v), "w": str(w), "monw": [list(p) for p in pts]},
    )
    return 0


def _parse_vw(args) -> tuple[IndexSet, IndexSet]:
    v = _require_isotropic(_parse_v(args.v, args.d), "v")
    w = _require_isotropic(_parse_v(args.w, args.d), "w")
    _require_leq(v, w)
    return v, w


def cmd_hilbert(args) -> int:
    v, w = _parse_vw(args)
    values = hb.hilbert_vector(v, w, args.max_degree)
    if args.csv:
        lines = ["m,value"] + [f"{m},{x}" for m, x in enumerate(values)]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(
            args,
            {
                "d": args.d,
                "v": str(v),
                "w": str(w),
                "values": [str(x) for x in values],
            },
        )
    return 0


def cmd_mult(args) -> int:
    v, w = _parse_vw(args)
    cx = hb.dominated_complex(v, w)
    if args.method == "squarefree":
        value = cx.multiplicity
    elif args.method == "paths":
        value = pth.count_path_systems(v, w)
    else:
        value = hb.multiplicity_from_hilbert_polynomial(cx)
    _emit_json(
        args,
        {
            "d": args.d,
            "v": str(v),
            "w": str(w),
            "method": args.method,
            "multiplicity": str(value),
            "dimension": cx.dimension,
        },
    )
    return 0


def cmd_paths(args) -> int:
    v, w = _parse_vw(args)
    if args.count_only:
        _emit_json(
            args,
            {
                "d": args.d,
                "v": str(v),
                "w": str(w),
                "count": str(pth.count_path_systems(v, w)),
            },
        )
        return 0
    systems = pth.enumerate_path_systems(v, w)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(pth.render_svg(v, w, systems))
        sys.stdout.write(f"{len(systems)} systems written to {args.svg}\n")
    elif args.ascii:
        blocks = [pth.render_ascii(v, w, s) for s in systems] or [
            pth.render_ascii(v, w, None)
        ]
        _emit(args, "\n".join(blocks))
    else:
        payload = {
            "d": args.d,
            "v": str(v),
            "w": str(w),
            "count": str(len(systems)),
            "systems": [
                {f"{r},{c}": [list(p) for p in path] for (r, c), path in sorted(s.items())}
                for s in systems
            ],
        }
        _emit_json(args, payload)
    return 0


def cmd_smt_count(args) -> int:
    v, w = _parse_vw(args)
    values = smt.count_vector(v, w, args.max_degree)
    _emit_json(
        args,
        {"d": args.d, "v": str(v), "w": str(w), "values": [str(x) for x in values]},
    )
    return 0


def cmd_grobner(args) -> int:
    v, w = _parse_vw(args)
    order = grb.TermOrder(VGrid(v), args.order, args.scheme)
    report = grb.certify(v, w, order, max_degree=args.max_degree)
    _emit_json(args, report.to_json())
    return 0


# ---------------------------------------------------------------------------
# verification sweep


def _pool_size() -> int:
    raw = os.environ.get("SYMPGRASS_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return max(1, n) if n else min(4, os.cpu_count() or 1)


def _pairs(d: int):
    iso = enumerate_isotropic(d)
    return [(v, w) for v in iso for w in iso if v.leq(w)]


def _suite_tmain(config) -> dict:
    items = []
    for d in range(1, min(config["max_d"], 3) + 1):
        for v, w in _pairs(d):
            for m in range(config["max_degree"] + 1):
                items.append((d, v, w, m))
    rng = random.Random(config["seed"])
    if config["max_d"] >= 4:
        pairs4 = _pairs(4)
        for v, w in rng.sample(pairs4, min(20, len(pairs4))):
            for m in range(min(4, config["max_degree"]) + 1):
                items.append((4, v, w, m))

    def run(item):
        d, v, w, m = item
        a = hb.hilbert_value(v, w, m)
        b = smt.count_standard_monomials(v, w, m)
        return {
            "d": d,
            "v": str(v),
            "w": str(w),
            "m": m,
            "hilbert": str(a),
            "smt": str(b),
            "ok": a == b,
        }

    with ThreadPoolExecutor(max_workers=_pool_size()) as ex:
        instances = list(ex.map(run, items))
    return {"instances": instances, "ok": all(x["ok"] for x in instances)}


def _suite_mult(config) -> dict:
    items = []
    for d in range(1, min(config["max_d"], 4) + 1):
        items.extend((d, v, w) for v, w in _pairs(d))

    def run(item):
        d, v, w = item
        cx = hb.dominated_complex(v, w)
        a = cx.multiplicity
        b = pth.count_path_systems(v, w)
        entry = {
            "d": d,
            "v": str(v),
            "w": str(w),
            "squarefree": str(a),
            "paths": str(b),
            "ok": a == b,
        }
        if cx.dimension <= 4:
            c = hb.multiplicity_from_hilbert_polynomial(cx)
            entry["hseries"] = str(c)
            entry["ok"] = entry["ok"] and a == c
        return entry

    with ThreadPoolExecutor(max_workers=_pool_size()) as ex:
        instances = list(ex.map(run, items))
    return {"instances": instances, "ok": all(x["ok"] for x in instances)}


_PASSING_ORDERS = (
    (1, "lex"),
    (2, "lex"),
    (7, "lex"),
    (8, "lex"),
    (4, "revlex"),
    (6, "revlex"),
)


def _suite_grobner(config) -> dict:
    items = []
    for d in range(2, min(config["max_d"], 3) + 1):
        items.extend((d, v, w) for v, w in _pairs(d))

    def run(item):
        d, v, w = item
        cx = hb.dominated_complex(v, w)
        entry = {"d": d, "v": str(v), "w": str(w), "orders": {}, "ok": True}
        for idx, scheme in _PASSING_ORDERS:
            order = grb.TermOrder(VGrid(v), idx, scheme)
            rep = grb.certify(
                v, w, order, max_degree=min(4, config["max_degree"]), complex_=cx
            )
            entry["orders"][f"{idx}-{scheme}"] = rep.ok
            entry["ok"] = entry["ok"] and rep.ok
        return entry

    with ThreadPoolExecutor(max_workers=_pool_size()) as ex:
        instances = list(ex.map(run, items))
    witness = grb.find_initial_term_violation(3, "revlex", max_d=min(config["max_d"], 4))
    return {
        "instances": instances,
        "revlex3_witness": witness,
        "ok": all(x["ok"] for x in instances) and witness is not None,
    }


def _suite_paper_examples(config) -> dict:
    checks = []

    v5 = IndexSet(10, (1, 2, 3, 6, 7))
    w5 = IndexSet(10, (3, 5, 7, 9, 10))
    got = monw_points(v5, w5)
    checks.append(
        {
            "name": "d5-monw",
            "got": [list(p) for p in got],
            "expected": [[5, 2], [9, 6], [10, 1]],
            "ok": set(got) == {(5, 2), (9, 6), (10, 1)},
        }
    )
    mult_sq = hb.multiplicity(v5, w5)
    mult_paths = pth.count_path_systems(v5, w5)
    checks.append(
        {
            "name": "d5-multiplicity",
            "got": [str(mult_sq), str(mult_paths)],
            "expected": ["10", "10"],
            "ok": mult_sq == 10 and mult_paths == 10,
        }
    )

    v23 = IndexSet(
        46,
        (1, 2, 3, 4, 5, 11, 12, 13, 14, 19, 20, 22, 23, 26, 29, 30, 31, 32, 37, 38, 39, 40, 41),
    )
    w23 = IndexSet(
        46,
        (4, 5, 9, 10, 14, 17, 18, 21, 23, 25, 27, 28, 31, 32, 34, 35, 36, 39, 40, 41, 44, 45, 46),
    )
    expected23 = {
        (9, 3), (10, 2), (17, 13), (18, 12), (21, 20), (25, 22), (27, 26),
        (28, 19), (34, 30), (35, 29), (36, 11), (44, 38), (45, 37), (46, 1),
    }
    got23 = set(monw_points(v23, w23))
    checks.append({"name": "d23-monw", "ok": got23 == expected23})

    checks.append(
        {"name": "d4-admissible-42", "ok": len(smt.enumerate_admissible_pairs(4)) == 42}
    )
    from .poset import enumerate_index_sets

    orbits = {frozenset((u.entries, u.sharp().entries)) for u in enumerate_index_sets(4, 8)}
    checks.append({"name": "d4-orbits-43", "ok": len(orbits) == 43})

    try:
        smt.theta_to_pair(IndexSet(8, (2, 3, 6, 7)), IndexSet(8, (1, 4, 5, 8)))
        checks.append({"name": "d4-recovery-incomparable", "ok": False})
    except smt.NotAdmissibleError as e:
        checks.append(
            {
                "name": "d4-recovery-incomparable",
                "ok": e.x.entries == (2, 3, 5, 8) and e.y.entries == (1, 4, 6, 7),
            }
        )

    from .plucker import minor

    eps4 = IndexSet(8, (1, 2, 3, 4))
    f1 = minor(eps4, IndexSet(8, (1, 2, 7, 8)))
    f2 = minor(eps4, IndexSet(8, (1, 4, 5, 8)))
    f3 = minor(eps4, IndexSet(8, (1, 3, 6, 8)))
    checks.append({"name": "d4-minor-sum-zero", "ok": (f1 + f2 + f3).is_zero()})
    checks.append(
        {"name": "d4-minor-mirror", "ok": f1 == minor(eps4, IndexSet(8, (1, 2, 7, 8)).sharp())}
    )
    return {"instances": checks, "ok": all(c["ok"] for c in checks)}


def _suite_trivial(config) -> dict:
    from math import comb

    checks = []
    for d in range(1, min(config["max_d"], 4) + 1):
        for v in enumerate_isotropic(d):
            cx = hb.dominated_complex(v, v)
            N = len(VGrid(v).roots) - len(VGrid(v).pos)
            ok = cx.multiplicity == 1 and cx.dimension == N
            for m in range(min(5, config["max_degree"]) + 1):
                expected = 1 if m == 0 else (comb(N + m - 1, m) if N else 0)
                ok = ok and cx.hilbert_value(m) == expected
            checks.append({"d": d, "v": str(v), "ok": ok})
    v1, w1 = IndexSet(2, (1,)), IndexSet(2, (2,))
    checks.append(
        {
            "d": 1,
            "v": "1",
            "w": "2",
            "ok": hb.hilbert_vector(v1, w1, 4) == [1, 1, 1, 1, 1],
        }
    )
    return {"instances": checks, "ok": all(c["ok"] for c in checks)}


_SUITES = {
    "tmain": _suite_tmain,
    "mult": _suite_mult,
    "grobner": _suite_grobner,
    "paper-examples": _suite_paper_examples,
    "trivial": _suite_trivial,
}


def _load_corpus() -> dict:
    ref = resources.files("sympgrass").joinpath("data/regression_corpus.json")
    with ref.open() as fh:
        return json.load(fh)


def _regression_diff(config) -> dict:
    corpus = _load_corpus()
    diffs = []
    for key, expected in corpus["hilbert"].items():
        dstr, vstr, wstr, mstr = key.split(";")
        d, m = int(dstr), int(mstr)
        v = parse_index_set(vstr, 2 * d)
        w = parse_index_set(wstr, 2 * d)
        got = str(hb.hilbert_value(v, w, m))
        if got != expected:
            diffs.append({"key": key, "expected": expected, "got": got})
    for key, expected in corpus["multiplicity"].items():
        dstr, vstr, wstr = key.split(";")
        d = int(dstr)
        v = parse_index_set(vstr, 2 * d)
        w = parse_index_set(wstr, 2 * d)
        got = str(hb.multiplicity(v, w))
        if got != expected:
            diffs.append({"key": key, "expected": expected, "got": got})
    return {"schema": corpus["schema"], "diffs": diffs, "ok": not diffs}


def verify_sweep(config: dict) -> dict:
    report = {"schema": SCHEMA, "config": config, "suites": {}, "ok": True}
    for name in config["suites"]:
        t0 = time.perf_counter()
        result = _SUITES[name](config)
        result["seconds"] = round(time.perf_counter() - t0, 3)
        report["suites"][name] = result
        report["ok"] = report["ok"] and result["ok"]
    if config.get("regression", True):
        reg = _regression_diff(config)
        report["regression"] = reg
        report["ok"] = report["ok"] and reg["ok"]
    return report


def cmd_verify(args) -> int:
    suites = args.suites.split(",") if args.suites else list(_SUITES)
    unknown = [s for s in suites if s not in _SUITES]
    if unknown:
        raise InputError(f"unknown suites {unknown}; available: {sorted(_SUITES)}")
    config = {
        "max_d": args.max_d,
        "max_degree": args.max_degree,
        "seed": args.seed,
        "suites": suites,
        "regression": not args.no_regression,
    }
    report = verify_sweep(config)
    _emit_json(args, report)
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# argument parsing


def _add_vw(p: argparse.ArgumentParser):
    p.add_argument("--d", type=int, required=True, help="half rank d (ambient size 2d)")
    p.add_argument("--v", required=True, help="base point, e.g. 1,2,3,6,7")
    p.add_argument("--w", required=True, help="Schubert index, componentwise >= v")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sympgrass",
        description=(
            "Exact Hilbert functions and multiplicities of tangent cones of "
            "Schubert varieties in the symplectic Grassmannian"
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", help="list isotropic index sets or inspect one")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--u", help="index set to inspect")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("monw", help="canonical monomial of a pair v <= w")
    _add_vw(p)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_monw)

    p = sub.add_parser("hilbert", help="Hilbert function values 0..M")
    _add_vw(p)
    p.add_argument("--max-degree", type=int, default=5)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", default=True)
    group.add_argument("--csv", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("mult", help="multiplicity of the tangent cone")
    _add_vw(p)
    p.add_argument(
        "--method", choices=("squarefree", "paths", "hseries"), default="squarefree"
    )
    p.add_argument("--out")
    p.set_defaults(fn=cmd_mult)

    p = sub.add_parser("paths", help="symmetric nonintersecting path systems")
    _add_vw(p)
    p.add_argument("--svg", help="write an SVG of all systems to this file")
    p.add_argument("--ascii", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_paths)

    p = sub.add_parser("smt-count", help="standard tableau counts 0..M")
    _add_vw(p)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_smt_count)

    p = sub.add_parser("grobner", help="initial-term certification report")
    _add_vw(p)
    p.add_argument("--order", type=int, choices=range(1, 9), required=True)
    p.add_argument("--scheme", choices=("lex", "revlex"), required=True)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_grobner)

    p = sub.add_parser("verify", help="run the verification sweep")
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--seed", type=int, default=20240901)
    p.add_argument("--suites", help="comma separated subset of suites")
    p.add_argument("--no-regression", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except AssertionError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
