"""Reproduction report: exact counts, growth rates and rates next to the
published values they are compared with."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

from . import engine
from .construction_one import asymptotic_rate

# published values, kept verbatim for comparison
PUBLISHED_RHO = {3: 1.5515, 5: 1.6980, 7: 1.7698, 9: 1.8131, 11: 1.8423}
PUBLISHED_F0_ELL4 = {
    4: ["1000", "1001"],
    5: ["10000", "10001", "10010"],
    6: ["100001", "100010", "100100"],
    7: ["1000010", "1000100", "1001000", "1001001"],
}
PUBLISHED_F_ELL4 = {
    7: ["0000100", "0001000", "0001001", "0010000", "0010001", "0010010", "0100001",
        "0100010", "0100100", "1000010", "1000100", "1001000", "1001001"],
    8: ["00001000", "00001001", "00010000", "00010001", "00010010", "00100001",
        "00100010", "00100100", "01000010", "01000100", "01001000", "01001001",
        "10000100", "10001000", "10001001", "10010000", "10010001", "10010010"],
}
PUBLISHED_LOG2_F4_100 = 43
PUBLISHED_ROOT_ELL4 = 1.3247
PUBLISHED_RATE_CL4 = 1.4057
PUBLISHED_RATE_C1 = 1.3206

RHO_TOL = 0.002
RATE_TOL = 0.002


def _words(spec, n):
    return ["".join(map(str, w)) for w in engine.enumerate_words(spec, n)]


def listing_rows(spec, published: dict) -> dict:
    out = {}
    for n, pub in published.items():
        words = _words(spec, n)
        out[n] = {"count": len(words), "words": words, "published": pub, "match": words == pub}
    return out


def dominant_growth(n_hi: int = 400) -> list[dict]:
    rows = []
    for m, pub in PUBLISHED_RHO.items():
        g = engine.growth_rate(engine.s0_spec(m), m, n_hi)
        one_plus = 1 + math.log2(g)
        rows.append({
            "m": m, "n": n_hi, "growth_rate": g, "one_plus_log2": one_plus,
            "published": pub,
            "matches_one_plus_log2": abs(one_plus - pub) <= RHO_TOL,
            "matches_raw_growth": abs(g - pub) <= RHO_TOL,
        })
    return rows


def build_report(n_growth: int = 400) -> dict:
    f4 = engine.f_spec(4)
    f0 = engine.f0_spec(4)
    big = engine.count(f4, 100)
    root = engine.polynomial_root(4)
    g_f = engine.growth_rate(f4, 10, 200)
    c1_rate = asymptotic_rate(3, 4, 11, n_growth)
    report = {
        "f0_ell4": listing_rows(f0, PUBLISHED_F0_ELL4),
        "f_ell4": listing_rows(f4, PUBLISHED_F_ELL4),
        "f_ell4_n100": {
            "count": str(big), "log2_count": math.log2(big),
            "published_log2": PUBLISHED_LOG2_F4_100,
            "within_one_bit": abs(math.log2(big) - PUBLISHED_LOG2_F4_100) < 1,
            "note": "published value matches the (ell+1)*rho^n approximation, "
                    f"log2(5*rho^100) = {math.log2(5) + 100 * math.log2(root):.3f}",
        },
        "dominant_growth": dominant_growth(n_growth),
        "ell4_example": {
            "root": root, "published_root": PUBLISHED_ROOT_ELL4,
            "one_plus_log2_root": 1 + math.log2(root), "published_rate": PUBLISHED_RATE_CL4,
            "growth_f_n200": g_f,
        },
        "construction_one_rate": {
            "m": 3, "ell": 4, "n": 11, "rate": c1_rate, "published": PUBLISHED_RATE_C1,
        },
    }
    dg = report["dominant_growth"]
    report["checks"] = {
        "f0_listing": all(r["match"] for r in report["f0_ell4"].values()),
        "f_listing": all(r["match"] for r in report["f_ell4"].values()),
        "f_n100_log2": report["f_ell4_n100"]["within_one_bit"],
        "root_ell4": abs(root - PUBLISHED_ROOT_ELL4) <= 1e-4 and abs(g_f - root) <= 1e-3,
        "rate_ell4": abs(1 + math.log2(root) - PUBLISHED_RATE_CL4) <= 1e-4,
        "dominant_growth_one_plus_log2": all(r["matches_one_plus_log2"] for r in dg),
        "construction_one_rate": abs(c1_rate - PUBLISHED_RATE_C1) <= RATE_TOL,
    }
    report["warnings"] = [
        f"m={r['m']}: raw growth rate {r['growth_rate']:.4f} matches the published value"
        for r in dg if r["matches_raw_growth"]
    ]
    return report


def write_outputs(report: dict, out_dir: Path, n_growth: int = 400) -> list[Path]:
    """JSON, CSV tables and figures into ``out_dir``."""
    from .plotting import plot_growth_convergence, plot_rates

    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    p = out_dir / "tables.json"
    p.write_text(json.dumps(report, indent=2, default=str))
    written.append(p)

    p = out_dir / "dominant_growth.csv"
    with p.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["m", "n", "growth_rate", "one_plus_log2", "published"])
        for r in report["dominant_growth"]:
            w.writerow([r["m"], r["n"], f"{r['growth_rate']:.6f}", f"{r['one_plus_log2']:.6f}",
                        r["published"]])
    written.append(p)

    p = out_dir / "f_listings.csv"
    with p.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["set", "n", "count", "word"])
        for name in ("f0_ell4", "f_ell4"):
            for n, row in report[name].items():
                for word in row["words"]:
                    w.writerow([name, n, row["count"], word])
    written.append(p)

    series = {f"S0(m={m})": engine.growth_sequence(engine.s0_spec(m), m, n_growth)
              for m in PUBLISHED_RHO}
    series["f(ell=4)"] = engine.growth_sequence(engine.f_spec(4), 5, n_growth)
    ref = {f"S0(m={r['m']})": r["growth_rate"] for r in report["dominant_growth"]}
    ref["f(ell=4)"] = report["ell4_example"]["root"]
    p = out_dir / "growth_convergence.png"
    plot_growth_convergence(series, p, ref)
    written.append(p)

    curves = {}
    for ell in (3, 4, 5):
        spec = engine.f_spec(ell)
        curves[f"C(ell={ell})"] = [
            (n, (n - 1) / n + math.log2(engine.count(spec, n)) / n) for n in range(8, n_growth + 1, 4)
        ]
    targets = {f"1+log2(rho), ell={ell}": 1 + math.log2(engine.polynomial_root(ell)) for ell in (3, 4, 5)}
    p = out_dir / "cl_eps_rate.png"
    plot_rates(curves, p, targets)
    written.append(p)
    return written
