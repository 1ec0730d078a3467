#!/usr/bin/env python3
"""Stand-alone reference for the ranking pipeline.

Reads a box-score CSV and prints, as JSON, the tuned thresholds and the
positive/negative/net flows for one profile and scenario. Shares no code with
the C++ engine; every step is written directly from the formulas.
"""
import csv
import itertools
import json
import math
import sys

RANKED = ["PtsM", "DRM", "ORM", "EPts", "ASTM", "PCSpct"]


def indices(r):
    m = r["Min"]
    out = {}
    out["PtsM"] = r["Pts"] / m
    out["DRM"] = (r["DRB"] + r["STL"] + r["BLK"] - r["PF"]) / m
    pos = 2 * r["P2"] + 3 * r["P3"] + r["FT"] + r["ORB"] + r["AST"] + r["PFR"]
    neg = (r["FGA"] - r["FG"]) + (r["FTA"] - r["FT"]) + r["TOV"] + r["BLKR"]
    out["ORM"] = pos / m - neg / m
    den = 2 * r["P2A"] + 3 * r["P3A"] + r["FTA"]
    out["EPts"] = 0.0 if den == 0 else r["Pts"] / den * 100
    out["ASTM"] = (r["AST"] + r["STL"]) / (max(r["TOV"], 1.0) * m)
    pc = r["FGA"] + r["PFR"] + r["AST"] + r["TOV"]
    out["PCSpct"] = 0.0 if pc == 0 else (r["FG"] + r["PFR"] + r["AST"]) / pc * 100
    return out


def quantile(values, z):
    v = sorted(values)
    h = (len(v) - 1) * z / 100.0
    lo = math.floor(h)
    if lo + 1 >= len(v):
        return v[-1]
    return v[lo] + (h - lo) * (v[lo + 1] - v[lo])


def vshape_indiff(d, q, p):
    if d <= q:
        return 0.0
    if d > p:
        return 1.0
    return (d - q) / (p - q)


def weights_for(position, scenario):
    if scenario == 1 or position == "F":
        return {k: 1.0 / 6 for k in RANKED}
    boosted = {"PG": ("EPts", "ASTM"), "SG": ("EPts", "ASTM"),
               "PF": ("DRM", "ASTM"), "C": ("DRM", "ASTM")}[position]
    return {k: (0.4 if k in boosted else 0.05) for k in RANKED}


def main():
    path, profile, scenario = sys.argv[1], sys.argv[2], int(sys.argv[3])
    alpha, beta = 25.0, 75.0
    rows = []
    with open(path, newline="") as f:
        for rec in csv.DictReader(f):
            r = {k: (v if k in ("player_id", "position") else float(v)) for k, v in rec.items()}
            if r["games"] >= 10 and r["Min"] / r["games"] >= 10 and r["position"] == profile:
                rows.append(r)
    names = [r["player_id"] for r in rows]
    vals = [indices(r) for r in rows]
    n = len(rows)
    thr = {}
    for k in RANKED:
        diffs = [abs(vals[i][k] - vals[j][k]) for i, j in itertools.combinations(range(n), 2)]
        thr[k] = (quantile(diffs, alpha), quantile(diffs, beta))
    w = weights_for(profile, scenario)
    P = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                P[i][j] = sum(w[k] * vshape_indiff(vals[i][k] - vals[j][k], *thr[k]) for k in RANKED)
    out = {"profile": profile, "scenario": scenario,
           "thresholds": {k: {"q": thr[k][0], "p": thr[k][1]} for k in RANKED},
           "flows": []}
    for i in range(n):
        plus = sum(P[i]) / (n - 1)
        minus = sum(P[j][i] for j in range(n)) / (n - 1)
        out["flows"].append({"player": names[i], "phi_plus": plus,
                             "phi_minus": minus, "phi": plus - minus})
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
