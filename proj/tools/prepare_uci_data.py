#!/usr/bin/env python3
"""Regenerate data/uci/{iris,wine,glass}.csv.

The benchmark copies come from the KEEL repository distribution bundled in
the `keel-ds` wheel (pip download keel-ds --no-deps). Glass is only shipped
there as one-vs-rest splits, so the six-class labelling is rebuilt by
matching rows across the splits; rows positive in none of them are the
vehicle_windows_float class. Every feature is min-max scaled to [0, 1].

Usage: prepare_uci_data.py <path-to-keel_ds-wheel> <out-dir>
"""
import csv
import io
import sys
import zipfile

RAW = "keel_ds/data/{kind}/raw/{name}.dat"
GLASS_SPLITS = {"glass0": "1", "glass1": "2", "glass4": "5", "glass5": "6", "glass6": "7"}
GLASS_REST = "3"


def read_dat(zf, kind, name):
    text = zf.read(RAW.format(kind=kind, name=name)).decode()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("@"):
            continue
        fields = [f.strip() for f in line.split(",")]
        rows.append(([float(v) for v in fields[:-1]], fields[-1]))
    return rows


def minmax(rows):
    d = len(rows[0][0])
    lo = [min(r[0][j] for r in rows) for j in range(d)]
    hi = [max(r[0][j] for r in rows) for j in range(d)]
    out = []
    for x, y in rows:
        out.append(([(x[j] - lo[j]) / (hi[j] - lo[j]) if hi[j] > lo[j] else 0.0
                     for j in range(d)], y))
    return out


def glass(zf):
    base = read_dat(zf, "imbalanced", "glass0")
    labels = [None] * len(base)
    for split, cls in GLASS_SPLITS.items():
        rows = read_dat(zf, "imbalanced", split)
        assert [r[0] for r in rows] == [r[0] for r in base], split
        for i, (_, tag) in enumerate(rows):
            if tag == "positive":
                assert labels[i] in (None, cls)
                labels[i] = cls
    return [(x, lab or GLASS_REST) for (x, _), lab in zip(base, labels)]


def write(path, rows):
    d = len(rows[0][0])
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([f"f{j}" for j in range(d)] + ["label"])
        for x, y in rows:
            w.writerow([repr(v) for v in x] + [y])


def main():
    wheel, out = sys.argv[1], sys.argv[2]
    with zipfile.ZipFile(wheel) as zf:
        write(f"{out}/iris.csv", minmax(read_dat(zf, "balanced", "iris")))
        write(f"{out}/wine.csv", minmax(read_dat(zf, "balanced", "wine")))
        write(f"{out}/glass.csv", minmax(glass(zf)))


if __name__ == "__main__":
    main()
