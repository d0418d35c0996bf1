#!/usr/bin/env python3
"""Render a `sweep` CSV (kappa, lambda_1, ...) as a standalone SVG line plot.

Usage: polybound sweep chain.json -o sweep.csv && tools/plot_sweep.py sweep.csv plot.svg
"""

import argparse
import csv
import sys

WIDTH, HEIGHT = 720, 480
MARGIN = 56
PALETTE = ["#1965b0", "#dc050c", "#4eb265", "#f7a800", "#882e72", "#777777"]


def read_sweep(path):
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    if len(rows) < 2:
        sys.exit(f"{path}: need a header and at least one data row")
    header, data = rows[0], rows[1:]
    kappas = [float(r[0]) for r in data]
    branches = [[float(r[c]) for r in data] for c in range(1, len(header))]
    return header[1:], kappas, branches


def scale(lo, hi, a, b):
    span = hi - lo if hi > lo else 1.0
    return lambda v: a + (v - lo) / span * (b - a)


def polyline(xs, ys, color):
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))
    return f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>'


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("csv_path")
    ap.add_argument("svg_path")
    args = ap.parse_args()

    names, kappas, branches = read_sweep(args.csv_path)
    lo = min(min(b) for b in branches)
    hi = max(max(b) for b in branches)
    pad = 0.05 * (hi - lo or 1.0)
    sx = scale(min(kappas), max(kappas), MARGIN, WIDTH - MARGIN)
    sy = scale(lo - pad, hi + pad, HEIGHT - MARGIN, MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        # frame
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
        f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="#333"/>',
    ]
    if lo - pad < 0.0 < hi + pad:
        y0 = sy(0.0)
        parts.append(
            f'<line x1="{MARGIN}" y1="{y0:.2f}" x2="{WIDTH - MARGIN}" y2="{y0:.2f}" '
            'stroke="#999" stroke-dasharray="4 3"/>'
        )
    for i, (name, ys) in enumerate(zip(names, branches)):
        color = PALETTE[i % len(PALETTE)]
        parts.append(polyline([sx(k) for k in kappas], [sy(v) for v in ys], color))
        parts.append(
            f'<text x="{WIDTH - MARGIN + 4}" y="{sy(ys[-1]):.2f}" fill="{color}">{name}</text>'
        )
    # axis labels: ends of each range
    parts += [
        f'<text x="{MARGIN}" y="{HEIGHT - MARGIN + 16}">{min(kappas):g}</text>',
        f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - MARGIN + 16}" text-anchor="end">{max(kappas):g}</text>',
        f'<text x="{WIDTH // 2}" y="{HEIGHT - 12}" text-anchor="middle">kappa</text>',
        f'<text x="{MARGIN - 6}" y="{sy(hi + pad) + 4:.2f}" text-anchor="end">{hi:.3g}</text>',
        f'<text x="{MARGIN - 6}" y="{sy(lo - pad) + 4:.2f}" text-anchor="end">{lo:.3g}</text>',
        "</svg>",
    ]
    with open(args.svg_path, "w") as fh:
        fh.write("\n".join(parts) + "\n")


if __name__ == "__main__":
    main()
