#!/usr/bin/env python3
"""Regenerate the synthetic 4-asset fixture under data/fixture/.

The fixture is deterministic (fixed seed) and mimics the shape of the real
dataset: a crypto asset trading 7 days a week, three traditional assets
trading weekdays only, and a correlation regime change on 2024-01-10.
Committed output should only change if this script changes.
"""

import csv
import datetime as dt
import os

import numpy as np

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "fixture")
START = dt.date(2023, 8, 1)
END = dt.date(2024, 4, 30)
EVENT = dt.date(2024, 1, 10)

ASSETS = [
    # id, weekend trading, P0, drift pre/post, garch (omega, alpha, beta)
    ("BTC", True, 26000.0, -0.0005, 0.0020, (7.20e-05, 0.12, 0.80)),
    ("SPX", False, 4300.0, -0.0002, 0.0008, (4.00e-06, 0.08, 0.88)),
    ("GOLD", False, 1900.0, -0.0003, 0.0006, (3.24e-06, 0.06, 0.90)),
    ("DXY", False, 103.0, 0.0001, -0.0001, (6.10e-07, 0.05, 0.90)),
]


def corr_matrix(btc_spx, btc_gold, btc_dxy):
    r = np.eye(4)
    pairs = {(0, 1): btc_spx, (0, 2): btc_gold, (0, 3): btc_dxy,
             (1, 2): 0.20, (1, 3): -0.30, (2, 3): -0.25}
    for (i, j), v in pairs.items():
        r[i, j] = r[j, i] = v
    assert np.all(np.linalg.eigvalsh(r) > 0)
    return r


def main():
    rng = np.random.RandomState(20230801)
    chol_pre = np.linalg.cholesky(corr_matrix(0.10, 0.30, -0.20))
    chol_post = np.linalg.cholesky(corr_matrix(0.65, 0.00, -0.45))

    days = []
    d = START
    while d <= END:
        days.append(d)
        d += dt.timedelta(days=1)

    prices = {a[0]: [] for a in ASSETS}
    last_close = {a[0]: a[2] for a in ASSETS}
    h = {a[0]: a[5][0] / (1.0 - a[5][1] - a[5][2]) for a in ASSETS}
    last_eps = {a[0]: 0.0 for a in ASSETS}

    for day in days:
        z = (chol_pre if day < EVENT else chol_post) @ rng.standard_normal(4)
        for k, (aid, weekends, _, drift_pre, drift_post, (om, al, be)) in enumerate(ASSETS):
            if day.weekday() >= 5 and not weekends:
                continue
            h[aid] = om + al * last_eps[aid] ** 2 + be * h[aid]
            eps = np.sqrt(h[aid]) * z[k]
            last_eps[aid] = eps
            drift = drift_pre if day < EVENT else drift_post
            close = last_close[aid] * np.exp(drift + eps)
            o = last_close[aid]
            hi = max(o, close) * (1.0 + 0.3 * abs(rng.standard_normal()) * np.sqrt(h[aid]))
            lo = min(o, close) * (1.0 - 0.3 * abs(rng.standard_normal()) * np.sqrt(h[aid]))
            vol = int(1e5 * (1.0 + abs(rng.standard_normal())))
            prices[aid].append((day, o, hi, lo, close, close, vol))
            last_close[aid] = close

    os.makedirs(OUT, exist_ok=True)
    for aid, *_ in [a for a in ASSETS]:
        path = os.path.join(OUT, f"{aid.lower()}.csv")
        with open(path, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["Date", "Open", "High", "Low", "Close", "Adj Close", "Volume"])
            for day, o, hi, lo, c, ac, v in prices[aid]:
                w.writerow([day.isoformat(), f"{o:.4f}", f"{hi:.4f}", f"{lo:.4f}",
                            f"{c:.4f}", f"{ac:.4f}", v])
        print(f"wrote {path} ({len(prices[aid])} rows)")


if __name__ == "__main__":
    main()
