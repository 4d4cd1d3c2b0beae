#!/usr/bin/env python3
"""Regenerate data/synthetic_weekly.csv.

Ten years of Friday observations of a housing-style price index: slow
multi-year drift regimes, mild annual seasonality and weekly noise, all from
a fixed seed so the file is reproducible. Values use the canonical 6-decimal
formatting, so ingest -> serialize round-trips the file byte-for-byte.

Usage: python3 tools/gen_synthetic_dataset.py  (from the repository root)
"""

import math
import random
from datetime import date, timedelta

SEED = 20240811
N_WEEKS = 520
START = date(2014, 1, 3)  # a Friday
OUT = "data/synthetic_weekly.csv"


def main() -> None:
    rng = random.Random(SEED)
    log_price = math.log(262_000.0)
    day = START
    rows = []
    for week in range(N_WEEKS):
        regime = math.sin(2.0 * math.pi * week / 104.0)  # ~2-year cycle
        drift = 0.0020 * regime + 0.0003
        year_pos = (day.timetuple().tm_yday - 1) / 365.0
        seasonal = 0.0005 * math.sin(2.0 * math.pi * (year_pos - 0.22))
        shock = rng.gauss(0.0, 0.005)
        log_price += drift + seasonal + shock
        rows.append((day, math.exp(log_price)))
        day += timedelta(days=7)

    with open(OUT, "w", newline="") as f:
        f.write("date,value\n")
        for d, v in rows:
            f.write(f"{d.isoformat()},{v:.6f}\n")
    print(f"wrote {OUT} ({len(rows)} rows, {rows[0][0]} .. {rows[-1][0]})")


if __name__ == "__main__":
    main()
