"""Regenerate the comparison artifacts: scaled table, spider charts, curves.

Writes everything under an output directory (default ./artifacts).
"""

import argparse
from pathlib import Path

from dbcompare import generate_instances
from dbcompare.charts import (emit_resistance_curves, emit_spider,
                              resistance_series, series_to_csv)
from dbcompare.pareto import MafiaBound
from dbcompare.reporting import emit_table

BOUNDS = ["2^-1", "2^-16", "2^-32", "2^-64", "2^-96", "2^-128"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="artifacts")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    instances = generate_instances()
    by_id = {i.id: i for i in instances}
    bounds = [MafiaBound.parse(b) for b in BOUNDS]

    (out / "comparison_table.txt").write_text(
        emit_table(instances, bounds, fmt="text"))
    (out / "comparison_table.csv").write_text(
        emit_table(instances, bounds, fmt="csv"))
    (out / "comparison_table.json").write_text(
        emit_table(instances, bounds, fmt="json"))

    (out / "spider-bc16-tree16_8.svg").write_text(
        emit_spider([by_id["BC-{16}"], by_id["Tree-{16,8}"]]))
    (out / "spider-swissknife128-ski64_2.svg").write_text(
        emit_spider([by_id["SwissKnife-{128}"], by_id["SKI-{64,2}"]],
                    normalization=by_id["BC-{128}"]))
    (out / "spider-tree128-poulidor128-tma128.svg").write_text(
        emit_spider([by_id["Tree-{128,8}"], by_id["Poulidor-{128}"],
                     by_id["TMA-{128}"]]))

    for fraud in ("mafia", "distance", "terrorist"):
        series = resistance_series(instances, fraud)
        (out / f"curves-{fraud}.csv").write_text(series_to_csv(series))
        (out / f"curves-{fraud}.svg").write_text(
            emit_resistance_curves(instances, fraud))

    print(f"wrote artifacts to {out}/")


if __name__ == "__main__":
    main()
