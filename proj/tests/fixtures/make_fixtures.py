"""Regenerates the CSV fixtures. Output is deterministic."""

import datetime as dt
import pathlib

import numpy as np

HERE = pathlib.Path(__file__).parent


def max_temp_2011():
    # 365 days of synthetic forecast/observed maxima; 18 days have a missing
    # cell, leaving 347 usable rows. Errors are a mildly autocorrelated
    # heavy-tailed series on a 0.1 degree grid.
    rng = np.random.default_rng(2011)
    days = [dt.date(2011, 1, 1) + dt.timedelta(days=i) for i in range(365)]
    z = rng.standard_normal(365)
    shocks = np.sign(z) * np.abs(1.3 * z) ** (11 / 9)
    err = np.empty(365)
    err[0] = shocks[0]
    for t in range(1, 365):
        err[t] = 0.35 * err[t - 1] + 0.94 * shocks[t]
    season = 17.0 + 8.0 * np.sin(2 * np.pi * (np.arange(365) - 105) / 365)
    observed = np.round(season + rng.normal(0, 2.5, 365), 1)
    forecast = np.round(observed + err, 1)

    # 2011-03-01 (index 59) keeps a fixed example row; 2011-03-02 lacks a forecast
    pool = np.setdiff1d(np.arange(365), [59, 60])
    missing = set(rng.choice(pool, size=17, replace=False).tolist()) | {60}
    lines = ["date,forecast,observed"]
    for i, d in enumerate(days):
        f, o = f"{forecast[i]:.1f}", f"{observed[i]:.1f}"
        if i == 59:
            f, o = "18.2", "17.5"
        if i == 60:
            f, o = "", "17.0"
        elif i in missing:
            if rng.random() < 0.5:
                f = ""
            else:
                o = ""
        lines.append(f"{d.isoformat()},{f},{o}")
    (HERE / "max_temp_2011.csv").write_text("\n".join(lines) + "\n")


def small_files():
    (HERE / "errors_only.csv").write_text(
        "error\n0.7\n-1.2\n0.3\n2.1\n-0.4\n0.0\n1.1\n-2.3\n0.6\n-0.7\n"
    )
    (HERE / "bad_cell.csv").write_text(
        "date,forecast,observed\n2011-01-01,10.0,9.5\n2011-01-02,11.0,abc\n2011-01-03,12.0,12.5\n"
    )
    (HERE / "all_missing.csv").write_text(
        "date,forecast,observed\n2011-01-01,,9.5\n2011-01-02,11.0,\n"
    )
    (HERE / "constant.csv").write_text("error\n" + "0.5\n" * 40)


if __name__ == "__main__":
    max_temp_2011()
    small_files()
