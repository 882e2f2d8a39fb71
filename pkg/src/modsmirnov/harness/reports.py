"""JSON and CSV serialization of campaign reports.

JSON output is canonical (sorted keys, fixed separators, ``repr`` floats) so
identical runs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .campaign import CampaignReport

CSV_COLUMNS = ("entry", "seed_offset", "n", "a", "alpha", "beta", "R", "z",
               "lhs", "rhs", "slack", "pass")


def to_json(report: CampaignReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_json(report: CampaignReport, path: str | Path) -> None:
    Path(path).write_text(to_json(report), encoding="utf-8")


def _cplx(v: list[float]) -> str:
    return f"{v[0]!r}{'+' if v[1] >= 0 else '-'}{abs(v[1])!r}j"


def to_csv(report: CampaignReport) -> str:
    """One row per recorded trial (needs ``record_trials`` in the config)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for er in report.entries:
        for t in er.rows:
            inst, v = t["instance"], t["verdict"]
            w.writerow([er.entry, t["trial"], inst["n"], _cplx(inst["a"]), _cplx(inst["alpha"]),
                        _cplx(inst["beta"]), repr(inst["R"]), _cplx(inst["z"]),
                        repr(v["lhs"]), repr(v["rhs"]), repr(v["slack"]), int(v["pass"])])
    return buf.getvalue()


def write_csv(report: CampaignReport, path: str | Path) -> None:
    Path(path).write_text(to_csv(report), encoding="utf-8")


def load_config(path: str | Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))
