"""
core/analytics.py

Summaries of the run log:
- how often each quantity was computed
- elapsed time per method (mean / max, ms)
- latest value of every quantity per graph
"""

from typing import Dict, List

import pandas as pd

from core.storage import FIELDNAMES


def runs_frame(rows: List[Dict]) -> pd.DataFrame:
    """Typed DataFrame of run-log rows (empty rows give an empty frame with the schema)."""
    df = pd.DataFrame(rows, columns=FIELDNAMES)
    df["timestamp"] = pd.to_datetime(df["timestamp"], errors="coerce")
    for col in ("n", "m"):
        df[col] = pd.to_numeric(df[col], errors="coerce").fillna(0).astype(int)
    df["elapsed_ms"] = pd.to_numeric(df["elapsed_ms"], errors="coerce").fillna(0.0)
    df["method"] = df["method"].fillna("").astype(str)
    df["value"] = df["value"].astype(str)
    return df


def summarize_runs(rows: List[Dict]) -> Dict[str, pd.DataFrame]:
    df = runs_frame(rows)
    if df.empty:
        return {}

    counts = df.groupby("quantity").size().reset_index(name="runs").sort_values("runs", ascending=False)

    timing = (
        df.assign(method=df["method"].replace("", "-"))
        .groupby(["quantity", "method"])["elapsed_ms"]
        .agg(["count", "mean", "max"])
        .reset_index()
        .round(3)
    )

    latest = (
        df.sort_values("timestamp", kind="stable")
        .groupby(["graph", "quantity"])
        .tail(1)
        .pivot(index="graph", columns="quantity", values="value")
        .reset_index()
    )
    sizes = df.drop_duplicates("graph")[["graph", "n", "m"]]
    latest = sizes.merge(latest, on="graph").sort_values(["n", "graph"]).reset_index(drop=True)

    return {"counts": counts.reset_index(drop=True), "timing": timing, "latest": latest}


def render_summary(summary: Dict[str, pd.DataFrame]) -> str:
    if not summary:
        return "No runs logged yet."
    parts = []
    for title, frame in summary.items():
        parts.append(f"== {title} ==")
        parts.append(frame.to_string(index=False))
    return "\n".join(parts)
