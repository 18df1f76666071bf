"""Tabular summaries printed by the command line."""
from __future__ import annotations

from typing import Any, Dict, Iterable

import networkx as nx
import pandas as pd

from src.generators.gadget_poset import predict_gadget_poset_sizes
from src.poset.core import Poset, critical_pairs, incomparability_graph


def poset_stats(p: Poset) -> Dict[str, int]:
    return {
        "n": p.n,
        "comparable_pairs": p.strict_pair_count(),
        "width": p.width(),
        "height": p.height(),
        "critical_pairs": len(critical_pairs(p)),
        "incomparability_components": nx.number_connected_components(incomparability_graph(p).to_undirected()),
    }


def stats_frame(p: Poset) -> pd.DataFrame:
    stats = poset_stats(p)
    return pd.DataFrame({"statistic": list(stats), "value": list(stats.values())})


def size_frame(levels: Iterable[int]) -> pd.DataFrame:
    rows = []
    for k in levels:
        pred = predict_gadget_poset_sizes(k)
        rows.append({"k": pred.k, **{name: pred.shown(name) for name in ("r", "s", "copies", "vertices", "edges")}})
    return pd.DataFrame(rows).astype(object)


def render(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(no rows)"
    return frame.astype(object).where(frame.notna(), "-").to_string(index=False)


def frame_records(frame: pd.DataFrame) -> Any:
    return frame.astype(object).where(frame.notna(), None).to_dict(orient="records")


__all__ = ["frame_records", "poset_stats", "render", "size_frame", "stats_frame"]
