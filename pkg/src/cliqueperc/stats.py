"""Run instrumentation rendered as a flat key=value document or JSON."""

from __future__ import annotations

import json
from math import comb
from typing import Optional

from .percolation import PercResult

__all__ = ["as_dict", "report"]


def as_dict(result: PercResult, n_km1: Optional[int] = None) -> dict:
    """Stats document for a finished run.

    For relaxed runs the reduction-visit count is reported next to its
    per-k-clique prediction n_k * k * C(k-1, z); a prediction based on the
    number of (k-1)-cliques is added only when the caller supplies that
    count (it is not derivable from the run itself).
    """
    s = result.stats
    doc: dict = {"mode": result.mode, "k": result.k}
    if result.mode == "cpmz":
        doc["z"] = result.z
    doc.update(
        n_k=s.n_k,
        finds=s.finds,
        unions=s.unions,
        makesets=s.makesets,
        peak_keys=s.peak_keys,
        key_width=result.key_width,
        key_bytes_est=result.key_bytes_estimate,
    )
    if result.mode == "cpmz":
        doc["line8_execs"] = s.line8_execs
        doc["line8_pred_nk"] = s.n_k * result.k * comb(result.k - 1, result.z)
        if n_km1 is not None:
            doc["line8_pred_nkm1"] = n_km1 * result.k * comb(result.k - 1, result.z)
    doc["setz_mean"] = s.setz_mean
    doc["setz_max"] = s.setz_max
    doc["wall_time"] = s.wall_time
    return doc


def report(result: PercResult, n_km1: Optional[int] = None,
           json_format: bool = False) -> str:
    doc = as_dict(result, n_km1)
    if json_format:
        return json.dumps(doc, indent=2) + "\n"
    return "".join(f"{key}={value}\n" for key, value in doc.items())
