"""Node-level communities: extraction from a percolation result and the
one-community-per-line text format."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ParseError
from .graph import Graph
from .percolation import PercResult

__all__ = ["Cover", "CoverParseError", "extract", "read_cover", "write_cover"]


class CoverParseError(ParseError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Cover:
    """A set of possibly overlapping communities.

    Each community is a strictly increasing id tuple; the list is free of
    empties and duplicates and ordered by (size desc, then lexicographic).
    """

    communities: tuple[tuple[int, ...], ...]

    @classmethod
    def from_sets(cls, groups: Iterable[Iterable[int]]) -> "Cover":
        seen = {tuple(sorted(set(g))) for g in groups}
        seen.discard(())
        return cls(tuple(sorted(seen, key=lambda c: (-len(c), c))))

    def __len__(self) -> int:
        return len(self.communities)

    def __iter__(self):
        return iter(self.communities)

    def node_set(self) -> set[int]:
        return {v for c in self.communities for v in c}

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(c) for c in self.communities]


def extract(result: PercResult, graph: Optional[Graph] = None) -> Cover:
    """Collapse a percolation result to node communities.

    Every clique key contributes its vertices to the community of each
    distinct root it reaches. Ids are translated through `graph`'s external
    labels when given, otherwise used as-is. Reads the union-find without
    mutating it, so concurrent extractions of one result are safe.
    """
    uf = result.uf
    groups: dict[int, set[int]] = {}
    if result.mode == "cpm":
        for key, node in result.membership.items():
            groups.setdefault(uf.root(node), set()).update(key)
    else:
        for key, nodes in result.membership.items():
            for p in nodes:
                groups.setdefault(uf.root(p), set()).update(key)
    comms = groups.values()
    if graph is not None:
        ext = graph.ext_ids
        comms = [{int(ext[v]) for v in c} for c in comms]
    return Cover.from_sets(comms)


def write_cover(cover: Cover, sink) -> None:
    """One line per community: space-separated ids, ascending."""
    own = False
    if isinstance(sink, (str, bytes, os.PathLike)) and not hasattr(sink, "write"):
        sink = open(sink, "w")
        own = True
    try:
        for c in cover.communities:
            sink.write(" ".join(map(str, c)) + "\n")
    finally:
        if own:
            sink.close()


def read_cover(source) -> Cover:
    """Parse a community file; blank lines are ignored."""
    if isinstance(source, (str, bytes, os.PathLike)) and not hasattr(source, "read"):
        with open(source, "r") as fh:
            return _parse(fh)
    return _parse(source)


def _parse(stream) -> Cover:
    groups = []
    for line_no, raw in enumerate(stream, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8", errors="replace")
        toks = raw.split()
        if not toks:
            continue
        try:
            groups.append([int(t) for t in toks])
        except ValueError:
            raise CoverParseError(line_no, f"non-integer token in {raw.strip()!r}") from None
    return Cover.from_sets(groups)
