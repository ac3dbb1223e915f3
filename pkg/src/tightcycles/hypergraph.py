"""Canonical 3-uniform hypergraphs with fast pair queries.

A hypergraph lives on vertices ``0..n-1`` and stores edges as sorted
3-tuples.  Alongside the edge set it maintains an index mapping every
unordered vertex pair to the bitmask of vertices completing it to an edge,
so codegree lookups and edge toggles are O(1).  The index is what makes the
extremal search (millions of toggles) and the walk machinery affordable.

Mutation is single-owner: share an instance across threads only for
reading.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed .h3 input; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Hypergraph3:
    """A 3-uniform hypergraph on dense integer vertices.

    Edges are sets of 3 distinct vertices; duplicates and degenerate
    triples are rejected rather than normalised away, so generator bugs
    surface immediately.
    """

    __slots__ = ("n", "_edges", "_nbr")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self._edges: set[tuple[int, int, int]] = set()
        self._nbr: dict[tuple[int, int], int] = {}
        for e in edges:
            self.add_edge(e)

    # -- construction / mutation -------------------------------------------

    def _canon(self, e: Iterable[int]) -> tuple[int, int, int]:
        t = tuple(sorted(e))
        if len(t) != 3 or len(set(t)) != 3:
            raise ValueError(f"edge must have 3 distinct vertices, got {t}")
        if t[0] < 0 or t[2] >= self.n:
            raise ValueError(f"edge {t} out of range for n={self.n}")
        return t  # type: ignore[return-value]

    def add_edge(self, e: Iterable[int]) -> None:
        t = self._canon(e)
        if t in self._edges:
            raise ValueError(f"duplicate edge {t}")
        self._edges.add(t)
        a, b, c = t
        self._nbr[a, b] = self._nbr.get((a, b), 0) | (1 << c)
        self._nbr[a, c] = self._nbr.get((a, c), 0) | (1 << b)
        self._nbr[b, c] = self._nbr.get((b, c), 0) | (1 << a)

    def remove_edge(self, e: Iterable[int]) -> None:
        t = self._canon(e)
        if t not in self._edges:
            raise ValueError(f"no such edge {t}")
        self._edges.remove(t)
        a, b, c = t
        for pair, w in (((a, b), c), ((a, c), b), ((b, c), a)):
            m = self._nbr[pair] & ~(1 << w)
            if m:
                self._nbr[pair] = m
            else:
                del self._nbr[pair]

    def has_edge(self, e: Iterable[int]) -> bool:
        t = tuple(sorted(e))
        return len(t) == 3 and t in self._edges

    def copy(self) -> "Hypergraph3":
        h = Hypergraph3(self.n)
        h._edges = set(self._edges)
        h._nbr = dict(self._nbr)
        return h

    # -- queries ------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """Edges in canonical (lexicographically sorted) order."""
        return sorted(self._edges)

    def vertices(self) -> range:
        return range(self.n)

    def _check_pair(self, u: int, v: int) -> tuple[int, int]:
        if u == v:
            raise ValueError(f"pair requires distinct vertices, got ({u}, {v})")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"pair ({u}, {v}) out of range for n={self.n}")
        return (u, v) if u < v else (v, u)

    def neighborhood_mask(self, u: int, v: int) -> int:
        """Bitmask of vertices w with {u,v,w} an edge."""
        return self._nbr.get(self._check_pair(u, v), 0)

    def neighborhood(self, u: int, v: int) -> set[int]:
        return set(_bits(self.neighborhood_mask(u, v)))

    def codegree(self, u: int, v: int) -> int:
        return self.neighborhood_mask(u, v).bit_count()

    def min_codegree(self) -> int:
        """Minimum codegree over all unordered vertex pairs."""
        if self.n < 2:
            raise ValueError("min_codegree needs at least 2 vertices")
        if not self._edges:
            return 0
        get = self._nbr.get
        best = self.n
        for u in range(self.n - 1):
            for v in range(u + 1, self.n):
                d = get((u, v), 0).bit_count()
                if d < best:
                    best = d
                    if best == 0:
                        return 0
        return best

    def codegree_histogram(self) -> dict[int, int]:
        """Map codegree value -> number of unordered pairs attaining it."""
        counts = Counter(
            self._nbr.get((u, v), 0).bit_count()
            for u, v in combinations(range(self.n), 2)
        )
        return dict(sorted(counts.items()))

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return sum(1 for e in self._edges if v in e)

    def link_graph(self, a: int) -> set[tuple[int, int]]:
        """The 2-uniform link of ``a``: pairs {b,c} with {a,b,c} an edge."""
        if not 0 <= a < self.n:
            raise ValueError(f"vertex {a} out of range for n={self.n}")
        link = set()
        for e in self._edges:
            if a in e:
                b, c = (x for x in e if x != a)
                link.add((b, c) if b < c else (c, b))
        return link

    def pair_digraph(self) -> "PairDigraph":
        """Ordered-pair transition digraph: (u,v) -> (v,w) iff {u,v,w} is an edge."""
        nodes = tuple(
            (u, v) for u in range(self.n) for v in range(self.n) if u != v
        )
        succ = {}
        for u, v in nodes:
            mask = self._nbr.get((u, v) if u < v else (v, u), 0)
            if mask:
                succ[u, v] = tuple(_bits(mask))
        return PairDigraph(nodes=nodes, succ=succ)

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph3):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, frozenset(self._edges)))

    def __repr__(self) -> str:
        return f"Hypergraph3(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PairDigraph:
    """Walk-detection automaton over ordered vertex pairs.

    ``succ[(u, v)]`` lists the w with an arc (u,v) -> (v,w); pairs without
    outgoing arcs are omitted from the mapping but kept in ``nodes``.
    """

    nodes: tuple[tuple[int, int], ...]
    succ: dict[tuple[int, int], tuple[int, ...]]

    @property
    def arc_count(self) -> int:
        return sum(len(ws) for ws in self.succ.values())

    def arcs(self) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
        for u, v in self.nodes:
            for w in self.succ.get((u, v), ()):
                yield (u, v), (v, w)

    def has_arc(self, src: tuple[int, int], dst: tuple[int, int]) -> bool:
        return src[1] == dst[0] and dst[1] in self.succ.get(src, ())


# -- .h3 text format ----------------------------------------------------------
#
#   # optional comment lines
#   h3 <n> <m>
#   <a> <b> <c>     (m lines, one edge each)
#
# Serialisation is canonical: triples sorted ascending, lines sorted
# lexicographically, LF endings.  Parsing accepts edges in any order and
# normalises, so serialize(parse(x)) is the canonical form of x.


def serialize_h3(h: Hypergraph3) -> str:
    lines = [f"h3 {h.n} {h.m}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in h.edges)
    return "\n".join(lines) + "\n"


def parse_h3(text: str) -> Hypergraph3:
    header: tuple[int, int] | None = None
    h: Hypergraph3 | None = None
    seen = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 3 or tokens[0] != "h3":
                raise ParseError("expected header 'h3 <n> <m>'", lineno)
            try:
                n, m = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", lineno)
            header = (n, m)
            h = Hypergraph3(n)
            continue
        if seen >= header[1]:
            raise ParseError("content after declared edge count", lineno)
        if len(tokens) != 3:
            raise ParseError(f"expected 3 vertices, got {len(tokens)}", lineno)
        try:
            triple = tuple(int(t) for t in tokens)
        except ValueError:
            raise ParseError("vertices must be integers", lineno) from None
        try:
            assert h is not None
            h.add_edge(triple)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        seen += 1
    if header is None:
        raise ParseError("missing header 'h3 <n> <m>'")
    if seen != header[1]:
        raise ParseError(f"declared {header[1]} edges, found {seen}")
    assert h is not None
    return h


def dump_h3(h: Hypergraph3, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_h3(h))


def load_h3(path) -> Hypergraph3:
    with open(path, "r", encoding="utf-8") as f:
        return parse_h3(f.read())
