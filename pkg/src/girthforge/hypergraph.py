"""r-uniform (multi-)hypergraphs over dense integer vertices, cliques and packings.

Edges are canonicalized as sorted tuples and identified by colex rank, so
iteration order is deterministic and hashing is cheap.  All containers are
immutable after construction; builder-style helpers return new values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, ...]
Clique = tuple[int, ...]


def canon_edge(e: Iterable[int]) -> Edge:
    """Sorted-tuple form of a vertex set; rejects repeated vertices."""
    t = tuple(sorted(e))
    if len(set(t)) != len(t):
        raise ValueError(f"repeated vertex in {t}")
    return t


def colex_rank(t: Sequence[int]) -> int:
    """Colexicographic rank of a sorted k-subset among all k-subsets."""
    return sum(comb(c, i + 1) for i, c in enumerate(t))


def clique_edges(Q: Sequence[int], r: int) -> Iterator[Edge]:
    """All r-subsets of the clique's vertex set, in sorted order."""
    return combinations(sorted(Q), r)


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform multi-hypergraph on vertices 0..n-1.

    `edges` is a sorted tuple of sorted vertex tuples; repeats encode
    multiset multiplicity.
    """

    n: int
    r: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0 or self.r < 1:
            raise ValueError("need n >= 0 and r >= 1")
        canon = []
        for e in self.edges:
            t = canon_edge(e)
            if len(t) != self.r:
                raise ValueError(f"edge {t} is not {self.r}-uniform")
            if t and (t[0] < 0 or t[-1] >= self.n):
                raise ValueError(f"edge {t} out of range [0,{self.n})")
            canon.append(t)
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))

    # -- basic accessors -------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def is_simple(self) -> bool:
        return len(self.edge_set) == len(self.edges)

    def __contains__(self, e) -> bool:
        return tuple(sorted(e)) in self.edge_set

    def multiplicity(self, S: Iterable[int]) -> int:
        """Number of edges (with multiplicity) containing the vertex set S."""
        s = frozenset(S)
        if len(s) > self.r:
            return 0
        return sum(1 for e in self.edges if s.issubset(e))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        counts = [0] * self.n
        for e in self.edges:
            for v in e:
                counts[v] += 1
        return min(counts)

    def max_codegree(self, i: int) -> int:
        """Max over i-subsets U of the number of edges containing U."""
        if not 0 <= i <= self.r:
            raise ValueError("need 0 <= i <= r")
        if i == 0:
            return self.num_edges
        counts: dict[tuple[int, ...], int] = {}
        for e in self.edges:
            for U in combinations(e, i):
                counts[U] = counts.get(U, 0) + 1
        return max(counts.values(), default=0)

    # -- set-style builders ----------------------------------------------

    def without(self, drop: Iterable[Iterable[int]]) -> "Hypergraph":
        """Simple-set difference: removes the given edges entirely."""
        gone = {tuple(sorted(e)) for e in drop}
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if e not in gone))

    def union_edges(self, add: Iterable[Iterable[int]]) -> "Hypergraph":
        """Simple-set union with the given edges (no multiplicity added)."""
        have = set(self.edges)
        extra = {tuple(sorted(e)) for e in add} - have
        return Hypergraph(self.n, self.r, self.edges + tuple(extra))

    def restrict(self, keep: Iterable[Iterable[int]]) -> "Hypergraph":
        kept = {tuple(sorted(e)) for e in keep}
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if e in kept))

    # -- clique machinery --------------------------------------------------

    def cliques(self, q: int) -> Iterator[Clique]:
        """All q-subsets of vertices whose r-subsets are all edges.

        Bitset adjacency rows for r = 2; sorted-subset tests for r >= 3.
        """
        if q < self.r:
            return
        eset = self.edge_set
        if self.r == 2:
            adj = [0] * self.n
            for a, b in eset:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            full = (1 << self.n) - 1

            def grow(chosen: list[int], cand: int):
                if len(chosen) == q:
                    yield tuple(chosen)
                    return
                c = cand
                while c:
                    v = (c & -c).bit_length() - 1
                    c &= c - 1
                    yield from grow(chosen + [v], c & adj[v])

            yield from grow([], full)
        else:
            verts = sorted({v for e in eset for v in e})

            def ok(chosen: list[int], v: int) -> bool:
                if len(chosen) < self.r - 1:
                    return True
                return all(
                    tuple(sorted(T + (v,))) in eset
                    for T in combinations(chosen, self.r - 1)
                )

            def grow3(chosen: list[int], start: int):
                if len(chosen) == q:
                    yield tuple(chosen)
                    return
                for idx in range(start, len(verts)):
                    v = verts[idx]
                    if ok(chosen, v):
                        yield from grow3(chosen + [v], idx + 1)

            yield from grow3([], 0)

    def cliques_containing(self, e: Iterable[int], q: int) -> list[Clique]:
        """All q-cliques of this hypergraph whose vertex set contains edge e."""
        base = canon_edge(e)
        if base not in self.edge_set:
            raise ValueError(f"{base} is not an edge")
        eset = self.edge_set
        out = []

        # extend e by q-r further vertices, smallest-first
        def extend(extra: tuple[int, ...], start: int):
            if len(extra) == q - self.r:
                Q = tuple(sorted(base + extra))
                if all(tuple(sorted(T)) in eset for T in combinations(Q, self.r)):
                    out.append(Q)
                return
            for v in range(start, self.n):
                if v in base or v in extra:
                    continue
                extend(extra + (v,), v + 1)

        extend((), 0)
        return sorted(out)

    # -- JSON interchange --------------------------------------------------

    def to_obj(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_obj(cls, obj: dict) -> "Hypergraph":
        return cls(obj["n"], obj["r"], tuple(tuple(e) for e in obj["edges"]))

    @classmethod
    def from_json(cls, s: str) -> "Hypergraph":
        return cls.from_obj(json.loads(s))


@dataclass(frozen=True)
class Packing:
    """Edge-disjoint q-cliques whose r-subsets are all edges of the host."""

    host: Hypergraph
    q: int
    cliques: tuple[Clique, ...] = field(default=())

    def __post_init__(self):
        if self.q <= self.host.r:
            raise ValueError("need q > r")
        canon = tuple(sorted(canon_edge(Q) for Q in self.cliques))
        object.__setattr__(self, "cliques", canon)
        eset = self.host.edge_set
        seen: set[Edge] = set()
        for Q in canon:
            if len(Q) != self.q:
                raise ValueError(f"clique {Q} is not a {self.q}-set")
            for e in clique_edges(Q, self.host.r):
                if e not in eset:
                    raise ValueError(f"clique {Q}: edge {e} missing from host")
                if e in seen:
                    raise ValueError(f"edge {e} covered twice")
                seen.add(e)

    def __len__(self) -> int:
        return len(self.cliques)

    @property
    def r(self) -> int:
        return self.host.r

    def covered_edges(self) -> set[Edge]:
        out: set[Edge] = set()
        for Q in self.cliques:
            out.update(clique_edges(Q, self.host.r))
        return out

    def union_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.host.n, self.host.r, tuple(self.covered_edges()))

    def to_obj(self) -> dict:
        obj = self.host.to_obj()
        obj["q"] = self.q
        obj["blocks"] = [list(Q) for Q in self.cliques]
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_obj(cls, obj: dict) -> "Packing":
        host = Hypergraph.from_obj(obj)
        return cls(host, obj["q"], tuple(tuple(Q) for Q in obj["blocks"]))

    @classmethod
    def from_json(cls, s: str) -> "Packing":
        return cls.from_obj(json.loads(s))


# -- module-level operations ----------------------------------------------


def complete_host(n: int, r: int) -> Hypergraph:
    """K_n^r: every r-subset of [n] as an edge, multiplicity one."""
    if n < 1 or r < 1 or r > n:
        raise ValueError("need 1 <= r <= n")
    return Hypergraph(n, r, tuple(combinations(range(n), r)))


def admissible(n: int, q: int, r: int) -> bool:
    """Divisibility conditions for an (n,q,r)-Steiner system to exist."""
    if q <= r or r < 1:
        raise ValueError("need q > r >= 1")
    if n < q:
        raise ValueError("need n >= q")
    return all(comb(n - i, r - i) % comb(q - i, r - i) == 0 for i in range(r))


def is_divisible(G: Hypergraph, q: int) -> bool:
    """True iff comb(q-i, r-i) divides |G(S)| for every i-subset S, i < r."""
    if q <= G.r:
        raise ValueError("need q > r")
    r = G.r
    if G.num_edges % comb(q, r) != 0:
        return False
    for i in range(1, r):
        d = comb(q - i, r - i)
        if d == 1:
            continue
        counts: dict[tuple[int, ...], int] = {}
        for e in G.edges:
            for U in combinations(e, i):
                counts[U] = counts.get(U, 0) + 1
        if any(c % d for c in counts.values()):
            return False
    return True


def multiplicity(G: Hypergraph, S: Iterable[int]) -> int:
    return G.multiplicity(S)


def max_codegree(G: Hypergraph, i: int) -> int:
    return G.max_codegree(i)


def cliques_containing(G: Hypergraph, e: Iterable[int], q: int) -> list[Clique]:
    return G.cliques_containing(e, q)
