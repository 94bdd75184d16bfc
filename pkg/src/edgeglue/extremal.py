"""Exact Turán and Zarankiewicz numbers at desk scale.

Hosts are edge bitmasks over the complete (or complete signed bipartite)
host, and forbidden patterns become precomputed copy masks: a host is free
iff it contains no copy mask as a submask.  Two independent engines share
this representation:

* an exhaustive oracle that scans every bitmask with vectorized numpy, and
* a branch-and-bound DFS over edge slots in lexicographic order, include
  branch first, pruned when the current edges plus the undecided slots
  cannot beat the incumbent.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, asdict
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .canon import CanonicalLabel, canonical_form, decode_canonical
from .embed import enumerate_embeddings, is_free
from .errors import (
    EmptyForbiddenSet,
    InfeasibleInput,
    InvariantViolation,
    SizeExceeded,
)
from .graphs import (
    LabeledGraph,
    SignedBipartiteGraph,
    complete,
    decode_graph6,
    encode_graph6,
    signed_complete_bipartite,
)

DEFAULT_ORACLE_MAX_N = 7
DEFAULT_BNB_MAX_N = 10
DEFAULT_ORACLE_MAX_CELLS = 25
DEFAULT_BNB_MAX_CELLS = 64
_ORACLE_MAX_BITS = 28

_POPCOUNT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


def _turan_bit_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            idx[(i, j)] = k
            k += 1
    return idx


def _turan_copy_masks(n: int, forbidden: Sequence[LabeledGraph]) -> list[int]:
    idx = _turan_bit_index(n)
    host = complete(n)
    masks = set()
    for h in forbidden:
        if h.edge_count == 0:
            if h.vertex_count <= n:
                raise InfeasibleInput(
                    "a forbidden pattern with no edges occurs in every host"
                )
            continue
        if h.vertex_count > n:
            continue
        for emb in enumerate_embeddings(h, host):
            mask = 0
            for e in h.edges:
                mask |= 1 << idx[emb.image_edge(e)]
            masks.add(mask)
    return _prune_dominated(masks)


def _zarankiewicz_copy_masks(m: int, n: int, h: SignedBipartiteGraph) -> list[int]:
    host = signed_complete_bipartite(m, n)
    masks = set()
    if h.edge_count == 0:
        if h.plus_count <= m and h.minus_count <= n:
            raise InfeasibleInput("a forbidden pattern with no edges occurs in every host")
        return []
    if h.plus_count > m or h.minus_count > n:
        return []
    hm = h.plus_count
    for emb in enumerate_embeddings(h, host):
        mask = 0
        for p, q in h.edges:
            hp = emb.map[p]
            hq = emb.map[hm + q] - m
            mask |= 1 << (hp * n + hq)
        masks.add(mask)
    return _prune_dominated(masks)


def _prune_dominated(masks: set[int]) -> list[int]:
    """Drop masks that contain another mask (their constraint is implied)."""
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == k for k in kept):
            kept.append(m)
    return kept


# ---------------------------------------------------------------------------
# Engines
# ---------------------------------------------------------------------------


def exhaustive_max_free(nbits: int, masks: Sequence[int]) -> tuple[int, int]:
    """Scan all 2^nbits hosts; return (max edges, lowest witness mask)."""
    if nbits > _ORACLE_MAX_BITS:
        raise SizeExceeded(f"exhaustive oracle limited to {_ORACLE_MAX_BITS} edge slots")
    if not masks:
        return nbits, (1 << nbits) - 1
    dtype = np.uint32 if nbits <= 32 else np.uint64
    cmasks = [dtype(c) for c in masks]
    best = -1
    best_mask = 0
    chunk = 1 << 22
    total = 1 << nbits
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        arr = np.arange(start, stop, dtype=dtype)
        free = np.ones(stop - start, dtype=bool)
        for c in cmasks:
            np.logical_and(free, (arr & c) != c, out=free)
        if not free.any():
            continue
        arr = arr[free]
        pc = _POPCOUNT16[arr & dtype(0xFFFF)] + _POPCOUNT16[(arr >> dtype(16)) & dtype(0xFFFF)]
        top = int(pc.max())
        if top > best:
            best = top
            best_mask = int(arr[np.argmax(pc == top)])
    return best, best_mask


def branch_and_bound_max_free(nbits: int, masks: Sequence[int]) -> tuple[int, int]:
    """Exact DFS over edge slots; returns (max edges, witness mask)."""
    if not masks:
        return nbits, (1 << nbits) - 1
    by_bit: list[list[int]] = [[] for _ in range(nbits)]
    for c in masks:
        m = c
        while m:
            low = m & -m
            by_bit[low.bit_length() - 1].append(c)
            m ^= low

    def conflicts(cur: int, bit: int) -> bool:
        new = cur | 1 << bit
        for c in by_bit[bit]:
            if new & c == c:
                return True
        return False

    # greedy lexicographic seed gives the incumbent and the fallback witness
    greedy = 0
    for b in range(nbits):
        if not conflicts(greedy, b):
            greedy |= 1 << b
    best = greedy.bit_count()
    witness = greedy

    def dfs(i: int, cur: int, cnt: int):
        nonlocal best, witness
        if cnt + (nbits - i) <= best:
            return
        if i == nbits:
            best, witness = cnt, cur
            return
        if not conflicts(cur, i):
            dfs(i + 1, cur | 1 << i, cnt + 1)
        dfs(i + 1, cur, cnt)

    dfs(0, 0, 0)
    return best, witness


def _mask_to_graph(n: int, mask: int) -> LabeledGraph:
    idx = _turan_bit_index(n)
    return LabeledGraph(n, [e for e, b in idx.items() if mask >> b & 1])


def _mask_to_signed(m: int, n: int, mask: int) -> SignedBipartiteGraph:
    return SignedBipartiteGraph(
        m, n, [(p, q) for p in range(m) for q in range(n) if mask >> (p * n + q) & 1]
    )


# ---------------------------------------------------------------------------
# Records and top-level operations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalRecord:
    kind: str  # "turan" | "zarankiewicz"
    forbidden: tuple[str, ...]  # canonical certificates (decodable)
    size: tuple[int, ...]  # (n,) or (m, n)
    value: int
    witness: str  # graph6 of the witness (flattened, + side first, if signed)
    method: str  # "oracle" | "branch-and-bound" | "cached"
    runtime_ms: int
    seed: Optional[int] = None
    timestamp: str = ""

    def key(self) -> tuple:
        return (self.kind, self.forbidden, self.size)

    def witness_graph(self):
        g = decode_graph6(self.witness)
        if self.kind == "zarankiewicz":
            m, n = self.size
            return SignedBipartiteGraph(
                m, n, [(a, b - m) for a, b in g.edges]
            )
        return g

    def forbidden_graphs(self):
        return [decode_canonical(CanonicalLabel(c.encode())) for c in self.forbidden]

    def validate(self):
        """Check the record's own invariants; raise InvariantViolation."""
        try:
            w = self.witness_graph()
        except Exception as exc:
            raise InvariantViolation(f"witness does not decode: {exc}") from exc
        if self.kind == "turan":
            if (w.vertex_count,) != tuple(self.size):
                raise InvariantViolation("witness size mismatch")
        else:
            if (w.plus_count, w.minus_count) != tuple(self.size):
                raise InvariantViolation("witness part sizes mismatch")
        if w.edge_count != self.value:
            raise InvariantViolation("witness edge count differs from value")
        for fg in self.forbidden_graphs():
            if not is_free(w, fg):
                raise InvariantViolation("witness contains a forbidden pattern")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["forbidden"] = list(self.forbidden)
        d["size"] = list(self.size)
        return d

    @staticmethod
    def from_dict(d: dict) -> "ExtremalRecord":
        return ExtremalRecord(
            kind=d["kind"],
            forbidden=tuple(d["forbidden"]),
            size=tuple(d["size"]),
            value=d["value"],
            witness=d["witness"],
            method=d["method"],
            runtime_ms=d["runtime_ms"],
            seed=d.get("seed"),
            timestamp=d.get("timestamp", ""),
        )


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def forbidden_certificates(forbidden) -> tuple[str, ...]:
    return tuple(sorted(canonical_form(h).bytes.decode() for h in forbidden))


def exact_turan(
    n: int,
    forbidden,
    method: str = "branch-and-bound",
    oracle_max_n: int = DEFAULT_ORACLE_MAX_N,
    bnb_max_n: int = DEFAULT_BNB_MAX_N,
) -> ExtremalRecord:
    """Exact ex(n, forbidden family) with an optimal witness."""
    forbidden = list(forbidden)
    if not forbidden:
        raise EmptyForbiddenSet("need at least one forbidden pattern")
    if method == "oracle":
        if n > oracle_max_n:
            raise SizeExceeded(f"oracle capped at n={oracle_max_n}")
    elif method == "branch-and-bound":
        if n > bnb_max_n:
            raise SizeExceeded(f"branch-and-bound capped at n={bnb_max_n}")
    else:
        raise ValueError(f"unknown method {method!r}")
    t0 = time.perf_counter()
    masks = _turan_copy_masks(n, forbidden)
    nbits = n * (n - 1) // 2
    if method == "oracle":
        value, wmask = exhaustive_max_free(nbits, masks)
    else:
        value, wmask = branch_and_bound_max_free(nbits, masks)
    runtime = int((time.perf_counter() - t0) * 1000)
    return ExtremalRecord(
        kind="turan",
        forbidden=forbidden_certificates(forbidden),
        size=(n,),
        value=value,
        witness=encode_graph6(_mask_to_graph(n, wmask)),
        method=method,
        runtime_ms=runtime,
        timestamp=_now(),
    )


def exact_zarankiewicz(
    m: int,
    n: int,
    h: SignedBipartiteGraph,
    method: str = "branch-and-bound",
    oracle_max_cells: int = DEFAULT_ORACLE_MAX_CELLS,
    bnb_max_cells: int = DEFAULT_BNB_MAX_CELLS,
) -> ExtremalRecord:
    """Exact z(m, n, h) for a signed bipartite pattern, with witness."""
    cells = m * n
    if method == "oracle":
        if cells > oracle_max_cells:
            raise SizeExceeded(f"oracle capped at m*n={oracle_max_cells}")
    elif method == "branch-and-bound":
        if cells > bnb_max_cells:
            raise SizeExceeded(f"branch-and-bound capped at m*n={bnb_max_cells}")
    else:
        raise ValueError(f"unknown method {method!r}")
    t0 = time.perf_counter()
    masks = _zarankiewicz_copy_masks(m, n, h)
    if method == "oracle":
        value, wmask = exhaustive_max_free(cells, masks)
    else:
        value, wmask = branch_and_bound_max_free(cells, masks)
    runtime = int((time.perf_counter() - t0) * 1000)
    witness = _mask_to_signed(m, n, wmask)
    return ExtremalRecord(
        kind="zarankiewicz",
        forbidden=(canonical_form(h).bytes.decode(),),
        size=(m, n),
        value=value,
        witness=encode_graph6(witness.as_unsigned()),
        method=method,
        runtime_ms=runtime,
        timestamp=_now(),
    )


# ---------------------------------------------------------------------------
# ex vs z ratio tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatioRow:
    n: int
    ex: Optional[int]
    z: Optional[int]
    ratio: Optional[Fraction]
    skipped: bool = False


def bipartition(g: LabeledGraph) -> Optional[tuple[list[int], list[int]]]:
    """2-coloring of a bipartite graph, or None."""
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    plus = [v for v in range(g.vertex_count) if color[v] == 0]
    minus = [v for v in range(g.vertex_count) if color[v] == 1]
    return plus, minus


def sign_graph(g: LabeledGraph, plus_side=None) -> SignedBipartiteGraph:
    """Give a bipartite graph a signing (default: canonical 2-coloring)."""
    if plus_side is None:
        parts = bipartition(g)
        if parts is None:
            raise InfeasibleInput("graph is not bipartite")
        plus, minus = parts
    else:
        plus = sorted(plus_side)
        minus = [v for v in range(g.vertex_count) if v not in set(plus)]
    pidx = {v: i for i, v in enumerate(plus)}
    qidx = {v: i for i, v in enumerate(minus)}
    edges = []
    for a, b in g.edges:
        if a in pidx and b in qidx:
            edges.append((pidx[a], qidx[b]))
        elif b in pidx and a in qidx:
            edges.append((pidx[b], qidx[a]))
        else:
            raise InfeasibleInput("declared + side is not one side of a bipartition")
    return SignedBipartiteGraph(len(plus), len(minus), edges)


def ratio_report(h: LabeledGraph, sizes, signed_h: Optional[SignedBipartiteGraph] = None,
                 method: str = "branch-and-bound") -> list[RatioRow]:
    """Rows (n, ex(n,h), z(n,n,signed h), ex/z); oversized rows are skipped."""
    if signed_h is None:
        signed_h = sign_graph(h)
    rows = []
    for n in sizes:
        try:
            ex_rec = exact_turan(n, [h], method=method)
            z_rec = exact_zarankiewicz(n, n, signed_h, method=method)
        except SizeExceeded:
            rows.append(RatioRow(n=n, ex=None, z=None, ratio=None, skipped=True))
            continue
        ratio = Fraction(ex_rec.value, z_rec.value) if z_rec.value else None
        rows.append(RatioRow(n=n, ex=ex_rec.value, z=z_rec.value, ratio=ratio))
    return rows
