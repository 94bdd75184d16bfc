"""Greedy balanced-family builders and their verification tools.

A balanced family is a set of embeddings of a pattern H into a host G with
two multiplicity caps: no host edge is the image of the distinguished
pattern edge too often (per-edge cap), and no rooted copy psi of the
subforest F extends through any fixed extra vertex u too often (per-pair
cap).  The builder recruits embeddings greedily in a deterministic order;
because both degree maps only ever grow, a single pass is maximal: any
embedding rejected once stays unrecruitable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .embed import Embedding, _backtrack, count_copies, enumerate_embeddings
from .errors import EmptyCandidateSet, InvalidRootedPattern, PreconditionViolated
from .gluing import GluingSpec, RootedPattern, _glue_oriented, signed_glue
from .graphs import LabeledGraph, SignedBipartiteGraph, encode_graph6
from .constructions import SeededSampler


@dataclass(frozen=True)
class FamilyConstraints:
    """Caps for the greedy builder.  None means unconstrained."""

    per_edge_cap: Optional[int] = None
    per_pair_cap: Optional[int] = None
    target_size: Optional[int] = None
    epsilon: Optional[Fraction] = None  # informational: (1+eps) per-edge origin
    gamma: Optional[Fraction] = None  # informational: gamma per-pair origin

    def __post_init__(self):
        for cap in (self.per_edge_cap, self.per_pair_cap, self.target_size):
            if cap is not None and cap < 0:
                raise ValueError("caps must be nonnegative")

    @staticmethod
    def from_cleaning_params(a, epsilon, gamma) -> "FamilyConstraints":
        """Signed-setting caps: per-pair floor(gamma*A), per-edge floor((1+eps)*A)."""
        a, epsilon, gamma = Fraction(a), Fraction(epsilon), Fraction(gamma)
        return FamilyConstraints(
            per_edge_cap=int((1 + epsilon) * a),
            per_pair_cap=int(gamma * a),
            epsilon=epsilon,
            gamma=gamma,
        )


def derived_caps(stats, p, n, gamma, family_size=None, host_edges=None, epsilon=1):
    """The asymptotic cap formulas evaluated at finite n, for reporting only:
    per-pair gamma * p^(e(H)-e(F)) * n^(h-l); per-edge (1+eps)*|H|/e(G)."""
    p = float(p)
    per_pair = float(gamma) * p ** (stats.eH - stats.eF) * n ** (stats.h - stats.ell)
    per_edge = None
    if family_size is not None and host_edges:
        per_edge = (1 + float(epsilon)) * family_size / host_edges
    return per_pair, per_edge


@dataclass
class BalancedFamily:
    """The built family plus recomputable degree statistics.

    For signed builds, host/pattern are the flattened unsigned graphs and
    signed_host/signed_pattern keep the originals.
    """

    host: LabeledGraph
    pattern: RootedPattern
    members: list[Embedding]
    edge_degrees: dict[tuple[int, int], int]
    pair_degrees: dict[tuple, int]
    signed_host: Optional[SignedBipartiteGraph] = None
    signed_pattern: Optional[SignedBipartiteGraph] = None

    @property
    def size(self) -> int:
        return len(self.members)

    def psi_of(self, emb: Embedding) -> tuple[int, ...]:
        return tuple(emb.map[r] for r in self.pattern.root_vertices)

    def extra_vertices(self, emb: Embedding) -> list[int]:
        rooted = {emb.map[r] for r in self.pattern.root_vertices}
        return [u for u in emb.map if u not in rooted]

    def to_json(self) -> str:
        payload = {
            "host": encode_graph6(self.host),
            "pattern": encode_graph6(self.pattern.pattern),
            "roots": list(self.pattern.root_vertices),
            "root_edges": sorted(list(e) for e in self.pattern.root_edges),
            "distinguished_edge": list(self.pattern.distinguished_edge),
            "members": [list(m.map) for m in self.members],
        }
        if self.signed_host is not None:
            payload["signed_host"] = json.loads(self.signed_host.to_json())
            payload["signed_pattern"] = json.loads(self.signed_pattern.to_json())
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _recruitable(fam: BalancedFamily, c: FamilyConstraints, emb: Embedding) -> bool:
    f = fam.pattern.distinguished_edge
    e = emb.image_edge(f)
    if c.per_edge_cap is not None and fam.edge_degrees.get(e, 0) >= c.per_edge_cap:
        return False
    if c.per_pair_cap is not None:
        psi = fam.psi_of(emb)
        for u in fam.extra_vertices(emb):
            if fam.pair_degrees.get((psi, u), 0) >= c.per_pair_cap:
                return False
    return True


def _recruit(fam: BalancedFamily, emb: Embedding) -> None:
    f = fam.pattern.distinguished_edge
    e = emb.image_edge(f)
    fam.edge_degrees[e] = fam.edge_degrees.get(e, 0) + 1
    psi = fam.psi_of(emb)
    for u in fam.extra_vertices(emb):
        fam.pair_degrees[(psi, u)] = fam.pair_degrees.get((psi, u), 0) + 1
    fam.members.append(emb)


def _candidate_stream(host, pattern, f, edge_order, pattern_colors, host_colors):
    """Embeddings grouped by the host edge the distinguished edge lands on."""
    a, b = f
    for (x, y) in edge_order:
        for fixed in ({a: x, b: y}, {a: y, b: x}):
            if pattern_colors is not None and any(
                pattern_colors[pv] != host_colors[hv] for pv, hv in fixed.items()
            ):
                continue
            yield from _backtrack(pattern, host, fixed, pattern_colors, host_colors, None)


def _build(fam, c, edge_order, pattern_colors=None, host_colors=None) -> BalancedFamily:
    f = fam.pattern.distinguished_edge
    for emb in _candidate_stream(
        fam.host, fam.pattern.pattern, f, edge_order, pattern_colors, host_colors
    ):
        if c.target_size is not None and fam.size >= c.target_size:
            break
        if _recruitable(fam, c, emb):
            _recruit(fam, emb)
    return fam


def _edge_order(host: LabeledGraph, sampler: Optional[SeededSampler]):
    edges = list(host.sorted_edges)
    if sampler is not None:
        rng = sampler.rng()
        edges = [edges[i] for i in rng.permutation(len(edges))]
    return edges


def build_balanced_family(
    g: LabeledGraph,
    p: RootedPattern,
    c: FamilyConstraints,
    sampler: Optional[SeededSampler] = None,
) -> BalancedFamily:
    """Greedy recruitment loop over all embeddings of the pattern.

    Embeddings are visited grouped by the host edge the distinguished edge
    maps to (optionally a seeded shuffle of that edge order) and
    lexicographically inside each group.
    """
    if p.distinguished_edge is None:
        raise InvalidRootedPattern("builder needs a distinguished edge")
    fam = BalancedFamily(host=g, pattern=p, members=[], edge_degrees={}, pair_degrees={})
    return _build(fam, c, _edge_order(g, sampler))


def build_signed_balanced_family(
    g: SignedBipartiteGraph,
    h: SignedBipartiteGraph,
    f: tuple[int, int],
    c: FamilyConstraints,
    sampler: Optional[SeededSampler] = None,
) -> BalancedFamily:
    """Signed builder: sign-respecting embeddings, F = the fixed edge f."""
    f = h.check_edge(f)
    flat_h = h.as_unsigned()
    flat_g = g.as_unsigned()
    flat_f = (f[0], h.plus_count + f[1])
    p = RootedPattern(flat_h, flat_f, frozenset([flat_f]), flat_f)
    fam = BalancedFamily(
        host=flat_g,
        pattern=p,
        members=[],
        edge_degrees={},
        pair_degrees={},
        signed_host=g,
        signed_pattern=h,
    )
    pc = [0] * h.plus_count + [1] * h.minus_count
    hc = [0] * g.plus_count + [1] * g.minus_count
    return _build(fam, c, _edge_order(flat_g, sampler), pc, hc)


@dataclass(frozen=True)
class FamilyReport:
    size: int
    edge_violations: tuple
    pair_violations: tuple
    property1_target: Optional[float]
    property1_met: Optional[bool]

    @property
    def violation_count(self) -> int:
        return len(self.edge_violations) + len(self.pair_violations)


def verify_family(
    fam: BalancedFamily,
    c: FamilyConstraints,
    property1_target: Optional[float] = None,
) -> FamilyReport:
    """Recompute all degrees from scratch and list every cap violation."""
    f = fam.pattern.distinguished_edge
    edge_deg: dict = {}
    pair_deg: dict = {}
    for emb in fam.members:
        e = emb.image_edge(f)
        edge_deg[e] = edge_deg.get(e, 0) + 1
        psi = fam.psi_of(emb)
        for u in fam.extra_vertices(emb):
            pair_deg[(psi, u)] = pair_deg.get((psi, u), 0) + 1
    edge_bad = tuple(
        sorted(
            (e, d)
            for e, d in edge_deg.items()
            if c.per_edge_cap is not None and d > c.per_edge_cap
        )
    )
    pair_bad = tuple(
        sorted(
            (k, d)
            for k, d in pair_deg.items()
            if c.per_pair_cap is not None and d > c.per_pair_cap
        )
    )
    met = None if property1_target is None else fam.size >= property1_target
    return FamilyReport(
        size=fam.size,
        edge_violations=edge_bad,
        pair_violations=pair_bad,
        property1_target=property1_target,
        property1_met=met,
    )


def remaining_recruitable(fam: BalancedFamily, c: FamilyConstraints) -> list[Embedding]:
    """Exhaustive maximality check: embeddings not in the family that the
    caps would still admit.  Empty for a greedy build with no target cap."""
    in_family = {m.map for m in fam.members}
    pc = hc = None
    if fam.signed_host is not None:
        pc = [0] * fam.signed_pattern.plus_count + [1] * fam.signed_pattern.minus_count
        hc = [0] * fam.signed_host.plus_count + [1] * fam.signed_host.minus_count
    out = []
    for emb in _candidate_stream(
        fam.host,
        fam.pattern.pattern,
        fam.pattern.distinguished_edge,
        list(fam.host.sorted_edges),
        pc,
        hc,
    ):
        if emb.map in in_family:
            continue
        if _recruitable(fam, c, emb):
            out.append(emb)
    return out


def heavy_light_split(degrees: dict, threshold) -> tuple[dict, dict, int]:
    """Partition by extension degree; returns (heavy, light, light_mass)."""
    if Fraction(threshold) < 0:
        raise ValueError("threshold must be nonnegative")
    threshold = Fraction(threshold)
    heavy = {k: d for k, d in degrees.items() if d >= threshold}
    light = {k: d for k, d in degrees.items() if d < threshold}
    return heavy, light, sum(light.values())


def extension_degrees(fam: BalancedFamily) -> dict[tuple, int]:
    """deg(psi) = number of family members restricting to psi on F."""
    out: dict[tuple, int] = {}
    for emb in fam.members:
        psi = fam.psi_of(emb)
        out[psi] = out.get(psi, 0) + 1
    return out


@dataclass(frozen=True)
class GluedCopy:
    """A glued-pattern embedding assembled from one member per family."""

    members: tuple[Embedding, ...]
    glued_pattern: Union[LabeledGraph, SignedBipartiteGraph]
    map: tuple[int, ...]  # over the flattened glued pattern


def assemble_glued_copies(
    g, families: list[BalancedFamily], shared_edge
) -> Optional[GluedCopy]:
    """Greedily pick one member per family through shared_edge, pairwise
    vertex-disjoint away from it; None if the greedy choice gets blocked."""
    shared = tuple(sorted(shared_edge))
    shared_set = set(shared)
    signed = families[0].signed_host is not None if families else False
    pools = []
    for fam in families:
        f = fam.pattern.distinguished_edge
        pool = [m for m in fam.members if m.image_edge(f) == shared]
        if not pool:
            raise EmptyCandidateSet(
                f"a family has no member through the shared edge {shared}"
            )
        pools.append(pool)
    chosen: list[Embedding] = []
    occupied: set[int] = set(shared_set)
    for pool in pools:
        pick = None
        for emb in pool:
            img = set(emb.map)
            if img & occupied <= shared_set:
                pick = emb
                break
        if pick is None:
            return None
        chosen.append(pick)
        occupied |= set(pick.map)
    return _combine(g, families, chosen, shared, signed)


def _combine(g, families, chosen, shared, signed) -> GluedCopy:
    x, y = shared
    if signed:
        parts = []
        for fam, emb in zip(families, chosen):
            h = fam.signed_pattern
            fp, fq = (
                fam.pattern.distinguished_edge[0],
                fam.pattern.distinguished_edge[1] - h.plus_count,
            )
            parts.append((h, (fp, fq)))
        glued = signed_glue(GluingSpec(tuple(parts), mode="signed-unique"))
        # flattened glued layout: + shared first, then each part's other +
        # vertices in order; same for the - side
        plus_map = [0] * glued.plus_count
        minus_map = [0] * glued.minus_count
        host_m = families[0].signed_host.plus_count
        # the + endpoint of the shared host edge (hosts are flattened)
        plus_map[0] = x if x < host_m else y
        minus_map[0] = (y if x < host_m else x) - host_m
        pi, qi = 1, 1
        for fam, emb in zip(families, chosen):
            h = fam.signed_pattern
            fp = fam.pattern.distinguished_edge[0]
            fq = fam.pattern.distinguished_edge[1] - h.plus_count
            for pv in range(h.plus_count):
                if pv != fp:
                    plus_map[pi] = emb.map[pv]
                    pi += 1
            for qv in range(h.minus_count):
                if qv != fq:
                    minus_map[qi] = emb.map[h.plus_count + qv] - host_m
                    qi += 1
        flat_map = tuple(plus_map) + tuple(host_m + q for q in minus_map)
        return GluedCopy(tuple(chosen), glued, flat_map)
    parts = []
    orientations = []
    for fam, emb in zip(families, chosen):
        f = fam.pattern.distinguished_edge
        parts.append((fam.pattern.pattern, f))
        orientations.append(emb.map[f[0]] != x)
    glued = _glue_oriented(parts, orientations)
    gmap = [0] * glued.vertex_count
    gmap[0], gmap[1] = x, y
    nxt = 2
    for (h, (a, b)), flip, emb in zip(parts, orientations, chosen):
        for v in range(h.vertex_count):
            if v in (a, b):
                continue
            gmap[nxt] = emb.map[v]
            nxt += 1
    return GluedCopy(tuple(chosen), glued, tuple(gmap))


@dataclass(frozen=True)
class RoughCountReport:
    copies: int
    required: Fraction
    passed: bool


def rough_count_check(
    g: SignedBipartiteGraph, h: SignedBipartiteGraph, z: int, k
) -> RoughCountReport:
    """Check the copy-count floor (k/2)^e(H) * z for hosts with >= k*z edges."""
    k = Fraction(k)
    if k < 4:
        raise PreconditionViolated("need K >= 4")
    if g.edge_count < k * z:
        raise PreconditionViolated("host must have at least K*z edges")
    copies = count_copies(h, g)
    required = (k / 2) ** h.edge_count * z
    return RoughCountReport(copies=copies, required=required, passed=copies >= required)
