"""Centralizer lattices, induced maps between them, and lattice isomorphism.

The nodes of a group's centralizer lattice are the centralizers of subsets:
the whole group (centralizer of the empty set) together with the closure of
the single-element centralizers under intersection.  Order is set inclusion;
meet is intersection, join is the centralizer of the intersection of
centralizers, and taking centralizers once more is an order-reversing
involution of the node set.  All of that structure is recomputed and checked
at build time rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    SubgroupSet,
    _bits,
    center,
)
from .errors import (
    DomainMismatchError,
    ImageNotANodeError,
    NodeCapExceededError,
    NotCrhError,
    OrderCapExceededError,
)
from .homs import GroupHom, identity_hom, is_centralizer_respecting

DEFAULT_NODE_CAP = 512


class CentralizerLattice:
    """The centralizer lattice of a finite group.

    ``nodes`` is sorted by (subgroup order, members); node 0 is the bottom
    (the center) and the last node is the top (the whole group).  ``leq``,
    ``meet``, ``join`` and ``involution`` are precomputed tables over node
    indices.
    """

    def __init__(self, group: FiniteGroup, node_masks: list[int]) -> None:
        self.group = group
        cent = group.centralizer_masks()
        node_masks.sort(key=lambda m: (m.bit_count(), _bits(m)))
        self.nodes: tuple[SubgroupSet, ...] = tuple(
            SubgroupSet._from_mask(group, m) for m in node_masks
        )
        self.node_masks = tuple(node_masks)
        index_of = {m: i for i, m in enumerate(node_masks)}
        self.index_of_mask = index_of
        count = len(node_masks)

        self.leq_masks = tuple(
            sum(1 << j for j, mj in enumerate(node_masks) if mi & ~mj == 0)
            for mi in node_masks
        )
        self.top = count - 1
        self.bottom = 0
        assert node_masks[self.top] == group.full_mask
        assert node_masks[self.bottom] == center(group).mask

        def cent_of(mask: int) -> int:
            out = group.full_mask
            for x in _bits(mask):
                out &= cent[x]
            return out

        self.involution = tuple(index_of[cent_of(m)] for m in node_masks)
        self.meet_table = tuple(
            tuple(index_of[mi & mj] for mj in node_masks) for mi in node_masks
        )
        cents = [cent_of(m) for m in node_masks]
        self.join_table = tuple(
            tuple(index_of[cent_of(cents[i] & cents[j])] for j in range(count))
            for i in range(count)
        )
        self._validate()

    def _validate(self) -> None:
        count = len(self.nodes)
        inv, leq = self.involution, self.leq_masks
        assert inv[self.top] == self.bottom and inv[self.bottom] == self.top
        for i in range(count):
            assert inv[inv[i]] == i, "involution must be involutive"
        for i in range(count):
            for j in range(count):
                if leq[i] >> j & 1:
                    assert leq[inv[j]] >> inv[i] & 1, "involution must reverse order"
                # meet is the intersection, hence automatically the greatest
                # lower bound; the join formula is only trusted after this check.
                jn = self.join_table[i][j]
                assert leq[i] >> jn & 1 and leq[j] >> jn & 1, "join must bound both"
                above_both = leq[i] & leq[j]
                assert above_both & ~leq[jn] == 0, "join must be the least upper bound"

    # -- queries ------------------------------------------------------------

    def leq(self, s: int, t: int) -> bool:
        return bool(self.leq_masks[s] >> t & 1)

    def node_count(self) -> int:
        return len(self.nodes)

    def node_orders(self) -> tuple[int, ...]:
        return tuple(len(n) for n in self.nodes)

    def covers(self) -> tuple[tuple[int, int], ...]:
        """(parent, child) pairs of the Hasse diagram, sorted."""
        count = len(self.nodes)
        out = []
        for c in range(count):
            for p in range(count):
                if p == c or not self.leq(c, p):
                    continue
                if any(
                    k != c and k != p and self.leq(c, k) and self.leq(k, p)
                    for k in range(count)
                ):
                    continue
                out.append((p, c))
        out.sort()
        return tuple(out)

    def __repr__(self) -> str:
        return f"CentralizerLattice(group_order={self.group.order}, nodes={len(self.nodes)})"


def build_centralizer_lattice(group: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> CentralizerLattice:
    """Construct the centralizer lattice: single-element centralizers,
    saturated under intersection, plus the whole group."""
    if group.order > cap:
        raise OrderCapExceededError(group.order, cap)
    cent = group.centralizer_masks()
    seen = {group.full_mask}
    masks = [group.full_mask]
    for x in range(group.order):
        if cent[x] not in seen:
            seen.add(cent[x])
            masks.append(cent[x])
    i = 0
    while i < len(masks):
        for j in range(i):
            m = masks[i] & masks[j]
            if m not in seen:
                seen.add(m)
                masks.append(m)
        i += 1
    return CentralizerLattice(group, masks)


def lattice_of(group: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> CentralizerLattice:
    """Per-group cached lattice (the lattice is canonical, so sharing is safe)."""
    if group._lattice is None:
        group._lattice = build_centralizer_lattice(group, cap)
    return group._lattice


def cl_meet(lattice: CentralizerLattice, s: int, t: int) -> int:
    return lattice.meet_table[s][t]


def cl_join(lattice: CentralizerLattice, s: int, t: int) -> int:
    return lattice.join_table[s][t]


def cl_involution(lattice: CentralizerLattice, s: int) -> int:
    return lattice.involution[s]


# ---------------------------------------------------------------------------
# maps between lattices


@dataclass(frozen=True)
class LatticeMap:
    """A node map between two centralizer lattices."""

    source: CentralizerLattice
    target: CentralizerLattice
    node_map: tuple[int, ...]

    def apply(self, s: int) -> int:
        return self.node_map[s]

    def is_bijective(self) -> bool:
        return (
            len(self.source.nodes) == len(self.target.nodes)
            and len(set(self.node_map)) == len(self.node_map)
        )

    def __repr__(self) -> str:
        return f"LatticeMap({len(self.source.nodes)} -> {len(self.target.nodes)} nodes)"


def induced_map(
    phi: GroupHom,
    source_lattice: CentralizerLattice | None = None,
    target_lattice: CentralizerLattice | None = None,
    cap: int = DEFAULT_ORDER_CAP,
) -> LatticeMap:
    """The node map sending C(A) to phi(C(A)), defined for crh surjections.

    Verifies the definitional centralizer-respecting property first and
    raises :class:`NotCrhError` (with the witness subgroup) when it fails.
    """
    source_lattice = source_lattice or lattice_of(phi.source, cap)
    target_lattice = target_lattice or lattice_of(phi.target, cap)
    if not source_lattice.group.same_table(phi.source):
        raise DomainMismatchError("source lattice does not belong to the map's source")
    if not target_lattice.group.same_table(phi.target):
        raise DomainMismatchError("target lattice does not belong to the map's target")
    verdict = is_centralizer_respecting(phi, cap)
    if not verdict:
        w = verdict.witness
        raise NotCrhError(
            "homomorphism does not respect centralizers "
            f"(witness subgroup {list(w.subgroup)})",
            witness=w,
        )
    mapping = []
    for node in source_lattice.nodes:
        img = 0
        for a in node.members:
            img |= 1 << phi.mapping[a]
        idx = target_lattice.index_of_mask.get(img)
        if idx is None:
            raise ImageNotANodeError(node.members, tuple(_bits(img)))
        mapping.append(idx)
    return LatticeMap(source_lattice, target_lattice, tuple(mapping))


def _same_lattice(a: CentralizerLattice, b: CentralizerLattice) -> bool:
    return a.group.same_table(b.group) and a.node_masks == b.node_masks


def compose_lattice_maps(outer: LatticeMap, inner: LatticeMap) -> LatticeMap:
    if not _same_lattice(inner.target, outer.source):
        raise DomainMismatchError("cannot compose: inner target lattice differs from outer source")
    return LatticeMap(
        inner.source, outer.target, tuple(outer.node_map[v] for v in inner.node_map)
    )


def invert_lattice_map(m: LatticeMap) -> LatticeMap:
    if not m.is_bijective():
        raise DomainMismatchError("only bijective lattice maps can be inverted")
    inverse = [0] * len(m.node_map)
    for s, t in enumerate(m.node_map):
        inverse[t] = s
    return LatticeMap(m.target, m.source, tuple(inverse))


def identity_lattice_map(lattice: CentralizerLattice) -> LatticeMap:
    return LatticeMap(lattice, lattice, tuple(range(len(lattice.nodes))))


@dataclass(frozen=True)
class LatticeHomVerdict:
    """Whether a lattice map preserves meet, join and the involution.

    ``law``/``witness`` describe the first failure (pairs scanned in
    ascending order).  Top/bottom preservation is reported but does not by
    itself fail the verdict; for the maps this package builds it always
    holds when the laws do.
    """

    ok: bool
    law: str | None = None
    witness: tuple[int, ...] | None = None
    preserves_top: bool = True
    preserves_bottom: bool = True

    def __bool__(self) -> bool:
        return self.ok


def is_lattice_hom(m: LatticeMap) -> LatticeHomVerdict:
    src, dst, f = m.source, m.target, m.node_map
    count = len(src.nodes)
    preserves_top = f[src.top] == dst.top
    preserves_bottom = f[src.bottom] == dst.bottom
    for s in range(count):
        if dst.involution[f[s]] != f[src.involution[s]]:
            return LatticeHomVerdict(False, "involution", (s,), preserves_top, preserves_bottom)
    for s in range(count):
        for t in range(s, count):
            if f[src.meet_table[s][t]] != dst.meet_table[f[s]][f[t]]:
                return LatticeHomVerdict(False, "meet", (s, t), preserves_top, preserves_bottom)
            if f[src.join_table[s][t]] != dst.join_table[f[s]][f[t]]:
                return LatticeHomVerdict(False, "join", (s, t), preserves_top, preserves_bottom)
    return LatticeHomVerdict(True, None, None, preserves_top, preserves_bottom)


# ---------------------------------------------------------------------------
# lattice isomorphism


def _order_fingerprints(lattice: CentralizerLattice) -> list[tuple]:
    """Per-node invariants of the abstract (lattice + involution) structure.

    Deliberately ignores subgroup sizes: different groups can carry the same
    abstract lattice on subgroups of different orders.
    """
    count = len(lattice.nodes)
    leq = lattice.leq_masks
    down = [sum(1 for j in range(count) if leq[j] >> i & 1) for i in range(count)]
    up = [leq[i].bit_count() for i in range(count)]
    heights = [0] * count
    for i in sorted(range(count), key=lambda v: down[v]):
        below = [j for j in range(count) if j != i and leq[j] >> i & 1]
        heights[i] = 1 + max((heights[j] for j in below), default=-1)
    fixed = [lattice.involution[i] == i for i in range(count)]
    base = [
        (down[i], up[i], heights[i], fixed[i])
        for i in range(count)
    ]
    return [(base[i], base[lattice.involution[i]]) for i in range(count)]


def lattices_isomorphic(
    a: CentralizerLattice, b: CentralizerLattice, node_cap: int = DEFAULT_NODE_CAP
) -> LatticeMap | None:
    """An isomorphism of bounded involution lattices a -> b, or None.

    Matches only order structure (and the induced meet/join/involution),
    never the underlying subgroup sizes.  Deterministic backtracking over
    fingerprint-compatible candidates; the found map is verified in full
    before being returned.
    """
    count = len(a.nodes)
    if count > node_cap or len(b.nodes) > node_cap:
        raise NodeCapExceededError(max(count, len(b.nodes)), node_cap)
    if count != len(b.nodes):
        return None
    fa, fb = _order_fingerprints(a), _order_fingerprints(b)
    if sorted(fa) != sorted(fb):
        return None
    candidates = [[j for j in range(count) if fb[j] == fa[i]] for i in range(count)]
    leq_a, leq_b = a.leq_masks, b.leq_masks
    mapping = [-1] * count
    used = [False] * count

    def consistent(i: int, j: int) -> bool:
        for s in range(i):
            t = mapping[s]
            if (leq_a[s] >> i & 1) != (leq_b[t] >> j & 1):
                return False
            if (leq_a[i] >> s & 1) != (leq_b[j] >> t & 1):
                return False
        w = a.involution[i]
        if w < i and mapping[w] != -1 and b.involution[j] != mapping[w]:
            return False
        return True

    def search(i: int) -> bool:
        if i == count:
            return True
        for j in candidates[i]:
            if used[j] or not consistent(i, j):
                continue
            mapping[i] = j
            used[j] = True
            if search(i + 1):
                return True
            mapping[i] = -1
            used[j] = False
        return False

    if not search(0):
        return None
    result = LatticeMap(a, b, tuple(mapping))
    verdict = is_lattice_hom(result)
    assert verdict and result.is_bijective(), "search must return a verified isomorphism"
    return result


# ---------------------------------------------------------------------------
# functor laws


@dataclass(frozen=True)
class FunctorialityVerdict:
    ok: bool
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_functoriality(
    phi: GroupHom, psi: GroupHom, cap: int = DEFAULT_ORDER_CAP
) -> FunctorialityVerdict:
    """Check the functor laws on a composable pair of crh surjections.

    Verifies that identities induce identities on all three lattices, that
    the induced map of ``psi o phi`` equals the composite of the induced
    maps, and that every induced map involved is a lattice homomorphism.
    """
    if not phi.target.same_table(psi.source):
        raise DomainMismatchError("pair is not composable: phi.target differs from psi.source")
    from .homs import compose  # local import to avoid a cycle at module load

    failures = []
    for g in (phi.source, phi.target, psi.target):
        lat = lattice_of(g, cap)
        ind = induced_map(identity_hom(g), lat, lat, cap)
        if ind.node_map != tuple(range(len(lat.nodes))):
            failures.append(f"identity law fails on lattice of order-{g.order} group")
    m_phi = induced_map(phi, cap=cap)
    m_psi = induced_map(psi, cap=cap)
    m_comp = induced_map(compose(psi, phi), cap=cap)
    if m_comp.node_map != compose_lattice_maps(m_psi, m_phi).node_map:
        failures.append("composition law fails: induced(psi o phi) != induced(psi) o induced(phi)")
    for name, m in (("phi", m_phi), ("psi", m_psi), ("psi o phi", m_comp)):
        verdict = is_lattice_hom(m)
        if not verdict:
            failures.append(f"induced map of {name} breaks the {verdict.law} law")
    return FunctorialityVerdict(not failures, tuple(failures))


# ---------------------------------------------------------------------------
# export


def lattice_to_json(lattice: CentralizerLattice) -> dict:
    pairs = [
        [i, j]
        for i in range(len(lattice.nodes))
        for j in range(len(lattice.nodes))
        if lattice.leq(i, j)
    ]
    return {
        "group_order": lattice.group.order,
        "nodes": [
            {"id": i, "order": len(n), "members": list(n.members)}
            for i, n in enumerate(lattice.nodes)
        ],
        "leq": pairs,
        "involution": list(lattice.involution),
        "top": lattice.top,
        "bottom": lattice.bottom,
    }


def lattice_to_dot(lattice: CentralizerLattice) -> str:
    """Graphviz source for the Hasse diagram.

    Edges point from covering node to covered node, so the top sits at rank
    0; the involution is drawn as dashed undirected edges between paired
    nodes (self-paired nodes get none).
    """
    lines = ["digraph centralizer_lattice {", "  rankdir=TB;", '  node [shape=box];']
    for i, node in enumerate(lattice.nodes):
        lines.append(f'  N{i} [label="N{i} (|.|={len(node)})"];')
    for parent, child in lattice.covers():
        lines.append(f"  N{parent} -> N{child};")
    for i, j in enumerate(lattice.involution):
        if i < j:
            lines.append(f"  N{i} -> N{j} [style=dashed, dir=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
