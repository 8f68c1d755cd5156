"""Finite groups as validated multiplication tables.

Elements of a group of order n are the indices 0..n-1.  A group is stored as
its full multiplication table; construction validates the four group axioms
and locates the identity (which need not be index 0).  Subsets of a group are
:class:`SubgroupSet` values backed by an integer bitmask, so intersection,
union and containment are single machine-word operations for the orders this
package targets (a few hundred elements at most).
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
    NotClosedError,
    OrderCapExceededError,
    TableJsonError,
)

#: Default ceiling on group order for the expensive enumerations.
DEFAULT_ORDER_CAP = 256


def _bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


class FiniteGroup:
    """A finite group given by its multiplication table.

    Instances are immutable once built; derived data (centralizer masks,
    element orders, the subgroup list, ...) is computed lazily and cached on
    the instance.  Use :func:`from_multiplication_table` to construct one
    from untrusted data.
    """

    def __init__(
        self,
        order: int,
        table: tuple[tuple[int, ...], ...],
        identity: int,
        inverse: tuple[int, ...],
        generator_names: tuple[tuple[str, int], ...],
        element_labels: tuple[str, ...] | None = None,
    ) -> None:
        self.order = order
        self.table = table
        self.identity = identity
        self.inverse = inverse
        self.generator_names = generator_names
        self.element_labels = element_labels
        self.full_mask = (1 << order) - 1
        # lazy caches
        self._cent_masks: tuple[int, ...] | None = None
        self._element_orders: tuple[int, ...] | None = None
        self._subgroups: tuple[SubgroupSet, ...] | None = None
        self._commutator_set: frozenset[int] | None = None
        self._lattice = None  # set by centlat.lattice

    # -- basic operations ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        result = self.identity
        base = a
        while k:
            if k & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        return self.element_orders()[a]

    def element_orders(self) -> tuple[int, ...]:
        if self._element_orders is None:
            orders = []
            for a in range(self.order):
                k, x = 1, a
                while x != self.identity:
                    x = self.table[x][a]
                    k += 1
                orders.append(k)
            self._element_orders = tuple(orders)
        return self._element_orders

    def label(self, a: int) -> str:
        if self.element_labels is not None:
            return self.element_labels[a]
        return str(a)

    def is_abelian(self) -> bool:
        return center(self).mask == self.full_mask

    # -- plumbing -----------------------------------------------------------

    def centralizer_masks(self) -> tuple[int, ...]:
        """For each element x, the bitmask of elements commuting with x."""
        if self._cent_masks is None:
            t = self.table
            masks = []
            for x in range(self.order):
                row = t[x]
                m = 0
                for g in range(self.order):
                    if t[g][x] == row[g]:
                        m |= 1 << g
                masks.append(m)
            self._cent_masks = tuple(masks)
        return self._cent_masks

    def same_table(self, other: "FiniteGroup") -> bool:
        """True when the two objects describe literally the same table."""
        return self is other or (self.order == other.order and self.table == other.table)

    def __repr__(self) -> str:
        gens = ",".join(name for name, _ in self.generator_names)
        return f"FiniteGroup(order={self.order}, generators=[{gens}])"


class SubgroupSet:
    """A subgroup of a fixed :class:`FiniteGroup`, stored as a bitmask.

    The public constructor validates that the members actually form a
    subgroup (identity, closure, inverses, and Lagrange divisibility as a
    final sanity assert).  Code inside the package that has just produced a
    closed set goes through :meth:`_from_mask` to skip the re-check.
    """

    __slots__ = ("group", "mask", "members")

    def __init__(self, group: FiniteGroup, members: Iterable[int]) -> None:
        mask = 0
        for m in members:
            if not 0 <= m < group.order:
                raise ValueError(f"element index {m} out of range for order {group.order}")
            mask |= 1 << m
        self.group = group
        self.mask = mask
        self.members = tuple(_bits(mask))
        self.validate()

    @classmethod
    def _from_mask(cls, group: FiniteGroup, mask: int) -> "SubgroupSet":
        self = object.__new__(cls)
        self.group = group
        self.mask = mask
        self.members = tuple(_bits(mask))
        return self

    def validate(self) -> None:
        g = self.group
        if not self.mask >> g.identity & 1:
            raise ValueError("subgroup set does not contain the identity")
        t, inverse, mask = g.table, g.inverse, self.mask
        for a in self.members:
            if not mask >> inverse[a] & 1:
                raise ValueError(f"subgroup set is missing the inverse of {a}")
            row = t[a]
            for b in self.members:
                if not mask >> row[b] & 1:
                    raise ValueError(f"subgroup set is not closed: {a}*{b} escapes")
        assert g.order % len(self.members) == 0, "subgroup order must divide group order"

    # -- set behaviour --------------------------------------------------------

    def __contains__(self, element: int) -> bool:
        return bool(self.mask >> element & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.mask == other.mask and self.group.same_table(other.group)

    def __hash__(self) -> int:
        return hash((self.mask, self.group.order))

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.mask & ~other.mask == 0

    def __and__(self, other: "SubgroupSet") -> "SubgroupSet":
        return SubgroupSet._from_mask(self.group, self.mask & other.mask)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.members), self.members)

    def is_trivial(self) -> bool:
        return self.members == (self.group.identity,)

    def is_whole_group(self) -> bool:
        return self.mask == self.group.full_mask

    def __repr__(self) -> str:
        return f"SubgroupSet(order={len(self.members)}, members={list(self.members)})"


# ---------------------------------------------------------------------------
# construction and validation


def from_multiplication_table(
    order: int,
    table: Iterable[Iterable[int]],
    generator_hints: Iterable[tuple[str, int]] | None = None,
    element_labels: Iterable[str] | None = None,
) -> FiniteGroup:
    """Validate a multiplication table and wrap it as a :class:`FiniteGroup`.

    Checks run in a fixed order so error reporting is deterministic: entry
    range (closure), identity, inverses, associativity.  ``generator_hints``
    names distinguished elements; when omitted a small generating set is
    chosen greedily.  The validated table is a Latin square as a consequence
    of the group axioms; no separate check is needed.
    """
    if order < 1:
        raise NotClosedError(0, 0, order)
    rows = [tuple(r) for r in table]
    if len(rows) != order:
        raise NotClosedError(0, 0, f"expected {order} rows, got {len(rows)}")
    for a, row in enumerate(rows):
        if len(row) != order:
            raise NotClosedError(a, 0, f"row of length {len(row)}")
        for b, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not 0 <= v < order:
                raise NotClosedError(a, b, v)
    arr = np.array(rows, dtype=np.int64)

    idx = np.arange(order)
    row_ok = np.all(arr == idx[None, :], axis=1)
    col_ok = np.all(arr == idx[:, None], axis=0)
    both = np.nonzero(row_ok & col_ok)[0]
    if len(both) == 0:
        raise NoIdentityError()
    identity = int(both[0])

    inverse = [0] * order
    for a in range(order):
        hits = np.nonzero(arr[a] == identity)[0]
        if len(hits) == 0 or arr[int(hits[0]), a] != identity:
            raise NoInverseError(a)
        inverse[a] = int(hits[0])

    # (a*b)*c vs a*(b*c), fully vectorised; int16 keeps the n^3 cube small.
    small = arr.astype(np.int16)
    left = small[arr]  # left[a,b,c] = table[table[a,b], c]
    right = small[:, arr]  # right[a,b,c] = table[a, table[b,c]]
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise NotAssociativeError(a, b, c, int(left[a, b, c]), int(right[a, b, c]))

    labels = None
    if element_labels is not None:
        labels = tuple(str(s) for s in element_labels)
        if len(labels) != order:
            raise ValueError(f"expected {order} element labels, got {len(labels)}")

    group = FiniteGroup(order, tuple(rows), identity, tuple(inverse), (), labels)
    if generator_hints is not None:
        hints = tuple((str(name), int(i)) for name, i in generator_hints)
        for name, i in hints:
            if not 0 <= i < order:
                raise ValueError(f"generator {name!r} index {i} out of range")
        if _close_mask(group, _mask_of(i for _, i in hints)) != group.full_mask:
            raise ValueError("generator hints do not generate the group")
        group.generator_names = hints
    else:
        group.generator_names = _greedy_generators(group)
    return group


def _greedy_generators(group: FiniteGroup) -> tuple[tuple[str, int], ...]:
    """Pick a small generating set, extending by the lowest uncovered index."""
    chosen: list[int] = []
    mask = 1 << group.identity
    while mask != group.full_mask:
        g = (~mask & group.full_mask)
        g = (g & -g).bit_length() - 1  # lowest element not yet generated
        chosen.append(g)
        mask = _close_mask(group, mask | (1 << g))
    return tuple((f"g{k}", g) for k, g in enumerate(chosen))


# ---------------------------------------------------------------------------
# closure, centralizers, commutators


def _close_mask(group: FiniteGroup, seed_mask: int) -> int:
    """Smallest subgroup mask containing ``seed_mask``.

    Inductive coset extension (Dimino): grow a subgroup H one generator at a
    time; the extension by s is the union of right cosets H*r, with new coset
    representatives found by multiplying known ones by the generators so far.
    Roughly linear in the result size, where naive pair saturation is
    quadratic.
    """
    t = group.table
    mask = 1 << group.identity
    gens: list[int] = []
    for s in _bits(seed_mask):
        if mask >> s & 1:
            continue
        h_elems = _bits(mask)
        gens.append(s)
        new_mask = mask
        reps = [s]
        for h in h_elems:
            new_mask |= 1 << t[h][s]
        i = 0
        while i < len(reps):
            row = t[reps[i]]
            for g in gens:
                x = row[g]
                if not new_mask >> x & 1:
                    reps.append(x)
                    for h in h_elems:
                        new_mask |= 1 << t[h][x]
            i += 1
        mask = new_mask
    return mask


def closure(group: FiniteGroup, seed: Iterable[int]) -> SubgroupSet:
    """Subgroup generated by ``seed`` (which may be empty: the trivial subgroup)."""
    return SubgroupSet._from_mask(group, _close_mask(group, _mask_of(seed)))


def _members_of(group: FiniteGroup, target) -> tuple[int, ...]:
    if isinstance(target, SubgroupSet):
        return target.members
    return tuple(target)


def centralizer(group: FiniteGroup, target) -> SubgroupSet:
    """Elements commuting with everything in ``target``.

    ``target`` may be any iterable of element indices or a
    :class:`SubgroupSet`; the empty set yields the whole group.
    """
    masks = group.centralizer_masks()
    out = group.full_mask
    for x in _members_of(group, target):
        out &= masks[x]
    return SubgroupSet._from_mask(group, out)


def center(group: FiniteGroup) -> SubgroupSet:
    return centralizer(group, range(group.order))


def commutator_set(group: FiniteGroup) -> frozenset[int]:
    """The set of commutators a^-1 b^-1 a b — the set itself, not its closure."""
    if group._commutator_set is None:
        t, inverse = group.table, group.inverse
        found = set()
        for a in range(group.order):
            ia = inverse[a]
            for b in range(group.order):
                found.add(t[t[t[ia][inverse[b]]][a]][b])
        group._commutator_set = frozenset(found)
    return group._commutator_set


def derived_subgroup(group: FiniteGroup) -> SubgroupSet:
    """Closure of the commutator set."""
    return closure(group, commutator_set(group))


def is_central(group: FiniteGroup, s: SubgroupSet) -> bool:
    return s.mask & ~center(group).mask == 0


# ---------------------------------------------------------------------------
# subgroup enumeration


def all_subgroups(group: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> tuple[SubgroupSet, ...]:
    """Every subgroup of ``group``, sorted by (order, members), cached.

    Seeds with all cyclic subgroups, then saturates under pairwise join
    (closure of union); this reaches every subgroup because any subgroup is
    the join of the cyclic subgroups of its members.
    """
    if group.order > cap:
        raise OrderCapExceededError(group.order, cap)
    if group._subgroups is None:
        t = group.table
        seen: set[int] = set()
        masks: list[int] = []
        for g in range(group.order):
            m = 1 << group.identity
            x = g
            while not m >> x & 1:
                m |= 1 << x
                x = t[x][g]
            if m not in seen:
                seen.add(m)
                masks.append(m)
        i = 0
        while i < len(masks):
            a = masks[i]
            for j in range(i):
                b = masks[j]
                union = a | b
                if union == a or union == b:  # one contains the other
                    continue
                if 2 * union.bit_count() > group.order:
                    m = group.full_mask  # no proper subgroup exceeds index 2
                else:
                    m = _close_mask(group, union)
                if m not in seen:
                    seen.add(m)
                    masks.append(m)
            i += 1
        subs = [SubgroupSet._from_mask(group, m) for m in masks]
        subs.sort(key=SubgroupSet.sort_key)
        group._subgroups = tuple(subs)
    return group._subgroups


# ---------------------------------------------------------------------------
# JSON round-trip

_GROUP_KEYS = {"order", "table", "generators", "labels"}


def group_to_json(group: FiniteGroup) -> dict:
    doc: dict = {"order": group.order, "table": [list(r) for r in group.table]}
    if group.generator_names:
        doc["generators"] = {name: i for name, i in group.generator_names}
    if group.element_labels is not None:
        doc["labels"] = list(group.element_labels)
    return doc


def group_from_json(doc) -> FiniteGroup:
    """Load a group from a JSON document (text or already-parsed dict)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise TableJsonError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise TableJsonError("expected a JSON object describing a group")
    unknown = set(doc) - _GROUP_KEYS
    if unknown:
        raise TableJsonError(f"unknown keys in group document: {sorted(unknown)}")
    if "order" not in doc or "table" not in doc:
        raise TableJsonError("group document requires 'order' and 'table'")
    order, table = doc["order"], doc["table"]
    if not isinstance(order, int) or not isinstance(table, list):
        raise TableJsonError("'order' must be an int and 'table' a list of rows")
    gens = None
    if "generators" in doc:
        g = doc["generators"]
        if not isinstance(g, dict) or not all(isinstance(v, int) for v in g.values()):
            raise TableJsonError("'generators' must map names to element indices")
        gens = tuple(sorted(g.items()))
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(s, str) for s in labels)
    ):
        raise TableJsonError("'labels' must be a list of strings")
    try:
        return from_multiplication_table(order, table, gens, labels)
    except ValueError as e:  # label/generator problems are document problems here
        raise TableJsonError(str(e)) from e
