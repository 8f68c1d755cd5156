"""Batch verification suites behind `centlat verify`.

Each suite returns a deterministic report dict::

    {"suite": <name>, "cases": [{"name", "pass", "detail"}, ...], "pass": <bool>}

Whenever both decision routes for the centralizer-respecting property are
available they are both run; disagreement raises
:class:`~centlat.errors.InternalInconsistencyError` instead of trusting
either one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    FiniteGroup,
    SubgroupSet,
    all_subgroups,
    center,
    commutator_set,
)
from .errors import InternalInconsistencyError
from .expr import eval_group_expr, parse_group_expr
from .families import catalog, cover_group, make_family
from .homs import (
    CentralKernelVerdict,
    CrhVerdict,
    GroupHom,
    crh_central_kernel_criterion,
    group_isomorphic,
    identity_hom,
    quotient,
    is_centralizer_respecting,
)
from .lattice import (
    compose_lattice_maps,
    induced_map,
    invert_lattice_map,
    is_lattice_hom,
    lattice_of,
    lattices_isomorphic,
    verify_functoriality,
)


def _case(name: str, ok: bool, detail: str) -> dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


def _finish(suite: str, cases: list[dict]) -> dict:
    return {"suite": suite, "cases": cases, "pass": all(c["pass"] for c in cases)}


# ---------------------------------------------------------------------------
# the central-quotient sweep shared by two suites


@dataclass(frozen=True)
class ProjectionRecord:
    """One central quotient of a catalog group, with both crh verdicts."""

    group_name: str
    group: FiniteGroup
    kernel: SubgroupSet
    quotient_group: FiniteGroup
    projection: GroupHom
    definitional: CrhVerdict
    criterion: CentralKernelVerdict


_sweep_cache: dict[int, tuple[ProjectionRecord, ...]] = {}


def central_quotient_sweep(max_order: int = 32) -> tuple[ProjectionRecord, ...]:
    """Quotient every catalog group by each of its central subgroups and run
    both crh routes on the projection.  Disagreement raises immediately."""
    if max_order in _sweep_cache:
        return _sweep_cache[max_order]
    records = []
    for name, g in catalog(max_order):
        zmask = center(g).mask
        for sub in all_subgroups(g):
            if sub.mask & ~zmask:
                continue
            q, proj = quotient(g, sub)
            criterion = crh_central_kernel_criterion(proj)
            definitional = is_centralizer_respecting(proj)
            if bool(criterion) != bool(definitional):
                raise InternalInconsistencyError(
                    f"crh routes disagree on {name} with kernel {list(sub.members)}: "
                    f"criterion={bool(criterion)}, definitional={bool(definitional)}"
                )
            records.append(
                ProjectionRecord(name, g, sub, q, proj, definitional, criterion)
            )
    result = tuple(records)
    _sweep_cache[max_order] = result
    return result


def central_kernel_sweep_report(max_order: int = 32) -> dict:
    records = central_quotient_sweep(max_order)
    cases = []
    by_group: dict[str, list[ProjectionRecord]] = {}
    for r in records:
        by_group.setdefault(r.group_name, []).append(r)
    for name, recs in by_group.items():
        crh = sum(1 for r in recs if r.definitional.ok)
        cases.append(
            _case(
                f"{name}: commutator criterion agrees with the definitional check",
                True,
                f"{len(recs)} central kernels, {crh} centralizer-respecting",
            )
        )
    return _finish("theoremc-sweep", cases)


# ---------------------------------------------------------------------------
# the worked example


def worked_example_report() -> dict:
    """The order-16 twisted product with a central order-2 kernel whose
    quotient is the quaternion group of order 8."""
    cases = []
    g = eval_group_expr(parse_group_expr("semidirect(4,4,3)")).group
    z = center(g)
    cases.append(
        _case(
            "base group has order 16 with center of order 4",
            g.order == 16 and len(z) == 4,
            f"order={g.order}, center={[g.label(a) for a in z]}",
        )
    )
    lat = lattice_of(g)
    cases.append(
        _case(
            "centralizer lattice has 5 nodes of orders [4, 8, 8, 8, 16]",
            lat.node_orders() == (4, 8, 8, 8, 16),
            f"node orders {list(lat.node_orders())}",
        )
    )
    result = eval_group_expr(parse_group_expr("quotient(semidirect(4,4,3),[x^2*y^2])"))
    proj = result.projection
    ker_members = tuple(a for a, v in enumerate(proj.mapping) if v == result.group.identity)
    comms = commutator_set(g)
    cases.append(
        _case(
            "kernel is central of order 2 and avoids nontrivial commutators",
            len(ker_members) == 2
            and all(k == g.identity or k not in comms for k in ker_members)
            and all(z.mask >> k & 1 for k in ker_members),
            f"kernel={[g.label(a) for a in ker_members]}, "
            f"commutators={sorted(g.label(c) for c in comms)}",
        )
    )
    q8 = make_family("quaternion", 8)
    iso = group_isomorphic(result.group, q8)
    cases.append(
        _case(
            "quotient is isomorphic to quaternion(8)",
            result.group.order == 8 and iso is not None,
            f"quotient order {result.group.order}",
        )
    )
    criterion = crh_central_kernel_criterion(proj)
    definitional = is_centralizer_respecting(proj)
    if bool(criterion) != bool(definitional):
        raise InternalInconsistencyError("crh routes disagree on the worked example")
    cases.append(
        _case(
            "projection respects centralizers (both routes)",
            bool(criterion) and bool(definitional),
            "commutator criterion and definitional sweep both pass",
        )
    )
    qlat = lattice_of(result.group)
    ind = induced_map(proj, lat, qlat)
    hom_verdict = is_lattice_hom(ind)
    cases.append(
        _case(
            "induced lattice map is a bijective lattice isomorphism",
            ind.is_bijective() and bool(hom_verdict),
            f"quotient lattice node orders {list(qlat.node_orders())}, "
            f"node map {list(ind.node_map)}",
        )
    )
    return _finish("figure3", cases)


# ---------------------------------------------------------------------------
# family lattices agree, directly and through the covers


def _cover_route(kind: str, n: int, first_family: str, second_family: str, cases: list[dict]):
    """Verify one cover: both projections crh by the commutator criterion,
    both induced maps bijective, and the composite lattice isomorphism
    between the two family groups.  Returns the composite map."""
    cov = cover_group(kind, n)
    legs = []
    for z, family in ((cov.z_first, first_family), (cov.z_second, second_family)):
        fam = make_family(family, 1 << n)
        q, proj = quotient(cov.group, z)
        criterion = crh_central_kernel_criterion(proj)
        cases.append(
            _case(
                f"{kind}(n={n}): projection mod {cov.group.label(z.members[-1])} "
                "passes the commutator criterion",
                bool(criterion),
                f"kernel {[cov.group.label(a) for a in z.members]}",
            )
        )
        ind = induced_map(proj)  # enforces the definitional route internally
        bridge_iso = group_isomorphic(q, fam)
        if bridge_iso is None:
            cases.append(
                _case(f"{kind}(n={n}): quotient is {family}({1 << n})", False, "no isomorphism")
            )
            return None
        bridge = induced_map(bridge_iso)
        leg = compose_lattice_maps(bridge, ind)
        cases.append(
            _case(
                f"{kind}(n={n}): induced map onto the {family}({1 << n}) lattice "
                "is a bijective lattice homomorphism",
                leg.is_bijective() and bool(is_lattice_hom(leg)),
                f"{len(leg.source.nodes)} nodes",
            )
        )
        legs.append(leg)
    route = compose_lattice_maps(legs[1], invert_lattice_map(legs[0]))
    cases.append(
        _case(
            f"{kind}(n={n}): composite {first_family}({1 << n}) ~ {second_family}({1 << n}) "
            "lattice isomorphism verified",
            route.is_bijective() and bool(is_lattice_hom(route)),
            f"node map {list(route.node_map)}",
        )
    )
    return route


def family_lattice_report(n: int) -> dict:
    """dihedral(2^n), quaternion(2^n) (and semidihedral(2^n) for n >= 4)
    carry isomorphic centralizer lattices: checked directly and re-derived
    through the two covers."""
    cases: list[dict] = []
    order = 1 << n
    fam_names = ["dihedral", "quaternion"] + (["semidihedral"] if n >= 4 else [])
    fams = {name: make_family(name, order) for name in fam_names}
    for i, a in enumerate(fam_names):
        for b in fam_names[i + 1 :]:
            found = lattices_isomorphic(lattice_of(fams[a]), lattice_of(fams[b]))
            cases.append(
                _case(
                    f"direct search: {a}({order}) and {b}({order}) lattices isomorphic",
                    found is not None,
                    f"{len(lattice_of(fams[a]).nodes)} nodes each",
                )
            )
    routes = [_cover_route("dihedral_quaternion", n, "dihedral", "quaternion", cases)]
    if n >= 4:
        routes.append(
            _cover_route("quaternion_semidihedral", n, "quaternion", "semidihedral", cases)
        )
        if all(r is not None for r in routes):
            combined = compose_lattice_maps(routes[1], routes[0])
            cases.append(
                _case(
                    f"composite dihedral({order}) ~ semidihedral({order}) through both covers",
                    combined.is_bijective() and bool(is_lattice_hom(combined)),
                    f"node map {list(combined.node_map)}",
                )
            )
    return _finish("corollary", cases)


# ---------------------------------------------------------------------------
# functor laws


def composable_pairs(
    records: tuple[ProjectionRecord, ...], target: int = 40
) -> list[tuple[ProjectionRecord, SubgroupSet, GroupHom]]:
    """Deterministic chained central quotients: follow each sweep projection
    with a quotient of its quotient by a central subgroup that passes the
    commutator criterion.  Pairs where both kernels are trivial are skipped;
    collection stops at ``target`` pairs."""
    pairs = []
    for r in records:
        if not r.definitional.ok:
            continue
        h = r.quotient_group
        zmask = center(h).mask
        for sub in all_subgroups(h):
            if sub.mask & ~zmask:
                continue
            if r.kernel.is_trivial() and sub.is_trivial():
                continue
            q2, proj2 = quotient(h, sub)
            if not crh_central_kernel_criterion(proj2):
                continue
            pairs.append((r, sub, proj2))
            if len(pairs) >= target:
                return pairs
    return pairs


def functor_law_report(max_order: int = 32, min_pairs: int = 25) -> dict:
    cases = []
    entries = catalog(max_order)
    identity_ok = 0
    for name, g in entries:
        lat = lattice_of(g)
        ind = induced_map(identity_hom(g), lat, lat)
        if ind.node_map == tuple(range(len(lat.nodes))):
            identity_ok += 1
    cases.append(
        _case(
            "identity homomorphisms induce identity lattice maps",
            identity_ok == len(entries),
            f"{identity_ok}/{len(entries)} catalog lattices",
        )
    )
    records = central_quotient_sweep(max_order)
    crh_records = [r for r in records if r.definitional.ok]
    hom_ok = 0
    for r in crh_records:
        ind = induced_map(r.projection)
        verdict = is_lattice_hom(ind)
        if verdict and verdict.preserves_top and verdict.preserves_bottom:
            hom_ok += 1
    cases.append(
        _case(
            "every centralizer-respecting projection induces a bounded lattice homomorphism",
            hom_ok == len(crh_records),
            f"{hom_ok}/{len(crh_records)} projections "
            f"(meet, join, involution, top and bottom preserved)",
        )
    )
    pairs = composable_pairs(records)
    comp_ok = 0
    for r, sub, proj2 in pairs:
        if verify_functoriality(r.projection, proj2):
            comp_ok += 1
    cases.append(
        _case(
            f"composition law on chained central quotients (minimum {min_pairs} pairs)",
            len(pairs) >= min_pairs and comp_ok == len(pairs),
            f"{comp_ok}/{len(pairs)} composable pairs verified",
        )
    )
    return _finish("functor-laws", cases)


SUITES = {
    "figure3": worked_example_report,
    "corollary": family_lattice_report,
    "theoremc-sweep": central_kernel_sweep_report,
    "functor-laws": functor_law_report,
}
