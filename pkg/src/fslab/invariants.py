"""Lattice invariants of finite modules and the verifiers built on them.

Every invariant is computed from its literal definition on the submodule
lattice, and where a second characterization exists (radical as a meet of
maximals or as a join of smalls, Goldie dimension versus the length of the
socle, ...) both routes are evaluated.  Functions prefixed ``lattice_`` work on
any :class:`~fslab.lattice.Lattice`, which lets the same code serve submodules
(intervals ``[0, N]``), quotients (intervals ``[N, M]``) and the S-module view.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CeilingError, InconsistencyError
from .lattice import Lattice, essential_nodes, small_nodes
from .modules import FiniteModule, Submodule, projection_hom, quotient, submodule_lattice
from .results import CheckResult

MAX_FAMILY = 16


def _interval(lat: Lattice, lo: int, hi: int) -> Lattice:
    key = ("interval", lo, hi)
    if key not in lat.memo:
        lat.memo[key] = lat.interval(lo, hi)
    return lat.memo[key]


def _below(lat: Lattice, i: int) -> Lattice:
    return _interval(lat, lat.bottom, i)


def _above(lat: Lattice, i: int) -> Lattice:
    return _interval(lat, i, lat.top)


def _to_parent(sub: Lattice, i: int) -> int:
    return sub.parent_index[i]


# -- radical and socle ---------------------------------------------------------


def lattice_radical(lat: Lattice) -> int:
    """Meet of the maximal nodes, checked against the join of the small nodes."""
    coatoms = lat.coatoms()
    via_max = lat.meet_all(coatoms) if coatoms else lat.top
    via_small = lat.join_all(small_nodes(lat))
    if via_max != via_small:
        raise InconsistencyError(
            f"radical via maximal submodules ({via_max}) differs from join of small submodules ({via_small})"
        )
    return via_max


def lattice_socle(lat: Lattice) -> int:
    """Join of the minimal nodes, checked against the meet of the essential nodes."""
    via_min = lat.join_all(lat.atoms())
    via_ess = lat.meet_all(essential_nodes(lat))
    if via_min != via_ess:
        raise InconsistencyError(
            f"socle via minimal submodules ({via_min}) differs from meet of essential submodules ({via_ess})"
        )
    return via_min


# -- Goldie and hollow dimension -------------------------------------------------


def lattice_goldie_family(lat: Lattice) -> list[int]:
    """A largest independent family of nonzero nodes.

    Shrinking a member keeps a family independent, so an optimal family may be
    taken among the atoms.  Independence is built up one member at a time: a
    new member must meet the sum of the earlier ones trivially.  The best
    extension from a partial sum depends only on that sum, so the exhaustive
    search memoizes on it.
    """
    bottom = lat.bottom
    nonzero = lat.atoms()
    heights = lat.heights
    # every reachable partial sum lies below the join of the atoms
    ceiling_h = heights[lat.join_all(nonzero)]
    memo: dict[int, tuple[int, int | None]] = {}

    def best(S: int) -> int:
        hit = memo.get(S)
        if hit is not None:
            return hit[0]
        bound = ceiling_h - heights[S]
        b, choice = 0, None
        for N in nonzero:
            if lat.meet(N, S) != bottom:
                continue
            v = 1 + best(lat.join(S, N))
            if v > b:
                b, choice = v, N
                if b >= bound:
                    break
        memo[S] = (b, choice)
        return b

    best(bottom)
    family = []
    S = bottom
    while memo[S][1] is not None:
        N = memo[S][1]
        family.append(N)
        S = lat.join(S, N)
    if len(family) > MAX_FAMILY:
        raise CeilingError("independent family larger than the search ceiling", ceiling=MAX_FAMILY)
    return family


def is_independent(lat: Lattice, family) -> bool:
    for i, N in enumerate(family):
        rest = lat.join_all(f for j, f in enumerate(family) if j != i)
        if N == lat.bottom or lat.meet(N, rest) != lat.bottom:
            return False
    return True


def lattice_goldie_dimension(lat: Lattice) -> int:
    if "goldie" not in lat.memo:
        family = lattice_goldie_family(lat)
        if not is_independent(lat, family):
            raise InconsistencyError("Goldie witness family is not independent")
        lat.memo["goldie"] = family
    return len(lat.memo["goldie"])


def lattice_hollow_family(lat: Lattice) -> list[int]:
    """A largest coindependent family of proper nodes.

    Enlarging a member keeps a family coindependent, so the search runs over
    the coatoms.  A proper K extends a coindependent family with intersection
    T exactly when K + T is the top; the search memoizes on T.
    """
    top = lat.top
    proper = lat.coatoms()
    heights = lat.heights
    floor_h = heights[lat.meet_all(proper)]
    memo: dict[int, tuple[int, int | None]] = {}

    def best(T: int) -> int:
        hit = memo.get(T)
        if hit is not None:
            return hit[0]
        bound = heights[T] - floor_h
        b, choice = 0, None
        for K in proper:
            if lat.join(K, T) != top:
                continue
            v = 1 + best(lat.meet(T, K))
            if v > b:
                b, choice = v, K
                if b >= bound:
                    break
        memo[T] = (b, choice)
        return b

    best(top)
    family = []
    T = top
    while memo[T][1] is not None:
        K = memo[T][1]
        family.append(K)
        T = lat.meet(T, K)
    if len(family) > MAX_FAMILY:
        raise CeilingError("coindependent family larger than the search ceiling", ceiling=MAX_FAMILY)
    return family


def is_coindependent(lat: Lattice, family) -> bool:
    for i, K in enumerate(family):
        rest = lat.meet_all(f for j, f in enumerate(family) if j != i)
        if K == lat.top or lat.join(K, rest) != lat.top:
            return False
    return True


def lattice_hollow_dimension(lat: Lattice) -> int:
    if "hollow" not in lat.memo:
        family = lattice_hollow_family(lat)
        if not is_coindependent(lat, family):
            raise InconsistencyError("hollow witness family is not coindependent")
        lat.memo["hollow"] = family
    return len(lat.memo["hollow"])


# -- Krull and Noetherian dimension ------------------------------------------------


def _has_unbounded_chain(lat: Lattice, alpha: int, descending: bool, memo) -> bool:
    """Is there a monotone chain with infinitely many factors of deviation >= alpha?

    In a finite lattice such a chain must revisit a node, so this is cycle
    detection on the graph of qualifying strict steps.  For alpha = 0 every
    strict step qualifies and cycles in the strict order are cycles in the
    cover graph, so covers suffice.
    """
    n = len(lat)
    if alpha == 0:
        succ = lat.lower_covers if descending else lat.upper_covers
    else:
        succ = []
        for x in range(n):
            others = lat.nodes_below(x) if descending else lat.nodes_above(x)
            steps = []
            for y in others:
                if y == x:
                    continue
                lo, hi = (y, x) if descending else (x, y)
                if _deviation(_interval(lat, lo, hi), descending, memo) >= alpha:
                    steps.append(y)
            succ.append(steps)
    indeg = [0] * n
    for x in range(n):
        for y in succ[x]:
            indeg[y] += 1
    stack = [x for x in range(n) if indeg[x] == 0]
    seen = 0
    while stack:
        x = stack.pop()
        seen += 1
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    return seen < n


def _deviation(lat: Lattice, descending: bool, memo=None) -> int:
    key = ("deviation", descending)
    if key in lat.memo:
        return lat.memo[key]
    memo = {} if memo is None else memo
    if len(lat) == 1:
        value = -1
    else:
        value = 0
        while _has_unbounded_chain(lat, value, descending, memo):
            value += 1
    lat.memo[key] = value
    return value


def lattice_krull_dim(lat: Lattice) -> int:
    """Deviation of the lattice (descending chains); -1 for the zero module."""
    return _deviation(lat, descending=True)


def lattice_noeth_dim(lat: Lattice) -> int:
    """Dual deviation (ascending chains); -1 for the zero module."""
    return _deviation(lat, descending=False)


def lattice_dims(lat: Lattice) -> tuple[int, int, int, int]:
    return (
        lattice_goldie_dimension(lat),
        lattice_hollow_dimension(lat),
        lattice_krull_dim(lat),
        lattice_noeth_dim(lat),
    )


# -- module-level wrappers -----------------------------------------------------------


def _node(M: FiniteModule, N) -> int:
    lat = submodule_lattice(M)
    if isinstance(N, Submodule):
        if N.module is not None and N.module is not M:
            raise ValueError("submodule belongs to a different module")
        return lat.index[N.mask]
    return int(N)


def is_small(M: FiniteModule, N) -> bool:
    lat = submodule_lattice(M)
    i = _node(M, N)
    return all(lat.join(i, a) != lat.top for a in lat if a != lat.top)


def is_essential(M: FiniteModule, N) -> bool:
    lat = submodule_lattice(M)
    i = _node(M, N)
    return all(lat.meet(i, a) != lat.bottom for a in lat if a != lat.bottom)


def radical(M: FiniteModule) -> Submodule:
    lat = submodule_lattice(M)
    return lat.submodule(lattice_radical(lat))


def socle(M: FiniteModule) -> Submodule:
    lat = submodule_lattice(M)
    return lat.submodule(lattice_socle(lat))


def goldie_dimension(M: FiniteModule) -> int:
    return lattice_goldie_dimension(submodule_lattice(M))


def hollow_dimension(M: FiniteModule) -> int:
    return lattice_hollow_dimension(submodule_lattice(M))


def composition_length(M: FiniteModule) -> int:
    return submodule_lattice(M).length()


def krull_dim(M: FiniteModule) -> int:
    return lattice_krull_dim(submodule_lattice(M))


def noeth_dim(M: FiniteModule) -> int:
    return lattice_noeth_dim(submodule_lattice(M))


# -- classification ---------------------------------------------------------------


@dataclass
class InvariantReport:
    radical: Submodule
    socle: Submodule
    soc_of_rad: Submodule
    small_submodules: list
    essential_submodules: list
    minimal_submodules: list
    maximal_submodules: list
    goldie_dim: int
    hollow_dim: int
    length: int
    krull_dim: int
    noeth_dim: int
    fs: bool
    fsm: bool
    us: bool
    usm: bool
    local: bool
    dual_local: bool
    ue: bool
    homogeneous: bool
    homogeneous_in_module: bool
    finitely_embedded: bool
    semisimple: bool
    fs_small_count: int
    fsm_small_minimal_count: int
    lattice_size: int = 0
    goldie_family: list = field(default_factory=list)
    hollow_family: list = field(default_factory=list)


def lattice_is_local(lat: Lattice) -> bool:
    """Exactly one maximal node, and it contains every proper node."""
    co = lat.coatoms()
    if len(co) != 1:
        return False
    K = co[0]
    return all(lat.leq(a, K) for a in lat if a != lat.top)


def lattice_is_homogeneous(lat: Lattice) -> bool:
    """Every nonzero node N has a nonzero node small in [0, N]."""
    for N in lat:
        if N == lat.bottom:
            continue
        sub = _below(lat, N)
        if not any(s != sub.bottom for s in small_nodes(sub)):
            return False
    return True


def lattice_is_homogeneous_in_top(lat: Lattice) -> bool:
    """Every nonzero node contains a nonzero node small in the whole lattice."""
    smalls = [s for s in small_nodes(lat) if s != lat.bottom]
    return all(any(lat.leq(s, N) for s in smalls) for N in lat if N != lat.bottom)


def classify(M: FiniteModule) -> InvariantReport:
    lat = submodule_lattice(M)
    rad = lattice_radical(lat)
    soc = lattice_socle(lat)
    rad_lat = _below(lat, rad)
    soc_rad = _to_parent(rad_lat, lattice_socle(rad_lat))
    smalls = small_nodes(lat)
    essentials = essential_nodes(lat)
    atoms = lat.atoms()
    coatoms = lat.coatoms()
    nonzero_small = [s for s in smalls if s != lat.bottom]
    small_minimal = [a for a in atoms if a in smalls]
    proper_essential = [e for e in essentials if e != lat.top]
    sub = lat.submodule
    return InvariantReport(
        radical=sub(rad),
        socle=sub(soc),
        soc_of_rad=sub(soc_rad),
        small_submodules=[sub(i) for i in smalls],
        essential_submodules=[sub(i) for i in essentials],
        minimal_submodules=[sub(i) for i in atoms],
        maximal_submodules=[sub(i) for i in coatoms],
        goldie_dim=lattice_goldie_dimension(lat),
        hollow_dim=lattice_hollow_dimension(lat),
        length=lat.length(),
        krull_dim=lattice_krull_dim(lat),
        noeth_dim=lattice_noeth_dim(lat),
        fs=True,
        fsm=True,
        us=len(nonzero_small) == 1,
        usm=len(small_minimal) == 1,
        local=lattice_is_local(lat),
        dual_local=len(atoms) == 1,
        ue=len(proper_essential) == 1,
        homogeneous=lattice_is_homogeneous(lat),
        homogeneous_in_module=lattice_is_homogeneous_in_top(lat),
        finitely_embedded=soc in essentials,
        semisimple=soc == lat.top,
        fs_small_count=len(nonzero_small),
        fsm_small_minimal_count=len(small_minimal),
        lattice_size=len(lat),
        goldie_family=[sub(i) for i in lat.memo["goldie"]],
        hollow_family=[sub(i) for i in lat.memo["hollow"]],
    )


# -- structure theorem ------------------------------------------------------------


@dataclass
class Decomposition:
    semisimple_part: list
    complement: Submodule
    certificates: list
    semisimple_sum: Submodule


def _element_sum(M: FiniteModule, parts) -> np.ndarray:
    span = np.zeros(M.order, dtype=bool)
    span[0] = True
    for P in parts:
        ids = np.flatnonzero(span)
        nxt = np.zeros(M.order, dtype=bool)
        nxt[M.add[np.ix_(ids, np.asarray(P.elements))].ravel()] = True
        span = nxt
    return span


def decompose(M: FiniteModule) -> Decomposition:
    """Split M = N_1 + ... + N_m + K_m with N_i minimal non-small and Soc(K_m) small.

    Each step peels off the canonically least minimal submodule of the working
    module not inside Rad(M), complemented by the least maximal submodule of
    the working module that misses it.
    """
    lat = submodule_lattice(M)
    rad = lattice_radical(lat)
    smalls = set(small_nodes(lat))
    atoms = lat.atoms()
    W = lat.top
    parts, certs = [], []
    while True:
        cands = [a for a in atoms if lat.leq(a, W) and not lat.leq(a, rad)]
        if not cands:
            break
        N = cands[0]
        comps = [k for k in lat.lower_covers[W] if not lat.leq(N, k)]
        if not comps:
            raise InconsistencyError("minimal non-small submodule has no maximal complement")
        K = comps[0]
        cert = {
            "minimal": list(lat.ids(N)),
            "complement": list(lat.ids(K)),
            "working_module": list(lat.ids(W)),
            "meet_zero": lat.meet(N, K) == lat.bottom,
            "sum_is_working": lat.join(N, K) == W,
            "minimal_in_module": N in atoms,
            "non_small": N not in smalls,
            "complement_maximal_in_working": K in lat.lower_covers[W],
        }
        if not all(v for k, v in cert.items() if isinstance(v, bool)):
            raise InconsistencyError(f"decomposition certificate failed: {cert}")
        certs.append(cert)
        parts.append(N)
        W = K
    sub = lat.submodule
    span = _element_sum(M, [sub(p) for p in parts] + [sub(W)])
    product = int(np.prod([lat.sizes[p] for p in parts])) * lat.sizes[W]
    if not span.all() or product != M.order:
        raise InconsistencyError("summands do not form an internal direct sum equal to M")
    k_lat = _below(lat, W)
    soc_k = _to_parent(k_lat, lattice_socle(k_lat))
    if soc_k not in smalls:
        raise InconsistencyError("socle of the complement is not small in M")
    m1 = lat.join_all(parts)
    return Decomposition([sub(p) for p in parts], sub(W), certs, sub(m1))


# -- verifiers ----------------------------------------------------------------------


def oracle_check(M: FiniteModule) -> CheckResult:
    """Brute-force definitions against their structural characterizations."""
    lat = submodule_lattice(M)
    details = {}
    try:
        rad = lattice_radical(lat)
        details["radical_two_routes"] = True
    except InconsistencyError as exc:
        return CheckResult("oracle_equivalences", False, details={"radical_two_routes": str(exc)})
    try:
        soc = lattice_socle(lat)
        details["socle_two_routes"] = True
    except InconsistencyError as exc:
        return CheckResult("oracle_equivalences", False, details={"socle_two_routes": str(exc)})
    smalls = set(small_nodes(lat))
    essentials = set(essential_nodes(lat))
    details["small_iff_in_radical"] = all((i in smalls) == lat.leq(i, rad) for i in lat)
    details["essential_iff_contains_socle"] = all((i in essentials) == lat.leq(soc, i) for i in lat)
    g = lattice_goldie_dimension(lat)
    h = lattice_hollow_dimension(lat)
    details["goldie"] = g
    details["socle_length"] = _below(lat, soc).length()
    details["hollow"] = h
    details["top_over_radical_length"] = _above(lat, rad).length()
    details["goldie_equals_socle_length"] = g == details["socle_length"]
    details["hollow_equals_quotient_length"] = h == details["top_over_radical_length"]
    ok = all(v for k, v in details.items() if isinstance(v, bool))
    return CheckResult("oracle_equivalences", ok, details=details)


def _fs_count(lat: Lattice) -> int:
    return len(small_nodes(lat)) - 1


def prop_3_10_check(M: FiniteModule) -> CheckResult:
    """fs <=> every submodule fs <=> every small quotient fs, with small-quotient closure."""
    lat = submodule_lattice(M)
    smalls = small_nodes(lat)
    fs_m = _fs_count(lat) >= 0
    sub_counts = {i: _fs_count(_below(lat, i)) for i in lat}
    every_sub = all(c >= 0 for c in sub_counts.values())
    quotient_ok = True
    closure_ok = True
    kernel_ok = True
    examined = []
    for N in smalls:
        if N == lat.bottom:
            continue
        Q = quotient(M, lat.submodule(N))
        proj = projection_hom(Q)
        kernel_ok = kernel_ok and proj.kernel() == lat.ids(N) and proj.is_homomorphism()
        qlat = submodule_lattice(Q)
        q_smalls = small_nodes(qlat)
        quotient_ok = quotient_ok and len(q_smalls) - 1 >= 0
        preimages = set()
        for s in q_smalls:
            q_ids = set(qlat.ids(s))
            pre = tuple(int(x) for x in np.flatnonzero(np.isin(Q.projection, list(q_ids))))
            preimages.add(lat.index[sum(1 << x for x in pre)])
        expected = {s for s in smalls if lat.leq(N, s)}
        closure_ok = closure_ok and preimages == expected
        examined.append({"small": list(lat.ids(N)), "quotient_small_count": len(q_smalls) - 1})
    ok = fs_m == every_sub == quotient_ok and closure_ok and kernel_ok
    return CheckResult(
        "prop_3_10",
        ok,
        details={
            "fs": fs_m,
            "every_submodule_fs": every_sub,
            "every_small_quotient_fs": quotient_ok,
            "small_quotient_closure": closure_ok,
            "projection_kernels": kernel_ok,
            "small_quotients": examined,
        },
    )


def prop_1_1_check(M: FiniteModule) -> CheckResult:
    """fs <=> Rad(M) has finitely many submodules; the submodules of Rad are exactly the smalls."""
    lat = submodule_lattice(M)
    rad = lattice_radical(lat)
    under = set(lat.nodes_below(rad))
    smalls = set(small_nodes(lat))
    return CheckResult(
        "prop_1_1",
        under == smalls,
        details={"radical_submodule_count": len(under), "small_count": len(smalls)},
    )


def cor_star_check(M: FiniteModule) -> CheckResult:
    """Rad(M) has finite length; M Noetherian/Artinian iff M/Rad(M) is."""
    lat = submodule_lattice(M)
    rad = lattice_radical(lat)
    rad_lat = _below(lat, rad)
    top_lat = _above(lat, rad)
    details = {
        "radical_length": rad_lat.length(),
        "radical_krull_dim": lattice_krull_dim(rad_lat),
        "radical_noeth_dim": lattice_noeth_dim(rad_lat),
        "module_noetherian": lattice_noeth_dim(lat) <= 0,
        "quotient_noetherian": lattice_noeth_dim(top_lat) <= 0,
        "module_artinian": lattice_krull_dim(lat) <= 0,
        "quotient_artinian": lattice_krull_dim(top_lat) <= 0,
        "length_additive": lat.length() == rad_lat.length() + top_lat.length(),
    }
    ok = (
        details["radical_krull_dim"] <= 0
        and details["radical_noeth_dim"] <= 0
        and details["module_noetherian"] == details["quotient_noetherian"]
        and details["module_artinian"] == details["quotient_artinian"]
        and details["length_additive"]
    )
    return CheckResult("cor_star", ok, details=details)


def cor_c1_check(M: FiniteModule) -> CheckResult:
    """A local fs-module has simple M/Rad(M) and finite length."""
    lat = submodule_lattice(M)
    if not lattice_is_local(lat):
        return CheckResult("cor_c1", True, hypothesis=False)
    rad = lattice_radical(lat)
    simple_top = _above(lat, rad).length() == 1
    return CheckResult(
        "cor_c1",
        simple_top and lattice_krull_dim(lat) == 0 and lattice_noeth_dim(lat) == 0,
        details={"radical": list(lat.ids(rad)), "top_simple": simple_top, "length": lat.length()},
    )


def prop_3_100_check(M: FiniteModule) -> CheckResult:
    """fs with Rad(M) != 0 has Soc(Rad(M)) != 0, and Soc(Rad) = Rad meet Soc."""
    lat = submodule_lattice(M)
    rad = lattice_radical(lat)
    if rad == lat.bottom:
        return CheckResult("prop_3_100", True, hypothesis=False)
    rad_lat = _below(lat, rad)
    soc_rad = _to_parent(rad_lat, lattice_socle(rad_lat))
    soc = lattice_socle(lat)
    smalls = set(small_nodes(lat))
    small_minimal = [a for a in lat.atoms() if a in smalls]
    ok = soc_rad != lat.bottom and soc_rad == lat.meet(rad, soc) and bool(small_minimal)
    return CheckResult(
        "prop_3_100",
        ok,
        details={"soc_of_rad": list(lat.ids(soc_rad)), "small_minimal_count": len(small_minimal)},
    )


def remark_r3_check(M: FiniteModule) -> CheckResult:
    """Soc(Rad(M)) is small; a semisimple submodule is small iff it lies in Rad(M)."""
    lat = submodule_lattice(M)
    rad = lattice_radical(lat)
    rad_lat = _below(lat, rad)
    soc_rad = _to_parent(rad_lat, lattice_socle(rad_lat))
    smalls = set(small_nodes(lat))
    semisimple = [S for S in lat if lattice_socle(_below(lat, S)) == _below(lat, S).top]
    mismatches = [list(lat.ids(S)) for S in semisimple if (S in smalls) != lat.leq(S, rad)]
    ok = soc_rad in smalls and not mismatches
    return CheckResult(
        "remark_r3",
        ok,
        hypothesis=soc_rad != lat.bottom,
        details={"soc_of_rad": list(lat.ids(soc_rad)), "semisimple_count": len(semisimple), "mismatches": mismatches},
    )


def lemma_r5_check(M: FiniteModule) -> CheckResult:
    """Each minimal submodule is small or a direct summand (and never both)."""
    lat = submodule_lattice(M)
    smalls = set(small_nodes(lat))
    rows = []
    ok = True
    for a in lat.atoms():
        comp = next((k for k in lat if lat.meet(a, k) == lat.bottom and lat.join(a, k) == lat.top), None)
        small = a in smalls
        summand = comp is not None
        ok = ok and (small != summand)
        row = {"minimal": list(lat.ids(a)), "small": small}
        if summand:
            row["complement"] = list(lat.ids(comp))
        rows.append(row)
    return CheckResult("lemma_r5", ok, hypothesis=bool(rows), details={"minimal_submodules": rows})


def theorem_3_18_check(M: FiniteModule) -> CheckResult:
    """Certificates of the decomposition, plus the converse on the result."""
    lat = submodule_lattice(M)
    try:
        d = decompose(M)
    except InconsistencyError as exc:
        return CheckResult("theorem_3_18", False, details={"error": str(exc)})
    m1 = lat.node_of(d.semisimple_sum)
    m2 = lat.node_of(d.complement)
    m1_lat = _below(lat, m1)
    m2_lat = _below(lat, m2)
    m1_semisimple = lattice_socle(m1_lat) == m1_lat.top
    smalls = small_nodes(lat)
    m2_smalls = {_to_parent(m2_lat, s) for s in small_nodes(m2_lat)}
    converse = all(s in m2_smalls for s in smalls)
    soc_m2 = _to_parent(m2_lat, lattice_socle(m2_lat))
    ok = m1_semisimple and converse and soc_m2 in set(smalls) and lat.meet(m1, m2) == lat.bottom
    ok = ok and lat.join(m1, m2) == lat.top
    return CheckResult(
        "theorem_3_18",
        ok,
        hypothesis=bool(d.semisimple_part),
        details={
            "M1": list(d.semisimple_sum.elements),
            "M2": list(d.complement.elements),
            "steps": d.certificates,
            "M1_semisimple": m1_semisimple,
            "smalls_inside_M2_and_small_there": converse,
        },
    )


def homogeneous_soc_check(M: FiniteModule) -> CheckResult:
    """Homogeneous fs-module: Soc(M) essential, hence finitely embedded.

    Evaluated under both readings of homogeneous; the one asking for a node
    small in N itself is the primary flag.
    """
    lat = submodule_lattice(M)
    soc = lattice_socle(lat)
    essential = soc in set(essential_nodes(lat))
    homog = lattice_is_homogeneous(lat)
    homog_in_m = lattice_is_homogeneous_in_top(lat)
    ok = (essential or not homog) and (essential or not homog_in_m)
    return CheckResult(
        "homogeneous_soc",
        ok,
        hypothesis=homog or homog_in_m,
        details={"socle": list(lat.ids(soc)), "finitely_embedded": essential,
                 "homogeneous": homog, "homogeneous_in_module": homog_in_m},
    )


def dloc_check(M: FiniteModule) -> CheckResult:
    """local and us  <=>  dual-local and ue  <=>  exactly one nontrivial submodule; then Soc = Rad."""
    lat = submodule_lattice(M)
    smalls = [s for s in small_nodes(lat) if s != lat.bottom]
    essentials = [e for e in essential_nodes(lat) if e != lat.top]
    c1 = lattice_is_local(lat) and len(smalls) == 1
    c2 = len(lat.atoms()) == 1 and len(essentials) == 1
    c3 = len(lat) == 3
    ok = c1 == c2 == c3
    if c3:
        ok = ok and lattice_socle(lat) == lattice_radical(lat)
    return CheckResult("theorem_dloc", ok, hypothesis=c3, details={"local_us": c1, "dual_local_ue": c2, "unique_nontrivial": c3})


def fsm_prop_check(M: FiniteModule) -> CheckResult:
    """The small minimal submodules of M are exactly the minimal submodules of Rad(M)."""
    lat = submodule_lattice(M)
    rad = lattice_radical(lat)
    rad_lat = _below(lat, rad)
    rad_atoms = {_to_parent(rad_lat, a) for a in rad_lat.atoms()}
    smalls = set(small_nodes(lat))
    small_minimal = {a for a in lat.atoms() if a in smalls}
    return CheckResult(
        "fsm_proposition",
        rad_atoms == small_minimal,
        hypothesis=rad != lat.bottom,
        details={"small_minimal_count": len(small_minimal), "radical_minimal_count": len(rad_atoms)},
    )


def theorem_3_6_check(M: FiniteModule) -> CheckResult:
    """fs with finite hollow dimension: Artinian, Noetherian, finite Goldie dimension, finite length.

    Also the finite-scale form of the Rad = 0 characterization: such a module
    is semisimple with hollow dimension equal to its length.
    """
    lat = submodule_lattice(M)
    h = lattice_hollow_dimension(lat)
    rad = lattice_radical(lat)
    details = {
        "hollow_dim": h,
        "artinian": lattice_krull_dim(lat) <= 0,
        "noetherian": lattice_noeth_dim(lat) <= 0,
        "goldie_dim": lattice_goldie_dimension(lat),
        "length": lat.length(),
    }
    ok = details["artinian"] and details["noetherian"]
    if rad == lat.bottom:
        semisimple = lattice_socle(lat) == lat.top
        details["radical_zero_semisimple"] = semisimple
        ok = ok and semisimple and h == lat.length()
    return CheckResult("theorem_3_6", ok, details=details)


MODULE_CHECKS = (
    oracle_check,
    prop_3_10_check,
    prop_1_1_check,
    cor_star_check,
    cor_c1_check,
    prop_3_100_check,
    remark_r3_check,
    lemma_r5_check,
    theorem_3_18_check,
    homogeneous_soc_check,
    dloc_check,
    fsm_prop_check,
    theorem_3_6_check,
)
