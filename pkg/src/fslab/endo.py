"""Endomorphism-ring side of a module: conductors, multiplication modules, and
the comparison of M as an R-module with M as a module over S = End_R(M).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .invariants import essential_nodes, lattice_dims, small_nodes
from .modules import (
    HOM_BUDGET,
    EndomorphismRing,
    FiniteModule,
    Submodule,
    SubmoduleLattice,
    end_ring,
    submodule_generated,
    submodule_lattice,
)
from .results import CheckResult
from .rings import Ideal, ring_opposite


def _require_commutative(M: FiniteModule):
    if not M.ring.commutative:
        raise ValidationError("operation requires a commutative ring")


def _endo(M: FiniteModule, budget=HOM_BUDGET) -> EndomorphismRing:
    E = getattr(M, "_end", None)
    if E is None:
        E = end_ring(M, budget=budget)
        M._end = E
    return E


def conductor(M: FiniteModule, N: Submodule) -> Ideal:
    """(N : M) = {r : M.r inside N}."""
    _require_commutative(M)
    inside = np.zeros(M.order, dtype=bool)
    inside[list(N.elements)] = True
    rs = np.flatnonzero(inside[M.action].all(axis=1))
    return Ideal(tuple(int(r) for r in rs), "two-sided")


def module_times_ideal(M: FiniteModule, I: Ideal) -> Submodule:
    """M.I, the submodule generated by every m.r with r in I."""
    vals = np.unique(M.action[list(I.elements)])
    return submodule_generated(M, vals)


def is_multiplication(M: FiniteModule):
    """(flag, witness): every submodule N equals M.(N:M); witness is the first failing N."""
    _require_commutative(M)
    lat = submodule_lattice(M)
    for N in lat.nodes:
        if module_times_ideal(M, conductor(M, N)).elements != N.elements:
            return False, N
    return True, None


def is_fully_invariant(M: FiniteModule, N: Submodule, S: EndomorphismRing | None = None) -> bool:
    S = S or _endo(M)
    inside = np.zeros(M.order, dtype=bool)
    inside[list(N.elements)] = True
    return bool(inside[S.action[:, list(N.elements)]].all())


def s_module_view(M: FiniteModule, budget=HOM_BUDGET) -> FiniteModule:
    """M as a module over S = End_R(M).

    The left action s.m = s(m) is stored as a right action of the opposite ring,
    m.s = s(m), and validated against it, so the usual machinery applies.
    """
    E = _endo(M, budget)
    S_op = ring_opposite(E.ring)
    view = FiniteModule(S_op, M.add, E.action, labels=M.labels, presentation={"kind": "endomorphism_view"})
    view.endomorphisms = E
    return view


@dataclass
class SymmetryReport:
    r_lattice: SubmoduleLattice
    s_lattice: SubmoduleLattice
    lattices_equal: bool
    s_inside_r: bool
    dims_r: tuple
    dims_s: tuple
    small_essential_agree: bool
    fs_agree: bool
    multiplication: bool | None = None

    def as_dict(self) -> dict:
        return {
            "r_lattice_nodes": len(self.r_lattice),
            "s_lattice_nodes": len(self.s_lattice),
            "lattices_equal": self.lattices_equal,
            "s_inside_r": self.s_inside_r,
            "dims_r": list(self.dims_r),
            "dims_s": list(self.dims_s),
            "small_essential_agree": self.small_essential_agree,
            "fs_agree": self.fs_agree,
            "multiplication": self.multiplication,
        }


def _mask_set(lat, nodes):
    return {lat.masks[i] for i in nodes}


def lattices_coincide(M: FiniteModule, budget=HOM_BUDGET) -> SymmetryReport:
    rep = getattr(M, "_symmetry", None)
    if rep is None:
        rep = M._symmetry = _symmetry_report(M, budget)
    return rep


def _symmetry_report(M: FiniteModule, budget) -> SymmetryReport:
    r_lat = submodule_lattice(M)
    view = s_module_view(M, budget)
    s_lat = submodule_lattice(view)
    r_nodes, s_nodes = set(r_lat.masks), set(s_lat.masks)
    r_small = _mask_set(r_lat, small_nodes(r_lat))
    s_small = _mask_set(s_lat, small_nodes(s_lat))
    r_ess = _mask_set(r_lat, essential_nodes(r_lat))
    s_ess = _mask_set(s_lat, essential_nodes(s_lat))
    mult = is_multiplication(M)[0] if M.ring.commutative else None
    return SymmetryReport(
        r_lattice=r_lat,
        s_lattice=s_lat,
        lattices_equal=r_nodes == s_nodes,
        s_inside_r=s_nodes <= r_nodes,
        dims_r=lattice_dims(r_lat),
        dims_s=lattice_dims(s_lat),
        small_essential_agree=r_small == s_small and r_ess == s_ess,
        fs_agree=(len(r_small) - 1) == (len(s_small) - 1),
        multiplication=mult,
    )


def dimension_symmetry(M: FiniteModule) -> CheckResult:
    """(Goldie, hollow, Krull, Noetherian) agree on both sides for multiplication M."""
    rep = lattices_coincide(M)
    details = {"dims_r": list(rep.dims_r), "dims_s": list(rep.dims_s)}
    if not rep.multiplication:
        details["note"] = "not a multiplication module; informational only"
        return CheckResult("dimension_symmetry", True, hypothesis=False, details=details)
    return CheckResult("dimension_symmetry", rep.dims_r == rep.dims_s, details=details)


def small_essential_symmetry(M: FiniteModule) -> CheckResult:
    rep = lattices_coincide(M)
    if not rep.multiplication:
        return CheckResult("small_essential_symmetry", True, hypothesis=False,
                           details={"agree": rep.small_essential_agree})
    return CheckResult("small_essential_symmetry", rep.small_essential_agree)


def prop_p41_check(M: FiniteModule) -> CheckResult:
    """End_R(M) is commutative when M is a multiplication module."""
    mult, _ = is_multiplication(M)
    S = _endo(M).ring
    comm = bool(np.array_equal(S.mul, S.mul.T))
    details = {"multiplication": mult, "end_commutative": comm, "end_order": S.order}
    if not mult:
        return CheckResult("prop_p41", True, hypothesis=False, details=details)
    return CheckResult("prop_p41", comm, details=details)


def prop_c41_check(M: FiniteModule) -> CheckResult:
    """Every submodule of a multiplication module is fully invariant."""
    mult, _ = is_multiplication(M)
    E = _endo(M)
    lat = submodule_lattice(M)
    bad = [list(N.elements) for N in lat.nodes if not is_fully_invariant(M, N, E)]
    details = {"multiplication": mult, "not_fully_invariant": bad}
    if not mult:
        return CheckResult("prop_c41", True, hypothesis=False, details=details)
    return CheckResult("prop_c41", not bad, details=details)


def prop_srsub_check(M: FiniteModule) -> CheckResult:
    """Every S-submodule is an R-submodule: each scalar map m -> m.r lies in S."""
    _require_commutative(M)
    E = _endo(M)
    tables = {t.tobytes() for t in E.action.astype(np.int64)}
    missing = [r for r in range(M.ring.order) if M.action[r].astype(np.int64).tobytes() not in tables]
    rep = lattices_coincide(M)
    return CheckResult(
        "prop_srsub",
        not missing and rep.s_inside_r,
        details={"scalars_not_endomorphisms": missing, "s_inside_r": rep.s_inside_r},
    )


def theorem_maj_check(M: FiniteModule) -> CheckResult:
    rep = lattices_coincide(M)
    details = rep.as_dict()
    if not rep.multiplication:
        return CheckResult("theorem_maj", rep.s_inside_r, hypothesis=False, details=details)
    return CheckResult("theorem_maj", rep.lattices_equal, details=details)


def i_x(M: FiniteModule, X: Submodule) -> Ideal:
    """I_X = {f in S : f(M) inside X}, as ids of End_R(M)."""
    E = _endo(M)
    inside = np.zeros(M.order, dtype=bool)
    inside[list(X.elements)] = True
    fs = np.flatnonzero(inside[E.action].all(axis=1))
    return Ideal(tuple(int(f) for f in fs), "right")


def _image_sum(M: FiniteModule, E: EndomorphismRing, fs) -> tuple[int, ...]:
    """Sum of the subgroups f(M), element-exact."""
    span = np.zeros(M.order, dtype=bool)
    span[0] = True
    for f in fs:
        img = np.unique(E.action[f])
        nxt = np.zeros(M.order, dtype=bool)
        nxt[M.add[np.ix_(np.flatnonzero(span), img)].ravel()] = True
        span = nxt
    return tuple(int(x) for x in np.flatnonzero(span))


def is_self_generator(M: FiniteModule):
    """(flag, witness): every submodule N is the sum of f(M) over f in I_N."""
    E = _endo(M)
    for N in submodule_lattice(M).nodes:
        if _image_sum(M, E, i_x(M, N).elements) != N.elements:
            return False, N
    return True, None


def prop_l41_check(M: FiniteModule) -> CheckResult:
    """A self-generator multiplication module is a multiplication S-module."""
    mult, _ = is_multiplication(M)
    selfgen, _ = is_self_generator(M)
    details = {"multiplication": mult, "self_generator": selfgen}
    if not (mult and selfgen):
        return CheckResult("prop_l41", True, hypothesis=False, details=details)
    view = s_module_view(M)
    E = view.endomorphisms
    bad = []
    for X in submodule_lattice(view).nodes:
        if _image_sum(M, E, i_x(M, X).elements) != X.elements:
            bad.append(list(X.elements))
    details["failures"] = bad
    return CheckResult("prop_l41", not bad, details=details)


def fs_symmetry_check(M: FiniteModule) -> CheckResult:
    """M_R and _SM have the same nonzero small submodules, hence the same fs status."""
    mult, _ = is_multiplication(M)
    selfgen, _ = is_self_generator(M)
    rep = lattices_coincide(M)
    r_small = sorted(rep.r_lattice.masks[i] for i in small_nodes(rep.r_lattice) if i != 0)
    s_small = sorted(rep.s_lattice.masks[i] for i in small_nodes(rep.s_lattice) if i != 0)
    details = {"multiplication": mult, "self_generator": selfgen,
               "r_small_count": len(r_small), "s_small_count": len(s_small)}
    if not (mult and selfgen):
        return CheckResult("fs_symmetry", True, hypothesis=False, details=details)
    return CheckResult("fs_symmetry", r_small == s_small and rep.fs_agree, details=details)


SYMMETRY_CHECKS = (
    prop_srsub_check,
    theorem_maj_check,
    dimension_symmetry,
    small_essential_symmetry,
    prop_p41_check,
    prop_c41_check,
    prop_l41_check,
    fs_symmetry_check,
)
