"""Finite right modules over finite rings.

Elements are ids ``0..order-1`` with 0 the zero element.  Modules built from
cyclic divisors ``d_1, ..., d_k`` number their coordinate tuples in
lexicographic order, first coordinate most significant.  The scalar action is a
full table ``action[r, m] = m.r`` obeying ``m.(rs) = (m.r).s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct

import numpy as np

from .errors import CeilingError, InconsistencyError, ValidationError
from .lattice import DEFAULT_MAX_NODES, Lattice, closure_lattice, ids_from_mask, mask_from_bool, mask_from_ids
from .rings import MAX_RING_ORDER, FiniteRing

MAX_MODULE_ORDER = 512
# most partial maps held at once while extending along generators
HOM_BUDGET = 2048


def validate_action(R: FiniteRing, add: np.ndarray, action: np.ndarray) -> None:
    n = add.shape[0]
    if action.shape != (R.order, n):
        raise ValidationError(f"action table must have shape ({R.order}, {n}), got {action.shape}")
    if action.min() < 0 or action.max() >= n:
        raise ValidationError("action table has entries outside the module")
    if not np.array_equal(action[R.one], np.arange(n)):
        m = int(np.flatnonzero(action[R.one] != np.arange(n))[0])
        raise ValidationError("action is not unital: m.1 != m", witness=(R.one, m))
    for r in range(R.order):
        row = action[r]
        lhs = row[add]
        rhs = add[row[:, None], row[None, :]]
        if not np.array_equal(lhs, rhs):
            a, b = map(int, np.argwhere(lhs != rhs)[0])
            raise ValidationError("action not additive in the module argument: (a+b).r != a.r + b.r", witness=(r, a, b))
        lhs = action[R.add[r]]
        rhs = add[row[None, :], action]
        if not np.array_equal(lhs, rhs):
            s, m = map(int, np.argwhere(lhs != rhs)[0])
            raise ValidationError("action not additive in the ring argument: m.(r+s) != m.r + m.s", witness=(r, s, m))
        lhs = action[R.mul[r]]
        rhs = action[:, row]
        if not np.array_equal(lhs, rhs):
            s, m = map(int, np.argwhere(lhs != rhs)[0])
            raise ValidationError("action not associative: m.(rs) != (m.r).s", witness=(r, s, m))


class FiniteModule:
    def __init__(self, ring: FiniteRing, add, action, labels=None, divisors=None, presentation=None,
                 unsafe: bool = False):
        add = np.asarray(add, dtype=np.int32)
        action = np.asarray(action, dtype=np.int32)
        if add.shape[0] > MAX_MODULE_ORDER:
            raise CeilingError(f"module order {add.shape[0]} exceeds ceiling {MAX_MODULE_ORDER}",
                               ceiling=MAX_MODULE_ORDER, found=add.shape[0])
        if not unsafe:
            validate_action(ring, add, action)
        add.flags.writeable = False
        action.flags.writeable = False
        self.ring = ring
        self.add = add
        self.action = action
        self.order = add.shape[0]
        self.labels = tuple(labels) if labels is not None else tuple((i,) for i in range(self.order))
        self.divisors = tuple(divisors) if divisors is not None else None
        self.presentation = presentation or {"kind": "explicit_action"}
        self._lattice = None

    def __repr__(self):
        return f"FiniteModule(order={self.order}, ring={self.ring!r})"

    @cached_property
    def neg(self) -> np.ndarray:
        return np.argmax(self.add == 0, axis=1).astype(np.int32)

    def orbit(self, x: int) -> np.ndarray:
        """Element ids of the cyclic submodule xR."""
        return np.unique(self.action[:, x])

    def lattice(self, max_nodes: int = DEFAULT_MAX_NODES) -> "SubmoduleLattice":
        return submodule_lattice(self, max_nodes=max_nodes)

    def submodule(self, ids) -> "Submodule":
        return Submodule(tuple(sorted(int(i) for i in ids)), self)


@dataclass(frozen=True)
class Submodule:
    elements: tuple[int, ...]
    module: FiniteModule = field(compare=False, repr=False, default=None)

    @property
    def mask(self) -> int:
        return mask_from_ids(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __le__(self, other: "Submodule") -> bool:
        return set(self.elements) <= set(other.elements)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        M = self.module
        span = np.zeros(M.order, dtype=bool)
        span[0] = True
        gens = []
        for x in self.elements:
            if not span[x]:
                gens.append(x)
                span = _sum_bool(M, span, M.orbit(x))
        return tuple(gens)


def _sum_bool(M: FiniteModule, span: np.ndarray, ids) -> np.ndarray:
    out = np.zeros(M.order, dtype=bool)
    out[M.add[np.ix_(np.flatnonzero(span), np.asarray(ids))].ravel()] = True
    return out


class SubmoduleLattice(Lattice):
    """Complete submodule lattice; node ``i`` is ``self.submodule(i)``."""

    module: FiniteModule

    def submodule(self, i: int) -> Submodule:
        return Submodule(self.ids(i), self.module)

    @property
    def nodes(self) -> list[Submodule]:
        return [self.submodule(i) for i in self]

    def node_of(self, N) -> int:
        mask = N.mask if isinstance(N, Submodule) else N
        return self.index[mask]


# -- constructors ------------------------------------------------------------


def regular_module(R: FiniteRing) -> FiniteModule:
    return FiniteModule(R, R.add, R.mul.T, labels=R.labels, presentation={"kind": "regular"}, unsafe=True)


def _coords(divisors):
    return list(iproduct(*[range(d) for d in divisors])) if divisors else [()]


def _group_table(divisors):
    pts = _coords(divisors)
    coords = np.array(pts, dtype=np.int64).reshape(len(pts), len(divisors))
    div = np.array(divisors, dtype=np.int64)
    radix = np.ones(len(divisors), dtype=np.int64)
    for i in range(len(divisors) - 2, -1, -1):
        radix[i] = radix[i + 1] * div[i + 1]
    s = (coords[:, None, :] + coords[None, :, :]) % div
    return (s * radix).sum(axis=-1)


def module_from_action(R: FiniteRing, divisors, action, unsafe: bool = False) -> FiniteModule:
    """Module on Z_{d1} x ... x Z_{dk}.  ``action`` is a table or ``f(r, coords) -> coords``."""
    divisors = [int(d) for d in divisors]
    if any(d < 1 for d in divisors):
        raise ValidationError("divisors must be positive")
    order = int(np.prod(divisors)) if divisors else 1
    if order > MAX_MODULE_ORDER:
        raise CeilingError(f"module order {order} exceeds ceiling {MAX_MODULE_ORDER}",
                           ceiling=MAX_MODULE_ORDER, found=order)
    coords = _coords(divisors)
    index = {c: i for i, c in enumerate(coords)}
    if callable(action):
        table = np.zeros((R.order, order), dtype=np.int64)
        for r in range(R.order):
            for i, c in enumerate(coords):
                out = tuple(int(x) % d for x, d in zip(action(r, c), divisors))
                table[r, i] = index[out]
    else:
        table = np.asarray(action, dtype=np.int64)
    add = _group_table(divisors)
    pres = {"kind": "explicit_action", "divisors": divisors, "action": table.tolist()}
    return FiniteModule(R, add, table, labels=coords, divisors=divisors, presentation=pres, unsafe=unsafe)


def direct_sum(M1: FiniteModule, M2: FiniteModule) -> FiniteModule:
    if M1.ring is not M2.ring and not _same_ring(M1.ring, M2.ring):
        raise ValidationError("direct summands must share a ring")
    a, b = M1.order, M2.order
    if a * b > MAX_MODULE_ORDER:
        raise CeilingError(f"module order {a * b} exceeds ceiling {MAX_MODULE_ORDER}",
                           ceiling=MAX_MODULE_ORDER, found=a * b)
    add = (M1.add[:, None, :, None] * b + M2.add[None, :, None, :]).reshape(a * b, a * b)
    action = (M1.action[:, :, None] * b + M2.action[:, None, :]).reshape(M1.ring.order, a * b)
    labels = [x + y for x in M1.labels for y in M2.labels]
    pres = {"kind": "direct_sum", "summands": [M1.presentation, M2.presentation]}
    return FiniteModule(M1.ring, add, action, labels=labels, presentation=pres, unsafe=True)


def _same_ring(R: FiniteRing, S: FiniteRing) -> bool:
    return R.order == S.order and np.array_equal(R.add, S.add) and np.array_equal(R.mul, S.mul) and R.one == S.one


def quotient(M: FiniteModule, N: Submodule) -> FiniteModule:
    """M/N with each coset represented by its least element id.

    The result carries ``projection`` (array M -> M/N) and ``parent``.
    """
    if N.module is not M:
        raise ValidationError("submodule belongs to a different module")
    n_ids = np.array(N.elements)
    if not _is_submodule(M, n_ids):
        raise ValidationError("subset is not a submodule", witness=N.elements)
    rep = np.full(M.order, -1, dtype=np.int64)
    reps = []
    for x in range(M.order):
        if rep[x] < 0:
            coset = M.add[x, n_ids]
            rep[coset] = len(reps)
            reps.append(x)
    reps = np.array(reps)
    add = rep[M.add[np.ix_(reps, reps)]]
    action = rep[M.action[:, reps]]
    labels = [M.labels[x] for x in reps]
    pres = {"kind": "quotient", "module": M.presentation, "submodule": list(N.generators)}
    Q = FiniteModule(M.ring, add, action, labels=labels, presentation=pres, unsafe=True)
    Q.projection = rep
    Q.parent = M
    return Q


def _is_submodule(M: FiniteModule, ids) -> bool:
    inside = np.zeros(M.order, dtype=bool)
    inside[ids] = True
    if not inside[0]:
        return False
    if not inside[M.add[np.ix_(ids, ids)]].all():
        return False
    return bool(inside[M.action[:, ids]].all())


def cyclic_submodule(M: FiniteModule, x: int) -> Submodule:
    return M.submodule(M.orbit(x))


def submodule_generated(M: FiniteModule, xs) -> Submodule:
    span = np.zeros(M.order, dtype=bool)
    span[0] = True
    for x in xs:
        if not span[x]:
            span = _sum_bool(M, span, M.orbit(int(x)))
    return M.submodule(np.flatnonzero(span))


def submodule_lattice(M: FiniteModule, max_nodes: int = DEFAULT_MAX_NODES) -> SubmoduleLattice:
    if M._lattice is None or len(M._lattice) > max_nodes:
        lat = closure_lattice(M.order, M.add, [M.orbit(x) for x in range(M.order)],
                              max_nodes=max_nodes, cls=SubmoduleLattice)
        lat.module = M
        M._lattice = lat
    return M._lattice


def maximal_submodules(M: FiniteModule) -> list[Submodule]:
    lat = submodule_lattice(M)
    return [lat.submodule(i) for i in lat.coatoms()]


def minimal_submodules(M: FiniteModule) -> list[Submodule]:
    lat = submodule_lattice(M)
    return [lat.submodule(i) for i in lat.atoms()]


# -- homomorphisms -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ModuleHom:
    source: FiniteModule
    target: FiniteModule
    table: np.ndarray

    def __call__(self, m: int) -> int:
        return int(self.table[m])

    def image(self, ids=None) -> tuple[int, ...]:
        src = self.table if ids is None else self.table[np.asarray(ids, dtype=np.int64)]
        return tuple(int(x) for x in np.unique(src))

    def kernel(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.table == 0))

    def is_homomorphism(self) -> bool:
        M, N, f = self.source, self.target, self.table
        additive = np.array_equal(f[M.add], N.add[f[:, None], f[None, :]])
        linear = np.array_equal(f[M.action], N.action[:, f])
        return bool(additive and linear)


def projection_hom(Q: FiniteModule) -> ModuleHom:
    return ModuleHom(Q.parent, Q, np.asarray(Q.projection, dtype=np.int64))


def hom_set(M: FiniteModule, N: FiniteModule, budget: int = HOM_BUDGET, limit: int | None = None) -> list[ModuleHom]:
    """All R-linear maps M -> N, sorted by their tables.

    Generators g_1..g_k of M are chosen greedily; a partial map on
    g_1 R + ... + g_j R extends along g_{j+1} -> n exactly when it agrees with
    r -> n.r on the right ideal {r : g_{j+1}.r already in the span}.
    More than ``budget`` partial maps at any step, or more than ``limit``
    complete ones, raises CeilingError.
    """
    if not _same_ring(M.ring, N.ring):
        raise ValidationError("modules over different rings")
    gens = M.submodule(range(M.order)).generators
    span = np.zeros(M.order, dtype=bool)
    span[0] = True
    partial = [np.where(np.arange(M.order) == 0, 0, -1)]
    for step, g in enumerate(gens):
        last = step == len(gens) - 1
        g_r = M.action[:, g]
        cond = np.flatnonzero(span[g_r])
        span_ids = np.flatnonzero(span)
        new_idx = M.add[span_ids[:, None], g_r[None, :]]
        extended = []
        for f in partial:
            want = f[g_r[cond]]
            ok = (N.action[cond] == want[:, None]).all(axis=0)
            for n in np.flatnonzero(ok):
                vals = N.add[f[span_ids][:, None], N.action[:, n][None, :]]
                h = f.copy()
                h[new_idx] = vals
                if not np.array_equal(h[new_idx], vals):
                    raise InconsistencyError("hom extension is not well defined")
                extended.append(h)
                # on the last generator every extension is a complete hom
                if last and limit is not None and len(extended) > limit:
                    raise CeilingError(f"more than {limit} homomorphisms; enumeration stopped", ceiling=limit,
                                       found=len(extended))
                if len(extended) > budget:
                    raise CeilingError(f"more than {budget} partial homomorphisms; enumeration stopped",
                                       ceiling=budget, found=len(extended))
        partial = extended
        span = np.zeros(M.order, dtype=bool)
        span[new_idx.ravel()] = True
    tables = sorted((tuple(int(x) for x in f) for f in partial))
    return [ModuleHom(M, N, np.array(t, dtype=np.int64)) for t in tables]


@dataclass(eq=False)
class EndomorphismRing:
    """S = End_R(M) as a finite ring; ``action[s, m] = s(m)`` is the left S-action.

    Ring multiplication is composition, ``mul[s, t] = s o t``, so that
    ``(st).m = s.(t.m)``.
    """

    ring: FiniteRing
    homs: list
    module: FiniteModule
    action: np.ndarray

    def image(self, s: int) -> tuple[int, ...]:
        return tuple(int(x) for x in np.unique(self.action[s]))


def end_ring(M: FiniteModule, budget: int = HOM_BUDGET) -> EndomorphismRing:
    homs = hom_set(M, M, budget=budget, limit=MAX_RING_ORDER)
    if len(homs) > MAX_RING_ORDER:
        raise CeilingError(f"End(M) has order {len(homs)} > ring ceiling {MAX_RING_ORDER}",
                           ceiling=MAX_RING_ORDER, found=len(homs))
    tables = np.stack([h.table for h in homs])
    index = {t.tobytes(): i for i, t in enumerate(tables)}
    k = len(homs)
    add = np.zeros((k, k), dtype=np.int64)
    mul = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        sums = M.add[tables[i][None, :], tables].astype(np.int64)
        comps = tables[i][tables]  # s_i o s_j
        for j in range(k):
            add[i, j] = index[sums[j].tobytes()]
            mul[i, j] = index[comps[j].tobytes()]
    one = index[np.arange(M.order, dtype=np.int64).tobytes()]
    S = FiniteRing(add, mul, one, {"kind": "endomorphisms"})
    return EndomorphismRing(S, homs, M, tables)
