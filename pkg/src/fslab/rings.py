"""Finite rings given by Cayley tables, and their one- and two-sided ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct

import numpy as np
from sympy import isprime

from .errors import CeilingError, InconsistencyError, ValidationError
from .lattice import Lattice, closure_lattice, ids_from_mask, mask_from_ids, small_nodes
from .results import CheckResult

MAX_RING_ORDER = 256

SIDES = ("right", "left", "two-sided")


def validate_ring(add: np.ndarray, mul: np.ndarray, one: int) -> None:
    """Raise ValidationError naming the first failing axiom and its witness."""
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise ValidationError("tables must be square and of equal size")
    if n == 0:
        raise ValidationError("ring must have at least one element")
    for name, t in (("add", add), ("mul", mul)):
        if t.min() < 0 or t.max() >= n:
            raise ValidationError(f"{name} table has entries outside 0..{n - 1}")
    if not 0 <= one < n:
        raise ValidationError("identity id out of range")
    ar = np.arange(n)
    if not (np.array_equal(add[0], ar) and np.array_equal(add[:, 0], ar)):
        raise ValidationError("element 0 is not the additive identity")
    bad = np.argwhere(add != add.T)
    if len(bad):
        a, b = map(int, bad[0])
        raise ValidationError("addition is not commutative", witness=(a, b))
    if not (add == 0).any(axis=1).all():
        a = int(np.flatnonzero(~(add == 0).any(axis=1))[0])
        raise ValidationError("element has no additive inverse", witness=(a,))
    if not (np.array_equal(mul[one], ar) and np.array_equal(mul[:, one], ar)):
        raise ValidationError(f"element {one} is not a two-sided multiplicative identity")
    for a in range(n):
        # (a+b)+c == a+(b+c) and (ab)c == a(bc) for all b, c
        lhs = add[add[a]]
        rhs = add[a][add]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise ValidationError("addition is not associative", witness=(a, b, c))
        lhs = mul[mul[a]]
        rhs = mul[a][mul]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise ValidationError("multiplication is not associative", witness=(a, b, c))
        # a(b+c) == ab+ac
        lhs = mul[a][add]
        rhs = add[mul[a][:, None], mul[a][None, :]]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise ValidationError("left distributivity fails", witness=(a, b, c))
        # (b+c)a == ba+ca
        col = mul[:, a]
        lhs = col[add]
        rhs = add[col[:, None], col[None, :]]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise ValidationError("right distributivity fails", witness=(b, c, a))


class FiniteRing:
    """A finite ring with identity, stored as full addition/multiplication tables.

    Element 0 is the additive identity.  ``labels[i]`` is a human-readable
    coordinate tuple for element ``i``; ``presentation`` is the descriptor the
    ring was built from (cyclic, product, poly_quotient or tables).
    """

    def __init__(self, add, mul, one: int, presentation=None, labels=None, unsafe: bool = False):
        add = np.asarray(add, dtype=np.int32)
        mul = np.asarray(mul, dtype=np.int32)
        if not unsafe:
            validate_ring(add, mul, int(one))
        add.flags.writeable = False
        mul.flags.writeable = False
        self.add = add
        self.mul = mul
        self.one = int(one)
        self.order = add.shape[0]
        self.presentation = presentation or {"kind": "tables"}
        self.labels = tuple(labels) if labels is not None else tuple((i,) for i in range(self.order))
        self.commutative = bool(np.array_equal(mul, mul.T))
        self._lattices = {}

    def __repr__(self):
        return f"FiniteRing(order={self.order}, {describe_presentation(self.presentation)})"

    @cached_property
    def neg(self) -> np.ndarray:
        return np.argmax(self.add == 0, axis=1).astype(np.int32)

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    @cached_property
    def units(self) -> frozenset:
        one = self.one
        right = self.mul == one
        left = self.mul.T == one
        both = (right & left).any(axis=1)
        return frozenset(int(i) for i in np.flatnonzero(both))

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        diag = self.mul[np.arange(self.order), np.arange(self.order)]
        return tuple(int(i) for i in np.flatnonzero(diag == np.arange(self.order)))

    def is_zero_ring(self) -> bool:
        return self.order == 1

    def right_orbit(self, x: int) -> np.ndarray:
        return np.unique(self.mul[x])

    def left_orbit(self, x: int) -> np.ndarray:
        return np.unique(self.mul[:, x])


def describe_presentation(p: dict) -> str:
    kind = p.get("kind")
    if kind == "cyclic":
        return f"Z_{p['n']}"
    if kind == "product":
        return " x ".join(describe_presentation(f) for f in p["factors"])
    if kind == "poly_quotient":
        terms = []
        for i in reversed(range(len(p["f"]))):
            c = p["f"][i] % p["p"]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return f"F_{p['p']}[x]/({' + '.join(terms)})"
    if kind == "opposite":
        return f"({describe_presentation(p['ring'])})^op"
    if kind == "endomorphisms":
        return "End(M)"
    return "tables"


# -- constructors -----------------------------------------------------------


def ring_cyclic(n: int) -> FiniteRing:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValidationError(f"cyclic ring needs n >= 1, got {n!r}")
    n = int(n)
    _check_order(n)
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return FiniteRing(add, mul, 1 % n, {"kind": "cyclic", "n": n}, unsafe=True)


def ring_product(factors) -> FiniteRing:
    factors = list(factors)
    if not factors:
        raise ValidationError("product of an empty list of rings")
    order = 1
    for f in factors:
        order *= f.order
    _check_order(order)
    add = factors[0].add.astype(np.int64)
    mul = factors[0].mul.astype(np.int64)
    one = factors[0].one
    labels = [(i,) for i in range(factors[0].order)]
    for f in factors[1:]:
        m = f.order
        n = add.shape[0]
        add = (add[:, None, :, None] * m + f.add[None, :, None, :]).reshape(n * m, n * m)
        mul = (mul[:, None, :, None] * m + f.mul[None, :, None, :]).reshape(n * m, n * m)
        one = one * m + f.one
        labels = [a + (b,) for a in labels for b in range(m)]
    if len(factors) == 1:
        labels = list(factors[0].labels)
    pres = {"kind": "product", "factors": [f.presentation for f in factors]}
    return FiniteRing(add, mul, one, pres, labels=labels, unsafe=True)


def ring_poly_quotient(p: int, f) -> FiniteRing:
    """F_p[x]/(f) with ``f`` given low-degree-first; f must be monic.

    Element ids are base-p digit strings of the coefficient vector, least
    significant coefficient first, so x has id p.
    """
    if not isprime(p):
        raise ValidationError(f"p must be prime, got {p}")
    f = [int(c) % p for c in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    d = len(f) - 1
    if d < 1:
        raise ValidationError("modulus must have degree >= 1")
    if f[-1] != 1:
        raise ValidationError("modulus must be monic")
    n = p**d
    _check_order(n)
    vecs = list(iproduct(range(p), repeat=d))
    vecs = [tuple(reversed(v)) for v in vecs]  # id = sum a_i p^i
    vecs.sort(key=lambda v: sum(a * p**i for i, a in enumerate(v)))

    def enc(v):
        return sum(a * p**i for i, a in enumerate(v))

    def polymul(a, b):
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c:
                for i in range(d + 1):
                    prod[k - d + i] = (prod[k - d + i] - c * f[i]) % p
        return tuple(prod[:d])

    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(vecs):
        for j, b in enumerate(vecs):
            add[i, j] = enc(tuple((x + y) % p for x, y in zip(a, b)))
            mul[i, j] = enc(polymul(a, b))
    one = enc((1,) + (0,) * (d - 1))
    return FiniteRing(add, mul, one, {"kind": "poly_quotient", "p": p, "f": f}, labels=vecs, unsafe=True)


def ring_from_tables(add, mul, one: int, unsafe: bool = False) -> FiniteRing:
    add = np.asarray(add)
    _check_order(add.shape[0])
    pres = {"kind": "tables", "add": np.asarray(add).tolist(), "mul": np.asarray(mul).tolist(), "one": int(one)}
    return FiniteRing(add, mul, one, pres, unsafe=unsafe)


def ring_opposite(R: FiniteRing) -> FiniteRing:
    return FiniteRing(
        R.add, R.mul.T.copy(), R.one, {"kind": "opposite", "ring": R.presentation}, labels=R.labels, unsafe=True
    )


def _check_order(n: int) -> None:
    if n > MAX_RING_ORDER:
        raise CeilingError(f"ring order {n} exceeds ceiling {MAX_RING_ORDER}", ceiling=MAX_RING_ORDER, found=n)


# -- ideals -----------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    elements: tuple[int, ...]
    side: str = "right"
    degenerate: bool = field(default=False, compare=False)

    @property
    def mask(self) -> int:
        return mask_from_ids(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


def ideal_lattice(R: FiniteRing, side: str = "right") -> Lattice:
    """Lattice of right (or left) ideals, i.e. of submodules of the regular module."""
    if side not in ("right", "left"):
        raise ValueError(f"lattice side must be right or left, got {side!r}")
    lat = R._lattices.get(side)
    if lat is None:
        orbit = R.right_orbit if side == "right" else R.left_orbit
        lat = closure_lattice(R.order, R.add, [orbit(x) for x in range(R.order)])
        R._lattices[side] = lat
    return lat


def ideals(R: FiniteRing, side: str = "right") -> list[Ideal]:
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    if side == "two-sided":
        left = set(ideal_lattice(R, "left").masks)
        masks = [m for m in ideal_lattice(R, "right").masks if m in left]
    else:
        masks = ideal_lattice(R, side).masks
    return [Ideal(ids_from_mask(m), side) for m in masks]


def ideal_product_is_zero(R: FiniteRing, A, B=None) -> bool:
    a = np.asarray(A.elements if isinstance(A, Ideal) else A)
    b = a if B is None else np.asarray(B.elements if isinstance(B, Ideal) else B)
    return not R.mul[np.ix_(a, b)].any()


def maximal_ideals(R: FiniteRing, side: str = "right") -> list[Ideal]:
    lat = ideal_lattice(R, side)
    return [Ideal(lat.ids(i), side) for i in lat.coatoms()]


def minimal_ideals(R: FiniteRing, side: str = "right") -> list[Ideal]:
    lat = ideal_lattice(R, side)
    return [Ideal(lat.ids(i), side) for i in lat.atoms()]


def jacobson_radical(R: FiniteRing) -> Ideal:
    """Intersection of maximal right ideals, cross-checked against the left side."""
    if R.is_zero_ring():
        return Ideal((0,), "two-sided", degenerate=True)
    out = {}
    for side in ("right", "left"):
        lat = ideal_lattice(R, side)
        out[side] = lat.masks[lat.meet_all(lat.coatoms())]
    if out["right"] != out["left"]:
        raise InconsistencyError("J(R) from maximal right ideals differs from the left-side computation")
    return Ideal(ids_from_mask(out["right"]), "two-sided")


def quasi_regular_radical(R: FiniteRing) -> Ideal:
    """{z : 1 - z r is a unit for every r}, computed without any ideal lattice."""
    units = np.zeros(R.order, dtype=bool)
    units[list(R.units)] = True
    one_minus = R.add[R.one][R.neg]  # 1 - x
    zr = R.mul  # zr[z, r]
    ok = units[one_minus[zr]].all(axis=1)
    return Ideal(tuple(int(z) for z in np.flatnonzero(ok)), "two-sided")


# -- Brauer's dichotomy for minimal right ideals -----------------------------


@dataclass(frozen=True)
class NilpotentWitness:
    """A*A = 0, verified over all ``pairs_checked`` products."""

    pairs_checked: int


@dataclass(frozen=True)
class IdempotentWitness:
    e: int


def brauer_split(R: FiniteRing, A) -> NilpotentWitness | IdempotentWitness:
    elems = tuple(sorted(A.elements if isinstance(A, Ideal) else A))
    lat = ideal_lattice(R, "right")
    node = lat.index.get(mask_from_ids(elems))
    if node is None:
        raise ValidationError("subset is not a right ideal", witness=elems)
    if node not in lat.atoms():
        smaller = [a for a in lat.atoms() if lat.leq(a, node)]
        witness = lat.ids(smaller[0]) if smaller else ()
        raise ValidationError("right ideal is not minimal", witness=witness)
    if ideal_product_is_zero(R, elems):
        return NilpotentWitness(len(elems) ** 2)
    for e in elems:
        if e != 0 and R.mul[e, e] == e:
            if tuple(int(x) for x in R.right_orbit(e)) == elems:
                return IdempotentWitness(int(e))
    raise InconsistencyError(f"minimal right ideal {elems} has A^2 != 0 but no generating idempotent")


# -- classifications ---------------------------------------------------------


def small_ideals(R: FiniteRing, side: str = "right") -> list[Ideal]:
    lat = ideal_lattice(R, side)
    return [Ideal(lat.ids(i), side) for i in small_nodes(lat)]


def is_us_ring(R: FiniteRing, side: str = "right"):
    """(flag, small ideals): exactly one nonzero small one-sided ideal."""
    smalls = small_ideals(R, side)
    nonzero = [s for s in smalls if s.elements != (0,)]
    return len(nonzero) == 1, smalls


def is_local_ring(R: FiniteRing) -> bool:
    right = len(ideal_lattice(R, "right").coatoms())
    left = len(ideal_lattice(R, "left").coatoms())
    if (right == 1) != (left == 1):
        raise InconsistencyError("right and left maximal-ideal counts disagree on locality")
    return right == 1


def is_semiprime(R: FiniteRing) -> bool:
    for I in ideals(R, "two-sided"):
        if I.elements != (0,) and ideal_product_is_zero(R, I):
            return False
    return True


def is_division_ring(R: FiniteRing) -> bool:
    return R.order > 1 and len(R.units) == R.order - 1


def theorem0_check(R: FiniteRing, side: str = "right") -> CheckResult:
    """us-ring  <=>  J minimal with J^2 = 0  <=>  every nonzero ideal minimal or non-small.

    The third clause is also required to see a nonzero radical: for J = 0 the
    first two clauses fail while the quantified statement holds vacuously.
    """
    lat = ideal_lattice(R, side)
    us, smalls = is_us_ring(R, side)
    J = jacobson_radical(R)
    j_node = lat.index[J.mask]
    atoms = set(lat.atoms())
    clause2 = j_node in atoms and ideal_product_is_zero(R, J)
    small_set = set(small_nodes(lat))
    literal3 = all(i in atoms or i not in small_set for i in lat if i != lat.bottom)
    clause3 = literal3 and j_node != lat.bottom
    details = {
        "side": side,
        "clause1_us_ring": us,
        "clause2_J_minimal_and_square_zero": clause2,
        "clause3_minimal_or_non_small": clause3,
        "clause3_literal": literal3,
        "J": list(J.elements),
        "small_ideals": [list(s.elements) for s in smalls],
    }
    return CheckResult("theorem_0", us == clause2 == clause3, hypothesis=True, details=details)


def semiprime_equivalence_check(R: FiniteRing) -> CheckResult:
    """On a semiprime ring: right fs + finite hollow dim <=> left version <=> semisimple."""
    from .invariants import lattice_hollow_dimension, lattice_socle

    if not is_semiprime(R):
        raise ValidationError("ring is not semiprime")
    clauses = {}
    for side in ("right", "left"):
        lat = ideal_lattice(R, side)
        fs_count = len(small_nodes(lat)) - 1
        hdim = lattice_hollow_dimension(lat)
        clauses[side] = fs_count >= 0 and hdim is not None
        clauses[f"{side}_fs_count"] = fs_count
        clauses[f"{side}_hollow_dim"] = hdim
    J = jacobson_radical(R)
    rlat = ideal_lattice(R, "right")
    soc = lattice_socle(rlat)
    semisimple = J.elements == (0,) and soc == rlat.top
    details = {
        "right_fs_finite_hdim": clauses["right"],
        "left_fs_finite_hdim": clauses["left"],
        "semisimple": semisimple,
        "right_hollow_dim": clauses["right_hollow_dim"],
        "left_hollow_dim": clauses["left_hollow_dim"],
    }
    ok = clauses["right"] == clauses["left"] == semisimple
    local = is_local_ring(R)
    details["local"] = local
    if local:
        details["division_ring"] = is_division_ring(R)
        ok = ok and details["division_ring"] == semisimple
    return CheckResult("semiprime_proposition", ok, hypothesis=True, details=details)


def local_us_ring_check(R: FiniteRing, side: str = "right") -> CheckResult:
    """A local us-ring has J both minimal and maximal: 0 < J < R is every ideal."""
    if R.is_zero_ring():
        return CheckResult("dloc_corollary", True, hypothesis=False)
    local = is_local_ring(R)
    us, _ = is_us_ring(R, side)
    if not (local and us):
        return CheckResult("dloc_corollary", True, hypothesis=False, details={"local": local, "us": us})
    lat = ideal_lattice(R, side)
    J = jacobson_radical(R)
    j = lat.index[J.mask]
    minimal = j in lat.atoms()
    maximal = j in lat.coatoms()
    chain = lat.masks == [1, J.mask, (1 << R.order) - 1]
    two_sided = [I.elements for I in ideals(R, "two-sided")]
    chain2 = two_sided == [(0,), J.elements, tuple(range(R.order))]
    details = {"side": side, "J": list(J.elements), "minimal": minimal, "maximal": maximal,
               "one_sided_chain": chain, "two_sided_chain": chain2}
    return CheckResult("dloc_corollary", minimal and maximal and chain and chain2, details=details)


def jacobson_cross_check(R: FiniteRing) -> CheckResult:
    if R.is_zero_ring():
        return CheckResult("jacobson_radical", True, hypothesis=False)
    try:
        J = jacobson_radical(R)
    except InconsistencyError as exc:
        return CheckResult("jacobson_radical", False, details={"error": str(exc)})
    Q = quasi_regular_radical(R)
    return CheckResult(
        "jacobson_radical",
        J.elements == Q.elements,
        details={"maximal_ideal_route": list(J.elements), "quasi_regular_route": list(Q.elements)},
    )


def brauer_check(R: FiniteRing) -> CheckResult:
    """Every minimal right ideal squares to zero or is eR with e idempotent."""
    out = []
    ok = True
    for A in minimal_ideals(R, "right"):
        try:
            w = brauer_split(R, A)
        except InconsistencyError as exc:
            ok = False
            out.append({"ideal": list(A.elements), "error": str(exc)})
            continue
        if isinstance(w, IdempotentWitness):
            e = w.e
            good = R.mul[e, e] == e and tuple(int(x) for x in R.right_orbit(e)) == A.elements
            ok = ok and bool(good)
            out.append({"ideal": list(A.elements), "idempotent": e})
        else:
            out.append({"ideal": list(A.elements), "square_zero": True})
    return CheckResult("theorem_brauer", ok, hypothesis=bool(out), details={"minimal_ideals": out})
