"""Symbolic Z-modules: finitely generated abelian groups, Prufer groups and Q.

These are infinite (or infinitely presented) modules that the finite engine
cannot enumerate.  Each invariant is decided from the structure theory of the
entry and carries a short justification.  Rank-0 entries are finite, which
gives a bridge back to the finite engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np
from sympy import factorint, isprime, prime

from .errors import ParseError
from .invariants import (
    lattice_goldie_dimension,
    lattice_hollow_dimension,
    lattice_radical,
    small_nodes,
)
from .modules import FiniteModule, _coords, _group_table, regular_module, submodule_lattice
from .results import CheckResult
from .rings import ring_cyclic

SOURCES = ("attested", "derived", "disputed")
INFINITE = "infinite"
UNKNOWN = "unknown"
BRIDGE_MAX_ORDER = 256
BRIDGE_MAX_NODES = 500_000
MAX_WITNESS = 6


@dataclass(frozen=True)
class SymbolicZModule:
    kind: str  # "fg_abelian" | "prufer" | "rationals"
    rank: int = 0
    divisors: tuple = ()
    p: int | None = None
    attested: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.kind == "fg_abelian":
            if self.rank < 0:
                raise ParseError("rank must be non-negative")
            for d in self.divisors:
                if d < 2:
                    raise ParseError(f"torsion divisor {d} must be at least 2")
            for a, b in zip(self.divisors, self.divisors[1:]):
                if b % a:
                    raise ParseError(f"divisors must form a chain: {a} does not divide {b}")
        elif self.kind == "prufer":
            if self.p is None or not isprime(self.p):
                raise ParseError(f"Prufer group needs a prime, got {self.p}")
        elif self.kind != "rationals":
            raise ParseError(f"unknown catalog kind {self.kind!r}")
        for entry in self.attested:
            if entry[2] not in SOURCES:
                raise ParseError(f"attested fact {entry[0]!r} has unknown source {entry[2]!r}")

    @property
    def name(self) -> str:
        if self.kind == "rationals":
            return "Q"
        if self.kind == "prufer":
            return f"Prufer:{self.p}"
        if self.rank == 1 and not self.divisors:
            return "Z"
        return "FgAb:" + ",".join(str(x) for x in (self.rank, *self.divisors))

    @property
    def order(self):
        """Group order, or None when infinite."""
        if self.kind != "fg_abelian" or self.rank:
            return None
        return math.prod(self.divisors)


@dataclass(frozen=True)
class SymbolicVerdict:
    prop: str
    value: object  # int, bool, INFINITE or UNKNOWN
    justification: str
    source: str = "derived"
    witness: object = None

    def as_dict(self) -> dict:
        out = {"property": self.prop, "value": self.value, "justification": self.justification,
               "source": self.source}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


Z = SymbolicZModule("fg_abelian", rank=1)
Q = SymbolicZModule(
    "rationals",
    attested=(
        ("essential_extension_of", "Z", "attested"),
        ("hollow_dim", INFINITE, "attested"),
        ("fs", False, "attested"),
    ),
)


def prufer(p: int) -> SymbolicZModule:
    return SymbolicZModule("prufer", p=p, attested=(("fs", False, "attested"), ("hollow_dim", 1, "attested")))


def fg_abelian(rank: int, divisors=()) -> SymbolicZModule:
    return SymbolicZModule("fg_abelian", rank=rank, divisors=tuple(int(d) for d in divisors))


def parse_name(name: str) -> SymbolicZModule:
    """"Z", "Q", "Prufer:p" or "FgAb:r,d1,d2,..."."""
    name = name.strip()
    if name == "Z":
        return Z
    if name == "Q":
        return Q
    head, _, rest = name.partition(":")
    try:
        if head == "Prufer":
            return prufer(int(rest))
        if head == "FgAb":
            parts = [int(x) for x in rest.split(",") if x.strip()]
            if not parts:
                raise ParseError("FgAb needs at least a rank", location=name)
            return fg_abelian(parts[0], parts[1:])
    except ValueError as exc:
        raise ParseError(f"bad integer in catalog name: {exc}", location=name) from None
    raise ParseError("unknown catalog entry; expected Z, Q, Prufer:p or FgAb:r,d1,...", location=name)


def _omega(n: int) -> int:
    return len(factorint(n))


def _rad(n: int) -> int:
    return math.prod(factorint(n)) if n > 1 else 1


def sym_radical(m: SymbolicZModule) -> dict:
    if m.kind == "fg_abelian":
        comps = [{"divisor": d, "generator": _rad(d), "order": d // _rad(d)} for d in m.divisors]
        return {
            "whole_module": False,
            "description": "torsion subgroup generated by rad(d) in each cyclic factor; free part contributes 0",
            "components": comps,
            "order": math.prod(c["order"] for c in comps),
        }
    # divisible groups have no maximal subgroups
    return {"whole_module": True, "description": "no maximal submodules, so Rad(M) = M", "components": [],
            "order": None}


def sym_is_fs(m: SymbolicZModule) -> SymbolicVerdict:
    if m.kind == "fg_abelian":
        return SymbolicVerdict("fs", True, "Rad(M) is a finite group, so it has finitely many submodules")
    return SymbolicVerdict("fs", False, "Rad(M) = M is nonzero, so M is not fs")


def z_hollow_witness(n: int = MAX_WITNESS) -> dict:
    """The ideals p_1 Z, ..., p_n Z for the first n primes, checked coindependent.

    p_i Z + (intersection of the others) = gcd(p_i, lcm of the others) Z, which is Z.
    """
    n = min(n, MAX_WITNESS)
    primes = [int(prime(i)) for i in range(1, n + 1)]
    checks = []
    for i, p in enumerate(primes):
        rest = [q for j, q in enumerate(primes) if j != i]
        meet = reduce(math.lcm, rest, 1)
        checks.append({"prime": p, "others_intersection": meet, "sum_generator": math.gcd(p, meet)})
    ok = all(c["sum_generator"] == 1 for c in checks) and all(p > 1 for p in primes)
    return {"ideals": [f"{p}Z" for p in primes], "checks": checks, "coindependent": ok}


def sym_hollow_dim(m: SymbolicZModule) -> SymbolicVerdict:
    if m.kind == "fg_abelian":
        if m.rank >= 1:
            return SymbolicVerdict("hollow_dim", INFINITE,
                                   "the Z summand has coindependent families p_1 Z, ..., p_n Z of every size",
                                   witness=z_hollow_witness())
        value = sum(_omega(d) for d in m.divisors)
        return SymbolicVerdict("hollow_dim", value, "length of M/Rad(M): one simple factor per prime of each divisor")
    if m.kind == "prufer":
        return SymbolicVerdict("hollow_dim", 1, "the subgroup lattice is a chain, so every proper subgroup is small")
    claim = dict((k, (v, s)) for k, v, s in m.attested).get("hollow_dim")
    return SymbolicVerdict(
        "hollow_dim",
        UNKNOWN,
        "claimed infinite, but no coindependent family is constructible in this representation",
        source="disputed",
        witness={"attested_claim": claim[0] if claim else None, "attested_source": claim[1] if claim else None},
    )


def sym_goldie_dim(m: SymbolicZModule) -> SymbolicVerdict:
    if m.kind == "fg_abelian":
        value = m.rank + sum(_omega(d) for d in m.divisors)
        return SymbolicVerdict("goldie_dim", value, "one uniform summand per free rank and per primary cyclic component")
    return SymbolicVerdict("goldie_dim", 1, "any two nonzero subgroups intersect nontrivially (uniform)")


def declared_submodules(m: SymbolicZModule) -> list[SymbolicZModule]:
    """Representative submodules whose fs status must follow from closure under submodules."""
    if m.kind == "fg_abelian":
        out = [fg_abelian(0, ())]
        if m.rank:
            out.append(fg_abelian(m.rank))
        if m.divisors:
            out.append(fg_abelian(0, m.divisors))
        return out
    if m.kind == "prufer":
        return [fg_abelian(0, (m.p**k,)) for k in range(1, 4)]
    return [Z]


def essential_extension_remark_check() -> CheckResult:
    rows = []
    # Z inside Q: every nonzero a/b has b*(a/b) = a, a nonzero integer
    q_ess = dict((k, v) for k, v, _ in Q.attested).get("essential_extension_of") == "Z"
    rows.append({"submodule": "Z", "extension": "Q", "proper": True, "essential": q_ess,
                 "sub_fs": sym_is_fs(Z).value, "ext_fs": sym_is_fs(Q).value})
    rows.append({"submodule": "Z", "extension": "Z", "proper": False, "essential": True,
                 "sub_fs": sym_is_fs(Z).value, "ext_fs": sym_is_fs(Z).value})
    P = prufer(2)
    socle = fg_abelian(0, (2,))
    rows.append({"submodule": socle.name, "extension": P.name, "proper": True,
                 "essential": True, "sub_fs": sym_is_fs(socle).value, "ext_fs": sym_is_fs(P).value})
    ok = (
        rows[0]["essential"] and rows[0]["sub_fs"] and not rows[0]["ext_fs"]
        and rows[1]["sub_fs"] == rows[1]["ext_fs"]
        and rows[2]["sub_fs"] and not rows[2]["ext_fs"]
    )
    return CheckResult("essential_extension_remark", bool(ok), details={"extensions": rows})


def example_0123_table() -> dict:
    """fs versus finite hollow dimension: one instance per cell."""
    M6 = regular_module(ring_cyclic(6))
    lat = submodule_lattice(M6)
    finite_cell = {
        "fs": True,
        "finite_hollow": True,
        "instance": "Z6 regular",
        "radical": list(lat.ids(lattice_radical(lat))),
        "hollow_dim": lattice_hollow_dimension(lat),
        "fs_small_count": len(small_nodes(lat)) - 1,
        "source": "derived",
    }
    P = prufer(2)
    rows = [finite_cell]
    for m, fs_flag, finite in ((Z, True, False), (P, False, True), (Q, False, False)):
        fs = sym_is_fs(m)
        h = sym_hollow_dim(m)
        rows.append({
            "fs": fs_flag,
            "finite_hollow": finite,
            "instance": m.name,
            "fs_verdict": fs.as_dict(),
            "hollow_verdict": h.as_dict(),
            "source": h.source,
        })
    return {"rows": rows}


def example_0123_check() -> CheckResult:
    table = example_0123_table()
    r = table["rows"]
    ok = (
        r[0]["radical"] == [0] and r[0]["fs_small_count"] == 0
        and r[1]["fs_verdict"]["value"] is True and r[1]["hollow_verdict"]["value"] == INFINITE
        and r[1]["hollow_verdict"]["witness"]["coindependent"]
        and r[2]["fs_verdict"]["value"] is False and r[2]["hollow_verdict"]["value"] == 1
        and r[3]["fs_verdict"]["value"] is False and r[3]["hollow_verdict"]["value"] == UNKNOWN
        and r[3]["hollow_verdict"]["source"] == "disputed"
    )
    return CheckResult("example_0123", bool(ok), details=table)


def show(m: SymbolicZModule) -> dict:
    return {
        "name": m.name,
        "kind": m.kind,
        "rank": m.rank,
        "divisors": list(m.divisors),
        "p": m.p,
        "radical": sym_radical(m),
        "fs": sym_is_fs(m).as_dict(),
        "goldie_dim": sym_goldie_dim(m).as_dict(),
        "hollow_dim": sym_hollow_dim(m).as_dict(),
        "attested": [{"property": k, "value": v, "source": s} for k, v, s in m.attested],
        "declared_submodules": [s.name for s in declared_submodules(m)],
    }


# -- bridge to the finite engine ---------------------------------------------------


def divisor_chains(max_order: int = BRIDGE_MAX_ORDER):
    """Every chain d_1 | d_2 | ... | d_k (d_1 >= 2) with product at most max_order, plus ()."""
    out = [()]

    def grow(chain, prod):
        last = chain[-1] if chain else 1
        d = last if chain else 2
        while prod * d <= max_order:
            if d % last == 0:
                nxt = chain + (d,)
                out.append(nxt)
                grow(nxt, prod * d)
            d += 1

    grow((), 1)
    return sorted(out, key=lambda c: (math.prod(c), c))


def finite_abelian_module(divisors) -> FiniteModule:
    """Z_{d_1} x ... x Z_{d_k} as a module over Z_e, e the exponent."""
    divisors = [int(d) for d in divisors]
    e = divisors[-1] if divisors else 1
    R = ring_cyclic(e)
    pts = _coords(divisors)
    coords = np.array(pts, dtype=np.int64).reshape(len(pts), len(divisors))
    div = np.array(divisors, dtype=np.int64)
    radix = np.ones(len(divisors), dtype=np.int64)
    for i in range(len(divisors) - 2, -1, -1):
        radix[i] = radix[i + 1] * div[i + 1]
    r = np.arange(e, dtype=np.int64)
    table = ((r[:, None, None] * coords[None, :, :]) % div * radix).sum(axis=-1)
    M = FiniteModule(R, _group_table(divisors), table, labels=_coords(divisors), divisors=divisors,
                     presentation={"kind": "explicit_action", "divisors": divisors, "action": table.tolist()})
    return M


def _radical_ids(divisors) -> tuple:
    coords = _coords(divisors)
    rads = [_rad(d) for d in divisors]
    return tuple(i for i, c in enumerate(coords) if all(x % g == 0 for x, g in zip(c, rads)))


def bridge_entry(divisors, max_nodes: int = BRIDGE_MAX_NODES) -> dict:
    m = fg_abelian(0, divisors)
    M = finite_abelian_module(divisors)
    lat = submodule_lattice(M, max_nodes=max_nodes)
    rad = lattice_radical(lat)
    finite = {
        "radical": lat.ids(rad),
        "goldie_dim": lattice_goldie_dimension(lat),
        "hollow_dim": lattice_hollow_dimension(lat),
        "fs_small_count": len(small_nodes(lat)) - 1,
    }
    symbolic = {
        "radical": _radical_ids(divisors),
        "radical_order": sym_radical(m)["order"],
        "goldie_dim": sym_goldie_dim(m).value,
        "hollow_dim": sym_hollow_dim(m).value,
        "fs": sym_is_fs(m).value,
    }
    agree = (
        finite["radical"] == symbolic["radical"]
        and len(finite["radical"]) == symbolic["radical_order"]
        and finite["goldie_dim"] == symbolic["goldie_dim"]
        and finite["hollow_dim"] == symbolic["hollow_dim"]
        and symbolic["fs"] is True
        and finite["fs_small_count"] >= 0
        # a finite fs-module's small submodules are exactly those of Rad
        and finite["fs_small_count"] == len(lat.nodes_below(rad)) - 1
    )
    return {"name": m.name, "order": M.order, "lattice_nodes": len(lat), "agree": bool(agree),
            "goldie_dim": finite["goldie_dim"], "hollow_dim": finite["hollow_dim"],
            "fs_small_count": finite["fs_small_count"]}


def bridge_check(max_order: int = BRIDGE_MAX_ORDER, max_nodes: int = BRIDGE_MAX_NODES) -> CheckResult:
    from .errors import CeilingError

    rows, skipped = [], []
    for chain in divisor_chains(max_order):
        try:
            rows.append(bridge_entry(chain, max_nodes=max_nodes))
        except CeilingError as exc:
            skipped.append({"name": fg_abelian(0, chain).name, "ceiling": exc.ceiling, "found": exc.found})
    bad = [r["name"] for r in rows if not r["agree"]]
    return CheckResult(
        "catalog_bridge",
        not bad and not skipped,
        details={"entries": len(rows), "disagreements": bad, "skipped": skipped, "rows": rows},
    )
