"""Instance descriptors and the default test corpus.

A descriptor is plain JSON::

    {"label": "Z12:R",
     "ring": {"kind": "cyclic", "n": 12},
     "module": {"kind": "quotient", "module": {"kind": "regular"}, "submodule": [4]}}

Ring kinds: ``cyclic`` (n), ``product`` (factors), ``poly_quotient`` (p, f with
coefficients listed from degree 0 upward), ``tables`` (add, mul, one).
Module kinds: ``regular``, ``quotient`` (module, submodule generator ids),
``direct_sum`` (summands), ``explicit_action`` (divisors, action table).
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from .errors import CeilingError, ParseError
from .modules import (
    MAX_MODULE_ORDER,
    FiniteModule,
    direct_sum,
    module_from_action,
    quotient,
    regular_module,
    submodule_generated,
)
from .rings import (
    MAX_RING_ORDER,
    FiniteRing,
    ideals,
    ring_cyclic,
    ring_from_tables,
    ring_poly_quotient,
    ring_product,
)

RING_KEYS = {
    "cyclic": ("kind", "n"),
    "product": ("kind", "factors"),
    "poly_quotient": ("kind", "p", "f"),
    "tables": ("kind", "add", "mul", "one"),
}
MODULE_KEYS = {
    "regular": ("kind",),
    "quotient": ("kind", "module", "submodule"),
    "direct_sum": ("kind", "summands"),
    "explicit_action": ("kind", "divisors", "action"),
}


@dataclass
class Instance:
    label: str
    ring: FiniteRing
    module: FiniteModule
    descriptor: dict


def _need(obj, key, where):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", location=where)
    if key not in obj:
        raise ParseError(f"missing field {key!r}", location=where)
    return obj[key]


def _int(v, where) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"expected an integer, got {v!r}", location=where)
    return v


def _int_list(v, where) -> list[int]:
    if not isinstance(v, list):
        raise ParseError(f"expected a list, got {type(v).__name__}", location=where)
    return [_int(x, f"{where}[{i}]") for i, x in enumerate(v)]


def _matrix(v, where):
    if not isinstance(v, list) or not all(isinstance(row, list) for row in v):
        raise ParseError("expected a list of lists", location=where)
    rows = [_int_list(row, f"{where}[{i}]") for i, row in enumerate(v)]
    if len({len(r) for r in rows}) > 1:
        raise ParseError("ragged table", location=where)
    return rows


def parse_ring(d, where="ring") -> FiniteRing:
    kind = _need(d, "kind", where)
    if kind == "cyclic":
        n = _int(_need(d, "n", where), f"{where}.n")
        if n < 1:
            raise ParseError("n must be positive", location=f"{where}.n")
        return ring_cyclic(n)
    if kind == "product":
        factors = _int_list(_need(d, "factors", where), f"{where}.factors")
        if not factors or any(f < 1 for f in factors):
            raise ParseError("factors must be positive integers", location=f"{where}.factors")
        return ring_product([ring_cyclic(f) for f in factors])
    if kind == "poly_quotient":
        p = _int(_need(d, "p", where), f"{where}.p")
        f = _int_list(_need(d, "f", where), f"{where}.f")
        return ring_poly_quotient(p, f)
    if kind == "tables":
        add = _matrix(_need(d, "add", where), f"{where}.add")
        mul = _matrix(_need(d, "mul", where), f"{where}.mul")
        one = _int(_need(d, "one", where), f"{where}.one")
        return ring_from_tables(np.array(add), np.array(mul), one)
    raise ParseError(f"unknown ring kind {kind!r}", location=f"{where}.kind")


def parse_module(R: FiniteRing, d, where="module") -> FiniteModule:
    kind = _need(d, "kind", where)
    if kind == "regular":
        return regular_module(R)
    if kind == "quotient":
        M = parse_module(R, _need(d, "module", where), f"{where}.module")
        gens = _int_list(_need(d, "submodule", where), f"{where}.submodule")
        if any(g < 0 or g >= M.order for g in gens):
            raise ParseError("submodule generator out of range", location=f"{where}.submodule")
        return quotient(M, submodule_generated(M, gens))
    if kind == "direct_sum":
        parts = _need(d, "summands", where)
        if not isinstance(parts, list) or not parts:
            raise ParseError("summands must be a non-empty list", location=f"{where}.summands")
        M = parse_module(R, parts[0], f"{where}.summands[0]")
        for i, part in enumerate(parts[1:], start=1):
            M = direct_sum(M, parse_module(R, part, f"{where}.summands[{i}]"))
        return M
    if kind == "explicit_action":
        divisors = _int_list(_need(d, "divisors", where), f"{where}.divisors")
        action = _matrix(_need(d, "action", where), f"{where}.action")
        return module_from_action(R, divisors, np.array(action, dtype=np.int64).reshape(R.order, -1))
    raise ParseError(f"unknown module kind {kind!r}", location=f"{where}.kind")


def parse_instance(d) -> Instance:
    label = _need(d, "label", "$")
    if not isinstance(label, str):
        raise ParseError("label must be a string", location="label")
    R = parse_ring(_need(d, "ring", "$"))
    M = parse_module(R, _need(d, "module", "$"))
    return Instance(label, R, M, canonical_descriptor(d))


def load_instance(path) -> Instance:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", location=f"{path}:{exc.lineno}:{exc.colno}") from None
    return parse_instance(data)


def _ordered(d, keys_by_kind, child):
    kind = d["kind"]
    keys = keys_by_kind.get(kind, tuple(d))
    out = {}
    for k in keys:
        v = d[k]
        out[k] = child(k, v)
    return out


def _canon_module(d):
    def child(k, v):
        if k == "module":
            return _canon_module(v)
        if k == "summands":
            return [_canon_module(x) for x in v]
        return v

    return _ordered(d, MODULE_KEYS, child)


def canonical_descriptor(d) -> dict:
    """Same descriptor with the fixed key order used in every file we write."""
    return {
        "label": d["label"],
        "ring": _ordered(d["ring"], RING_KEYS, lambda k, v: v),
        "module": _canon_module(d["module"]),
    }


def dumps_descriptor(d) -> str:
    return json.dumps(canonical_descriptor(d), separators=(",", ":"))


# -- generation -------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusConfig:
    max_ring_order: int = 64
    max_module_order: int = 256
    # direct sums multiply fast with the number of ideals, so they stop at this ring order
    direct_sum_ring_order: int = 16
    seed: int = 0

    def check(self):
        if self.max_ring_order > MAX_RING_ORDER:
            raise CeilingError(f"max ring order {self.max_ring_order} exceeds ceiling {MAX_RING_ORDER}",
                               ceiling=MAX_RING_ORDER, found=self.max_ring_order)
        if self.max_module_order > MAX_MODULE_ORDER:
            raise CeilingError(f"max module order {self.max_module_order} exceeds ceiling {MAX_MODULE_ORDER}",
                               ceiling=MAX_MODULE_ORDER, found=self.max_module_order)
        if self.max_ring_order < 1 or self.max_module_order < 1:
            raise ParseError("corpus bounds must be positive")


def ring_descriptors(max_order: int) -> list[tuple[str, dict]]:
    out = [(f"Z{n}", {"kind": "cyclic", "n": n}) for n in range(1, max_order + 1)]
    for k in (2, 3):
        for factors in combinations_with_replacement(range(2, max_order + 1), k):
            if math.prod(factors) <= max_order:
                out.append(("x".join(f"Z{f}" for f in factors), {"kind": "product", "factors": list(factors)}))
    for p in (2, 3):
        for k in (2, 3):
            if p**k <= max_order:
                f = [0] * k + [1]
                out.append((f"F{p}[x]/(x^{k})", {"kind": "poly_quotient", "p": p, "f": f}))
    return out


def _quotient_desc(gens):
    if not gens:
        return {"kind": "regular"}
    return {"kind": "quotient", "module": {"kind": "regular"}, "submodule": list(gens)}


def _quotient_label(gens):
    return "R" if not gens else "R/<" + ",".join(str(g) for g in gens) + ">"


def module_descriptors(R: FiniteRing, max_module_order: int, sums: bool = True) -> list[tuple[str, dict]]:
    """Regular module, every nonzero quotient R/I, sums of two or three cyclic quotients."""
    if R.order > max_module_order:
        return []
    if R.order == 1:
        return [("R", {"kind": "regular"})]
    regular = regular_module(R)
    cyclic = []
    for I in ideals(R, "right"):
        if len(I) == R.order:
            continue
        gens = regular.submodule(I.elements).generators
        cyclic.append((R.order // len(I), gens))
    cyclic.sort(key=lambda c: (c[0], c[1]))
    out = [(_quotient_label(g), _quotient_desc(g)) for _, g in sorted(cyclic, key=lambda c: (-c[0], c[1]))]
    if not sums:
        return out
    for k in (2, 3):
        for combo in combinations_with_replacement(range(len(cyclic)), k):
            orders = [cyclic[i][0] for i in combo]
            if math.prod(orders) > max_module_order:
                continue
            parts = [cyclic[i][1] for i in combo]
            label = " + ".join(_quotient_label(g) for g in parts)
            out.append((label, {"kind": "direct_sum", "summands": [_quotient_desc(g) for g in parts]}))
    return out


def generate_corpus(config: CorpusConfig | None = None) -> list[dict]:
    """Deterministic enumeration; the seed is recorded but nothing is sampled."""
    config = config or CorpusConfig()
    config.check()
    out = []
    for ring_label, rd in ring_descriptors(config.max_ring_order):
        R = parse_ring(rd)
        sums = R.order <= config.direct_sum_ring_order
        for mod_label, md in module_descriptors(R, config.max_module_order, sums):
            out.append(canonical_descriptor({"label": f"{ring_label}:{mod_label}", "ring": rd, "module": md}))
    return out


def fingerprint(corpus: list[dict], config: CorpusConfig) -> dict:
    h = hashlib.sha256()
    for d in corpus:
        h.update(dumps_descriptor(d).encode())
        h.update(b"\n")
    return {
        "count": len(corpus),
        "max_ring_order": config.max_ring_order,
        "max_module_order": config.max_module_order,
        "direct_sum_ring_order": config.direct_sum_ring_order,
        "seed": config.seed,
        "sha256": h.hexdigest(),
    }
