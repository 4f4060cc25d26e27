"""Finite lattices of subgroups, stored as element bitmasks.

A node is a Python ``int`` whose bit ``i`` is set when element ``i`` belongs to
the subset.  Nodes are kept in canonical order (cardinality, then the sorted
element-id list), so the bottom is node 0 and the top is the last node.  Joins
and meets are answered from per-node up/down sets, themselves bitsets over node
indices: the join of two nodes is the lowest-indexed common upper bound.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import CeilingError

DEFAULT_MAX_NODES = 4096
DENSE_LIMIT = 8192


def mask_from_ids(ids) -> int:
    mask = 0
    for i in ids:
        mask |= 1 << int(i)
    return mask


def mask_from_bool(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def ids_from_mask(mask: int) -> tuple[int, ...]:
    if mask == 0:
        return ()
    raw = np.frombuffer(mask.to_bytes((mask.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    return tuple(int(i) for i in np.flatnonzero(np.unpackbits(raw, bitorder="little")))


def canonical_key(mask: int):
    return (mask.bit_count(), ids_from_mask(mask))


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


class Lattice:
    """Finite lattice of subsets of a fixed ground set, in canonical order.

    Every lattice here is closed under intersection, so meets are plain mask
    intersections.  Small lattices also keep up/down bitsets for constant-time
    joins; above ``DENSE_LIMIT`` nodes, joins are instead computed as subgroup
    sums through the ground set's addition table ``add``.
    """

    def __init__(self, masks, upper_covers=None, add=None):
        masks = sorted(set(masks), key=canonical_key)
        index = {m: i for i, m in enumerate(masks)}
        if upper_covers is None:
            covers = _covers_from_containment(masks)
        else:
            covers = [sorted(index[c] for c in upper_covers[m]) for m in masks]
        self._setup(masks, index, covers, add)

    @classmethod
    def from_sorted(cls, masks, upper_covers, add=None, elements=None):
        """Build from canonically sorted masks and index-valued upper covers."""
        lat = cls.__new__(cls)
        lat._setup(masks, {m: i for i, m in enumerate(masks)}, upper_covers, add, elements)
        return lat

    def _setup(self, masks, index, upper_covers, add, elements=None):
        self.masks: list[int] = masks
        self.index = index
        self.sizes = [m.bit_count() for m in masks]
        self.upper_covers: list[list[int]] = upper_covers
        lower = [[] for _ in masks]
        for i, ups in enumerate(upper_covers):
            for j in ups:
                lower[j].append(i)
        self.lower_covers: list[list[int]] = lower
        self.add = add
        self._elements = elements
        self.memo = {}
        n = len(masks)
        self.dense = add is None or n <= DENSE_LIMIT
        self.up = self.down = None
        if self.dense:
            up = [0] * n
            for i in range(n - 1, -1, -1):
                acc = 1 << i
                for j in upper_covers[i]:
                    acc |= up[j]
                up[i] = acc
            down = [0] * n
            for i in range(n):
                acc = 1 << i
                for j in lower[i]:
                    acc |= down[j]
                down[i] = acc
            self.up = up
            self.down = down

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(range(len(self.masks)))

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.masks) - 1

    def leq(self, i: int, j: int) -> bool:
        if self.dense:
            return bool((self.down[j] >> i) & 1)
        return self.masks[i] & ~self.masks[j] == 0

    def element_array(self, i: int) -> np.ndarray:
        if self._elements is None:
            self._elements = [None] * len(self.masks)
        arr = self._elements[i]
        if arr is None:
            arr = self._elements[i] = np.array(ids_from_mask(self.masks[i]), dtype=np.int64)
        return arr

    def join(self, i: int, j: int) -> int:
        if self.dense:
            return _lowest(self.up[i] & self.up[j])
        if self.leq(i, j):
            return j
        if self.leq(j, i):
            return i
        hit = np.zeros(self.add.shape[0], dtype=bool)
        hit[self.add[np.ix_(self.element_array(i), self.element_array(j))].ravel()] = True
        return self.index[mask_from_bool(hit)]

    def meet(self, i: int, j: int) -> int:
        if self.dense:
            return (self.down[i] & self.down[j]).bit_length() - 1
        return self.index[self.masks[i] & self.masks[j]]

    def join_all(self, nodes) -> int:
        acc = self.bottom
        for j in nodes:
            acc = self.join(acc, j)
        return acc

    def meet_all(self, nodes) -> int:
        acc = self.top
        for j in nodes:
            acc = self.meet(acc, j)
        return acc

    def atoms(self) -> list[int]:
        return [] if len(self) == 1 else list(self.upper_covers[self.bottom])

    def coatoms(self) -> list[int]:
        return [] if len(self) == 1 else list(self.lower_covers[self.top])

    def ids(self, i: int) -> tuple[int, ...]:
        return ids_from_mask(self.masks[i])

    def _keep(self, lo: int, hi: int) -> list[int]:
        if self.dense:
            return _bits(self.up[lo] & self.down[hi])
        a, b = self.masks[lo], self.masks[hi]
        return [k for k, m in enumerate(self.masks) if a & ~m == 0 and m & ~b == 0]

    def nodes_below(self, i: int) -> list[int]:
        return self._keep(self.bottom, i)

    def nodes_above(self, i: int) -> list[int]:
        return self._keep(i, self.top)

    def interval(self, lo: int, hi: int) -> "Lattice":
        """The sublattice [lo, hi] as a lattice in its own right."""
        chosen = self._keep(lo, hi)
        if not chosen:
            raise ValueError(f"node {lo} is not below node {hi}")
        pos = {k: t for t, k in enumerate(chosen)}
        covers = [[pos[j] for j in self.upper_covers[k] if j in pos] for k in chosen]
        elements = None
        if self._elements is not None:
            elements = [self._elements[k] for k in chosen]
        sub = Lattice.from_sorted([self.masks[k] for k in chosen], covers, self.add, elements)
        sub.parent_index = chosen
        return sub

    @cached_property
    def heights(self) -> list[int]:
        """Longest chain length from the bottom to each node."""
        h = [0] * len(self)
        for i in range(len(self)):
            for j in self.upper_covers[i]:
                if h[i] + 1 > h[j]:
                    h[j] = h[i] + 1
        return h

    def length(self) -> int:
        return self.heights[self.top]

    def edges(self):
        for i, ups in enumerate(self.upper_covers):
            for j in ups:
                yield i, j


def _covers_from_containment(masks):
    n = len(masks)
    covers = []
    for i, a in enumerate(masks):
        above = [j for j in range(i + 1, n) if a & ~masks[j] == 0]
        mins = []
        for j in above:
            b = masks[j]
            if not any(masks[k] & ~b == 0 for k in mins):
                mins.append(j)
        covers.append(mins)
    return covers


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _minimal(joins: dict) -> list[int]:
    by_size = sorted(joins, key=lambda m: m.bit_count())
    mins = []
    for m in by_size:
        if not any(k & ~m == 0 for k in mins):
            mins.append(m)
    return mins


def closure_lattice(order: int, add: np.ndarray, orbits, max_nodes: int = DEFAULT_MAX_NODES, cls=Lattice) -> Lattice:
    """Enumerate every subgroup that is a sum of the given cyclic pieces.

    ``orbits[x]`` is the element-id array of the cyclic submodule generated by
    ``x``.  Starting from ``{0}``, each discovered node is joined with every
    cyclic piece at once; the fixpoint is the full lattice.  Upper covers fall
    out for free: a cover of N is always N + xR for some x.
    """
    add = np.asarray(add)
    cyclic = {}
    for ids in orbits:
        ids = np.asarray(ids, dtype=np.int64)
        arr = np.zeros(order, dtype=bool)
        arr[ids] = True
        m = mask_from_bool(arr)
        if m not in cyclic:
            cyclic[m] = np.flatnonzero(arr)
    pieces = [ids for _, ids in sorted(cyclic.items(), key=lambda kv: canonical_key(kv[0]))]
    piece_ids = np.concatenate(pieces)
    piece_row = np.repeat(np.arange(len(pieces)), [len(p) for p in pieces])
    masks = [1]
    elems = [np.array([0], dtype=np.int64)]
    found = {1: 0}
    covers = []
    hit = np.zeros((len(pieces), order), dtype=bool)
    i = 0
    while i < len(masks):
        n_mask = masks[i]
        sums = add[np.ix_(elems[i], piece_ids)]
        hit[:] = False
        hit[np.broadcast_to(piece_row, sums.shape), sums] = True
        packed = np.packbits(hit, axis=1, bitorder="little")
        joins = {}
        for r, row in enumerate(packed):
            j = int.from_bytes(row.tobytes(), "little")
            if j != n_mask and j not in joins:
                joins[j] = r
        mins = _minimal(joins)
        for j in mins:
            if j not in found:
                found[j] = len(masks)
                masks.append(j)
                elems.append(np.flatnonzero(hit[joins[j]]))
                if len(masks) > max_nodes:
                    raise CeilingError(
                        f"submodule lattice exceeds {max_nodes} nodes",
                        ceiling=max_nodes,
                        found=len(masks),
                    )
        covers.append([found[j] for j in mins])
        i += 1
    order_ = sorted(range(len(masks)), key=lambda k: (masks[k].bit_count(), ids_tuple(elems[k])))
    pos = [0] * len(masks)
    for t, k in enumerate(order_):
        pos[k] = t
    sorted_covers = [sorted(pos[j] for j in covers[k]) for k in order_]
    return cls.from_sorted([masks[k] for k in order_], sorted_covers, add, [elems[k] for k in order_])


def ids_tuple(arr) -> tuple:
    return tuple(arr.tolist())


def small_nodes(lat: Lattice) -> list[int]:
    """Nodes N with N + A != top for every proper A (literal definition)."""
    if "small" in lat.memo:
        return lat.memo["small"]
    top = lat.top
    # largest first: a non-small node usually finds its witness among the coatoms
    proper = [a for a in reversed(range(len(lat))) if a != top]
    out = [i for i in lat if all(lat.join(i, a) != top for a in proper)]
    lat.memo["small"] = out
    return out


def essential_nodes(lat: Lattice) -> list[int]:
    """Nodes N with N meet A != bottom for every nonzero A (literal definition)."""
    if "essential" in lat.memo:
        return lat.memo["essential"]
    bottom = lat.bottom
    nonzero = [a for a in lat if a != bottom]
    out = [i for i in lat if all(lat.meet(i, a) != bottom for a in nonzero)]
    lat.memo["essential"] = out
    return out
