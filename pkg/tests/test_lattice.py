import pytest
from hypothesis import given, settings

import fslab.lattice as lattice_mod
import oracle
from fslab.errors import CeilingError
from fslab.lattice import Lattice, closure_lattice, essential_nodes, ids_from_mask, mask_from_ids, small_nodes
from fslab.modules import submodule_lattice
from helpers import v22, zn
from strategies import modules, tiny_modules


def brute_lattice(M):
    return set(oracle.closed_subsets(M.add, M.action))


def as_sets(lat):
    return {frozenset(ids_from_mask(m)) for m in lat.masks}


def test_mask_round_trip():
    assert ids_from_mask(mask_from_ids([0, 3, 5])) == (0, 3, 5)


def test_canonical_order_z12():
    lat = submodule_lattice(zn(12))
    assert [lat.ids(i) for i in lat] == [(0,), (0, 6), (0, 4, 8), (0, 3, 6, 9), (0, 2, 4, 6, 8, 10), tuple(range(12))]
    assert lat.bottom == 0 and lat.top == 5 and lat.length() == 3


def test_from_containment_matches_closure():
    lat = submodule_lattice(zn(12))
    plain = Lattice(lat.masks)
    assert plain.masks == lat.masks
    assert plain.upper_covers == lat.upper_covers


def test_v22_has_five_nodes():
    assert len(submodule_lattice(v22())) == 5


def test_node_ceiling():
    with pytest.raises(CeilingError) as exc:
        submodule_lattice(v22(), max_nodes=3)
    assert exc.value.ceiling == 3


def test_interval_keeps_parent_map():
    lat = submodule_lattice(zn(12))
    sub = lat.interval(1, 4)  # {0,6} .. 2Z12
    assert [lat.ids(sub.parent_index[i]) for i in sub] == [(0, 6), (0, 2, 4, 6, 8, 10)]


@settings(max_examples=60, deadline=None)
@given(tiny_modules)
def test_closure_matches_brute_force(M):
    assert as_sets(submodule_lattice(M)) == brute_lattice(M)


@settings(max_examples=40, deadline=None)
@given(tiny_modules)
def test_meet_join_and_covers_match_brute_force(M):
    lat = submodule_lattice(M)
    sets = [frozenset(lat.ids(i)) for i in lat]
    for i in lat:
        for j in lat:
            assert sets[lat.meet(i, j)] == sets[i] & sets[j]
            assert sets[lat.join(i, j)] == oracle.set_sum(M.add, sets[i], sets[j])
            assert lat.leq(i, j) == (sets[i] <= sets[j])
        ups = {sets[j] for j in lat.upper_covers[i]}
        brute = {B for B in sets if sets[i] < B and not any(sets[i] < C < B for C in sets)}
        assert ups == brute


@settings(max_examples=40, deadline=None)
@given(modules(max_order=40))
def test_closed_under_meet_and_join(M):
    lat = submodule_lattice(M)
    if len(lat) > 64:
        return
    masks = set(lat.masks)
    for i in lat:
        for j in lat:
            assert lat.masks[i] & lat.masks[j] in masks
            assert lat.masks[lat.join(i, j)] in masks


@settings(max_examples=40, deadline=None)
@given(modules(max_order=40))
def test_sparse_mode_agrees_with_dense(M):
    dense = submodule_lattice(M)
    old = lattice_mod.DENSE_LIMIT
    lattice_mod.DENSE_LIMIT = 0
    try:
        sparse = closure_lattice(M.order, M.add, [M.orbit(x) for x in range(M.order)])
    finally:
        lattice_mod.DENSE_LIMIT = old
    assert not sparse.dense
    assert sparse.masks == dense.masks
    for i in dense:
        for j in dense:
            assert sparse.join(i, j) == dense.join(i, j)
            assert sparse.leq(i, j) == dense.leq(i, j)
    assert small_nodes(sparse) == small_nodes(dense)
    assert essential_nodes(sparse) == essential_nodes(dense)


@settings(max_examples=40, deadline=None)
@given(tiny_modules)
def test_small_and_essential_nodes_literal(M):
    lat = submodule_lattice(M)
    subs = [frozenset(lat.ids(i)) for i in lat]
    top = subs[-1]
    assert {subs[i] for i in small_nodes(lat)} == {N for N in subs if oracle.is_small(M.add, subs, top, N)}
    assert {subs[i] for i in essential_nodes(lat)} == {N for N in subs if oracle.is_essential(subs, N)}
