import math

import pytest

from fslab import catalog
from fslab.catalog import (
    INFINITE,
    UNKNOWN,
    Q,
    Z,
    bridge_check,
    bridge_entry,
    declared_submodules,
    divisor_chains,
    essential_extension_remark_check,
    example_0123_check,
    example_0123_table,
    fg_abelian,
    parse_name,
    prufer,
    sym_goldie_dim,
    sym_hollow_dim,
    sym_is_fs,
    sym_radical,
    z_hollow_witness,
)
from fslab.errors import ParseError
from fslab.invariants import classify
from fslab.modules import submodule_lattice
from helpers import zn


def test_z_entry():
    assert sym_radical(Z)["order"] == 1
    assert sym_is_fs(Z).value is True
    assert sym_hollow_dim(Z).value == INFINITE


def test_prufer_entry():
    P = prufer(3)
    assert sym_is_fs(P).value is False
    assert sym_hollow_dim(P).value == 1
    assert sym_radical(P)["whole_module"]


def test_rationals_entry():
    assert sym_is_fs(Q).value is False
    h = sym_hollow_dim(Q)
    assert h.value == UNKNOWN and h.source == "disputed"
    assert h.witness == {"attested_claim": INFINITE, "attested_source": "attested"}


def test_fg_abelian_goldie_counts_primary_components():
    assert sym_goldie_dim(fg_abelian(0, [2, 6])).value == 3


def test_z_hollow_witness_brute_force():
    w = z_hollow_witness()
    primes = [int(s[:-1]) for s in w["ideals"]]
    assert primes == [2, 3, 5, 7, 11, 13]
    assert w["coindependent"]
    # independent recomputation: pZ + (meet of the others) contains 1
    for p in primes:
        others = math.prod(q for q in primes if q != p)
        assert math.gcd(p, others) == 1


def test_witness_is_capped():
    assert len(z_hollow_witness(50)["ideals"]) == catalog.MAX_WITNESS


def test_parse_names():
    assert parse_name("Z") == Z
    assert parse_name("Q") == Q
    assert parse_name("Prufer:5") == prufer(5)
    assert parse_name("FgAb:1,2,4") == fg_abelian(1, [2, 4])
    with pytest.raises(ParseError):
        parse_name("Prufer:x")
    with pytest.raises(ParseError):
        parse_name("R")


def test_invalid_entries():
    with pytest.raises(ParseError):
        prufer(4)
    with pytest.raises(ParseError):
        fg_abelian(0, [4, 6])


def test_example_table_cells():
    rows = example_0123_table()["rows"]
    assert [(r["fs"], r["finite_hollow"]) for r in rows] == [(True, True), (True, False), (False, True), (False, False)]
    assert [r["instance"] for r in rows[1:]] == ["Z", "Prufer:2", "Q"]
    assert rows[3]["hollow_verdict"]["source"] == "disputed"
    assert example_0123_check().passed


def test_essential_extension_remark():
    res = essential_extension_remark_check()
    assert res.passed
    rows = {(r["submodule"], r["extension"]): r for r in res.details["extensions"]}
    assert rows[("Z", "Q")]["sub_fs"] and not rows[("Z", "Q")]["ext_fs"]
    assert rows[("Z", "Z")]["ext_fs"]


@pytest.mark.parametrize("m", [Z, fg_abelian(2, [3, 9]), fg_abelian(0, [4]), prufer(2), Q], ids=lambda m: m.name)
def test_fs_closed_under_declared_submodules(m):
    if sym_is_fs(m).value:
        assert all(sym_is_fs(s).value for s in declared_submodules(m))


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_prufer_truncations_are_chains(p, k):
    if p**k > 256:
        return
    M = zn(p**k)
    lat = submodule_lattice(M)
    assert len(lat) == k + 1 and lat.length() == k
    # every proper submodule is small, as in the chain limit
    assert classify(M).fs_small_count == k - 1


def test_divisor_chains():
    chains = divisor_chains(16)
    assert () in chains and (2, 2, 2, 2) in chains and (2, 4) in chains
    assert (2, 3) not in chains
    assert all(math.prod(c) <= 16 for c in chains)
    assert len(divisor_chains(256)) == 516


@pytest.mark.parametrize("chain", [(), (12,), (2, 6), (2, 2, 4), (3, 9), (2, 2, 2, 2)])
def test_bridge_entries(chain):
    row = bridge_entry(chain)
    assert row["agree"], row


def test_bridge_small_orders():
    res = bridge_check(max_order=64)
    assert res.passed and not res.details["skipped"]


def test_bridge_reports_skips():
    res = bridge_check(max_order=16, max_nodes=20)
    assert not res.passed
    assert res.details["skipped"] and all(s["ceiling"] == 20 for s in res.details["skipped"])
