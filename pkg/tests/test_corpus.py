import json
import os

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fslab.corpus import (
    CorpusConfig,
    canonical_descriptor,
    dumps_descriptor,
    fingerprint,
    generate_corpus,
    parse_instance,
    ring_descriptors,
)
from fslab.errors import CeilingError, ParseError, ValidationError

GOLDEN = os.path.join(os.path.dirname(__file__), "golden", "corpus_fingerprint.json")


@pytest.fixture(scope="module")
def default_corpus():
    return generate_corpus()


def test_golden_fingerprint(default_corpus):
    with open(GOLDEN) as fh:
        golden = json.load(fh)
    assert fingerprint(default_corpus, CorpusConfig()) == golden
    assert golden["count"] >= 200


def test_labels_unique(default_corpus):
    labels = [d["label"] for d in default_corpus]
    assert len(set(labels)) == len(labels)


def test_max_ring_order_four():
    names = [name for name, _ in ring_descriptors(4)]
    assert names == ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "F2[x]/(x^2)"]


def test_seed_does_not_change_corpus():
    a = generate_corpus(CorpusConfig(max_ring_order=8, seed=0))
    b = generate_corpus(CorpusConfig(max_ring_order=8, seed=99))
    assert a == b


def test_config_ceilings():
    with pytest.raises(CeilingError):
        generate_corpus(CorpusConfig(max_ring_order=300))
    with pytest.raises(CeilingError):
        generate_corpus(CorpusConfig(max_module_order=1000))


def test_every_module_within_bounds():
    cfg = CorpusConfig(max_ring_order=12, max_module_order=30)
    for d in generate_corpus(cfg):
        inst = parse_instance(d)
        assert inst.ring.order <= 12 and inst.module.order <= 30


def test_canonical_key_order():
    d = {"module": {"kind": "regular"}, "ring": {"n": 12, "kind": "cyclic"}, "label": "Z12:R"}
    assert dumps_descriptor(d) == '{"label":"Z12:R","ring":{"kind":"cyclic","n":12},"module":{"kind":"regular"}}'


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_round_trip(data):
    corpus = generate_corpus(CorpusConfig(max_ring_order=16))
    d = data.draw(st.sampled_from(corpus))
    inst = parse_instance(json.loads(dumps_descriptor(d)))
    again = parse_instance(d)
    assert canonical_descriptor(inst.descriptor) == d
    assert np.array_equal(inst.module.add, again.module.add)
    assert np.array_equal(inst.module.action, again.module.action)
    assert np.array_equal(inst.ring.mul, again.ring.mul)


@pytest.mark.parametrize("bad,where", [
    ({"ring": {"kind": "cyclic", "n": 4}, "module": {"kind": "regular"}}, "label"),
    ({"label": "x", "ring": {"kind": "cyclic"}, "module": {"kind": "regular"}}, "ring"),
    ({"label": "x", "ring": {"kind": "cyclic", "n": "4"}, "module": {"kind": "regular"}}, "ring.n"),
    ({"label": "x", "ring": {"kind": "torus"}, "module": {"kind": "regular"}}, "ring.kind"),
    ({"label": "x", "ring": {"kind": "cyclic", "n": 4}, "module": {"kind": "quotient", "module": {"kind": "regular"},
                                                                  "submodule": [9]}}, "module.submodule"),
])
def test_parse_errors_carry_location(bad, where):
    with pytest.raises(ParseError) as exc:
        parse_instance(bad)
    assert exc.value.location.startswith(where) or where in str(exc.value)


def test_explicit_action_validated():
    d = {"label": "bad", "ring": {"kind": "cyclic", "n": 3},
         "module": {"kind": "explicit_action", "divisors": [2], "action": [[0, 1], [0, 1], [0, 1]]}}
    with pytest.raises(ValidationError):
        parse_instance(d)


def test_tables_ring_round_trip():
    d = {"label": "F2", "ring": {"kind": "tables", "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 1]], "one": 1},
         "module": {"kind": "regular"}}
    inst = parse_instance(d)
    assert inst.module.order == 2
