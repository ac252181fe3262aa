"""Smoke tests for the python bindings."""

import json

try:
    from slhyper import _core
except ImportError:
    import _core


def gen():
    return _core.gen_instance(7, states=2, actions=2, agents=1, aps=2,
                              observations=1)


def test_gen_validate_transform():
    inst = gen()
    digest = _core.validate(inst)
    assert len(digest) == 16
    doc = json.loads(_core.transform(inst))
    assert "certificate" in doc


def test_parse_and_encode_s2h():
    inst = _core.transform(gen())
    phi = "exists x:o1. bind a1 x. F p0"
    assert _core.parse_slii(phi).startswith("exists")
    enc = _core.encode_s2h(inst, phi)
    assert "[" in enc and "exists" in enc


def test_encode_h2s():
    inst = _core.transform(gen())
    phi = "exists x. [p1:(a1=x); p2:(a1=x)] G (p0@p1 <-> p0@p2)"
    composed, encoded = _core.encode_h2s(inst, phi, True)
    assert "exists" in encoded
    json.loads(composed)


def test_check_and_verify():
    inst = gen()
    taut = "forall x:o1. bind a1 x. (p0 | !p0)"
    assert _core.check_slii(inst, taut, 1) is True
    report = json.loads(_core.verify_s2h(inst, "exists x:o1. bind a1 x. F p0", 1))
    assert report["agree"] is True
    report2 = json.loads(
        _core.verify_h2s(inst, "exists x. [p:(a1=x)] F p0@p", 1, True))
    assert report2["agree"] is True


def test_random_formulas():
    inst = _core.gen_instance(3, states=2, actions=2, agents=1, aps=2,
                              observations=2)
    s = _core.random_slii(3, inst, 2, 2)
    h = _core.random_hypersl(3, inst, 2, 2, 2)
    assert _core.parse_slii(s) == s
    assert _core.parse_hypersl(h) == h
