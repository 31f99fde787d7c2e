import itertools

import pytest

from finst.fincat import (Arrow, FinCat, Functor, NatTrans, SetFunctor,
                          arrow_cat, chain_cat, codiscrete_cat, compose_functors,
                          constant_functor, discrete_cat, enumerate_functors,
                          enumerate_morphisms, enumerate_nat_trans,
                          identity_functor, identity_nat, opposite, span_cat,
                          terminal_cat, validate_category, validate_functor,
                          validate_nat_trans, validate_set_functor)
from finst.report import SizeGuardExceeded


def brute_force_category_laws(c: FinCat):
    """Independent oracle: check all identity/associativity instances directly."""
    bad = []
    for f in c.arrows:
        if c.comp[(f.name, c.identity[f.src])] != f.name:
            bad.append(("id-right", f.name))
        if c.comp[(c.identity[f.tgt], f.name)] != f.name:
            bad.append(("id-left", f.name))
    for f, g, h in itertools.product(c.arrows, repeat=3):
        if f.tgt == g.src and g.tgt == h.src:
            if c.comp[(h.name, c.comp[(g.name, f.name)])] != \
                    c.comp[(c.comp[(h.name, g.name)], f.name)]:
                bad.append(("assoc", (h.name, g.name, f.name)))
    return bad


def test_terminal_category_valid():
    assert validate_category(terminal_cat()).ok


def test_broken_identity_law_reported():
    # comp(f, id_a) deliberately mapped to id_b
    arrows = (Arrow("id_a", "a", "a"), Arrow("id_b", "b", "b"), Arrow("f", "a", "b"))
    comp = {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
            ("f", "id_a"): "id_b", ("id_b", "f"): "f"}
    c = FinCat("broken", ("a", "b"), arrows, {"a": "id_a", "b": "id_b"}, comp)
    rep = validate_category(c)
    assert not rep.ok
    assert any("identity-law" in it.law and "f" in it.witnesses for it in rep.items)


def test_free_chain_category_valid_against_oracle():
    c = chain_cat()
    assert validate_category(c).ok
    assert brute_force_category_laws(c) == []


def test_validator_agrees_with_oracle_on_shapes():
    for c in (terminal_cat(), discrete_cat(("a", "b")), arrow_cat(),
              codiscrete_cat(("a", "b", "c")), chain_cat(), span_cat()):
        assert validate_category(c).ok == (brute_force_category_laws(c) == [])


def test_structural_error_distinct_from_violation():
    arrows = (Arrow("id_a", "a", "a"), Arrow("f", "a", "zzz"))
    c = FinCat("dangling", ("a",), arrows, {"a": "id_a"}, {})
    rep = validate_category(c)
    assert rep.status == "structural_error"


def test_identity_functor_valid():
    for c in (terminal_cat(), arrow_cat(), chain_cat()):
        assert validate_functor(identity_functor(c)).ok


def test_constant_functor_to_terminal_valid():
    F = constant_functor(arrow_cat(), terminal_cat(), "*")
    assert validate_functor(F).ok


def test_functor_endpoint_mismatch():
    c = arrow_cat()
    F = Functor("bad", c, c, {"a": "a", "b": "b"},
                {"id_a": "id_a", "id_b": "id_b", "f": "id_a"})
    rep = validate_functor(F)
    assert not rep.ok
    assert any(it.law == "endpoint-mismatch" for it in rep.items)


def test_contravariant_functor_validation():
    c = arrow_cat()
    op = opposite(c)
    F = Functor("to_op", c, op, {"a": "a", "b": "b"},
                {"id_a": "id_a", "id_b": "id_b", "f": "f"}, contravariant=True)
    assert validate_functor(F).ok


def test_identity_nat_trans_valid():
    F = identity_functor(chain_cat())
    assert validate_nat_trans(identity_nat(F)).ok


def test_nat_trans_between_distinct_constants_structural():
    src = terminal_cat()
    dst = discrete_cat(("a", "b"))
    F = constant_functor(src, dst, "a")
    G = constant_functor(src, dst, "b")
    t = NatTrans("t", F, G, {"*": "id_a"})
    rep = validate_nat_trans(t)
    assert rep.status == "structural_error"
    # and there is simply no valid component at all
    assert enumerate_nat_trans(F, G) == []


def test_unique_transformation_between_constant_functors():
    src = arrow_cat()
    dst = arrow_cat("2'")
    F = constant_functor(src, dst, "a")
    G = constant_functor(src, dst, "b")
    ts = enumerate_nat_trans(F, G)
    assert len(ts) == 1
    assert validate_nat_trans(ts[0]).ok


def test_enumerate_functors_counts():
    assert len(enumerate_functors(terminal_cat(), discrete_cat(("a", "b")))) == 2
    assert len(enumerate_nat_trans(identity_functor(terminal_cat()),
                                   identity_functor(terminal_cat()))) == 1
    c = arrow_cat()
    assert len(enumerate_functors(c, c)) == 3  # identity and two constants


def test_enumerated_functors_all_valid():
    for F in enumerate_functors(arrow_cat(), chain_cat()):
        assert validate_functor(F).ok


def test_enumeration_guard_refuses():
    big = codiscrete_cat(tuple(f"o{i}" for i in range(4)))
    with pytest.raises(SizeGuardExceeded):
        enumerate_functors(big, big, guard=10)


def test_enumerate_morphisms_dispatch():
    assert len(enumerate_morphisms("functors", terminal_cat(), terminal_cat())) == 1


def test_composition_of_valid_functors_valid():
    F = constant_functor(arrow_cat(), chain_cat(), "b")
    for G in enumerate_functors(chain_cat(), arrow_cat()):
        assert validate_functor(compose_functors(G, F)).ok


def test_set_functor_validation():
    c = arrow_cat()
    s = SetFunctor("S", c, {"a": ("x",), "b": ("y", "z")},
                   {"id_a": {"x": "x"}, "id_b": {"y": "y", "z": "z"},
                    "f": {"x": "z"}})
    assert validate_set_functor(s).ok
    bad = SetFunctor("S", c, {"a": ("x",), "b": ("y",)},
                     {"id_a": {"x": "x"}, "id_b": {"y": "y"}, "f": {"x": "q"}})
    assert not validate_set_functor(bad).ok
