import itertools

import pytest

from finst.fincat import SetFunctor, discrete_cat, identity_functor, terminal_cat
from finst.fixtures import (adjunction_fixture_institutions, discrete_two,
                            empty_sen, one_sig, twosig, twosig_mutated)
from finst.instcore import (CO, MOR, PI_CO, PI_MOR, ClosureOp, InsMap,
                            closure_from_family, compose_maps, derive_institution,
                            derive_pi, enumerate_ins_maps, enumerate_pi_maps,
                            galois, identity_map, map_on_derived, maps_equal,
                            set_id, subsets, transpose_to_institution,
                            transpose_to_pi, validate_closure,
                            validate_institution, validate_map, validate_pi,
                            PiInstitution)
from finst.report import InvalidInput


def oracle_satisfaction_violations(i):
    """Re-verify the compatibility condition directly from the raw tables."""
    bad = []
    for h in i.sig.arrows:
        if i.sig.is_identity(h.name):
            continue
        for mp in i.models(h.tgt):
            for phi in i.sen.carrier(h.src):
                lhs = (mp, i.sen.fmap[h.name][phi]) in i.sat[h.tgt]
                rhs = (i.mod_maps[h.name].omap[mp], phi) in i.sat[h.src]
                if lhs != rhs:
                    bad.append((h.name, mp, phi))
    return sorted(bad)


def test_twosig_valid():
    assert validate_institution(twosig()).ok


def test_twosig_broken_bit_reports_exact_triple():
    # flip m2 |= q off: the spec-pinned violating triple is (h, m2, p)
    mutated = twosig_mutated([("S2", "m2", "q")])
    rep = validate_institution(mutated)
    assert not rep.ok
    triples = [it.witnesses for it in rep.items if it.law == "satisfaction-condition"]
    assert triples == [("h", "m2", "p")]
    assert oracle_satisfaction_violations(mutated) == [("h", "m2", "p")]


def test_all_single_bit_mutations_against_oracle():
    cells = [("S1", "n1", "p"), ("S2", "m1", "q"), ("S2", "m1", "r"),
             ("S2", "m2", "q"), ("S2", "m2", "r")]
    for cell in cells:
        m = twosig_mutated([cell])
        rep = validate_institution(m)
        expected = oracle_satisfaction_violations(m)
        got = sorted(it.witnesses for it in rep.items
                     if it.law == "satisfaction-condition")
        assert got == [tuple(t) for t in expected]
        assert rep.ok == (not expected)


def test_discrete_signature_vacuously_valid():
    assert validate_institution(discrete_two()).ok


def test_galois_examples():
    t = twosig()
    assert galois(t, "S2", "sentences", {"r"}) == frozenset({"m1"})
    assert galois(t, "S2", "sentences", set()) == frozenset({"m1", "m2"})
    assert galois(t, "S2", "models", {"m1"}) == frozenset({"q", "r"})


def test_galois_pair_properties():
    t = twosig()
    sents = t.sen.carrier("S2")
    for x in subsets(sents):
        for y in subsets(sents):
            if x <= y:
                assert galois(t, "S2", "sentences", y) <= \
                    galois(t, "S2", "sentences", x)
        star = galois(t, "S2", "sentences", x)
        starstar = galois(t, "S2", "models", star)
        assert x <= starstar
        assert galois(t, "S2", "sentences", starstar) == star


def test_derive_pi_twosig_table():
    p = derive_pi(twosig())
    c2 = p.closures["S2"]
    assert c2.closure({"q"}) == frozenset({"q"})
    assert c2.closure({"r"}) == frozenset({"q", "r"})
    assert c2.closure(set()) == frozenset({"q"})
    assert validate_pi(p).ok


def test_empty_model_class_gives_full_closure():
    sig = terminal_cat("E")
    sen = SetFunctor("Sen", sig, {"*": ("a", "b")},
                     {"id*": {"a": "a", "b": "b"}})
    mod = discrete_cat((), name="none")
    from finst.fincat import Functor
    i = __import__("finst.instcore", fromlist=["Institution"]).Institution(
        "NoModels", sig, sen, {"*": mod},
        {"id*": Functor("m", mod, mod, {}, {})}, {"*": frozenset()})
    p = derive_pi(i)
    assert p.closures["*"].closure(set()) == frozenset({"a", "b"})


def test_closure_validator():
    good = closure_from_family({"a", "b"}, [{"a"}])
    assert validate_closure(good).ok
    bad = ClosureOp(frozenset({"a", "b"}),
                    frozenset({frozenset({"a"}), frozenset({"b"}),
                               frozenset({"a", "b"})}))
    rep = validate_closure(bad)
    assert not rep.ok  # {a} & {b} = {} missing


def test_validate_pi_structurality_violation():
    t = twosig()
    closures = {"S1": closure_from_family(("p",), [frozenset()]),
                "S2": closure_from_family(("q", "r"), [frozenset()])}
    # C_S1({}) = {} here, but make C_S1 close {} to {p} to break h
    closures["S1"] = ClosureOp(frozenset({"p"}), frozenset({frozenset({"p"})}))
    j = PiInstitution("bad", t.sig, t.sen, closures)
    rep = validate_pi(j)
    assert not rep.ok
    assert any(it.law == "structurality" and it.witnesses[0] == "h"
               for it in rep.items)


def test_derive_institution_minimal_membership():
    sig = terminal_cat("M")
    sen = SetFunctor("Sen", sig, {"*": ("a",)}, {"id*": {"a": "a"}})
    j = PiInstitution("Min", sig, sen,
                      {"*": ClosureOp(frozenset({"a"}),
                                      frozenset({frozenset(), frozenset({"a"})}))})
    g = derive_institution(j)
    assert len(g.models("*")) == 2
    assert g.satisfies("*", set_id({"a"}), "a")
    assert not g.satisfies("*", set_id(set()), "a")
    assert validate_institution(g).ok


def test_round_trip_on_fixtures():
    for i in adjunction_fixture_institutions():
        j = derive_pi(i)
        assert derive_pi(derive_institution(j)) == j


def test_identity_maps_valid_all_kinds():
    i = twosig()
    j = derive_pi(i)
    for kind in (MOR, CO):
        assert validate_map(identity_map(i, kind), i, i).ok
    for kind in (PI_MOR, PI_CO):
        assert validate_map(identity_map(j, kind), j, j).ok


def test_identity_comorphism_sentence_components():
    # a comorphism with identity sentence components between two copies
    j = derive_pi(twosig())
    m = identity_map(j, PI_CO)
    assert all(all(k == v for k, v in m.alpha[o].items()) for o in m.alpha)
    assert validate_map(m, j, j).ok


def test_swapping_comorphism_rejected():
    j = derive_pi(twosig())
    m = identity_map(j, PI_CO)
    alpha = dict(m.alpha)
    alpha["S2"] = {"q": "r", "r": "q"}
    bad = InsMap("swap", PI_CO, m.phi, alpha)
    rep = validate_map(bad, j, j)
    assert not rep.ok
    # consequence preservation must be among the reported failures:
    # q is a consequence of {r} but swapping sends it outside C({q})
    assert any(it.law == "consequence-preservation" for it in rep.items)


def test_map_direction_mismatch_structural():
    # alpha shaped for a comorphism (source carrier -> target carrier)
    # but labelled a morphism: the validator flags the frame as structural
    j = derive_pi(twosig())
    j2 = PiInstitution(j.name, j.sig,
                       SetFunctor("Sen", j.sig,
                                  {"S1": ("extra", "p"), "S2": ("q", "r")},
                                  {"id_S1": {"p": "p", "extra": "extra"},
                                   "id_S2": {"q": "q", "r": "r"},
                                   "h": {"p": "q", "extra": "q"}}),
                       {"S1": closure_from_family(("p", "extra"), []),
                        "S2": j.closures["S2"]})
    alpha = {"S1": {"p": "p", "extra": "p"}, "S2": {"q": "q", "r": "r"}}
    bad = InsMap("badkind", PI_MOR, identity_map(j, PI_MOR).phi, alpha)
    rep = validate_map(bad, j2, j)
    assert rep.status == "structural_error"
    assert any(it.law == "alpha-direction-or-frame" for it in rep.items)


def test_map_on_derived_round_trip():
    j = derive_pi(twosig())
    m = identity_map(j, PI_CO)
    g = map_on_derived(m, "G", j, j)
    assert g.kind == CO
    gi = derive_institution(j)
    assert validate_map(g, gi, gi).ok
    back = map_on_derived(g, "F", None, None)
    assert maps_equal(back, m)


def test_drop_beta_yields_valid_pi_map():
    # the F-action on institution maps: drop beta, the result must validate
    i = twosig()
    ji = derive_pi(i)
    for m in enumerate_ins_maps(i, i, CO, guard=100_000):
        assert validate_map(map_on_derived(m, "F", None, None), ji, ji).ok


def test_hom_bijection_with_transposes():
    for i in (twosig(), one_sig()):
        j = derive_pi(i)
        fi = derive_pi(i)
        gj = derive_institution(j)
        pi_maps = enumerate_pi_maps(j, fi, PI_CO)
        ins_maps = enumerate_ins_maps(gj, i, CO)
        assert len(pi_maps) == len(ins_maps)
        for pm in pi_maps:
            im = transpose_to_institution(pm, j, i)
            assert validate_map(im, gj, i).ok
            assert maps_equal(transpose_to_pi(im), pm)
        for im in ins_maps:
            pm = transpose_to_pi(im)
            assert validate_map(pm, j, fi).ok
            assert maps_equal(transpose_to_institution(pm, j, i), im)


def test_compose_maps_kinds():
    j = derive_pi(twosig())
    m = identity_map(j, PI_CO)
    c = compose_maps(m, m, j)
    assert validate_map(c, j, j).ok
    i = twosig()
    mi = identity_map(i, MOR)
    ci = compose_maps(mi, mi, i)
    assert validate_map(ci, i, i).ok


def test_compose_maps_kind_mismatch():
    j = derive_pi(twosig())
    with pytest.raises(InvalidInput):
        compose_maps(identity_map(j, PI_CO), identity_map(j, PI_MOR), j)
