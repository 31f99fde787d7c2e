"""Canonical test fixtures shared by the test suite and the CLI fixtures."""

from __future__ import annotations

from .fincat import (Arrow, FinCat, Functor, SetFunctor, arrow_cat,
                     codiscrete_cat, discrete_cat, terminal_cat)
from .instcore import Institution


def twosig() -> Institution:
    """Two signatures joined by one arrow; the workhorse institution fixture.

    Sig = {S1 -h-> S2}, Sen(S1) = {p}, Sen(S2) = {q, r}, Sen(h)(p) = q.
    Mod(S2) = {m1, m2} discrete, Mod(S1) = {n1}, both m_i reduct to n1.
    n1 |= p; m1 |= q, r; m2 |= q only.
    """
    sig = FinCat("TwoSigBase", ("S1", "S2"),
                 (Arrow("id_S1", "S1", "S1"), Arrow("id_S2", "S2", "S2"),
                  Arrow("h", "S1", "S2")),
                 {"S1": "id_S1", "S2": "id_S2"},
                 {("id_S1", "id_S1"): "id_S1", ("id_S2", "id_S2"): "id_S2",
                  ("h", "id_S1"): "h", ("id_S2", "h"): "h"})
    sen = SetFunctor("Sen", sig,
                     {"S1": ("p",), "S2": ("q", "r")},
                     {"id_S1": {"p": "p"}, "id_S2": {"q": "q", "r": "r"},
                      "h": {"p": "q"}})
    mod1 = discrete_cat(("n1",), name="Mod_S1")
    mod2 = discrete_cat(("m1", "m2"), name="Mod_S2")
    mod_maps = {
        "id_S1": Functor("mod_id_S1", mod1, mod1, {"n1": "n1"}, {"id_n1": "id_n1"}),
        "id_S2": Functor("mod_id_S2", mod2, mod2, {"m1": "m1", "m2": "m2"},
                         {"id_m1": "id_m1", "id_m2": "id_m2"}),
        "h": Functor("mod_h", mod2, mod1, {"m1": "n1", "m2": "n1"},
                     {"id_m1": "id_n1", "id_m2": "id_n1"}),
    }
    sat = {"S1": frozenset({("n1", "p")}),
           "S2": frozenset({("m1", "q"), ("m2", "q"), ("m1", "r")})}
    return Institution("TwoSig", sig, sen, {"S1": mod1, "S2": mod2}, mod_maps, sat)


def twosig_mutated(flips) -> Institution:
    """TwoSig with the given (object, model, sentence) satisfaction bits flipped."""
    base = twosig()
    sat = {o: set(v) for o, v in base.sat.items()}
    for (o, m, phi) in flips:
        cell = (m, phi)
        if cell in sat[o]:
            sat[o].remove(cell)
        else:
            sat[o].add(cell)
    return Institution("TwoSigMut", base.sig, base.sen, base.mod_cats,
                       base.mod_maps, {o: frozenset(v) for o, v in sat.items()})


def one_sig() -> Institution:
    """Single signature, two sentences, two models (independent bits)."""
    sig = terminal_cat("OneSigBase")
    sen = SetFunctor("Sen", sig, {"*": ("s", "t")},
                     {"id*": {"s": "s", "t": "t"}})
    mod = discrete_cat(("u", "v"), name="Mod_One")
    mod_maps = {"id*": Functor("mod_id", mod, mod, {"u": "u", "v": "v"},
                               {"id_u": "id_u", "id_v": "id_v"})}
    sat = {"*": frozenset({("u", "s"), ("u", "t"), ("v", "s")})}
    return Institution("OneSig", sig, sen, {"*": mod}, mod_maps, sat)


def empty_sen() -> Institution:
    """One signature with no sentences and one model: everything is vacuous."""
    sig = terminal_cat("EmptySenBase")
    sen = SetFunctor("Sen", sig, {"*": ()}, {"id*": {}})
    mod = discrete_cat(("w",), name="Mod_Empty")
    mod_maps = {"id*": Functor("mod_id", mod, mod, {"w": "w"}, {"id_w": "id_w"})}
    return Institution("EmptySen", sig, sen, {"*": mod}, mod_maps,
                       {"*": frozenset()})


def discrete_two() -> Institution:
    """Two unconnected signatures; the satisfaction condition is vacuous."""
    sig = discrete_cat(("A", "B"), name="DiscTwoBase")
    sen = SetFunctor("Sen", sig, {"A": ("x",), "B": ("y",)},
                     {"id_A": {"x": "x"}, "id_B": {"y": "y"}})
    ma = discrete_cat(("ma",), name="Mod_A")
    mb = codiscrete_cat(("mb1", "mb2"), name="Mod_B")
    mod_maps = {
        "id_A": Functor("mid_A", ma, ma, {"ma": "ma"}, {"id_ma": "id_ma"}),
        "id_B": Functor("mid_B", mb, mb, {"mb1": "mb1", "mb2": "mb2"},
                        {a.name: a.name for a in mb.arrows}),
    }
    sat = {"A": frozenset({("ma", "x")}), "B": frozenset({("mb1", "y")})}
    return Institution("DiscreteTwo", sig, sen, {"A": ma, "B": mb}, mod_maps, sat)


def adjunction_fixture_institutions() -> list[Institution]:
    """The fixed four-fixture set used by the hom-set bijection checks."""
    return [twosig(), one_sig(), empty_sen(), discrete_two()]
