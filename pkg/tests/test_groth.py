from finst.fincat import (Functor, NatTrans, arrow_cat, codiscrete_cat,
                          discrete_cat, identity_functor, terminal_cat,
                          validate_category, validate_functor,
                          validate_nat_trans)
from finst.generators import random_indexed_cat
from finst.groth import (CO, CONTRA, GrothCat, IndexedCat, IndexedMap,
                         IndexedTwoCell, groth, groth_2cell, groth_map,
                         pair_obj, validate_indexed_cat)


def constant_ix(base, fiber, variance=CONTRA, name="const"):
    idf = {a.name: Functor(f"T_{a.name}", fiber, fiber,
                           {x: x for x in fiber.objects},
                           {x.name: x.name for x in fiber.arrows})
           for a in base.arrows}
    return IndexedCat(name, base, {c: fiber for c in base.objects}, idf, variance)


def test_constant_fiber_over_terminal_base():
    d = arrow_cat("D")
    ix = constant_ix(terminal_cat(), d)
    assert validate_indexed_cat(ix).ok
    g = groth(ix)
    assert validate_category(g.total).ok
    # total is isomorphic to D: same object and arrow counts
    assert len(g.total.objects) == len(d.objects)
    assert len(g.total.arrows) == len(d.arrows)


def test_constant_terminal_fiber_over_any_base():
    for base in (arrow_cat(), discrete_cat(("a", "b", "c"))):
        ix = constant_ix(base, terminal_cat("F1"))
        g = groth(ix)
        assert validate_category(g.total).ok
        assert len(g.total.objects) == len(base.objects)
        assert len(g.total.arrows) == len(base.arrows)


def worked_example_ix():
    """Contravariant: base a->b, fibers discrete {x0,x1} and {y}, y |-> x0."""
    base = arrow_cat()
    fa = discrete_cat(("x0", "x1"), name="Fa")
    fb = discrete_cat(("y",), name="Fb")
    transports = {
        "id_a": identity_functor(fa),
        "id_b": identity_functor(fb),
        "f": Functor("Tf", fb, fa, {"y": "x0"}, {"id_y": "id_x0"}),
    }
    return IndexedCat("worked", base, {"a": fa, "b": fb}, transports, CONTRA)


def test_worked_example_hand_count():
    ix = worked_example_ix()
    assert validate_indexed_cat(ix).ok
    g = groth(ix)
    assert validate_category(g.total).ok
    assert validate_functor(g.projection).ok
    assert len(g.total.objects) == 3
    non_id = [a for a in g.total.arrows
              if not g.total.is_identity(a.name)]
    assert len(non_id) == 1
    a = non_id[0]
    assert a.src == pair_obj("a", "x0") and a.tgt == pair_obj("b", "y")


def test_projection_commutes_on_seeded_instances():
    for s in range(30):
        ix = random_indexed_cat(s)
        g = groth(ix)
        assert validate_category(g.total).ok
        assert validate_functor(g.projection).ok
        for aid, data in g.arrows.items():
            assert g.projection.amap[aid] == data[2]


def test_groth_both_variances_seeded():
    seen = {CONTRA: 0, CO: 0}
    for s in range(40):
        ix = random_indexed_cat(s)
        seen[ix.variance] += 1
        g = groth(ix)
        assert validate_category(g.total).ok
    assert seen[CONTRA] > 0 and seen[CO] > 0


def test_groth_map_identity():
    ix = worked_example_ix()
    eta = IndexedMap("id", ix, ix,
                     {c: identity_functor(ix.fibers[c]) for c in ix.base.objects})
    F = groth_map(eta)
    g = groth(ix)
    assert F.omap == {o: o for o in g.total.objects}
    assert F.amap == {a.name: a.name for a in g.total.arrows}
    assert validate_functor(F).ok


def test_groth_map_constant_fibers_pointwise():
    base = arrow_cat()
    d1 = discrete_cat(("u", "v"), name="D1")
    d2 = discrete_cat(("w",), name="D2")
    ix1, ix2 = constant_ix(base, d1, name="c1"), constant_ix(base, d2, name="c2")
    comp = Functor("eta", d1, d2, {"u": "w", "v": "w"},
                   {"id_u": "id_w", "id_v": "id_w"})
    eta = IndexedMap("eta", ix1, ix2, {c: comp for c in base.objects})
    F = groth_map(eta)
    assert validate_functor(F).ok
    g1, g2 = groth(ix1), groth(ix2)
    for oid, (c, x) in g1.objects.items():
        assert F.omap[oid] == pair_obj(c, comp.omap[x])
    # commutes with projections exactly
    for aid in g1.arrows:
        assert g2.projection.amap[F.amap[aid]] == g1.projection.amap[aid]


def test_groth_map_composition_strict():
    base = arrow_cat()
    d1 = discrete_cat(("u", "v"), name="D1")
    d2 = discrete_cat(("w", "z"), name="D2")
    d3 = discrete_cat(("q",), name="D3")
    ix1, ix2, ix3 = (constant_ix(base, d, name=f"cx{i}")
                     for i, d in enumerate((d1, d2, d3)))
    e1 = Functor("e1", d1, d2, {"u": "w", "v": "z"}, {"id_u": "id_w", "id_v": "id_z"})
    e2 = Functor("e2", d2, d3, {"w": "q", "z": "q"}, {"id_w": "id_q", "id_z": "id_q"})
    m1 = IndexedMap("m1", ix1, ix2, {c: e1 for c in base.objects})
    m2 = IndexedMap("m2", ix2, ix3, {c: e2 for c in base.objects})
    from finst.fincat import compose_functors
    pasted = IndexedMap("m2m1", ix1, ix3,
                        {c: compose_functors(e2, e1) for c in base.objects})
    lhs = compose_functors(groth_map(m2), groth_map(m1))
    rhs = groth_map(pasted)
    assert lhs.omap == rhs.omap and lhs.amap == rhs.amap


def test_groth_2cell_identity_modification():
    ix = worked_example_ix()
    idf = {c: identity_functor(ix.fibers[c]) for c in ix.base.objects}
    eta = IndexedMap("e", ix, ix, idf)
    mu = IndexedTwoCell("mu", eta, eta,
                        {c: NatTrans(f"i{c}", idf[c], idf[c],
                                     {x: ix.fibers[c].identity[x]
                                      for x in ix.fibers[c].objects})
                         for c in ix.base.objects})
    t = groth_2cell(mu)
    assert validate_nat_trans(t).ok
    g = groth(ix)
    assert all(g.total.is_identity(t.components[o]) for o in g.total.objects)


def test_groth_2cell_nontrivial_over_one_object_base():
    # base terminal, fiber the arrow category; a 2-cell whose single
    # component is the chosen fiber arrow
    base = terminal_cat()
    fib = arrow_cat("fib")
    ix = constant_ix(base, fib)
    Fa = Functor("Fa", fib, fib, {"a": "a", "b": "a"},
                 {"id_a": "id_a", "id_b": "id_a", "f": "id_a"})
    Fb = Functor("Fb", fib, fib, {"a": "b", "b": "b"},
                 {"id_a": "id_b", "id_b": "id_b", "f": "id_b"})
    ea = IndexedMap("ea", ix, ix, {"*": Fa})
    eb = IndexedMap("eb", ix, ix, {"*": Fb})
    mu = IndexedTwoCell("mu", ea, eb,
                        {"*": NatTrans("n", Fa, Fb, {"a": "f", "b": "f"})})
    t = groth_2cell(mu)
    assert validate_nat_trans(t).ok
    # each component is (id_*, the chosen arrow)
    for o, comp in t.components.items():
        assert "(id*," in comp


def test_nontrivial_coherence_cells_covered():
    count = 0
    for s in range(100):
        ix = random_indexed_cat(s)
        found = False
        for (g_, f_), cell in ix.coherence_comp.items():
            c = ix.base.src(f_) if ix.variance == CONTRA else ix.base.tgt(g_)
            fib = ix.fibers[c]
            if any(fib.arrow(a).src != fib.arrow(a).tgt for a in cell.values()):
                found = True
        if found:
            count += 1
    assert count >= 10
