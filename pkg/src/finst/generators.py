"""Seeded random generators for small structures.

Every generator takes an explicit integer seed (default 0 at the CLI) and
is deterministic.  Generated values are valid by construction: closure
families are repaired to structurality, satisfaction tables are completed
along arrows, and indexed categories use either strict transports on
composite-free bases or codiscrete fibers whose coherence cells are the
unique arrows (automatically coherent).
"""

from __future__ import annotations

import random

from .fincat import (FinCat, Functor, SetFunctor, arrow_cat, codiscrete_cat,
                     discrete_cat, span_cat, terminal_cat)
from .groth import CO, CONTRA, IndexedCat
from .instcore import (ClosureOp, Institution, PiInstitution,
                       closure_from_family)

PI_SHAPES = ("terminal", "discrete2", "discrete3", "arrow", "span", "cospan")
INS_SHAPES = ("terminal", "discrete2", "arrow", "span")


def _shape(name: str) -> FinCat:
    from .fincat import SHAPES
    return SHAPES[name]()


def _random_carriers(rng, sig, max_size=4, min_size=0):
    carriers = {}
    for o in sig.objects:
        n = rng.randint(min_size, max_size)
        carriers[o] = tuple(f"{o.lower()}{k}" for k in range(n))
    return carriers


def _random_sen(rng, sig, carriers, injective=False) -> SetFunctor:
    fmap = {}
    for a in sig.arrows:
        if sig.is_identity(a.name):
            fmap[a.name] = {x: x for x in carriers[a.src]}
            continue
        dom, cod = carriers[a.src], carriers[a.tgt]
        if injective and len(dom) <= len(cod):
            img = rng.sample(cod, len(dom))
            fmap[a.name] = dict(zip(dom, img))
        else:
            fmap[a.name] = {x: rng.choice(cod) for x in dom} if cod else {}
    return SetFunctor("Sen", sig, carriers, fmap)


def random_pi_institution(seed: int, max_carrier: int = 4) -> PiInstitution:
    """A valid pi-institution: random closed families repaired to structurality."""
    rng = random.Random(seed)
    sig = _shape(rng.choice(PI_SHAPES))
    carriers = _random_carriers(rng, sig, max_carrier)
    # avoid fmaps into empty carriers
    for o in sig.objects:
        if not carriers[o] and any(a.tgt == o and a.src != o for a in sig.arrows):
            carriers[o] = (f"{o.lower()}0",)
    sen = _random_sen(rng, sig, carriers)
    families = {}
    for o in sig.objects:
        ground = frozenset(carriers[o])
        seeds = [frozenset(x for x in carriers[o] if rng.random() < 0.5)
                 for _ in range(rng.randint(0, 3))]
        families[o] = closure_from_family(ground, seeds).closed
    # repair: preimages of closed sets must be closed, iterated to fixpoint
    changed = True
    while changed:
        changed = False
        for a in sig.arrows:
            if sig.is_identity(a.name):
                continue
            for c in sorted(families[a.tgt], key=sorted):
                pre = sen.preimage(a.name, c)
                if pre not in families[a.src]:
                    families[a.src] = closure_from_family(
                        frozenset(carriers[a.src]),
                        list(families[a.src]) + [pre]).closed
                    changed = True
    closures = {o: ClosureOp(frozenset(carriers[o]), families[o])
                for o in sig.objects}
    return PiInstitution(f"pi{seed}", sig, sen, closures)


def random_institution(seed: int, max_carrier: int = 3,
                       max_models: int = 3) -> Institution:
    """A valid institution: sentence maps injective, satisfaction completed
    along arrows so the compatibility condition holds by construction."""
    rng = random.Random(seed)
    sig = _shape(rng.choice(INS_SHAPES))
    carriers = _random_carriers(rng, sig, max_carrier)
    for a in sig.arrows:
        if not sig.is_identity(a.name) and len(carriers[a.tgt]) < len(carriers[a.src]):
            extra = tuple(f"{a.tgt.lower()}x{k}" for k in
                          range(len(carriers[a.src]) - len(carriers[a.tgt])))
            carriers[a.tgt] = carriers[a.tgt] + extra
    sen = _random_sen(rng, sig, carriers, injective=True)
    mod_cats = {}
    for o in sig.objects:
        names = tuple(f"m_{o.lower()}{k}" for k in range(rng.randint(1, max_models)))
        mod_cats[o] = (codiscrete_cat if rng.random() < 0.3 else discrete_cat)(
            names, name=f"Mod_{o}")
    mod_maps = {}
    for a in sig.arrows:
        src_cat, tgt_cat = mod_cats[a.tgt], mod_cats[a.src]
        src_codisc = len(src_cat.arrows) > len(src_cat.objects)
        tgt_codisc = len(tgt_cat.arrows) > len(tgt_cat.objects)
        if sig.is_identity(a.name):
            omap = {m: m for m in src_cat.objects}
        elif src_codisc and not tgt_codisc:
            const = rng.choice(tgt_cat.objects)
            omap = {m: const for m in src_cat.objects}
        else:
            omap = {m: rng.choice(tgt_cat.objects) for m in src_cat.objects}
        if src_codisc and (tgt_codisc or sig.is_identity(a.name)):
            amap = {ar.name: f"<{omap[ar.src]}>{omap[ar.tgt]}>"
                    for ar in src_cat.arrows}
        else:
            amap = {ar.name: tgt_cat.identity[omap[ar.src]] for ar in src_cat.arrows}
        mod_maps[a.name] = Functor(f"mod_{a.name}", src_cat, tgt_cat, omap, amap)
    # base satisfaction at source objects, then complete along arrows
    sat = {o: set() for o in sig.objects}
    for o in sig.objects:
        for m in mod_cats[o].objects:
            for phi in carriers[o]:
                if rng.random() < 0.5:
                    sat[o].add((m, phi))
    for a in sig.arrows:
        if sig.is_identity(a.name):
            continue
        for mp in mod_cats[a.tgt].objects:
            reduct = mod_maps[a.name].omap[mp]
            for phi in carriers[a.src]:
                img = sen.fmap[a.name][phi]
                cell = (mp, img)
                if (reduct, phi) in sat[a.src]:
                    sat[a.tgt].add(cell)
                else:
                    sat[a.tgt].discard(cell)
    return Institution(f"ins{seed}", sig, sen, mod_cats, mod_maps,
                       {o: frozenset(v) for o, v in sat.items()})


GROTH_STRICT_BASES = ("terminal", "discrete2", "discrete3", "arrow", "span", "cospan")
GROTH_FIBERS = ("terminal", "discrete2", "arrow", "codiscrete2")


def random_indexed_cat(seed: int) -> IndexedCat:
    """Valid IndexedCat; odd seeds build pseudo data over codiscrete fibers
    (all coherence cells are the unique arrows, hence coherent), even seeds
    build strict data over composite-free bases."""
    rng = random.Random(seed)
    variance = CONTRA if rng.random() < 0.5 else CO
    pseudo = seed % 2 == 1
    if pseudo:
        from .fincat import SHAPES
        base = SHAPES[rng.choice(("arrow", "chain", "chain", "chain", "span"))]()
        fibers = {c: codiscrete_cat(tuple(f"{c}f{k}" for k in range(rng.randint(1, 3))),
                                    name=f"fib_{c}")
                  for c in base.objects}
        transports = {}
        for a in base.arrows:
            src, dst = (fibers[a.tgt], fibers[a.src]) if variance == CONTRA \
                else (fibers[a.src], fibers[a.tgt])
            # identity transports may move objects too: codiscrete fibers make
            # any choice coherent once the unique-arrow cells are attached
            omap = {x: rng.choice(dst.objects) for x in src.objects}
            amap = {ar.name: f"<{omap[ar.src]}>{omap[ar.tgt]}>" for ar in src.arrows}
            transports[a.name] = Functor(f"T_{a.name}", src, dst, omap, amap)
        coh_comp = {}
        for f in base.arrows:
            for g in base.arrows:
                if g.src != f.tgt:
                    continue
                gf = base.compose(g.name, f.name)
                if variance == CONTRA:
                    fib = fibers[f.src]
                    dom = fibers[g.tgt]
                    cell = {z: f"<{transports[f.name].omap[transports[g.name].omap[z]]}>"
                               f"{transports[gf].omap[z]}>" for z in dom.objects}
                else:
                    fib = fibers[g.tgt]
                    dom = fibers[f.src]
                    cell = {z: f"<{transports[g.name].omap[transports[f.name].omap[z]]}>"
                               f"{transports[gf].omap[z]}>" for z in dom.objects}
                coh_comp[(g.name, f.name)] = cell
        coh_id = {c: {x: f"<{x}>{transports[base.identity[c]].omap[x]}>"
                      for x in fibers[c].objects}
                  for c in base.objects}
        return IndexedCat(f"ix{seed}", base, fibers, transports, variance,
                          coh_comp, coh_id)
    from .fincat import SHAPES
    base = SHAPES[rng.choice(GROTH_STRICT_BASES)]()
    fibers = {c: SHAPES[rng.choice(GROTH_FIBERS)]() for c in base.objects}
    fibers = {c: FinCat(f"fib_{c}", fib.objects, fib.arrows, fib.identity, fib.comp)
              for c, fib in fibers.items()}
    transports = {}
    for a in base.arrows:
        src, dst = (fibers[a.tgt], fibers[a.src]) if variance == CONTRA \
            else (fibers[a.src], fibers[a.tgt])
        if base.is_identity(a.name):
            transports[a.name] = Functor(f"T_{a.name}", src, dst,
                                         {x: x for x in src.objects},
                                         {x.name: x.name for x in src.arrows})
        else:
            from .fincat import constant_functor, enumerate_functors
            cands = enumerate_functors(src, dst, guard=10_000)
            transports[a.name] = rng.choice(cands)
    return IndexedCat(f"ix{seed}", base, fibers, transports, variance)
