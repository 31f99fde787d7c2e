"""The Grothendieck construction on finite category-valued data.

Supports both variances.  Transports are strict by default (composites
and identities preserved on the nose); explicit coherence cells may be
supplied instead and are used verbatim in the composite formulas.  Only
componentwise-invertible cells are accepted; pentagon-style coherence is
not validated because no supported instance needs it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fincat import (Arrow, FinCat, Functor, NatTrans, compose_functors,
                     identity_functor, validate_category, validate_functor)
from .report import InvalidInput, Report, structural, violation

CONTRA = "contravariant"
CO = "covariant"


@dataclass(frozen=True, eq=True)
class IndexedCat:
    """A finite pseudofunctor presentation: base, fibers, transports, cells.

    For contravariant data an arrow f: c -> d transports fiber(d) -> fiber(c);
    covariant data transports fiber(c) -> fiber(d).  coherence_comp[(g, f)]
    gives the cell F(f).F(g) => F(g.f) (contravariant) resp.
    F(g).F(f) => F(g.f) (covariant) as a component map fiber-object -> arrow;
    coherence_id[c] gives 1 => F(id_c).  Empty dicts mean strict.
    """
    name: str = field(compare=False)
    base: FinCat
    fibers: dict[str, FinCat]
    transports: dict[str, Functor]
    variance: str = CONTRA
    coherence_comp: dict[tuple[str, str], dict[str, str]] = field(default_factory=dict)
    coherence_id: dict[str, dict[str, str]] = field(default_factory=dict)

    def fiber(self, c: str) -> FinCat:
        return self.fibers[c]

    def transport(self, f: str) -> Functor:
        return self.transports[f]

    def id_cell(self, c: str, x: str) -> str:
        """Component x -> F(id_c)(x) of the unit cell at c."""
        cell = self.coherence_id.get(c)
        if cell is None:
            return self.fibers[c].identity[x]
        return cell[x]

    def comp_cell(self, g: str, f: str, z: str) -> str:
        """Component at z of F(f)F(g) => F(g f) (contra) / F(g)F(f) => F(g f) (co)."""
        cell = self.coherence_comp.get((g, f))
        if cell is not None:
            return cell[z]
        if self.variance == CONTRA:
            tgt = self.transports[f].omap[self.transports[g].omap[z]]
            return self.fibers[self.base.src(f)].identity[tgt]
        tgt = self.transports[g].omap[self.transports[f].omap[z]]
        return self.fibers[self.base.tgt(g)].identity[tgt]


def validate_indexed_cat(ix: IndexedCat) -> Report:
    items = []
    rep = validate_category(ix.base)
    if not rep.ok:
        return rep
    for c in ix.base.objects:
        if c not in ix.fibers:
            items.append(structural(f"object {c}", "fiber-missing"))
        elif not validate_category(ix.fibers[c]).ok:
            items.append(structural(f"object {c}", "fiber-invalid"))
    if items:
        return Report.from_items(items)
    for f in ix.base.arrows:
        T = ix.transports.get(f.name)
        if ix.variance == CONTRA:
            want = (ix.fibers[f.tgt], ix.fibers[f.src])
        else:
            want = (ix.fibers[f.src], ix.fibers[f.tgt])
        if T is None or (T.src, T.dst) != want:
            items.append(structural(f"arrow {f.name}", "transport-frames"))
        elif not validate_functor(T).ok:
            items.append(structural(f"arrow {f.name}", "transport-not-functorial"))
    if items:
        return Report.from_items(items)
    # coherence cells: invertible components in the right hom-sets
    for c, cell in sorted(ix.coherence_id.items()):
        fib = ix.fibers[c]
        T = ix.transports[ix.base.identity[c]]
        for x in fib.objects:
            a = cell.get(x)
            if a is None or a not in {ar.name for ar in fib.arrows}:
                items.append(structural(f"id-cell {c}", "cell-dangling", x))
                continue
            ar = fib.arrow(a)
            if (ar.src, ar.tgt) != (x, T.omap[x]):
                items.append(structural(f"id-cell {c}", "cell-frames", x))
            elif not _invertible(fib, a):
                items.append(violation(f"id-cell {c}", "cell-not-iso", x))
    for (g, f), cell in sorted(ix.coherence_comp.items()):
        if (ix.base.tgt(f) != ix.base.src(g)):
            items.append(structural(f"comp-cell ({g}, {f})", "not-composable"))
            continue
        gf = ix.base.compose(g, f)
        if ix.variance == CONTRA:
            fib = ix.fibers[ix.base.src(f)]
            dom_obj = ix.base.tgt(g)
            first, second = ix.transports[g], ix.transports[f]
        else:
            fib = ix.fibers[ix.base.tgt(g)]
            dom_obj = ix.base.src(f)
            first, second = ix.transports[f], ix.transports[g]
        for z in ix.fibers[dom_obj].objects:
            a = cell.get(z)
            if a is None or a not in {ar.name for ar in fib.arrows}:
                items.append(structural(f"comp-cell ({g}, {f})", "cell-dangling", z))
                continue
            ar = fib.arrow(a)
            want = (second.omap[first.omap[z]], ix.transports[gf].omap[z])
            if (ar.src, ar.tgt) != want:
                items.append(structural(f"comp-cell ({g}, {f})", "cell-frames", z))
            elif not _invertible(fib, a):
                items.append(violation(f"comp-cell ({g}, {f})", "cell-not-iso", z))
    if items:
        return Report.from_items(items)
    # strict laws where no cell was supplied
    for c in ix.base.objects:
        if c in ix.coherence_id:
            continue
        T = ix.transports[ix.base.identity[c]]
        if any(T.omap[x] != x for x in ix.fibers[c].objects):
            items.append(violation(f"object {c}", "strict-identity-broken"))
    for f in ix.base.arrows:
        for g in ix.base.arrows:
            if g.src != f.tgt or (g.name, f.name) in ix.coherence_comp:
                continue
            gf = ix.base.compose(g.name, f.name)
            if ix.variance == CONTRA:
                comp = compose_functors(ix.transports[f.name], ix.transports[g.name])
            else:
                comp = compose_functors(ix.transports[g.name], ix.transports[f.name])
            if comp.omap != ix.transports[gf].omap or comp.amap != ix.transports[gf].amap:
                items.append(violation(f"pair ({g.name}, {f.name})",
                                       "strict-composition-broken"))
    return Report.from_items(items)


def _invertible(cat: FinCat, a: str) -> bool:
    ar = cat.arrow(a)
    for b in cat.hom(ar.tgt, ar.src):
        if cat.compose(b, a) == cat.identity[ar.src] and \
                cat.compose(a, b) == cat.identity[ar.tgt]:
            return True
    return False


def pair_obj(c: str, x: str) -> str:
    return f"({c},{x})"


def pair_arrow(c, x, f, phi, d, y) -> str:
    return f"({c},{x})-({f},{phi})->({d},{y})"


@dataclass(frozen=True, eq=True)
class GrothCat:
    total: FinCat
    projection: Functor
    objects: dict[str, tuple[str, str]]                   # id -> (c, x)
    arrows: dict[str, tuple[str, str, str, str, str, str]]  # id -> (c,x,f,phi,d,y)


def groth(ix: IndexedCat) -> GrothCat:
    """Total category of pairs; arrows per the variance-appropriate formula."""
    objs = {}
    for c in ix.base.objects:
        for x in ix.fiber(c).objects:
            objs[pair_obj(c, x)] = (c, x)
    arrows = {}
    arrow_list = []
    for f in ix.base.arrows:
        c, d = f.src, f.tgt
        T = ix.transport(f.name)
        for x in ix.fiber(c).objects:
            for y in ix.fiber(d).objects:
                if ix.variance == CONTRA:
                    # phi: x -> F(f)(y) in fiber(c)
                    cands = ix.fiber(c).hom(x, T.omap[y])
                else:
                    # phi: F(f)(x) -> y in fiber(d)
                    cands = ix.fiber(d).hom(T.omap[x], y)
                for phi in cands:
                    aid = pair_arrow(c, x, f.name, phi, d, y)
                    arrows[aid] = (c, x, f.name, phi, d, y)
                    arrow_list.append(Arrow(aid, pair_obj(c, x), pair_obj(d, y)))
    identity = {}
    for oid, (c, x) in objs.items():
        f0 = ix.base.identity[c]
        if ix.variance == CONTRA:
            phi0 = ix.id_cell(c, x)            # x -> F(id_c)(x)
        else:
            phi0 = _inverse_arrow(ix.fiber(c), ix.id_cell(c, x))  # F(id_c)(x) -> x
        identity[oid] = pair_arrow(c, x, f0, phi0, c, x)
        if identity[oid] not in arrows:
            raise InvalidInput(f"groth: identity arrow {identity[oid]} not "
                               "generated (unit cell outside hom-set)")
    comp = {}
    for a2, (c2, x2, f2, phi2, d2, y2) in arrows.items():
        for a1, (c1, x1, f1, phi1, d1, y1) in arrows.items():
            if (d1, y1) != (c2, x2):
                continue
            f21 = ix.base.compose(f2, f1)
            if ix.variance == CONTRA:
                # x1 --phi1--> F(f1)(x2) --F(f1)(phi2)--> F(f1)F(f2)(y2)
                #    --cell--> F(f2 f1)(y2)
                fib = ix.fiber(c1)
                step = fib.compose(ix.transport(f1).amap[phi2], phi1)
                total_phi = fib.compose(ix.comp_cell(f2, f1, y2), step)
            else:
                # F(f2 f1)(x1) --cell^-1--> F(f2)F(f1)(x1) --F(f2)(phi1)-->
                #   F(f2)(y1) --phi2--> y2
                fib = ix.fiber(d2)
                cell = ix.comp_cell(f2, f1, x1)
                inv = _inverse_arrow(fib, cell)
                step = fib.compose(ix.transport(f2).amap[phi1], inv)
                total_phi = fib.compose(phi2, step)
            comp[(a2, a1)] = pair_arrow(c1, x1, f21, total_phi, d2, y2)
    total = FinCat(f"G({ix.name})", tuple(objs), tuple(arrow_list), identity, comp)
    proj = Functor(f"proj_{ix.name}", total, ix.base,
                   {oid: c for oid, (c, x) in objs.items()},
                   {aid: data[2] for aid, data in arrows.items()})
    return GrothCat(total, proj, objs, arrows)


def _inverse_arrow(cat: FinCat, a: str) -> str:
    ar = cat.arrow(a)
    for b in cat.hom(ar.tgt, ar.src):
        if cat.compose(b, a) == cat.identity[ar.src] and \
                cat.compose(a, b) == cat.identity[ar.tgt]:
            return b
    raise InvalidInput(f"non-invertible coherence cell {a}")


@dataclass(frozen=True, eq=True)
class IndexedMap:
    """Pseudonatural data between two IndexedCats over the same base.

    components[c] is a functor fiber_src(c) -> fiber_dst(c); cells[f] holds
    the per-fiber-object components of the square filler for base arrow f
    (identity cells when omitted = strict).
    """
    name: str = field(compare=False)
    src: IndexedCat
    dst: IndexedCat
    components: dict[str, Functor]
    cells: dict[str, dict[str, str]] = field(default_factory=dict)

    def cell(self, f: str, y: str) -> str | None:
        c = self.cells.get(f)
        return None if c is None else c[y]


def groth_map(eta: IndexedMap, total_src: GrothCat | None = None,
              total_dst: GrothCat | None = None) -> Functor:
    """The induced functor between the total categories."""
    ix, iy = eta.src, eta.dst
    if ix.base != iy.base or ix.variance != iy.variance:
        raise InvalidInput("groth_map: bases or variances differ")
    gs = total_src or groth(ix)
    gd = total_dst or groth(iy)
    omap = {}
    for oid, (c, x) in gs.objects.items():
        omap[oid] = pair_obj(c, eta.components[c].omap[x])
    amap = {}
    for aid, (c, x, f, phi, d, y) in gs.arrows.items():
        if ix.variance == CONTRA:
            # eta_c(x) --eta_c(phi)--> eta_c(F f y) --cell--> G f (eta_d y)
            fib = iy.fiber(c)
            part = eta.components[c].amap[phi]
            cell = eta.cell(f, y)
            if cell is None:
                tgt = iy.transport(f).omap[eta.components[d].omap[y]]
                expect = eta.components[c].omap[ix.transport(f).omap[y]]
                if expect != tgt:
                    raise InvalidInput("groth_map: strict square fails, cell needed")
                cell = fib.identity[tgt]
            total_phi = fib.compose(cell, part)
            amap[aid] = pair_arrow(c, eta.components[c].omap[x], f, total_phi,
                                   d, eta.components[d].omap[y])
        else:
            # G f (eta_c x) --cell^-1--> eta_d(F f x) --eta_d(phi)--> eta_d(y)
            fib = iy.fiber(d)
            cell = eta.cell(f, x)
            if cell is None:
                tgt = iy.transport(f).omap[eta.components[c].omap[x]]
                expect = eta.components[d].omap[ix.transport(f).omap[x]]
                if expect != tgt:
                    raise InvalidInput("groth_map: strict square fails, cell needed")
                inv = fib.identity[tgt]
            else:
                inv = _inverse_arrow(fib, cell)
            part = eta.components[d].amap[phi]
            total_phi = fib.compose(part, inv)
            amap[aid] = pair_arrow(c, eta.components[c].omap[x], f, total_phi,
                                   d, eta.components[d].omap[y])
    return Functor(f"{eta.name}#", gs.total, gd.total, omap, amap)


@dataclass(frozen=True, eq=True)
class IndexedTwoCell:
    """Modification data: one fiber-level natural transformation per base object."""
    name: str = field(compare=False)
    src: IndexedMap
    dst: IndexedMap
    components: dict[str, NatTrans]


def groth_2cell(mu: IndexedTwoCell, total_src: GrothCat | None = None,
                total_dst: GrothCat | None = None) -> NatTrans:
    eta, chi = mu.src, mu.dst
    if eta.src != chi.src or eta.dst != chi.dst:
        raise InvalidInput("groth_2cell: frames differ")
    iy = eta.dst
    gs = total_src or groth(eta.src)
    gd = total_dst or groth(iy)
    F = groth_map(eta, gs, gd)
    G = groth_map(chi, gs, gd)
    comps = {}
    for oid, (c, x) in gs.objects.items():
        fib = iy.fiber(c)
        mc = mu.components[c].components[x]
        if iy.variance == CONTRA:
            # (mu_c)_x then the unit cell of the target at chi_c(x)
            tgt_obj = chi.components[c].omap[x]
            phi = fib.compose(iy.id_cell(c, tgt_obj), mc)
        else:
            src_obj = eta.components[c].omap[x]
            inv = _inverse_arrow(fib, iy.id_cell(c, src_obj))
            phi = fib.compose(mc, inv)
        comps[oid] = pair_arrow(c, eta.components[c].omap[x],
                                iy.base.identity[c], phi,
                                c, chi.components[c].omap[x])
    return NatTrans(f"{mu.name}#", F, G, comps)
