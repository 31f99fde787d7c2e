"""Finite institutions and pi-institutions with their maps and adjunction.

An institution couples a finite signature category with sentence sets,
model categories and satisfaction tables; the defining law is that
satisfaction is stable under signature change.  A pi-institution replaces
models by a closure operator per signature; the defining law is
structurality.  ``derive_pi`` and ``derive_institution`` convert between
the two (the Galois round trip), and the transposes realising the
hom-set bijection of that adjunction are provided explicitly.

Closure operators are stored as intersection-closed families of closed
sets; enumerating all subsets of a large carrier is never required
because structurality (and the map conditions, which share its shape)
is equivalent to preimages of closed sets being closed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fincat import (DEFAULT_GUARD, FinCat, Functor, SetFunctor, codiscrete_cat,
                     enumerate_functors, validate_category, validate_functor,
                     validate_set_functor, _product_guard)
from .report import (InvalidInput, Report, SizeGuardExceeded, structural,
                     violation)

MOR = "ins_morphism"
CO = "ins_comorphism"
PI_MOR = "pi_morphism"
PI_CO = "pi_comorphism"

KINDS = (MOR, CO, PI_MOR, PI_CO)

# direct subset enumeration is used below this many subsets; above it the
# exact closed-family characterisation takes over
SUBSET_ENUM_LIMIT = 4096


def set_id(xs) -> str:
    """Canonical object id for a set of element ids."""
    return "{" + ",".join(sorted(xs)) + "}"


@dataclass(frozen=True, eq=True)
class ClosureOp:
    ground: frozenset
    closed: frozenset   # frozenset of frozensets

    def closure(self, xs) -> frozenset:
        xs = frozenset(xs)
        if not xs <= self.ground:
            raise InvalidInput("closure argument outside ground set")
        out = self.ground
        for c in self.closed:
            if xs <= c:
                out = out & c
        return out

    def is_closed(self, xs) -> bool:
        return frozenset(xs) in self.closed

    def closed_sorted(self) -> list[frozenset]:
        return sorted(self.closed, key=lambda c: (len(c), sorted(c)))


def closure_from_family(ground, sets) -> ClosureOp:
    """Smallest intersection-closed family containing ``sets`` and ground."""
    ground = frozenset(ground)
    family = {ground}
    for s in sets:
        s = frozenset(s)
        family |= {c & s for c in family} | {s}
    return ClosureOp(ground, frozenset(family))


def validate_closure(c: ClosureOp) -> Report:
    items = []
    if c.ground not in c.closed:
        items.append(structural("ground", "ground-not-closed"))
    for x in c.closed:
        if not x <= c.ground:
            items.append(structural(set_id(x), "closed-set-outside-ground"))
    fam = sorted(c.closed, key=sorted)
    for a, b in itertools.combinations(fam, 2):
        if a & b not in c.closed:
            items.append(violation(f"{set_id(a)} & {set_id(b)}",
                                   "family-not-intersection-closed"))
    return Report.from_items(items)


@dataclass(frozen=True, eq=True)
class Institution:
    name: str = field(compare=False)
    sig: FinCat
    sen: SetFunctor
    mod_cats: dict[str, FinCat]
    mod_maps: dict[str, Functor]      # arrow h: S -> S' gives mod(S') -> mod(S)
    sat: dict[str, frozenset]         # per object: frozenset of (model, sentence)

    def models(self, o: str) -> tuple[str, ...]:
        return self.mod_cats[o].objects

    def satisfies(self, o: str, m: str, phi: str) -> bool:
        return (m, phi) in self.sat[o]

    def theory(self, o: str, m: str) -> frozenset:
        """All sentences the model satisfies."""
        return frozenset(phi for phi in self.sen.carrier(o)
                         if (m, phi) in self.sat[o])


@dataclass(frozen=True, eq=True)
class PiInstitution:
    name: str = field(compare=False)
    sig: FinCat
    sen: SetFunctor
    closures: dict[str, ClosureOp]

    def entails(self, o: str, gamma, phi: str) -> bool:
        return phi in self.closures[o].closure(gamma)


@dataclass(frozen=True, eq=True)
class InsMap:
    """An institution or pi-institution (co)morphism.

    alpha maps per signature object; its direction depends on the kind:
    morphisms pull sentences back (alpha: Sen'(Phi S) -> Sen(S)),
    comorphisms push them forward.  beta carries the model components and
    is absent for the pi kinds.
    """
    name: str = field(compare=False)
    kind: str
    phi: Functor
    alpha: dict[str, dict[str, str]]
    beta: dict[str, Functor] | None = None


# --- validators -----------------------------------------------------------


def validate_institution(i: Institution, guard: int = DEFAULT_GUARD) -> Report:
    items = []
    rep = validate_category(i.sig)
    if not rep.ok:
        return rep
    rep = validate_set_functor(i.sen)
    if not rep.ok:
        return rep
    for o in i.sig.objects:
        if o not in i.mod_cats:
            items.append(structural(f"object {o}", "model-category-missing"))
            continue
        sub = validate_category(i.mod_cats[o])
        if not sub.ok:
            items.append(structural(f"object {o}", "model-category-invalid"))
    if items:
        return Report.from_items(items)
    for o in i.sig.objects:
        models, sents = set(i.models(o)), set(i.sen.carrier(o))
        for (m, phi) in i.sat.get(o, frozenset()):
            if m not in models or phi not in sents:
                items.append(structural(f"object {o}", "sat-entry-out-of-range", m, phi))
    for h in i.sig.arrows:
        F = i.mod_maps.get(h.name)
        if F is None:
            items.append(structural(f"arrow {h.name}", "mod-map-missing"))
            continue
        if F.src != i.mod_cats[h.tgt] or F.dst != i.mod_cats[h.src]:
            items.append(structural(f"arrow {h.name}", "mod-map-endpoints"))
            continue
        if not validate_functor(F).ok:
            items.append(structural(f"arrow {h.name}", "mod-map-not-functorial"))
    if items:
        return Report.from_items(items)
    # Mod is a functor Sig^op -> Cat
    for o in i.sig.objects:
        F = i.mod_maps[i.sig.identity[o]]
        if any(F.omap[m] != m for m in i.models(o)):
            items.append(violation(f"object {o}", "mod-identity-not-identity"))
    for f in i.sig.arrows:
        for g in i.sig.arrows:
            if g.src != f.tgt:
                continue
            gf = i.sig.compose(g.name, f.name)
            lhs = i.mod_maps[gf]
            Ff, Fg = i.mod_maps[f.name], i.mod_maps[g.name]
            composed_omap = {m: Ff.omap[Fg.omap[m]] for m in Fg.omap}
            if lhs.omap != composed_omap:
                items.append(violation(f"pair ({g.name}, {f.name})",
                                       "mod-composition-not-preserved", gf))
    if items:
        return Report.from_items(items)
    # the satisfaction condition itself
    for h in i.sig.arrows:
        if i.sig.is_identity(h.name):
            continue
        F = i.mod_maps[h.name]
        for mp in i.models(h.tgt):
            reduct = F.omap[mp]
            for phi in i.sen.carrier(h.src):
                lhs = i.satisfies(h.tgt, mp, i.sen.apply(h.name, phi))
                rhs = i.satisfies(h.src, reduct, phi)
                if lhs != rhs:
                    items.append(violation(f"arrow {h.name}", "satisfaction-condition",
                                           h.name, mp, phi))
    return Report.from_items(items)


def _structurality_items(sen: SetFunctor, closures, location_prefix=""):
    """Violations of Sen(f)[C(G)] <= C'(Sen(f)[G]) for every arrow and G.

    Uses direct subset enumeration when feasible, otherwise the exact
    equivalent condition that preimages of closed sets are closed.
    """
    items = []
    for f in sen.src.arrows:
        if sen.src.is_identity(f.name):
            continue
        c1, c2 = closures[f.src], closures[f.tgt]
        carrier = sen.carrier(f.src)
        if 2 ** len(carrier) <= SUBSET_ENUM_LIMIT:
            for gamma in subsets(carrier):
                img = sen.image(f.name, c1.closure(gamma))
                cod = c2.closure(sen.image(f.name, gamma))
                for phi in sorted(img - cod):
                    items.append(violation(f"{location_prefix}arrow {f.name}",
                                           "structurality", f.name,
                                           set_id(gamma), phi))
        else:
            for c in c2.closed_sorted():
                pre = sen.preimage(f.name, c)
                cl = c1.closure(pre)
                if cl != pre:
                    phi = sorted(cl - pre)[0]
                    items.append(violation(f"{location_prefix}arrow {f.name}",
                                           "structurality", f.name,
                                           set_id(pre), phi))
    return items


def validate_pi(j: PiInstitution, guard: int = DEFAULT_GUARD) -> Report:
    rep = validate_category(j.sig)
    if not rep.ok:
        return rep
    rep = validate_set_functor(j.sen)
    if not rep.ok:
        return rep
    items = []
    for o in j.sig.objects:
        c = j.closures.get(o)
        if c is None:
            items.append(structural(f"object {o}", "closure-missing"))
            continue
        if c.ground != frozenset(j.sen.carrier(o)):
            items.append(structural(f"object {o}", "closure-ground-mismatch"))
            continue
        sub = validate_closure(c)
        for it in sub.items:
            items.append(structural(f"object {o}", f"closure:{it.law}", *it.witnesses))
    if items:
        return Report.from_items(items)
    return Report.from_items(_structurality_items(j.sen, j.closures))


def subsets(xs):
    xs = sorted(xs)
    for r in range(len(xs) + 1):
        yield from (frozenset(c) for c in itertools.combinations(xs, r))


# --- galois machinery -----------------------------------------------------


def galois(i: Institution, sigma: str, side: str, xs) -> frozenset:
    """Polar of a set of sentences (side='sentences') or models (side='models')."""
    xs = frozenset(xs)
    if side == "sentences":
        if not xs <= set(i.sen.carrier(sigma)):
            raise InvalidInput("galois: sentences outside carrier")
        return frozenset(m for m in i.models(sigma)
                         if all(i.satisfies(sigma, m, phi) for phi in xs))
    if side == "models":
        if not xs <= set(i.models(sigma)):
            raise InvalidInput("galois: models outside model class")
        return frozenset(phi for phi in i.sen.carrier(sigma)
                         if all(i.satisfies(sigma, m, phi) for m in xs))
    raise InvalidInput(f"galois: unknown side {side!r}")


def derive_pi(i: Institution) -> PiInstitution:
    """The sentence-and-closure part of an institution (Galois closures)."""
    closures = {}
    for o in i.sig.objects:
        theories = [i.theory(o, m) for m in i.models(o)]
        closures[o] = closure_from_family(i.sen.carrier(o), theories)
    return PiInstitution(i.name, i.sig, i.sen, closures)


def derive_institution(j: PiInstitution) -> Institution:
    """Models are the closed sets (codiscretely), satisfaction is membership."""
    mod_cats = {}
    mod_maps = {}
    sat = {}
    for o in j.sig.objects:
        closed = j.closures[o].closed_sorted()
        ids = [set_id(c) for c in closed]
        mod_cats[o] = codiscrete_cat(ids, name=f"Mod_{j.name}_{o}")
        sat[o] = frozenset((set_id(c), phi) for c in closed for phi in c)
    for h in j.sig.arrows:
        src_cat, tgt_cat = mod_cats[h.tgt], mod_cats[h.src]
        omap = {}
        for c in j.closures[h.tgt].closed_sorted():
            pre = j.sen.preimage(h.name, c)
            if not j.closures[h.src].is_closed(pre):
                raise InvalidInput(
                    f"derive_institution: preimage of {set_id(c)} along "
                    f"{h.name} is not closed (structurality broken)")
            omap[set_id(c)] = set_id(pre)
        amap = {f"<{x}>{y}>": f"<{omap[x]}>{omap[y]}>"
                for x in src_cat.objects for y in src_cat.objects}
        mod_maps[h.name] = Functor(f"mod_{h.name}", src_cat, tgt_cat, omap, amap)
    return Institution(j.name, j.sig, j.sen, mod_cats, mod_maps, sat)


# --- map validation -------------------------------------------------------

def _alpha_frames(kind, phi, src_sen, dst_sen, o):
    """(domain carrier, codomain carrier) of alpha at object o."""
    if kind in (MOR, PI_MOR):
        return dst_sen.carrier(phi.omap[o]), src_sen.carrier(o)
    return src_sen.carrier(o), dst_sen.carrier(phi.omap[o])


def _alpha_natural_items(kind, phi, src_sen, dst_sen, alpha):
    items = []
    for f in src_sen.src.arrows:
        if src_sen.src.is_identity(f.name):
            continue
        pf = phi.amap[f.name]
        if kind in (MOR, PI_MOR):
            dom = dst_sen.carrier(phi.omap[f.src])
            for x in dom:
                lhs = src_sen.apply(f.name, alpha[f.src][x])
                rhs = alpha[f.tgt][dst_sen.apply(pf, x)]
                if lhs != rhs:
                    items.append(violation(f"arrow {f.name}", "alpha-naturality", x))
        else:
            dom = src_sen.carrier(f.src)
            for x in dom:
                lhs = dst_sen.apply(pf, alpha[f.src][x])
                rhs = alpha[f.tgt][src_sen.apply(f.name, x)]
                if lhs != rhs:
                    items.append(violation(f"arrow {f.name}", "alpha-naturality", x))
    return items


def _consequence_items(kind, m, src: PiInstitution, dst: PiInstitution):
    """kind-specific consequence preservation, exact at any carrier size."""
    items = []
    phi = m.phi
    for o in src.sig.objects:
        a = m.alpha[o]
        if kind == PI_MOR:
            cs, ct = dst.closures[phi.omap[o]], src.closures[o]
        else:
            cs, ct = src.closures[o], dst.closures[phi.omap[o]]
        dom = sorted(cs.ground)
        if 2 ** len(dom) <= SUBSET_ENUM_LIMIT:
            for gamma in subsets(dom):
                image = frozenset(a[x] for x in gamma)
                cod = ct.closure(image)
                for x in sorted(cs.closure(gamma)):
                    if a[x] not in cod:
                        items.append(violation(f"object {o}", "consequence-preservation",
                                               set_id(gamma), x))
        else:
            for c in ct.closed_sorted():
                pre = frozenset(x for x in dom if a[x] in c)
                cl = cs.closure(pre)
                if cl != pre:
                    x = sorted(cl - pre)[0]
                    items.append(violation(f"object {o}", "consequence-preservation",
                                           set_id(pre), x))
    return items


def validate_map(m: InsMap, src, dst, guard: int = DEFAULT_GUARD) -> Report:
    if m.kind not in KINDS:
        return Report.from_items([structural("map", "unknown-kind", m.kind)])
    items = []
    if m.phi.src != src.sig or m.phi.dst != dst.sig:
        return Report.from_items([structural("map", "phi-frames")])
    if not validate_functor(m.phi).ok:
        return Report.from_items([structural("map", "phi-not-functorial")])
    pi_kind = m.kind in (PI_MOR, PI_CO)
    if pi_kind and m.beta is not None:
        return Report.from_items([structural("map", "beta-present-for-pi-kind")])
    if not pi_kind and m.beta is None:
        return Report.from_items([structural("map", "beta-missing")])
    for o in src.sig.objects:
        a = m.alpha.get(o)
        dom, cod = _alpha_frames(m.kind, m.phi, src.sen, dst.sen, o)
        if a is None or set(a) != set(dom) or not set(a.values()) <= set(cod):
            items.append(structural(f"object {o}", "alpha-direction-or-frame"))
    if items:
        return Report.from_items(items)
    items.extend(_alpha_natural_items(m.kind, m.phi, src.sen, dst.sen, m.alpha))
    if pi_kind:
        items.extend(_consequence_items(m.kind, m, src, dst))
        return Report.from_items(items)
    # institution kinds: beta structure, naturality, compatibility
    for o in src.sig.objects:
        b = m.beta.get(o)
        if m.kind == MOR:
            want_src, want_dst = src.mod_cats[o], dst.mod_cats[m.phi.omap[o]]
        else:
            want_src, want_dst = dst.mod_cats[m.phi.omap[o]], src.mod_cats[o]
        if b is None or b.src != want_src or b.dst != want_dst:
            items.append(structural(f"object {o}", "beta-frames"))
        elif not validate_functor(b).ok:
            items.append(structural(f"object {o}", "beta-not-functorial"))
    if items:
        return Report.from_items(items)
    for f in src.sig.arrows:
        if src.sig.is_identity(f.name):
            continue
        pf = m.phi.amap[f.name]
        if m.kind == MOR:
            lhs = {x: m.beta[f.src].omap[src.mod_maps[f.name].omap[x]]
                   for x in src.models(f.tgt)}
            rhs = {x: dst.mod_maps[pf].omap[m.beta[f.tgt].omap[x]]
                   for x in src.models(f.tgt)}
        else:
            lhs = {x: m.beta[f.src].omap[dst.mod_maps[pf].omap[x]]
                   for x in dst.models(m.phi.omap[f.tgt])}
            rhs = {x: src.mod_maps[f.name].omap[m.beta[f.tgt].omap[x]]
                   for x in dst.models(m.phi.omap[f.tgt])}
        if lhs != rhs:
            bad = sorted(x for x in lhs if lhs[x] != rhs[x])[0]
            items.append(violation(f"arrow {f.name}", "beta-naturality", bad))
    for o in src.sig.objects:
        po = m.phi.omap[o]
        if m.kind == MOR:
            for mm in src.models(o):
                for phi2 in dst.sen.carrier(po):
                    lhs = src.satisfies(o, mm, m.alpha[o][phi2])
                    rhs = dst.satisfies(po, m.beta[o].omap[mm], phi2)
                    if lhs != rhs:
                        items.append(violation(f"object {o}", "compatibility", mm, phi2))
        else:
            for mp in dst.models(po):
                for phi1 in src.sen.carrier(o):
                    lhs = dst.satisfies(po, mp, m.alpha[o][phi1])
                    rhs = src.satisfies(o, m.beta[o].omap[mp], phi1)
                    if lhs != rhs:
                        items.append(violation(f"object {o}", "compatibility", mp, phi1))
    return Report.from_items(items)


# --- identities, composition, derived maps --------------------------------

def identity_map(x, kind: str) -> InsMap:
    from .fincat import identity_functor
    alpha = {o: {s: s for s in x.sen.carrier(o)} for o in x.sig.objects}
    beta = None
    if kind in (MOR, CO):
        beta = {o: identity_functor(x.mod_cats[o]) for o in x.sig.objects}
    return InsMap(f"id_{x.name}", kind, identity_functor(x.sig), alpha, beta)


def compose_maps(m2: InsMap, m1: InsMap, mid, name: str | None = None) -> InsMap:
    """m2 after m1 (m1: X -> Y, m2: Y -> Z, mid = Y)."""
    from .fincat import compose_functors
    if m1.kind != m2.kind:
        raise InvalidInput("compose_maps: kinds differ")
    kind = m1.kind
    phi = compose_functors(m2.phi, m1.phi)
    alpha = {}
    for o in m1.phi.src.objects:
        if kind in (MOR, PI_MOR):
            a2 = m2.alpha[m1.phi.omap[o]]
            alpha[o] = {x: m1.alpha[o][a2[x]] for x in a2}
        else:
            a1 = m1.alpha[o]
            alpha[o] = {x: m2.alpha[m1.phi.omap[o]][a1[x]] for x in a1}
    beta = None
    if kind in (MOR, CO):
        beta = {}
        for o in m1.phi.src.objects:
            if kind == MOR:
                beta[o] = compose_functors(m2.beta[m1.phi.omap[o]], m1.beta[o])
            else:
                beta[o] = compose_functors(m1.beta[o], m2.beta[m1.phi.omap[o]])
    return InsMap(name or f"{m2.name}.{m1.name}", kind, phi, alpha, beta)


def _preimage_functor(name, src_cat, dst_cat, omap) -> Functor:
    """Functor between codiscrete categories determined by an object map."""
    amap = {f"<{x}>{y}>": f"<{omap[x]}>{omap[y]}>"
            for x in src_cat.objects for y in src_cat.objects}
    return Functor(name, src_cat, dst_cat, omap, amap)


def map_on_derived(m: InsMap, direction: str, src, dst) -> InsMap:
    """Move a map across the derivations.

    direction "F": drop the model components of an institution map.
    direction "G": attach preimage model components to a pi map; the new
    components send a closed set to its alpha-preimage.
    """
    if direction == "F":
        if m.kind == MOR:
            return InsMap(m.name, PI_MOR, m.phi, m.alpha)
        if m.kind == CO:
            return InsMap(m.name, PI_CO, m.phi, m.alpha)
        raise InvalidInput("map_on_derived(F): expected an institution map")
    if direction != "G":
        raise InvalidInput(f"unknown direction {direction!r}")
    if m.kind not in (PI_MOR, PI_CO):
        raise InvalidInput("map_on_derived(G): expected a pi map")
    gsrc, gdst = derive_institution(src), derive_institution(dst)
    beta = {}
    for o in src.sig.objects:
        po = m.phi.omap[o]
        a = m.alpha[o]
        if m.kind == PI_MOR:
            # closed set of src at o  ->  closed set of dst at phi(o)
            omap = {}
            for c in src.closures[o].closed_sorted():
                pre = frozenset(x for x in a if a[x] in c)
                omap[set_id(c)] = set_id(pre)
            beta[o] = _preimage_functor(f"beta_{o}", gsrc.mod_cats[o],
                                        gdst.mod_cats[po], omap)
        else:
            omap = {}
            for c in dst.closures[po].closed_sorted():
                pre = frozenset(x for x in a if a[x] in c)
                omap[set_id(c)] = set_id(pre)
            beta[o] = _preimage_functor(f"beta_{o}", gdst.mod_cats[po],
                                        gsrc.mod_cats[o], omap)
    kind = MOR if m.kind == PI_MOR else CO
    return InsMap(m.name, kind, m.phi, m.alpha, beta)


# --- adjunction transposes (comorphism flavour) ---------------------------

def transpose_to_institution(m: InsMap, j: PiInstitution, i: Institution) -> InsMap:
    """Hom(J, F(I)) -> Hom(G(J), I): attach beta via membership semantics.

    beta sends an I-model to the alpha-preimage of its theory, which is a
    closed set of J, i.e. a model of G(J).
    """
    if m.kind != PI_CO:
        raise InvalidInput("transpose expects a pi comorphism J -> F(I)")
    gj = derive_institution(j)
    beta = {}
    for o in j.sig.objects:
        po = m.phi.omap[o]
        a = m.alpha[o]
        omap = {}
        for mp in i.models(po):
            th = i.theory(po, mp)
            pre = frozenset(x for x in a if a[x] in th)
            if not j.closures[o].is_closed(pre):
                raise InvalidInput("transpose: preimage of a theory is not closed")
            omap[mp] = set_id(pre)
        amap = {ar.name: f"<{omap[ar.src]}>{omap[ar.tgt]}>"
                for ar in i.mod_cats[po].arrows}
        beta[o] = Functor(f"beta_{o}", i.mod_cats[po], gj.mod_cats[o], omap, amap)
    return InsMap(m.name, CO, m.phi, m.alpha, beta)


def transpose_to_pi(m: InsMap) -> InsMap:
    """Hom(G(J), I) -> Hom(J, F(I)): drop the model components."""
    if m.kind != CO:
        raise InvalidInput("transpose expects an institution comorphism")
    return InsMap(m.name, PI_CO, m.phi, m.alpha)


# --- enumeration of maps --------------------------------------------------

def _alpha_candidates(kind, phi, src, dst, guard):
    """All alpha families for a fixed phi, as sorted lists of dicts."""
    per_object = []
    objs = phi.src.objects
    sizes = []
    for o in objs:
        dom, cod = _alpha_frames(kind, phi, src.sen, dst.sen, o)
        if len(dom) > 0 and len(cod) == 0:
            return objs, []
        maps = [dict(zip(dom, vals))
                for vals in itertools.product(sorted(cod), repeat=len(dom))] \
            if dom else [{}]
        sizes.append(len(maps))
        per_object.append(maps)
    _product_guard(sizes, guard)
    return objs, [dict(zip(objs, combo)) for combo in itertools.product(*per_object)]


def enumerate_pi_maps(src: PiInstitution, dst: PiInstitution, kind: str,
                      guard: int = DEFAULT_GUARD) -> list[InsMap]:
    if kind not in (PI_MOR, PI_CO):
        raise InvalidInput("enumerate_pi_maps: pi kinds only")
    out = []
    for phi in enumerate_functors(src.sig, dst.sig, guard):
        _, alphas = _alpha_candidates(kind, phi, src, dst, guard)
        for alpha in alphas:
            m = InsMap(f"m{len(out)}", kind, phi, alpha)
            if validate_map(m, src, dst).ok:
                out.append(m)
    return out


def enumerate_ins_maps(src: Institution, dst: Institution, kind: str,
                       guard: int = DEFAULT_GUARD) -> list[InsMap]:
    """All institution (co)morphisms src -> dst.

    The per-object beta candidates are filtered by the per-object
    compatibility condition before the cross-product, which keeps the
    search tractable without losing completeness (compatibility is a
    pointwise condition).
    """
    if kind not in (MOR, CO):
        raise InvalidInput("enumerate_ins_maps: institution kinds only")
    out = []
    for phi in enumerate_functors(src.sig, dst.sig, guard):
        _, alphas = _alpha_candidates(kind, phi, src, dst, guard)
        for alpha in alphas:
            per_object = []
            ok = True
            for o in src.sig.objects:
                po = phi.omap[o]
                if kind == MOR:
                    cands = enumerate_functors(src.mod_cats[o], dst.mod_cats[po], guard)
                    cands = [b for b in cands
                             if all(src.satisfies(o, mm, alpha[o][p2])
                                    == dst.satisfies(po, b.omap[mm], p2)
                                    for mm in src.models(o)
                                    for p2 in dst.sen.carrier(po))]
                else:
                    cands = enumerate_functors(dst.mod_cats[po], src.mod_cats[o], guard)
                    cands = [b for b in cands
                             if all(dst.satisfies(po, mp, alpha[o][p1])
                                    == src.satisfies(o, b.omap[mp], p1)
                                    for mp in dst.models(po)
                                    for p1 in src.sen.carrier(o))]
                if not cands:
                    ok = False
                    break
                per_object.append(cands)
            if not ok:
                continue
            _product_guard([len(c) for c in per_object], guard)
            for combo in itertools.product(*per_object):
                beta = dict(zip(src.sig.objects, combo))
                m = InsMap(f"m{len(out)}", kind, phi, alpha, beta)
                if validate_map(m, src, dst).ok:
                    out.append(m)
    return out


def maps_equal(a: InsMap, b: InsMap) -> bool:
    """Equality on the mathematical content (names ignored)."""
    if a.kind != b.kind:
        return False
    if (a.phi.omap, a.phi.amap) != (b.phi.omap, b.phi.amap):
        return False
    if a.alpha != b.alpha:
        return False
    if (a.beta is None) != (b.beta is None):
        return False
    if a.beta is not None:
        for o in a.beta:
            if a.beta[o].omap != b.beta[o].omap:
                return False
    return True
