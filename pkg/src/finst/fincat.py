"""Explicit finite categories, functors and natural transformations.

Categories are stored extensionally: every arrow, every identity and the
whole composition table are explicit, so validation and enumeration are
table lookups.  Contravariance is a flag on functors rather than an
opposite-category copy; ``opposite`` materialises the opposite category
when one is genuinely needed.

All values are treated as immutable after construction.  Enumerations are
deterministically ordered (ids sorted lexicographically).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .report import (InvalidInput, Report, SizeGuardExceeded, structural,
                     violation)

DEFAULT_GUARD = 500_000


@dataclass(frozen=True)
class Arrow:
    name: str = field(compare=False)
    src: str
    tgt: str


@dataclass(frozen=True, eq=True)
class FinCat:
    name: str = field(compare=False)
    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    identity: dict[str, str]            # object -> identity arrow
    comp: dict[tuple[str, str], str]    # (g, f) -> g after f

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(sorted(self.objects)))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows, key=lambda a: a.name)))

    def arrow(self, name: str) -> Arrow:
        return self._by_name[name]

    @property
    def _by_name(self) -> dict[str, Arrow]:
        d = self.__dict__.get("_by_name_cache")
        if d is None:
            d = {a.name: a for a in self.arrows}
            self.__dict__["_by_name_cache"] = d
        return d

    def src(self, name: str) -> str:
        return self.arrow(name).src

    def tgt(self, name: str) -> str:
        return self.arrow(name).tgt

    def hom(self, a: str, b: str) -> list[str]:
        return [x.name for x in self.arrows if x.src == a and x.tgt == b]

    def compose(self, g: str, f: str) -> str:
        """g after f; requires tgt(f) == src(g)."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise InvalidInput(f"{self.name}: no composite for ({g}, {f})")

    def is_identity(self, name: str) -> bool:
        a = self.arrow(name)
        return self.identity.get(a.src) == name


def validate_category(c: FinCat) -> Report:
    items = []
    names = set()
    for a in c.arrows:
        if a.name in names:
            items.append(structural(f"arrow {a.name}", "duplicate-arrow-id"))
        names.add(a.name)
        if a.src not in c.objects or a.tgt not in c.objects:
            items.append(structural(f"arrow {a.name}", "unknown-endpoint", a.src, a.tgt))
    if items:
        return Report.from_items(items)
    for o in c.objects:
        i = c.identity.get(o)
        if i is None or i not in names:
            items.append(structural(f"object {o}", "missing-identity"))
        elif not (c.src(i) == o and c.tgt(i) == o):
            items.append(structural(f"object {o}", "identity-endpoints", i))
    for o in c.identity:
        if o not in c.objects:
            items.append(structural(f"object {o}", "identity-for-unknown-object"))
    # comp defined exactly on composable pairs, values well-typed
    composable = {(g.name, f.name) for f in c.arrows for g in c.arrows if f.tgt == g.src}
    for pair in c.comp:
        if pair not in composable:
            items.append(structural(f"comp{pair}", "comp-on-non-composable-pair"))
    for pair in sorted(composable - set(c.comp)):
        items.append(structural(f"comp{pair}", "comp-missing"))
    if items:
        return Report.from_items(items)
    # identity laws are pure table equalities, so they are checked before
    # composite endpoint structure: a composite mis-mapped onto an identity
    # is reported as the law violation it demonstrates
    for f in c.arrows:
        if c.compose(f.name, c.identity[f.src]) != f.name:
            items.append(violation(f"arrow {f.name}", "identity-law-right", f.name))
        if c.compose(c.identity[f.tgt], f.name) != f.name:
            items.append(violation(f"arrow {f.name}", "identity-law-left", f.name))
    broken = set()
    for (g, f), h in sorted(c.comp.items()):
        if h not in names:
            items.append(structural(f"comp({g}, {f})", "unknown-composite", h))
            broken.add((g, f))
        elif not (c.src(h) == c.src(f) and c.tgt(h) == c.tgt(g)):
            if not (c.is_identity(f) or c.is_identity(g)):
                items.append(structural(f"comp({g}, {f})", "composite-endpoints", h))
            broken.add((g, f))
    for f in c.arrows:
        for g in c.arrows:
            if g.src != f.tgt or (g.name, f.name) in broken:
                continue
            gf = c.compose(g.name, f.name)
            for h in c.arrows:
                if h.src != g.tgt or (h.name, g.name) in broken:
                    continue
                if (h.name, gf) in broken or (c.compose(h.name, g.name), f.name) in broken:
                    continue
                if c.compose(h.name, gf) != c.compose(c.compose(h.name, g.name), f.name):
                    items.append(violation("associativity", "associativity",
                                           h.name, g.name, f.name))
    return Report.from_items(items)


@dataclass(frozen=True, eq=True)
class Functor:
    name: str = field(compare=False)
    src: FinCat
    dst: FinCat
    omap: dict[str, str]
    amap: dict[str, str]
    contravariant: bool = False

    def ob(self, o: str) -> str:
        return self.omap[o]

    def ar(self, a: str) -> str:
        return self.amap[a]


def validate_functor(F: Functor) -> Report:
    items = []
    for o in F.src.objects:
        t = F.omap.get(o)
        if t is None or t not in F.dst.objects:
            items.append(structural(f"object {o}", "omap-dangling", str(t)))
    for a in F.src.arrows:
        t = F.amap.get(a.name)
        if t is None or t not in {x.name for x in F.dst.arrows}:
            items.append(structural(f"arrow {a.name}", "amap-dangling", str(t)))
    if items:
        return Report.from_items(items)
    for a in F.src.arrows:
        fa = F.dst.arrow(F.amap[a.name])
        want_src, want_tgt = F.omap[a.src], F.omap[a.tgt]
        if F.contravariant:
            want_src, want_tgt = want_tgt, want_src
        if (fa.src, fa.tgt) != (want_src, want_tgt):
            items.append(violation(f"arrow {a.name}", "endpoint-mismatch", fa.name))
    if items:
        return Report.from_items(items)
    for o in F.src.objects:
        if F.amap[F.src.identity[o]] != F.dst.identity[F.omap[o]]:
            items.append(violation(f"object {o}", "identity-not-preserved"))
    for f in F.src.arrows:
        for g in F.src.arrows:
            if g.src != f.tgt:
                continue
            gf = F.src.compose(g.name, f.name)
            if F.contravariant:
                expect = F.dst.compose(F.amap[f.name], F.amap[g.name])
            else:
                expect = F.dst.compose(F.amap[g.name], F.amap[f.name])
            if F.amap[gf] != expect:
                items.append(violation(f"pair ({g.name}, {f.name})",
                                       "composition-not-preserved", gf))
    return Report.from_items(items)


def identity_functor(c: FinCat) -> Functor:
    return Functor(f"id_{c.name}", c, c,
                   {o: o for o in c.objects},
                   {a.name: a.name for a in c.arrows})


def compose_functors(g: Functor, f: Functor, name: str | None = None) -> Functor:
    """g after f; variance flags xor."""
    if f.dst != g.src:
        raise InvalidInput("compose_functors: middle categories differ")
    return Functor(name or f"{g.name}.{f.name}", f.src, g.dst,
                   {o: g.omap[f.omap[o]] for o in f.src.objects},
                   {a.name: g.amap[f.amap[a.name]] for a in f.src.arrows},
                   contravariant=f.contravariant != g.contravariant)


def constant_functor(src: FinCat, dst: FinCat, obj: str) -> Functor:
    return Functor(f"const_{obj}", src, dst,
                   {o: obj for o in src.objects},
                   {a.name: dst.identity[obj] for a in src.arrows})


@dataclass(frozen=True, eq=True)
class NatTrans:
    name: str = field(compare=False)
    src: Functor
    dst: Functor
    components: dict[str, str]   # object of src.src -> arrow id in src.dst


def validate_nat_trans(t: NatTrans) -> Report:
    items = []
    F, G = t.src, t.dst
    if F.src != G.src or F.dst != G.dst or F.contravariant != G.contravariant:
        return Report.from_items([structural("nat-trans", "functor-frames-differ")])
    cat, target = F.src, F.dst
    names = {a.name for a in target.arrows}
    for o in cat.objects:
        comp = t.components.get(o)
        if comp is None or comp not in names:
            items.append(structural(f"object {o}", "component-dangling", str(comp)))
            continue
        a = target.arrow(comp)
        if (a.src, a.tgt) != (F.omap[o], G.omap[o]):
            items.append(structural(f"object {o}", "component-wrong-hom-set", comp))
    if items:
        return Report.from_items(items)
    for f in cat.arrows:
        if F.contravariant:
            # F(f): F(tgt) -> F(src); square: t_src . F(f) = G(f) . t_tgt
            lhs = target.compose(t.components[f.src], F.amap[f.name])
            rhs = target.compose(G.amap[f.name], t.components[f.tgt])
        else:
            lhs = target.compose(G.amap[f.name], t.components[f.src])
            rhs = target.compose(t.components[f.tgt], F.amap[f.name])
        if lhs != rhs:
            items.append(violation(f"arrow {f.name}", "naturality-square", lhs, rhs))
    return Report.from_items(items)


def identity_nat(F: Functor) -> NatTrans:
    return NatTrans(f"id_{F.name}", F, F,
                    {o: F.dst.identity[F.omap[o]] for o in F.src.objects})


def vcomp(b: NatTrans, a: NatTrans, name: str | None = None) -> NatTrans:
    """b after a (vertical composition)."""
    if a.dst != b.src:
        raise InvalidInput("vcomp: middle functor differs")
    cat = a.src.src
    target = a.src.dst
    return NatTrans(name or f"{b.name}.{a.name}", a.src, b.dst,
                    {o: target.compose(b.components[o], a.components[o])
                     for o in cat.objects})


def whisker_left(F: Functor, t: NatTrans) -> NatTrans:
    """(F t): F.G => F.H for t: G => H with G, H landing in F's source."""
    if t.src.dst != F.src:
        raise InvalidInput("whisker_left: frames differ")
    return NatTrans(f"({F.name} {t.name})",
                    compose_functors(F, t.src), compose_functors(F, t.dst),
                    {o: F.amap[t.components[o]] for o in t.src.src.objects})


def whisker_right(t: NatTrans, F: Functor) -> NatTrans:
    """(t F): G.F => H.F for t: G => H with F landing in t's source category."""
    if F.dst != t.src.src:
        raise InvalidInput("whisker_right: frames differ")
    return NatTrans(f"({t.name} {F.name})",
                    compose_functors(t.src, F), compose_functors(t.dst, F),
                    {o: t.components[F.omap[o]] for o in F.src.objects})


@dataclass(frozen=True, eq=True)
class SetFunctor:
    name: str = field(compare=False)
    src: FinCat
    carriers: dict[str, tuple[str, ...]]
    fmap: dict[str, dict[str, str]]
    contravariant: bool = False

    def carrier(self, o: str) -> tuple[str, ...]:
        return self.carriers[o]

    def apply(self, arrow: str, x: str) -> str:
        return self.fmap[arrow][x]

    def image(self, arrow: str, xs) -> frozenset:
        return frozenset(self.fmap[arrow][x] for x in xs)

    def preimage(self, arrow: str, ys) -> frozenset:
        m = self.fmap[arrow]
        return frozenset(x for x in m if m[x] in ys)


def validate_set_functor(s: SetFunctor) -> Report:
    items = []
    for o in s.src.objects:
        if o not in s.carriers:
            items.append(structural(f"object {o}", "carrier-missing"))
    for a in s.src.arrows:
        m = s.fmap.get(a.name)
        if m is None:
            items.append(structural(f"arrow {a.name}", "fmap-missing"))
            continue
        dom, cod = (a.src, a.tgt) if not s.contravariant else (a.tgt, a.src)
        if set(m) != set(s.carriers.get(dom, ())):
            items.append(structural(f"arrow {a.name}", "fmap-domain"))
        elif not set(m.values()) <= set(s.carriers.get(cod, ())):
            items.append(structural(f"arrow {a.name}", "fmap-codomain"))
    if items:
        return Report.from_items(items)
    for o in s.src.objects:
        i = s.src.identity[o]
        if any(s.fmap[i][x] != x for x in s.carriers[o]):
            items.append(violation(f"object {o}", "identity-not-identity-function", i))
    for f in s.src.arrows:
        for g in s.src.arrows:
            if g.src != f.tgt:
                continue
            gf = s.src.compose(g.name, f.name)
            if s.contravariant:
                dom = s.carriers[g.tgt]
                composed = {x: s.fmap[f.name][s.fmap[g.name][x]] for x in dom}
            else:
                dom = s.carriers[f.src]
                composed = {x: s.fmap[g.name][s.fmap[f.name][x]] for x in dom}
            if s.fmap[gf] != composed:
                items.append(violation(f"pair ({g.name}, {f.name})",
                                       "composite-not-composed-function", gf))
    return Report.from_items(items)


# --- enumeration ---------------------------------------------------------

def _product_guard(sizes, guard):
    total = 1
    for s in sizes:
        total *= max(s, 1)
        if total > guard:
            raise SizeGuardExceeded(f"search space exceeds guard {guard}")
    return total


def enumerate_functors(a: FinCat, b: FinCat, guard: int = DEFAULT_GUARD,
                       contravariant: bool = False) -> list[Functor]:
    """Every functor a -> b, deterministically ordered."""
    non_id = [f for f in a.arrows if not a.is_identity(f.name)]
    _product_guard([len(b.objects)] * len(a.objects)
                   + [len(b.arrows)] * len(non_id), guard)
    out = []
    for objs in itertools.product(b.objects, repeat=len(a.objects)):
        omap = dict(zip(a.objects, objs))
        cand = []
        ok = True
        for f in non_id:
            s, t = omap[f.src], omap[f.tgt]
            if contravariant:
                s, t = t, s
            hom = b.hom(s, t)
            if not hom:
                ok = False
                break
            cand.append(hom)
        if not ok:
            continue
        for choice in itertools.product(*cand):
            amap = {a.identity[o]: b.identity[omap[o]] for o in a.objects}
            amap.update({f.name: c for f, c in zip(non_id, choice)})
            F = Functor(f"F{len(out)}", a, b, omap, amap, contravariant=contravariant)
            if validate_functor(F).ok:
                out.append(F)
    return out


def enumerate_nat_trans(F: Functor, G: Functor,
                        guard: int = DEFAULT_GUARD) -> list[NatTrans]:
    """Every natural transformation F => G, deterministically ordered."""
    if F.src != G.src or F.dst != G.dst or F.contravariant != G.contravariant:
        return []
    cat, target = F.src, F.dst
    homs = [target.hom(F.omap[o], G.omap[o]) for o in cat.objects]
    _product_guard([len(h) for h in homs], guard)
    out = []
    for choice in itertools.product(*homs):
        t = NatTrans(f"t{len(out)}", F, G, dict(zip(cat.objects, choice)))
        if validate_nat_trans(t).ok:
            out.append(t)
    return out


def enumerate_morphisms(kind: str, a, b, guard: int = DEFAULT_GUARD) -> list:
    if kind == "functors":
        return enumerate_functors(a, b, guard)
    if kind == "nat_trans":
        return enumerate_nat_trans(a, b, guard)
    raise InvalidInput(f"unknown enumeration kind {kind!r}")


# --- a small library of category shapes ----------------------------------

def terminal_cat(name: str = "1") -> FinCat:
    return FinCat(name, ("*",), (Arrow("id*", "*", "*"),), {"*": "id*"},
                  {("id*", "id*"): "id*"})


def discrete_cat(objs, name: str | None = None) -> FinCat:
    objs = tuple(objs)
    arrows = tuple(Arrow(f"id_{o}", o, o) for o in objs)
    return FinCat(name or f"disc{len(objs)}", objs, arrows,
                  {o: f"id_{o}" for o in objs},
                  {(f"id_{o}", f"id_{o}"): f"id_{o}" for o in objs})


def arrow_cat(name: str = "2") -> FinCat:
    arrows = (Arrow("id_a", "a", "a"), Arrow("id_b", "b", "b"), Arrow("f", "a", "b"))
    comp = {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
            ("f", "id_a"): "f", ("id_b", "f"): "f"}
    return FinCat(name, ("a", "b"), arrows, {"a": "id_a", "b": "id_b"}, comp)


def codiscrete_cat(objs, name: str | None = None) -> FinCat:
    """One arrow between every ordered pair of objects."""
    objs = tuple(sorted(objs))
    arrows = tuple(Arrow(f"<{x}>{y}>", x, y) for x in objs for y in objs)
    comp = {}
    for x in objs:
        for y in objs:
            for z in objs:
                comp[(f"<{y}>{z}>", f"<{x}>{y}>")] = f"<{x}>{z}>"
    return FinCat(name or f"codisc{len(objs)}", objs, arrows,
                  {o: f"<{o}>{o}>" for o in objs}, comp)


def chain_cat(name: str = "3chain") -> FinCat:
    """Free category on a -> b -> c with the composite arrow included."""
    arrows = (Arrow("id_a", "a", "a"), Arrow("id_b", "b", "b"),
              Arrow("id_c", "c", "c"), Arrow("f", "a", "b"),
              Arrow("g", "b", "c"), Arrow("gf", "a", "c"))
    comp = {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
            ("id_c", "id_c"): "id_c",
            ("f", "id_a"): "f", ("id_b", "f"): "f",
            ("g", "id_b"): "g", ("id_c", "g"): "g",
            ("gf", "id_a"): "gf", ("id_c", "gf"): "gf",
            ("g", "f"): "gf"}
    return FinCat(name, ("a", "b", "c"), arrows,
                  {"a": "id_a", "b": "id_b", "c": "id_c"}, comp)


def span_cat(name: str = "span") -> FinCat:
    """b <- a -> c."""
    arrows = (Arrow("id_a", "a", "a"), Arrow("id_b", "b", "b"),
              Arrow("id_c", "c", "c"), Arrow("l", "a", "b"), Arrow("r", "a", "c"))
    comp = {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
            ("id_c", "id_c"): "id_c",
            ("l", "id_a"): "l", ("id_b", "l"): "l",
            ("r", "id_a"): "r", ("id_c", "r"): "r"}
    return FinCat(name, ("a", "b", "c"), arrows,
                  {"a": "id_a", "b": "id_b", "c": "id_c"}, comp)


def cospan_cat(name: str = "cospan") -> FinCat:
    """b -> a <- c."""
    arrows = (Arrow("id_a", "a", "a"), Arrow("id_b", "b", "b"),
              Arrow("id_c", "c", "c"), Arrow("l", "b", "a"), Arrow("r", "c", "a"))
    comp = {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
            ("id_c", "id_c"): "id_c",
            ("l", "id_b"): "l", ("id_a", "l"): "l",
            ("r", "id_c"): "r", ("id_a", "r"): "r"}
    return FinCat(name, ("a", "b", "c"), arrows,
                  {"a": "id_a", "b": "id_b", "c": "id_c"}, comp)


def opposite(c: FinCat) -> FinCat:
    arrows = tuple(Arrow(a.name, a.tgt, a.src) for a in c.arrows)
    comp = {(f, g): h for (g, f), h in c.comp.items()}
    return FinCat(f"{c.name}^op", c.objects, arrows, dict(c.identity), comp)


SHAPES = {
    "terminal": terminal_cat,
    "discrete2": lambda: discrete_cat(("a", "b")),
    "discrete3": lambda: discrete_cat(("a", "b", "c")),
    "arrow": arrow_cat,
    "codiscrete2": lambda: codiscrete_cat(("a", "b")),
    "chain": chain_cat,
    "span": span_cat,
    "cospan": cospan_cat,
}
