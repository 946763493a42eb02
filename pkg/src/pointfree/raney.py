"""Raney extensions as a frame plus a class of filters, and everything computed from them.

A Raney extension (L, C) is identified with the class C* of filters of L that
represent elements of C.  On finite frames classes are sets of filter extents and
every check is exhaustive.  On the cofinite frame a class is a set of filter
shape kinds (see ``filters.Kind``); membership is exact, and checks that quantify
over all filters run over a finite filter inventory and report
``inventory-verified`` instead of ``pass``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

from ._bits import bits, full, mask_of, popcount
from .errors import InvalidStructure, SizeCapExceeded, UndecidableMembership, UnsupportedRepresentation
from .filters import (
    GENERIC, KINDS_CP, KINDS_E, KINDS_ICP, KINDS_ISO, KINDS_R, KINDS_SE, KINDS_SO, WHOLE,
    Arrow, FilterRepr, Kind, Principal, PrimeComplement, Shape, Tri, all_filters, filter_extent,
    filter_from_json, filter_to_json, intersection_closure, kinds_closure_of, kinds_intersection_closure,
    mask_heyting, mask_is_completely_prime, mask_is_meet_closed, mask_is_regular, mask_is_scott_open,
    shape_heyting, shape_leq, shape_meet, shape_of, shape_pseudocomplement, shape_to_repr, show_filter,
)
from .frames import CofiniteFrame, FiniteFrame, FrameHandle, NatSet, frame_from_json
from .order import FiniteLattice

NAMED = ("E", "SE", "R", "CP", "SO", "ICP", "ISO")

# Why each named class is (or is not) a valid extension class.
CLASS_JUSTIFICATION = {
    "E": "exact filters always form the least extension class",
    "SE": "strongly exact filters always form the greatest extension class",
    "R": "regular filters form an extension class exactly when every principal filter is regular (subfit)",
    "ICP": "intersections of completely prime filters form an extension class exactly on spatial frames",
    "ISO": "intersections of Scott-open filters form an extension class exactly on pre-spatial frames",
    "CP": "completely prime filters alone are not intersection-closed",
    "SO": "Scott-open filters alone are not intersection-closed",
}

KINDS_BY_NAME = {
    "E": KINDS_E, "SE": KINDS_SE, "R": KINDS_R, "CP": KINDS_CP,
    "SO": KINDS_SO, "ICP": KINDS_ICP, "ISO": KINDS_ISO,
}


# Verdicts.


@dataclass(frozen=True)
class Check:
    """One verified statement.  ``status`` is pass, fail, inventory-verified or unknown."""

    law: str
    status: str
    witness: str | None = None
    detail: str | None = None

    @property
    def holds(self) -> Tri:
        if self.status in ("pass", "inventory-verified"):
            return Tri.TRUE
        return Tri.FALSE if self.status == "fail" else Tri.UNKNOWN

    def __bool__(self) -> bool:
        return self.holds is Tri.TRUE

    def to_json(self) -> dict:
        out = {"law": self.law, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def _verdict(law: str, ok: bool, exhaustive: bool, witness: str | None = None) -> Check:
    if not ok:
        return Check(law, "fail", witness)
    return Check(law, "pass" if exhaustive else "inventory-verified")


# Filter classes.


@dataclass(frozen=True)
class Explicit:
    """A finite list of filters (finite frames only)."""

    filters: tuple

    def __init__(self, filters: Iterable = ()):
        object.__setattr__(self, "filters", tuple(filters))

    @classmethod
    def from_masks(cls, frame: FiniteFrame, masks: Iterable[int]) -> "Explicit":
        lat = frame.lattice
        return cls(Principal(lat.meet_mask(m)) for m in sorted(set(masks), key=lambda m: (popcount(m), m)))


@dataclass(frozen=True)
class Named:
    name: str

    def __post_init__(self):
        if self.name not in NAMED:
            raise InvalidStructure(f"unknown filter class {self.name!r}")


FilterClass = Union[Explicit, Named]


@dataclass(frozen=True)
class RaneyExt:
    frame: FrameHandle
    cstar: FilterClass

    def to_json(self) -> dict:
        if isinstance(self.cstar, Named):
            cstar = {"named": self.cstar.name}
        else:
            cstar = {"explicit": [filter_to_json(self.frame, F) for F in self.cstar.filters]}
        return {"frame": self.frame.to_json(), "cstar": cstar}

    @staticmethod
    def from_json(data: dict) -> "RaneyExt":
        frame = frame_from_json(data["frame"])
        c = data["cstar"]
        if "named" in c:
            return RaneyExt(frame, Named(c["named"]))
        return RaneyExt(frame, Explicit(filter_from_json(frame, F) for F in c["explicit"]))


# Views: a class materialised over a frame.


@dataclass(frozen=True)
class FiniteView:
    """A class of filters of a finite frame, as a set of extents."""

    lattice: FiniteLattice
    masks: frozenset

    def contains(self, F: int) -> bool:
        return F in self.masks

    def items(self) -> list[int]:
        return sorted(self.masks, key=lambda m: (popcount(m), m))

    def closure(self, F: int) -> int:
        """Least member containing F (intersection of all members above it)."""
        acc = full(self.lattice.n)
        for G in self.masks:
            if F & ~G == 0:
                acc &= G
        return acc

    def star(self, other: "FiniteView") -> "FiniteView":
        return FiniteView(self.lattice, frozenset(self.closure(F) for F in other.masks))

    def intersections(self) -> "FiniteView":
        return FiniteView(self.lattice, frozenset(intersection_closure(full(self.lattice.n), self.masks)))

    def union(self, other: "FiniteView") -> "FiniteView":
        return FiniteView(self.lattice, self.masks | other.masks)

    def meet(self, other: "FiniteView") -> "FiniteView":
        return FiniteView(self.lattice, self.masks & other.masks)


@dataclass(frozen=True)
class KindView:
    """A class of filters of the cofinite frame, as the set of shape kinds it contains."""

    kinds: frozenset

    def contains(self, F: Shape) -> bool:
        return F.kind in self.kinds

    def closure(self, F: Shape) -> Shape:
        return kinds_closure_of(F, self.kinds)

    def star(self, other: "KindView") -> "KindView":
        return KindView(frozenset(self.closure(REPRESENTATIVE[k]).kind for k in other.kinds))

    def intersections(self) -> "KindView":
        return KindView(kinds_intersection_closure(self.kinds))

    def union(self, other: "KindView") -> "KindView":
        return KindView(self.kinds | other.kinds)

    def meet(self, other: "KindView") -> "KindView":
        return KindView(self.kinds & other.kinds)


REPRESENTATIVE = {
    Kind.WHOLE: WHOLE,
    Kind.GENERIC: GENERIC,
    Kind.POINT: Shape(NatSet.finite({0})),
    Kind.FINITE: Shape(NatSet.finite({0, 1})),
    Kind.COFINITE: Shape(NatSet.co({0})),
}

View = Union[FiniteView, KindView]


@lru_cache(maxsize=None)
def _finite_named(lattice: FiniteLattice, name: str) -> frozenset:
    filters = all_filters(lattice)
    pred = {
        "E": mask_is_meet_closed,
        "SE": mask_is_meet_closed,
        "R": mask_is_regular,
        "CP": mask_is_completely_prime,
        "SO": mask_is_scott_open,
        "ICP": mask_is_completely_prime,
        "ISO": mask_is_scott_open,
    }[name]
    chosen = [F for F in filters if pred(lattice, F)]
    if name in ("ICP", "ISO"):
        return frozenset(intersection_closure(full(lattice.n), chosen))
    return frozenset(chosen)


def class_view(frame: FrameHandle, cls: FilterClass) -> View:
    if isinstance(frame, FiniteFrame):
        if isinstance(cls, Named):
            return FiniteView(frame.lattice, _finite_named(frame.lattice, cls.name))
        return FiniteView(frame.lattice, frozenset(filter_extent(frame, F) for F in cls.filters))
    if isinstance(frame, CofiniteFrame):
        if isinstance(cls, Named):
            return KindView(KINDS_BY_NAME[cls.name])
        raise UnsupportedRepresentation("explicit filter classes are only supported on finite frames")
    raise UnsupportedRepresentation(f"no class semantics for {frame!r}")


def universe(frame: FrameHandle) -> list:
    """Every filter (finite frames) or the filter inventory (cofinite frame)."""
    if isinstance(frame, FiniteFrame):
        return all_filters(frame.lattice)
    return list(filter_inventory(frame))


@lru_cache(maxsize=None)
def filter_inventory(frame: CofiniteFrame) -> tuple:
    """Principal filters of sample elements, prime complements in the window, arrows
    between sample elements, and pairwise intersections of those, as shapes."""
    elements = frame.sample_elements()
    base = {shape_of(frame, Principal(a)) for a in elements}
    base |= {shape_of(frame, PrimeComplement(p)) for p in frame.enumerate_primes().prefix}
    base |= {shape_of(frame, Arrow(a, b)) for a in elements for b in elements}
    out = set(base)
    for F, G in combinations(sorted(base), 2):
        out.add(shape_meet(F, G))
    return tuple(sorted(out))


def _exhaustive(frame: FrameHandle) -> bool:
    return isinstance(frame, FiniteFrame)


def _show(frame: FrameHandle, F) -> str:
    if isinstance(F, Shape):
        return show_filter(frame, shape_to_repr(F))
    return show_filter(frame, Principal(frame.lattice.meet_mask(F)))


def item_to_repr(frame: FrameHandle, F) -> FilterRepr:
    if isinstance(F, Shape):
        return shape_to_repr(F)
    return Principal(frame.lattice.meet_mask(F))


def _principal_item(frame: FrameHandle, a):
    if isinstance(frame, FiniteFrame):
        return frame.lattice.up[a]
    return shape_of(frame, Principal(a))


def _heyting_item(frame: FrameHandle, G, F):
    if isinstance(frame, FiniteFrame):
        return mask_heyting(frame.lattice, G, F)
    return shape_heyting(G, F)


def _meet_item(frame: FrameHandle, F, G):
    return F & G if isinstance(frame, FiniteFrame) else shape_meet(F, G)


def _is_regular_item(frame: FrameHandle, F) -> bool:
    if isinstance(frame, FiniteFrame):
        return mask_is_regular(frame.lattice, F)
    return shape_pseudocomplement(shape_pseudocomplement(F)) == F


def _is_se_item(frame: FrameHandle, F) -> bool:
    if isinstance(frame, FiniteFrame):
        return mask_is_meet_closed(frame.lattice, F)
    return F.kind in KINDS_SE


# Validation.


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple
    justification: str | None = None

    @property
    def ok(self) -> bool:
        return all(c.holds is Tri.TRUE for c in self.checks)

    def __getitem__(self, law: str) -> Check:
        for c in self.checks:
            if c.law == law:
                return c
        raise KeyError(law)

    def to_json(self) -> dict:
        out = {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}
        if self.justification:
            out["justification"] = self.justification
        return out


def validate_raney(frame: FrameHandle, cstar: FilterClass) -> ValidationReport:
    """The three conditions: principal filters included, a sublocale of the filter
    frame (closed under intersections and under G → F for every filter G), and
    every member strongly exact."""
    view = class_view(frame, cstar)
    exh = _exhaustive(frame)
    U = universe(frame)
    members = [F for F in U if view.contains(F)]
    checks = []

    missing = next((a for a in frame.sample_elements() if not view.contains(_principal_item(frame, a))), None)
    checks.append(_verdict(
        "contains-principal", missing is None, exh,
        None if missing is None else f"↑{frame.show(missing)} is missing",
    ))

    witness = None
    top_item = full(frame.lattice.n) if exh else WHOLE
    if not view.contains(top_item):
        witness = "the whole frame (empty intersection) is missing"
    if isinstance(view, KindView) and witness is None and view.intersections().kinds != view.kinds:
        extra = sorted(k.value for k in view.intersections().kinds - view.kinds)
        witness = f"intersections reach kinds {extra}"
    if witness is None:
        for F, G in combinations(members, 2):
            if not view.contains(_meet_item(frame, F, G)):
                witness = f"{_show(frame, F)} ∩ {_show(frame, G)} is missing"
                break
    if witness is None:
        for G in U:
            for F in members:
                H = _heyting_item(frame, G, F)
                if not view.contains(H):
                    witness = f"{_show(frame, G)} → {_show(frame, F)} = {_show(frame, H)} is missing"
                    break
            if witness:
                break
    checks.append(_verdict("sublocale-of-filters", witness is None, exh, witness))

    bad = next((F for F in members if not _is_se_item(frame, F)), None)
    checks.append(_verdict(
        "strongly-exact-members", bad is None, exh,
        None if bad is None else f"{_show(frame, bad)} is not strongly exact",
    ))
    just = CLASS_JUSTIFICATION.get(cstar.name) if isinstance(cstar, Named) else None
    return ValidationReport(tuple(checks), just)


# Density and compactness.


def _as_view(RE: RaneyExt, cls) -> View:
    if isinstance(cls, (FiniteView, KindView)):
        return cls
    return class_view(RE.frame, cls)


def is_compact(RE: RaneyExt, cls) -> Check:
    """𝓕-compact iff every 𝓕-filter belongs to C*."""
    C = class_view(RE.frame, RE.cstar)
    Fv = _as_view(RE, cls)
    for F in universe(RE.frame):
        if Fv.contains(F) and not C.contains(F):
            return Check("compact: class ⊆ C*", "fail", f"{_show(RE.frame, F)} is not in C*")
    return _verdict("compact: class ⊆ C*", True, _exhaustive(RE.frame))


def is_dense(RE: RaneyExt, cls) -> Check:
    """𝓕-dense iff every member of C* is an intersection of C*-closures of 𝓕-filters."""
    C = class_view(RE.frame, RE.cstar)
    Fv = _as_view(RE, cls)
    target = C.star(Fv).intersections()
    for F in universe(RE.frame):
        if C.contains(F) and not target.contains(F):
            return Check("dense: C* ⊆ I(class*)", "fail", f"{_show(RE.frame, F)} is not an intersection of closures")
    return _verdict("dense: C* ⊆ I(class*)", True, _exhaustive(RE.frame))


def adjunction_fixpoints(RE: RaneyExt) -> Check:
    """The closure into C* is inflationary and idempotent, and its fixpoints are exactly C*."""
    C = class_view(RE.frame, RE.cstar)
    for F in universe(RE.frame):
        c = C.closure(F)
        if not C.contains(c):
            return Check("closure fixpoints are C*", "fail", f"closure of {_show(RE.frame, F)} leaves C*")
        if C.closure(c) != c or (C.contains(F) and c != F):
            return Check("closure fixpoints are C*", "fail", _show(RE.frame, F))
        if isinstance(F, int) and F & ~c:
            return Check("closure fixpoints are C*", "fail", f"closure of {_show(RE.frame, F)} is smaller")
        if isinstance(F, Shape) and not shape_leq(F, c):
            return Check("closure fixpoints are C*", "fail", f"closure of {_show(RE.frame, F)} is smaller")
    return _verdict("closure fixpoints are C*", True, _exhaustive(RE.frame))


# Spectrum.


@dataclass(frozen=True)
class SpectrumSpace:
    """Completely prime filters in C*, with opens φ(a) = {P : a ∈ P}."""

    points: tuple
    labels: tuple
    opens: tuple
    complete: bool
    tail: str | None = None

    def as_finite_space(self):
        from .spaces import FiniteSpace

        if not self.complete:
            raise UnsupportedRepresentation("spectrum is only listed up to a window")
        return FiniteSpace(len(self.points), {m for _, m in self.opens})

    def to_json(self, frame: FrameHandle) -> dict:
        return {
            "points": [filter_to_json(frame, P) for P in self.points],
            "labels": list(self.labels),
            "complete": self.complete,
            "tail": self.tail,
        }


def spectrum(RE: RaneyExt) -> SpectrumSpace:
    frame = RE.frame
    C = class_view(frame, RE.cstar)
    listing = frame.enumerate_primes()
    points, items, labels = [], [], []
    for p in listing.prefix:
        P = PrimeComplement(p)
        item = filter_extent(frame, P) if isinstance(frame, FiniteFrame) else shape_of(frame, P)
        if C.contains(item):
            points.append(P)
            items.append(item)
            if isinstance(frame, FiniteFrame):
                labels.append(frame.show(p))
            else:
                labels.append("★" if p.is_empty else str(min(p.missing)))
    opens = []
    for a in frame.sample_elements():
        if isinstance(frame, FiniteFrame):
            mask = mask_of(i for i, it in enumerate(items) if it >> a & 1)
        else:
            mask = mask_of(i for i, it in enumerate(items) if it.contains(a))
        opens.append((a, mask))
    tail = None
    if not listing.complete:
        tail = listing.tail if C.contains(REPRESENTATIVE[Kind.POINT]) else None
    return SpectrumSpace(tuple(points), tuple(labels), tuple(opens), listing.complete, tail)


def phi_isomorphism(RE: RaneyExt) -> Check:
    """φ: L → Ω(pt) is a frame isomorphism and F ↦ {P : F ⊆ P} is an order-reversing
    bijection from C* onto the saturated sets of pt (finite frames)."""
    frame = RE.frame
    if not isinstance(frame, FiniteFrame):
        raise UnsupportedRepresentation("φ is compared pointwise only on finite frames")
    L = frame.lattice
    sp = spectrum(RE)
    phi = dict(sp.opens)
    law = "φ is an isomorphism of extensions"
    if len(set(phi.values())) != L.n:
        return Check(law, "fail", "φ is not injective")
    for a in range(L.n):
        for b in range(L.n):
            if phi[L.meet(a, b)] != phi[a] & phi[b] or phi[L.join(a, b)] != phi[a] | phi[b]:
                return Check(law, "fail", f"φ does not preserve {L.labels[a]}, {L.labels[b]}")
    X = sp.as_finite_space()
    ext = [filter_extent(frame, P) for P in sp.points]
    C = class_view(frame, RE.cstar)
    image = {}
    for F in C.items():
        image[F] = mask_of(i for i, P in enumerate(ext) if F & ~P == 0)
    if set(image.values()) != set(X.saturated_sets()) or len(set(image.values())) != len(image):
        return Check(law, "fail", "C* does not match the saturated sets of the spectrum")
    for F in image:
        for G in image:
            if (F & ~G == 0) != (image[G] & ~image[F] == 0):
                return Check(law, "fail", "C* → U(pt) is not order-reversing")
    return Check(law, "pass")


def psi_homeomorphism(X) -> Check:
    """ψ(x) = neighbourhood filter of x is a bijection onto pt_R(Ω_R(X)) matching opens."""
    from .spaces import omega_r

    law = "ψ is a homeomorphism onto the spectrum"
    RE = omega_r(X)
    sp = spectrum(RE)
    ext = [filter_extent(RE.frame, P) for P in sp.points]
    psi = X.psi()
    index = {e: i for i, e in enumerate(ext)}
    if any(f not in index for f in psi):
        return Check(law, "fail", "some neighbourhood filter is not a point")
    mapping = [index[f] for f in psi]
    if sorted(mapping) != list(range(len(ext))):
        return Check(law, "fail", "ψ is not a bijection")
    _, masks = X.omega_frame()
    for a, phi_a in sp.opens:
        pulled = mask_of(x for x in range(X.n) if phi_a >> mapping[x] & 1)
        if pulled != masks[a]:
            return Check(law, "fail", f"ψ⁻¹(φ(a)) ≠ a for the open {masks[a]:b}")
    return Check(law, "pass")


# Topological properties.


def _boolean_check(RE: RaneyExt) -> Check:
    C = class_view(RE.frame, RE.cstar)
    law = "T1: every member of C* is regular (C Boolean)"
    for F in universe(RE.frame):
        if C.contains(F) and not _is_regular_item(RE.frame, F):
            return Check(law, "fail", f"{_show(RE.frame, F)} differs from its double pseudocomplement")
    return _verdict(law, True, _exhaustive(RE.frame))


def is_subfit(frame: FrameHandle) -> Check:
    law = "subfit: every principal filter is regular"
    for a in frame.sample_elements():
        F = _principal_item(frame, a)
        if not _is_regular_item(frame, F):
            return Check(law, "fail", f"↑{frame.show(a)} is not regular")
    return _verdict(law, True, _exhaustive(frame))


def _same_class(frame: FrameHandle, a: str, b: str) -> bool:
    va, vb = class_view(frame, Named(a)), class_view(frame, Named(b))
    return all(va.contains(F) == vb.contains(F) for F in universe(frame))


def is_scattered_subfit(frame: FrameHandle) -> Check:
    law = "scattered and subfit: subfit with SE = E = R"
    sub = is_subfit(frame)
    if not sub:
        return Check(law, "fail", sub.witness)
    if not (_same_class(frame, "SE", "E") and _same_class(frame, "E", "R")):
        return Check(law, "fail", "the strongly exact, exact and regular classes differ")
    return _verdict(law, True, _exhaustive(frame))


def property_suite(RE: RaneyExt) -> dict[str, Check]:
    C = class_view(RE.frame, RE.cstar)
    cp = class_view(RE.frame, Named("CP"))
    return {
        "sober": _relabel(is_compact(RE, Named("CP")), "sober: CP-compact"),
        "TD": _relabel(is_dense(RE, Named("E")), "TD: E-dense"),
        "T1": _boolean_check(RE),
        "spatial": _relabel(is_dense(RE, C.meet(cp)), "spatial: C* ⊆ I(C* ∩ CP)"),
        "subfit": is_subfit(RE.frame),
        "scattered_subfit": is_scattered_subfit(RE.frame),
    }


def _relabel(c: Check, law: str) -> Check:
    return Check(law, c.status, c.witness)


def is_algebraic(RE: RaneyExt) -> Check:
    C = class_view(RE.frame, RE.cstar)
    so = class_view(RE.frame, Named("SO"))
    return _relabel(is_dense(RE, C.meet(so)), "algebraic: C* ⊆ I(C* ∩ SO)")


# Frame maps and morphism extension.


@dataclass(frozen=True)
class FrameMap:
    """A frame morphism.  Finite sources carry an image table; a cofinite source
    carries a preimage rule on filter shapes (``point`` maps into the 2-element frame)."""

    source: FrameHandle
    target: FrameHandle
    table: tuple | None = None
    point: Shape | None = None
    identity: bool = False
    name: str = "f"

    def __call__(self, a):
        if self.identity:
            return a
        if self.table is not None:
            return self.table[a]
        if self.point is not None:
            return self.target.top if self.point.contains(a) else self.target.bottom
        raise UndecidableMembership("map has no action")

    def preimage(self, G):
        """``f⁻¹(G)`` for a filter item of the target."""
        if self.identity:
            return G
        if self.table is not None and isinstance(self.source, FiniteFrame):
            return mask_of(a for a in range(self.source.n) if G >> self.table[a] & 1)
        if self.point is not None:
            M = self.target.lattice
            return WHOLE if G >> M.bottom & 1 else self.point
        raise UndecidableMembership("no preimage rule for this map")

    def image_filter(self, F):
        """The target filter generated by ``f[F]``."""
        if self.identity:
            return F
        M = self.target.lattice
        if self.table is not None:
            return M.up[M.meet_all(self.table[a] for a in bits(F))]
        if self.point is not None:
            return M.up[M.top] if shape_leq(F, self.point) else M.up[M.bottom]
        raise UndecidableMembership("no image rule for this map")

    def to_json(self) -> dict:
        out = {"name": self.name}
        if self.identity:
            out["identity"] = True
        if self.table is not None:
            out["table"] = list(self.table)
        if self.point is not None:
            out["point"] = filter_to_json(self.source, shape_to_repr(self.point))
        return out

    @staticmethod
    def from_json(data: dict, source: FrameHandle, target: FrameHandle) -> "FrameMap":
        name = data.get("name", "f")
        if data.get("identity"):
            return FrameMap(source, target, identity=True, name=name)
        if "table" in data:
            return FrameMap(source, target, table=tuple(data["table"]), name=name)
        if "point" in data:
            return point_map(filter_from_json(source, data["point"]), source, target, name)
        raise InvalidStructure("map needs a table, a point, or identity")


def identity_map(L: FrameHandle) -> FrameMap:
    return FrameMap(L, L, identity=True, name="id")


def point_map(P: FilterRepr, source: CofiniteFrame, target: FiniteFrame, name: str = "χ") -> FrameMap:
    """U ↦ 1 if U ∈ P else 0, for a completely prime filter P; target must be 2-element."""
    if target.n != 2:
        raise InvalidStructure("a point map lands in the 2-element frame")
    return FrameMap(source, target, point=shape_of(source, P), name=name)


def classifier_map(source: CofiniteFrame, target: FiniteFrame) -> FrameMap:
    """U ↦ 1 iff U is nonempty."""
    return point_map(PrimeComplement(source.bottom), source, target, "nonempty")


def is_lawful(f: FrameMap) -> Check:
    law = "frame map preserves 0, 1, ∧, ∨"
    if f.identity:
        return Check(law, "pass")
    L, M = f.source, f.target
    if not isinstance(L, FiniteFrame):
        # a point map is lawful because its filter is completely prime
        return _verdict(law, True, False)
    if f(L.top) != M.top or f(L.bottom) != M.bottom:
        return Check(law, "fail", "top or bottom not preserved")
    for a in range(L.n):
        for b in range(L.n):
            if f(L.meet(a, b)) != M.meet(f(a), f(b)) or f(L.join(a, b)) != M.join(f(a), f(b)):
                return Check(law, "fail", f"at {L.show(a)}, {L.show(b)}")
    return Check(law, "pass")


def frame_maps(L: FiniteFrame, M: FiniteFrame) -> list[FrameMap]:
    """Every frame morphism between two finite frames, by brute force over functions."""
    from itertools import product

    out = []
    for table in product(range(M.n), repeat=L.n):
        f = FrameMap(L, M, table=tuple(table))
        if table[L.top] == M.top and table[L.bottom] == M.bottom and is_lawful(f):
            out.append(f)
    return out


@dataclass(frozen=True)
class Extension:
    """The extended map on C*: each source class member with its image class member."""

    mapping: tuple
    checks: tuple

    @property
    def verified(self) -> bool:
        return all(c.holds is Tri.TRUE for c in self.checks)


@dataclass(frozen=True)
class Refusal:
    """A target class member whose preimage is not in the source class."""

    target_filter: FilterRepr
    preimage: FilterRepr
    text: str


def extend_morphism(f: FrameMap, src: RaneyExt, tgt: RaneyExt) -> Union[Extension, Refusal]:
    """Extend f along the two extensions, or return the filter that blocks it."""
    if f.source != src.frame or f.target != tgt.frame:
        raise InvalidStructure("map does not run between the given frames")
    C = class_view(src.frame, src.cstar)
    D = class_view(tgt.frame, tgt.cstar)
    for G in universe(tgt.frame):
        if not D.contains(G):
            continue
        pre = f.preimage(G)
        if not C.contains(pre):
            return Refusal(
                item_to_repr(tgt.frame, G),
                item_to_repr(src.frame, pre),
                f"preimage of {_show(tgt.frame, G)} is {_show(src.frame, pre)}, which is not in the source class",
            )
    members = [F for F in universe(src.frame) if C.contains(F)]

    def ext(F):
        return D.closure(f.image_filter(F))

    exh = _exhaustive(src.frame) and _exhaustive(tgt.frame)
    checks = []
    bad = None
    for a in src.frame.sample_elements():
        if ext(_principal_item(src.frame, a)) != D.closure(_principal_item(tgt.frame, f(a))):
            bad = f"at ↑{src.frame.show(a)}"
            break
    checks.append(_verdict("extension restricts to f", bad is None, exh, bad))
    bad = None
    for F, G in combinations(members, 2):
        # intersections in C* are finite joins in C; closures of generated filters are meets
        if ext(_meet_item(src.frame, F, G)) != _meet_item(tgt.frame, ext(F), ext(G)):
            bad = f"finite joins at {_show(src.frame, F)}, {_show(src.frame, G)}"
            break
        if ext(C.closure(_join_item(src.frame, F, G))) != D.closure(_join_item(tgt.frame, ext(F), ext(G))):
            bad = f"meets at {_show(src.frame, F)}, {_show(src.frame, G)}"
            break
    checks.append(_verdict("extension preserves meets and finite joins", bad is None, exh, bad))
    mapping = tuple((item_to_repr(src.frame, F), item_to_repr(tgt.frame, ext(F))) for F in members)
    return Extension(mapping, tuple(checks))


def _join_item(frame: FrameHandle, F, G):
    """The filter generated by F ∪ G."""
    if isinstance(frame, FiniteFrame):
        L = frame.lattice
        return L.up[L.meet(L.meet_mask(F), L.meet_mask(G))]
    if F.sees is None or G.sees is None:
        return WHOLE
    # x ∧ y for x ∈ F, y ∈ G ranges over the opens whose complement misses both seen sets
    return Shape(F.sees.intersection(G.sees))


def is_exact_morphism(f: FrameMap) -> Check:
    """Preimages of exact filters are exact."""
    law = "preimages of exact filters are exact"
    E_src = class_view(f.source, Named("E"))
    E_tgt = class_view(f.target, Named("E"))
    for G in universe(f.target):
        if E_tgt.contains(G):
            pre = f.preimage(G)
            if not E_src.contains(pre):
                return Check(law, "fail", f"preimage of {_show(f.target, G)} is {_show(f.source, pre)}")
    return _verdict(law, True, _exhaustive(f.source) and _exhaustive(f.target))


def is_d_morphism(f: FrameMap) -> Check:
    """The right adjoint sends covered primes of the target to covered primes of the source."""
    law = "right adjoint preserves covered primes"
    L, M = f.source, f.target
    if not (isinstance(L, FiniteFrame) and isinstance(M, FiniteFrame)):
        raise UnsupportedRepresentation("right adjoints are computed on finite frames")
    for q in M.lattice.covered_primes():
        r = L.lattice.join_all(a for a in range(L.n) if M.leq(f(a), q))
        if not (L.is_prime(r) and L.is_covered_prime(r)):
            return Check(law, "fail", f"{M.show(q)} ↦ {L.show(r)}")
    return Check(law, "pass")


# Reflections and the canonical extension.


@dataclass(frozen=True)
class Reflection:
    result: RaneyExt
    added_points: tuple
    removed_points: tuple
    unchanged: bool
    validation: ValidationReport


def _named_for_kinds(kinds: frozenset, prefer: str | None) -> Named:
    if prefer and KINDS_BY_NAME[prefer] == kinds:
        return Named(prefer)
    for name in ("ICP", "E", "SE", "ISO", "R"):
        if KINDS_BY_NAME[name] == kinds:
            return Named(name)
    raise UnsupportedRepresentation("resulting class has no name on the cofinite frame")


def _reflection(RE: RaneyExt, new_view: View, prefer: str | None = None) -> Reflection:
    frame = RE.frame
    if isinstance(new_view, FiniteView):
        new = RaneyExt(frame, Explicit.from_masks(frame, new_view.masks))
    else:
        new = RaneyExt(frame, _named_for_kinds(new_view.kinds, prefer))
    old_pts = spectrum(RE).labels
    new_pts = spectrum(new).labels
    old_view = class_view(frame, RE.cstar)
    same = all(old_view.contains(F) == new_view.contains(F) for F in universe(frame))
    return Reflection(
        new,
        tuple(lbl for lbl in new_pts if lbl not in old_pts),
        tuple(lbl for lbl in old_pts if lbl not in new_pts),
        same,
        validate_raney(frame, new.cstar),
    )


def sobrification(RE: RaneyExt) -> Reflection:
    """The class generated by C* together with all completely prime filters."""
    C = class_view(RE.frame, RE.cstar)
    cp = class_view(RE.frame, Named("CP"))
    return _reflection(RE, C.union(cp).intersections(), RE.cstar.name if isinstance(RE.cstar, Named) else None)


def td_reflection(RE: RaneyExt) -> Reflection:
    """The quotient onto the exact-filter class."""
    return _reflection(RE, class_view(RE.frame, Named("E")), "E")


def canonical_extension(frame: FrameHandle) -> tuple[RaneyExt, ValidationReport]:
    """The class of intersections of Scott-open filters; valid iff the frame is pre-spatial."""
    RE = RaneyExt(frame, Named("ISO"))
    return RE, validate_raney(frame, RE.cstar)


def same_class(frame: FrameHandle, a: FilterClass, b: FilterClass) -> bool:
    va, vb = class_view(frame, a), class_view(frame, b)
    return all(va.contains(F) == vb.contains(F) for F in universe(frame))


def raney_interval(frame: FiniteFrame, cap: int = 16) -> list[frozenset]:
    """Every valid class on a finite frame, searched between the principal and the
    strongly exact filters."""
    L = frame.lattice
    required = frozenset(L.up[a] for a in range(L.n))
    optional = sorted(_finite_named(L, "SE") - required)
    if len(optional) > cap:
        raise SizeCapExceeded(f"{len(optional)} optional filters exceed the cap {cap}")
    out = []
    for k in range(len(optional) + 1):
        for extra in combinations(optional, k):
            masks = required | frozenset(extra)
            if validate_raney(frame, Explicit.from_masks(frame, masks)).ok:
                out.append(masks)
    return out


def unique_extension(frame: FiniteFrame) -> RaneyExt:
    """The extension whose class is every filter of a finite frame."""
    return RaneyExt(frame, Explicit.from_masks(frame, all_filters(frame.lattice)))


__all__ = [
    "Check", "Explicit", "Named", "FilterClass", "RaneyExt", "ValidationReport", "validate_raney",
    "is_compact", "is_dense", "adjunction_fixpoints", "SpectrumSpace", "spectrum", "phi_isomorphism",
    "psi_homeomorphism", "property_suite", "is_subfit", "is_scattered_subfit", "is_algebraic",
    "FrameMap", "identity_map", "point_map", "classifier_map", "is_lawful", "frame_maps", "Extension",
    "Refusal", "extend_morphism", "is_exact_morphism", "is_d_morphism", "Reflection", "sobrification",
    "td_reflection", "canonical_extension", "same_class", "raney_interval", "unique_extension",
    "class_view", "universe", "filter_inventory",
]
