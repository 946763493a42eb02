"""Filters of a frame: symbolic representations, membership, Heyting arrow and classification.

On a finite frame a filter is materialised as its extent, a bitmask over the
frame's elements.  On the cofinite frame every proper filter has the form

    Nbhd(Y) = {ℕ∖M : M finite, M ∩ Y = ∅}

for a set Y of naturals (the points the filter "sees"), and the improper filter is
``WHOLE``.  Representations reduce to this shape whenever Y is finite or
cofinite, which covers every filter the package constructs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

from ._bits import bits, mask_of
from .errors import InvalidStructure, NotPrime, UnsupportedRepresentation
from .frames import EMPTY, CofiniteFrame, Cof, FiniteFrame, FrameHandle, NatSet, cof, element_from_json, element_to_json
from .order import FiniteLattice, lattice_of_sets


# Representations.


@dataclass(frozen=True)
class Principal:
    a: object


@dataclass(frozen=True)
class Generated:
    gens: tuple

    def __init__(self, gens: Iterable = ()):
        object.__setattr__(self, "gens", tuple(gens))


@dataclass(frozen=True)
class PrimeComplement:
    """Everything not below the prime ``p``."""

    p: object


@dataclass(frozen=True)
class Arrow:
    """The filter ``{x : b ≤ x ∨ a}``, i.e. ``↑a → ↑b`` in the frame of filters."""

    a: object
    b: object


@dataclass(frozen=True)
class Meet:
    parts: tuple

    def __init__(self, parts: Iterable = ()):
        flat = []
        for part in parts:
            flat.extend(part.parts if isinstance(part, Meet) else [part])
        object.__setattr__(self, "parts", tuple(flat))


FilterRepr = Union[Principal, Generated, PrimeComplement, Arrow, Meet]


def filter_member(L: FrameHandle, F: FilterRepr, x) -> bool:
    if isinstance(F, Principal):
        return L.leq(F.a, x)
    if isinstance(F, Generated):
        return L.leq(L.meet_finite(F.gens), x)
    if isinstance(F, PrimeComplement):
        return not L.leq(x, F.p)
    if isinstance(F, Arrow):
        return L.leq(F.b, L.join(x, F.a))
    if isinstance(F, Meet):
        return all(filter_member(L, part, x) for part in F.parts)
    raise InvalidStructure(f"not a filter representation: {F!r}")


def _check_primes(L: FrameHandle, F: FilterRepr) -> None:
    if isinstance(F, PrimeComplement) and not L.is_prime(F.p):
        raise NotPrime(f"{L.show(F.p)} is not prime, so its complement is not a filter")
    if isinstance(F, Meet):
        for part in F.parts:
            _check_primes(L, part)


def filter_extent(L: FiniteFrame, F: FilterRepr) -> int:
    _check_primes(L, F)
    return mask_of(x for x in range(L.n) if filter_member(L, F, x))


def show_filter(L: FrameHandle, F: FilterRepr) -> str:
    s = L.show
    if isinstance(F, Principal):
        return f"↑{s(F.a)}"
    if isinstance(F, Generated):
        return "⟨" + ", ".join(s(g) for g in F.gens) + "⟩"
    if isinstance(F, PrimeComplement):
        return f"L∖↓{s(F.p)}"
    if isinstance(F, Arrow):
        return f"(↑{s(F.a)} → ↑{s(F.b)})"
    return " ∩ ".join(show_filter(L, p) for p in F.parts) if F.parts else "L"


# Finite frames: extents.


def is_filter_mask(L: FiniteLattice, mask: int) -> bool:
    if not mask >> L.top & 1:
        return False
    for x in bits(mask):
        if L.up[x] & ~mask:
            return False
        for y in bits(mask):
            if y > x and not mask >> L.meet(x, y) & 1:
                return False
    return True


def all_filters(L: FiniteLattice) -> list[int]:
    """Every filter of L, as extents sorted by (size, mask)."""
    out = [m for m in L.poset.upsets() if m and is_filter_mask(L, m)]
    return sorted(out, key=lambda m: (bin(m).count("1"), m))


def principal_mask(L: FiniteLattice, a: int) -> int:
    return L.up[a]


def generator(L: FiniteLattice, mask: int) -> int:
    """The meet of a finite filter, which generates it."""
    return L.meet_mask(mask)


def mask_heyting(L: FiniteLattice, G: int, F: int) -> int:
    """``G → F`` in the frame of filters: ``{x : x ∨ g ∈ F for all g ∈ G}``."""
    return mask_of(x for x in range(L.n) if all(F >> L.join(x, g) & 1 for g in bits(G)))


def mask_pseudocomplement(L: FiniteLattice, F: int) -> int:
    return mask_heyting(L, F, 1 << L.top)


def mask_is_regular(L: FiniteLattice, F: int) -> bool:
    return mask_pseudocomplement(L, mask_pseudocomplement(L, F)) == F


def mask_is_completely_prime(L: FiniteLattice, F: int) -> bool:
    # the empty join is the bottom, so proper filters only; finite joins are iterated binary joins
    if F >> L.bottom & 1:
        return False
    return all(F >> x & 1 or F >> y & 1 for x in range(L.n) for y in range(x, L.n) if F >> L.join(x, y) & 1)


def mask_is_meet_closed(L: FiniteLattice, F: int) -> bool:
    # every meet of members in a finite frame is a finite meet, reached by binary steps from 1
    return bool(F >> L.top & 1) and all(F >> L.meet(x, y) & 1 for x in bits(F) for y in bits(F))


def mask_is_scott_open(L: FiniteLattice, F: int) -> bool:
    # a directed subset of a finite lattice contains its own join, so this is
    # only the upward-closure requirement
    return all(L.up[x] & ~F == 0 for x in bits(F))


def intersection_closure(n_top_mask: int, family: Iterable[int]) -> set[int]:
    """Close a family of extents under intersections, including the empty one."""
    closed = {n_top_mask}
    frontier = list(set(family))
    closed.update(frontier)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                c = a & b
                if c not in closed:
                    closed.add(c)
                    new.append(c)
        frontier = new
    return closed


@dataclass(frozen=True)
class FiltFrame:
    """All filters of a finite frame, their inclusion lattice, and the iso from L^op."""

    filters: tuple
    lattice: FiniteLattice
    principal_index: tuple

    def index_of(self, mask: int) -> int:
        return self.filters.index(mask)


def filt_frame(L: FiniteLattice) -> FiltFrame:
    filters = all_filters(L)
    lat, masks = lattice_of_sets(filters, L.labels)
    index = {m: i for i, m in enumerate(masks)}
    iso = tuple(index[L.up[a]] for a in range(L.n))
    if sorted(iso) != list(range(len(masks))):
        raise InvalidStructure("principal filters do not exhaust the filter lattice")
    for a in range(L.n):
        for b in range(L.n):
            if lat.leq(iso[a], iso[b]) != L.leq(b, a):
                raise InvalidStructure("↑ is not order-reversing")
    return FiltFrame(tuple(masks), lat, iso)


# The cofinite frame: shapes.


class Kind(enum.Enum):
    WHOLE = "whole"
    GENERIC = "generic"
    POINT = "point"
    FINITE = "finite"
    COFINITE = "cofinite"


@dataclass(frozen=True)
class Shape:
    """``sees is None`` is the improper filter; otherwise the filter Nbhd(sees)."""

    sees: NatSet | None

    @property
    def kind(self) -> Kind:
        Y = self.sees
        if Y is None:
            return Kind.WHOLE
        if Y.cofinite:
            return Kind.COFINITE
        return {0: Kind.GENERIC, 1: Kind.POINT}.get(len(Y.members), Kind.FINITE)

    def sort_key(self) -> tuple:
        if self.sees is None:
            return (0,)
        return (1, self.sees.cofinite, len(self.sees.members), tuple(sorted(self.sees.members)))

    def __lt__(self, other: "Shape") -> bool:
        return self.sort_key() < other.sort_key()

    def contains(self, x: Cof) -> bool:
        if self.sees is None:
            return True
        return not x.is_empty and self.sees.disjoint_from_finite(x.missing)

    def __str__(self) -> str:
        return "L" if self.sees is None else f"N({self.sees})"


WHOLE = Shape(None)
GENERIC = Shape(NatSet.finite())


def nbhd(Y: NatSet) -> Shape:
    return Shape(Y)


def shape_meet(F: Shape, G: Shape) -> Shape:
    if F.sees is None:
        return G
    if G.sees is None:
        return F
    return Shape(F.sees.union(G.sees))


def shape_leq(F: Shape, G: Shape) -> bool:
    """Inclusion of filters: Nbhd(Y) ⊆ Nbhd(Z) iff Z ⊆ Y."""
    if G.sees is None:
        return True
    if F.sees is None:
        return False
    return G.sees.issubset(F.sees)


def shape_heyting(G: Shape, F: Shape) -> Shape:
    # x = ℕ∖M lies in G → F iff M misses F.sees ∖ G.sees (test with singleton M
    # against members of G); x = ∅ lies in it iff G ⊆ F
    if G.sees is None:
        return F
    if F.sees is None:
        return WHOLE
    rest = F.sees.difference(G.sees)
    return WHOLE if rest.is_empty() else Shape(rest)


def shape_pseudocomplement(F: Shape) -> Shape:
    return shape_heyting(F, Shape(NatSet.co()))


def shape_of(L: CofiniteFrame, F: FilterRepr) -> Shape:
    """Normal form of a filter on the cofinite frame."""
    if isinstance(F, Principal):
        a = F.a
        return WHOLE if a.is_empty else Shape(NatSet.finite(a.missing).complement())
    if isinstance(F, Generated):
        return shape_of(L, Principal(L.meet_finite(F.gens)))
    if isinstance(F, PrimeComplement):
        if not L.is_prime(F.p):
            raise NotPrime(f"{L.show(F.p)} is not prime")
        # x ≰ ∅ iff x ≠ ∅; x ≰ ℕ∖{n} iff n ∈ x
        return GENERIC if F.p.is_empty else Shape(NatSet.finite(F.p.missing))
    if isinstance(F, Arrow):
        a, b = F.a, F.b
        if a.is_empty:
            return shape_of(L, Principal(b))
        if b.is_empty:
            return WHOLE
        # ℕ∖B ≤ (ℕ∖M) ∨ (ℕ∖A) iff M ∩ A ⊆ B; and ∅ qualifies iff A ⊆ B
        rest = a.missing - b.missing
        return WHOLE if not rest else Shape(NatSet.finite(rest))
    if isinstance(F, Meet):
        acc = WHOLE
        for part in F.parts:
            acc = shape_meet(acc, shape_of(L, part))
        return acc
    raise InvalidStructure(f"not a filter representation: {F!r}")


def shape_to_repr(F: Shape) -> FilterRepr:
    """A canonical representation built from principal and prime-complement filters."""
    if F.sees is None:
        return Principal(EMPTY)
    Y = F.sees
    if Y.cofinite:
        return Principal(Cof(Y.members))
    if not Y.members:
        return PrimeComplement(EMPTY)
    parts = [PrimeComplement(cof(n)) for n in sorted(Y.members)]
    return parts[0] if len(parts) == 1 else Meet(parts)


# Shape kinds making up each named class on the cofinite frame.  Derivations:
#   exact    = intersections of Arrow filters = Nbhd(Y) for nonempty Y, plus L
#   regular  = intersections of {x : x ∨ a = 1} = Nbhd(A) for nonempty A, plus L
#   strongly exact: an infinite meet of members escaping Nbhd(Y) evaluates to ∅ and
#            fails the test at y = ∅, so every filter qualifies
#   Scott-open: a directed family of cofinite sets contains its union, so every filter
#   completely prime: a join ℕ∖⋂Aᵢ avoids Y in exactly one point or none, so |Y| ≤ 1
ALL_KINDS = frozenset(Kind)
KINDS_E = frozenset({Kind.WHOLE, Kind.POINT, Kind.FINITE, Kind.COFINITE})
KINDS_R = KINDS_E
KINDS_SE = ALL_KINDS
KINDS_SO = ALL_KINDS
KINDS_CP = frozenset({Kind.POINT, Kind.GENERIC})


def kinds_intersection_closure(kinds: frozenset) -> frozenset:
    """Kinds reachable as intersections, i.e. unions of the seen sets.

    The empty intersection is L.  Unions of two or more points are finite, and
    of infinitely many points or finite sets can be cofinite.
    """
    out = set(kinds) | {Kind.WHOLE}
    if Kind.POINT in kinds:
        out |= {Kind.FINITE, Kind.COFINITE}
    if Kind.FINITE in kinds:
        out.add(Kind.COFINITE)
    return frozenset(out)


KINDS_ICP = kinds_intersection_closure(KINDS_CP)
KINDS_ISO = kinds_intersection_closure(KINDS_SO)


def kinds_closure_of(F: Shape, kinds: frozenset) -> Shape:
    """The least filter of the class containing ``F`` (the class is given by kinds
    and assumed closed under intersections)."""
    if F.kind in kinds:
        return F
    Y = F.sees
    if Y is None:
        return WHOLE
    # members above Nbhd(Y) are Nbhd(Y') with Y' ⊆ Y; their intersection sees the union
    if Kind.POINT in kinds and not Y.is_empty():
        return F
    if Kind.FINITE in kinds and (Y.cofinite or len(Y.members) >= 2):
        return F
    return GENERIC if Kind.GENERIC in kinds else WHOLE


# Classification.


class Tri(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @staticmethod
    def of(value: bool) -> "Tri":
        return Tri.TRUE if value else Tri.FALSE

    def __bool__(self) -> bool:
        return self is Tri.TRUE


@dataclass(frozen=True)
class FilterFlags:
    exact: Tri
    strongly_exact: Tri
    regular: Tri
    completely_prime: Tri
    scott_open: Tri

    def to_json(self) -> dict:
        return {k: getattr(self, k).value for k in self.__dataclass_fields__}


def classify_filter(L: FrameHandle, F: FilterRepr) -> FilterFlags:
    if isinstance(L, FiniteFrame):
        lat = L.lattice
        m = filter_extent(L, F)
        closed = mask_is_meet_closed(lat, m)
        return FilterFlags(
            exact=Tri.of(closed),
            strongly_exact=Tri.of(closed),
            regular=Tri.of(mask_is_regular(lat, m)),
            completely_prime=Tri.of(mask_is_completely_prime(lat, m)),
            scott_open=Tri.of(mask_is_scott_open(lat, m)),
        )
    if isinstance(F, PrimeComplement):
        _check_primes(L, F)
        # completely prime filters are strongly exact and Scott-open on any frame
        return FilterFlags(
            exact=Tri.of(L.is_covered_prime(F.p)),
            strongly_exact=Tri.TRUE,
            regular=Tri.of(L.is_maximal_prime(F.p)),
            completely_prime=Tri.TRUE,
            scott_open=Tri.TRUE,
        )
    u = Tri.UNKNOWN
    return FilterFlags(u, u, u, u, u)


# Pseudocomplement and Heyting arrow on representations.


def filter_pseudocomplement(L: FrameHandle, F: FilterRepr) -> FilterRepr:
    """``{x : x ∨ f = 1 for every f ∈ F}``, as a meet of arrows into the top."""
    if isinstance(F, Principal):
        return Arrow(F.a, L.top)
    if isinstance(F, Generated):
        return Meet(Arrow(g, L.top) for g in F.gens)
    if isinstance(L, FiniteFrame):
        return Arrow(generator(L.lattice, filter_extent(L, F)), L.top)
    if isinstance(F, PrimeComplement):
        raise UnsupportedRepresentation("pseudocomplement of a prime-complement filter on an infinite frame")
    if isinstance(L, CofiniteFrame):
        return shape_to_repr(shape_pseudocomplement(shape_of(L, F)))
    raise UnsupportedRepresentation(f"no pseudocomplement rule for {F!r}")


def filter_heyting(L: FrameHandle, G: FilterRepr, F: FilterRepr) -> FilterRepr:
    if isinstance(L, FiniteFrame):
        m = mask_heyting(L.lattice, filter_extent(L, G), filter_extent(L, F))
        return Principal(generator(L.lattice, m))
    if isinstance(L, CofiniteFrame):
        return shape_to_repr(shape_heyting(shape_of(L, G), shape_of(L, F)))
    raise UnsupportedRepresentation("no Heyting rule for this frame")


def filters_equal(L: FrameHandle, F: FilterRepr, G: FilterRepr) -> bool:
    if isinstance(L, FiniteFrame):
        return filter_extent(L, F) == filter_extent(L, G)
    return shape_of(L, F) == shape_of(L, G)


# JSON.


def filter_to_json(L: FrameHandle, F: FilterRepr) -> dict:
    e = lambda a: element_to_json(L, a)  # noqa: E731
    if isinstance(F, Principal):
        return {"principal": e(F.a)}
    if isinstance(F, Generated):
        return {"generated": [e(g) for g in F.gens]}
    if isinstance(F, PrimeComplement):
        return {"prime_complement": e(F.p)}
    if isinstance(F, Arrow):
        return {"arrow": [e(F.a), e(F.b)]}
    return {"meet": [filter_to_json(L, p) for p in F.parts]}


def filter_from_json(L: FrameHandle, data: dict) -> FilterRepr:
    e = lambda a: element_from_json(L, a)  # noqa: E731
    if len(data) != 1:
        raise InvalidStructure("a filter must have exactly one tag")
    (tag, body), = data.items()
    if tag == "principal":
        return Principal(e(body))
    if tag == "generated":
        return Generated(e(g) for g in body)
    if tag == "prime_complement":
        return PrimeComplement(e(body))
    if tag == "arrow":
        return Arrow(e(body[0]), e(body[1]))
    if tag == "meet":
        return Meet(filter_from_json(L, p) for p in body)
    raise InvalidStructure(f"unknown filter tag {tag!r}")


def mask_to_repr(L: FiniteLattice, mask: int) -> Principal:
    return Principal(generator(L, mask))


__all__ = [
    "Principal", "Generated", "PrimeComplement", "Arrow", "Meet", "FilterRepr",
    "filter_member", "filter_extent", "all_filters", "filt_frame", "FiltFrame",
    "classify_filter", "FilterFlags", "Tri", "filter_pseudocomplement", "filter_heyting",
    "Shape", "Kind", "WHOLE", "GENERIC", "shape_of", "shape_to_repr", "shape_meet",
    "shape_heyting", "shape_pseudocomplement", "shape_leq", "kinds_intersection_closure",
    "kinds_closure_of", "filter_to_json", "filter_from_json", "show_filter",
    "mask_heyting", "mask_pseudocomplement", "mask_is_regular", "mask_is_completely_prime",
    "mask_is_meet_closed", "mask_is_scott_open", "intersection_closure",
]
