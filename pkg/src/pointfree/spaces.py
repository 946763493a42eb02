"""Finite topological spaces and the two symbolic spaces over the cofinite frame."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ._bits import full, mask_of
from .errors import InvalidStructure, NotT0
from .frames import EMPTY, CofiniteFrame, Cof, FiniteFrame, NatSet, cof
from .order import FiniteLattice, FinitePoset, lattice_of_sets


class FiniteSpace:
    """A topology on ``range(n)`` given by its open sets as bitmasks."""

    def __init__(self, n: int, opens):
        self.n = n
        self.opens = tuple(sorted(set(opens), key=lambda m: (bin(m).count("1"), m)))
        self._validate()

    def _validate(self) -> None:
        everything = full(self.n)
        s = set(self.opens)
        if 0 not in s or everything not in s:
            raise InvalidStructure("a topology contains ∅ and the whole space")
        for a in s:
            if a & ~everything:
                raise InvalidStructure(f"open {a:b} mentions points outside range({self.n})")
            for b in s:
                if a | b not in s or a & b not in s:
                    raise InvalidStructure("opens are not closed under union and intersection")

    def __repr__(self) -> str:
        return f"FiniteSpace(n={self.n}, opens={list(self.opens)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteSpace) and (self.n, self.opens) == (other.n, other.opens)

    def __hash__(self) -> int:
        return hash((self.n, self.opens))

    @classmethod
    def alexandrov(cls, P: FinitePoset) -> "FiniteSpace":
        """Opens are the upsets of P, so P is the specialization order."""
        return cls(P.n, P.upsets())

    @classmethod
    def sierpinski(cls) -> "FiniteSpace":
        # point 0 is ⊥, point 1 is the open point ⊤
        return cls(2, [0, 0b10, 0b11])

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        return cls(n, range(1 << n))

    @classmethod
    def indiscrete(cls, n: int) -> "FiniteSpace":
        return cls(n, [0, full(n)])

    @cached_property
    def specialization_rows(self) -> tuple[int, ...]:
        """``rows[x]`` = points y with x ≤ y, i.e. every open containing x contains y."""
        rows = []
        for x in range(self.n):
            acc = full(self.n)
            for U in self.opens:
                if U >> x & 1:
                    acc &= U
            rows.append(acc)
        return tuple(rows)

    def is_t0(self) -> bool:
        rows = self.specialization_rows
        return all(not (rows[x] >> y & 1 and rows[y] >> x & 1) for x in range(self.n) for y in range(x + 1, self.n))

    def _require_t0(self) -> None:
        if not self.is_t0():
            raise NotT0("space is not T0")

    def specialization(self) -> FinitePoset:
        self._require_t0()
        return FinitePoset(self.specialization_rows)

    def saturated_sets(self) -> list[int]:
        """Upsets of the specialization order."""
        self._require_t0()
        return self.specialization().upsets()

    def omega(self) -> FiniteLattice:
        return lattice_of_sets(self.opens, [str(i) for i in range(self.n)])[0]

    def omega_frame(self) -> tuple[FiniteFrame, list[int]]:
        lat, masks = lattice_of_sets(self.opens, [str(i) for i in range(self.n)])
        return FiniteFrame(lat), masks

    def upsets_lattice(self) -> tuple[FiniteLattice, list[int]]:
        return lattice_of_sets(self.saturated_sets(), [str(i) for i in range(self.n)])

    def neighbourhood_filter(self, x: int, open_masks: list[int]) -> int:
        """ψ(x): the opens containing x, as an extent over Ω(X)'s element ids."""
        return mask_of(i for i, U in enumerate(open_masks) if U >> x & 1)

    def saturation_filter(self, S: int, open_masks: list[int]) -> int:
        """The opens containing the subset S."""
        return mask_of(i for i, U in enumerate(open_masks) if S & ~U == 0)

    def psi(self) -> list[int]:
        _, masks = self.omega_frame()
        return [self.neighbourhood_filter(x, masks) for x in range(self.n)]

    # point-set oracles, kept independent of the filter machinery

    def pointset_sober(self) -> bool:
        """Every irreducible closed set is the closure of exactly one point."""
        self._require_t0()
        closeds = [full(self.n) & ~U for U in self.opens]
        closure = [min((C for C in closeds if C >> x & 1), key=lambda m: bin(m).count("1")) for x in range(self.n)]
        for C in closeds:
            if C == 0:
                continue
            irreducible = all(not (A | B == C and A != C and B != C) for A in closeds for B in closeds if A & ~C == 0 and B & ~C == 0)
            if irreducible and sum(1 for x in range(self.n) if closure[x] == C) != 1:
                return False
        return True

    def pointset_td(self) -> bool:
        """Every point is U ∖ V for opens U ⊇ V."""
        s = set(self.opens)
        return all(any(U & ~V == 1 << x for U in s for V in s) for x in range(self.n))

    def pointset_t1(self) -> bool:
        return all(row == 1 << x for x, row in enumerate(self.specialization_rows))

    def to_text(self) -> str:
        return "\n".join([str(self.n)] + [format(U, "b") for U in self.opens]) + "\n"


def parse_space_text(text: str) -> FiniteSpace:
    """``n`` on the first line, then one open set per line as a binary bitmask (bit i = point i)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidStructure("empty space description")
    return FiniteSpace(int(lines[0]), [int(ln, 2) for ln in lines[1:]])


# Symbolic spaces.


GENERIC_POINT = "★"


@dataclass(frozen=True)
class StarSet:
    """A saturated set of ℕ ∪ {★}: empty, or ``nat_part`` ∪ {★}."""

    nat_part: NatSet | None

    def __str__(self) -> str:
        return "∅" if self.nat_part is None else f"{self.nat_part} ∪ {{★}}"


@dataclass(frozen=True)
class SymbolicSpace:
    """``CofiniteNat`` is ℕ with the cofinite topology.  ``CofiniteNatPlusGeneric`` adds a
    point ★ lying in every nonempty open; its opens are ∅ and the sets U ∪ {★}, U cofinite."""

    kind: str

    def __post_init__(self):
        if self.kind not in ("CofiniteNat", "CofiniteNatPlusGeneric"):
            raise InvalidStructure(f"unknown symbolic space {self.kind!r}")

    @property
    def has_generic(self) -> bool:
        return self.kind == "CofiniteNatPlusGeneric"

    def frame(self, window: int = 16) -> CofiniteFrame:
        """Both spaces have the cofinite frame as their frame of opens."""
        return CofiniteFrame(window)

    def is_t0(self) -> bool:
        return True

    def specialization(self) -> str:
        if self.has_generic:
            return "n ≤ ★ for every n; ℕ is an antichain"
        return "antichain on ℕ"

    def specialization_leq(self, x, y) -> bool:
        if x == y:
            return True
        return self.has_generic and y == GENERIC_POINT

    def point_in_open(self, x, U: Cof) -> bool:
        if U.is_empty:
            return False
        if x == GENERIC_POINT:
            return self.has_generic
        return x not in U.missing

    def is_saturated(self, S) -> bool:
        """Membership test for U(X).  Plain NatSets are subsets of ℕ; StarSets live in ℕ ∪ {★}."""
        if not self.has_generic:
            return isinstance(S, NatSet)
        return isinstance(S, StarSet)

    def saturated_sets_description(self) -> str:
        if self.has_generic:
            return "{∅} ∪ {S ∪ {★} : S ⊆ ℕ}"
        return "every subset of ℕ"

    def neighbourhood_filter(self, x):
        """ψ(x) as a filter representation of the cofinite frame."""
        from .filters import PrimeComplement

        if x == GENERIC_POINT:
            if not self.has_generic:
                raise InvalidStructure("CofiniteNat has no generic point")
            return PrimeComplement(EMPTY)
        return PrimeComplement(cof(x))

    def omega_r(self, window: int = 16):
        """(Ω(X), U(X)) as a Raney extension, named by its class of saturated-set filters.

        The opens containing a saturated S form Nbhd(S ∩ ℕ).  Without ★, S ranges over all
        subsets of ℕ and S = ∅ gives the whole frame, so the class omits only the generic
        filter Nbhd(∅): that is the regular class.  With ★, S ∩ ℕ = ∅ is allowed and every
        filter appears, which is the intersection closure of the completely prime filters.
        """
        from .raney import Named, RaneyExt

        return RaneyExt(self.frame(window), Named("ICP" if self.has_generic else "R"))

    # Point-set facts, from the classification of irreducible closed sets.  In the
    # cofinite topology these are the singletons and ℕ itself; ℕ has no generic point,
    # so CofiniteNat is not sober, while ★ supplies it in the second space.  Every
    # n is isolated as (ℕ∖∅) ∖ (ℕ∖{n}), but any open containing ★ minus a smaller
    # open still contains ★ and some naturals, so ★ is not locally isolated.
    def pointset_sober(self) -> bool:
        return self.has_generic

    def pointset_td(self) -> bool:
        return not self.has_generic

    def pointset_t1(self) -> bool:
        return not self.has_generic


COFINITE_NAT = SymbolicSpace("CofiniteNat")
COFINITE_NAT_PLUS_GENERIC = SymbolicSpace("CofiniteNatPlusGeneric")


def space_is_sober(X) -> bool:
    from .raney import is_compact, Named

    return bool(is_compact(omega_r(X), Named("CP")).holds)


def space_is_td(X) -> bool:
    from .raney import is_dense, Named

    return bool(is_dense(omega_r(X), Named("E")).holds)


def space_is_t1(X) -> bool:
    from .raney import property_suite

    return bool(property_suite(omega_r(X))["T1"].holds)


def omega_r(X, window: int = 16):
    """The Raney extension (Ω(X), U(X)) of a T0 space."""
    if isinstance(X, SymbolicSpace):
        return X.omega_r(window)
    from .raney import Explicit, RaneyExt

    if not X.is_t0():
        raise NotT0("space is not T0")
    frame, masks = X.omega_frame()
    cstar = sorted({X.saturation_filter(S, masks) for S in X.saturated_sets()})
    return RaneyExt(frame, Explicit.from_masks(frame, cstar))
