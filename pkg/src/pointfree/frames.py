"""Frames with order, meet/join over symbolic families, Heyting arrow and prime oracles.

Two kinds are provided.  ``FiniteFrame`` wraps a distributive ``FiniteLattice``
and answers everything by exhaustive search.  ``CofiniteFrame`` is the frame of
opens of the cofinite topology on the naturals: the empty set together with every
cofinite subset, stored by its finite complement.  All answers on it are exact.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterable, Iterator, Sequence, Union

from .errors import InvalidStructure, NotPrime, UnsupportedFamily
from .order import FiniteLattice

DEFAULT_WINDOW = 16


# Subsets of the naturals that are finite or cofinite.


@dataclass(frozen=True)
class NatSet:
    """A finite set (``cofinite=False``) or the complement of a finite set."""

    members: frozenset = frozenset()
    cofinite: bool = False

    @staticmethod
    def finite(items: Iterable[int] = ()) -> "NatSet":
        return NatSet(frozenset(items), False)

    @staticmethod
    def co(items: Iterable[int] = ()) -> "NatSet":
        return NatSet(frozenset(items), True)

    def __contains__(self, n: int) -> bool:
        return (n in self.members) != self.cofinite

    def is_empty(self) -> bool:
        return not self.cofinite and not self.members

    def is_everything(self) -> bool:
        return self.cofinite and not self.members

    def union(self, other: "NatSet") -> "NatSet":
        a, b = self.members, other.members
        if not self.cofinite and not other.cofinite:
            return NatSet(a | b, False)
        if self.cofinite and other.cofinite:
            return NatSet(a & b, True)
        fin, cof = (a, b) if not self.cofinite else (b, a)
        return NatSet(cof - fin, True)

    def complement(self) -> "NatSet":
        return NatSet(self.members, not self.cofinite)

    def intersection(self, other: "NatSet") -> "NatSet":
        return self.complement().union(other.complement()).complement()

    def difference(self, other: "NatSet") -> "NatSet":
        return self.intersection(other.complement())

    def disjoint_from_finite(self, items: frozenset) -> bool:
        return not any(n in self for n in items)

    def issubset(self, other: "NatSet") -> bool:
        return self.difference(other).is_empty()

    def size(self) -> int | None:
        """Cardinality, or None when infinite."""
        return None if self.cofinite else len(self.members)

    def to_json(self) -> dict:
        key = "cofinite_complement" if self.cofinite else "finite"
        return {key: sorted(self.members)}

    @staticmethod
    def from_json(data: dict) -> "NatSet":
        if "cofinite_complement" in data:
            return NatSet.co(data["cofinite_complement"])
        return NatSet.finite(data["finite"])

    def __str__(self) -> str:
        body = "{" + ",".join(map(str, sorted(self.members))) + "}"
        if not self.cofinite:
            return body if self.members else "∅"
        return "ℕ" if not self.members else f"ℕ∖{body}"


# Elements of the cofinite frame.


@dataclass(frozen=True)
class Cof:
    """An open of the cofinite topology.  ``missing is None`` is the empty open;
    otherwise the open is the naturals minus the finite set ``missing``."""

    missing: frozenset | None

    @property
    def is_empty(self) -> bool:
        return self.missing is None

    def as_natset(self) -> NatSet:
        return NatSet.finite() if self.missing is None else NatSet.co(self.missing)

    def sort_key(self) -> tuple:
        if self.missing is None:
            return (0,)
        return (1, len(self.missing), tuple(sorted(self.missing)))

    def __lt__(self, other: "Cof") -> bool:
        return self.sort_key() < other.sort_key()

    def to_json(self) -> dict:
        if self.missing is None:
            return {"empty": True}
        return {"cofinite_complement": sorted(self.missing)}

    @staticmethod
    def from_json(data: dict) -> "Cof":
        if data.get("empty"):
            return EMPTY
        return Cof(frozenset(data["cofinite_complement"]))

    def __str__(self) -> str:
        return str(self.as_natset())


EMPTY = Cof(None)
NAT = Cof(frozenset())


def cof(*missing: int) -> Cof:
    return Cof(frozenset(missing))


Element = Union[int, Cof]


# Symbolic families.


@dataclass(frozen=True)
class FiniteFamily:
    items: tuple

    def __init__(self, items: Iterable = ()):
        object.__setattr__(self, "items", tuple(items))


@dataclass(frozen=True)
class StrictlyAbove:
    a: object


@dataclass(frozen=True)
class Above:
    a: object


@dataclass(frozen=True)
class AllNonEmpty:
    """Every element other than the bottom."""


SymbolicFamily = Union[FiniteFamily, StrictlyAbove, Above, AllNonEmpty]


@dataclass(frozen=True)
class PrimeListing:
    """Primes of a frame: an explicit prefix, plus a description of anything not listed."""

    prefix: tuple
    complete: bool
    tail: str | None = None


class FrameHandle(ABC):
    kind: str

    @abstractmethod
    def leq(self, a, b) -> bool: ...

    @abstractmethod
    def meet(self, a, b): ...

    @abstractmethod
    def join(self, a, b): ...

    @abstractmethod
    def heyting(self, a, b): ...

    @property
    @abstractmethod
    def top(self): ...

    @property
    @abstractmethod
    def bottom(self): ...

    @abstractmethod
    def meet_family(self, fam: SymbolicFamily): ...

    @abstractmethod
    def join_family(self, fam: SymbolicFamily): ...

    @abstractmethod
    def is_exact_meet(self, fam: SymbolicFamily) -> bool: ...

    @abstractmethod
    def is_strongly_exact_meet(self, fam: SymbolicFamily) -> bool: ...

    @abstractmethod
    def is_prime(self, p) -> bool: ...

    @abstractmethod
    def enumerate_primes(self, window: int = DEFAULT_WINDOW) -> PrimeListing: ...

    @abstractmethod
    def is_covered_prime(self, p) -> bool: ...

    @abstractmethod
    def is_maximal_prime(self, p) -> bool: ...

    @abstractmethod
    def sample_elements(self, window: int = DEFAULT_WINDOW) -> list: ...

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def meet_finite(self, items: Iterable):
        acc = self.top
        for x in items:
            acc = self.meet(acc, x)
        return acc

    def join_finite(self, items: Iterable):
        acc = self.bottom
        for x in items:
            acc = self.join(acc, x)
        return acc

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def _require_prime(self, p) -> None:
        if not self.is_prime(p):
            raise NotPrime(f"{self.show(p)} is not prime")

    def show(self, a) -> str:
        return str(a)


class FiniteFrame(FrameHandle):
    """A finite distributive lattice viewed as a frame (finite joins are all joins)."""

    kind = "finite"

    def __init__(self, lattice: FiniteLattice):
        if not lattice.distributive:
            raise InvalidStructure("a finite frame must be distributive")
        self.lattice = lattice
        self.n = lattice.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteFrame) and self.lattice == other.lattice

    def __hash__(self) -> int:
        return hash(self.lattice)

    def __repr__(self) -> str:
        return f"FiniteFrame(n={self.n})"

    def elements(self) -> range:
        return range(self.n)

    def sample_elements(self, window: int = DEFAULT_WINDOW) -> list:
        return list(range(self.n))

    def leq(self, a, b):
        return self.lattice.leq(a, b)

    def meet(self, a, b):
        return self.lattice.meet(a, b)

    def join(self, a, b):
        return self.lattice.join(a, b)

    def heyting(self, a, b):
        return self.lattice.heyting(a, b)

    @property
    def top(self):
        return self.lattice.top

    @property
    def bottom(self):
        return self.lattice.bottom

    def members(self, fam: SymbolicFamily) -> list[int]:
        L = self.lattice
        if isinstance(fam, FiniteFamily):
            return list(fam.items)
        if isinstance(fam, StrictlyAbove):
            return [x for x in range(self.n) if L.lt(fam.a, x)]
        if isinstance(fam, Above):
            return [x for x in range(self.n) if L.leq(fam.a, x)]
        if isinstance(fam, AllNonEmpty):
            return [x for x in range(self.n) if x != L.bottom]
        raise UnsupportedFamily(f"no evaluator for {fam!r}")

    def meet_family(self, fam):
        return self.meet_finite(self.members(fam))

    def join_family(self, fam):
        return self.join_finite(self.members(fam))

    def is_exact_meet(self, fam) -> bool:
        xs = self.members(fam)
        m = self.meet_finite(xs)
        return all(self.join(m, a) == self.meet_finite(self.join(x, a) for x in xs) for a in range(self.n))

    def is_strongly_exact_meet(self, fam) -> bool:
        xs = self.members(fam)
        m = self.meet_finite(xs)
        for y in range(self.n):
            if all(self.heyting(x, y) == y for x in xs) and self.heyting(m, y) != y:
                return False
        return True

    def is_prime(self, p) -> bool:
        return self.lattice.is_prime(p)

    def enumerate_primes(self, window: int = DEFAULT_WINDOW) -> PrimeListing:
        return PrimeListing(tuple(sorted(self.lattice.primes())), True, None)

    def is_covered_prime(self, p) -> bool:
        self._require_prime(p)
        above = self.members(StrictlyAbove(p))
        return self.meet_finite(above) != p or p in above

    def is_maximal_prime(self, p) -> bool:
        return self.is_prime(p) and self.members(StrictlyAbove(p)) == [self.top]

    def show(self, a) -> str:
        return self.lattice.label(a)

    def to_json(self) -> dict:
        return {"kind": "finite", "data": self.lattice.to_json()}


class CofiniteFrame(FrameHandle):
    """Opens of the cofinite topology on ℕ.

    Order is inclusion, so ``CoFin(S) ≤ CoFin(T)`` iff ``T ⊆ S``.  A finite meet
    unions the complements, a finite join intersects them.
    """

    kind = "cofinite"

    def __init__(self, window: int = DEFAULT_WINDOW):
        self.window = window

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CofiniteFrame)

    def __hash__(self) -> int:
        return hash("cofinite")

    def __repr__(self) -> str:
        return f"CofiniteFrame(window={self.window})"

    @property
    def top(self):
        return NAT

    @property
    def bottom(self):
        return EMPTY

    def leq(self, a: Cof, b: Cof) -> bool:
        if a.is_empty:
            return True
        if b.is_empty:
            return False
        return b.missing <= a.missing

    def meet(self, a: Cof, b: Cof) -> Cof:
        if a.is_empty or b.is_empty:
            return EMPTY
        return Cof(a.missing | b.missing)

    def join(self, a: Cof, b: Cof) -> Cof:
        if a.is_empty:
            return b
        if b.is_empty:
            return a
        return Cof(a.missing & b.missing)

    def heyting(self, a: Cof, b: Cof) -> Cof:
        # x ∧ a ≤ b: with a = ℕ∖S and b = ℕ∖T the largest such x is ℕ∖(T∖S);
        # two nonempty cofinite sets always meet, so a ≠ ∅ = b forces x = ∅
        if a.is_empty:
            return NAT
        if b.is_empty:
            return EMPTY
        return Cof(b.missing - a.missing)

    def sample_elements(self, window: int | None = None) -> list:
        """∅, every open missing a subset of {0,1,2}, and every ℕ∖{n} for n < window."""
        w = self.window if window is None else window
        small = range(min(3, w))
        out = {EMPTY}
        for k in range(len(small) + 1):
            for s in combinations(small, k):
                out.add(Cof(frozenset(s)))
        for n in range(w):
            out.add(cof(n))
        return sorted(out)

    # Closed forms for the four family constructors.  Writing a = ℕ∖S:
    #   StrictlyAbove(ℕ) is empty, meet ℕ, join ∅.
    #   StrictlyAbove(ℕ∖{s}) = {ℕ}, meet ℕ.
    #   StrictlyAbove(ℕ∖S), |S| ≥ 2: the proper subsets of S cover S, meet a.
    #   StrictlyAbove(∅) = AllNonEmpty: complements are unbounded, meet ∅.
    #   Above(a) contains a, meet a.
    # Every join over an infinite or top-containing family is ℕ.

    def meet_family(self, fam: SymbolicFamily) -> Cof:
        if isinstance(fam, FiniteFamily):
            return self.meet_finite(fam.items)
        if isinstance(fam, Above):
            return fam.a
        if isinstance(fam, AllNonEmpty):
            return EMPTY
        if isinstance(fam, StrictlyAbove):
            a = fam.a
            if a.is_empty:
                return EMPTY
            if len(a.missing) <= 1:
                return NAT
            return a
        raise UnsupportedFamily(f"no evaluator for {fam!r}")

    def join_family(self, fam: SymbolicFamily) -> Cof:
        if isinstance(fam, FiniteFamily):
            return self.join_finite(fam.items)
        if isinstance(fam, (Above, AllNonEmpty)):
            return NAT
        if isinstance(fam, StrictlyAbove):
            return EMPTY if fam.a == NAT else NAT
        raise UnsupportedFamily(f"no evaluator for {fam!r}")

    def _contains_meet(self, fam: SymbolicFamily) -> bool:
        """Whether the meet of the family is itself a member (or the family is finite)."""
        if isinstance(fam, (FiniteFamily, Above)):
            return True
        if isinstance(fam, StrictlyAbove):
            return not fam.a.is_empty and len(fam.a.missing) <= 1
        return False

    def is_exact_meet(self, fam: SymbolicFamily) -> bool:
        # Finite meets and meets attained by a member are exact.  For the two
        # infinite forms, with c = ℕ∖C:
        #   |S| ≥ 2: ⋀(ℕ∖T ∨ c) over T ⊊ S is ℕ∖⋃(T∩C) = ℕ∖(S∩C) = a ∨ c.
        #   meet ∅:  ⋀(ℕ∖T ∨ c) over all finite T is ℕ∖C = c = ∅ ∨ c, and for c = ∅ it is ∅.
        if isinstance(fam, (FiniteFamily, Above, StrictlyAbove, AllNonEmpty)):
            return True
        raise UnsupportedFamily(f"no evaluator for {fam!r}")

    def is_strongly_exact_meet(self, fam: SymbolicFamily) -> bool:
        # Finite meets satisfy (x∧x')→y = x→(x'→y), so they pass.
        #   |S| ≥ 2: ℕ∖T → ℕ∖Y = ℕ∖Y for every T ⊊ S forces Y ∩ S = ∅, hence a→y = y;
        #            y = ∅ gives ∅ on both sides.
        #   meet ∅:  y = ∅ has x→∅ = ∅ for every nonempty x, but ∅→∅ = ℕ.
        if self._contains_meet(fam):
            return True
        if isinstance(fam, StrictlyAbove) and not fam.a.is_empty:
            return True
        if isinstance(fam, (StrictlyAbove, AllNonEmpty)):
            return False
        raise UnsupportedFamily(f"no evaluator for {fam!r}")

    def is_prime(self, p: Cof) -> bool:
        # ∅ is prime since nonempty cofinite sets intersect; ℕ∖S is prime iff |S| = 1
        return p.is_empty or len(p.missing) == 1

    def enumerate_primes(self, window: int | None = None) -> PrimeListing:
        w = self.window if window is None else window
        return PrimeListing(
            tuple(cof(n) for n in range(w)) + (EMPTY,),
            False,
            f"ℕ∖{{n}} for every n ≥ {w}",
        )

    def is_covered_prime(self, p: Cof) -> bool:
        # only ℕ lies strictly above ℕ∖{n}; above ∅ the meet collapses back to ∅
        self._require_prime(p)
        fam = StrictlyAbove(p)
        return self.meet_family(fam) != p or self._contains_meet(fam)

    def is_maximal_prime(self, p: Cof) -> bool:
        return not p.is_empty and len(p.missing) == 1

    def to_json(self) -> dict:
        return {"kind": "cofinite", "data": {"window": self.window}}


def frame_from_json(data: dict) -> FrameHandle:
    kind = data.get("kind")
    if kind == "finite":
        return FiniteFrame(FiniteLattice.from_json(data["data"]))
    if kind == "cofinite":
        return CofiniteFrame(data.get("data", {}).get("window", DEFAULT_WINDOW))
    raise InvalidStructure(f"unknown frame kind {kind!r}")


def element_to_json(L: FrameHandle, a) -> object:
    return a.to_json() if isinstance(L, CofiniteFrame) else a


def element_from_json(L: FrameHandle, data) -> object:
    if isinstance(L, CofiniteFrame):
        return Cof.from_json(data)
    if not isinstance(data, int) or not 0 <= data < L.n:
        raise InvalidStructure(f"element {data!r} out of range")
    return data


def powerset(items: Sequence) -> Iterator[tuple]:
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


__all__ = [
    "DEFAULT_WINDOW", "NatSet", "Cof", "EMPTY", "NAT", "cof", "FiniteFamily", "StrictlyAbove",
    "Above", "AllNonEmpty", "SymbolicFamily", "PrimeListing", "FrameHandle", "FiniteFrame",
    "CofiniteFrame", "frame_from_json", "element_to_json", "element_from_json",
]
