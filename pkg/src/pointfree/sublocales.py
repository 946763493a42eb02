"""Sublocales of a finite frame, stored as carrier bitmasks.

A carrier is a sublocale when it contains every meet of its members and every
``x → s`` with ``s`` in it.  The sublocales of L form a coframe S(L) under
inclusion: meets are intersections and the join of S and T is the smallest
sublocale containing ``S ∪ T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from ._bits import bits, full, mask_of, popcount, subsets
from .errors import SizeCapExceeded
from .filters import intersection_closure
from .order import FiniteLattice, FinitePoset

DEFAULT_CAP = 12


def _meet_close(L: FiniteLattice, mask: int) -> int:
    acc = mask | 1 << L.top
    frontier = list(bits(acc))
    while frontier:
        members = list(bits(acc))
        new = []
        for x in frontier:
            for y in members:
                m = L.meet(x, y)
                if not acc >> m & 1:
                    acc |= 1 << m
                    new.append(m)
        frontier = new
    return acc


def boolean_sl(L: FiniteLattice, a: int) -> int:
    """``{x → a : x ∈ L}``, the smallest sublocale containing a."""
    return mask_of(L.heyting(x, a) for x in range(L.n))


def open_sl(L: FiniteLattice, a: int) -> int:
    return mask_of(L.heyting(a, b) for b in range(L.n))


def closed_sl(L: FiniteLattice, a: int) -> int:
    return L.up[a]


def smallest_sublocale(L: FiniteLattice, X: int) -> int:
    """Meet-closure of ``{a → x : a ∈ L, x ∈ X}``."""
    acc = 0
    for x in bits(X):
        acc |= boolean_sl(L, x)
    return _meet_close(L, acc)


def is_sublocale(L: FiniteLattice, S: int) -> bool:
    if not S >> L.top & 1:
        return False
    members = list(bits(S))
    for s in members:
        for t in members:
            if not S >> L.meet(s, t) & 1:
                return False
        for x in range(L.n):
            if not S >> L.heyting(x, s) & 1:
                return False
    return True


def brute_force_sublocales(L: FiniteLattice) -> list[int]:
    """Every subset passing both closure conditions, by scanning all subsets containing 1."""
    rest = full(L.n) & ~(1 << L.top)
    found = [m | 1 << L.top for m in subsets(rest) if is_sublocale(L, m | 1 << L.top)]
    return sorted(found, key=lambda m: (popcount(m), m))


def next_closure(n: int, close) -> Iterator[int]:
    """All closed sets of a closure operator on range(n), in lectic order."""
    A = close(0)
    yield A
    everything = full(n)
    while A != everything:
        for i in range(n - 1, -1, -1):
            if A >> i & 1:
                continue
            below = (1 << i) - 1
            low = A & below
            B = close(low | 1 << i)
            if B & below == low:
                A = B
                yield A
                break
        else:
            return


def enumerate_sublocales(L: FiniteLattice, cap: int | None = DEFAULT_CAP) -> list[int]:
    """All sublocales of L, sorted by (size, carrier).  ``cap=None`` lifts the size limit."""
    if cap is not None and L.n > cap:
        raise SizeCapExceeded(f"frame has {L.n} elements, sublocale enumeration is capped at {cap}")
    found = list(next_closure(L.n, lambda m: smallest_sublocale(L, m)))
    return sorted(found, key=lambda m: (popcount(m), m))


def nucleus(L: FiniteLattice, S: int, x: int) -> int:
    """The surjection onto S: the least member of S above x."""
    return L.meet_mask(S & L.up[x])


def ker(L: FiniteLattice, S: int) -> int:
    """``{a : S ⊆ 𝔬(a)}`` as an extent."""
    return mask_of(a for a in range(L.n) if S & ~open_sl(L, a) == 0)


def coker(L: FiniteLattice, S: int) -> int:
    """``{a : 𝔠(a) ⊆ S}`` as an extent."""
    return mask_of(a for a in range(L.n) if L.up[a] & ~S == 0)


def as_frame(L: FiniteLattice, S: int) -> tuple[FiniteLattice, list[int]]:
    """The sublocale as a lattice in its own right, plus the element of L behind each id."""
    members = sorted(bits(S), key=lambda x: (popcount(L.down[x]), x))
    up = [mask_of(j for j, y in enumerate(members) if L.leq(x, y)) for x in members]
    return FiniteLattice(FinitePoset(up, [L.labels[x] for x in members])), members


def is_exact_sublocale(L: FiniteLattice, S: int) -> bool:
    """For each x, the elements y with 𝔠(y) ∩ S ⊆ 𝔠(x) must be closed under meets.

    Every meet in a finite frame is a finite, exact meet, so closure under binary
    meets (the empty meet 1 always qualifies) is the whole condition.
    """
    for x in range(L.n):
        good = mask_of(y for y in range(L.n) if L.up[y] & S & ~L.up[x] == 0)
        if _meet_close(L, good) != good:
            return False
    return True


def is_d_sublocale(L: FiniteLattice, S: int) -> bool:
    """Covered primes of S, viewed as a frame, are covered primes of L."""
    sub, members = as_frame(L, S)
    return all(L.is_prime(members[p]) and L.is_covered(members[p]) for p in sub.covered_primes())


@dataclass
class SublocaleLattice:
    """S(L) with cached join and meet tables."""

    L: FiniteLattice
    cap: int | None = DEFAULT_CAP
    carriers: list = field(init=False)

    def __post_init__(self):
        self.carriers = enumerate_sublocales(self.L, self.cap)
        self.index = {m: i for i, m in enumerate(self.carriers)}

    def __len__(self) -> int:
        return len(self.carriers)

    @property
    def bottom(self) -> int:
        return 1 << self.L.top

    @property
    def top(self) -> int:
        return full(self.L.n)

    def join(self, S: int, T: int) -> int:
        return self._join_table[self.index[S]][self.index[T]]

    def join_all(self, items: Iterable[int]) -> int:
        acc = self.bottom
        for S in items:
            acc = self.join(acc, S)
        return acc

    def meet(self, S: int, T: int) -> int:
        return S & T

    @cached_property
    def _join_table(self) -> list[list[int]]:
        L = self.L
        return [[smallest_sublocale(L, S | T) for T in self.carriers] for S in self.carriers]

    def join_by_intersection(self, S: int, T: int) -> int:
        """Join computed as the intersection of every sublocale containing both."""
        acc = self.top
        for U in self.carriers:
            if (S | T) & ~U == 0:
                acc &= U
        return acc

    def difference(self, S: int, T: int) -> int:
        """``S ∖ T``: the least U with ``S ⊆ T ∨ U``."""
        acc = self.top
        for U in self.carriers:
            if S & ~self.join(T, U) == 0:
                acc &= U
        return acc

    def complement(self, S: int) -> int | None:
        for T in self.carriers:
            if S & T == self.bottom and self.join(S, T) == self.top:
                return T
        return None

    def is_linear(self, S: int) -> bool:
        # families reduce to binary joins in a finite coframe; the empty join is trivial
        return all(
            self.join(X & S, Y & S) == self.join(X, Y) & S for X in self.carriers for Y in self.carriers
        )

    def is_join_prime(self, S: int) -> bool:
        """Completely join-prime: S is not the bottom and S ≤ T ∨ U forces S ≤ T or S ≤ U."""
        if S == self.bottom:
            return False
        for T in self.carriers:
            for U in self.carriers:
                if S & ~self.join(T, U) == 0 and S & ~T and S & ~U:
                    return False
        return True

    def is_coframe(self) -> bool:
        C = self.carriers
        return all(self.join(S, T & U) == self.join(S, T) & self.join(S, U) for S in C for T in C for U in C)

    @cached_property
    def fitted(self) -> list[int]:
        opens = [open_sl(self.L, a) for a in range(self.L.n)]
        return sorted(intersection_closure(self.top, opens), key=lambda m: (popcount(m), m))

    @cached_property
    def joins_of_closed(self) -> list[int]:
        closed = {closed_sl(self.L, a) for a in range(self.L.n)}
        out = {self.bottom} | closed
        frontier = list(out)
        while frontier:
            new = []
            for S in frontier:
                for T in list(out):
                    J = self.join(S, T)
                    if J not in out:
                        out.add(J)
                        new.append(J)
            frontier = new
        return sorted(out, key=lambda m: (popcount(m), m))

    @cached_property
    def exact(self) -> list[int]:
        return [S for S in self.carriers if is_exact_sublocale(self.L, S)]

    @cached_property
    def d_sublocales(self) -> list[int]:
        return [S for S in self.carriers if is_d_sublocale(self.L, S)]


def sublocale_to_json(L: FiniteLattice, S: int) -> dict:
    return {
        "carrier": S,
        "elements": [L.labels[x] for x in bits(S)],
        "exact": is_exact_sublocale(L, S),
        "d_sublocale": is_d_sublocale(L, S),
        "open": any(open_sl(L, a) == S for a in range(L.n)),
        "closed": any(closed_sl(L, a) == S for a in range(L.n)),
        "boolean": any(boolean_sl(L, a) == S for a in range(L.n)),
    }
