"""Test corpus: posets up to isomorphism, their downset frames, and small finite spaces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from ._bits import bits, full, mask_of, popcount, subsets
from .order import FiniteLattice, FinitePoset, downset_lattice

MAX_POINTS = 6


def _relabel(P: FinitePoset, perm: tuple[int, ...]) -> tuple[int, ...]:
    # perm[old] = new
    up = [0] * P.n
    for old in range(P.n):
        up[perm[old]] = mask_of(perm[j] for j in bits(P.up[old]))
    return tuple(up)


def canonical_form(P: FinitePoset) -> tuple[int, ...]:
    """Least up-row encoding over relabellings that respect a degree invariant.

    Points are grouped by (|↓x|, |↑x|), which any isomorphism preserves, so only
    permutations inside each group need to be tried.
    """
    inv = {x: (popcount(P.down[x]), popcount(P.up[x])) for x in range(P.n)}
    groups: dict = {}
    for x in sorted(range(P.n), key=lambda x: (inv[x], x)):
        groups.setdefault(inv[x], []).append(x)
    blocks = [groups[k] for k in sorted(groups)]
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [x for block in choice for x in block]
        perm = [0] * P.n
        for new, old in enumerate(order):
            perm[old] = new
        code = _relabel(P, tuple(perm))
        if best is None or code < best:
            best = code
    return best


@lru_cache(maxsize=None)
def posets_of_size(n: int) -> tuple[FinitePoset, ...]:
    """One poset per isomorphism class on n points, in canonical form.

    Each n-point poset arises from an (n-1)-point one by adding a maximal point
    above one of its downsets.
    """
    if n == 0:
        return (FinitePoset([]),)
    seen = set()
    for Q in posets_of_size(n - 1):
        for D in Q.downsets():
            up = [Q.up[i] | (1 << (n - 1) if D >> i & 1 else 0) for i in range(n - 1)]
            up.append(1 << (n - 1))
            seen.add(canonical_form(FinitePoset(up)))
    return tuple(FinitePoset(code) for code in sorted(seen))


def posets_up_to(max_points: int) -> list[FinitePoset]:
    return [P for n in range(1, max_points + 1) for P in posets_of_size(n)]


@dataclass(frozen=True)
class CorpusFrame:
    """A corpus entry: its index, the poset it comes from and the downset frame."""

    index: int
    poset: FinitePoset
    lattice: FiniteLattice

    @property
    def name(self) -> str:
        covers = ",".join(f"{i}<{j}" for i, j in self.poset.covers())
        return f"P{self.index}[n={self.poset.n};{covers}]"


@lru_cache(maxsize=None)
def corpus_frames(max_points: int = 5) -> tuple[CorpusFrame, ...]:
    return tuple(CorpusFrame(i, P, downset_lattice(P)) for i, P in enumerate(posets_up_to(max_points)))


def is_topology(n: int, opens: frozenset[int]) -> bool:
    if 0 not in opens or full(n) not in opens:
        return False
    return all(a | b in opens and a & b in opens for a in opens for b in opens)


@lru_cache(maxsize=None)
def topologies(n: int) -> tuple[frozenset, ...]:
    """Every topology on ``range(n)``, labelled, by brute force over open families."""
    everything = full(n)
    middle = [m for m in range(1, everything)]
    out = []
    for pick in subsets(full(len(middle))):
        opens = frozenset([0, everything] + [middle[i] for i in bits(pick)])
        if is_topology(n, opens):
            out.append(opens)
    return tuple(sorted(out, key=lambda s: (len(s), sorted(s))))
