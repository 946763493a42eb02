"""Finite posets and finite (distributive) lattices.

Elements are the dense integers ``0..n-1``.  Order relations are stored as
bitmask rows: ``up[i]`` has bit ``j`` set iff ``i <= j``.  Every structure is
validated eagerly when built and never mutated afterwards.
"""

from __future__ import annotations

import json
from functools import reduce
from typing import Iterable, Sequence

from ._bits import bits, full, mask_of, popcount
from .errors import InvalidStructure


class FinitePoset:
    """A finite partial order on ``range(n)``."""

    def __init__(self, up: Sequence[int], labels: Sequence[str] | None = None):
        self.n = len(up)
        self.up = tuple(up)
        if labels is not None and len(labels) != self.n:
            raise InvalidStructure("label count does not match element count")
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.n))
        self._validate()
        self.down = tuple(mask_of(i for i in range(self.n) if self.up[i] >> j & 1) for j in range(self.n))

    def _validate(self) -> None:
        n, up = self.n, self.up
        for i in range(n):
            if up[i] >> n:
                raise InvalidStructure(f"row {i} mentions elements outside range({n})")
            if not up[i] >> i & 1:
                raise InvalidStructure(f"not reflexive at {i}")
            for j in bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise InvalidStructure(f"not antisymmetric: {i} <= {j} <= {i}")
                if up[j] & ~up[i]:
                    raise InvalidStructure(f"not transitive through {i} <= {j}")

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]], labels=None) -> "FinitePoset":
        """Reflexive-transitive closure of the given ``(i, j)`` pairs meaning ``i <= j``."""
        up = [1 << i for i in range(n)]
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidStructure(f"pair ({i}, {j}) out of range")
            up[i] |= 1 << j
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in bits(up[i]):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        return cls(up, labels)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int | bool]], labels=None) -> "FinitePoset":
        return cls([mask_of(j for j, v in enumerate(row) if v) for row in matrix], labels)

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls([full(n) & ~full(i) for i in range(n)])

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls([1 << i for i in range(n)])

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``i < j`` and nothing strictly between."""
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            for j in bits(strict):
                if not any(k != j and self.up[k] >> j & 1 for k in bits(strict)):
                    out.append((i, j))
        return out

    def matrix(self) -> list[list[int]]:
        return [[self.up[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def is_upset(self, mask: int) -> bool:
        return all(self.up[i] & ~mask == 0 for i in bits(mask))

    def is_downset(self, mask: int) -> bool:
        return all(self.down[i] & ~mask == 0 for i in bits(mask))

    def linear_extension(self) -> list[int]:
        return sorted(range(self.n), key=lambda i: (popcount(self.down[i]), i))

    def downsets(self) -> list[int]:
        """Every down-closed subset, as bitmasks, by a branch-per-element search."""
        order = self.linear_extension()
        out: list[int] = []

        def go(k: int, acc: int) -> None:
            if k == len(order):
                out.append(acc)
                return
            x = order[k]
            go(k + 1, acc)
            if self.down[x] & ~(1 << x) & ~acc == 0:
                go(k + 1, acc | 1 << x)

        go(0, 0)
        return out

    def upsets(self) -> list[int]:
        dual = FinitePoset(self.down)
        return dual.downsets()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FinitePoset) and self.up == other.up

    def __hash__(self) -> int:
        return hash(self.up)

    def __repr__(self) -> str:
        return f"FinitePoset(n={self.n}, covers={self.covers()})"


def parse_poset_text(text: str) -> FinitePoset:
    """Parse ``n`` on the first line followed by ``i < j`` cover lines."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidStructure("empty poset description")
    n = int(lines[0])
    pairs = []
    for ln in lines[1:]:
        left, sep, right = ln.partition("<")
        if not sep:
            raise InvalidStructure(f"cannot parse relation line {ln!r}")
        pairs.append((int(left), int(right)))
    return FinitePoset.from_relation(n, pairs)


def poset_to_text(P: FinitePoset) -> str:
    return "\n".join([str(P.n)] + [f"{i} < {j}" for i, j in P.covers()]) + "\n"


class FiniteLattice:
    """A finite lattice with precomputed meet, join and (when it exists) Heyting tables."""

    def __init__(self, poset: FinitePoset):
        self.poset = poset
        self.n = n = poset.n
        if n == 0:
            raise InvalidStructure("a lattice needs at least one element")
        self.labels = poset.labels
        up, down = poset.up, poset.down
        self.up, self.down = up, down
        self.meet_table = tuple(tuple(self._extremum(down[a] & down[b], down) for b in range(n)) for a in range(n))
        self.join_table = tuple(tuple(self._extremum(up[a] & up[b], up) for b in range(n)) for a in range(n))
        self.bottom = self._extremum(full(n), up)
        self.top = self._extremum(full(n), down)
        self.distributive = all(
            self.meet_table[a][self.join_table[b][c]]
            == self.join_table[self.meet_table[a][b]][self.meet_table[a][c]]
            for a in range(n)
            for b in range(n)
            for c in range(n)
        )
        self.heyting_table = self._heyting_table()

    def _extremum(self, bounds: int, rows: Sequence[int]) -> int:
        # the member of `bounds` whose row covers all of `bounds`: with down rows
        # that is the greatest member, with up rows the least
        for m in bits(bounds):
            if rows[m] & bounds == bounds:
                return m
        raise InvalidStructure("not a lattice: a bound set has no extremum")

    def _heyting_table(self):
        n = self.n
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                sol = mask_of(x for x in range(n) if self.down[b] >> self.meet_table[x][a] & 1)
                top = next((m for m in bits(sol) if self.down[m] & sol == sol), None)
                if top is None:
                    if self.distributive:
                        raise InvalidStructure("distributive lattice without relative pseudocomplement")
                    return None
                row.append(top)
            table.append(tuple(row))
        return tuple(table)

    # order and operations

    def __len__(self) -> int:
        return self.n

    def elements(self) -> range:
        return range(self.n)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet_all(self, items: Iterable[int]) -> int:
        return reduce(self.meet, items, self.top)

    def join_all(self, items: Iterable[int]) -> int:
        return reduce(self.join, items, self.bottom)

    def meet_mask(self, mask: int) -> int:
        return self.meet_all(bits(mask))

    def join_mask(self, mask: int) -> int:
        return self.join_all(bits(mask))

    def heyting(self, a: int, b: int) -> int:
        if self.heyting_table is None:
            raise InvalidStructure("lattice is not Heyting (not distributive)")
        return self.heyting_table[a][b]

    def strictly_above(self, a: int) -> int:
        return self.up[a] & ~(1 << a)

    def is_prime(self, p: int) -> bool:
        if p == self.top:
            return False
        below = self.down[p]
        for x in range(self.n):
            if below >> x & 1:
                continue
            for y in range(self.n):
                if not below >> y & 1 and below >> self.meet(x, y) & 1:
                    return False
        return True

    def primes(self) -> frozenset[int]:
        return frozenset(p for p in range(self.n) if self.is_prime(p))

    def is_covered(self, p: int) -> bool:
        # the meet of everything strictly above p is the worst-case family
        return self.meet_mask(self.strictly_above(p)) != p

    def covered_primes(self) -> frozenset[int]:
        return frozenset(p for p in self.primes() if self.is_covered(p))

    def is_maximal_prime(self, p: int) -> bool:
        return self.is_prime(p) and self.strictly_above(p) == 1 << self.top

    def complement(self, a: int) -> int | None:
        for b in range(self.n):
            if self.meet(a, b) == self.bottom and self.join(a, b) == self.top:
                return b
        return None

    def is_boolean(self) -> bool:
        return self.distributive and all(self.complement(a) is not None for a in range(self.n))

    def label(self, a: int) -> str:
        return self.labels[a]

    def to_json(self) -> dict:
        data = {
            "elements": list(self.labels),
            "leq_matrix": self.poset.matrix(),
            "tables": {
                "meet": [list(r) for r in self.meet_table],
                "join": [list(r) for r in self.join_table],
            },
        }
        if self.heyting_table is not None:
            data["tables"]["heyting"] = [list(r) for r in self.heyting_table]
        return data

    @classmethod
    def from_json(cls, data: dict) -> "FiniteLattice":
        L = cls(FinitePoset.from_matrix(data["leq_matrix"], data.get("elements")))
        tables = data.get("tables", {})
        for name, mine in (("meet", L.meet_table), ("join", L.join_table), ("heyting", L.heyting_table)):
            if name in tables and [list(r) for r in mine] != tables[name]:
                raise InvalidStructure(f"{name} table disagrees with leq_matrix")
        return L

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteLattice) and self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)

    def __repr__(self) -> str:
        return f"FiniteLattice(n={self.n}, distributive={self.distributive})"


def heyting(L: FiniteLattice, a: int, b: int) -> int:
    """Relative pseudocomplement: the largest x with x ∧ a ≤ b."""
    return L.heyting(a, b)


def primes(L: FiniteLattice) -> frozenset[int]:
    return L.primes()


def covered_primes(L: FiniteLattice) -> frozenset[int]:
    return L.covered_primes()


def _mask_label(mask: int, names: Sequence[str]) -> str:
    if not mask:
        return "∅"
    return "{" + ",".join(names[i] for i in bits(mask)) + "}"


def lattice_of_sets(masks: Iterable[int], names: Sequence[str]) -> tuple[FiniteLattice, list[int]]:
    """The lattice of the given subsets of ``names`` ordered by inclusion.

    Returns the lattice together with the mask carried by each element id.
    Ids follow ``(size, mask)`` order, which is a linear extension.
    """
    ms = sorted(set(masks), key=lambda m: (popcount(m), m))
    up = [mask_of(j for j, other in enumerate(ms) if m & ~other == 0) for m in ms]
    labels = [_mask_label(m, names) for m in ms]
    return FiniteLattice(FinitePoset(up, labels)), ms


def downset_lattice(P: FinitePoset) -> FiniteLattice:
    """Down-closed subsets of P under inclusion (always distributive)."""
    L, masks = lattice_of_sets(P.downsets(), P.labels)
    L.carriers = tuple(masks)
    return L


def chain(n: int) -> FiniteLattice:
    """The n-element chain, built as the downset lattice of an (n-1)-chain."""
    if n < 1:
        raise InvalidStructure("chain needs at least one element")
    if n == 1:
        return FiniteLattice(FinitePoset([1]))
    return downset_lattice(FinitePoset.chain(n - 1))


def boolean_lattice(k: int) -> FiniteLattice:
    return downset_lattice(FinitePoset.antichain(k))


def dump_lattice(L: FiniteLattice) -> str:
    return json.dumps(L.to_json(), sort_keys=True)
