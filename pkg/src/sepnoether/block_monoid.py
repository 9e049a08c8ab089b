"""Zero-sum multiplicity vectors over a tuple of group elements.

B(g_1, ..., g_k) is the monoid of non-negative integer vectors [m_1, ..., m_k]
with sum m_i g_i = 0.  Enumeration is exhaustive up to a length bound: the
first k-1 coordinates are looped over while the group sum is carried along,
and the last coordinate is read off from a discrete-log table of g_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import BudgetExceeded, GroupMismatch, NotZeroSum
from .group_core import FiniteAbelianGroup, GroupElement

DEFAULT_BUDGET = 10**8
_ADD_TABLE_LIMIT = 1024


class _Arith:
    """Group arithmetic on integer codes (mixed-radix residue encodings)."""

    def __init__(self, G: FiniteAbelianGroup):
        self.group = G
        self.size = G.order()
        self.strides = []
        s = 1
        for n in reversed(G.factors):
            self.strides.append(s)
            s *= n
        self.strides.reverse()
        self.table = None
        if self.size <= _ADD_TABLE_LIMIT:
            res = [self.decode(c) for c in range(self.size)]
            self.table = [[self._encode_raw([x + y for x, y in zip(ra, rb)]) for rb in res] for ra in res]
        self.neg = [self.encode(tuple(-r for r in self.decode(c))) for c in range(self.size)] if self.size <= _ADD_TABLE_LIMIT else None

    def _encode_raw(self, residues) -> int:
        return sum((r % n) * s for r, n, s in zip(residues, self.group.factors, self.strides))

    def encode(self, residues) -> int:
        return self._encode_raw(residues)

    def decode(self, code: int) -> tuple[int, ...]:
        return tuple((code // s) % n for s, n in zip(self.strides, self.group.factors))

    def add(self, a: int, b: int) -> int:
        if self.table is not None:
            return self.table[a][b]
        return self._encode_raw([x + y for x, y in zip(self.decode(a), self.decode(b))])

    def negate(self, a: int) -> int:
        if self.neg is not None:
            return self.neg[a]
        return self._encode_raw([-x for x in self.decode(a)])


@lru_cache(maxsize=64)
def _arith(G: FiniteAbelianGroup) -> _Arith:
    return _Arith(G)


@dataclass(frozen=True)
class ElementTuple:
    """An ordered tuple of distinct elements (g_1, ..., g_k) of one group."""

    group: FiniteAbelianGroup
    elements: tuple[GroupElement, ...]
    orders: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if not els:
            raise ValueError("an element tuple needs at least one element")
        for g in els:
            if g.group != self.group:
                raise GroupMismatch(f"element {g} is not in {self.group}")
        if len(set(els)) != len(els):
            raise ValueError("tuple elements must be pairwise distinct")
        object.__setattr__(self, "orders", tuple(g.order for g in els))

    @classmethod
    def of(cls, G: FiniteAbelianGroup, residues: Iterable[Sequence[int]]) -> "ElementTuple":
        return cls(G, tuple(G.element(r) for r in residues))

    @property
    def k(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def codes(self) -> list[int]:
        ar = _arith(self.group)
        return [ar.encode(g.residues) for g in self.elements]

    def negate(self) -> "ElementTuple":
        return ElementTuple(self.group, tuple(-g for g in self.elements))

    def permute(self, perm: Sequence[int]) -> "ElementTuple":
        return ElementTuple(self.group, tuple(self.elements[i] for i in perm))

    def sorted(self) -> "ElementTuple":
        return ElementTuple(self.group, tuple(sorted(self.elements)))

    def weighted_sum(self, coeffs: Sequence[int]) -> GroupElement:
        if len(coeffs) != self.k:
            raise ValueError(f"vector of width {len(coeffs)} for a {self.k}-element tuple")
        total = [0] * self.group.rank()
        for c, g in zip(coeffs, self.elements):
            for j, r in enumerate(g.residues):
                total[j] += c * r
        return self.group.element(total)

    def is_zero_sum(self, coeffs: Sequence[int]) -> bool:
        return self.weighted_sum(coeffs).is_identity()

    def atom_length_bound(self) -> int:
        """Every atom of B(T) has length at most this.

        An atom with m_i >= ord(g_i) contains ord(g_i) e_i and so equals it;
        otherwise each m_i < ord(g_i).
        """
        return max(max(self.orders), sum(o - 1 for o in self.orders))

    def to_json(self) -> list[list[int]]:
        return [list(g.residues) for g in self.elements]

    def __str__(self) -> str:
        return ",".join(str(g) for g in self.elements)


class ZsVector(tuple):
    """A zero-sum multiplicity vector: an element of B(T)."""

    def __new__(cls, T: ElementTuple, multiplicities: Sequence[int]):
        m = tuple(int(x) for x in multiplicities)
        if len(m) != T.k:
            raise ValueError(f"vector of width {len(m)} for a {T.k}-element tuple")
        if any(x < 0 for x in m):
            raise ValueError(f"multiplicities must be non-negative: {list(m)}")
        if not T.is_zero_sum(m):
            raise NotZeroSum(f"{list(m)} is not zero-sum over ({T}): sum is {T.weighted_sum(m)}")
        return tuple.__new__(cls, m)

    @classmethod
    def _trusted(cls, m: Iterable[int]) -> "ZsVector":
        return tuple.__new__(cls, m)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(self)

    def length(self) -> int:
        return sum(self)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self) if x)

    def __add__(self, other):
        return ZsVector._trusted(a + b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


def candidate_count(k: int, L: int) -> int:
    """Number of non-negative integer k-vectors of length at most L."""
    return math.comb(L + k, k)


def enumerate_up_to(T: ElementTuple, L: int, budget: int = DEFAULT_BUDGET) -> list[ZsVector]:
    """All nonzero elements of B(T) with length <= L, lexicographically."""
    return [ZsVector._trusted(m) for m in _enumerate(T, L, budget)]


def _enumerate(T: ElementTuple, L: int, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    if L < 0:
        raise ValueError("length bound must be non-negative")
    k = T.k
    if candidate_count(k, L) > budget:
        raise BudgetExceeded(
            f"C({L}+{k},{k}) = {candidate_count(k, L)} candidate vectors exceeds the budget {budget}"
        )
    ar = _arith(T.group)
    codes = T.codes()
    multiples = []
    for c, o in zip(codes, T.orders):
        row, x = [], 0
        for _ in range(o):
            row.append(x)
            x = ar.add(x, c)
        multiples.append(row)
    last_order = T.orders[-1]
    last_log = {code: t for t, code in enumerate(multiples[-1])}
    out: list[tuple[int, ...]] = []
    prefix = [0] * k

    def rec(i: int, remaining: int, partial: int) -> None:
        if i == k - 1:
            t = last_log.get(ar.negate(partial))
            if t is None:
                return
            for mk in range(t, remaining + 1, last_order):
                prefix[i] = mk
                out.append(tuple(prefix))
            return
        row, o = multiples[i], T.orders[i]
        for mi in range(remaining + 1):
            prefix[i] = mi
            rec(i + 1, remaining - mi, ar.add(partial, row[mi % o]))
        prefix[i] = 0

    rec(0, L, 0)
    if out and not any(out[0]):
        out.pop(0)
    return out


def is_atom(T: ElementTuple, m: Sequence[int]) -> bool:
    """True iff no nonzero proper sub-vector of m is zero-sum."""
    m = tuple(m)
    if not any(m) or not T.is_zero_sum(m):
        raise ValueError(f"{list(m)} is not a nonzero element of B({T})")
    ar = _arith(T.group)
    codes = T.codes()
    for u in product(*(range(x + 1) for x in m)):
        if u == m or not any(u):
            continue
        s = 0
        for c, ui, o in zip(codes, u, T.orders):
            for _ in range(ui % o):
                s = ar.add(s, c)
        if s == 0:
            return False
    return True


def minimal_elements(vectors: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Minimal nonzero vectors under the componentwise order, lexicographic.

    Applied to a downward-closed (up to the length cap) set of zero-sum
    vectors this yields exactly the atoms.
    """
    by_len = sorted((tuple(v) for v in vectors if any(v)), key=lambda v: (sum(v), v))
    mins: list[tuple[int, ...]] = []
    for v in by_len:
        if not any(all(a <= b for a, b in zip(u, v)) for u in mins):
            mins.append(v)
    return sorted(mins)


def atoms_up_to(T: ElementTuple, L: int, budget: int = DEFAULT_BUDGET) -> list[ZsVector]:
    """Atoms of B(T) with length <= L, lexicographically."""
    return [ZsVector._trusted(a) for a in minimal_elements(_enumerate(T, L, budget))]


def all_atoms(T: ElementTuple, budget: int = DEFAULT_BUDGET) -> list[ZsVector]:
    return atoms_up_to(T, T.atom_length_bound(), budget)


def decompose(atoms: Sequence[Sequence[int]], v: Sequence[int]) -> list[tuple[int, ...]] | None:
    """Write v as a sum of the given atoms (with repetition), or None."""
    v = tuple(v)
    if not any(v):
        return []
    for a in atoms:
        if all(x <= y for x, y in zip(a, v)) and any(a):
            rest = decompose(atoms, tuple(y - x for x, y in zip(a, v)))
            if rest is not None:
                return [tuple(a)] + rest
    return None


def embed(m: Sequence[int], position: int = 0) -> tuple[int, ...]:
    """Zero-padding of m into the monoid over a tuple with one extra element."""
    m = tuple(m)
    return m[:position] + (0,) + m[position:]


def davenport(G: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET) -> int:
    """Maximal length of an atom of B(G).

    A minimal zero-sum sequence is a zero-sum-free sequence followed by the
    negative of its sum, so D(G) = 1 + the longest zero-sum-free sequence.
    Those are searched depth-first over multisets, carrying the set of
    nonempty subsums.  The identity never occurs in a zero-sum-free sequence.
    """
    if G.rank() == 0:
        return 1
    ar = _arith(G)
    size = ar.size
    best = 0
    nodes = 0

    def dfs(start: int, length: int, sums: frozenset[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"zero-sum-free search on {G} exceeded {budget} nodes")
        best = max(best, length)
        for g in range(start, size):
            # S + g stays zero-sum free iff -g is not already a subsum
            if ar.negate(g) in sums:
                continue
            new = sums | {g} | {ar.add(s, g) for s in sums}
            dfs(g, length + 1, frozenset(new))

    dfs(1, 0, frozenset())
    return best + 1


def davenport_by_atoms(G: FiniteAbelianGroup, include_identity: bool = False,
                       budget: int = DEFAULT_BUDGET) -> int:
    """Brute-force D(G): the longest atom among all zero-sum vectors of length <= |G|."""
    els = G.elements(budget) if include_identity else G.nonzero_elements(budget)
    T = ElementTuple(G, tuple(els))
    return max(sum(a) for a in atoms_up_to(T, G.order(), budget))


def davenport_formula(G: FiniteAbelianGroup) -> int | None:
    """Known closed form: 1 + sum(n_i - 1) for rank <= 2 and for p-groups."""
    if G.rank() <= 2 or _is_p_group(G.order()):
        return 1 + sum(n - 1 for n in G.factors)
    return None


def _is_p_group(order: int) -> bool:
    if order < 2:
        return True
    p = 2
    while order % p:
        p += 1
    while order % p == 0:
        order //= p
    return order == 1
