"""Group atoms: monoid elements outside the Z-span of all shorter elements.

Every element of B(T) is a sum of atoms of no greater length, so the
Z-span of the elements shorter than |m| equals the Z-span of the atoms
shorter than |m|.  Only atoms are therefore fed to the lattice engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import zlattice
from .block_monoid import DEFAULT_BUDGET, ElementTuple, ZsVector, _arith, atoms_up_to
from .errors import NotZeroSum


@dataclass(frozen=True)
class GroupAtomVerdict:
    tuple: ElementTuple
    vector: ZsVector
    is_group_atom: bool
    # false verdicts: vector == sum(coeffs[i] * generators[i]), each generator shorter
    coeffs: tuple[int, ...] | None = None
    generators: tuple[tuple[int, ...], ...] | None = None
    # true verdicts: canonical basis of the span of the shorter elements
    lattice_basis: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.is_group_atom:
            if self.lattice_basis is None:
                raise ValueError("a group-atom verdict needs its lattice record")
            return
        if self.coeffs is None or self.generators is None:
            raise ValueError("a non-group-atom verdict needs a witness")
        length = sum(self.vector)
        for q in self.generators:
            if not 0 < sum(q) < length:
                raise AssertionError(f"witness generator {list(q)} is not shorter than {list(self.vector)}")
            if not self.tuple.is_zero_sum(q) or min(q) < 0:
                raise AssertionError(f"witness generator {list(q)} is not in the monoid")
        if zlattice.combine(self.coeffs, self.generators, self.tuple.k) != tuple(self.vector):
            raise AssertionError(f"witness does not reproduce {list(self.vector)}")

    @property
    def length(self) -> int:
        return sum(self.vector)

    def to_json(self) -> dict:
        witness = None
        if not self.is_group_atom:
            witness = {"coeffs": list(self.coeffs), "generators": [list(q) for q in self.generators]}
        return {
            "tuple": self.tuple.to_json(),
            "vector": list(self.vector),
            "group_atom": self.is_group_atom,
            "witness": witness,
            "lattice_basis": None if self.lattice_basis is None else [list(b) for b in self.lattice_basis],
        }

    def describe_witness(self) -> str:
        if self.is_group_atom:
            return "no shorter integral combination"
        terms = []
        for c, q in zip(self.coeffs, self.generators):
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {abs(c)}*[{','.join(map(str, q))}]")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def subgroup_order(T: ElementTuple) -> int:
    """|<g_1, ..., g_k>|, which is also the index of G(T) in Z^k."""
    ar = _arith(T.group)
    seen = {0}
    frontier = [0]
    codes = T.codes()
    while frontier:
        nxt = []
        for x in frontier:
            for c in codes:
                y = ar.add(x, c)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


class GroupAtomSearch:
    """Group-atom verdicts for one tuple, sharing lattices across lengths.

    ``limit`` caps the atom enumeration; verdicts are available for vectors
    of length up to ``limit + 1`` (or any length once the shorter atoms
    already span all of G(T)).
    """

    def __init__(self, T: ElementTuple, limit: int | None = None, budget: int = DEFAULT_BUDGET):
        self.T = T
        self.limit = T.atom_length_bound() if limit is None else limit
        self.atoms = atoms_up_to(T, self.limit, budget)
        self.full_index = subgroup_order(T)
        self._by_length: dict[int, list[ZsVector]] = {}
        for a in self.atoms:
            self._by_length.setdefault(a.length(), []).append(a)
        self._levels = sorted(self._by_length)
        self._cache: dict[int, zlattice.IntLattice] = {}
        self._built_to = 0
        self._current = zlattice.normal_form([], width=T.k)
        self.saturated_at: int | None = None

    def lattice_below(self, length: int) -> zlattice.IntLattice:
        """Lattice spanned by the atoms of length < ``length``."""
        if self.saturated_at is not None and length >= self.saturated_at:
            return self._current
        if length - 1 > self.limit:
            raise ValueError(f"atoms were only enumerated up to length {self.limit}")
        if length in self._cache:
            return self._cache[length]
        while self._built_to < length - 1 and self.saturated_at is None:
            self._built_to += 1
            rows = self._by_length.get(self._built_to)
            if rows:
                self._current = zlattice.extend(self._current, rows)
                if self._current.index() == self.full_index:
                    self.saturated_at = self._built_to + 1
            self._cache[self._built_to + 1] = self._current
        return self._current

    def verdict(self, m: Sequence[int]) -> GroupAtomVerdict:
        m = ZsVector(self.T, m)
        if not any(m):
            raise ValueError("the zero vector is excluded from group-atom questions")
        lat = self.lattice_below(m.length())
        lam = zlattice.witness(lat, m)
        if lam is None:
            return GroupAtomVerdict(self.T, m, True, lattice_basis=lat.basis)
        pairs = [(c, g) for c, g in zip(lam, lat.generators) if c]
        return GroupAtomVerdict(
            self.T, m, False,
            coeffs=tuple(c for c, _ in pairs),
            generators=tuple(tuple(g) for _, g in pairs),
        )

    def is_group_atom(self, m: Sequence[int]) -> bool:
        """Bare decision without building a certificate record."""
        return not zlattice.contains(self.lattice_below(sum(m)), m)

    def group_atoms(self) -> list[GroupAtomVerdict]:
        """All group atoms of length <= limit, lexicographically.

        Atoms at or beyond the saturation length lie in the span of shorter
        ones and are skipped without a lattice query.
        """
        out = []
        for length in self._levels:
            lat = self.lattice_below(length)
            if self.saturated_at is not None and length >= self.saturated_at:
                break
            for a in self._by_length[length]:
                if not zlattice.contains(lat, a):
                    out.append(GroupAtomVerdict(self.T, a, True, lattice_basis=lat.basis))
        return sorted(out, key=lambda v: tuple(v.vector))


def is_group_atom(T: ElementTuple, m: Sequence[int], budget: int = DEFAULT_BUDGET) -> GroupAtomVerdict:
    m = tuple(m)
    if not any(m):
        raise ValueError("the zero vector is excluded from group-atom questions")
    if not T.is_zero_sum(m):
        raise NotZeroSum(f"{list(m)} is not zero-sum over ({T})")
    return GroupAtomSearch(T, limit=max(sum(m) - 1, 0), budget=budget).verdict(m)


def search_bound(T: ElementTuple) -> int:
    """Length beyond which no group atom of B(T) exists.

    Group atoms longer than every ord(g_i) satisfy 2|m| <= sum ord(g_i).
    """
    return max(max(T.orders), sum(T.orders) // 2)


def max_group_atom_length(T: ElementTuple, budget: int = DEFAULT_BUDGET) -> tuple[int, list[GroupAtomVerdict]]:
    """Maximal group-atom length of B(T) and every group atom attaining it."""
    found = GroupAtomSearch(T, limit=search_bound(T), budget=budget).group_atoms()
    best = max(v.length for v in found)
    return best, [v for v in found if v.length == best]
