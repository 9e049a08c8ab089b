"""Finite abelian groups given by invariant factors, and their elements."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product
from typing import Iterator, Sequence

from .errors import BudgetExceeded, GroupMismatch, ParseError

DEFAULT_ELEMENT_BUDGET = 10**8


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def least_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError(f"{n} has no prime divisor")
    if n % 2 == 0:
        return 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """C_{n1} + ... + C_{nr} with n_r | ... | n_1, stored largest first.

    The constructor accepts the factors in any order and sorts them; a
    sequence that is not a divisibility chain is rejected, as is any factor
    equal to 1 (the empty tuple stands for the trivial group).
    """

    factors: tuple[int, ...]

    def __init__(self, factors: Sequence[int]):
        fs = tuple(sorted((int(f) for f in factors), reverse=True))
        for f in fs:
            if f < 2:
                raise ValueError(f"invariant factors must be >= 2, got {f}")
        for big, small in zip(fs, fs[1:]):
            if big % small:
                raise ValueError(f"{small} does not divide {big}: not an invariant-factor chain")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def parse(cls, text: str) -> "FiniteAbelianGroup":
        """Parse ``"C12xC4"`` (case- and whitespace-insensitive)."""
        s = re.sub(r"\s+", "", text).upper()
        if not s:
            raise ParseError("empty group presentation")
        parts = s.split("X")
        factors = []
        for part in parts:
            m = re.fullmatch(r"C(\d+)", part)
            if m is None:
                raise ParseError(f"bad cyclic factor {part!r} in {text!r}")
            factors.append(int(m.group(1)))
        try:
            return cls(factors)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def __str__(self) -> str:
        return "x".join(f"C{n}" for n in self.factors) or "C1"

    def rank(self) -> int:
        return len(self.factors)

    def exponent(self) -> int:
        return self.factors[0] if self.factors else 1

    def order(self) -> int:
        return math.prod(self.factors)

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank())

    def element(self, residues: Sequence[int]) -> "GroupElement":
        return GroupElement(self, residues)

    def parse_elements(self, text: str) -> list["GroupElement"]:
        """Parse ``"(1,1),(1,2)"`` into elements of this group."""
        s = re.sub(r"\s+", "", text)
        if not re.fullmatch(r"\(-?\d+(,-?\d+)*\)(,\(-?\d+(,-?\d+)*\))*", s):
            raise ParseError(f"bad element list {text!r}")
        out = []
        for body in re.findall(r"\(([^)]*)\)", s):
            res = [int(v) for v in body.split(",")]
            if len(res) != self.rank():
                raise ParseError(f"element ({body}) has {len(res)} coordinates, group rank is {self.rank()}")
            out.append(self.element(res))
        return out

    def elements(self, budget: int = DEFAULT_ELEMENT_BUDGET) -> list["GroupElement"]:
        return enumerate_elements(self, budget)

    def nonzero_elements(self, budget: int = DEFAULT_ELEMENT_BUDGET) -> list["GroupElement"]:
        return enumerate_elements(self, budget)[1:]


@dataclass(frozen=True, order=True)
class GroupElement:
    """Residue tuple, reduced modulo the invariant factors on construction."""

    group: FiniteAbelianGroup
    residues: tuple[int, ...]

    def __init__(self, group: FiniteAbelianGroup, residues: Sequence[int]):
        if len(residues) != group.rank():
            raise GroupMismatch(f"{len(residues)} residues for a rank-{group.rank()} group")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "residues", tuple(int(r) % n for r, n in zip(residues, group.factors)))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return add(self, other)

    def __neg__(self) -> "GroupElement":
        return scalar_mul(-1, self)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return add(self, -other)

    def __rmul__(self, c: int) -> "GroupElement":
        return scalar_mul(c, self)

    def is_identity(self) -> bool:
        return not any(self.residues)

    @cached_property
    def order(self) -> int:
        return order_of(self)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.residues)) + ")"

    def __repr__(self) -> str:
        return f"GroupElement{self}"


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.group != b.group:
        raise GroupMismatch(f"cannot add elements of {a.group} and {b.group}")
    return GroupElement(a.group, [x + y for x, y in zip(a.residues, b.residues)])


def scalar_mul(c: int, a: GroupElement) -> GroupElement:
    return GroupElement(a.group, [c * x for x in a.residues])


def order_of(a: GroupElement) -> int:
    return reduce(_lcm, (n // math.gcd(x, n) for x, n in zip(a.residues, a.group.factors)), 1)


def enumerate_elements(G: FiniteAbelianGroup, budget: int = DEFAULT_ELEMENT_BUDGET) -> list[GroupElement]:
    """All elements of G, lexicographic in the residue tuples."""
    if G.order() > budget:
        raise BudgetExceeded(f"|{G}| = {G.order()} exceeds the element budget {budget}")
    return [GroupElement(G, r) for r in product(*(range(n) for n in G.factors))]


def iter_multiples(a: GroupElement) -> Iterator[GroupElement]:
    """0, a, 2a, ... up to (ord(a)-1)a."""
    x = a.group.identity()
    for _ in range(a.order):
        yield x
        x = x + a
