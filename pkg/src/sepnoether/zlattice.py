"""Integer row lattices in Hermite normal form, with membership witnesses.

The canonical form of the Z-row-span of a matrix is its row Hermite form:
nonzero rows in echelon shape, positive pivots, and every entry above a
pivot reduced into [0, pivot).  It is unique for a given span, so two
generating sets span the same lattice iff their bases compare equal.

A transform matrix is carried along so that each basis row is an explicit
integer combination of the original generators; membership witnesses are
read off through it and re-checked by multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntLattice:
    width: int
    generators: tuple[Vector, ...]
    basis: tuple[Vector, ...]
    transform: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def index(self) -> int | None:
        """[Z^width : L] for a full-rank lattice, else None."""
        if self.rank != self.width:
            return None
        out = 1
        for row, c in zip(self.basis, self.pivots):
            out *= row[c]
        return out

    def __contains__(self, v: Sequence[int]) -> bool:
        return contains(self, v)


def _nearest_quotient(a: int, b: int) -> int:
    # quotient with minimal absolute remainder
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def _hnf(rows: list[list[int]], trans: list[list[int]], width: int):
    A = [r[:] for r in rows]
    U = [t[:] for t in trans]

    def sub(i: int, p: int, q: int) -> None:
        if q:
            A[i] = [x - q * y for x, y in zip(A[i], A[p])]
            U[i] = [x - q * y for x, y in zip(U[i], U[p])]

    m = len(A)
    p = 0
    pivots = []
    for col in range(width):
        if p == m:
            break
        while True:
            live = [i for i in range(p, m) if A[i][col]]
            if not live:
                break
            i0 = min(live, key=lambda i: (abs(A[i][col]), i))
            A[p], A[i0] = A[i0], A[p]
            U[p], U[i0] = U[i0], U[p]
            clean = True
            for i in range(p + 1, m):
                if A[i][col]:
                    sub(i, p, _nearest_quotient(A[i][col], A[p][col]))
                    clean = clean and not A[i][col]
            if clean:
                break
        if p < m and A[p][col]:
            if A[p][col] < 0:
                A[p] = [-x for x in A[p]]
                U[p] = [-x for x in U[p]]
            for i in range(p):
                sub(i, p, A[i][col] // A[p][col])
            pivots.append(col)
            p += 1
    return A[:p], U[:p], pivots


def normal_form(M: Sequence[Sequence[int]], width: int | None = None) -> IntLattice:
    """Canonical basis of the Z-row-span of M, with a transform certificate.

    ``width`` is only needed when M is empty.
    """
    gens = tuple(tuple(int(x) for x in r) for r in M)
    if width is None:
        if not gens:
            raise ValueError("width is required for an empty matrix")
        width = len(gens[0])
    if any(len(r) != width for r in gens):
        raise ValueError("matrix rows must all have the same width")
    n = len(gens)
    live = [i for i, r in enumerate(gens) if any(r)]
    rows = [list(gens[i]) for i in live]
    trans = [[1 if j == i else 0 for j in range(n)] for i in live]
    basis, U, pivots = _hnf(rows, trans, width)
    return IntLattice(width, gens, tuple(map(tuple, basis)), tuple(map(tuple, U)), tuple(pivots))


def extend(L: IntLattice, new_rows: Sequence[Sequence[int]]) -> IntLattice:
    """Normal form of the span of L's generators plus new_rows.

    Reduces from L's basis rather than from scratch; the canonical form
    makes the result identical to a fresh ``normal_form`` call.
    """
    new = tuple(tuple(int(x) for x in r) for r in new_rows)
    if any(len(r) != L.width for r in new):
        raise ValueError("row width mismatch")
    n0, n1 = len(L.generators), len(new)
    rows = [list(b) for b in L.basis]
    trans = [list(t) + [0] * n1 for t in L.transform]
    for j, r in enumerate(new):
        if any(r):
            rows.append(list(r))
            trans.append([0] * n0 + [1 if i == j else 0 for i in range(n1)])
    basis, U, pivots = _hnf(rows, trans, L.width)
    return IntLattice(L.width, L.generators + new, tuple(map(tuple, basis)), tuple(map(tuple, U)), tuple(pivots))


def _reduce(L: IntLattice, v: Sequence[int]) -> list[int] | None:
    """Coefficients of v over the basis, or None if v is not in the span."""
    if len(v) != L.width:
        raise ValueError(f"vector of width {len(v)} against a lattice of width {L.width}")
    r = [int(x) for x in v]
    coeffs = []
    col = 0
    for row, c in zip(L.basis, L.pivots):
        if any(r[col:c]):
            return None
        q, rem = divmod(r[c], row[c])
        if rem:
            return None
        if q:
            r = [x - q * y for x, y in zip(r, row)]
        coeffs.append(q)
        col = c + 1
    if any(r):
        return None
    return coeffs


def contains(L: IntLattice, v: Sequence[int]) -> bool:
    return _reduce(L, v) is not None


def combine(coeffs: Sequence[int], rows: Sequence[Sequence[int]], width: int) -> Vector:
    out = [0] * width
    for c, row in zip(coeffs, rows):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return tuple(out)


def witness(L: IntLattice, v: Sequence[int]) -> list[int] | None:
    """Integer coefficients over the original generators summing to v.

    Returns None when v is not a member.  A returned witness has already
    been re-multiplied and compared against v.
    """
    q = _reduce(L, v)
    if q is None:
        return None
    lam = list(combine(q, L.transform, len(L.generators)))
    if combine(lam, L.generators, L.width) != tuple(v):
        raise AssertionError(f"witness re-multiplication failed for {list(v)}")
    return lam
