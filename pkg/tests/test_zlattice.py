import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sepnoether.zlattice import combine, contains, extend, normal_form, witness


def box_oracle(rows, v, bound=20):
    """Search lambda in [-bound, bound]^rows with sum lambda_i row_i = v.

    Meet in the middle over the two halves of the rows; returns a
    certificate or None (None does not prove non-membership).
    """
    width = len(v)
    half = len(rows) // 2
    left, right = rows[:half], rows[half:]
    rng = range(-bound, bound + 1)
    table = {}
    for lam in product(rng, repeat=len(right)):
        table.setdefault(combine(lam, right, width), lam)
    for lam in product(rng, repeat=len(left)):
        s = combine(lam, left, width)
        need = tuple(a - b for a, b in zip(v, s))
        if need in table:
            return list(lam) + list(table[need])
    return None


def random_matrix(rng, max_rows=4, max_cols=4, lo=-5, hi=5):
    r, c = rng.randint(1, max_rows), rng.randint(1, max_cols)
    return [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)]


def is_hnf(L):
    prev = -1
    for row, c in zip(L.basis, L.pivots):
        assert c > prev and all(x == 0 for x in row[:c]) and row[c] > 0
        prev = c
    for i, (row, c) in enumerate(zip(L.basis, L.pivots)):
        for above in L.basis[:i]:
            assert 0 <= above[c] < row[c]
    return True


def test_identity():
    L = normal_form([[1, 0], [0, 1]])
    assert L.basis == ((1, 0), (0, 1))


def test_generators_of_z2():
    # (2,0) - 2(1,1) = (0,-2); gcd(3,-2) = 1 gives (0,1); then (1,0)
    assert normal_form([[2, 0], [0, 3], [1, 1]]).basis == ((1, 0), (0, 1))


def test_example_lattice():
    rows = [[2, 4, 4], [4, 0, 4]]
    L = normal_form(rows)
    assert L.rank == 2
    assert contains(L, (0, 8, 4))
    assert witness(L, (0, 8, 4)) == [2, -1]


def test_membership_examples():
    L = normal_form([[2, 0], [0, 3]])
    assert contains(L, (0, 0))
    assert not contains(L, (1, 0))
    assert witness(normal_form([[3, 0, 0], [0, 3, 0], [0, 0, 3]]), (1, 1, 1)) is None


def test_empty_and_zero_rows():
    L = normal_form([], width=3)
    assert L.rank == 0 and contains(L, (0, 0, 0)) and not contains(L, (0, 1, 0))
    L = normal_form([[0, 0], [0, 2], [0, 0]])
    assert L.basis == ((0, 2),)
    assert witness(L, (0, 4)) == [0, 2, 0]
    with pytest.raises(ValueError):
        normal_form([])


def test_width_mismatch():
    L = normal_form([[1, 2]])
    with pytest.raises(ValueError):
        contains(L, (1, 2, 3))


def test_first_row_witness():
    rng = random.Random(7)
    for _ in range(50):
        M = random_matrix(rng)
        lam = witness(normal_form(M), M[0])
        assert lam is not None and combine(lam, M, len(M[0])) == tuple(M[0])


def test_big_entries_stay_exact():
    M = [[10**40 + 1, 3], [10**40, 7], [5, 10**30]]
    L = normal_form(M)
    for r in M:
        assert combine(witness(L, r), M, 2) == tuple(r)


def test_extend_matches_fresh_normal_form():
    rng = random.Random(3)
    for _ in range(100):
        A, B = random_matrix(rng, max_cols=3), None
        B = [[rng.randint(-5, 5) for _ in A[0]] for _ in range(rng.randint(1, 3))]
        assert extend(normal_form(A), B).basis == normal_form(A + B).basis


def test_canonical_form_under_row_operations():
    rng = random.Random(20240601)
    for _ in range(200):
        M = random_matrix(rng)
        L = normal_form(M)
        assert is_hnf(L)
        shuffled = M[:]
        rng.shuffle(shuffled)
        assert normal_form(shuffled).basis == L.basis
        if len(M) >= 2:
            i, j = rng.sample(range(len(M)), 2)
            c = rng.randint(-4, 4)
            op = [r[:] for r in M]
            op[i] = [a + c * b for a, b in zip(op[i], op[j])]
            assert normal_form(op).basis == L.basis
        for r in M:
            assert contains(L, r)


def test_agreement_with_box_oracle():
    rng = random.Random(12345)
    checked_pos = 0
    for t in range(500):
        M = random_matrix(rng)
        width = len(M[0])
        if t % 2:
            lam = [rng.randint(-3, 3) for _ in M]
            v = combine(lam, M, width)
        else:
            v = tuple(rng.randint(-6, 6) for _ in range(width))
        L = normal_form(M)
        cert = box_oracle(M, v)
        w = witness(L, v)
        if cert is not None:
            assert combine(cert, M, width) == tuple(v)
            assert w is not None
            checked_pos += 1
        if w is not None:
            assert combine(w, M, width) == tuple(v)
        else:
            assert not contains(L, v)
    assert checked_pos > 200


@settings(max_examples=150, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=5),
       st.lists(st.integers(-4, 4), min_size=5, max_size=5))
def test_combinations_are_members(rows, coeffs):
    v = combine(coeffs, rows, 3)
    L = normal_form(rows)
    w = witness(L, v)
    assert w is not None and combine(w, rows, 3) == v


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=2, max_size=4))
def test_full_rank_index_is_gcd_of_minors(rows):
    # index of a full-rank lattice in Z^2 equals the gcd of its 2x2 minors
    from math import gcd
    L = normal_form(rows)
    g = 0
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            g = gcd(g, rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0])
    if g == 0:
        assert L.index() is None
    else:
        assert L.index() == g
