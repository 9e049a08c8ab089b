from collections import Counter
from itertools import combinations

import pytest

from sepnoether.block_monoid import ElementTuple, enumerate_up_to
from sepnoether.group_atom import GroupAtomSearch
from sepnoether.group_core import FiniteAbelianGroup
from sepnoether.theory_checks import (
    TheoryCheckReport,
    case_bound_twice,
    check_case_theorem,
    check_kappa_lemma,
    check_length_bound,
    check_lower_bound,
    check_parity_lemma,
    check_upper_bound,
    kappa,
    kappa_decomposition,
    order_sorted,
    parity_witness,
    run_checks,
    sigma_order,
)

C9xC3 = FiniteAbelianGroup((9, 3))


@pytest.fixture(scope="module")
def parity_c9xc3():
    return check_parity_lemma(C9xC3)


def test_parity_on_c9xc3(parity_c9xc3):
    rep = parity_c9xc3
    assert rep.applicable and rep.ok, rep.violations[:5]
    assert rep.instances > 0
    cases = rep.notes["cases"]
    # the hand construction (not only the split shortcut) is exercised
    assert sum(v for k, v in cases.items() if k != "split") > 1000
    assert len(cases) >= 4


@pytest.mark.parametrize("factors,reason", [((4, 2), "even"), ((6, 2), "even"), ((3, 3), "l = 1"), ((9,), "rank")])
def test_parity_not_applicable(factors, reason):
    rep = check_parity_lemma(FiniteAbelianGroup(factors))
    assert not rep.applicable and reason in rep.notes["reason"]


def _find_case(label):
    ln, l, n = 9, 3, 3
    order9 = [g for g in C9xC3.nonzero_elements() if g.order == ln]
    for combo in combinations(order9, 3):
        T = ElementTuple(C9xC3, combo)
        for m in enumerate_up_to(T, 3 * (ln - 1)):
            if sum(m) <= ln or max(m) >= ln or sum(x % 2 == 0 for x in m) != 1:
                continue
            even = next(i for i in range(3) if m[i] % 2 == 0)
            odd = sorted((i for i in range(3) if i != even), key=lambda i: (m[i], i))
            perm = odd + [even]
            S, mp = T.permute(perm), [m[i] for i in perm]
            w = parity_witness(S, mp, l, n)
            if w["case"] == label:
                return S, mp, w
    return None


@pytest.mark.parametrize("label", ["1", "4", "5a", "5b"])
def test_parity_certificate_reconstructs_m(label):
    found = _find_case(label)
    assert found is not None
    S, m, w = found
    assert S.is_zero_sum(w["b_half"])
    rebuilt = [2 * h for h in w["b_half"]]
    for lam, _, q in w["terms"]:
        assert S.is_zero_sum(q)
        rebuilt = [r - lam * x for r, x in zip(rebuilt, q)]
    assert rebuilt == [w["eps"] * x for x in m]
    assert sum(w["b_half"]) < sum(m)
    assert not GroupAtomSearch(S, limit=sum(m)).is_group_atom(m)


def test_case_theorem_bound_attained():
    for factors, best in [((6, 2), 7), ((6, 3), 7), ((4, 2), 5)]:
        rep = check_case_theorem(FiniteAbelianGroup(factors))
        assert rep.ok, rep.violations[:3]
        assert rep.notes["max_group_atom_length"] == best
        assert rep.notes["attained"]


def test_case_bound():
    assert case_bound_twice(C9xC3) == 20
    assert case_bound_twice(FiniteAbelianGroup((12, 4))) == 28


def test_case_theorem_not_applicable_on_homocyclic():
    assert not check_case_theorem(FiniteAbelianGroup((3, 3))).applicable


def test_kappa_values():
    G = FiniteAbelianGroup((12, 4))
    T = ElementTuple.of(G, [(1, 0), (3, 0), (4, 2)])
    assert [sigma_order(g) for g in T.elements] == [1, 1, 2]
    assert kappa(order_sorted(T)) == 1
    T = ElementTuple.of(G, [(1, 0), (5, 0), (7, 0)])
    assert kappa(T) == 12


def test_kappa_check_flags_fabricated_atoms():
    # (1,0),(2,0),(4,0) in C9+C3 have kappa = 9; [8,5,0] is zero-sum of length 13,
    # so handing it over as a "group atom" must trip assertion (i)
    T = ElementTuple.of(C9xC3, [(1, 0), (2, 0), (4, 0)])
    assert kappa(order_sorted(T)) == 9 and T.is_zero_sum([8, 5, 0])
    rep = check_kappa_lemma(T, [(8, 5, 0)])
    assert rep.instances == 1 and not rep.ok and "(i)" in rep.violations[0]
    real = check_kappa_lemma(T)
    assert real.ok


def test_kappa_decomposition_fills_capacity():
    T = ElementTuple.of(C9xC3, [(1, 0), (2, 0), (4, 0)])
    S = order_sorted(T)
    m = [1, 4, 0]
    assert S.is_zero_sum(m)
    d = kappa_decomposition(S, m, 9)
    total = [a + b + c for a, b, c in zip(m, d["m_tilde"], d["m_c"])]
    assert total == list(S.orders)
    assert S.is_zero_sum(d["m_c"]) and S.is_zero_sum(d["m_tilde"])
    assert all(x >= 0 for x in d["m_tilde"])
    assert all(S.is_zero_sum(p) for p in d["pieces"])


def test_length_bound_check_detects_excess():
    T = ElementTuple.of(FiniteAbelianGroup((6,)), [(1,), (5,)])
    assert check_length_bound(T, [(6, 0), (1, 1)]).ok
    assert not check_length_bound(T, [(7, 1)]).ok


def test_bound_checks_against_results():
    from sepnoether.noether import beta_sep
    for factors in [(4, 2), (3, 3), (6, 2), (5,)]:
        G = FiniteAbelianGroup(factors)
        res = beta_sep(G)
        assert check_upper_bound(G, res).ok
        low = check_lower_bound(G, res)
        assert low.ok and low.applicable == (G.rank() % 2 == 0)


def test_report_merge():
    a = TheoryCheckReport("x", instances=2, notes={"cases": Counter({"1": 1}), "tuples": 1, "max_len": 4})
    b = TheoryCheckReport("x", instances=3, violations=["v"], notes={"cases": Counter({"1": 2, "2": 1}),
                                                                     "tuples": 1, "max_len": 3})
    a.merge(b)
    assert a.instances == 5 and not a.ok
    assert a.notes == {"cases": Counter({"1": 3, "2": 1}), "tuples": 2, "max_len": 4}
    assert a.to_json()["notes"]["cases"] == {"1": 3, "2": 1}


def test_run_checks_even_order():
    reports = {r.lemma: r for r in run_checks(FiniteAbelianGroup((4, 2)))}
    assert not reports["parity_proposition"].applicable
    assert all(r.ok for r in reports.values())


@pytest.mark.slow
def test_run_checks_c9xc3():
    reports = run_checks(C9xC3)
    assert all(r.ok for r in reports), [r.violations[:3] for r in reports if not r.ok]
    by = {r.lemma: r for r in reports}
    assert by["case_theorem"].notes["max_group_atom_length"] == 10
    assert by["length_bound"].instances > 0
