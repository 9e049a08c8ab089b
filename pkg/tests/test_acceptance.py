"""Acceptance gate: one PASS/FAIL line per criterion, shown in the pytest summary."""

import random
import subprocess
import sys
import time

from sepnoether.block_monoid import ElementTuple, atoms_up_to, davenport
from sepnoether.group_atom import is_group_atom
from sepnoether.group_core import FiniteAbelianGroup
from sepnoether.noether import beta_sep, lower_bound, upper_bound, upper_bound_is_sharp, verify_main_theorem
from sepnoether.theory_checks import check_parity_lemma, subset_sweep_checks
from sepnoether.zlattice import combine, contains, normal_form, witness
from test_zlattice import box_oracle, is_hnf, random_matrix

THEOREM_CASES = [(2, 2, 5), (3, 2, 7), (1, 3, 4), (2, 3, 7), (1, 2, 3), (3, 3, 10)]
DAVENPORT_CASES = [((n,), n) for n in range(2, 10)] + [((2, 2), 3), ((4, 2), 5), ((3, 3), 5)]


def verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def test_criterion_1_theorem_reproduction(report_line):
    details, ok, small_time, big_time = [], True, 0.0, 0.0
    for l, n, expected in THEOREM_CASES:
        t0 = time.perf_counter()
        res = verify_main_theorem(l, n)
        dt = time.perf_counter() - t0
        if (l, n) == (3, 3):
            big_time = dt
        else:
            small_time += dt
        ok &= res.beta_sep == expected == res.predicted
        details.append(f"({l},{n})->{res.beta_sep}")
    ok &= small_time < 10 and big_time < 300
    report_line(f"criterion 1 {verdict(ok)}: {' '.join(details)}; "
                f"small cells {small_time:.2f}s, C9xC3 {big_time:.2f}s")

    t0 = time.perf_counter()
    stretch = verify_main_theorem(3, 4, aut_pruning=True)
    report_line(f"criterion 1 stretch (non-gating) {verdict(stretch.beta_sep == 14)}: "
                f"C12xC4 -> {stretch.beta_sep} with pruning, {stretch.subsets_checked} subsets, "
                f"{time.perf_counter() - t0:.2f}s")
    assert ok


def test_criterion_2_worked_example(report_line):
    t0 = time.perf_counter()
    G = FiniteAbelianGroup((12, 4))
    pair = ElementTuple.of(G, [(1, 1), (1, 2)])
    atoms = [list(a) for a in atoms_up_to(pair, 12)]
    true_verdict = is_group_atom(pair, [8, 4])
    triple = ElementTuple.of(G, [(8, 0), (1, 1), (1, 2)])
    false_verdict = is_group_atom(triple, [0, 8, 4])
    dt = time.perf_counter() - t0
    remultiplied = combine(false_verdict.coeffs, false_verdict.generators, 3)
    ok = (atoms == [[0, 12], [4, 8], [8, 4], [12, 0]]
          and true_verdict.is_group_atom
          and not false_verdict.is_group_atom
          and remultiplied == (0, 8, 4)
          and all(sum(q) < 12 and triple.is_zero_sum(q) for q in false_verdict.generators)
          and dt < 1)
    report_line(f"criterion 2 {verdict(ok)}: atoms {atoms}; [8,4] true; [0,8,4] false via "
                f"{false_verdict.describe_witness()}; {dt:.3f}s")
    assert ok


def test_criterion_3_davenport(report_line):
    t0 = time.perf_counter()
    got = {factors: davenport(FiniteAbelianGroup(factors)) for factors, _ in DAVENPORT_CASES}
    dt = time.perf_counter() - t0
    bad = [(f, got[f], e) for f, e in DAVENPORT_CASES if got[f] != e]
    rank_two = all(got[f] == f[0] + f[1] - 1 for f in [(2, 2), (4, 2), (3, 3)])
    ok = not bad and rank_two and dt < 120
    report_line(f"criterion 3 {verdict(ok)}: D(C_n)=n for n<=9, D(C2xC2)={got[(2, 2)]}, "
                f"D(C4xC2)={got[(4, 2)]}, D(C3xC3)={got[(3, 3)]}; {dt:.2f}s; mismatches {bad}")
    assert ok


def test_criterion_4_bound_suites(report_line):
    groups = sorted({(l * n, n) for l, n, _ in THEOREM_CASES} | {f for f, _ in DAVENPORT_CASES})
    problems, length_instances = [], 0
    for factors in groups:
        G = FiniteAbelianGroup(factors)
        res = beta_sep(G)
        ub = upper_bound(G)
        if res.beta_sep > ub or (res.beta_sep == ub) != upper_bound_is_sharp(G):
            problems.append(f"(a) {G}: {res.beta_sep} vs {ub}")
        lb = lower_bound(G)
        if lb is not None and res.beta_sep < lb:
            problems.append(f"(b) {G}: {res.beta_sep} < {lb}")
        rep = subset_sweep_checks(G, max_k=min(3, G.rank() + 1))["length_bound"]
        length_instances += rep.instances
        problems.extend(f"(c) {v}" for v in rep.violations)
    ok = not problems and length_instances > 0
    report_line(f"criterion 4 {verdict(ok)}: {len(groups)} groups, "
                f"{length_instances} long group atoms checked for (c); violations {problems[:5]}")
    assert ok


def test_criterion_5_theory_checks_c9xc3(report_line):
    G = FiniteAbelianGroup((9, 3))
    t0 = time.perf_counter()
    parity = check_parity_lemma(G)
    sweep = subset_sweep_checks(G)
    dt = time.perf_counter() - t0
    kap, case = sweep["kappa_lemma"], sweep["case_theorem"]
    reports = [parity, kap, case, sweep["length_bound"]]
    ok = all(r.applicable and r.ok for r in reports) and parity.instances > 0 and dt < 600
    report_line(
        f"criterion 5 {verdict(ok)}: parity {parity.instances} instances/{len(parity.violations)} violations; "
        f"kappa lemma {kap.instances} instances over {kap.notes.get('tuples', 0)} tuples with kappa>1 "
        f"(vacuous if 0)/{len(kap.violations)} violations; case theorem max "
        f"{case.notes.get('max_group_atom_length')} <= 10/{len(case.violations)} violations; {dt:.1f}s")
    assert ok


def test_criterion_6_lattice_engine(report_line):
    t0 = time.perf_counter()
    rng = random.Random(6)
    canon_fail = 0
    for _ in range(200):
        M = random_matrix(rng)
        L = normal_form(M)
        shuffled = M[:]
        rng.shuffle(shuffled)
        op = [r[:] for r in M]
        if len(M) >= 2:
            i, j = rng.sample(range(len(M)), 2)
            c = rng.randint(-4, 4)
            op[i] = [a + c * b for a, b in zip(op[i], op[j])]
        if not (is_hnf(L) and normal_form(shuffled).basis == L.basis == normal_form(op).basis):
            canon_fail += 1
    oracle_fail = 0
    for t in range(500):
        M = random_matrix(rng)
        width = len(M[0])
        if t % 2:
            v = combine([rng.randint(-3, 3) for _ in M], M, width)
        else:
            v = tuple(rng.randint(-6, 6) for _ in range(width))
        L = normal_form(M)
        cert = box_oracle(M, v)
        w = witness(L, v)  # re-multiplies internally; raises on an unsound witness
        if cert is not None and w is None:
            oracle_fail += 1
        if w is None and contains(L, v):
            oracle_fail += 1
        if w is not None and combine(w, M, width) != tuple(v):
            oracle_fail += 1
    dt = time.perf_counter() - t0
    ok = canon_fail == 0 and oracle_fail == 0 and dt < 60
    report_line(f"criterion 6 {verdict(ok)}: canonical form failures {canon_fail}/200, "
                f"oracle disagreements {oracle_fail}/500; {dt:.1f}s")
    assert ok


def test_criterion_7_determinism(report_line):
    cmd = [sys.executable, "-m", "sepnoether", "verify", "--l", "1..3", "--n", "2..3", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    ok = a.returncode == b.returncode == 0 and a.stdout == b.stdout and len(a.stdout) > 0
    report_line(f"criterion 7 {verdict(ok)}: two runs of verify --l 1..3 --n 2..3 --format json, "
                f"{len(a.stdout)} bytes each, identical={a.stdout == b.stdout}")
    assert ok
