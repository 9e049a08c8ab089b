"""Instance checks of the structural results behind the rank-two formula.

Each check sweeps enumerated data and collects violations; none of them is a
proof.  Reports carry the number of instances examined so that a vacuous pass
is visible as ``instances == 0``.

Throughout, ``l`` is n_1/n_2 and ``n`` is n_2 for a group C_{n_1} + C_{n_2} + ...
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import partial, reduce
from itertools import product
from typing import Sequence

from .block_monoid import DEFAULT_BUDGET, ElementTuple, _arith, _enumerate, decompose
from .errors import NotApplicable
from .group_atom import GroupAtomSearch
from .group_core import FiniteAbelianGroup, GroupElement, least_prime_divisor
from .noether import SepNoetherResult, beta_sep, lower_bound, upper_bound, upper_bound_is_sharp
from .sweep import canonical_subsets, parallel_map


@dataclass
class TheoryCheckReport:
    lemma: str
    applicable: bool = True
    instances: int = 0
    violations: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "TheoryCheckReport") -> None:
        self.instances += other.instances
        self.violations.extend(other.violations)
        for key, val in other.notes.items():
            if isinstance(val, Counter):
                self.notes.setdefault(key, Counter()).update(val)
            elif isinstance(val, int) and key.startswith("max"):
                self.notes[key] = max(self.notes.get(key, val), val)
            elif isinstance(val, int):
                self.notes[key] = self.notes.get(key, 0) + val
            else:
                self.notes[key] = val

    def to_json(self) -> dict:
        notes = {k: (dict(sorted(v.items())) if isinstance(v, Counter) else v) for k, v in sorted(self.notes.items())}
        return {
            "lemma": self.lemma,
            "applicable": self.applicable,
            "instances": self.instances,
            "violations": list(self.violations),
            "ok": self.ok,
            "notes": notes,
        }


def _not_applicable(lemma: str, reason: str) -> TheoryCheckReport:
    return TheoryCheckReport(lemma, applicable=False, notes={"reason": reason})


def _ratio(G: FiniteAbelianGroup) -> tuple[int, int]:
    if G.rank() < 2:
        raise NotApplicable(f"{G} has rank < 2")
    return G.factors[0] // G.factors[1], G.factors[1]


def _vec(v: Sequence[int]) -> str:
    return "[" + ",".join(map(str, v)) + "]"


# ---------------------------------------------------------------- length bound

def check_length_bound(T: ElementTuple, group_atoms: Sequence[Sequence[int]]) -> TheoryCheckReport:
    """Group atoms longer than every ord(g_i) satisfy 2|m| <= sum ord(g_i)."""
    rep = TheoryCheckReport("length_bound")
    top, total = max(T.orders), sum(T.orders)
    for m in group_atoms:
        if sum(m) > top:
            rep.instances += 1
            if 2 * sum(m) > total:
                rep.violations.append(f"({T}) {_vec(m)}: 2*{sum(m)} > {total}")
    return rep


# ------------------------------------------------------------------- kappa

def sigma_order(g: GroupElement) -> int:
    """Order of the projection of g away from the first cyclic factor."""
    return reduce(lambda a, b: a * b // math.gcd(a, b),
                  (n // math.gcd(r, n) for r, n in zip(g.residues[1:], g.group.factors[1:])), 1)


def order_sorted(T: ElementTuple) -> ElementTuple:
    """Reorder so that ord(g_1) >= ord(g_2) >= ord(g_3) (ties by element)."""
    perm = sorted(range(T.k), key=lambda i: (-T.orders[i], T.elements[i]))
    return T.permute(perm)


def kappa(T: ElementTuple) -> int:
    return reduce(math.gcd, (g.order // sigma_order(g) for g in T.elements))


def _h_logs(T: ElementTuple, kap: int) -> list[int] | None:
    """Discrete logs of h_i = (ord(g_i)/kappa) g_i to the base h_1, or None."""
    hs = [(o // kap) * g for g, o in zip(T.elements, T.orders)]
    base = hs[0]
    logs = []
    for h in hs:
        for t in range(kap):
            if t * base == h:
                logs.append(t)
                break
        else:
            return None
    if base.order != kap:
        return None
    return logs


def _h_atoms(logs: Sequence[int], kap: int, caps: Sequence[int]) -> list[tuple[int, ...]]:
    """Minimal nonzero u <= caps with sum u_i * logs_i = 0 mod kappa, lexicographic."""
    zs = [u for u in product(*(range(c + 1) for c in caps)) if any(u) and sum(a * b for a, b in zip(u, logs)) % kap == 0]
    zs.sort(key=lambda u: (sum(u), u))
    mins: list[tuple[int, ...]] = []
    for u in zs:
        if not any(all(a <= b for a, b in zip(v, u)) for v in mins):
            mins.append(u)
    return sorted(mins)


def kappa_decomposition(T: ElementTuple, m: Sequence[int], kap: int) -> dict:
    """Build sum ord(g_i) e_i = m + m_tilde + m_c as in the kappa lemma.

    Greedily packs atoms f of B(h_1, h_2, h_3) into the capacities
    kappa - a_i - 1 until none fits, then scales them back to B(T).
    Raises ValueError if the h_i do not generate one subgroup of order kappa.
    """
    logs = _h_logs(T, kap)
    if logs is None:
        raise ValueError(f"({T}): the elements (ord(g_i)/kappa) g_i do not generate a common order-{kap} subgroup")
    steps = [o // kap for o in T.orders]
    a = [mi // s for mi, s in zip(m, steps)]
    caps = [kap - ai - 1 for ai in a]
    if min(caps) < 0:
        raise ValueError(f"capacity negative for a = {a}")
    c = [0, 0, 0]
    pieces = []
    while True:
        room = [cap - ci for cap, ci in zip(caps, c)]
        fits = _h_atoms(logs, kap, room)
        if not fits:
            break
        f = fits[0]
        pieces.append(f)
        c = [x + y for x, y in zip(c, f)]
    m_c = [ci * s for ci, s in zip(c, steps)]
    m_tilde = [o - mi - mc for o, mi, mc in zip(T.orders, m, m_c)]
    return {
        "a": a, "c": c, "m_c": m_c, "m_tilde": m_tilde,
        "pieces": [[fi * s for fi, s in zip(f, steps)] for f in pieces],
    }


def check_kappa_lemma(T: ElementTuple, group_atoms: Sequence[Sequence[int]] | None = None,
                      budget: int = DEFAULT_BUDGET) -> TheoryCheckReport:
    """Assertions (i)-(iii) of the kappa lemma for the group atoms of B(T)."""
    lemma = "kappa_lemma"
    if T.k != 3:
        return _not_applicable(lemma, "needs a 3-element tuple")
    if T.group.rank() < 1:
        return _not_applicable(lemma, "trivial group")
    S = order_sorted(T)
    perm = sorted(range(T.k), key=lambda i: (-T.orders[i], T.elements[i]))
    kap = kappa(S)
    if kap <= 1:
        return _not_applicable(lemma, "kappa = 1")
    if group_atoms is None:
        group_atoms = [tuple(v.vector) for v in GroupAtomSearch(T, budget=budget).group_atoms()]
    o1, o2, o3 = S.orders
    rep = TheoryCheckReport(lemma, notes={"tuples": 1})
    for m0 in group_atoms:
        m = [m0[i] for i in perm]
        if sum(m) <= o1:
            continue
        rep.instances += 1
        tag = f"({S}) {_vec(m)} kappa={kap}"
        steps = [o // kap for o in S.orders]
        a = [mi // s for mi, s in zip(m, steps)]
        if sum(a) > kap - 1:
            rep.violations.append(f"{tag}: (i) sum a = {sum(a)} > kappa - 1")
            continue
        if kap == 2:
            rep.violations.append(f"{tag}: (iii) kappa = 2")
        if 2 * sum(m) * kap + o2 + (kap - 2) * o3 > kap * (o1 + o2 + o3):
            rep.violations.append(f"{tag}: (iii) inequality fails")
        try:
            d = kappa_decomposition(S, m, kap)
        except ValueError as exc:
            rep.violations.append(f"{tag}: (ii) {exc}")
            continue
        problems = []
        if not S.is_zero_sum(d["m_c"]):
            problems.append("m_c not zero-sum")
        for piece in d["pieces"]:
            if not S.is_zero_sum(piece) or sum(piece) > o1:
                problems.append(f"piece {_vec(piece)} invalid")
        if not all(0 <= ci <= kap - 1 for ci in d["c"]):
            problems.append("c out of range")
        if sum(d["c"]) < kap - 1:
            problems.append(f"sum c = {sum(d['c'])} < kappa - 1")
        if sum(1 for x in d["m_c"] if x) < 2:
            problems.append("|supp(m_c)| < 2")
        if min(d["m_tilde"]) < 0 or not S.is_zero_sum(d["m_tilde"]):
            problems.append(f"m_tilde {_vec(d['m_tilde'])} not in the monoid")
        elif sum(d["m_tilde"]) < sum(m):
            problems.append(f"|m_tilde| = {sum(d['m_tilde'])} < |m|")
        if [x + y + z for x, y, z in zip(m, d["m_tilde"], d["m_c"])] != list(S.orders):
            problems.append("decomposition does not sum to sum ord(g_i) e_i")
        for p in problems:
            rep.violations.append(f"{tag}: (ii) {p}")
    return rep


# -------------------------------------------------------------------- parity

def _solve_multiple(T: ElementTuple, template, l: int, n: int) -> tuple[int, list[int]] | None:
    """Smallest t in {0, ..., l-1} making template(t) zero-sum."""
    for t in range(l):
        v = template(t)
        if T.is_zero_sum(v):
            return t, v
    return None


def parity_witness(T: ElementTuple, m: Sequence[int], l: int, n: int) -> dict:
    """Explicit certificate that m is not a group atom (odd order, one even entry).

    T must already be arranged so that m_3 is the even entry and m_1 <= m_2,
    and every m_i must be below ln (otherwise m splits off ln e_i directly).
    Returns the case label, the combination b = eps*m + sum lam_j q_j (all
    entries even, non-negative, |b| < 2|m|) and the final identity
    eps*m = 2 b' - sum lam_j q_j.  Raises ValueError when a step fails.
    """
    m = list(m)
    ln = l * n
    m1, m2, m3 = m
    sx = _solve_multiple(T, lambda t: [t * n, n, 0], l, n)
    sy = _solve_multiple(T, lambda t: [n, t * n, 0], l, n)
    sz = _solve_multiple(T, lambda t: [n, n, t * n], l, n)
    if sx is None or sy is None or sz is None:
        raise ValueError("x, y or z does not exist")
    (x, xv), (y, yv), (z, zv) = sx, sy, sz
    e1, e2, e3 = [ln, 0, 0], [0, ln, 0], [0, 0, ln]
    X, Y, Z = ("x", xv), ("y", yv), ("z", zv)
    E1, E2, E3 = ("e1", e1), ("e2", e2), ("e3", e3)
    if x % 2:
        case, eps, terms = "1", 1, [(1, X)]
    elif y % 2:
        case, eps, terms = "2", 1, [(1, Y)]
    elif z % 2 == 0 and z < l - 1:
        case, eps, terms = "3", 1, [(1, Z)]
    elif m1 < n <= m2:
        case, eps, terms = "4", 1, [(1, E1), (-1, X)]
    elif n <= m1:
        if z % 2:
            case, eps, terms = "5a", 1, [(-1, Z), (1, E3)]
        else:
            case, eps, terms = "5b", 1, [(-1, Z), (2, E3)]
    elif z % 2:
        case, eps, terms = "6a", -1, [(1, E3), (1, Z)]
    elif m3 + n <= ln:
        case, eps, terms = "6b-i", -1, [(1, Z)]
    elif x == l - 1:
        case, eps, terms = "6b-ii-A", -1, [(2, E1), (1, E2), (2, E3), (-1, X), (-1, Z)]
    elif y == l - 1:
        case, eps, terms = "6b-ii-B", -1, [(1, E1), (2, E2), (2, E3), (-1, Y), (-1, Z)]
    else:
        case, eps, terms = "6b-ii-C", 1, [(1, E1), (1, E2), (-1, X), (-1, Y), (-1, Z)]
    b = [eps * mi for mi in m]
    for lam, (_, q) in terms:
        b = [bi + lam * qi for bi, qi in zip(b, q)]
    if not T.is_zero_sum(b):
        raise ValueError(f"case {case}: b = {_vec(b)} is not zero-sum")
    if any(bi < 0 or bi % 2 for bi in b):
        raise ValueError(f"case {case}: b = {_vec(b)} is not even and non-negative")
    if sum(b) >= 2 * sum(m):
        raise ValueError(f"case {case}: |b| = {sum(b)} >= 2|m|")
    long_z = False
    for _, (label, q) in terms:
        if sum(q) >= sum(m):
            if label != "z":
                raise ValueError(f"case {case}: {label} = {_vec(q)} is not shorter than m")
            long_z = True
    half = [bi // 2 for bi in b]
    if not T.is_zero_sum(half):
        raise ValueError(f"case {case}: b/2 is not zero-sum")
    # eps*m = 2 b' - sum lam_j q_j
    rebuilt = [2 * h for h in half]
    for lam, (_, q) in terms:
        rebuilt = [r - lam * qi for r, qi in zip(rebuilt, q)]
    if rebuilt != [eps * mi for mi in m]:
        raise ValueError(f"case {case}: certificate does not reproduce m")
    return {"case": case, "x": x, "y": y, "z": z, "eps": eps, "b": b, "b_half": half,
            "terms": [(lam, label, list(q)) for lam, (label, q) in terms], "z_vector": zv, "long_z": long_z}


def _arrange_for_parity(m: Sequence[int]) -> list[int] | None:
    evens = [i for i, v in enumerate(m) if v % 2 == 0]
    if len(evens) != 1:
        return None
    odd = sorted((i for i in range(3) if i != evens[0]), key=lambda i: (m[i], i))
    return odd + evens


def _parity_triple(T: ElementTuple, l: int, n: int, budget: int) -> TheoryCheckReport:
    rep = TheoryCheckReport("parity_proposition", notes={"cases": Counter(), "tuples": 1})
    ln = l * n
    limit = 3 * (ln - 1)
    search = GroupAtomSearch(T, limit=limit, budget=budget)
    short_parts: dict[tuple, bool] = {}
    for m in _enumerate(T, limit, budget):
        if sum(m) <= ln:
            continue
        perm = _arrange_for_parity(m)
        if perm is None:
            continue
        rep.instances += 1
        if search.is_group_atom(m):
            rep.violations.append(f"({T}) {_vec(m)}: lattice test says group atom")
        S = T.permute(perm)
        mp = [m[i] for i in perm]
        big = [i for i in range(3) if mp[i] >= ln]
        if big:
            # ln e_i and m - ln e_i are both shorter than m
            rest = list(mp)
            rest[big[0]] -= ln
            if not S.is_zero_sum(rest):
                rep.violations.append(f"({S}) {_vec(mp)}: split off ln e_i is not in the monoid")
            rep.notes["cases"]["split"] += 1
            continue
        try:
            w = parity_witness(S, mp, l, n)
        except ValueError as exc:
            rep.violations.append(f"({S}) {_vec(mp)}: {exc}")
            continue
        rep.notes["cases"][w["case"]] += 1
        zv = w["z_vector"]
        if w["long_z"]:
            # z itself is too long; it must split into pieces of length <= ln
            key = (S, tuple(zv))
            if key not in short_parts:
                short = [a for a in GroupAtomSearch(S, limit=ln, budget=budget).atoms]
                short_parts[key] = decompose(short, zv) is not None
            if not short_parts[key]:
                rep.violations.append(f"({S}) z = {_vec(zv)} does not split into elements of length <= {ln}")
    return rep


def check_parity_lemma(G: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET, workers: int = 1) -> TheoryCheckReport:
    """Odd order, l > 1: a long m over three elements of order ln with exactly one
    even coordinate is never a group atom.  Checked by the lattice engine and by
    the explicit case construction.
    """
    lemma = "parity_proposition"
    if G.order() % 2 == 0:
        return _not_applicable(lemma, "group of even order")
    if G.rank() < 2:
        return _not_applicable(lemma, "rank < 2")
    l, n = _ratio(G)
    if l == 1:
        return _not_applicable(lemma, "l = 1")
    ln = l * n
    ar = _arith(G)
    pool = [c for c in range(1, G.order()) if G.element(ar.decode(c)).order == ln]
    triples = [t for t in canonical_subsets(G, [3]) if all(c in pool for c in t)]
    parts = parallel_map(partial(_parity_worker, G.factors, l, n, budget), triples, workers)
    rep = TheoryCheckReport(lemma, notes={"cases": Counter(), "tuples": 0})
    for p in parts:
        rep.merge(p)
    return rep


def _tuple_from_codes(G: FiniteAbelianGroup, codes: Sequence[int]) -> ElementTuple:
    ar = _arith(G)
    return ElementTuple(G, tuple(G.element(ar.decode(c)) for c in codes))


def _parity_worker(factors, l, n, budget, codes):
    G = FiniteAbelianGroup(factors)
    return _parity_triple(_tuple_from_codes(G, codes), l, n, budget)


# ------------------------------------------------------ case theorem & props

def case_bound_twice(G: FiniteAbelianGroup) -> int:
    """Twice the bound on group atoms over triples: 2ln + 2n/p (rank 2) or 2ln + n."""
    l, n = _ratio(G)
    if G.rank() == 2:
        return 2 * l * n + 2 * (n // least_prime_divisor(n))
    return 2 * l * n + n


def _triple_checks(factors, budget, codes) -> dict[str, TheoryCheckReport]:
    G = FiniteAbelianGroup(factors)
    T = _tuple_from_codes(G, codes)
    atoms = [tuple(v.vector) for v in GroupAtomSearch(T, budget=budget).group_atoms()]
    out = {"length_bound": check_length_bound(T, atoms)}
    if T.k == 2:
        out["support_split"] = _support_two(T, atoms)
        return out
    out["kappa_lemma"] = check_kappa_lemma(T, atoms)
    if G.rank() < 2 or G.factors[0] == G.factors[1]:
        return out
    l, n = _ratio(G)
    ln = l * n
    S = order_sorted(T)
    perm = sorted(range(3), key=lambda i: (-T.orders[i], T.elements[i]))
    sorted_atoms = [tuple(m[i] for i in perm) for m in atoms]
    o1, o2, o3 = S.orders
    kap = kappa(S)
    twice = case_bound_twice(G)

    case = TheoryCheckReport("case_theorem", instances=len(atoms))
    top = max((sum(m) for m in atoms), default=0)
    case.notes["max_group_atom_length"] = top
    for m in sorted_atoms:
        if 2 * sum(m) > twice:
            case.violations.append(f"({S}) {_vec(m)}: length {sum(m)} exceeds {twice}/2")
    out["case_theorem"] = case

    o_gt_1 = TheoryCheckReport("prop_kappa_positive")
    if o1 == o2 == ln:
        o_gt_1.instances = 1
        if n % o3 and kap <= 1:
            o_gt_1.violations.append(f"({S}): ord(g_3) = {o3} does not divide {n} but kappa = {kap}")
        if o3 > n * kap:
            o_gt_1.violations.append(f"({S}): ord(g_3)/kappa = {o3}/{kap} > {n}")
    out["prop_kappa_positive"] = o_gt_1

    long_ones = [m for m in sorted_atoms if sum(m) > o1]
    mgeq = TheoryCheckReport("prop_short_second_order")
    if o2 < ln:
        for m in long_ones:
            mgeq.instances += 1
            if sum(m) > ln:
                mgeq.violations.append(f"({S}) {_vec(m)}: ord(g_2) < {ln} but length {sum(m)} > {ln}")
    elif o1 == o2 == ln and n % o3:
        for m in long_ones:
            mgeq.instances += 1
            if o3 != ln:
                mgeq.violations.append(f"({S}) {_vec(m)}: ord(g_3) = {o3} != {ln}")
            elif 2 * kap * ln + 2 * o3 - ln < 2 * kap * sum(m):
                mgeq.violations.append(f"({S}) {_vec(m)}: length {sum(m)} above ln + (ord(g_3) - ln/2)/kappa")
    out["prop_short_second_order"] = mgeq

    keven = TheoryCheckReport("prop_even_exponent")
    if ln % 2 == 0 and o1 == o2 == o3 == ln:
        p = least_prime_divisor(n)
        for m in sorted_atoms:
            keven.instances += 1
            if sum(m) > ln + n // p:
                keven.violations.append(f"({S}) {_vec(m)}: length {sum(m)} > {ln + n // p}")
    out["prop_even_exponent"] = keven

    split = TheoryCheckReport("support_split")
    for m in sorted_atoms:
        supp = [i for i in range(3) if m[i]]
        split.instances += 1
        if len(supp) == 1 and sum(m) > o1:
            split.violations.append(f"({S}) {_vec(m)}: single support above max order")
        elif len(supp) == 2:
            a, b = (S.orders[i] for i in supp)
            if 2 * sum(m) > max(2 * a, 2 * b, a + b):
                split.violations.append(f"({S}) {_vec(m)}: support-two bound fails")
        elif len(supp) == 3 and 2 * sum(m) > twice:
            split.violations.append(f"({S}) {_vec(m)}: support-three bound fails")
    out["support_split"] = split
    return out


def _support_two(T: ElementTuple, atoms) -> TheoryCheckReport:
    rep = TheoryCheckReport("support_split")
    a, b = T.orders
    for m in atoms:
        rep.instances += 1
        if 2 * sum(m) > max(2 * a, 2 * b, a + b):
            rep.violations.append(f"({T}) {_vec(m)}: pair bound fails")
    return rep


def subset_sweep_checks(G: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET, workers: int = 1,
                        max_k: int = 3) -> dict[str, TheoryCheckReport]:
    """Run every per-subset check over all pairs and triples of nonzero elements."""
    subsets = canonical_subsets(G, range(2, max_k + 1))
    parts = parallel_map(partial(_triple_checks, G.factors, budget), subsets, workers)
    merged: dict[str, TheoryCheckReport] = {}
    for part in parts:
        for key, rep in part.items():
            if rep.applicable:
                merged.setdefault(key, TheoryCheckReport(key)).merge(rep)
    for key in ("length_bound", "kappa_lemma", "case_theorem", "prop_kappa_positive",
                "prop_short_second_order", "prop_even_exponent", "support_split"):
        merged.setdefault(key, TheoryCheckReport(key))
    if G.rank() < 2 or G.factors[0] == G.factors[1]:
        for key in ("case_theorem", "prop_kappa_positive", "prop_short_second_order", "prop_even_exponent"):
            merged[key] = _not_applicable(key, "needs rank >= 2 and n_1 > n_2")
    return merged


def check_case_theorem(G: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET, workers: int = 1) -> TheoryCheckReport:
    if G.rank() < 2 or G.factors[0] == G.factors[1]:
        return _not_applicable("case_theorem", "needs rank >= 2 and n_1 > n_2")
    rep = subset_sweep_checks(G, budget, workers)["case_theorem"]
    l, n = _ratio(G)
    rep.notes["bound"] = case_bound_twice(G) / 2
    rep.notes["attained"] = rep.notes.get("max_group_atom_length", 0) * 2 == case_bound_twice(G)
    return rep


# --------------------------------------------------------------------- bounds

def check_lower_bound(G: FiniteAbelianGroup, result: SepNoetherResult | None = None,
                      budget: int = DEFAULT_BUDGET, workers: int = 1) -> TheoryCheckReport:
    lemma = "lower_bound"
    bound = lower_bound(G)
    if bound is None:
        return _not_applicable(lemma, "odd rank")
    if result is None:
        result = beta_sep(G, budget, workers)
    rep = TheoryCheckReport(lemma, instances=1, notes={"beta_sep": result.beta_sep, "bound": bound})
    if result.beta_sep < bound:
        rep.violations.append(f"beta_sep({G}) = {result.beta_sep} < {bound}")
    return rep


def check_upper_bound(G: FiniteAbelianGroup, result: SepNoetherResult | None = None,
                      budget: int = DEFAULT_BUDGET, workers: int = 1) -> TheoryCheckReport:
    """beta_sep <= sum(n_i - 1) + 1, with equality exactly in the characterized cases."""
    if result is None:
        result = beta_sep(G, budget, workers)
    ub = upper_bound(G)
    sharp = upper_bound_is_sharp(G)
    rep = TheoryCheckReport("upper_bound", instances=1,
                            notes={"beta_sep": result.beta_sep, "bound": ub, "equality_expected": sharp})
    if result.beta_sep > ub:
        rep.violations.append(f"beta_sep({G}) = {result.beta_sep} > {ub}")
    elif (result.beta_sep == ub) != sharp:
        rep.violations.append(f"beta_sep({G}) = {result.beta_sep}, bound {ub}: equality {'expected' if sharp else 'unexpected'}")
    return rep


def run_checks(G: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET, workers: int = 1,
               result: SepNoetherResult | None = None) -> list[TheoryCheckReport]:
    """Every applicable check on G, in a fixed order."""
    if result is None:
        result = beta_sep(G, budget, workers)
    sweep = subset_sweep_checks(G, budget, workers, max_k=min(3, G.rank() + 1))
    case = sweep["case_theorem"]
    if case.applicable:
        case.notes["bound"] = case_bound_twice(G) / 2
        case.notes["attained"] = case.notes.get("max_group_atom_length", 0) * 2 == case_bound_twice(G)
    return [
        sweep["length_bound"],
        check_parity_lemma(G, budget, workers),
        sweep["kappa_lemma"],
        case,
        sweep["prop_kappa_positive"],
        sweep["prop_short_second_order"],
        sweep["prop_even_exponent"],
        sweep["support_split"],
        check_lower_bound(G, result),
        check_upper_bound(G, result),
    ]
