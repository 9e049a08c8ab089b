"""Separating Noether numbers of finite abelian groups.

beta_sep(G) is the largest length of a group atom of B(g_1, ..., g_k) over
all subsets {g_1, ..., g_k} of G with k <= rank(G) + 1.

Subsets containing the identity are skipped.  If 0 = g_j, the unit vector
e_j is a monoid element of length 1, so any m with m_j > 0 and |m| > 1 is
e_j plus a shorter element and is not a group atom; the remaining group
atoms have m_j = 0 and are (by the same argument applied to the lattice
generators) group atoms of the subset without 0.  A regression test checks
this on small groups.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import partial

from .block_monoid import DEFAULT_BUDGET, ElementTuple, _arith, candidate_count
from .errors import BudgetExceeded
from .group_atom import max_group_atom_length, search_bound
from .group_core import FiniteAbelianGroup, least_prime_divisor
from .sweep import canonical_subsets, parallel_map


def upper_bound(G: FiniteAbelianGroup) -> int:
    return sum(n - 1 for n in G.factors) + 1


def upper_bound_is_sharp(G: FiniteAbelianGroup) -> bool:
    """Whether beta_sep(G) attains the general upper bound.

    True iff G is cyclic or n_{s+1} = ... = n_r = 2, where r is 2s or 2s-1.
    """
    r = G.rank()
    if r <= 1:
        return True
    s = (r + 1) // 2
    return all(n == 2 for n in G.factors[s:])


def lower_bound(G: FiniteAbelianGroup) -> int | None:
    """n_1 + ... + n_s + n_{s+1}/p for even rank r = 2s, p the least prime of n_r."""
    r = G.rank()
    if r == 0 or r % 2:
        return None
    s = r // 2
    p = least_prime_divisor(G.factors[-1])
    return sum(G.factors[:s]) + G.factors[s] // p


def predicted_beta_sep(G: FiniteAbelianGroup) -> tuple[int | None, str | None]:
    """Known closed forms: cyclic groups, rank two, and C_n^r."""
    fs = G.factors
    if len(fs) == 1:
        return fs[0], "cyclic"
    if len(fs) == 2:
        big, n = fs
        return big + n // least_prime_divisor(n), "rank-two"
    if len(set(fs)) == 1:
        n, r = fs[0], len(fs)
        s = (r + 1) // 2
        if r % 2:
            return n * s, "homocyclic"
        return n * s + n // least_prime_divisor(n), "homocyclic"
    return None, None


@dataclass
class SepNoetherResult:
    group: FiniteAbelianGroup
    beta_sep: int
    extremal: list[tuple[ElementTuple, tuple[int, ...]]]
    predicted: int | None
    prediction_source: str | None
    upper: int
    lower: int | None
    subsets_checked: int
    aut_pruning: bool = False
    wall_time_ms: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.beta_sep > self.upper:
            raise AssertionError(f"beta_sep({self.group}) = {self.beta_sep} exceeds the upper bound {self.upper}")

    @property
    def match(self) -> bool | None:
        return None if self.predicted is None else self.predicted == self.beta_sep

    def to_json(self) -> dict:
        return {
            "group": str(self.group),
            "factors": list(self.group.factors),
            "beta_sep": self.beta_sep,
            "predicted": self.predicted,
            "prediction_source": self.prediction_source,
            "match": self.match,
            "bounds": {"upper": self.upper, "lower": self.lower},
            "subsets_checked": self.subsets_checked,
            "aut_pruning": self.aut_pruning,
            "extremal": [{"tuple": T.to_json(), "vector": list(v)} for T, v in self.extremal],
        }


def sweep_cost(G: FiniteAbelianGroup, max_k: int, include_identity: bool = False) -> int:
    """Upper estimate of candidate vectors examined by the subset sweep."""
    pool = G.order() - (0 if include_identity else 1)
    e = G.exponent()
    return sum(math.comb(pool, k) * candidate_count(k, max(e, k * e // 2)) for k in range(1, max_k + 1))


def _evaluate(factors: tuple[int, ...], budget: int, codes: tuple[int, ...]):
    G = FiniteAbelianGroup(factors)
    ar = _arith(G)
    T = ElementTuple(G, tuple(G.element(ar.decode(c)) for c in codes))
    best, verdicts = max_group_atom_length(T, budget)
    return best, [tuple(v.vector) for v in verdicts]


def beta_sep(G: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET, workers: int = 1,
             aut_pruning: bool = False, include_identity: bool = False,
             max_k: int | None = None) -> SepNoetherResult:
    if G.rank() == 0:
        raise ValueError("beta_sep needs a nontrivial group")
    if max_k is None:
        max_k = G.rank() + 1
    cost = sweep_cost(G, max_k, include_identity)
    if cost > budget:
        raise BudgetExceeded(f"sweep over {G} needs about {cost} candidate vectors, budget is {budget}")
    start = time.perf_counter()
    subsets = canonical_subsets(G, range(1, max_k + 1), include_identity, aut_pruning)
    results = parallel_map(partial(_evaluate, G.factors, budget), subsets, workers)
    best = max(r[0] for r in results)
    ar = _arith(G)
    extremal = []
    for codes, (length, vecs) in zip(subsets, results):
        if length == best:
            T = ElementTuple(G, tuple(G.element(ar.decode(c)) for c in codes))
            extremal.extend((T, v) for v in vecs)
    extremal.sort(key=lambda tv: (len(tv[0]), [g.residues for g in tv[0].elements], tv[1]))
    predicted, source = predicted_beta_sep(G)
    return SepNoetherResult(
        group=G, beta_sep=best, extremal=extremal, predicted=predicted, prediction_source=source,
        upper=upper_bound(G), lower=lower_bound(G), subsets_checked=len(subsets), aut_pruning=aut_pruning,
        wall_time_ms=(time.perf_counter() - start) * 1000.0,
    )


def main_theorem_group(l: int, n: int) -> FiniteAbelianGroup:
    if l < 1 or n < 2:
        raise ValueError("need l >= 1 and n >= 2")
    return FiniteAbelianGroup((l * n, n))


def main_theorem_value(l: int, n: int) -> int:
    return l * n + n // least_prime_divisor(n)


def verify_main_theorem(l: int, n: int, budget: int = DEFAULT_BUDGET, workers: int = 1,
                        aut_pruning: bool = False) -> SepNoetherResult:
    """beta_sep(C_{ln} + C_n) computed by the sweep, with ln + n/p as the prediction."""
    res = beta_sep(main_theorem_group(l, n), budget, workers, aut_pruning)
    res.predicted = main_theorem_value(l, n)
    res.prediction_source = "rank-two"
    return res
