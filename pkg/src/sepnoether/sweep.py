"""Subset enumeration, automorphism pruning and the parallel map driver."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from .block_monoid import _arith
from .group_core import FiniteAbelianGroup

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # pragma: no cover - non-Linux
        return max(1, os.cpu_count() or 1)


def automorphisms(G: FiniteAbelianGroup) -> list[tuple[int, ...]]:
    """Aut(G) as permutations of element codes.

    A homomorphism is fixed by the images a_j of the standard generators,
    subject to n_j a_j = 0; it is an automorphism iff it is injective.
    """
    ar = _arith(G)
    size = ar.size
    if G.rank() == 0:
        return [(0,)]
    candidates = []
    for n in G.factors:
        candidates.append([c for c in range(size) if all((n * r) % f == 0 for r, f in zip(ar.decode(c), G.factors))])
    elements = [ar.decode(c) for c in range(size)]
    out = []
    for images in product(*candidates):
        img_res = [ar.decode(a) for a in images]
        perm = []
        for x in elements:
            total = [0] * G.rank()
            for xj, a in zip(x, img_res):
                for t in range(len(total)):
                    total[t] += xj * a[t]
            perm.append(ar.encode(total))
        if len(set(perm)) == size:
            out.append(tuple(perm))
    out.sort()
    return out


def canonical_subsets(G: FiniteAbelianGroup, sizes: Iterable[int], include_identity: bool = False,
                      aut_pruning: bool = False) -> list[tuple[int, ...]]:
    """Sorted code tuples of distinct elements, one per unordered subset.

    With ``aut_pruning`` only the lexicographically first member of each
    Aut(G)-orbit is kept.
    """
    size = G.order()
    pool = list(range(0 if include_identity else 1, size))
    auts = automorphisms(G) if aut_pruning else None
    out = []
    for k in sizes:
        seen: set[tuple[int, ...]] = set()
        for combo in combinations(pool, k):
            if auts is not None:
                if combo in seen:
                    continue
                for phi in auts:
                    seen.add(tuple(sorted(phi[c] for c in combo)))
            out.append(combo)
    return out


def chunked(items: Sequence[T], n: int) -> Iterator[Sequence[T]]:
    for i in range(0, len(items), n):
        yield items[i:i + n]


def _run_chunk(args):
    fn, chunk = args
    return [fn(x) for x in chunk]


def parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: int = 1, chunk_size: int | None = None) -> list[R]:
    """Order-preserving map; ``fn`` must be a picklable top-level function."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    if chunk_size is None:
        chunk_size = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_run_chunk, [(fn, c) for c in chunked(items, chunk_size)])
        return [r for part in parts for r in part]
