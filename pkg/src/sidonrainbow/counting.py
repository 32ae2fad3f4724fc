"""Classify and count Sidon 4-sets under a coloring.

Three independent interval-domain counters are kept deliberately separate:

  count_rainbow_naive   scans every quad (the ground-truth oracle);
  count_rainbow_fast    sums, per pair sum l, products of representation
                        counts over the three ways to split four colors into
                        side pairs (disjoint classes make each rainbow quad
                        land in exactly one product);
  rainbow_via_energy    for k = 4, three 4-fold additive energies with the
                        second side negated.

The cyclic (Z_n) counters follow the same split, with sums read mod n and the
pairing treated as part of the solution.
"""
from __future__ import annotations

import itertools
import json
from enum import Enum
from fractions import Fraction
from typing import Iterator, NamedTuple

import numpy as np

from .core import ClassBreakdown, Coloring, Domain, SidonQuad
from .enumeration import f_n_exact
from .repfn import IntSet, additive_energy, negate_set


class QuadClass(Enum):
    RAINBOW = 4
    THREE_COLORED = 3
    TWO_COLORED = 2
    MONOCHROMATIC = 1


def classify_quad(q: SidonQuad, c: Coloring) -> QuadClass:
    """Class of a quad by how many distinct colors its four elements receive."""
    if c.domain is not Domain.INTERVAL:
        raise ValueError("classify_quad expects an interval coloring")
    distinct = len({c.color_of(x) for x in q.elements})
    return QuadClass(distinct)


def iter_quad_tuples(n: int) -> Iterator[tuple[int, int, int, int]]:
    """The enumerate_quads stream as bare tuples, same order, for tight loops."""
    for l in range(5, 2 * n):
        lo = max(1, l - n)
        hi = (l - 1) // 2
        for x4 in range(hi - 1, lo - 1, -1):
            for x3 in range(hi, x4, -1):
                yield (l - x4, l - x3, x3, x4)


def count_rainbow_naive(c: Coloring) -> ClassBreakdown:
    """Full breakdown by scanning every Sidon 4-set of [n]. The oracle."""
    if c.domain is not Domain.INTERVAL:
        raise ValueError("count_rainbow_naive expects an interval coloring")
    masks = [1 << col for col in c.colors]
    tallies = [0, 0, 0, 0, 0]
    for x1, x2, x3, x4 in iter_quad_tuples(c.n):
        m = masks[x1 - 1] | masks[x2 - 1] | masks[x3 - 1] | masks[x4 - 1]
        tallies[m.bit_count()] += 1
    return ClassBreakdown(
        rainbow=tallies[4],
        monochromatic=tallies[1],
        two_colored=tallies[2],
        three_colored=tallies[3],
    )


def _pair_profiles(c: Coloring) -> dict[tuple[int, int], np.ndarray]:
    """r_{X_i + X_j} for every unordered color pair, as arrays indexed by sum l."""
    classes = [np.array(cls, dtype=np.int64) for cls in c.classes()]
    width = 2 * c.n + 1
    profiles = {}
    for i, j in itertools.combinations(range(c.k), 2):
        if len(classes[i]) and len(classes[j]):
            sums = np.add.outer(classes[i], classes[j]).ravel()
            profiles[(i, j)] = np.bincount(sums, minlength=width)
        else:
            profiles[(i, j)] = np.zeros(width, dtype=np.int64)
    return profiles


def _split_product_total(profiles, k: int, sl: slice) -> int:
    """Sum over color 4-subsets and their three side splits of profile products."""
    total = 0
    for i, j, s, t in itertools.combinations(range(k), 4):
        for (p, q), (r, w) in (((i, j), (s, t)), ((i, s), (j, t)), ((i, t), (j, s))):
            total += int(np.dot(profiles[(p, q)][sl], profiles[(r, w)][sl]))
    return total


def count_rainbow_fast(c: Coloring, budget_bytes: int = 1 << 30) -> int:
    """Rainbow count via per-color-pair representation profiles.

    Needs C(k,2) profiles of length 2n+1; if that exceeds budget_bytes the
    function falls back to the naive scan (same answer, no allocation).
    """
    if c.domain is not Domain.INTERVAL:
        raise ValueError("count_rainbow_fast expects an interval coloring")
    if c.k < 4:
        return 0
    pairs = c.k * (c.k - 1) // 2
    if pairs * (2 * c.n + 1) * 8 > budget_bytes:
        return count_rainbow_naive(c).rainbow
    profiles = _pair_profiles(c)
    return _split_product_total(profiles, c.k, slice(None))


def rainbow_fast_chunked(c: Coloring, cuts: list[int]) -> int:
    """Same sum as count_rainbow_fast, evaluated over sum-axis chunks split at
    the given cut points and recombined by addition. Contract: chunking must
    never change the result."""
    if c.domain is not Domain.INTERVAL:
        raise ValueError("rainbow_fast_chunked expects an interval coloring")
    if c.k < 4:
        return 0
    profiles = _pair_profiles(c)
    edges = [0] + sorted(cuts) + [2 * c.n + 1]
    return sum(
        _split_product_total(profiles, c.k, slice(a, b)) for a, b in zip(edges, edges[1:])
    )


def rainbow_via_energy(c: Coloring) -> int:
    """Rainbow count for a 4-coloring as a sum of three additive energies.

    Each rainbow quad has its color set {1,2,3,4} split across the two sides
    in one of three ways; the energy E_4(X_a, X_b, -X_c, -X_d) counts exactly
    the quads split as {a,b} vs {c,d}. Classes being disjoint keeps the four
    tuple entries distinct, so no degenerate tuples are counted.
    """
    if c.domain is not Domain.INTERVAL:
        raise ValueError("rainbow_via_energy expects an interval coloring")
    if c.k != 4:
        raise ValueError(f"energy route needs exactly 4 colors, got k={c.k}")
    X = [IntSet(cls) for cls in c.classes()]
    negX = [negate_set(x) for x in X]
    total = 0
    for a, b in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        total += additive_energy([X[a[0]], X[a[1]], negX[b[0]], negX[b[1]]])
    return total


def _cyclic_pair_masks(c: Coloring) -> list[list[int]]:
    """Color-pair masks of all unordered element pairs, bucketed by sum mod n."""
    n = c.n
    masks = [1 << col for col in c.colors]
    buckets: list[list[int]] = [[] for _ in range(n)]
    for a in range(1, n + 1):
        ma = masks[a - 1]
        for b in range(a + 1, n + 1):
            buckets[(a + b) % n].append(ma | masks[b - 1])
    return buckets


def count_rainbow_cyclic_naive(c: Coloring) -> int:
    """Rainbow solutions to x+y = z+t in Z_n by scanning pairs of same-sum pairs.

    Distinct pairs with equal sum mod n are disjoint, and the same 4-set may
    balance under a second pairing, which counts as a separate solution.
    """
    if c.domain is not Domain.CYCLIC:
        raise ValueError("count_rainbow_cyclic_naive expects a cyclic coloring")
    count = 0
    for bucket in _cyclic_pair_masks(c):
        for i in range(len(bucket)):
            mi = bucket[i]
            for j in range(i + 1, len(bucket)):
                if (mi | bucket[j]).bit_count() == 4:
                    count += 1
    return count


def count_rainbow_cyclic_fast(c: Coloring) -> int:
    """Cyclic rainbow count via residue-indexed profiles per color pair."""
    if c.domain is not Domain.CYCLIC:
        raise ValueError("count_rainbow_cyclic_fast expects a cyclic coloring")
    if c.k < 4:
        return 0
    n = c.n
    classes = [np.array(cls, dtype=np.int64) for cls in c.classes()]
    profiles = {}
    for i, j in itertools.combinations(range(c.k), 2):
        if len(classes[i]) and len(classes[j]):
            sums = (np.add.outer(classes[i], classes[j]).ravel() - 1) % n
            profiles[(i, j)] = np.bincount(sums, minlength=n)
        else:
            profiles[(i, j)] = np.zeros(n, dtype=np.int64)
    return _split_product_total(profiles, c.k, slice(None))


class MonoPairs(NamedTuple):
    count: int
    lower_bound: Fraction
    satisfied: bool


def monochromatic_pairs(c: Coloring) -> MonoPairs:
    """Exact number of same-colored pairs, with the convexity floor n^2/(2k) - n/2."""
    if c.domain is not Domain.INTERVAL:
        raise ValueError("monochromatic_pairs expects an interval coloring")
    sizes = [len(cls) for cls in c.classes()]
    count = sum(s * (s - 1) // 2 for s in sizes)
    bound = Fraction(c.n**2, 2 * c.k) - Fraction(c.n, 2)
    return MonoPairs(count, bound, count >= bound)


def non_rainbow_lower_bound(c: Coloring) -> Fraction:
    """Exact rational floor on the number of non-rainbow quads.

    A quad that is not rainbow repeats a color, so it contains a same-colored
    pair; summing, over all same-colored pairs, the number of quads through
    the pair counts each non-rainbow quad at most six times.
    """
    if c.domain is not Domain.INTERVAL:
        raise ValueError("non_rainbow_lower_bound expects an interval coloring")
    scale = Fraction(1, 6)
    total = 0
    for cls in c.classes():
        for bi in range(len(cls)):
            for ai in range(bi + 1, len(cls)):
                total += f_n_exact(c.n, cls[bi], cls[ai])
    return scale * total


def breakdown_to_json(n: int, k: int, bd: ClassBreakdown) -> str:
    """One-line JSON export of a class breakdown."""
    return json.dumps(
        {
            "n": n,
            "k": k,
            "rainbow": bd.rainbow,
            "monochromatic": bd.monochromatic,
            "two": bd.two_colored,
            "three": bd.three_colored,
            "total": bd.total,
        },
        separators=(",", ":"),
    )
