"""Shared independent oracles for the test suite.

Everything here deliberately avoids the library's own algorithms: minors
instead of Smith reduction, rational elimination instead of fraction-free
elimination, Monte-Carlo point coverage instead of wall pairing.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from fancox.fan import Fan, star_subdivision
from fancox.lattice import mat_mul, mat_vec, smith_normal_form, transpose


def laplace_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by first-row cofactor expansion; fine for tiny matrices."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in [list(r) for r in m[1:]]]
        total += (-1) ** j * m[0][j] * laplace_det(minor)
    return total


def minor_gcds(m: Sequence[Sequence[int]]) -> list[int]:
    """g_k = gcd of all k x k minors, for k = 1..min(rows, cols)."""
    rows, cols = len(m), len(m[0]) if m else 0
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                sub = [[m[i][j] for j in ci] for i in ri]
                g = gcd(g, laplace_det(sub))
        out.append(g)
    return out


def unimodular_by_minors(vectors: Sequence[Sequence[int]]) -> bool:
    """Minor oracle: a k x n matrix spans a rank-k direct summand exactly
    when the gcd of its k x k minors is 1 (0 gcd means a rank defect)."""
    gs = minor_gcds(vectors)
    if len(vectors) > len(vectors[0]):
        return False
    return gs[-1] == 1


def rank_by_fractions(m: Sequence[Sequence[int]]) -> int:
    """Rank via plain Gaussian elimination over Fraction."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rk = 0
    for c in range(cols):
        pivot = next((i for i in range(rk, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[rk], a[pivot] = a[pivot], a[rk]
        for i in range(rows):
            if i != rk and a[i][c] != 0:
                f = a[i][c] / a[rk][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk


def cone_inverses(fan: Fan) -> list[tuple[tuple[int, ...], ...]]:
    """Integer inverse of the ray-column matrix of each maximal cone.

    Unimodular cones have L @ V @ R = I, so V^-1 = R @ L exactly.
    """
    inverses = []
    n = fan.dim
    for cone in fan.max_cones:
        v_cols = transpose(tuple(fan.rays[i] for i in cone))
        snf = smith_normal_form(v_cols)
        assert snf.invariant_factors == tuple([1] * n), "oracle needs unimodular cones"
        inv = mat_mul(snf.right_transform, snf.left_transform)
        assert mat_mul(inv, v_cols) == tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n)
        )
        inverses.append(inv)
    return inverses


def monte_carlo_complete(fan: Fan, samples: int = 1000, seed: int = 20260816) -> bool:
    """Coverage oracle: does every sampled direction land in some maximal cone?

    Membership is scale-invariant, so integer directions from a box probe the
    sphere of directions; a point lies in a unimodular cone exactly when its
    coordinates in that cone's ray basis are all non-negative.
    """
    inverses = cone_inverses(fan)
    rng = random.Random(seed)
    n = fan.dim
    checked = 0
    while checked < samples:
        p = tuple(rng.randint(-9, 9) for _ in range(n))
        if not any(p):
            continue
        checked += 1
        if not any(all(x >= 0 for x in mat_vec(inv, p)) for inv in inverses):
            return False
    return True


def random_face(fan: Fan, rng: random.Random) -> tuple[int, ...]:
    """A uniformly chosen at-least-2-ray face of a random maximal cone."""
    cone = rng.choice(fan.max_cones)
    size = rng.randint(2, len(cone))
    return tuple(sorted(rng.sample(cone, size)))


def random_blowup_chain(base: Fan, depth: int, rng: random.Random) -> Fan:
    fan = base
    for _ in range(depth):
        fan = star_subdivision(fan, random_face(fan, rng))
    return fan
