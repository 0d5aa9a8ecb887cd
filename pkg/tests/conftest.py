"""Shared corpus of smooth complete fans.

Built once per session: the named families plus seeded random blow-up
chains over the plane and the 3-space, so every oracle comparison and
structural invariant runs against the same varied population.
"""

from __future__ import annotations

import random

import pytest

from fancox.fan import Fan, hirzebruch, kleinschmidt, projective_space, star_subdivision
from helpers import random_blowup_chain

CHAIN_SEED = 977317


def _named_fans() -> list[tuple[str, Fan]]:
    fans: list[tuple[str, Fan]] = []
    for n in (2, 3, 4):
        fans.append((f"P^{n}", projective_space(n)))
    for a in range(6):
        fans.append((f"F_{a}", hirzebruch(a)))
    for d, a in [(3, [0, 0]), (3, [1, 2]), (4, [0, 1]), (4, [1, 1, 2]), (5, [2]), (5, [1, 2, 3])]:
        fans.append((f"K_{d}{a}", kleinschmidt(d, a)))
    for n in (2, 3, 4):
        pn = projective_space(n)
        one = star_subdivision(pn, tuple(range(n)))
        fans.append((f"Bl1.P^{n}", one))
        two = star_subdivision(one, tuple(range(1, n + 1)))
        fans.append((f"Bl2.P^{n}", two))
    return fans


def _random_chains() -> list[tuple[str, Fan]]:
    rng = random.Random(CHAIN_SEED)
    chains: list[tuple[str, Fan]] = []
    for i in range(50):
        depth = rng.randint(1, 4)
        chains.append((f"chain2.{i}", random_blowup_chain(projective_space(2), depth, rng)))
    for i in range(50):
        depth = rng.randint(1, 4)
        chains.append((f"chain3.{i}", random_blowup_chain(projective_space(3), depth, rng)))
    return chains


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, Fan]]:
    return _named_fans() + _random_chains()


@pytest.fixture(scope="session")
def incomplete_fans() -> list[tuple[str, Fan]]:
    """Hand-built fans whose support visibly misses directions."""
    p3 = projective_space(3)
    return [
        ("quadrant", Fan(2, ((1, 0), (0, 1)), ((0, 1),))),
        ("halfplane", Fan(2, ((1, 0), (0, 1), (-1, 0)), ((0, 1), (1, 2)))),
        (
            "three-quadrants",
            Fan(2, ((1, 0), (0, 1), (-1, 0), (0, -1)), ((0, 1), (1, 2), (2, 3))),
        ),
        ("octant", Fan(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)), ((0, 1, 2),))),
        ("P3-minus-one", Fan(3, p3.rays, p3.max_cones[:-1])),
    ]
