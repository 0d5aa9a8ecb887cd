"""Quotient-presentation combinatorics for smooth fans.

A fan with N rays presents its variety as (A^N minus a coordinate subspace
arrangement) divided by a torus of rank N - dim.  This module computes the
pieces of that presentation: the irrelevant ideal, the minimal non-faces
that index the arrangement components, an independent brute-force expansion
of the same arrangement, the pairwise intersection predicates the homotopy
engine keys on, and the divisor class (Picard) group.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import TorsionDetected
from .fan import Fan
from .lattice import IntMatrix, smith_normal_form


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal; generators are sorted variable-index tuples.

    Generators form an antichain: no support contains another.  The empty
    tuple denotes the monomial 1, i.e. the unit ideal.
    """

    generators: tuple[tuple[int, ...], ...]
    nvars: int


@dataclass(frozen=True)
class SubspaceArrangement:
    """Union of coordinate subspaces; component S means {x_i = 0 for i in S}."""

    components: tuple[tuple[int, ...], ...]
    ambient: int

    @property
    def codim(self) -> int | None:
        """Smallest component size; None for the empty arrangement."""
        return min((len(c) for c in self.components), default=None)


def _minimal_family(sets: Iterable[frozenset]) -> list[frozenset]:
    ordered = sorted(set(sets), key=lambda s: (len(s), tuple(sorted(s))))
    kept: list[frozenset] = []
    for s in ordered:
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def _canonical(sets: Iterable[frozenset]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(s)) for s in sets), key=lambda t: (len(t), t)))


def irrelevant_ideal(fan: Fan) -> MonomialIdeal:
    """One generator per maximal cone: the complementary variables, antichain-reduced."""
    nvars = len(fan.rays)
    gens = [frozenset(range(nvars)) - frozenset(c) for c in fan.max_cones]
    return MonomialIdeal(_canonical(_minimal_family(gens)), nvars)


def minimal_nonfaces(
    fan: Fan, up_to_size: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """Inclusion-minimal ray index sets contained in no cone, smallest first.

    A set is a face of a simplicial fan exactly when it sits inside some
    maximal cone, so the enumeration walks subsets by size and skips
    supersets of non-faces already found.
    """
    nrays = len(fan.rays)
    cones = [set(c) for c in fan.max_cones]
    limit = nrays if up_to_size is None else min(up_to_size, nrays)
    found: list[tuple[int, ...]] = []
    found_sets: list[set[int]] = []
    for size in range(1, limit + 1):
        for comb in combinations(range(nrays), size):
            s = set(comb)
            if any(f <= s for f in found_sets):
                continue
            if not any(s <= c for c in cones):
                found.append(comb)
                found_sets.append(s)
    return tuple(found)


def arrangement(fan: Fan) -> SubspaceArrangement:
    """The excluded subvariety of the quotient presentation: all minimal non-faces."""
    return SubspaceArrangement(minimal_nonfaces(fan), len(fan.rays))


def arrangement_bruteforce(ideal: MonomialIdeal) -> SubspaceArrangement:
    """Independent oracle: expand the vanishing locus of the ideal directly.

    The zero set of a squarefree monomial is the union of the hyperplanes of
    its variables, so the zero set of the ideal expands, one generator at a
    time, into unions of coordinate subspaces indexed by one variable choice
    per generator; reducing to inclusion-minimal choice sets after each step
    leaves exactly the components.  No face reasoning is involved.
    """
    current: list[frozenset] = [frozenset()]
    for g in ideal.generators:
        if not g:
            # The generator is the monomial 1: the locus is empty.
            return SubspaceArrangement((), ideal.nvars)
        current = _minimal_family(s | {v} for s in current for v in g)
    return SubspaceArrangement(_canonical(current), ideal.nvars)


def pairwise_intersection_ok(arr: SubspaceArrangement, d: int) -> bool:
    """Do the codimension-d components pairwise meet in codimension >= d + 2?

    Two predicates are evaluated: the pair form (every two components share
    at most d-2 indices) and the completion form (no (d-1)-subset extends
    into two different components).  They are equivalent, and the assertion
    keeps them honest.  Callers must filter the arrangement to components of
    size exactly d first.
    """
    comps = arr.components
    if any(len(c) != d for c in comps):
        raise ValueError("pairwise_intersection_ok expects components of size exactly d")
    pair_ok = all(len(set(s) & set(t)) <= d - 2 for s, t in combinations(comps, 2))
    witness: Counter = Counter(sub for c in comps for sub in combinations(c, d - 1))
    completion_ok = all(v <= 1 for v in witness.values())
    assert pair_ok == completion_ok
    return pair_ok


@dataclass(frozen=True)
class PicardGroup:
    """Free part of Z^rays modulo the characters, with the class projection.

    class_map has shape rank x nrays and sends a divisor coefficient vector
    to the coordinates of its class; principal divisors map to zero.
    """

    rank: int
    torsion_factors: tuple[int, ...]
    class_map: IntMatrix


def picard_group(fan: Fan) -> PicardGroup:
    """Cokernel of m -> (<m, rho>)_rho over all rays, by Smith reduction.

    For a validated smooth complete fan the cokernel is free of rank
    nrays - dim; torsion or a rank defect means the input was not such a
    fan and raises TorsionDetected.
    """
    nrays, n = len(fan.rays), fan.dim
    snf = smith_normal_form(fan.rays)
    nonzero = [f for f in snf.invariant_factors if f]
    torsion = tuple(f for f in nonzero if f > 1)
    if torsion:
        raise TorsionDetected(f"divisor class group has torsion factors {torsion}")
    if len(nonzero) != n:
        raise TorsionDetected("rays do not span the ambient lattice")
    return PicardGroup(nrays - n, (), snf.left_transform[n:])
