"""Quotient presentation: ideal, arrangement, oracle equality, class group."""

from itertools import combinations

import pytest

from fancox.cox import (
    SubspaceArrangement,
    arrangement,
    arrangement_bruteforce,
    irrelevant_ideal,
    minimal_nonfaces,
    pairwise_intersection_ok,
    picard_group,
)
from fancox.errors import TorsionDetected
from fancox.fan import Fan, hirzebruch, projective_space, star_subdivision
from fancox.lattice import mat_mul, spans_unimodular_subspace


def test_irrelevant_ideal_projective_plane() -> None:
    ideal = irrelevant_ideal(projective_space(2))
    assert ideal.nvars == 3
    assert ideal.generators == ((0,), (1,), (2,))


def test_irrelevant_ideal_product_of_lines() -> None:
    ideal = irrelevant_ideal(hirzebruch(0))
    assert ideal.generators == ((0, 2), (0, 3), (1, 2), (1, 3))


def test_irrelevant_ideal_is_an_antichain() -> None:
    fan = star_subdivision(projective_space(3), (0, 1))
    gens = irrelevant_ideal(fan).generators
    for a, b in combinations(gens, 2):
        assert not set(a) <= set(b) and not set(b) <= set(a)


def test_minimal_nonfaces_examples() -> None:
    assert minimal_nonfaces(projective_space(2)) == ((0, 1, 2),)
    assert minimal_nonfaces(hirzebruch(2)) == ((0, 1), (2, 3))
    # Blowing up the plane leaves two pairs; from 3-space on, the center cone
    # stays a face and the only new pair is (old apex ray, new ray).
    bl2 = star_subdivision(projective_space(2), (0, 1))
    assert minimal_nonfaces(bl2) == ((0, 1), (2, 3))
    for n in (3, 4):
        bl = star_subdivision(projective_space(n), tuple(range(n)))
        nfs = minimal_nonfaces(bl)
        assert [nf for nf in nfs if len(nf) == 2] == [(n, n + 1)]


def test_minimal_nonfaces_size_cap() -> None:
    fan = projective_space(3)
    assert minimal_nonfaces(fan, up_to_size=2) == ()
    assert minimal_nonfaces(fan, up_to_size=4) == ((0, 1, 2, 3),)


def test_minimal_nonfaces_are_actually_minimal_nonfaces(corpus) -> None:
    for name, fan in corpus[:25]:
        cones = [set(c) for c in fan.max_cones]
        for nf in minimal_nonfaces(fan):
            s = set(nf)
            assert not any(s <= c for c in cones), name
            for drop in nf:
                smaller = s - {drop}
                assert any(smaller <= c for c in cones), name


def test_arrangement_matches_bruteforce_oracle(corpus) -> None:
    for name, fan in corpus[:40]:
        direct = arrangement(fan)
        brute = arrangement_bruteforce(irrelevant_ideal(fan))
        assert direct == brute, name


def test_bruteforce_handles_unit_ideal() -> None:
    # A single affine cone uses every ray, so no variable is irrelevant.
    quadrant = Fan(2, ((1, 0), (0, 1)), ((0, 1),))
    arr = arrangement_bruteforce(irrelevant_ideal(quadrant))
    assert arr.components == ()
    assert arrangement(quadrant).components == ()


def test_small_nonface_threshold_biconditional(corpus) -> None:
    # All minimal non-faces have size >= d exactly when every (d-1)-element
    # ray set is a face; the right side is enumerated from scratch.
    for name, fan in corpus[:25]:
        nrays = len(fan.rays)
        nonfaces = minimal_nonfaces(fan)
        cones = [set(c) for c in fan.max_cones]
        for d in range(2, min(5, nrays + 1) + 1):
            lhs = all(len(nf) >= d for nf in nonfaces)
            rhs = all(
                any(set(comb) <= c for c in cones)
                for comb in combinations(range(nrays), d - 1)
            )
            assert lhs == rhs, (name, d)


def test_pairwise_intersection_ok_cases() -> None:
    def arr(*comps):
        return SubspaceArrangement(tuple(comps), 10)

    assert pairwise_intersection_ok(arr((0, 1), (2, 3)), 2)
    assert not pairwise_intersection_ok(arr((0, 1), (1, 2)), 2)
    assert pairwise_intersection_ok(arr((0, 1, 2), (2, 3, 4)), 3)
    assert not pairwise_intersection_ok(arr((0, 1, 2), (0, 1, 3)), 3)
    assert pairwise_intersection_ok(arr((0, 1, 2)), 3)
    with pytest.raises(ValueError):
        pairwise_intersection_ok(arr((0, 1), (2, 3, 4)), 2)


def test_arrangement_codim() -> None:
    assert SubspaceArrangement((), 4).codim is None
    assert SubspaceArrangement(((0, 1), (2, 3, 4)), 5).codim == 2


def test_picard_group_of_builtins() -> None:
    for n in range(1, 6):
        assert picard_group(projective_space(n)).rank == 1
    for a in range(5):
        assert picard_group(hirzebruch(a)).rank == 2
    chain = star_subdivision(projective_space(3), (0, 1, 2))
    assert picard_group(chain).rank == 2


def test_picard_class_map_annihilates_principal_divisors(corpus) -> None:
    for name, fan in corpus[:25]:
        pic = picard_group(fan)
        assert pic.torsion_factors == ()
        assert len(pic.class_map) == pic.rank
        product = mat_mul(pic.class_map, fan.rays)
        assert all(all(x == 0 for x in row) for row in product), name
        assert spans_unimodular_subspace(pic.class_map, len(fan.rays)), name


def test_picard_rejects_torsion_and_rank_defects() -> None:
    with pytest.raises(TorsionDetected):
        # Index-two sublattice: the class group gains a Z/2.
        picard_group(Fan(2, ((1, 1), (1, -1)), ((0, 1),)))
    with pytest.raises(TorsionDetected):
        # Rays span only a line in the plane.
        picard_group(Fan(2, ((1, 0), (-1, 0)), ((0,), (1,))))
