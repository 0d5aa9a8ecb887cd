"""Acceptance gate: one test per criterion, exact expectations throughout.

Every expected value below was computed independently before the library
produced it: closed forms for the classical families, hand-enumerated cone
lists for the blow-ups, and brute-force or Monte-Carlo oracles everywhere a
combinatorial claim is double-checked.  All comparisons are exact equality;
no tolerances apply anywhere in this suite.
"""

import random
from collections import Counter
from itertools import combinations, combinations_with_replacement

from fancox.cox import (
    arrangement,
    arrangement_bruteforce,
    irrelevant_ideal,
    minimal_nonfaces,
    picard_group,
)
from fancox.fan import hirzebruch, kleinschmidt, projective_space, star_subdivision, validate
from fancox.geometry import is_complete
from fancox.homotopy import (
    Extension,
    MWPower,
    Partial,
    TorusPower,
    analyze,
    kleinschmidt_case,
)
from helpers import monte_carlo_complete, random_face


def test_acceptance_1_projective_spaces() -> None:
    for n in range(2, 7):
        rep = analyze(projective_space(n))
        assert rep.pi1 == TorusPower(1), n
        assert rep.vanishing == (2, n - 1), n
        assert rep.first_higher.degree == n, n
        assert rep.first_higher.group == MWPower(n + 1, 1), n
        assert any(note.startswith("kmw-weight:") for note in rep.notes), n
    print(
        "ACCEPTANCE 1: PASS - P^2..P^6 report pi1 = Gm, vanishing through n-1, "
        "and pi_n = KMW(n+1) with the weight-convention note attached"
    )


def test_acceptance_2_hirzebruch_surfaces() -> None:
    for a in range(6):
        rep = analyze(hirzebruch(a))
        assert rep.cox.codim == 2 and rep.cox.count == 2 and rep.cox.pairwise_ok, a
        assert rep.pi1 == Extension(MWPower(2, 2), TorusPower(2)), a
        assert picard_group(hirzebruch(a)).rank == 2, a
    print(
        "ACCEPTANCE 2: PASS - F_0..F_5 all have two disjoint codim-2 components "
        "and pi1 = ext(KMW(2)^2 -> . -> Gm^2) over a rank-2 class group"
    )


def test_acceptance_3_blowup_chains() -> None:
    for n in range(3, 6):
        pn = projective_space(n)
        one = star_subdivision(pn, tuple(range(n)))
        pairs = [nf for nf in minimal_nonfaces(one) if len(nf) == 2]
        assert pairs == [(n, n + 1)], n
        assert analyze(one).pi1 == Extension(MWPower(2, 1), TorusPower(2)), n

        two = star_subdivision(one, tuple(range(1, n + 1)))
        rep = analyze(two)
        assert rep.pi1 == Partial(TorusPower(3)), n
        assert picard_group(two).rank == 3, n
    print(
        "ACCEPTANCE 3: PASS - one blow-up of P^3..P^5 gives exactly the pair (n, n+1) "
        "and an extension pi1; a second touching blow-up downgrades to surj-onto(Gm^3)"
    )


def test_acceptance_4_kleinschmidt_trichotomy() -> None:
    cases = 0
    for d in range(2, 6):
        for r in range(1, d):
            s = d - r + 1
            for a in combinations_with_replacement(range(4), r):
                got = analyze(kleinschmidt(d, list(a))).pi1
                assert got == kleinschmidt_case(r, s), (d, a)
                cases += 1
    print(
        f"ACCEPTANCE 4: PASS - all {cases} Kleinschmidt fans with d <= 5 and weights <= 3 "
        "match the closed-form pi1 trichotomy"
    )


def test_acceptance_5_arrangement_oracles(corpus) -> None:
    for name, fan in corpus:
        direct = arrangement(fan)
        brute = arrangement_bruteforce(irrelevant_ideal(fan))
        assert direct == brute, name

        d = min(len(c) for c in direct.components)
        comps_d = [c for c in direct.components if len(c) == d]
        pair_form = all(len(set(a) & set(b)) <= d - 2 for a, b in combinations(comps_d, 2))
        counts = Counter(sub for c in comps_d for sub in combinations(c, d - 1))
        completion_form = all(v <= 1 for v in counts.values())
        assert pair_form == completion_form, name
    print(
        f"ACCEPTANCE 5: PASS - on all {len(corpus)} corpus fans the non-face arrangement "
        "equals the brute-force ideal expansion, and the two pairwise predicates agree"
    )


def test_acceptance_6_subdivision_invariants(corpus) -> None:
    rng = random.Random(515151)
    for name, fan in corpus:
        sub = star_subdivision(fan, random_face(fan, rng))
        rep = validate(sub)
        assert rep.is_valid_fan and rep.is_smooth and rep.is_complete, name
        assert len(sub.rays) == len(fan.rays) + 1, name
        assert picard_group(sub).rank == picard_group(fan).rank + 1, name
    print(
        f"ACCEPTANCE 6: PASS - a random star subdivision of each of the {len(corpus)} corpus "
        "fans stays smooth and complete, adds one ray, and raises the class rank by one"
    )


def test_acceptance_7_completeness_oracle(corpus, incomplete_fans) -> None:
    for name, fan in corpus:
        assert is_complete(fan), name
        assert monte_carlo_complete(fan), name
        assert validate(fan).is_complete, name
    for name, fan in incomplete_fans:
        assert not is_complete(fan), name
        assert not monte_carlo_complete(fan), name
    print(
        f"ACCEPTANCE 7: PASS - wall pairing and the 1000-direction Monte-Carlo oracle agree: "
        f"complete on all {len(corpus)} corpus fans, incomplete on all {len(incomplete_fans)} "
        "hand-built counterexamples"
    )
