"""Exact geometry of unimodular simplicial cones.

H-representations come from dual bases, which exist integrally because every
cone handled here is generated by part of a lattice basis.  Extreme rays of
a constraint cone are enumerated with an incremental double description
sweep over exact integers, and completeness of a fan is decided by wall
pairing.  Dimensions stay desk-scale, so nothing here is optimized beyond
keeping the candidate sets minimal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import NonUnimodularCone, NotPointed, NotPure
from .lattice import (
    IntVector,
    dot,
    identity_matrix,
    kernel_basis,
    mat_mul,
    primitive_part,
    rank,
    smith_normal_form,
    spans_unimodular_subspace,
    transpose,
)

SimplicialCone = tuple[int, ...]
"""A cone is named by the sorted indices of its generating rays."""


@dataclass(frozen=True)
class HalfspaceRep:
    """Exact H-representation: <m, x> = 0 for equalities, >= 0 for inequalities."""

    equalities: tuple[IntVector, ...]
    inequalities: tuple[IntVector, ...]


def h_representation(cone: Sequence[int], rays: Sequence[Sequence[int]]) -> HalfspaceRep:
    """Constraints cutting out a unimodular simplicial cone.

    The inequalities are the dual vectors m_1..m_k with <m_i, v_j> = delta_ij
    against the generators v_1..v_k; the equalities are a basis of the
    integer annihilator of the generators.  Both families consist of
    primitive vectors.
    """
    idx = tuple(cone)
    vs = tuple(tuple(rays[i]) for i in idx)
    n = len(vs[0])
    if not spans_unimodular_subspace(vs, n):
        raise NonUnimodularCone(f"cone {idx} is not generated by part of a lattice basis")
    k = len(vs)
    snf = smith_normal_form(vs)
    # L @ V @ R = [I_k | 0], so the columns of R @ [I_k; 0] @ L form the dual
    # basis and the remaining columns of R span the annihilator.
    pad = tuple(tuple(int(i == j) for j in range(k)) for i in range(n))
    duals = transpose(mat_mul(mat_mul(snf.right_transform, pad), snf.left_transform))
    return HalfspaceRep(
        equalities=transpose(snf.right_transform)[k:],
        inequalities=duals,
    )


def _prune(
    rays: list[IntVector],
    processed: list[IntVector],
) -> list[IntVector]:
    """Drop duplicates, lineality members, and strictly dominated candidates.

    A candidate whose active constraint set is strictly contained in another
    candidate's can never be extreme; ties are left alone and resolved by the
    exact nullity filter at the end of the sweep.
    """
    uniq: list[IntVector] = []
    seen: set[IntVector] = set()
    for r in rays:
        if any(r) and r not in seen:
            seen.add(r)
            uniq.append(r)
    kept = [r for r in uniq if not all(dot(c, r) == 0 for c in processed)]
    active = {
        r: frozenset(i for i, c in enumerate(processed) if dot(c, r) == 0) for r in kept
    }
    return [
        r for r in kept if not any(active[r] < active[o] for o in kept if o != r)
    ]


def extreme_rays(constraints: HalfspaceRep) -> tuple[IntVector, ...]:
    """Primitive generators of the extreme rays of a pointed constraint cone.

    Equalities are removed first by restricting to their integer kernel; the
    inequalities are then folded in one at a time.  While lines remain, a
    constraint that cuts a line converts it into a ray and projects the other
    generators onto the constraint hyperplane; afterwards the usual
    positive/negative ray combination step applies.  A candidate survives the
    final filter exactly when its active constraints leave a one-dimensional
    solution space.  Raises NotPointed when a line survives every constraint.
    """
    vecs = constraints.equalities + constraints.inequalities
    if not vecs:
        raise ValueError("empty constraint system does not describe a pointed cone")
    n = len(vecs[0])
    if constraints.equalities:
        basis = kernel_basis(constraints.equalities)
    else:
        basis = identity_matrix(n)
    m = len(basis)
    if m == 0:
        return ()
    restricted = []
    for c in constraints.inequalities:
        v = tuple(dot(c, b) for b in basis)
        if any(v):
            restricted.append(v)
    if not restricted:
        raise NotPointed("constraints leave a positive-dimensional subspace")

    lines = [tuple(row) for row in identity_matrix(m)]
    rays: list[IntVector] = []
    processed: list[IntVector] = []
    for c in restricted:
        processed.append(c)
        pidx = next((i for i, l in enumerate(lines) if dot(c, l) != 0), None)
        if pidx is not None:
            pivot = lines.pop(pidx)
            s = dot(c, pivot)
            if s < 0:
                pivot = tuple(-x for x in pivot)
                s = -s
            lines = [
                primitive_part(tuple(s * u - dot(c, l) * p for u, p in zip(l, pivot)))
                for l in lines
            ]
            rays = [
                primitive_part(tuple(s * u - dot(c, r) * p for u, p in zip(r, pivot)))
                for r in rays
            ]
            rays.append(pivot)
        else:
            weights = [(r, dot(c, r)) for r in rays]
            pos = [(r, w) for r, w in weights if w > 0]
            zero = [r for r, w in weights if w == 0]
            neg = [(r, w) for r, w in weights if w < 0]
            combos = [
                primitive_part(tuple(wp * x - wn * y for x, y in zip(rn, rp)))
                for rp, wp in pos
                for rn, wn in neg
            ]
            rays = [r for r, _ in pos] + zero + combos
        rays = _prune(rays, processed)

    if lines:
        raise NotPointed("constraint cone contains a line")

    final = []
    for r in rays:
        active = [c for c in processed if dot(c, r) == 0]
        if m - rank(active) == 1:
            final.append(r)
    back = {
        primitive_part(tuple(sum(y[i] * basis[i][j] for i in range(m)) for j in range(n)))
        for y in final
    }
    return tuple(sorted(back))


def intersect_in_common_face(
    a: Sequence[int],
    b: Sequence[int],
    rays: Sequence[Sequence[int]],
    rep_a: HalfspaceRep | None = None,
    rep_b: HalfspaceRep | None = None,
) -> bool:
    """Fan axiom check: do two cones meet exactly along their shared rays?

    For simplicial cones the subset of shared generators spans a face of
    each; the axiom holds precisely when the geometric intersection has those
    shared rays as its extreme rays.
    """
    rep_a = rep_a or h_representation(a, rays)
    rep_b = rep_b or h_representation(b, rays)
    combined = HalfspaceRep(
        rep_a.equalities + rep_b.equalities,
        rep_a.inequalities + rep_b.inequalities,
    )
    got = set(extreme_rays(combined))
    want = {tuple(rays[i]) for i in set(a) & set(b)}
    return got == want


def is_complete(fan) -> bool:
    """Wall criterion: every (n-1)-face of a maximal cone borders exactly two.

    Assumes the fan already passed validation with all maximal cones
    full-dimensional; an unpaired wall is exactly a boundary piece of the
    fan's support.
    """
    n = fan.dim
    for c in fan.max_cones:
        if len(c) != n:
            raise NotPure(f"maximal cone {c} is not full-dimensional")
    walls: Counter = Counter()
    for c in fan.max_cones:
        for w in combinations(c, n - 1):
            walls[w] += 1
    return all(v == 2 for v in walls.values())
