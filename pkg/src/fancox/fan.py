"""Fans of unimodular simplicial cones.

The Fan type stores primitive rays plus maximal cones as ray-index sets.
Validation checks every fan axiom and reports all findings; the builders
cover projective spaces, the Kleinschmidt family (including Hirzebruch
surfaces), and star subdivision, which realizes blow-ups combinatorially.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    InvalidParameters,
    MalformedInput,
    NotAFace,
    RayCollision,
    TooSmall,
)
from .geometry import h_representation, intersect_in_common_face, is_complete
from .lattice import IntVector, content, identity_matrix, spans_unimodular_subspace


@dataclass(frozen=True)
class Fan:
    """A fan given by primitive rays and maximal cones (ray-index tuples).

    Rays keep their construction order; maximal cones are normalized to
    sorted index tuples listed lexicographically, so equal fans compare
    equal and serialize identically.
    """

    dim: int
    rays: tuple[IntVector, ...]
    max_cones: tuple[tuple[int, ...], ...]
    provenance: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "rays", tuple(tuple(int(x) for x in v) for v in self.rays)
        )
        cones = tuple(sorted(tuple(sorted(int(i) for i in c)) for c in self.max_cones))
        object.__setattr__(self, "max_cones", cones)

    def to_json_dict(self) -> dict:
        data: dict = {
            "dim": self.dim,
            "rays": [list(v) for v in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }
        if self.provenance is not None:
            data["provenance"] = self.provenance
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: object) -> "Fan":
        """Build a Fan from parsed JSON, rejecting anything off-schema."""
        if not isinstance(data, dict):
            raise MalformedInput("fan JSON must be an object")
        extra = set(data) - {"dim", "rays", "max_cones", "provenance"}
        if extra:
            raise MalformedInput(f"unexpected fan keys: {sorted(extra)}")
        dim = data.get("dim")
        if not _is_int(dim) or dim < 1:
            raise MalformedInput("'dim' must be a positive integer")
        rays = data.get("rays")
        if not isinstance(rays, list) or not rays:
            raise MalformedInput("'rays' must be a non-empty list")
        for v in rays:
            if (
                not isinstance(v, list)
                or len(v) != dim
                or not all(_is_int(x) for x in v)
            ):
                raise MalformedInput(f"ray {v!r} is not a list of {dim} integers")
        cones = data.get("max_cones")
        if not isinstance(cones, list) or not cones:
            raise MalformedInput("'max_cones' must be a non-empty list")
        for c in cones:
            if not isinstance(c, list) or not c or not all(_is_int(i) for i in c):
                raise MalformedInput(f"cone {c!r} is not a non-empty list of integers")
        prov = data.get("provenance")
        if prov is not None and not isinstance(prov, str):
            raise MalformedInput("'provenance' must be a string")
        return cls(
            dim=dim,
            rays=tuple(tuple(v) for v in rays),
            max_cones=tuple(tuple(c) for c in cones),
            provenance=prov,
        )


def _is_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class Finding:
    """One validation failure: a kind tag plus the indices it concerns."""

    kind: str
    indices: tuple[int, ...]
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    is_valid_fan: bool
    is_smooth: bool
    is_complete: bool
    failures: tuple[Finding, ...]


def validate(fan: Fan) -> ValidationReport:
    """Run every fan axiom check and report all findings, without aborting early.

    Order: ray primitivity and distinctness, cone index sanity and maximality,
    unimodularity of each maximal cone, pairwise face intersections, and
    finally completeness (attempted only when everything else passed and all
    maximal cones are full-dimensional).
    """
    findings: list[Finding] = []
    nrays = len(fan.rays)

    bad_dims = [i for i, v in enumerate(fan.rays) if len(v) != fan.dim]
    for i in bad_dims:
        findings.append(
            Finding("BadRayDimension", (i,), f"ray {i} has {len(fan.rays[i])} entries, expected {fan.dim}")
        )
    if bad_dims:
        # Nothing else is well-posed with rays outside the lattice.
        return ValidationReport(False, False, False, tuple(findings))

    for i, v in enumerate(fan.rays):
        if content(v) != 1:
            findings.append(Finding("NonPrimitiveRay", (i,), f"ray {i} = {v} has content {content(v)}"))
    first_seen: dict[IntVector, int] = {}
    for i, v in enumerate(fan.rays):
        if v in first_seen:
            findings.append(Finding("DuplicateRay", (first_seen[v], i), f"rays {first_seen[v]} and {i} coincide"))
        else:
            first_seen[v] = i

    structural: list[tuple[int, tuple[int, ...]]] = []
    for ci, c in enumerate(fan.max_cones):
        if not c or len(set(c)) != len(c) or any(i < 0 or i >= nrays for i in c):
            findings.append(Finding("MalformedCone", (ci,), f"cone {c} has repeated or out-of-range indices"))
        else:
            structural.append((ci, c))

    used: set[int] = set()
    for _, c in structural:
        used.update(c)
    for i in range(nrays):
        if i not in used:
            findings.append(Finding("UnusedRay", (i,), f"ray {i} appears in no maximal cone"))

    for (ci, a), (cj, b) in combinations(structural, 2):
        sa, sb = set(a), set(b)
        if sa <= sb or sb <= sa:
            findings.append(Finding("NonMaximalCone", (ci, cj), f"listed cones {a} and {b} are nested"))

    unimodular: list[tuple[int, tuple[int, ...]]] = []
    for ci, c in structural:
        if spans_unimodular_subspace([fan.rays[i] for i in c], fan.dim):
            unimodular.append((ci, c))
        else:
            findings.append(Finding("NonUnimodularCone", tuple(c), f"cone {c} is not part of a lattice basis"))

    hreps = {ci: h_representation(c, fan.rays) for ci, c in unimodular}
    for (ci, a), (cj, b) in combinations(unimodular, 2):
        if not intersect_in_common_face(a, b, fan.rays, hreps[ci], hreps[cj]):
            findings.append(
                Finding("IntersectionNotFace", (ci, cj), f"cones {a} and {b} do not meet in a common face")
            )

    smooth_breakers = {"NonPrimitiveRay", "DuplicateRay", "MalformedCone", "NonUnimodularCone"}
    smooth = not any(f.kind in smooth_breakers for f in findings)
    valid = not findings
    complete = False
    if valid and all(len(c) == fan.dim for c in fan.max_cones):
        complete = is_complete(fan)
    return ValidationReport(valid, smooth, complete, tuple(findings))


def _checked(fan: Fan) -> Fan:
    report = validate(fan)
    if not report.is_valid_fan:
        raise AssertionError(f"constructed fan failed validation: {report.failures}")
    return fan


def projective_space(n: int) -> Fan:
    """Fan of n-dimensional projective space.

    Rays e_1..e_n and -(e_1 + ... + e_n); one maximal cone per omitted ray.
    """
    if n < 1:
        raise InvalidParameters("projective space needs n >= 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [tuple(j for j in range(n + 1) if j != i) for i in range(n + 1)]
    return _checked(Fan(n, tuple(rays), tuple(cones), provenance=f"P^{n}"))


def kleinschmidt(d: int, a: Sequence[int]) -> Fan:
    """Smooth complete d-dimensional fan with d+2 rays and weights a_1 <= ... <= a_r.

    Rays: e_1..e_r, u0 = -(e_1+...+e_r), e_{r+1}..e_d, and
    v0 = sum(a_i * e_i) - (e_{r+1}+...+e_d), where s = d - r + 1.  The first
    r+1 rays form the U block, the last s the V block; maximal cones drop one
    ray from each block, giving (r+1)*s cones of d rays each.
    """
    r = len(a)
    s = d - r + 1
    if r < 1 or not 2 <= s <= d:
        raise InvalidParameters(f"need r >= 1 and 2 <= s <= d; got r={r}, s={s}, d={d}")
    weights = [int(x) for x in a]
    if any(x < 0 for x in weights) or weights != sorted(weights):
        raise InvalidParameters("weights must satisfy 0 <= a_1 <= ... <= a_r")
    e = identity_matrix(d)
    rays: list[IntVector] = [e[i] for i in range(r)]
    rays.append(tuple(-1 if i < r else 0 for i in range(d)))
    rays.extend(e[i] for i in range(r, d))
    v0 = [0] * d
    for i, ai in enumerate(weights):
        v0[i] = ai
    for i in range(r, d):
        v0[i] = -1
    rays.append(tuple(v0))
    u_block = list(range(r + 1))
    v_block = list(range(r + 1, d + 2))
    all_idx = set(range(d + 2))
    cones = [tuple(sorted(all_idx - {u, v})) for u in u_block for v in v_block]
    prov = f"Sigma_{d}({','.join(str(x) for x in weights)})"
    return _checked(Fan(d, tuple(rays), tuple(cones), provenance=prov))


def hirzebruch(a: int) -> Fan:
    """The a-th Hirzebruch surface; same fan as kleinschmidt(2, [a])."""
    if a < 0:
        raise InvalidParameters("hirzebruch needs a >= 0")
    base = kleinschmidt(2, [a])
    return Fan(base.dim, base.rays, base.max_cones, provenance=f"F_{a}")


def star_subdivision(fan: Fan, sigma: Iterable[int]) -> Fan:
    """Insert the ray rho_0 = sum of sigma's rays and re-fan its star.

    Every maximal cone containing sigma is replaced by the |sigma| cones in
    which one generator of sigma is traded for rho_0; all other cones are
    untouched.  This is the combinatorial blow-up of the orbit closure named
    by sigma, and it preserves smoothness and completeness.
    """
    sig = tuple(sorted({int(i) for i in sigma}))
    if len(sig) < 2:
        raise TooSmall("star subdivision needs a face with at least 2 rays")
    if any(i < 0 or i >= len(fan.rays) for i in sig):
        raise NotAFace(f"{sig} contains out-of-range ray indices")
    sset = set(sig)
    if not any(sset <= set(c) for c in fan.max_cones):
        raise NotAFace(f"{sig} is not a face of any maximal cone")
    rho0 = tuple(sum(fan.rays[i][j] for i in sig) for j in range(fan.dim))
    if rho0 in set(fan.rays):
        # Provably unreachable for smooth proper input; fail loudly anyway.
        raise RayCollision(f"new ray {rho0} already present")
    new_idx = len(fan.rays)
    cones: list[tuple[int, ...]] = []
    for c in fan.max_cones:
        cs = set(c)
        if sset <= cs:
            for i in sig:
                cones.append(tuple(sorted((cs - {i}) | {new_idx})))
        else:
            cones.append(c)
    prov = f"blowup({fan.provenance or 'fan'}; cone={list(sig)})"
    return _checked(Fan(fan.dim, fan.rays + (rho0,), tuple(cones), provenance=prov))
