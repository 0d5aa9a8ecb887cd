"""Symbolic homotopy reports for smooth proper toric fans.

Group descriptions are finite symbolic trees: torus powers, Milnor-Witt
K-theory sheaf powers, direct sums, extensions, and a partial-knowledge
wrapper recording only a surjection.  They normalize to a canonical form,
render to a stable plain-text grammar, and round-trip through JSON.

The analyzer glues two computations: the quotient presentation exhibits the
variety as a torus quotient of an affine complement, so degree-one groups
sit in an extension over the dual torus of the divisor class group and all
higher degrees transfer unchanged; and the complement's own low-degree
groups are read off the arrangement combinatorics (smallest non-face size d:
groups vanish below degree d-1, and the degree d-1 group is a sum of weight-d
Milnor-Witt sheaves, one per size-d component, exactly when those components
pairwise meet in codimension at least d+2).
"""

from __future__ import annotations

from dataclasses import dataclass

from ._version import __version__
from .cox import SubspaceArrangement, arrangement, pairwise_intersection_ok, picard_group
from .errors import InvalidParameters, MalformedInput, NotSmoothProper
from .fan import Fan, validate


class GroupExpr:
    """Base class for symbolic group descriptions."""

    def render(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Trivial(GroupExpr):
    pass


@dataclass(frozen=True)
class TorusPower(GroupExpr):
    """The k-fold product of the multiplicative group."""

    power: int


@dataclass(frozen=True)
class MWPower(GroupExpr):
    """A direct sum of copies of the weight-n Milnor-Witt K-theory sheaf."""

    weight: int
    mult: int = 1


@dataclass(frozen=True)
class DirectSum(GroupExpr):
    parts: tuple[GroupExpr, ...]


@dataclass(frozen=True)
class Extension(GroupExpr):
    """A group sitting in 1 -> kernel -> G -> quotient -> 1 (class unspecified)."""

    kernel: GroupExpr
    quotient: GroupExpr


@dataclass(frozen=True)
class Partial(GroupExpr):
    """Partial knowledge: only a surjection onto the target is certified."""

    target: GroupExpr


TRIVIAL = Trivial()


def normalize(g: GroupExpr) -> GroupExpr:
    """Canonical form: empty powers collapse, sums flatten and merge,
    extensions by or of the trivial group simplify away."""
    if isinstance(g, Trivial):
        return TRIVIAL
    if isinstance(g, TorusPower):
        if g.power < 0:
            raise ValueError("torus power must be non-negative")
        return TRIVIAL if g.power == 0 else g
    if isinstance(g, MWPower):
        if g.weight < 1 or g.mult < 0:
            raise ValueError("MW sheaf needs weight >= 1 and mult >= 0")
        return TRIVIAL if g.mult == 0 else g
    if isinstance(g, DirectSum):
        flat: list[GroupExpr] = []
        for p in g.parts:
            np = normalize(p)
            if isinstance(np, DirectSum):
                flat.extend(np.parts)
            elif not isinstance(np, Trivial):
                flat.append(np)
        torus_total = sum(p.power for p in flat if isinstance(p, TorusPower))
        mw_totals: dict[int, int] = {}
        rest: list[GroupExpr] = []
        for p in flat:
            if isinstance(p, TorusPower):
                continue
            if isinstance(p, MWPower):
                mw_totals[p.weight] = mw_totals.get(p.weight, 0) + p.mult
            else:
                rest.append(p)
        parts: list[GroupExpr] = []
        if torus_total:
            parts.append(TorusPower(torus_total))
        parts.extend(MWPower(w, m) for w, m in sorted(mw_totals.items()))
        parts.extend(sorted(rest, key=render))
        if not parts:
            return TRIVIAL
        if len(parts) == 1:
            return parts[0]
        return DirectSum(tuple(parts))
    if isinstance(g, Extension):
        kernel = normalize(g.kernel)
        quotient = normalize(g.quotient)
        if isinstance(kernel, Trivial):
            return quotient
        if isinstance(quotient, Trivial):
            return kernel
        return Extension(kernel, quotient)
    if isinstance(g, Partial):
        return Partial(normalize(g.target))
    raise TypeError(f"not a group expression: {g!r}")


def torus(power: int) -> GroupExpr:
    return normalize(TorusPower(power))


def kmw(weight: int, mult: int = 1) -> GroupExpr:
    return normalize(MWPower(weight, mult))


def direct_sum(*parts: GroupExpr) -> GroupExpr:
    return normalize(DirectSum(tuple(parts)))


def extension(kernel: GroupExpr, quotient: GroupExpr) -> GroupExpr:
    return normalize(Extension(kernel, quotient))


def surjection_onto(target: GroupExpr) -> GroupExpr:
    return Partial(normalize(target))


def render(g: GroupExpr) -> str:
    """Stable plain-text form, e.g. ext(KMW(2)^2 -> . -> Gm^2)."""
    if isinstance(g, Trivial):
        return "0"
    if isinstance(g, TorusPower):
        return "Gm" if g.power == 1 else f"Gm^{g.power}"
    if isinstance(g, MWPower):
        base = f"KMW({g.weight})"
        return base if g.mult == 1 else f"{base}^{g.mult}"
    if isinstance(g, DirectSum):
        return " + ".join(render(p) for p in g.parts)
    if isinstance(g, Extension):
        return f"ext({render(g.kernel)} -> . -> {render(g.quotient)})"
    if isinstance(g, Partial):
        return f"surj-onto({render(g.target)})"
    raise TypeError(f"not a group expression: {g!r}")


def group_to_json(g: GroupExpr) -> dict:
    if isinstance(g, Trivial):
        return {"t": "trivial"}
    if isinstance(g, TorusPower):
        return {"t": "torus", "power": g.power}
    if isinstance(g, MWPower):
        return {"t": "kmw", "weight": g.weight, "mult": g.mult}
    if isinstance(g, DirectSum):
        return {"t": "sum", "parts": [group_to_json(p) for p in g.parts]}
    if isinstance(g, Extension):
        return {
            "t": "ext",
            "kernel": group_to_json(g.kernel),
            "quotient": group_to_json(g.quotient),
        }
    if isinstance(g, Partial):
        return {"t": "surj", "target": group_to_json(g.target)}
    raise TypeError(f"not a group expression: {g!r}")


def group_from_json(data: object) -> GroupExpr:
    if not isinstance(data, dict) or "t" not in data:
        raise MalformedInput(f"group JSON must be an object with a 't' tag: {data!r}")
    tag = data["t"]
    try:
        if tag == "trivial":
            return TRIVIAL
        if tag == "torus":
            return normalize(TorusPower(int(data["power"])))
        if tag == "kmw":
            return normalize(MWPower(int(data["weight"]), int(data["mult"])))
        if tag == "sum":
            return normalize(DirectSum(tuple(group_from_json(p) for p in data["parts"])))
        if tag == "ext":
            return normalize(
                Extension(group_from_json(data["kernel"]), group_from_json(data["quotient"]))
            )
        if tag == "surj":
            return Partial(group_from_json(data["target"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad group JSON {data!r}: {exc}") from exc
    raise MalformedInput(f"unknown group tag {tag!r}")


@dataclass(frozen=True)
class CoxCoverHomotopy:
    """Low-degree data of an affine space minus a coordinate arrangement.

    Groups vanish in degrees 1..vanish_through; the group in first_degree is
    `first` (a Partial when only the surjection is certified).  A
    contractible complement (empty arrangement) has everything trivial.
    """

    connected: bool
    contractible: bool
    vanish_through: int | None
    first_degree: int | None
    first: GroupExpr


def cox_cover_homotopy(arr: SubspaceArrangement) -> CoxCoverHomotopy:
    """Connectivity and first nontrivial group of the arrangement complement.

    d = smallest component size.  The complement is connected when d >= 2;
    its groups vanish through degree d-2; in degree d-1 the components of
    size exactly d each contribute a weight-d Milnor-Witt summand, and the
    sum is exact precisely when those components pairwise share at most d-2
    indices (larger components sit in codimension > d and cannot disturb
    degrees <= d-1).
    """
    if not arr.components:
        return CoxCoverHomotopy(True, True, None, None, TRIVIAL)
    d = arr.codim
    if d < 2:
        return CoxCoverHomotopy(False, False, None, None, TRIVIAL)
    comps_d = tuple(c for c in arr.components if len(c) == d)
    r = len(comps_d)
    ok = pairwise_intersection_ok(SubspaceArrangement(comps_d, arr.ambient), d)
    first = kmw(d, r) if ok else surjection_onto(kmw(d, r))
    return CoxCoverHomotopy(True, False, d - 2, d - 1, first)


@dataclass(frozen=True)
class CoxCoverStats:
    """Arrangement summary embedded in a report: ambient affine dimension,
    smallest non-face size d, the number r of size-d components, and the
    pairwise intersection predicate for those components."""

    ambient: int
    codim: int
    count: int
    pairwise_ok: bool


@dataclass(frozen=True)
class FirstHigher:
    degree: int
    group: GroupExpr


@dataclass(frozen=True)
class HomotopyReport:
    variety: str
    version: str
    connected: bool
    cox: CoxCoverStats
    pi1: GroupExpr
    vanishing: tuple[int, int]
    first_higher: FirstHigher
    notes: tuple[str, ...]


def _notes(
    d: int,
    r: int,
    ok: bool,
    sizes: tuple[int, ...],
    punctured: bool,
    extension_emitted: bool,
) -> tuple[str, ...]:
    notes = [
        "charts: covered by affine-space charts, hence A1-connected",
        "covering: pi1 sits in 1 -> pi1(cover) -> pi1(X) -> Gm^(pic rank) -> 1; "
        "pi_i(X) = pi_i(cover) for all i >= 2",
        f"indexing: d = smallest non-face size = {d}; vanishing range [2, {d - 2}]; "
        f"first reported group in degree {d - 1} with weight {d} and multiplicity {r}",
    ]
    if d >= 4:
        notes.append(f"vanishing: pi_i(X) = 0 for 2 <= i <= {d - 2}, by excision on the cover")
    if d >= 3:
        notes.append(
            f"first-higher: pi_{d - 1}(X) equals the cover group (degrees >= 2 transfer along the covering)"
        )
    else:
        notes.append(
            "first-higher: the degree-1 entry is pi1 of the cover, i.e. the kernel of the pi1 extension, not pi1(X)"
        )
    if ok:
        notes.append(
            f"split: the {r} codim-{d} component(s) pairwise meet in codim >= {d + 2}, "
            f"so the cover group in degree {d - 1} is the full direct sum"
        )
    else:
        notes.append(
            f"surjection-only: some codim-{d} components meet in codim {d + 1}; "
            "only a surjection onto the direct sum is certified, the kernel is undetermined"
        )
    if extension_emitted:
        notes.append(
            "extension-class: the class of the pi1 extension is not determined here and can be nontrivial"
        )
    if punctured:
        notes.append(
            "kmw-weight: the cover is a punctured affine space; the reported weight equals the "
            "arrangement codimension, one higher than the weight printed in some statements for "
            "projective space (the covering computation fixes the convention used here)"
        )
    if len(sizes) > 1:
        notes.append(
            f"mixed-codim: minimal non-faces come in several sizes {list(sizes)}; "
            "d and r describe only the smallest"
        )
    return tuple(notes)


def analyze(fan: Fan) -> HomotopyReport:
    """Full symbolic report for the variety of a validated smooth complete fan.

    Raises NotSmoothProper when validation fails or the fan is not complete.
    """
    report = validate(fan)
    if not (report.is_valid_fan and report.is_smooth and report.is_complete):
        kinds = sorted({f.kind for f in report.failures}) or ["Incomplete"]
        raise NotSmoothProper(f"analysis needs a valid smooth complete fan; findings: {kinds}")
    arr = arrangement(fan)
    if not arr.components:
        raise AssertionError("complete fans always contain a non-face")
    sizes = tuple(sorted({len(c) for c in arr.components}))
    d = sizes[0]
    comps_d = tuple(c for c in arr.components if len(c) == d)
    r = len(comps_d)
    ok = pairwise_intersection_ok(SubspaceArrangement(comps_d, arr.ambient), d)
    pic = picard_group(fan)
    cover = cox_cover_homotopy(arr)
    expected_first = kmw(d, r) if ok else surjection_onto(kmw(d, r))
    assert cover.first == expected_first and cover.first_degree == d - 1

    if d >= 3:
        pi1: GroupExpr = torus(pic.rank)
    elif ok:
        pi1 = extension(kmw(2, r), torus(pic.rank))
    else:
        pi1 = surjection_onto(torus(pic.rank))

    punctured = len(arr.components) == 1 and len(arr.components[0]) == arr.ambient
    notes = _notes(d, r, ok, sizes, punctured, isinstance(pi1, Extension))
    return HomotopyReport(
        variety=fan.provenance or f"fan(dim={fan.dim}, rays={len(fan.rays)})",
        version=__version__,
        connected=True,
        cox=CoxCoverStats(ambient=arr.ambient, codim=d, count=r, pairwise_ok=ok),
        pi1=pi1,
        vanishing=(2, d - 2),
        first_higher=FirstHigher(degree=d - 1, group=cover.first),
        notes=notes,
    )


def kleinschmidt_case(r: int, s: int) -> GroupExpr:
    """Closed-form pi1 for the smooth complete fans with d + 2 rays.

    The two ray blocks have sizes r+1 and s, and each block of size exactly 2
    contributes one weight-2 Milnor-Witt summand to the kernel of the pi1
    extension over Gm^2: no small block gives Gm^2 itself, one gives an
    extension by KMW(2), two (the surface case r = 1, s = 2) give an
    extension by KMW(2)^2.
    """
    if r < 1 or s < 2:
        raise InvalidParameters("need r >= 1 and s >= 2")
    small = int(r == 1) + int(s == 2)
    if small == 0:
        return torus(2)
    return extension(kmw(2, small), torus(2))
