"""Candidate families of curves in P^r and their dimension bookkeeping.

A :class:`FamilyCandidate` carries its Hilbert-scheme dimension ``dim`` and the
comparison with ``chi = lambda + dim Aut(P^r)``.  Families built from a
residual linear series are first counted at the level of linear series
(``linear_series_dim``) and lifted by ``dim Aut(P^r)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import comb

from .bounds import (
    CurveTriple,
    aut_dim,
    castelnuovo_pi,
    castelnuovo_pi1,
    complete_intersection_genus,
    expected_dims,
    gonal_locus_dim,
    gonal_pencil_dim,
    grassmannian_dim,
    hurwitz_dim,
    plane_curve_genus,
    residual_very_ample_gonal,
    residual_very_ample_gonal_strong,
)
from .enumeration import (
    CREMONA_ORBIT,
    SINGULAR_AT_VERTEX,
    ClassSolution,
    InvariantViolation,
    plane_model_pencils,
    residual_series,
    solve_delpezzo5,
    solve_elliptic_cone,
    solve_quadric,
    solve_rational_cone,
    solve_scroll,
    solve_severi_plane,
    solve_veronese,
)
from .surfaces import (
    DivisorClass,
    SurfaceKind,
    SurfaceModel,
    linear_system_dim,
    veronese_normal_h1,
    vertex_multiplicity,
)


class Construction(str, enum.Enum):
    ON_SCROLL = "OnScroll"
    ON_CONE = "OnCone"
    ON_VERONESE = "OnVeronese"
    ON_ELLIPTIC_CONE = "OnEllipticCone"
    ON_DELPEZZO5 = "OnDelPezzo5"
    GONAL_RESIDUAL = "GonalResidual"
    HURWITZ_RESIDUAL = "HurwitzResidual"
    SEVERI_PLANE_MODEL = "SeveriPlaneModel"
    COMPLETE_INTERSECTION = "CompleteIntersection"
    QUADRIC_MODEL = "QuadricModel"
    PRINCIPAL = "PrincipalBrillNoether"


class StatusKind(str, enum.Enum):
    COMPONENT_CANDIDATE = "ComponentCandidate"
    STRICTLY_INSIDE_BOUNDARY = "StrictlyInsideBoundary"
    EXCLUDED = "Excluded"


@dataclass(frozen=True)
class Status:
    kind: StatusKind
    reason: str | None = None
    target: str | None = None

    def __post_init__(self) -> None:
        if self.kind is StatusKind.EXCLUDED and not self.reason:
            raise ValueError("an exclusion needs a reason tag")

    def __str__(self) -> str:
        if self.reason is None:
            return self.kind.value
        inner = self.reason if self.target is None else f"{self.reason}({self.target})"
        return f"{self.kind.value}({inner})"

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "reason": self.reason, "target": self.target}

    @classmethod
    def from_dict(cls, data: dict) -> Status:
        return cls(StatusKind(data["kind"]), data.get("reason"), data.get("target"))


CANDIDATE = Status(StatusKind.COMPONENT_CANDIDATE)


@dataclass(frozen=True)
class FamilyCandidate:
    label: str
    construction: Construction
    params: dict
    dim: int
    chi: int
    lam: int
    linear_series_dim: int
    gonality_upper: int | None = None
    moduli_image_dim: int | None = None
    codim: int | None = None
    fiber_extra: int | None = None
    status: Status = CANDIDATE
    citations: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    routes: tuple[tuple[str, int], ...] = ()
    reported_dim: int | None = None

    def __post_init__(self) -> None:
        if not self.citations:
            raise ValueError(f"candidate {self.label} has no citation")
        if self.linear_series_dim != self.dim - (self.chi - self.lam):
            raise InvariantViolation(f"{self.label}: linear-series and Hilbert dimensions disagree")

    @property
    def excess(self) -> int:
        return self.dim - self.chi

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "construction": self.construction.value,
            "params": self.params,
            "dim": self.dim,
            "chi": self.chi,
            "lambda": self.lam,
            "excess": self.excess,
            "linear_series_dim": self.linear_series_dim,
            "gonality_upper": self.gonality_upper,
            "moduli_image_dim": self.moduli_image_dim,
            "codim_in_moduli": self.codim,
            "fiber_extra": self.fiber_extra,
            "status": self.status.to_dict(),
            "citations": list(self.citations),
            "notes": list(self.notes),
            "routes": [{"route": r, "dim": v} for r, v in self.routes],
            "reported_dim": self.reported_dim,
        }

    @classmethod
    def from_dict(cls, data: dict) -> FamilyCandidate:
        if data["excess"] != data["dim"] - data["chi"]:
            raise InvariantViolation(f"{data['label']}: excess != dim - chi")
        return cls(
            label=data["label"],
            construction=Construction(data["construction"]),
            params=data["params"],
            dim=data["dim"],
            chi=data["chi"],
            lam=data["lambda"],
            linear_series_dim=data["linear_series_dim"],
            gonality_upper=data["gonality_upper"],
            moduli_image_dim=data["moduli_image_dim"],
            codim=data["codim_in_moduli"],
            fiber_extra=data["fiber_extra"],
            status=Status.from_dict(data["status"]),
            citations=tuple(data["citations"]),
            notes=tuple(data["notes"]),
            routes=tuple((r["route"], r["dim"]) for r in data["routes"]),
            reported_dim=data["reported_dim"],
        )


# ---------------------------------------------------------------- dimensions


def scroll_space_dim(r: int) -> int:
    """Rational normal surface scrolls in ``P^r``: ``(r+3)(r-1) - 3``."""
    return (r + 3) * (r - 1) - 3


def rational_normal_curve_space_dim(m: int) -> int:
    """Rational normal curves in ``P^m``: ``(m+1) h^0(O(m)) - 1 - dim Aut(P^1) = (m+1)^2 - 4``."""
    return (m + 1) ** 2 - 4


def elliptic_normal_curve_space_dim(m: int) -> int:
    """Elliptic normal curves of degree ``m + 1`` in ``P^m``, counted by ``chi``."""
    return expected_dims(CurveTriple(m + 1, 1, m))[1]


def delpezzo_space_dim() -> int:
    # Aut(P^5) - Aut(P^2) + four points in the plane
    return aut_dim(5) - aut_dim(2) + 2 * 4


def _require_kind(sol: ClassSolution, *kinds: SurfaceKind) -> None:
    if sol.surface.kind not in kinds:
        raise ValueError(f"expected a class on {[k.value for k in kinds]}, got {sol.surface.label()}")


def scroll_family_dim(sol: ClassSolution, r: int) -> int:
    _require_kind(sol, SurfaceKind.SCROLL)
    if sol.surface.param != r - 1:
        raise ValueError("scroll degree must be r - 1")
    return linear_system_dim(sol.divisor) + scroll_space_dim(r)


def cone_family_dim(sol: ClassSolution, r: int) -> int:
    """Vertex choice plus base-curve family plus ``dim |C~|`` on the resolved cone."""
    _require_kind(sol, SurfaceKind.RATIONAL_CONE, SurfaceKind.ELLIPTIC_CONE)
    if sol.surface.kind is SurfaceKind.RATIONAL_CONE:
        base = rational_normal_curve_space_dim(r - 1)
    else:
        base = elliptic_normal_curve_space_dim(r - 1)
    return r + base + linear_system_dim(sol.divisor)


def veronese_family_dim(sol: ClassSolution, r: int) -> int:
    _require_kind(sol, SurfaceKind.VERONESE)
    if r != 5:
        raise ValueError("the Veronese surface lives in P^5")
    return linear_system_dim(sol.divisor) - aut_dim(2) + aut_dim(5)


def delpezzo_family_dim(sol: ClassSolution, r: int) -> int:
    _require_kind(sol, SurfaceKind.BLOWN_PLANE)
    if r != 5:
        raise ValueError("the quintic del Pezzo surface lives in P^5")
    return linear_system_dim(sol.divisor) + delpezzo_space_dim()


def _residual_gonal_dim(g: int, k: int, l: int) -> int:
    return g - 1 - l * k + l


def gonal_residual_family_dim(g: int, k: int, l: int, r: int, target_dim_series: int | None = None) -> int:
    """``dim M^1_{g,k} + dim G(r, R)`` with ``R = dim |K - l g^1_k| = g - 1 - lk + l``."""
    R = _residual_gonal_dim(g, k, l)
    if target_dim_series is not None and target_dim_series != R:
        raise ValueError(f"|K - {l}g^1_{k}| has dimension {R}, not {target_dim_series}")
    if R < r:
        raise ValueError(f"residual series has dimension {R} < {r}")
    return gonal_locus_dim(g, k) + grassmannian_dim(r, R)


def hurwitz_residual_family_dim(g: int, n: int, gamma: int, r: int, R: int) -> int:
    return hurwitz_dim(g, n, gamma) + grassmannian_dim(r, R)


def severi_dim(e: int, g: int) -> int:
    delta = plane_curve_genus(e) - g
    if delta < 0:
        raise ValueError(f"genus {g} exceeds the plane genus in degree {e}")
    return comb(e + 2, 2) - 1 - delta


def severi_model_family_dim(e: int, g: int, r: int) -> int:
    """``dim Sigma_{e,g} - dim Aut(P^2) + dim G(r, R)`` with ``R = g - e + 1`` the residual dimension.

    When ``R = r`` the residual series is complete and the value must equal
    ``lambda(e, g, 2) = lambda(2g - 2 - e, g, r)``.
    """
    R = g - e + 1
    if R < r:
        raise ValueError(f"residual of a plane g^2_{e} has dimension {R} < {r}")
    value = severi_dim(e, g) - aut_dim(2) + grassmannian_dim(r, R)
    if R == r:
        lam_plane = expected_dims(CurveTriple(e, g, 2))[0]
        lam_space = expected_dims(CurveTriple(2 * g - 2 - e, g, r))[0]
        if not value == lam_plane == lam_space:
            raise InvariantViolation(f"plane-model count {value} != lambda {lam_plane}, {lam_space}")
    return value


def quadric_model_family_dim(a: int, b: int, delta: int, g: int, r: int) -> int:
    """Nodal ``(a, b)`` models on a smooth quadric: ``dim|(a,b)| - delta - dim Aut(Q) + dim G(r, R)``."""
    e = a + b
    R = g - e + 2
    if R < r:
        raise ValueError(f"residual of a g^3_{e} has dimension {R} < {r}")
    q = SurfaceModel.quadric()
    return linear_system_dim(DivisorClass(q, (a, b))) - delta - 6 + grassmannian_dim(r, R)


def complete_intersection_hilbert_function(degrees: list[int], n: int, t: int) -> int:
    """``h^0(O_C(t))`` for a complete intersection (arithmetically Cohen-Macaulay), via the Koszul complex."""
    total = 0
    for mask in range(1 << len(degrees)):
        chosen = [a for i, a in enumerate(degrees) if mask >> i & 1]
        top = n + t - sum(chosen)
        if top >= n:
            total += (-1) ** len(chosen) * comb(top, n)
    return total


def complete_intersection_family(degrees: list[int], n: int) -> FamilyCandidate:
    """Complete intersections of ``n - 1`` hypersurfaces in ``P^n``.

    Equal degrees ``a``: ``dim G(n-2, C(n+a, a) - 1)``.  Mixed degrees fall
    back to ``h^0(N_C) = sum h^0(O_C(a_i))`` and are marked heuristic.
    """
    g = complete_intersection_genus(degrees, n)
    d = 1
    for a in degrees:
        d *= a
    c = len(degrees)
    tangent = sum(complete_intersection_hilbert_function(degrees, n, a) for a in degrees)
    notes = [f"tangent space: sum h^0(O_C(a_i)) = {tangent}"]
    if len(set(degrees)) == 1:
        a = degrees[0]
        dim = grassmannian_dim(c - 1, comb(n + a, a) - 1)
        if dim != tangent:
            notes.append(f"tangent count {tangent} differs from the family dimension {dim}")
    else:
        dim = tangent
        notes.append("mixed degrees: dimension taken from the tangent count (heuristic)")
    t = CurveTriple(d, g, n)
    lam, chi = expected_dims(t)
    return FamilyCandidate(
        label=f"CI({','.join(map(str, degrees))})",
        construction=Construction.COMPLETE_INTERSECTION,
        params={"degrees": list(degrees), "n": n, "degree": d, "genus": g, "tangent_dim": tangent},
        dim=dim,
        chi=chi,
        lam=lam,
        linear_series_dim=dim - aut_dim(n),
        citations=("complete intersection genus by adjunction", "Grassmannian of the spanned subspace of forms"),
        notes=tuple(notes),
    )


def moduli_accounting(f: FamilyCandidate | int, g: int, fiber_extra: int, r: int = 5) -> tuple[int, int]:
    """``(dim of the image in M_g, its codimension)`` with ``image = dim - dim Aut(P^r) - fiber_extra``."""
    if fiber_extra < 0:
        raise ValueError("fiber_extra must be >= 0")
    if isinstance(f, FamilyCandidate):
        dim, r = f.dim, _r_from_aut(f.chi - f.lam)
    else:
        dim = f
    image = dim - aut_dim(r) - fiber_extra
    if image < 0:
        raise ValueError(f"negative moduli image dimension {image}")
    if g >= 2 and image > 3 * g - 3:
        raise InvariantViolation(f"moduli image {image} exceeds dim M_{g} = {3 * g - 3}")
    return image, 3 * g - 3 - image


def _r_from_aut(aut: int) -> int:
    r = 1
    while aut_dim(r) < aut:
        r += 1
    if aut_dim(r) != aut:
        raise ValueError(f"{aut} is not dim Aut(P^r) for any r")
    return r


# ---------------------------------------------------------------- census assembly


@dataclass(frozen=True)
class Annotation:
    """Imported facts attached to specific candidates, keyed by (d, g, r, label)."""

    status: Status | None = None
    fiber_extra: int | None = None
    notes: tuple[str, ...] = ()
    citations: tuple[str, ...] = ()
    reported_dim: int | None = None
    gonality: int | None = None


ANNOTATIONS: dict[tuple[int, int, int, str], Annotation] = {
    (16, 21, 5, "veronese(8)"): Annotation(
        fiber_extra=0, citations=("plane octics are embedded by the Veronese map",),
    ),
    (16, 21, 5, "scroll(4)(4,0)"): Annotation(fiber_extra=0),
    (16, 20, 5, "scroll(4)(5,-4)"): Annotation(fiber_extra=0),
    (16, 18, 5, "scroll(4)(3,4)"): Annotation(fiber_extra=0),
    (16, 18, 5, "delpezzo5(9;3,3,3,2)"): Annotation(
        notes=("gonality 6 via the cited multiplicity theorem (no g^1_5)",),
        citations=("very ampleness of (9;3^3,2) is cited",),
        gonality=6,
    ),
    (16, 18, 5, "elliptic-cone(5)(3,16)"): Annotation(
        reported_dim=64,
        notes=(
            "reported dimension 64 (34 for |3C_0+16f|); computed 63",
            "boundary relation with the del Pezzo family rests on an admissible-covers degeneration; no numeric backing",
        ),
    ),
    (16, 14, 5, "quadric-model(4,6) beta=6"): Annotation(
        status=Status(StatusKind.EXCLUDED, "ResidualNotVeryAmple"),
        citations=("residual of a (4,6) model with one node or cusp is not very ample",),
    ),
    (16, 14, 5, "severi-plane(10)"): Annotation(
        notes=("gonality 8 via the cited multiplicity theorem",),
        gonality=8,
    ),
}


def _annotation(t: CurveTriple, label: str) -> Annotation | None:
    return ANNOTATIONS.get((t.d, t.g, t.r, label))


def _surface_label(sol: ClassSolution) -> str:
    s = sol.surface
    if s.kind is SurfaceKind.VERONESE:
        return f"veronese({sol.coeffs[0]})"
    if s.kind is SurfaceKind.BLOWN_PLANE:
        return f"delpezzo5{sol.divisor}"
    return f"{s.label()}{sol.divisor}"


def _lift(t: CurveTriple) -> tuple[int, int, int]:
    lam, chi = expected_dims(t)
    return lam, chi, aut_dim(t.r)


def _delpezzo_gonality(sol: ClassSolution) -> int:
    a, *bs = sol.coeffs
    conic = 2 * a - sum(bs[:4])
    return min(min(plane_model_pencils(sol)), conic, a)


def _surface_candidates(t: CurveTriple) -> list[FamilyCandidate]:
    d, g, r = t.as_tuple()
    lam, chi, aut = _lift(t)
    out: list[FamilyCandidate] = []

    def add(sol: ClassSolution, construction: Construction, dim: int, gon: int | None,
            citations: tuple[str, ...], params: dict, notes: tuple[str, ...] = (),
            routes: tuple[tuple[str, int], ...] = ()) -> None:
        out.append(FamilyCandidate(
            label=_surface_label(sol), construction=construction,
            params={"class": str(sol.divisor), "surface": sol.surface.label(), **params},
            dim=dim, chi=chi, lam=lam, linear_series_dim=dim - aut, gonality_upper=gon,
            citations=citations, notes=notes, routes=routes,
        ))

    if r == 5:
        for sol in solve_veronese(d, g):
            a = sol.coeffs[0]
            h1 = veronese_normal_h1(d, g, a)
            dim = veronese_family_dim(sol, r)
            notes = (f"h^1(N) = {h1}; tangent check chi + h^1 = {chi + h1}",)
            if chi + h1 != dim:
                notes += (f"tangent count {chi + h1} != family dimension {dim}",)
            add(sol, Construction.ON_VERONESE, dim, a - 1,
                ("plane curve genus", "Veronese family count"), {"a": a, "h1_normal": h1}, notes)

    for sol in solve_scroll(d, g, r - 1):
        a, b = sol.coeffs
        dim = scroll_family_dim(sol, r)
        routes = [("scroll", dim)]
        if r == 5:
            quad = DivisorClass(SurfaceModel.quadric((1, 2)), (a, 2 * a + b))
            hirz = DivisorClass(SurfaceModel.hirzebruch(2, (1, 3)), (a, 3 * a + b))
            routes.append(("quadric" + str(quad), linear_system_dim(quad) - 6 + aut))
            routes.append(("hirzebruch(2)" + str(hirz), linear_system_dim(hirz) - 7 + aut))
        add(sol, Construction.ON_SCROLL, dim, a,
            ("scroll degree and genus", "scroll family dimension"), {"a": a, "b": b},
            routes=tuple(routes))

    for sol in solve_rational_cone(d, g, r - 1):
        k, _ = sol.coeffs
        m = vertex_multiplicity(sol.divisor)
        add(sol, Construction.ON_CONE, cone_family_dim(sol, r), k,
            ("cone genus and vertex multiplicity", "cone family count"), {"k": k, "m": m})

    for sol in solve_elliptic_cone(d, g, r):
        k, _ = sol.coeffs
        m = vertex_multiplicity(sol.divisor)
        add(sol, Construction.ON_ELLIPTIC_CONE, cone_family_dim(sol, r), 2 * k,
            ("elliptic cone genus", "elliptic cone family count"), {"k": k, "m": m},
            ("dim |C~| uses the trivial degree-zero summand convention",))

    if r == 5:
        for sol in solve_delpezzo5(d, g):
            orbit = sol.flag(CREMONA_ORBIT).value
            add(sol, Construction.ON_DELPEZZO5, delpezzo_family_dim(sol, r), _delpezzo_gonality(sol),
                ("del Pezzo degree and genus", "del Pezzo family count"),
                {"pencils": plane_model_pencils(sol), "cremona_orbit": orbit,
                 "flags": sorted(str(f) for f in sol.flags)},
                ("linear system dimension assumes general points",))
    return out


def _residual_candidates(t: CurveTriple) -> list[FamilyCandidate]:
    """Families built from the residual series ``|K - H|`` of a (possibly incomplete) embedding.

    ``beta`` runs over the dimension of the complete series ``|H|``; it must
    carry curves of genus ``g`` in ``P^beta``, i.e. ``g <= pi(d, beta)``.
    """
    d, g, r = t.as_tuple()
    lam, chi, aut = _lift(t)
    e = 2 * g - 2 - d
    out: list[FamilyCandidate] = []
    for beta, s in residual_series(d, g, r):
        linearly_normal = beta == r
        tag = "" if linearly_normal else f" beta={beta}"
        if e % s == 0:
            k = e // s
            if k >= 3 and g >= 2 * k - 2 and gonal_pencil_dim(g, k, s) == s:
                G = gonal_residual_family_dim(g, k, s, r)
                weak = residual_very_ample_gonal(g, k, s)
                strong = residual_very_ample_gonal_strong(g, k, s)
                notes = [] if weak or strong else ["very ampleness of the residual series is not certified"]
                out.append(FamilyCandidate(
                    label=f"gonal(k={k},l={s}){tag}", construction=Construction.GONAL_RESIDUAL,
                    params={"k": k, "l": s, "beta": beta, "R": beta,
                            "very_ample_weak": weak, "very_ample_strong": strong},
                    dim=G + aut, chi=chi, lam=lam, linear_series_dim=G, gonality_upper=k,
                    fiber_extra=grassmannian_dim(r, beta),
                    citations=("gonal locus dimension 2g+2k-5", "residual of a multiple of the gonal pencil"),
                    notes=tuple(notes),
                ))
        if s == 2 and e >= 3:
            sol = solve_severi_plane(e, g)
            if sol is not None:
                G = severi_model_family_dim(e, g, r)
                out.append(FamilyCandidate(
                    label=f"severi-plane({e}){tag}", construction=Construction.SEVERI_PLANE_MODEL,
                    params={"e": e, "delta": sol.delta, "severi_dim": sol.severi_dim, "beta": beta,
                            "complete": linearly_normal},
                    dim=G + aut, chi=chi, lam=lam, linear_series_dim=G, gonality_upper=e - 2,
                    fiber_extra=grassmannian_dim(r, beta),
                    citations=("equigeneric Severi variety of nodal plane curves",),
                ))
        if s == 2 and e % 2 == 0 and e // 2 >= 1:
            # double cover of a smooth plane curve of degree e/2; elliptic targets are ruled out
            gamma = plane_curve_genus(e // 2)
            if gamma >= 2 and 2 * g - 2 >= 2 * (2 * gamma - 2):
                G = hurwitz_residual_family_dim(g, 2, gamma, r, beta)
                out.append(FamilyCandidate(
                    label=f"hurwitz(n=2,gamma={gamma}){tag}", construction=Construction.HURWITZ_RESIDUAL,
                    params={"n": 2, "gamma": gamma, "beta": beta},
                    dim=G + aut, chi=chi, lam=lam, linear_series_dim=G, gonality_upper=2 * (e // 2 - 1),
                    fiber_extra=grassmannian_dim(r, beta),
                    citations=("Hurwitz space dimension 2g+(2n-3)(1-gamma)-2",),
                ))
        if s == 3 and g > castelnuovo_pi1(e, 3):
            for sol in solve_quadric(e, g):
                a, b = sol.coeffs
                G = quadric_model_family_dim(a, b, sol.delta, g, r)
                out.append(FamilyCandidate(
                    label=f"quadric-model({a},{b}){tag}", construction=Construction.QUADRIC_MODEL,
                    params={"a": a, "b": b, "delta": sol.delta, "beta": beta},
                    dim=G + aut, chi=chi, lam=lam, linear_series_dim=G, gonality_upper=min(a, b),
                    fiber_extra=grassmannian_dim(r, beta),
                    citations=("nodal curves on a smooth quadric", "space curves above the second bound lie on quadrics"),
                ))
    return out


def _complete_intersections(t: CurveTriple) -> list[FamilyCandidate]:
    d, g, r = t.as_tuple()
    out = []
    a = 2
    while a ** (r - 1) <= d:
        if a ** (r - 1) == d and complete_intersection_genus([a] * (r - 1), r) == g:
            out.append(complete_intersection_family([a] * (r - 1), r))
        a += 1
    return out


def _principal(t: CurveTriple) -> list[FamilyCandidate]:
    d, g, r = t.as_tuple()
    lam, chi, aut = _lift(t)
    rho = g - (r + 1) * (g - d + r)
    if rho < 0:
        return []
    # fiber over a general curve: the g^r_d's, of dimension rho
    extra = rho
    return [FamilyCandidate(
        label="principal", construction=Construction.PRINCIPAL,
        params={"rho": rho}, dim=chi, chi=chi, lam=lam, linear_series_dim=lam,
        gonality_upper=(g + 3) // 2 if g >= 2 else None, fiber_extra=extra,
        citations=("Brill-Noether theorem: rho >= 0 gives a component dominating M_g",),
    )]


def _fold_routes(cands: list[FamilyCandidate]) -> list[FamilyCandidate]:
    """Merge trigonal-type residual families into the scroll family with ``a = k`` on the same curves."""
    scrolls = {c.params["a"]: i for i, c in enumerate(cands) if c.construction is Construction.ON_SCROLL}
    out = list(cands)
    drop = set()
    for j, c in enumerate(cands):
        if c.construction is Construction.GONAL_RESIDUAL and c.fiber_extra == 0:
            i = scrolls.get(c.params["k"])
            if i is None:
                continue
            s = out[i]
            notes = s.notes
            if c.dim != s.dim:
                notes += (f"gonal route dimension {c.dim} != scroll dimension {s.dim}",)
            out[i] = replace(s, routes=s.routes + ((c.label, c.dim),), notes=notes,
                             citations=s.citations + c.citations)
            drop.add(j)
    return [c for j, c in enumerate(out) if j not in drop]


def _assign_status(t: CurveTriple, cands: list[FamilyCandidate]) -> list[FamilyCandidate]:
    scroll_labels = {c.params["a"]: c.label for c in cands if c.construction is Construction.ON_SCROLL}
    out = []
    for c in cands:
        ann = _annotation(t, c.label)
        status = CANDIDATE
        if c.construction in (Construction.ON_CONE, Construction.ON_ELLIPTIC_CONE) and c.params["m"] >= 2:
            status = Status(StatusKind.EXCLUDED, SINGULAR_AT_VERTEX, f"m={c.params['m']}")
        elif c.construction is Construction.ON_CONE:
            target = scroll_labels.get(c.params["k"], f"scroll with a={c.params['k']}")
            status = Status(StatusKind.STRICTLY_INSIDE_BOUNDARY, "SpecializationOf", target)
        elif c.construction is Construction.ON_DELPEZZO5 and c.params["cremona_orbit"] != c.params["class"]:
            status = Status(StatusKind.EXCLUDED, "CremonaEquivalentTo", c.params["cremona_orbit"])
        elif ann is not None and ann.status is not None:
            status = ann.status
        elif c.dim < c.chi:
            status = Status(StatusKind.EXCLUDED, "DimBelowLambda")
        c = replace(c, status=status)
        if ann is not None:
            c = replace(
                c,
                notes=c.notes + ann.notes,
                citations=c.citations + ann.citations,
                reported_dim=ann.reported_dim if ann.reported_dim is not None else c.reported_dim,
                fiber_extra=ann.fiber_extra if ann.fiber_extra is not None else c.fiber_extra,
                gonality_upper=ann.gonality if ann.gonality is not None else c.gonality_upper,
            )
        if c.fiber_extra is not None and t.g >= 2:
            image, codim = moduli_accounting(c.dim, t.g, c.fiber_extra, t.r)
            c = replace(c, moduli_image_dim=image, codim=codim)
        out.append(c)
    return out


def candidates_for(d: int, g: int, r: int) -> list[FamilyCandidate]:
    """All candidate families for ``(d, g, r)``, statused, ordered by label."""
    t = CurveTriple(d, g, r)
    if g > castelnuovo_pi(d, r):
        return []
    cands = _surface_candidates(t) + _residual_candidates(t) + _complete_intersections(t) + _principal(t)
    cands = _fold_routes(cands)
    cands = _assign_status(t, cands)
    return sorted(cands, key=lambda c: c.label)
