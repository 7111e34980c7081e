"""Integer solutions of the degree and genus equations on each surface kind.

Every solver returns a lexicographically sorted list of :class:`ClassSolution`.
Loop bounds come from positivity and are stated next to each loop.  Setting
``CENSUS_DEBUG_WIDE_BOX=1`` reruns every search with a doubled box and raises
:class:`BoxInsufficientError` if the wider box finds anything new.
"""
from __future__ import annotations

import os
from collections import deque
from functools import lru_cache
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, isqrt

from .bounds import castelnuovo_pi, castelnuovo_pi1, plane_curve_genus
from .surfaces import (
    DivisorClass,
    SurfaceKind,
    SurfaceModel,
    adjunction_genus,
    assumes_general_points,
    dalmeida_hirschowitz_very_ample,
    degree,
    linear_system_dim,
    schwarz_filter,
)


class InvariantViolation(AssertionError):
    pass


class BoxInsufficientError(InvariantViolation):
    pass


@dataclass(frozen=True, order=True)
class Flag:
    name: str
    value: int | str | None = None

    def __str__(self) -> str:
        return self.name if self.value is None else f"{self.name}({self.value})"

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.value}

    @classmethod
    def from_dict(cls, data: dict) -> Flag:
        return cls(data["name"], data.get("value"))


VERY_AMPLE_CERTIFIED = "VeryAmpleCertified"
EXPECTED_DIM_ONLY = "ExpectedDimOnly"
PASSES_THROUGH_VERTEX = "PassesThroughVertex"
SINGULAR_AT_VERTEX = "SingularAtVertex"
NODAL_MODEL = "NodalModel"
MISSES_POINT = "MissesPoint"
CREMONA_ORBIT = "CremonaOrbit"

# Blown-up plane classes whose very-ampleness is established in the literature.
CITED_VERY_AMPLE = {(9, 3, 3, 3, 2)}


@dataclass(frozen=True)
class ClassSolution:
    """A divisor class with its degree and (geometric) genus.

    With a ``NodalModel(delta)`` flag the stored genus is ``p_a - delta``.
    """

    divisor: DivisorClass
    degree: int
    genus: int
    flags: frozenset[Flag] = field(default_factory=frozenset)
    severi_dim: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "flags", frozenset(self.flags))
        if degree(self.divisor) != self.degree:
            raise InvariantViolation(f"degree of {self.divisor} is not {self.degree}")
        if adjunction_genus(self.divisor) - self.delta != self.genus:
            raise InvariantViolation(f"genus of {self.divisor} is not {self.genus}")

    def flag(self, name: str) -> Flag | None:
        for f in self.flags:
            if f.name == name:
                return f
        return None

    def has(self, name: str) -> bool:
        return self.flag(name) is not None

    @property
    def delta(self) -> int:
        f = self.flag(NODAL_MODEL)
        return 0 if f is None else int(f.value)

    @property
    def surface(self) -> SurfaceModel:
        return self.divisor.surface

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.divisor.coeffs

    def sort_key(self) -> tuple:
        return (self.surface.kind.value, self.surface.param, self.coeffs)

    def to_dict(self) -> dict:
        return {
            "surface": self.surface.label(),
            "class": str(self.divisor),
            "coeffs": list(self.coeffs),
            "degree": self.degree,
            "genus": self.genus,
            "linear_system_dim": solution_dim(self),
            "flags": [str(f) for f in sorted(self.flags)],
            **({"severi_dim": self.severi_dim} if self.severi_dim is not None else {}),
        }


def solution_dim(sol: ClassSolution) -> int:
    if sol.surface.kind is SurfaceKind.BLOWN_PLANE and sol.coeffs[0] < 0:
        return -1
    return linear_system_dim(sol.divisor)


def _wide_box() -> bool:
    return os.environ.get("CENSUS_DEBUG_WIDE_BOX") == "1"


def _with_box_check(search, *args):
    found = search(*args, widen=1)
    if _wide_box():
        wider = search(*args, widen=2)
        if {s.coeffs for s in wider} != {s.coeffs for s in found}:
            raise BoxInsufficientError(f"{search.__name__}{args}: widened box found new classes")
    return found


def _sorted(sols: list[ClassSolution]) -> list[ClassSolution]:
    return sorted(sols, key=ClassSolution.sort_key)


def _scroll_search(d: int, g: int, n: int, *, widen: int) -> list[ClassSolution]:
    s = SurfaceModel.scroll(n)
    out = []
    # dim|aH+bL| >= 0 with b = d - na forces an/2 < d + 1
    for a in range(1, widen * (2 * (d + 1)) // n + 2):
        b = d - n * a
        if a * (a - 1) * n // 2 + (a - 1) * (b - 1) != g:
            continue
        D = DivisorClass(s, (a, b))
        if linear_system_dim(D) >= 0:
            out.append(ClassSolution(D, d, g))
    return out


def solve_scroll(d: int, g: int, n: int) -> list[ClassSolution]:
    """Classes ``aH + bL`` (``a >= 1``) of degree ``d`` and genus ``g`` on a degree-``n`` scroll."""
    if n < 2:
        raise ValueError("scroll degree n must be >= 2")
    return _sorted(_with_box_check(_scroll_search, d, g, n))


def _cone_flags(m: int) -> frozenset[Flag]:
    flags = set()
    if m >= 1:
        flags.add(Flag(PASSES_THROUGH_VERTEX, m))
    if m >= 2:
        flags.add(Flag(SINGULAR_AT_VERTEX))
    return frozenset(flags)


def _rational_cone_search(d: int, g: int, n: int, *, widen: int) -> list[ClassSolution]:
    s = SurfaceModel.rational_cone(n)
    out = []
    # m = d - nk >= 0
    for k in range(1, widen * d // n + 1):
        if (k - 1) * (2 * d - n * k - 2) != 2 * g:
            continue
        m = d - n * k
        if m < 0:
            continue
        out.append(ClassSolution(DivisorClass(s, (k, d)), d, g, _cone_flags(m)))
    return out


def solve_rational_cone(d: int, g: int, n: int, *, smooth_only: bool = False) -> list[ClassSolution]:
    """Classes ``kC_0 + df`` on the resolution of the cone over a rational normal curve of degree ``n``.

    Classes with vertex multiplicity ``m >= 2`` are kept and flagged singular
    unless ``smooth_only`` is set.
    """
    if n < 2:
        raise ValueError("cone degree n must be >= 2")
    sols = _with_box_check(_rational_cone_search, d, g, n)
    if smooth_only:
        sols = [s for s in sols if not s.has(SINGULAR_AT_VERTEX)]
    return _sorted(sols)


def solve_veronese(d: int, g: int) -> list[ClassSolution]:
    if d < 2 or d % 2:
        return []
    a = d // 2
    if plane_curve_genus(a) != g:
        return []
    return [ClassSolution(DivisorClass(SurfaceModel.veronese(), (a,)), d, g)]


def _elliptic_cone_search(d: int, g: int, r: int, *, widen: int) -> list[ClassSolution]:
    s = SurfaceModel.elliptic_cone(r)
    out = []
    # m = d - rk >= 0; genus (k-1)(2d - kr)/2 + 1
    for k in range(2, widen * d // r + 1):
        if (k - 1) * (2 * d - k * r) != 2 * (g - 1):
            continue
        m = d - r * k
        if m < 0:
            continue
        out.append(ClassSolution(DivisorClass(s, (k, d)), d, g, _cone_flags(m)))
    return out


def solve_elliptic_cone(d: int, g: int, r: int, *, smooth_only: bool = False) -> list[ClassSolution]:
    if r < 3:
        raise ValueError("elliptic cone needs r >= 3")
    sols = _with_box_check(_elliptic_cone_search, d, g, r)
    if smooth_only:
        sols = [s for s in sols if not s.has(SINGULAR_AT_VERTEX)]
    return _sorted(sols)


def _delpezzo_a_range(d: int, g: int) -> range:
    # Cauchy-Schwarz on (sum b)^2 <= 4 sum b^2 gives 5a^2 - 6da + d^2 + 4d + 8g - 8 <= 0
    disc = 36 * d * d - 20 * (d * d + 4 * d + 8 * g - 8)
    if disc < 0:
        return range(0)
    root = isqrt(disc)
    lo = max(0, (6 * d - root) // 10 - 1)
    hi = (6 * d + root) // 10 + 1
    return range(lo, hi + 1)


def _partitions4(total: int, squares: int):
    """Non-increasing ``(b1, b2, b3, b4) >= 0`` with the given sum and sum of squares."""
    for b1 in range(total, -1, -1):
        if b1 * b1 > squares or 4 * b1 < total:
            continue
        for b2 in range(min(b1, total - b1), -1, -1):
            if 3 * b2 < total - b1:
                break
            for b3 in range(min(b2, total - b1 - b2), -1, -1):
                b4 = total - b1 - b2 - b3
                if b4 > b3:
                    break
                if b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4 == squares:
                    yield (b1, b2, b3, b4)


def _delpezzo_flags(a: int, bs: tuple[int, ...]) -> set[Flag]:
    flags = set()
    if (a, *bs) in CITED_VERY_AMPLE or (
        all(b == 1 for b in bs) and dalmeida_hirschowitz_very_ample(a, len(bs))
    ):
        flags.add(Flag(VERY_AMPLE_CERTIFIED))
    else:
        flags.add(Flag(EXPECTED_DIM_ONLY))
    if bs[-1] == 0:
        flags.add(Flag(MISSES_POINT))
    return flags


def _delpezzo_search(d: int, g: int, *, widen: int) -> list[ClassSolution]:
    s = SurfaceModel.del_pezzo5()
    a_range = _delpezzo_a_range(d, g)
    if widen > 1:
        a_range = range(0, widen * max(a_range.stop, 2 * d + 1) + 1)
    raw = []
    for a in a_range:
        if a > 2 * d:
            # a = C.L <= 2 C.H for curves; degree-zero classes are not curves
            continue
        total = 3 * a - d
        squares = a * a - (2 * g - 2 + d)
        if total < 0 or squares < 0:
            continue
        for bs in _partitions4(total, squares):
            if schwarz_filter(bs):
                raw.append((a, bs))
    return [
        ClassSolution(DivisorClass(s, (a, *bs)), d, g, _delpezzo_flags(a, bs))
        for a, bs in raw
    ]


def solve_delpezzo5(d: int, g: int) -> list[ClassSolution]:
    """Sorted classes ``(a; b1 >= ... >= b4 >= 0)`` on the quintic del Pezzo surface.

    Cremona-equivalent classes are all returned; each carries a
    ``CremonaOrbit`` flag naming the orbit's lexicographically smallest member.
    """
    sols = _with_box_check(_delpezzo_search, d, g)
    coeffs = {s.coeffs for s in sols}
    out = []
    for sol in sols:
        rep = min(cremona_orbit(sol.coeffs) & coeffs)
        out.append(
            ClassSolution(
                sol.divisor,
                sol.degree,
                sol.genus,
                sol.flags | {Flag(CREMONA_ORBIT, _fmt_blown(rep))},
            )
        )
    return _sorted(out)


def _fmt_blown(c: tuple[int, ...]) -> str:
    return f"({c[0]};{','.join(map(str, c[1:]))})"


@lru_cache(maxsize=None)
def _brute_force_delpezzo5_table(d: int) -> dict[int, frozenset[tuple[int, ...]]]:
    table: dict[int, set[tuple[int, ...]]] = {}
    for a in range(0, 2 * d + 1):
        total = 3 * a - d
        for b1 in range(a + 1):
            for b2 in range(b1 + 1):
                rest = total - b1 - b2
                # b4 = rest - b3 must lie in [0, b3]
                for b3 in range(max(0, -(-rest // 2)), min(b2, rest) + 1):
                    b4 = rest - b3
                    twice = a * a - b1 * b1 - b2 * b2 - b3 * b3 - b4 * b4 - d + 2
                    if twice % 2 == 0:
                        table.setdefault(twice // 2, set()).add((a, b1, b2, b3, b4))
    return {g: frozenset(v) for g, v in table.items()}


def brute_force_delpezzo5(d: int, g: int) -> set[tuple[int, ...]]:
    """Independent oracle: every ``0 <= b_i <= a <= 2d`` solving both equations, sorted.

    Each unordered quadruple is visited once, with ``b4`` fixed by the degree equation.
    """
    return set(_brute_force_delpezzo5_table(d).get(g, ()))


def cremona(c: tuple[int, ...], triple: tuple[int, int, int] = (0, 1, 2)) -> tuple[int, ...]:
    """Quadratic transformation centred at three of the blown-up points; result sorted."""
    a, *bs = c
    i, j, k = triple
    t = a - bs[i] - bs[j] - bs[k]
    new = list(bs)
    new[i], new[j], new[k] = bs[i] + t, bs[j] + t, bs[k] + t
    return (a + t, *sorted(new, reverse=True))


def cremona_orbit(c: tuple[int, ...], max_size: int = 10_000) -> set[tuple[int, ...]]:
    """Orbit under quadratic transformations at every triple of points (finite for s <= 8)."""
    start = (c[0], *sorted(c[1:], reverse=True))
    s = len(c) - 1
    if s < 3:
        return {start}
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for triple in combinations(range(s), 3):
            nxt = cremona(cur, triple)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_size:
                    raise OverflowError("Cremona orbit too large; more than eight points?")
                queue.append(nxt)
    return seen


def cremona_groups(sols: list[ClassSolution]) -> list[list[ClassSolution]]:
    """Partition blown-up plane solutions into Cremona orbits, each sorted, ordered by first member."""
    groups: dict[tuple[int, ...], list[ClassSolution]] = {}
    present = {s.coeffs for s in sols}
    for sol in sols:
        rep = min(cremona_orbit(sol.coeffs) & present)
        groups.setdefault(rep, []).append(sol)
    return [sorted(v, key=ClassSolution.sort_key) for _, v in sorted(groups.items())]


def solve_quadric(d3: int, g: int) -> list[ClassSolution]:
    """Bidegrees ``(a, b)``, ``1 <= a <= b``, ``a + b = d3``, with ``(a-1)(b-1) >= g``; nodes ``delta`` flagged."""
    if d3 < 2:
        raise ValueError("degree in P^3 must be >= 2")
    q = SurfaceModel.quadric()
    out = []
    for a in range(1, d3 // 2 + 1):
        b = d3 - a
        delta = (a - 1) * (b - 1) - g
        if delta < 0:
            continue
        out.append(ClassSolution(DivisorClass(q, (a, b)), d3, g, {Flag(NODAL_MODEL, delta)}))
    return _sorted(out)


def solve_severi_plane(e: int, g: int) -> ClassSolution | None:
    """Nodal plane model of degree ``e`` and geometric genus ``g``; None if ``g`` exceeds the plane genus."""
    if e < 3:
        raise ValueError("plane degree must be >= 3")
    delta = plane_curve_genus(e) - g
    if delta < 0:
        return None
    D = DivisorClass(SurfaceModel.plane(), (e,))
    return ClassSolution(D, e, g, {Flag(NODAL_MODEL, delta)}, severi_dim=comb(e + 2, 2) - 1 - delta)


def nodal_blowup_class(e: int, delta: int) -> DivisorClass:
    """Strict transform ``(e; 2^delta)`` of a ``delta``-nodal plane curve on the blow-up at its nodes."""
    return DivisorClass(SurfaceModel.blown_plane(delta), (e, *([2] * delta)))


def plane_model_pencils(D: DivisorClass | ClassSolution) -> list[int]:
    """Degrees ``a - b_i`` of the pencils cut by lines through each assigned point, sorted ascending."""
    if isinstance(D, ClassSolution):
        D = D.divisor
    if D.surface.kind is not SurfaceKind.BLOWN_PLANE:
        raise ValueError("pencils through assigned points need a blown-up plane class")
    a, *bs = D.canonical().coeffs
    return sorted(a - b for b in bs)


def gonality_upper_from_pencils(D: DivisorClass | ClassSolution) -> int | None:
    p = plane_model_pencils(D)
    return min(p) if p else None


def hirzebruch_lattice_count(a: int, b: int, e: int) -> int:
    """Oracle for ``h^0(aC_0 + bf)`` on ``F_e``: lattice points ``0 <= i <= a``, ``0 <= j <= b - ie``."""
    count = 0
    for i in range(a + 1):
        for j in range(0, b - i * e + 1):
            count += 1
    return count


def expected_dim_flagged(sol: ClassSolution) -> bool:
    return assumes_general_points(sol.surface)


SOLVER_KINDS = ("scroll", "cone", "veronese", "elliptic-cone", "delpezzo5", "quadric", "severi")


def enumerate_kind(kind: str, d: int, g: int, r: int) -> list[ClassSolution]:
    """Run one solver with the surface parameters that fit curves of degree ``d`` in ``P^r``.

    Scrolls and rational cones have degree ``r - 1``; the elliptic cone has
    degree ``r``.  The quadric and plane solvers look at the residual series
    ``|K - H|`` of degree ``2g - 2 - d``.
    """
    if kind == "scroll":
        return solve_scroll(d, g, r - 1)
    if kind == "cone":
        return solve_rational_cone(d, g, r - 1)
    if kind == "veronese":
        return solve_veronese(d, g) if r == 5 else []
    if kind == "elliptic-cone":
        return solve_elliptic_cone(d, g, r)
    if kind == "delpezzo5":
        return solve_delpezzo5(d, g) if r == 5 else []
    if kind not in ("quadric", "severi"):
        raise ValueError(f"unknown surface kind {kind!r}")
    e = 2 * g - 2 - d
    dims = {s for _, s in residual_series(d, g, r)}
    if kind == "quadric":
        if 3 in dims and g > castelnuovo_pi1(e, 3):
            return solve_quadric(e, g)
        return []
    sol = solve_severi_plane(e, g) if 2 in dims and e >= 3 else None
    return [] if sol is None else [sol]


def residual_series(d: int, g: int, r: int) -> list[tuple[int, int]]:
    """Pairs ``(beta, s)``: ``|H| = g^beta_d`` complete with ``beta >= r`` and residual ``|K - H| = g^s_e``.

    ``beta`` is limited by ``g <= pi(d, beta)``; ``s >= 1`` and Clifford ``2s <= e``
    with ``e = 2g - 2 - d``.
    """
    e = 2 * g - 2 - d
    out = []
    if e < 2 or g < 2:
        return out
    beta = r
    while beta <= d and castelnuovo_pi(d, beta) >= g:
        s = g - d + beta - 1
        if s >= 1 and 2 * s <= e:
            out.append((beta, s))
        beta += 1
    return out


def enumerate_all(d: int, g: int, r: int, kinds: tuple[str, ...] = SOLVER_KINDS) -> list[tuple[str, ClassSolution]]:
    return [(kind, sol) for kind in kinds for sol in enumerate_kind(kind, d, g, r)]


def oracle_check(kind: str, d: int, g: int, r: int) -> list[str]:
    """Cross-check a solver against an independent search; returns mismatch messages."""
    problems = []
    sols = enumerate_kind(kind, d, g, r)
    for sol in sols:
        if degree(sol.divisor) != d and kind not in ("quadric", "severi"):
            problems.append(f"{sol.divisor}: degree mismatch")
        if adjunction_genus(sol.divisor) - sol.delta != g:
            problems.append(f"{sol.divisor}: genus mismatch")
    if kind == "delpezzo5" and r == 5:
        got = {s.coeffs for s in sols}
        want = brute_force_delpezzo5(d, g)
        if got != want:
            problems.append(f"del Pezzo solver {sorted(got)} != brute force {sorted(want)}")
    if kind == "scroll":
        n = r - 1
        want = set()
        for a in range(1, 4 * (d + 1) + 2):
            for b in range(-n * a - 2 * d - 2, d + 1):
                D = DivisorClass(SurfaceModel.scroll(n), (a, b))
                if degree(D) == d and adjunction_genus(D) == g and linear_system_dim(D) >= 0:
                    want.add((a, b))
        got = {s.coeffs for s in sols}
        if got != want:
            problems.append(f"scroll solver {sorted(got)} != brute force {sorted(want)}")
    return problems
