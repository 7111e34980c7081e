"""Divisor classes on the rational and ruled surfaces that carry curves in P^5.

Picard bases, one per surface kind:

- ``Scroll(n)``: ``(a, b)`` for ``aH + bL`` (hyperplane, ruling line); ``H^2 = n``.
- ``Hirzebruch(e)``: ``(a, b)`` for ``aC_0 + bf``; ``C_0^2 = -e``.
- ``BlownPlane(s)``: ``(a, b_1, ..., b_s)`` for ``aL - sum b_i E_i``.
- ``Veronese``: ``(a,)``, the plane class ``aL``; degree in P^5 is ``2a``.
- ``RationalCone(n)``: ``(k, d)`` for ``kC_0 + df`` on the resolution ``F_n``.
- ``EllipticCone(r)``: ``(k, d)`` for ``kC_0 + df`` on ``P(O_E + O_E(r))``.
- ``Quadric``: bidegree ``(a, b)``; identical to ``Hirzebruch(0)``.

Blown-up plane classes keep the order of their points so that the pairing is
bilinear; :meth:`DivisorClass.canonical` sorts the multiplicities.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb


class SurfaceKind(str, enum.Enum):
    SCROLL = "scroll"
    HIRZEBRUCH = "hirzebruch"
    BLOWN_PLANE = "blown-plane"
    VERONESE = "veronese"
    RATIONAL_CONE = "rational-cone"
    ELLIPTIC_CONE = "elliptic-cone"
    QUADRIC = "quadric"


class SurfaceMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceModel:
    kind: SurfaceKind
    param: int = 0
    hyperplane: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        k, p = self.kind, self.param
        if k is SurfaceKind.SCROLL and p < 2:
            raise ValueError("Scroll(n) needs n >= 2")
        if k in (SurfaceKind.HIRZEBRUCH, SurfaceKind.BLOWN_PLANE) and p < 0:
            raise ValueError(f"{k.value} parameter must be >= 0")
        if k is SurfaceKind.RATIONAL_CONE and p < 2:
            raise ValueError("RationalCone(n) needs n >= 2")
        if k is SurfaceKind.ELLIPTIC_CONE and p < 3:
            raise ValueError("EllipticCone(r) needs r >= 3")
        if k in (SurfaceKind.VERONESE, SurfaceKind.QUADRIC) and p != 0:
            raise ValueError(f"{k.value} takes no parameter")
        if self.hyperplane is not None and len(self.hyperplane) != self.rank:
            raise ValueError("hyperplane class has the wrong length")

    @classmethod
    def scroll(cls, n: int) -> SurfaceModel:
        return cls(SurfaceKind.SCROLL, n)

    @classmethod
    def hirzebruch(cls, e: int, hyperplane: tuple[int, int] | None = None) -> SurfaceModel:
        return cls(SurfaceKind.HIRZEBRUCH, e, hyperplane)

    @classmethod
    def blown_plane(cls, s: int, hyperplane: tuple[int, ...] | None = None) -> SurfaceModel:
        return cls(SurfaceKind.BLOWN_PLANE, s, hyperplane)

    @classmethod
    def plane(cls) -> SurfaceModel:
        return cls(SurfaceKind.BLOWN_PLANE, 0, (1,))

    @classmethod
    def del_pezzo5(cls) -> SurfaceModel:
        """``P^2`` blown up at four general points, anticanonically embedded in P^5."""
        return cls(SurfaceKind.BLOWN_PLANE, 4, (3, 1, 1, 1, 1))

    @classmethod
    def veronese(cls) -> SurfaceModel:
        return cls(SurfaceKind.VERONESE)

    @classmethod
    def rational_cone(cls, n: int) -> SurfaceModel:
        return cls(SurfaceKind.RATIONAL_CONE, n)

    @classmethod
    def elliptic_cone(cls, r: int) -> SurfaceModel:
        return cls(SurfaceKind.ELLIPTIC_CONE, r)

    @classmethod
    def quadric(cls, hyperplane: tuple[int, int] | None = None) -> SurfaceModel:
        return cls(SurfaceKind.QUADRIC, 0, hyperplane)

    @property
    def rank(self) -> int:
        if self.kind is SurfaceKind.BLOWN_PLANE:
            return 1 + self.param
        if self.kind is SurfaceKind.VERONESE:
            return 1
        return 2

    @property
    def negative_section(self) -> int:
        """``-C_0^2`` for the ruled kinds."""
        if self.kind in (SurfaceKind.HIRZEBRUCH, SurfaceKind.RATIONAL_CONE, SurfaceKind.ELLIPTIC_CONE):
            return self.param
        if self.kind is SurfaceKind.QUADRIC:
            return 0
        raise ValueError(f"{self.kind.value} is not presented as a ruled surface")

    def pairing(self, u: tuple[int, ...], v: tuple[int, ...]) -> int:
        k = self.kind
        if k is SurfaceKind.SCROLL:
            return self.param * u[0] * v[0] + u[0] * v[1] + u[1] * v[0]
        if k is SurfaceKind.BLOWN_PLANE:
            return u[0] * v[0] - sum(x * y for x, y in zip(u[1:], v[1:]))
        if k is SurfaceKind.VERONESE:
            return u[0] * v[0]
        e = self.negative_section
        return -e * u[0] * v[0] + u[0] * v[1] + u[1] * v[0]

    def canonical_coeffs(self) -> tuple[int, ...]:
        k = self.kind
        if k is SurfaceKind.SCROLL:
            return (-2, self.param - 2)
        if k is SurfaceKind.BLOWN_PLANE:
            return (-3,) + (-1,) * self.param
        if k is SurfaceKind.VERONESE:
            return (-3,)
        if k is SurfaceKind.ELLIPTIC_CONE:
            # K = -2 C_0 + (2q - 2 - e) f with q = 1, e = r
            return (-2, -self.param)
        return (-2, -self.negative_section - 2)

    def hyperplane_coeffs(self) -> tuple[int, ...]:
        if self.hyperplane is not None:
            return self.hyperplane
        k = self.kind
        if k is SurfaceKind.SCROLL:
            return (1, 0)
        if k is SurfaceKind.BLOWN_PLANE:
            return (3,) + (1,) * self.param
        if k is SurfaceKind.VERONESE:
            return (2,)
        if k is SurfaceKind.QUADRIC:
            return (1, 1)
        if k is SurfaceKind.HIRZEBRUCH:
            return (1, self.param + 1)
        # tautological class h = C_0 + n f on the cone resolutions
        return (1, self.param)

    def label(self) -> str:
        if self.kind in (SurfaceKind.VERONESE, SurfaceKind.QUADRIC):
            return self.kind.value
        return f"{self.kind.value}({self.param})"


@dataclass(frozen=True)
class DivisorClass:
    surface: SurfaceModel
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.surface.rank:
            raise ValueError(
                f"{self.surface.label()} classes have {self.surface.rank} coefficients, got {len(self.coeffs)}"
            )

    def _same(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass) or other.surface != self.surface:
            raise SurfaceMismatchError("divisor classes live on different surfaces")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._same(other)
        return DivisorClass(self.surface, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._same(other)
        return DivisorClass(self.surface, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.surface, tuple(-x for x in self.coeffs))

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(self.surface, tuple(k * x for x in self.coeffs))

    __rmul__ = __mul__

    def canonical(self) -> DivisorClass:
        if self.surface.kind is not SurfaceKind.BLOWN_PLANE:
            return self
        a, *bs = self.coeffs
        return DivisorClass(self.surface, (a, *sorted(bs, reverse=True)))

    def __str__(self) -> str:
        if self.surface.kind is SurfaceKind.BLOWN_PLANE:
            a, *bs = self.coeffs
            if not bs:
                return f"({a})"
            return f"({a};{','.join(map(str, bs))})"
        return "(" + ",".join(map(str, self.coeffs)) + ")"


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    d1._same(d2)
    return d1.surface.pairing(d1.coeffs, d2.coeffs)


def canonical_class(surface: SurfaceModel) -> DivisorClass:
    return DivisorClass(surface, surface.canonical_coeffs())


def hyperplane_class(surface: SurfaceModel) -> DivisorClass:
    return DivisorClass(surface, surface.hyperplane_coeffs())


def degree(d: DivisorClass) -> int:
    """Degree of the image curve under the surface's embedding (or cone) class."""
    if d.surface.kind is SurfaceKind.VERONESE:
        return 2 * d.coeffs[0]
    return intersect(d, hyperplane_class(d.surface))


class ParityError(AssertionError):
    """``D.(D+K)`` came out odd, which means the pairing or canonical class is wrong."""


def adjunction_genus(d: DivisorClass) -> int:
    twice = intersect(d, d + canonical_class(d.surface))
    if twice % 2:
        raise ParityError(f"D.(D+K) = {twice} is odd for {d}")
    return 1 + twice // 2


def vertex_multiplicity(d: DivisorClass) -> int:
    """Multiplicity at the vertex of the image of ``kC_0 + df``: ``D . C_0 = d - n k``."""
    if d.surface.kind not in (SurfaceKind.RATIONAL_CONE, SurfaceKind.ELLIPTIC_CONE):
        raise ValueError("vertex multiplicity is defined on cones only")
    k, dd = d.coeffs
    m = dd - d.surface.param * k
    if m < 0:
        raise ValueError(f"class {d} is not effective on the cone (m = {m})")
    return m


def _elliptic_h0(t: int, trivial_degree_zero: bool) -> int:
    if t >= 1:
        return t
    if t == 0:
        return 1 if trivial_degree_zero else 0
    return 0


def assumes_general_points(surface: SurfaceModel) -> bool:
    """Blown-up plane dimensions are expected dimensions (points impose independent conditions)."""
    return surface.kind is SurfaceKind.BLOWN_PLANE and surface.param > 0


def linear_system_dim(d: DivisorClass, *, trivial_degree_zero: bool = True) -> int:
    """Projective dimension ``h^0 - 1`` of ``|D|``; ``-1`` for an empty system.

    ``trivial_degree_zero`` selects ``h^0 = 1`` for the degree-zero summand in
    the elliptic cone push-forward (the summand is ``O_E``).
    """
    s = d.surface
    k = s.kind
    c = d.coeffs
    if k is SurfaceKind.SCROLL:
        a, b = c
        if a < 0:
            return -1
        n = s.param
        return max(-1, a * (a + 1) * n // 2 + (a + 1) * (b + 1) - 1)
    if k is SurfaceKind.VERONESE:
        a = c[0]
        return comb(a + 2, 2) - 1 if a >= 0 else -1
    if k is SurfaceKind.BLOWN_PLANE:
        a, *bs = c
        if a < 0:
            raise ValueError("blown-up plane dimension needs a >= 0")
        conditions = sum(comb(b + 1, 2) for b in bs if b > 0)
        return max(-1, comb(a + 2, 2) - 1 - conditions)
    if k is SurfaceKind.QUADRIC:
        a, b = c
        if a < 0 or b < 0:
            return -1
        return (a + 1) * (b + 1) - 1
    if k is SurfaceKind.ELLIPTIC_CONE:
        kk, dd = c
        if kk < 0:
            return -1
        r = s.param
        return sum(_elliptic_h0(dd - i * r, trivial_degree_zero) for i in range(kk + 1)) - 1
    # Hirzebruch and rational cone: push forward to Sym^a(O + O(-e)) (b)
    a, b = c
    if k is SurfaceKind.HIRZEBRUCH and a < 0:
        raise ValueError("Hirzebruch dimension needs a >= 0")
    if a < 0:
        return -1
    e = s.param
    return sum(max(0, b - i * e + 1) for i in range(a + 1)) - 1


def dalmeida_hirschowitz_very_ample(t: int, delta: int) -> bool:
    """Very-ampleness criterion for ``(t; 1^delta)`` at general points: ``delta <= t(t+3)/2 - 5``."""
    if t < 1 or delta < 0:
        raise ValueError("need t >= 1 and delta >= 0")
    return 2 * delta <= t * (t + 3) - 10


def schwarz_filter(b: tuple[int, ...] | list[int]) -> bool:
    """``(sum b)^2 <= 4 sum b^2``; a necessary condition only (true for every real 4-vector)."""
    if len(b) != 4:
        raise ValueError("the filter is stated for four points")
    return sum(b) ** 2 <= 4 * sum(x * x for x in b)


def veronese_normal_h1(d: int, g: int, a: int) -> int:
    """``h^1(N_C)`` for a curve of degree ``d = 2a`` on the Veronese surface; raw, may be negative."""
    if d != 2 * a:
        raise ValueError("curves on the Veronese surface have degree 2a")
    return 3 * (g - d + 5) - 3 * a + 9
