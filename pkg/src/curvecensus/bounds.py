"""Integer formulas for genus bounds, Brill-Noether numbers and family dimensions.

Everything here is a pure function of small integers.  Values that may be
negative (the Brill-Noether number in particular) are returned signed; the only
place an "empty" answer appears is :func:`bn_variety_dim`, which returns
``None`` when the Brill-Noether locus is empty on a general curve.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import prod


class GenusRegime(str, enum.Enum):
    IMPOSSIBLE = "Impossible"
    EXTREMAL = "Extremal"
    NEARLY_EXTREMAL = "NearlyExtremal"
    SUB_EXTREMAL = "SubExtremal"


@dataclass(frozen=True)
class CurveTriple:
    """Degree, genus and ambient dimension of a curve ``C`` in ``P^r``."""

    d: int
    g: int
    r: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.g < 0 or self.r < 2:
            raise ValueError(f"invalid triple (d={self.d}, g={self.g}, r={self.r}); need d>=1, g>=0, r>=2")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.d, self.g, self.r)


@dataclass(frozen=True)
class BoundsRecord:
    rho: int
    lam: int
    chi: int
    pi: int
    pi1: int
    pi1_regime: str
    genus_regime: GenusRegime
    low_degree_surface: bool

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "lambda": self.lam,
            "chi": self.chi,
            "pi": self.pi,
            "pi1": self.pi1,
            "pi1_regime": self.pi1_regime,
            "genus_regime": self.genus_regime.value,
            "low_degree_surface": self.low_degree_surface,
        }

    @classmethod
    def from_dict(cls, data: dict) -> BoundsRecord:
        return cls(
            rho=data["rho"],
            lam=data["lambda"],
            chi=data["chi"],
            pi=data["pi"],
            pi1=data["pi1"],
            pi1_regime=data["pi1_regime"],
            genus_regime=GenusRegime(data["genus_regime"]),
            low_degree_surface=data["low_degree_surface"],
        )


def aut_dim(r: int) -> int:
    """Dimension of ``PGL(r+1)``."""
    return (r + 1) ** 2 - 1


def brill_noether_rho(t: CurveTriple) -> int:
    return t.g - (t.r + 1) * (t.g - t.d + t.r)


def expected_dims(t: CurveTriple) -> tuple[int, int]:
    """Return ``(lambda, chi)``: lower bounds for components of G^r_d and of the Hilbert scheme."""
    lam = 3 * t.g - 3 + brill_noether_rho(t)
    return lam, lam + aut_dim(t.r)


def _check_dr(d: int, r: int) -> None:
    if d < 1 or r < 2:
        raise ValueError(f"Castelnuovo bound needs d >= 1 and r >= 2, got d={d}, r={r}")


def castelnuovo_pi(d: int, r: int) -> int:
    """Maximal arithmetic genus of a non-degenerate integral curve of degree ``d`` in ``P^r``."""
    _check_dr(d, r)
    m, eps = divmod(d - 1, r - 1)
    return m * (m - 1) * (r - 1) // 2 + m * eps


def _pi1_decomposition(d: int, r: int) -> int:
    m, eps = divmod(d, r)
    return m * (m - 1) * r // 2 + m * eps


def _pi1_closed_form(d: int, r: int) -> int:
    # d - 1 = m r + eps, with a correction of one when eps = r - 1
    m, eps = divmod(d - 1, r)
    mu = 1 if eps == r - 1 else 0
    return m * (m - 1) * r // 2 + m * (eps + 1) + mu


def castelnuovo_pi1(d: int, r: int) -> int:
    """Second Castelnuovo bound: curves not lying on a surface of degree ``r - 1``.

    Computed from ``d = m r + eps``.  Below ``d = 2r - 1`` the first bound is
    returned.  See :func:`pi1_regime` for where this disagrees with the
    classical closed form.
    """
    _check_dr(d, r)
    if d < 2 * r - 1:
        return castelnuovo_pi(d, r)
    return _pi1_decomposition(d, r)


def pi1_regime(d: int, r: int) -> str:
    """Provenance flag for :func:`castelnuovo_pi1`.

    ``"below-range"``: d < 2r - 1, the first bound was returned.
    ``"standard"``: the decomposition agrees with the closed form
    ``C(m,2) r + m(eps+1) + mu`` (d - 1 = m r + eps).
    ``"divergent"``: r divides d and the closed form is larger by one.
    """
    _check_dr(d, r)
    if d < 2 * r - 1:
        return "below-range"
    if _pi1_decomposition(d, r) == _pi1_closed_form(d, r):
        return "standard"
    return "divergent"


def genus_regime(t: CurveTriple) -> GenusRegime:
    pi = castelnuovo_pi(t.d, t.r)
    pi1 = castelnuovo_pi1(t.d, t.r)
    if t.g > pi:
        return GenusRegime.IMPOSSIBLE
    if t.g == pi:
        return GenusRegime.EXTREMAL
    if t.g > pi1:
        return GenusRegime.NEARLY_EXTREMAL
    return GenusRegime.SUB_EXTREMAL


def lies_on_low_degree_surface_guaranteed(t: CurveTriple) -> bool:
    """True when ``pi1 <= g <= pi``: the curve sits on a surface of degree at most ``r``.

    Unlike :func:`genus_regime` this includes the boundary ``g = pi1``.
    """
    return castelnuovo_pi1(t.d, t.r) <= t.g <= castelnuovo_pi(t.d, t.r)


def bounds_record(t: CurveTriple) -> BoundsRecord:
    lam, chi = expected_dims(t)
    return BoundsRecord(
        rho=brill_noether_rho(t),
        lam=lam,
        chi=chi,
        pi=castelnuovo_pi(t.d, t.r),
        pi1=castelnuovo_pi1(t.d, t.r),
        pi1_regime=pi1_regime(t.d, t.r),
        genus_regime=genus_regime(t),
        low_degree_surface=lies_on_low_degree_surface_guaranteed(t),
    )


def castelnuovo_severi_bound(m: int, h: int, n: int, q: int) -> int:
    """Largest genus of a curve with independent covers of degrees ``m``, ``n`` onto genera ``h``, ``q``."""
    return m * h + n * q + (m - 1) * (n - 1)


def _check_gonal(g: int, k: int) -> None:
    if k < 3 or g < 2 * k - 2:
        raise ValueError(f"need k >= 3 and g >= 2k - 2, got g={g}, k={k}")


def gonal_pencil_dim(g: int, k: int, l: int) -> int | None:
    """``dim |l E|`` for the unique ``g^1_k`` ``E`` on a general k-gonal curve, or None outside ``1 <= l <= [g/(k-1)]``."""
    _check_gonal(g, k)
    if 1 <= l <= g // (k - 1):
        return l
    return None


def residual_very_ample_gonal(g: int, k: int, l: int) -> bool:
    """Sufficient condition for ``|K - l g^1_k|`` to be very ample (weak form)."""
    _check_gonal(g, k)
    return 1 <= l <= g // (k - 1) - 2


def residual_very_ample_gonal_strong(g: int, k: int, l: int, m: int = 2) -> bool:
    """Sufficient condition ``g >= 2m + l(k-1)`` together with ``2k - g - 2 < 0``.

    With ``m = 2`` this says ``dim |l g^1_k + D| = l`` for every effective ``D``
    of degree two, i.e. ``|K - l g^1_k|`` separates points and tangents.
    """
    _check_gonal(g, k)
    if m < 0:
        raise ValueError("m must be non-negative")
    return g >= 2 * m + l * (k - 1) and 2 * k - g - 2 < 0


def plane_curve_genus(e: int) -> int:
    if e < 1:
        raise ValueError("plane curve degree must be >= 1")
    return (e - 1) * (e - 2) // 2


def complete_intersection_genus(degrees: list[int], n: int) -> int:
    """Arithmetic genus of a complete intersection curve of the given degrees in ``P^n``."""
    if len(degrees) != n - 1:
        raise ValueError(f"a curve in P^{n} needs {n - 1} hypersurfaces, got {len(degrees)}")
    if any(a < 1 for a in degrees):
        raise ValueError("hypersurface degrees must be >= 1")
    value = 1 + Fraction(prod(degrees) * (sum(degrees) - n - 1), 2)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral genus {value} for degrees {degrees}")
    return int(value)


def hurwitz_dim(g: int, n: int, gamma: int) -> int:
    """Dimension of the locus of genus ``g`` curves that are degree ``n`` covers of genus ``gamma`` curves."""
    if n < 2 or gamma < 0:
        raise ValueError("need n >= 2 and gamma >= 0")
    # Riemann-Hurwitz: 2g - 2 >= n (2 gamma - 2)
    if gamma > 0 and 2 * g - 2 < n * (2 * gamma - 2):
        raise ValueError(f"no degree {n} cover of a genus {gamma} curve has genus {g}")
    return 2 * g + (2 * n - 3) * (1 - gamma) - 2


def gonal_locus_dim(g: int, k: int) -> int:
    """``dim M^1_{g,k}``; the Hurwitz formula at ``gamma = 0``."""
    return hurwitz_dim(g, k, 0)


def grassmannian_dim(k: int, n: int) -> int:
    """Dimension of the Grassmannian of k-planes in ``P^n``; ``G(n, n)`` is a point."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return (k + 1) * (n - k)


def bn_variety_dim(g: int, r: int, d: int) -> int | None:
    """``dim W^r_d`` on a general curve of genus ``g``; None when it is empty."""
    if g < 1 or r < 0 or d < 0:
        raise ValueError("need g >= 1, r >= 0, d >= 0")
    rho = g - (r + 1) * (g - d + r)
    return rho if rho >= 0 else None


def bn_divisor_variety_dim(g: int, r: int, d: int) -> int | None:
    """``dim C^r_d = rho + r`` on a general curve, None when ``W^r_d`` is empty."""
    w = bn_variety_dim(g, r, d)
    return None if w is None else w + r
