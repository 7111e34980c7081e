from __future__ import annotations

import pytest

from curvecensus.bounds import CurveTriple, expected_dims
from curvecensus.components import (
    CANDIDATE,
    Construction,
    FamilyCandidate,
    Status,
    StatusKind,
    candidates_for,
    complete_intersection_family,
    complete_intersection_hilbert_function,
    cone_family_dim,
    delpezzo_family_dim,
    delpezzo_space_dim,
    elliptic_normal_curve_space_dim,
    gonal_residual_family_dim,
    hurwitz_residual_family_dim,
    moduli_accounting,
    quadric_model_family_dim,
    rational_normal_curve_space_dim,
    scroll_family_dim,
    scroll_space_dim,
    severi_dim,
    severi_model_family_dim,
    veronese_family_dim,
)
from curvecensus.enumeration import (
    ClassSolution,
    InvariantViolation,
    solve_delpezzo5,
    solve_elliptic_cone,
    solve_rational_cone,
    solve_scroll,
    solve_veronese,
)
from curvecensus.surfaces import DivisorClass, SurfaceModel


def by_label(d, g, r):
    return {c.label: c for c in candidates_for(d, g, r)}


def test_space_dims():
    assert scroll_space_dim(5) == 29
    assert rational_normal_curve_space_dim(4) == 21
    assert elliptic_normal_curve_space_dim(4) == 25
    assert delpezzo_space_dim() == 35


@pytest.mark.parametrize("g, coeffs, dim", [(21, (4, 0), 73), (20, (5, -4), 70), (18, (3, 4), 72)])
def test_scroll_family(g, coeffs, dim):
    (sol,) = solve_scroll(16, g, 4)
    assert sol.coeffs == coeffs
    assert scroll_family_dim(sol, 5) == dim


def test_scroll_family_checks_degree():
    (sol,) = solve_scroll(16, 21, 4)
    with pytest.raises(ValueError):
        scroll_family_dim(sol, 6)
    with pytest.raises(ValueError):
        veronese_family_dim(sol, 5)


def test_cone_families():
    (rat,) = solve_rational_cone(16, 21, 4)
    assert cone_family_dim(rat, 5) == 5 + 21 + 44 == 70
    (ell,) = solve_elliptic_cone(16, 18, 5)
    assert cone_family_dim(ell, 5) == 5 + 25 + 33 == 63


def test_veronese_family():
    (sol,) = solve_veronese(16, 21)
    assert veronese_family_dim(sol, 5) == 71
    cubic = ClassSolution(DivisorClass(SurfaceModel.veronese(), (3,)), 6, 1)
    assert veronese_family_dim(cubic, 5) == 36
    lam, chi = expected_dims(CurveTriple(16, 21, 5))
    assert chi + 15 == 71
    with pytest.raises(ValueError):
        veronese_family_dim(sol, 4)


@pytest.mark.parametrize("g, coeffs, dim", [(18, (9, 3, 3, 3, 2), 68), (17, (8, 2, 2, 2, 2), 67), (16, (8, 3, 2, 2, 1), 66)])
def test_delpezzo_family(g, coeffs, dim):
    sol = next(s for s in solve_delpezzo5(16, g) if s.coeffs == coeffs)
    assert delpezzo_family_dim(sol, 5) == dim
    with pytest.raises(ValueError):
        delpezzo_family_dim(sol, 4)


def test_delpezzo_g16_has_zero_excess():
    assert expected_dims(CurveTriple(16, 16, 5)) == (31, 66)


@pytest.mark.parametrize(
    "args, dim", [((13, 4, 2, 5), 35), ((12, 3, 2, 5), 37), ((12, 6, 1, 5), 37), ((18, 3, 6, 5), 37)]
)
def test_gonal_residual(args, dim):
    assert gonal_residual_family_dim(*args) == dim


def test_gonal_residual_errors():
    with pytest.raises(ValueError):
        gonal_residual_family_dim(13, 4, 2, 5, target_dim_series=5)
    with pytest.raises(ValueError):
        gonal_residual_family_dim(12, 3, 4, 5)


def test_route_equality_at_18():
    (sol,) = solve_scroll(16, 18, 4)
    assert scroll_family_dim(sol, 5) == gonal_residual_family_dim(18, 3, 6, 5) + 35 == 2 * 18 + 1 + 35


def test_hurwitz_residual():
    assert hurwitz_residual_family_dim(13, 2, 3, 5, 6) == 28


def test_severi():
    assert severi_model_family_dim(10, 14, 5) == 35 == expected_dims(CurveTriple(10, 14, 2))[0]
    assert severi_model_family_dim(8, 13, 5) == 34
    assert severi_dim(10, 36) == 65
    with pytest.raises(ValueError):
        severi_dim(10, 37)
    with pytest.raises(ValueError):
        severi_model_family_dim(10, 15, 7)


def test_quadric_model():
    # |(5,5)| = 35, two nodes, Aut(Q) = 6, then G(5, 6) = 6
    assert quadric_model_family_dim(5, 5, 2, 14, 5) == 35 - 2 - 6 + 6
    assert quadric_model_family_dim(5, 5, 2, 14, 5) + 35 == 27 + 6 + 35 == 68
    with pytest.raises(ValueError):
        quadric_model_family_dim(5, 5, 2, 12, 5)


def test_complete_intersections():
    ci = complete_intersection_family([2, 2, 2, 2], 5)
    assert ci.dim == 68 == 4 * 17
    assert ci.params["genus"] == 17 and ci.params["degree"] == 16
    assert complete_intersection_hilbert_function([2, 2, 2, 2], 5, 2) == 17
    assert ci.params["tangent_dim"] == 68
    assert ci.excess == 4
    ell = complete_intersection_family([2, 2], 3)
    assert (ell.dim, ell.params["genus"], ell.params["degree"]) == (16, 1, 4)
    mixed = complete_intersection_family([2, 3], 3)
    assert any("heuristic" in n for n in mixed.notes)


@pytest.mark.parametrize("dim, g, image", [(70, 20, (35, 22)), (73, 21, (38, 22)), (71, 21, (36, 24)), (72, 18, (37, 14))])
def test_moduli_accounting(dim, g, image):
    assert moduli_accounting(dim, g, 0) == image


def test_moduli_accounting_errors():
    with pytest.raises(ValueError):
        moduli_accounting(30, 20, 0)
    with pytest.raises(ValueError):
        moduli_accounting(70, 20, -1)
    with pytest.raises(InvariantViolation):
        moduli_accounting(100, 10, 0)


def test_status_requires_reason():
    with pytest.raises(ValueError):
        Status(StatusKind.EXCLUDED)
    s = Status(StatusKind.EXCLUDED, "SpecializationOf", "scroll(4)(4,0)")
    assert Status.from_dict(s.to_dict()) == s
    assert str(s) == "Excluded(SpecializationOf(scroll(4)(4,0)))"


def test_candidate_invariants():
    ci = complete_intersection_family([2, 2, 2, 2], 5)
    assert FamilyCandidate.from_dict(ci.to_dict()) == ci
    broken = ci.to_dict()
    broken["excess"] = 0
    with pytest.raises(InvariantViolation):
        FamilyCandidate.from_dict(broken)


def test_census_excess_signs():
    g21 = by_label(16, 21, 5)
    assert g21["veronese(8)"].excess > 0 and g21["scroll(4)(4,0)"].excess > 0
    assert by_label(16, 20, 5)["scroll(4)(5,-4)"].excess > 0
    g18 = by_label(16, 18, 5)
    for label in ("scroll(4)(3,4)", "delpezzo5(9;3,3,3,2)", "elliptic-cone(5)(3,16)"):
        assert g18[label].excess > 0
    g17 = by_label(16, 17, 5)
    assert g17["CI(2,2,2,2)"].excess > 0 and g17["delpezzo5(8;2,2,2,2)"].excess > 0
    assert by_label(16, 16, 5)["delpezzo5(8;3,2,2,1)"].excess == 0
    assert by_label(16, 14, 5)["severi-plane(10)"].excess == 0


def test_below_lambda_is_excluded():
    for g in range(11, 22):
        for c in candidates_for(16, g, 5):
            if c.dim < c.chi:
                assert c.status.kind is StatusKind.EXCLUDED


def test_g21_statuses():
    g21 = by_label(16, 21, 5)
    assert set(g21) == {"veronese(8)", "scroll(4)(4,0)", "rational-cone(4)(4,16)"}
    cone = g21["rational-cone(4)(4,16)"]
    assert cone.status.kind is StatusKind.STRICTLY_INSIDE_BOUNDARY
    assert cone.status.target == "scroll(4)(4,0)"
    assert g21["scroll(4)(4,0)"].status == CANDIDATE
    assert (g21["veronese(8)"].moduli_image_dim, g21["veronese(8)"].codim) == (36, 24)


def test_g20_routes():
    scroll = by_label(16, 20, 5)["scroll(4)(5,-4)"]
    assert dict(scroll.routes) == {"scroll": 70, "quadric(5,6)": 70, "hirzebruch(2)(5,11)": 69}
    assert (scroll.moduli_image_dim, scroll.codim) == (35, 22)


def test_g18_details():
    g18 = by_label(16, 18, 5)
    ell = g18["elliptic-cone(5)(3,16)"]
    assert (ell.dim, ell.reported_dim) == (63, 64)
    assert g18["rational-cone(4)(3,16)"].status.reason == "SingularAtVertex"
    scroll = g18["scroll(4)(3,4)"]
    assert dict(scroll.routes)["gonal(k=3,l=6)"] == 72
    assert g18["delpezzo5(9;3,3,3,2)"].gonality_upper == 6


def test_g14_quadric_annotation():
    g14 = by_label(16, 14, 5)
    assert g14["quadric-model(5,5) beta=6"].dim == 68
    assert g14["quadric-model(4,6) beta=6"].status.reason == "ResidualNotVeryAmple"
    assert g14["severi-plane(10)"].construction is Construction.SEVERI_PLANE_MODEL


def test_g13_competitors_below_lambda():
    g13 = by_label(16, 13, 5)
    lam = expected_dims(CurveTriple(16, 13, 5))[0]
    series = {label: c.linear_series_dim for label, c in g13.items() if label != "principal" and "delpezzo" not in label}
    assert series == {"gonal(k=4,l=2) beta=6": 35, "hurwitz(n=2,gamma=3) beta=6": 28, "severi-plane(8) beta=6": 34}
    assert all(v < lam == 37 for v in series.values())


def test_g12_competitors_below_lambda():
    g12 = by_label(16, 12, 5)
    assert g12["gonal(k=3,l=2) beta=7"].linear_series_dim == 37
    assert g12["gonal(k=6,l=1) beta=6"].linear_series_dim == 37
    assert expected_dims(CurveTriple(16, 12, 5))[0] == 39


def test_above_castelnuovo_has_no_candidates():
    assert candidates_for(16, 22, 5) == []


def test_candidates_sorted_and_cited():
    for g in (14, 18, 21):
        cands = candidates_for(16, g, 5)
        assert [c.label for c in cands] == sorted(c.label for c in cands)
        assert all(c.citations for c in cands)
