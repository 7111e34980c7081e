from __future__ import annotations

import pytest

from curvecensus.enumeration import (
    CREMONA_ORBIT,
    MISSES_POINT,
    NODAL_MODEL,
    PASSES_THROUGH_VERTEX,
    SINGULAR_AT_VERTEX,
    VERY_AMPLE_CERTIFIED,
    ClassSolution,
    InvariantViolation,
    brute_force_delpezzo5,
    cremona,
    cremona_groups,
    cremona_orbit,
    enumerate_all,
    enumerate_kind,
    gonality_upper_from_pencils,
    nodal_blowup_class,
    oracle_check,
    plane_model_pencils,
    residual_series,
    solve_delpezzo5,
    solve_elliptic_cone,
    solve_quadric,
    solve_rational_cone,
    solve_scroll,
    solve_severi_plane,
    solve_veronese,
    solution_dim,
)
from curvecensus.surfaces import DivisorClass, SurfaceModel, adjunction_genus, degree, linear_system_dim


def coeffs(sols):
    return [s.coeffs for s in sols]


@pytest.mark.parametrize(
    "g, expected",
    [(21, [(4, 0)]), (20, [(5, -4)]), (19, []), (18, [(3, 4)]), (17, []), (15, [(6, -8)]), (11, [(2, 8)])],
)
def test_scroll_solutions(g, expected):
    assert coeffs(solve_scroll(16, g, 4)) == expected


@pytest.mark.parametrize("g", range(0, 23))
def test_scroll_brute_force_agrees(g):
    assert oracle_check("scroll", 16, g, 5) == []


def test_rational_cone():
    sols = solve_rational_cone(16, 21, 4)
    assert coeffs(sols) == [(4, 16)]
    assert not sols[0].has(SINGULAR_AT_VERTEX)
    assert solve_rational_cone(16, 18, 4, smooth_only=True) == []
    singular = solve_rational_cone(16, 18, 4)
    assert coeffs(singular) == [(3, 16)]
    assert singular[0].has(SINGULAR_AT_VERTEX)
    assert singular[0].flag(PASSES_THROUGH_VERTEX).value == 4
    for g in (20, 19, 17):
        assert solve_rational_cone(16, g, 4) == []


def test_veronese():
    sols = solve_veronese(16, 21)
    assert coeffs(sols) == [(8,)]
    assert sols[0].degree == 16
    for g in (20, 19, 18, 17):
        assert solve_veronese(16, g) == []


def test_elliptic_cone():
    sols = solve_elliptic_cone(16, 18, 5)
    assert coeffs(sols) == [(3, 16)]
    assert sols[0].flag(PASSES_THROUGH_VERTEX).value == 1
    assert solution_dim(sols[0]) == 33
    g12 = solve_elliptic_cone(16, 12, 5)
    assert coeffs(g12) == [(2, 16)]
    assert g12[0].has(SINGULAR_AT_VERTEX)
    assert solve_elliptic_cone(16, 12, 5, smooth_only=True) == []


def test_delpezzo_g17_all_classes():
    sols = solve_delpezzo5(16, 17)
    assert set(coeffs(sols)) == {
        (8, 2, 2, 2, 2), (10, 4, 4, 4, 2), (9, 4, 3, 2, 2), (10, 5, 3, 3, 3), (11, 5, 4, 4, 4),
    }
    groups = cremona_groups(sols)
    assert [coeffs(grp) for grp in groups] == [
        [(8, 2, 2, 2, 2), (10, 4, 4, 4, 2)],
        [(9, 4, 3, 2, 2), (10, 5, 3, 3, 3), (11, 5, 4, 4, 4)],
    ]
    for sol in sols:
        assert 8 <= sol.coeffs[0] <= 11
        assert sol.has(CREMONA_ORBIT)


def test_delpezzo_g18_and_certification():
    sols = solve_delpezzo5(16, 18)
    assert coeffs(sols) == [(9, 3, 3, 3, 2), (10, 4, 4, 3, 3)]
    assert sols[0].has(VERY_AMPLE_CERTIFIED)
    assert solution_dim(sols[0]) == 33
    assert plane_model_pencils(sols[0]) == [6, 6, 6, 7]
    assert gonality_upper_from_pencils(sols[0]) == 6
    assert cremona((9, 3, 3, 3, 2), (0, 1, 3)) == (10, 4, 4, 3, 3)
    assert len(cremona_groups(sols)) == 1


def test_delpezzo_g16_single_orbit():
    sols = solve_delpezzo5(16, 16)
    assert len(sols) == 4
    assert {s.flag(CREMONA_ORBIT).value for s in sols} == {"(8;3,2,2,1)"}


def test_delpezzo_matches_brute_force_grid():
    for d in range(0, 21):
        for g in range(0, 26):
            assert set(coeffs(solve_delpezzo5(d, g))) == brute_force_delpezzo5(d, g), (d, g)


def test_cremona_is_an_involution_preserving_degree_and_genus():
    dp = SurfaceModel.del_pezzo5()
    for c in [(9, 3, 3, 3, 2), (8, 2, 2, 2, 2), (11, 5, 4, 4, 4), (7, 3, 2, 0, 0)]:
        for member in cremona_orbit(c):
            D, E = DivisorClass(dp, c), DivisorClass(dp, member)
            assert degree(D) == degree(E)
            assert adjunction_genus(D) == adjunction_genus(E)
        t = cremona(c)
        assert cremona(t, _triple_back(c, t)) == (c[0], *sorted(c[1:], reverse=True))


def _triple_back(original, image):
    # the transformed points are the three largest-shifted entries; search all triples
    from itertools import combinations

    for triple in combinations(range(4), 3):
        if cremona(image, triple) == (original[0], *sorted(original[1:], reverse=True)):
            return triple
    raise AssertionError("no inverse triple")


def test_nodal_blowup_pencils():
    D = nodal_blowup_class(10, 22)
    assert D.coeffs == (10, *[2] * 22)
    assert adjunction_genus(D) == 14
    assert plane_model_pencils(D) == [8] * 22
    assert plane_model_pencils(DivisorClass(SurfaceModel.del_pezzo5(), (8, 2, 2, 2, 2))) == [6, 6, 6, 6]
    with pytest.raises(ValueError):
        plane_model_pencils(DivisorClass(SurfaceModel.scroll(4), (1, 0)))


def test_plane_model_marks_points_missed():
    sols = solve_delpezzo5(16, 11)
    assert any(s.has(MISSES_POINT) for s in sols)


def test_quadric_models():
    sols = solve_quadric(10, 14)
    assert [(s.coeffs, s.flag(NODAL_MODEL).value) for s in sols] == [((4, 6), 1), ((5, 5), 2)]
    big = {s.coeffs: s.delta for s in solve_quadric(12, 16)}
    assert big[(6, 6)] == 9
    with pytest.raises(ValueError):
        solve_quadric(1, 0)


def test_severi_plane():
    s = solve_severi_plane(10, 14)
    assert s.delta == 22 and s.severi_dim == 43
    s = solve_severi_plane(8, 13)
    assert s.delta == 8 and s.severi_dim == 36
    s = solve_severi_plane(10, 36)
    assert s.delta == 0 and s.severi_dim == 65
    assert solve_severi_plane(10, 37) is None


def test_residual_series_gates_plane_and_quadric():
    assert residual_series(16, 14, 5) == [(5, 2), (6, 3)]
    assert residual_series(16, 19, 5) == [(5, 7)]
    assert enumerate_kind("quadric", 16, 19, 5) == []
    assert enumerate_kind("severi", 16, 19, 5) == []
    assert coeffs(enumerate_kind("severi", 16, 14, 5)) == [(10,)]


def test_g19_and_g17_surface_solvers_empty():
    for g in (19, 17):
        for kind in ("scroll", "cone", "veronese"):
            assert enumerate_kind(kind, 16, g, 5) == []
    assert enumerate_all(16, 19, 5) == []


def test_unknown_kind():
    with pytest.raises(ValueError):
        enumerate_kind("torus", 16, 18, 5)


def test_every_solution_round_trips():
    for g in range(0, 23):
        for kind, sol in enumerate_all(16, g, 5):
            target_degree = 16 if kind not in ("quadric", "severi") else 2 * g - 2 - 16
            assert degree(sol.divisor) == target_degree
            assert adjunction_genus(sol.divisor) - sol.delta == g
            assert sol.genus == g


def test_solution_rejects_wrong_genus():
    with pytest.raises(InvariantViolation):
        ClassSolution(DivisorClass(SurfaceModel.scroll(4), (4, 0)), 16, 20)


def test_to_dict_fields():
    sol = solve_scroll(16, 20, 4)[0]
    doc = sol.to_dict()
    assert doc["class"] == "(5,-4)"
    assert doc["linear_system_dim"] == linear_system_dim(sol.divisor)
    assert doc["degree"] == 16 and doc["genus"] == 20


def test_wide_box_check_passes(monkeypatch):
    monkeypatch.setenv("CENSUS_DEBUG_WIDE_BOX", "1")
    assert coeffs(solve_scroll(16, 15, 4)) == [(6, -8)]
    assert len(solve_delpezzo5(16, 17)) == 5
    assert coeffs(solve_rational_cone(16, 21, 4)) == [(4, 16)]
    assert coeffs(solve_elliptic_cone(16, 18, 5)) == [(3, 16)]


def test_oracle_check_clean_on_delpezzo():
    for g in (16, 17, 18):
        assert oracle_check("delpezzo5", 16, g, 5) == []
