import pytest
from hypothesis import given

from arcbrick.arcs import (
    GENTLE,
    PREPROJECTIVE,
    Arc,
    ArcError,
    Letter,
    all_orientations,
    almost_rigid_pair_arcs,
    crossing_report,
    directed_pairs,
    enumerate_arcs,
    euler_form_arcs,
    ext_dim_arcs,
    hom_arcs,
    is_clockwise,
    is_eps_admissible,
    is_quotient_arc,
    is_restriction,
    is_submodule_arc,
    is_tau_rigid_arc,
    is_weak_pair_arcs,
    make_arc,
    parse_arc,
    resolve_crossing,
)

from conftest import A, arc_pairs_st, arcs_st, brute_arcs


# -- construction -------------------------------------------------------------


def test_letter_order():
    assert Letter.U < Letter.E < Letter.O


def test_make_arc_examples():
    g = make_arc(0, "", 1)
    assert (g.left, g.right) == (0, 1)
    g = make_arc(0, "uoou", 6)
    assert g.right == 5
    assert [g.letter(k) for k in range(1, 5)] == [Letter.U, Letter.O, Letter.O, Letter.U]
    assert g.letter(5) == Letter.E
    with pytest.raises(ArcError):
        make_arc(2, "o", 3)


@pytest.mark.parametrize("bad", [(0, "e", 3), (-1, "", 3), (0, "x", 3), (3, "", 3)])
def test_make_arc_rejects(bad):
    with pytest.raises(ArcError):
        make_arc(*bad)


def test_parse_arc():
    assert parse_arc("0:uoou", 6) == A(0, "uoou", 6)
    assert parse_arc("1:", 4) == A(1, "", 4)
    with pytest.raises(ArcError):
        parse_arc("1-uo", 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_arcs_against_brute_force(n):
    got = enumerate_arcs(n)
    assert sorted((g.left, g.pattern) for g in got) == sorted(brute_arcs(n))
    assert len(set(got)) == len(got) == 2 ** (n + 1) - n - 2
    assert got == sorted(got, key=Arc.sort_key)


def test_enumerate_small_counts():
    assert [len(enumerate_arcs(n)) for n in (1, 2, 4)] == [1, 4, 26]


# -- restriction, quotient and submodule arcs ---------------------------------


def test_restriction_examples():
    assert is_restriction(A(2, "", 4), A(0, "ouu", 4))
    assert not is_restriction(A(0, "o", 4), A(1, "", 4))
    assert is_quotient_arc(A(1, "", 4), A(0, "ouu", 4))
    assert not is_quotient_arc(A(2, "", 4), A(0, "ouu", 4))
    assert not is_submodule_arc(A(2, "", 4), A(0, "ouu", 4))


@given(arcs_st())
def test_self_is_restriction_quotient_submodule(g):
    assert is_restriction(g, g) and is_quotient_arc(g, g) and is_submodule_arc(g, g)


@pytest.mark.parametrize("n", range(1, 6))
def test_quotient_and_submodule_never_both(n):
    arcs = enumerate_arcs(n)
    for outer in arcs:
        for inner in arcs:
            if inner != outer and is_restriction(inner, outer):
                assert not (is_quotient_arc(inner, outer) and is_submodule_arc(inner, outer))


# -- Hom ------------------------------------------------------------------------


def test_hom_arcs_examples():
    assert hom_arcs(A(0, "ouu", 4), A(1, "", 4)) == [A(1, "", 4)]
    assert hom_arcs(A(0, "ouu", 4), A(2, "", 4)) == []
    assert len(hom_arcs(A(1, "uoou", 6), A(0, "uoou", 6))) == 2


@given(arcs_st())
def test_hom_self(g):
    assert hom_arcs(g, g) == [g]


@pytest.mark.parametrize("n", range(1, 6))
def test_hom_arcs_match_quotient_submodule_oracle(n):
    # basis = arcs that are quotient arcs of src and submodule arcs of dst
    arcs = enumerate_arcs(n)
    for src in arcs:
        for dst in arcs:
            brute = sorted((h for h in arcs if is_quotient_arc(h, src) and is_submodule_arc(h, dst)), key=Arc.sort_key)
            assert sorted(hom_arcs(src, dst), key=Arc.sort_key) == brute


@given(arc_pairs_st())
def test_directed_count_duality(pair):
    g1, g2 = pair
    assert abs(len(hom_arcs(g1, g2)) - len(hom_arcs(g2, g1))) <= 1


# -- crossing reports -------------------------------------------------------


def test_crossing_report_examples():
    r = crossing_report(A(0, "uoou", 6), A(5, "", 6))
    assert (r.contested, r.shared, r.nontrivial, r.hom_1to2, r.hom_2to1) == (1, 0, 0, 0, 0)
    r = crossing_report(A(5, "", 6), A(1, "uoou", 6))
    assert r.shared_right and not r.shared_left
    assert (r.shared_directed_1to2, r.shared_directed_2to1, r.nontrivial) == (1, 0, 0)
    r = crossing_report(A(0, "uoou", 6), A(1, "uoou", 6))
    assert (r.nontrivial_1to2, r.nontrivial_2to1, r.shared, r.contested) == (1, 2, 0, 0)


@given(arc_pairs_st())
def test_crossing_report_invariants(pair):
    g1, g2 = pair
    r = crossing_report(g1, g2)
    assert r.contested in (0, 1)
    if r.contested:
        assert r.nontrivial == 0 and r.shared == 0
    assert r.shared_directed_1to2 + r.shared_directed_2to1 == r.shared
    assert r.hom_1to2 == len(hom_arcs(g1, g2))


def test_euler_form_arcs_examples():
    g = A(0, "uoou", 6)
    assert euler_form_arcs(g, g) == 2
    assert euler_form_arcs(g, A(5, "", 6)) == -1
    assert euler_form_arcs(g, A(1, "uoou", 6)) == 0


# -- Ext formulas -------------------------------------------------------------


def test_ext_dim_examples():
    x, y = A(0, "uuoo", 5), A(1, "uou", 5)
    assert ext_dim_arcs(x, y, GENTLE) == 1 and ext_dim_arcs(x, y, PREPROJECTIVE) == 1
    assert ext_dim_arcs(y, x, GENTLE) == 0 and ext_dim_arcs(y, x, PREPROJECTIVE) == 1
    for mode in (GENTLE, PREPROJECTIVE):
        assert ext_dim_arcs(x, x, mode) == 0
    with pytest.raises(ArcError):
        ext_dim_arcs(x, y, "other")


@given(arc_pairs_st())
def test_ext_formula_invariants(pair):
    x, y = pair
    pp_xy, pp_yx = ext_dim_arcs(x, y), ext_dim_arcs(y, x)
    g_xy, g_yx = ext_dim_arcs(x, y, GENTLE), ext_dim_arcs(y, x, GENTLE)
    assert pp_xy == pp_yx
    assert g_xy <= pp_xy
    r = crossing_report(x, y)
    assert (g_xy == pp_xy) == (r.nontrivial_1to2 == 0 or r.contested == 1)
    assert abs(g_xy - g_yx) <= 1


# -- pair predicates -------------------------------------------------------------


def test_is_clockwise_true_instances():
    assert is_clockwise(A(0, "", 2), A(0, "o", 2))
    assert is_clockwise(A(0, "u", 2), A(0, "", 2))


def test_is_clockwise_false_instances():
    assert not is_clockwise(A(0, "o", 2), A(0, "", 2))
    assert not is_clockwise(A(0, "", 2), A(0, "u", 2))


@pytest.mark.parametrize("pair", [(A(0, "o", 2), A(0, "u", 2)), (A(0, "", 2), A(1, "", 2)),
                                  (A(0, "", 3), A(2, "", 3)), (A(0, "u", 2), A(0, "u", 2))])
def test_is_clockwise_precondition(pair):
    with pytest.raises(ArcError):
        is_clockwise(*pair)


@given(arc_pairs_st(min_n=2))
def test_clockwise_is_antisymmetric(pair):
    g1, g2 = pair
    try:
        forward = is_clockwise(g1, g2)
    except ArcError:
        return
    assert forward != is_clockwise(g2, g1)


def test_weak_pair_examples():
    assert is_weak_pair_arcs(A(0, "o", 2), A(1, "", 2))
    assert not is_weak_pair_arcs(A(0, "", 2), A(1, "", 2))
    assert not is_weak_pair_arcs(A(1, "", 2), A(0, "o", 2))
    assert hom_arcs(A(0, "o", 2), A(1, "", 2))


@given(arcs_st())
def test_weak_pair_irreflexive(g):
    assert not is_weak_pair_arcs(g, g)


def test_almost_rigid_pair_examples():
    assert almost_rigid_pair_arcs(A(0, "", 2), A(1, "", 2))
    assert not almost_rigid_pair_arcs(A(0, "uoou", 6), A(1, "uoou", 6))
    assert almost_rigid_pair_arcs(A(0, "o", 2), A(0, "", 2))
    with pytest.raises(ArcError):
        almost_rigid_pair_arcs(A(0, "", 2), A(0, "", 2))


def test_tau_rigid_arc():
    assert is_tau_rigid_arc(A(0, "uoo", 4))
    assert not is_tau_rigid_arc(A(0, "ou", 3))
    assert all(is_tau_rigid_arc(A(i, "", 5)) for i in range(5))


# -- resolving crossings ------------------------------------------------------


def test_resolve_crossing_example():
    x, y = A(0, "uuoo", 5), A(1, "uou", 5)
    assert resolve_crossing(x, y, (1, 4)) == (A(1, "uoo", 5), A(0, "uuou", 5))
    with pytest.raises(ArcError):
        resolve_crossing(x, x, (1, 4))
    with pytest.raises(ArcError):
        resolve_crossing(x, y, (4, 5))


@pytest.mark.parametrize("n", range(2, 6))
def test_resolve_crossing_halves_and_dimensions(n):
    arcs = enumerate_arcs(n)
    for x in arcs:
        for y in arcs:
            if x == y:
                continue
            for i, j in directed_pairs(y, x):
                if (i == x.left == y.left) or (j == x.right == y.right):
                    continue
                gq, gq2 = resolve_crossing(x, y, (i, j))
                assert (gq.left, gq.right) == (y.left, x.right)
                assert (gq2.left, gq2.right) == (x.left, y.right)
                # each output agrees with y on its y-half and with x on its x-half
                assert all(gq.letter(k) == y.letter(k) for k in range(gq.left + 1, j))
                assert all(gq.letter(k) == x.letter(k) for k in range(i + 1, gq.right))
                assert all(gq2.letter(k) == x.letter(k) for k in range(gq2.left + 1, j))
                assert all(gq2.letter(k) == y.letter(k) for k in range(i + 1, gq2.right))
                total = [0] * (n + 1)
                for g in (gq, gq2):
                    for v in g.vertices:
                        total[v] += 1
                for g in (x, y):
                    for v in g.vertices:
                        total[v] -= 1
                assert not any(total)


# -- orientations ---------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 6))
def test_constant_orientation_one_arc_per_endpoint_pair(n):
    eps = "u" * (n - 1)
    adm = [g for g in enumerate_arcs(n) if is_eps_admissible(g, eps)]
    assert len(adm) == n * (n + 1) // 2
    assert len({(g.left, g.right) for g in adm}) == len(adm)


def test_all_orientations():
    assert all_orientations(3) == ["uu", "uo", "ou", "oo"]
    assert all_orientations(1) == [""]
