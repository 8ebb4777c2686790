import itertools

import pytest

from arcbrick.arcs import all_orientations, enumerate_arcs, is_weak_pair_arcs
from arcbrick.classify import (
    ClassifyError,
    almost_rigid_modules,
    count_complete_exceptional,
    is_exceptional_sequence_hereditary,
    is_weak_pair_modules,
    is_weak_sequence,
    maximal_almost_rigid,
    semibricks,
    sweep_verify,
    verify_hereditary,
    weak_pair_matrix,
)
from arcbrick.diagrams import enumerate_noncrossing, is_clockwise_ordered, is_strand_diagram
from arcbrick.reps import PRINTED, RepError, algebra, all_subsets, brick_from_arc, gentle_algebra, make_rep

from conftest import A


def B(left, pattern, n):
    return brick_from_arc(A(left, pattern, n))


WEAK2 = [A(3, "", 4), A(2, "u", 4), A(1, "uu", 4), A(0, "uuu", 4)]
WEAK3 = [A(0, "ouu", 5), A(0, "oouo", 5), A(0, "oo", 5)]


def test_weak_pair_module_examples():
    for S in all_subsets(2):
        alg = algebra(2, S)
        assert is_weak_pair_modules(B(0, "", 2), B(0, "o", 2), alg)
        assert not is_weak_pair_modules(B(0, "o", 2), B(0, "", 2), alg)
        assert not is_weak_pair_modules(B(0, "", 2), B(1, "", 2), alg)
        assert not is_weak_pair_modules(B(0, "u", 2), B(0, "u", 2), alg)


def test_weak_pair_needs_bricks():
    M = make_rep(2, [2, 0])
    with pytest.raises(ClassifyError):
        is_weak_pair_modules(M, B(0, "", 2), algebra(2))
    bad = make_rep(2, [1, 1], {"a1": [[1]], "a1*": [[1]]})
    with pytest.raises(RepError):
        is_weak_pair_modules(bad, B(0, "", 2), algebra(2))


@pytest.mark.parametrize("n", range(1, 5))
def test_weak_pairs_modules_vs_arcs_all_S(n):
    arcs = enumerate_arcs(n)
    arc_side = [[is_weak_pair_arcs(x, y) for y in arcs] for x in arcs]
    for S in all_subsets(n):
        W = weak_pair_matrix(arcs, algebra(n, S))
        assert W.tolist() == arc_side


def test_worked_weak_sequences():
    for S in all_subsets(4):
        assert is_weak_sequence([brick_from_arc(g) for g in WEAK2], algebra(4, S))
    for S in [(), (2,), (2, 3, 4)]:
        assert is_weak_sequence([brick_from_arc(g) for g in WEAK3], algebra(5, S))
    assert is_clockwise_ordered(WEAK2) and is_clockwise_ordered(WEAK3)


def test_weak2_admits_no_extension():
    for g in enumerate_arcs(4):
        if g in WEAK2:
            continue
        for pos in range(len(WEAK2) + 1):
            assert not is_clockwise_ordered(WEAK2[:pos] + [g] + WEAK2[pos:])
    W = weak_pair_matrix(enumerate_arcs(4), algebra(4))
    idx = {g: i for i, g in enumerate(enumerate_arcs(4))}
    for g in enumerate_arcs(4):
        if g in WEAK2:
            continue
        for pos in range(len(WEAK2) + 1):
            seq = [idx[h] for h in WEAK2[:pos] + [g] + WEAK2[pos:]]
            assert not all(W[seq[p], seq[q]] for p in range(5) for q in range(p + 1, 5))


@pytest.mark.parametrize("n", [2, 3])
def test_weak_sequences_match_clockwise_diagrams(n):
    arcs = enumerate_arcs(n)
    for S in all_subsets(n):
        alg = algebra(n, S)
        for k in range(1, 4):
            for seq in itertools.permutations(arcs, k):
                mods = [brick_from_arc(g) for g in seq]
                assert is_weak_sequence(mods, alg) == is_clockwise_ordered(seq)


def test_single_and_empty_sequences():
    alg = algebra(3)
    assert is_weak_sequence([], alg)
    assert is_weak_sequence([B(0, "uo", 3)], alg)
    assert is_exceptional_sequence_hereditary([], "uu")
    assert is_exceptional_sequence_hereditary([B(0, "uu", 3)], "uu")


def test_hereditary_discrepancy_pair():
    later, earlier = A(5, "", 6), A(0, "uoou", 6)
    eps = "uoouo"
    seq = [brick_from_arc(later), brick_from_arc(earlier)]
    assert is_exceptional_sequence_hereditary(seq, eps)
    assert is_strand_diagram([later, earlier], eps)
    for S in [(), (2,), (5,), (2, 3, 4, 5)]:
        assert not is_weak_sequence(seq, algebra(6, S))


def test_hereditary_rejects_foreign_modules():
    with pytest.raises(RepError):
        is_exceptional_sequence_hereditary([B(0, "o", 2)], "u")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hereditary_sweep(n):
    for eps in all_orientations(n):
        stat = verify_hereditary(n, eps)
        assert stat.failed == 0 and stat.passed > 0


def test_hereditary_sweep_catches_printed_kill_rule():
    assert verify_hereditary(2, "u", kill_rule=PRINTED).failed > 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_complete_exceptional_count_independent_of_orientation(n):
    counts = {count_complete_exceptional(n, eps) for eps in all_orientations(n)}
    assert counts == {(n + 1) ** (n - 1)}


@pytest.mark.parametrize("n,count", [(1, 2), (2, 6), (3, 24)])
def test_semibrick_counts(n, count):
    got = semibricks(algebra(n))
    assert len(got) == count
    assert sorted(got) == sorted(enumerate_noncrossing(n))


def test_semibrick_singletons():
    singles = [s for s in semibricks(algebra(3)) if len(s) == 1]
    assert [s[0] for s in singles] == enumerate_arcs(3)


def test_maximal_almost_rigid_n2():
    got = maximal_almost_rigid(gentle_algebra(2))
    assert got == [tuple(enumerate_arcs(2))]


def test_maximal_almost_rigid_wrong_mode():
    with pytest.raises(ClassifyError):
        maximal_almost_rigid(algebra(3))


@pytest.mark.parametrize("n", [2, 3])
def test_maximal_almost_rigid_module_side(n):
    alg = gentle_algebra(n)
    cols = maximal_almost_rigid(alg)
    assert all(almost_rigid_modules(c, alg) for c in cols)
    covered = {g for c in cols for g in c}
    assert covered == set(enumerate_arcs(n))


def test_sweep_clean_n3():
    report = sweep_verify(3)
    assert report.ok and report.mismatches == 0
    assert report.to_json()["checks"]["hom"]["failed"] == 0


def test_sweep_mutation_is_caught():
    report = sweep_verify(3, convention=PRINTED)
    assert not report.ok
    assert report.checks["quotients"].failed > 0
    assert report.checks["quotients"].first_counterexample is not None


def test_sweep_single_algebra():
    report = sweep_verify(4, [algebra(4, {3})])
    assert report.ok and report.algebras == ["S={3}"]


def test_conjecture_report_matches_direct_recount():
    from arcbrick.arcs import GENTLE, ext_dim_arcs
    from arcbrick.classify import conjecture_report
    from arcbrick.reps import ext1

    rows = conjecture_report(4)
    assert [r["S"] for r in rows] == [[2], [3]]
    arcs = enumerate_arcs(4)
    for r in rows:
        alg = algebra(4, r["S"])
        holds = sum(ext1(brick_from_arc(x), brick_from_arc(y), alg).dim == ext_dim_arcs(x, y, GENTLE)
                    for x in arcs for y in arcs)
        assert r["pairs"] == 676 and r["gentle_formula_holds"] == holds
        assert 0 <= r["witnesses_form_basis"] <= r["pairs"]
    assert conjecture_report(3) == []
