import pytest

from quiverhom import (
    IncompleteUniverseError,
    SubcategorySet,
    enumerate_indecomposables,
    ext_dim,
    identity_morphism,
    is_approximation,
    is_isomorphic,
    is_maximal_orthogonal,
    is_minimal,
    minimal_approximation,
    perp,
    standard_module,
    trivial_candidate,
    uniserial_module,
)
from quiverhom.rep import cover_envelope, morphism_parts


def interval(algebra, lo, hi):
    paths = sorted(algebra.basis_from(hi), key=lambda q: q.length)
    for length, path in enumerate(paths):
        if path.target == lo:
            return uniserial_module(algebra, hi, length + 1)
    raise AssertionError


def test_trivial_candidate_a2(a2):
    cand = trivial_candidate(a2)
    assert len(cand) == 3
    dims = sorted(m.dims for m in cand.objects)
    assert dims == [(0, 1), (1, 0), (1, 1)]


def test_trivial_candidate_lin4(lin4):
    cand = trivial_candidate(lin4)
    assert len(cand) == 6
    expected = [(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1), (1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0)]
    assert sorted(m.dims for m in cand.objects) == expected


def test_trivial_candidate_selfinjective(cyc2):
    cand = trivial_candidate(cyc2)
    assert len(cand) == 2
    for m in cand.objects:
        assert m.dims == (1, 1)


def test_subcategory_validation_rejects_duplicates(lin4):
    p3 = standard_module(lin4, "projective", 3)
    i1 = standard_module(lin4, "injective", 1)
    with pytest.raises(ValueError, match="pairwise"):
        SubcategorySet(lin4, [p3, i1], validate=True)


def test_subcategory_validation_rejects_decomposable(lin4):
    from quiverhom import direct_sum

    s1 = standard_module(lin4, "simple", 1)
    with pytest.raises(ValueError, match="indecomposable"):
        SubcategorySet(lin4, [direct_sum([s1, s1])], validate=True)


# -- approximation predicates --------------------------------------------------


def test_identity_is_both_side_approximation(lin4):
    cand = trivial_candidate(lin4)
    ident = identity_morphism(standard_module(lin4, "projective", 2))
    assert is_approximation(ident, cand, "left")
    assert is_approximation(ident, cand, "right")


def test_cover_is_right_approximation(lin4):
    cand = trivial_candidate(lin4)
    s2 = standard_module(lin4, "simple", 2)
    cover = cover_envelope(s2, "projective_cover")
    assert is_approximation(cover, cand, "right")


def test_envelope_is_left_approximation(lin4):
    cand = trivial_candidate(lin4)
    s2 = standard_module(lin4, "simple", 2)
    env = cover_envelope(s2, "injective_envelope")
    assert is_approximation(env, cand, "left")


def test_approximation_requires_membership(lin4):
    cand = SubcategorySet(lin4, [standard_module(lin4, "projective", 4)], validate=False)
    s2 = standard_module(lin4, "simple", 2)
    cover = cover_envelope(s2, "projective_cover")  # source P2 not in add(P4)
    with pytest.raises(ValueError, match="add C"):
        is_approximation(cover, cand, "right")


# -- minimal approximations ------------------------------------------------------


def test_minimal_approximation_of_member_is_iso(lin4):
    cand = trivial_candidate(lin4)
    p3 = standard_module(lin4, "projective", 3)
    f = minimal_approximation(cand, p3, "right")
    assert f.source.dims == p3.dims
    assert morphism_parts(f).kernel.dim == 0


def test_minimal_right_approximation_of_simple(lin4):
    cand = trivial_candidate(lin4)
    s2 = standard_module(lin4, "simple", 2)
    f = minimal_approximation(cand, s2, "right")
    assert f.source.dims == (1, 1, 0, 0)
    parts = morphism_parts(f)
    assert parts.image.dim == s2.dim  # epi
    assert parts.kernel.dims == (1, 0, 0, 0)  # projective kernel
    assert is_approximation(f, cand, "right")
    assert is_minimal(f, "right")


def test_minimal_left_approximation_of_simple(lin4):
    cand = trivial_candidate(lin4)
    s2 = standard_module(lin4, "simple", 2)
    f = minimal_approximation(cand, s2, "left")
    assert f.target.dims == (0, 1, 1, 1)
    parts = morphism_parts(f)
    assert parts.kernel.dim == 0  # mono
    assert parts.cokernel.dims == (0, 0, 1, 1)
    assert is_isomorphic(parts.cokernel, standard_module(lin4, "injective", 3))
    assert is_approximation(f, cand, "left")
    assert is_minimal(f, "left")


def test_zero_module_has_zero_approximation(lin4):
    from quiverhom import zero_representation

    cand = trivial_candidate(lin4)
    f = minimal_approximation(cand, zero_representation(lin4), "right")
    assert f.source.dim == 0 and f.target.dim == 0


# -- perp and maximality -----------------------------------------------------------


def test_perp_of_empty_is_universe(lin4):
    universe = enumerate_indecomposables(lin4)
    empty = SubcategorySet(lin4, [], validate=False)
    assert len(perp(empty, 1, "left", universe)) == len(universe)
    assert len(perp(empty, 1, "right", universe)) == len(universe)


def test_perp_of_trivial_is_trivial_lin4(lin4):
    universe = enumerate_indecomposables(lin4)
    cand = trivial_candidate(lin4)
    for side in ("left", "right"):
        p = perp(cand, 1, side, universe)
        assert len(p) == 6
        for m in p.objects:
            assert cand.contains_iso(m)


def test_perp_excludes_extension_source_a2(a2):
    universe = enumerate_indecomposables(a2)
    cand = trivial_candidate(a2)
    p = perp(cand, 1, "left", universe)
    s2 = standard_module(a2, "simple", 2)
    assert not any(is_isomorphic(m, s2) for m in p.objects)


def test_perp_monotone(lin4):
    universe = enumerate_indecomposables(lin4)
    small = SubcategorySet(lin4, [standard_module(lin4, "projective", 1)], validate=False)
    big = trivial_candidate(lin4)
    small_perp = perp(small, 1, "left", universe)
    big_perp = perp(big, 1, "left", universe)
    assert len(big_perp) <= len(small_perp)
    for m in big_perp.objects:
        assert any(is_isomorphic(m, x) for x in small_perp.objects)


def test_maximality_verdicts(lin4, a2, cyc2):
    assert is_maximal_orthogonal(trivial_candidate(lin4), 1, enumerate_indecomposables(lin4))[0]

    ok, witness = is_maximal_orthogonal(trivial_candidate(a2), 1, enumerate_indecomposables(a2))
    assert not ok
    assert witness["kind"] == "not_orthogonal"
    assert witness["degree"] == 1 and witness["ext_dim"] == 1
    assert witness["module"] == "M2:2" and witness["against"] == "M1:1"

    ok, witness = is_maximal_orthogonal(trivial_candidate(cyc2), 1, enumerate_indecomposables(cyc2))
    assert not ok
    assert witness["kind"] == "perp_exceeds"
    assert witness["direction"] == "right"  # membership in C-perp


def test_maximality_needs_complete_universe(lin4):
    from quiverhom import Universe

    incomplete = Universe(lin4, [], [], complete=False)
    with pytest.raises(IncompleteUniverseError):
        is_maximal_orthogonal(trivial_candidate(lin4), 1, incomplete)


def test_trivial_candidate_inside_maximal_candidate(lin4):
    """Projectives and injectives belong to any self-orthogonal maximal set."""
    universe = enumerate_indecomposables(lin4)
    cand = trivial_candidate(lin4)
    left = perp(cand, 1, "left", universe)
    for m in cand.objects:
        assert any(is_isomorphic(m, x) for x in left.objects)


def test_wakamatsu_vanishing(lin4):
    cand = trivial_candidate(lin4)
    for lo, hi in [(2, 2), (3, 3), (2, 3), (4, 4)]:
        m = interval(lin4, lo, hi)
        left = minimal_approximation(cand, m, "left")
        coker = morphism_parts(left).cokernel
        for c in cand.objects:
            assert ext_dim(coker, c, 1) == 0
        right = minimal_approximation(cand, m, "right")
        kernel = morphism_parts(right).kernel
        for c in cand.objects:
            assert ext_dim(c, kernel, 1) == 0
