"""Tests for the canonical form, its rank and the coadjoint action."""

import numpy as np
import pytest
from sympy import nextprime

from orbitkit.constants import MAX_PRIME
from orbitkit.enumeration import enumerate_orthogonal_subsets
from orbitkit.exceptions import DomainError, FieldTooSmall, NotIsotropic, NotReduced
from orbitkit.form import (
    PrimeField,
    b4_defect,
    bareiss_rank,
    canonical_form,
    check_isotropic,
    check_maximal_isotropic,
    coadjoint_act,
    default_prime,
    form_matrix,
    orbit_dimension,
    radical_split,
    rank_and_radical,
    rank_mod_p,
    rational_rank,
)
from orbitkit.models import Functional, OrthoSubset
from orbitkit.tables import F4_TABLE, table_roots
from orbitkit.weyl import involution_stats, mu


def ortho(rs, D, p=None, xi=None):
    p = p or default_prime(rs)
    return OrthoSubset(rs, tuple(D), tuple(xi) if xi else (1,) * len(D), p)


@pytest.mark.parametrize("label, p", [("A3", 5), ("B3", 7), ("F4", 13), ("E8", 31), ("G2", 7), ("A1", 2)])
def test_default_prime(get_system, label, p):
    assert default_prime(get_system(label)) == p


def test_prime_field():
    with pytest.raises(DomainError):
        PrimeField(4)
    with pytest.raises(DomainError):
        PrimeField(2**31 - 1)
    assert PrimeField(int(nextprime(MAX_PRIME - 1000))).p <= MAX_PRIME
    field = PrimeField(7)
    assert (3 * field.inverse(3)) % 7 == 1


def test_field_too_small(b3, get_table, roots):
    with pytest.raises(FieldTooSmall):
        PrimeField(5).require_coxeter(b3)
    D = OrthoSubset(b3, tuple(roots("B3", "e1")), (1,), 5)
    with pytest.raises(FieldTooSmall):
        form_matrix(get_table("B3"), canonical_form(D))


def test_canonical_form(g2, b3, roots):
    D = [g2.fundamentals[0], g2.by_fcoords((3, 2))]
    f = canonical_form(ortho(g2, D, p=7))
    assert set(f.support) == {r.index for r in D}
    assert all(f[r] == 1 for r in D)
    f = canonical_form(ortho(b3, roots("B3", "e1,e2+e3"), p=7, xi=(2, 3)))
    assert len(f.support) == 2
    assert canonical_form(ortho(b3, [], p=7)).is_zero()


def test_zero_functional(b3, get_table):
    B = form_matrix(get_table("B3"), Functional((0,) * b3.size, 7))
    assert B.is_skew()
    rank, radical = rank_and_radical(B)
    assert rank == 0
    assert len(radical) == 9


def test_form_matrix_is_skew(f4, get_table, roots):
    D = ortho(f4, roots("F4", "e1+e3,(e1-e2-e3+e4)/2"), xi=(3, 5))
    assert form_matrix(get_table("F4"), canonical_form(D)).is_skew()


@pytest.mark.parametrize(
    "fcoords, dim",
    [
        (((1, 0), (3, 2)), 4),
        (((1, 1), (3, 1)), 2),
        (((0, 1), (2, 1)), 2),
    ],
)
def test_g2_dimensions(g2, get_table, fcoords, dim):
    D = ortho(g2, [g2.by_fcoords(c) for c in fcoords])
    assert orbit_dimension(D, get_table("G2")) == dim
    assert involution_stats(g2, D.roots).bound == 4


def test_b3_counterexample(b3, get_table, roots):
    D = ortho(b3, roots("B3", "e1,e2+e3"), p=7)
    B = form_matrix(get_table("B3"), canonical_form(D))
    rank, radical = rank_and_radical(B)
    assert rank == 4
    assert len(radical) == 5
    for vec in radical:
        assert not ((B.entries @ np.array(vec)) % 7).any()
    assert involution_stats(b3, D.roots).bound == 6


def test_single_fundamental_root(get_system, get_table):
    for label in ("A3", "B3", "G2"):
        rs = get_system(label)
        for root in rs.fundamentals:
            assert orbit_dimension(ortho(rs, [root]), get_table(label)) == 0


@pytest.mark.parametrize("n", range(3, 8))
def test_regular_a_series(get_system, get_table, roots, n):
    label = f"A{n - 1}"
    text = ",".join(f"e{i}-e{n - i + 1}" for i in range(1, n // 2 + 1))
    D = ortho(get_system(label), roots(label, text))
    assert orbit_dimension(D, get_table(label)) == 2 * mu(n)


@pytest.mark.parametrize(
    "n, text",
    [
        (4, "e1-e3,e2-e4"),
        (5, "e1-e4,e2-e5"),
        (6, "e1-e5,e2-e6,e3-e4"),
    ],
)
def test_subregular_a_series(get_system, get_table, roots, n, text):
    label = f"A{n - 1}"
    rs = get_system(label)
    D = ortho(rs, roots(label, text))
    dim = orbit_dimension(D, get_table(label))
    assert dim == 2 * mu(n) - 2
    assert dim == involution_stats(rs, D.roots).bound


def test_f4_row_one(f4, get_table, roots):
    D = ortho(f4, roots("F4", "e1+e3,(e1-e2-e3+e4)/2"), p=13)
    B = form_matrix(get_table("F4"), canonical_form(D))
    assert rank_and_radical(B)[0] == 14


def test_unreduced_input_warns(c2, get_table, roots):
    D = ortho(c2, roots("C2", "e1-e2,e1+e2"))
    with pytest.warns(NotReduced):
        dim = orbit_dimension(D, get_table("C2"))
    assert dim == orbit_dimension(ortho(c2, roots("C2", "e1+e2")), get_table("C2")) == 2


@pytest.mark.parametrize("label", ["G2", "B3", "C3"])
def test_rational_rank_matches(get_system, get_table, label):
    rs, tbl = get_system(label), get_table(label)
    for skeleton in enumerate_orthogonal_subsets(rs, 3, reduced_only=True):
        D = ortho(rs, skeleton)
        assert rational_rank(tbl, D) == orbit_dimension(D, tbl)


def rank_of(tbl, D):
    B = form_matrix(tbl, canonical_form(D))
    return rank_mod_p(B.entries, B.p)


# row 29 lists a non-orthogonal D
@pytest.mark.parametrize("row_no", [n for n in range(1, len(F4_TABLE) + 1) if n != 29])
def test_rational_rank_matches_f4_table(f4, get_table, row_no):
    tbl = get_table("F4")
    _, D, _ = table_roots("f4", F4_TABLE[row_no - 1])
    D = ortho(f4, D)
    assert rational_rank(tbl, D) == rank_of(tbl, D)


@pytest.mark.parametrize(
    "label, text",
    [
        ("A2", "e1-e3"),
        ("A3", "e1-e4,e2-e3"),
        ("A4", "e1-e5,e2-e4"),
        ("A5", "e1-e6,e2-e5,e3-e4"),
        ("A6", "e1-e7,e2-e6,e3-e5"),
        ("A3", "e1-e3,e2-e4"),
        ("A4", "e1-e4,e2-e5"),
        ("A5", "e1-e5,e2-e6,e3-e4"),
    ],
)
def test_rational_rank_matches_a_series(get_system, get_table, roots, label, text):
    tbl = get_table(label)
    D = ortho(get_system(label), roots(label, text))
    assert rational_rank(tbl, D) == rank_of(tbl, D)


@pytest.mark.parametrize(
    "label",
    [
        "A2",
        "A3",
        "B2",
        "B3",
        "C3",
        "G2",
        "D4",
        *(pytest.param(label, marks=pytest.mark.slow) for label in ("F4", "C4", "B5", "E6")),
    ],
)
def test_elementary_orbit_dimension(get_system, get_table, label):
    rs, tbl = get_system(label), get_table(label)
    for beta in rs.positives:
        assert orbit_dimension(ortho(rs, [beta]), tbl) == len(rs.singular_roots(beta))
        if rs.id.simply_laced:
            assert involution_stats(rs, [beta]).bound == len(rs.singular_roots(beta))


def test_elementary_bound_exceeds_dimension_for_g2_short_root(g2, get_table):
    beta = g2.by_fcoords((2, 1))
    assert len(g2.singular_roots(beta)) == 2
    assert orbit_dimension(ortho(g2, [beta]), get_table("G2")) == 2
    assert involution_stats(g2, [beta]).bound == 4


def test_bareiss_rank():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 3, 1], [2, 0, 0], [4, 3, 1]]) == 2
    assert bareiss_rank([[2, 1, 0], [1, 3, 1], [0, 1, 4]]) == 3


def test_rank_mod_p():
    m = np.array([[1, 2], [3, 6]])
    assert rank_mod_p(m, 7) == 1
    assert rank_mod_p(np.array([[1, 1], [1, 6]]), 5) == 1
    assert rank_mod_p(np.array([[1, 1], [1, 6]]), 7) == 2


def test_coadjoint_act_zero_y(b3, get_table, roots):
    f = canonical_form(ortho(b3, roots("B3", "e1,e2+e3")))
    assert coadjoint_act(get_table("B3"), [0] * b3.size, f) == f


def test_coadjoint_act_moves_into_singular_root(c2, get_table, roots):
    tbl = get_table("C2")
    f = canonical_form(ortho(c2, roots("C2", "e1+e2")))
    y = [0] * c2.size
    y[roots("C2", "2e2")[0].index] = 1
    moved = coadjoint_act(tbl, y, f)
    assert moved[roots("C2", "e1-e2")[0]] != 0
    assert moved[roots("C2", "e1+e2")[0]] == 1


@pytest.mark.parametrize(
    "label, text, draws",
    [("B3", "e1,e2+e3", 20), ("G2", "a1,3a1+2a2", 20), ("F4", "e1-e3,(e1+e2+e3-e4)/2", 5)],
)
def test_coadjoint_act_preserves_rank(get_system, get_table, roots, label, text, draws):
    rs, tbl = get_system(label), get_table(label)
    f = canonical_form(ortho(rs, roots(label, text)))
    base = rank_mod_p(form_matrix(tbl, f).entries, f.p)
    rng = np.random.default_rng(7)
    for _ in range(draws):
        y = [int(v) for v in rng.integers(0, f.p, size=rs.size)]
        moved = coadjoint_act(tbl, y, f)
        assert rank_mod_p(form_matrix(tbl, moved).entries, f.p) == base


def test_coadjoint_act_wrong_length(b3, get_table, roots):
    f = canonical_form(ortho(b3, roots("B3", "e1")))
    with pytest.raises(DomainError):
        coadjoint_act(get_table("B3"), [0, 1], f)


def test_g2_isotropic_subspaces(g2, get_table):
    tbl = get_table("G2")
    f = canonical_form(ortho(g2, [g2.fundamentals[0], g2.by_fcoords((3, 2))]))
    M = {g2.by_fcoords((0, 1)), g2.by_fcoords((1, 1))}
    P = [r for r in g2.positives if r not in M]
    assert check_isotropic(tbl, f, P)
    assert check_isotropic(tbl, f, [])
    assert check_isotropic(tbl, f, [g2.positives[2]])
    assert not check_isotropic(tbl, f, g2.positives)
    assert check_maximal_isotropic(tbl, f, P)

    f = canonical_form(ortho(g2, [g2.by_fcoords((1, 1)), g2.by_fcoords((3, 1))]))
    P = [r for r in g2.positives if r != g2.fundamentals[0]]
    assert check_maximal_isotropic(tbl, f, P)


def test_maximal_isotropic_rejects_non_isotropic(g2, get_table):
    f = canonical_form(ortho(g2, [g2.fundamentals[0], g2.by_fcoords((3, 2))]))
    with pytest.raises(NotIsotropic):
        check_maximal_isotropic(get_table("G2"), f, g2.positives)


@pytest.mark.parametrize(
    "label, text",
    [
        ("B3", "e1,e2+e3"),
        ("G2", "a1,3a1+2a2"),
        ("A4", "e1-e5,e2-e4"),
    ],
)
def test_radical_split_is_additive(get_system, get_table, roots, label, text):
    rs = get_system(label)
    split = radical_split(get_table(label), ortho(rs, roots(label, text)))
    assert split.additive


@pytest.mark.parametrize("label", ["A3", "A4", "D4", "A5", pytest.param("D5", marks=pytest.mark.slow)])
def test_radical_split_on_reduced_subsets(get_system, get_table, label):
    rs, tbl = get_system(label), get_table(label)
    checked = 0
    for skeleton in enumerate_orthogonal_subsets(rs, rs.rank, reduced_only=True):
        if len(skeleton) < 2:
            continue
        split = radical_split(tbl, ortho(rs, skeleton))
        assert split.additive, skeleton
        assert split.a_fixed + 1 <= split.dim_b, skeleton
        checked += 1
    assert checked > 0


def test_radical_split_b3(b3, get_table, roots):
    split = radical_split(get_table("B3"), ortho(b3, roots("B3", "e1,e2+e3")))
    assert split.beta.euclidean() == "e1"
    assert (split.dim_radical, split.dim_tilde, split.dim_b) == (5, 2, 3)
    assert split.a_size == 5


@pytest.mark.parametrize("text, flipped", [("e1", 8), ("e1+e2", 4)])
def test_b4_part_identity(f4, get_table, roots, text, flipped):
    total, inner, outside = b4_defect(get_table("F4"), ortho(f4, roots("F4", text)))
    assert total == 14
    assert outside == flipped
    assert total == inner + outside


def test_b4_defect_preconditions(f4, g2, get_table, roots):
    with pytest.raises(DomainError):
        b4_defect(get_table("G2"), ortho(g2, [g2.fundamentals[0]]))
    with pytest.raises(DomainError):
        b4_defect(get_table("F4"), ortho(f4, roots("F4", "(e1-e2-e3+e4)/2")))
