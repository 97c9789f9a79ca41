from fractions import Fraction

import pytest

import ls_path_crystal as ls
from ls_path_crystal.algebra import affine_data
from ls_path_crystal.core.errors import InvalidInputError, NotARootError

kLabels = [
    "A1~1", "A2~1", "A3~1", "A4~1",
    "B3~1", "B4~1", "C2~1", "C3~1", "C4~1", "D4~1", "F4~1", "G2~1",
    "A2~2", "A4~2", "A6~2", "A8~2", "A5~2", "A7~2",
    "D3~2", "D4~2", "D5~2", "E6~2", "D4~3",
]


@pytest.mark.parametrize("label", kLabels)
def test_build_datum(label):
    d = affine_data.build_datum(label)
    size = d.rank + 1
    for i in range(size):
        assert sum(d.a(i, j) * d.marks[j] for j in range(size)) == 0
    assert d.comarks[0] == 1
    assert d.is_root(d.theta)
    assert d.theta.positive == True
    assert len(d.finite_roots) == 2 * len(d.positive_finite_roots)


def test_a1_datum():
    d = affine_data.build_datum("A1~1")
    assert d.marks == (1, 1)
    assert d.cartan == ((2, -2), (-2, 2))
    assert d.theta.coords == (1,)
    assert affine_data.simple_root(d, 0) == ls.LevelZeroWeight.of([-1], 1)
    assert affine_data.simple_root(d, 0, classical=True) == ls.LevelZeroWeight.of([-1], 0)


def test_describe_a1(snapshot):
    d = affine_data.build_datum("A1~1")
    snapshot.assert_match(ls.core.utils.json_output(affine_data.describe(d)), "datum")


@pytest.mark.parametrize("label,count", [("A2~1", 6), ("C2~1", 8), ("G2~1", 12), ("B3~1", 18), ("D4~1", 24), ("F4~1", 48)])
def test_finite_root_count(label, count):
    assert len(affine_data.finite_roots(affine_data.build_datum(label))) == count


def test_theta():
    assert affine_data.theta(affine_data.build_datum("A2~1")).coords == (1, 1)
    assert affine_data.theta(affine_data.build_datum("G2~1")).coords == (2, 3)
    assert affine_data.theta(affine_data.build_datum("A4~2")).coords == (2, 1)


def test_a_even_twisted_special_vertex():
    d = affine_data.build_datum("A2~2")
    assert d.a0 == 2
    assert d.a0_inverse == Fraction(1, 2)
    assert affine_data.simple_root(d, 0) == ls.LevelZeroWeight.of(["-1/2"], "1/2")
    assert affine_data.c_beta(d, ls.FiniteRoot((1,))) == 2
    assert affine_data.d_i(d, 1) == 1


def test_c_beta_and_d_i():
    d = affine_data.build_datum("D3~2")
    long_, short = ls.FiniteRoot((1, 0)), ls.FiniteRoot((0, 1))
    assert affine_data.is_long(d, long_) == True
    assert affine_data.is_long(d, short) == False
    assert affine_data.c_beta(d, short) == 1
    assert affine_data.c_beta(d, long_) == 2
    assert [affine_data.d_i(d, i) for i in d.finite_index_set] == [2, 1]

    with pytest.raises(NotARootError):
        affine_data.c_beta(d, ls.FiniteRoot((3, 1)))
    with pytest.raises(InvalidInputError):
        affine_data.d_i(d, 0)


def test_positive_real_roots_up_to():
    d = affine_data.build_datum("A1~1")
    roots = affine_data.positive_real_roots_up_to(d, 1)
    assert [r.as_weight() for r in roots] == [
        ls.LevelZeroWeight.of([1], 0),
        ls.LevelZeroWeight.of([1], 1),
        ls.LevelZeroWeight.of([-1], 1),
    ]
    assert all(affine_data.finite_part(r).positive for r in roots)

    with pytest.raises(InvalidInputError):
        affine_data.positive_real_roots_up_to(d, -1)


def test_half_roots():
    d = affine_data.build_datum("A2~2")
    roots = affine_data.positive_real_roots_up_to(d, "1/2")
    assert [r.as_weight() for r in roots] == [
        ls.LevelZeroWeight.of([1], 0),
        ls.LevelZeroWeight.of(["1/2"], "1/2"),
        ls.LevelZeroWeight.of(["-1/2"], "1/2"),
    ]


def test_real_roots_lie_in_q_plus():
    for label in ["A2~1", "C2~1", "A4~2", "D4~3"]:
        d = affine_data.build_datum(label)
        for xi in affine_data.positive_real_roots_up_to(d, 2):
            coords = affine_data.q_plus_coords(d, xi.as_weight())
            assert affine_data.in_q_plus(coords) == True


def test_q_plus_coords():
    d = affine_data.build_datum("A2~1")
    delta = ls.LevelZeroWeight.of([0, 0], 1)
    assert affine_data.q_plus_coords(d, delta) == (1, 1, 1)
    assert affine_data.in_q_plus(affine_data.q_plus_coords(d, -delta)) == False


def test_untwisted_c_beta_is_one():
    d = affine_data.build_datum("C2~1")
    assert all(affine_data.c_beta(d, beta) == 1 for beta in d.positive_finite_roots)
    assert affine_data.norm(d, 1) == 1
    assert affine_data.norm(d, 2) == 2
