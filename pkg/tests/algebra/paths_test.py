from fractions import Fraction

import pytest

import ls_path_crystal as ls
from ls_path_crystal.algebra import affine_data, paths
from ls_path_crystal.core.errors import InvalidInputError, NotLSPathError


def w(fin, delta=0):
    return ls.LevelZeroWeight.of(fin, delta)


@pytest.fixture
def a1():
    return affine_data.build_datum("A1~1")


def test_f_on_fundamental(a1):
    pi = paths.straight(w(["1/2"]))
    assert paths.root_f(a1, pi, 1) == paths.straight(w(["-1/2"]))
    assert paths.root_e(a1, pi, 0) == paths.straight(w(["-1/2"], 1))
    assert paths.root_e(a1, pi, 1) is None
    assert paths.root_f(a1, pi, 0) is None


def test_e_0_splits_the_path(a1):
    pi = paths.straight(w([1]))
    image = paths.root_e(a1, pi, 0)
    assert image == paths.canonicalize([w([1]), w([-1], 2)], [0, "1/2", 1])
    assert paths.path_weight(image) == w([0], 1)
    assert paths.root_f(a1, image, 0) == pi


def test_h_function(a1):
    pi = paths.canonicalize([w([-1]), w([1])], [0, "1/2", 1])
    assert paths.h_function(a1, pi, 1) == [(0, 0), (Fraction(1, 2), -1), (1, 0)]
    with pytest.raises(InvalidInputError):
        paths.h_function(a1, pi, 2)


def test_epsilon_phi(a1):
    pi = paths.straight(w([1]))
    assert paths.epsilon(a1, pi, 1) == 0
    assert paths.phi(a1, pi, 1) == 2
    assert paths.epsilon(a1, pi, 0) == 2
    assert paths.phi(a1, pi, 0) == 0

    half = paths.canonicalize([w(["-1/2"]), w(["1/2"])], [0, "1/2", 1])
    with pytest.raises(NotLSPathError):
        paths.epsilon(a1, half, 1)
    with pytest.raises(NotLSPathError):
        paths.phi(a1, half, 1)


def test_root_op(a1):
    pi = paths.straight(w([1]))
    assert paths.root_op(a1, pi, "f", 1) == paths.root_f(a1, pi, 1)
    with pytest.raises(InvalidInputError):
        paths.root_op(a1, pi, "x", 1)


def test_s_j(a1):
    pi = paths.straight(w([1]))
    assert paths.s_j(a1, pi, 1) == paths.straight(w([-1]))
    assert paths.s_j(a1, pi, 0) == paths.straight(w([-1], 2))

    bent = paths.root_f(a1, pi, 1)
    assert paths.s_j(a1, bent, 1) == bent
    assert paths.s_j(a1, paths.s_j(a1, pi, 0), 0) == pi


def test_s_w(a1):
    pi = paths.straight(w([1]))
    assert paths.s_w(a1, pi, (1, 0)) == paths.straight(w([1], 2))
    assert paths.s_w(a1, pi, ()) == pi


def test_apply_ops(a1):
    pi = paths.straight(w([1]))
    assert paths.apply_ops(a1, pi, [("f", 1), ("f", 1)]) == paths.straight(w([-1]))
    assert paths.apply_ops(a1, pi, [("e", 1)]) is None


def test_delta_shift_commutes(a1):
    pi = paths.root_f(a1, paths.straight(w([1])), 1)
    shifted = paths.delta_shift(pi, 3)
    assert paths.path_weight(shifted) == paths.path_weight(pi).shift(3)
    for j in a1.index_set:
        for op in (paths.root_e, paths.root_f):
            image = op(a1, pi, j)
            expected = None if image is None else paths.delta_shift(image, 3)
            assert op(a1, shifted, j) == expected

    eta = paths.cl(pi)
    assert paths.delta_shift(eta, 3) is eta


def test_cl_commutes(a1):
    pi = paths.straight(w([1]))
    for j in a1.index_set:
        for op in (paths.root_e, paths.root_f):
            image = op(a1, pi, j)
            cl_image = op(a1, paths.cl(pi), j)
            assert (image is None) == (cl_image is None)
            if image is not None:
                assert paths.cl(image) == cl_image


def test_twisted_e_0():
    d = affine_data.build_datum("A2~2")
    pi = paths.straight(w(["1/2"]))
    image = paths.root_e(d, pi, 0)
    assert image is not None
    assert paths.path_weight(image) == w(["1/2"]) + affine_data.simple_root(d, 0)
    assert paths.root_f(d, image, 0) == pi
