from fractions import Fraction

import pytest

import ls_path_crystal as ls
from ls_path_crystal.algebra import affine_data, paths
from ls_path_crystal.core.errors import InvalidInputError
from ls_path_crystal.crystal.affinization import AffElement, Affinization
from ls_path_crystal.crystal.ls_crystal import ComponentSignature, LSCrystal


def w(fin, delta=0):
    return ls.LevelZeroWeight.of(fin, delta)


def affinization(label, text):
    return Affinization(LSCrystal(affine_data.build_datum(label), ls.DominantShape.parse(text), cap=1000))


def cl_key(fin):
    return paths.straight(w(fin)).cl().key


def test_zero_shape():
    with pytest.raises(InvalidInputError):
        affinization("A1~1", "0")


def test_operators():
    a = affinization("A1~1", "1")
    lower = cl_key(["-1/2"])
    x = AffElement(a.seed, 0)

    assert a.e(x, 0) == AffElement(lower, 1)
    assert a.f(x, 1) == AffElement(lower, 0)
    assert a.e(x, 1) is None
    assert a.f(AffElement(lower, 1), 0) == x
    assert a.weight(AffElement(a.seed, 3)) == w(["1/2"], 3)
    assert a.eps(x, 0) == 1
    assert a.phi(x, 1) == 1
    assert a.key(x) == '["{}","0"]'.format(a.seed.replace('"', '\\"'))


def test_aff_element_dict():
    x = AffElement("k", "1/2")
    assert x.n == Fraction(1, 2)
    assert x.get_dict == {"eta": "k", "n": "1/2"}


def test_lifts():
    a = affinization("A1~1", "2")
    lam = w([1])
    assert a.d_lambda == 2
    assert a.pi_eta_0(a.seed) == paths.straight(lam)
    assert a.n_prime(a.seed) == 0

    split = paths.canonicalize([w([1]), w([-1])], [0, "1/2", 1]).cl().key
    assert a.n_prime(split) == 1
    assert a.pi_eta_0(split) == paths.canonicalize([w([1], -1), w([-1], 1)], [0, "1/2", 1])

    assert a.n_prime(cl_key([-1])) == 2
    assert a.pi_eta_0(cl_key([-1])) == paths.straight(w([-1]))


def test_theta_and_condition_c():
    a = affinization("A1~1", "2")
    lam = w([1])
    assert a.theta(AffElement(a.seed, 3)) == paths.straight(lam.shift(3))

    assert a.condition_c(AffElement(a.seed, 0)) == True
    assert a.condition_c(AffElement(a.seed, 1)) == False
    assert a.condition_c(AffElement(a.seed, 2)) == True
    assert a.component_shift(AffElement(a.seed, 3)) == 1
    assert a.component_shift(AffElement(a.seed, -2)) == 0

    split = paths.canonicalize([w([1]), w([-1])], [0, "1/2", 1]).cl().key
    assert a.condition_c(AffElement(split, 1)) == True
    assert a.condition_c(AffElement(split, 0)) == False


def test_principal_component():
    a = affinization("A1~1", "2")
    assert a.in_principal_component(a.crystal.pi_lambda) == True
    assert a.in_principal_component(a.crystal.canonical_extremal(ComponentSignature([2]))) == False
    assert a.in_principal_component(paths.straight(w([1], 1))) == False


def test_slab():
    a = affinization("A1~1", "2")
    assert a.slab(2) == [-2, -1, 0, 1, 2]
    assert len(a.elements(1)) == 12
    assert len(a.elements(1, depth=0)) == 3

    twisted = affinization("A2~2", "1")
    assert twisted.slab(1) == [-1, Fraction(-1, 2), 0, Fraction(1, 2), 1]


@pytest.mark.parametrize("label,text,bound", [
    ("A1~1", "1", 3),
    ("A1~1", "2", 4),
    ("A2~1", "2,0", 4),
    ("C2~1", "0,2", 4),
    ("A2~2", "1", 3),
    ("D3~2", "1,0", 4),
])
def test_component_lemma(label, text, bound):
    assert affinization(label, text).check_component_lemma(bound) == []


def test_component_lemma_detects_wrong_period(monkeypatch):
    a = affinization("A1~1", "2")
    monkeypatch.setattr(Affinization, "d_lambda", property(lambda self: 1))
    assert sorted(a.check_component_lemma(2)) == [(0, 1), (1, 0), (1, 2), (2, 1)]


@pytest.mark.parametrize("label,text,bound", [
    ("A1~1", "1", None),
    ("A1~1", "2", 2),
    ("A2~2", "1", 1),
])
def test_verify_theta(label, text, bound):
    a = affinization(label, text)
    report = a.verify_theta(bound)
    assert report.passed == True
    assert report.extra["d_lambda"] == a.d_lambda
    assert len(report.rows) == len(a.graph)
