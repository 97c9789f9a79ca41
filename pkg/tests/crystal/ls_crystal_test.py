from fractions import Fraction

import pytest

import ls_path_crystal as ls
from ls_path_crystal.algebra import affine_data, paths
from ls_path_crystal.core.errors import InvalidInputError, SignatureError
from ls_path_crystal.crystal import ls_crystal
from ls_path_crystal.crystal.crystal_graph import generate_depth_bounded


def w(fin, delta=0):
    return ls.LevelZeroWeight.of(fin, delta)


def crystal(label, text):
    return ls_crystal.LSCrystal(affine_data.build_datum(label), ls.DominantShape.parse(text), cap=1000)


def sig(*values):
    return ls_crystal.ComponentSignature(values)


def test_turn_set():
    assert ls_crystal.turn_set(ls.DominantShape.parse("1,1")) == ()
    assert ls_crystal.turn_set(ls.DominantShape.parse("2")) == (Fraction(1, 2),)
    assert ls_crystal.turn_set(ls.DominantShape.parse("2,3")) == (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
    assert ls_crystal.turn_set(ls.DominantShape.parse("4,0")) == (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def test_I0_lambda_p():
    assert ls_crystal.I0_lambda_p(ls.DominantShape.parse("2,3"), 2) == (1,)
    assert ls_crystal.I0_lambda_p(ls.DominantShape.parse("2,3"), 3) == (2,)


def test_shape_rank_mismatch():
    with pytest.raises(InvalidInputError):
        crystal("A2~1", "1")


def test_canonical_extremal():
    c = crystal("A1~1", "2")
    assert c.d_lambda == 2
    assert c.canonical_extremal(sig(0)) == c.pi_lambda
    assert c.canonical_extremal(sig(2)) == paths.canonicalize([w([1], -2), w([1])], [0, "1/2", 1])

    with pytest.raises(SignatureError) as e:
        c.canonical_extremal(sig(1))
    assert e.value.index == 1

    with pytest.raises(SignatureError):
        c.canonical_extremal(sig(2, 0))
    with pytest.raises(SignatureError):
        c.canonical_extremal(sig(-2))


def test_valid_signatures():
    c = crystal("A1~1", "2")
    valid, rejected = c.valid_signatures(4)
    assert valid == [sig(0), sig(2), sig(4)]
    assert rejected == [(sig(1), 1), (sig(3), 1)]

    c = crystal("A2~1", "1,1")
    valid, rejected = c.valid_signatures(4)
    assert valid == [sig()]
    assert rejected == []


def test_signature_dict():
    s = sig(4, 2)
    assert s.get_dict == [4, 2]
    assert str(s) == "(4,2)"
    assert s.is_zero == False
    assert sig(0, 0).is_zero == True


def test_is_ls_path():
    c = crystal("A1~1", "2")
    assert bool(c.is_ls_path(c.pi_lambda)) == True
    assert bool(c.is_ls_path(c.canonical_extremal(sig(2)))) == True
    assert bool(c.is_ls_path(paths.root_f(c.datum, c.pi_lambda, 1))) == True

    assert bool(c.is_ls_path(paths.straight(w([1], 1)))) == False
    assert bool(c.is_ls_path(paths.canonicalize([w([1]), w([-1])], [0, "1/2", 1]))) == False
    assert bool(c.is_ls_path(paths.canonicalize([w([1], -1), w([1])], [0, "1/2", 1]))) == False

    check = c.is_ls_path(c.canonical_extremal(sig(2)))
    assert len(check.certificates) == 1
    assert check.get_dict["ok"] == True

    with pytest.raises(InvalidInputError):
        c.is_ls_path(c.pi_lambda.cl())


def test_component_signature_of_seeds():
    c = crystal("A1~1", "2")
    for values in [(0,), (2,), (4,)]:
        assert c.component_signature(c.canonical_extremal(sig(*values))) == sig(*values)


def test_component_signature_is_constant():
    c = crystal("A1~1", "2")
    for values in [(0,), (2,)]:
        g = generate_depth_bounded(c.canonical_extremal(sig(*values)), c.ops, 3)
        for key in g.vertices:
            assert c.component_signature(g.elements[key]) == sig(*values)


def test_extremal_set():
    c = crystal("A1~1", "2")
    assert len(c.extremal_cl_set()) == 2
    assert c.is_extremal(c.pi_lambda) == True
    assert c.is_extremal(paths.root_f(c.datum, c.pi_lambda, 1)) == False

    c = crystal("A2~1", "1,1")
    assert len(c.extremal_cl_set()) == 6


def test_verify_chains():
    c = crystal("A1~1", "2")
    report = c.verify_chains(4)
    assert report.passed == True
    assert [(row["N"], row["oracle"]) for row in report.rows] == [(0, True), (1, False), (2, True), (3, False), (4, True)]
    assert all(row["valid"] for row in report.rows if row["oracle"])

    report = crystal("A2~1", "1,1").verify_chains(4)
    assert report.passed == True
    assert report.rows == []


@pytest.mark.parametrize("label,text", [
    ("A1~1", "3"),
    ("A2~1", "2,0"),
    ("A2~1", "2,1"),
    ("C2~1", "2,0"),
    ("C2~1", "0,2"),
    ("A2~2", "2"),
    ("D3~2", "2,0"),
])
def test_verify_chains_grid(label, text):
    c = crystal(label, text)
    report = c.verify_chains(4)
    assert report.passed == True
    assert len(report.rows) == len(c.turn) * 5
    assert any(row["oracle"] and row["N"] > 0 for row in report.rows) == True
    assert all(row["valid"] for row in report.rows if row["oracle"])


@pytest.mark.parametrize("label,text,size", [
    ("A1~1", "1", 2),
    ("A1~1", "2", 4),
    ("A2~1", "1,1", 9),
    ("A2~2", "1", 3),
])
def test_verify_simple(label, text, size):
    report = crystal(label, text).verify_simple()
    assert report.passed == True
    row = report.rows[0]
    assert row["vertices"] == size
    assert row["weight_cl_lambda"] == 1
    assert row["tensor_order"] in ("stated", "reversed")


def test_verify_simple_zero_shape():
    report = crystal("A1~1", "0").verify_simple()
    assert report.passed == True
    assert report.rows[0]["vertices"] == 1
    assert report.rows[0]["tensor_order"] is None


def test_verify_simple_checks_raise_rule(monkeypatch):
    monkeypatch.setattr(ls_crystal, "tensor_raise", lambda g1, g2, key, j: None)
    report = crystal("A1~1", "2").verify_simple()
    assert report.passed == False
    assert "tensor_rule" in [v.check for v in report.violations]

    report = crystal("A1~1", "1").verify_simple()
    assert report.passed == True


def test_verify_theorem_comps():
    report = crystal("A1~1", "2").verify_theorem_comps(depth=2, n_max=4)
    assert report.passed == True
    assert report.extra["signatures"] == [[0], [2], [4]]
    assert report.extra["rejected"] == [{"signature": [1], "index": 1}, {"signature": [3], "index": 1}]
    assert len(report.rows) == 3
    assert all(row["weight_lambda"] <= 1 for row in report.rows)


def test_verify_theorem_comps_partial():
    c = ls_crystal.LSCrystal(affine_data.build_datum("A2~1"), ls.DominantShape.parse("1,1"), cap=2)
    report = c.verify_theorem_comps(depth=1, n_max=1)
    assert report.partial == True
    assert report.passed == False


def test_verify_axioms():
    report = crystal("A1~1", "2").verify_axioms(depth=2, samples=100, seed=7)
    assert report.passed == True
    assert report.rows[0]["sampled"] == report.rows[0]["vertices"]
