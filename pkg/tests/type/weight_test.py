import pytest

import ls_path_crystal as ls
from ls_path_crystal.core.errors import InvalidInputError


def test_weight_arithmetic():
    a = ls.LevelZeroWeight.of(["1/2", 1], 2)
    b = ls.LevelZeroWeight.of([1, 0], "-1/2")

    assert a + b == ls.LevelZeroWeight.of(["3/2", 1], "3/2")
    assert a - b == ls.LevelZeroWeight.of(["-1/2", 1], "5/2")
    assert -a == ls.LevelZeroWeight.of(["-1/2", -1], -2)
    assert 2 * a == ls.LevelZeroWeight.of([1, 2], 4)

    assert a.cl() == ls.LevelZeroWeight.of(["1/2", 1])
    assert a.shift(-2).is_classical == True
    assert ls.LevelZeroWeight.zero(2).is_zero == True

    with pytest.raises(InvalidInputError):
        a + ls.LevelZeroWeight.zero(1)


def test_weight_dict():
    a = ls.LevelZeroWeight.of(["1/2", -1], "3/2")
    assert a.get_dict == {"fin": ["1/2", "-1"], "delta": "3/2"}
    assert ls.LevelZeroWeight.from_dict(a.get_dict) == a
    assert str(a) == "(1/2, -1; 3/2δ)"

    with pytest.raises(InvalidInputError):
        ls.LevelZeroWeight.from_dict({"delta": "1"})


def test_dominant_shape():
    s = ls.DominantShape.parse("2, 0,3")
    assert s.multiplicities == (2, 0, 3)
    assert s.m(3) == 3
    assert s.support == (1, 3)
    assert s.label == "2,0,3"
    assert s.is_zero == False

    assert ls.DominantShape.fundamental(3, 2).multiplicities == (0, 1, 0)
    assert ls.DominantShape.parse("0,0").is_zero == True


@pytest.mark.parametrize("text", ["", "a,1", "1,-1"])
def test_dominant_shape_rejects(text):
    with pytest.raises(InvalidInputError):
        ls.DominantShape.parse(text)
