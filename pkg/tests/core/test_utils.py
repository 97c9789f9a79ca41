from fractions import Fraction

from ls_path_crystal import core


def test_json_output():
    assert core.utils.json_output({"a": [1, 2], "b": "δ"}) == '{"a":[1,2],"b":"δ"}'


def test_fractions():
    assert core.utils.to_fraction("3/6") == Fraction(1, 2)
    assert core.utils.to_fraction(2) == Fraction(2)
    assert core.utils.frac_str(Fraction(4, 2)) == "2"
    assert core.utils.frac_list([Fraction(1, 3), 0, "-2/4"]) == ["1/3", "0", "-1/2"]

    assert core.utils.is_integral("4/2") == True
    assert core.utils.is_integral(Fraction(1, 2)) == False


def test_output(tmp_path):
    target = tmp_path / "out" / "a.json"
    core.utils.ensure_makedirs(str(target.parent))
    core.utils.output(str(target), {"x": 1})
    assert target.read_text() == '{"x":1}'

    core.utils.output(str(target), "ignored", if_not_exists=True)
    assert core.utils.json_input(str(target)) == {"x": 1}
