import pytest

import ls_path_crystal as ls
from ls_path_crystal.core.errors import ConfigError


def test_build_with_overrides():
    c = ls.RunConfig.build({"type_label": "A2~1", "shape": "1,1", "depth": None, "cap": 50})
    assert c.affine_type.label == "A2~1"
    assert c.dominant_shape.multiplicities == (1, 1)
    assert c.depth is None
    assert c.cap == 50
    assert c.validate() is c


def test_yaml_then_flags(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("type_label: A1~1\nshape: '2'\nn_max: 6\nthreads: 2\n")

    c = ls.RunConfig.build({"n_max": 3}, str(path))
    assert c.type_label == "A1~1"
    assert c.shape == "2"
    assert c.n_max == 3
    assert c.threads == 2
    c.validate()


def test_yaml_rejects_unknown_keys(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("type_label: A1~1\ncolour: red\n")
    with pytest.raises(ConfigError):
        ls.RunConfig.build({}, str(path))


def test_yaml_missing(tmp_path):
    with pytest.raises(ConfigError):
        ls.RunConfig.build({}, str(tmp_path / "absent.yaml"))


@pytest.mark.parametrize("overrides", [
    {},
    {"type_label": "A1~1"},
    {"type_label": "Z1~1", "shape": "1"},
    {"type_label": "A2~1", "shape": "1"},
    {"type_label": "A1~1", "shape": "1", "depth": -1},
    {"type_label": "A1~1", "shape": "1", "cap": 0},
    {"type_label": "A1~1", "shape": "1", "n_bound": "x"},
    {"type_label": "A1~1", "shape": "1", "n_bound": "-1"},
    {"type_label": "A1~1", "shape": "1", "output_format": "svg"},
])
def test_validate_rejects(overrides):
    with pytest.raises(ConfigError):
        ls.RunConfig.build(overrides).validate()


def test_validate_without_shape():
    ls.RunConfig.build({"type_label": "G2~1"}).validate(need_shape=False)


def test_config_dict():
    c = ls.RunConfig.build({"type_label": "A1~1", "shape": "1"})
    assert c.get_dict["type_label"] == "A1~1"
    assert "output_path" not in c.get_dict
