import json
import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, List, Union

logger = logging.getLogger(__name__)

Rational = Union[int, str, Fraction]


def json_input(path: str) -> Any:
    with open(path, 'r') as f:
        return json.load(f)


def json_output(data):
    return json.dumps(data, sort_keys=False, separators=(',', ':'), ensure_ascii=False)


def output(target_path: Path, data, if_not_exists=False):
    if if_not_exists and os.path.exists(target_path):
        return

    with open(target_path, 'w') as f:
        if isinstance(data, str):
            f.write(data)
        else:
            f.write(json_output(data))


def ensure_makedirs(_path: Path):
    if not os.path.exists(_path):
        os.makedirs(_path)


def to_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def frac_str(value: Rational) -> str:
    return str(to_fraction(value))


def frac_list(values: Iterable[Rational]) -> List[str]:
    return [frac_str(v) for v in values]


def is_integral(value: Rational) -> bool:
    return to_fraction(value).denominator == 1
