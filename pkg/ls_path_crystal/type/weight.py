import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Tuple

from ..core.errors import InvalidInputError
from ..core.utils import Rational, frac_list, frac_str, to_fraction


@dataclass(frozen=True)
class LevelZeroWeight:
    """
    A level-zero weight written as a rational combination of the finite
    simple roots plus a rational multiple of the null root.
    """

    fin: Tuple[Fraction, ...]
    delta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "fin", tuple(to_fraction(x) for x in self.fin))
        object.__setattr__(self, "delta", to_fraction(self.delta))

    @classmethod
    def zero(cls, rank: int) -> "LevelZeroWeight":
        return cls(tuple(Fraction(0) for _ in range(rank)), Fraction(0))

    @classmethod
    def of(cls, fin: Iterable[Rational], delta: Rational = 0) -> "LevelZeroWeight":
        return cls(tuple(to_fraction(x) for x in fin), to_fraction(delta))

    @property
    def rank(self) -> int:
        return len(self.fin)

    @property
    def is_zero(self) -> bool:
        return self.delta == 0 and all(x == 0 for x in self.fin)

    @property
    def is_classical(self) -> bool:
        return self.delta == 0

    def cl(self) -> "LevelZeroWeight":
        if self.delta == 0:
            return self
        return LevelZeroWeight(self.fin, Fraction(0))

    def shift(self, n: Rational) -> "LevelZeroWeight":
        return LevelZeroWeight(self.fin, self.delta + to_fraction(n))

    def _check(self, other: "LevelZeroWeight"):
        if len(self.fin) != len(other.fin):
            raise InvalidInputError("weight rank mismatch. [left={}] [right={}]".format(len(self.fin), len(other.fin)))

    def __add__(self, other: "LevelZeroWeight") -> "LevelZeroWeight":
        self._check(other)
        return LevelZeroWeight(tuple(a + b for a, b in zip(self.fin, other.fin)), self.delta + other.delta)

    def __sub__(self, other: "LevelZeroWeight") -> "LevelZeroWeight":
        self._check(other)
        return LevelZeroWeight(tuple(a - b for a, b in zip(self.fin, other.fin)), self.delta - other.delta)

    def __neg__(self) -> "LevelZeroWeight":
        return LevelZeroWeight(tuple(-a for a in self.fin), -self.delta)

    def __mul__(self, scalar: Rational) -> "LevelZeroWeight":
        c = to_fraction(scalar)
        return LevelZeroWeight(tuple(c * a for a in self.fin), c * self.delta)

    __rmul__ = __mul__

    @property
    def sort_key(self):
        return (self.delta, self.fin)

    @property
    def get_dict(self) -> Dict[str, Any]:
        return {
            "fin": frac_list(self.fin),
            "delta": frac_str(self.delta),
        }

    @property
    def get_json(self):
        return json.dumps(self.get_dict)

    @classmethod
    def from_dict(cls, obj: Dict[str, Any]) -> "LevelZeroWeight":
        try:
            return cls(tuple(Fraction(x) for x in obj["fin"]), Fraction(obj.get("delta", "0")))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidInputError("malformed weight. [obj={}] [error={}]".format(obj, e))

    def __str__(self):
        return "({}; {}δ)".format(", ".join(frac_list(self.fin)), frac_str(self.delta))


@dataclass(frozen=True)
class DominantShape:
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(m) for m in self.multiplicities)
        if any(m < 0 for m in values):
            raise InvalidInputError("shape multiplicities must be nonnegative. [shape={}]".format(values))
        object.__setattr__(self, "multiplicities", values)

    @classmethod
    def parse(cls, text: str) -> "DominantShape":
        try:
            values = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
        except ValueError:
            raise InvalidInputError("malformed shape. [shape={}]".format(text))
        if len(values) == 0:
            raise InvalidInputError("empty shape. [shape={}]".format(text))
        return cls(values)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "DominantShape":
        return cls(tuple(1 if k == i else 0 for k in range(1, rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.multiplicities)

    def m(self, i: int) -> int:
        """Multiplicity of the i-th fundamental weight, 1-based as in I_0."""
        return self.multiplicities[i - 1]

    @property
    def is_zero(self) -> bool:
        return all(m == 0 for m in self.multiplicities)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.rank + 1) if self.m(i) > 0)

    @property
    def label(self) -> str:
        return ",".join(str(m) for m in self.multiplicities)

    @property
    def get_dict(self):
        return list(self.multiplicities)

    @property
    def get_json(self):
        return json.dumps(self.get_dict)

    def __str__(self):
        return self.label
