import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from ..core.errors import NotARootError
from ..core.utils import frac_str
from . import constants
from .weight import LevelZeroWeight


@dataclass(frozen=True)
class FiniteRoot:
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def positive(self) -> bool:
        return any(c > 0 for c in self.coords) and all(c >= 0 for c in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> "FiniteRoot":
        return FiniteRoot(tuple(-c for c in self.coords))

    def as_weight(self) -> LevelZeroWeight:
        return LevelZeroWeight(tuple(Fraction(c) for c in self.coords), Fraction(0))

    @property
    def get_dict(self):
        return list(self.coords)

    @property
    def get_json(self):
        return json.dumps(self.get_dict)

    def __str__(self):
        return "α" + str(list(self.coords))


class RootKind(Enum):
    FULL = constants.ROOT_KIND_FULL
    HALF = constants.ROOT_KIND_HALF


@dataclass(frozen=True)
class PositiveRealRoot:
    """
    FULL: beta + n * c * delta.
    HALF: (beta + (2n - 1) * delta) / 2, beta long.
    """

    kind: RootKind
    beta: FiniteRoot
    n: int
    c: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        if self.kind == RootKind.FULL:
            lowest = 0 if self.beta.positive else 1
            if self.n < lowest:
                raise NotARootError("not a positive real root. [beta={}] [n={}]".format(self.beta.coords, self.n))
        elif self.n < 1:
            raise NotARootError("not a positive real root. [half] [beta={}] [n={}]".format(self.beta.coords, self.n))

    @property
    def delta_degree(self) -> Fraction:
        if self.kind == RootKind.FULL:
            return self.n * self.c
        return Fraction(2 * self.n - 1, 2)

    @property
    def finite_scale(self) -> Fraction:
        return Fraction(1) if self.kind == RootKind.FULL else Fraction(1, 2)

    def as_weight(self) -> LevelZeroWeight:
        scale = self.finite_scale
        return LevelZeroWeight(tuple(scale * c for c in self.beta.coords), self.delta_degree)

    @property
    def finite_part(self) -> FiniteRoot:
        return self.beta if self.beta.positive else -self.beta

    @property
    def sign(self) -> int:
        return 1 if self.beta.positive else -1

    @property
    def sort_key(self):
        return (self.delta_degree, self.finite_part.coords, -self.sign, self.kind.value)

    @property
    def get_dict(self):
        return {
            "kind": self.kind.value,
            "beta": self.beta.get_dict,
            "n": self.n,
            "delta": frac_str(self.delta_degree),
        }

    @property
    def get_json(self):
        return json.dumps(self.get_dict)

    def __str__(self):
        if self.kind == RootKind.FULL:
            return "{} + {}δ".format(self.beta, frac_str(self.delta_degree))
        return "({} + {}δ)/2".format(self.beta, 2 * self.n - 1)
