import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, ClassVar, Dict, Iterable, Iterator, List, Sequence, Tuple

from ..core.errors import PathError
from ..core.utils import Rational, frac_list, json_output, to_fraction
from .weight import LevelZeroWeight


def _merge(directions: Sequence[LevelZeroWeight], breaks: Sequence[Fraction]):
    merged_dirs: List[LevelZeroWeight] = []
    merged_breaks: List[Fraction] = [breaks[0]]

    for u, nu in enumerate(directions):
        if merged_dirs and merged_dirs[-1] == nu:
            merged_breaks[-1] = breaks[u + 1]
            continue
        merged_dirs.append(nu)
        merged_breaks.append(breaks[u + 1])

    return tuple(merged_dirs), tuple(merged_breaks)


@dataclass(frozen=True)
class Path:
    """
    Piecewise-linear path t -> pi(t) on [0, 1] given by the directions
    nu_1, ..., nu_s and the breakpoints 0 = sigma_0 < ... < sigma_s = 1.

    Instances are always stored in their minimal expression: neighbouring
    equal directions are merged on construction.
    """

    directions: Tuple[LevelZeroWeight, ...]
    breaks: Tuple[Fraction, ...]

    classical: ClassVar[bool] = False

    def __post_init__(self):
        directions = tuple(self.directions)
        breaks = tuple(to_fraction(b) for b in self.breaks)

        if len(directions) == 0:
            raise PathError("path needs at least one direction.")
        if len(breaks) != len(directions) + 1:
            raise PathError("breakpoint count mismatch. [directions={}] [breaks={}]".format(
                len(directions), len(breaks)))
        if breaks[0] != 0 or breaks[-1] != 1:
            raise PathError("breakpoints must start at 0 and end at 1. [breaks={}]".format(frac_list(breaks)))
        for a, b in zip(breaks, breaks[1:]):
            if not a < b:
                raise PathError("breakpoints must be strictly increasing. [breaks={}]".format(frac_list(breaks)))

        rank = directions[0].rank
        if any(nu.rank != rank for nu in directions):
            raise PathError("directions have mixed ranks.")

        if self.classical:
            directions = tuple(nu.cl() for nu in directions)

        directions, breaks = _merge(directions, breaks)
        object.__setattr__(self, "directions", directions)
        object.__setattr__(self, "breaks", breaks)

    @classmethod
    def straight(cls, nu: LevelZeroWeight) -> "Path":
        return cls((nu,), (Fraction(0), Fraction(1)))

    @classmethod
    def canonicalize(cls, directions: Iterable[LevelZeroWeight], breaks: Iterable[Rational]) -> "Path":
        return cls(tuple(directions), tuple(to_fraction(b) for b in breaks))

    @property
    def rank(self) -> int:
        return self.directions[0].rank

    @property
    def length(self) -> int:
        return len(self.directions)

    def segments(self) -> Iterator[Tuple[Fraction, Fraction, LevelZeroWeight]]:
        for u, nu in enumerate(self.directions):
            yield self.breaks[u], self.breaks[u + 1], nu

    def evaluate(self, t: Rational) -> LevelZeroWeight:
        t = to_fraction(t)
        if t < 0 or t > 1:
            raise PathError("evaluation point out of range. [t={}]".format(t))

        value = LevelZeroWeight.zero(self.rank)
        for start, end, nu in self.segments():
            if t <= start:
                break
            value = value + nu * (min(t, end) - start)
        return value

    @cached_property
    def endpoint(self) -> LevelZeroWeight:
        return self.evaluate(1)

    def direction_at(self, t: Rational) -> LevelZeroWeight:
        """Direction of the open segment containing t, t in (0, 1)."""
        t = to_fraction(t)
        for start, end, nu in self.segments():
            if start <= t < end:
                return nu
        return self.directions[-1]

    def expression(self, points: Iterable[Rational]) -> Tuple[Tuple[LevelZeroWeight, ...], Tuple[Fraction, ...]]:
        """A non-minimal expression with the given points inserted."""
        extra = sorted(set(to_fraction(p) for p in points) | set(self.breaks))
        extra = [p for p in extra if 0 <= p <= 1]
        dirs = tuple(self.direction_at((a + b) / 2) for a, b in zip(extra, extra[1:]))
        return dirs, tuple(extra)

    def _combine(self, other: "Path", sign: int) -> "Path":
        if self.rank != other.rank:
            raise PathError("cannot combine paths of different ranks.")
        points = sorted(set(self.breaks) | set(other.breaks))
        dirs = []
        for a, b in zip(points, points[1:]):
            mid = (a + b) / 2
            left = self.direction_at(mid)
            right = other.direction_at(mid)
            dirs.append(left + right if sign > 0 else left - right)
        return type(self)(tuple(dirs), tuple(points))

    def __add__(self, other: "Path") -> "Path":
        return self._combine(other, 1)

    def __sub__(self, other: "Path") -> "Path":
        return self._combine(other, -1)

    def cl(self) -> "ClPath":
        return ClPath(self.directions, self.breaks)

    @property
    def get_dict(self) -> Dict[str, Any]:
        if self.classical:
            dirs = [{"fin": nu.get_dict["fin"]} for nu in self.directions]
        else:
            dirs = [nu.get_dict for nu in self.directions]
        return {
            "dirs": dirs,
            "breaks": frac_list(self.breaks),
        }

    @property
    def get_json(self):
        return json.dumps(self.get_dict)

    @cached_property
    def key(self) -> str:
        return json_output(self.get_dict)

    @classmethod
    def from_dict(cls, obj: Dict[str, Any]) -> "Path":
        try:
            dirs = tuple(LevelZeroWeight.from_dict(d) for d in obj["dirs"])
            breaks = tuple(Fraction(b) for b in obj["breaks"])
        except (KeyError, TypeError, ValueError) as e:
            raise PathError("malformed path. [error={}]".format(e))
        return cls(dirs, breaks)

    @classmethod
    def from_key(cls, key: str) -> "Path":
        return cls.from_dict(json.loads(key))

    def __str__(self):
        return "({} ; {})".format(", ".join(str(nu) for nu in self.directions), ", ".join(frac_list(self.breaks)))


@dataclass(frozen=True)
class ClPath(Path):
    """Path with weights in P_cl; directions carry no null-root part."""

    classical: ClassVar[bool] = True

    def cl(self) -> "ClPath":
        return self
