import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..core.errors import InvalidInputError, NotLSPathError
from ..core.utils import Rational
from ..type import constants
from ..type.path import ClPath, Path
from ..type.weight import LevelZeroWeight
from .affine_data import AffineCartanDatum
from .weights import pairing_h, simple_reflect

logger = logging.getLogger(__name__)

Values = List[Tuple[Fraction, Fraction]]


def straight(nu: LevelZeroWeight) -> Path:
    return Path.straight(nu)


def canonicalize(directions: Sequence[LevelZeroWeight], breaks: Sequence[Rational]) -> Path:
    return Path.canonicalize(directions, breaks)


def cl(pi: Path) -> ClPath:
    return pi.cl()


def path_weight(pi: Path) -> LevelZeroWeight:
    return pi.endpoint


def delta_shift(pi: Path, n: Rational) -> Path:
    """pi + pi_{n delta}."""
    if n == 0 or pi.classical:
        return pi
    return pi + Path.straight(LevelZeroWeight.zero(pi.rank).shift(n))


def h_function(datum: AffineCartanDatum, pi: Path, j: int) -> Values:
    """Breakpoints with the values of H(t) = <pi(t), h_j>; H is linear in between."""
    if j not in datum.index_set:
        raise InvalidInputError("index outside I. [j={}]".format(j))

    values = [(Fraction(0), Fraction(0))]
    h = Fraction(0)
    for start, end, nu in pi.segments():
        h += (end - start) * pairing_h(datum, nu, j)
        values.append((end, h))
    return values


def _minimum(values: Values) -> Fraction:
    return min(h for _, h in values)


def _crossing(a: Tuple[Fraction, Fraction], b: Tuple[Fraction, Fraction], level: Fraction) -> Fraction:
    (ta, ha), (tb, hb) = a, b
    if ha == hb:
        return ta
    return ta + (level - ha) * (tb - ta) / (hb - ha)


def _reflect_between(datum: AffineCartanDatum, pi: Path, j: int, t0: Fraction, t1: Fraction) -> Path:
    dirs, breaks = pi.expression([t0, t1])
    images = []
    for u, nu in enumerate(dirs):
        if t0 <= breaks[u] and breaks[u + 1] <= t1:
            nu = simple_reflect(datum, nu, j, pi.classical)
        images.append(nu)
    return type(pi).canonicalize(images, breaks)


def root_e(datum: AffineCartanDatum, pi: Path, j: int) -> Optional[Path]:
    values = h_function(datum, pi, j)
    m = _minimum(values)
    if m > -1:
        return None

    first = next(u for u, (_, h) in enumerate(values) if h == m)
    t1 = values[first][0]

    level = m + 1
    t0 = Fraction(0)
    for u in range(first, 0, -1):
        if values[u - 1][1] >= level:
            t0 = _crossing(values[u - 1], values[u], level)
            break

    return _reflect_between(datum, pi, j, t0, t1)


def root_f(datum: AffineCartanDatum, pi: Path, j: int) -> Optional[Path]:
    values = h_function(datum, pi, j)
    m = _minimum(values)
    if values[-1][1] - m < 1:
        return None

    last = max(u for u, (_, h) in enumerate(values) if h == m)
    t0 = values[last][0]

    level = m + 1
    t1 = Fraction(1)
    for u in range(last, len(values) - 1):
        if values[u + 1][1] >= level:
            t1 = _crossing(values[u], values[u + 1], level)
            break

    return _reflect_between(datum, pi, j, t0, t1)


def root_op(datum: AffineCartanDatum, pi: Path, op: str, j: int) -> Optional[Path]:
    if op == constants.OP_E:
        return root_e(datum, pi, j)
    if op == constants.OP_F:
        return root_f(datum, pi, j)
    raise InvalidInputError("unknown root operator. [op={}]".format(op))


def epsilon(datum: AffineCartanDatum, pi: Path, j: int) -> int:
    m = _minimum(h_function(datum, pi, j))
    if m.denominator != 1:
        raise NotLSPathError("non-integral minimum. [j={}] [min={}] [path={}]".format(j, m, pi))
    return int(-m)


def phi(datum: AffineCartanDatum, pi: Path, j: int) -> int:
    values = h_function(datum, pi, j)
    m = _minimum(values)
    top = values[-1][1] - m
    if m.denominator != 1 or top.denominator != 1:
        raise NotLSPathError("non-integral minimum. [j={}] [min={}] [path={}]".format(j, m, pi))
    return int(top)


def s_j(datum: AffineCartanDatum, pi: Path, j: int) -> Path:
    n = pairing_h(datum, pi.endpoint, j)
    if n.denominator != 1:
        raise NotLSPathError("non-integral endpoint pairing. [j={}] [pairing={}]".format(j, n))

    op, times = (root_f, int(n)) if n >= 0 else (root_e, int(-n))
    for _ in range(times):
        nxt = op(datum, pi, j)
        if nxt is None:
            raise NotLSPathError("root operator undefined inside S_j. [j={}] [path={}]".format(j, pi))
        pi = nxt
    return pi


def s_w(datum: AffineCartanDatum, pi: Path, word: Sequence[int]) -> Path:
    """S_w for w = r_{j_1} ... r_{j_k}; the rightmost letter acts first."""
    for j in reversed(tuple(word)):
        pi = s_j(datum, pi, j)
    return pi


def apply_ops(datum: AffineCartanDatum, pi: Path, ops: Sequence[Tuple[str, int]]) -> Optional[Path]:
    """Apply (op, j) pairs left to right; None as soon as one gives zero."""
    for op, j in ops:
        pi = root_op(datum, pi, op, j)
        if pi is None:
            return None
    return pi
