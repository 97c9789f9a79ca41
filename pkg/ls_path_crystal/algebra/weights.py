import logging
from collections import deque
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Dict, FrozenSet, Optional, Tuple

from ..core.errors import InvalidInputError, WeightError
from ..core.utils import Rational, to_fraction
from ..type import constants
from ..type.roots import PositiveRealRoot, RootKind
from ..type.weight import DominantShape, LevelZeroWeight
from .affine_data import AffineCartanDatum, d_i, simple_root

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def from_shape(datum: AffineCartanDatum, shape: DominantShape) -> LevelZeroWeight:
    """lambda = sum m_i varpi_i written over the finite simple roots."""
    if shape.rank != datum.rank:
        raise InvalidInputError("shape length does not match rank. [shape={}] [rank={}]".format(
            shape.label, datum.rank))

    inv = datum.cartan_fin_inverse
    m = shape.multiplicities
    fin = tuple(sum((inv[k][i] * m[i] for i in range(datum.rank)), Fraction(0)) for k in range(datum.rank))
    return LevelZeroWeight(fin, Fraction(0))


def fundamental_weight(datum: AffineCartanDatum, i: int) -> LevelZeroWeight:
    return from_shape(datum, DominantShape.fundamental(datum.rank, i))


def delta_weight(datum: AffineCartanDatum, n) -> LevelZeroWeight:
    return LevelZeroWeight.zero(datum.rank).shift(n)


def pairing_h(datum: AffineCartanDatum, nu: LevelZeroWeight, j: int) -> Fraction:
    return datum.pairing_coords(nu.fin, j)


def pairing_coroot(datum: AffineCartanDatum, nu: LevelZeroWeight, xi: PositiveRealRoot) -> Fraction:
    beta = [Fraction(c) for c in xi.beta.coords]
    value = 2 * datum.inner(nu.fin, beta) / datum.inner(beta, beta)
    if xi.kind == RootKind.HALF:
        return 2 * value
    return value


def reflect(datum: AffineCartanDatum, nu: LevelZeroWeight, xi: PositiveRealRoot) -> LevelZeroWeight:
    p = pairing_coroot(datum, nu, xi)
    if p == 0:
        return nu
    return nu - xi.as_weight() * p


def simple_reflect(datum: AffineCartanDatum, nu: LevelZeroWeight, j: int, classical: bool = False) -> LevelZeroWeight:
    p = pairing_h(datum, nu, j)
    if p == 0:
        return nu
    return nu - simple_root(datum, j, classical) * p


def fin_and_D(nu: LevelZeroWeight, lam: LevelZeroWeight) -> Tuple[Tuple[Fraction, ...], Fraction]:
    """Split nu = lam - alpha + n delta with alpha in the nonnegative finite cone."""
    if nu.rank != lam.rank:
        raise InvalidInputError("weight rank mismatch. [nu={}] [lambda={}]".format(nu.rank, lam.rank))

    alpha = tuple(a - b for a, b in zip(lam.fin, nu.fin))
    if any(x < 0 for x in alpha):
        raise WeightError("finite part outside the negative cone. [nu={}] [lambda={}]".format(nu, lam))

    return alpha, nu.delta - lam.delta


def shape_of(datum: AffineCartanDatum, lam: LevelZeroWeight) -> DominantShape:
    values = []
    for i in datum.finite_index_set:
        m = pairing_h(datum, lam, i)
        if m < 0 or m.denominator != 1:
            raise WeightError("weight is not dominant integral. [lambda={}] [i={}] [pairing={}]".format(lam, i, m))
        values.append(int(m))
    return DominantShape(tuple(values))


def d_lambda(datum: AffineCartanDatum, shape: DominantShape) -> int:
    if shape.is_zero:
        raise InvalidInputError("d_lambda is undefined for the zero shape.")
    return reduce(gcd, [shape.m(i) * d_i(datum, i) for i in shape.support])


@lru_cache(maxsize=None)
def _orbit_words(datum: AffineCartanDatum, lam: LevelZeroWeight) -> Tuple[Tuple[LevelZeroWeight, Word], ...]:
    words: Dict[LevelZeroWeight, Word] = {lam: ()}
    queue = deque([lam])

    while queue:
        nu = queue.popleft()
        for j in datum.finite_index_set:
            image = simple_reflect(datum, nu, j)
            if image not in words:
                words[image] = (j,) + words[nu]
                queue.append(image)

    return tuple(words.items())


def weyl_orbit_words(datum: AffineCartanDatum, lam: LevelZeroWeight) -> Dict[LevelZeroWeight, Word]:
    """W-bar orbit with a shortest word per element; w = (j_1, ..., j_k) means r_{j_1} ... r_{j_k}."""
    return dict(_orbit_words(datum, lam))


def weyl_orbit_fin(datum: AffineCartanDatum, lam: LevelZeroWeight) -> Tuple[LevelZeroWeight, ...]:
    return tuple(sorted((nu for nu, _ in _orbit_words(datum, lam.cl())), key=lambda nu: nu.sort_key))


def in_W_orbit(datum: AffineCartanDatum, nu: LevelZeroWeight, lam: LevelZeroWeight) -> bool:
    """lam must be dominant; W lam = W-bar lam + d_lambda Z delta, shifted by the delta part of lam."""
    shape = shape_of(datum, lam)
    if shape.is_zero:
        return nu == lam

    if nu.cl() not in dict(_orbit_words(datum, lam.cl())):
        return False

    offset = nu.delta - lam.delta
    d = d_lambda(datum, shape)
    return offset.denominator == 1 and offset.numerator % d == 0


def _window_margin(datum: AffineCartanDatum, source: LevelZeroWeight) -> Fraction:
    orbit = weyl_orbit_fin(datum, source)
    return max(abs(pairing_h(datum, mu, 0)) for mu in orbit) * datum.a0_inverse


def _weyl_word_search(datum: AffineCartanDatum, source: LevelZeroWeight, target: LevelZeroWeight,
                      low: Fraction, high: Fraction) -> Optional[Word]:
    words: Dict[LevelZeroWeight, Word] = {source: ()}
    queue = deque([source])

    while queue:
        nu = queue.popleft()
        if nu == target:
            return words[nu]
        for j in datum.index_set:
            image = simple_reflect(datum, nu, j)
            if image in words or image.delta < low or image.delta > high:
                continue
            words[image] = (j,) + words[nu]
            queue.append(image)

    return None


@lru_cache(maxsize=None)
def weyl_word(datum: AffineCartanDatum, source: LevelZeroWeight, target: LevelZeroWeight) -> Word:
    """A word w in the affine simple reflections with w(source) = target."""
    if source == target:
        return ()

    try:
        dominant = shape_of(datum, source.cl())
    except WeightError:
        dominant = None
    if dominant is not None and not in_W_orbit(datum, target, source):
        raise WeightError("target is not in the Weyl orbit. [source={}] [target={}]".format(source, target))

    margin = max(_window_margin(datum, source), Fraction(1))
    for _ in range(constants.WEYL_WINDOW_RETRIES):
        low = min(source.delta, target.delta) - margin
        high = max(source.delta, target.delta) + margin
        word = _weyl_word_search(datum, source, target, low, high)
        if word is not None:
            logger.debug("weyl word found. [source={}] [target={}] [length={}]".format(source, target, len(word)))
            return word
        margin *= 2

    raise WeightError("no weyl word inside the search window. [source={}] [target={}]".format(source, target))


def reflection_closure(datum: AffineCartanDatum, source: LevelZeroWeight, radius: Rational) -> FrozenSet[LevelZeroWeight]:
    """Weights reachable from source by affine simple reflections without leaving a delta window around it."""
    margin = 2 * max(_window_margin(datum, source), Fraction(1))
    low = source.delta - to_fraction(radius) - margin
    high = source.delta + to_fraction(radius) + margin

    seen = {source}
    queue = deque([source])
    while queue:
        nu = queue.popleft()
        for j in datum.index_set:
            image = simple_reflect(datum, nu, j)
            if image in seen or image.delta < low or image.delta > high:
                continue
            seen.add(image)
            queue.append(image)

    logger.debug("reflection closure built. [source={}] [size={}]".format(source, len(seen)))
    return frozenset(seen)


def apply_word(datum: AffineCartanDatum, nu: LevelZeroWeight, word: Word, classical: bool = False) -> LevelZeroWeight:
    for j in reversed(word):
        nu = simple_reflect(datum, nu, j, classical)
    return nu
