import json
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from ..core.errors import InvalidInputError, NotComparableError
from ..core.utils import Rational, to_fraction
from ..type.roots import PositiveRealRoot, RootKind
from ..type.weight import DominantShape, LevelZeroWeight
from .affine_data import AffineCartanDatum, d_i, in_q_plus, positive_real_roots_up_to, q_plus_coords
from .weights import pairing_coroot, reflect

logger = logging.getLogger(__name__)

Budget = Tuple[Fraction, ...]
Step = Tuple[PositiveRealRoot, Fraction, LevelZeroWeight]


class ChainCertificate:
    def __init__(self, weights: Tuple[LevelZeroWeight, ...], roots: Tuple[PositiveRealRoot, ...]):
        self.weights = tuple(weights)
        self.roots = tuple(roots)

    @property
    def length(self) -> int:
        return len(self.roots)

    def validate(self, datum: AffineCartanDatum) -> bool:
        if len(self.weights) != len(self.roots) + 1:
            return False

        for a, b, xi in zip(self.weights, self.weights[1:], self.roots):
            if step_roots(datum, a, b) != [xi]:
                return False

        return True

    @property
    def get_dict(self):
        return {
            "weights": [w.get_dict for w in self.weights],
            "roots": [r.get_dict for r in self.roots],
        }

    @property
    def get_json(self):
        return json.dumps(self.get_dict)


def is_dist_one_shape(xi: PositiveRealRoot) -> bool:
    """beta, -beta + c delta or (-beta + delta)/2 with beta positive."""
    if xi.kind == RootKind.FULL:
        return (xi.sign > 0 and xi.n == 0) or (xi.sign < 0 and xi.n == 1)
    return xi.sign < 0 and xi.n == 1


def step_roots(datum: AffineCartanDatum, a: LevelZeroWeight, b: LevelZeroWeight) -> List[PositiveRealRoot]:
    """All positive real roots xi with r_xi(a) = b and a(xi^vee) < 0."""
    coords = q_plus_coords(datum, b - a)
    if not in_q_plus(coords) or a == b:
        return []

    found = []
    for xi in positive_real_roots_up_to(datum, coords[0] / datum.a0):
        if pairing_coroot(datum, a, xi) < 0 and reflect(datum, a, xi) == b:
            found.append(xi)
    return found


class ChainOrder:
    """Chain searches over the finite interval {tau : tau - mu, nu - tau in Q_+}; memo tables live per instance."""

    def __init__(self, datum: AffineCartanDatum):
        self.datum = datum

        self._longest_memo: Dict[Tuple[LevelZeroWeight, LevelZeroWeight], Optional[int]] = {}
        self._sigma_memo: Dict[Tuple[LevelZeroWeight, LevelZeroWeight, Fraction], Optional[Tuple[Step, ...]]] = {}
        self._root_coords: Dict[PositiveRealRoot, Budget] = {}

    def _budget(self, tau: LevelZeroWeight, target: LevelZeroWeight) -> Optional[Budget]:
        coords = q_plus_coords(self.datum, target - tau)
        if not in_q_plus(coords):
            return None
        return coords

    def _coords_of(self, xi: PositiveRealRoot) -> Budget:
        if xi not in self._root_coords:
            self._root_coords[xi] = q_plus_coords(self.datum, xi.as_weight())
        return self._root_coords[xi]

    def _steps(self, tau: LevelZeroWeight, target: LevelZeroWeight) -> Iterator[Step]:
        budget = self._budget(tau, target)
        if budget is None:
            return

        for xi in positive_real_roots_up_to(self.datum, budget[0] / self.datum.a0):
            if any(x > b for x, b in zip(self._coords_of(xi), budget)):
                continue
            p = pairing_coroot(self.datum, tau, xi)
            if p >= 0:
                continue
            nxt = tau - xi.as_weight() * p
            if self._budget(nxt, target) is None:
                continue
            yield xi, p, nxt

    def _longest(self, tau: LevelZeroWeight, target: LevelZeroWeight) -> Optional[int]:
        if tau == target:
            return 0

        key = (tau, target)
        if key in self._longest_memo:
            return self._longest_memo[key]

        best = None
        for _, _, nxt in self._steps(tau, target):
            rest = self._longest(nxt, target)
            if rest is not None and (best is None or rest + 1 > best):
                best = rest + 1

        self._longest_memo[key] = best
        return best

    def greater(self, mu: LevelZeroWeight, nu: LevelZeroWeight) -> Optional[ChainCertificate]:
        if self._longest(mu, nu) is None:
            return None

        weights = [mu]
        roots = []
        tau = mu
        while tau != nu:
            for xi, _, nxt in self._steps(tau, nu):
                if self._longest(nxt, nu) is not None:
                    weights.append(nxt)
                    roots.append(xi)
                    tau = nxt
                    break

        return ChainCertificate(tuple(weights), tuple(roots))

    def dist(self, mu: LevelZeroWeight, nu: LevelZeroWeight) -> int:
        k = self._longest(mu, nu)
        if k is None:
            raise NotComparableError("weights are not comparable. [mu={}] [nu={}]".format(mu, nu))
        return k

    def _sigma(self, tau: LevelZeroWeight, target: LevelZeroWeight, sigma: Fraction) -> Optional[Tuple[Step, ...]]:
        if tau == target:
            return ()

        key = (tau, target, sigma)
        if key in self._sigma_memo:
            return self._sigma_memo[key]

        result = None
        for xi, p, nxt in self._steps(tau, target):
            if not is_dist_one_shape(xi) or (p * sigma).denominator != 1:
                continue
            if self._longest(tau, nxt) != 1:
                continue
            rest = self._sigma(nxt, target, sigma)
            if rest is not None:
                result = ((xi, p, nxt),) + rest
                break

        self._sigma_memo[key] = result
        return result

    def has_sigma_chain(self, mu: LevelZeroWeight, nu: LevelZeroWeight, sigma: Rational) -> Optional[ChainCertificate]:
        sigma = to_fraction(sigma)
        if not 0 < sigma < 1:
            raise InvalidInputError("sigma must lie in (0, 1). [sigma={}]".format(sigma))

        steps = self._sigma(mu, nu, sigma)
        if steps is None:
            return None

        weights = (mu,) + tuple(nxt for _, _, nxt in steps)
        roots = tuple(xi for xi, _, _ in steps)
        return ChainCertificate(weights, roots)


def greater(datum: AffineCartanDatum, mu: LevelZeroWeight, nu: LevelZeroWeight) -> Optional[ChainCertificate]:
    return ChainOrder(datum).greater(mu, nu)


def dist(datum: AffineCartanDatum, mu: LevelZeroWeight, nu: LevelZeroWeight) -> int:
    return ChainOrder(datum).dist(mu, nu)


def has_sigma_chain(datum: AffineCartanDatum, mu: LevelZeroWeight, nu: LevelZeroWeight,
                    sigma: Rational) -> Optional[ChainCertificate]:
    return ChainOrder(datum).has_sigma_chain(mu, nu, sigma)


def divisible_support(shape: DominantShape, p: int) -> Tuple[int, ...]:
    """{i : m_i in pZ}, zero multiplicities included."""
    if p < 1:
        raise InvalidInputError("p must be positive. [p={}]".format(p))
    return tuple(i for i in range(1, shape.rank + 1) if shape.m(i) % p == 0)


def criterion_generators(datum: AffineCartanDatum, shape: DominantShape, p: int) -> Tuple[int, ...]:
    return tuple(sorted(set(shape.m(i) * d_i(datum, i) for i in divisible_support(shape, p) if shape.m(i) > 0)))


def sigma_chain_criterion(datum: AffineCartanDatum, shape: DominantShape, p: int, q: int, N: Rational) -> bool:
    """N in the monoid generated by m_j d_j over j with m_j in pZ."""
    if not 1 <= q < p:
        raise InvalidInputError("expected 1 <= q < p. [p={}] [q={}]".format(p, q))
    if Fraction(q, p).denominator != p:
        raise InvalidInputError("q/p must be in lowest terms. [p={}] [q={}]".format(p, q))

    N = to_fraction(N)
    if N < 0 or N.denominator != 1:
        return False
    target = int(N)

    reachable = [False] * (target + 1)
    reachable[0] = True
    for g in criterion_generators(datum, shape, p):
        for v in range(g, target + 1):
            if reachable[v - g]:
                reachable[v] = True

    return reachable[target]
