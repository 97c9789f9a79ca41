import json
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple, Union

import sympy

from ..core.errors import InvalidInputError, LSCrystalError, NotARootError, UnsupportedTypeError
from ..core.utils import frac_str
from ..type import constants
from ..type.affine_type import AffineType
from ..type.roots import FiniteRoot, PositiveRealRoot, RootKind
from ..type.weight import LevelZeroWeight

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]


def _chain(size: int) -> List[List[int]]:
    a = [[0] * size for _ in range(size)]
    for i in range(size):
        a[i][i] = 2
        if i + 1 < size:
            a[i][i + 1] = -1
            a[i + 1][i] = -1
    return a


def _forked(rank: int) -> List[List[int]]:
    """Nodes 0 and 1 both attached to node 2, then a chain 2 - 3 - ... - rank."""
    a = _chain(rank + 1)
    a[0][1] = a[1][0] = 0
    a[0][2] = a[2][0] = -1
    return a


def _table(t: AffineType) -> Tuple[List[List[int]], List[int], List[int]]:
    """Cartan matrix, marks and comarks with the special vertex 0 first."""
    ell = t.rank
    f = t.family

    if t.twist == 1:
        if f == constants.FAMILY_A:
            if ell == 1:
                return [[2, -2], [-2, 2]], [1, 1], [1, 1]
            a = _chain(ell + 1)
            a[0][ell] = a[ell][0] = -1
            return a, [1] * (ell + 1), [1] * (ell + 1)

        if f == constants.FAMILY_B:
            a = _forked(ell)
            a[ell][ell - 1] = -2
            marks = [1, 1] + [2] * (ell - 1)
            comarks = [1, 1] + [2] * (ell - 2) + [1]
            return a, marks, comarks

        if f == constants.FAMILY_C:
            a = _chain(ell + 1)
            a[1][0] = -2
            a[ell - 1][ell] = -2
            marks = [1] + [2] * (ell - 1) + [1]
            return a, marks, [1] * (ell + 1)

        if f == constants.FAMILY_D:
            a = [[2 if i == j else 0 for j in range(5)] for i in range(5)]
            for leaf in (0, 1, 3, 4):
                a[leaf][2] = a[2][leaf] = -1
            return a, [1, 1, 2, 1, 1], [1, 1, 2, 1, 1]

        if f == constants.FAMILY_F:
            a = _chain(5)
            a[3][2] = -2
            return a, [1, 2, 3, 4, 2], [1, 2, 3, 2, 1]

        if f == constants.FAMILY_G:
            a = _chain(3)
            a[2][1] = -3
            return a, [1, 2, 3], [1, 2, 1]

    if t.twist == 2:
        if t.is_a_even_twisted:
            if ell == 1:
                return [[2, -4], [-1, 2]], [2, 1], [1, 2]
            a = _chain(ell + 1)
            a[0][1] = -2
            a[ell - 1][ell] = -2
            marks = [2] * ell + [1]
            comarks = [1] + [2] * ell
            return a, marks, comarks

        if f == constants.FAMILY_A:
            a = _forked(ell)
            a[ell - 1][ell] = -2
            marks = [1, 1] + [2] * (ell - 2) + [1]
            comarks = [1, 1] + [2] * (ell - 1)
            return a, marks, comarks

        if f == constants.FAMILY_D:
            a = _chain(ell + 1)
            a[0][1] = -2
            a[ell][ell - 1] = -2
            comarks = [1] + [2] * (ell - 1) + [1]
            return a, [1] * (ell + 1), comarks

        if f == constants.FAMILY_E:
            a = _chain(5)
            a[2][3] = -2
            return a, [1, 2, 3, 2, 1], [1, 2, 3, 4, 2]

    if t.twist == 3 and f == constants.FAMILY_D:
        a = _chain(3)
        a[1][2] = -3
        return a, [1, 2, 1], [1, 2, 3]

    raise UnsupportedTypeError("unknown affine type. [label={}]".format(t.label))


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


@dataclass(frozen=True)
class AffineCartanDatum:
    affine_type: AffineType
    cartan: Matrix
    marks: Tuple[int, ...]
    comarks: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.affine_type.rank

    @property
    def index_set(self) -> Tuple[int, ...]:
        return tuple(range(self.rank + 1))

    @property
    def finite_index_set(self) -> Tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def a0(self) -> int:
        return self.marks[0]

    @property
    def a0_inverse(self) -> Fraction:
        return Fraction(1, self.marks[0])

    def a(self, i: int, j: int) -> int:
        return self.cartan[i][j]

    @cached_property
    def norms(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(2 * self.comarks[j], self.marks[j]) for j in self.index_set)

    @cached_property
    def gram_fin(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(
            tuple(Fraction(self.cartan[i][j] * self.comarks[i], self.marks[i]) for j in self.finite_index_set)
            for i in self.finite_index_set
        )

    @cached_property
    def cartan_fin_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        m = sympy.Matrix([[self.cartan[i][j] for j in self.finite_index_set] for i in self.finite_index_set])
        inv = m.inv()
        return tuple(tuple(_to_fraction(inv[r, c]) for c in range(self.rank)) for r in range(self.rank))

    def inner(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        g = self.gram_fin
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj != 0:
                    total += xi * g[i][j] * yj
        return total

    def pairing_coords(self, fin: Sequence[Fraction], j: int) -> Fraction:
        """<nu, h_j> for nu = sum_k fin_k alpha_k; the null root pairs to zero."""
        row = self.cartan[j]
        return sum((Fraction(row[k + 1]) * x for k, x in enumerate(fin) if x != 0), Fraction(0))

    @cached_property
    def finite_roots(self) -> Tuple[FiniteRoot, ...]:
        rank = self.rank
        simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]

        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for j in self.finite_index_set:
                p = int(self.pairing_coords(beta, j))
                if p == 0:
                    continue
                image = tuple(c - p if k == j - 1 else c for k, c in enumerate(beta))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)

        roots = [FiniteRoot(c) for c in seen]
        positive = sorted([r for r in roots if r.positive], key=lambda r: (r.height, r.coords))
        negative = [-r for r in positive]
        return tuple(positive + negative)

    @cached_property
    def positive_finite_roots(self) -> Tuple[FiniteRoot, ...]:
        return tuple(r for r in self.finite_roots if r.positive)

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(r.coords for r in self.finite_roots)

    def is_root(self, beta: FiniteRoot) -> bool:
        return beta.coords in self._root_set

    def root_norm(self, beta: FiniteRoot) -> Fraction:
        c = [Fraction(x) for x in beta.coords]
        return self.inner(c, c)

    @cached_property
    def long_norm(self) -> Fraction:
        return max(self.root_norm(r) for r in self.positive_finite_roots)

    @cached_property
    def theta(self) -> FiniteRoot:
        return FiniteRoot(tuple(self.marks[1:]))

    @property
    def get_dict(self):
        return {
            "type": self.affine_type.label,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "marks": list(self.marks),
            "comarks": list(self.comarks),
            "gram_fin": [[frac_str(x) for x in row] for row in self.gram_fin],
            "theta": list(self.theta.coords),
        }

    @property
    def get_json(self):
        return json.dumps(self.get_dict)


def _check_datum(d: AffineCartanDatum):
    label = d.affine_type.label
    size = d.rank + 1
    a = d.cartan

    if len(a) != size or any(len(row) != size for row in a):
        raise LSCrystalError("cartan matrix has wrong shape. [label={}]".format(label))

    for i in range(size):
        if a[i][i] != 2:
            raise LSCrystalError("cartan diagonal must be 2. [label={}] [i={}]".format(label, i))
        for j in range(size):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                raise LSCrystalError("cartan matrix is not generalized. [label={}] [i={}] [j={}]".format(label, i, j))

    for i in range(size):
        if sum(a[i][j] * d.marks[j] for j in range(size)) != 0:
            raise LSCrystalError("marks are not a null vector. [label={}] [row={}]".format(label, i))
    for j in range(size):
        if sum(d.comarks[i] * a[i][j] for i in range(size)) != 0:
            raise LSCrystalError("comarks are not a left null vector. [label={}] [column={}]".format(label, j))

    if d.comarks[0] != 1:
        raise LSCrystalError("comark of the special vertex must be 1. [label={}]".format(label))
    expected_a0 = 2 if d.affine_type.is_a_even_twisted else 1
    if d.marks[0] != expected_a0:
        raise LSCrystalError("unexpected mark of the special vertex. [label={}] [a0={}]".format(label, d.marks[0]))

    null = sympy.Matrix([list(row) for row in a]).nullspace()
    if len(null) != 1:
        raise LSCrystalError("cartan matrix must have corank 1. [label={}]".format(label))
    v = null[0]
    scale = sympy.Rational(d.marks[0]) / v[0]
    if [scale * x for x in v] != [sympy.Integer(m) for m in d.marks]:
        raise LSCrystalError("marks disagree with the null space. [label={}]".format(label))

    gram = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in d.gram_fin])
    if gram != gram.T:
        raise LSCrystalError("bilinear form is not symmetric. [label={}]".format(label))
    if not gram.is_positive_definite:
        raise LSCrystalError("bilinear form is not positive definite. [label={}]".format(label))

    for k, j in enumerate(d.finite_index_set):
        if d.gram_fin[k][k] != d.norms[j]:
            raise LSCrystalError("simple root norm mismatch. [label={}] [j={}]".format(label, j))

    if not d.is_root(d.theta):
        raise LSCrystalError("theta is not a finite root. [label={}] [theta={}]".format(label, d.theta.coords))


@lru_cache(maxsize=None)
def _build(t: AffineType) -> AffineCartanDatum:
    cartan, marks, comarks = _table(t)
    d = AffineCartanDatum(
        affine_type=t,
        cartan=tuple(tuple(row) for row in cartan),
        marks=tuple(marks),
        comarks=tuple(comarks),
    )
    _check_datum(d)
    logger.debug("datum built. [type={}] [roots={}]".format(t.label, len(d.finite_roots)))
    return d


def build_datum(t: Union[AffineType, str]) -> AffineCartanDatum:
    if isinstance(t, str):
        t = AffineType.parse(t)
    return _build(t)


def finite_roots(datum: AffineCartanDatum) -> Tuple[FiniteRoot, ...]:
    return datum.finite_roots


def norm(datum: AffineCartanDatum, j: int) -> Fraction:
    return datum.norms[j]


def is_long(datum: AffineCartanDatum, beta: FiniteRoot) -> bool:
    return datum.root_norm(beta) == datum.long_norm


def c_beta(datum: AffineCartanDatum, beta: FiniteRoot) -> Fraction:
    if not datum.is_root(beta):
        raise NotARootError("not a finite root. [type={}] [beta={}]".format(datum.affine_type.label, beta.coords))
    return max(Fraction(1), datum.root_norm(beta) / 2)


def d_i(datum: AffineCartanDatum, i: int) -> int:
    if i not in datum.finite_index_set:
        raise InvalidInputError("index outside I_0. [type={}] [i={}]".format(datum.affine_type.label, i))
    if datum.affine_type.is_a_even_twisted and i == datum.rank:
        return 1
    c = c_beta(datum, simple_finite_root(datum, i))
    return int(c)


def simple_finite_root(datum: AffineCartanDatum, i: int) -> FiniteRoot:
    return FiniteRoot(tuple(1 if k == i else 0 for k in datum.finite_index_set))


@lru_cache(maxsize=None)
def _real_roots_up_to(datum: AffineCartanDatum, bound: Fraction) -> Tuple[PositiveRealRoot, ...]:
    roots: List[PositiveRealRoot] = []

    for beta in datum.positive_finite_roots:
        c = c_beta(datum, beta)
        n = 0
        while n * c <= bound:
            roots.append(PositiveRealRoot(RootKind.FULL, beta, n, c))
            n += 1
        n = 1
        while n * c <= bound:
            roots.append(PositiveRealRoot(RootKind.FULL, -beta, n, c))
            n += 1

    if datum.affine_type.is_a_even_twisted:
        for beta in datum.finite_roots:
            if not is_long(datum, beta):
                continue
            n = 1
            while Fraction(2 * n - 1, 2) <= bound:
                roots.append(PositiveRealRoot(RootKind.HALF, beta, n, c_beta(datum, beta)))
                n += 1

    roots.sort(key=lambda r: r.sort_key)
    return tuple(roots)


def positive_real_roots_up_to(datum: AffineCartanDatum, max_delta_degree) -> Tuple[PositiveRealRoot, ...]:
    bound = Fraction(max_delta_degree)
    if bound < 0:
        raise InvalidInputError("delta degree bound must be nonnegative. [bound={}]".format(bound))
    return _real_roots_up_to(datum, bound)


def finite_part(xi: PositiveRealRoot) -> FiniteRoot:
    return xi.finite_part


def theta(datum: AffineCartanDatum) -> FiniteRoot:
    return datum.theta


def simple_root(datum: AffineCartanDatum, j: int, classical: bool = False) -> LevelZeroWeight:
    """alpha_j as a level-zero weight; alpha_0 = (delta - theta) / a_0."""
    if j not in datum.index_set:
        raise InvalidInputError("index outside I. [type={}] [j={}]".format(datum.affine_type.label, j))
    if j == 0:
        inv = datum.a0_inverse
        fin = tuple(-inv * c for c in datum.theta.coords)
        return LevelZeroWeight(fin, Fraction(0) if classical else inv)
    return simple_finite_root(datum, j).as_weight()


def q_plus_coords(datum: AffineCartanDatum, nu: LevelZeroWeight) -> Tuple[Fraction, ...]:
    """Coordinates of nu in the basis alpha_0, ..., alpha_l."""
    y = nu.delta
    head = datum.a0 * y
    tail = tuple(x + y * datum.marks[k + 1] for k, x in enumerate(nu.fin))
    return (head,) + tail


def in_q_plus(coords: Sequence[Fraction]) -> bool:
    return all(c >= 0 and c.denominator == 1 for c in coords)


def describe(datum: AffineCartanDatum) -> Dict:
    obj = datum.get_dict
    obj["d"] = [d_i(datum, i) for i in datum.finite_index_set]
    obj["positive_roots"] = [list(r.coords) for r in datum.positive_finite_roots]
    return obj
