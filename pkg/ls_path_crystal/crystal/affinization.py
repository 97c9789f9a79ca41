import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from ..algebra import paths
from ..algebra.weights import in_W_orbit, reflection_closure
from ..core.errors import InvalidInputError, NotLSPathError, SignatureError
from ..core.utils import Rational, frac_str, json_output, to_fraction
from ..core.worker import run_batches
from ..type import constants
from ..type.path import Path
from ..type.report import VerificationReport
from ..type.weight import LevelZeroWeight
from .crystal_graph import Op
from .ls_crystal import LSCrystal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffElement:
    """eta (x) z^n with eta a vertex key of B(lambda)_cl."""

    eta: str
    n: Fraction

    def __post_init__(self):
        object.__setattr__(self, "n", to_fraction(self.n))

    @property
    def get_dict(self):
        return {"eta": self.eta, "n": frac_str(self.n)}

    @property
    def get_json(self):
        return json.dumps(self.get_dict)


class Affinization:
    def __init__(self, crystal: LSCrystal):
        if crystal.shape.is_zero:
            raise InvalidInputError("affinization needs a nonzero shape.")

        self.crystal = crystal
        self.datum = crystal.datum
        self.graph = crystal.classical_graph
        self.step = self.datum.a0_inverse

        self._lifts: Dict[str, Tuple[Path, Fraction]] = {}

    @property
    def d_lambda(self) -> int:
        return self.crystal.d_lambda

    @property
    def seed(self) -> str:
        return self.graph.seed

    def _shift(self, j: int) -> Fraction:
        return self.step if j == 0 else Fraction(0)

    def e(self, x: AffElement, j: int) -> Optional[AffElement]:
        eta = self.graph.e(x.eta, j)
        if eta is None:
            return None
        return AffElement(eta, x.n + self._shift(j))

    def f(self, x: AffElement, j: int) -> Optional[AffElement]:
        eta = self.graph.f(x.eta, j)
        if eta is None:
            return None
        return AffElement(eta, x.n - self._shift(j))

    def weight(self, x: AffElement) -> LevelZeroWeight:
        return LevelZeroWeight(self.graph.weights[x.eta].fin, x.n)

    def eps(self, x: AffElement, j: int) -> int:
        return self.graph.eps_j(x.eta, j)

    def phi(self, x: AffElement, j: int) -> int:
        return self.graph.phi_j(x.eta, j)

    def key(self, x: AffElement) -> str:
        return json_output([x.eta, frac_str(x.n)])

    def pi_eta_0_from_word(self, word: Sequence[Op]) -> Tuple[Path, Fraction]:
        """(pi - pi_{n' delta}, n') for pi = X pi_lambda."""
        pi = paths.apply_ops(self.datum, self.crystal.pi_lambda, word)
        if pi is None:
            raise NotLSPathError("operator word vanishes on pi_lambda. [word={}]".format(list(word)))
        n_prime = pi.endpoint.delta - self.crystal.lam.delta
        return paths.delta_shift(pi, -n_prime), n_prime

    def _lift(self, eta: str) -> Tuple[Path, Fraction]:
        if eta not in self._lifts:
            self._lifts[eta] = self.pi_eta_0_from_word(self.graph.word_to(eta))
        return self._lifts[eta]

    def pi_eta_0(self, eta: str) -> Path:
        return self._lift(eta)[0]

    def n_prime(self, eta: str) -> Fraction:
        return self._lift(eta)[1]

    def theta(self, x: AffElement) -> Path:
        return paths.delta_shift(self.pi_eta_0(x.eta), x.n)

    def condition_c(self, x: AffElement) -> bool:
        return ((self.n_prime(x.eta) - x.n) / self.d_lambda).denominator == 1

    def component_shift(self, x: AffElement) -> Fraction:
        """M in [0, d_lambda) with theta(x) in B_0(lambda + M delta)."""
        diff = x.n - self.n_prime(x.eta)
        d = self.d_lambda
        return diff - d * math.floor(diff / d)

    def in_principal_component(self, pi: Path) -> bool:
        lam = self.crystal.lam
        if not all(in_W_orbit(self.datum, nu, lam) for nu in pi.directions):
            return False
        try:
            return self.crystal.component_signature(pi).is_zero
        except (SignatureError, NotLSPathError):
            return False

    def slab(self, n_bound: Rational) -> List[Fraction]:
        k = math.floor(to_fraction(n_bound) / self.step)
        return [self.step * i for i in range(-k, k + 1)]

    def elements(self, n_bound: Rational, depth: Optional[int] = None) -> List[AffElement]:
        ns = self.slab(n_bound)
        if depth is None:
            return [AffElement(eta, n) for eta in self.graph.vertices for n in ns]

        low, high = ns[0], ns[-1]
        seen: Set[AffElement] = set(AffElement(self.seed, n) for n in ns)
        frontier = sorted(seen, key=lambda x: x.n)
        for _ in range(depth):
            nxt_frontier = []
            for x in frontier:
                for j in self.datum.index_set:
                    for y in (self.e(x, j), self.f(x, j)):
                        if y is not None and low <= y.n <= high and y not in seen:
                            seen.add(y)
                            nxt_frontier.append(y)
            frontier = nxt_frontier
        return sorted(seen, key=lambda x: (x.eta, x.n))

    def _check_vertex(self, eta: str) -> List[Tuple[str, str, Any]]:
        violations = []
        pi0, _ = self._lift(eta)

        if pi0.cl().key != eta:
            violations.append(("lift", "cl(pi0) differs from eta.", eta))
        if pi0.endpoint.delta != 0:
            violations.append(("lift", "pi0 weight has a delta part.", eta))

        for j in self.datum.index_set:
            for op, nxt, sign in [(paths.root_f, self.graph.f(eta, j), 1), (paths.root_e, self.graph.e(eta, j), -1)]:
                if nxt is None:
                    continue
                image = op(self.datum, pi0, j)
                expected = None if image is None else paths.delta_shift(image, sign * self._shift(j))
                if expected != self.pi_eta_0(nxt):
                    violations.append(("recursion", "pi0 recursion fails. [j={}]".format(j), eta))
        return violations

    def _check_elements(self, group: Tuple[str, List[AffElement]]) -> Dict[str, Any]:
        eta, xs = group
        violations = self._check_vertex(eta)
        thetas = []
        condition = 0

        for x in xs:
            image = self.theta(x)
            thetas.append((image.key, x))

            if image.endpoint != self.weight(x):
                violations.append(("weight", "theta does not preserve the weight.", x.get_dict))

            for j in self.datum.index_set:
                for aff_op, path_op in [(self.e, paths.root_e), (self.f, paths.root_f)]:
                    y = aff_op(x, j)
                    lhs = None if y is None else self.theta(y)
                    rhs = path_op(self.datum, image, j)
                    if lhs != rhs:
                        violations.append(("commute", "theta does not commute with the root operator. [j={}]".format(j),
                                           x.get_dict))

                if self.eps(x, j) != paths.epsilon(self.datum, image, j) or \
                        self.phi(x, j) != paths.phi(self.datum, image, j):
                    violations.append(("decoration", "theta does not preserve eps/phi. [j={}]".format(j), x.get_dict))

            c = self.condition_c(x)
            condition += int(c)
            if c != self.in_principal_component(image):
                violations.append(("condition_c", "condition (C) disagrees with B_0(lambda) membership.", x.get_dict))

        row = {
            "eta": eta,
            "n_prime": frac_str(self.n_prime(eta)),
            "elements": len(xs),
            "condition_c": condition,
        }
        return {"row": row, "thetas": thetas, "violations": violations}

    def check_component_lemma(self, n_bound: Rational) -> List[Tuple[int, int]]:
        """Pairs (M1, M2) where reflection reachability of lambda + M1 delta from lambda + M2 delta
        disagrees with M1 - M2 in d_lambda Z."""
        lam = self.crystal.lam
        top = math.floor(to_fraction(n_bound))
        failures = []
        for m2 in range(top + 1):
            reached = reflection_closure(self.datum, lam.shift(m2), top)
            for m1 in range(top + 1):
                member = lam.shift(m1) in reached
                if member != ((m1 - m2) % self.d_lambda == 0):
                    failures.append((m1, m2))
        return failures

    def verify_theta(self, n_bound: Optional[Rational] = None, depth: Optional[int] = None) -> VerificationReport:
        if n_bound is None:
            n_bound = constants.N_BOUND_FACTOR * self.d_lambda
        n_bound = to_fraction(n_bound)

        params = dict(self.crystal.params, nbound=frac_str(n_bound))
        if depth is not None:
            params["depth"] = depth
        report = VerificationReport(constants.REPORT_THETA, params)
        report.extra["d_lambda"] = self.d_lambda

        xs = self.elements(n_bound, depth)
        groups: Dict[str, List[AffElement]] = {}
        for x in xs:
            groups.setdefault(x.eta, []).append(x)
        for eta in self.graph.vertices:
            self._lift(eta)
            groups.setdefault(eta, [])

        results = run_batches(self._check_elements, sorted(groups.items()), self.crystal.threads, "vertices")

        preimage: Dict[str, AffElement] = {}
        for res in results:
            report.add_row(res["row"])
            for check, message, witness in res["violations"]:
                report.violate(check, message, witness)
            for key, x in res["thetas"]:
                if key in preimage and preimage[key] != x:
                    report.violate("injective", "theta is not injective.", [preimage[key].get_dict, x.get_dict])
                preimage.setdefault(key, x)

        for m1, m2 in self.check_component_lemma(n_bound):
            report.violate("component_lemma", "straight-line membership disagrees with d_lambda.", [m1, m2])

        report.extra["elements"] = len(xs)
        return report
