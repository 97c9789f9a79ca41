import itertools
import json
import logging
import random
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from ..algebra import paths
from ..algebra.affine_data import AffineCartanDatum, simple_root
from ..algebra.chain_order import ChainCertificate, ChainOrder, divisible_support, sigma_chain_criterion
from ..algebra.weights import d_lambda, from_shape, in_W_orbit, weyl_word
from ..core.errors import CapExceededError, InvalidInputError, NotLSPathError, SignatureError, WeightError
from ..core.utils import frac_list, frac_str
from ..core.worker import run_batches
from ..type import constants
from ..type.path import ClPath, Path
from ..type.report import VerificationReport
from ..type.weight import DominantShape, LevelZeroWeight
from .crystal_graph import (CrystalGraph, PathCrystalOps, closure_of, connected, generate_closure,
                            generate_depth_bounded, graph_extremal_set, nx_isomorphic, rooted_isomorphic,
                            tensor, tensor_power, tensor_raise)

logger = logging.getLogger(__name__)


def turn_set(shape: DominantShape) -> Tuple[Fraction, ...]:
    points = set()
    for i in shape.support:
        m = shape.m(i)
        for q in range(1, m):
            points.add(Fraction(q, m))
    return tuple(sorted(points))


def I0_lambda_p(shape: DominantShape, p: int) -> Tuple[int, ...]:
    return divisible_support(shape, p)


class ComponentSignature:
    def __init__(self, values: Sequence[int]):
        self.values = tuple(int(v) for v in values)

    def __eq__(self, other):
        return isinstance(other, ComponentSignature) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __len__(self):
        return len(self.values)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    @property
    def get_dict(self):
        return list(self.values)

    @property
    def get_json(self):
        return json.dumps(self.get_dict)

    def __str__(self):
        return "({})".format(",".join(str(v) for v in self.values))


class LSCheck:
    def __init__(self, ok: bool, certificates: List[ChainCertificate] = None, reason: str = None):
        self.ok = ok
        self.certificates = certificates if certificates is not None else []
        self.reason = reason

    def __bool__(self):
        return self.ok

    @property
    def get_dict(self):
        obj = {"ok": self.ok}
        if self.reason is not None:
            obj["reason"] = self.reason
        obj["certificates"] = [c.get_dict for c in self.certificates]
        return obj


def is_ls_path(datum: AffineCartanDatum, pi: Path, lam: LevelZeroWeight, chains: ChainOrder = None) -> LSCheck:
    if pi.classical:
        raise InvalidInputError("LS membership is decided on P-paths.")

    chains = chains if chains is not None else ChainOrder(datum)

    for nu in pi.directions:
        if not in_W_orbit(datum, nu, lam):
            return LSCheck(False, reason="direction outside the Weyl orbit. [nu={}]".format(nu))

    certificates = []
    for u in range(1, pi.length):
        sigma = pi.breaks[u]
        cert = chains.has_sigma_chain(pi.directions[u - 1], pi.directions[u], sigma)
        if cert is None:
            return LSCheck(False, certificates, reason="no sigma-chain. [u={}] [sigma={}]".format(u, sigma))
        certificates.append(cert)

    return LSCheck(True, certificates)


class LSCrystal:
    def __init__(self, datum: AffineCartanDatum, shape: DominantShape, cap: int = constants.DEFAULT_CAP,
                 threads: Optional[int] = None):
        if shape.rank != datum.rank:
            raise InvalidInputError("shape length does not match rank. [shape={}] [rank={}]".format(
                shape.label, datum.rank))

        self.datum = datum
        self.shape = shape
        self.cap = cap
        self.threads = threads

        self.lam = from_shape(datum, shape)
        self.turn = turn_set(shape)
        self.ops = PathCrystalOps(datum)
        self.pi_lambda = Path.straight(self.lam)

        self._weyl_words: Dict[Fraction, Tuple[int, ...]] = {}

    @property
    def params(self) -> Dict[str, Any]:
        return {"type": self.datum.affine_type.label, "shape": self.shape.get_dict}

    @cached_property
    def d_lambda(self) -> Optional[int]:
        if self.shape.is_zero:
            return None
        return d_lambda(self.datum, self.shape)

    @cached_property
    def classical_graph(self) -> CrystalGraph:
        g = generate_closure(self.pi_lambda.cl(), self.ops, self.cap)
        logger.info("classical crystal generated. [type={}] [shape={}] [vertices={}]".format(
            self.datum.affine_type.label, self.shape.label, len(g)))
        return g

    def is_ls_path(self, pi: Path, lam: LevelZeroWeight = None, chains: ChainOrder = None) -> LSCheck:
        return is_ls_path(self.datum, pi, lam if lam is not None else self.lam, chains)

    def check_signature(self, sig: ComponentSignature):
        if len(sig) != len(self.turn):
            raise SignatureError("signature length must match Turn(lambda). [length={}] [turn={}]".format(
                len(sig), len(self.turn)))

        values = sig.values + (0,)
        for u, tau in enumerate(self.turn, start=1):
            if values[u - 1] < 0:
                raise SignatureError("signature entries must be nonnegative. [u={}]".format(u), index=u)
            diff = values[u - 1] - values[u]
            if not sigma_chain_criterion(self.datum, self.shape, tau.denominator, tau.numerator, diff):
                raise SignatureError("difference outside the monoid. [u={}] [tau={}] [diff={}]".format(
                    u, tau, diff), index=u)

    def canonical_extremal(self, sig: ComponentSignature) -> Path:
        """(lambda - N_1 delta, ..., lambda - N_{s-1} delta, lambda; 0, tau_1, ..., tau_{s-1}, 1)."""
        self.check_signature(sig)
        dirs = [self.lam.shift(-n) for n in sig.values] + [self.lam]
        breaks = (Fraction(0),) + self.turn + (Fraction(1),)
        return Path.canonicalize(dirs, breaks)

    def _weyl_word_to_shift(self, n: Fraction) -> Tuple[int, ...]:
        if n not in self._weyl_words:
            self._weyl_words[n] = weyl_word(self.datum, self.lam, self.lam.shift(n))
        return self._weyl_words[n]

    def component_signature(self, pi: Path) -> ComponentSignature:
        g = self.classical_graph
        eta = pi.cl().key
        if eta not in g:
            raise NotLSPathError("classical projection is not in B(lambda)_cl. [path={}]".format(pi))

        inverse = [(constants.OP_E if op == constants.OP_F else constants.OP_F, j) for op, j in reversed(g.word_to(eta))]
        lifted = paths.apply_ops(self.datum, pi, inverse)
        if lifted is None:
            raise NotLSPathError("operator word undefined on the lift. [path={}]".format(pi))

        last = self.lam.delta - lifted.directions[-1].delta
        try:
            word = self._weyl_word_to_shift(last)
        except WeightError as e:
            raise NotLSPathError(str(e))
        normal = paths.s_w(self.datum, lifted, word)

        values = []
        points = (Fraction(0),) + self.turn
        for u in range(1, len(points)):
            nu = normal.direction_at((points[u - 1] + points[u]) / 2)
            n = self.lam.delta - nu.delta
            if nu.fin != self.lam.fin or n < 0 or n.denominator != 1:
                raise SignatureError("unexpected direction after normalization. [u={}] [nu={}]".format(u, nu), index=u)
            values.append(int(n))

        for u, t in enumerate(normal.breaks[1:-1], start=1):
            if t not in self.turn:
                raise SignatureError("breakpoint outside Turn(lambda). [t={}]".format(t), index=u)
        if normal.directions[-1] != self.lam:
            raise SignatureError("normalized path does not end with lambda. [nu={}]".format(normal.directions[-1]))

        return ComponentSignature(values)

    @cached_property
    def _extremal_cl(self) -> Dict[str, ClPath]:
        seed = self.pi_lambda.cl()
        elements = {seed.key: seed}

        def step(key):
            images = []
            for j in self.datum.index_set:
                image = paths.s_j(self.datum, elements[key], j)
                elements.setdefault(image.key, image)
                images.append(image.key)
            return images

        keys = closure_of([seed.key], step)
        return {k: elements[k] for k in keys}

    def extremal_cl_set(self) -> Set[str]:
        return set(self._extremal_cl.keys())

    def is_extremal(self, pi: Path) -> bool:
        return pi.cl().key in self._extremal_cl

    def valid_signatures(self, n_max: int) -> Tuple[List[ComponentSignature], List[Tuple[ComponentSignature, Optional[int]]]]:
        valid = []
        rejected = []
        for values in itertools.product(range(n_max + 1), repeat=len(self.turn)):
            sig = ComponentSignature(values)
            try:
                self.check_signature(sig)
                valid.append(sig)
            except SignatureError as e:
                rejected.append((sig, e.index))
        return valid, rejected

    def _component_unit(self, sig: ComponentSignature, depth: int) -> Dict[str, Any]:
        seed = self.canonical_extremal(sig)
        g = generate_depth_bounded(seed, self.ops, depth)
        shift = seed - self.pi_lambda

        violations = []
        extremal = 0
        for key in g.vertices:
            pi = g.elements[key]
            try:
                got = self.component_signature(pi)
            except (SignatureError, NotLSPathError) as e:
                violations.append(("signature", str(e), key))
                continue
            if got != sig:
                violations.append(("signature", "signature differs from seed. [got={}] [seed={}]".format(got, sig), key))

            if not self.is_extremal(pi):
                continue
            extremal += 1
            straight = pi - shift
            if straight.length != 1 or not in_W_orbit(self.datum, straight.directions[0], self.lam):
                violations.append(("extremal", "extremal vertex outside the orbit of the seed.", key))
                continue
            word = weyl_word(self.datum, self.lam, straight.directions[0])
            if paths.s_w(self.datum, seed, word) != pi:
                violations.append(("extremal", "S_w image of the seed differs. [word={}]".format(list(word)), key))

        weight_lambda = g.count_weight(self.lam)
        if weight_lambda > 1:
            violations.append(("weight_lambda", "more than one vertex of weight lambda. [count={}]".format(
                weight_lambda), None))

        return {
            "signature": sig,
            "keys": set(g.vertices),
            "row": {
                "signature": sig.get_dict,
                "vertices": len(g),
                "frontier": len(g.incomplete),
                "weight_lambda": weight_lambda,
                "extremal": extremal,
            },
            "violations": violations,
        }

    def verify_theorem_comps(self, depth: int = constants.DEFAULT_DEPTH,
                             n_max: int = constants.DEFAULT_N_MAX) -> VerificationReport:
        report = VerificationReport(constants.REPORT_COMPS, dict(self.params, depth=depth, nmax=n_max))
        report.extra["turn"] = frac_list(self.turn)

        valid, rejected = self.valid_signatures(n_max)
        report.extra["signatures"] = [s.get_dict for s in valid]
        report.extra["rejected"] = [{"signature": s.get_dict, "index": u} for s, u in rejected]

        for sig, _ in rejected:
            try:
                self.canonical_extremal(sig)
                report.violate("rejection", "invalid signature accepted.", sig.get_dict)
            except SignatureError:
                pass

        try:
            self.classical_graph
        except CapExceededError as e:
            report.partial = True
            report.note(str(e))
            return report
        self.extremal_cl_set()

        results = run_batches(lambda s: self._component_unit(s, depth), valid, self.threads, "signatures")

        owner: Dict[Any, ComponentSignature] = {}
        for res in results:
            report.add_row(res["row"])
            for check, message, key in res["violations"]:
                report.violate(check, message, {"signature": res["signature"].get_dict, "key": key})
            for key in sorted(res["keys"]):
                if key in owner:
                    report.violate("disjoint", "components share a vertex.", {
                        "signatures": [owner[key].get_dict, res["signature"].get_dict], "key": key})
                else:
                    owner[key] = res["signature"]

        report.note("components are checked on depth-bounded truncations; extremal vertices on bounded S_w words.")
        return report

    def _chain_unit(self, unit: Tuple[Fraction, int]) -> Dict[str, Any]:
        tau, n = unit
        chains = ChainOrder(self.datum)
        cert = chains.has_sigma_chain(self.lam, self.lam.shift(n), tau)
        criterion = sigma_chain_criterion(self.datum, self.shape, tau.denominator, tau.numerator, n)

        row = {"tau": frac_str(tau), "N": n, "oracle": cert is not None, "criterion": criterion}
        if cert is not None:
            row["certificate"] = cert.get_dict
            row["valid"] = cert.validate(self.datum)
        return row

    def verify_chains(self, n_max: int = constants.DEFAULT_N_MAX) -> VerificationReport:
        report = VerificationReport(constants.REPORT_CHAINS, dict(self.params, nmax=n_max))
        report.extra["turn"] = frac_list(self.turn)

        units = [(tau, n) for tau in self.turn for n in range(n_max + 1)]
        for row in run_batches(self._chain_unit, units, self.threads, "chain queries"):
            report.add_row(row)
            if row["oracle"] != row["criterion"]:
                report.violate("criterion", "oracle and criterion disagree.", {"tau": row["tau"], "N": row["N"]})
            if row.get("valid") is False:
                report.violate("certificate", "certificate does not validate.", {"tau": row["tau"], "N": row["N"]})

        if len(self.turn) == 0:
            report.note("Turn(lambda) is empty.")
        return report

    def _tensor_factors(self) -> List[CrystalGraph]:
        factors = []
        for i in self.shape.support:
            single = LSCrystal(self.datum, DominantShape.fundamental(self.datum.rank, i), self.cap, self.threads)
            factors.extend([single.classical_graph] * self.shape.m(i))
        return factors

    def _tensor_with_raise_check(self, factors: List[CrystalGraph], report: VerificationReport) -> CrystalGraph:
        if len(factors) == 1:
            return factors[0]

        left = tensor_power(factors[:-1])
        right = factors[-1]
        t = tensor(left, right)
        broken = [(src, j) for src, dst, j in t.edges if tensor_raise(left, right, t.elements[dst], j) != t.elements[src]]
        if broken:
            report.violate("tensor_rule", "e_j rule does not invert the f_j rule.", len(broken))
        return t

    def verify_simple(self) -> VerificationReport:
        report = VerificationReport(constants.REPORT_SIMPLE, self.params)

        try:
            g = self.classical_graph
        except CapExceededError as e:
            report.partial = True
            report.note(str(e))
            return report

        row: Dict[str, Any] = {"vertices": len(g), "edges": len(g.edges)}

        row["connected"] = connected(g)
        if not row["connected"]:
            report.violate("connected", "classical crystal is not connected.")

        row["weight_cl_lambda"] = g.count_weight(self.lam.cl())
        if row["weight_cl_lambda"] != 1:
            report.violate("simple", "expected exactly one vertex of weight cl(lambda).", row["weight_cl_lambda"])

        by_paths = self.extremal_cl_set()
        by_graph = graph_extremal_set(g)
        by_orbit = closure_of([g.seed], lambda k: [g.weyl_step(k, j) for j in g.index_set])
        row["extremal"] = len(by_paths)
        if not (by_paths == by_graph == by_orbit):
            report.violate("extremal", "extremal sets disagree.", {
                "paths": len(by_paths), "graph": len(by_graph), "orbit": len(by_orbit)})

        if self.shape.is_zero:
            row["tensor_order"] = None
            report.note("zero shape has no tensor factors.")
        else:
            factors = self._tensor_factors()
            order = None
            for flag, candidate in [(constants.TENSOR_ORDER_STATED, factors),
                                    (constants.TENSOR_ORDER_REVERSED, list(reversed(factors)))]:
                t = self._tensor_with_raise_check(candidate, report)
                if rooted_isomorphic(g, g.seed, t, t.seed) is not None:
                    order = flag
                    if len(g) < constants.FULL_CHECK_BELOW:
                        row["nx_isomorphic"] = nx_isomorphic(g, t)
                    break
            row["tensor_order"] = order
            if order is None:
                report.violate("tensor", "no tensor ordering is isomorphic to the classical crystal.")

        report.add_row(row)
        return report

    def _count_applications(self, pi: Path, op: str, j: int) -> int:
        count = 0
        bound = len(self.datum.finite_roots) * (sum(self.shape.multiplicities) + 1) * 4
        while count <= bound:
            pi = paths.root_op(self.datum, pi, op, j)
            if pi is None:
                return count
            count += 1
        return count

    def verify_axioms(self, depth: int = constants.DEFAULT_DEPTH, samples: int = constants.DEFAULT_SAMPLES,
                      seed: int = constants.DEFAULT_SEED) -> VerificationReport:
        report = VerificationReport(constants.REPORT_AXIOMS, dict(self.params, depth=depth, samples=samples, seed=seed))
        rng = random.Random(seed)

        g = generate_depth_bounded(self.pi_lambda, self.ops, depth)
        keys = g.vertices
        chosen = keys if len(keys) <= samples else sorted(rng.sample(keys, samples))
        full_check = len(g) < constants.FULL_CHECK_BELOW

        n_shift = self.datum.a0_inverse
        lam_shift = self.lam.shift(n_shift)
        chains = ChainOrder(self.datum)
        ls_checked = 0

        def fail(check, message, key, j=None):
            report.violate(check, message, {"key": key, "j": j})

        for key in chosen:
            pi = g.elements[key]
            eta = pi.cl()
            shifted = paths.delta_shift(pi, n_shift)

            for j in self.datum.index_set:
                alpha = simple_root(self.datum, j)
                f = paths.root_f(self.datum, pi, j)
                e = paths.root_e(self.datum, pi, j)

                if f is not None:
                    if paths.root_e(self.datum, f, j) != pi:
                        fail("inverse", "e_j f_j differs from the identity.", key, j)
                    if f.endpoint != pi.endpoint - alpha:
                        fail("weight", "f_j does not lower the weight by alpha_j.", key, j)
                    if full_check or rng.randrange(constants.SAMPLE_RATIO) == 0:
                        ls_checked += 1
                        if not self.is_ls_path(f, chains=chains):
                            fail("stable", "f_j output is not an LS path.", key, j)
                if e is not None:
                    if paths.root_f(self.datum, e, j) != pi:
                        fail("inverse", "f_j e_j differs from the identity.", key, j)
                    if e.endpoint != pi.endpoint + alpha:
                        fail("weight", "e_j does not raise the weight by alpha_j.", key, j)

                for op, image in [(paths.root_e, e), (paths.root_f, f)]:
                    cl_image = op(self.datum, eta, j)
                    if (image is None) != (cl_image is None) or (image is not None and image.cl() != cl_image):
                        fail("cl", "cl does not commute with the root operator.", key, j)
                    shifted_image = op(self.datum, shifted, j)
                    expected = None if image is None else paths.delta_shift(image, n_shift)
                    if shifted_image != expected:
                        fail("shift", "delta shift does not commute with the root operator.", key, j)

                eps = paths.epsilon(self.datum, pi, j)
                phi = paths.phi(self.datum, pi, j)
                if eps != self._count_applications(pi, constants.OP_E, j):
                    fail("epsilon", "epsilon differs from the number of e_j applications.", key, j)
                if phi != self._count_applications(pi, constants.OP_F, j):
                    fail("phi", "phi differs from the number of f_j applications.", key, j)

                if paths.s_j(self.datum, pi, j).cl() != paths.s_j(self.datum, eta, j):
                    fail("cl", "cl does not commute with S_j.", key, j)

            if full_check or rng.randrange(constants.SAMPLE_RATIO) == 0:
                ls_checked += 1
                if not self.is_ls_path(shifted, lam=lam_shift, chains=chains):
                    fail("shift", "shifted path is not in B(lambda + n delta).", key)

        report.add_row({"vertices": len(g), "sampled": len(chosen), "ls_checked": ls_checked})
        return report
