import json
import logging
from collections import deque
from functools import reduce
from typing import Any, Callable, Dict, Hashable, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..algebra import paths
from ..algebra.affine_data import AffineCartanDatum
from ..core.errors import CapExceededError, ExportFormatError, InvalidInputError
from ..core.utils import json_output
from ..type import constants
from ..type.path import Path
from ..type.weight import LevelZeroWeight

logger = logging.getLogger(__name__)

Key = Hashable
Op = Tuple[str, int]


class PathCrystalOps:
    """Crystal structure on P- or P_cl-paths through the root operators."""

    def __init__(self, datum: AffineCartanDatum):
        self.datum = datum

    @property
    def index_set(self) -> Tuple[int, ...]:
        return self.datum.index_set

    @property
    def rank(self) -> int:
        return self.datum.rank

    def key(self, pi: Path) -> str:
        return pi.key

    def e(self, pi: Path, j: int) -> Optional[Path]:
        return paths.root_e(self.datum, pi, j)

    def f(self, pi: Path, j: int) -> Optional[Path]:
        return paths.root_f(self.datum, pi, j)

    def weight(self, pi: Path) -> LevelZeroWeight:
        return paths.path_weight(pi)

    def eps(self, pi: Path, j: int) -> int:
        return paths.epsilon(self.datum, pi, j)

    def phi(self, pi: Path, j: int) -> int:
        return paths.phi(self.datum, pi, j)


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def _key_text(key: Key) -> str:
    if isinstance(key, tuple):
        return json_output(list(key))
    return key


def _key_json(key: Key):
    if isinstance(key, tuple):
        return list(key)
    return key


def _flatten(key: Key) -> Tuple:
    if isinstance(key, tuple):
        return key
    return (key,)


class CrystalGraph:
    def __init__(self, index_set: Sequence[int], rank: int):
        self.index_set = tuple(index_set)
        self.rank = rank

        self.graph = nx.MultiDiGraph()

        self.elements: Dict[Key, Any] = {}
        self.weights: Dict[Key, LevelZeroWeight] = {}
        self.eps: Dict[Key, Tuple[int, ...]] = {}
        self.phi: Dict[Key, Tuple[int, ...]] = {}

        self._f: Dict[Tuple[Key, int], Key] = {}
        self._e: Dict[Tuple[Key, int], Key] = {}

        self.parent: Dict[Key, Optional[Tuple[Key, str, int]]] = {}
        self.seed: Optional[Key] = None
        self.incomplete: Set[Key] = set()

    def __len__(self):
        return len(self.weights)

    def __contains__(self, key: Key) -> bool:
        return key in self.weights

    def add_vertex(self, key: Key, element: Any, weight: LevelZeroWeight, eps: Sequence[int], phi: Sequence[int]):
        if key in self.weights:
            return
        self.elements[key] = element
        self.weights[key] = weight
        self.eps[key] = tuple(eps)
        self.phi[key] = tuple(phi)
        self.graph.add_node(key)

    def add_edge(self, src: Key, dst: Key, j: int):
        """f_j(src) = dst."""
        if self._f.get((src, j)) == dst:
            return
        self._f[(src, j)] = dst
        self._e[(dst, j)] = src
        self.graph.add_edge(src, dst, key=j, j=j)

    @property
    def vertices(self) -> List[Key]:
        return sorted(self.weights.keys())

    @property
    def edges(self) -> List[Tuple[Key, Key, int]]:
        return sorted((src, dst, j) for (src, j), dst in self._f.items())

    def f(self, key: Key, j: int) -> Optional[Key]:
        return self._f.get((key, j))

    def e(self, key: Key, j: int) -> Optional[Key]:
        return self._e.get((key, j))

    def op(self, key: Key, op: str, j: int) -> Optional[Key]:
        if op == constants.OP_E:
            return self.e(key, j)
        return self.f(key, j)

    def eps_j(self, key: Key, j: int) -> int:
        return self.eps[key][self.index_set.index(j)]

    def phi_j(self, key: Key, j: int) -> int:
        return self.phi[key][self.index_set.index(j)]

    def _ensure_parents(self):
        if self.seed is None or len(self.parent) > 0:
            return

        self.parent[self.seed] = None
        queue = deque([self.seed])
        while queue:
            key = queue.popleft()
            for j in self.index_set:
                for op in (constants.OP_F, constants.OP_E):
                    nxt = self.op(key, op, j)
                    if nxt is not None and nxt not in self.parent:
                        self.parent[nxt] = (key, op, j)
                        queue.append(nxt)

    def word_to(self, key: Key) -> List[Op]:
        """Operators (op, j) that carry the seed to key, in application order."""
        self._ensure_parents()
        if key not in self.parent:
            raise InvalidInputError("vertex not reachable from the seed. [key={}]".format(_key_text(key)))

        word = []
        while self.parent[key] is not None:
            prev, op, j = self.parent[key]
            word.append((op, j))
            key = prev
        word.reverse()
        return word

    def weyl_step(self, key: Key, j: int) -> Key:
        """S_j through the edges: f_j^(phi - eps) or e_j^(eps - phi)."""
        n = self.phi_j(key, j) - self.eps_j(key, j)
        op = constants.OP_F if n >= 0 else constants.OP_E
        for _ in range(abs(n)):
            nxt = self.op(key, op, j)
            if nxt is None:
                raise InvalidInputError("S_j leaves the graph. [key={}] [j={}]".format(_key_text(key), j))
            key = nxt
        return key

    def count_weight(self, weight: LevelZeroWeight) -> int:
        return sum(1 for w in self.weights.values() if w == weight)

    @property
    def get_dict(self):
        obj = {}

        obj["vertices"] = [{
            "key": _key_json(key),
            "wt": self.weights[key].get_dict,
            "eps": list(self.eps[key]),
            "phi": list(self.phi[key]),
        } for key in self.vertices]

        obj["edges"] = [{"from": _key_json(src), "to": _key_json(dst), "j": j} for src, dst, j in self.edges]

        if self.seed is not None:
            obj["seed"] = _key_json(self.seed)
        if len(self.incomplete) > 0:
            obj["incomplete"] = [_key_json(key) for key in sorted(self.incomplete)]

        return obj

    @property
    def get_json(self):
        return json.dumps(self.get_dict)

    @classmethod
    def from_dict(cls, obj: Dict[str, Any], index_set: Sequence[int]) -> "CrystalGraph":
        def restore(k):
            return tuple(k) if isinstance(k, list) else k

        try:
            first = obj["vertices"][0]
            g = cls(index_set, len(first["wt"]["fin"]))
            for v in obj["vertices"]:
                key = restore(v["key"])
                g.add_vertex(key, key, LevelZeroWeight.from_dict(v["wt"]), v["eps"], v["phi"])
            for edge in obj["edges"]:
                g.add_edge(restore(edge["from"]), restore(edge["to"]), int(edge["j"]))
        except (KeyError, IndexError, TypeError) as e:
            raise InvalidInputError("malformed crystal graph. [error={}]".format(e))

        if "seed" in obj:
            g.seed = restore(obj["seed"])
        g.incomplete = set(restore(k) for k in obj.get("incomplete", []))
        return g

    def to_dot(self) -> Iterator[str]:
        yield "digraph crystal {\n"
        for key in self.vertices:
            shape = "doublecircle" if key == self.seed else "ellipse"
            yield "  {} [shape={} label={}];\n".format(
                _gvquote(_key_text(key)), shape, _gvquote(str(self.weights[key])))
        for src, dst, j in self.edges:
            yield "  {} -> {} [label={}];\n".format(_gvquote(_key_text(src)), _gvquote(_key_text(dst)), _gvquote(str(j)))
        yield "}\n"


def _decorate(g: CrystalGraph, ops, element) -> Key:
    key = ops.key(element)
    if key not in g:
        g.add_vertex(
            key,
            element,
            ops.weight(element),
            [ops.eps(element, j) for j in ops.index_set],
            [ops.phi(element, j) for j in ops.index_set],
        )
    return key


def _expand(g: CrystalGraph, ops, key: Key) -> Iterator[Tuple[Any, str, int]]:
    element = g.elements[key]
    for j in ops.index_set:
        for op in (constants.OP_F, constants.OP_E):
            nxt = ops.f(element, j) if op == constants.OP_F else ops.e(element, j)
            if nxt is not None:
                yield nxt, op, j


def _link(g: CrystalGraph, key: Key, nxt_key: Key, op: str, j: int):
    if op == constants.OP_F:
        g.add_edge(key, nxt_key, j)
    else:
        g.add_edge(nxt_key, key, j)


def generate_closure(seed, ops, cap: int = constants.DEFAULT_CAP) -> CrystalGraph:
    if cap <= 0:
        raise InvalidInputError("cap must be positive. [cap={}]".format(cap))

    g = CrystalGraph(ops.index_set, ops.rank)
    g.seed = _decorate(g, ops, seed)
    g.parent[g.seed] = None

    queue = deque([g.seed])
    while queue:
        key = queue.popleft()
        for nxt, op, j in _expand(g, ops, key):
            nxt_key = _decorate(g, ops, nxt)
            _link(g, key, nxt_key, op, j)
            if nxt_key not in g.parent:
                g.parent[nxt_key] = (key, op, j)
                queue.append(nxt_key)

        if len(g) > cap:
            g.incomplete = set(queue)
            raise CapExceededError("closure exceeds cap. [cap={}] [vertices={}]".format(cap, len(g)), partial=g)

    logger.debug("closure generated. [vertices={}] [edges={}]".format(len(g), len(g._f)))
    return g


def generate_depth_bounded(seed, ops, depth: int) -> CrystalGraph:
    if depth < 0:
        raise InvalidInputError("depth must be nonnegative. [depth={}]".format(depth))

    g = CrystalGraph(ops.index_set, ops.rank)
    g.seed = _decorate(g, ops, seed)
    g.parent[g.seed] = None

    frontier = [g.seed]
    for _ in range(depth):
        nxt_frontier = []
        for key in frontier:
            for nxt, op, j in _expand(g, ops, key):
                nxt_key = _decorate(g, ops, nxt)
                _link(g, key, nxt_key, op, j)
                if nxt_key not in g.parent:
                    g.parent[nxt_key] = (key, op, j)
                    nxt_frontier.append(nxt_key)
        frontier = nxt_frontier

    g.incomplete = set(frontier)
    logger.debug("depth-bounded graph generated. [depth={}] [vertices={}] [frontier={}]".format(
        depth, len(g), len(frontier)))
    return g


def _pairing(g: CrystalGraph, key: Key, j: int) -> int:
    return g.phi_j(key, j) - g.eps_j(key, j)


def _tensor_f(g1: CrystalGraph, g2: CrystalGraph, b1: Key, b2: Key, j: int) -> Optional[Tuple[Key, Key]]:
    if g1.phi_j(b1, j) > g2.eps_j(b2, j):
        nxt = g1.f(b1, j)
        return None if nxt is None else (nxt, b2)
    nxt = g2.f(b2, j)
    return None if nxt is None else (b1, nxt)


def _tensor_e(g1: CrystalGraph, g2: CrystalGraph, b1: Key, b2: Key, j: int) -> Optional[Tuple[Key, Key]]:
    if g1.phi_j(b1, j) >= g2.eps_j(b2, j):
        nxt = g1.e(b1, j)
        return None if nxt is None else (nxt, b2)
    nxt = g2.e(b2, j)
    return None if nxt is None else (b1, nxt)


def tensor(g1: CrystalGraph, g2: CrystalGraph) -> CrystalGraph:
    """b1 (x) b2 with f_j acting on b1 iff phi_j(b1) > eps_j(b2)."""
    if g1.index_set != g2.index_set:
        raise InvalidInputError("index sets differ. [left={}] [right={}]".format(g1.index_set, g2.index_set))

    g = CrystalGraph(g1.index_set, g1.rank)

    def key_of(b1, b2):
        return _flatten(b1) + _flatten(b2)

    for b1 in g1.vertices:
        for b2 in g2.vertices:
            eps = []
            phi = []
            for j in g.index_set:
                eps.append(max(g1.eps_j(b1, j), g2.eps_j(b2, j) - _pairing(g1, b1, j)))
                phi.append(max(g2.phi_j(b2, j), g1.phi_j(b1, j) + _pairing(g2, b2, j)))
            g.add_vertex(key_of(b1, b2), (b1, b2), g1.weights[b1] + g2.weights[b2], eps, phi)

    for b1 in g1.vertices:
        for b2 in g2.vertices:
            for j in g.index_set:
                nxt = _tensor_f(g1, g2, b1, b2, j)
                if nxt is not None:
                    g.add_edge(key_of(b1, b2), key_of(*nxt), j)

    if g1.seed is not None and g2.seed is not None:
        g.seed = key_of(g1.seed, g2.seed)

    logger.debug("tensor product built. [vertices={}]".format(len(g)))
    return g


def tensor_raise(g1: CrystalGraph, g2: CrystalGraph, key: Tuple[Key, Key], j: int) -> Optional[Tuple[Key, Key]]:
    """e_j on the pair (b1, b2): acts on b1 iff phi_j(b1) >= eps_j(b2)."""
    b1, b2 = key
    return _tensor_e(g1, g2, b1, b2, j)


def tensor_power(graphs: Sequence[CrystalGraph]) -> CrystalGraph:
    if len(graphs) == 0:
        raise InvalidInputError("tensor power of an empty list.")
    return reduce(tensor, graphs)


def rooted_isomorphic(g1: CrystalGraph, r1: Key, g2: CrystalGraph, r2: Key) -> Optional[Dict[Key, Key]]:
    """The bijection extending r1 -> r2 that preserves labelled edges, weights and decorations."""
    if len(g1) != len(g2) or g1.index_set != g2.index_set:
        return None

    def same(a, b):
        return g1.weights[a] == g2.weights[b] and g1.eps[a] == g2.eps[b] and g1.phi[a] == g2.phi[b]

    if not same(r1, r2):
        return None

    mapping = {r1: r2}
    used = {r2}
    queue = deque([r1])
    while queue:
        a = queue.popleft()
        b = mapping[a]
        for j in g1.index_set:
            for op in (constants.OP_F, constants.OP_E):
                na = g1.op(a, op, j)
                nb = g2.op(b, op, j)
                if (na is None) != (nb is None):
                    return None
                if na is None:
                    continue
                if na in mapping:
                    if mapping[na] != nb:
                        return None
                    continue
                if nb in used or not same(na, nb):
                    return None
                mapping[na] = nb
                used.add(nb)
                queue.append(na)

    if len(mapping) != len(g1):
        return None
    return mapping


def graph_extremal_set(g: CrystalGraph) -> Set[Key]:
    """Vertices whose whole S-orbit has e_j or f_j vanishing for every j."""
    orbit_of: Dict[Key, int] = {}
    orbits: List[List[Key]] = []

    for start in g.vertices:
        if start in orbit_of:
            continue
        members = [start]
        orbit_of[start] = len(orbits)
        queue = deque([start])
        while queue:
            key = queue.popleft()
            for j in g.index_set:
                nxt = g.weyl_step(key, j)
                if nxt not in orbit_of:
                    orbit_of[nxt] = len(orbits)
                    members.append(nxt)
                    queue.append(nxt)
        orbits.append(members)

    extremal: Set[Key] = set()
    for members in orbits:
        if all(g.eps_j(k, j) * g.phi_j(k, j) == 0 for k in members for j in g.index_set):
            extremal.update(members)
    return extremal


def export(g: CrystalGraph, fmt: str) -> str:
    if fmt == constants.FORMAT_JSON:
        return json_output(g.get_dict)
    if fmt == constants.FORMAT_DOT:
        return "".join(g.to_dot())
    raise ExportFormatError("unknown export format. [format={}] [supported={}]".format(fmt, constants.EXPORT_FORMATS))


def connected(g: CrystalGraph) -> bool:
    return len(g) > 0 and nx.is_weakly_connected(g.graph)


def components(g: CrystalGraph) -> List[List[Key]]:
    return [sorted(c) for c in sorted(nx.weakly_connected_components(g.graph), key=lambda c: min(c))]


def nx_isomorphic(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    match = nx.algorithms.isomorphism.categorical_multiedge_match("j", None)
    return nx.is_isomorphic(g1.graph, g2.graph, edge_match=match)


def closure_of(seed_keys: Sequence[Key], step: Callable[[Key], Sequence[Key]]) -> Set[Key]:
    seen = set(seed_keys)
    queue = deque(seed_keys)
    while queue:
        key = queue.popleft()
        for nxt in step(key):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen
