"""Explicit paths in the Seifert Surgery Network and subgraph export.

Paths run from a family vertex to a surgery on a torus knot (EM I, EM II),
or from a torus knot / unknot surgery to the family vertex (EM III, whose
paths are built from a Hopf-pair decomposition).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Union

from .families import (
    EM1Knot,
    EM2Knot,
    EM3Knot,
    GAMMA,
    PreconditionError,
    SurgeryVertex,
    TorusKnot,
    UNKNOT,
    em3_check_parameters,
    em3_trivializable,
    gamma_em1,
    gamma_em2,
)
from .rational import ExtendedRational, RationalLike, as_rational
from .twist import HopfPairState, apply_steps, decompose

__all__ = [
    "TwistMove",
    "OpaqueVertex",
    "NetworkPath",
    "em1_knot",
    "em2_knot",
    "em1_path",
    "em2_path",
    "em3_path",
    "em3_hopf_pair",
    "hopf_path",
    "Graph",
    "build_graph",
    "export_graph",
]

SEIFERTER = "seiferter"
ANNULAR = "annular"
HOPF = "hopf"


@dataclass(frozen=True)
class TwistMove:
    """One edge of the network.

    ``kind`` is ``"seiferter"`` (name ``c_a``, ``c_b`` or ``meridian``),
    ``"annular"`` (name ``cc_cd``) or ``"hopf"`` (name ``a``, ``b`` or ``c``,
    with the Hopf component ``A``/``B`` it plays).
    """

    kind: str
    name: str
    count: int
    component: str | None = None

    def label(self) -> str:
        return f"{self.name} {self.count}"

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "name": self.name, "count": self.count}
        if self.component is not None:
            doc["component"] = self.component
        return doc


@dataclass(frozen=True)
class OpaqueVertex:
    """An intermediate EM III vertex, known only through the surgery that
    remains on the Hopf pair to reach ``target``."""

    target: EM3Knot
    state: HopfPairState
    components: tuple[str, str]

    def id(self) -> str:
        a, b = self.components
        return f"{self.target.label()}~{a}={self.state.a_coeff},{b}={self.state.b_coeff}"

    def to_json(self) -> dict:
        a, b = self.components
        return {"family": "Opaque", "target": self.target.to_json(),
                "hopf": {a: self.state.a_coeff.to_json(), b: self.state.b_coeff.to_json()}}


PathVertex = Union[SurgeryVertex, OpaqueVertex]


@dataclass
class NetworkPath:
    start: PathVertex
    moves: list[tuple[TwistMove, PathVertex]] = field(default_factory=list)

    @property
    def end(self) -> PathVertex:
        return self.moves[-1][1] if self.moves else self.start

    def vertices(self) -> list[PathVertex]:
        return [self.start] + [v for _, v in self.moves]

    def edges(self) -> Iterable[tuple[PathVertex, TwistMove, PathVertex]]:
        prev = self.start
        for move, vertex in self.moves:
            yield prev, move, vertex
            prev = vertex

    def __len__(self):
        return len(self.moves)

    def to_json(self) -> dict:
        return {
            "start": _vertex_json(self.start),
            "moves": [{"move": m.to_json(), "to": _vertex_json(v)} for m, v in self.moves],
            "end": self.end.id(),
        }

    def to_text(self) -> str:
        lines = [self.start.id()]
        for move, vertex in self.moves:
            lines.append(f"  --[{move.label()}]--> {vertex.id()}")
        return "\n".join(lines)


def _vertex_json(v: PathVertex) -> dict:
    doc = v.to_json()
    doc["id"] = v.id()
    return doc


# ---------------------------------------------------------------------------
# canonical knot names


def em1_knot(l: int, n: int, p: int):
    """K(0, 0, 0) is the trivial knot."""
    if (l, n, p) == (0, 0, 0):
        return UNKNOT
    return EM1Knot(l, n, p)


def em2_knot(l: int, m: int, n: int, p: int):
    """K(l, m, 0, 1) = K(l, m-1, 1, 0) and K(l, 1, 0, 0) = T(l, 1-l)."""
    if (n, p) == (0, 1):
        m, n, p = m - 1, 1, 0
    if (m, n, p) == (1, 0, 0):
        return TorusKnot(l, 1 - l)
    return EM2Knot(l, m, n, p)


def _em1_vertex(l, n, p, shift):
    return SurgeryVertex(em1_knot(l, n, p), ExtendedRational(gamma_em1(l, n, p) + shift))


def _em2_vertex(l, m, n, p, shift):
    return SurgeryVertex(em2_knot(l, m, n, p), ExtendedRational(gamma_em2(l, m, n, p) + shift))


# ---------------------------------------------------------------------------
# EM I and EM II


def em1_path(l: int, n: int, p: int, minus_one: bool = False) -> NetworkPath:
    """``(K(l,n,p), gamma)`` -> ``(K(l,0,0), gamma)`` -> ``(O, 0)``.

    An n-twist along c_a (or a p-twist along c_b) reaches the hub K(l,0,0);
    a (-l)-twist along the annular pair (c_c, c_d) then unknots it.
    """
    if n != 0 and p != 0:
        raise PreconditionError(
            f"n={n}, p={p}: the tangle is trivializable if and only if n or p is 0")
    shift = -1 if minus_one else 0
    path = NetworkPath(_em1_vertex(l, n, p, shift))
    if n != 0:
        path.moves.append((TwistMove(SEIFERTER, "c_a", n), _em1_vertex(l, 0, 0, shift)))
    elif p != 0:
        path.moves.append((TwistMove(SEIFERTER, "c_b", p), _em1_vertex(l, 0, 0, shift)))
    if l != 0:
        path.moves.append((TwistMove(ANNULAR, "cc_cd", -l), _em1_vertex(0, 0, 0, shift)))
    return path


def em2_path(l: int, m: int, n: int, p: int, minus_one: bool = False) -> NetworkPath:
    """``(K(l,m,n,p), gamma)`` down the staircase to ``(T(l,1-l), l(1-l))``.

    Each stair is a (-1)-twist along c_b, landing on K(l,k,0,1) = K(l,k-1,1,0),
    followed by a 1-twist along c_a.
    """
    if n != 0 and p != 0:
        raise PreconditionError(
            f"n={n}, p={p}: the tangle is trivializable if and only if n or p is 0")
    if m < 1:
        raise PreconditionError(f"m={m}: the staircase to K(l,1,0,0) needs m >= 1")
    shift = -1 if minus_one else 0
    path = NetworkPath(_em2_vertex(l, m, n, p, shift))
    if n != 0:
        path.moves.append((TwistMove(SEIFERTER, "c_a", n), _em2_vertex(l, m, 0, 0, shift)))
    elif p != 0:
        path.moves.append((TwistMove(SEIFERTER, "c_b", p), _em2_vertex(l, m, 0, 0, shift)))
    for k in range(m, 1, -1):
        path.moves.append((TwistMove(SEIFERTER, "c_b", -1), _em2_vertex(l, k, 0, 1, shift)))
        path.moves.append((TwistMove(SEIFERTER, "c_a", 1), _em2_vertex(l, k - 1, 0, 0, shift)))
    return path


# ---------------------------------------------------------------------------
# EM III


def em3_hopf_pair(a1: RationalLike, a2: RationalLike, a3: RationalLike):
    """Start vertex, Hopf pair state and seiferter names for ``K(a1, a2, a3)``.

    Case (i), ``a3 = 1/n``: start at ``(T(n, 1-n), n(1-n) - 1)`` with
    ``(a, b; -al1/(be1 + (n-1) al1) - 1, -a2 - 1)``.
    Case (ii), ``a1 = 1/p``: start at ``(O, p - 1)`` with
    ``(b, c; -a2, 1/a3 + p)``.
    """
    a1, a2, a3 = em3_check_parameters(a1, a2, a3)
    triv = em3_trivializable(a1, a2, a3)
    if triv is None:
        raise PreconditionError(f"Q({a1}, {a2}, {a3}) is not trivializable")
    if triv.case == "i":
        n = triv.parameter
        start = SurgeryVertex(TorusKnot(n, 1 - n), ExtendedRational(n * (1 - n) - 1))
        al1, be1 = a1.numerator, a1.denominator
        a_coeff = ExtendedRational(-al1, be1 + (n - 1) * al1) - 1
        state = HopfPairState.of(a_coeff, -a2 - 1)
        return start, state, ("a", "b")
    p = triv.parameter
    second = a1 if triv.swapped else a2
    start = SurgeryVertex(UNKNOT, ExtendedRational(p - 1))
    state = HopfPairState.of(-second, a3.reciprocal() + p)
    return start, state, ("b", "c")


def hopf_path(start: SurgeryVertex, state: HopfPairState, components: tuple[str, str],
              target: EM3Knot) -> NetworkPath:
    """Path of alternate Hopf-pair twists from ``start`` to ``(target, gamma)``."""
    if abs(state.determinant) != 1:
        raise RuntimeError(f"Hopf pair {state} has determinant {state.determinant}, expected +-1")
    path = NetworkPath(start)
    terminal = SurgeryVertex(target, GAMMA)
    if state.is_trivial():
        return path
    names = {"A": components[0], "B": components[1]}
    for step in decompose(state):
        if step.count == 0:
            continue
        state = apply_steps(state, [step])
        vertex = terminal if state.is_trivial() else OpaqueVertex(target, state, components)
        path.moves.append((TwistMove(HOPF, names[step.component], step.count, step.component), vertex))
    return path


def em3_path(a1: RationalLike, a2: RationalLike, a3: RationalLike) -> NetworkPath:
    """Path from a torus knot (case i) or unknot (case ii) surgery to ``(K(a1,a2,a3), gamma)``."""
    start, state, components = em3_hopf_pair(a1, a2, a3)
    target = EM3Knot(*em3_check_parameters(a1, a2, a3))
    return hopf_path(start, state, components, target)


# ---------------------------------------------------------------------------
# graphs


@dataclass
class Graph:
    nodes: dict[str, PathVertex] = field(default_factory=dict)
    edges: list[tuple[str, str, TwistMove]] = field(default_factory=list)

    def add_node(self, vertex: PathVertex) -> str:
        key = vertex.id()
        self.nodes.setdefault(key, vertex)
        return key

    def add_edge(self, a: PathVertex, move: TwistMove, b: PathVertex):
        edge = (self.add_node(a), self.add_node(b), move)
        if edge not in self.edges:
            self.edges.append(edge)

    def add_path(self, path: NetworkPath):
        self.add_node(path.start)
        for a, move, b in path.edges():
            self.add_edge(a, move, b)

    def to_json(self) -> dict:
        return {
            "nodes": [_vertex_json(v) for v in self.nodes.values()],
            "edges": [{"from": a, "to": b, "move": move.to_json()} for a, b, move in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph seifert_surgery_network {"]
        for key in self.nodes:
            lines.append(f'  "{key}";')
        for a, b, move in self.edges:
            lines.append(f'  "{a}" -> "{b}" [label="{move.label()}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _interval(ranges: Mapping, key: str) -> range:
    if key not in ranges:
        raise ValueError(f"missing range for {key!r}")
    value = ranges[key]
    if isinstance(value, int):
        lo = hi = value
    else:
        lo, hi = value
    if lo > hi:
        raise ValueError(f"empty range for {key!r}: [{lo}, {hi}]")
    return range(lo, hi + 1)


def _sign(k: int) -> int:
    return (k > 0) - (k < 0)


def _shifts(variant: str) -> list[int]:
    return {"gamma": [0], "minus-one": [-1], "both": [0, -1]}[variant]


def _em1_lines(graph: Graph, l: int, n: int, p: int, shift: int):
    if n != 0 and p != 0:
        return
    graph.add_node(_em1_vertex(l, n, p, shift))
    name, k = ("c_a", n) if n != 0 else ("c_b", p)
    while k != 0:
        step = _sign(k)
        here = (l, k, 0) if name == "c_a" else (l, 0, k)
        there = (l, k - step, 0) if name == "c_a" else (l, 0, k - step)
        graph.add_edge(_em1_vertex(*here, shift), TwistMove(SEIFERTER, name, step),
                       _em1_vertex(*there, shift))
        k -= step
    if l != 0:
        graph.add_edge(_em1_vertex(l, 0, 0, shift), TwistMove(ANNULAR, "cc_cd", -l),
                       _em1_vertex(0, 0, 0, shift))


def _em2_lines(graph: Graph, l: int, m: int, n: int, p: int, shift: int):
    if n != 0 and p != 0:
        return
    graph.add_node(_em2_vertex(l, m, n, p, shift))
    name, k = ("c_a", n) if n != 0 else ("c_b", p)
    while k != 0:
        step = _sign(k)
        here = (l, m, k, 0) if name == "c_a" else (l, m, 0, k)
        there = (l, m, k - step, 0) if name == "c_a" else (l, m, 0, k - step)
        graph.add_edge(_em2_vertex(*here, shift), TwistMove(SEIFERTER, name, step),
                       _em2_vertex(*there, shift))
        k -= step
    if m >= 1:
        graph.add_path(em2_path(l, m, 0, 0, minus_one=shift == -1))


def _add_meridian_edges(graph: Graph):
    slopes = sorted(v.slope.floor() for v in graph.nodes.values()
                    if isinstance(v, SurgeryVertex) and v.knot == UNKNOT)
    for lo, hi in zip(slopes, slopes[1:]):
        if hi == lo + 1:
            graph.add_edge(SurgeryVertex(UNKNOT, ExtendedRational(lo)), TwistMove(SEIFERTER, "meridian", 1),
                           SurgeryVertex(UNKNOT, ExtendedRational(hi)))


def build_graph(family: str, param_ranges: Mapping, variant: str = "gamma") -> Graph:
    """Subgraph spanned by the explicit paths of every vertex in the ranges.

    EM I / EM II ranges are inclusive integer intervals ``(lo, hi)`` (or a
    single int) keyed by parameter name.  EM III takes lists of rationals
    under ``a1``, ``a2``, ``a3``; untrivializable or excluded triples are
    skipped.  Twist lines along c_a and c_b are drawn one unit step at a time.
    """
    family = family.lower()
    graph = Graph()
    if family == "em1":
        ls, ns, ps = (_interval(param_ranges, k) for k in ("l", "n", "p"))
        for shift in _shifts(variant):
            for l, n, p in product(ls, ns, ps):
                _em1_lines(graph, l, n, p, shift)
    elif family == "em2":
        ls, ms, ns, ps = (_interval(param_ranges, k) for k in ("l", "m", "n", "p"))
        for shift in _shifts(variant):
            for l, m, n, p in product(ls, ms, ns, ps):
                _em2_lines(graph, l, m, n, p, shift)
    elif family == "em3":
        lists = []
        for key in ("a1", "a2", "a3"):
            values = [as_rational(v) for v in param_ranges.get(key, ())]
            if not values:
                raise ValueError(f"empty range for {key!r}")
            lists.append(values)
        for a1, a2, a3 in product(*lists):
            try:
                path = em3_path(a1, a2, a3)
            except PreconditionError:
                continue
            graph.add_path(path)
    else:
        raise ValueError(f"unknown family {family!r}")
    _add_meridian_edges(graph)
    return graph


def export_graph(family: str, param_ranges: Mapping, fmt: str = "json", variant: str = "gamma") -> str:
    """Render :func:`build_graph` as a JSON or DOT document."""
    graph = build_graph(family, param_ranges, variant)
    fmt = fmt.lower()
    if fmt == "json":
        return json.dumps(graph.to_json(), indent=2) + "\n"
    if fmt == "dot":
        return graph.to_dot()
    raise ValueError(f"unknown graph format {fmt!r}")
