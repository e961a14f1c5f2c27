"""Simple graphs on ``1..n``, their independence complexes, and the graph-level
sufficient conditions for sequential S_2.

Vertex sets are bitmasks, exactly as faces are in :mod:`seqsr.complex`.
"""

from __future__ import annotations

import dataclasses
import random
from itertools import combinations

from .complex import (
    Face,
    SimplicialComplex,
    card,
    face,
    face_key,
    face_set,
    is_shellable,
    is_vertex_decomposable,
    labels,
)
from .config import check_cap
from .errors import InputError, ParseError
from .linalg import QQ, Field
from .reports import CheckReport


@dataclasses.dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``edges`` holds sorted pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            u, v = sorted(e)
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (1 <= u and v <= self.n):
                raise InputError(f"edge {u}-{v} outside 1..{self.n}")
            clean.add((u, v))
        object.__setattr__(self, "edges", frozenset(clean))
        adj = [0] * (self.n + 1)
        for u, v in clean:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        object.__setattr__(self, "_adj", tuple(adj))

    def neighbors(self, v: int) -> Face:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return card(self._adj[v])

    @property
    def vertex_mask(self) -> Face:
        return (1 << self.n) - 1

    def degree_in(self, v: int, within: Face) -> int:
        return card(self._adj[v] & within)

    def is_independent(self, s: Face) -> bool:
        return all(not (self._adj[v] & s) for v in labels(s))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, keep: Face) -> tuple[Graph, dict[int, int]]:
        """Induced subgraph on ``keep`` relabelled 1..m; also returns new -> old labels."""
        old = labels(keep)
        new_of = {v: k + 1 for k, v in enumerate(old)}
        edges = {(new_of[u], new_of[v]) for u, v in self.edges if u in new_of and v in new_of}
        return Graph(len(old), frozenset(edges)), {k + 1: v for k, v in enumerate(old)}


# ---------------------------------------------------------------------------
# generators


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("a path needs at least 1 vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)))


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph(10, frozenset(outer + spokes + inner))


def random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    """Each of the ``a * b`` cross edges present independently with probability p."""
    rng = random.Random(seed)
    edges = [(u, a + v) for u in range(1, a + 1) for v in range(1, b + 1) if rng.random() < p]
    return Graph(a + b, frozenset(edges))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, frozenset(e for e in combinations(range(1, n + 1), 2) if rng.random() < p))


# ---------------------------------------------------------------------------
# constructions


def independence_complex(g: Graph) -> SimplicialComplex:
    """Complex of independent sets; facets are the maximal independent sets."""
    check_cap("cap_n", g.n)
    facets: list[Face] = []
    # Bron-Kerbosch with pivoting on the complement graph
    full = g.vertex_mask
    non_adj = [0] + [full & ~g.neighbors(v) & ~(1 << (v - 1)) for v in range(1, g.n + 1)]

    def expand(r: Face, p: Face, x: Face):
        if not p and not x:
            facets.append(r)
            return
        pivot_pool = p | x
        pivot = max(labels(pivot_pool), key=lambda u: card(non_adj[u] & p))
        for v in labels(p & ~non_adj[pivot]):
            bit = 1 << (v - 1)
            expand(r | bit, p & non_adj[v], x & non_adj[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    return SimplicialComplex(g.n, tuple(facets))


def closed_neighborhood(g: Graph, s) -> Face:
    """``N[S] = S ∪ N(S)`` as a bitmask; accepts a bitmask or labels."""
    s = s if isinstance(s, int) else face(*s)
    out = s
    for v in labels(s):
        out |= g.neighbors(v)
    return out


def remove_closed_neighborhood(g: Graph, s) -> tuple[Graph, dict[int, int]]:
    """``G ∖ N[S]`` for an independent set S, relabelled; returns (graph, new -> old)."""
    s = s if isinstance(s, int) else face(*s)
    if not g.is_independent(s):
        raise InputError(f"{list(labels(s))} is not independent")
    return g.induced(g.vertex_mask & ~closed_neighborhood(g, s))


def delete_vertices(g: Graph, s) -> tuple[Graph, dict[int, int]]:
    s = s if isinstance(s, int) else face(*s)
    return g.induced(g.vertex_mask & ~s)


def add_whiskers(g: Graph, s) -> Graph:
    """Attach a new pendant vertex to each member of S; new labels follow n in order."""
    s = s if isinstance(s, int) else face(*s)
    new_edges = set(g.edges)
    for k, v in enumerate(labels(s)):
        new_edges.add((v, g.n + 1 + k))
    return Graph(g.n + card(s), frozenset(new_edges))


def is_bipartite(g: Graph) -> bool:
    colour: dict[int, int] = {}
    for start in range(1, g.n + 1):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in labels(g.neighbors(u)):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def is_connected_graph(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in labels(frontier):
            nxt |= g.neighbors(v)
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.vertex_mask


# ---------------------------------------------------------------------------
# cycles and simplicial vertices


def canonical_cycle(cycle) -> tuple[int, ...]:
    """Rotate/reflect a vertex cycle to start at its minimum, heading to the smaller neighbour."""
    cycle = list(cycle)
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def chordless_cycles(g: Graph, parity: str | None = None, within: Face | None = None) -> list[tuple[int, ...]]:
    """All induced cycles of length >= 4.

    Each cycle starts at its smallest vertex and runs towards the smaller of
    that vertex's two cycle neighbours.  ``parity`` may be ``"even"`` or
    ``"odd"``; ``within`` restricts to an induced subgraph.
    """
    check_cap("cap_n", g.n)
    allowed = g.vertex_mask if within is None else within
    adj = [g.neighbors(v) & allowed if v else 0 for v in range(g.n + 1)]
    found = []

    def grow(path: list[int], used: Face, blocked: Face):
        # blocked: vertices adjacent to some interior path vertex (or to the start, except via the ends)
        start, last = path[0], path[-1]
        for w in labels(adj[last] & allowed & ~used):
            if w < start:
                continue
            bit = 1 << (w - 1)
            if bit & blocked:
                continue
            closes = adj[w] & (1 << (start - 1))
            if closes:
                if len(path) >= 3 and path[1] < w:
                    found.append(tuple(path + [w]))
                continue
            grow(path + [w], used | bit, blocked | adj[last])

    for s in range(1, g.n + 1):
        if not (allowed >> (s - 1) & 1):
            continue
        for nb in labels(adj[s]):
            if nb <= s:
                continue
            grow([s, nb], (1 << (s - 1)) | (1 << (nb - 1)), 0)

    out = sorted(found, key=lambda c: (len(c), c))
    if parity == "even":
        out = [c for c in out if len(c) % 2 == 0]
    elif parity == "odd":
        out = [c for c in out if len(c) % 2 == 1]
    elif parity is not None:
        raise InputError(f"parity must be 'even' or 'odd', got {parity!r}")
    return out


def simplicial_vertices(g: Graph, within: Face | None = None) -> Face:
    """Vertices whose closed neighbourhood is a clique (in the induced subgraph on ``within``)."""
    allowed = g.vertex_mask if within is None else within
    out = 0
    for v in labels(allowed):
        nb = g.neighbors(v) & allowed
        if all(g.neighbors(u) & nb == nb & ~(1 << (u - 1)) for u in labels(nb)):
            out |= 1 << (v - 1)
    return out


# ---------------------------------------------------------------------------
# sufficient conditions for sequential S_2


def _non_facet_independent_sets(g: Graph) -> list[Face]:
    cx = independence_complex(g)
    facets = set(cx.facets)
    return sorted((f for f in face_set(cx) if f not in facets), key=face_key)


def _remaining(g: Graph, f: Face) -> Face:
    return g.vertex_mask & ~closed_neighborhood(g, f)


def condition_iv(g: Graph) -> CheckReport:
    """Every non-maximal independent F leaves a vertex of degree <= 1 in ``G ∖ N[F]``."""
    for f in _non_facet_independent_sets(g):
        h = _remaining(g, f)
        if not any(g.degree_in(v, h) <= 1 for v in labels(h)):
            return CheckReport("condition-iv", False, {"F": list(labels(f))})
    return CheckReport("condition-iv", True)


def _has_degree_two_cycle(g: Graph, h: Face) -> bool:
    # some chordless (2t+1)-cycle, t >= 2, carrying t pairwise nonadjacent vertices of degree 2 in H
    for cyc in chordless_cycles(g, "odd", within=h):
        t = (len(cyc) - 1) // 2
        cands = [v for v in cyc if g.degree_in(v, h) == 2]
        if len(cands) < t:
            continue
        for combo in combinations(cands, t):
            if g.is_independent(face(*combo)):
                return True
    return False


def which_condition(g: Graph, h: Face) -> str | None:
    """First of (ii), (i), (iii) satisfied by the induced subgraph on ``h``, else None."""
    if simplicial_vertices(g, h):
        return "ii"
    if not chordless_cycles(g, "even", within=h):
        return "i"
    if _has_degree_two_cycle(g, h):
        return "iii"
    return None


def thm_conditions(g: Graph) -> CheckReport:
    """For every non-maximal independent F, ``G ∖ N[F]`` has no chordless even
    cycle, or has a simplicial vertex, or has a chordless (2t+1)-cycle with t
    independent vertices of degree 2.

    True certifies sequential S_2; False is not evidence against it.
    """
    for f in _non_facet_independent_sets(g):
        if which_condition(g, _remaining(g, f)) is None:
            return CheckReport("theorem-conditions", False, {"F": list(labels(f))})
    return CheckReport("theorem-conditions", True)


def whiskered_vertices(g: Graph) -> Face:
    """Vertices adjacent to some vertex of degree one."""
    out = 0
    for v in range(1, g.n + 1):
        if g.degree(v) == 1:
            out |= g.neighbors(v)
    return out


def whiskered_even_cycles(g: Graph) -> CheckReport:
    """Every chordless even cycle passes through a vertex carrying a whisker."""
    whiskered = whiskered_vertices(g)
    for cyc in chordless_cycles(g, "even"):
        if not whiskered & face(*cyc):
            return CheckReport("whiskered-even-cycles", False, {"cycle": list(cyc)})
    return CheckReport("whiskered-even-cycles", True)


BATTERY = ("vertex-decomposable", "shellable", "sequentially CM", "condition-iv", "sequentially S_2")


@dataclasses.dataclass(frozen=True)
class BatteryReport:
    """The five equivalent conditions for a bipartite graph, evaluated separately."""

    verdicts: tuple[tuple[str, bool], ...]
    field: str

    @property
    def agree(self) -> bool:
        return len({v for _, v in self.verdicts}) == 1

    def as_dict(self) -> dict[str, bool]:
        return dict(self.verdicts)

    def to_dict(self):
        return {"property": "bipartite-battery", "field": self.field, "verdicts": self.as_dict(), "agree": self.agree}

    def to_text(self) -> str:
        body = ", ".join(f"{k}={'true' if v else 'false'}" for k, v in self.verdicts)
        return f"bipartite-battery field={self.field}: {body}; agree={'true' if self.agree else 'false'}"


def bipartite_battery(g: Graph, field: Field = QQ) -> BatteryReport:
    """Run all five characterisations of sequential S_2 for a bipartite graph."""
    from .serre import is_seq_CM, is_seq_Sr_skeleton

    if not is_bipartite(g):
        raise InputError("bipartite battery needs a bipartite graph")
    cx = independence_complex(g)
    verdicts = (
        (BATTERY[0], is_vertex_decomposable(cx).verdict),
        (BATTERY[1], is_shellable(cx).verdict),
        (BATTERY[2], is_seq_CM(cx, field).verdict),
        (BATTERY[3], condition_iv(g).verdict),
        (BATTERY[4], is_seq_Sr_skeleton(cx, 2, field).verdict),
    )
    return BatteryReport(verdicts, str(field))


# ---------------------------------------------------------------------------
# text format


def to_text(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    from .complex import _content_lines, _read_header

    lines = _content_lines(text)
    n = _read_header(lines)
    edges = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected an edge 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge {u}-{v} outside 1..{n}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))
