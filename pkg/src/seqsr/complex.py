"""Simplicial complexes on a fixed ground set ``[n] = {1, ..., n}``.

Faces are stored as integer bitmasks: vertex ``v`` is bit ``v - 1``.  A complex
is determined by its facets, kept as a canonical antichain.  Two degenerate
complexes are distinguished:

* the *void* complex, with no faces at all (``facets == ()``);
* the *irrelevant* complex ``{∅}``, whose only facet is the empty face
  (``facets == (0,)``).

Vertices of the ground set that lie in no facet are kept; nothing is ever
relabelled implicitly (see :func:`normalize` for the explicit version).
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .config import check_cap
from .errors import DegenerateComplexError, InputError, ParseError

Face = int

VOID_DIM = None
"""Dimension reported for the void complex (it has no faces at all)."""


# ---------------------------------------------------------------------------
# face helpers


def face(*vertices: int) -> Face:
    """Bitmask of the face with the given vertex labels: ``face(1, 3) == 0b101``."""
    mask = 0
    for v in vertices:
        if v < 1:
            raise InputError(f"vertex label {v} is not positive")
        mask |= 1 << (v - 1)
    return mask


def as_face(value) -> Face:
    """Coerce a bitmask or an iterable of labels to a bitmask."""
    if isinstance(value, int):
        if value < 0:
            raise InputError("negative face mask")
        return value
    return face(*value)


@lru_cache(maxsize=1 << 16)
def labels(mask: Face) -> tuple[int, ...]:
    """Sorted vertex labels of a face bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def card(mask: Face) -> int:
    return bin(mask).count("1")


def face_key(mask: Face):
    """Sort key giving lexicographic order on sorted label tuples (∅ first)."""
    return labels(mask)


def _subsets(mask: Face):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _k_subsets(mask: Face, k: int):
    for combo in combinations(labels(mask), k):
        yield face(*combo)


def maximal(masks: Iterable[Face]) -> tuple[Face, ...]:
    """Reduce a family of faces to its maximal elements, canonically sorted."""
    uniq = sorted(set(masks), key=card, reverse=True)
    kept: list[Face] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=face_key))


# ---------------------------------------------------------------------------
# the complex


@dataclasses.dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``[n]`` given by its facets.

    ``facets`` may be any family of bitmasks; it is reduced to the canonical
    antichain on construction.  Use :meth:`from_facets` to build from labels.
    """

    n: int
    facets: tuple[Face, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InputError("ground-set size must be nonnegative")
        top = 1 << self.n
        for f in self.facets:
            if f < 0 or f >= top:
                raise InputError(f"face {labels(f) if f >= 0 else f} has a label outside 1..{self.n}")
        object.__setattr__(self, "facets", maximal(self.facets))

    @classmethod
    def from_facets(cls, n: int, generators: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Complex generated by faces given as label collections.

        An empty generator list gives the void complex, ``[[]]`` gives ``{∅}``.
        """
        masks = []
        for g in generators:
            if isinstance(g, int):
                masks.append(g)
                continue
            g = list(g)
            for v in g:
                if not 1 <= v <= n:
                    raise InputError(f"vertex label {v} outside 1..{n}")
            masks.append(face(*g))
        return cls(n, tuple(masks))

    @classmethod
    def void(cls, n: int) -> SimplicialComplex:
        return cls(n, ())

    @classmethod
    def irrelevant(cls, n: int) -> SimplicialComplex:
        return cls(n, (0,))

    @classmethod
    def simplex(cls, n: int, vertices: Iterable[int] | None = None) -> SimplicialComplex:
        """Full simplex on ``vertices`` (default: all of ``[n]``)."""
        mask = (1 << n) - 1 if vertices is None else face(*vertices)
        return cls(n, (mask,))

    # -- basic queries ------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def is_simplex(self) -> bool:
        """True for a single facet (this includes ``{∅}``)."""
        return len(self.facets) == 1

    @property
    def is_full_simplex(self) -> bool:
        return self.facets == ((1 << self.n) - 1,)

    @property
    def dim(self):
        if not self.facets:
            return VOID_DIM
        return max(card(f) for f in self.facets) - 1

    @property
    def vertex_mask(self) -> Face:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def vertices(self) -> tuple[int, ...]:
        return labels(self.vertex_mask)

    @property
    def facet_labels(self) -> list[tuple[int, ...]]:
        return [labels(f) for f in self.facets]

    def __contains__(self, item) -> bool:
        m = as_face(item)
        return any(m & f == m for f in self.facets)

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, labels(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, <{body}>)"


@dataclasses.dataclass(frozen=True)
class RelativePair:
    """A pair (ambient, sub) with sub a subcomplex of ambient on the same ground set."""

    ambient: SimplicialComplex
    sub: SimplicialComplex

    def __post_init__(self):
        if self.ambient.n != self.sub.n:
            raise InputError("relative pair: ground-set sizes differ")
        for f in self.sub.facets:
            if f not in self.ambient:
                raise InputError(f"relative pair: face {labels(f)} of sub is not in ambient")


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=4096)
def _face_set(facets: tuple[Face, ...]) -> frozenset:
    out = set()
    for f in facets:
        if f in out:
            continue
        out.update(_subsets(f))
    return frozenset(out)


def face_set(cx: SimplicialComplex) -> frozenset:
    """Every face of ``cx`` as a frozenset of bitmasks."""
    check_cap("cap_n", cx.n)
    return _face_set(cx.facets)


def all_faces(cx: SimplicialComplex) -> dict[int, list[Face]]:
    """Faces grouped by dimension, each group in lexicographic order.

    The group sizes form the f-vector (``-1`` holds the empty face).
    """
    if cx.is_void:
        return {}
    groups: dict[int, list[Face]] = {d: [] for d in range(-1, cx.dim + 1)}
    for f in face_set(cx):
        groups[card(f) - 1].append(f)
    for d in groups:
        groups[d].sort(key=face_key)
    return groups


def f_vector(cx: SimplicialComplex) -> list[int]:
    """``[f_{-1}, f_0, ..., f_dim]``."""
    return [len(v) for _, v in sorted(all_faces(cx).items())]


# ---------------------------------------------------------------------------
# constructions


def skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """All faces of dimension at most ``i``."""
    if i < -1:
        raise InputError("skeleton index must be >= -1")
    if cx.is_void or i >= cx.dim:
        return cx
    out = []
    for f in cx.facets:
        if card(f) <= i + 1:
            out.append(f)
        else:
            out.extend(_k_subsets(f, i + 1))
    return SimplicialComplex(cx.n, tuple(out))


def pure_skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by the ``i``-dimensional faces."""
    if i < -1:
        raise InputError("skeleton index must be >= -1")
    if cx.is_void:
        return cx
    if i == -1:
        return SimplicialComplex.irrelevant(cx.n)
    out = set()
    for f in cx.facets:
        if card(f) >= i + 1:
            out.update(_k_subsets(f, i + 1))
    return SimplicialComplex(cx.n, tuple(out))


def facet_generated(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by the facets of dimension exactly ``i`` (void if none)."""
    return SimplicialComplex(cx.n, tuple(f for f in cx.facets if card(f) == i + 1))


def link(cx: SimplicialComplex, f) -> SimplicialComplex:
    f = as_face(f)
    if f not in cx:
        raise InputError(f"face {labels(f)} is not in the complex")
    return SimplicialComplex(cx.n, tuple(g & ~f for g in cx.facets if g & f == f))


def deletion(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces of ``cx`` not containing vertex ``v``."""
    if not 1 <= v <= cx.n:
        raise InputError(f"vertex {v} outside 1..{cx.n}")
    bit = 1 << (v - 1)
    return SimplicialComplex(cx.n, tuple(g & ~bit for g in cx.facets))


def restriction(cx: SimplicialComplex, w) -> SimplicialComplex:
    """Faces of ``cx`` contained in the vertex set ``w``."""
    w = as_face(w)
    if w >> cx.n:
        raise InputError(f"restriction set has labels outside 1..{cx.n}")
    return SimplicialComplex(cx.n, tuple(g & w for g in cx.facets))


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.n != b.n:
        raise InputError("union: ground-set sizes differ")
    return SimplicialComplex(a.n, a.facets + b.facets)


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.n != b.n:
        raise InputError("intersection: ground-set sizes differ")
    return SimplicialComplex(a.n, tuple(f & g for f in a.facets for g in b.facets))


def minimal_nonfaces(cx: SimplicialComplex) -> tuple[Face, ...]:
    """Minimal subsets of ``[n]`` that are not faces, lexicographically sorted."""
    if cx.is_void:
        return (0,)
    faces = face_set(cx)
    found = set()
    for f in faces:
        for v in range(cx.n):
            bit = 1 << v
            if f & bit:
                continue
            s = f | bit
            if s in faces or s in found:
                continue
            if all((s & ~(1 << (u - 1))) in faces for u in labels(f)):
                found.add(s)
    return tuple(sorted(found, key=face_key))


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """``{F ⊆ [n] : [n] ∖ F ∉ cx}``, generated by complements of minimal nonfaces."""
    if cx.is_void:
        raise DegenerateComplexError("the Alexander dual of the void complex is the full simplex on [n]")
    if cx.is_full_simplex:
        raise DegenerateComplexError("the Alexander dual of the full simplex is the void complex")
    check_cap("cap_n", cx.n)
    full = (1 << cx.n) - 1
    return SimplicialComplex(cx.n, tuple(full & ~m for m in minimal_nonfaces(cx)))


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join on the concatenated ground set; ``b``'s labels are shifted by ``a.n``."""
    if a.is_void or b.is_void:
        raise InputError("join of a void complex")
    return SimplicialComplex(a.n + b.n, tuple(f | (g << a.n) for f in a.facets for g in b.facets))


def cone(cx: SimplicialComplex) -> SimplicialComplex:
    """Join with a single new vertex ``n + 1``."""
    return join(cx, SimplicialComplex.simplex(1))


def normalize(cx: SimplicialComplex) -> tuple[SimplicialComplex, dict[int, int]]:
    """Restrict the ground set to the vertices actually used and relabel them 1..m.

    Returns the relabelled complex and the map new label -> old label.
    """
    old = cx.vertices
    new_of = {v: k + 1 for k, v in enumerate(old)}
    facets = [face(*(new_of[v] for v in labels(f))) for f in cx.facets]
    return SimplicialComplex(len(old), tuple(facets)), {k + 1: v for k, v in enumerate(old)}


# ---------------------------------------------------------------------------
# combinatorial properties


def is_pure(cx: SimplicialComplex) -> bool:
    return len({card(f) for f in cx.facets}) <= 1


def is_connected(cx: SimplicialComplex) -> bool:
    """Connectedness of the underlying graph; complexes with <= 1 vertex count as connected."""
    pending = [f for f in cx.facets if f]
    if not pending:
        return True
    reached = pending.pop()
    grew = True
    while pending and grew:
        grew = False
        rest = []
        for f in pending:
            if f & reached:
                reached |= f
                grew = True
            else:
                rest.append(f)
        pending = rest
    return not pending


def components(cx: SimplicialComplex) -> list[Face]:
    """Vertex sets of the connected components."""
    comps: list[Face] = []
    for f in cx.facets:
        if not f:
            continue
        merged = f
        keep = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                keep.append(c)
        comps = keep + [merged]
    return sorted(comps, key=face_key)


def is_vertex_decomposable(cx: SimplicialComplex):
    """Vertex decomposability in the nonpure sense.

    Shedding vertices are tried in ascending label order.  On success the
    witness lists the shedding vertices along the chain of deletions.
    """
    from .reports import CheckReport

    if cx.is_void:
        raise InputError("vertex decomposability of the void complex")
    check_cap("cap_n", cx.n)
    ok, chain = _vd(cx.facets)
    witness = {"shedding_vertices": list(chain)} if ok else {"reason": "no shedding vertex"}
    return CheckReport("vertex-decomposable", ok, witness)


@lru_cache(maxsize=1 << 16)
def _vd(facets: tuple[Face, ...]):
    if len(facets) == 1:
        return True, ()
    vmask = 0
    for f in facets:
        vmask |= f
    for v in labels(vmask):
        bit = 1 << (v - 1)
        dele = maximal(f & ~bit for f in facets)
        lk = maximal(f & ~bit for f in facets if f & bit)
        lk_faces = _face_set(lk)
        if any(g in lk_faces for g in dele):
            continue
        ok_link, _ = _vd(lk)
        if not ok_link:
            continue
        ok_del, chain = _vd(dele)
        if ok_del:
            return True, (v,) + chain
    return False, ()


def _shelling_step_ok(new: Face, previous: list[Face]) -> bool:
    # <previous> ∩ <new> must be pure of dimension dim(new) - 1
    target = card(new) - 1
    inter = [p & new for p in previous]
    tops = [x for x in inter if card(x) == target]
    if not tops:
        return False
    return all(any(x & t == x for t in tops) for x in inter)


def is_shellable(cx: SimplicialComplex):
    """Search for a (nonpure) shelling order of the facets.

    Only orders of weakly decreasing facet dimension are explored; a complex
    with any shelling also has one of that form.  The witness on success is
    the shelling order.
    """
    from .reports import CheckReport

    if cx.is_void:
        raise InputError("shellability of the void complex")
    check_cap("cap_facets", len(cx.facets))
    facets = sorted(cx.facets, key=lambda f: (-card(f), face_key(f)))
    t = len(facets)
    dead: set[int] = set()
    order: list[int] = []

    def extend(used: int) -> bool:
        if len(order) == t:
            return True
        if used in dead:
            return False
        top = max(card(facets[k]) for k in range(t) if not used >> k & 1)
        prev = [facets[k] for k in order]
        for k in range(t):
            if used >> k & 1 or card(facets[k]) != top:
                continue
            if order and not _shelling_step_ok(facets[k], prev):
                continue
            order.append(k)
            if extend(used | (1 << k)):
                return True
            order.pop()
        dead.add(used)
        return False

    ok = extend(0)
    if ok:
        witness = {"shelling_order": [list(labels(facets[k])) for k in order]}
    else:
        witness = {"reason": "no shelling order"}
    return CheckReport("shellable", ok, witness)


# ---------------------------------------------------------------------------
# text format


def to_text(cx: SimplicialComplex) -> str:
    """``n <N>`` then one facet per line; ``-`` is the empty face."""
    lines = [f"n {cx.n}"]
    for f in cx.facets:
        lines.append(" ".join(map(str, labels(f))) if f else "-")
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _read_header(lines) -> int:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError("missing 'n <N>' header") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(f"expected 'n <N>', got {line!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"ground-set size {parts[1]!r} is not an integer", lineno) from None
    if n < 0:
        raise ParseError("ground-set size must be nonnegative", lineno)
    return n


def parse_complex(text: str) -> SimplicialComplex:
    lines = _content_lines(text)
    n = _read_header(lines)
    gens = []
    for lineno, line in lines:
        if line == "-":
            gens.append(0)
            continue
        try:
            verts = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        for v in verts:
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno)
        if len(set(verts)) != len(verts):
            raise ParseError(f"repeated vertex in {line!r}", lineno)
        gens.append(face(*verts))
    return SimplicialComplex(n, tuple(gens))
