"""Reduced and relative simplicial homology over Q or GF(p).

Faces are oriented by ascending vertex label, so the boundary of
``[v0 < v1 < ... < vk]`` is ``sum_j (-1)^j [..., v_j omitted, ...]``.  The chain
complex is augmented: degree -1 is spanned by the empty face and
``∂_0 [v] = ∅``.
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache

from .complex import (
    Face,
    RelativePair,
    SimplicialComplex,
    _face_set,
    card,
    face_key,
    face_set,
    labels,
)
from .config import check_cap
from .errors import InputError
from .linalg import QQ, Field, rank


@dataclasses.dataclass(frozen=True)
class HomologyVector:
    """Dimensions of homology by degree; missing degrees are zero."""

    dims: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_sequence(cls, start: int, values) -> HomologyVector:
        return cls(tuple((start + k, v) for k, v in enumerate(values) if v))

    def __getitem__(self, degree: int) -> int:
        for d, v in self.dims:
            if d == degree:
                return v
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    @property
    def is_zero(self) -> bool:
        return not self.dims

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * v for d, v in self.dims)

    def to_text(self) -> str:
        return " ".join(f"{d}:{v}" for d, v in self.dims) or "0"


@dataclasses.dataclass(frozen=True)
class BoundaryMatrix:
    """``∂_degree`` from degree-faces (columns) to (degree-1)-faces (rows)."""

    degree: int
    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    columns: tuple[dict, ...]  # column j -> {row index: ±1}

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out


def _boundary(f: Face):
    """Yield (facet-of-f, sign) pairs of the oriented boundary of ``f``."""
    for j, v in enumerate(labels(f)):
        yield f & ~(1 << (v - 1)), (-1) ** j


def _groups(faces) -> dict[int, list[Face]]:
    groups: dict[int, list[Face]] = {}
    for f in faces:
        groups.setdefault(card(f) - 1, []).append(f)
    for g in groups.values():
        g.sort(key=face_key)
    return groups


def boundary_matrices(cx: SimplicialComplex) -> dict[int, BoundaryMatrix]:
    """``{i: ∂_i}`` for ``0 <= i <= dim``, including the augmentation ``∂_0``."""
    if cx.is_void:
        raise InputError("boundary matrices of the void complex")
    groups = _groups(face_set(cx))
    out = {}
    for i in range(0, cx.dim + 1):
        rows = groups.get(i - 1, [])
        cols = groups.get(i, [])
        index = {f: k for k, f in enumerate(rows)}
        columns = tuple({index[g]: s for g, s in _boundary(f)} for f in cols)
        out[i] = BoundaryMatrix(i, tuple(rows), tuple(cols), columns)
    return out


def _homology_of_chains(groups: dict[int, list[Face]], field: Field) -> tuple[list[int], int]:
    """dim H_i for the chains spanned by ``groups``; boundary terms outside are dropped.

    Returns the dimensions and the lowest degree they start at.
    """
    if not groups:
        return [], 0
    lo, hi = min(groups), max(groups)
    ranks = {}
    for i in range(lo + 1, hi + 1):
        lower = groups.get(i - 1)
        upper = groups.get(i)
        if not lower or not upper:
            ranks[i] = 0
            continue
        index = {f: k for k, f in enumerate(lower)}
        mat = []
        for f in upper:
            row = {index[g]: s for g, s in _boundary(f) if g in index}
            mat.append(row)
        ranks[i] = rank(mat, field)
    return [
        len(groups.get(i, ())) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        for i in range(lo, hi + 1)
    ], lo


@lru_cache(maxsize=1 << 15)
def _reduced(facets: tuple[Face, ...], field: Field) -> HomologyVector:
    if facets == (0,):
        return HomologyVector(((-1, 1),))
    common = facets[0]
    for f in facets[1:]:
        common &= f
    if common:
        return HomologyVector()  # a cone is acyclic
    if max(card(f) for f in facets) <= 2:
        return _graph_homology(facets)
    return _chain_reduced(facets, field)


def _chain_reduced(facets: tuple[Face, ...], field: Field) -> HomologyVector:
    """Reduced homology by boundary ranks alone, with no shortcuts."""
    dims, lo = _homology_of_chains(_groups(_face_set(facets)), field)
    return HomologyVector.from_sequence(lo, dims)


def _graph_homology(facets) -> HomologyVector:
    # 1-dimensional complexes: H̃_0 = components - 1, H̃_1 = E - V + components
    verts = 0
    edges = 0
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in facets:
        verts |= f
    for v in labels(verts):
        parent[v] = v
    for f in facets:
        if card(f) == 2:
            edges += 1
            a, b = labels(f)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    nv = len(parent)
    comps = sum(1 for v in parent if find(v) == v)
    return HomologyVector.from_sequence(0, [comps - 1, edges - nv + comps])


def reduced_homology(cx: SimplicialComplex, field: Field = QQ) -> HomologyVector:
    """Reduced homology; ``{∅}`` has a single class in degree -1."""
    if cx.is_void:
        raise InputError("reduced homology of the void complex")
    check_cap("cap_n", cx.n)
    return _reduced(cx.facets, field)


def relative_homology(pair: RelativePair, field: Field = QQ) -> HomologyVector:
    """Homology of the chains of ``pair.ambient`` modulo those of ``pair.sub``."""
    amb, sub = pair.ambient, pair.sub
    if amb.is_void:
        raise InputError("relative homology with a void ambient complex")
    if sub.is_void:
        return reduced_homology(amb, field)
    return _relative(amb.facets, sub.facets, field)


@lru_cache(maxsize=1 << 14)
def _relative(amb: tuple[Face, ...], sub: tuple[Face, ...], field: Field) -> HomologyVector:
    sub_faces = _face_set(sub)
    rel = [f for f in _face_set(amb) if f not in sub_faces]
    if not rel:
        return HomologyVector()
    dims, lo = _homology_of_chains(_groups(rel), field)
    return HomologyVector.from_sequence(lo, dims)
