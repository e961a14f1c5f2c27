"""Deciding Serre's condition S_r and its sequential variants.

A ``(d-1)``-dimensional complex is S_r iff ``H̃_i(lk F) = 0`` for every
``-1 <= i <= r-2`` and every face ``F`` (the empty face included) with
``#F <= d-i-2``.  Degree -1 amounts to purity, degree 0 to connectedness of
the link; higher degrees are computed exactly.

Sequential S_r is decided three ways (pure skeletons, the relative
decomposition by facet dimension, and the recursive S_2 criterion) so the
procedures can be checked against one another.
"""

from __future__ import annotations

from functools import lru_cache

from .complex import (
    Face,
    RelativePair,
    SimplicialComplex,
    card,
    face_key,
    face_set,
    facet_generated,
    intersection,
    is_connected,
    labels,
    link,
    maximal,
    pure_skeleton,
    union,
)
from .errors import InputError
from .homology import reduced_homology, relative_homology
from .linalg import QQ, Field
from .reports import CheckReport


def _check_r(r: int) -> None:
    if r < 2:
        raise InputError(f"r must be at least 2 (every face ring is S_1), got {r}")


def _faces_lex(cx: SimplicialComplex, max_size: int) -> list[Face]:
    return sorted((f for f in face_set(cx) if card(f) <= max_size), key=face_key)


def _witness(f: Face, degree: int, **extra):
    out = {"face": list(labels(f)), "degree": degree}
    out.update(extra)
    return out


def is_Sr(cx: SimplicialComplex, r: int, field: Field = QQ) -> CheckReport:
    """Serre's condition S_r via vanishing of link homology.

    The void complex, ``{∅}`` and complexes of dimension 0 satisfy every S_r
    vacuously.  The witness is the first failing ``(degree, face)`` in
    lexicographic order.
    """
    _check_r(r)

    def report(ok, witness=None):
        return CheckReport("S_r", ok, witness, r, str(field))

    if cx.is_void or cx.dim <= 0:
        return report(True)
    d = cx.dim + 1
    # i = -1: no facet may have #F <= d - 1
    for f in cx.facets:
        if card(f) < d:
            return report(False, _witness(f, -1, reason="not pure"))
    faces = _faces_lex(cx, d - 2)
    for i in range(0, r - 1):
        bound = d - i - 2
        if bound < 0:
            break
        for f in faces:
            if card(f) > bound:
                continue
            lk = link(cx, f)
            if i == 0:
                if not is_connected(lk):
                    return report(False, _witness(f, 0, reason="link disconnected"))
            elif reduced_homology(lk, field)[i]:
                return report(False, _witness(f, i, reason="link homology"))
    return report(True)


def is_CM(cx: SimplicialComplex, field: Field = QQ) -> CheckReport:
    """Reisner's criterion: ``H̃_i(lk F) = 0`` for every face F and ``i < dim lk F``.

    The result is cross-checked against ``is_Sr(cx, dim + 1)``.
    """
    if cx.is_void:
        raise InputError("Cohen-Macaulayness of the void complex")
    verdict, witness = True, None
    for f in _faces_lex(cx, cx.dim + 1):
        lk = link(cx, f)
        h = reduced_homology(lk, field)
        bad = [i for i, v in h.dims if i < lk.dim and v]
        if bad:
            verdict, witness = False, _witness(f, bad[0])
            break
    twin = is_Sr(cx, max(2, cx.dim + 1), field).verdict
    assert twin == verdict, "Reisner criterion and S_(dim+1) disagree"
    return CheckReport("CM", verdict, witness, None, str(field))


def is_relative_Sr(pair: RelativePair, r: int, field: Field = QQ) -> CheckReport:
    """S_r for a relative complex: ``H̃_i(lk_Δ F, lk_Γ F) = 0`` over the usual range."""
    _check_r(r)
    amb, sub = pair.ambient, pair.sub
    if amb.is_void:
        raise InputError("relative S_r with a void ambient complex")
    d = amb.dim + 1
    sub_faces = face_set(sub)
    faces = _faces_lex(amb, d + 1)
    for i in range(-1, r - 1):
        bound = d - i - 2
        if bound < 0:
            break
        for f in faces:
            if card(f) > bound:
                continue
            lk_amb = link(amb, f)
            lk_sub = link(sub, f) if f in sub_faces else SimplicialComplex.void(amb.n)
            if relative_homology(RelativePair(lk_amb, lk_sub), field)[i]:
                return CheckReport("relative S_r", False, _witness(f, i), r, str(field))
    return CheckReport("relative S_r", True, None, r, str(field))


def is_seq_Sr_skeleton(cx: SimplicialComplex, r: int, field: Field = QQ) -> CheckReport:
    """Sequential S_r: every pure skeleton ``Δ^[i]``, ``-1 <= i <= dim``, is S_r."""
    _check_r(r)
    if cx.is_void:
        raise InputError("sequential S_r of the void complex")
    for i in range(-1, cx.dim + 1):
        sub = is_Sr(pure_skeleton(cx, i), r, field)
        if not sub:
            return CheckReport("sequentially S_r", False, {"skeleton": i, "failure": sub.witness}, r, str(field))
    return CheckReport("sequentially S_r", True, None, r, str(field))


def relative_decomposition(cx: SimplicialComplex) -> list[tuple[int, RelativePair]]:
    """Pairs ``(Δ*_i, Δ*_i ∩ (Δ*_{i+1} ∪ ... ∪ Δ*_dim))`` for each i with Δ*_i nonvoid."""
    out = []
    higher = SimplicialComplex.void(cx.n)
    for i in range(cx.dim, -2, -1):
        star = facet_generated(cx, i)
        if not star.is_void:
            out.append((i, RelativePair(star, intersection(star, higher))))
            higher = union(higher, star)
    out.reverse()
    return out


def is_seq_Sr_relative(cx: SimplicialComplex, r: int, field: Field = QQ) -> CheckReport:
    """Sequential S_r through the relative complexes of the facet-dimension filtration."""
    _check_r(r)
    if cx.is_void:
        raise InputError("sequential S_r of the void complex")
    for i, pair in relative_decomposition(cx):
        sub = is_relative_Sr(pair, r, field)
        if not sub:
            return CheckReport(
                "sequentially S_r (relative)", False, {"facet_dimension": i, "failure": sub.witness}, r, str(field)
            )
    return CheckReport("sequentially S_r (relative)", True, None, r, str(field))


def is_seq_S2_local(cx: SimplicialComplex, field: Field = QQ) -> CheckReport:
    """Sequential S_2 from connected pure skeletons and sequentially S_2 vertex links.

    Only connectivity is involved, so ``field`` is recorded but never used.
    """
    if cx.is_void:
        raise InputError("sequential S_2 of the void complex")
    witness = _seq_s2_local(cx.facets)
    return CheckReport("sequentially S_2 (local)", witness is None, witness, 2, str(field))


@lru_cache(maxsize=1 << 15)
def _seq_s2_local(facets: tuple[Face, ...]):
    # facets only: the criterion ignores unused ground-set vertices
    dim = max(card(f) for f in facets) - 1
    if dim <= 0:
        return None
    n = max(facets).bit_length()
    cx = SimplicialComplex(n, facets)
    for i in range(1, dim + 1):
        if not is_connected(pure_skeleton(cx, i)):
            return {"pure_skeleton_disconnected": i}
    for v in cx.vertices:
        bit = 1 << (v - 1)
        lk = maximal(f & ~bit for f in facets if f & bit)
        inner = _seq_s2_local(lk)
        if inner is not None:
            return {"vertex_link": v, "failure": inner}
    return None


def is_seq_CM(cx: SimplicialComplex, field: Field = QQ) -> CheckReport:
    """Sequential Cohen-Macaulayness: every pure skeleton is CM."""
    if cx.is_void:
        raise InputError("sequential CM of the void complex")
    for i in range(-1, cx.dim + 1):
        sub = is_CM(pure_skeleton(cx, i), field)
        if not sub:
            return CheckReport("sequentially CM", False, {"skeleton": i, "failure": sub.witness}, None, str(field))
    return CheckReport("sequentially CM", True, None, None, str(field))
