"""Squarefree monomial ideals and their graded Betti numbers.

Betti numbers are computed from Hochster's formula,

    β_{i,j}(k[Δ]) = Σ_{W ⊆ [n], #W = j} dim H̃_{j-i-1}(Δ_W; k),

and, independently, from the Koszul complex of the module (see
:func:`koszul_betti`), which never looks at restrictions or simplicial
homology.  On top of these sit the "linear in the first r steps" tests for
an ideal and for all of its squarefree degree components.
"""

from __future__ import annotations

import dataclasses
import json
from collections import Counter
from functools import lru_cache
from itertools import combinations

from .complex import (
    Face,
    SimplicialComplex,
    card,
    face,
    face_key,
    labels,
    maximal,
    minimal_nonfaces,
)
from .config import check_cap
from .errors import InputError
from .homology import _reduced
from .linalg import QQ, Field, rank
from .reports import CheckReport


def minimal(masks) -> tuple[Face, ...]:
    """Minimal elements under containment, lexicographically sorted."""
    uniq = sorted(set(masks), key=card)
    kept: list[Face] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=face_key))


@dataclasses.dataclass(frozen=True)
class SquarefreeIdeal:
    """Ideal of ``k[x_1..x_n]`` generated by the monomials ``x_F`` for F in ``generators``.

    No generators is the zero ideal; the generator ``0`` (the empty face) is
    the unit ideal.
    """

    n: int
    generators: tuple[Face, ...] = ()

    def __post_init__(self):
        top = 1 << self.n
        for g in self.generators:
            if g < 0 or g >= top:
                raise InputError(f"generator uses a variable outside x1..x{self.n}")
        object.__setattr__(self, "generators", minimal(self.generators))

    @classmethod
    def from_monomials(cls, n: int, monomials) -> SquarefreeIdeal:
        """Build from label collections, e.g. ``[[1, 2], [2, 3]]`` for (x1x2, x2x3)."""
        return cls(n, tuple(face(*m) for m in monomials))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def degrees(self) -> Counter:
        return Counter(card(g) for g in self.generators)

    def __contains__(self, mask: Face) -> bool:
        return any(g & mask == g for g in self.generators)

    def __repr__(self):
        gens = ", ".join("x" + "x".join(map(str, labels(g))) if g else "1" for g in self.generators)
        return f"SquarefreeIdeal(n={self.n}, ({gens}))"


@dataclasses.dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``β_{i,j}`` stored sparsely as ``((i, j), value)`` pairs."""

    entries: tuple[tuple[tuple[int, int], int], ...]
    subject: str = "face-ring"

    @classmethod
    def from_dict(cls, table: dict, subject: str) -> BettiTable:
        return cls(tuple(sorted((k, v) for k, v in table.items() if v)), subject)

    def __getitem__(self, key) -> int:
        return self.as_dict().get(key, 0)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), _v in self.entries), default=0)

    def to_json(self) -> str:
        return json.dumps(
            {"subject": self.subject, "entries": [{"i": i, "j": j, "value": v} for (i, j), v in self.entries]},
            sort_keys=True,
        )

    def to_text(self) -> str:
        """Macaulay2-style table: column i, row j - i, ``.`` for zero."""
        if not self.entries:
            return "(zero)"
        table = self.as_dict()
        cols = range(0, max(i for i, _ in table) + 1)
        row_keys = sorted({j - i for i, j in table})
        rows = range(row_keys[0], row_keys[-1] + 1)
        cells = [[str(table.get((i, i + t), ".")) for i in cols] for t in rows]
        totals = [str(sum(v for (i, _), v in table.items() if i == c)) for c in cols]
        width = max(len(s) for s in [*totals, *(c for row in cells for c in row), str(cols[-1])])
        lab = max(len(f"{t}:") for t in rows)
        lab = max(lab, len("total:"))
        lines = [" " * lab + " " + " ".join(str(c).rjust(width) for c in cols)]
        lines.append("total:".rjust(lab) + " " + " ".join(s.rjust(width) for s in totals))
        for t, row in zip(rows, cells):
            lines.append(f"{t}:".rjust(lab) + " " + " ".join(s.rjust(width) for s in row))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# ideals <-> complexes


def sr_ideal(cx: SimplicialComplex) -> SquarefreeIdeal:
    """Stanley-Reisner ideal: generated by the minimal nonfaces."""
    if cx.is_void:
        raise InputError("Stanley-Reisner ideal of the void complex")
    return SquarefreeIdeal(cx.n, minimal_nonfaces(cx))


def complex_of_ideal(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """The complex whose faces are the sets containing no generator."""
    n = ideal.n
    facets = [(1 << n) - 1]
    for g in ideal.generators:
        if g == 0:
            return SimplicialComplex.void(n)
        nxt = []
        for f in facets:
            if f & g == g:
                nxt.extend(f & ~(1 << (v - 1)) for v in labels(g))
            else:
                nxt.append(f)
        facets = list(maximal(nxt))
    return SimplicialComplex(n, tuple(facets))


def degree_component(ideal: SquarefreeIdeal, j: int) -> SquarefreeIdeal:
    """The ideal generated by every squarefree degree-``j`` monomial of ``ideal``."""
    if j < 0:
        raise InputError("degree must be nonnegative")
    if j > ideal.n or ideal.is_zero:
        return SquarefreeIdeal(ideal.n)
    gens = [face(*c) for c in combinations(range(1, ideal.n + 1), j)]
    return SquarefreeIdeal(ideal.n, tuple(m for m in gens if m in ideal))


# ---------------------------------------------------------------------------
# Hochster


def betti_face_ring(cx: SimplicialComplex, field: Field = QQ) -> BettiTable:
    """Betti numbers of ``k[Δ]`` over the polynomial ring, by Hochster's formula."""
    if cx.is_void:
        raise InputError("Betti numbers of the void complex")
    check_cap("cap_hochster", cx.n)
    return BettiTable.from_dict(_hochster(cx.n, cx.facets, field), "face-ring")


@lru_cache(maxsize=4096)
def _hochster(n: int, facets: tuple[Face, ...], field: Field) -> dict:
    table: Counter = Counter()
    for w in range(1 << n):
        sub = maximal(f & w for f in facets)
        j = card(w)
        for deg, dim in _reduced(sub, field).dims:
            table[(j - deg - 1, j)] += dim
    return dict(table)


def betti_ideal(ideal: SquarefreeIdeal, field: Field = QQ) -> BettiTable:
    """Betti numbers of the ideal itself: ``β_{i,j}(I) = β_{i+1,j}(k[Δ])``."""
    if ideal.is_zero:
        raise InputError("the zero ideal has no resolution steps")
    if 0 in ideal.generators:
        raise InputError("the unit ideal is free; no squarefree complex to resolve")
    ring = betti_face_ring(complex_of_ideal(ideal), field)
    table = {(i - 1, j): v for (i, j), v in ring.entries if i >= 1}
    out = BettiTable.from_dict(table, "ideal")
    assert {j: v for (i, j), v in out.entries if i == 0} == dict(ideal.degrees())
    return out


def pd_and_depth(cx: SimplicialComplex, field: Field = QQ) -> tuple[int, int]:
    """Projective dimension and depth of ``k[Δ]`` (Auslander-Buchsbaum)."""
    pd = betti_face_ring(cx, field).projective_dimension
    depth = cx.n - pd
    assert depth <= cx.dim + 1, "depth exceeds Krull dimension"
    return pd, depth


# ---------------------------------------------------------------------------
# linearity


def is_linear_first_r(ideal: SquarefreeIdeal, r: int, field: Field = QQ) -> CheckReport:
    """``β_{i,i+t}(I) = 0`` for all ``i < r`` and ``t != d``, with d the generator degree.

    Generators in two different degrees fail at step 0.  The zero ideal
    passes vacuously.
    """
    if r < 1:
        raise InputError("r must be at least 1")

    def report(ok, witness=None):
        return CheckReport("linear in first r steps", ok, witness, r, str(field))

    if ideal.is_zero:
        return report(True)
    degs = sorted(ideal.degrees())
    d = degs[0]
    if len(degs) > 1:
        return report(False, {"i": 0, "j": degs[1], "d": d})
    for (i, j), _v in betti_ideal(ideal, field).entries:
        if i < r and j - i != d:
            return report(False, {"i": i, "j": j, "d": d})
    return report(True)


def is_cw_linear_first_r(ideal: SquarefreeIdeal, r: int, field: Field = QQ) -> CheckReport:
    """Every nonzero squarefree component ``I_[j]`` is linear in the first r steps."""
    for j in range(0, ideal.n + 1):
        comp = degree_component(ideal, j)
        if comp.is_zero:
            continue
        sub = is_linear_first_r(comp, r, field)
        if not sub:
            return CheckReport(
                "componentwise linear in first r steps", False, {"component": j, "failure": sub.witness}, r, str(field)
            )
    return CheckReport("componentwise linear in first r steps", True, None, r, str(field))


# ---------------------------------------------------------------------------
# Koszul oracle


def _multidegrees(n: int, total: int):
    """All exponent vectors in N^n with coordinate sum at most ``total``."""

    def rec(k, left):
        if k == n:
            yield ()
            return
        for e in range(left + 1):
            for rest in rec(k + 1, left - e):
                yield (e,) + rest

    yield from rec(0, total)


def koszul_betti(target, field: Field = QQ) -> BettiTable:
    """Betti numbers as Koszul homology, ``β_{i,a} = dim H_i(K(x_1..x_n) ⊗ M)_a``.

    ``target`` is a :class:`SimplicialComplex` (M = k[Δ]) or a nonzero
    :class:`SquarefreeIdeal` (M = I).  Every multidegree of total degree at
    most n is scanned, squarefree or not.
    """
    if isinstance(target, SimplicialComplex):
        if target.is_void:
            raise InputError("Betti numbers of the void complex")
        n = target.n
        ideal = SquarefreeIdeal(n, minimal_nonfaces(target))
        subject = "face-ring"

        def in_module(a):
            return not _divisible(a, ideal.generators)
    elif isinstance(target, SquarefreeIdeal):
        if target.is_zero:
            raise InputError("the zero ideal has no resolution steps")
        n = target.n
        ideal = target
        subject = "ideal"

        def in_module(a):
            return _divisible(a, ideal.generators)
    else:
        raise InputError(f"cannot resolve {type(target).__name__}")
    check_cap("cap_koszul", n)

    table: Counter = Counter()
    for a in _multidegrees(n, n):
        support = [k for k in range(n) if a[k]]
        basis: dict[int, list[int]] = {}
        for size in range(len(support) + 1):
            for s in combinations(support, size):
                smask = sum(1 << k for k in s)
                if in_module(_shift(a, smask, n)):
                    basis.setdefault(size, []).append(smask)
        if not basis:
            continue
        ranks = {}
        for size in basis:
            if size == 0 or size - 1 not in basis:
                ranks[size] = 0
                continue
            index = {m: k for k, m in enumerate(basis[size - 1])}
            rows = []
            for smask in basis[size]:
                row = {}
                bits = [k for k in range(n) if smask >> k & 1]
                for pos, k in enumerate(bits):
                    tgt = smask & ~(1 << k)
                    if tgt in index:
                        row[index[tgt]] = (-1) ** pos
                rows.append(row)
            ranks[size] = rank(rows, field)
        deg = sum(a)
        for size, elems in basis.items():
            h = len(elems) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if h:
                table[(size, deg)] += h
    return BettiTable.from_dict(dict(table), subject)


def _shift(a, smask, n):
    return tuple(a[k] - (smask >> k & 1) for k in range(n))


def _divisible(a, generators) -> bool:
    supp = 0
    for k, e in enumerate(a):
        if e:
            supp |= 1 << k
    return any(g & supp == g for g in generators)
