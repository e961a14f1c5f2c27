"""Exact rank of sparse integer matrices over Q or GF(p).

Matrices are lists of rows, each row a ``{column: value}`` dict with nonzero
integer values.  Over Q the elimination is fraction free: rows stay integral
and are divided by their content after every step.  Over GF(p) everything is
reduced mod p.
"""

from __future__ import annotations

import dataclasses
from math import gcd

from .errors import InputError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclasses.dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals when ``p`` is None, else GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise InputError(f"field characteristic {self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> Field:
        """Parse ``q``/``Q``/``0`` as the rationals, or a prime as GF(p)."""
        text = str(text).strip()
        if text.lower() in ("q", "qq", "0", "rationals"):
            return QQ
        try:
            p = int(text)
        except ValueError:
            raise InputError(f"unrecognised field {text!r}; use q or a prime") from None
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def _column_order(rows):
    # sparsest columns become the leading columns
    support = {}
    for row in rows:
        for c in row:
            support[c] = support.get(c, 0) + 1
    ordered = sorted(support, key=lambda c: (support[c], c))
    return {c: k for k, c in enumerate(ordered)}


def rank(rows, field: Field = QQ) -> int:
    """Rank of the sparse matrix given by ``rows`` over ``field``."""
    rows = [r for r in rows if r]
    if not rows:
        return 0
    order = _column_order(rows)
    if field.p is None:
        return _rank_q([{order[c]: v for c, v in r.items()} for r in rows])
    p = field.p
    reduced = []
    for r in rows:
        row = {order[c]: v % p for c, v in r.items() if v % p}
        if row:
            reduced.append(row)
    return _rank_mod_p(reduced, p)


def _rank_mod_p(rows, p):
    pivots = {}  # leading column -> row normalised to leading coefficient 1
    for row in sorted(rows, key=len):
        row = dict(row)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], p - 2, p)
                pivots[lead] = {c: (v * inv) % p for c, v in row.items()}
                break
            factor = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - factor * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def _content(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _rank_q(rows):
    pivots = {}
    for row in sorted(rows, key=len):
        row = dict(row)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                g = _content(row)
                if row[lead] < 0:
                    g = -g
                pivots[lead] = {c: v // g for c, v in row.items()}
                break
            a = piv[lead]
            b = row[lead]
            new = {}
            for c, v in row.items():
                new[c] = a * v
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            g = _content(new) if new else 1
            row = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)
