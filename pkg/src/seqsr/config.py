"""Enumeration caps.

Every exponential routine consults the active :class:`Limits`.  The defaults
can be overridden for a block of code::

    with limits(cap_facets=40):
        is_shellable(cx)
"""

from __future__ import annotations

import contextlib
import dataclasses
from contextvars import ContextVar

from .errors import ResourceError


@dataclasses.dataclass(frozen=True)
class Limits:
    cap_n: int = 30  # ground-set size for face enumeration, duals, decomposability
    cap_facets: int = 12  # facet count for the shelling search
    cap_hochster: int = 16  # ground-set size for Hochster sums (2^n restrictions)
    cap_koszul: int = 8  # ground-set size for the Koszul oracle


_current: ContextVar[Limits] = ContextVar("seqsr_limits", default=Limits())


def current_limits() -> Limits:
    return _current.get()


@contextlib.contextmanager
def limits(**overrides):
    token = _current.set(dataclasses.replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


def check_cap(name: str, actual: int) -> None:
    limit = getattr(current_limits(), name)
    if actual > limit:
        raise ResourceError(name, limit, actual)
