"""Exact arithmetic on finite sets of non-negative integers.

Labels are immutable sorted tuples of Python ints, so there is no overflow
to worry about.  An AP-set is a set whose sorted elements have a constant gap;
that gap is the set's deterministic index.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional


class NotAPError(ValueError):
    """Raised when an operation needs an AP-set and gets something else."""


class SetLabel(tuple):
    """Nonempty, strictly increasing tuple of non-negative integers."""

    __slots__ = ()

    def __new__(cls, elements: Iterable[int] = ()):
        items = sorted(set(elements))
        if not items:
            raise ValueError("a set-label must be nonempty")
        for x in items:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"set-label elements must be integers, got {x!r}")
            if x < 0:
                raise ValueError(f"set-label elements must be non-negative, got {x}")
        return super().__new__(cls, items)

    @classmethod
    def from_json(cls, data) -> "SetLabel":
        """Parse a JSON array; it must already be strictly increasing."""
        if not isinstance(data, list):
            raise ValueError(f"expected a JSON array of integers, got {data!r}")
        if any(b <= a for a, b in zip(data, data[1:]) if isinstance(a, int) and isinstance(b, int)):
            raise ValueError(f"set-label {data!r} is not strictly increasing")
        return cls(data)

    def to_json(self) -> list[int]:
        return list(self)

    @property
    def first(self) -> int:
        return self[0]

    @property
    def last(self) -> int:
        return self[-1]

    def shifted(self, t: int) -> "SetLabel":
        if t < 0:
            raise ValueError("translations must be non-negative")
        return SetLabel(x + t for x in self)

    def shape(self) -> tuple[int, ...]:
        """Offsets from the minimum; equal shapes differ only by translation."""
        a = self[0]
        return tuple(x - a for x in self)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


class APDescriptor(NamedTuple):
    first: int
    diff: Optional[int]
    length: int

    def expand(self) -> SetLabel:
        if self.length == 1:
            return SetLabel((self.first,))
        return make_ap(self.first, self.diff, self.length)


def make_ap(a: int, d: int, n: int) -> SetLabel:
    """Return ``{a, a+d, ..., a+(n-1)d}``."""
    if n < 1:
        raise ValueError(f"AP length must be at least 1, got {n}")
    if d < 1:
        raise ValueError(f"AP common difference must be at least 1, got {d}")
    if a < 0:
        raise ValueError(f"AP first term must be non-negative, got {a}")
    return SetLabel(range(a, a + n * d, d))


def sumset(A: Iterable[int], B: Iterable[int]) -> SetLabel:
    return SetLabel(a + b for a in A for b in B)


def ap_of(A: SetLabel) -> Optional[APDescriptor]:
    """Canonical AP form of ``A``, or None when the gaps are not constant.

    Singletons are APs with no common difference.
    """
    if len(A) == 1:
        return APDescriptor(A[0], None, 1)
    d = A[1] - A[0]
    for x, y in zip(A[1:], A[2:]):
        if y - x != d:
            return None
    return APDescriptor(A[0], d, len(A))


def is_ap(A: SetLabel) -> bool:
    return ap_of(A) is not None


def deterministic_index(A: SetLabel) -> Optional[int]:
    desc = ap_of(A)
    if desc is None:
        raise NotAPError(f"{A!r} is not an arithmetic progression")
    return desc.diff


def index_multiplier(d_small: int, d_large: int) -> Optional[int]:
    """Integer k with ``d_large == k * d_small``, or None."""
    if d_large % d_small:
        return None
    return d_large // d_small
