"""Python-int bit sets over point and block indices."""

from functools import reduce
from operator import or_

from .errors import IndexOutOfRange


def bits_from_indices(indices) -> int:
    return reduce(or_, (1 << int(i) for i in indices), 0)


def indices_from_bits(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def as_bits(S, size: int | None = None) -> int:
    """Accept a PointSet-like object, an int bit set, or an iterable of indices."""
    if hasattr(S, "members"):
        bits = S.members
    elif isinstance(S, int):
        bits = S
    else:
        idx = [int(i) for i in S]
        if size is not None and any(not 0 <= i < size for i in idx):
            raise IndexOutOfRange(f"index outside [0, {size})")
        bits = bits_from_indices(idx)
    if bits < 0 or (size is not None and bits >> size):
        raise IndexOutOfRange(f"bit set has members outside [0, {size})")
    return bits
