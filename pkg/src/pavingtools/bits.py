"""Bitmask encoding of element sets.

Element ``i`` (1-based) lives in bit ``i - 1``.  Everything hot in the
package works on plain ``int`` masks; conversion to tuples happens only at
the API boundary.
"""

from itertools import combinations

from .errors import ElementOutOfRange, GroundSetTooLarge

MAX_ELEMENTS = 64


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(elements, n: int) -> int:
    """Encode an iterable of 1-based ids, checking each lies in ``1..n``."""
    if isinstance(elements, int):
        raise TypeError("expected an iterable of element ids, got int")
    mask = 0
    for e in elements:
        if not isinstance(e, int) or not 1 <= e <= n:
            raise ElementOutOfRange(f"element {e!r} not in 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def to_tuple(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def check_size(n: int) -> None:
    if n < 0:
        raise ElementOutOfRange(f"ground set size must be nonnegative, got {n}")
    if n > MAX_ELEMENTS:
        raise GroundSetTooLarge(f"ground sets above {MAX_ELEMENTS} elements are unsupported (got {n})")


def subsets_of_size(n: int, k: int):
    """Yield masks of all k-subsets of ``1..n`` in lexicographic order."""
    for combo in combinations(range(n), k):
        m = 0
        for i in combo:
            m |= 1 << i
        yield m


def submasks_of_size(mask: int, k: int):
    bits = [1 << i for i in range(mask.bit_length()) if mask >> i & 1]
    for combo in combinations(bits, k):
        yield sum(combo)


def remove_bit(mask: int, e: int) -> int:
    """Drop element ``e`` (1-based) and shift higher elements down by one."""
    low = mask & ((1 << (e - 1)) - 1)
    high = mask >> e
    return low | (high << (e - 1))


def insert_bit(mask: int, e: int) -> int:
    """Inverse of :func:`remove_bit`: open a zero slot at position ``e``."""
    low = mask & ((1 << (e - 1)) - 1)
    high = mask >> (e - 1)
    return low | (high << e)


def sort_key(mask: int) -> tuple:
    return to_tuple(mask)
