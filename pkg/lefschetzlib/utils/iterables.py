from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Sequence, TypeVar

    T = TypeVar("T")


def adjacent_n_tuples(objects: Sequence[T], n: int) -> zip[tuple[T, ...]]:
    """
    Cyclic windows of length n, so the last window wraps around
    to the start of the sequence.
    """
    return zip(*[
        [*objects[k:], *objects[:k]]
        for k in range(n)
    ])


def adjacent_pairs(objects: Sequence[T]) -> zip[tuple[T, T]]:
    return adjacent_n_tuples(objects, 2)


def rotations(seq: Sequence[T]) -> list[tuple[T, ...]]:
    return [
        (*seq[k:], *seq[:k])
        for k in range(len(seq))
    ]


def minimal_rotation(seq: Sequence[T]) -> tuple[T, ...]:
    """Lexicographically smallest rotation of a cyclic sequence"""
    if len(seq) == 0:
        return tuple()
    return min(rotations(seq))


def minimal_period(seq: Sequence[T]) -> int:
    """
    Smallest p dividing len(seq) such that seq is the p-prefix
    repeated len(seq) / p times.
    """
    length = len(seq)
    for p in range(1, length + 1):
        if length % p == 0 and tuple(seq[p:]) == tuple(seq[:-p] if p < length else ()):
            return p
    return length
