"""Hypercube graphs Q_d with integer vertex ids.

A vertex is identified by the integer ``sum(x_i * 2**(i-1))`` where ``x_1 x_2 ... x_d``
is its label string. The first character of a label is therefore the least
significant bit, so ``label(1, 3) == "100"`` and ``label(4, 3) == "001"``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

MAX_DIMENSION = 16


def label(v: int, d: int) -> str:
    """Label string of vertex ``v`` in Q_d (character i has weight 2**(i-1))."""
    return "".join("1" if (v >> i) & 1 else "0" for i in range(d))


def parse_label(s: str) -> int:
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"not a binary label: {s!r}")
    return sum(1 << i for i, c in enumerate(s) if c == "1")


def parity(v: int) -> int:
    return v.bit_count() & 1


def hamming_adjacent(a: str | int, b: str | int, d: int | None = None) -> bool:
    """True iff the two labels differ in exactly one digit.

    Accepts label strings (which must have equal length) or integer ids.
    """
    if isinstance(a, str) or isinstance(b, str):
        if not (isinstance(a, str) and isinstance(b, str)):
            raise TypeError("mix of string and integer labels")
        if len(a) != len(b):
            raise ValueError(f"label length mismatch: {a!r} vs {b!r}")
        return sum(x != y for x, y in zip(a, b)) == 1
    return (a ^ b).bit_count() == 1


@dataclass(frozen=True)
class HypercubeGraph:
    d: int

    def __post_init__(self) -> None:
        if not 1 <= self.d <= MAX_DIMENSION:
            raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {self.d}")

    @property
    def n(self) -> int:
        return 1 << self.d

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (v, v | (1 << i))
            for v in range(self.n)
            for i in range(self.d)
            if not (v >> i) & 1
        )

    def neighbors(self, v: int) -> list[int]:
        return [v ^ (1 << i) for i in range(self.d)]

    def label(self, v: int) -> str:
        return label(v, self.d)


def build_hypercube(d: int) -> HypercubeGraph:
    return HypercubeGraph(d)


def edge_set(d: int) -> frozenset[tuple[int, int]]:
    return frozenset(HypercubeGraph(d).edges)


@dataclass(frozen=True)
class CubeAutomorphism:
    """``v -> permute_bits(v) XOR flip``; ``perm[i]`` is the target position of bit i."""

    perm: tuple[int, ...]
    flip: int = 0

    @classmethod
    def identity(cls, d: int) -> "CubeAutomorphism":
        return cls(tuple(range(d)), 0)

    def __call__(self, v: int) -> int:
        out = 0
        for i, j in enumerate(self.perm):
            if (v >> i) & 1:
                out |= 1 << j
        return out ^ self.flip

    def mapping(self) -> list[int]:
        return [self(v) for v in range(1 << len(self.perm))]


def enumerate_automorphisms(d: int) -> Iterator[CubeAutomorphism]:
    """All d! * 2**d automorphisms of Q_d, each exactly once."""
    if d > 6:
        raise ValueError("automorphism enumeration is limited to d <= 6")
    for perm in itertools.permutations(range(d)):
        for flip in range(1 << d):
            yield CubeAutomorphism(perm, flip)
