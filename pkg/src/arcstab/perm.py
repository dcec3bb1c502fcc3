"""Permutations of {0, ..., n-1} stored as image tuples.

Points are acted on from the right: ``p * q`` first applies ``p`` and then
``q``, so ``(p * q)(i) == q(p(i))``. Conjugation ``p ** q`` is ``q^-1 p q``,
matching exponent notation for group elements.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = None

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._hash = None
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> "Permutation":
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < n or x in seen:
                    raise ValueError(f"bad cycle {cyc!r} for degree {n}")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a] = b
        return cls._raw(tuple(img))

    @classmethod
    def parse_cycles(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``(0 2 4)(1 3 5)``; ``()`` is the identity."""
        body = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\)\s*)+", body):
            raise ValueError(f"cannot parse cycles: {text!r}")
        cycles = [
            [int(t) for t in re.split(r"[\s,]+", c.strip()) if t]
            for c in re.findall(r"\(([^)]*)\)", body)
        ]
        cycles = [c for c in cycles if c]
        top = max((max(c) for c in cycles), default=-1) + 1
        return cls.from_cycles(cycles, top if n is None else n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise ValueError(f"degree mismatch: {len(self.images)} vs {len(other.images)}")
        return Permutation._raw(tuple(map(other.images.__getitem__, self.images)))

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def __pow__(self, other):
        if isinstance(other, Permutation):
            return other.inverse() * self * other
        e = int(other)
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(len(self.images))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self.images) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        from math import lcm

        out = 1
        for c in self.cycles():
            out = lcm(out, len(c))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` then ``q``."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def identity(n: int) -> Permutation:
    return Permutation.identity(n)
