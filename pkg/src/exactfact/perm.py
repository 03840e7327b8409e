"""Permutations on finite point sets {1..degree}.

Points are 1-based throughout to match the usual cycle notation
"(1,2,3,4,5)(6,7,8)".  A permutation is stored as a tuple ``images``
where ``images[i]`` is the image of point ``i + 1``; values are 1-based.
Instances are immutable and hashable, so they can be shared freely and
used as dict keys / set members.
"""

from __future__ import annotations

import re
from math import lcm


class DegreeMismatch(ValueError):
    """Raised when two permutations of different degrees are combined."""


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*[, ]\s*[0-9]+)*)\s*\)")


class Permutation:
    """A bijection of {1..degree}, immutable after construction."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(1, degree + 1))

    @staticmethod
    def from_cycles(cycles, degree: int) -> "Permutation":
        """Build from disjoint cycles given as iterables of 1-based points."""
        images = list(range(1, degree + 1))
        for cycle in cycles:
            cycle = list(cycle)
            for pt in cycle:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} out of range 1..{degree}")
            for a, b in zip(cycle, cycle[1:]):
                images[a - 1] = b
            if cycle:
                images[cycle[-1] - 1] = cycle[0]
        return Permutation(images)

    @staticmethod
    def parse(text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation, e.g. "(1,2,3)(4,5)" or "(1 2 3)(4 5)".

        Whitespace-free forms are accepted.  "()" and the empty string
        denote the identity.  If ``degree`` is omitted, the largest point
        mentioned is used.
        """
        stripped = text.replace("()", "").strip()
        cycles = []
        leftover = stripped
        for m in _CYCLE_RE.finditer(stripped):
            cycles.append([int(tok) for tok in re.split(r"[,\s]+", m.group(1))])
            leftover = leftover.replace(m.group(0), "", 1)
        if leftover.strip():
            raise ValueError(f"could not parse cycle notation: {text!r}")
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if pt in seen:
                    raise ValueError(f"point {pt} repeated in {text!r}")
                seen.add(pt)
        if degree is None:
            degree = max(seen, default=0)
        return Permutation.from_cycles(cycles, degree)

    # -- basic protocol ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return f"Permutation.parse({self.cycle_string()!r}, degree={self.degree})"

    def __str__(self):
        return self.cycle_string()

    # -- group operations ----------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(x) = self(other(x))."""
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} != {other.degree}")
        a = self.images
        return Permutation(a[v - 1] for v in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    # -- cycle structure -----------------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self.images[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self.images[nxt - 1]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def support(self) -> frozenset[int]:
        """The points actually moved."""
        return frozenset(i + 1 for i, v in enumerate(self.images) if v != i + 1)

    def element_degree(self) -> int:
        """Number of moved points (cardinality of the support)."""
        return sum(1 for i, v in enumerate(self.images) if v != i + 1)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def parity(self) -> str:
        """'even' or 'odd'."""
        return "even" if self.is_even() else "odd"

    def is_even(self) -> bool:
        moved = 0
        ncycles = 0
        for c in self.cycles():
            moved += len(c)
            ncycles += 1
        return (moved - ncycles) % 2 == 0

    def sign(self) -> int:
        return 1 if self.is_even() else -1

    def cycle_string(self) -> str:
        """Cycle notation; identity prints as "()"."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycs)

    def pad(self, degree: int) -> "Permutation":
        """Embed into a larger degree by adjoining fixed points."""
        if degree < self.degree:
            raise ValueError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(self.degree + 1, degree + 1)))

    def fixed_point_count(self) -> int:
        return sum(1 for i, v in enumerate(self.images) if v == i + 1)

    # -- raw 0-based view (internal fast paths) -------------------------------

    def raw(self) -> tuple[int, ...]:
        """0-based image tuple: raw()[i] = images[i] - 1."""
        return tuple(v - 1 for v in self.images)

    @staticmethod
    def from_raw(raw) -> "Permutation":
        return Permutation(v + 1 for v in raw)


def parse_generators(text: str, degree: int) -> list[Permutation]:
    """Parse a ';'- or newline-separated list of cycle-notation strings."""
    parts = [p for p in re.split(r"[;\n]", text) if p.strip()]
    return [Permutation.parse(p, degree) for p in parts]
