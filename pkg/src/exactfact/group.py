"""Finitely generated permutation groups.

A PermGroup is defined by its generators.  Order and membership come
from a deterministic stabilizer chain, full element tables from
breadth-first closure under a cap.  The canonical element order is
lexicographic on image tuples, which puts the identity at index 0 and
makes every downstream artifact (subgroup bitsets, census reports)
reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chain import StabilizerChain
from .perm import DegreeMismatch, Permutation

DEFAULT_CAP = 1100


class CapExceeded(Exception):
    """The group is larger than the enumeration cap allows."""


class PermGroup:
    def __init__(self, generators, degree: int, name: str | None = None,
                 elements=None):
        self.degree = degree
        gens = []
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity():
                gens.append(g)
        self.generators = tuple(gens)
        self.name = name
        self._chain: StabilizerChain | None = None
        self._elements: tuple[Permutation, ...] | None = None
        if elements is not None:
            elems = sorted(elements)
            if not elems or not elems[0].is_identity():
                raise ValueError("element table must contain the identity")
            self._elements = tuple(elems)

    def __repr__(self):
        label = self.name or f"{len(self.generators)} generators"
        return f"<PermGroup degree={self.degree} ({label})>"

    @staticmethod
    def trivial(degree: int) -> "PermGroup":
        return PermGroup([], degree, name="1")

    # -- chain-backed queries ------------------------------------------------

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(
                [g.raw() for g in self.generators], self.degree)
        return self._chain

    def order(self) -> int:
        if self._elements is not None:
            return len(self._elements)
        return self.chain.order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(
                f"permutation degree {p.degree} != group degree {self.degree}")
        return self.chain.contains_raw(p.raw())

    def chain_with_base_prefix(self, prefix) -> StabilizerChain:
        """A fresh chain whose base starts with the given 1-based points."""
        return StabilizerChain(
            [g.raw() for g in self.generators], self.degree, base_prefix=prefix)

    # -- enumeration -----------------------------------------------------------

    def elements(self, cap: int = DEFAULT_CAP) -> tuple[Permutation, ...]:
        """Full element table in canonical (lexicographic) order.

        Raises CapExceeded when the group has more than ``cap`` elements;
        callers should fall back to chain-based membership in that case.
        """
        if self._elements is not None:
            if len(self._elements) > cap:
                raise CapExceeded(
                    f"order {len(self._elements)} exceeds cap {cap}")
            return self._elements
        ident = tuple(range(self.degree))
        raw_gens = [g.raw() for g in self.generators]
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in raw_gens:
                    y = tuple(g[v] for v in x)
                    if y not in seen:
                        if len(seen) >= cap:
                            raise CapExceeded(
                                f"order exceeds cap {cap} "
                                f"(chain order: {self.chain.order()})")
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        self._elements = tuple(Permutation.from_raw(r) for r in sorted(seen))
        return self._elements

    # -- orbits and blocks -----------------------------------------------------

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbit partition of {1..degree}, each orbit sorted, orbits by min."""
        raw_gens = [g.raw() for g in self.generators]
        remaining = set(range(self.degree))
        out = []
        while remaining:
            start = min(remaining)
            orbit = {start}
            queue = [start]
            while queue:
                pt = queue.pop()
                for g in raw_gens:
                    img = g[pt]
                    if img not in orbit:
                        orbit.add(img)
                        queue.append(img)
            remaining -= orbit
            out.append(tuple(p + 1 for p in sorted(orbit)))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1 and self.degree >= 1

    def minimal_block_containing(self, a: int, b: int) -> tuple[int, ...]:
        """Finest block of a transitive action fusing points a and b (1-based)."""
        raw_gens = [g.raw() for g in self.generators]
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx == ry:
                return None
            if rx > ry:
                rx, ry = ry, rx
            parent[ry] = rx
            return (rx, ry)

        pending = [(a - 1, b - 1)]
        union(a - 1, b - 1)
        while pending:
            x, y = pending.pop()
            for g in raw_gens:
                merged = union(g[x], g[y])
                if merged:
                    pending.append(merged)
        root = find(a - 1)
        return tuple(p + 1 for p in range(self.degree) if find(p) == root)

    def is_primitive(self) -> bool:
        """Transitive with no nontrivial block system."""
        if not self.is_transitive() or self.degree == 1:
            return False
        for b in range(2, self.degree + 1):
            block = self.minimal_block_containing(1, b)
            if 1 < len(block) < self.degree:
                return False
        return True

    def k_tuple_orbit_count_is_full(self, k: int) -> bool:
        """True iff the action on ordered k-tuples of distinct points is
        transitive, by BFS from (1,..,k) with early size check."""
        d = self.degree
        if k > d:
            return False
        target = 1
        for i in range(k):
            target *= d - i
        raw_gens = [g.raw() for g in self.generators]
        start = tuple(range(k))
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for t in frontier:
                for g in raw_gens:
                    img = tuple(g[v] for v in t)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return len(seen) == target


@dataclass
class ActionReport:
    """Transitivity profile of a permutation group action."""
    transitive: bool
    k_transitive: dict[int, bool]
    sharply_k: dict[int, bool]
    primitive: bool
    # k -> True when no nonidentity element fixes k or more points, i.e.
    # the action on ordered k-tuples of distinct points is free.  This is
    # the sense in which the classical "sharply k-transitive" tables for
    # factor groups of alternating groups are stated; it does not require
    # k-transitivity.  None when the group was too large to scan.
    free_k: dict[int, bool] = field(default_factory=dict)
    max_fixed_points: int | None = None


def action_report(G: PermGroup, max_k: int,
                  element_cap: int = 200_000) -> ActionReport:
    """Transitivity, sharp transitivity and primitivity up to max_k."""
    if max_k > G.degree:
        raise ValueError(f"max_k {max_k} exceeds degree {G.degree}")
    order = G.order()
    transitive = G.is_transitive()
    k_trans: dict[int, bool] = {}
    sharply: dict[int, bool] = {}
    for k in range(1, max_k + 1):
        full = G.k_tuple_orbit_count_is_full(k) if (k == 1 or k_trans.get(k - 1)) else False
        k_trans[k] = full
        target = 1
        for i in range(k):
            target *= G.degree - i
        sharply[k] = full and order == target
    free: dict[int, bool] = {}
    max_fixed = None
    try:
        elems = G.elements(cap=element_cap)
        max_fixed = max(
            (e.fixed_point_count() for e in elems if not e.is_identity()),
            default=0)
        for k in range(1, max_k + 1):
            free[k] = max_fixed <= k - 1
    except CapExceeded:
        pass
    return ActionReport(
        transitive=transitive,
        k_transitive=k_trans,
        sharply_k=sharply,
        primitive=G.is_primitive(),
        free_k=free,
        max_fixed_points=max_fixed,
    )


def intersect_small(G: PermGroup, H: PermGroup,
                    cap: int = DEFAULT_CAP) -> list[Permutation]:
    """Common elements, by enumerating the smaller group and sifting it
    through the larger one's chain."""
    if G.degree != H.degree:
        raise DegreeMismatch("intersection requires equal degrees")
    try:
        small, big = (G, H) if G.order() <= H.order() else (H, G)
        elems = small.elements(cap)
    except CapExceeded:
        raise CapExceeded(
            f"both groups exceed cap {cap}: {G.order()} and {H.order()}")
    return [e for e in elems if big.chain.contains_raw(e.raw())]


def left_regular_embedding(table: list[list[int]],
                           name: str | None = None) -> PermGroup:
    """Left multiplication action of a group given by its multiplication
    table (t[i][j] = index of the product of elements i and j, identity
    at index 0) as a permutation group of degree |H|."""
    n = len(table)
    if n < 1:
        raise ValueError("empty multiplication table")
    for row in table:
        if len(row) != n:
            raise ValueError("multiplication table must be square")
        if sorted(row) != list(range(n)):
            raise ValueError("rows of a group table must be permutations")
    if any(table[0][j] != j for j in range(n)) or any(table[i][0] != i for i in range(n)):
        raise ValueError("index 0 must be the identity element")
    perms = [Permutation(v + 1 for v in row) for row in table]
    gens = _greedy_generators(perms)
    return PermGroup(gens, n, name=name, elements=perms)


def _greedy_generators(elements: list[Permutation]) -> list[Permutation]:
    """Deterministic small generating set: scan elements in order of
    decreasing order (ties by image tuple) and keep the ones that enlarge
    the generated subgroup."""
    target = len(elements)
    chosen: list[Permutation] = []
    size = 1
    for e in sorted(elements, key=lambda p: (-p.order(), p.images)):
        if size == target:
            break
        if e.is_identity():
            continue
        trial = StabilizerChain([g.raw() for g in chosen + [e]],
                                e.degree)
        if trial.order() > size:
            chosen.append(e)
            size = trial.order()
    return chosen


def direct_product(A: PermGroup, B: PermGroup,
                   name: str | None = None) -> PermGroup:
    """A x B acting on the disjoint union of the two point sets."""
    d = A.degree + B.degree
    gens = [g.pad(d) for g in A.generators]
    shift = A.degree
    for g in B.generators:
        images = list(range(1, d + 1))
        for i, v in enumerate(g.images):
            images[shift + i] = shift + v
        gens.append(Permutation(images))
    elements = None
    if A._elements is not None and B._elements is not None \
            and len(A._elements) * len(B._elements) <= 20_000:
        elements = []
        for a in A._elements:
            base = list(a.images) + list(range(shift + 1, d + 1))
            for b in B._elements:
                images = base.copy()
                for i, v in enumerate(b.images):
                    images[shift + i] = shift + v
                elements.append(Permutation(images))
    return PermGroup(gens, d, name=name, elements=elements)


def alternating_gens(points: list[int], degree: int) -> list[Permutation]:
    """Generators of the alternating group on a subset of {1..degree}."""
    pts = sorted(points)
    if len(pts) < 3:
        return []
    a, b = pts[0], pts[1]
    return [Permutation.from_cycles([(a, b, c)], degree) for c in pts[2:]]


def alternating_group(n: int, degree: int | None = None) -> PermGroup:
    d = degree if degree is not None else n
    return PermGroup(alternating_gens(list(range(1, n + 1)), d), d,
                     name=f"A{n}")


def symmetric_group(n: int, degree: int | None = None) -> PermGroup:
    d = degree if degree is not None else n
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], d))
        if n >= 3:
            gens.append(Permutation.from_cycles([(1, 2)], d))
    return PermGroup(gens, d, name=f"S{n}")
