"""Deterministic Schreier-Sims stabilizer chains.

The chain works on raw 0-based image tuples for speed.  Base points are
always chosen as the smallest point moved by an outstanding generator
(optionally behind a forced base prefix), orbits are explored in
breadth-first order over sorted points, and generators are processed in
the order they were supplied: the resulting chain, order and membership
answers are identical from run to run.

Group orders here are at most a few times 10^7 as abstract counts but
the degrees stay small (<= 343), so the textbook incremental algorithm
with full Schreier-generator closure is entirely adequate.
"""

from __future__ import annotations


def _compose(a, b):
    # (a o b)(x) = a[b[x]]
    return tuple(a[v] for v in b)


def _invert(a):
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


class _Level:
    __slots__ = ("base", "gens", "transversal", "inv_transversal")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[tuple[int, ...]] = []
        ident = tuple(range(degree))
        self.transversal = {base: ident}      # t maps base -> point
        self.inv_transversal = {base: ident}  # t^-1 maps point -> base

    def extend_orbit(self):
        """BFS closure of the orbit under this level's generators."""
        queue = sorted(self.transversal)
        qi = 0
        while qi < len(queue):
            pt = queue[qi]
            qi += 1
            t_pt = self.transversal[pt]
            for g in self.gens:
                img = g[pt]
                if img not in self.transversal:
                    t = _compose(g, t_pt)
                    self.transversal[img] = t
                    self.inv_transversal[img] = _invert(t)
                    queue.append(img)


class StabilizerChain:
    """Base and strong generating set for a permutation group."""

    def __init__(self, generators, degree: int, base_prefix=()):
        self.degree = degree
        self.levels: list[_Level] = []
        for b in base_prefix:
            self.levels.append(_Level(b - 1, degree))
        ident = tuple(range(degree))
        for g in generators:
            raw = g if isinstance(g, tuple) else tuple(v - 1 for v in g.images)
            if raw != ident:
                self._add_generator(raw, 0)

    # -- construction ----------------------------------------------------

    def _add_generator(self, g, level_index: int):
        residue, idx = self._strip(g, level_index)
        if residue is None:
            return
        if idx == len(self.levels):
            base = min(i for i, v in enumerate(residue) if v != i)
            self.levels.append(_Level(base, self.degree))
        level = self.levels[idx]
        level.gens.append(residue)
        old_orbit = sorted(level.transversal)
        level.extend_orbit()
        # close under Schreier generators of the refreshed orbit
        for pt in sorted(level.transversal):
            t_pt = level.transversal[pt]
            gens = level.gens if pt not in old_orbit else [residue]
            for s in gens:
                tail = level.inv_transversal[s[pt]]
                schreier = _compose(tail, _compose(s, t_pt))
                self._add_generator(schreier, idx + 1)

    def _strip(self, g, start: int = 0):
        """Sift g through the chain; returns (residue, level) or (None, _)."""
        ident = tuple(range(self.degree))
        cur = g
        for idx in range(start, len(self.levels)):
            if cur == ident:
                return None, idx
            level = self.levels[idx]
            img = cur[level.base]
            if img not in level.inv_transversal:
                return cur, idx
            cur = _compose(level.inv_transversal[img], cur)
        if cur == ident:
            return None, len(self.levels)
        return cur, len(self.levels)

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def contains_raw(self, g) -> bool:
        residue, _ = self._strip(g)
        return residue is None

    @property
    def base(self) -> tuple[int, ...]:
        """1-based base points."""
        return tuple(level.base + 1 for level in self.levels)

    def basic_orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(level.transversal) for level in self.levels)

    def stabilizer_order_below(self, k: int) -> int:
        """Order of the pointwise stabilizer of the first k base points.

        Only meaningful when the chain was built with a base prefix
        covering those points.
        """
        n = 1
        for level in self.levels[k:]:
            n *= len(level.transversal)
        return n

    def strong_generators(self):
        out = []
        for level in self.levels:
            out.extend(level.gens)
        return out
