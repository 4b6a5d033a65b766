"""
Planar matchings: the diagram basis of the Temperley-Lieb category.

Boundary points are numbered bottom row first (0..n_in-1, left to right), then
top row (n_in..n_in+n_out-1, left to right). ``partner[i]`` is the point joined
to ``i``.
"""
from __future__ import annotations

from typing import Iterator, List, Sequence, Tuple

from src.errors import BoundaryMismatchError


class PlanarMatching:
    __slots__ = ("n_in", "n_out", "partner", "loops", "_hash")

    def __init__(self, n_in: int, n_out: int, partner: Sequence[int], loops: int = 0):
        size = n_in + n_out
        if size % 2:
            raise ValueError(f"odd boundary size {n_in}+{n_out}")
        if len(partner) != size:
            raise ValueError("partner table does not cover the boundary")
        for i, p in enumerate(partner):
            if not 0 <= p < size or p == i or partner[p] != i:
                raise ValueError(f"partner table is not an involution at {i}")
        self.n_in = n_in
        self.n_out = n_out
        self.partner: Tuple[int, ...] = tuple(partner)
        self.loops = loops
        self._hash = None
        if not self._is_planar():
            raise ValueError(f"matching {self.pairs} is not planar")

    @classmethod
    def _trusted(cls, n_in: int, n_out: int, partner: Tuple[int, ...], loops: int = 0) -> "PlanarMatching":
        m = cls.__new__(cls)
        m.n_in, m.n_out, m.partner, m.loops, m._hash = n_in, n_out, partner, loops, None
        return m

    # ── standard diagrams ─────────────────────────────────────────────────

    @classmethod
    def identity(cls, n: int) -> "PlanarMatching":
        return cls._trusted(n, n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def e(cls, n: int, at: int) -> "PlanarMatching":
        """Cap on strands at, at+1 followed by a cup in the same place (0-based)."""
        if not 0 <= at < n - 1:
            raise ValueError(f"e_{at} outside TL_{n}")
        partner = list(PlanarMatching.identity(n).partner)
        partner[at], partner[at + 1] = at + 1, at
        partner[n + at], partner[n + at + 1] = n + at + 1, n + at
        return cls._trusted(n, n, tuple(partner))

    @classmethod
    def cup(cls) -> "PlanarMatching":
        return cls._trusted(0, 2, (1, 0))

    @classmethod
    def cap(cls) -> "PlanarMatching":
        return cls._trusted(2, 0, (1, 0))

    # ── structure ─────────────────────────────────────────────────────────

    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((i, p) for i, p in enumerate(self.partner) if i < p)

    def _cyclic_position(self, i: int) -> int:
        # bottom left-to-right, then top right-to-left
        if i < self.n_in:
            return i
        return self.n_in + (self.n_in + self.n_out - 1 - i)

    def _is_planar(self) -> bool:
        order = sorted(range(len(self.partner)), key=self._cyclic_position)
        stack: List[int] = []
        for i in order:
            if stack and stack[-1] == self.partner[i]:
                stack.pop()
            else:
                stack.append(i)
        return not stack

    def without_loops(self) -> "PlanarMatching":
        return self if not self.loops else PlanarMatching._trusted(self.n_in, self.n_out, self.partner)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarMatching):
            return NotImplemented
        return (self.n_in, self.n_out, self.partner, self.loops) == (
            other.n_in, other.n_out, other.partner, other.loops)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n_in, self.n_out, self.partner, self.loops))
        return self._hash

    def __repr__(self) -> str:
        return f"PlanarMatching({self.n_in}->{self.n_out}, pairs={self.pairs}, loops={self.loops})"

    # ── composition ───────────────────────────────────────────────────────

    def then(self, upper: "PlanarMatching") -> "PlanarMatching":
        """Stack ``upper`` on top of ``self``; closed cycles add to ``loops``."""
        if self.n_out != upper.n_in:
            raise BoundaryMismatchError(f"cannot stack {upper.n_in}-input diagram on {self.n_out} outputs")
        lo_in, mid, up_out = self.n_in, self.n_out, upper.n_out
        lower_p, upper_p = self.partner, upper.partner
        seen_mid = [False] * mid
        result = [0] * (lo_in + up_out)

        def exit_from_lower(p: int) -> int:
            # p is a point of the lower diagram reached from outside
            while True:
                if p < lo_in:
                    return p
                k = p - lo_in
                seen_mid[k] = True
                q = upper_p[k]
                if q >= mid:
                    return lo_in + (q - mid)
                seen_mid[q] = True
                p = lower_p[lo_in + q]

        def exit_from_upper(q: int) -> int:
            while True:
                if q >= mid:
                    return lo_in + (q - mid)
                seen_mid[q] = True
                p = lower_p[lo_in + q]
                if p < lo_in:
                    return p
                k = p - lo_in
                seen_mid[k] = True
                q = upper_p[k]

        for i in range(lo_in):
            result[i] = exit_from_lower(lower_p[i])
        for j in range(up_out):
            result[lo_in + j] = exit_from_upper(upper_p[mid + j])

        loops = self.loops + upper.loops
        for k in range(mid):
            if seen_mid[k]:
                continue
            loops += 1
            # walk the cycle: upper chord then lower chord
            cur = k
            while not seen_mid[cur]:
                seen_mid[cur] = True
                nxt = upper_p[cur]
                seen_mid[nxt] = True
                cur = lower_p[lo_in + nxt] - lo_in
        return PlanarMatching._trusted(lo_in, up_out, tuple(result), loops)

    def tensor(self, right: "PlanarMatching") -> "PlanarMatching":
        """Place ``right`` to the right of ``self``."""
        a_in, a_out, b_in, b_out = self.n_in, self.n_out, right.n_in, right.n_out
        n_in, n_out = a_in + b_in, a_out + b_out

        def left_index(i: int) -> int:
            return i if i < a_in else n_in + (i - a_in)

        def right_index(i: int) -> int:
            return a_in + i if i < b_in else n_in + a_out + (i - b_in)

        partner = [0] * (n_in + n_out)
        for i, p in enumerate(self.partner):
            partner[left_index(i)] = left_index(p)
        for i, p in enumerate(right.partner):
            partner[right_index(i)] = right_index(p)
        return PlanarMatching._trusted(n_in, n_out, tuple(partner), self.loops + right.loops)

    def closure_loops(self) -> int:
        """Number of circles in the right-hand trace closure of an n -> n diagram."""
        if self.n_in != self.n_out:
            raise BoundaryMismatchError("trace closure needs equal boundaries")
        n = self.n_in
        seen = [False] * (2 * n)
        count = 0
        for start in range(2 * n):
            if seen[start]:
                continue
            count += 1
            cur = start
            while not seen[cur]:
                seen[cur] = True
                other = self.partner[cur]
                seen[other] = True
                cur = other + n if other < n else other - n
        return count + self.loops


def all_matchings(n_in: int, n_out: int) -> Iterator[PlanarMatching]:
    """Every loop-free planar matching with the given boundary (Catalan many)."""
    size = n_in + n_out
    if size % 2:
        return
    identity = PlanarMatching._trusted(n_in, n_out, tuple(range(size)))
    order = sorted(range(size), key=identity._cyclic_position)

    def fill(points: List[int]) -> Iterator[List[Tuple[int, int]]]:
        if not points:
            yield []
            return
        first = points[0]
        for k in range(1, len(points), 2):
            inner, outer = points[1:k], points[k + 1:]
            for left in fill(inner):
                for right in fill(outer):
                    yield [(first, points[k])] + left + right

    for chords in fill(order):
        partner = [0] * size
        for i, j in chords:
            partner[i], partner[j] = j, i
        yield PlanarMatching._trusted(n_in, n_out, tuple(partner))
