"""
Vertex boundaries and trivalent tree shapes.

A vertex with sources x1..xk (left to right, bottom) and targets y1..ym (left
to right, top) has the leaf sequence

    l = (xk, ..., x1, y1, ..., ym)

read clockwise from the bottom right. A TreeShape brackets the leaves
l0..l(n-2); leaf l(n-1) hangs from the top pair. Internal edges are the pairs
that sit inside another pair, numbered in preorder.
"""
from __future__ import annotations

import re
from typing import Iterator, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

Structure = Union[int, Tuple["Structure", "Structure"], None]


class VertexSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    source_labels: Tuple[int, ...] = ()
    target_labels: Tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.source_labels) + len(self.target_labels)

    @property
    def k(self) -> int:
        return len(self.source_labels)

    @property
    def m(self) -> int:
        return len(self.target_labels)

    def leaves(self) -> Tuple[int, ...]:
        return tuple(reversed(self.source_labels)) + self.target_labels

    @classmethod
    def from_leaves(cls, leaves: Tuple[int, ...], k: int) -> "VertexSpec":
        return cls(source_labels=tuple(reversed(leaves[:k])), target_labels=tuple(leaves[k:]))

    def turned(self, r: int) -> "VertexSpec":
        """Same split, leaf sequence rotated left by r."""
        leaves = self.leaves()
        if not leaves:
            return self
        r %= len(leaves)
        return VertexSpec.from_leaves(leaves[r:] + leaves[:r], self.k)

    def dual(self) -> "VertexSpec":
        return VertexSpec(source_labels=self.target_labels, target_labels=self.source_labels)

    @classmethod
    def parse(cls, text: str) -> "VertexSpec":
        """``a,b/c,d``: sources before the slash, targets after; either side may be empty."""
        if text.count("/") != 1:
            raise ValueError(f"expected sources/targets, got {text!r}")
        left, right = text.split("/")

        def labels(part: str) -> Tuple[int, ...]:
            part = part.strip()
            if not part:
                return ()
            values = [p.strip() for p in part.split(",")]
            if not all(v.isdigit() for v in values):
                raise ValueError(f"labels must be non-negative integers: {part!r}")
            return tuple(int(v) for v in values)

        return cls(source_labels=labels(left), target_labels=labels(right))

    def __str__(self) -> str:
        return ",".join(map(str, self.source_labels)) + "/" + ",".join(map(str, self.target_labels))


class TreeShape(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=0)
    structure: Optional[object] = None

    @classmethod
    def caterpillar(cls, n: int) -> "TreeShape":
        if n <= 1:
            return cls(n=n)
        shape: Structure = 0
        for leaf in range(1, n - 1):
            shape = (shape, leaf)
        return cls(n=n, structure=shape)

    @classmethod
    def parse(cls, text: str, n: int) -> "TreeShape":
        """Read a bracketing such as ``((0,1),2)`` over the leaves 0..n-2."""
        tokens = re.findall(r"\d+|[(),]", text)
        if "".join(tokens) != re.sub(r"\s+", "", text):
            raise ValueError(f"bad tree {text!r}")
        pos = 0

        def node() -> Structure:
            nonlocal pos
            if pos >= len(tokens):
                raise ValueError(f"tree {text!r} ends early")
            tok = tokens[pos]
            pos += 1
            if tok.isdigit():
                return int(tok)
            if tok != "(":
                raise ValueError(f"unexpected {tok!r} in tree {text!r}")
            left = node()
            if pos >= len(tokens) or tokens[pos] != ",":
                raise ValueError(f"expected ',' in tree {text!r}")
            pos += 1
            right = node()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError(f"expected ')' in tree {text!r}")
            pos += 1
            return (left, right)

        structure = node()
        if pos != len(tokens):
            raise ValueError(f"trailing input in tree {text!r}")
        shape = cls(n=n, structure=structure)
        if sorted(shape.leaf_order()) != list(range(max(n - 1, 0))):
            raise ValueError(f"tree {text!r} must use each of the leaves 0..{n - 2} once")
        return shape

    # ── structure ─────────────────────────────────────────────────────────

    def leaf_order(self) -> List[int]:
        out: List[int] = []

        def walk(s: Structure) -> None:
            if isinstance(s, tuple):
                walk(s[0])
                walk(s[1])
            elif s is not None:
                out.append(s)

        walk(self.structure)
        return out

    def pairs(self) -> List[Tuple]:
        """All pairs in preorder, the top pair first."""
        out: List[Tuple] = []

        def walk(s: Structure) -> None:
            if isinstance(s, tuple):
                out.append(s)
                walk(s[0])
                walk(s[1])

        walk(self.structure)
        return out

    @property
    def internal_edge_count(self) -> int:
        return max(self.n - 3, 0)

    @property
    def node_count(self) -> int:
        return max(self.n - 2, 0)

    def grafted(self) -> "TreeShape":
        """The tree on n+1 leaves whose new top pair joins this tree and leaf n-1."""
        if self.n <= 1:
            return TreeShape(n=self.n + 1, structure=0 if self.n == 1 else None)
        return TreeShape(n=self.n + 1, structure=(self.structure, self.n - 1))

    def iter_nodes(self, leaves: Tuple[int, ...], internal: Tuple[int, ...]) -> Iterator[Tuple[int, int, int]]:
        """Label triples (left, right, up) of every pair, given leaf and internal labels."""
        if not isinstance(self.structure, tuple):
            return
        # leaves are used once, so pairs are distinct as values
        numbering = {p: i for i, p in enumerate(self.pairs()[1:])}

        def label(s: Structure) -> int:
            return leaves[s] if not isinstance(s, tuple) else internal[numbering[s]]

        for p in self.pairs():
            up = leaves[self.n - 1] if p == self.structure else internal[numbering[p]]
            yield label(p[0]), label(p[1]), up

    def child_pair_index(self) -> dict:
        """Internal edge number of every non-top pair."""
        return {p: i for i, p in enumerate(self.pairs()[1:])}

    def describe(self) -> str:
        def show(s: Structure) -> str:
            if isinstance(s, tuple):
                return f"({show(s[0])},{show(s[1])})"
            return "" if s is None else str(s)

        return show(self.structure)

    def __str__(self) -> str:
        return self.describe() or "-"
