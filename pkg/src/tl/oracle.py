"""
Brute-force evaluation of closed colored networks.

Every color-n edge becomes an n-strand cable with one Jones-Wenzl projector,
every trivalent node the crossingless wiring of its three bundles, and every
crossing of cables a*b single-strand crossings expanded by the bracket skein.
The running state is a formal sum of 0 -> W planar matchings (partner tuples)
over one shared denominator, pushed upward slice by slice.
"""
from typing import Dict, List, Optional, Tuple

from src.config import Settings
from src.diagram.network import ColoredNetwork
from src.diagram.slices import Cap, Cross, Cup, Vertex
from src.errors import InadmissibleLabelsError, InvalidDiagramError, OracleBudgetExceeded
from src.qpoly import LOOP_VALUE, ONE, LaurentPoly, RatFunc
from src.recoupling.admissible import is_admissible
from src.tl.jones_wenzl import jones_wenzl
from src.tl.matching import PlanarMatching
from src.utils.logger import get_logger

logger = get_logger(__name__)

Partner = Tuple[int, ...]
_A = LaurentPoly.monomial(1, 1)
_A_INV = LaurentPoly.monomial(1, -1)


# ── elementary moves on partner tuples ────────────────────────────────────

def _cup(p: Partner, k: int) -> Partner:
    def f(i: int) -> int:
        return i if i < k else i + 2

    new = [0] * (len(p) + 2)
    for i, j in enumerate(p):
        new[f(i)] = f(j)
    new[k], new[k + 1] = k + 1, k
    return tuple(new)


def _cap(p: Partner, k: int) -> Tuple[Partner, int]:
    def g(i: int) -> int:
        return i if i < k else i - 2

    q = list(p)
    loops = 0
    if p[k] == k + 1:
        loops = 1
    else:
        a, b = p[k], p[k + 1]
        q[a], q[b] = b, a
    new = [0] * (len(p) - 2)
    for i, j in enumerate(q):
        if i != k and i != k + 1:
            new[g(i)] = g(j)
    return tuple(new), loops


def _apply_window(p: Partner, at: int, d: PlanarMatching) -> Tuple[Partner, int]:
    """Stack the n_in -> n_out diagram ``d`` on strands at..at+n_in-1 of state ``p``."""
    n_in, n_out = d.n_in, d.n_out
    width = len(p)
    hi = at + n_in
    visited = set()

    def out_index(i: int) -> int:
        return i if i < at else i - n_in + n_out

    def follow(q: int) -> int:
        # q is a bottom point of d reached from the state side
        while True:
            r = d.partner[q]
            if r >= n_in:
                return at + (r - n_in)
            s = at + r
            visited.add(s)
            t = p[s]
            if not at <= t < hi:
                return out_index(t)
            visited.add(t)
            q = t - at

    result = [0] * (width - n_in + n_out)
    for t in range(n_out):
        r = d.partner[n_in + t]
        if r >= n_in:
            result[at + t] = at + (r - n_in)
            continue
        s = at + r
        visited.add(s)
        u = p[s]
        if not at <= u < hi:
            result[at + t] = out_index(u)
        else:
            visited.add(u)
            result[at + t] = follow(u - at)
    for i in range(width):
        if at <= i < hi:
            continue
        r = p[i]
        if not at <= r < hi:
            result[out_index(i)] = out_index(r)
        else:
            visited.add(r)
            result[out_index(i)] = follow(r - at)

    loops = 0
    for s in range(at, hi):
        if s in visited:
            continue
        loops += 1
        cur = s
        while cur not in visited:
            visited.add(cur)
            nxt = p[cur]
            visited.add(nxt)
            cur = at + d.partner[nxt - at]
    return tuple(result), loops


class _Expansion:
    """Formal sum of partner tuples with a running denominator and a term budget."""

    def __init__(self, budget: int):
        self.state: Dict[Partner, LaurentPoly] = {(): ONE}
        self.denominator = ONE
        self.budget = budget
        self.reached = 0

    def _charge(self, n: int) -> None:
        self.reached += n
        if self.reached > self.budget:
            logger.warning("oracle budget %d exhausted", self.budget)
            raise OracleBudgetExceeded(self.budget, self.reached)

    def _collect(self, pairs) -> None:
        new: Dict[Partner, LaurentPoly] = {}
        for key, c in pairs:
            total = new.get(key)
            new[key] = c if total is None else total + c
        self.state = {k: c for k, c in new.items() if c}

    def cups(self, k: int, count: int) -> None:
        # nested: innermost last, at k + count - 1
        for i in range(count):
            self._charge(len(self.state))
            self.state = {_cup(p, k + i): c for p, c in self.state.items()}

    def caps(self, positions: List[int]) -> None:
        for k in positions:
            self._charge(len(self.state))
            out = []
            for p, c in self.state.items():
                q, loops = _cap(p, k)
                out.append((q, c * LOOP_VALUE if loops else c))
            self._collect(out)

    def crossing(self, k: int, sign: int) -> None:
        self._charge(2 * len(self.state))
        straight, turned = (_A, _A_INV) if sign > 0 else (_A_INV, _A)
        out = []
        for p, c in self.state.items():
            out.append((p, c * straight))
            q, loops = _cap(p, k)
            coeff = c * turned
            if loops:
                coeff = coeff * LOOP_VALUE
            out.append((_cup(q, k), coeff))
        self._collect(out)

    def projector(self, at: int, n: int) -> None:
        if n < 2:
            return
        pn = jones_wenzl(n)
        self._charge(len(self.state) * len(pn.terms))
        out = []
        for p, c in self.state.items():
            for d, dc in pn.terms.items():
                q, loops = _apply_window(p, at, d)
                coeff = c * dc
                if loops:
                    coeff = coeff * LOOP_VALUE ** loops
                out.append((q, coeff))
        self._collect(out)
        self.denominator = self.denominator * pn.denominator

    def scalar(self) -> RatFunc:
        return RatFunc(self.state.get((), LaurentPoly()), self.denominator)


def _wire_vertex(exp: _Expansion, base: int, ins: List[int], outs: List[int], s: Vertex, idx: int) -> None:
    shape = (len(ins), len(outs))
    colors = ins + outs
    if shape in ((0, 0),):
        return
    if len(colors) == 1:
        if colors[0] != 0:
            raise InadmissibleLabelsError((colors[0], 0, 0))
        return
    if len(colors) == 2:
        a, b = colors
        if a != b:
            raise InadmissibleLabelsError((a, b, 0))
        if shape == (0, 2):
            exp.cups(base, a)
        elif shape == (2, 0):
            exp.caps([base + a - 1 - i for i in range(a)])
        return
    if len(colors) != 3:
        raise InvalidDiagramError(f"vertex {s.id!r} has valence {len(colors)}; the oracle takes valence <= 3", idx)
    if not is_admissible(*colors):
        raise InadmissibleLabelsError(tuple(colors))
    if shape == (2, 1):
        a, b = ins
        k = (a + b - outs[0]) // 2
        exp.caps([base + a - 1 - i for i in range(k)])
    elif shape == (1, 2):
        a, b = outs
        k = (a + b - ins[0]) // 2
        exp.cups(base + a - k, k)
    elif shape == (0, 3):
        a, b, c = outs
        k_ab, k_bc, k_ac = (a + b - c) // 2, (b + c - a) // 2, (a + c - b) // 2
        exp.cups(base, k_ac)
        exp.cups(base + k_ac, k_ab)
        exp.cups(base + k_ac + 2 * k_ab, k_bc)
    else:
        a, b, c = ins
        k_ab, k_bc, k_ac = (a + b - c) // 2, (b + c - a) // 2, (a + c - b) // 2
        exp.caps([base + a - 1 - i for i in range(k_ab)])
        exp.caps([base + k_ac + k_bc - 1 - i for i in range(k_bc)])
        exp.caps([base + k_ac - 1 - i for i in range(k_ac)])


def oracle_evaluate(net: ColoredNetwork, budget: Optional[int] = None) -> RatFunc:
    """Exact value of a closed colored network by full Temperley-Lieb expansion."""
    if budget is None:
        budget = Settings.from_env().oracle_budget
    tracing = net.tracing
    first_segment = {edge.segments[0] for edge in tracing.edges}
    exp = _Expansion(budget)

    for idx, s in enumerate(net.diagram.slices):
        colors = net.strand_colors(idx)
        base = sum(colors[:s.at])
        if isinstance(s, Cup):
            seg = tracing.cup_segment[idx]
            c = net.edge_color(tracing.segment_edge[seg])
            exp.cups(base, c)
            if seg in first_segment:
                exp.projector(base, c)
        elif isinstance(s, Cap):
            a = colors[s.at]
            exp.caps([base + a - 1 - i for i in range(a)])
        elif isinstance(s, Cross):
            a, b = colors[s.at], colors[s.at + 1]
            for i in reversed(range(a)):
                for j in range(b):
                    exp.crossing(base + i + j, s.sign)
        else:
            ins = colors[s.at:s.at + s.n_in]
            segs = tracing.output_segments[idx]
            outs = [net.edge_color(tracing.segment_edge[seg]) for seg in segs]
            _wire_vertex(exp, base, ins, outs, s, idx)
            offset = base
            for seg, c in zip(segs, outs):
                if seg in first_segment:
                    exp.projector(offset, c)
                offset += c
        logger.debug("oracle slice %d: %d terms", idx, len(exp.state))
    return exp.scalar()


__all__ = ["oracle_evaluate"]
