"""
Crossing fusion and the pair-label product rule.

A crossing of strands colored a (left) and b (right) is the sum over channels c
of λ·Δ_c/θ(a,b,c) times the pair "fuse a,b into c, split c into b,a". The
eigenvalue λ is ``lambda_pos`` for a positive crossing read in A and its bar for
the other three cases.
"""
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import List, Sequence, Tuple

from src.diagram.network import ColoredNetwork, PairNetwork
from src.diagram.planar import eval_planar
from src.diagram.slices import Cross, Cup, SlicedDiagram, Vertex, vertex
from src.models.types import Orientation
from src.qpoly import RAT_ZERO, RatFunc
from src.recoupling import admissible_thirds, delta, lambda_pos, theta
from src.utils.logger import get_logger

logger = get_logger(__name__)

Channel = Tuple[int, RatFunc]  # (c, weight)


def annotated_slices(net: ColoredNetwork) -> List:
    """The slice word with every strand-creating slice carrying its colors inline."""
    out = []
    tracing = net.tracing
    for idx, s in enumerate(net.diagram.slices):
        if isinstance(s, Cup):
            seg = tracing.cup_segment[idx]
            s = s.model_copy(update={"color": net.edge_color(tracing.segment_edge[seg])})
        elif isinstance(s, Vertex):
            colors = tuple(net.edge_color(tracing.segment_edge[seg]) for seg in tracing.output_segments[idx])
            s = s.model_copy(update={"out_colors": colors})
        out.append(s)
    return out


def crossing_channels(a: int, b: int, sign: int, orientation: Orientation = "A") -> List[Channel]:
    flip = (sign < 0) != (orientation == "A_inverse")
    channels = []
    for c in admissible_thirds(a, b):
        eigen = lambda_pos(a, b, c)
        if flip:
            eigen = eigen.bar()
        channels.append((c, eigen * delta(c) / theta(a, b, c)))
    return channels


def fused_branches(net: ColoredNetwork, orientation: Orientation = "A"):
    """Yield (weight, crossing-free network) for every choice of crossing channels."""
    slices = annotated_slices(net)
    sites = []
    for idx, s in net.crossings:
        colors = net.strand_colors(idx)
        a, b = colors[s.at], colors[s.at + 1]
        sites.append((idx, s, a, b, crossing_channels(a, b, s.sign, orientation)))
    for choice in product(*(site[4] for site in sites)):
        weight = None
        replaced = {}
        for (idx, s, a, b, _), (c, w) in zip(sites, choice):
            weight = w if weight is None else weight * w
            replaced[idx] = (
                vertex(s.at, 2, 1, f"_fuse{idx}.in", [c]),
                vertex(s.at, 1, 2, f"_fuse{idx}.out", [b, a]),
            )
        word = []
        for idx, s in enumerate(slices):
            word.extend(replaced.get(idx, (s,)))
        yield weight, ColoredNetwork(SlicedDiagram(kind="network", slices=tuple(word)))


def _sum_in_order(values: Sequence[RatFunc]) -> RatFunc:
    total = RAT_ZERO
    for v in values:
        total = total + v
    return total


def eval_single(net: ColoredNetwork, orientation: Orientation = "A", threads: int = 1) -> RatFunc:
    """Value of one coordinate network; crossings are fused, then evaluated planarly."""
    if net.is_planar():
        value = eval_planar(net)
        return value.bar() if orientation == "A_inverse" else value

    def run(branch) -> RatFunc:
        weight, planar = branch
        return weight * eval_planar(planar)

    branches = list(fused_branches(net, orientation))
    logger.debug("eval_single: %d crossings, %d branches", len(net.crossings), len(branches))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return _sum_in_order(list(pool.map(run, branches)))
    return _sum_in_order([run(b) for b in branches])


def eval_pair(net: PairNetwork, threads: int = 1) -> RatFunc:
    """First coordinate read in A times second coordinate read in A⁻¹."""
    if net.is_balanced():
        s = eval_single(net.coordinate(0), "A", threads)
        return s * s.bar()
    return eval_single(net.coordinate(0), "A", threads) * eval_single(net.coordinate(1), "A_inverse", threads)


__all__ = ["annotated_slices", "crossing_channels", "eval_pair", "eval_single", "fused_branches"]
