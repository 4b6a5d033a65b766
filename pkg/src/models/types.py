from typing import Literal

DiagramKind = Literal["graph", "link", "network"]
Orientation = Literal["A", "A_inverse"]
Engine = Literal["fast", "oracle"]
SuiteName = Literal["qpoly", "tl", "recoupling", "vertices", "invariants"]
