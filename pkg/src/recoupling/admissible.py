from typing import Iterator, Tuple

from pydantic import BaseModel, ConfigDict, Field


def is_admissible(a: int, b: int, c: int) -> bool:
    """Even sum and the triangle inequality, on twice-spins."""
    if min(a, b, c) < 0 or (a + b + c) % 2:
        return False
    return abs(a - b) <= c <= a + b


def admissible_thirds(a: int, b: int) -> range:
    """All c making (a, b, c) admissible, ascending."""
    return range(abs(a - b), a + b + 1, 2)


class AdmissibleTriple(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=0)
    b: int = Field(ge=0)
    c: int = Field(ge=0)

    @property
    def admissible(self) -> bool:
        return is_admissible(self.a, self.b, self.c)

    def bundles(self) -> Tuple[int, int, int]:
        """Strand bundle sizes (a+b-c)/2, (b+c-a)/2, (c+a-b)/2."""
        a, b, c = self.a, self.b, self.c
        return (a + b - c) // 2, (b + c - a) // 2, (c + a - b) // 2


def admissible_triples(max_label: int) -> Iterator[Tuple[int, int, int]]:
    for a in range(max_label + 1):
        for b in range(max_label + 1):
            for c in admissible_thirds(a, b):
                if c <= max_label:
                    yield a, b, c
