"""Path certificates shared by every solver and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    Path,
    connected_after_edge_removal,
    connected_after_vertex_removal,
)

VARIANT_NONSEP = "nonsep"
VARIANT_NONDISC = "nondisc"
VARIANTS = (VARIANT_NONSEP, VARIANT_NONDISC)


def check_path(g: Graph, variant: str, vertices) -> bool:
    """True iff ``vertices`` is a simple path of g whose removal (vertices or
    edges, per variant) leaves the rest connected.  Raises ValueError if the
    sequence is not a path of g or the variant is unknown."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    p = Path(g, vertices)
    if variant == VARIANT_NONSEP:
        return connected_after_vertex_removal(g, p.vertex_mask())
    return connected_after_edge_removal(g, p.edge_mask())


@dataclass(frozen=True)
class PathCertificate:
    """Solver output: a path plus the recomputed validity verdict."""

    variant: str
    vertices: tuple[int, ...]
    length: int
    valid: bool
    algo: str
    seed: Optional[int] = None

    @classmethod
    def build(cls, g: Graph, variant: str, vertices, algo: str,
              seed: Optional[int] = None) -> "PathCertificate":
        vs = tuple(vertices)
        return cls(
            variant=variant,
            vertices=vs,
            length=len(vs) - 1,
            valid=check_path(g, variant, vs),
            algo=algo,
            seed=seed,
        )
