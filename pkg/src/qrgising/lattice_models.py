"""Lattice geometries, basic clusters, RG coupling maps and size bookkeeping.

Three geometries are supported: the triangular lattice, whose basic cluster
is the seven-site hexagon (central "node" spin plus a six-site ring), and
the two Sierpinski fractal lattices, whose basic clusters are the complete
graphs on three and four sites.  Each geometry carries a scalar coupling
map g -> g' describing one coarse-graining step; iterating the map while
keeping the cluster fixed represents exponentially growing system sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError, FlowDivergenceError, RangeError

_INT64_MAX = 2**63 - 1


class LatticeKind(str, Enum):
    TRIANGULAR = "triangular"
    SIERPINSKI_TRIANGLE = "sierpinski-triangle"
    SIERPINSKI_PYRAMID = "sierpinski-pyramid"


@dataclass(frozen=True)
class LatticeModel:
    """Immutable description of one lattice geometry and its basic cluster.

    Sites are 0-indexed internally; user-facing output adds 1 so labels
    match the conventional 1-based cluster diagrams.
    """

    kind: LatticeKind
    cluster_size: int
    node_site: int
    edges: tuple[tuple[int, int], ...]
    dimension: float          # effective dimension d, or Hausdorff d_H
    rescale: float            # length rescaling per RG step
    base_sites: int           # N at n = 0
    kappa: int | None = field(default=None)  # fractal spatial dimension, None for triangular

    @property
    def branching(self) -> int:
        """Integer cluster-count growth per RG step: rescale**dimension."""
        return round(self.rescale**self.dimension)


def _hexagon_edges() -> tuple[tuple[int, int], ...]:
    # spokes from the central node plus the closed six-site ring
    spokes = tuple((0, i) for i in range(1, 7))
    ring = tuple((i, i + 1) for i in range(1, 6)) + ((1, 6),)
    return spokes + ring


def _complete_edges(k: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(k) for j in range(i + 1, k))


_MODELS = {
    LatticeKind.TRIANGULAR: LatticeModel(
        kind=LatticeKind.TRIANGULAR,
        cluster_size=7,
        node_site=0,
        edges=_hexagon_edges(),
        dimension=2.0,
        rescale=math.sqrt(3.0),
        base_sites=7,
    ),
    LatticeKind.SIERPINSKI_TRIANGLE: LatticeModel(
        kind=LatticeKind.SIERPINSKI_TRIANGLE,
        cluster_size=3,
        node_site=0,
        edges=_complete_edges(3),
        dimension=math.log(3.0) / math.log(2.0),
        rescale=2.0,
        base_sites=3,
        kappa=2,
    ),
    LatticeKind.SIERPINSKI_PYRAMID: LatticeModel(
        kind=LatticeKind.SIERPINSKI_PYRAMID,
        cluster_size=4,
        node_site=0,
        edges=_complete_edges(4),
        dimension=2.0,
        rescale=2.0,
        base_sites=4,
        kappa=3,
    ),
}


def make_lattice(kind: LatticeKind | str) -> LatticeModel:
    """Return the canonical model for a lattice kind (or its string name)."""
    try:
        return _MODELS[LatticeKind(kind)]
    except ValueError:
        valid = ", ".join(k.value for k in LatticeKind)
        raise DomainError(f"unknown lattice {kind!r}; valid kinds: {valid}") from None


def all_lattices() -> tuple[LatticeModel, ...]:
    return tuple(_MODELS.values())


def _check_coupling(g: float) -> float:
    g = float(g)
    if not math.isfinite(g) or g < 0.0:
        raise DomainError(f"coupling must be finite and nonnegative, got {g!r}")
    return g


def rg_map(model: LatticeModel, g: float) -> float:
    """One RG step of the reduced coupling g = J/h.

    Triangular: g' = 2^(1/3) g^2 (1+g^2)^(1/6) (g + sqrt(1+g^2))^(2/3).
    Fractal (kappa = 2, 3):
        g' = g^((3k+1)/(k+1)) (1+g^2)^(k(k-1)/(2(k+1))).
    """
    g = _check_coupling(g)
    if model.kappa is None:
        return (
            2.0 ** (1.0 / 3.0)
            * g**2
            * (1.0 + g**2) ** (1.0 / 6.0)
            * (g + math.sqrt(1.0 + g**2)) ** (2.0 / 3.0)
        )
    k = model.kappa
    a = (3 * k + 1) / (k + 1)
    b = k * (k - 1) / (2 * (k + 1))
    return g**a * (1.0 + g**2) ** b


def rg_map_derivative(model: LatticeModel, g: float) -> float:
    """Closed-form derivative dg'/dg of the RG map.

    Written as g' * dlog(g')/dg; the triangular log-derivative simplifies
    because d/dg log(g + sqrt(1+g^2)) = 1/sqrt(1+g^2).
    """
    g = _check_coupling(g)
    if g == 0.0:
        return 0.0
    gp = rg_map(model, g)
    if model.kappa is None:
        dlog = 2.0 / g + g / (3.0 * (1.0 + g**2)) + 2.0 / (3.0 * math.sqrt(1.0 + g**2))
    else:
        k = model.kappa
        a = (3 * k + 1) / (k + 1)
        b = k * (k - 1) / (2 * (k + 1))
        dlog = a / g + 2.0 * b * g / (1.0 + g**2)
    return gp * dlog


def rg_iterate(model: LatticeModel, g: float, n: int, cap: float | None = None) -> float:
    """n-fold composition of the RG map applied to g.

    With ``cap`` set, the flow saturates there (the maps are increasing, so
    once an iterate exceeds the cap every later one would too); with
    ``cap=None`` an iterate leaving the floating-point range raises
    FlowDivergenceError naming the offending step.
    """
    g0 = _check_coupling(g)
    if n < 0:
        raise DomainError(f"iteration count must be nonnegative, got {n}")
    g = g0
    for i in range(n):
        if cap is not None and g >= cap:
            return float(cap)
        g = rg_map(model, g)
        if not math.isfinite(g):
            raise FlowDivergenceError(iteration=i + 1, g_start=g0)
    if cap is not None:
        g = min(g, float(cap))
    return g


def system_size(model: LatticeModel, n: int) -> int:
    """Number of lattice sites represented after n RG iterations.

    Exact integer: base_sites * branching^n (7*3^n, 3*3^n, 4*4^n).  Raises
    RangeError once the result exceeds the signed 64-bit range.
    """
    if n < 0:
        raise DomainError(f"iteration count must be nonnegative, got {n}")
    size = model.base_sites * model.branching**n
    if size > _INT64_MAX:
        raise RangeError(
            f"system size {model.base_sites}*{model.branching}^{n} exceeds the "
            f"64-bit integer range; use log_system_size instead"
        )
    return size


def log_system_size(model: LatticeModel, n: int) -> float:
    """ln N, valid for any n (bookkeeping beyond the 64-bit cap)."""
    if n < 0:
        raise DomainError(f"iteration count must be nonnegative, got {n}")
    return math.log(model.base_sites) + n * math.log(model.branching)
