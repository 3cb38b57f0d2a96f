"""Lattice geometry: state sequencing and neighbour enumeration.

States are numbered from 1, first along x, then y, then z, so the cell
``(x, y, z)`` carries the number ``x + w*(y-1) + w*d*(z-1)``.  A grid with
``height == 1`` is two-dimensional.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError


class Borders(enum.Enum):
    BORDERED = "bordered"
    BOUNDLESS = "boundless"


class Coord(NamedTuple):
    x: int
    y: int
    z: int = 1


@dataclass(frozen=True)
class GridSpec:
    """Rectangular lattice of ``width x depth x height`` cells."""

    width: int
    depth: int
    height: int = 1
    borders: Borders = Borders.BORDERED

    def __post_init__(self):
        for name in ("width", "depth", "height"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")
        if self.width < 2 or self.depth < 2:
            raise DomainError("width and depth must be at least 2")
        if not isinstance(self.borders, Borders):
            object.__setattr__(self, "borders", Borders(self.borders))

    @property
    def dims(self) -> int:
        return 3 if self.height > 1 else 2

    @property
    def state_count(self) -> int:
        return self.width * self.depth * self.height

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.width, self.depth, self.height)

    @property
    def bordered(self) -> bool:
        return self.borders is Borders.BORDERED

    def states(self) -> range:
        return range(1, self.state_count + 1)

    def corners(self) -> list[int]:
        """State indices of the lattice corners, in ascending order."""
        zs = (1, self.height) if self.height > 1 else (1,)
        return sorted(
            {
                index_of(self, Coord(x, y, z))
                for z in zs
                for y in (1, self.depth)
                for x in (1, self.width)
            }
        )


def _check_state(spec: GridSpec, s: int) -> None:
    if not 1 <= s <= spec.state_count:
        raise DomainError(f"state {s} outside 1..{spec.state_count}")


def index_of(spec: GridSpec, c) -> int:
    x, y, z = Coord(*c)
    if not (1 <= x <= spec.width and 1 <= y <= spec.depth and 1 <= z <= spec.height):
        raise DomainError(f"coordinate {tuple(c)} outside grid {spec.shape}")
    return x + spec.width * (y - 1) + spec.width * spec.depth * (z - 1)


def coord_of(spec: GridSpec, s: int) -> Coord:
    _check_state(spec, s)
    i = s - 1
    layer = spec.width * spec.depth
    z, rest = divmod(i, layer)
    y, x = divmod(rest, spec.width)
    return Coord(x + 1, y + 1, z + 1)


def neighbors(spec: GridSpec, s: int) -> list[int]:
    """Neighbour states of ``s`` in the order -x, +x, -y, +y, -z, +z.

    Bordered grids drop moves that would leave the lattice.  Boundless grids
    wrap every move, so each state has exactly ``2 * dims`` entries; an axis
    of length 2 lists the same cell twice.
    """
    x, y, z = coord_of(spec, s)
    bounds = spec.shape
    pos = [x, y, z]
    out = []
    for axis in range(spec.dims):
        n = bounds[axis]
        for step in (-1, 1):
            q = pos[axis] + step
            if not 1 <= q <= n:
                if spec.bordered:
                    continue
                q = n if q < 1 else 1
            moved = list(pos)
            moved[axis] = q
            out.append(index_of(spec, moved))
    return out


def manhattan(spec: GridSpec, s: int, t: int) -> int:
    """Taxicab distance between two states, wrap-aware on boundless grids."""
    a, b = coord_of(spec, s), coord_of(spec, t)
    total = 0
    for u, v, n in zip(a, b, spec.shape):
        d = abs(u - v)
        if not spec.bordered:
            d = min(d, n - d)
        total += d
    return total
