"""Seeded, splittable sampling helpers.

Every randomized routine in the package derives its draws from one Philox
counter-based generator.  Parallel work splits into fixed-size chunks and
chunk k consumes the substream ``substream(seed, k)``; results therefore do
not depend on how many workers ran the chunks, which is what makes suite
reports bit-reproducible across thread counts.
"""

from __future__ import annotations

import numpy as np

from .domains import (
    Disk,
    PlanarDomain,
    UnitDisk,
    halfplane_frame,
    signed_boundary_offset,
)

__all__ = ["substream", "Uniforms", "sample_interior", "sample_interior_pair"]

# Extent of the sampling box used for the unbounded half-plane domains.
HALFPLANE_SPAN = 100.0


def substream(seed: int, index: int) -> np.random.Generator:
    """Generator for chunk `index` of the stream keyed by `seed`."""
    bg = np.random.Philox(seed)
    if index:
        bg = bg.jumped(index)
    return np.random.Generator(bg)


class Uniforms:
    """Buffered scalar uniforms in [0, 1) drawn from one generator.

    Bulk array draws plus a cursor are an order of magnitude cheaper than
    per-call scalar draws; consumption order is identical either way.
    """

    __slots__ = ("_rng", "_buf", "_pos")

    def __init__(self, rng: np.random.Generator, prefetch: int = 4096):
        self._rng = rng
        self._buf = rng.random(prefetch).tolist()
        self._pos = 0

    def next(self) -> float:
        if self._pos >= len(self._buf):
            self._buf = self._rng.random(len(self._buf)).tolist()
            self._pos = 0
        value = self._buf[self._pos]
        self._pos += 1
        return value

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next()


def sample_interior(
    domain: PlanarDomain,
    u: Uniforms,
    margin: float = 1e-3,
    span: float = HALFPLANE_SPAN,
) -> complex:
    """One interior point with boundary distance >= margin.

    Disks sample uniformly from the bounding square with rejection; the
    unbounded half-planes sample uniformly from a span x span box sitting
    `margin` above the boundary line.
    """
    if isinstance(domain, (UnitDisk, Disk)):
        if isinstance(domain, UnitDisk):
            cx, cy, r = 0.0, 0.0, 1.0
        else:
            cx, cy, r = domain.center.real, domain.center.imag, domain.radius
        if margin >= r:
            raise ValueError(f"margin {margin!r} leaves no interior in radius {r!r}")
        while True:
            z = complex(u.uniform(cx - r, cx + r), u.uniform(cy - r, cy + r))
            if signed_boundary_offset(domain, z) >= margin:
                return z
    base, tangent, normal = halfplane_frame(domain)
    t = u.uniform(-span, span)
    h = u.uniform(margin, span)
    return base + t * tangent + h * normal


def sample_interior_pair(
    domain: PlanarDomain,
    u: Uniforms,
    margin: float = 1e-3,
    separation: float = 1e-9,
    span: float = HALFPLANE_SPAN,
) -> tuple[complex, complex]:
    """Two interior points at least `separation` apart."""
    z = sample_interior(domain, u, margin, span)
    while True:
        w = sample_interior(domain, u, margin, span)
        if abs(z - w) >= separation:
            return z, w
