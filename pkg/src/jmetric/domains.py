"""Planar domains and the distance ratio metric.

A domain is either a Euclidean disk or an (open) half-plane; the unit disk
and the upper half-plane keep dedicated tags so the common cases stay on
exact closed-form fast paths.  The distance ratio metric on a domain G is

    j(z, w) = log(1 + |z - w| / min(d(z, bd G), d(w, bd G))),

together with the two pseudo-hyperbolic distances contracted by holomorphic
self-maps of the disk and the half-plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PointOutsideDomain

__all__ = [
    "PlanarDomain",
    "UnitDisk",
    "UpperHalfPlane",
    "Disk",
    "HalfPlane",
    "contains",
    "boundary_distance",
    "j_distance",
    "pseudo_hyperbolic_disk",
    "pseudo_hyperbolic_halfplane",
]

NORMAL_UNIT_TOL = 1e-12


def _require_finite_complex(value, label: str) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{label} must have finite coordinates, got {z!r}")
    return z


def _require_finite_real(value, label: str) -> float:
    x = float(value)
    if not math.isfinite(x):
        raise DomainError(f"{label} must be finite, got {x!r}")
    return x


@dataclass(frozen=True)
class PlanarDomain:
    """Base tag for the domain variants below."""


@dataclass(frozen=True)
class UnitDisk(PlanarDomain):
    """Open unit disk |z| < 1."""


@dataclass(frozen=True)
class UpperHalfPlane(PlanarDomain):
    """Open upper half-plane Im z > 0."""


@dataclass(frozen=True)
class Disk(PlanarDomain):
    """Open disk |z - center| < radius."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", _require_finite_complex(self.center, "disk center"))
        object.__setattr__(self, "radius", _require_finite_real(self.radius, "disk radius"))
        if self.radius <= 0.0:
            raise DomainError(f"disk radius must be positive, got {self.radius!r}")


@dataclass(frozen=True)
class HalfPlane(PlanarDomain):
    """Open half-plane { z : <z, normal> > offset } with a unit inward normal.

    <z, n> is the real inner product z.real*n.real + z.imag*n.imag.
    """

    normal: complex
    offset: float

    def __post_init__(self):
        object.__setattr__(self, "normal", _require_finite_complex(self.normal, "half-plane normal"))
        object.__setattr__(self, "offset", _require_finite_real(self.offset, "half-plane offset"))
        if abs(abs(self.normal) - 1.0) > NORMAL_UNIT_TOL:
            raise DomainError(f"half-plane normal must be unit length, got |n| = {abs(self.normal)!r}")


def signed_boundary_offset(domain: PlanarDomain, z: complex) -> float:
    """Closed-form signed distance to the boundary, positive strictly inside.

    For disks this is radius - |z - center|, for half-planes <z, n> - offset;
    both are exact distances, so interiority is decided by the sign alone.
    """
    if isinstance(domain, UnitDisk):
        return 1.0 - abs(z)
    if isinstance(domain, UpperHalfPlane):
        return z.imag
    if isinstance(domain, Disk):
        return domain.radius - abs(z - domain.center)
    if isinstance(domain, HalfPlane):
        n = domain.normal
        return z.real * n.real + z.imag * n.imag - domain.offset
    raise TypeError(f"not a planar domain: {domain!r}")


def halfplane_frame(domain: PlanarDomain) -> tuple[complex, complex, complex]:
    """(base point on the boundary line, unit tangent, unit inward normal)."""
    if isinstance(domain, UpperHalfPlane):
        return 0j, 1.0 + 0j, 1j
    if isinstance(domain, HalfPlane):
        normal = domain.normal
        return domain.offset * normal, 1j * normal, normal
    raise TypeError(f"not a half-plane: {domain!r}")


def _finite_point(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def contains(domain: PlanarDomain, z: complex) -> bool:
    """True iff z lies strictly inside the domain.

    Points with non-finite coordinates are never inside anything, so NaN
    cannot leak past the interiority preconditions of the metric operations.
    """
    if not _finite_point(z):
        return False
    return signed_boundary_offset(domain, z) > 0.0


def boundary_distance(domain: PlanarDomain, z: complex) -> float:
    """Euclidean distance from an interior point to the boundary."""
    if not _finite_point(z):
        raise PointOutsideDomain(f"{z!r} has non-finite coordinates")
    off = signed_boundary_offset(domain, z)
    if off <= 0.0:
        raise PointOutsideDomain(f"{z!r} is not interior to {domain!r}")
    return off


def j_distance(domain: PlanarDomain, z: complex, w: complex) -> float:
    """Distance ratio metric log(1 + |z-w| / min boundary distance).

    Evaluated through log1p so near-coincident pairs (gaps around 1e-12 and
    below) keep full relative accuracy.  Zero exactly when z == w.
    """
    bz = boundary_distance(domain, z)
    bw = boundary_distance(domain, w)
    if z == w:
        return 0.0
    return math.log1p(abs(z - w) / (bz if bz <= bw else bw))


def pseudo_hyperbolic_disk(z: complex, w: complex) -> float:
    """|(z - w) / (1 - conj(w) z)| for two points of the unit disk."""
    if not (abs(z) < 1.0 and abs(w) < 1.0):
        raise PointOutsideDomain("pseudo_hyperbolic_disk needs points inside the unit disk")
    return abs((z - w) / (1.0 - w.conjugate() * z))


def pseudo_hyperbolic_halfplane(z: complex, w: complex) -> float:
    """|(z - w) / (z - conj(w))| for two points of the upper half-plane."""
    if not (_finite_point(z) and _finite_point(w) and z.imag > 0.0 and w.imag > 0.0):
        raise PointOutsideDomain("pseudo_hyperbolic_halfplane needs points with Im > 0")
    return abs((z - w) / (z - w.conjugate()))
