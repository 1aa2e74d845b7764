"""Randomized verification suites.

Each suite draws seeded samples, evaluates one identity or inequality, and
reports the worst margin observed.  Margins are signed slacks: nonnegative
means the property held with room to spare, and a suite passes when the
worst margin stays above minus its tolerance.  Identity and bounded
inequality suites track absolute slack (identities normalized by their
magnitude scale); the unbounded inequality chains track slack relative to
the dominating side.

Samples whose image points are numerically boundary-coincident (computed
boundary distance below 1e-9 relative to the image magnitude) cannot be
evaluated meaningfully in floating point and are skipped; the skip count is
kept on the report.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .domains import (
    Disk,
    HalfPlane,
    PlanarDomain,
    UnitDisk,
    UpperHalfPlane,
    j_distance,
    pseudo_hyperbolic_disk,
    pseudo_hyperbolic_halfplane,
    signed_boundary_offset,
)
from .errors import CoincidentPoints, DomainError, PoleEncountered, PointOutsideDomain
from .grammar import format_complex, format_domain, format_map
from .maps import (
    Blaschke,
    Compose,
    Extremal,
    MapExpr,
    Mobius,
    apply,
    image_modulus_bound,
    mobius_image_domain,
)
from .parallel import run_ordered
from .sampling import Uniforms, sample_interior, sample_interior_pair, substream

__all__ = [
    "CheckReport",
    "check_identity_halfplane",
    "check_identity_disk",
    "check_schwarz_pick_halfplane",
    "check_schwarz_pick_disk",
    "check_step_1_2",
    "check_step_2_2",
    "check_bound_2_3",
    "g_threshold",
    "g_threshold_from_modulus",
    "check_g_negativity",
    "check_lipschitz_pair",
    "guarded_ratio",
    "run_suite",
    "run_all_suites",
    "run_schwarz_pick_equality",
    "lipschitz_ceiling",
    "SUITE_NAMES",
]

# Sampling policy shared by all suites.  The half-plane box is kept modest:
# slack roundoff grows like 1e-16 * |f| / Im f, and a span of 10 keeps that
# comfortably below the 1e-12 contraction tolerances while X = |z-w|/s still
# reaches ~1e4.
PAIR_MARGIN = 1e-3
PAIR_SEPARATION = 1e-9
HALFPLANE_SPAN = 10.0

# Image boundary distances below IMAGE_TRUST * (1 + |f|) are treated as
# destroyed by rounding rather than as usable interior points.
IMAGE_TRUST = 1e-9

_CHUNK = 4096


# ---------------------------------------------------------------------------
# Scalar checks
# ---------------------------------------------------------------------------


def check_identity_halfplane(x: complex, y: complex) -> float:
    """Residual of |x - conj(y)|^2 - |x - y|^2 = 4 Im x Im y (zero on all of C)."""
    return abs(x - y.conjugate()) ** 2 - abs(x - y) ** 2 - 4.0 * x.imag * y.imag


def check_identity_disk(x: complex, y: complex) -> float:
    """Residual of |1 - conj(x) y|^2 - |x - y|^2 = (1 - |x|^2)(1 - |y|^2)."""
    lhs = abs(1.0 - x.conjugate() * y) ** 2 - abs(x - y) ** 2
    rhs = (1.0 - abs(x) ** 2) * (1.0 - abs(y) ** 2)
    return lhs - rhs


def check_schwarz_pick_halfplane(m: MapExpr, z: complex, w: complex) -> float:
    """Contraction slack of the half-plane pseudo-hyperbolic distance.

    Nonnegative for every holomorphic self-map of the upper half-plane;
    the caller is responsible for m actually being one.
    """
    fz = apply(m, z)
    fw = apply(m, w)
    return pseudo_hyperbolic_halfplane(z, w) - pseudo_hyperbolic_halfplane(fz, fw)


def check_schwarz_pick_disk(m: MapExpr, z: complex, w: complex) -> float:
    """Contraction slack of the disk pseudo-hyperbolic distance."""
    fz = apply(m, z)
    fw = apply(m, w)
    return pseudo_hyperbolic_disk(z, w) - pseudo_hyperbolic_disk(fz, fw)


def _step_1_2_sides(m: MapExpr, z: complex, w: complex) -> tuple[float, float]:
    if z.imag <= 0.0 or w.imag <= 0.0:
        raise PointOutsideDomain("points must lie in the upper half-plane")
    fz = apply(m, z)
    fw = apply(m, w)
    if fz.imag <= 0.0 or fw.imag <= 0.0:
        raise PointOutsideDomain("image points left the upper half-plane")
    s = z.imag if z.imag <= w.imag else w.imag
    big_s = fz.imag if fz.imag <= fw.imag else fw.imag
    lhs = abs(fz - fw) / big_s
    rhs = (abs(z - w) / s) * math.sqrt(1.0 + lhs)
    return lhs, rhs


def check_step_1_2(m: MapExpr, z: complex, w: complex) -> float:
    """Slack of |f(z)-f(w)|/S <= (|z-w|/s) sqrt(1 + |f(z)-f(w)|/S) on the
    half-plane, with s, S the smaller source/image heights."""
    lhs, rhs = _step_1_2_sides(m, z, w)
    return rhs - lhs


def _step_2_2_sides(m: MapExpr, z: complex, w: complex) -> tuple[float, float]:
    if abs(z) >= 1.0 or abs(w) >= 1.0:
        raise PointOutsideDomain("points must lie in the unit disk")
    fz = apply(m, z)
    fw = apply(m, w)
    if abs(fz) >= 1.0 or abs(fw) >= 1.0:
        raise PointOutsideDomain("image points left the unit disk")
    if abs(fz) < abs(fw):
        fz, fw = fw, fz
    r = max(abs(z), abs(w))
    lhs = abs(fz - fw) / (1.0 - abs(fz))
    rhs = (abs(z - w) / (1.0 - r)) * ((1.0 + abs(fz)) / (1.0 + r)) * math.sqrt(1.0 + lhs)
    return lhs, rhs


def check_step_2_2(m: MapExpr, z: complex, w: complex) -> float:
    """Slack of the disk analogue, with the points labeled so the image of
    the first has the larger modulus and r = max(|z|, |w|)."""
    lhs, rhs = _step_2_2_sides(m, z, w)
    return rhs - lhs


def check_bound_2_3(m: MapExpr, z: complex) -> float:
    """Slack of |f(z)| <= (|z| + |f(0)|) / (1 + |f(0)| |z|) for disk self-maps."""
    if abs(z) >= 1.0:
        raise PointOutsideDomain("point must lie in the unit disk")
    a_mod = abs(apply(m, 0j))
    return image_modulus_bound(a_mod, abs(z)) - abs(apply(m, z))


def g_threshold(c: float) -> float:
    """Positive root T = 2(1-c)/(2c-1) of cX + sqrt(1+c^2 X^2) - (1+X).

    Defined for 1/2 < c <= 1; c = 1/2 returns +inf (the expression is
    negative for every X > 0 there).
    """
    if c == 0.5:
        return math.inf
    if not 0.5 < c <= 1.0:
        raise DomainError(f"g_threshold needs c in (1/2, 1] or c = 1/2, got {c!r}")
    return 2.0 * (1.0 - c) / (2.0 * c - 1.0)


def g_threshold_from_modulus(a_mod: float, r: float) -> float:
    """Same threshold written as (2 a r + 1 - a)/(a (1 - r)) with a = |f(0)|."""
    if not (0.0 <= a_mod < 1.0) or not (0.0 <= r < 1.0):
        raise DomainError(f"g_threshold_from_modulus needs arguments in [0, 1), got {a_mod!r}, {r!r}")
    if a_mod == 0.0:
        return math.inf
    return (2.0 * a_mod * r + 1.0 - a_mod) / (a_mod * (1.0 - r))


def check_g_negativity(c: float, x: float) -> float:
    """Value of g(X) = cX + sqrt(1 + c^2 X^2) - (1 + X); negative on (0, T)."""
    if not 0.5 <= c <= 1.0:
        raise DomainError(f"check_g_negativity needs c in [1/2, 1], got {c!r}")
    if not x > 0.0:
        raise DomainError(f"check_g_negativity needs X > 0, got {x!r}")
    return c * x + math.sqrt(1.0 + c * c * x * x) - (1.0 + x)


def check_lipschitz_pair(
    src: PlanarDomain, dst: PlanarDomain, m: MapExpr, z: complex, w: complex
) -> float:
    """Metric distortion ratio j_dst(f(z), f(w)) / j_src(z, w).

    At most 2 (plus float noise) whenever m maps src holomorphically into
    dst and both are generalized disks.
    """
    j_src = j_distance(src, z, w)
    if j_src == 0.0:
        raise CoincidentPoints("the distortion ratio is undefined at coincident points")
    fz = apply(m, z)
    fw = apply(m, w)
    return j_distance(dst, fz, fw) / j_src


def guarded_ratio(
    src: PlanarDomain, dst: PlanarDomain, m: MapExpr, z: complex, w: complex
) -> float | None:
    """check_lipschitz_pair, or None when the evaluation is untrustworthy.

    None covers pole hits, coincident points, source points outside src, and
    image points whose computed boundary distance falls below the rounding
    trust floor.
    """
    try:
        fz = apply(m, z)
        fw = apply(m, w)
    except PoleEncountered:
        return None
    if signed_boundary_offset(dst, fz) < IMAGE_TRUST * (1.0 + abs(fz)):
        return None
    if signed_boundary_offset(dst, fw) < IMAGE_TRUST * (1.0 + abs(fw)):
        return None
    try:
        j_src = j_distance(src, z, w)
    except PointOutsideDomain:
        return None
    if j_src == 0.0:
        return None
    return j_distance(dst, fz, fw) / j_src


# ---------------------------------------------------------------------------
# Seeded map families
# ---------------------------------------------------------------------------


def random_blaschke(u: Uniforms, max_zeros: int = 4) -> Blaschke:
    count = min(1 + int(u.next() * max_zeros), max_zeros)
    zeros = []
    for _ in range(count):
        rho = 0.95 * math.sqrt(u.next())
        phi = 2.0 * math.pi * u.next()
        zeros.append(complex(rho * math.cos(phi), rho * math.sin(phi)))
    return Blaschke(2.0 * math.pi * u.next(), tuple(zeros))


def random_disk_automorphism(u: Uniforms) -> Blaschke:
    return random_blaschke(u, max_zeros=1)


def random_disk_map(u: Uniforms) -> MapExpr:
    if u.next() < 0.7:
        return random_blaschke(u)
    return Compose(random_blaschke(u, 2), random_blaschke(u, 2))


def random_halfplane_mobius(u: Uniforms) -> Mobius:
    """Real coefficients with determinant >= 0.1: an automorphism of the
    upper half-plane."""
    while True:
        a = u.uniform(-2.0, 2.0)
        b = u.uniform(-2.0, 2.0)
        c = u.uniform(-2.0, 2.0)
        d = u.uniform(-2.0, 2.0)
        if a * d - b * c >= 0.1:
            return Mobius(a, b, c, d)


def random_extremal(u: Uniforms) -> Extremal:
    return Extremal(u.uniform(-3.0, 3.0), u.uniform(-3.0, 3.0))


def _random_halfplane_atom(u: Uniforms) -> MapExpr:
    return random_halfplane_mobius(u) if u.next() < 0.5 else random_extremal(u)


def random_halfplane_map(u: Uniforms) -> MapExpr:
    pick = u.next()
    if pick < 0.35:
        return random_halfplane_mobius(u)
    if pick < 0.7:
        return random_extremal(u)
    return Compose(_random_halfplane_atom(u), _random_halfplane_atom(u))


# ---------------------------------------------------------------------------
# Reports and the chunked suite engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one randomized suite run."""

    suite: str
    samples: int
    seed: int
    passed: bool
    worst_margin: float
    worst_witness: dict = field(default_factory=dict)
    margin_convention: str = "absolute"
    skipped: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "samples": self.samples,
                "seed": self.seed,
                "passed": self.passed,
                "worst_margin": self.worst_margin,
                "worst_witness": self.worst_witness,
            },
            separators=(",", ":"),
        )


def _merge_chunks(results) -> tuple[float, dict, int]:
    worst = math.inf
    witness: dict = {}
    skipped = 0
    for margin, wit, skip in results:
        skipped += skip
        if margin < worst:
            worst = margin
            witness = wit
    return worst, witness, skipped


def _chunk_sizes(samples: int) -> list[int]:
    full, rest = divmod(samples, _CHUNK)
    return [_CHUNK] * full + ([rest] if rest else [])


def _run_chunked(kernel, suite, samples, seed, threads, tolerance, convention) -> CheckReport:
    sizes = _chunk_sizes(samples)
    tasks = [(seed, index, size) for index, size in enumerate(sizes)]
    results = run_ordered(kernel, tasks, threads)
    worst, witness, skipped = _merge_chunks(results)
    return CheckReport(
        suite=suite,
        samples=samples,
        seed=seed,
        passed=bool(worst >= -tolerance),
        worst_margin=worst,
        worst_witness=witness,
        margin_convention=convention,
        skipped=skipped,
    )


def _random_cnum(u: Uniforms) -> complex:
    return complex(u.uniform(-8.0, 8.0), u.uniform(-8.0, 8.0))


def _kernel_identity_halfplane(seed, index, count):
    u = Uniforms(substream(seed, index))
    worst, wit = math.inf, {}
    for _ in range(count):
        x = _random_cnum(u)
        y = _random_cnum(u)
        scale = 1.0 + abs(x) ** 2 + abs(y) ** 2
        margin = -abs(check_identity_halfplane(x, y)) / scale
        if margin < worst:
            worst, wit = margin, {"x": format_complex(x), "y": format_complex(y)}
    return worst, wit, 0


def _kernel_identity_disk(seed, index, count):
    u = Uniforms(substream(seed, index))
    worst, wit = math.inf, {}
    for _ in range(count):
        x = _random_cnum(u)
        y = _random_cnum(u)
        scale = (1.0 + abs(x) ** 2) * (1.0 + abs(y) ** 2)
        margin = -abs(check_identity_disk(x, y)) / scale
        if margin < worst:
            worst, wit = margin, {"x": format_complex(x), "y": format_complex(y)}
    return worst, wit, 0


def _image_trusted(domain: PlanarDomain, fz: complex) -> bool:
    return signed_boundary_offset(domain, fz) >= IMAGE_TRUST * (1.0 + abs(fz))


def _sp_margin(kind: str, m: MapExpr, z: complex, w: complex):
    """Schwarz-Pick slack for one draw, or None if untrustworthy."""
    domain = UpperHalfPlane() if kind == "halfplane" else UnitDisk()
    try:
        fz = apply(m, z)
        fw = apply(m, w)
    except PoleEncountered:
        return None
    if not (_image_trusted(domain, fz) and _image_trusted(domain, fw)):
        return None
    if kind == "halfplane":
        return pseudo_hyperbolic_halfplane(z, w) - pseudo_hyperbolic_halfplane(fz, fw)
    return pseudo_hyperbolic_disk(z, w) - pseudo_hyperbolic_disk(fz, fw)


def _sp_kernel(kind, family, seed, index, count, equality):
    u = Uniforms(substream(seed, index))
    domain = UpperHalfPlane() if kind == "halfplane" else UnitDisk()
    worst, wit, skipped = math.inf, {}, 0
    for _ in range(count):
        m = family(u)
        z, w = sample_interior_pair(domain, u, PAIR_MARGIN, PAIR_SEPARATION, HALFPLANE_SPAN)
        slack = _sp_margin(kind, m, z, w)
        if slack is None:
            skipped += 1
            continue
        margin = -abs(slack) if equality else slack
        if margin < worst:
            worst = margin
            wit = {"map": format_map(m), "z": format_complex(z), "w": format_complex(w)}
    return worst, wit, skipped


def _kernel_sp_halfplane(seed, index, count):
    return _sp_kernel("halfplane", random_halfplane_map, seed, index, count, False)


def _kernel_sp_disk(seed, index, count):
    return _sp_kernel("disk", random_disk_map, seed, index, count, False)


def _kernel_sp_halfplane_equality(seed, index, count):
    return _sp_kernel("halfplane", random_halfplane_mobius, seed, index, count, True)


def _kernel_sp_disk_equality(seed, index, count):
    return _sp_kernel("disk", random_disk_automorphism, seed, index, count, True)


def _kernel_step_1_2(seed, index, count):
    u = Uniforms(substream(seed, index))
    domain = UpperHalfPlane()
    worst, wit, skipped = math.inf, {}, 0
    for _ in range(count):
        m = random_halfplane_map(u)
        z, w = sample_interior_pair(domain, u, PAIR_MARGIN, PAIR_SEPARATION, HALFPLANE_SPAN)
        try:
            fz = apply(m, z)
            fw = apply(m, w)
        except PoleEncountered:
            skipped += 1
            continue
        if not (_image_trusted(domain, fz) and _image_trusted(domain, fw)):
            skipped += 1
            continue
        lhs, rhs = _step_1_2_sides(m, z, w)
        margin = (rhs - lhs) / max(1.0, rhs)
        if margin < worst:
            worst = margin
            wit = {"map": format_map(m), "z": format_complex(z), "w": format_complex(w)}
    return worst, wit, skipped


def _kernel_step_2_2(seed, index, count):
    u = Uniforms(substream(seed, index))
    domain = UnitDisk()
    worst, wit, skipped = math.inf, {}, 0
    for _ in range(count):
        m = random_disk_map(u)
        z, w = sample_interior_pair(domain, u, PAIR_MARGIN, PAIR_SEPARATION)
        try:
            fz = apply(m, z)
            fw = apply(m, w)
        except PoleEncountered:
            skipped += 1
            continue
        if not (_image_trusted(domain, fz) and _image_trusted(domain, fw)):
            skipped += 1
            continue
        lhs, rhs = _step_2_2_sides(m, z, w)
        margin = (rhs - lhs) / max(1.0, rhs)
        if margin < worst:
            worst = margin
            wit = {"map": format_map(m), "z": format_complex(z), "w": format_complex(w)}
    return worst, wit, skipped


def _kernel_bound_2_3(seed, index, count):
    u = Uniforms(substream(seed, index))
    domain = UnitDisk()
    worst, wit, skipped = math.inf, {}, 0
    for _ in range(count):
        m = random_disk_map(u)
        z = sample_interior(domain, u, PAIR_MARGIN)
        try:
            slack = check_bound_2_3(m, z)
        except (PoleEncountered, DomainError):
            skipped += 1
            continue
        if slack < worst:
            worst = slack
            wit = {"map": format_map(m), "z": format_complex(z)}
    return worst, wit, skipped


def _kernel_g_negativity(seed, index, count):
    u = Uniforms(substream(seed, index))
    worst, wit = math.inf, {}
    for _ in range(count):
        a_mod = 0.999 * u.next()
        r = 0.999 * u.next()
        c = (1.0 + a_mod) / (2.0 * (1.0 + a_mod * r))
        cap = min(g_threshold_from_modulus(a_mod, r), 1e6)
        x = 0.0
        while x <= 0.0:
            x = cap * u.next()
        margin = -check_g_negativity(c, x)
        if margin < worst:
            worst, wit = margin, {"c": c, "X": x}
    return worst, wit, 0


def _kernel_lipschitz_pair(seed, index, count):
    u = Uniforms(substream(seed, index))
    disk = UnitDisk()
    half = UpperHalfPlane()
    worst, wit, skipped = math.inf, {}, 0
    for _ in range(count):
        if u.next() < 0.5:
            src: PlanarDomain = half
            m = random_halfplane_map(u)
        else:
            src = disk
            m = random_disk_map(u)
        z, w = sample_interior_pair(src, u, PAIR_MARGIN, PAIR_SEPARATION, HALFPLANE_SPAN)
        ratio = guarded_ratio(src, src, m, z, w)
        if ratio is None:
            skipped += 1
            continue
        margin = 2.0 - ratio
        if margin < worst:
            worst = margin
            wit = {
                "map": format_map(m),
                "src": format_domain(src),
                "dst": format_domain(src),
                "z": format_complex(z),
                "w": format_complex(w),
            }
    return worst, wit, skipped


_SUITES = {
    "identity-halfplane": (_kernel_identity_halfplane, 1e-10, "absolute"),
    "identity-disk": (_kernel_identity_disk, 1e-10, "absolute"),
    "schwarz-pick-halfplane": (_kernel_sp_halfplane, 1e-12, "absolute"),
    "schwarz-pick-disk": (_kernel_sp_disk, 1e-12, "absolute"),
    "step-1-2": (_kernel_step_1_2, 1e-10, "relative"),
    "step-2-2": (_kernel_step_2_2, 1e-10, "relative"),
    "bound-2-3": (_kernel_bound_2_3, 1e-10, "absolute"),
    "g-negativity": (_kernel_g_negativity, 1e-12, "absolute"),
    "lipschitz-pair": (_kernel_lipschitz_pair, 1e-9, "absolute"),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, samples: int = 10_000, seed: int = 0, threads: int = 1) -> CheckReport:
    """Run one named suite; see SUITE_NAMES for the catalog."""
    try:
        kernel, tolerance, convention = _SUITES[name]
    except KeyError:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}") from None
    return _run_chunked(kernel, name, samples, seed, threads, tolerance, convention)


def run_all_suites(samples: int = 10_000, seed: int = 0, threads: int = 1) -> list[CheckReport]:
    return [run_suite(name, samples, seed, threads) for name in SUITE_NAMES]


def run_schwarz_pick_equality(
    kind: str, samples: int = 10_000, seed: int = 0, threads: int = 1
) -> CheckReport:
    """Automorphism-only Schwarz-Pick run scoring -|slack|: passing means the
    contraction is an equality to within 1e-12 on every draw."""
    if kind == "halfplane":
        kernel = _kernel_sp_halfplane_equality
    elif kind == "disk":
        kernel = _kernel_sp_disk_equality
    else:
        raise DomainError(f"kind must be 'halfplane' or 'disk', got {kind!r}")
    return _run_chunked(
        kernel, f"schwarz-pick-{kind}-equality", samples, seed, threads, 1e-12, "absolute"
    )


# ---------------------------------------------------------------------------
# Distortion ceiling harnesses (one chunk per map)
# ---------------------------------------------------------------------------

_CAYLEY = Mobius(1.0, -1j, 1.0, 1j)


def _random_image_source_and_mobius(u: Uniforms):
    """A random generalized-disk source plus a Moebius map whose pole sits
    safely off the source closure, so the image is again a disk/half-plane."""
    pick = u.next()
    if pick < 0.4:
        src: PlanarDomain = Disk(
            complex(u.uniform(-2.0, 2.0), u.uniform(-2.0, 2.0)), u.uniform(0.5, 2.0)
        )
        scale = src.radius
    elif pick < 0.7:
        src = UpperHalfPlane()
        scale = 1.0
    else:
        phi = 2.0 * math.pi * u.next()
        src = HalfPlane(complex(math.cos(phi), math.sin(phi)), u.uniform(-1.0, 1.0))
        scale = 1.0
    while True:
        coeffs = [complex(u.uniform(-2.0, 2.0), u.uniform(-2.0, 2.0)) for _ in range(4)]
        a, b, c, d = coeffs
        if abs(a * d - b * c) < 0.3:
            continue
        if c == 0:
            return src, Mobius(a, b, c, d)
        pole = -d / c
        if signed_boundary_offset(src, pole) <= -0.2 * scale:
            return src, Mobius(a, b, c, d)


def _kernel_ceiling(kind, seed, index, pairs):
    u = Uniforms(substream(seed, index))
    if kind == "halfplane":
        src: PlanarDomain = UpperHalfPlane()
        dst: PlanarDomain = src
        m: MapExpr = random_halfplane_map(u)
    elif kind == "disk":
        src = UnitDisk()
        dst = src
        m = random_blaschke(u, 4)
    elif kind == "mobius-images":
        if index == 0:
            src, m = UpperHalfPlane(), _CAYLEY
        else:
            src, m = _random_image_source_and_mobius(u)
        dst = mobius_image_domain(m, src)
    else:
        raise DomainError(f"unknown ceiling kind {kind!r}")
    worst, wit, skipped = math.inf, {}, 0
    for _ in range(pairs):
        z, w = sample_interior_pair(src, u, PAIR_MARGIN, PAIR_SEPARATION, HALFPLANE_SPAN)
        ratio = guarded_ratio(src, dst, m, z, w)
        if ratio is None:
            skipped += 1
            continue
        margin = 2.0 - ratio
        if margin < worst:
            worst = margin
            wit = {
                "map": format_map(m),
                "src": format_domain(src),
                "dst": format_domain(dst),
                "z": format_complex(z),
                "w": format_complex(w),
            }
    return worst, wit, skipped


def lipschitz_ceiling(
    kind: str, maps: int = 200, pairs_per_map: int = 10_000, seed: int = 0, threads: int = 1
) -> CheckReport:
    """Distortion ceiling sweep: `maps` seeded maps, `pairs_per_map` pairs
    each, scored as 2 - ratio with tolerance 1e-9.

    kind: "halfplane" (self-maps of H), "disk" (Blaschke products on D), or
    "mobius-images" (map 0 is the Cayley map onto the unit disk, the rest are
    seeded Moebius maps evaluated against their computed image domains).
    """
    tasks = [(kind, seed, index, pairs_per_map) for index in range(maps)]
    results = run_ordered(_kernel_ceiling, tasks, threads)
    worst, witness, skipped = _merge_chunks(results)
    return CheckReport(
        suite=f"lipschitz-ceiling-{kind}",
        samples=maps * pairs_per_map,
        seed=seed,
        passed=bool(worst >= -1e-9),
        worst_margin=worst,
        worst_witness=witness,
        margin_convention="absolute",
        skipped=skipped,
    )
