"""Bound-state energy levels of the oscillator-plus-linear Dirac problem.

Squaring the transcendental quantization condition of either symmetry limit
turns it into a monic cubic in the energy.  With

    g'  = q^2 eps^2 / (2 M w0^2),     R = 2 M w0^2 (n + 1/2)^2,

the two cubics are

    spin       (kappa = -1):  (E + M - C_s)(E - M + g')^2  = R,
    pseudospin (kappa = +1):  (E - M - C_ps)(E + M + g')^2 = R,

and the pseudospin one is the image of the spin one under the mapping
E -> -E, C_s -> -C_ps, g' -> -g' with the squared right side sign-flipped.

The cubic is solved by reduction to a depressed cubic y^3 + d y = -e and the
substitution y = z - d/(3z), which turns it into a quadratic in z^3 with
constant p = -(d/3)^3.  When e^2 >= 4p the real cube-root formula applies
directly; when e^2 < 4p (three real roots, Cardano's intermediates turn
complex) a trigonometric fallback is used and the solution is flagged.

Squaring introduces spurious roots, so a cubic root is physical only if it
also satisfies the unsquared condition:

    spin:        (2n+1) sqrt(M w0^2 / (2 (E + M - C_s))) = E - M + g',
                 requiring  E + M - C_s > 0  and  E - M + g' > 0;
    pseudospin:  (2n+1) = -(E + M + g') sqrt(2 (E - M - C_ps) / (M w0^2)),
                 requiring  E - M - C_ps > 0  and  E + M + g' < 0.

In the pseudospin case two cubic roots can satisfy all conditions (the
bound pair straddling the E = -(M + g') boundary and a near-boundary root
close to E = M + C_ps); the level tables this package reproduces follow the
upper root, so selection takes the largest surviving energy and reports the
rest as alternates.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
from dataclasses import dataclass
from enum import Enum

from .model import ModelParams, SymmetryKind, derived_constants

_BOUNDARY_TOL = 1e-12
_BISECT_TOL = 1e-12
_BISECT_MAXITER = 200


class DegenerateCubic(Exception):
    """Leading cubic coefficient is zero."""


class NoSignChange(Exception):
    """The residual does not change sign over the bracket."""


class Status(Enum):
    BOUND = "Bound"
    NO_PHYSICAL_ROOT = "NoPhysicalRoot"
    # Discriminant-regime marker (e^2 < 4p: three real roots reached through
    # complex intermediates).  Carried as a flag on solutions and levels;
    # selection itself reports BOUND / NO_PHYSICAL_ROOT.
    CARDANO_COMPLEX_REGIME = "CardanoComplexRegime"


class CubicMethod(Enum):
    CARDANO_REAL = "CardanoRealCubeRoot"
    TRIGONOMETRIC = "Trigonometric"


class Equation(Enum):
    """Unsquared transcendental conditions usable as bisection oracles."""

    SPIN_EQ = "spin"
    PSEUDOSPIN_EQ = "pseudospin"
    REL_HO = "relativistic-ho"


@dataclass(frozen=True)
class CubicCoefficients:
    """Monic cubic A E^3 + B E^2 + C E + D with provenance."""

    A: float
    B: float
    C: float
    D: float
    sym: SymmetryKind | None = None
    n: int | None = None
    params: ModelParams | None = None


@dataclass(frozen=True)
class CubicSolution:
    """Roots plus the depressed-cubic diagnostics (d, e, p)."""

    roots: tuple[complex, complex, complex]
    depressed: tuple[float, float]
    p: float
    cardano_real: bool
    method: CubicMethod


@dataclass(frozen=True)
class RejectedRoot:
    value: complex
    reason: str


@dataclass(frozen=True)
class ChannelScalars:
    """Derived channel scalars evaluated at the selected energy.

    For the spin channel all four are real; for pseudospin, gamma < 0 for
    bound levels so v is imaginary and is kept complex.
    """

    gamma: complex
    alpha: complex
    v: complex
    beta: complex


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    kappa: int
    status: Status
    E: float | None
    residual: float | None
    alternates: tuple[RejectedRoot, ...]
    cardano_complex_regime: bool
    boundary: bool = False
    diagnostics: ChannelScalars | None = None


def _spin_cubic_bcd(M_s: float, g: float, R: float) -> tuple[float, float, float]:
    """Coefficients of (E + M_s)(E + g)^2 - R expanded."""
    return (M_s + 2.0 * g, g * (g + 2.0 * M_s), g * g * M_s - R)


def _rhs_squared(params: ModelParams, n: int) -> float:
    return 2.0 * params.M * params.omega0 ** 2 * (n + 0.5) ** 2


def cubic_coefficients(params: ModelParams, n: int) -> CubicCoefficients:
    """Monic cubic whose roots contain the level-n energy."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    dc = derived_constants(params)
    R = _rhs_squared(params, n)
    if params.sym is SymmetryKind.SPIN:
        B, C, D = _spin_cubic_bcd(dc.M_s, dc.g_eps, R)
    else:
        P = -(params.M + params.C)
        h = params.M + dc.g_shift
        B, C, D = _spin_cubic_bcd(P, h, R)
    return CubicCoefficients(1.0, B, C, D, sym=params.sym, n=n, params=params)


def _mapped_spin_coefficients(params: ModelParams, n: int) -> tuple[float, float, float]:
    """Pseudospin coefficients obtained by transforming the spin cubic.

    Build the spin cubic with C_s -> -C_ps and g' -> -g', flip the sign of
    the squared right side, then send E -> -E and negate the polynomial
    (which negates the odd coefficients of the monic cubic).
    """
    dc = derived_constants(params)
    R = _rhs_squared(params, n)
    M_s = params.M + params.C  # C_s -> -C_ps
    g = -dc.g_shift - params.M  # g' -> -g'
    B, C, D = _spin_cubic_bcd(M_s, g, -R)
    return (-B, C, -D)


def _depressed(B: float, C: float, D: float) -> tuple[float, float, float]:
    d = C - B * B / 3.0
    e = D + B * (2.0 * B * B - 9.0 * C) / 27.0
    p = -((d / 3.0) ** 3)
    return d, e, p


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _polish(root: complex, B: float, C: float, D: float) -> complex:
    """A few Newton steps on the monic cubic; keeps real roots real."""
    is_real = root.imag == 0.0
    z = root.real if is_real else root
    for _ in range(4):
        f = ((z + B) * z + C) * z + D
        fp = (3.0 * z + 2.0 * B) * z + C
        if abs(fp) < 1e-300:
            break
        step = f / fp
        if abs(step) < 1e-18 * max(1.0, abs(z)):
            break
        z = z - step
    return complex(z)


def solve_cubic_cardano(c: CubicCoefficients) -> CubicSolution:
    """All three roots of the cubic with discriminant-regime bookkeeping.

    e^2 >= 4p: the real cube-root expression gives one root, the other two
    come from deflation.  e^2 < 4p: three real roots via the trigonometric
    form, flagged as the complex-intermediate regime.
    """
    if c.A == 0:
        raise DegenerateCubic("leading coefficient is zero")
    B, C, D = c.B / c.A, c.C / c.A, c.D / c.A
    d, e, p = _depressed(B, C, D)
    cardano_real = e * e >= 4.0 * p

    if cardano_real:
        method = CubicMethod.CARDANO_REAL
        if d == 0.0:
            y1 = _cbrt(-e)
        else:
            s = math.sqrt(max(e * e - 4.0 * p, 0.0))
            # larger-magnitude branch avoids cancellation (nonzero since d != 0)
            z3 = -e / 2.0 - s / 2.0 if e > 0.0 else -e / 2.0 + s / 2.0
            z = _cbrt(z3)
            y1 = z - d / (3.0 * z)
        e1 = y1 - B / 3.0
        b1 = B + e1
        b2 = C + b1 * e1
        disc = b1 * b1 - 4.0 * b2
        if disc >= 0.0:
            sq = math.sqrt(disc)
            pair = (complex((-b1 + sq) / 2.0), complex((-b1 - sq) / 2.0))
        else:
            sq = math.sqrt(-disc)
            pair = (complex(-b1 / 2.0, sq / 2.0), complex(-b1 / 2.0, -sq / 2.0))
        roots = (complex(e1),) + pair
    else:
        method = CubicMethod.TRIGONOMETRIC
        # e^2 < 4p forces p > 0, hence d < 0
        u = math.sqrt(-d / 3.0)
        arg = min(1.0, max(-1.0, -e / (2.0 * u ** 3)))
        theta = math.acos(arg) / 3.0
        roots = tuple(
            complex(2.0 * u * math.cos(theta - 2.0 * math.pi * k / 3.0) - B / 3.0)
            for k in range(3)
        )

    polished = tuple(sorted((_polish(r, B, C, D) for r in roots),
                            key=lambda z: (z.real, z.imag)))
    return CubicSolution(polished, (d, e), p, cardano_real, method)


def cardano_complex_roots(B: float, C: float, D: float) -> tuple[complex, complex, complex]:
    """Alternative all-complex Cardano path, valid in both discriminant regimes.

    Used as an independent cross-check of solve_cubic_cardano.
    """
    d, e, p = _depressed(B, C, D)
    if d == 0.0 and e == 0.0:
        y = (0j, 0j, 0j)
    else:
        z3 = (-e + cmath.sqrt(complex(e * e - 4.0 * p))) / 2.0
        if abs(z3) < 1e-300:
            z3 = (-e - cmath.sqrt(complex(e * e - 4.0 * p))) / 2.0
        z0 = z3 ** (1.0 / 3.0)
        w = cmath.exp(2j * cmath.pi / 3.0)
        zs = (z0, z0 * w, z0 * w * w)
        if d == 0.0:
            y = zs
        else:
            y = tuple(z - d / (3.0 * z) for z in zs)
    roots = tuple(_polish(yk - B / 3.0, B, C, D) for yk in y)
    return tuple(sorted(roots, key=lambda z: (z.real, z.imag)))


def _spin_residual(params: ModelParams, n: int, E: float) -> float:
    gamma = E + params.M - params.C
    if gamma <= 0.0:
        return math.nan
    gp = derived_constants(params).g_shift
    return (E - params.M + gp) - (2 * n + 1) * math.sqrt(
        params.M * params.omega0 ** 2 / (2.0 * gamma)
    )


def _pseudo_residual(params: ModelParams, n: int, E: float) -> float:
    depth = E - params.M - params.C
    if depth < 0.0:
        return math.nan
    gp = derived_constants(params).g_shift
    return (2 * n + 1) + (E + params.M + gp) * math.sqrt(
        2.0 * depth / (params.M * params.omega0 ** 2)
    )


def _relho_residual(M: float, omega: float, n: int, E: float) -> float:
    return math.sqrt((E + M) / (2.0 * M)) * (E - M) - (n + 0.5) * omega


def _channel_scalars(params: ModelParams, E: float) -> ChannelScalars:
    w2 = params.M * params.omega0 ** 2
    if params.sym is SymmetryKind.SPIN:
        gamma = E + params.M - params.C
    else:
        gamma = params.M - E + params.C
    return ChannelScalars(
        gamma=complex(gamma),
        alpha=complex(gamma * (params.M - E if params.sym is SymmetryKind.SPIN
                               else params.M + E)),
        v=cmath.sqrt(complex(0.5 * w2 * gamma)),
        beta=complex(params.q * params.eps * gamma),
    )


def _refine_near_boundary(params: ModelParams, n: int, E: float):
    """Re-solve the unsquared condition in the binding-margin variable.

    At strong fields or deep symmetry constants the bound energy sits a
    hair above a sign boundary; recomputing the margin from the stored E
    cancels catastrophically, so the residual evaluated through E loses
    all precision.  Bisecting the condition written directly in the margin
    t > 0 keeps it well conditioned.  Returns (refined E, margin-form
    residual magnitude), or None when no bracket is found.
    """
    gp = derived_constants(params).g_shift
    M, C = params.M, params.C
    w2 = params.M * params.omega0 ** 2
    k = 2 * n + 1

    if params.sym is SymmetryKind.SPIN:
        candidates = [
            # t = E + M - C (gamma margin)
            (C - M, +1.0,
             lambda t: (t + C - 2.0 * M + gp) - k * math.sqrt(w2 / (2.0 * t))),
            # t = E - M + g' (shift margin)
            (M - gp, +1.0,
             lambda t: t - k * math.sqrt(w2 / (2.0 * (t + 2.0 * M - gp - C)))),
        ]
    else:
        lo_edge = M + C
        hi_edge = -(M + gp)
        candidates = [
            # t = E - M - C_ps (depth margin, growing upward from lo_edge)
            (lo_edge, +1.0,
             lambda t: k + (t + lo_edge + M + gp) * math.sqrt(2.0 * t / w2)),
            # t = -(E + M + g') (margin below hi_edge)
            (hi_edge, -1.0,
             lambda t: k - t * math.sqrt(2.0 * max(hi_edge - t - M - C, 0.0) / w2)),
        ]

    # refine against the boundary the root is closest to
    boundary, direction, f = min(candidates, key=lambda c: abs(E - c[0]))
    t0 = direction * (E - boundary)
    if not 0.0 < t0 < math.inf:
        return None
    lo, hi = t0 / 16.0, t0 * 16.0
    flo, fhi = f(lo), f(hi)
    if math.isnan(flo) or math.isnan(fhi) or (flo < 0.0) == (fhi < 0.0):
        return None
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            lo = hi = mid
            break
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
        if hi - lo <= 1e-16 * hi:
            break
    t = 0.5 * (lo + hi)
    return boundary + direction * t, abs(f(t))


def select_physical_root(sol: CubicSolution, params: ModelParams, n: int) -> EnergyLevel:
    """Apply the sign conditions of the unsquared condition to the cubic roots.

    Spin: keep real roots with E + M - C_s > 0 and E - M + g' > 0 (at most
    one exists).  Pseudospin: keep real roots with E - M - C_ps > 0 and
    E + M + g' < 0; when two survive, the largest is the tabulated branch.
    Roots sitting on a sign boundary within 1e-12 count as satisfying it and
    set the boundary flag.
    """
    gp = derived_constants(params).g_shift
    spin = params.sym is SymmetryKind.SPIN

    survivors: list[float] = []
    rejected: list[RejectedRoot] = []
    for r in sol.roots:
        if abs(r.imag) > 1e-9 * (1.0 + abs(r)):
            rejected.append(RejectedRoot(r, "complex conjugate pair member"))
            continue
        E = r.real
        tol = _BOUNDARY_TOL * max(1.0, abs(E))
        if spin:
            conds = (
                (E + params.M - params.C, +1, "E + M - C_s > 0"),
                (E - params.M + gp, +1, "E - M + g' > 0"),
            )
        else:
            conds = (
                (E - params.M - params.C, +1, "E - M - C_ps > 0"),
                (E + params.M + gp, -1, "E + M + g' < 0"),
            )
        failed = [name for value, sign, name in conds if sign * value < -tol]
        if failed:
            rejected.append(RejectedRoot(r, "fails " + " and ".join(failed)))
        else:
            survivors.append(E)

    if not survivors:
        return EnergyLevel(
            n=n,
            kappa=params.kappa,
            status=Status.NO_PHYSICAL_ROOT,
            E=None,
            residual=None,
            alternates=tuple(rejected),
            cardano_complex_regime=not sol.cardano_real,
        )

    selected = max(survivors)
    for E in survivors:
        if E != selected:
            rejected.append(RejectedRoot(
                complex(E),
                "sign conditions hold; lower root of the bound pair "
                "(tabulated branch takes the upper)",
            ))

    residual_fn = _spin_residual if spin else _pseudo_residual
    residual = abs(residual_fn(params, n, selected))
    if residual > 1e-9:
        refined = _refine_near_boundary(params, n, selected)
        if refined is not None and refined[1] < residual:
            selected, residual = refined
    tol = _BOUNDARY_TOL * max(1.0, abs(selected))
    if spin:
        margins = (selected + params.M - params.C, selected - params.M + gp)
    else:
        margins = (selected - params.M - params.C, -(selected + params.M + gp))
    return EnergyLevel(
        n=n,
        kappa=params.kappa,
        status=Status.BOUND,
        E=selected,
        residual=residual,
        alternates=tuple(rejected),
        cardano_complex_regime=not sol.cardano_real,
        boundary=any(abs(m) <= tol for m in margins),
        diagnostics=_channel_scalars(params, selected),
    )


def solve_spin_level(params: ModelParams, n: int) -> EnergyLevel:
    """Level-n energy in the spin-symmetry limit (kappa = -1)."""
    if params.sym is not SymmetryKind.SPIN:
        raise ValueError("solve_spin_level requires spin-symmetry parameters")
    sol = solve_cubic_cardano(cubic_coefficients(params, n))
    return select_physical_root(sol, params, n)


def solve_pseudospin_level(params: ModelParams, n: int) -> EnergyLevel:
    """Level-n energy in the pseudospin-symmetry limit (kappa = +1).

    Also cross-checks that the pseudospin cubic equals the transformed spin
    cubic (energy-reflection mapping); a mismatch indicates a coefficient
    bug and raises.
    """
    if params.sym is not SymmetryKind.PSEUDOSPIN:
        raise ValueError("solve_pseudospin_level requires pseudospin parameters")
    coeffs = cubic_coefficients(params, n)
    mapped = _mapped_spin_coefficients(params, n)
    for direct, via_map in zip((coeffs.B, coeffs.C, coeffs.D), mapped):
        if abs(direct - via_map) > 1e-12 * max(1.0, abs(direct)):
            raise RuntimeError(
                f"pseudospin cubic fails the mapping identity: {direct} vs {via_map}"
            )
    sol = solve_cubic_cardano(coeffs)
    return select_physical_root(sol, params, n)


def solve_level(params: ModelParams, n: int) -> EnergyLevel:
    """Dispatch on the symmetry kind of the parameters."""
    if params.sym is SymmetryKind.SPIN:
        return solve_spin_level(params, n)
    return solve_pseudospin_level(params, n)


def _bisect(f, a: float, b: float, tol: float = _BISECT_TOL,
            maxiter: int = _BISECT_MAXITER) -> float:
    fa, fb = f(a), f(b)
    if math.isnan(fa) or math.isnan(fb) or (fa < 0.0) == (fb < 0.0):
        raise NoSignChange(f"no sign change over [{a}, {b}]")
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    for _ in range(maxiter):
        if b - a <= tol:
            break
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm < 0.0) == (fa < 0.0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return 0.5 * (a + b)


def _scan_bracket(f, start: float, direction: float, max_off: float) -> tuple[float, float]:
    """Geometric scan from a sign-condition boundary until the residual flips."""
    prev_x = prev_v = None
    off = 0.0
    k = 0
    while True:
        x = start + direction * off
        v = f(x)
        if not math.isnan(v):
            if prev_v is not None and (v < 0.0) != (prev_v < 0.0):
                return (min(prev_x, x), max(prev_x, x))
            prev_x, prev_v = x, v
        if off >= max_off:
            raise NoSignChange("no sign change within the scan window")
        off = min(1e-9 * 2.0 ** k, max_off)
        k += 1


def bisection_oracle(equation: Equation, params: ModelParams, n: int,
                     bracket: tuple[float, float] | None = None) -> float:
    """Root of the chosen unsquared condition, independent of the cubic path.

    With an explicit bracket the residual must change sign across it.
    Without one, the bracket is found by a geometric scan from the relevant
    sign-condition boundary: upward from max(C_s - M, M - g') for the spin
    condition, downward from -(M + g') for the pseudospin one (so the scan
    meets the tabulated upper root first).  Roots are located to 1e-12.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    gp = derived_constants(params).g_shift

    if equation is Equation.SPIN_EQ:
        f = lambda E: _spin_residual(params, n, E)
    elif equation is Equation.PSEUDOSPIN_EQ:
        f = lambda E: _pseudo_residual(params, n, E)
    else:
        f = lambda E: _relho_residual(params.M, params.omega0, n, E)
        if bracket is None:
            bracket = (params.M, params.M + 10.0 * (n + 1) * params.omega0 + 10.0)

    if bracket is None:
        if equation is Equation.SPIN_EQ:
            start = max(params.C - params.M, params.M - gp)
            bracket = _scan_bracket(f, start, +1.0, 1e3)
        else:
            start = -(params.M + gp)
            floor = params.M + params.C
            max_off = min(1e3, start - floor - 1e-9)
            if max_off <= 0.0:
                raise NoSignChange("pseudospin sign conditions define an empty window")
            bracket = _scan_bracket(f, start, -1.0, max_off)

    return _bisect(f, bracket[0], bracket[1])


def relativistic_ho_level(M: float, omega: float, n: int) -> float:
    """Oscillator level with relativistic mass correction (field-free limit).

    Root E > M of sqrt((E + M)/(2M)) (E - M) = (n + 1/2) omega, found by
    safeguarded bisection on [M, M + 10(n+1) omega + 10].
    """
    if M <= 0 or omega <= 0:
        raise ValueError("M and omega must be > 0")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _bisect(
        lambda E: _relho_residual(M, omega, n, E),
        M,
        M + 10.0 * (n + 1) * omega + 10.0,
    )


def nr_spin_level(params: ModelParams, n: int) -> float:
    """Nonrelativistic limit of the spin branch: w0 (n + 1/2) - g_shift.

    The whole oscillator ladder is rigidly shifted down by g_shift.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return params.omega0 * (n + 0.5) - derived_constants(params).g_shift


def nr_pseudospin_level(params: ModelParams, n: int) -> float:
    """Nonrelativistic limit of the pseudospin branch (always positive).

    Implemented literally as (w0^2 / 2M)(n + 1/2)^2 [1 + (q eps / 2 M w0)^2]^-2.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    base = params.omega0 ** 2 / (2.0 * params.M) * (n + 0.5) ** 2
    bracket = 1.0 + (params.q * params.eps / (2.0 * params.M * params.omega0)) ** 2
    return base * bracket ** -2


def spectrum_grid(params: ModelParams, n_max: int,
                  eps_list) -> list[tuple[ModelParams, EnergyLevel]]:
    """Levels over an (n, eps) grid, n outer and eps inner, cells independent."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    rows = []
    for n in range(n_max + 1):
        for eps in eps_list:
            p = dataclasses.replace(params, eps=float(eps))
            rows.append((p, solve_level(p, n)))
    return rows


@dataclass(frozen=True)
class BreakdownScan:
    """Field-strength thresholds where pseudospin binding is lost."""

    eps_discriminant: float
    eps_physical: float
    eps_lo: float
    eps_hi: float


def pseudospin_breakdown_threshold(params: ModelParams, n: int,
                                   eps_lo: float = 0.0, eps_hi: float = 3.0,
                                   tol: float = 1e-9) -> BreakdownScan:
    """Locate the field strength where the bound pseudospin pair disappears.

    Two indicators are scanned: the depressed-cubic discriminant sign
    (e^2 - 4p crossing zero ends the three-real-root regime) and the loss of
    a root satisfying the physical sign conditions.  For this problem the
    two coincide: the bound pair merges and turns complex at the same field.
    """
    if params.sym is not SymmetryKind.PSEUDOSPIN:
        raise ValueError("breakdown scan requires pseudospin parameters")

    def in_complex_regime(eps: float) -> bool:
        p = dataclasses.replace(params, eps=eps)
        return not solve_cubic_cardano(cubic_coefficients(p, n)).cardano_real

    def has_bound_root(eps: float) -> bool:
        p = dataclasses.replace(params, eps=eps)
        return solve_level(p, n).status is Status.BOUND

    def flip(indicator) -> float:
        lo, hi = eps_lo, eps_hi
        if not indicator(lo) or indicator(hi):
            raise NoSignChange(
                f"indicator does not flip on [{eps_lo}, {eps_hi}]"
            )
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if indicator(mid):
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    return BreakdownScan(
        eps_discriminant=flip(in_complex_regime),
        eps_physical=flip(has_bound_root),
        eps_lo=eps_lo,
        eps_hi=eps_hi,
    )


def field_free_closed_form_variant(M: float, C_s: float, omega0: float, n: int,
                   sign: int = +1) -> complex:
    """Field-free closed form built on u = 3 M_s^3/27 - 2 M w0^2 (n+1/2)^2.

    Reproduced verbatim for the verification report.  It is NOT consistent
    with the depressed-cubic route at eps = 0 (whose shift constant is
    2 (2M - C_s)^3/27 and whose linear offset is (2M - C_s)/3, not M_s/3);
    the depressed-cubic route is the authoritative one.
    """
    M_s = M - C_s
    u = 3.0 * M_s ** 3 / 27.0 - 2.0 * M * omega0 ** 2 * (n + 0.5) ** 2
    s = cmath.sqrt(complex(u * u - 4.0 * (M_s / 3.0) ** 6))
    z3 = -u / 2.0 + sign * s / 2.0
    z = z3 ** (1.0 / 3.0)
    return z + (M_s ** 2 / 9.0) / z - M_s / 3.0
