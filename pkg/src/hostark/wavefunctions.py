"""Radial wavefunction evaluators for the oscillator-plus-linear problem.

Shape constants (hbar = c = 1):

    lambda = sqrt(M w0),   b = q eps / w0,   b / lambda^2 = r0,

so the Gaussian envelopes are centered on the displaced well bottom.  The
relativistic upper component is evaluated exactly as its closed form is
written,

    F_n(r) = N exp[-eps1 (lambda^2 r^2/2 - b r)] L_n[eps2 (lambda^2 r - b)^2],

with eps1 = sqrt(gamma/(2M)), eps2 = gamma/(2Mv) taken at the solved level
energy (gamma = E + M - C_s).  The printed lower-component closed form is
reproduced verbatim as well, but the authoritative lower component is the
derivative relation

    G(r) = d0 (d/dr + kappa/r) F(r),      d0 = 1/gamma,

computed by central differences; the two are compared, never forced to
agree (the printed form carries a Laguerre-derivative term with a
nonstandard index and sign).

The nonrelativistic radial function is the displaced-oscillator solution

    R_n(r) = (lambda^2/pi)^(1/4) 1/sqrt(2^n n!) exp[-lambda^2 (r-r0)^2 / 2]
             H_n(lambda (r - r0)),

which is the authoritative shape for node-count and orthogonality checks.

The pseudospin lower component is evaluated over complex arithmetic as
printed; for bound levels (gamma_tilde < 0) the imaginary prefactors
combine to a real function, and the residual imaginary part after global
phase alignment is reported as a diagnostic.

None of the closed forms vanish at r = 0 once eps > 0 (they are full-line
oscillator solutions used on the half line); the origin value relative to
the peak is reported as a defect rather than corrected.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import simpson

from .model import ModelParams, SymmetryKind, derived_constants
from .spectra import EnergyLevel, Status, solve_level


class ConstantsUndefined(Exception):
    """Shape constants are not defined at this energy (e.g. gamma <= 0)."""


class SingularAtOrigin(Exception):
    """The kappa/r term makes the lower component singular at r = 0."""


class RadialKind(Enum):
    UPPER_F = "UpperF"
    LOWER_G = "LowerG"
    NONREL_R = "NonRelR"
    PSEUDO_LOWER_G = "PseudoLowerG"


@dataclass(frozen=True)
class ShapeConstants:
    """Envelope and polynomial-argument constants at a solved level.

    Spin levels fill eps1, eps2, d0; pseudospin levels fill the complex
    eps1p, eps2p instead (gamma_tilde < 0 for bound states, so square roots
    land on the imaginary axis).
    """

    lambda_scale: float
    b: float
    eps1: float | None = None
    eps2: float | None = None
    eps1p: complex | None = None
    eps2p: complex | None = None
    d0: float | None = None


def _level_energy(params: ModelParams, n: int, energy: float | None) -> float:
    if energy is not None:
        return energy
    level: EnergyLevel = solve_level(params, n)
    if level.status is not Status.BOUND:
        raise ConstantsUndefined(
            f"no bound level at n={n} for these parameters ({level.status.value})"
        )
    return level.E


def shape_constants(params: ModelParams, energy: float) -> ShapeConstants:
    """Constants entering the closed forms, evaluated at a level energy."""
    lam = math.sqrt(params.M * params.omega0)
    b = params.q * params.eps / params.omega0
    if params.sym is SymmetryKind.SPIN:
        gamma = energy + params.M - params.C
        if gamma <= 0.0:
            raise ConstantsUndefined(f"gamma = {gamma} <= 0 at E = {energy}")
        v = math.sqrt(0.5 * params.M * params.omega0 ** 2 * gamma)
        return ShapeConstants(
            lambda_scale=lam,
            b=b,
            eps1=math.sqrt(gamma / (2.0 * params.M)),
            eps2=gamma / (2.0 * params.M * v),
            d0=1.0 / gamma,
        )
    gamma_t = complex(params.M - energy + params.C)
    v_t = cmath.sqrt(0.5 * params.M * params.omega0 ** 2 * gamma_t)
    if abs(v_t) == 0.0:
        raise ConstantsUndefined(f"gamma_tilde vanishes at E = {energy}")
    return ShapeConstants(
        lambda_scale=lam,
        b=b,
        eps1p=cmath.sqrt(gamma_t) / (2.0 * params.M),
        eps2p=gamma_t / (2.0 * params.M * v_t),
    )


def hermite(n: int, x):
    """Physicists' Hermite polynomial via H_{k+1} = 2x H_k - 2k H_{k-1}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    x = np.asarray(x)
    dtype = complex if np.iscomplexobj(x) else float
    h = np.ones_like(x, dtype=dtype)
    hm1 = np.zeros_like(x, dtype=dtype)
    for k in range(n):
        h, hm1 = 2.0 * x * h - 2.0 * k * hm1, h
    return h[()] if h.ndim == 0 else h


def assoc_laguerre(n: int, alpha: float, x):
    """Associated Laguerre polynomial via the three-term recurrence."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if alpha <= -1:
        raise ValueError(f"alpha must be > -1, got {alpha}")
    x = np.asarray(x)
    dtype = complex if np.iscomplexobj(x) else float
    lk = np.ones_like(x, dtype=dtype)
    if n == 0:
        return lk[()] if lk.ndim == 0 else lk
    lkp1 = 1.0 + alpha - x
    for k in range(1, n):
        lk, lkp1 = lkp1, ((2 * k + 1 + alpha - x) * lkp1 - (k + alpha) * lk) / (k + 1)
    return lkp1[()] if lkp1.ndim == 0 else lkp1


def upper_spinor_F(params: ModelParams, n: int, r, energy: float | None = None):
    """Unnormalized upper spinor component at the solved spin level."""
    if params.sym is not SymmetryKind.SPIN:
        raise ValueError("upper_spinor_F requires spin-symmetry parameters")
    E = _level_energy(params, n, energy)
    sc = shape_constants(params, E)
    r = np.asarray(r, dtype=float)
    lam2 = sc.lambda_scale ** 2
    xi = sc.eps2 * (lam2 * r - sc.b) ** 2
    out = np.exp(-sc.eps1 * (0.5 * lam2 * r * r - sc.b * r)) * assoc_laguerre(n, 0.0, xi)
    return float(out) if out.ndim == 0 else out


def nr_radial_R(params: ModelParams, n: int, r):
    """Nonrelativistic radial function: displaced Gaussian times Hermite."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    lam = math.sqrt(params.M * params.omega0)
    r0 = derived_constants(params).r0
    r = np.asarray(r, dtype=float)
    x = r - r0
    pref = (lam * lam / math.pi) ** 0.25 / math.sqrt(2.0 ** n * math.factorial(n))
    out = pref * np.exp(-0.5 * lam * lam * x * x) * hermite(n, lam * x)
    return float(out) if out.ndim == 0 else out


def lower_spinor_G(params: ModelParams, n: int, r, energy: float | None = None):
    """Lower spinor component from the derivative relation (authoritative).

    Central differences with step h = 1e-6 max(1, r); r must stay >= 1e-8
    because of the kappa/r term.
    """
    if params.sym is not SymmetryKind.SPIN:
        raise ValueError("lower_spinor_G requires spin-symmetry parameters")
    E = _level_energy(params, n, energy)
    sc = shape_constants(params, E)
    r = np.asarray(r, dtype=float)
    if np.any(r < 1e-8):
        raise SingularAtOrigin("lower component needs r >= 1e-8")
    h = 1e-6 * np.maximum(1.0, r)
    dF = (upper_spinor_F(params, n, r + h, E) - upper_spinor_F(params, n, r - h, E)) / (2.0 * h)
    kappa = SymmetryKind.SPIN.kappa
    out = sc.d0 * (dF + kappa / r * upper_spinor_F(params, n, r, E))
    return float(out) if out.ndim == 0 else out


def lower_spinor_G_closed_form(params: ModelParams, n: int, r,
                               energy: float | None = None):
    """Printed closed form of the lower component, reproduced verbatim.

    Carries the polynomial-derivative term as + L_n^(1) of the squared
    argument; compare against lower_spinor_G, do not substitute for it.
    """
    if params.sym is not SymmetryKind.SPIN:
        raise ValueError("lower_spinor_G_closed_form requires spin-symmetry parameters")
    E = _level_energy(params, n, energy)
    sc = shape_constants(params, E)
    r = np.asarray(r, dtype=float)
    if np.any(r < 1e-8):
        raise SingularAtOrigin("lower component needs r >= 1e-8")
    lam2 = sc.lambda_scale ** 2
    kappa = SymmetryKind.SPIN.kappa
    xi = sc.eps2 * (lam2 * r - sc.b) ** 2
    bracket = (sc.eps1 * (sc.b - lam2 * r) + kappa / r) * assoc_laguerre(n, 0.0, xi) \
        + 2.0 * lam2 * sc.eps2 * (lam2 * r - sc.b) * assoc_laguerre(n, 1.0, xi)
    out = sc.d0 * np.exp(-sc.eps1 * (0.5 * lam2 * r * r - sc.b * r)) * bracket
    return float(out) if out.ndim == 0 else out


def pseudo_lower_G(params: ModelParams, n: int, r, energy: float | None = None):
    """Pseudospin lower component, evaluated over complex arithmetic.

    For bound levels the result is real up to floating-point noise; use
    realness_defect to quantify the residual imaginary part.
    """
    if params.sym is not SymmetryKind.PSEUDOSPIN:
        raise ValueError("pseudo_lower_G requires pseudospin parameters")
    E = _level_energy(params, n, energy)
    sc = shape_constants(params, E)
    r = np.asarray(r, dtype=float)
    lam2 = sc.lambda_scale ** 2
    arg = -1j * sc.eps2p * (lam2 * r - sc.b) ** 2
    out = np.exp(1j * sc.eps1p * (-sc.b * r + 0.5 * lam2 * r * r)) * hermite(n, arg)
    return complex(out) if out.ndim == 0 else out


def mean_radius(rf: "RadialFunction") -> float:
    """Numeric <r> of the stored samples.

    Reported as a diagnostic only; no sign convention is asserted on the
    displacement (the closed forms place the density center at +r0).
    """
    w = np.abs(rf.values) ** 2
    return float(simpson(rf.r * w, x=rf.r) / simpson(w, x=rf.r))


def realness_defect(values) -> float:
    """Max |Im| after aligning the global phase, relative to the peak."""
    v = np.asarray(values, dtype=complex)
    peak = np.max(np.abs(v))
    if peak == 0.0:
        return 0.0
    ref = v[np.argmax(np.abs(v))]
    aligned = v * np.conj(ref / abs(ref))
    return float(np.max(np.abs(aligned.imag)) / peak)


def count_nodes(values, rel_floor: float = 1e-9) -> int:
    """Interior sign changes, ignoring samples below rel_floor of the peak."""
    v = np.asarray(values)
    if np.iscomplexobj(v):
        ref = v[np.argmax(np.abs(v))]
        v = (v * np.conj(ref / abs(ref))).real
    peak = np.max(np.abs(v))
    if peak == 0.0:
        return 0
    keep = v[np.abs(v) > rel_floor * peak]
    signs = np.sign(keep)
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


@dataclass(frozen=True)
class RadialFunction:
    """A sampled radial component with normalization and node metadata.

    norm is the L2 integral of the stored samples on [r[0], r[-1]] by
    composite Simpson quadrature (approximately 1 after normalization);
    origin_defect is |f(r[0])| / max|f|, the boundary-condition violation
    of the printed closed forms.
    """

    kind: RadialKind
    n: int
    r: np.ndarray
    values: np.ndarray
    norm: float
    nodes: int
    normalized: bool
    origin_defect: float

    @property
    def samples(self) -> np.ndarray:
        return np.column_stack((self.r, self.values))


def default_r_max(params: ModelParams) -> float:
    """Envelope-based sampling window: r0 + 20 / lambda."""
    lam = math.sqrt(params.M * params.omega0)
    return derived_constants(params).r0 + 20.0 / lam


_EVALUATORS = {
    RadialKind.UPPER_F: upper_spinor_F,
    RadialKind.LOWER_G: lower_spinor_G,
    RadialKind.NONREL_R: nr_radial_R,
    RadialKind.PSEUDO_LOWER_G: pseudo_lower_G,
}


def sample_radial(kind: RadialKind, params: ModelParams, n: int,
                  r_max: float | None = None, samples: int = 2001,
                  normalize: bool = True,
                  energy: float | None = None) -> RadialFunction:
    """Sample a radial component on [0, r_max] and optionally L2-normalize.

    The lower spin component is sampled from r = 1e-8 instead of 0 (its
    kappa/r term diverges there, so its norm depends on that cutoff).
    """
    if samples < 3:
        raise ValueError(f"samples must be >= 3, got {samples}")
    if r_max is None:
        r_max = default_r_max(params)
    r = np.linspace(0.0, r_max, samples)
    if kind is RadialKind.LOWER_G:
        r = r.copy()
        r[0] = 1e-8

    fn = _EVALUATORS[kind]
    if kind is RadialKind.NONREL_R:
        values = fn(params, n, r)
    else:
        values = fn(params, n, r, energy)
    values = np.asarray(values)

    raw_norm_sq = float(simpson(np.abs(values) ** 2, x=r))
    if normalize:
        if raw_norm_sq <= 0.0:
            raise ValueError("cannot normalize an identically zero function")
        values = values / math.sqrt(raw_norm_sq)
    norm = float(simpson(np.abs(values) ** 2, x=r))
    peak = float(np.max(np.abs(values)))
    return RadialFunction(
        kind=kind,
        n=n,
        r=r,
        values=values,
        norm=norm,
        nodes=count_nodes(values),
        normalized=normalize,
        origin_defect=float(abs(values[0]) / peak) if peak > 0.0 else 0.0,
    )


@dataclass(frozen=True)
class GDeviationReport:
    """Numeric-derivative vs printed closed form for the lower component.

    max_rel_deviation / mean_rel_deviation quantify their disagreement
    (expected to be O(1): the printed polynomial-derivative term does not
    match the actual derivative).  richardson_defect certifies the numeric
    path itself: it compares the h and h/2 central differences against
    their Richardson extrapolation.
    """

    r: np.ndarray
    numeric: np.ndarray
    closed_form: np.ndarray
    max_rel_deviation: float
    mean_rel_deviation: float
    richardson_defect: float


def g_deviation_report(params: ModelParams, n: int, r_lo: float = 0.1,
                       r_hi: float = 20.0, samples: int = 200,
                       energy: float | None = None) -> GDeviationReport:
    """Compare the two lower-component paths on a uniform grid."""
    E = _level_energy(params, n, energy)
    sc = shape_constants(params, E)
    r = np.linspace(r_lo, r_hi, samples)
    numeric = lower_spinor_G(params, n, r, E)
    closed = lower_spinor_G_closed_form(params, n, r, E)
    scale = np.maximum(np.maximum(np.abs(numeric), np.abs(closed)), 1e-300)
    rel = np.abs(numeric - closed) / scale

    # h-refinement consistency of the derivative path
    h = 1e-6 * np.maximum(1.0, r)
    kappa = SymmetryKind.SPIN.kappa

    def central(step):
        return (upper_spinor_F(params, n, r + step, E)
                - upper_spinor_F(params, n, r - step, E)) / (2.0 * step)

    d_h = central(h)
    d_h2 = central(h / 2.0)
    extrap = (4.0 * d_h2 - d_h) / 3.0
    f0 = upper_spinor_F(params, n, r, E)
    g_h2 = sc.d0 * (d_h2 + kappa / r * f0)
    g_ex = sc.d0 * (extrap + kappa / r * f0)
    rich = np.max(np.abs(g_h2 - g_ex)) / max(1.0, float(np.max(np.abs(g_ex))))

    return GDeviationReport(
        r=r,
        numeric=numeric,
        closed_form=closed,
        max_rel_deviation=float(np.max(rel)),
        mean_rel_deviation=float(np.mean(rel)),
        richardson_defect=float(rich),
    )
