"""Variational integrals and certified Rayleigh upper bounds for eccentric shells.

The fixed test function is the first concentric eigenfunction
f(x) = x_i (1 + mu/|x|^n) with i the last in-plane axis, which remains
admissible for every offset d by antipodal symmetry.  Its energy over the
eccentric shell decomposes into three 1D integrals (w1, w2, w3) and its outer
boundary mass into three more (v1, v2, v3); translation invariance kills the
d-dependence of w1/v1, symmetry kills w2/v2, and the monotone growth of
w3/v3 drives the bound strictly down as the hole moves off center.

The analogous machinery for the mixed problem (zero trace on the inner
sphere, spectral condition outside) uses the radial profile log(r/a) in the
plane and a^(2-n) - r^(2-n) otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import ShellConfig, arc_factor, phi_weight, psi_weight, radius
from .quadrature import integrate
from .special import wallis
from .shell_spectrum import mu_sigma

QUAD_ABS_TOL = 1e-12
QUAD_REL_TOL = 1e-12

_quad_tols = {"abs": QUAD_ABS_TOL, "rel": QUAD_REL_TOL}


def set_quad_tolerance(abs_tol: float, rel_tol: float) -> None:
    """Override the per-integral quadrature tolerances (CLI --tol hook).

    Set once before computing; the module's functions stay pure with respect
    to any single configuration.
    """
    if abs_tol <= 0.0 or rel_tol <= 0.0:
        raise ValueError("tolerances must be positive")
    _quad_tols["abs"] = abs_tol
    _quad_tols["rel"] = rel_tol


@dataclass(frozen=True)
class RayleighBreakdown:
    """Every intermediate integral behind one Steklov upper bound.

    energy and boundary_mass are the true integrals (angular constants
    included); bound = energy / boundary_mass.  inner_mass is the
    d-independent contribution of the inner sphere to boundary_mass.
    """

    cfg: ShellConfig
    mu: float
    W1: float
    W2: float
    W3: float
    V1: float
    V2: float
    V3: float
    In: float
    inner_mass: float
    energy: float
    boundary_mass: float
    bound: float


def _quad(f, lo: float, hi: float) -> float:
    return integrate(f, lo, hi, abs_tol=_quad_tols["abs"], rel_tol=_quad_tols["rel"]).value


def steklov_angular_constant(n: int) -> float:
    """Shared angular factor (2/(n-1)) * I_0 * ... * I_{n-3} of the assemblies."""
    out = 2.0 / (n - 1)
    for k in range(n - 2):
        out *= wallis(k)
    return out


def ds_angular_constant(n: int) -> float:
    """Angular factor 2 * I_0 * ... * I_{n-3} for the radial test function."""
    out = 2.0
    for k in range(n - 2):
        out *= wallis(k)
    return out


def w1(cfg: ShellConfig) -> float:
    """Integral of sin^(n-2) * (R^n - a^n); translation-invariant in d."""
    n, a, d = cfg.n, cfg.a, cfg.d
    return _quad(lambda t: np.sin(t) ** (n - 2) * (radius(d, t) ** n - a**n), 0.0, math.pi)


def w2(cfg: ShellConfig) -> float:
    """Integral of phi_weight * log(R/a); vanishes identically."""
    n, a, d = cfg.n, cfg.a, cfg.d
    return _quad(lambda t: phi_weight(n, t) * np.log(radius(d, t) / a), 0.0, math.pi)


def w3(cfg: ShellConfig) -> float:
    """Integral of psi_weight * (R^-n - a^-n); nondecreasing in d."""
    n, a, d = cfg.n, cfg.a, cfg.d
    return _quad(
        lambda t: psi_weight(n, t) * (radius(d, t) ** (-n) - a ** (-n)), 0.0, math.pi
    )


def _v1_m(m: int, d: float) -> float:
    return _quad(lambda t: np.sin(t) ** m * radius(d, t) ** m * arc_factor(d, t), 0.0, math.pi)


def _v2_m(m: int, d: float) -> float:
    return _quad(
        lambda t: np.sin(t) ** m * d * np.cos(t) / np.sqrt(1.0 - d * d * np.sin(t) ** 2),
        0.0,
        math.pi,
    )


def _v3_m(m: int, d: float) -> float:
    return _quad(
        lambda t: np.sin(t) ** m
        / (radius(d, t) ** (m - 1) * np.sqrt(1.0 - d * d * np.sin(t) ** 2)),
        0.0,
        math.pi,
    )


def v1(cfg: ShellConfig) -> float:
    """Integral of sin^n * R^n * arc factor; translation-invariant in d."""
    return _v1_m(cfg.n, cfg.d)


def v2(cfg: ShellConfig) -> float:
    """Integral of sin^n * d cos / sqrt(1 - d^2 sin^2); vanishes identically."""
    return _v2_m(cfg.n, cfg.d)


def v3(cfg: ShellConfig) -> float:
    """Integral of sin^n / (R^(n-1) sqrt(1 - d^2 sin^2)); nondecreasing in d."""
    return _v3_m(cfg.n, cfg.d)


def g_comparator(cfg: ShellConfig) -> float:
    """Monotone minorant of w3: psi_weight against (1 + d cos)^-n - a^-n.

    Coincides with w3 at d = 0 and increases strictly with d.
    """
    n, a, d = cfg.n, cfg.a, cfg.d
    return _quad(
        lambda t: psi_weight(n, t) * ((1.0 + d * np.cos(t)) ** (-n) - a ** (-n)),
        0.0,
        math.pi,
    )


def h_comparator(cfg: ShellConfig) -> float:
    """Monotone minorant of v3: sin^n against (1 + d cos)^-(n-1).

    Coincides with v3 at d = 0 and increases strictly with d.
    """
    n, d = cfg.n, cfg.d
    return _quad(
        lambda t: np.sin(t) ** n * (1.0 + d * np.cos(t)) ** (-(n - 1)), 0.0, math.pi
    )


def inner_boundary_mass(cfg: ShellConfig) -> float:
    """Mass of the test function on the inner sphere: exact and d-independent.

    (a + mu a^(1-n))^2 * a^(n-1) * I_n times the shared angular constant.
    """
    n, a = cfg.n, cfg.a
    mu = mu_sigma(n, a)
    return (
        (a + mu * a ** (1 - n)) ** 2
        * a ** (n - 1)
        * wallis(n)
        * steklov_angular_constant(n)
    )


def steklov_bound(cfg: ShellConfig) -> RayleighBreakdown:
    """Certified upper bound on the first nonzero Steklov eigenvalue.

    bound = energy / boundary_mass for the fixed concentric eigenfunction;
    equals the concentric eigenvalue at d = 0 and decreases strictly in d.
    """
    n, a = cfg.n, cfg.a
    mu = mu_sigma(n, a)
    const = steklov_angular_constant(n)
    In = wallis(n)

    W1, W2, W3 = w1(cfg), w2(cfg), w3(cfg)
    V1, V2, V3 = v1(cfg), v2(cfg), v3(cfg)

    energy = const * ((n - 1) / n * W1 + 2.0 * mu * W2 - mu * mu / n * W3)
    inner = inner_boundary_mass(cfg)
    boundary_mass = const * (V1 + 2.0 * mu * (In + V2) + mu * mu * V3) + inner
    return RayleighBreakdown(
        cfg=cfg,
        mu=mu,
        W1=W1,
        W2=W2,
        W3=W3,
        V1=V1,
        V2=V2,
        V3=V3,
        In=In,
        inner_mass=inner,
        energy=energy,
        boundary_mass=boundary_mass,
        bound=energy / boundary_mass,
    )


def ds_energy(cfg: ShellConfig) -> float:
    """Energy of the radial mixed-problem test function over the eccentric shell.

    The gradient is radial, so the r-integral is analytic and only the polar
    quadrature remains.  Maximal at d = 0.
    """
    n, a, d = cfg.n, cfg.a, cfg.d
    if n == 2:
        return 2.0 * _quad(lambda t: np.log(radius(d, t) / a), 0.0, math.pi)
    const = (n - 2) * ds_angular_constant(n)
    return const * _quad(
        lambda t: np.sin(t) ** (n - 2) * (a ** (2 - n) - radius(d, t) ** (2 - n)),
        0.0,
        math.pi,
    )


def ds_boundary_mass(cfg: ShellConfig) -> float:
    """Mass of the radial test function on the shifted outer sphere.

    Minimal at d = 0.  In the plane the outer circle is parameterized by its
    own angle t, where |point|^2 = 1 + d^2 + 2 d cos t and the cross term
    integrates to zero; for n >= 3 the polar-graph assembly applies with the
    v-integrals taken at superscript n - 2.
    """
    n, a, d = cfg.n, cfg.a, cfg.d
    if n == 2:
        log_a = math.log(a)
        return 2.0 * _quad(
            lambda t: (0.5 * np.log1p(d * d + 2.0 * d * np.cos(t)) - log_a) ** 2,
            0.0,
            math.pi,
        )
    const = ds_angular_constant(n)
    m = n - 2
    return const * (
        a ** (4 - 2 * n) * _v1_m(m, d)
        - 2.0 * a ** (2 - n) * (wallis(m) + _v2_m(m, d))
        + _v3_m(m, d)
    )


def ds_bound(cfg: ShellConfig) -> float:
    """Upper bound on the first mixed (inner Dirichlet) eigenvalue.

    Equals 1/log(1/a) (n = 2) or (n-2)/(a^(2-n) - 1) (n >= 3) at d = 0 and
    decreases strictly in d.
    """
    return ds_energy(cfg) / ds_boundary_mass(cfg)


def _axis_factors(n: int, i: int) -> list:
    """Angular factors s_j(theta_j) of the coordinate x_i, for j = 1..n-1.

    x_i = r * prod_j s_j(theta_j): all sines for i = 1, otherwise sines up to
    j = n - i followed by one cosine.
    """
    if i == 1:
        return [np.sin] * (n - 1)
    factors: list = [np.sin] * (n - i)
    factors.append(np.cos)
    factors.extend([lambda t: np.ones_like(t)] * (i - 2))
    return factors


def test_function_orthogonality(cfg: ShellConfig, i: int) -> float:
    """Boundary integral of the coordinate eigenfunction x_i (1 + mu/|x|^n).

    Zero (within quadrature tolerance) for every in-plane axis i <= n - 1,
    which is what makes those eigenfunctions admissible test functions on the
    eccentric shell.  i = n is accepted as a diagnostic: the integral is
    generally nonzero for d > 0, documenting why the offset axis is excluded.
    Every angular factor is evaluated by quadrature; no symmetry shortcuts.
    """
    n, a, d = cfg.n, cfg.a, cfg.d
    if not 1 <= i <= n:
        raise ValueError("axis index must satisfy 1 <= i <= n")
    mu = mu_sigma(n, a)
    factors = _axis_factors(n, i)
    s1 = factors[0]

    def outer_polar(t):
        R = radius(d, t)
        return (
            s1(t)
            * (R + mu * R ** (1 - n))
            * R ** (n - 2)
            * arc_factor(d, t)
            * np.sin(t) ** (n - 2)
        )

    def inner_polar(t):
        return s1(t) * np.sin(t) ** (n - 2)

    if n == 2:
        # Full-circle quadrature; the polar radius folds across theta = pi.
        def full(f):
            def g(t):
                tf = np.where(t > math.pi, 2.0 * math.pi - t, t)
                return f(tf) * np.where(t > math.pi, _axis_sign(i), 1.0)

            return _quad(g, 0.0, math.pi) + _quad(g, math.pi, 2.0 * math.pi)

        def _axis_sign(axis: int) -> float:
            # x_1 = r sin(theta) flips sign across the fold; x_2 = r cos does not.
            return -1.0 if axis == 1 else 1.0

        outer = full(outer_polar)
        inner = full(inner_polar) * (a + mu / a) * a
        return outer + inner

    rest = 1.0
    for j in range(2, n):
        sj = factors[j - 1]
        power = n - 1 - j
        if j <= n - 2:
            rest *= _quad(lambda t, sj=sj, p=power: sj(t) * np.sin(t) ** p, 0.0, math.pi)
        else:
            rest *= _quad(lambda t, sj=sj: sj(t), 0.0, 2.0 * math.pi)
    outer = _quad(outer_polar, 0.0, math.pi) * rest
    inner = _quad(inner_polar, 0.0, math.pi) * (a + mu * a ** (1 - n)) * a ** (n - 1) * rest
    return outer + inner
