"""Self-contained verification suite: every module invariant as a named check.

Each check computes a worst-case measured value and compares it against a
fixed tolerance; the report is one line per check and is byte-identical
across runs (no timings, no timestamps).  The "full" level adds the solver
convergence studies on top of the "fast" set.

The fault-injection hook deliberately mis-evaluates one integral so the
harness itself can be shown to catch a broken identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry, rayleigh, shell_spectrum, solver, special
from .geometry import ShellConfig
from .quadrature import gauss_legendre_rule, integrate

FAULTS = ("w2-sign",)

# Shared parameter grids.
NA_GRID = [(n, round(0.05 * j, 2)) for n in range(2, 7) for j in range(1, 20)]
SOLVER_RADII = (0.2, 0.5, 0.8)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} measured={self.measured:.17g} tolerance={self.tolerance:.17g}"


def _quad(f, lo, hi):
    return integrate(f, lo, hi).value


def _worst(name: str, tol: float, measured: float, larger_fails: bool = True) -> CheckResult:
    ok = measured <= tol if larger_fails else measured >= tol
    return CheckResult(name=name, passed=bool(ok), measured=float(measured), tolerance=float(tol))


# ----------------------------------------------------------------------
# special functions


def check_wallis_recursion() -> CheckResult:
    worst = 0.0
    for p in range(61):
        lhs = special.wallis(p + 2) * (p + 2)
        rhs = special.wallis(p) * (p + 1)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return _worst("wallis_recursion_consistency", 1e-13, worst)


def check_wallis_quadrature() -> CheckResult:
    worst = 0.0
    for p in range(31):
        q = _quad(lambda t, p=p: np.sin(t) ** p, 0.0, math.pi)
        worst = max(worst, abs(special.wallis(p) - q))
    return _worst("wallis_vs_quadrature", 1e-11, worst)


def check_wallis_table() -> CheckResult:
    tab = special.wallis_table(80)
    worst = abs(tab.values[0] - math.pi) + abs(tab.values[1] - 2.0)
    diffs = np.diff(tab.values)
    worst = max(worst, 0.0 if np.all(diffs < 0) and np.all(np.asarray(tab.values) > 0) else 1.0)
    return _worst("wallis_table_monotone_positive", 1e-15, worst)


def check_harmonic_dim_planar() -> CheckResult:
    worst = max(abs(special.harmonic_dim(2, k) - 2) for k in range(1, 51))
    return _worst("harmonic_dim_planar_pairs", 0.0, float(worst))


def check_catalan_closed_form() -> CheckResult:
    worst = 0.0
    for x in np.linspace(-0.24, 0.24, 20):
        closed = 2.0 * math.log(2.0 / (1.0 + math.sqrt(1.0 - 4.0 * x)))
        worst = max(worst, abs(special.catalan_series(float(x)) - closed))
    return _worst("catalan_series_closed_form", 1e-10, worst)


def check_wallis_even_series() -> CheckResult:
    worst = 0.0
    for x in np.linspace(-0.9, 0.9, 20):
        closed = math.pi / math.sqrt(1.0 - x * x)
        worst = max(worst, abs(special.wallis_even_series(float(x)) - closed))
    return _worst("wallis_even_series_closed_form", 1e-10, worst)


def check_log_series_closed_form() -> CheckResult:
    worst = 0.0
    for d in np.linspace(0.0, 0.95, 20):
        closed = 2.0 * math.pi * math.log(1.0 + d * d)
        worst = max(worst, abs(special.log_series_identity(float(d)) - closed))
    return _worst("log_series_closed_form", 1e-10, worst)


# ----------------------------------------------------------------------
# geometry


def _dt_grid():
    return np.linspace(0.0, 0.99, 100), np.linspace(0.0, math.pi, 100)


def check_law_of_cosines() -> CheckResult:
    ds, ts = _dt_grid()
    worst = 0.0
    for d in ds:
        R = geometry.radius(float(d), ts)
        res = np.abs(1.0 - d * d - R * R + 2.0 * d * R * np.cos(ts))
        worst = max(worst, float(res.max()))
    return _worst("law_of_cosines_residual", 1e-12, worst)


def check_arc_factor_identity() -> CheckResult:
    ds, ts = _dt_grid()
    worst = 0.0
    for d in ds:
        lhs = geometry.arc_factor(float(d), ts)
        R = geometry.radius(float(d), ts)
        Rp = geometry.radius_deriv(float(d), ts)
        worst = max(worst, float(np.abs(lhs - np.sqrt(R * R + Rp * Rp)).max()))
    return _worst("arc_factor_identity", 1e-12, worst)


def check_radius_deriv_fd() -> CheckResult:
    worst = 0.0
    h = 1e-6
    for d in (0.1, 0.3, 0.5, 0.8):
        for t in np.linspace(0.01, math.pi - 0.01, 25):
            fd = (geometry.radius(d, t + h) - geometry.radius(d, t - h)) / (2 * h)
            worst = max(worst, abs(geometry.radius_deriv(d, t) - fd))
    return _worst("radius_deriv_finite_difference", 1e-8, worst)


def check_phi_symmetry() -> CheckResult:
    ts = np.linspace(0.0, math.pi, 101)
    worst = 0.0
    for n in range(2, 9):
        worst = max(
            worst,
            float(np.abs(geometry.phi_weight(n, ts) - geometry.phi_weight(n, math.pi - ts)).max()),
        )
    return _worst("phi_weight_symmetry", 1e-14, worst)


def check_phi_integral_zero() -> CheckResult:
    worst = max(
        abs(_quad(lambda t, n=n: geometry.phi_weight(n, t), 0.0, math.pi))
        for n in range(2, 9)
    )
    return _worst("phi_weight_integral_zero", 1e-10, worst)


def check_psi_nonnegative() -> CheckResult:
    ts = np.linspace(0.0, math.pi, 501)
    worst = min(float(geometry.psi_weight(n, ts).min()) for n in range(2, 9))
    return _worst("psi_weight_nonnegative", 0.0, worst, larger_fails=False)


def check_radius_decreasing() -> CheckResult:
    ts = np.linspace(0.0, math.pi, 200)
    worst = -1.0
    for d in (0.1, 0.4, 0.7, 0.95):
        worst = max(worst, float(np.diff(geometry.radius(d, ts)).max()))
    return _worst("radius_strictly_decreasing", 0.0, worst)


# ----------------------------------------------------------------------
# quadrature


def check_monomial_exactness() -> CheckResult:
    rule = gauss_legendre_rule(16)
    worst = 0.0
    for j in range(32):
        exact = 0.0 if j % 2 else 2.0 / (j + 1)
        got = rule.apply(lambda x, j=j: x**j, -1.0, 1.0)
        worst = max(worst, abs(got - exact))
    return _worst("quadrature_monomial_exactness", 1e-13, worst)


def check_rule_invariants() -> CheckResult:
    worst = 0.0
    for order in (8, 16):
        rule = gauss_legendre_rule(order)
        worst = max(worst, abs(sum(rule.weights) - 2.0))
        nodes = np.asarray(rule.nodes)
        worst = max(worst, float(np.abs(nodes + nodes[::-1]).max()))
    return _worst("quadrature_rule_invariants", 1e-13, worst)


def check_interval_additivity() -> CheckResult:
    f = lambda t: np.exp(np.cos(3.0 * t))
    whole = _quad(f, 0.0, 2.0)
    split = _quad(f, 0.0, 0.7) + _quad(f, 0.7, 2.0)
    return _worst("quadrature_interval_additivity", 1e-11, abs(whole - split))


def check_quadrature_determinism() -> CheckResult:
    f = lambda t: np.log(1.0 + 0.81 + 1.8 * np.cos(t))
    a = integrate(f, 0.0, 2.0 * math.pi)
    b = integrate(f, 0.0, 2.0 * math.pi)
    same = a.value == b.value and a.error_estimate == b.error_estimate
    return _worst("quadrature_determinism", 0.0, 0.0 if same else 1.0)


# ----------------------------------------------------------------------
# concentric spectrum


def check_closed_form_vs_quadratic() -> CheckResult:
    worst = 0.0
    for n, a in NA_GRID:
        s1 = shell_spectrum.sigma1_closed_form(n, a)
        lower, _ = shell_spectrum.delta_pair(n, a, 1)
        worst = max(worst, abs(s1 - lower) / s1)
    return _worst("closed_form_vs_quadratic_root", 1e-12, worst)


def check_lower_branch_monotone() -> CheckResult:
    worst = -1.0
    for n, a in NA_GRID:
        prev = 0.0
        for k in range(1, 51):
            cur = shell_spectrum.delta_pair(n, a, k)[0]
            worst = max(worst, prev - cur)
            prev = cur
    return _worst("lower_branch_strictly_increasing", 0.0, worst)


def check_sigma1_below_delta0() -> CheckResult:
    worst = -1.0
    for n, a in NA_GRID:
        worst = max(worst, shell_spectrum.sigma1_closed_form(n, a) - shell_spectrum.delta0(n, a))
    return _worst("sigma1_below_delta0", 0.0, worst)


def check_discriminant_bound() -> CheckResult:
    worst = -1.0
    for n, a in NA_GRID:
        for k in range(1, 21):
            q = shell_spectrum.quadratic_coeffs(n, a, k)
            worst = max(worst, ((k + n - 2) - k * a) ** 2 - q.discriminant)
    return _worst("discriminant_dominates_square", 1e-9, worst)


def check_vieta() -> CheckResult:
    worst = 0.0
    for n, a in NA_GRID:
        for k in (1, 2, 5, 20):
            q = shell_spectrum.quadratic_coeffs(n, a, k)
            lo, hi = shell_spectrum.delta_pair(n, a, k)
            worst = max(worst, abs(lo + hi + q.B / q.A) / abs(q.B / q.A))
            worst = max(worst, abs(lo * hi - q.C / q.A) / abs(q.C / q.A))
    return _worst("vieta_identities", 1e-11, worst)


def _radial_deriv(n: int, a: float, k: int, branch: str, r: float) -> float:
    if branch == "zero":
        return 0.0
    if branch == "radial0":
        d0 = shell_spectrum.delta0(n, a)
        if n == 2:
            return d0 / r
        return d0 * (2 - n) * r ** (1 - n)
    c = shell_spectrum.radial_coefficient(n, a, k, branch)
    return k * r ** (k - 1) - (k + n - 2) * c * r ** (-(k + n - 1))


def _branch_value(n: int, a: float, k: int, branch: str) -> float:
    if branch == "zero":
        return 0.0
    if branch == "radial0":
        return shell_spectrum.delta0(n, a)
    lower, upper = shell_spectrum.delta_pair(n, a, k)
    return lower if branch == "lower" else upper


def check_eigenfunction_bc() -> CheckResult:
    worst = 0.0
    for n, a in [(2, 0.1), (2, 0.5), (3, 0.5), (4, 0.9), (6, 0.3)]:
        cases = [(0, "radial0"), (0, "zero")] + [
            (k, b) for k in range(1, 21) for b in ("lower", "upper")
        ]
        for k, branch in cases:
            delta = _branch_value(n, a, k, branch)
            for r, sign in ((1.0, 1.0), (a, -1.0)):
                val = shell_spectrum.eigenfunction_radial(n, a, k, branch, r)
                der = _radial_deriv(n, a, k, branch, r)
                res = abs(der - sign * delta * val) / (abs(der) + abs(delta * val) + 1.0)
                worst = max(worst, res)
    return _worst("eigenfunction_bc_residual", 1e-10, worst)


def check_expansion_slope() -> CheckResult:
    worst = 0.0
    for n, eps, rel_tol in [(3, 1e-2, 0.05), (3, 1e-3, 0.005), (4, 1e-2, 0.05), (4, 1e-3, 0.005)]:
        f0 = shell_spectrum.scale_invariant(n, 0.0)
        feps = shell_spectrum.scale_invariant(n, eps)
        slope = (feps - f0) / (f0 * eps ** (n - 1))
        target = 1.0 / (n - 1)
        worst = max(worst, abs(slope - target) / target / rel_tol)
    return _worst("expansion_slope_normalized", 1.0, worst)


def check_optimal_eps() -> CheckResult:
    worst = 0.0
    for n in (2, 3, 4):
        eps_star, value = shell_spectrum.optimal_eps(n)
        if not (0.0 < eps_star < 1.0):
            return _worst("optimal_eps_interior", 1e-4, math.inf)
        grid = np.linspace(1e-6, 1.0 - 1e-6, 10_000)
        vals = [shell_spectrum.scale_invariant(n, float(e)) for e in grid]
        eps_grid = float(grid[int(np.argmax(vals))])
        if not (value > shell_spectrum.scale_invariant(n, 0.0) and value > vals[-1]):
            return _worst("optimal_eps_interior", 1e-4, math.inf)
        worst = max(worst, abs(eps_star - eps_grid))
    return _worst("optimal_eps_interior", 1e-4, worst)


# ----------------------------------------------------------------------
# variational integrals and bounds


RAYLEIGH_GRID = [(n, a) for n in (2, 3, 4) for a in (0.3, 0.5, 0.7)]


def _d_grid(a: float, count: int = 10):
    return np.linspace(0.0, 0.95 * (1.0 - a), count)


def _w2_faulty(cfg: ShellConfig) -> float:
    # Deliberately broken angular weight (second term sign flipped).
    n, a, d = cfg.n, cfg.a, cfg.d
    return _quad(
        lambda t: (-n * np.sin(t) ** n - (n - 1) * np.sin(t) ** (n - 2))
        * np.log(geometry.radius(d, t) / a),
        0.0,
        math.pi,
    )


def check_w2_vanishes(inject_fault: str | None = None) -> CheckResult:
    w2 = _w2_faulty if inject_fault == "w2-sign" else rayleigh.w2
    worst = 0.0
    for n, a in RAYLEIGH_GRID:
        for d in _d_grid(a):
            worst = max(worst, abs(w2(ShellConfig(n, a, float(d)))))
    return _worst("w2_vanishes", 1e-10, worst)


def check_v2_vanishes() -> CheckResult:
    worst = 0.0
    for n, a in RAYLEIGH_GRID:
        for d in _d_grid(a):
            worst = max(worst, abs(rayleigh.v2(ShellConfig(n, a, float(d)))))
    return _worst("v2_vanishes", 1e-10, worst)


def check_w1_invariant() -> CheckResult:
    worst = 0.0
    for n, a in RAYLEIGH_GRID:
        base = rayleigh.w1(ShellConfig(n, a, 0.0))
        for d in _d_grid(a):
            worst = max(worst, abs(rayleigh.w1(ShellConfig(n, a, float(d))) - base))
    return _worst("w1_translation_invariant", 1e-10, worst)


def check_v1_invariant() -> CheckResult:
    worst = 0.0
    for n, a in RAYLEIGH_GRID:
        base = rayleigh.v1(ShellConfig(n, a, 0.0))
        for d in _d_grid(a):
            worst = max(worst, abs(rayleigh.v1(ShellConfig(n, a, float(d))) - base))
    return _worst("v1_translation_invariant", 1e-10, worst)


def _monotone_increments(fn, n: int, a: float):
    ds = _d_grid(a)
    vals = [fn(ShellConfig(n, a, float(d))) for d in ds]
    return ds, np.diff(vals)


def check_w3_monotone() -> CheckResult:
    worst = math.inf
    for n, a in RAYLEIGH_GRID:
        ds, inc = _monotone_increments(rayleigh.w3, n, a)
        if inc.min() <= 0:
            return _worst("w3_strictly_increasing", 1e-8, -1.0, larger_fails=False)
        late = inc[ds[1:] > 0.1 * (1.0 - a)]
        worst = min(worst, float(late.min()))
    return _worst("w3_strictly_increasing", 1e-8, worst, larger_fails=False)


def check_v3_monotone() -> CheckResult:
    worst = math.inf
    for n, a in RAYLEIGH_GRID:
        ds, inc = _monotone_increments(rayleigh.v3, n, a)
        if inc.min() <= 0:
            return _worst("v3_strictly_increasing", 1e-8, -1.0, larger_fails=False)
        late = inc[ds[1:] > 0.1 * (1.0 - a)]
        worst = min(worst, float(late.min()))
    return _worst("v3_strictly_increasing", 1e-8, worst, larger_fails=False)


def check_comparator_sandwich() -> CheckResult:
    worst = 0.0
    for n, a in RAYLEIGH_GRID:
        g_prev = h_prev = -math.inf
        for d in _d_grid(a, 6):
            cfg = ShellConfig(n, a, float(d))
            g, h = rayleigh.g_comparator(cfg), rayleigh.h_comparator(cfg)
            worst = max(worst, g - rayleigh.w3(cfg), h - rayleigh.v3(cfg))
            worst = max(worst, g_prev - g, h_prev - h)
            g_prev, h_prev = g, h
        cfg0 = ShellConfig(n, a, 0.0)
        worst = max(worst, abs(rayleigh.g_comparator(cfg0) - rayleigh.w3(cfg0)))
        worst = max(worst, abs(rayleigh.h_comparator(cfg0) - rayleigh.v3(cfg0)))
    return _worst("comparator_sandwich", 1e-9, worst)


def energy_direct_2d(cfg: ShellConfig) -> float:
    """Gradient energy of the coordinate test function by iterated quadrature.

    Independent of the 1D assembly: the squared gradient is integrated in r
    inside an adaptive polar quadrature, with every angular constant itself
    computed by quadrature.
    """
    n, a, d = cfg.n, cfg.a, cfg.d
    mu = shell_spectrum.mu_sigma(n, a)

    if n == 2:
        ca, cb = 2.0, 0.0
    elif n == 3:
        ca = _quad(lambda t: np.cos(t) ** 2, 0.0, 2.0 * math.pi)
        cb = _quad(lambda t: np.sin(t) ** 2, 0.0, 2.0 * math.pi)
    else:
        rest = _quad(lambda t: np.ones_like(t), 0.0, 2.0 * math.pi)
        for j in range(3, n - 1):
            rest *= _quad(lambda t, p=n - 1 - j: np.sin(t) ** p, 0.0, math.pi)
        ca = rest * _quad(lambda t: np.cos(t) ** 2 * np.sin(t) ** (n - 3), 0.0, math.pi)
        cb = rest * _quad(lambda t: np.sin(t) ** (n - 1), 0.0, math.pi)

    def outer(thetas):
        out = np.empty_like(thetas)
        for i, th in enumerate(thetas):
            R = float(geometry.radius(d, th))
            s, c = math.sin(th), math.cos(th)

            def radial(r):
                A = 1.0 - (n - 1) * mu / r**n
                B = 1.0 + mu / r**n
                return (
                    r ** (n - 1)
                    * s ** (n - 2)
                    * (ca * (s * s * A * A + c * c * B * B) + cb * B * B)
                )

            out[i] = integrate(radial, a, R, abs_tol=1e-13, rel_tol=1e-13).value
        return out

    return integrate(outer, 0.0, math.pi, abs_tol=1e-12, rel_tol=1e-12).value


ENERGY_TRIPLES = [
    (n, a, d) for n in (2, 3) for a in (0.3, 0.5) for d in (0.0, 0.2, None)
]


def check_energy_decomposition() -> CheckResult:
    worst = 0.0
    for n, a, d in ENERGY_TRIPLES:
        dd = 0.4 * (1.0 - a) if d is None else d
        cfg = ShellConfig(n, a, dd)
        assembled = rayleigh.steklov_bound(cfg).energy
        direct = energy_direct_2d(cfg)
        worst = max(worst, abs(assembled - direct))
    return _worst("energy_decomposition_2d", 1e-8, worst)


BOUND_ANCHOR_PAIRS = [(n, a) for n in (2, 3, 4, 5, 6) for a in (0.25, 0.5, 0.75)]


def check_bound_anchor() -> CheckResult:
    worst = 0.0
    for n, a in BOUND_ANCHOR_PAIRS:
        bound = rayleigh.steklov_bound(ShellConfig(n, a, 0.0)).bound
        worst = max(worst, abs(bound - shell_spectrum.sigma1_closed_form(n, a)))
    return _worst("bound_anchor_concentric", 1e-9, worst)


def check_bound_monotone() -> CheckResult:
    worst = -1.0
    for n, a in [(2, 0.5), (3, 0.3), (4, 0.7)]:
        vals = [
            rayleigh.steklov_bound(ShellConfig(n, a, float(d))).bound
            for d in np.linspace(0.0, 0.95 * (1.0 - a), 21)
        ]
        worst = max(worst, float(np.diff(vals).max()))
    return _worst("bound_strictly_decreasing", 0.0, worst)


def check_ds_anchor() -> CheckResult:
    worst = 0.0
    for n, a in BOUND_ANCHOR_PAIRS:
        got = rayleigh.ds_bound(ShellConfig(n, a, 0.0))
        exact = 1.0 / math.log(1.0 / a) if n == 2 else (n - 2) / (a ** (2 - n) - 1.0)
        worst = max(worst, abs(got - exact))
    return _worst("ds_bound_anchor_concentric", 1e-10, worst)


def check_ds_monotone() -> CheckResult:
    worst = -1.0
    for n, a in [(2, 0.5), (3, 0.5), (4, 0.3), (5, 0.5)]:
        vals = [
            rayleigh.ds_bound(ShellConfig(n, a, float(d)))
            for d in np.linspace(0.0, 0.95 * (1.0 - a), 21)
        ]
        worst = max(worst, float(np.diff(vals).max()))
    return _worst("ds_bound_strictly_decreasing", 0.0, worst)


def check_orthogonality() -> CheckResult:
    worst = 0.0
    cases = [(2, 0.5, 0.3, 1), (3, 0.4, 0.25, 1), (3, 0.4, 0.25, 2), (4, 0.3, 0.3, 3)]
    for n, a, d, i in cases:
        worst = max(worst, abs(rayleigh.test_function_orthogonality(ShellConfig(n, a, d), i)))
    return _worst("test_function_orthogonality", 1e-10, worst)


def check_offset_axis_not_orthogonal() -> CheckResult:
    val = abs(rayleigh.test_function_orthogonality(ShellConfig(3, 0.4, 0.4), 3))
    return _worst("offset_axis_integral_nonzero", 1e-6, val, larger_fails=False)


def check_planar_log_integral() -> CheckResult:
    worst = 0.0
    for d in np.linspace(0.1, 0.9, 9):
        val = _quad(lambda t, d=d: np.log1p(d * d + 2.0 * d * np.cos(t)), 0.0, 2.0 * math.pi)
        worst = max(worst, abs(val))
    return _worst("planar_log_integral_zero", 1e-10, worst)


# ----------------------------------------------------------------------
# planar solver


def check_solver_concentric() -> CheckResult:
    worst = 0.0
    for a in SOLVER_RADII:
        res = solver.solve_steklov(ShellConfig(2, a, 0.0), N=24, m=512)
        worst = max(worst, abs(res.first_nonzero() - shell_spectrum.sigma1_closed_form(2, a)))
    return _worst("solver_concentric_oracle", 1e-8, worst)


def check_solver_spectrum_match() -> CheckResult:
    worst = 0.0
    for a in SOLVER_RADII:
        res = solver.solve_steklov(ShellConfig(2, a, 0.0), N=24, m=512)
        d0 = shell_spectrum.delta0(2, a)
        exact = [e for e in shell_spectrum.spectrum(2, a, 24) if e.value < d0 - 1e-9]
        got = [v for v in res.eigenvalues if v < d0 - 1e-9]
        expanded: list[float] = []
        for e in exact:
            expanded.extend([e.value] * e.multiplicity)
        expanded.sort()
        if len(got) != len(expanded):
            return _worst("solver_spectrum_below_delta0", 1e-7, math.inf)
        worst = max(worst, float(np.abs(np.asarray(got) - np.asarray(expanded)).max()))
    return _worst("solver_spectrum_below_delta0", 1e-7, worst)


def check_solver_multiplicity() -> CheckResult:
    worst = 0.0
    for a in SOLVER_RADII:
        res = solver.solve_steklov(ShellConfig(2, a, 0.0), N=24, m=512)
        vals = res.eigenvalues
        first = res.first_nonzero()
        close = [v for v in vals if abs(v - first) <= 1e-8 * max(1.0, abs(first))]
        worst = max(worst, abs(len(close) - 2))
    return _worst("solver_first_mode_double", 0.0, worst)


def check_solver_zero_mode() -> CheckResult:
    worst = 0.0
    for a in SOLVER_RADII:
        res = solver.solve_steklov(ShellConfig(2, a, 0.0), N=24, m=512)
        worst = max(worst, abs(float(res.eigenvalues[0])))
    return _worst("solver_zero_mode", 1e-9, worst)


def check_symmetry_defect() -> CheckResult:
    K, _ = solver.assemble_steklov(ShellConfig(2, 0.5, 0.3), N=20, m=400, symmetrize=False)
    return _worst("assembly_symmetry_defect", 1e-9, float(np.abs(K - K.T).max()))


def _solver_grid(a: float, count: int = 20):
    return np.linspace(0.0, 0.95 * (1.0 - a), count)


def check_solver_sigma_monotone() -> CheckResult:
    worst = -1.0
    for a in SOLVER_RADII:
        vals = []
        for d in _solver_grid(a):
            res = solver.solve_with_order_fallback(ShellConfig(2, a, float(d)))
            vals.append(res.first_nonzero())
        worst = max(worst, float(np.diff(vals).max()))
    return _worst("solver_sigma_strictly_decreasing", 0.0, worst)


def check_solver_bound_dominates() -> CheckResult:
    worst = -math.inf
    for a in SOLVER_RADII:
        for d in _solver_grid(a):
            cfg = ShellConfig(2, a, float(d))
            res = solver.solve_with_order_fallback(cfg)
            worst = max(worst, res.first_nonzero() - rayleigh.steklov_bound(cfg).bound)
    return _worst("solver_below_rayleigh_bound", 1e-8, worst)


def check_solver_tau_concentric() -> CheckResult:
    worst = 0.0
    for a in SOLVER_RADII:
        res = solver.solve_dirichlet_steklov(ShellConfig(2, a, 0.0), N=24, m=512)
        worst = max(worst, abs(float(res.eigenvalues[0]) - 1.0 / math.log(1.0 / a)))
    return _worst("solver_tau_concentric", 1e-8, worst)


def check_solver_tau_monotone() -> CheckResult:
    worst = -1.0
    for a in SOLVER_RADII:
        vals = []
        for d in _solver_grid(a):
            res = solver.solve_with_order_fallback(
                ShellConfig(2, a, float(d)), problem="dirichlet-steklov"
            )
            vals.append(float(res.eigenvalues[0]))
        worst = max(worst, float(np.diff(vals).max()))
    return _worst("solver_tau_strictly_decreasing", 0.0, worst)


def check_tau_below_ds_bound() -> CheckResult:
    worst = -math.inf
    for a in SOLVER_RADII:
        for d in _solver_grid(a, 10):
            cfg = ShellConfig(2, a, float(d))
            res = solver.solve_with_order_fallback(cfg, problem="dirichlet-steklov")
            worst = max(worst, float(res.eigenvalues[0]) - rayleigh.ds_bound(cfg))
    return _worst("tau_below_ds_bound", 1e-8, worst)


def check_solver_residual() -> CheckResult:
    res = solver.solve_steklov(ShellConfig(2, 0.5, 0.3), N=24, m=512)
    return _worst("solver_residual_moderate_offset", 1e-6, res.residual)


# full level only ------------------------------------------------------


def check_solver_convergence() -> CheckResult:
    worst = 0.0
    for d in (0.1, 0.2):
        cfg = ShellConfig(2, 0.5, d)
        s8 = solver.solve_steklov(cfg, N=8, m=128).first_nonzero()
        s16 = solver.solve_steklov(cfg, N=16, m=256).first_nonzero()
        s32 = solver.solve_steklov(cfg, N=32, m=512).first_nonzero()
        e8, e16 = abs(s8 - s16), abs(s16 - s32)
        if e8 < 1e-12:
            continue  # already converged to rounding at the coarse order
        worst = max(worst, e16 * 10.0 / e8)
    return _worst("solver_spectral_convergence", 1.0, worst)


def check_solver_points_invariance() -> CheckResult:
    worst = 0.0
    for d in (0.0, 0.2):
        cfg = ShellConfig(2, 0.5, d)
        s1 = solver.solve_steklov(cfg, N=16, m=256).first_nonzero()
        s2 = solver.solve_steklov(cfg, N=16, m=512).first_nonzero()
        worst = max(worst, abs(s1 - s2))
    return _worst("solver_points_invariance", 1e-8, worst)


def check_residual_improves_with_order() -> CheckResult:
    cfg = ShellConfig(2, 0.5, 0.3)
    r8 = solver.solve_steklov(cfg, N=8, m=128).residual
    r24 = solver.solve_steklov(cfg, N=24, m=512).residual
    return _worst("solver_residual_improves", 0.0, r24 - r8)


# ----------------------------------------------------------------------

FAST_CHECKS = [
    check_wallis_recursion,
    check_wallis_quadrature,
    check_wallis_table,
    check_harmonic_dim_planar,
    check_catalan_closed_form,
    check_wallis_even_series,
    check_log_series_closed_form,
    check_law_of_cosines,
    check_arc_factor_identity,
    check_radius_deriv_fd,
    check_phi_symmetry,
    check_phi_integral_zero,
    check_psi_nonnegative,
    check_radius_decreasing,
    check_monomial_exactness,
    check_rule_invariants,
    check_interval_additivity,
    check_quadrature_determinism,
    check_closed_form_vs_quadratic,
    check_lower_branch_monotone,
    check_sigma1_below_delta0,
    check_discriminant_bound,
    check_vieta,
    check_eigenfunction_bc,
    check_expansion_slope,
    check_optimal_eps,
    check_w2_vanishes,
    check_v2_vanishes,
    check_w1_invariant,
    check_v1_invariant,
    check_w3_monotone,
    check_v3_monotone,
    check_comparator_sandwich,
    check_energy_decomposition,
    check_bound_anchor,
    check_bound_monotone,
    check_ds_anchor,
    check_ds_monotone,
    check_orthogonality,
    check_offset_axis_not_orthogonal,
    check_planar_log_integral,
    check_solver_concentric,
    check_solver_spectrum_match,
    check_solver_multiplicity,
    check_solver_zero_mode,
    check_symmetry_defect,
    check_solver_sigma_monotone,
    check_solver_bound_dominates,
    check_solver_tau_concentric,
    check_solver_tau_monotone,
    check_tau_below_ds_bound,
    check_solver_residual,
]

FULL_CHECKS = FAST_CHECKS + [
    check_solver_convergence,
    check_solver_points_invariance,
    check_residual_improves_with_order,
]


def run_checks(
    level: str = "fast",
    inject_fault: str | None = None,
    name_filter: str | None = None,
) -> list[CheckResult]:
    """Run the named invariant suite; returns one result per check.

    name_filter keeps only checks whose name contains the given substring
    (development aid; the default runs everything at the chosen level).
    """
    if level not in ("fast", "full"):
        raise ValueError("level must be 'fast' or 'full'")
    if inject_fault is not None and inject_fault not in FAULTS:
        raise ValueError(f"unknown fault {inject_fault!r}; available: {FAULTS}")
    checks = FAST_CHECKS if level == "fast" else FULL_CHECKS
    if name_filter is not None:
        checks = [c for c in checks if name_filter in c.__name__]
    results = []
    for check in checks:
        if check is check_w2_vanishes:
            results.append(check(inject_fault))
        else:
            results.append(check())
    return results


def format_report(results: list[CheckResult]) -> str:
    lines = [r.line() for r in results]
    n_fail = sum(1 for r in results if not r.passed)
    lines.append(f"checks={len(results)} failures={n_fail}")
    return "\n".join(lines) + "\n"
