"""Planar eigensolver for eccentric annuli via a harmonic Laurent basis.

Global trial functions {1, log r} and {r^k, r^-k} x {cos k0, sin k0},
centered at the inner circle's center, are all exactly harmonic on the
annulus, so the energy form reduces to boundary integrals by Green's
identity and only boundary quadrature is needed.  Both circles are sampled
with the periodic trapezoid rule, which is spectrally accurate here.

Fields are rescaled so their sup over the whole boundary is 1; without that
the r^(+-k) dynamic range between the two circles destroys the mass matrix
long before the basis stops improving.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import IllConditionedError, NonConvergenceError
from .geometry import ShellConfig

GRAM_CONDITION_CAP = 1e14
ZERO_MODE_TOL = 1e-6


@dataclass(frozen=True)
class TrefftzBasis:
    """Harmonic trial fields on the annulus, polar about the inner center.

    kind "steklov": 1, log r, and r^(+-k) (cos, sin) for k = 1..max_order,
    4*max_order + 2 fields.  kind "dirichlet": the inner-trace-free
    combinations log(r/a) and r^k - a^(2k) r^-k (cos, sin), 2*max_order + 1
    fields.  scales holds the per-field sup normalization.
    """

    max_order: int
    a: float
    d: float
    kind: str
    scales: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.kind not in ("steklov", "dirichlet"):
            raise ValueError("basis kind must be 'steklov' or 'dirichlet'")
        object.__setattr__(self, "scales", self._sup_scales())

    @property
    def size(self) -> int:
        if self.kind == "steklov":
            return 4 * self.max_order + 2
        return 2 * self.max_order + 1

    def _sup_scales(self) -> np.ndarray:
        a, d, N = self.a, self.d, self.max_order
        scales = []
        if self.kind == "steklov":
            scales.append(1.0)               # constant
            scales.append(math.log(1.0 / a))  # log r, extremal on the inner circle
            for k in range(1, N + 1):
                up = (1.0 + d) ** k          # r^k, extremal on the outer circle
                down = a ** (-k)             # r^-k, extremal on the inner circle
                scales.extend((up, up, down, down))
        else:
            scales.append(math.log((1.0 + d) / a))
            for k in range(1, N + 1):
                s = (1.0 + d) ** k + a ** (2 * k) * (1.0 - d) ** (-k)
                scales.extend((s, s))
        return np.asarray(scales)

    def evaluate(self, pts: np.ndarray) -> np.ndarray:
        """Field values at pts (npts x 2); returns (npts x size)."""
        z = pts[:, 0] + 1j * pts[:, 1]
        npts = len(z)
        out = np.empty((npts, self.size))
        col = 0
        if self.kind == "steklov":
            out[:, 0] = 1.0
            out[:, 1] = np.log(np.abs(z))
            col = 2
            zp = np.ones_like(z)
            zm = np.ones_like(z)
            for k in range(1, self.max_order + 1):
                zp = zp * z
                zm = zm / z
                out[:, col] = zp.real
                out[:, col + 1] = zp.imag
                out[:, col + 2] = zm.real
                out[:, col + 3] = zm.imag
                col += 4
        else:
            out[:, 0] = np.log(np.abs(z)) - math.log(self.a)
            col = 1
            zp = np.ones_like(z)
            zm = np.ones_like(z)
            for k in range(1, self.max_order + 1):
                zp = zp * z
                zm = zm / z
                # (r^k - a^2k r^-k) cos k0 = Re(z^k - a^2k z^-k), but the sin
                # combination flips sign: Im(z^-k) = -r^-k sin k0.
                ak = self.a ** (2 * k)
                out[:, col] = (zp - ak * zm).real
                out[:, col + 1] = (zp + ak * zm).imag
                col += 2
        return out / self.scales

    def normal_derivative(self, pts: np.ndarray, normals: np.ndarray) -> np.ndarray:
        """Outward normal derivatives at pts; returns (npts x size)."""
        z = pts[:, 0] + 1j * pts[:, 1]
        # For holomorphic f = u + iv: grad(u).n = Re(f' n_c), grad(v).n = Im(f' n_c)
        ncc = normals[:, 0] + 1j * normals[:, 1]
        npts = len(z)
        out = np.empty((npts, self.size))
        col = 0
        if self.kind == "steklov":
            out[:, 0] = 0.0
            out[:, 1] = ((1.0 / z) * ncc).real
            col = 2
            zp = np.ones_like(z)          # z^(k-1)
            zm = 1.0 / (z * z)            # z^(-k-1)
            for k in range(1, self.max_order + 1):
                fp = k * zp * ncc
                fm = -k * zm * ncc
                out[:, col] = fp.real
                out[:, col + 1] = fp.imag
                out[:, col + 2] = fm.real
                out[:, col + 3] = fm.imag
                col += 4
                zp = zp * z
                zm = zm / z
        else:
            out[:, 0] = ((1.0 / z) * ncc).real
            col = 1
            zp = np.ones_like(z)
            zm = 1.0 / (z * z)
            for k in range(1, self.max_order + 1):
                ak = self.a ** (2 * k)
                out[:, col] = (k * (zp + ak * zm) * ncc).real
                out[:, col + 1] = (k * (zp - ak * zm) * ncc).imag
                col += 2
                zp = zp * z
                zm = zm / z
        return out / self.scales


@dataclass(frozen=True)
class EigResult:
    """Solver output: ascending eigenvalues, basis weights, diagnostics.

    residual is the normalized max pointwise boundary-condition defect of the
    first nonzero mode (first mode for the mixed problem).
    """

    eigenvalues: np.ndarray
    coefficients: np.ndarray
    gram_condition: float
    residual: float
    basis: TrefftzBasis = field(repr=False, default=None)
    n_points: int = 0

    def first_nonzero(self, zero_tol: float = ZERO_MODE_TOL) -> float:
        """Smallest eigenvalue above zero_tol."""
        for val in self.eigenvalues:
            if val > zero_tol:
                return float(val)
        raise NonConvergenceError("no eigenvalue above the zero-mode tolerance")


def boundary_points(cfg: ShellConfig, m: int):
    """Trapezoid sample of both boundary circles: (pts, normals, weights, is_outer)."""
    t = 2.0 * math.pi * np.arange(m) / m
    outer_pts = np.column_stack((cfg.d + np.cos(t), np.sin(t)))
    outer_nrm = np.column_stack((np.cos(t), np.sin(t)))
    inner_pts = cfg.a * np.column_stack((np.cos(t), np.sin(t)))
    inner_nrm = -np.column_stack((np.cos(t), np.sin(t)))
    pts = np.vstack((outer_pts, inner_pts))
    normals = np.vstack((outer_nrm, inner_nrm))
    weights = np.concatenate(
        (np.full(m, 2.0 * math.pi / m), np.full(m, 2.0 * math.pi * cfg.a / m))
    )
    is_outer = np.concatenate((np.ones(m, dtype=bool), np.zeros(m, dtype=bool)))
    return pts, normals, weights, is_outer


def validate_problem_size(cfg: ShellConfig, N: int, m: int) -> None:
    if cfg.n != 2:
        raise ValueError("the boundary-Galerkin solver is planar: dimension must be 2")
    if N < 4:
        raise ValueError("basis order must be at least 4")
    if m < 8 * N:
        raise ValueError("need at least 8 boundary points per basis order")


def _gram_checks(M: np.ndarray) -> float:
    try:
        scipy.linalg.cholesky(M)
    except scipy.linalg.LinAlgError as exc:
        raise IllConditionedError(
            "mass matrix factorization failed; basis order too large for the geometry"
        ) from exc
    cond = float(np.linalg.cond(M))
    if not np.isfinite(cond) or cond > GRAM_CONDITION_CAP:
        raise IllConditionedError(
            f"mass matrix condition {cond:.3e} exceeds {GRAM_CONDITION_CAP:.0e}; "
            "reduce the basis order"
        )
    return cond


def assemble_steklov(cfg: ShellConfig, N: int, m: int, symmetrize: bool = True):
    """Stiffness and mass matrices of the full-boundary spectral problem.

    K_ij = boundary integral of phi_i dphi_j/dn (equal to the volume energy
    form by harmonicity), M_ij = boundary integral of phi_i phi_j over both
    circles.  Raises IllConditionedError when the mass matrix cannot be
    factorized or its condition number exceeds 1e14.
    """
    validate_problem_size(cfg, N, m)
    basis = TrefftzBasis(max_order=N, a=cfg.a, d=cfg.d, kind="steklov")
    pts, normals, weights, _ = boundary_points(cfg, m)
    B = basis.evaluate(pts)
    Dn = basis.normal_derivative(pts, normals)
    WB = B * weights[:, None]
    K = WB.T @ Dn
    M = WB.T @ B
    if symmetrize:
        K = 0.5 * (K + K.T)
        M = 0.5 * (M + M.T)
    _gram_checks(M)
    return K, M


def solve_steklov(cfg: ShellConfig, N: int = 24, m: int = 512) -> EigResult:
    """Spectrum of the eccentric annulus with the spectral condition on both circles.

    Solves K c = sigma M c by Cholesky reduction of M to a standard symmetric
    problem (LAPACK).  The zero eigenvalue (constants) is present; the first
    eigenvalue above the zero tolerance is the first nonzero Steklov value.
    """
    K, M = assemble_steklov(cfg, N, m)
    basis = TrefftzBasis(max_order=N, a=cfg.a, d=cfg.d, kind="steklov")
    cond = float(np.linalg.cond(M))
    try:
        vals, vecs = scipy.linalg.eigh(K, M)
    except scipy.linalg.LinAlgError as exc:
        raise NonConvergenceError("generalized eigenvalue iteration failed") from exc
    result = EigResult(
        eigenvalues=vals,
        coefficients=vecs,
        gram_condition=cond,
        residual=math.nan,
        basis=basis,
        n_points=m,
    )
    mode = int(np.searchsorted(vals, ZERO_MODE_TOL))
    res = boundary_residual(result, cfg, mode)
    return EigResult(
        eigenvalues=vals,
        coefficients=vecs,
        gram_condition=cond,
        residual=res,
        basis=basis,
        n_points=m,
    )


def solve_dirichlet_steklov(cfg: ShellConfig, N: int = 24, m: int = 512) -> EigResult:
    """Spectrum with zero trace on the inner circle, spectral condition outside.

    The basis combinations r^k - a^(2k) r^-k (and log(r/a) at order zero)
    vanish identically on the inner circle, so only the outer boundary enters
    the mass; the first eigenvalue is the first mixed eigenvalue.
    """
    validate_problem_size(cfg, N, m)
    basis = TrefftzBasis(max_order=N, a=cfg.a, d=cfg.d, kind="dirichlet")
    pts, normals, weights, is_outer = boundary_points(cfg, m)
    op, onrm, ow = pts[is_outer], normals[is_outer], weights[is_outer]
    B = basis.evaluate(op)
    Dn = basis.normal_derivative(op, onrm)
    WB = B * ow[:, None]
    K_raw = WB.T @ Dn
    M_raw = WB.T @ B
    K = 0.5 * (K_raw + K_raw.T)
    M = 0.5 * (M_raw + M_raw.T)
    cond = _gram_checks(M)
    try:
        vals, vecs = scipy.linalg.eigh(K, M)
    except scipy.linalg.LinAlgError as exc:
        raise NonConvergenceError("generalized eigenvalue iteration failed") from exc
    result = EigResult(
        eigenvalues=vals,
        coefficients=vecs,
        gram_condition=cond,
        residual=math.nan,
        basis=basis,
        n_points=m,
    )
    res = boundary_residual(result, cfg, 0)
    return EigResult(
        eigenvalues=vals,
        coefficients=vecs,
        gram_condition=cond,
        residual=res,
        basis=basis,
        n_points=m,
    )


def boundary_residual(result: EigResult, cfg: ShellConfig, mode: int, n_sample: int = 2048) -> float:
    """Max pointwise spectral-condition defect of one mode on a dense sample.

    |du/dn - sigma u| over the spectral part of the boundary (both circles,
    or the outer circle only for the mixed problem, where the inner trace
    defect |u| is folded in), normalized by the boundary sup of |u|.
    """
    if not 0 <= mode < len(result.eigenvalues):
        raise ValueError("mode index out of range")
    basis = result.basis
    coeff = result.coefficients[:, mode]
    sigma = result.eigenvalues[mode]
    pts, normals, _, is_outer = boundary_points(cfg, n_sample)
    u = basis.evaluate(pts) @ coeff
    dn = basis.normal_derivative(pts, normals) @ coeff
    sup = float(np.max(np.abs(u))) + 1e-30
    if basis.kind == "steklov":
        defect = np.abs(dn - sigma * u)
    else:
        defect = np.abs(dn[is_outer] - sigma * u[is_outer])
        defect = np.concatenate((defect, np.abs(u[~is_outer])))
    return float(np.max(defect)) / sup


def solve_with_order_fallback(
    cfg: ShellConfig,
    N: int = 24,
    m: int = 512,
    problem: str = "steklov",
    min_order: int = 4,
) -> EigResult:
    """Solve, stepping the basis order down by 2 whenever conditioning fails.

    Large offsets shrink the feasible order (the mass matrix condition cap
    signals that); the first feasible order wins.  The order actually used is
    recorded on the result's basis.
    """
    if problem not in ("steklov", "dirichlet-steklov"):
        raise ValueError("problem must be 'steklov' or 'dirichlet-steklov'")
    fn = solve_steklov if problem == "steklov" else solve_dirichlet_steklov
    last: IllConditionedError | None = None
    for order in range(N, min_order - 1, -2):
        try:
            return fn(cfg, N=order, m=max(m, 8 * order))
        except IllConditionedError as exc:
            last = exc
    raise IllConditionedError(
        f"no basis order in [{min_order}, {N}] is well conditioned for this geometry"
    ) from last


def group_eigenvalues(values, rtol: float = 1e-8) -> list[tuple[float, int]]:
    """Cluster an ascending eigenvalue list into (value, multiplicity) groups."""
    groups: list[list[float]] = []
    for v in values:
        if groups and abs(v - groups[-1][-1]) <= rtol * max(1.0, abs(v)):
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(sum(g) / len(g), len(g)) for g in groups]
