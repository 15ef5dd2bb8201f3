"""Numerical corroboration on the planar-field circle model.

The model is -u'' = lambda*u - |u|^2 u for u: S^1 -> R^2, discretized by a
Fourier Galerkin truncation at mode N.  The residual is normalized per
mode by 1/(1+k^2), so the linearization at the trivial branch has the
exact eigenvalues (k^2 - lambda)/(1 + k^2) read off mode by mode, and the
stability scan is a bit-level check of the symbolic spectrum formula.

Nontrivial states are found by Newton's method with the trivial family
deflated out: a plain iteration started at the documented small-amplitude
guess falls into the basin of u = 0 once lambda - k^2 exceeds 3 * 0.01,
while the deflated residual keeps the quadratic convergence and removes
the trivial root altogether.  The angular degeneracy along the group
orbit is pinned by freezing the sine coefficient of mode k of the first
component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError, RefusalError

RESIDUAL_TOL = 1e-12
CROSSING_TOL = 1e-6


@dataclass
class CircleModel:
    """Truncated Fourier state: coeffs[c] = [a0, a1, b1, ..., aN, bN]."""

    n_modes: int
    lam: float
    coeffs: np.ndarray

    def copy(self) -> "CircleModel":
        return CircleModel(self.n_modes, self.lam, self.coeffs.copy())


def _grid(n_modes: int) -> np.ndarray:
    # 4(N+1) points: cubic products of degree <= 3N alias only onto modes > N
    m = 4 * (n_modes + 1)
    return 2.0 * np.pi * np.arange(m) / m


def _tables(n_modes: int) -> tuple[np.ndarray, np.ndarray]:
    theta = _grid(n_modes)
    k = np.arange(1, n_modes + 1)[:, None]
    return np.cos(k * theta), np.sin(k * theta)


def synthesize(coeffs: np.ndarray, n_modes: int) -> np.ndarray:
    """Grid values of both components from the coefficient layout."""
    cos_t, sin_t = _tables(n_modes)
    a = coeffs[:, 1::2]
    b = coeffs[:, 2::2]
    return coeffs[:, :1] + a @ cos_t + b @ sin_t


def analyze(values: np.ndarray, n_modes: int) -> np.ndarray:
    """Fourier coefficients (modes 0..N) from grid values."""
    m = values.shape[1]
    cos_t, sin_t = _tables(n_modes)
    out = np.empty((2, 2 * n_modes + 1))
    out[:, 0] = values.mean(axis=1)
    out[:, 1::2] = 2.0 / m * values @ cos_t.T
    out[:, 2::2] = 2.0 / m * values @ sin_t.T
    return out


def _mode_weights(n_modes: int) -> np.ndarray:
    w = np.empty(2 * n_modes + 1)
    w[0] = 1.0
    k = np.arange(1, n_modes + 1)
    w[1::2] = 1.0 + k * k
    w[2::2] = 1.0 + k * k
    return w


def residual(model: CircleModel) -> np.ndarray:
    """Per-mode normalized residual of the discretized equation."""
    n = model.n_modes
    u = synthesize(model.coeffs, n)
    cubic = analyze((u[0] ** 2 + u[1] ** 2) * u, n)
    lin = np.empty_like(model.coeffs)
    lin[:, 0] = -model.lam * model.coeffs[:, 0]
    k = np.arange(1, n + 1)
    lin[:, 1::2] = (k * k - model.lam) * model.coeffs[:, 1::2]
    lin[:, 2::2] = (k * k - model.lam) * model.coeffs[:, 2::2]
    return (lin + cubic) / _mode_weights(n)


def energy(model: CircleModel) -> float:
    """Discretized energy whose normalized gradient is ``residual``."""
    n = model.n_modes
    u = synthesize(model.coeffs, n)
    du = np.empty_like(model.coeffs)
    du[:, 0] = 0.0
    k = np.arange(1, n + 1)
    du[:, 1::2] = k * model.coeffs[:, 2::2]
    du[:, 2::2] = -k * model.coeffs[:, 1::2]
    uprime = synthesize(du, n)
    sq = u[0] ** 2 + u[1] ** 2
    dens = 0.5 * (uprime[0] ** 2 + uprime[1] ** 2) - 0.5 * model.lam * sq + 0.25 * sq ** 2
    return float(dens.mean() * 2.0 * np.pi)


def coefficient_inner(n_modes: int, x: np.ndarray, y: np.ndarray) -> float:
    """Inner product under which ``residual`` is the gradient of ``energy``."""
    w = _mode_weights(n_modes) * np.pi
    w = w.copy()
    w[0] = 2.0 * np.pi
    return float(np.sum(x * y * w))


def _jacobian(model: CircleModel) -> np.ndarray:
    n = model.n_modes
    u = synthesize(model.coeffs, n)
    sq = u[0] ** 2 + u[1] ** 2
    size = 2 * (2 * n + 1)
    weights = _mode_weights(n)
    k = np.arange(1, n + 1)
    jac = np.empty((size, size))
    basis = np.zeros((2, 2 * n + 1))
    for col in range(size):
        basis.flat[col] = 1.0
        v = synthesize(basis, n)
        dot = u[0] * v[0] + u[1] * v[1]
        nl = analyze(sq * v + 2.0 * dot * u, n)
        lin = np.empty_like(basis)
        lin[:, 0] = -model.lam * basis[:, 0]
        lin[:, 1::2] = (k * k - model.lam) * basis[:, 1::2]
        lin[:, 2::2] = (k * k - model.lam) * basis[:, 2::2]
        jac[:, col] = ((lin + nl) / weights).ravel()
        basis.flat[col] = 0.0
    return jac


def trivial_branch_eigenvalues(n_modes: int, lam: float) -> np.ndarray:
    """Diagonal linearization eigenvalues (k^2 - lam)/(1 + k^2), k = 0..N."""
    k = np.arange(n_modes + 1, dtype=float)
    return (k * k - lam) / (1.0 + k * k)


def _negative_count(n_modes: int, lam: float) -> int:
    eigs = trivial_branch_eigenvalues(n_modes, lam)
    mult = np.full(n_modes + 1, 4)
    mult[0] = 2
    return int(mult[eigs < 0.0].sum())


def stability_scan(
    n_modes: int, lam_lo: float, lam_hi: float, steps: int = 60
) -> list[float]:
    """Locate eigenvalue sign changes of the trivial-branch linearization.

    Scans the interval on a uniform grid and refines every jump of the
    negative-eigenvalue count by bisection; estimates are accurate to the
    crossing tolerance of 1e-6.
    """
    if not lam_lo < lam_hi:
        raise InputError("scan interval is empty")
    if steps < 1:
        raise InputError("need at least one scan step")
    needed = math.ceil(math.sqrt(max(lam_hi, 0.0))) + 2
    if n_modes < needed:
        raise RefusalError(
            f"mode cutoff {n_modes} cannot resolve crossings up to {lam_hi}; need >= {needed}"
        )

    def refine(lo: float, hi: float) -> list[float]:
        if _negative_count(n_modes, lo) == _negative_count(n_modes, hi):
            return []
        if hi - lo < 0.1 * CROSSING_TOL:
            return [0.5 * (lo + hi)]
        mid = 0.5 * (lo + hi)
        return refine(lo, mid) + refine(mid, hi)

    crossings: list[float] = []
    grid = np.linspace(lam_lo, lam_hi, steps + 1)
    for a, b in zip(grid[:-1], grid[1:]):
        crossings.extend(refine(float(a), float(b)))
    return crossings


def initial_guess(k: int, n_modes: int, amplitude: float = 0.1) -> np.ndarray:
    coeffs = np.zeros((2, 2 * n_modes + 1))
    coeffs[0, 2 * k - 1] = amplitude  # cos(k*theta) in the first component
    coeffs[1, 2 * k] = amplitude  # sin(k*theta) in the second
    return coeffs


def exact_branch_state(k: int, lam: float, n_modes: int) -> CircleModel:
    """The closed-form branch state sqrt(lam - k^2)(cos k0, sin k0)."""
    if not lam > k * k:
        raise RefusalError(f"branch state needs lambda > k^2 = {k * k}")
    amp = math.sqrt(lam - k * k)
    return CircleModel(n_modes, lam, initial_guess(k, n_modes, amp))


def rotate_state(model: CircleModel, phi: float, psi: float) -> CircleModel:
    """Act by the plane rotation phi and the domain shift psi."""
    n = model.n_modes
    c = model.coeffs
    shifted = np.empty_like(c)
    shifted[:, 0] = c[:, 0]
    k = np.arange(1, n + 1)
    ck, sk = np.cos(k * psi), np.sin(k * psi)
    shifted[:, 1::2] = c[:, 1::2] * ck - c[:, 2::2] * sk
    shifted[:, 2::2] = c[:, 1::2] * sk + c[:, 2::2] * ck
    rot = np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])
    return CircleModel(n, model.lam, rot @ shifted)


def amplitude(model: CircleModel) -> float:
    """Root-mean-square field amplitude; equals c on the pure branch."""
    c = model.coeffs
    total = float(np.sum(c[:, 0] ** 2) + 0.5 * np.sum(c[:, 1:] ** 2))
    return math.sqrt(total)


@dataclass
class NewtonResult:
    converged: bool
    iterations: int
    state: CircleModel
    amplitude: float
    residual_sup: float


def newton_branch(
    k: int, lam: float, n_modes: int | None = None, max_iter: int = 50
) -> NewtonResult:
    """Converge onto the mode-k branch at parameter ``lam``.

    Starts from the 0.1-amplitude guess on mode k, pins the phase, and
    iterates Newton on the trivial-family-deflated residual until the
    (undeflated) residual sup-norm drops below 1e-12.  Divergence after
    ``max_iter`` steps is reported, not raised.
    """
    if k < 1:
        raise InputError("mode index must be at least 1")
    if not lam > k * k:
        raise RefusalError(f"need lambda > k^2 = {k * k}, got {lam}")
    n = n_modes if n_modes is not None else max(k + 2, 8)
    if n < k + 2:
        raise RefusalError(f"mode cutoff {n} too small for mode {k}; need >= {k + 2}")

    model = CircleModel(n, float(lam), initial_guess(k, n))
    pin = 2 * k  # flat index of the sine coefficient of mode k, component 0
    iterations = 0
    res = residual(model).ravel()
    while float(np.abs(res).max()) >= RESIDUAL_TOL:
        if iterations >= max_iter:
            return NewtonResult(False, iterations, model, amplitude(model), float(np.abs(res).max()))
        jac = _jacobian(model)
        jac[pin, :] = 0.0
        jac[pin, pin] = 1.0
        rhs = res.copy()
        rhs[pin] = model.coeffs.flat[pin]
        try:
            delta = np.linalg.solve(jac, -rhs)
        except np.linalg.LinAlgError:
            return NewtonResult(False, iterations, model, amplitude(model), float(np.abs(res).max()))
        x = model.coeffs.ravel()
        norm_sq = float(x @ x)
        deflate = 1.0 / norm_sq + 1.0
        slope = -2.0 * float(x @ delta) / norm_sq ** 2
        denom = deflate - slope
        if abs(denom) < 1e-300:
            return NewtonResult(False, iterations, model, amplitude(model), float(np.abs(res).max()))
        gamma = deflate / denom
        model.coeffs = (x + gamma * delta).reshape(model.coeffs.shape)
        iterations += 1
        res = residual(model).ravel()
    return NewtonResult(True, iterations, model, amplitude(model), float(np.abs(res).max()))
