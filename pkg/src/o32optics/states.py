"""Two-mode squeezed vacuum and the boost-squeezed Gaussian ground state.

The squeezed vacuum is generated by the pair operator of the squeezing
interferometer triple: exp(-2i r Q3)|0,0> = exp(r(a1^dag a2^dag - a1 a2))|0,0>,
supported on the equal-occupation states |n,n> with amplitudes
tanh(r)^n / cosh(r) (real and positive in this sign convention).

The position-space picture realizes a boost as a squeeze of the
oscillator ground state: in light-cone coordinates u = (z+t)/sqrt2,
v = (z-t)/sqrt2 the boosted wavefunction is

    psi_eta(z, t) = pi^(-1/2) * exp(-(exp(-2 eta) u^2 + exp(2 eta) v^2) / 2)

whose 1/sqrt(e) level set is an ellipse with semi-axes exp(eta) along u
and exp(-eta) along v (a circle at eta = 0).  With the tabulated boost
generator, the 5x5 group element stretching u by exp(eta) is
exp(-i eta K3), i.e. ``exponentiate(K3, -eta)``.

Truncation guard: a squeezed vacuum leaks probability
tanh(r)**(2*(n_max+1)) past the per-mode cutoff; construction rejects
parameter pairs where that tail exceeds TRUNCATION_TAIL_MAX, because the
truncated evolution then no longer reproduces the closed-form amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import expm_multiply

from .fock import FockSpace, annihilation, basis_state, quadratures
from .fiverep import generator_matrix, exponentiate

__all__ = [
    "TRUNCATION_TAIL_MAX",
    "TwoModeState",
    "SqueezeParameters",
    "EllipseSample",
    "TruncationError",
    "squeeze_generator",
    "squeezed_vacuum",
    "pair_amplitude_closed_form",
    "mean_photon_number",
    "mean_photon_analytic",
    "quadrature_covariance",
    "wavefunction",
    "boosted_ground_state",
    "ellipse_points",
    "boosted_circle_points",
    "state_to_json",
]

TRUNCATION_TAIL_MAX = 1e-8
LEVEL = np.exp(-0.5)  # level set defining the circle/ellipse, relative to the peak


class TruncationError(ValueError):
    """Raised when the requested squeeze leaks too much past the cutoff."""


@dataclass(frozen=True)
class SqueezeParameters:
    """Squeeze magnitude r for exp(r(a1+ a2+ - a1 a2)) and boost rapidity eta."""

    r: float = 0.0
    eta: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.r) or self.r < 0:
            raise ValueError(f"squeeze magnitude must be finite and >= 0, got {self.r}")
        if not np.isfinite(self.eta):
            raise ValueError(f"rapidity must be finite, got {self.eta}")


@dataclass(frozen=True)
class TwoModeState:
    """Normalized complex amplitude vector over a two-mode Fock basis."""

    amplitudes: np.ndarray
    space: FockSpace

    def __post_init__(self):
        amps = np.ascontiguousarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.space.dim,):
            raise ValueError(f"amplitude vector has shape {amps.shape}, "
                             f"space dim is {self.space.dim}")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"state is not normalized: ||psi|| = {norm!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def amplitude(self, n1: int, n2: int) -> complex:
        return complex(self.amplitudes[self.space.index(n1, n2)])

    def pair_amplitudes(self) -> np.ndarray:
        """Amplitudes on the equal-occupation ladder |n,n>, n = 0..n_max."""
        n = self.space.n_max + 1
        return self.amplitudes[np.arange(n) * n + np.arange(n)]

    def max_off_pair_amplitude(self) -> float:
        n = self.space.n_max + 1
        mask = np.ones(self.space.dim, dtype=bool)
        mask[np.arange(n) * n + np.arange(n)] = False
        return float(np.max(np.abs(self.amplitudes[mask]))) if mask.any() else 0.0

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def squeeze_generator(r: float, space: FockSpace) -> np.ndarray:
    """r * (a1^dag a2^dag - a1 a2), the anti-Hermitian exponent of the squeeze."""
    a1 = annihilation(1, space).matrix
    a2 = annihilation(2, space).matrix
    return r * (a1.conj().T @ a2.conj().T - a1 @ a2)


def truncation_tail(r: float, n_max: int) -> float:
    """Probability a squeezed vacuum carries beyond the per-mode cutoff."""
    return float(np.tanh(r) ** (2 * (n_max + 1)))


def squeezed_vacuum(r: float, space: FockSpace, *,
                    check_truncation: bool = True) -> TwoModeState:
    """Two-mode squeezed vacuum exp(-2i r Q3)|0,0> by matrix exponential.

    Rejects (r, n_max) pairs whose out-of-space tail probability exceeds
    ``TRUNCATION_TAIL_MAX``; pass ``check_truncation=False`` for
    diagnostics that tolerate cutoff distortion (the evolution stays
    exactly unitary either way).
    """
    if not np.isfinite(r) or r < 0:
        raise ValueError(f"squeeze magnitude must be finite and >= 0, got {r}")
    if check_truncation:
        tail = truncation_tail(r, space.n_max)
        if tail > TRUNCATION_TAIL_MAX:
            raise TruncationError(
                f"truncation insufficient: tail probability {tail:.3e} beyond "
                f"n_max={space.n_max} exceeds {TRUNCATION_TAIL_MAX:.0e} at r={r}; "
                f"raise n_max or lower r")
    vac = basis_state(space, 0, 0)
    if r == 0:
        return TwoModeState(vac, space)
    psi = expm_multiply(squeeze_generator(r, space), vac)
    return TwoModeState(psi, space)


def pair_amplitude_closed_form(r: float, n: int) -> float:
    """tanh(r)^n / cosh(r), the untruncated amplitude on |n,n>."""
    return float(np.tanh(r) ** n / np.cosh(r))


def mean_photon_number(state: TwoModeState) -> float:
    """<N1 + N2>; equals 2*sinh(r)^2 for an untruncated squeezed vacuum."""
    n = state.space.n_max + 1
    n1, n2 = np.divmod(np.arange(state.space.dim), n)
    weights = (n1 + n2).astype(float)
    return float(np.sum(weights * np.abs(state.amplitudes) ** 2))


def mean_photon_analytic(r: float) -> float:
    return float(2.0 * np.sinh(r) ** 2)


def quadrature_covariance(state: TwoModeState, space: FockSpace | None = None) -> np.ndarray:
    """Symmetrized second-moment matrix over (x1, P1, x2, P2).

    Cov[i, j] = <(O_i O_j + O_j O_i)/2> - <O_i><O_j>.  For the squeezed
    vacuum the diagonal is cosh(2r)/2 and the cross-mode entries carry
    sinh(r)cosh(r) correlations with det(Cov) = (1/2)**4.
    """
    if space is not None and space != state.space:
        raise ValueError("state and space disagree")
    space = state.space
    x1, p1 = quadratures(1, space)
    x2, p2 = quadratures(2, space)
    ops = [x1.matrix, p1.matrix, x2.matrix, p2.matrix]
    psi = state.amplitudes
    applied = [op @ psi for op in ops]
    means = [np.vdot(psi, vec).real for vec in applied]
    cov = np.empty((4, 4))
    for i in range(4):
        for j in range(i, 4):
            second = np.vdot(applied[i], applied[j]).real  # <O_i O_j> symmetrized
            cov[i, j] = cov[j, i] = second - means[i] * means[j]
    return cov


def wavefunction(z, t, eta: float):
    """Boosted ground state pi^(-1/2) exp(-(e^{-2eta} u^2 + e^{2eta} v^2)/2)."""
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    u = (z + t) / np.sqrt(2.0)
    v = (z - t) / np.sqrt(2.0)
    return np.pi ** -0.5 * np.exp(-(np.exp(-2 * eta) * u ** 2
                                    + np.exp(2 * eta) * v ** 2) / 2.0)


@dataclass(frozen=True)
class EllipseSample:
    """Sampled |psi| on a (z, t) grid plus the extracted level-set semi-axes."""

    eta: float
    z: np.ndarray
    t: np.ndarray
    psi_abs: np.ndarray
    axis_u: float
    axis_v: float

    @property
    def semi_major(self) -> float:
        return max(self.axis_u, self.axis_v)

    @property
    def semi_minor(self) -> float:
        return min(self.axis_u, self.axis_v)

    @property
    def axis_product(self) -> float:
        return self.axis_u * self.axis_v

    def csv_lines(self):
        yield "z,t,psi_abs"
        for z, t, p in zip(self.z, self.t, self.psi_abs):
            yield f"{z!r},{t!r},{p!r}"


def _level_crossing(eta: float, direction_uv: tuple[float, float], bound: float) -> float:
    """Distance along a (u, v) direction where |psi| falls to the level set."""
    du, dv = direction_uv
    target = np.pi ** -0.5 * LEVEL

    def value(c):
        u, v = c * du, c * dv
        z, t = (u + v) / np.sqrt(2.0), (u - v) / np.sqrt(2.0)
        return wavefunction(z, t, eta) - target

    lo, hi = 0.0, bound
    if value(hi) > 0:
        raise ValueError("grid bound does not reach the level set")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if value(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def boosted_ground_state(eta: float, grid_points: int = 201,
                         half_width: float | None = None) -> EllipseSample:
    """Sample |psi_eta| on a square (z, t) grid and extract the ellipse axes.

    The grid must cover [-L, L]^2 with L >= 3*exp(|eta|); the default is
    L = 4*exp(|eta|) with a 201x201 grid.  Semi-axes are extracted by
    bisecting the wavefunction along the light-cone axes, so their
    accuracy is not limited by the grid pitch.
    """
    if not np.isfinite(eta):
        raise ValueError(f"rapidity must be finite, got {eta}")
    if grid_points < 2:
        raise ValueError("grid needs at least two points per axis")
    min_width = 3.0 * np.exp(abs(eta))
    if half_width is None:
        half_width = 4.0 * np.exp(abs(eta))
    if half_width < min_width:
        raise ValueError(
            f"grid half-width {half_width} too small for eta={eta}; "
            f"need at least {min_width}")
    axis = np.linspace(-half_width, half_width, grid_points)
    zg, tg = np.meshgrid(axis, axis, indexing="ij")
    psi = wavefunction(zg, tg, eta)
    axis_u = _level_crossing(eta, (1.0, 0.0), half_width * np.sqrt(2.0))
    axis_v = _level_crossing(eta, (0.0, 1.0), half_width * np.sqrt(2.0))
    return EllipseSample(
        eta=eta,
        z=zg.ravel(),
        t=tg.ravel(),
        psi_abs=psi.ravel(),
        axis_u=axis_u,
        axis_v=axis_v,
    )


def ellipse_points(eta: float, phis) -> np.ndarray:
    """(z, t) points of the 1/sqrt(e) level set, parametrized by angle.

    phi parametrizes the unit circle in (u, v); the eta-ellipse point is
    (exp(eta) cos phi, exp(-eta) sin phi) rotated back to (z, t).
    """
    phis = np.asarray(phis, dtype=float)
    u = np.exp(eta) * np.cos(phis)
    v = np.exp(-eta) * np.sin(phis)
    z = (u + v) / np.sqrt(2.0)
    t = (u - v) / np.sqrt(2.0)
    return np.column_stack([z, t])


def boosted_circle_points(eta: float, phis) -> np.ndarray:
    """The eta = 0 circle pushed through the 5x5 boost exp(-i eta K3).

    With the tabulated K3, positive rapidity (stretching u) is the
    group element exponentiate(K3, -eta).
    """
    boost = exponentiate(generator_matrix("K3"), -eta).matrix.real
    circle = ellipse_points(0.0, phis)
    out = []
    for z, t in circle:
        vec = np.array([0.0, 0.0, z, t, 0.0])
        moved = boost @ vec
        out.append([moved[2], moved[3]])
    return np.asarray(out)


def state_to_json(state: TwoModeState, threshold: float = 1e-14) -> list[dict]:
    """Index/[re, im] export of the non-negligible amplitudes."""
    out = []
    for index, amp in enumerate(state.amplitudes):
        if abs(amp) > threshold:
            n1, n2 = state.space.occupations(index)
            out.append({
                "index": index,
                "n1": int(n1),
                "n2": int(n2),
                "re": float(amp.real),
                "im": float(amp.imag),
            })
    return out
