"""Contraction of the O(3,2) generators onto the Poincare translations.

The scaling matrix C(eps) = diag(1, 1, 1, 1, eps) squeezes the second
time-like direction.  It commutes exactly with the rotation and boost
generators, while the four s-mixing generators land on the translation
generators under the scaled similarity transform

    G  ->  eps * C(eps) G C(eps)^-1,

with a single residual entry of size exactly eps**2:

    ||eps C Q_i C^-1 - P_i||_maxabs = eps**2   (i = 1, 2, 3)
    ||eps C S0  C^-1 - P0 ||_maxabs = eps**2

eps is never taken to literal zero (C would be singular); the limit is
realized as the closed-form target plus a finite-eps convergence scan.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fiverep import FiveMatrix, generator_matrix, poincare_set
from .reports import (
    AlgebraReport,
    POINCARE_NAMES,
    RelationEntry,
    expected_poincare,
    format_combo,
)

__all__ = [
    "CONTRACTED_TARGETS",
    "c_matrix",
    "c_matrix_inverse",
    "contract_generator",
    "commute_with_c_check",
    "contracted_algebra",
    "convergence_scan",
    "ScanRow",
    "fit_loglog_slope",
]

# Which O(3,2) generator contracts onto which translation generator.
CONTRACTED_TARGETS = {"Q1": "P1", "Q2": "P2", "Q3": "P3", "S0": "P0"}


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not (0.0 < eps <= 1.0):
        raise ValueError(f"contraction parameter must lie in (0, 1], got {eps}")
    return eps


def c_matrix(eps: float) -> FiveMatrix:
    """diag(1, 1, 1, 1, eps); eps = 1 means no contraction."""
    eps = _check_eps(eps)
    return FiveMatrix(np.diag([1.0, 1.0, 1.0, 1.0, eps]).astype(complex), f"C({eps})")


def c_matrix_inverse(eps: float) -> FiveMatrix:
    eps = _check_eps(eps)
    return FiveMatrix(np.diag([1.0, 1.0, 1.0, 1.0, 1.0 / eps]).astype(complex),
                      f"C({eps})^-1")


def contract_generator(generator: FiveMatrix, eps: float) -> FiveMatrix:
    """eps * C(eps) G C(eps)^-1.

    Intended for Q1, Q2, Q3, S0; the rotation and boost generators commute
    with C(eps), so on them the conjugation is the identity map and only
    the overall eps scaling would remain.
    """
    eps = _check_eps(eps)
    c = c_matrix(eps).matrix
    cinv = c_matrix_inverse(eps).matrix
    return FiveMatrix(eps * (c @ generator.matrix @ cinv),
                      f"contract({generator.label},{eps})")


def commute_with_c_check(eps: float) -> dict[str, float]:
    """Max-abs norm of [C(eps), G] for each of the six J/K generators.

    All six commutators vanish exactly (the generators have empty fifth
    row and column); the s-mixing generators do not commute with C.
    """
    c = c_matrix(eps).matrix
    out = {}
    for name in ("J1", "J2", "J3", "K1", "K2", "K3"):
        g = generator_matrix(name).matrix
        out[name] = float(np.max(np.abs(c @ g - g @ c)))
    return out


def _contracted_matrices(eps: float) -> dict[str, np.ndarray]:
    """{J, K untransformed} + {contracted Q, S0} keyed by Poincare names."""
    mats = {}
    for name in ("J1", "J2", "J3", "K1", "K2", "K3"):
        mats[name] = generator_matrix(name).matrix
    for source, target in CONTRACTED_TARGETS.items():
        mats[target] = contract_generator(generator_matrix(source), eps).matrix
    return mats


def contracted_algebra(eps: float) -> AlgebraReport:
    """Poincare relations evaluated on the contracted set at finite eps.

    Residuals against the matrix-verified Poincare table decay as eps**2
    for every relation whose right-hand side involves a translation
    target; pairs that commute identically in the source algebra (and the
    untransformed Lorentz block) hold exactly at every eps.  Covariance
    identities such as [J3, contract(Q1)] = i * contract(Q2) are exact by
    construction and are asserted in the test suite rather than here.
    """
    eps = _check_eps(eps)
    mats = _contracted_matrices(eps)
    targets = poincare_set().matrices()
    entries = []
    for i, a in enumerate(POINCARE_NAMES):
        for b in POINCARE_NAMES[i + 1:]:
            comm = mats[a] @ mats[b] - mats[b] @ mats[a]
            combo = expected_poincare(a, b)
            expected = np.zeros_like(comm)
            for name, coeff in combo.items():
                expected = expected + coeff * targets[name]
            residual = float(np.max(np.abs(comm - expected)))
            rhs = format_combo(combo, POINCARE_NAMES)
            entries.append(RelationEntry(
                lhs=f"[{a},{b}]", rhs=rhs, residual=residual,
                printed_rhs=rhs, matches_printed=True,
            ))
    return AlgebraReport(family="poincare", entries=tuple(entries))


@dataclass(frozen=True)
class ScanRow:
    epsilon: float
    generator: str
    deviation: float

    def to_dict(self) -> dict:
        return {"epsilon": self.epsilon, "generator": self.generator,
                "deviation": self.deviation}


def convergence_scan(eps_list) -> list[ScanRow]:
    """Deviation of each contracted generator from its translation target.

    Rows are ordered by ascending epsilon, then by generator (Q1, Q2, Q3,
    S0); each deviation equals eps**2 exactly.
    """
    eps_values = sorted(_check_eps(e) for e in eps_list)
    targets = poincare_set().matrices()
    rows = []
    for eps in eps_values:
        for source, target in CONTRACTED_TARGETS.items():
            contracted = contract_generator(generator_matrix(source), eps).matrix
            dev = float(np.max(np.abs(contracted - targets[target])))
            rows.append(ScanRow(epsilon=eps, generator=source, deviation=dev))
    return rows


def fit_loglog_slope(rows, generator: str) -> float:
    """Least-squares slope of log(deviation) vs log(epsilon) for one generator."""
    pts = [(row.epsilon, row.deviation) for row in rows if row.generator == generator]
    if len(pts) < 2:
        raise ValueError(f"need at least two epsilon points for {generator}")
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    slope = np.polyfit(x, y, 1)[0]
    return float(slope)
