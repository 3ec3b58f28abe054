"""5x5 matrix and differential-operator realization of the ten generators.

Rows and columns are ordered (x, y, z, t, s): three space-like and two
time-like directions, metric eta = diag(1, 1, 1, -1, -1).  The rotation
and boost generators J, K live entirely in the (x, y, z, t) block (zero
fifth row and column); the four extra generators Q1..Q3, S0 have nonzero
entries only in the fifth row and column.  The four translation
generators P1..P3, P0 of the inhomogeneous Lorentz set act on affine
vectors (x, y, z, t, 1).

Each generator also has a first-order differential operator with linear
coefficients.  Writing an operator as D = sum s * x_p * d/dx_q, its
coefficient matrix A[q, p] = s induces the linear map G = -A, and with
that identification the induced map reproduces the tabulated matrix
exactly for all ten generators (D generates the pullback flow
f -> f(exp(-theta*G) v)).

Translation-exponential caveat: with P0 = i d/dt as tabulated, the
matrix shifting t by +t' is exp(-i(x'P1 + y'P2 + z'P3) + i t'P0); the
all-plus exponent exp(-i(... + t'P0)) shifts t by -t'.  The closed-form
:func:`translation_matrix` is the ground truth here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .reports import (
    AlgebraReport,
    CoefficientBasis,
    O32_NAMES,
    POINCARE_NAMES,
    PRINTED_EQ502,
    RelationEntry,
    expected_poincare,
    format_combo,
)

__all__ = [
    "AXES",
    "METRIC",
    "FiveVector",
    "FiveMatrix",
    "PoincareSet",
    "generator_matrix",
    "o32_matrices",
    "translation_generator",
    "poincare_set",
    "DifferentialAction",
    "differential_terms",
    "differential_action",
    "finite_difference_matrix",
    "exponentiate",
    "translation_matrix",
    "check_poincare",
    "preserve_metric_check",
    "matrix_to_json",
    "extract_structure",
]

AXES = ("x", "y", "z", "t", "s")
METRIC = np.diag([1.0, 1.0, 1.0, -1.0, -1.0])


@dataclass(frozen=True)
class FiveVector:
    """Real point (x, y, z, t, s); metric signature (+,+,+,-,-)."""

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0
    t: float = 0.0
    s: float = 0.0

    def to_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z, self.t, self.s], dtype=float)

    def affine(self) -> np.ndarray:
        """(x, y, z, t, 1) column used by translations."""
        return np.array([self.x, self.y, self.z, self.t, 1.0])

    def quadratic_form(self) -> float:
        return self.x**2 + self.y**2 + self.z**2 - self.t**2 - self.s**2

    @staticmethod
    def from_array(arr) -> "FiveVector":
        x, y, z, t, s = (float(v) for v in arr)
        return FiveVector(x, y, z, t, s)


@dataclass(frozen=True)
class FiveMatrix:
    """5x5 complex matrix with a label."""

    matrix: np.ndarray
    label: str = ""

    def __post_init__(self):
        mat = np.ascontiguousarray(self.matrix, dtype=complex)
        if mat.shape != (5, 5):
            raise ValueError(f"expected 5x5, got {mat.shape}")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    def __matmul__(self, other):
        if isinstance(other, FiveMatrix):
            return FiveMatrix(self.matrix @ other.matrix, f"{self.label}{other.label}")
        return self.matrix @ np.asarray(other)


def _entries(label: str, *entries: tuple[int, int, complex]) -> FiveMatrix:
    mat = np.zeros((5, 5), dtype=complex)
    for r, c, v in entries:
        mat[r, c] = v
    return FiveMatrix(mat, label)


_I = 1j
# Rotation/boost block (zero fifth row and column).
_TABLE_JK = {
    "J1": _entries("J1", (1, 2, -_I), (2, 1, _I)),
    "J2": _entries("J2", (0, 2, _I), (2, 0, -_I)),
    "J3": _entries("J3", (0, 1, -_I), (1, 0, _I)),
    "K1": _entries("K1", (0, 3, _I), (3, 0, _I)),
    "K2": _entries("K2", (1, 3, _I), (3, 1, _I)),
    "K3": _entries("K3", (2, 3, _I), (3, 2, _I)),
}
# Generators mixing the s direction (nonzero entries only in row/column 5).
_TABLE_QS = {
    "Q1": _entries("Q1", (0, 4, _I), (4, 0, _I)),
    "Q2": _entries("Q2", (1, 4, _I), (4, 1, _I)),
    "Q3": _entries("Q3", (2, 4, _I), (4, 2, _I)),
    "S0": _entries("S0", (3, 4, -_I), (4, 3, _I)),
}
_TABLE_P = {
    "P1": _entries("P1", (0, 4, _I)),
    "P2": _entries("P2", (1, 4, _I)),
    "P3": _entries("P3", (2, 4, _I)),
    "P0": _entries("P0", (3, 4, -_I)),
}

# Differential column: terms (p, q, coeff) meaning coeff * x_p * d/dx_q,
# indices into AXES.  Translations carry a single constant term (None, q, coeff).
_DIFFERENTIAL = {
    "J1": ((1, 2, -_I), (2, 1, +_I)),
    "J2": ((2, 0, -_I), (0, 2, +_I)),
    "J3": ((0, 1, -_I), (1, 0, +_I)),
    "K1": ((0, 3, -_I), (3, 0, -_I)),
    "K2": ((1, 3, -_I), (3, 1, -_I)),
    "K3": ((2, 3, -_I), (3, 2, -_I)),
    "Q1": ((0, 4, -_I), (4, 0, -_I)),
    "Q2": ((1, 4, -_I), (4, 1, -_I)),
    "Q3": ((2, 4, -_I), (4, 2, -_I)),
    "S0": ((3, 4, -_I), (4, 3, +_I)),
    "P1": ((None, 0, -_I),),
    "P2": ((None, 1, -_I),),
    "P3": ((None, 2, -_I),),
    "P0": ((None, 3, +_I),),
}


def generator_matrix(name: str) -> FiveMatrix:
    """Tabulated 5x5 matrix for J1..J3, K1..K3, Q1..Q3, S0."""
    table = {**_TABLE_JK, **_TABLE_QS}
    if name not in table:
        raise ValueError(f"unknown generator {name!r}; expected one of {sorted(table)}")
    return table[name]


def o32_matrices() -> dict[str, np.ndarray]:
    return {name: generator_matrix(name).matrix for name in O32_NAMES}


def translation_generator(name: str) -> FiveMatrix:
    """Translation generator P1, P2, P3 or P0 (single entry in column 5)."""
    if name not in _TABLE_P:
        raise ValueError(f"unknown translation generator {name!r}")
    return _TABLE_P[name]


@dataclass(frozen=True)
class PoincareSet:
    """Rotations, boosts and translations of the inhomogeneous Lorentz set."""

    J: tuple[FiveMatrix, FiveMatrix, FiveMatrix]
    K: tuple[FiveMatrix, FiveMatrix, FiveMatrix]
    P: tuple[FiveMatrix, FiveMatrix, FiveMatrix, FiveMatrix]  # P1, P2, P3, P0

    def __getitem__(self, name: str) -> FiveMatrix:
        if name[0] == "J":
            return self.J[int(name[1]) - 1]
        if name[0] == "K":
            return self.K[int(name[1]) - 1]
        if name == "P0":
            return self.P[3]
        return self.P[int(name[1]) - 1]

    def matrices(self) -> dict[str, np.ndarray]:
        return {name: self[name].matrix for name in POINCARE_NAMES}


def poincare_set() -> PoincareSet:
    return PoincareSet(
        J=tuple(_TABLE_JK[n] for n in ("J1", "J2", "J3")),
        K=tuple(_TABLE_JK[n] for n in ("K1", "K2", "K3")),
        P=tuple(_TABLE_P[n] for n in ("P1", "P2", "P3", "P0")),
    )


def differential_terms(name: str):
    """Terms (p, q, coeff) of the differential operator, p=None for constants."""
    if name not in _DIFFERENTIAL:
        raise ValueError(f"no differential operator tabulated for {name!r}")
    return _DIFFERENTIAL[name]


@dataclass(frozen=True)
class DifferentialAction:
    """Result of applying a generator's differential operator at a point.

    ``applied[r]`` is the operator applied to the coordinate function
    x_r, evaluated at the point; ``induced`` is the linear map extracted
    from those values, which must equal the tabulated generator matrix.
    """

    name: str
    point: FiveVector
    applied: np.ndarray
    induced: FiveMatrix


def differential_action(name: str, point: FiveVector) -> DifferentialAction:
    """Apply the tabulated differential operator to the coordinates at a point.

    Constant terms (translations) are folded into the fifth column of the
    induced map, matching their action on affine vectors (x, y, z, t, 1).
    """
    terms = differential_terms(name)
    coeff = np.zeros((5, 5), dtype=complex)   # A[q, p]: coeff of x_p d/dx_q
    const = np.zeros(5, dtype=complex)
    for p, q, s in terms:
        if p is None:
            const[q] += s
            coeff[q, 4] += s
        else:
            coeff[q, p] += s
    linear = coeff.copy()
    if const.any():
        linear[:, 4] -= const
    applied = linear @ point.to_array().astype(complex) + const
    return DifferentialAction(
        name=name,
        point=point,
        applied=applied,
        induced=FiveMatrix(-coeff, f"induced({name})"),
    )


def finite_difference_matrix(name: str, point: FiveVector, step: float = 1e-6) -> np.ndarray:
    """Central-difference estimate of the induced map, for sanity checks.

    Column c is read off by perturbing the point along axis c and
    differencing the applied-to-coordinates vector.
    """
    terms = differential_terms(name)
    v = point.to_array()
    fd = np.zeros((5, 5), dtype=complex)
    for col in range(5):
        ec = np.zeros(5)
        ec[col] = step
        plus = _apply_terms(terms, v + ec)
        minus = _apply_terms(terms, v - ec)
        fd[:, col] = -(plus - minus) / (2 * step)
    return fd


def _apply_terms(terms, v: np.ndarray) -> np.ndarray:
    out = np.zeros(5, dtype=complex)
    for p, q, s in terms:
        factor = 1.0 if p is None else v[p]
        out[q] += s * factor
    return out


def exponentiate(generator: FiveMatrix, theta: float) -> FiveMatrix:
    """Group element exp(i * theta * G); real-valued for all tabulated G."""
    if not np.isfinite(theta):
        raise ValueError("theta must be finite")
    mat = expm(1j * theta * generator.matrix)
    return FiveMatrix(mat, f"exp(i*{theta}*{generator.label})")


def translation_matrix(dx: float, dy: float, dz: float, dt: float) -> FiveMatrix:
    """Affine translation: identity plus fifth-column offsets (dx, dy, dz, dt).

    Equals exp(-i(dx P1 + dy P2 + dz P3) + i dt P0); the exponent is
    nilpotent so the series terminates after the linear term.
    """
    mat = np.eye(5, dtype=complex)
    mat[0, 4], mat[1, 4], mat[2, 4], mat[3, 4] = dx, dy, dz, dt
    return FiveMatrix(mat, f"T({dx},{dy},{dz},{dt})")


def check_poincare(pset: PoincareSet | None = None) -> AlgebraReport:
    """All 45 commutator pairs of the Poincare set against the computed table.

    The Lorentz block matches the printed relations; the mixed J-P, K-P,
    K-P0 relations are verified against what the matrices themselves
    satisfy.  Printed forms that disagree are carried in the report
    entries (``matches_printed=False``) rather than enforced.
    """
    pset = pset or poincare_set()
    mats = pset.matrices()
    entries = []
    for i, a in enumerate(POINCARE_NAMES):
        for b in POINCARE_NAMES[i + 1:]:
            comm = mats[a] @ mats[b] - mats[b] @ mats[a]
            combo = expected_poincare(a, b)
            expected = np.zeros_like(comm)
            for name, coeff in combo.items():
                expected = expected + coeff * mats[name]
            residual = float(np.max(np.abs(comm - expected)))
            printed_rhs, matches = _printed_poincare(a, b, combo)
            entries.append(RelationEntry(
                lhs=f"[{a},{b}]",
                rhs=format_combo(combo, POINCARE_NAMES),
                residual=residual,
                printed_rhs=printed_rhs,
                matches_printed=matches,
            ))
    return AlgebraReport(family="poincare", entries=tuple(entries))


def _printed_poincare(a: str, b: str, combo) -> tuple[str, bool]:
    """Printed right-hand side for a Poincare pair, where one exists."""
    fa, fb = a[0], b[0]
    computed = format_combo(combo, POINCARE_NAMES)
    if fa in "JK" and fb in "JK":
        return computed, True               # Lorentz block prints consistently
    if fa == "P" or fb == "P":
        pa, other = (a, b) if fa == "P" else (b, a)
        if other[0] == "P":
            return "0", computed == "0"     # translations print as abelian
        if pa == "P0" and other[0] == "J":
            return "0", computed == "0"     # [P0, J_i] = 0 prints consistently
        if pa == "P0" and other[0] == "K":
            return PRINTED_EQ502["[P_0, K_i]"], computed == "0"
        if other[0] == "J":
            return PRINTED_EQ502["[P_i, J_k]"], False
        return PRINTED_EQ502["[P_i, K_k]"], False
    return computed, True


def preserve_metric_check(generator: FiveMatrix, thetas) -> float:
    """Max over thetas of || exp(i theta G)^T eta exp(i theta G) - eta ||_maxabs."""
    eta = METRIC.astype(complex)
    worst = 0.0
    for theta in thetas:
        m = exponentiate(generator, theta).matrix
        worst = max(worst, float(np.max(np.abs(m.T @ eta @ m - eta))))
    return worst


def matrix_to_json(matrix: np.ndarray) -> list[list[list[float]]]:
    """Row-major nested lists of [re, im] pairs."""
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(matrix, dtype=complex)]


def extract_structure(matrices: dict[str, np.ndarray]) -> dict[str, dict[str, complex]]:
    """Least-squares structure-constant vectors for every unordered pair."""
    names = list(matrices)
    basis = CoefficientBasis(matrices)
    out = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            comm = matrices[a] @ matrices[b] - matrices[b] @ matrices[a]
            combo, _ = basis.extract(comm)
            out[f"[{a},{b}]"] = combo
    return out
