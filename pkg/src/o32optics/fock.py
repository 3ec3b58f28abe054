"""Truncated two-mode bosonic Fock space and ladder-operator matrices.

The Hilbert space is spanned by occupation states |n1, n2> with
0 <= n1, n2 <= n_max, so the total dimension is (n_max + 1)**2.  Basis
ordering is row-major with n2 running fastest:

    index(n1, n2) = n1 * (n_max + 1) + n2

Truncation convention: the raising operator annihilates the top state
(a_dag |n_max> = 0) so that creation stays the exact adjoint of
annihilation.  Operator identities of the untruncated algebra therefore
hold only away from the cutoff; ``ValiditySubspace`` selects the block
of basis states on which they are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "FockSpace",
    "BosonicOperator",
    "ValiditySubspace",
    "make_space",
    "annihilation",
    "creation",
    "number",
    "quadratures",
    "identity",
    "commutator",
    "dagger",
    "restrict",
    "basis_state",
]


def _frozen(matrix: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(matrix, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class FockSpace:
    """Truncated two-mode occupation basis with per-mode cutoff ``n_max``."""

    n_max: int

    @property
    def dim(self) -> int:
        return (self.n_max + 1) ** 2

    def index(self, n1: int, n2: int) -> int:
        """Flat index of |n1, n2> (n2 fastest)."""
        if not (0 <= n1 <= self.n_max and 0 <= n2 <= self.n_max):
            raise ValueError(f"occupation ({n1}, {n2}) outside cutoff {self.n_max}")
        return n1 * (self.n_max + 1) + n2

    def occupations(self, index: int) -> tuple[int, int]:
        """Inverse of :meth:`index`."""
        if not 0 <= index < self.dim:
            raise ValueError(f"index {index} outside basis of size {self.dim}")
        return divmod(index, self.n_max + 1)


@dataclass(frozen=True)
class BosonicOperator:
    """Dense complex matrix over a :class:`FockSpace` basis, with a label."""

    matrix: np.ndarray
    space: FockSpace
    label: str = ""

    def __post_init__(self):
        if self.matrix.shape != (self.space.dim, self.space.dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match space dim {self.space.dim}"
            )
        object.__setattr__(self, "matrix", _frozen(self.matrix))

    def dagger(self) -> "BosonicOperator":
        return BosonicOperator(self.matrix.conj().T, self.space, self.label + "^dag")

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def __matmul__(self, other: "BosonicOperator") -> "BosonicOperator":
        _same_space(self, other)
        return BosonicOperator(self.matrix @ other.matrix, self.space,
                               f"{self.label}{other.label}")


@dataclass(frozen=True)
class ValiditySubspace:
    """Basis states with n1 <= n_max - margin and n2 <= n_max - margin.

    With margin 0 this is the whole space.  Bilinear operators (which move
    each occupation by at most one) are exact on margin 1; the quadratic
    generators (which move occupations by up to two) need margin 2.
    """

    space: FockSpace
    margin: int = 0

    def __post_init__(self):
        if self.margin < 0 or self.margin > self.space.n_max:
            raise ValueError(f"margin {self.margin} outside [0, {self.space.n_max}]")

    @property
    def indices(self) -> np.ndarray:
        top = self.space.n_max - self.margin
        n = self.space.n_max + 1
        return np.array(
            [n1 * n + n2 for n1 in range(top + 1) for n2 in range(top + 1)],
            dtype=int,
        )

    @property
    def dim(self) -> int:
        return (self.space.n_max - self.margin + 1) ** 2

    def contains(self, n1: int, n2: int) -> bool:
        top = self.space.n_max - self.margin
        return 0 <= n1 <= top and 0 <= n2 <= top


def make_space(n_max: int) -> FockSpace:
    """Create a truncated two-mode space; rejects n_max < 2."""
    if int(n_max) != n_max or n_max < 2:
        raise ValueError(
            f"n_max must be an integer >= 2 (quadratic operators need it), got {n_max}"
        )
    return FockSpace(int(n_max))


def _single_mode_lowering(n_max: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, n_max + 1)), 1).astype(complex)


def annihilation(mode: int, space: FockSpace) -> BosonicOperator:
    """Step-down operator for the given mode (1 or 2).

    Matrix element <n1-1, n2| a_1 |n1, n2> = sqrt(n1), analogously for
    mode 2; everything else vanishes.
    """
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode}")
    a = _single_mode_lowering(space.n_max)
    eye = np.eye(space.n_max + 1, dtype=complex)
    mat = np.kron(a, eye) if mode == 1 else np.kron(eye, a)
    return BosonicOperator(mat, space, f"a{mode}")


def creation(mode: int, space: FockSpace) -> BosonicOperator:
    """Step-up operator: exact conjugate transpose of :func:`annihilation`.

    At the cutoff the raising action truncates to zero instead of leaving
    the space.
    """
    a = annihilation(mode, space)
    return BosonicOperator(a.matrix.conj().T, space, f"a{mode}^dag")


def number(mode: int, space: FockSpace) -> BosonicOperator:
    op = creation(mode, space) @ annihilation(mode, space)
    return BosonicOperator(op.matrix, space, f"N{mode}")


def quadratures(mode: int, space: FockSpace) -> tuple[BosonicOperator, BosonicOperator]:
    """Hermitian pair (x_i, P_i) with x = (a + a^dag)/sqrt2, P = i(a^dag - a)/sqrt2."""
    a = annihilation(mode, space).matrix
    ad = a.conj().T
    x = (a + ad) / np.sqrt(2.0)
    p = 1j * (ad - a) / np.sqrt(2.0)
    return (
        BosonicOperator(x, space, f"x{mode}"),
        BosonicOperator(p, space, f"P{mode}"),
    )


def identity(space: FockSpace) -> BosonicOperator:
    return BosonicOperator(np.eye(space.dim, dtype=complex), space, "I")


def commutator(a: BosonicOperator, b: BosonicOperator) -> BosonicOperator:
    """AB - BA; both operators must live on the same space."""
    _same_space(a, b)
    mat = a.matrix @ b.matrix - b.matrix @ a.matrix
    return BosonicOperator(mat, a.space, f"[{a.label},{b.label}]")


def dagger(a: BosonicOperator) -> BosonicOperator:
    return a.dagger()


def restrict(a: BosonicOperator, sub: ValiditySubspace) -> np.ndarray:
    """Submatrix of ``a`` over the valid basis states of ``sub``."""
    if sub.space != a.space:
        raise ValueError("subspace belongs to a different FockSpace")
    idx = sub.indices
    return a.matrix[np.ix_(idx, idx)]


def basis_state(space: FockSpace, n1: int, n2: int) -> np.ndarray:
    vec = np.zeros(space.dim, dtype=complex)
    vec[space.index(n1, n2)] = 1.0
    return vec


def _same_space(a: BosonicOperator, b: BosonicOperator) -> None:
    if a.space != b.space:
        raise ValueError(
            f"operators live on different spaces (n_max {a.space.n_max} vs {b.space.n_max})"
        )
