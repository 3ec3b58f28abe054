"""Ten O(3,2) generators built from two-mode ladder operators, with checks.

The generator set combines the rotation triple J (mode-exchange
bilinears), the boost triples K and Q (two-photon quadratics), and the
compact generator S0 = (N1 + N2 + 1)/2.  The subsets {J1, J2, J3} and
{K3, Q3, S0} are the generator triples of the two standard two-mode
interferometers; neither subset closes once combined, which
:func:`completion_deficit` demonstrates numerically, and the full set of
ten closes exactly.

All commutator checks compute AB - BA on the full truncated space and
compare on a ``ValiditySubspace`` where truncation effects vanish
(margin 2 for the quadratic generators).

Sign convention caveat: the realization built from the operator
definitions transcribed here satisfies [K_i, Q_i] = +i S0,
[K_i, S0] = +i Q_i and [Q_i, S0] = -i K_i, i.e. the printed S0 relations
with S0 negated (the two conventions are related by the automorphism
S0 -> -S0).  Reports verify the satisfied form and flag each affected
entry via ``matches_printed=False``; see :mod:`o32optics.reports`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import (
    BosonicOperator,
    FockSpace,
    ValiditySubspace,
    annihilation,
    restrict,
)
from .reports import (
    AlgebraReport,
    CoefficientBasis,
    O32_NAMES,
    RelationEntry,
    expected_o32,
    format_combo,
)

__all__ = [
    "GeneratorSet",
    "build_generators",
    "check_lorentz_set",
    "check_q_set",
    "check_s0_set",
    "su11_triple",
    "su2_triple",
    "completion_deficit",
    "DeficitEntry",
    "FOCK_S0_SIGN",
]

# The oscillator realization satisfies the S0 relations with this sign
# relative to the printed ones (S0 -> -S0 automorphism).
FOCK_S0_SIGN = -1

LIE11_PAIRS = [("J1", "J2"), ("J1", "J3"), ("J2", "J3"),
               ("J1", "K1"), ("J1", "K2"), ("J1", "K3"),
               ("J2", "K1"), ("J2", "K2"), ("J2", "K3"),
               ("J3", "K1"), ("J3", "K2"), ("J3", "K3"),
               ("K1", "K2"), ("K1", "K3"), ("K2", "K3")]
LIE22_PAIRS = [("J1", "Q1"), ("J1", "Q2"), ("J1", "Q3"),
               ("J2", "Q1"), ("J2", "Q2"), ("J2", "Q3"),
               ("J3", "Q1"), ("J3", "Q2"), ("J3", "Q3"),
               ("Q1", "Q2"), ("Q1", "Q3"), ("Q2", "Q3")]
LIE33_PAIRS = [("K1", "Q1"), ("K1", "Q2"), ("K1", "Q3"),
               ("K2", "Q1"), ("K2", "Q2"), ("K2", "Q3"),
               ("K3", "Q1"), ("K3", "Q2"), ("K3", "Q3"),
               ("J1", "S0"), ("J2", "S0"), ("J3", "S0"),
               ("K1", "S0"), ("K2", "S0"), ("K3", "S0"),
               ("Q1", "S0"), ("Q2", "S0"), ("Q3", "S0")]
SU11_PAIRS = [("K3", "Q3"), ("Q3", "S0"), ("S0", "K3")]
SU2_PAIRS = [("J1", "J2"), ("J2", "J3"), ("J3", "J1")]


@dataclass(frozen=True)
class GeneratorSet:
    """The ten Hermitian O(3,2) generators over one Fock space."""

    J: tuple[BosonicOperator, BosonicOperator, BosonicOperator]
    K: tuple[BosonicOperator, BosonicOperator, BosonicOperator]
    Q: tuple[BosonicOperator, BosonicOperator, BosonicOperator]
    S0: BosonicOperator
    space: FockSpace

    def __getitem__(self, name: str) -> BosonicOperator:
        if name == "S0":
            return self.S0
        group = {"J": self.J, "K": self.K, "Q": self.Q}[name[0]]
        return group[int(name[1]) - 1]

    def as_dict(self) -> dict[str, BosonicOperator]:
        return {name: self[name] for name in O32_NAMES}

    def matrices(self) -> dict[str, np.ndarray]:
        return {name: self[name].matrix for name in O32_NAMES}

    def hermiticity_defect(self) -> float:
        return max(self[name].hermiticity_defect() for name in O32_NAMES)


def build_generators(space: FockSpace) -> GeneratorSet:
    """Assemble the ten generators from the two-mode ladder operators.

    Operator ordering is taken literally from the defining quadratics; no
    reordering or symmetrization is applied.
    """
    a1 = annihilation(1, space).matrix
    a2 = annihilation(2, space).matrix
    a1d, a2d = a1.conj().T, a2.conj().T

    J1 = (a1d @ a2 + a2d @ a1) / 2
    J2 = (a1d @ a2 - a2d @ a1) / 2j
    J3 = (a1d @ a1 - a2d @ a2) / 2
    K1 = -(a1d @ a1d + a1 @ a1 - a2d @ a2d - a2 @ a2) / 4
    K2 = 1j * (a1d @ a1d - a1 @ a1 + a2d @ a2d - a2 @ a2) / 4
    K3 = (a1d @ a2d + a1 @ a2) / 2
    Q1 = -1j * (a1d @ a1d - a1 @ a1 - a2d @ a2d + a2 @ a2) / 4
    Q2 = -(a1d @ a1d + a1 @ a1 + a2d @ a2d + a2 @ a2) / 4
    Q3 = 1j * (a1d @ a2d - a1 @ a2) / 2
    S0 = (a1d @ a1 + a2 @ a2d) / 2

    def op(mat, label):
        return BosonicOperator(mat, space, label)

    return GeneratorSet(
        J=(op(J1, "J1"), op(J2, "J2"), op(J3, "J3")),
        K=(op(K1, "K1"), op(K2, "K2"), op(K3, "K3")),
        Q=(op(Q1, "Q1"), op(Q2, "Q2"), op(Q3, "Q3")),
        S0=op(S0, "S0"),
        space=space,
    )


def _check_pairs(gens: GeneratorSet, pairs, family: str, margin: int) -> AlgebraReport:
    sub = ValiditySubspace(gens.space, margin)
    idx = sub.indices
    mats = gens.matrices()
    restricted = {name: m[np.ix_(idx, idx)] for name, m in mats.items()}
    entries = []
    for a, b in pairs:
        comm = mats[a] @ mats[b] - mats[b] @ mats[a]
        comm = comm[np.ix_(idx, idx)]
        combo = expected_o32(a, b, s0_sign=FOCK_S0_SIGN)
        printed = expected_o32(a, b, s0_sign=+1)
        expected = np.zeros_like(comm)
        for name, coeff in combo.items():
            expected = expected + coeff * restricted[name]
        residual = float(np.max(np.abs(comm - expected)))
        entries.append(RelationEntry(
            lhs=f"[{a},{b}]",
            rhs=format_combo(combo, O32_NAMES),
            residual=residual,
            printed_rhs=format_combo(printed, O32_NAMES),
            matches_printed=combo == printed,
        ))
    return AlgebraReport(family=family, entries=tuple(entries),
                         n_max=gens.space.n_max, margin=margin)


def check_lorentz_set(gens: GeneratorSet, margin: int = 2) -> AlgebraReport:
    """J/K block: [J,J] = i eps J, [J,K] = i eps K, [K,K] = -i eps J.

    All 15 unordered pairs of {J1..J3, K1..K3} are checked once each (the
    independent-pair enumeration rather than all ordered pairs).
    """
    return _check_pairs(gens, LIE11_PAIRS, "lie11", margin)


def check_q_set(gens: GeneratorSet, margin: int = 2) -> AlgebraReport:
    """[J,Q] = i eps Q and [Q,Q] = -i eps J over the 12 J/Q pairs."""
    return _check_pairs(gens, LIE22_PAIRS, "lie22", margin)


def check_s0_set(gens: GeneratorSet, margin: int = 2) -> AlgebraReport:
    """The 18 S0-completing pairs: K-Q, J-S0, K-S0, Q-S0.

    The report verifies the relations the realization satisfies
    ([K_i, Q_i] = +i S0, [J_i, S0] = 0, [K_i, S0] = +i Q_i,
    [Q_i, S0] = -i K_i) and flags every entry whose printed sign differs.
    """
    return _check_pairs(gens, LIE33_PAIRS, "lie33", margin)


def su11_triple(gens: GeneratorSet, margin: int = 2):
    """The squeezing interferometer triple (K3, Q3, S0) and its closure."""
    report = _check_pairs(gens, SU11_PAIRS, "su11", margin)
    return (gens["K3"], gens["Q3"], gens["S0"]), report


def su2_triple(gens: GeneratorSet, margin: int = 2):
    """The beam-splitter interferometer triple (J1, J2, J3) in isolation.

    The relations are the J block of the lie11 family, so the report
    carries that family tag.
    """
    report = _check_pairs(gens, SU2_PAIRS, "lie11", margin)
    return (gens["J1"], gens["J2"], gens["J3"]), report


@dataclass(frozen=True)
class DeficitEntry:
    lhs: str
    out_of_span_residual: float
    in_six_span: bool

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "out_of_span_residual": self.out_of_span_residual,
            "in_six_span": self.in_six_span,
        }


SIX_OPERATORS = ("J1", "J2", "J3", "K3", "Q3", "S0")


def completion_deficit(gens: GeneratorSet, margin: int = 2,
                       span_tolerance: float = 1e-12):
    """Show the six interferometer generators do not close, but all ten do.

    Every commutator of the six-operator set is least-squares projected
    onto the span of those six plus the identity; the max-abs residual of
    the projection is the out-of-span deficit.  Returns the per-pair
    deficits together with the worst ten-operator-span residual over all
    45 pairs of the full set (which must sit at machine precision).
    """
    sub = ValiditySubspace(gens.space, margin)
    idx = sub.indices
    mats = gens.matrices()
    restricted = {name: m[np.ix_(idx, idx)] for name, m in mats.items()}

    six_basis = CoefficientBasis({n: restricted[n] for n in SIX_OPERATORS})
    entries = []
    for i, a in enumerate(SIX_OPERATORS):
        for b in SIX_OPERATORS[i + 1:]:
            comm = mats[a] @ mats[b] - mats[b] @ mats[a]
            comm = comm[np.ix_(idx, idx)]
            _, resid = six_basis.extract(comm)
            entries.append(DeficitEntry(
                lhs=f"[{a},{b}]",
                out_of_span_residual=resid,
                in_six_span=resid < span_tolerance,
            ))

    ten_basis = CoefficientBasis(restricted)
    worst_ten = 0.0
    for i, a in enumerate(O32_NAMES):
        for b in O32_NAMES[i + 1:]:
            comm = mats[a] @ mats[b] - mats[b] @ mats[a]
            comm = comm[np.ix_(idx, idx)]
            _, resid = ten_basis.extract(comm)
            worst_ten = max(worst_ten, resid)
    return tuple(entries), worst_ten
