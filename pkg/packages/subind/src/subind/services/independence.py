"""The six combinatorial independence types between two disjoint sets.

All checks run on masks of a (possibly conditioned) set function g and return
the first failing equality in enumeration order as the witness: the
conditioning set X in cardinality-then-lexicographic order, the element j
ascending inside it. Two-sided checks (MI, SMI, PI) scan the B side first,
elements of B against subsets of A, before the A side.
"""

import logging
from dataclasses import dataclass

from subind.errors import OverlapError
from subind.models.functions import SetFunction
from subind.models.reports import IndependenceReport, IndependenceType, Verdict, Witness
from subind.models.sets import Subset, iter_bits
from subind.models.values import values_equal
from subind.services.enumeration import check_cap, iter_submasks

logger = logging.getLogger(__name__)

T = IndependenceType

IMPLICATIONS: tuple[tuple[IndependenceType, IndependenceType], ...] = (
    (T.MODI, T.JI),
    (T.JI, T.MI),
    (T.MI, T.SMI),
    (T.SMI, T.MI),
    (T.SMI, T.PI),
    (T.MODI, T.SMODI),
    (T.SMODI, T.MI),
)


@dataclass(frozen=True)
class MCondition:
    """𝓜(S1, S2): f({j}|X) = f({j}) for every X ⊆ S2 and j ∈ S1 \\ X."""

    s1: Subset
    s2: Subset


def _witness(g: SetFunction, target: int, given: int) -> Witness | None:
    observed, expected = g.gain_of(target, given), g.value_of(target)
    if values_equal(observed, expected, absolute=g.absolute_tolerance):
        return None
    return Witness(
        target=Subset(g.ground, target),
        given=Subset(g.ground, given),
        observed=observed,
        expected=expected,
    )


def _m_condition_witness(g: SetFunction, s1: int, s2: int) -> Witness | None:
    for x in iter_submasks(s2):
        for j in iter_bits(s1 & ~x):
            w = _witness(g, 1 << j, x)
            if w is not None:
                return w
    return None


def _singletons_given(g: SetFunction, elements: int, given: int) -> Witness | None:
    for j in iter_bits(elements):
        w = _witness(g, 1 << j, given)
        if w is not None:
            return w
    return None


def _ji(g: SetFunction, a: int, b: int) -> Witness | None:
    return _witness(g, a, b)


def _mi(g: SetFunction, a: int, b: int) -> Witness | None:
    return _singletons_given(g, b, a) or _singletons_given(g, a, b)


def _pi(g: SetFunction, a: int, b: int) -> Witness | None:
    for i in iter_bits(a):
        for j in iter_bits(b):
            w = _witness(g, 1 << j, 1 << i) or _witness(g, 1 << i, 1 << j)
            if w is not None:
                return w
    return None


def _smi(g: SetFunction, a: int, b: int) -> Witness | None:
    for elements, side in ((b, a), (a, b)):
        for x in iter_submasks(side):
            w = _singletons_given(g, elements, x)
            if w is not None:
                return w
    return None


def _modi(g: SetFunction, a: int, b: int) -> Witness | None:
    return _m_condition_witness(g, a | b, a | b)


def _smodi(g: SetFunction, a: int, b: int) -> Witness | None:
    return _m_condition_witness(g, a | b, a) or _m_condition_witness(g, a | b, b)


_CHECKS = {
    T.JI: _ji,
    T.MI: _mi,
    T.PI: _pi,
    T.SMI: _smi,
    T.MODI: _modi,
    T.SMODI: _smodi,
}

QUANTIFIED = frozenset({T.SMI, T.MODI, T.SMODI})


def _prepare(
    f: SetFunction, a: Subset, b: Subset, given: Subset | None, quantified: bool = True
) -> SetFunction:
    f.require(a, b)
    shared = a.intersection(b)
    if shared:
        raise OverlapError(
            f"A and B share {shared}; independence is defined for disjoint sets, "
            "so remove the intersection from both before checking"
        )
    if quantified:
        check_cap(len(a) + len(b), "A ∪ B")
    return f.condition_on(given) if given is not None else f


def check_type(
    f: SetFunction,
    a: Subset,
    b: Subset,
    t: IndependenceType,
    given: Subset | None = None,
) -> Verdict:
    """Decide one independence type; with ``given`` C the check runs on f(·|C)."""
    g = _prepare(f, a, b, given, quantified=t in QUANTIFIED)
    witness = _CHECKS[t](g, a.mask, b.mask)
    return Verdict(label=str(t), holds=witness is None, witness=witness)


def check_m_condition(f: SetFunction, m: MCondition) -> Verdict:
    """Decide 𝓜(S1, S2) by enumerating X ⊆ S2."""
    f.require(m.s1, m.s2)
    check_cap(len(m.s2), "S2")
    witness = _m_condition_witness(f, m.s1.mask, m.s2.mask)
    return Verdict(label="M(S1,S2)", holds=witness is None, witness=witness)


def lattice_violations(
    verdicts: dict[IndependenceType, Verdict],
) -> tuple[tuple[IndependenceType, IndependenceType], ...]:
    """Implications whose premise holds and whose conclusion fails."""
    return tuple(
        (p, c) for p, c in IMPLICATIONS if verdicts[p].holds and not verdicts[c].holds
    )


def classify(
    f: SetFunction, a: Subset, b: Subset, given: Subset | None = None
) -> IndependenceReport:
    """Run all six checks on (A, B) and list any lattice implication they break."""
    g = _prepare(f, a, b, given)
    verdicts: dict[IndependenceType, Verdict] = {}
    for t, check in _CHECKS.items():
        witness = check(g, a.mask, b.mask)
        verdicts[t] = Verdict(label=str(t), holds=witness is None, witness=witness)
    violations = lattice_violations(verdicts)
    validated = f.validated_submodular
    if violations and validated:
        logger.error("Lattice violated for A=%s, B=%s: %s", a, b, violations)
    return IndependenceReport(
        a=a,
        b=b,
        given=given,
        verdicts=verdicts,
        exact=f.exact,
        validated_submodular=validated,
        violations=violations,
    )
