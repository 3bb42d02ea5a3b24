"""Further properties of combinatorial independence: data processing,
coverage preimages and Markov chains, k-set independence, union non-closure."""

import logging
from collections.abc import Sequence

from subind.errors import InvariantViolationError, OverlapError, PreconditionError
from subind.models.functions import CoverageFunction, CoverageMap, SetFunction
from subind.models.reports import (
    DataProcessingReport,
    IndependenceType,
    MarkovChainReport,
    MultisetMode,
    MultisetVerdict,
    UnionReport,
)
from subind.models.sets import Subset
from subind.models.values import is_zero, value_leq
from subind.services.independence import check_type
from subind.services.measures import mutual_information, total_correlation

logger = logging.getLogger(__name__)


def check_data_processing(
    f: SetFunction, a: Subset, b: Subset, c: Subset
) -> DataProcessingReport:
    """If A ⊥ C | B, then I_f(A;C) <= I_f(A;B) and I_f(A;C) <= I_f(C;B)."""
    f.require(a, b, c)
    absolute = f.absolute_tolerance
    conditional = mutual_information(f, a, c, b)
    i_ac = mutual_information(f, a, c)
    i_ab = mutual_information(f, a, b)
    i_cb = mutual_information(f, c, b)

    sufficient = "A ⊆ B" if a.issubset(b) else "C ⊆ B" if c.issubset(b) else None
    premise = is_zero(conditional.value, absolute=absolute)
    conclusion: bool | None = None
    if premise:
        conclusion = value_leq(i_ac.value, i_ab.value, absolute=absolute) and (
            value_leq(i_ac.value, i_cb.value, absolute=absolute)
        )
        if not conclusion and f.validated_submodular:
            logger.error("Data processing failed for A=%s, B=%s, C=%s", a, b, c)
            raise InvariantViolationError(
                f"I(A;C|B) = 0 but I(A;C) = {i_ac.value} exceeds I(A;B) = {i_ab.value} "
                f"or I(C;B) = {i_cb.value} for A={a}, B={b}, C={c}"
            )
    return DataProcessingReport(
        conditional=conditional,
        i_ac=i_ac,
        i_ab=i_ab,
        i_cb=i_cb,
        premise_holds=premise,
        sufficient_condition=sufficient,
        conclusion_holds=conclusion,
    )


def coverage_preimage(cov: CoverageMap, concepts: Subset) -> Subset:
    """γ⁻¹(concepts): every element covering at least one of ``concepts``."""
    if concepts.ground != cov.universe:
        raise PreconditionError("concepts must be a subset of the coverage universe")
    return Subset(cov.ground, cov.preimage_of(concepts.mask))


def check_markov_chain(
    cov: CoverageMap, a: Subset, b: Subset, b_u: Subset
) -> MarkovChainReport:
    """Measure I_f(A; γ⁻¹(B_U) | B) under f = w(γ(·)).

    The chain A → B → γ⁻¹(B_U) is expected to have zero conditional
    information, but instances exist where it does not; this reports the
    measurement instead of asserting it.
    """
    covered = cov.image(b)
    if not b_u.issubset(covered):
        raise PreconditionError(f"B_U = {b_u} is not contained in γ(B) = {covered}")
    f = CoverageFunction(cov)
    preimage = coverage_preimage(cov, b_u)
    measure = mutual_information(f, a, preimage, b)
    holds = is_zero(measure.value)
    if not holds:
        logger.info("Markov-chain property fails: I(A;γ⁻¹(B_U)|B) = %s", measure.value)
    return MarkovChainReport(preimage=preimage, measure=measure, holds=holds)


def check_multiset(
    f: SetFunction, sets: Sequence[Subset], mode: MultisetMode
) -> MultisetVerdict:
    """Mutual independence (C_f = 0) or pairwise joint independence of k sets."""
    if not sets:
        raise PreconditionError("k-set independence needs at least one set")
    f.require(*sets)
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not sets[i].isdisjoint(sets[j]):
                raise OverlapError(
                    f"sets #{i} and #{j} share {sets[i] & sets[j]}; "
                    "k-set independence is defined for pairwise disjoint sets"
                )

    if mode is MultisetMode.MUTUAL:
        tc = total_correlation(f, sets)
        holds = is_zero(tc.value, absolute=f.absolute_tolerance)
        return MultisetVerdict(mode=mode, holds=holds, total_correlation=tc)

    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            verdict = check_type(f, sets[i], sets[j], IndependenceType.JI)
            if not verdict.holds:
                return MultisetVerdict(
                    mode=mode, holds=False, offending_pair=(i, j), pair_verdict=verdict
                )
    return MultisetVerdict(mode=mode, holds=True)


def check_union_nonclosure(f: SetFunction, a: Subset, b: Subset, c: Subset) -> UnionReport:
    """Report A ⊥ B, A ⊥ C and A ⊥ B ∪ C; the first two need not give the third."""
    absolute = f.absolute_tolerance
    ab = mutual_information(f, a, b)
    ac = mutual_information(f, a, c)
    a_bc = mutual_information(f, a, b | c)
    return UnionReport(
        ab=ab,
        ac=ac,
        a_bc=a_bc,
        holds_ab=is_zero(ab.value, absolute=absolute),
        holds_ac=is_zero(ac.value, absolute=absolute),
        holds_a_bc=is_zero(a_bc.value, absolute=absolute),
    )
