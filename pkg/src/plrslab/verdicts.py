"""Completeness classification with machine-checkable proof provenance.

A verdict is one of

  * Complete(proof)            -- a named rule certifies completeness,
  * Incomplete(n, witness)     -- Brown's gap first goes negative at term n,
                                  and witness = 1 + H_1 + ... + H_{n-1} is the
                                  smallest integer with no distinct-terms sum,
  * ConjecturallyComplete(h)   -- no gap violation up to horizon h and no
                                  proof rule fired; completeness then rests on
                                  the open first-failure-window conjecture.

The classifier applies rules in a fixed order so provenance is
deterministic: gap scan, the all-positive characterization, closed-form
family bounds, the merge-last-two contrapositive, and the strict-window
sufficient criterion.  An independent subset-sum oracle (a bit-vector
dynamic program) is provided for cross-checking verdicts against ground
truth on bounded ranges.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence as SequenceT

from .errors import CapTooLargeError
from .seqcore import CoefficientVector, brown_gap_series, sequence_for

log = logging.getLogger(__name__)

#: Default ceiling for subset-sum cross-checks (largest target probed).
DEFAULT_ORACLE_CAP = 10**6

#: Default memory budget for reachability bitmaps, in bits.
BITMAP_BUDGET_BITS = 2**28


class ProofRule(str, enum.Enum):
    """Named completeness rules a verdict may cite."""

    ALL_POSITIVE = "all_positive"
    GEOMETRIC_L1 = "geometric_l1"
    FAMILY_SINGLE_ONE = "family_single_one"
    FAMILY_DOUBLE_ONE = "family_double_one"
    FAMILY_G_ONES = "family_g_ones"
    DECREASE_LAST = "decrease_last"
    MERGE_LAST = "merge_last"
    WEAK_WINDOW = "weak_window"


@dataclass(frozen=True)
class ProofTag:
    """A rule name plus the rule-specific integers it was applied with."""

    rule: ProofRule
    parameters: tuple[tuple[str, int], ...] = ()

    @classmethod
    def make(cls, rule: ProofRule, **params: int) -> "ProofTag":
        return cls(rule, tuple(sorted(params.items())))

    @property
    def params(self) -> dict[str, int]:
        return dict(self.parameters)


class VerdictStatus(str, enum.Enum):
    COMPLETE = "complete"
    INCOMPLETE = "incomplete"
    CONJECTURALLY_COMPLETE = "conjecturally_complete"


@dataclass(frozen=True)
class CompletenessVerdict:
    status: VerdictStatus
    proof: Optional[ProofTag] = None
    first_failure_index: Optional[int] = None
    witness: Optional[int] = None
    horizon: Optional[int] = None

    @classmethod
    def complete(cls, proof: ProofTag) -> "CompletenessVerdict":
        return cls(VerdictStatus.COMPLETE, proof=proof)

    @classmethod
    def incomplete(cls, first_failure_index: int, witness: int) -> "CompletenessVerdict":
        return cls(
            VerdictStatus.INCOMPLETE,
            first_failure_index=first_failure_index,
            witness=witness,
        )

    @classmethod
    def conjecturally_complete(cls, horizon: int) -> "CompletenessVerdict":
        return cls(VerdictStatus.CONJECTURALLY_COMPLETE, horizon=horizon)

    @property
    def is_complete(self) -> bool:
        return self.status is VerdictStatus.COMPLETE

    @property
    def is_incomplete(self) -> bool:
        return self.status is VerdictStatus.INCOMPLETE

    @property
    def is_conjectural(self) -> bool:
        return self.status is VerdictStatus.CONJECTURALLY_COMPLETE


@dataclass(frozen=True)
class AnalysisConfig:
    """Tunables for classification.

    horizon: scan depth; when None each vector uses max(2L-1, 2), and explicit
    values below that floor are raised to it, so the scan never undershoots
    the conjectured window.
    oracle_cap: largest target the subset-sum oracle is asked to cross-check.
    """

    horizon: Optional[int] = None
    oracle_cap: int = DEFAULT_ORACLE_CAP

    def __post_init__(self) -> None:
        if self.horizon is not None and self.horizon < 1:
            raise ValueError("horizon must be >= 1")
        if self.oracle_cap < 1:
            raise ValueError("oracle_cap must be >= 1")

    def effective_horizon(self, length: int) -> int:
        floor = max(2 * length - 1, 2)
        if self.horizon is None:
            return floor
        return max(self.horizon, floor)


@dataclass(frozen=True)
class ScanResult:
    first_failure: Optional[int]
    gaps: tuple[int, ...]


def brown_scan(cv: CoefficientVector, horizon: int) -> ScanResult:
    """Scan B_1..B_horizon and report the least index with a negative gap."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    gaps = brown_gap_series(cv, horizon)
    first = next((i + 1 for i, g in enumerate(gaps) if g < 0), None)
    return ScanResult(first, tuple(gaps))


def weak_window_check(cv: CoefficientVector) -> bool:
    """Strict-window sufficient criterion for completeness.

    True iff B_n >= 0 for n < L and B_n > 0 for L <= n <= 2L-1.  For L = 1
    the window is vacuous and the criterion degenerates to c_1 <= 2 (a
    single-coefficient generator [c] fails at the second term iff c > 2).
    """
    L = len(cv)
    if L == 1:
        return cv.coefficients[0] <= 2
    gaps = brown_gap_series(cv, 2 * L - 1)
    head_ok = all(g >= 0 for g in gaps[: L - 1])
    window_ok = all(g > 0 for g in gaps[L - 1 :])
    return head_ok and window_ok


# --------------------------------------------------------------------------
# Subset-sum oracle


@dataclass(frozen=True)
class Reachability:
    """Bitmap of subset sums over [1, cap]; bit m is set iff m is reachable."""

    cap: int
    bitmap: int

    def is_reachable(self, m: int) -> bool:
        if not 1 <= m <= self.cap:
            raise ValueError(f"target {m} outside [1, {self.cap}]")
        return bool((self.bitmap >> m) & 1)

    def smallest_missing(self) -> Optional[int]:
        full = (1 << (self.cap + 1)) - 1
        miss = ~self.bitmap & full & ~1  # ignore bit 0 (the empty sum)
        if miss == 0:
            return None
        return (miss & -miss).bit_length() - 1

    def missing(self) -> list[int]:
        return [m for m in range(1, self.cap + 1) if not (self.bitmap >> m) & 1]


def subset_sum_reachable(
    terms: SequenceT[int], cap: int, *, budget_bits: int = BITMAP_BUDGET_BITS
) -> Reachability:
    """Which targets in [1, cap] are sums of distinct listed terms.

    Bit-vector dynamic program: each term is folded in once with a single
    shift-or, so the whole table costs O(len(terms) * cap / wordsize).
    Terms must be positive and nondecreasing.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if cap + 1 > budget_bits:
        raise CapTooLargeError(
            f"cap {cap} needs {cap + 1} bits, over the {budget_bits}-bit budget"
        )
    prev = 0
    for t in terms:
        if t < 1:
            raise ValueError("terms must be positive")
        if t < prev:
            raise ValueError("terms must be nondecreasing")
        prev = t
    full = (1 << (cap + 1)) - 1
    bits = 1
    for t in terms:
        if t > cap:
            break  # nondecreasing, so no later term can contribute either
        bits = (bits | (bits << t)) & full
    return Reachability(cap, bits)


def is_complete_up_to(
    cv: CoefficientVector, cap: int, *, budget_bits: int = BITMAP_BUDGET_BITS
) -> tuple[bool, Optional[int]]:
    """Ground-truth completeness over [1, cap], plus the smallest missing target.

    Materializes terms until their running sum reaches cap and runs the
    subset-sum oracle over them.  Any target reachable with deeper terms is
    already reachable within that prefix, because gaps in reachability only
    open at a negative Brown gap and every later term overshoots the witness.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if cv.coefficients == (1,):
        # Constant ones: m is the sum of the first m terms.
        return True, None
    seq = sequence_for(cv)
    terms: list[int] = []
    total = 0
    n = 0
    while total < cap:
        n += 1
        t = seq.term(n)
        terms.append(t)
        total += t
    reach = subset_sum_reachable(terms, cap, budget_bits=budget_bits)
    miss = reach.smallest_missing()
    return miss is None, miss


# --------------------------------------------------------------------------
# Classification


def _incomplete_at(cv: CoefficientVector, n: int) -> CompletenessVerdict:
    witness = 1 + sequence_for(cv).partial_sum(n - 1)
    return CompletenessVerdict.incomplete(n, witness)


def _incomplete_beyond(cv: CoefficientVector, horizon: int) -> CompletenessVerdict:
    """Locate the failure index of a theorem-certified incomplete vector.

    Reached only when a closed-form rule proves incompleteness but the scan
    to `horizon` found no negative gap, i.e. the failure lies beyond the
    conjectured window.  The gap must go negative eventually, so keep
    doubling the scan depth (with a generous stop to surface logic errors).
    """
    L = len(cv)
    depth = max(2 * horizon, 4 * L)
    limit = max(4096, 256 * L)
    while depth <= limit:
        scan = brown_scan(cv, depth)
        if scan.first_failure is not None:
            if scan.first_failure > max(2 * L - 1, 2):
                log.warning(
                    "vector %s first fails at term %d, beyond max(2L-1, 2) = %d",
                    cv,
                    scan.first_failure,
                    max(2 * L - 1, 2),
                )
            return _incomplete_at(cv, scan.first_failure)
        depth *= 2
    raise RuntimeError(
        f"{cv} is certified incomplete but shows no negative gap within {limit} terms"
    )


def _all_positive_complete_shape(coeffs: tuple[int, ...]) -> bool:
    L = len(coeffs)
    return coeffs == (1,) * L or coeffs == (1,) * (L - 1) + (2,)


_BOUND_RULE_TAGS = {
    "single_one": ProofRule.FAMILY_SINGLE_ONE,
    "double_one": ProofRule.FAMILY_DOUBLE_ONE,
    "g_ones_plateau": ProofRule.FAMILY_G_ONES,
    "g_ones_ramp": ProofRule.FAMILY_G_ONES,
}


def classify(
    cv: CoefficientVector, config: Optional[AnalysisConfig] = None
) -> CompletenessVerdict:
    """Classify a generator as complete, incomplete, or conjecturally complete.

    Rule order is fixed: (a) gap scan to the horizon, (b) the all-positive
    characterization, (c) exact bounds for the [1 x g, 0 x k, N] families
    (completeness below the bound, certified incompleteness above it),
    (d) completeness of the merged generator [c_1, ..., c_{L-1} + c_L]
    implies completeness here, (e) the strict-window criterion, and
    otherwise (f) ConjecturallyComplete at the scanned horizon.
    """
    # Imported here to break the module cycle: families drives its empirical
    # searches through classify.
    from . import families

    cfg = config or AnalysisConfig()
    L = len(cv)
    horizon = cfg.effective_horizon(L)
    coeffs = cv.coefficients

    scan = brown_scan(cv, horizon)
    if scan.first_failure is not None:
        return _incomplete_at(cv, scan.first_failure)

    if min(coeffs) >= 1:
        if not _all_positive_complete_shape(coeffs):
            # Characterization says incomplete; the scan above must already
            # have caught it (failure lands by term L+1), so this is a
            # defensive fallback.
            return _incomplete_beyond(cv, horizon)
        if coeffs == (2,):
            return CompletenessVerdict.complete(ProofTag.make(ProofRule.GEOMETRIC_L1))
        return CompletenessVerdict.complete(ProofTag.make(ProofRule.ALL_POSITIVE))

    shape = families.family_shape(coeffs)
    if shape is not None:
        bound = families.family_bound(shape.g, shape.k)
        if bound is not None:
            if shape.n <= bound.max_n:
                tag = ProofTag.make(
                    _BOUND_RULE_TAGS[bound.rule],
                    g=shape.g,
                    k=shape.k,
                    last=shape.n,
                    bound=bound.max_n,
                )
                return CompletenessVerdict.complete(tag)
            return _incomplete_beyond(cv, horizon)

    if L >= 2:
        merged = CoefficientVector(coeffs[:-2] + (coeffs[-2] + coeffs[-1],))
        inner = classify(merged, cfg)
        if inner.is_complete:
            tag = ProofTag.make(
                ProofRule.MERGE_LAST, merged_last=coeffs[-2] + coeffs[-1]
            )
            return CompletenessVerdict.complete(tag)

    if weak_window_check(cv):
        tag = ProofTag.make(ProofRule.WEAK_WINDOW, window_end=max(2 * L - 1, 2))
        return CompletenessVerdict.complete(tag)

    return CompletenessVerdict.conjecturally_complete(horizon)


def verdict_to_json(
    cv: CoefficientVector,
    verdict: CompletenessVerdict,
    gaps: Iterable[int],
) -> dict:
    """Serialize a verdict to the wire schema consumed by the CLI."""
    proof = None
    if verdict.proof is not None:
        proof = {"rule": verdict.proof.rule.value, "parameters": verdict.proof.params}
    return {
        "vector": list(cv.coefficients),
        "verdict": verdict.status.value,
        "proof": proof,
        "first_failure": verdict.first_failure_index,
        "witness": verdict.witness,
        "horizon": verdict.horizon,
        "gaps": list(gaps),
    }
