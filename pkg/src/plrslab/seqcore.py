"""Generators, exact term arithmetic, and Brown's gaps.

A generator is a coefficient list [c_1, ..., c_L] with L >= 1, c_1 >= 1,
c_L >= 1 and every entry nonnegative.  It defines the integer sequence

    H_1 = 1
    H_{n+1} = c_1 H_n + c_2 H_{n-1} + ... + c_n H_1 + 1     (1 <= n < L)
    H_{n+1} = c_1 H_n + c_2 H_{n-1} + ... + c_L H_{n+1-L}   (n >= L)

Terms are plain Python ints, so they stay exact at any size.  The n-th
Brown gap

    B_n = 1 + (H_1 + ... + H_{n-1}) - H_n

is the slack in Brown's completeness criterion: the sequence is complete
(every positive integer is a sum of distinct terms) exactly when B_n >= 0
for all n, and a negative gap at n certifies that 1 + H_1 + ... + H_{n-1}
has no such representation.

Indexing is 1-based throughout, matching the recurrence above.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    EmptyVectorError,
    LeadingZeroError,
    NegativeCoefficientError,
    TrailingZeroError,
    VectorValidationError,
)


@dataclass(frozen=True)
class CoefficientVector:
    """Validated, immutable generator [c_1, ..., c_L]."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise EmptyVectorError()
        for i, c in enumerate(coeffs):
            if not isinstance(c, int):
                raise VectorValidationError(f"coefficient c_{i + 1} = {c!r} is not an integer")
            if c < 0:
                raise NegativeCoefficientError(i + 1, c)
        if coeffs[0] == 0:
            raise LeadingZeroError()
        if coeffs[-1] == 0:
            raise TrailingZeroError()

    @classmethod
    def parse(cls, text: str) -> "CoefficientVector":
        """Parse a comma-separated coefficient list such as "1,0,4"."""
        parts = [p.strip() for p in text.split(",")]
        try:
            raw = [int(p) for p in parts]
        except ValueError:
            raise VectorValidationError(f"cannot parse coefficient vector {text!r}") from None
        return cls(tuple(raw))

    @property
    def length(self) -> int:
        return len(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coefficients) + "]"


def validate_coefficients(raw: Iterable[int]) -> CoefficientVector:
    """Validate a raw coefficient list and freeze it into a CoefficientVector.

    Accepts exactly the nonempty lists of nonnegative integers whose first
    and last entries are positive.
    """
    return CoefficientVector(tuple(raw))


class Sequence:
    """Lazily extended memo of terms and prefix sums for one generator.

    Single writer: extension happens on demand inside the instance, so a
    Sequence must not be shared across concurrently writing tasks.  Parallel
    workloads should create one instance per task (fully materialized
    prefixes, being plain lists of ints, are safe to hand around).
    """

    __slots__ = ("generator", "_terms", "_sums")

    def __init__(self, generator: CoefficientVector) -> None:
        self.generator = generator
        self._terms: list[int] = [1]
        self._sums: list[int] = [0, 1]  # _sums[k] = H_1 + ... + H_k

    def _extend_to(self, n: int) -> None:
        c = self.generator.coefficients
        L = len(c)
        terms = self._terms
        sums = self._sums
        while len(terms) < n:
            m = len(terms)  # H_1..H_m known, computing H_{m+1}
            if m < L:
                val = sum(c[i] * terms[m - 1 - i] for i in range(m)) + 1
            else:
                val = sum(c[i] * terms[m - 1 - i] for i in range(L))
            terms.append(val)
            sums.append(sums[-1] + val)

    def term(self, n: int) -> int:
        """H_n (1-based)."""
        if n < 1:
            raise ValueError("term index must be >= 1")
        self._extend_to(n)
        return self._terms[n - 1]

    def prefix(self, n: int) -> list[int]:
        """[H_1, ..., H_n] as a fresh list."""
        if n < 1:
            raise ValueError("prefix length must be >= 1")
        self._extend_to(n)
        return self._terms[:n]

    def partial_sum(self, n: int) -> int:
        """H_1 + ... + H_n, with the empty sum for n = 0."""
        if n < 0:
            raise ValueError("partial sum index must be >= 0")
        if n:
            self._extend_to(n)
        return self._sums[n]

    def gap(self, n: int) -> int:
        """Brown's gap B_n = 1 + (H_1 + ... + H_{n-1}) - H_n; may be negative."""
        if n < 1:
            raise ValueError("gap index must be >= 1")
        self._extend_to(n)
        return 1 + self._sums[n - 1] - self._terms[n - 1]

    def gaps(self, n: int) -> list[int]:
        """[B_1, ..., B_n].  B_1 = 0 always."""
        if n < 1:
            raise ValueError("gap count must be >= 1")
        self._extend_to(n)
        sums = self._sums
        terms = self._terms
        return [1 + sums[i] - terms[i] for i in range(n)]


@lru_cache(maxsize=None)
def sequence_for(cv: CoefficientVector) -> Sequence:
    # Shared per-process memo so repeated module-level calls stay O(1).
    return Sequence(cv)


def term(cv: CoefficientVector, n: int) -> int:
    """H_n for the given generator."""
    return sequence_for(cv).term(n)


def terms_prefix(cv: CoefficientVector, n: int) -> list[int]:
    """[H_1, ..., H_n] for the given generator."""
    return sequence_for(cv).prefix(n)


def brown_gap(cv: CoefficientVector, n: int) -> int:
    """B_n = 1 + sum(H_1..H_{n-1}) - H_n for the given generator."""
    return sequence_for(cv).gap(n)


def brown_gap_series(cv: CoefficientVector, n: int) -> list[int]:
    """[B_1, ..., B_n], aligned with terms_prefix(cv, n).

    Satisfies B_1 = 0 and the recurrence B_{n+1} - B_n = 2 H_n - H_{n+1}.
    """
    return sequence_for(cv).gaps(n)
