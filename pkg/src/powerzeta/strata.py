"""Partition-vector combinatorics and stratified Euler-characteristic counts.

Multisets of points on a space M are stratified by the vector
k = (k_1, k_2, ...) recording how many points carry each multiplicity i;
the weight sum(i * k_i) is the total point count.  In the integer
(Euler-characteristic) model the class of each stratum has a closed form,
which makes the whole power operation computable by direct expansion:

    coefficient of t^k in A(t)^m  =  sum over weight-k vectors of
        chi(configurations) * prod_i a_i^{k_i}

This expansion is an oracle route, fully independent of the exponent
extraction performed in :mod:`powerzeta.power`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .rings import integer_model
from .series import TruncatedSeries

__all__ = [
    "PartitionVector",
    "partition_vectors",
    "partition_count",
    "stratum_chi_unordered",
    "stratum_chi_ordered",
    "power_geometric_chi",
    "cat_sym_strata_chi",
    "config_classes_chi",
]


@dataclass(frozen=True)
class PartitionVector:
    """Multiplicity counts (k_1, ..., k_r): k_i points of multiplicity i.

    Canonical form trims trailing zeros; weight and support are derived.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(k < 0 for k in parts):
            raise ValueError("multiplicity counts must be >= 0")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_partition(cls, partition) -> PartitionVector:
        """Build from a partition given as its list of parts, e.g. (1, 1, 3)."""
        parts = list(partition)
        counts = [0] * (max(parts) if parts else 0)
        for part in parts:
            if part < 1:
                raise ValueError("partition parts must be >= 1")
            counts[part - 1] += 1
        return cls(tuple(counts))

    @property
    def weight(self) -> int:
        """Total number of points counted with multiplicity: sum(i * k_i)."""
        return sum(i * k for i, k in enumerate(self.parts, start=1))

    @property
    def support(self) -> int:
        """Number of distinct points: sum(k_i)."""
        return sum(self.parts)

    def count(self, multiplicity: int) -> int:
        """k_i for the given multiplicity i (0 beyond the stored range)."""
        if multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        if multiplicity > len(self.parts):
            return 0
        return self.parts[multiplicity - 1]

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ", ".join(str(k) for k in self.parts) + ")"


def _ascending_partitions(n: int, smallest: int = 1):
    # Partitions of n as ascending part tuples, in lexicographic order.
    if n == 0:
        yield ()
        return
    for part in range(smallest, n + 1):
        for rest in _ascending_partitions(n - part, part):
            yield (part,) + rest


@lru_cache(maxsize=None)
def _partition_vectors_cached(k: int) -> tuple[PartitionVector, ...]:
    return tuple(
        PartitionVector.from_partition(lam) for lam in _ascending_partitions(k)
    )


def partition_vectors(k: int) -> list[PartitionVector]:
    """All multiplicity vectors of weight k, ordered by their underlying partition."""
    if k < 0:
        raise ValueError("weight must be >= 0")
    return list(_partition_vectors_cached(k))


def partition_count(k: int) -> int:
    """p(k), the number of partitions of k."""
    if k < 0:
        raise ValueError("weight must be >= 0")
    return len(_partition_vectors_cached(k))


def _falling_factorial(m: int, count: int) -> int:
    result = 1
    for j in range(count):
        result *= m - j
    return result


def stratum_chi_unordered(m: int, kvec: PartitionVector) -> int:
    """chi of the stratum of unordered multi-colored configurations.

    For K = support(kvec) distinct points on a space of Euler characteristic
    m, with the points of each multiplicity unordered among themselves:
    m(m-1)...(m-K+1) / prod_i k_i!.  The division is exact for every integer
    m (a falling factorial of K consecutive integers is divisible by any
    product of factorials summing to K).
    """
    numerator = _falling_factorial(m, kvec.support)
    denominator = 1
    for k in kvec.parts:
        denominator *= math.factorial(k)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            f"inexact stratum division for m={m}, kvec={kvec}; this is a bug"
        )
    return quotient


def stratum_chi_ordered(m: int, k: int, kvec: PartitionVector) -> int:
    """chi of the stratum of M^k whose points realize the multiplicity vector.

    The prefactor k! / prod_i (i!)^{k_i} k_i! counts set partitions of the k
    labeled coordinates into k_i blocks of size i; it multiplies the chi of
    the configuration of the block centers.
    """
    if kvec.weight != k:
        raise ValueError(f"kvec has weight {kvec.weight}, expected {k}")
    denominator = 1
    for i, ki in enumerate(kvec.parts, start=1):
        denominator *= math.factorial(i) ** ki * math.factorial(ki)
    prefactor, remainder = divmod(math.factorial(k), denominator)
    if remainder:
        raise ArithmeticError(
            f"inexact block-count division for k={k}, kvec={kvec}; this is a bug"
        )
    return prefactor * _falling_factorial(m, kvec.support)


def power_geometric_chi(coefficients, m: int, order: int) -> TruncatedSeries:
    """Direct stratified expansion of (1 + a_1 t + a_2 t^2 + ...)^m over the integers.

    ``coefficients`` lists a_1..a_r as plain integers (missing entries are 0).
    Coefficient of t^k is the sum over weight-k multiplicity vectors of
    stratum_chi_unordered(m, kvec) * prod_i a_i^{k_i}.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coefficients = list(coefficients)
    model = integer_model()

    def a(i: int) -> int:
        return coefficients[i - 1] if i <= len(coefficients) else 0

    out = [1]
    for k in range(1, order + 1):
        total = 0
        for kvec in partition_vectors(k):
            term = 1
            for i, ki in enumerate(kvec.parts, start=1):
                if ki:
                    term *= a(i) ** ki
                if not term:
                    break
            if term:
                total += stratum_chi_unordered(m, kvec) * term
        out.append(total)
    return TruncatedSeries(model, out)


def cat_sym_strata_chi(m: int, k: int) -> int:
    """chi-level stratified count of the k-th symmetric power with p(i) local weights.

    Each point of multiplicity i carries p(i) = partition_count(i) choices, so
    the value is sum over weight-k vectors of
    stratum_chi_unordered(m, kvec) * prod_i p(i)^{k_i}; it equals the t^k
    coefficient of prod_{n>=1} (1 - t^n)^(-m).
    """
    if k < 0:
        raise ValueError("weight must be >= 0")
    total = 0
    for kvec in partition_vectors(k):
        term = stratum_chi_unordered(m, kvec)
        for i, ki in enumerate(kvec.parts, start=1):
            if ki:
                term *= partition_count(i) ** ki
        total += term
    return total


def config_classes_chi(m: int, order: int) -> TruncatedSeries:
    """The series (1+t)^m over the integers: coefficient of t^k is C(m, k).

    C(m, k) extends to negative m polynomially; for m >= 0 it is the chi of
    the space of k-point subsets of a space with Euler characteristic m.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    out = []
    for k in range(order + 1):
        numerator = _falling_factorial(m, k)
        out.append(numerator // math.factorial(k))
    return TruncatedSeries(integer_model(), out)
