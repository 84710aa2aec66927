"""Sigma-operations and the power operation A(t)^m for series with constant term 1.

Each ring model carries one canonical sigma structure: for a single monomial
mu with coefficient +1,

    sigma_t(mu) = 1/(1 - mu*t) = 1 + mu*t + mu^2*t^2 + ...

and sigma_t extends over sums of monomials multiplicatively, with negative
coefficients contributing inverse factors.  On the integers this is the
classical binomial series (1-t)^(-m).

Every series A with constant term 1 factors uniquely as
A = prod_{i>=1} sigma_{t^i}(b_i); a power A^m is computed by rescaling the
extracted exponents:  A^m = prod_i sigma_{t^i}(b_i * m).  This single
operation satisfies all seven power-structure axioms, which
:func:`verify_axioms` checks on caller-supplied samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .rings import RingElement, RingModel
from .series import PrecisionError, TruncatedSeries

__all__ = [
    "sigma_series",
    "extract_exponents",
    "series_from_exponents",
    "power_series",
    "verify_axioms",
    "AxiomCheck",
    "AxiomReport",
]


def _gbinom(a: int, n: int) -> int:
    # C(a, n) for any integer a: the product of n consecutive integers ending
    # at a, divided by n!; the division is always exact.
    num = 1
    for j in range(n):
        num *= a - j
    return num // math.factorial(n)


@lru_cache(maxsize=None)
def sigma_series(a: RingElement, order: int) -> TruncatedSeries:
    """The series sigma_t(a) = (1-t)^(-a) to the given order.

    Coefficient n of the factor for a monomial mu with multiplicity c is
    C(c+n-1, n) * mu^n, valid for c of either sign; factors for all monomials
    of ``a`` are multiplied together.  sigma_t(0) = 1.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    model = a.model
    result = TruncatedSeries.one(model, order)
    for exps, mult in a.terms.items():
        coeffs = []
        for n in range(order + 1):
            c = _gbinom(mult + n - 1, n)
            if c:
                coeffs.append(model.monomial((n * e for e in exps), c))
            else:
                coeffs.append(model.zero())
        result = result * TruncatedSeries(model, coeffs)
    return result


def _sigma_stride(b: RingElement, stride: int, order: int) -> TruncatedSeries:
    # sigma_{t^stride}(b) carried to `order`.  Built directly on the stride
    # support, so the claimed precision is exact.
    inner = sigma_series(b, order // stride)
    coeffs = [b.model.zero()] * (order + 1)
    for n in range(inner.order + 1):
        coeffs[n * stride] = inner.coefficient(n)
    return TruncatedSeries(b.model, coeffs)


def extract_exponents(series: TruncatedSeries) -> list[RingElement]:
    """The unique b_1..b_N with A = prod_{i<=N} sigma_{t^i}(b_i) up to order N.

    Iteratively: b_i is the t^i coefficient of A times the inverses of the
    factors already accounted for.  Division-free (multiplies by inverted
    factor series); requires constant term 1.
    """
    if not series.coefficient(0).is_one():
        raise ValueError("exponent extraction requires constant term 1")
    order = series.order
    remainder = series
    exponents = []
    for i in range(1, order + 1):
        b = remainder.coefficient(i)
        exponents.append(b)
        if not b.is_zero():
            remainder = remainder * _sigma_stride(b, i, order).inverse()
    return exponents


def series_from_exponents(model: RingModel, exponents, order: int) -> TruncatedSeries:
    """Rebuild prod_i sigma_{t^i}(b_i) to the given order (inverse of extraction)."""
    result = TruncatedSeries.one(model, order)
    for i, b in enumerate(exponents, start=1):
        if i > order:
            break
        if not b.is_zero():
            result = result * _sigma_stride(b, i, order)
    return result


def power_series(
    series: TruncatedSeries, exponent: RingElement | int, order: int | None = None
) -> TruncatedSeries:
    """The power A(t)^m for a series A with constant term 1 and exponent m.

    Computed as prod_i sigma_{t^i}(b_i * m) with b_i from
    :func:`extract_exponents`; the requested order must not exceed the order
    of A.
    """
    model = series.model
    if isinstance(exponent, int):
        exponent = model.const(exponent)
    if exponent.model != model:
        raise ValueError(f"exponent lives in {exponent.model}, series over {model}")
    if order is None:
        order = series.order
    if order > series.order:
        raise PrecisionError(
            f"power to order {order} requested but the base series has order {series.order}"
        )
    base = series.truncated(order)
    result = TruncatedSeries.one(model, order)
    for i, b in enumerate(extract_exponents(base), start=1):
        scaled = b * exponent
        if not scaled.is_zero():
            result = result * _sigma_stride(scaled, i, order)
    return result


# -- axiom verification -------------------------------------------------------


@dataclass(frozen=True)
class AxiomCheck:
    axiom: int
    description: str
    cases: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class AxiomReport:
    order: int
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.ok else "FAIL"
            line = f"axiom {c.axiom} ({c.description}): {status} [{c.cases} cases]"
            if c.failures:
                line += f" first failure: {c.failures[0]}"
            lines.append(line)
        return "\n".join(lines)


def _first_mismatch(lhs: TruncatedSeries, rhs: TruncatedSeries, up_to: int):
    for k in range(up_to + 1):
        a, b = lhs.coefficient(k), rhs.coefficient(k)
        if a != b:
            return k, a, b
    return None


def verify_axioms(
    model: RingModel,
    elements,
    series_samples,
    order: int,
    substitution_strides=(2, 3),
) -> AxiomReport:
    """Check the seven power-structure axioms on the given samples.

    ``elements`` supplies exponents m, n; ``series_samples`` supplies bases A, B
    (constant term 1, order >= ``order``).  Substitution (axiom 7) is checked
    at base order ``order // k`` for each stride k, so every comparison stays
    within the stated precision.  Failures are reported, not raised.
    """
    elements = [model.const(e) if isinstance(e, int) else e for e in elements]
    series_samples = [s.truncated(order) for s in series_samples]
    if not elements or not series_samples:
        raise ValueError("need at least one exponent sample and one series sample")
    for s in series_samples:
        if not s.coefficient(0).is_one():
            raise ValueError("series samples must have constant term 1")

    element_pairs = [
        (elements[i], elements[(i + 1) % len(elements)]) for i in range(len(elements))
    ]
    series_pairs = [
        (series_samples[i], series_samples[(i + 1) % len(series_samples)])
        for i in range(len(series_samples))
    ]

    def depict(**named) -> str:
        return ", ".join(f"{k}={v}" for k, v in named.items())

    checks = []

    def record(axiom, description, case_results):
        failures = tuple(msg for msg in case_results if msg is not None)
        checks.append(AxiomCheck(axiom, description, len(case_results), failures))

    def compare(axiom_up_to, lhs, rhs, context):
        mismatch = _first_mismatch(lhs, rhs, axiom_up_to)
        if mismatch is None:
            return None
        k, a, b = mismatch
        return f"t^{k}: {a} != {b} [{context}]"

    one = TruncatedSeries.one(model, order)

    record(
        1,
        "A^0 = 1",
        [
            compare(order, power_series(a_ser, model.zero(), order), one, depict(A=a_ser))
            for a_ser in series_samples
        ],
    )
    record(
        2,
        "A^1 = A",
        [
            compare(order, power_series(a_ser, model.one(), order), a_ser, depict(A=a_ser))
            for a_ser in series_samples
        ],
    )
    record(
        3,
        "(A*B)^m = A^m * B^m",
        [
            compare(
                order,
                power_series(a_ser * b_ser, m, order),
                power_series(a_ser, m, order) * power_series(b_ser, m, order),
                depict(A=a_ser, B=b_ser, m=m),
            )
            for i, (a_ser, b_ser) in enumerate(series_pairs)
            for m in [elements[i % len(elements)]]
        ],
    )
    record(
        4,
        "A^(m+n) = A^m * A^n",
        [
            compare(
                order,
                power_series(a_ser, m + n, order),
                power_series(a_ser, m, order) * power_series(a_ser, n, order),
                depict(A=a_ser, m=m, n=n),
            )
            for i, a_ser in enumerate(series_samples)
            for m, n in [element_pairs[i % len(element_pairs)]]
        ],
    )
    record(
        5,
        "A^(m*n) = (A^m)^n",
        [
            compare(
                order,
                power_series(a_ser, m * n, order),
                power_series(power_series(a_ser, m, order), n, order),
                depict(A=a_ser, m=m, n=n),
            )
            for i, a_ser in enumerate(series_samples)
            for m, n in [element_pairs[i % len(element_pairs)]]
        ],
    )

    one_plus_t = TruncatedSeries(model, [model.one(), model.one()] + [model.zero()] * (order - 1)) if order >= 1 else None
    record(
        6,
        "(1+t)^m = 1 + m*t + higher terms",
        [
            (
                None
                if one_plus_t is not None
                and power_series(one_plus_t, m, order).coefficient(1) == m
                else (f"linear coefficient != {m} [m={m}]" if one_plus_t is not None else None)
            )
            for m in elements
        ],
    )

    axiom7_cases = []
    for i, a_ser in enumerate(series_samples):
        m = elements[i % len(elements)]
        for k in substitution_strides:
            inner_order = order // k
            if inner_order < 1:
                continue
            small = a_ser.truncated(inner_order)
            lhs = power_series(small.substitute_power(k), m, inner_order * k)
            rhs = power_series(small, m, inner_order).substitute_power(k)
            axiom7_cases.append(
                compare(inner_order * k, lhs, rhs, depict(A=small, m=m, k=k))
            )
    record(7, "(A(t^k))^m = (A^m)(t^k)", axiom7_cases)

    return AxiomReport(order=order, checks=tuple(checks))
