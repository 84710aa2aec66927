"""Truncated formal power series in one variable t over a coefficient ring.

A series stores its coefficients c0..cN together with the explicit truncation
order N.  Precision is tracked conservatively: an operation never claims
coefficients beyond what its inputs determine, and reading past the stated
order raises :class:`PrecisionError` instead of silently returning zero.
"""

from __future__ import annotations

from .rings import ModelMismatchError, RingElement, RingModel

__all__ = ["PrecisionError", "TruncatedSeries"]


class PrecisionError(ValueError):
    """A coefficient beyond the stated truncation order was requested."""


class TruncatedSeries:
    """Immutable coefficients c0..cN of a power series in t over a ring model."""

    __slots__ = ("model", "coeffs")

    def __init__(self, model: RingModel, coeffs):
        converted = tuple(
            model.const(c) if isinstance(c, int) else c for c in coeffs
        )
        if not converted:
            raise ValueError("a series needs at least its constant coefficient")
        for c in converted:
            if not isinstance(c, RingElement):
                raise TypeError(f"coefficients must be RingElements or ints, got {type(c).__name__}")
            if c.model != model:
                raise ModelMismatchError(f"coefficient {c!r} does not belong to {model}")
        self.model = model
        self.coeffs = converted

    @classmethod
    def one(cls, model: RingModel, order: int) -> TruncatedSeries:
        """The constant series 1 carried to the given order."""
        if order < 0:
            raise ValueError("order must be >= 0")
        return cls(model, [model.one()] + [model.zero()] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> RingElement:
        if k < 0:
            raise ValueError("coefficient index must be >= 0")
        if k > self.order:
            raise PrecisionError(
                f"coefficient of t^{k} requested but the series is only known to order {self.order}"
            )
        return self.coeffs[k]

    # -- arithmetic -----------------------------------------------------------

    def _check_model(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if other.model != self.model:
            raise ModelMismatchError(f"cannot combine series over {self.model} and {other.model}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_model(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.model, [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])]
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_model(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.model, [a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])]
        )

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        """Cauchy product, truncated at the smaller of the two orders."""
        self._check_model(other)
        n = min(self.order, other.order)
        zero = self.model.zero()
        out = [zero] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs[: n - i + 1]):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.model, out)

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse to the same order; requires constant term 1.

        Division-free: with c0 = 1 the coefficients satisfy
        d_n = -(c_1 d_{n-1} + ... + c_n d_0).
        """
        if not self.coeffs[0].is_one():
            raise ValueError("series inversion requires constant term 1")
        inv = [self.model.one()]
        for n in range(1, self.order + 1):
            acc = self.model.zero()
            for j in range(1, n + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * inv[n - j]
            inv.append(-acc)
        return TruncatedSeries(self.model, inv)

    def substitute_power(self, k: int) -> TruncatedSeries:
        """The series A(t^k); precision-exact, with order multiplied by k."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        zero = self.model.zero()
        out = [zero] * (self.order * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return TruncatedSeries(self.model, out)

    def scaled(self, factor: RingElement) -> TruncatedSeries:
        return TruncatedSeries(self.model, [factor * c for c in self.coeffs])

    # -- precision management ---------------------------------------------------

    def truncated(self, order: int) -> TruncatedSeries:
        if order < 0:
            raise ValueError("order must be >= 0")
        if order > self.order:
            raise PrecisionError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return TruncatedSeries(self.model, self.coeffs[: order + 1])

    def extended_with_zeros(self, order: int) -> TruncatedSeries:
        """Extend the claimed precision, filling zeros.

        Only valid when the caller knows the true coefficients in the new range
        vanish (e.g. a series supported on multiples of some stride).  Using it
        without that knowledge fabricates precision.
        """
        if order < self.order:
            raise ValueError("extension order is below the current order")
        pad = [self.model.zero()] * (order - self.order)
        return TruncatedSeries(self.model, list(self.coeffs) + pad)

    def equal_up_to(self, other: TruncatedSeries, up_to: int) -> bool:
        """Compare coefficients 0..up_to; raises if either side lacks precision."""
        self._check_model(other)
        if up_to > self.order:
            raise PrecisionError(
                f"comparison up to t^{up_to} but the first series has order {self.order}"
            )
        if up_to > other.order:
            raise PrecisionError(
                f"comparison up to t^{up_to} but the second series has order {other.order}"
            )
        return all(self.coeffs[k] == other.coeffs[k] for k in range(up_to + 1))

    # -- equality and text --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.model == other.model and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.model, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            text = str(c)
            if k > 0:
                if text == "1":
                    text = ""
                elif "+" in text or "- " in text or text.startswith("-"):
                    text = f"({text})*"
                else:
                    text = f"{text}*"
                text += "t" if k == 1 else f"t^{k}"
            parts.append(text)
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.order + 1})"

    def __repr__(self) -> str:
        return f"<series {self} over {self.model}>"
