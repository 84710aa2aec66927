"""Motivic and categorical zeta series, and the Galkin-Shinder identity verifier.

For a class a the motivic zeta series is the single sigma series

    Z_mot(a, t) = (1/(1-t))^a = sum_n [Sym^n] t^n,

while the categorical zeta series is the product over all n of powers of
geometric series in t^n:

    Z_cat(a, t) = prod_{n>=1} (1/(1-t^n))^a.

The two are linked by Z_cat(a, t) = prod_{n>=1} Z_mot(a, t^n); the verifier
computes both sides by their own pipelines (power extraction on the left,
sigma substitution on the right) and, over the integers, additionally checks
each coefficient against the stratified count from :mod:`powerzeta.strata`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .power import power_series, sigma_series
from .rings import RingElement, RingModel, integer_model
from .series import TruncatedSeries
from .strata import cat_sym_strata_chi

__all__ = [
    "GrothendieckClass",
    "as_class",
    "z_mot",
    "z_cat",
    "gs_verify",
    "GSReport",
    "fock_character",
]


@dataclass(frozen=True)
class GrothendieckClass:
    """A ring element standing in for the class of a space, with an optional label."""

    element: RingElement
    label: str | None = None

    @property
    def model(self) -> RingModel:
        return self.element.model

    def __str__(self) -> str:
        if self.label:
            return f"[{self.label}] = {self.element}"
        return str(self.element)


def as_class(value, model: RingModel | None = None) -> GrothendieckClass:
    """Coerce a GrothendieckClass, RingElement, or int into a GrothendieckClass."""
    if isinstance(value, GrothendieckClass):
        return value
    if isinstance(value, RingElement):
        return GrothendieckClass(value)
    if isinstance(value, int):
        model = model or integer_model()
        return GrothendieckClass(model.const(value))
    raise TypeError(f"cannot interpret {type(value).__name__} as a class")


def z_mot(a, order: int) -> TruncatedSeries:
    """Motivic zeta series: sigma_t of the class, coefficient n being Sym^n."""
    cls = as_class(a)
    return sigma_series(cls.element, order)


def _geometric_base(model: RingModel, stride: int, order: int) -> TruncatedSeries:
    # 1/(1 - t^stride) written out directly to the requested order.
    coeffs = [
        model.one() if k % stride == 0 else model.zero() for k in range(order + 1)
    ]
    return TruncatedSeries(model, coeffs)


def z_cat(a, order: int) -> TruncatedSeries:
    """Categorical zeta series: prod_{n=1..N} (1/(1-t^n))^a, each factor a power.

    Every factor goes through the full exponent-extraction power pipeline;
    the sigma-substitution shortcut is deliberately not taken here, so that
    :func:`gs_verify` compares genuinely distinct computations.
    """
    cls = as_class(a)
    model = cls.model
    result = TruncatedSeries.one(model, order)
    for n in range(1, order + 1):
        factor = power_series(_geometric_base(model, n, order), cls.element, order)
        result = result * factor
    return result


def fock_character(chi: int, order: int) -> TruncatedSeries:
    """Graded character prod_{n>=1} (1 - q^n)^(-chi) of chi oscillator towers.

    For chi = 1 the coefficients are the partition numbers; this is the
    integer-model categorical zeta series of the constant class chi.
    """
    return z_cat(integer_model().const(chi), order)


@dataclass(frozen=True)
class GSReport:
    """Per-coefficient outcome of the motivic/categorical zeta comparison."""

    label: str
    order: int
    coefficient_ok: tuple[bool, ...]
    mismatches: tuple[tuple[int, str, str], ...]
    strata_checked: bool
    strata_mismatches: tuple[tuple[int, str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.strata_mismatches

    def summary(self) -> str:
        checked = len(self.coefficient_ok)
        if self.ok:
            extra = " incl. stratified cross-check" if self.strata_checked else ""
            return f"GS identity: PASS ({checked} coefficients checked{extra}) for {self.label}"
        lines = [f"GS identity: FAIL for {self.label}"]
        for k, lhs, rhs in self.mismatches:
            lines.append(f"  t^{k}: categorical {lhs} != motivic-product {rhs}")
        for k, lhs, rhs in self.strata_mismatches:
            lines.append(f"  t^{k}: categorical {lhs} != stratified {rhs}")
        return "\n".join(lines)


def gs_verify(a, order: int) -> GSReport:
    """Check Z_cat(a, t) = prod_{n>=1} Z_mot(a, t^n) coefficient by coefficient.

    The left side comes from :func:`z_cat` (power extraction per factor); the
    right side substitutes t -> t^n into motivic zeta series carried to order
    floor(N/n) each, which is precision-exact on their stride support.  In
    the integer model every coefficient is also compared with the stratified
    count, an independent third route.  Mismatches are reported, not raised.
    """
    cls = as_class(a)
    model = cls.model
    lhs = z_cat(cls, order)

    rhs = TruncatedSeries.one(model, order)
    for n in range(1, order + 1):
        factor = z_mot(cls, order // n).substitute_power(n)
        # the dropped degrees are non-multiples of n, hence genuinely zero
        rhs = rhs * factor.extended_with_zeros(order)

    coefficient_ok = []
    mismatches = []
    for k in range(order + 1):
        left, right = lhs.coefficient(k), rhs.coefficient(k)
        coefficient_ok.append(left == right)
        if left != right:
            mismatches.append((k, str(left), str(right)))

    strata_checked = model.kind == "integers"
    strata_mismatches = []
    if strata_checked:
        m = cls.element.constant_value()
        for k in range(order + 1):
            expected = cat_sym_strata_chi(m, k)
            actual = lhs.coefficient(k).constant_value()
            if actual != expected:
                strata_mismatches.append((k, str(actual), str(expected)))

    return GSReport(
        label=str(cls),
        order=order,
        coefficient_ok=tuple(coefficient_ok),
        mismatches=tuple(mismatches),
        strata_checked=strata_checked,
        strata_mismatches=tuple(strata_mismatches),
    )
