"""Bivariate truncated power series with exact rational coefficients.

Series live in the variables u and t, truncated (inclusively) at a fixed
order in each variable.  All ring operations stay inside the truncation
window; reciprocals require a nonzero constant term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

Coeffs = Mapping[tuple[int, int], Fraction]


@dataclass(frozen=True)
class TruncatedSeries:
    u_order: int
    t_order: int
    coeffs: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.u_order < 0 or self.t_order < 0:
            raise ValueError("truncation orders must be >= 0")
        cleaned = {
            key: Fraction(value)
            for key, value in self.coeffs.items()
            if value != 0 and key[0] <= self.u_order and key[1] <= self.t_order
        }
        for du, dt in cleaned:
            if du < 0 or dt < 0:
                raise ValueError(f"negative exponent pair {(du, dt)}")
        object.__setattr__(self, "coeffs", cleaned)

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, u_order: int, t_order: int) -> TruncatedSeries:
        return cls(u_order, t_order, {})

    @classmethod
    def one(cls, u_order: int, t_order: int) -> TruncatedSeries:
        return cls(u_order, t_order, {(0, 0): Fraction(1)})

    @classmethod
    def monomial(
        cls, u_order: int, t_order: int, du: int = 0, dt: int = 0, coeff: int | Fraction = 1
    ) -> TruncatedSeries:
        return cls(u_order, t_order, {(du, dt): Fraction(coeff)})

    @classmethod
    def from_t_coefficients(
        cls, values: list[int] | tuple[int, ...], u_order: int, t_order: int
    ) -> TruncatedSeries:
        """Polynomial in t alone: values[m] is the coefficient of t^m."""
        return cls(u_order, t_order, {(0, m): Fraction(v) for m, v in enumerate(values)})

    # -- basic queries ------------------------------------------------------
    def coefficient(self, du: int, dt: int) -> Fraction:
        return self.coeffs.get((du, dt), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_compatible(self, other: TruncatedSeries) -> None:
        if (self.u_order, self.t_order) != (other.u_order, other.t_order):
            raise ValueError("mismatched truncation orders")

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compatible(other)
        total = dict(self.coeffs)
        for key, value in other.coeffs.items():
            total[key] = total.get(key, Fraction(0)) + value
        return TruncatedSeries(self.u_order, self.t_order, total)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(
            self.u_order, self.t_order, {k: -v for k, v in self.coeffs.items()}
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries | int | Fraction) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(
                self.u_order, self.t_order, {k: v * other for k, v in self.coeffs.items()}
            )
        self._check_compatible(other)
        product: dict[tuple[int, int], Fraction] = {}
        for (au, at), av in self.coeffs.items():
            for (bu, bt), bv in other.coeffs.items():
                cu, ct = au + bu, at + bt
                if cu > self.u_order or ct > self.t_order:
                    continue
                key = (cu, ct)
                product[key] = product.get(key, Fraction(0)) + av * bv
        return TruncatedSeries(self.u_order, self.t_order, product)

    __rmul__ = __mul__

    def reciprocal(self) -> TruncatedSeries:
        """Multiplicative inverse within the truncation window."""
        head = self.coefficient(0, 0)
        if head == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv: dict[tuple[int, int], Fraction] = {(0, 0): 1 / head}
        for du in range(self.u_order + 1):
            for dt in range(self.t_order + 1):
                if (du, dt) == (0, 0):
                    continue
                acc = Fraction(0)
                for (eu, et), value in self.coeffs.items():
                    if (eu, et) == (0, 0) or eu > du or et > dt:
                        continue
                    acc += value * inv.get((du - eu, dt - et), Fraction(0))
                if acc:
                    inv[(du, dt)] = -acc / head
        return TruncatedSeries(self.u_order, self.t_order, inv)

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = TruncatedSeries.one(self.u_order, self.t_order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result
