"""Multiple zeta functions of the rational function field F_q(T) (genus 0).

Here the degree-n divisor count is b_n = (q^(n+1)-1)/(q-1).  Expanding the
product prod_k (q^(m_k+1)-1) over subsets S of {1..d} and summing geometric
series in the coordinates y_j = x_j...x_d gives the 2^d-term closed form

    Z_d = (q-1)^-d * sum_S (-1)^(d-|S|) q^|S| prod_j 1/(1 - q^(c_j(S)) y_j),

with c_j(S) = #{k in S : k >= j}.  The module also builds the clearing
polynomial whose product with Z_d is a polynomial of degree <= 2d-1 in each
x-variable, the depth-2 decomposition into shifted one-variable zetas, and
the reduced pole-subvariety report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactalg import (
    FactoredRational,
    LaurentPolynomial,
    QPowerFactor,
    UsageError,
)
from .polyring import sum_label, y_exponent


class IdentityViolationError(ArithmeticError):
    """An identity that must hold by construction failed to verify."""


@dataclass(frozen=True)
class SubsetTerm:
    """One of the 2^d terms of the genus-0 expansion.

    Value: sign * q^size/(q-1)^depth * prod_j 1/(1 - q^(c_j) y_j), where
    c_j counts the members of the subset that are >= j.
    """

    depth: int
    subset: tuple[int, ...]
    sign: int
    exponents: tuple[int, ...]

    @classmethod
    def for_subset(cls, depth: int, subset: tuple[int, ...]) -> "SubsetTerm":
        c = tuple(sum(1 for k in subset if k >= j) for j in range(1, depth + 1))
        return cls(depth, subset, (-1) ** (depth - len(subset)), c)

    def prefactor(self, q: int) -> Fraction:
        return Fraction(self.sign * q ** len(self.subset), (q - 1) ** self.depth)

    def as_rational(self, q: int) -> FactoredRational:
        den = [
            QPowerFactor(c, y_exponent(self.depth, j + 1))
            for j, c in enumerate(self.exponents)
        ]
        num = LaurentPolynomial.constant(self.depth, self.prefactor(q))
        return FactoredRational(q, num, den)


def subset_terms(depth: int) -> list[SubsetTerm]:
    return [
        SubsetTerm.for_subset(depth, subset)
        for r in range(depth + 1)
        for subset in combinations(range(1, depth + 1), r)
    ]


def closed_form_genus0(q: int, depth: int) -> FactoredRational:
    """The 2^d-term subset expansion, assembled over the merged denominator."""
    if q < 2 or depth < 1:
        raise UsageError("need q >= 2 and depth >= 1")
    total = None
    for term in subset_terms(depth):
        value = term.as_rational(q)
        total = value if total is None else total + value
    return total


def q_polynomial(q: int, depth: int) -> LaurentPolynomial:
    """Clearing polynomial: (q-1)^d times one atom 1 - q^c y_j for every
    pole level c = 0..d-j+1 of every coordinate y_j, expanded.

    For depth <= 2 this is exactly (q-1)^d (1-y_d)(1-q y_d) times the triples
    (1-y_k)(1-q y_k)(1-q^2 y_k) over k < d; deeper sums also reach levels
    c > 2 on the early coordinates (the full subset contributes 1 - q^d y_1),
    so the ladder runs to d-j+1 — with fewer atoms the product would not be a
    polynomial.
    """
    if q < 2 or depth < 1:
        raise UsageError("need q >= 2 and depth >= 1")
    result = LaurentPolynomial.constant(depth, (q - 1) ** depth)
    for j, c in _pole_ladder(depth):
        atom = LaurentPolynomial(
            depth,
            {
                tuple([0] * depth): Fraction(1),
                y_exponent(depth, j): -Fraction(q) ** c,
            },
        )
        result = result * atom
    return result


def _pole_ladder(depth: int):
    for j in range(1, depth + 1):
        for c in range(0, depth - j + 2):
            yield (j, c)


def q_times_z_is_polynomial(q: int, depth: int) -> tuple[bool, tuple[int, ...]]:
    """Multiply the clearing polynomial into the closed form and divide out
    every denominator atom exactly.

    Returns (all per-variable degrees <= 2d-1, the degrees).  A division
    failure cannot happen and raises IdentityViolationError.
    """
    zeta = closed_form_genus0(q, depth)
    product = q_polynomial(q, depth) * zeta.num
    for factor in zeta.den:
        quotient = product.divide_exact(zeta.factor_polynomial(factor))
        if quotient is None:
            raise IdentityViolationError(
                f"denominator atom {factor} does not divide the cleared numerator"
            )
        product = quotient
    degrees = product.degrees()
    return all(deg <= 2 * depth - 1 for deg in degrees), degrees


def one_var_zeta_shifted(q: int, depth: int, k: int, offset: int) -> FactoredRational:
    """Z(F_q[T], s_k+...+s_d + offset) = 1/(1 - q^(1-offset) y_k) in d variables."""
    return FactoredRational.inverse_factor(q, 1 - offset, y_exponent(depth, k))


def decomposition_check_d2(q: int) -> bool:
    """Depth-2 decomposition into one-variable zetas over F_q[T]:

        Z_2 = q^2/(q-1)^2 Z(s+w-1) Z(w) - q/(q-1)^2 Z(s+w) Z(w+1)
            - q/(q-1)^2 Z(s+w) Z(w)   + 1/(q-1)^2 Z(s+w+1) Z(w+1),

    built term by term from the shifted one-variable closed forms and compared
    against the generic subset expansion.
    """
    square = Fraction((q - 1) ** 2)
    terms = [
        (Fraction(q**2) / square, -1, 0),
        (Fraction(-q) / square, 0, 1),
        (Fraction(-q) / square, 0, 0),
        (Fraction(1) / square, 1, 1),
    ]
    total = None
    for coeff, first_offset, second_offset in terms:
        value = (
            one_var_zeta_shifted(q, 2, 1, first_offset)
            * one_var_zeta_shifted(q, 2, 2, second_offset)
        ).scale(coeff)
        total = value if total is None else total + value
    return total.equal(closed_form_genus0(q, 2))


@dataclass(frozen=True)
class PoleSubvariety:
    """A surviving simple pole on s_k + ... + s_d = level."""

    k: int
    level: int
    depth: int

    def label(self) -> str:
        return f"{sum_label(self.depth, self.k)}={self.level}"


def pole_subvarieties_genus0(q: int, depth: int) -> list[PoleSubvariety]:
    """Denominator atoms surviving reduction, mapped to their subvarieties.

    Containment in the ladder level <= d-k+1 and multiplicity one are
    enforced; the closed form promises nothing stronger than containment.
    """
    reduced = closed_form_genus0(q, depth).reduce()
    seen = set()
    poles = []
    for factor in reduced.den:
        k = _coordinate_of(factor.exponent, depth)
        if factor in seen:
            raise IdentityViolationError(f"pole atom {factor} has multiplicity > 1")
        seen.add(factor)
        if not 0 <= factor.qpow <= depth - k + 1:
            raise IdentityViolationError(
                f"pole level {factor.qpow} outside 0..{depth - k + 1} for k={k}"
            )
        poles.append(PoleSubvariety(k, factor.qpow, depth))
    return sorted(poles, key=lambda p: (p.k, p.level))


def _coordinate_of(exponent: tuple[int, ...], depth: int) -> int:
    for k in range(1, depth + 1):
        if exponent == y_exponent(depth, k):
            return k
    raise IdentityViolationError(f"denominator exponent {exponent} is not a y-coordinate")
