"""Exact sparse arithmetic for Laurent polynomials and factored rational functions.

Values live in d variables x_1..x_d with exact rational (``Fraction``)
coefficients and integer exponents that may be negative.  Rational functions
are kept in factored form: a Laurent-polynomial numerator over a multiset of
binomial denominator atoms ``1 - q^a * x^e`` with a fixed integer base
``q >= 2`` and nonnegative exponent vector ``e != 0``.  Every denominator
arising in this package has that shape, which makes pole bookkeeping and
formal power-series expansion trivial and avoids multivariate GCDs: equality
is decided by cross-multiplication, and reduction only ever divides the
numerator by a denominator atom.

All values are immutable after construction and all operations are pure, so
they can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

Exponents = tuple[int, ...]


class UsageError(ValueError):
    """Operands do not fit together (arity or base mismatch, bad argument)."""


class NotAPowerSeriesError(ValueError):
    """The value has a negative numerator exponent and no series expansion."""


class PoleProximityError(ArithmeticError):
    """Numeric evaluation was requested too close to a denominator zero."""


class SubstitutionError(ValueError):
    """A substitution produced a denominator atom outside the 1 - q^a*x^e shape."""


def grlex_key(exponents: Exponents) -> tuple[int, Exponents]:
    """Graded-lexicographic sort key (total degree first, then left-to-right)."""
    return (sum(exponents), exponents)


def _unit(arity: int, j: int) -> Exponents:
    return tuple(1 if i == j else 0 for i in range(arity))


def default_names(arity: int) -> list[str]:
    return [f"x{i + 1}" for i in range(arity)]


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPolynomial:
    """Sparse Laurent polynomial: a map from exponent vectors to Fractions.

    Invariants: every stored coefficient is nonzero and every exponent vector
    has length ``arity``.  Treated as immutable.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Exponents, Fraction] | None = None):
        if arity < 1:
            raise UsageError(f"arity must be positive, got {arity}")
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise UsageError(f"exponent vector {exps} does not have arity {arity}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = coeff
        self.arity = arity
        self.terms = clean

    # -- constructors

    @classmethod
    def zero(cls, arity: int) -> "LaurentPolynomial":
        return cls(arity, {})

    @classmethod
    def constant(cls, arity: int, value) -> "LaurentPolynomial":
        return cls(arity, {tuple([0] * arity): Fraction(value)})

    @classmethod
    def one(cls, arity: int) -> "LaurentPolynomial":
        return cls.constant(arity, 1)

    @classmethod
    def monomial(cls, arity: int, coeff, exponents: Sequence[int]) -> "LaurentPolynomial":
        return cls(arity, {tuple(exponents): Fraction(coeff)})

    @classmethod
    def variable(cls, arity: int, j: int) -> "LaurentPolynomial":
        """The variable x_{j+1} (0-based index j)."""
        return cls.monomial(arity, 1, _unit(arity, j))

    # -- basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def constant_coefficient(self) -> Fraction:
        return self.coefficient([0] * self.arity)

    def degree(self, j: int) -> int:
        """Largest exponent of variable j; zero polynomial has degree 0 here."""
        if not self.terms:
            return 0
        return max(exps[j] for exps in self.terms)

    def valuation(self, j: int) -> int:
        """Smallest exponent of variable j; zero polynomial has valuation 0."""
        if not self.terms:
            return 0
        return min(exps[j] for exps in self.terms)

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(j) for j in range(self.arity))

    def content_exponent(self) -> Exponents:
        """Componentwise minimum exponent over the support (0 for the zero poly)."""
        if not self.terms:
            return tuple([0] * self.arity)
        return tuple(min(exps[j] for exps in self.terms) for j in range(self.arity))

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]))

    def leading(self) -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    # -- arithmetic

    def _check(self, other: "LaurentPolynomial") -> None:
        if self.arity != other.arity:
            raise UsageError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = out.get(exps, Fraction(0)) + coeff
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        return LaurentPolynomial(self.arity, out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                total = out.get(exps, Fraction(0)) + ca * cb
                if total:
                    out[exps] = total
                else:
                    out.pop(exps, None)
        return LaurentPolynomial(self.arity, out)

    def __rmul__(self, other) -> "LaurentPolynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise UsageError("negative polynomial power")
        result = LaurentPolynomial.one(self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, value) -> "LaurentPolynomial":
        value = Fraction(value)
        if not value:
            return LaurentPolynomial.zero(self.arity)
        return LaurentPolynomial(self.arity, {e: c * value for e, c in self.terms.items()})

    def shift(self, exponents: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial x^exponents."""
        exponents = tuple(exponents)
        return LaurentPolynomial(
            self.arity,
            {tuple(x + y for x, y in zip(e, exponents)): c for e, c in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    __hash__ = None  # mutable dict inside; identity hashing would be misleading

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.render()!r})"

    # -- substitution, division, evaluation

    def substitute_monomial(self, j: int, coeff, exponents: Sequence[int]) -> "LaurentPolynomial":
        """Map x_{j+1} -> coeff * x^exponents in every term.

        The replacement coefficient must be nonzero; the replacement exponent
        vector is unrestricted (entries may be negative or zero, so a variable
        can also be specialized to a constant).
        """
        coeff = Fraction(coeff)
        if not coeff:
            raise UsageError("substitution coefficient must be nonzero")
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.arity:
            raise UsageError("substitution exponent vector has wrong arity")
        out: dict[Exponents, Fraction] = {}
        for exps, c in self.terms.items():
            k = exps[j]
            new = tuple(
                (e - k if i == j else e) + k * exponents[i] for i, e in enumerate(exps)
            )
            total = out.get(new, Fraction(0)) + c * coeff**k
            if total:
                out[new] = total
            else:
                out.pop(new, None)
        return LaurentPolynomial(self.arity, out)

    def divide_exact(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial | None":
        """Exact quotient self/divisor, or None when the division is not exact.

        Works in the Laurent ring: monomial content is pulled off both sides,
        the polynomial parts are divided by the single-divisor graded-lex
        division algorithm, and the content quotient is re-attached.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise UsageError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero(self.arity)
        c_num = self.content_exponent()
        c_div = divisor.content_exponent()
        rem = dict(self.shift(tuple(-e for e in c_num)).terms)
        div = divisor.shift(tuple(-e for e in c_div))
        lead_e, lead_c = div.leading()
        quotient: dict[Exponents, Fraction] = {}
        while rem:
            r_lead = max(rem, key=grlex_key)
            diff = tuple(x - y for x, y in zip(r_lead, lead_e))
            if any(e < 0 for e in diff):
                return None
            coeff = rem[r_lead] / lead_c
            quotient[diff] = quotient.get(diff, Fraction(0)) + coeff
            for e_div, c_div2 in div.terms.items():
                exps = tuple(x + y for x, y in zip(diff, e_div))
                total = rem.get(exps, Fraction(0)) - coeff * c_div2
                if total:
                    rem[exps] = total
                else:
                    rem.pop(exps, None)
        shift_back = tuple(a - b for a, b in zip(c_num, c_div))
        return LaurentPolynomial(self.arity, quotient).shift(shift_back)

    def evaluate(self, point: Sequence[complex]) -> complex:
        if len(point) != self.arity:
            raise UsageError("evaluation point has wrong arity")
        total = 0j
        for exps, coeff in self.terms.items():
            value = complex(coeff)
            for z, e in zip(point, exps):
                value *= complex(z) ** e
            total += value
        return total

    def render(self, names: Sequence[str] | None = None) -> str:
        return render_polynomial(self, names)


# ---------------------------------------------------------------------------
# Denominator atoms and factored rational functions


class QPowerFactor(NamedTuple):
    """The binomial 1 - q^qpow * x^exponent with exponent >= 0, != 0."""

    qpow: int
    exponent: Exponents

    def validate(self, arity: int) -> None:
        if len(self.exponent) != arity:
            raise UsageError(f"factor exponent {self.exponent} has wrong arity")
        if any(e < 0 for e in self.exponent):
            raise UsageError(f"factor exponent {self.exponent} has a negative entry")
        if not any(self.exponent):
            raise UsageError("factor exponent must not be the zero vector")


def _factor_sort_key(factor: QPowerFactor):
    # Display order: graded-lex descending on exponent, then ascending q-power.
    degree, exps = grlex_key(factor.exponent)
    return (-degree, tuple(-e for e in exps), factor.qpow)


def _as_q_power(value: Fraction, q: int) -> int | None:
    """Write value as q**k for an integer k, or return None."""
    if value <= 0:
        return None
    if value == 1:
        return 0
    if value.denominator == 1:
        n, k = value.numerator, 0
        while n % q == 0:
            n //= q
            k += 1
        return k if n == 1 else None
    if value.numerator == 1:
        k = _as_q_power(Fraction(value.denominator), q)
        return -k if k is not None else None
    return None


class FactoredRational:
    """num / prod(1 - q^a * x^e) with an exact Laurent-polynomial numerator.

    The base q is a concrete integer >= 2 fixed per value; operations require
    operands to share both arity and q.  The denominator is a multiset, stored
    as a sorted tuple; no canonical form is maintained beyond that ordering,
    and equality is decided by cross-multiplication.
    """

    __slots__ = ("q", "num", "den")

    def __init__(self, q: int, num: LaurentPolynomial, den: Iterable[QPowerFactor] = ()):
        if not isinstance(q, int) or q < 2:
            raise UsageError(f"base q must be an integer >= 2, got {q!r}")
        factors = []
        for factor in den:
            factor = QPowerFactor(int(factor[0]), tuple(factor[1]))
            factor.validate(num.arity)
            factors.append(factor)
        self.q = q
        self.num = num
        self.den = tuple(sorted(factors, key=_factor_sort_key))

    # -- constructors

    @classmethod
    def from_constant(cls, q: int, arity: int, value) -> "FactoredRational":
        return cls(q, LaurentPolynomial.constant(arity, value))

    @classmethod
    def one(cls, q: int, arity: int) -> "FactoredRational":
        return cls.from_constant(q, arity, 1)

    @classmethod
    def inverse_factor(cls, q: int, qpow: int, exponent: Sequence[int]) -> "FactoredRational":
        """1 / (1 - q^qpow * x^exponent)."""
        exponent = tuple(exponent)
        return cls(q, LaurentPolynomial.one(len(exponent)), [QPowerFactor(qpow, exponent)])

    @property
    def arity(self) -> int:
        return self.num.arity

    def _check(self, other: "FactoredRational") -> None:
        if self.arity != other.arity:
            raise UsageError(f"arity mismatch: {self.arity} vs {other.arity}")
        if self.q != other.q:
            raise UsageError(f"base mismatch: q={self.q} vs q={other.q}")

    def factor_polynomial(self, factor: QPowerFactor) -> LaurentPolynomial:
        """The denominator atom as an actual polynomial 1 - q^a * x^e."""
        zero = tuple([0] * self.arity)
        return LaurentPolynomial(
            self.arity, {zero: Fraction(1), factor.exponent: -(Fraction(self.q) ** factor.qpow)}
        )

    def denominator_polynomial(self, factors: Iterable[QPowerFactor] | None = None) -> LaurentPolynomial:
        product = LaurentPolynomial.one(self.arity)
        for factor in self.den if factors is None else factors:
            product = product * self.factor_polynomial(factor)
        return product

    # -- ring operations

    def __mul__(self, other) -> "FactoredRational":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return FactoredRational(self.q, self.num * other.num, self.den + other.den)

    def __rmul__(self, other) -> "FactoredRational":
        return self.__mul__(other)

    def scale(self, value) -> "FactoredRational":
        return FactoredRational(self.q, self.num.scale(value), self.den)

    def __add__(self, other: "FactoredRational") -> "FactoredRational":
        self._check(other)
        common, only_self, only_other = _multiset_split(self.den, other.den)
        num = self.num * self.denominator_polynomial(only_other) + other.num * self.denominator_polynomial(only_self)
        return FactoredRational(self.q, num, common + only_self + only_other)

    def __neg__(self) -> "FactoredRational":
        return FactoredRational(self.q, -self.num, self.den)

    def __sub__(self, other: "FactoredRational") -> "FactoredRational":
        return self + (-other)

    def __repr__(self) -> str:
        return f"FactoredRational({self.render()!r})"

    # -- comparisons and normalization

    def equal(self, other: "FactoredRational") -> bool:
        """Value equality by cross-multiplication (common atoms cancelled first)."""
        self._check(other)
        _, only_self, only_other = _multiset_split(self.den, other.den)
        left = self.num * self.denominator_polynomial(only_other)
        right = other.num * other.denominator_polynomial(only_self)
        return left == right

    def reduce(self) -> "FactoredRational":
        """Cancel every denominator atom that divides the numerator exactly."""
        num = self.num
        remaining: list[QPowerFactor] = list(self.den)
        progress = True
        while progress and not num.is_zero():
            progress = False
            for i, factor in enumerate(remaining):
                quotient = num.divide_exact(self.factor_polynomial(factor))
                if quotient is not None:
                    num = quotient
                    del remaining[i]
                    progress = True
                    break
        return FactoredRational(self.q, num, remaining)

    # -- series, substitution, evaluation

    def series(self, bound: int) -> "TruncatedSeries":
        """Formal power-series expansion, exact on the box of exponents <= bound.

        Each denominator atom expands through the geometric series
        1/(1 - q^a x^e) = sum_n q^(a n) x^(n e); the numerator must have no
        negative exponents for the value to be a power series at the origin.
        """
        if bound < 0:
            raise UsageError("series bound must be nonnegative")
        coeffs: dict[Exponents, Fraction] = {}
        for exps, coeff in self.num.terms.items():
            if any(e < 0 for e in exps):
                raise NotAPowerSeriesError(
                    f"numerator term x^{exps} has a negative exponent; no power series at 0"
                )
            if all(e <= bound for e in exps):
                coeffs[exps] = coeffs.get(exps, Fraction(0)) + coeff
        for factor in self.den:
            coeffs = _mul_box(coeffs, _geometric_box(self.q, factor, bound), bound, self.arity)
        return TruncatedSeries(self.arity, bound, coeffs)

    def substitute(self, j: int, coeff, exponents: Sequence[int]) -> "FactoredRational":
        """Map x_{j+1} -> coeff * x^exponents, restoring all representation invariants.

        A transformed denominator atom whose exponent vector goes entirely
        nonpositive is flipped through 1 - q^b x^f = (-q^b x^f)(1 - q^-b x^-f)
        and the extracted monomial is folded into the numerator; an atom whose
        exponent vector becomes zero is a constant and is likewise folded in.
        An atom with mixed-sign exponents, or a coefficient that is not an
        exact power of q, cannot be represented and raises SubstitutionError.
        """
        coeff = Fraction(coeff)
        if not coeff:
            raise UsageError("substitution coefficient must be nonzero")
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.arity or not 0 <= j < self.arity:
            raise UsageError("substitution target does not match arity")
        num = self.num.substitute_monomial(j, coeff, exponents)
        new_den: list[QPowerFactor] = []
        for factor in self.den:
            k = factor.exponent[j]
            if k == 0:
                new_den.append(factor)
                continue
            new_exps = tuple(
                (e - k if i == j else e) + k * exponents[i]
                for i, e in enumerate(factor.exponent)
            )
            value = Fraction(self.q) ** factor.qpow * coeff**k
            power = _as_q_power(value, self.q)
            if power is None:
                raise SubstitutionError(
                    f"transformed factor coefficient {value} is not a power of q={self.q}"
                )
            if not any(new_exps):
                # constant atom 1 - q^power
                constant = 1 - Fraction(self.q) ** power
                if not constant:
                    raise SubstitutionError("substitution makes a denominator atom vanish")
                num = num.scale(Fraction(1) / constant)
            elif all(e >= 0 for e in new_exps):
                new_den.append(QPowerFactor(power, new_exps))
            elif all(e <= 0 for e in new_exps):
                # fold the extracted monomial's inverse into the numerator
                num = num * LaurentPolynomial.monomial(
                    self.arity, -(Fraction(self.q) ** (-power)), tuple(-e for e in new_exps)
                )
                new_den.append(QPowerFactor(-power, tuple(-e for e in new_exps)))
            else:
                raise SubstitutionError(
                    f"transformed factor exponent {new_exps} has mixed signs and cannot "
                    "be written as a monomial times 1 - q^a*x^e"
                )
        return FactoredRational(self.q, num, new_den)

    def evaluate(self, point: Sequence[complex], tolerance: float = 1e-12) -> complex:
        """Float evaluation of num/prod(atoms); near-vanishing atoms are poles."""
        if len(point) != self.arity:
            raise UsageError("evaluation point has wrong arity")
        denominator = 1 + 0j
        for factor in self.den:
            value = 1 - self.factor_value(factor, point)
            if abs(value) < tolerance:
                raise PoleProximityError(
                    f"denominator atom {render_factor(self.q, factor)} vanishes at the point"
                )
            denominator *= value
        return self.num.evaluate(point) / denominator

    def factor_value(self, factor: QPowerFactor, point: Sequence[complex]) -> complex:
        value = complex(Fraction(self.q) ** factor.qpow)
        for z, e in zip(point, factor.exponent):
            value *= complex(z) ** e
        return value

    def render(self, names: Sequence[str] | None = None) -> str:
        return render_rational(self, names)

    # -- JSON round-trip

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "arity": self.arity,
            "num": [[list(e), str(c)] for e, c in self.num.sorted_terms()],
            "den": [[f.qpow, list(f.exponent)] for f in self.den],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FactoredRational":
        arity = int(data["arity"])
        num = LaurentPolynomial(arity, {tuple(e): Fraction(c) for e, c in data["num"]})
        den = [QPowerFactor(int(a), tuple(e)) for a, e in data["den"]]
        return cls(int(data["q"]), num, den)


def _multiset_split(
    left: tuple[QPowerFactor, ...], right: tuple[QPowerFactor, ...]
) -> tuple[tuple[QPowerFactor, ...], tuple[QPowerFactor, ...], tuple[QPowerFactor, ...]]:
    """Split two multisets into (intersection, left-only, right-only)."""
    from collections import Counter

    cl, cr = Counter(left), Counter(right)
    common = cl & cr
    return (
        tuple(common.elements()),
        tuple((cl - common).elements()),
        tuple((cr - common).elements()),
    )


def _geometric_box(q: int, factor: QPowerFactor, bound: int) -> dict[Exponents, Fraction]:
    """Truncated geometric series of 1/(1 - q^a x^e) on the exponent box <= bound."""
    coeffs: dict[Exponents, Fraction] = {}
    step = factor.exponent
    n = 0
    while all(n * e <= bound for e in step):
        coeffs[tuple(n * e for e in step)] = Fraction(q) ** (factor.qpow * n)
        n += 1
    return coeffs


def _mul_box(
    a: dict[Exponents, Fraction], b: dict[Exponents, Fraction], bound: int, arity: int
) -> dict[Exponents, Fraction]:
    out: dict[Exponents, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exps = tuple(x + y for x, y in zip(ea, eb))
            if any(e > bound for e in exps):
                continue
            total = out.get(exps, Fraction(0)) + ca * cb
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
    return out


# ---------------------------------------------------------------------------
# Truncated series


class TruncatedSeries:
    """Exact series coefficients on the box of exponent vectors with entries in 0..bound.

    Absent entries mean coefficient zero.  Multiplication of box-truncated
    series is again exact on the box because exponents are nonnegative.
    """

    __slots__ = ("arity", "bound", "coefficients")

    def __init__(self, arity: int, bound: int, coefficients: Mapping[Exponents, Fraction]):
        if bound < 0:
            raise UsageError("bound must be nonnegative")
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in coefficients.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise UsageError("coefficient exponent vector has wrong arity")
            if any(e < 0 or e > bound for e in exps):
                raise UsageError(f"exponent vector {exps} outside the 0..{bound} box")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = coeff
        self.arity = arity
        self.bound = bound
        self.coefficients = clean

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        exponents = tuple(exponents)
        if any(e < 0 or e > self.bound for e in exponents):
            raise UsageError(f"exponent vector {exponents} outside the truncation box")
        return self.coefficients.get(exponents, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.bound == other.bound
            and self.coefficients == other.coefficients
        )

    __hash__ = None

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.arity != other.arity or self.bound != other.bound:
            raise UsageError("series shapes do not match")
        return TruncatedSeries(
            self.arity, self.bound, _mul_box(self.coefficients, other.coefficients, self.bound, self.arity)
        )

    def sorted_items(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self.coefficients.items(), key=lambda item: grlex_key(item[0]))

    def evaluate(self, point: Sequence[complex]) -> complex:
        total = 0j
        for exps, coeff in self.coefficients.items():
            value = complex(coeff)
            for z, e in zip(point, exps):
                value *= complex(z) ** e
            total += value
        return total

    def __repr__(self) -> str:
        return f"TruncatedSeries(arity={self.arity}, bound={self.bound}, {len(self.coefficients)} terms)"

    def to_dict(self) -> dict:
        return {
            "arity": self.arity,
            "bound": self.bound,
            "coefficients": [[list(e), str(c)] for e, c in self.sorted_items()],
        }


# ---------------------------------------------------------------------------
# Canonical text rendering


def render_monomial(exponents: Exponents, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, exponents):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _render_term(coeff: Fraction, exponents: Exponents, names: Sequence[str]) -> str:
    monomial = render_monomial(exponents, names)
    if monomial == "1":
        return str(coeff)
    if coeff == 1:
        return monomial
    if coeff == -1:
        return f"-{monomial}"
    return f"{coeff}*{monomial}"


def render_polynomial(poly: LaurentPolynomial, names: Sequence[str] | None = None) -> str:
    """Terms in ascending graded-lex order, joined with explicit signs."""
    if names is None:
        names = default_names(poly.arity)
    if poly.is_zero():
        return "0"
    pieces = []
    for exps, coeff in poly.sorted_terms():
        text = _render_term(abs(coeff), exps, names)
        if not pieces:
            pieces.append(text if coeff > 0 else f"-{text}")
        else:
            pieces.append(f" + {text}" if coeff > 0 else f" - {text}")
    return "".join(pieces)


def render_factor(q: int, factor: QPowerFactor, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = default_names(len(factor.exponent))
    coeff = Fraction(q) ** factor.qpow
    monomial = render_monomial(factor.exponent, names)
    if coeff == 1:
        return f"1 - {monomial}"
    return f"1 - {coeff}*{monomial}"


def render_rational(value: FactoredRational, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = default_names(value.arity)
    num = render_polynomial(value.num, names)
    if not value.den:
        return num
    if len(value.num.terms) > 1:
        num = f"({num})"
    if len(value.den) == 1:
        return f"{num}/({render_factor(value.q, value.den[0], names)})"
    atoms = "".join(f"({render_factor(value.q, f, names)})" for f in value.den)
    return f"{num}/({atoms})"


def render_series(series: TruncatedSeries, names: Sequence[str] | None = None) -> str:
    """One line per nonzero coefficient, ascending graded-lex."""
    if names is None:
        names = default_names(series.arity)
    lines = [
        f"{render_monomial(exps, names)}: {coeff}" for exps, coeff in series.sorted_items()
    ]
    return "\n".join(lines)
