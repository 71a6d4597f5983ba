"""Exact scalar domains shared by every other module.

Four kinds of numbers appear throughout:

  * plain rationals -- stdlib ``Fraction`` (re-exported as ``Rational``);
  * ``NPoly`` -- polynomials in the formal parameter N with rational
    coefficients, used while N is kept symbolic;
  * ``SurdSum`` -- finite sums ``sum c_r * sqrt(r)`` with c_r rational and
    r squarefree, the entry type of representation matrices.  The squarefree
    normal form makes equality of values equality of the coefficient maps;
  * ``USeries`` -- formal series ``a*u + c_0 + c_1/u + ... + c_K/u^K``
    truncated at order K, with at most one positive power of u.

All values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction, "NPoly"]


def as_fraction(x: int | Fraction) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into a Fraction."""
    return Fraction(text.strip())


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# polynomials in the formal parameter N


class NPoly:
    """Polynomial in the formal symbol N over the rationals.

    Stored as a map exponent -> nonzero Fraction.  Arithmetic accepts ints and
    Fractions on either side, so code generic over "Fraction or NPoly" scalars
    can mix them freely.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = as_fraction(c)
                if c:
                    if e < 0:
                        raise ValueError("negative exponent in NPoly")
                    clean[e] = c
        self.coeffs = clean

    # -- constructors

    @staticmethod
    def zero() -> NPoly:
        return NPoly()

    @staticmethod
    def one() -> NPoly:
        return NPoly({0: Fraction(1)})

    @staticmethod
    def const(c: int | Fraction) -> NPoly:
        return NPoly({0: as_fraction(c)})

    @staticmethod
    def N() -> NPoly:
        return NPoly({1: Fraction(1)})

    @staticmethod
    def coerce(x: Scalar) -> NPoly:
        if isinstance(x, NPoly):
            return x
        return NPoly.const(as_fraction(x))

    # -- queries

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(e == 0 for e in self.coeffs)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.coeffs.get(0, Fraction(0))

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations

    def __add__(self, other) -> NPoly:
        other = NPoly.coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return NPoly(out)

    __radd__ = __add__

    def __neg__(self) -> NPoly:
        return NPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> NPoly:
        return self + (-NPoly.coerce(other))

    def __rsub__(self, other) -> NPoly:
        return NPoly.coerce(other) + (-self)

    def __mul__(self, other) -> NPoly:
        other = NPoly.coerce(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return NPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> NPoly:
        if k < 0:
            raise ValueError("negative power of an NPoly")
        result = NPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NPoly.const(as_fraction(other))
        if not isinstance(other, NPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    # -- specialization and printing

    def eval(self, value: int | Fraction) -> Fraction:
        """Specialize N to a rational value."""
        v = as_fraction(value)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * v**e
        return total

    def sort_key(self) -> tuple:
        return tuple(sorted(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"NPoly({self.to_string()!r})"

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = format_rational(c)
            else:
                var = "N" if e == 1 else f"N^{e}"
                body = var if c == 1 else f"{format_rational(c)}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    @staticmethod
    def from_string(text: str) -> NPoly:
        """Inverse of to_string; accepts e.g. "3/2*N^2 - N + 1"."""
        text = text.strip().replace("-", "+-")
        coeffs: dict[int, Fraction] = {}
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            neg = chunk.startswith("-")
            if neg:
                chunk = chunk[1:].strip()
            if "N" in chunk:
                head, _, tail = chunk.partition("N")
                head = head.strip().rstrip("*").strip()
                coeff = Fraction(head) if head else Fraction(1)
                tail = tail.strip()
                exp = int(tail[1:]) if tail.startswith("^") else 1
            else:
                coeff = Fraction(chunk)
                exp = 0
            if neg:
                coeff = -coeff
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + coeff
        return NPoly(coeffs)


HALF = Fraction(1, 2)


def n_minus_1_half() -> NPoly:
    """(N - 1)/2 as a symbolic polynomial; the constant term of every x_k."""
    return NPoly({1: HALF, 0: -HALF})


# ---------------------------------------------------------------------------
# quadratic-surd sums


def squarefree_decomposition(r: int) -> tuple[int, int]:
    """Write r = m^2 * s with s squarefree; returns (m, s).

    Trial division is plenty: radicands come from products of half-integers
    bounded at desk scale.
    """
    if r <= 0:
        raise ValueError("radicand must be positive")
    m, s = 1, 1
    d = 2
    while d * d <= r:
        if r % d == 0:
            count = 0
            while r % d == 0:
                r //= d
                count += 1
            m *= d ** (count // 2)
            if count % 2:
                s *= d
        d += 1
    return m, s * r


class SurdSum:
    """Exact real number of the form sum c_r * sqrt(r), r squarefree.

    The map radicand -> coefficient is the unique normal form (square roots of
    distinct squarefree integers are linearly independent over Q), so value
    equality is map equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for r, c in terms.items():
                c = as_fraction(c)
                if not c:
                    continue
                m, s = squarefree_decomposition(r)
                acc = clean.get(s, Fraction(0)) + m * c
                if acc:
                    clean[s] = acc
                else:
                    clean.pop(s, None)
        self.terms = clean

    @staticmethod
    def zero() -> SurdSum:
        return SurdSum()

    @staticmethod
    def one() -> SurdSum:
        return SurdSum({1: Fraction(1)})

    @staticmethod
    def rational(q: int | Fraction) -> SurdSum:
        return SurdSum({1: as_fraction(q)})

    @staticmethod
    def coerce(x) -> SurdSum:
        if isinstance(x, SurdSum):
            return x
        return SurdSum.rational(as_fraction(x))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_rational(self) -> bool:
        return all(r == 1 for r in self.terms)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.terms.get(1, Fraction(0))

    def __add__(self, other) -> SurdSum:
        other = SurdSum.coerce(other)
        out = dict(self.terms)
        for r, c in other.terms.items():
            s = out.get(r, Fraction(0)) + c
            if s:
                out[r] = s
            else:
                out.pop(r, None)
        result = SurdSum.__new__(SurdSum)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> SurdSum:
        result = SurdSum.__new__(SurdSum)
        result.terms = {r: -c for r, c in self.terms.items()}
        return result

    def __sub__(self, other) -> SurdSum:
        return self + (-SurdSum.coerce(other))

    def __rsub__(self, other) -> SurdSum:
        return SurdSum.coerce(other) + (-self)

    def __mul__(self, other) -> SurdSum:
        other = SurdSum.coerce(other)
        out: dict[int, Fraction] = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in other.terms.items():
                if r1 == r2:
                    m, s = r1, 1
                else:
                    m, s = squarefree_decomposition(r1 * r2)
                acc = out.get(s, Fraction(0)) + m * c1 * c2
                if acc:
                    out[s] = acc
                else:
                    out.pop(s, None)
        result = SurdSum.__new__(SurdSum)
        result.terms = out
        return result

    __rmul__ = __mul__

    def divide_rational(self, q: int | Fraction) -> SurdSum:
        q = as_fraction(q)
        if not q:
            raise ZeroDivisionError("division of a SurdSum by zero")
        result = SurdSum.__new__(SurdSum)
        result.terms = {r: c / q for r, c in self.terms.items()}
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SurdSum.rational(as_fraction(other))
        if not isinstance(other, SurdSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def __float__(self) -> float:
        import math

        return sum(float(c) * math.sqrt(r) for r, c in self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for r in sorted(self.terms):
            c = self.terms[r]
            parts.append(format_rational(c) if r == 1 else f"{format_rational(c)}*sqrt({r})")
        return " + ".join(parts)


def surd_mul(a: SurdSum, b: SurdSum) -> SurdSum:
    """Exact product with radicands reduced to squarefree form."""
    return a * b


def sqrt_of_rational(q: int | Fraction) -> SurdSum:
    """The non-negative square root of q >= 0 as c*sqrt(r), r squarefree."""
    q = as_fraction(q)
    if q < 0:
        raise ValueError(f"sqrt of negative rational {q}")
    if q == 0:
        return SurdSum.zero()
    # sqrt(p/q) = sqrt(p*q)/q
    m, s = squarefree_decomposition(q.numerator * q.denominator)
    return SurdSum({s: Fraction(m, q.denominator)})


# ---------------------------------------------------------------------------
# truncated series in 1/u


class USeries:
    """Truncated formal series a*u + c_0 + c_1 u^{-1} + ... + c_K u^{-K}.

    Coefficients may be Fractions or NPoly (anything forming a commutative
    ring that absorbs ints).  At most one positive power of u is carried,
    which is all the central series Z(mu, u) needs.  Multiplication of two
    series with u-terms is rejected.
    """

    __slots__ = ("order", "coeffs", "u_coeff")

    def __init__(self, coeffs: Iterable, u_coeff=0):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a USeries needs at least the constant term")
        self.order = len(self.coeffs) - 1
        self.u_coeff = u_coeff

    @staticmethod
    def constant(value, order: int) -> USeries:
        return USeries([value] + [0] * order)

    @staticmethod
    def u_term(order: int) -> USeries:
        """The bare series u (trusted through u^{-order})."""
        return USeries([0] * (order + 1), u_coeff=1)

    def coeff(self, i: int):
        if i == -1:
            return self.u_coeff
        return self.coeffs[i]

    def truncate(self, order: int) -> USeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return USeries(self.coeffs[: order + 1], self.u_coeff)

    def __add__(self, other) -> USeries:
        if not isinstance(other, USeries):
            other = USeries.constant(other, self.order)
        k = min(self.order, other.order)
        return USeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(k + 1)],
            self.u_coeff + other.u_coeff,
        )

    __radd__ = __add__

    def __neg__(self) -> USeries:
        return USeries([-c for c in self.coeffs], -self.u_coeff)

    def __sub__(self, other) -> USeries:
        if not isinstance(other, USeries):
            other = USeries.constant(other, self.order)
        return self + (-other)

    def __mul__(self, other) -> USeries:
        if not isinstance(other, USeries):
            return USeries([c * other for c in self.coeffs], self.u_coeff * other)
        a_u = not (self.u_coeff == 0 or (hasattr(self.u_coeff, "is_zero") and self.u_coeff.is_zero()))
        b_u = not (other.u_coeff == 0 or (hasattr(other.u_coeff, "is_zero") and other.u_coeff.is_zero()))
        if a_u and b_u:
            raise ValueError("product of two series with u-terms leaves the carried form")
        k = min(self.order, other.order)
        if a_u:
            k = min(k, other.order - 1)
        if b_u:
            k = min(k, self.order - 1)
        if k < 0:
            raise ValueError("series too short for a u-shifted product")
        u_out = self.u_coeff * other.coeffs[0] + other.u_coeff * self.coeffs[0]
        out = []
        for i in range(k + 1):
            acc = 0
            for s in range(i + 1):
                acc = acc + self.coeffs[s] * other.coeffs[i - s]
            if a_u:
                acc = acc + self.u_coeff * other.coeffs[i + 1]
            if b_u:
                acc = acc + other.u_coeff * self.coeffs[i + 1]
            out.append(acc)
        return USeries(out, u_out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.u_coeff == other.u_coeff
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.order, self.u_coeff, self.coeffs))

    def agrees_with(self, other: USeries, order: int | None = None) -> bool:
        """Coefficientwise equality through the given (or common) order."""
        k = min(self.order, other.order) if order is None else order
        if k > min(self.order, other.order):
            raise ValueError("comparison order exceeds a truncation order")
        return self.u_coeff == other.u_coeff and all(
            self.coeffs[i] == other.coeffs[i] for i in range(k + 1)
        )

    def __repr__(self) -> str:
        return f"USeries(u_coeff={self.u_coeff}, coeffs={list(self.coeffs)})"


def linear_fraction_series(alpha, beta, order: int) -> USeries:
    """(u + alpha)/(u - beta) = 1 + (alpha+beta) * sum_{t>=1} beta^{t-1} u^{-t}."""
    top = alpha + beta
    coeffs: list = [1]
    power = 1
    for _ in range(order):
        coeffs.append(top * power)
        power = power * beta
    return USeries(coeffs)


def series_from_fraction(b, sign_pattern: tuple[int, int] = (1, -1), order: int = 0) -> USeries:
    """Expansion of (u + s1*b)/(u + s2*b) for signs (s1, s2), truncated.

    The default pattern gives (u+b)/(u-b) = 1 + 2*sum b^i u^{-i}, the factor
    from which every central series in this package is assembled.
    """
    s1, s2 = sign_pattern
    return linear_fraction_series(s1 * b, -s2 * b, order)


def series_product(factors: Iterable[USeries], order: int) -> USeries:
    result = USeries.constant(1, order)
    for f in factors:
        result = result * (f if f.order == order else f.truncate(order))
    return result
