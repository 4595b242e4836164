"""Exact rational scalars, dense polynomials, and truncated formal power series.

Every computation in this package runs over arbitrary-precision rationals
(`fractions.Fraction`) — there is no floating point anywhere.  Polynomials are
dense coefficient lists in ascending degree; a truncated series of order N is
a list of N + 1 coefficients representing a power series mod t^(N+1).
"""

from fractions import Fraction
from math import factorial

Rational = Fraction

#: Canonical zero polynomial: a single zero coefficient.
ZERO_POLY = [Fraction(0)]


def make_rational(num: int, den: int) -> Fraction:
    """Return num/den in canonical lowest terms with positive denominator."""
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Canonical wire form: "-3/2", integers without denominator, zero as "0"."""
    return str(q)


def parse_rational(text: str) -> Fraction:
    """Parse the canonical wire form back to a Fraction.

    Accepts integer strings ("5", "-7") and "p/q" strings ("-3/2").
    Raises ValueError on anything else.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


# ---------------------------------------------------------------------------
# Dense polynomials (ascending coefficient lists)
# ---------------------------------------------------------------------------

def poly_normalize(coeffs: list[Fraction]) -> list[Fraction]:
    """Strip trailing zero coefficients; the zero polynomial is [0]."""
    end = len(coeffs)
    while end > 1 and coeffs[end - 1] == 0:
        end -= 1
    out = [Fraction(c) for c in coeffs[:end]]
    return out if out else [Fraction(0)]


def poly_degree(p: list[Fraction]) -> int:
    """Degree of a normalized polynomial; the zero polynomial has degree 0."""
    return len(p) - 1


def poly_eval(p: list[Fraction], x: Fraction) -> Fraction:
    """Evaluate p at x by Horner's rule."""
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_add(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    """Coefficientwise sum, normalized."""
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_normalize(out)


def poly_scale(p: list[Fraction], c: Fraction) -> list[Fraction]:
    """Scalar multiple c·p, normalized."""
    return poly_normalize([c * a for a in p])


def poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    """Product of two polynomials (schoolbook convolution)."""
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_normalize(out)


def poly_affine(p: list[Fraction], a: Fraction, b: Fraction) -> list[Fraction]:
    """The polynomial p(a·x + b), expanded by Horner on coefficients."""
    inner = [Fraction(b), Fraction(a)]
    out = [p[-1]]
    for c in reversed(p[:-1]):
        out = poly_mul(out, inner)
        out = poly_add(out, [c])
    return poly_normalize(out)


def poly_derivative(p: list[Fraction]) -> list[Fraction]:
    """Formal derivative dp/dx."""
    if len(p) == 1:
        return [Fraction(0)]
    return poly_normalize([i * c for i, c in enumerate(p)][1:])


def poly_integral_01(p: list[Fraction]) -> Fraction:
    """Exact integral of p over [0, 1], term by term."""
    return sum((c / (i + 1) for i, c in enumerate(p)), Fraction(0))


# ---------------------------------------------------------------------------
# Truncated formal power series (order N = len - 1, exact mod t^(N+1))
# ---------------------------------------------------------------------------

def series_order(a: list[Fraction]) -> int:
    """Order N of a truncated series with N + 1 stored coefficients."""
    return len(a) - 1


def series_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Cauchy product truncated to the common order."""
    if len(a) != len(b):
        raise ValueError(f"series order mismatch: {len(a) - 1} != {len(b) - 1}")
    n = len(a)
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(n - i):
            out[i + j] += ai * b[j]
    return out


def series_reciprocal(a: list[Fraction]) -> list[Fraction]:
    """Multiplicative inverse b with a·b = 1 mod t^(order+1).

    Uses the forward recurrence b_0 = 1/a_0, b_n = -(1/a_0)·Σ_{j=1..n} a_j b_{n-j}.
    """
    if a[0] == 0:
        raise ValueError("series with zero constant term is not invertible")
    inv0 = 1 / a[0]
    b = [Fraction(0)] * len(a)
    b[0] = inv0
    for n in range(1, len(a)):
        b[n] = -inv0 * sum(a[j] * b[n - j] for j in range(1, n + 1))
    return b


def series_compose(outer: list[Fraction], inner: list[Fraction]) -> list[Fraction]:
    """outer(inner(t)) truncated to the common order.

    Requires inner to have zero constant term, so the composition is a
    well-defined truncated series; computed by Horner-style nested
    multiplication on inner powers.
    """
    if len(outer) != len(inner):
        raise ValueError(f"series order mismatch: {len(outer) - 1} != {len(inner) - 1}")
    if inner[0] != 0:
        raise ValueError("composition requires inner series with zero constant term")
    n = len(outer)
    out = [Fraction(0)] * n
    out[0] = outer[n - 1]
    for c in reversed(outer[:-1]):
        out = series_mul(out, inner)
        out[0] += c
    return out


def exp_series(order: int) -> list[Fraction]:
    """Truncation of e^t: coefficients 1/j! for j = 0..order."""
    if order < 0:
        raise ValueError("series order must be nonnegative")
    return [Fraction(1, factorial(j)) for j in range(order + 1)]


def log1p_series(order: int) -> list[Fraction]:
    """Truncation of log(1+t): coefficients 0, 1, -1/2, 1/3, ..."""
    if order < 0:
        raise ValueError("series order must be nonnegative")
    return [Fraction(0)] + [Fraction((-1) ** (j - 1), j) for j in range(1, order + 1)]
