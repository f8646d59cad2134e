"""Independent reference evaluators.

Nothing here imports the package.  Every summand is written out factor by
factor with ``fractions.Fraction`` so it can be compared against the template
engine.  Parameters are passed as plain values (not square-root seeds); none
of the builtin summands needs a half-integer power.
"""

from __future__ import annotations

from fractions import Fraction


def poch(x, base, n: int):
    """(x; base)_n with the usual extension to negative n."""
    if n >= 0:
        out = Fraction(1)
        for i in range(n):
            out *= 1 - x * base ** i
        return out
    return 1 / poch(x * base ** n, base, -n)


def pochs(xs, base, n):
    out = Fraction(1)
    for x in xs:
        out *= poch(x, base, n)
    return out


def binom2(k):
    return k * (k - 1) // 2


def _qpow(q, e: Fraction):
    e = Fraction(e)
    assert e.denominator == 1
    return q ** int(e)


# ---------------------------------------------------------------------------
# the four quartic series
# ---------------------------------------------------------------------------


def term_F(k, q, a, b, d):
    return ((1 - q ** (5 * k) * a)
            * pochs([b, d], q, k) / poch(q ** 3 * a / (b * b * d * d), q, k)
            * poch(q * a / (b * d), q, 3 * k)
            / pochs([b * d, b * d / q, q * b * d], q ** 2, k)
            * poch(b * b * d * d / q ** 2, q ** 4, k)
            / pochs([q ** 4 * a / b, q ** 4 * a / d], q ** 4, k)
            * q ** k)


def term_G(k, q, a, c, e):
    ce = c * e
    return ((1 - q ** (5 * k) * a)
            * poch(ce * ce / (q ** 2 * a ** 3), q, k) / pochs([q * a / c, q * a / e], q, k)
            * pochs([q * a * a / ce, q ** 2 * a * a / ce, q ** 3 * a * a / ce], q ** 2, k)
            / poch(ce / a, q, 3 * k)
            * pochs([c, e], q ** 4, k) / poch(q ** 6 * a ** 4 / (ce * ce), q ** 4, k)
            * q ** k)


def term_U(k, q, a, b, d):
    bd = b * d
    return ((1 - q ** (5 * k) * a)
            * poch(q * q * a / bd, q, k) / poch(bd, q * q, 2 * k)
            * pochs([b, d], q * q, k) / poch(q ** 5 * a * a / (bd * bd), q * q, k)
            * poch(q ** 3 * a * a / bd, q ** 6, k) / (-bd / (q ** 3 * a)) ** k
            * poch(bd * bd / (q ** 3 * a), q ** 3, k)
            / pochs([q ** 3 * a / b, q ** 3 * a / d], q ** 3, k)
            * q ** binom2(k))


def term_V(k, q, a, c, e):
    ce = c * e
    return ((1 - q ** (5 * k) * a)
            * poch(a * a / ce, q * q, 2 * k) / poch(q * ce / a, q, k)
            * poch(q * ce * ce / (a * a), q * q, k) / pochs([q * a / c, q * a / e], q * q, k)
            * (-a / ce) ** k / poch(q ** 5 * ce, q ** 6, k)
            * pochs([q * c, q * e], q ** 3, k) / poch(q * q * a ** 3 / (ce * ce), q ** 3, k)
            * q ** (-binom2(k)))


# ---------------------------------------------------------------------------
# auxiliary sums from the m-step iterations
# ---------------------------------------------------------------------------


def term_U_diamond(k, q, a, b, d):
    bd = b * d
    x = q ** 9 * a ** 2 / (bd * bd)
    return ((1 - q ** (9 + 9 * k) * a ** 3 / bd ** 3)
            * pochs([q * q * a / bd, q ** 4 * a / bd, q ** 6 * a / bd], q ** 3, k)
            / pochs([q ** 3 * a / b, q ** 3 * a / d, q ** 9 * a / (bd * bd)], q ** 3, k)
            * q ** (3 * k)
            * pochs([q ** 3 * a * a / bd, q ** 9 * a * a / (b * b * d ** 3),
                     q ** 9 * a * a / (b ** 3 * d * d)], q ** 6, k)
            / pochs([x, q * q * x, q ** 4 * x], q ** 6, k))


def term_U_triangle(k, q, a, b, d):
    bd = b * d
    return ((1 - q ** (5 + 8 * k) * a * a / (b * d * d))
            * poch(b, q * q, 2 * k) / poch(q ** 7 * a * a / (bd * bd), q * q, 2 * k)
            * pochs([q * q * a / bd, q ** 5 * a / bd], q * q, k)
            / pochs([q ** 4 / d, bd / q ** 2], q * q, k)
            * pochs([q ** 3 * a * a / bd, q ** 9 * a * a / (b * b * d ** 3)], q ** 6, k)
            / pochs([q ** 6 * a / d, q ** 9 * a / d], q ** 6, k)
            * q ** (2 * k))


def term_U_star(k, q, a, b, d):
    # sign (-qa/bd)^k, see the decision ledger
    bd = b * d
    return ((1 - q ** (5 * k - 1) * b * b * d / a)
            * poch(bd * bd / (q * a * a), q * q, k)
            / pochs([q ** 4 / d, bd / q ** 2], q * q, k)
            * poch(b, q * q, 2 * k) / poch(bd / a, q, k)
            * pochs([q ** 3 * b / a, bd * bd / (q ** 3 * a)], q ** 3, k)
            / poch(q ** 3 * a / d, q ** 3, k)
            * (-q * a / bd) ** k * q ** (-binom2(k))
            / poch(q ** 3 * b ** 3 * d * d / (a * a), q ** 6, k))


def term_V_diamond(k, q, a, c, e):
    ce = c * e
    y = q * ce * ce / (a * a)
    return ((1 - q ** (3 + 9 * k) * ce ** 3 / a ** 3)
            * pochs([q * c, q * e, q ** 4 * ce * ce / a ** 3], q ** 3, k)
            / pochs([q * ce / a, q ** 3 * ce / a, q ** 5 * ce / a], q ** 3, k)
            * q ** (3 * k)
            * pochs([y, q * q * y, q ** 4 * y], q ** 6, k)
            / pochs([q ** 5 * ce, q ** 8 * c * c * e ** 3 / a ** 3,
                     q ** 8 * c ** 3 * e * e / a ** 3], q ** 6, k))


def term_V_triangle(k, q, a, c, e):
    ce = c * e
    return ((1 - q ** (2 + 8 * k) * c * c * e / a)
            * poch(q * c, q ** 3, 2 * k)
            / pochs([q ** 5 * ce, q ** 8 * c ** 3 * e * e / a ** 3], q ** 6, k)
            * pochs([q ** 3 * c / a, a * a / ce], q * q, k)
            / pochs([ce / a, q ** 3 * ce / a], q * q, k)
            * poch(q * ce * ce / (a * a), q * q, 2 * k) / poch(q ** 3 * a / e, q * q, 2 * k)
            * q ** (2 * k))


def term_V_star(k, q, a, c, e):
    ce = c * e
    return ((1 - q ** (2 + 5 * k) * a * a / (c * e * e))
            * pochs([q ** 3 * c / a, a * a / ce], q * q, k)
            / poch(q ** 3 * a * a / (ce * ce), q * q, k)
            * poch(q * a / ce, q, k) / poch(q ** 3 * a / e, q * q, 2 * k)
            * q ** binom2(k)
            * poch(q * c, q ** 3, k) * poch(q ** 4 * a ** 3 / (c * c * e ** 3), q ** 6, k)
            / pochs([q * q * a ** 3 / (ce * ce), q ** 5 / e], q ** 3, k)
            * (-q * q * a / ce) ** k)


# ---------------------------------------------------------------------------
# the two limit series (terms only; sums are truncated by the caller)
# ---------------------------------------------------------------------------


def term_limit_u_quadratic(k, q, b, d):
    bd = b * d
    return bd ** k * pochs([b, d], q * q, k) / poch(bd, q * q, 2 * k) * q ** (4 * binom2(k))


def term_limit_u_cubic(k, q, a, b, d):
    return ((a / b) ** k * poch(b * b * d * d / (q ** 3 * a), q ** 3, k)
            / poch(q ** 3 * a / b, q ** 3, k) * q ** (3 * binom2(k + 1)))


TERMS = {
    "F": (term_F, "abd"),
    "G": (term_G, "ace"),
    "U": (term_U, "abd"),
    "V": (term_V, "ace"),
    "U_diamond": (term_U_diamond, "abd"),
    "U_triangle": (term_U_triangle, "abd"),
    "U_star": (term_U_star, "abd"),
    "V_diamond": (term_V_diamond, "ace"),
    "V_triangle": (term_V_triangle, "ace"),
    "V_star": (term_V_star, "ace"),
    "limit_u_quadratic": (term_limit_u_quadratic, "bd"),
    "limit_u_cubic": (term_limit_u_cubic, "abd"),
}


def naive_term(name: str, k: int, values: dict):
    fn, params = TERMS[name]
    return fn(k, values["q"], *(values[p] for p in params))


def naive_partial_sum(name: str, count: int, values: dict):
    return sum((naive_term(name, k, values) for k in range(count)), Fraction(0))


# ---------------------------------------------------------------------------
# numeric references
# ---------------------------------------------------------------------------


def theta_reference(x, p, terms: int = 200):
    """theta(x;p) as a plain truncated double product, at the caller's mpmath precision."""
    import mpmath

    out = mpmath.mpf(1)
    for i in range(terms):
        out *= (1 - x * p ** i) * (1 - p ** (i + 1) / x)
    return out
