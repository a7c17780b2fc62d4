"""Closed-form coefficient formulas around generalized Catalan numbers.

Everything returns exact integers or Fractions. Each formula has an
independent counterpart elsewhere (series expansion or exhaustive
enumeration); nothing here is trusted on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import binomial, factorial, format_rational, harmonic, multichoose
from . import series as fps


def gen_catalan(k: int, n: int) -> int:
    """Generalized Catalan number C(kn, n-1) / n (the quotient is exact)."""
    if k < 1 or n < 1:
        raise ValueError("gen_catalan needs k >= 1 and n >= 1")
    q, r = divmod(binomial(k * n, n - 1), n)
    assert r == 0, "C(kn, n-1) is always divisible by n"
    return q


def coeff_log(k: int, n: int) -> Fraction:
    """Coefficient of x^n in the log of the Catalan series: (kn-1)!/((kn-n)!*n!)."""
    if k < 1 or n < 1:
        raise ValueError("coeff_log needs k >= 1 and n >= 1")
    return Fraction(factorial(k * n - 1), factorial(k * n - n) * factorial(n))


def returns_count(k: int, n: int, p: int) -> int:
    """Unlabeled good paths of size n that meet the diagonal exactly p times
    (origin counted, endpoint not): ((kp-p)/(kn-p)) * C(kn-p, n-p)."""
    if k < 2 or n < 1:
        raise ValueError("returns_count needs k >= 2 and n >= 1")
    if not 1 <= p <= n:
        raise ValueError(f"p must lie in 1..{n}, got {p}")
    value = Fraction((k - 1) * p, k * n - p) * binomial(k * n - p, n - p)
    assert value.denominator == 1
    return value.numerator


def composition_sum(p: int, a: int) -> Fraction:
    """Sum of 1/(q_1*...*q_a) over all a-part compositions of p.

    Dynamic programming over (parts used, total reached); the literal
    composition enumeration lives in the tests as an oracle. Returns 0
    when a > p (no compositions).
    """
    if p < 1 or a < 1:
        raise ValueError("composition_sum needs p >= 1 and a >= 1")
    if a > p:
        return Fraction(0)
    table = [[Fraction(0)] * (p + 1) for _ in range(a + 1)]
    table[0][0] = Fraction(1)
    for j in range(1, a + 1):
        for m in range(j, p + 1):
            acc = Fraction(0)
            for q in range(1, m - j + 2):
                acc += table[j - 1][m - q] / q
            table[j][m] = acc
    return table[a][p]


def coeff_log_power(k: int, n: int, a: int) -> Fraction:
    """Coefficient of x^n in the a-th power of the log of the Catalan series.

    Computed as the diagonal-return sum over p, so it stays independent
    of both the factorial form in coeff_log and the series expansion.
    Zero for n < a (the a-th log power has valuation a).
    """
    if k < 2 or a < 1 or n < 1:
        raise ValueError("coeff_log_power needs k >= 2, n >= 1, a >= 1")
    if n < a:
        return Fraction(0)
    total = Fraction(0)
    for p in range(a, n + 1):
        total += returns_count(k, n, p) * composition_sum(p, a)
    return total


def knuth_log2_coeff(n: int) -> Fraction:
    """Squared-log coefficient for k=2 in harmonic form:
    (1/n) * C(2n, n) * (H_{2n-1} - H_n)."""
    if n < 1:
        raise ValueError("knuth_log2_coeff needs n >= 1")
    return Fraction(binomial(2 * n, n), n) * (harmonic(2 * n - 1) - harmonic(n))


def knuth_general_log2(k: int, n: int) -> Fraction:
    """Squared-log coefficient for general k >= 2 in harmonic form:
    2 * sum_p ((k-1)/(kn-p)) * C(kn-p, n-p) * H_{p-1}."""
    if k < 2 or n < 2:
        raise ValueError("knuth_general_log2 needs k >= 2 and n >= 2")
    total = Fraction(0)
    for p in range(2, n + 1):
        total += Fraction(k - 1, k * n - p) * binomial(k * n - p, n - p) * harmonic(p - 1)
    return 2 * total


def count_ornaments(k: int, n: int) -> int:
    """(kn-1)!/(kn-n)!, the number of ornaments (and of several structures
    in bijection with them) on n labels."""
    if k < 2 or n < 1:
        raise ValueError("count_ornaments needs k >= 2 and n >= 1")
    return factorial(k * n - 1) // factorial(k * n - n)


def count_paths(k: int, n: int) -> int:
    """Labeled good paths on n labels: n! * gen_catalan(k, n) = (n-1)! * C(kn, n-1)."""
    if k < 2 or n < 1:
        raise ValueError("count_paths needs k >= 2 and n >= 1")
    return factorial(n - 1) * binomial(k * n, n - 1)


def count_multisets(k: int, n: int) -> int:
    """Cyclically ordered multisets on n labels: (n-1)! * multichoose((k-1)n, n)."""
    if k < 2 or n < 1:
        raise ValueError("count_multisets needs k >= 2 and n >= 1")
    return factorial(n - 1) * multichoose((k - 1) * n, n)


# -- coefficient tables -------------------------------------------------------


@dataclass(frozen=True)
class CoeffRow:
    n: int
    closed_form: Fraction
    series_value: Fraction | None
    match: bool | None


@dataclass(frozen=True)
class CoeffTable:
    k: int
    power: int
    rows: tuple[CoeffRow, ...]


def coeff_table(k: int, max_n: int, power: int = 1, check: bool = False) -> CoeffTable:
    """Tabulate closed-form log-power coefficients, optionally against the
    series expansion computed from scratch."""
    if k < 1 or max_n < 1 or power < 1:
        raise ValueError("coeff_table needs k >= 1, max_n >= 1, power >= 1")
    if k == 1 and power > 1:
        raise ValueError("closed forms for higher log powers need k >= 2")
    if check:
        powered = fps.catalan_series(k, max_n).log() ** power
    rows = []
    for n in range(1, max_n + 1):
        closed = coeff_log(k, n) if power == 1 else coeff_log_power(k, n, power)
        if check:
            value = powered[n]
            rows.append(CoeffRow(n, closed, value, closed == value))
        else:
            rows.append(CoeffRow(n, closed, None, None))
    return CoeffTable(k, power, tuple(rows))


def table_to_csv(table: CoeffTable) -> str:
    lines = ["n,closed_form,series_value,match"]
    for r in table.rows:
        sv = format_rational(r.series_value) if r.series_value is not None else ""
        mt = "" if r.match is None else str(r.match).lower()
        lines.append(f"{r.n},{format_rational(r.closed_form)},{sv},{mt}")
    return "\n".join(lines) + "\n"


def table_to_json(table: CoeffTable) -> dict:
    return {
        "k": table.k,
        "power": table.power,
        "rows": [
            {
                "n": r.n,
                "closed_form": format_rational(r.closed_form),
                "series_value": (
                    format_rational(r.series_value) if r.series_value is not None else None
                ),
                "match": r.match,
            }
            for r in table.rows
        ],
    }
