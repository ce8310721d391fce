"""Numerical certification of the prime-power non-cancellation argument.

For n = p^r and an admissible b, the determinant coefficient is a sum of
per-class contributions, one for each equivalence class of fillings of
each eligible lambda (parts divisible by n, lambda of q) by the bricks
mu = <1^b_1 ... n^b_n>:

    contribution(F) = (-1)^(k(mu)-k) * n^k / delta(F)!
                      * prod over rows j of (r_j - 1)! / prod_i alpha_ij!

The single-row partition <q> contributes exactly one class with value
(-1)^(k(mu)-1) * n! / (b_1! ... b_n!), never zero.  Every other class's
contribution, divided by the <q>-class value, factors as

    first  = 1/delta(F)! * prod_i C(b_i; alpha_i1, ..., alpha_ik)
    second = n^(k-1) / [ (n-1)(n-2)...(n-k+1) * C(n-k; r_1-1, ..., r_k-1) ]

where first is an integer and v_p(second) >= 1.  Hence the <q> class has
strictly the smallest p-adic valuation, the sum cannot vanish, and every
admissible monomial survives in the determinant: d(n) = p(n) for prime
powers.  dominance_check certifies the inequality class by class;
lemma_check covers the multinomial valuation bound that drives it.
"""

from fractions import Fraction
from math import factorial

from .exactmath import multinomial, prime_power, valuation
from .partitions import factorial_of_partition, partitions_of
from .bricks import enumerate_filling_classes
from .circulant import det_coeff_er, hall_admissible


class ClassRecord:
    """One class's contribution inside a DominanceReport."""

    __slots__ = ("lam", "filling_class", "contribution", "valuation")

    def __init__(self, lam, filling_class, contribution, valuation_):
        self.lam = lam
        self.filling_class = filling_class
        self.contribution = contribution
        self.valuation = valuation_

    def __repr__(self):
        return (f"ClassRecord({self.lam.parts}, {self.contribution}, "
                f"v={self.valuation})")


class DominanceReport:
    """All class contributions for one (n, b), with their p-adic valuations.

    passed is true iff the <q>-class valuation is strictly smaller than
    every other class's; construction verifies that the contributions sum
    to det_coeff_er(b) and raises otherwise."""

    def __init__(self, n, b, p, r, q_class_valuation, class_records, passed):
        self.n = n
        self.b = b
        self.p = p
        self.r = r
        self.q_class_valuation = q_class_valuation
        self.class_records = class_records
        self.passed = passed

    def other_valuations(self):
        """Valuations of the non-<q> classes, ascending."""
        q = self.b.q
        return sorted(rec.valuation for rec in self.class_records
                      if rec.lam.parts != (q,))

    def __repr__(self):
        return (f"DominanceReport(n={self.n}, b={self.b.b}, "
                f"v_base={self.q_class_valuation}, "
                f"classes={len(self.class_records)}, passed={self.passed})")


def q_class_contribution(b):
    """The <q>-class term: (-1)^(k(mu)-1) * n! / (b_1! ... b_n!).

    Always a nonzero integer (returned as an exact rational)."""
    n = b.n
    if b.q % n:
        raise ValueError("no contribution")
    sign = -1 if (n - 1) % 2 else 1
    return Fraction(sign * multinomial(n, b.b))


def class_contribution(fc, n):
    """One class's exact contribution to the coefficient sum:
    (-1)^(k(mu)-k) * n^k / delta! * prod_j (r_j - 1)!/prod_i alpha_ij!."""
    if any(part % n for part in fc.lam.parts):
        raise ValueError("lambda parts must be multiples of n")
    k = fc.lam.k
    sign = -1 if (fc.mu.k - k) % 2 else 1
    val = Fraction(sign * n ** k, factorial_of_partition(fc.delta))
    for row in fc.rows:
        den = 1
        seen = {}
        for s in row:
            seen[s] = seen.get(s, 0) + 1
        for m in seen.values():
            den *= factorial(m)
        val *= Fraction(factorial(len(row) - 1), den)
    return val


def contribution_ratio_factors(fc, b, n):
    """Factor |class_contribution / q_class_contribution| as first*second:

        first  = 1/delta! * prod_i C(b_i; alpha_i1..alpha_ik)   (an integer)
        second = n^(k-1) / [(n-1)..(n-k+1) * C(n-k; r_1-1..r_k-1)]

    second carries p-adic valuation >= 1 when n is a power of p, which is
    the whole dominance argument.  Signs are normalized away; only the
    valuations matter."""
    if prime_power(n) is None:
        raise ValueError("n must be a prime power")
    if any(part % n for part in fc.lam.parts):
        raise ValueError("lambda parts must be multiples of n")
    q = b.q
    if fc.lam.parts == (q,):
        raise ValueError("ratio undefined for the base class")
    k = fc.lam.k
    first = Fraction(1, factorial_of_partition(fc.delta))
    for i in range(1, n + 1):
        if b.b[i - 1]:
            row_counts = [fc.alpha(i, j) for j in range(k)]
            first *= multinomial(b.b[i - 1], row_counts)
    falling = 1
    for t in range(1, k):
        falling *= n - t
    second = Fraction(n ** (k - 1),
                      falling * multinomial(n - k, [r - 1 for r in fc.r]))
    return first, second


def dominance_check(b, n):
    """Certify the valuation inequality for one admissible b at n = p^r.

    Enumerates every eligible lambda and every filling class, records
    each contribution and its p-adic valuation, and passes iff the
    <q>-class valuation is strictly smaller than all others.  Raises if
    the contributions fail to sum to det_coeff_er(b)."""
    pp = prime_power(n)
    if pp is None:
        raise ValueError("dominance argument applies to prime powers only")
    if b.n != n:
        raise ValueError("b is not an exponent vector for this n")
    if not hall_admissible(b):
        raise ValueError("b is not admissible")
    p, r = pp
    q = b.q
    mu = b.mu()
    base = q_class_contribution(b)
    v_base = valuation(base, p)
    records = []
    total = Fraction(0)
    passed = True
    for lam in partitions_of(q, n):
        for fc in enumerate_filling_classes(lam, mu):
            contrib = class_contribution(fc, n)
            v = valuation(contrib, p)
            records.append(ClassRecord(lam, fc, contrib, v))
            total += contrib
            if lam.parts == (q,):
                if contrib != base:
                    raise RuntimeError("base class does not match "
                                       "q_class_contribution")
            elif v <= v_base:
                passed = False
    if total != det_coeff_er(b):
        raise RuntimeError("class contributions do not sum to the coefficient")
    return DominanceReport(n, b, p, r, v_base, records, passed)


def lemma_check(m, p, s, parts):
    """The multinomial valuation bound: for m < p^s and parts
    (d_1,...,d_k) summing to m with k >= 2,

        v_p( m! / (d_1! ... d_k!) ) < (k-1)*s.

    The two-part case is the binomial form v_p(C(m,d)) < s.  Returns
    whether the bound holds (the argument needs it to always hold)."""
    parts = list(parts)
    if len(parts) < 2:
        raise ValueError("need at least two parts")
    if m >= p ** s:
        raise ValueError("hypothesis violated")
    value = multinomial(m, parts)
    return valuation(value, p) < (len(parts) - 1) * s
