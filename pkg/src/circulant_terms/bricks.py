"""Fillings of Ferrers diagrams by bricks and the monomial-to-power-sum
basis conversion they encode.

A brick of length i is a horizontal run of i boxes.  A filling of a
partition lambda by a brick multiset mu tiles each row of lambda's
diagram exactly with bricks drawn from mu; rows are positionally
distinct even when equal in length.  The weight of a filling is the
product over rows of the length of the rightmost brick (either end
convention gives the same totals, by symmetry of arrangements; we fix
rightmost).  w(lambda, mu) is the total weight of all distinct fillings,
and it is the structure constant of the Egecioglu-Remmel expansion of
the monomial symmetric function m_mu in the power-sum basis:

    m_mu = sum over lambda of (-1)^(k(mu)-k(lambda)) * w(lambda, mu) / z(lambda) * p_lambda

Fillings of a fixed (lambda, mu) split into equivalence classes under
rearranging bricks within a row and swapping the brick sets of
equal-length rows; class totals have a closed form that the dominance
argument in the theorem module dissects prime by prime.
"""

from collections import Counter
from fractions import Fraction
from math import factorial
from random import Random

from .partitions import Partition, factorial_of_partition, partitions_of, z_of


class BrickMultiset:
    """A multiset of brick lengths (a partition viewed as available bricks)."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        counts = tuple(counts)
        if any(c < 0 for c in counts):
            raise ValueError("counts must be non-negative")
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_lengths(cls, lengths):
        lengths = tuple(lengths)
        out = [0] * (max(lengths) if lengths else 0)
        for s in lengths:
            if s < 1:
                raise ValueError("brick lengths must be positive")
            out[s - 1] += 1
        return cls(out)

    @classmethod
    def from_partition(cls, mu):
        return cls.from_lengths(mu.parts)

    def count(self, length):
        """Number of bricks of the given length."""
        if 1 <= length <= len(self.counts):
            return self.counts[length - 1]
        return 0

    @property
    def mass(self):
        """Total number of boxes the bricks cover."""
        return sum((i + 1) * c for i, c in enumerate(self.counts))

    def lengths(self):
        """All brick lengths with multiplicity, longest first."""
        out = []
        for i in range(len(self.counts), 0, -1):
            out.extend([i] * self.counts[i - 1])
        return tuple(out)

    def __setattr__(self, name, value):
        raise AttributeError("BrickMultiset is immutable")

    def __eq__(self, other):
        return isinstance(other, BrickMultiset) and self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return f"BrickMultiset({self.counts})"


def row_weight_sum(row_length, bricks):
    """Total weight of all distinct arrangements of a brick multiset in one
    row: the sum over arrangements of the rightmost brick's length.

    Closed form (1/r) * multinomial(r; alpha) * row_length where r is the
    number of bricks and alpha their multiplicities; always an integer.
    """
    if bricks.mass != row_length:
        raise ValueError("bricks do not fill row")
    r = sum(bricks.counts)
    num = factorial(r - 1) * row_length
    den = 1
    for c in bricks.counts:
        den *= factorial(c)
    val, rem = divmod(num, den)
    if rem:
        raise RuntimeError("row weight sum is not an integer")
    return val


def _row_weight(row_length, mult):
    # mult: {length: count}; same closed form, on the internal representation
    r = sum(mult.values())
    den = 1
    for c in mult.values():
        den *= factorial(c)
    return factorial(r - 1) * row_length // den


def _sub_multisets(counts, target):
    """All sub-multisets of counts ({length: count}) of total mass target,
    each as a sorted-descending tuple of lengths.  Deterministic order."""
    sizes = sorted((s for s in counts if counts[s]), reverse=True)
    suffix_mass = [0] * (len(sizes) + 1)
    for i in range(len(sizes) - 1, -1, -1):
        suffix_mass[i] = suffix_mass[i + 1] + sizes[i] * counts[sizes[i]]
    out = []
    acc = []

    def descend(i, rem):
        if rem == 0:
            out.append(tuple(acc))
            return
        if i == len(sizes) or suffix_mass[i] < rem:
            return
        s = sizes[i]
        for a in range(min(counts[s], rem // s), -1, -1):
            acc.extend([s] * a)
            descend(i + 1, rem - s * a)
            del acc[len(acc) - a:]

    descend(0, target)
    return out


_W_MEMO = {}


def filling_weight(lam, mu):
    """Return w(lambda, mu): the total weight of all fillings of lambda by
    the bricks of mu, 0 when no filling exists.

    Recursion over rows: split off every sub-multiset that exactly fills
    the first row, weight it by row_weight_sum, and recurse on the rest.
    Memoized on (remaining rows, remaining bricks); the cache is
    write-once and shared.
    """
    if lam.q != mu.q:
        raise ValueError("sizes differ")
    return _w(lam.parts, mu.parts)


def _w(rows, bricks):
    # rows: non-increasing tuple; bricks: sorted-descending tuple of lengths
    if not rows:
        return 1 if not bricks else 0
    key = (rows, bricks)
    val = _W_MEMO.get(key)
    if val is not None:
        return val
    counts = Counter(bricks)
    total = 0
    for sub in _sub_multisets(counts, rows[0]):
        rem = counts.copy()
        for s in sub:
            rem[s] -= 1
        rest = tuple(sorted((s for s, c in rem.items() for _ in range(c)),
                            reverse=True))
        total += _row_weight(rows[0], Counter(sub)) * _w(rows[1:], rest)
    _W_MEMO[key] = total
    return total


class FillingClass:
    """An equivalence class of fillings of lambda by mu.

    Canonical form: rows in lambda's order; within a run of equal-length
    rows, the per-row brick multisets (sorted-descending tuples) appear in
    non-increasing lexicographic order.  gamma maps each distinct row
    length to the partition recording multiplicities of identical per-row
    assignments among rows of that length; delta is the concatenation of
    all gamma parts, a partition of k(lambda).
    """

    __slots__ = ("lam", "mu", "rows", "r", "gamma", "delta")

    def __init__(self, lam, mu, rows):
        rows = [tuple(sorted(row, reverse=True)) for row in rows]
        if len(rows) != lam.k:
            raise ValueError("one brick multiset per row required")
        # canonicalize: within each run of equal-length rows, assignments
        # in non-increasing order
        i = 0
        while i < len(lam.parts):
            j = i
            while j < len(lam.parts) and lam.parts[j] == lam.parts[i]:
                j += 1
            rows[i:j] = sorted(rows[i:j], reverse=True)
            i = j
        rows = tuple(rows)
        for length, row in zip(lam.parts, rows):
            if sum(row) != length:
                raise ValueError("row not exactly filled")
        if tuple(sorted((s for row in rows for s in row), reverse=True)) != mu.parts:
            raise ValueError("rows do not use exactly the bricks of mu")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "r", tuple(len(row) for row in rows))
        gamma = {}
        delta = []
        i = 0
        while i < len(lam.parts):
            j = i
            while j < len(lam.parts) and lam.parts[j] == lam.parts[i]:
                j += 1
            mults = tuple(sorted(Counter(rows[i:j]).values(), reverse=True))
            gamma[lam.parts[i]] = Partition(mults)
            delta.extend(mults)
            i = j
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "delta", Partition(sorted(delta, reverse=True)))

    def alpha(self, length, row_index):
        """Number of bricks of the given length in the given row."""
        return self.rows[row_index].count(length)

    def __setattr__(self, name, value):
        raise AttributeError("FillingClass is immutable")

    def __eq__(self, other):
        return (isinstance(other, FillingClass)
                and self.lam == other.lam and self.rows == other.rows)

    def __hash__(self):
        return hash((self.lam.parts, self.rows))

    def __repr__(self):
        return f"FillingClass({self.lam.parts}, rows={self.rows})"


def enumerate_filling_classes(lam, mu):
    """Return every equivalence class of fillings of lambda by mu.

    A class is determined by assigning, to each distinct row length, an
    unordered multiset of per-row brick multisets; enumeration walks row
    lengths longest first and keeps per-length assignments in
    non-increasing order so each class appears exactly once.
    """
    if lam.q != mu.q:
        raise ValueError("sizes differ")
    runs = []
    for length in lam.parts:
        if runs and runs[-1][0] == length:
            runs[-1][1] += 1
        else:
            runs.append([length, 1])
    out = []

    def fill_runs(ri, counts, acc_rows):
        if ri == len(runs):
            out.append(FillingClass(lam, mu, acc_rows))
            return
        length, beta = runs[ri]

        def fill_rows(j, counts, bound, acc):
            if j == beta:
                fill_runs(ri + 1, counts, acc_rows + acc)
                return
            for sub in _sub_multisets(counts, length):
                if bound is not None and sub > bound:
                    continue
                rem = counts.copy()
                for s in sub:
                    rem[s] -= 1
                fill_rows(j + 1, rem, sub, acc + [sub])

        fill_rows(0, counts, None, [])

    fill_runs(0, Counter(mu.parts), [])
    return out


def class_weight_sum(fc):
    """Total weight of all fillings in one equivalence class.

    Closed form: prod over distinct row lengths i of beta_i!/gamma(F,i)!
    times prod over rows of row_weight_sum; always an integer.
    """
    val = 1
    for length, m in Counter(fc.lam.parts).items():
        val *= factorial(m) // factorial_of_partition(fc.gamma[length])
    for length, row in zip(fc.lam.parts, fc.rows):
        val *= _row_weight(length, Counter(row))
    return val


def m_to_p_expansion(mu):
    """Return {lambda: coefficient} for m_mu expanded in power sums,
    zero coefficients omitted."""
    out = {}
    for lam in partitions_of(mu.q):
        w = _w(lam.parts, mu.parts)
        if w:
            sign = -1 if (mu.k - lam.k) % 2 else 1
            out[lam] = Fraction(sign * w, z_of(lam))
    return out


class M2PReport:
    """Outcome of randomized validation of the m-to-p expansion."""

    def __init__(self, q, trials, seed, points_checked, counterexample):
        self.q = q
        self.trials = trials
        self.seed = seed
        self.points_checked = points_checked
        self.counterexample = counterexample

    @property
    def all_match(self):
        return self.counterexample is None

    def __repr__(self):
        status = "ok" if self.all_match else f"FAIL at {self.counterexample}"
        return (f"M2PReport(q={self.q}, points={self.points_checked}, "
                f"{status})")


def _distinct_permutations(items):
    """Yield the distinct permutations of a sorted list of items."""
    items = sorted(items)
    n = len(items)
    while True:
        yield tuple(items)
        # next permutation in lexicographic order
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


def monomial_value(mu, point):
    """Evaluate m_mu at a point with q coordinates (others zero): the sum
    over distinct arrangements of mu's exponents of prod z_i^e_i."""
    q = len(point)
    exps = list(mu.parts) + [0] * (q - mu.k)
    if len(exps) != q:
        raise ValueError("point must have at least k(mu) coordinates")
    total = 0
    for arrangement in _distinct_permutations(exps):
        term = 1
        for z, e in zip(point, arrangement):
            if e:
                term *= z ** e
        total += term
    return total


def power_sum_value(lam, point):
    """Evaluate p_lambda at a point: prod over parts m of sum z_i^m."""
    val = 1
    for m in lam.parts:
        val *= sum(z ** m for z in point)
    return val


def verify_m2p(q, trials, seed):
    """Check m_mu(point) against its power-sum expansion for every mu of q
    at `trials` random integer points; stops at the first counterexample."""
    if not 1 <= q <= 8:
        raise ValueError("q out of range (1..8)")
    rng = Random(seed)
    checked = 0
    for mu in partitions_of(q):
        coeffs = m_to_p_expansion(mu)
        for _ in range(trials):
            point = tuple(rng.randint(-9, 9) for _ in range(q))
            direct = monomial_value(mu, point)
            via = sum((c * power_sum_value(lam, point)
                       for lam, c in coeffs.items()), Fraction(0))
            checked += 1
            if via != direct:
                return M2PReport(q, trials, seed, checked,
                                 (mu, point, direct, via))
    return M2PReport(q, trials, seed, checked, None)
