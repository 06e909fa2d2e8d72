"""Exact combinatorics over cycle types.

Big-integer class counts, 2-adic structure of a degree, and the
subset-sum facts that the covering arguments rest on.  Everything here
is pure and exact: Python ints and fractions.Fraction, no floating
point on any verification path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

EVEN = "even"
ODD = "odd"


class Partition:
    """A partition of n: positive parts stored in non-increasing order.

    Doubles as the label of a conjugacy class of the symmetric group of
    degree n (the multiset of cycle lengths, fixed points included).
    """

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        self.parts = parts

    @classmethod
    def parse(cls, text):
        """Parse a comma separated part list such as ``"4,4,2"``."""
        items = [s for s in text.replace(" ", "").split(",") if s]
        if not items:
            raise ValueError("empty partition text")
        return cls(int(s) for s in items)

    @property
    def n(self):
        return sum(self.parts)

    def multiplicities(self):
        """Map part value -> multiplicity."""
        return Counter(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def as_partition(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


@lru_cache(maxsize=None)
def factorial(n):
    n = int(n)
    if n < 0:
        raise ValueError("factorial of a negative number")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def binomial(n, k):
    """C(n, k), zero when k > n or k < 0."""
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    return factorial(n) // (factorial(k) * factorial(n - k))


def partitions_of(n, max_part=None):
    """Yield every partition of n as a Partition, parts non-increasing."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return

    def rec(remaining, cap, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p, prefix)
            prefix.pop()

    for parts in rec(n, max_part, []):
        yield Partition(parts)


def class_size(lam):
    """Number of permutations in S_n with cycle type ``lam`` (a partition of n).

    Centralizer formula: n! / prod_i i^{m_i} m_i! where m_i is the
    multiplicity of part i.
    """
    lam = as_partition(lam)
    denom = 1
    for part, mult in lam.multiplicities().items():
        denom *= part**mult * factorial(mult)
    return factorial(lam.n) // denom


def sign_of_type(lam):
    """Parity of any permutation with cycle type ``lam``."""
    lam = as_partition(lam)
    return ODD if (lam.n - len(lam)) % 2 else EVEN


@dataclass(frozen=True)
class TwoAdicExpansion:
    """n written as a sum of distinct powers of two, exponents decreasing."""

    exponents: tuple
    n: int

    def __post_init__(self):
        if not self.exponents:
            raise ValueError("empty expansion")
        if list(self.exponents) != sorted(self.exponents, reverse=True):
            raise ValueError("exponents must be strictly decreasing")
        if sum(1 << a for a in self.exponents) != self.n:
            raise ValueError("expansion does not reconstruct n")

    @property
    def t(self):
        return len(self.exponents)


def two_adic(n):
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    exps = tuple(i for i in range(n.bit_length() - 1, -1, -1) if (n >> i) & 1)
    return TwoAdicExpansion(exps, n)


def is_prime(m):
    m = int(m)
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def p_part(n, p):
    """Largest power of the prime p dividing n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def odd_part(n):
    while n % 2 == 0:
        n //= 2
    return n


def admits_odd_two_power_class(n):
    """True when the designated odd class of 2-power cycle type is defined.

    Excluded degrees are the powers of two and three times a power of
    two; below 5 nothing interesting exists.
    """
    return n >= 5 and odd_part(n) not in (1, 3)


def _require_domain(n):
    if not admits_odd_two_power_class(n):
        raise ValueError(
            f"degree {n} is excluded (power of two, or 3 * power of two, or < 5)"
        )


def odd_two_power_class(n):
    """The designated odd conjugacy class with all cycle lengths powers of two.

    Take the 2-adic expansion n = 2^{a_1} + ... + 2^{a_t}.  If n and t
    have different parities the parts are exactly those powers; otherwise
    the largest part is split in half (two equal parts) to force an odd
    permutation.
    """
    _require_domain(n)
    exp = two_adic(n)
    if (n - exp.t) % 2:
        parts = [1 << a for a in exp.exponents]
    else:
        a1 = exp.exponents[0]
        parts = [1 << (a1 - 1), 1 << (a1 - 1)] + [1 << a for a in exp.exponents[1:]]
    lam = Partition(parts)
    assert sign_of_type(lam) == ODD
    return lam


def stab_exponent(n):
    """Exponent s of the power-of-two form n_2! (n-n_2)! / 2^s.

    Equals |Stab(fixed n_2-set) cap class| whenever the designated class
    has no triple part; with three equal parts (the split halves
    coinciding with the next part) the true count is a third of this,
    since the multiplicity factorial 3! carries an odd factor.
    """
    _require_domain(n)
    exp = two_adic(n)
    s = sum(exp.exponents)
    if (n - exp.t) % 2 == 0:
        s += exp.exponents[0] - 1
    return s


def competition_ratio(n):
    """Exact rational 2^{s+1} C(n, n_2) / C(n, floor(n/2)).

    Upper bound for the share of the designated class that any single
    order-bounded competitor subgroup can meet, relative to one fixed
    n_2-set stabilizer.  Values below 1 make the stabilizer family
    strictly unbeatable by order arguments alone.
    """
    _require_domain(n)
    s = stab_exponent(n)
    n2 = p_part(n, 2)
    return Fraction(2 ** (s + 1) * binomial(n, n2), binomial(n, n // 2))


# ---------------------------------------------------------------------------
# subset sums over powers of two


def _check_two_power_parts(parts):
    parts = tuple(int(p) for p in parts)
    for p in parts:
        if p < 1 or p & (p - 1):
            raise ValueError(f"part {p} is not a power of two")
    return parts


def subsum_exists(parts, target):
    """Exact subset-sum over 2-power parts.

    Returns ``(True, witness)`` with one witness sub-multiset (a tuple of
    parts) when some sub-multiset sums to ``target``, else ``(False, None)``.
    """
    parts = _check_two_power_parts(parts)
    target = int(target)
    if target < 0:
        return False, None
    if target == 0:
        return True, ()
    mask = (1 << (target + 1)) - 1
    reach = 1
    prefixes = []
    for p in parts:
        prefixes.append(reach)
        if p <= target:
            reach = (reach | (reach << p)) & mask
    if not (reach >> target) & 1:
        return False, None
    witness = []
    t = target
    for p, before in zip(reversed(parts), reversed(prefixes)):
        if (before >> t) & 1:
            continue
        witness.append(p)
        t -= p
    assert t == 0
    return True, tuple(sorted(witness, reverse=True))


def two_power_partitions(total, max_part=None):
    """Yield all partitions of ``total`` into powers of two, non-increasing."""
    total = int(total)
    if total == 0:
        yield ()
        return
    top = 1 << (total.bit_length() - 1)
    if max_part is not None:
        top = min(top, max_part)
    p = top
    while p >= 1:
        for rest in two_power_partitions(total - p, p):
            yield (p,) + rest
        p >>= 1


@lru_cache(maxsize=None)
def _grid_masks(width, p):
    """Masks for the (s1, s2) reachability grid, width = target + 1."""
    block = (1 << (width - p)) - 1
    col = 0
    for r in range(width):
        col |= block << (r * width)
    row = (1 << ((width - p) * width)) - 1
    return col, row


def disjoint_double_subsum(parts, target):
    """True when two disjoint sub-multisets each sum to ``target``.

    Exact: a fast greedy split is tried first, then a full reachability
    grid over ordered pairs of sums.
    """
    parts = _check_two_power_parts(parts)
    target = int(target)
    if target == 0:
        return True
    ok, w1 = subsum_exists(parts, target)
    if not ok:
        return False
    rest = list(parts)
    for p in w1:
        rest.remove(p)
    ok2, _ = subsum_exists(rest, target)
    if ok2:
        return True
    width = target + 1
    goal = target * width + target
    reach = 1
    for p in parts:
        if p > target:
            continue
        col_mask, row_mask = _grid_masks(width, p)
        reach |= ((reach & col_mask) << p) | ((reach & row_mask) << (p * width))
        if (reach >> goal) & 1:
            return True
    return bool((reach >> goal) & 1)


@dataclass
class SubsumLemmaReport:
    """Outcome of the exhaustive trichotomy scan over 2-power partitions."""

    a_max: int
    partitions_checked: int = 0
    halving_cases: int = 0
    split_pair_cases: int = 0
    exceptional_two_part: list = field(default_factory=list)
    exceptional_equal_triple: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.counterexamples


def check_subsum_lemma(a_max):
    """Exhaustively confirm the subset-sum trichotomy for all a <= a_max.

    Every 2-power partition of 2^a (with at least two parts) has a
    sub-multiset summing to 2^{a-1}.  Every 2-power partition of 3*2^a
    either is (2^{a+1}, 2^a), or is (2^a, 2^a, 2^a), or admits two
    disjoint sub-multisets each summing to 2^{a-1}.  Any violation is
    recorded as a counterexample, not raised.
    """
    if a_max < 1:
        raise ValueError("a_max must be at least 1")
    report = SubsumLemmaReport(a_max=a_max)
    for a in range(1, a_max + 1):
        half = 1 << (a - 1)
        for parts in two_power_partitions(1 << a):
            if len(parts) < 2:
                continue
            report.partitions_checked += 1
            ok, _ = subsum_exists(parts, half)
            if ok:
                report.halving_cases += 1
            else:
                report.counterexamples.append(("power", a, parts))
        for parts in two_power_partitions(3 * (1 << a)):
            if len(parts) < 2:
                continue
            report.partitions_checked += 1
            if parts == (1 << (a + 1), 1 << a):
                report.exceptional_two_part.append((a, parts))
            elif parts == (1 << a,) * 3:
                report.exceptional_equal_triple.append((a, parts))
            elif disjoint_double_subsum(parts, half):
                report.split_pair_cases += 1
            else:
                report.counterexamples.append(("triple", a, parts))
    return report
