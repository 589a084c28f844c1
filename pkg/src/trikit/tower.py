"""Exact iterated exponentials e^n(x) with e(x) = 2^x, and comparisons of them."""

from dataclasses import dataclass

DEFAULT_BIT_BUDGET = 1 << 20

LESS, EQUAL, GREATER = -1, 0, 1


class BudgetExceeded(ArithmeticError):
    pass


def fmt_nat(v):
    """Exact compact text for a natural: decimal when short, else 2^k or c*2^k."""
    if v.bit_length() <= 200:
        return str(v)
    tz = (v & -v).bit_length() - 1
    odd = v >> tz
    if odd == 1:
        return f"2^{fmt_nat(tz)}"
    if odd.bit_length() <= 200:
        return f"{odd}*2^{fmt_nat(tz)}"
    low = v & ((1 << 200) - 1)
    high = v - low
    if low and (high >> (high & -high).bit_length() - 1).bit_length() <= 200:
        return f"{fmt_nat(high)}+{low}"
    return f"<{fmt_nat(v.bit_length())}-bit natural>"


def _sgn(d):
    return (d > 0) - (d < 0)


@dataclass(frozen=True, eq=False)
class TowerNat:
    """The natural number e^n(x).

    Stored with ``x >= 2`` unless ``n == 0``: layers over 0 or 1 are evaluated
    away (e(0) = 1, e(1) = 2).  Equality and order are by value.
    """

    n: int
    x: int

    def __post_init__(self):
        if self.n < 0 or self.x < 0:
            raise ValueError("tower height and base must be non-negative")
        n, x = self.n, self.x
        while n > 0 and x < 2:
            x = 1 << x
            n -= 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "x", x)

    @classmethod
    def exact(cls, value):
        return cls(0, value)

    def lift(self, k):
        """e^k applied to this value."""
        return TowerNat(self.n + k, self.x)

    def materialize(self, bit_budget=DEFAULT_BIT_BUDGET):
        x = self.x
        for _ in range(self.n):
            if x + 1 > bit_budget:
                raise BudgetExceeded(f"e^{self.n}({self.x}) exceeds {bit_budget} bits")
            x = 1 << x
        return x

    def __eq__(self, other):
        return isinstance(other, TowerNat) and tower_cmp(self, other) == EQUAL

    def __lt__(self, other):
        return tower_cmp(self, other) == LESS

    def __le__(self, other):
        return tower_cmp(self, other) != GREATER

    def __hash__(self):
        # value-based: the representation with the smallest base is unique
        n, x = self.n, self.x
        while x.bit_count() == 1 and x.bit_length() - 1 >= 2:
            x = x.bit_length() - 1
            n += 1
        return hash((n, x))

    def __str__(self):
        if self.n == 0:
            return fmt_nat(self.x)
        return f"e^{fmt_nat(self.n)}({fmt_nat(self.x)})"

    __repr__ = __str__


def _vs_tower(x, m, y):
    """Compare the explicit natural ``x`` with e^m(y), y >= 2 when m > 0."""
    cur = y
    xbits = x.bit_length()
    while m > 0:
        # 2^cur has cur + 1 bits; once that beats x every later iterate does too
        if cur + 1 > xbits:
            return LESS
        cur = 1 << cur
        m -= 1
    return _sgn(x - cur)


def tower_cmp(a, b):
    """Exact three-way comparison of e^n(x) values."""
    k = min(a.n, b.n)
    an, bn = a.n - k, b.n - k
    if an == 0 and bn == 0:
        return _sgn(a.x - b.x)
    if an == 0:
        return _vs_tower(a.x, bn, b.x)
    return -_vs_tower(b.x, an, a.x)


@dataclass(frozen=True)
class TowerSum:
    """A sum of towers kept symbolic; only bounds on its value are used."""

    terms: tuple

    def bounds(self):
        """(lower, upper) TowerNats with lower <= sum <= upper, or None if unknown."""
        top = self.terms[0]
        for t in self.terms[1:]:
            if tower_cmp(t, top) == GREATER:
                top = t
        k = len(self.terms)
        if k == 1:
            return top, top
        if k == 2 and top.n >= 1:
            # e^n(x) + e^n(x) <= e^n(x+1) for n >= 1
            return top, TowerNat(top.n, top.x + 1)
        return top, None

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)
