"""Exact evaluation and verification of the complexity bounds.

Expressions are small trees over big naturals.  Evaluation keeps a value
exact while it fits the bit budget; past that a power of two is kept as
``c * 2^E`` and iterated exponentials as :class:`TowerNat`.  Every
comparison reports the rule that decided it:

* ``exact``       both sides materialized
* ``log2``        ``c1 * 2^E1`` against ``c2 * 2^E2`` via exponents
* ``tower``       iterated exponentials compared by peeling layers
* ``sum-bounds``  a symbolic sum of towers bracketed between two towers
"""

from dataclasses import dataclass, field

from trikit.tower import (
    DEFAULT_BIT_BUDGET,
    EQUAL,
    GREATER,
    LESS,
    BudgetExceeded,
    TowerNat,
    TowerSum,
    fmt_nat,
    tower_cmp,
)


class BoundError(ValueError):
    pass


class Undecided(ArithmeticError):
    pass


# --- expressions --------------------------------------------------------------


class Expr:
    def __add__(self, other):
        return Add(self, lift(other))

    def __radd__(self, other):
        return Add(lift(other), self)

    def __sub__(self, other):
        return Sub(self, lift(other))

    def __mul__(self, other):
        return Mul(self, lift(other))

    def __rmul__(self, other):
        return Mul(lift(other), self)

    def __pow__(self, k):
        return PowN(self, lift(k))


def lift(x):
    return x if isinstance(x, Expr) else Const(int(x))


@dataclass(frozen=True)
class Const(Expr):
    value: int

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Add(Expr):
    a: Expr
    b: Expr

    def __str__(self):
        return f"({self.a} + {self.b})"


@dataclass(frozen=True)
class Sub(Expr):
    a: Expr
    b: Expr

    def __str__(self):
        return f"({self.a} - {self.b})"


@dataclass(frozen=True)
class Mul(Expr):
    a: Expr
    b: Expr

    def __str__(self):
        return f"{self.a}*{self.b}"


@dataclass(frozen=True)
class PowN(Expr):
    base: Expr
    k: Expr

    def __str__(self):
        return f"({self.base})^{self.k}"


@dataclass(frozen=True)
class Pow2(Expr):
    exp: Expr

    def __str__(self):
        return f"2^({self.exp})"


@dataclass(frozen=True)
class Tower(Expr):
    """e^count(base)."""

    count: Expr
    base: Expr

    def __str__(self):
        return f"e^({self.count})({self.base})"


t, g, p, q, r, a = (Var(n) for n in "tgpqra")


def e(count, base):
    return Tower(lift(count), lift(base))


# --- values -------------------------------------------------------------------


@dataclass(frozen=True)
class Scaled:
    """c * 2^E with c >= 1, for numbers too large to materialize."""

    c: int
    E: int

    def __str__(self):
        c = "" if self.c == 1 else f"{fmt_nat(self.c)}*"
        return f"{c}2^{fmt_nat(self.E)}"


def _fits(n, budget):
    if n.bit_length() > budget:
        raise BudgetExceeded(f"intermediate of {n.bit_length()} bits exceeds {budget}")
    return n


def _as_scaled(v):
    return v if isinstance(v, Scaled) else Scaled(v, 0)


def _as_tower(v):
    """Exact tower form of a value, or a pair (lo, hi) bracketing it."""
    if isinstance(v, int):
        return TowerNat.exact(v)
    if isinstance(v, TowerNat):
        return v
    if isinstance(v, Scaled):
        bl = v.c.bit_length()
        if v.c & (v.c - 1) == 0:
            return TowerNat(1, v.E + bl - 1)
        return TowerNat(1, v.E + bl - 1), TowerNat(1, v.E + bl)
    raise TypeError(v)


def evaluate(expr, env, budget=DEFAULT_BIT_BUDGET):
    """Value of ``expr``: int, Scaled, TowerNat or TowerSum."""
    ev = lambda x: evaluate(x, env, budget)  # noqa: E731
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        if expr.name not in env:
            raise BoundError(f"missing parameter {expr.name}")
        return env[expr.name]
    if isinstance(expr, (Add, Sub)):
        x, y = ev(expr.a), ev(expr.b)
        if isinstance(expr, Sub):
            if not (isinstance(x, int) and isinstance(y, int)):
                raise BudgetExceeded("subtraction needs materialized operands")
            if x < y:
                raise BoundError(f"negative value in {expr}")
            return x - y
        if isinstance(x, int) and isinstance(y, int):
            return _fits(x + y, budget)
        if isinstance(x, (TowerNat, TowerSum)) or isinstance(y, (TowerNat, TowerSum)):
            terms = []
            for v in (x, y):
                if isinstance(v, TowerSum):
                    terms += v.terms
                else:
                    tv = _as_tower(v)
                    if isinstance(tv, tuple):
                        raise BudgetExceeded("sum of a tower with an unnormalized power")
                    terms.append(tv)
            return TowerSum(tuple(terms))
        sx, sy = _as_scaled(x), _as_scaled(y)
        m = min(sx.E, sy.E)
        if max(sx.E, sy.E) - m > budget:
            raise BudgetExceeded(f"cannot add {x} and {y} exactly within budget")
        c = (sx.c << (sx.E - m)) + (sy.c << (sy.E - m))
        return Scaled(c, m) if m else _fits(c, budget)
    if isinstance(expr, Mul):
        x, y = ev(expr.a), ev(expr.b)
        if isinstance(x, int) and isinstance(y, int):
            return _fits(x * y, budget)
        if isinstance(x, (int, Scaled)) and isinstance(y, (int, Scaled)):
            sx, sy = _as_scaled(x), _as_scaled(y)
            if sx.c == 0 or sy.c == 0:
                return 0
            return Scaled(_fits(sx.c * sy.c, budget), sx.E + sy.E)
        raise BudgetExceeded("products of towers are not supported")
    if isinstance(expr, PowN):
        x, k = ev(expr.base), ev(expr.k)
        if not isinstance(k, int):
            raise BudgetExceeded("exponent must be materialized")
        if isinstance(x, int):
            if x.bit_length() * k > budget:
                if x & (x - 1) == 0:
                    return Scaled(1, (x.bit_length() - 1) * k)
                raise BudgetExceeded(f"{x}^{k} exceeds the bit budget")
            return x**k
        if isinstance(x, Scaled):
            if x.c.bit_length() * k > budget:
                raise BudgetExceeded("power of a scaled value exceeds the bit budget")
            return Scaled(x.c**k, x.E * k)
        raise BudgetExceeded("powers of towers are not supported")
    if isinstance(expr, Pow2):
        x = ev(expr.exp)
        if isinstance(x, int):
            return 1 << x if x + 1 <= budget else Scaled(1, x)
        tv = _as_tower(x)
        if isinstance(tv, TowerNat):
            return tv.lift(1)
        raise BudgetExceeded(f"2^({x}) has no exact form")
    if isinstance(expr, Tower):
        n, base = ev(expr.count), ev(expr.base)
        if not isinstance(n, int):
            raise BudgetExceeded("tower height must be materialized")
        tv = _as_tower(base)
        if isinstance(tv, tuple):
            raise BudgetExceeded(f"tower base {base} has no exact form")
        res = tv.lift(n)
        try:
            return res.materialize(budget)
        except BudgetExceeded:
            return res
    raise TypeError(expr)


def _cmp_scaled(x, y):
    sx, sy = _as_scaled(x), _as_scaled(y)
    if sx.E == sy.E:
        return (sx.c > sy.c) - (sx.c < sy.c)
    if sx.E < sy.E:
        return -_cmp_scaled(sy, sx)
    # sx.E > sy.E: compare sx.c * 2^D with sy.c
    D = sx.E - sy.E
    if sx.c >= 1 and D >= sy.c.bit_length():
        return GREATER
    lhs = sx.c << D
    return (lhs > sy.c) - (lhs < sy.c)


def _cmp_tower_like(x, y):
    """Compare values where at least one is a tower or a bracket."""
    tx, ty = _as_tower(x), _as_tower(y)
    if isinstance(tx, tuple) and isinstance(ty, tuple):
        raise Undecided("two bracketed values")
    if isinstance(ty, tuple):
        return -_cmp_tower_like(y, x)
    if isinstance(tx, tuple):
        lo, hi = tx  # lo < x < hi strictly, since c is not a power of two
        if tower_cmp(ty, lo) != GREATER:
            return GREATER
        if tower_cmp(ty, hi) != LESS:
            return LESS
        raise Undecided(f"{y} lies inside the bracket of {x}")
    return tower_cmp(tx, ty)


def compare(x, y):
    """Three-way comparison of two values; returns ``(ordering, rule)``."""
    if isinstance(y, TowerSum) and not isinstance(x, TowerSum):
        o, rule = compare(y, x)
        return -o, rule
    if isinstance(x, TowerSum):
        if isinstance(y, TowerSum):
            raise Undecided("comparison of two symbolic sums")
        lo, hi = x.bounds()
        o_lo, _ = compare(lo, y)
        if o_lo == GREATER:
            return GREATER, "sum-bounds"
        if hi is not None:
            o_hi, _ = compare(hi, y)
            if o_hi == LESS:
                return LESS, "sum-bounds"
        raise Undecided(f"{y} is not separated from {x}")
    if isinstance(x, int) and isinstance(y, int):
        return (x > y) - (x < y), "exact"
    if isinstance(x, (int, Scaled)) and isinstance(y, (int, Scaled)):
        return _cmp_scaled(x, y), "log2"
    return _cmp_tower_like(x, y), "tower"


def format_value(v):
    return fmt_nat(v) if isinstance(v, int) else str(v)


# --- ledger -------------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    id: str
    params: tuple
    expr: Expr
    anchor: str  # the bound as a formula
    description: str
    minimum: dict = field(default_factory=dict)
    maximum: dict = field(default_factory=dict)


def _entries():
    E = BoundEntry
    return [
        E("canonical_surfaces", ("t",), Pow2(80 * t * t), "2^{80t^2}",
          "normal discs in a canonical torus or annulus", {"t": 1}),
        E("fundamental_count", ("t",), Pow2(70 * t * t), "2^{70t^2}",
          "number of fundamental surfaces", {"t": 1}),
        E("disc_type_margin", ("t",), 2 * 20 * t * t * Pow2(7 * t), "2\\cdot20t^22^{7t}\\leq 2^{10t^2}",
          "left side of the disc-type margin, at most 2^{10t^2}", {"t": 2}),
        E("s1_components", ("t",), 2 * 20 * t, "2\\cdot 20t",
          "components of the first hierarchy surface", {"t": 1}),
        E("surface_count", ("t", "b1", "b1z2"), 8 * t + Var("b1") + Var("b1z2"),
          "8t+\\beta_1(M;\\mathbb{Z})+\\beta_1(M;\\mathbb{Z}_2)",
          "closed incompressible non-parallel surfaces", {"t": 1, "b1": 0, "b1z2": 0}),
        E("handlebody_annuli", ("g",), 6 * g, "6g", "annuli in a handlebody piece", {"g": 0}),
        E("compression_discs", ("g",), 3 * g - 3, "3g-3",
          "disjoint non-parallel compression discs", {"g": 1}),
        E("body_annuli", ("g",), 9 * g, "9g(\\partial H)",
          "non-boundary-parallel annuli in a complementary piece", {"g": 0}),
        E("s2_boundary", ("t",), 20 * 18 * t, "20\\cdot18 t",
          "boundary components of the second hierarchy surface", {"t": 1}),
        E("topcomp", ("t",), Pow2(150 * t), "2^{150t}",
          "total topological complexity after two hierarchy steps", {"t": 2}),
        E("component_chi", ("t",), Pow2(127 * t + 19), "2^{127t+19}",
          "negative Euler characteristic of one hierarchy surface component", {"t": 1}),
        E("piece_tets", ("t",), 18 * t, "18t", "tetrahedra for a piece without canonical annuli",
          {"t": 1}),
        E("s1_discs", ("t",), Pow2(350 * t * t), "2^{350t^2}",
          "normal discs in the first hierarchy surface", {"t": 1}),
        E("annulus_or_disc", ("t",), Pow2(40 * t), "2^{40t}",
          "normal discs in a step-3 annulus or disc", {"t": 1}),
        E("fund_discs", ("t",), 5 * t * 7 * t * Pow2(7 * t), "5t\\cdot7t 2^{7t}",
          "normal discs in a fundamental surface", {"t": 1}),
        E("iota_bound", ("t",), 140 * t * t * Pow2(7 * t), "140t^22^{7t}",
          "pattern intersections of a fundamental surface", {"t": 1}),
        E("vertical_family", ("t",), (2 * Pow2(11 * t)) ** (12 * t), "(2\\cdot 2^{11t})^{12t}",
          "normal discs in a family of vertical discs", {"t": 1}),
        E("subdiv_moves", ("r", "D"), 200 * r * Var("D"), "200r2^{80r^2}",
          "moves to put a surface of D discs into the 2-skeleton of r tetrahedra", {"r": 1, "D": 0}),
        E("s_of_t", ("t",), 20 * (t + Pow2(350 * t * t)), "s=20(t+2^{350t^2})",
          "tetrahedra after the first subdivision", {"t": 1}),
        E("step3_surfaces", ("t",), Pow2(160 * t), "2^{160t}",
          "surfaces in step 3 of the hierarchy", {"t": 1}),
        E("essential_annuli", ("t",), 20 * Pow2(150 * t), "20\\cdot 2^{150t}",
          "P-essential annuli in the hierarchy", {"t": 1}),
        E("main_bound", ("p", "q", "a"), e(Pow2(a * p), p) + e(Pow2(a * q), q),
          "e^{2^{ap}}(p)+ e^{2^{aq}}(q)",
          "moves between triangulations with p and q tetrahedra", {"p": 1, "q": 1, "a": 1},
          {"a": 200}),
    ]


LEDGER = {entry.id: entry for entry in _entries()}
DEFAULT_A = 200


def _check_params(entry, params):
    env = {}
    for name in entry.params:
        if name not in params:
            if name == "a":
                env["a"] = DEFAULT_A
                continue
            raise BoundError(f"{entry.id}: missing parameter {name}")
        v = params[name]
        if not isinstance(v, int) or isinstance(v, bool):
            raise BoundError(f"{entry.id}: parameter {name} must be a natural number")
        if v < entry.minimum.get(name, 0):
            raise BoundError(f"{entry.id}: {name}={v} is below the allowed minimum {entry.minimum[name]}")
        if name in entry.maximum and v > entry.maximum[name]:
            raise BoundError(f"{entry.id}: {name}={v} is above the allowed maximum {entry.maximum[name]}")
        env[name] = v
    extra = set(params) - set(entry.params)
    if extra:
        raise BoundError(f"{entry.id}: unexpected parameters {sorted(extra)}")
    return env


def eval_bound(id, budget=DEFAULT_BIT_BUDGET, **params):
    """Exact value (int) of a ledger entry, or its tower form when it is too large."""
    entry = LEDGER.get(id)
    if entry is None:
        raise BoundError(f"unknown bound {id!r}")
    env = _check_params(entry, params)
    return evaluate(entry.expr, env, budget)


# --- the verification chain ---------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    id: str
    lhs: Expr
    rhs: Expr
    strict: bool
    anchor: str
    role: str  # "pipeline", "supporting" or "audit" (known not to hold as stated)
    note: str = ""


@dataclass(frozen=True)
class ChainResult:
    id: str
    t: int
    verdict: str  # Holds, Fails, Undecided
    rule: str
    lhs: str
    rhs: str
    anchor: str
    role: str
    note: str = ""

    @property
    def holds(self):
        return self.verdict == "Holds"


@dataclass
class ChainReport:
    results: list

    @property
    def all_hold(self):
        return all(r.holds for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.holds]


S = Var("s")
CHI_S2 = 2 * 120 * t * Pow2(127 * t + 19)
CHI_NOTE = "2-chi(S_2) replaced by its upper bound 2*(40+80)t*2^{127t+19}"


def chain(overrides=None):
    """The inequalities checked by :func:`verify_chain`, in order."""
    ov = dict(overrides or {})
    moves_coef = lift(ov.pop("moves_coefficient", 200))
    a_ = lift(ov.pop("a", DEFAULT_A))
    if ov:
        raise BoundError(f"unknown overrides {sorted(ov)}")
    I = Inequality
    return [
        I("moves_s1", moves_coef * t * Pow2(350 * t * t), Pow2(360 * t * t), True,
          "200t2^{350t^2}<2^{360t^2}", "pipeline"),
        I("s_of_t", 20 * (t + Pow2(350 * t * t)), Pow2(360 * t * t), True,
          "s=20(t+2^{350t^2})<2^{360t^2}", "pipeline"),
        I("s2_discs", 20 * t * Pow2(80 * S * S), Pow2(90 * S * S), True,
          "20t2^{80s^2}<2^{90s^2}", "pipeline"),
        I("moves_s1s2", 200 * Pow2(90 * S * S) * Pow2(360 * t * t), Pow2(100 * S * S), True,
          "200\\cdot 2^{90s^2} 2^{360t^2}<2^{100s^2}", "pipeline"),
        I("moves_s1s2_tower", Pow2(100 * S * S), e(2, 730 * t * t), True,
          "2^{100s^2}<e^2(730t^2)", "pipeline"),
        I("essential_annuli", 40 * t + CHI_S2 + 18 * Pow2(150 * t), 20 * Pow2(150 * t), True,
          "40t+(2-\\chi(S_2))+18\\cdot 2^{150t}<20\\cdot 2^{150t}", "pipeline", CHI_NOTE),
        I("polyhedron_moves", e(2 * Pow2(160 * t), e(2, 730 * t * t)),
          e(2 * Pow2(160 * t), e(3, 10 * t)), True,
          "e^{2\\cdot 2^{160t}}(e^2(730t^2))<e^{2\\cdot 2^{160t}}(e^3(10t))", "pipeline"),
        I("polyhedron_moves_tower", e(2 * Pow2(160 * t), e(3, 10 * t)), e(Pow2(170 * t), t), True,
          "e^{2\\cdot 2^{160t}}(e^3(10t))<e^{2^{170t}}(t)", "pipeline"),
        I("final_moves", e(Pow2(180 * t), t), e(Pow2(a_ * t), t) + e(Pow2(a_ * t), t), True,
          "e^{2^{180t}}(t) < e^{2^{ap}}(p)+ e^{2^{aq}}(q)", "pipeline", "p = q = t"),
        I("bridge_170_180", e(Pow2(170 * t) + 8, t), e(Pow2(180 * t), t), True,
          "e^8(e^{2^{170t}}(t)) < e^{2^{180t}}(t)", "supporting",
          "links the polyhedron bound to the final count; e^7 per piece plus linear work"),
        I("disc_type_margin", 2 * 20 * t * t * Pow2(7 * t), Pow2(10 * t * t), False,
          "2\\cdot20t^22^{7t}\\leq 2^{10t^2}", "supporting"),
        I("component_chi", 4 * 5 * 18 * t * (7 * 18 * t * Pow2(7 * 18 * t)), Pow2(127 * t + 19), True,
          "4\\cdot 5\\cdot 18t (7\\cdot 18t 2^{7\\cdot 18t})<2^{127t+19}", "supporting"),
        I("topcomp", 2 * (40 + 80) * t * Pow2(127 * t + 19), Pow2(150 * t), True,
          "2\\cdot (40+80)t 2^{127t+19}<2^{150t}", "supporting"),
        I("s1_discs_a", 5 * t * 2 * (2 * 11 * t * Pow2(11 * t)) ** (20 * t) + Pow2(80 * t * t),
          Pow2(t + 4) * Pow2(12 * t + 5) ** (20 * t) + Pow2(80 * t * t), True,
          "5t2(2\\cdot 11t 2^{11t})^{20t}+2^{80t^2}<2^{t+4}(2^{12t+5})^{20t}+2^{80t^2}",
          "supporting"),
        I("s1_discs_b", Pow2(t + 4) * Pow2(12 * t + 5) ** (20 * t) + Pow2(80 * t * t),
          Pow2(350 * t * t), True, "2^{t+4}(2^{12t+5})^{20t}+2^{80t^2}<2^{350t^2}", "supporting"),
        I("annulus_discs_a", 280 * t * t * Pow2(7 * t) * (5 * t * 7 * t * Pow2(7 * t)),
          Pow2(18 * t + 14), True, "280t^22^{7t}\\cdot 5t7t2^{7t}<2^{18t+14}", "supporting"),
        I("annulus_discs_b", Pow2(18 * t + 14), Pow2(40 * t - 1), True,
          "2^{18t+14}<2^{40t-1}", "supporting"),
        I("vertical_family", (2 * Pow2(11 * t)) ** (12 * t), Pow2(80 * t * t), True,
          "(2\\cdot 2^{11t})^{12t}<2^{80t^2}", "audit",
          "as written the left side is 2^{132t^2+12t}; reported, never part of the default chain"),
    ]


def check_inequality(ineq, env, budget=DEFAULT_BIT_BUDGET):
    lhs = evaluate(ineq.lhs, env, budget)
    rhs = evaluate(ineq.rhs, env, budget)
    try:
        o, rule = compare(lhs, rhs)
    except Undecided as exc:
        return "Undecided", str(exc), lhs, rhs
    ok = o == LESS or (not ineq.strict and o == EQUAL)
    return ("Holds" if ok else "Fails"), rule, lhs, rhs


def verify_chain(t_min, t_max, overrides=None, budget=DEFAULT_BIT_BUDGET, audit=False):
    """Decide every chain inequality for each t in ``[t_min, t_max]``.

    Audit inequalities are only included when ``audit`` is set.
    """
    if t_min < 2:
        raise BoundError("the chain is stated for t >= 2")
    if t_max < t_min:
        raise BoundError("empty range of t")
    ineqs = [i for i in chain(overrides) if audit or i.role != "audit"]
    results = []
    for tv in range(t_min, t_max + 1):
        env = {"t": tv, "s": 20 * (tv + (1 << (350 * tv * tv)))}
        for ineq in ineqs:
            verdict, rule, lhs, rhs = check_inequality(ineq, env, budget)
            results.append(ChainResult(ineq.id, tv, verdict, rule, format_value(lhs),
                                       format_value(rhs), ineq.anchor, ineq.role, ineq.note))
    return ChainReport(results)
