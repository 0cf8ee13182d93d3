"""Exponent arithmetic and regime classification for the radial model

    i v_t + (Lap)^2 v = -eps |x|^b |v|^(q-1) v  on R^N.

This module is pure bookkeeping: critical indices of the scaling family,
admissible space-time Lebesgue pairs for the fourth-order dispersive
estimates, and itemized hypothesis checks for the well-posedness regimes
(energy-space local, H^1 local, small-data global, global extension).
No floating simulation state lives here.

Comparisons are exact whenever the inputs are rational: ints,
`fractions.Fraction` and numeric strings are kept as `Fraction`, so an
endpoint case like q == q_e is never decided by rounding.  Float inputs
fall back to comparisons with absolute tolerance 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

Scalar = Union[int, float, Fraction]

#: absolute tolerance used when at least one comparison operand is a float
FLOAT_TOL = 1e-12

IN_SCOPE = "InScope"
OUT_OF_SCOPE = "OutOfScope"


def as_scalar(value) -> Scalar:
    """Normalize a numeric input: rational representations become Fraction,
    floats stay floats (and keep tolerance-based comparison semantics)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a numeric parameter")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return value
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def _exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction))


def le(x: Scalar, y: Scalar) -> bool:
    """x <= y, exact for rationals, tolerant for floats."""
    if _exact(x) and _exact(y):
        return x <= y
    return float(x) <= float(y) + FLOAT_TOL


def lt(x: Scalar, y: Scalar) -> bool:
    """x < y strictly; floats within FLOAT_TOL of each other count as equal."""
    if _exact(x) and _exact(y):
        return x < y
    return float(x) < float(y) - FLOAT_TOL


def eq(x: Scalar, y: Scalar) -> bool:
    if _exact(x) and _exact(y):
        return x == y
    fx, fy = float(x), float(y)
    if math.isinf(fx) or math.isinf(fy):
        return fx == fy
    return abs(fx - fy) <= FLOAT_TOL


def scalar_repr(x: Scalar) -> str:
    """Deterministic text form: '26/15' for rationals, repr for floats."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x) if isinstance(x, float) else str(x)


def scalar_jsonable(x: Scalar):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(x) if isinstance(x, float) else int(x)


@dataclass(frozen=True)
class ModelParams:
    """The tuple (N, b, q, eps) fixing one instance of the equation.

    N    spatial dimension (positive integer)
    b    growth exponent of the unbounded source weight |x|^b, b >= 0
    q    nonlinearity power, q > 1
    eps  +1 defocusing, -1 focusing
    """

    N: int
    b: Scalar
    q: Scalar
    eps: int = -1

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")
        object.__setattr__(self, "b", as_scalar(self.b))
        object.__setattr__(self, "q", as_scalar(self.q))
        if not le(0, self.b):
            raise ValueError(f"b must be >= 0, got {self.b}")
        if not lt(1, self.q):
            raise ValueError(f"q must be > 1, got {self.q}")
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps!r}")

    def label(self) -> str:
        return (f"N={self.N}, b={scalar_repr(self.b)}, "
                f"q={scalar_repr(self.q)}, eps={self.eps:+d}")


@dataclass(frozen=True)
class CriticalData:
    """Critical exponents attached to (N, b, q).

    s_c  Sobolev index left invariant by the scaling family
    q_m  mass-critical power (s_c = 0 exactly at q = q_m)
    q_e  power where s_c reaches the requested regularity s (+inf if N <= 2s)
    D    homogeneity degree of the interaction integral against ||Lap v||
    """

    s_c: Scalar
    q_m: Scalar
    q_e: Scalar
    D: Scalar


def critical_data(params: ModelParams, s: Scalar = 2) -> CriticalData:
    """Evaluate s_c = N/2 - (4+b)/(q-1), q_m = 1 + (8+2b)/N,
    q_e(s) = 1 + (8+2b)/(N-2s) (or +inf for N <= 2s) and
    D = (Nq - N - 2b)/4."""
    s = as_scalar(s)
    N = Fraction(params.N)
    b, q = params.b, params.q
    if not lt(1, q):
        raise ValueError(f"q must be > 1, got {q}")
    s_c = N / 2 - (4 + b) / (q - 1)
    q_m = 1 + (8 + 2 * b) / N
    if le(N, 2 * s):
        q_e: Scalar = math.inf
    else:
        q_e = 1 + (8 + 2 * b) / (N - 2 * s)
    D = (N * q - N - 2 * b) / 4
    return CriticalData(s_c=s_c, q_m=q_m, q_e=q_e, D=D)


def scaling_exponent(params: ModelParams) -> Scalar:
    """Amplitude exponent (4+b)/(q-1) of the invariant rescaling
    v -> lam^((4+b)/(q-1)) v(lam^4 t, lam x)."""
    return (4 + params.b) / (params.q - 1)


# ---------------------------------------------------------------------------
# admissible pairs
# ---------------------------------------------------------------------------

def admissible_window(N: int, s: Scalar) -> tuple[Scalar, Scalar]:
    """Dimension-dependent window [lo, hi) of space exponents r for an
    s-admissible pair: [2N/(N-2s), 2N/(N-4)) for N >= 5, [2, inf) below."""
    s = as_scalar(s)
    if N >= 5:
        lo = 2 * Fraction(N) / (Fraction(N) - 2 * s)
        hi = 2 * Fraction(N) / (Fraction(N) - 4)
        return lo, hi
    return Fraction(2), math.inf


def pair_exponent(N: int, s: Scalar, r: Scalar) -> Scalar:
    """Solve 4/p + s = N(1/2 - 1/r) for the time exponent p.

    Returns math.inf when the right side vanishes (the lower edge of the
    window).  Raises for r outside the window or when the right side is
    negative (no p >= 0 exists).
    """
    s, r = as_scalar(s), as_scalar(r)
    lo, hi = admissible_window(N, s)
    if not (le(lo, r) and lt(r, hi)):
        raise ValueError(
            f"r={scalar_repr(r)} outside the admissible window "
            f"[{scalar_repr(lo)}, {scalar_repr(hi)}) for N={N}, s={scalar_repr(s)}")
    rhs = Fraction(N) * (Fraction(1, 2) - 1 / r) - s
    if lt(rhs, 0):
        raise ValueError(
            f"N(1/2 - 1/r) - s = {scalar_repr(rhs)} < 0: would need p < 0")
    if eq(rhs, 0):
        return math.inf
    return 4 / rhs


def is_admissible(N: int, s: Scalar, p: Scalar, r: Scalar) -> bool:
    """Total predicate: does (p, r) satisfy both the scaling identity
    4/p + s = N(1/2 - 1/r) and the window constraint on r?"""
    s, r = as_scalar(s), as_scalar(r)
    if isinstance(p, float) and math.isinf(p):
        inv4p: Scalar = Fraction(0)
    else:
        p = as_scalar(p)
        if not le(1, p):
            return False
        inv4p = 4 / p
    if not lt(s, 2):
        return False
    if isinstance(r, float) and math.isinf(r):
        return False
    lo, hi = admissible_window(N, s)
    if not (le(lo, r) and lt(r, hi)):
        return False
    return eq(inv4p + s, Fraction(N) * (Fraction(1, 2) - 1 / r))


@dataclass(frozen=True)
class AdmissiblePair:
    """An s-admissible space-time pair (p, r); p may be math.inf."""

    s: Scalar
    p: Scalar
    r: Scalar


def make_admissible_pair(N: int, s: Scalar, r: Scalar) -> AdmissiblePair:
    return AdmissiblePair(s=as_scalar(s), p=pair_exponent(N, s, r), r=as_scalar(r))


# ---------------------------------------------------------------------------
# regime reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Condition:
    """One hypothesis with the two values that were compared."""

    name: str
    satisfied: bool
    left: Scalar
    right: Scalar

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "satisfied": self.satisfied,
            "left": scalar_jsonable(self.left),
            "right": scalar_jsonable(self.right),
        }


@dataclass(frozen=True)
class Interval:
    """A real interval with explicit endpoint membership."""

    lower: Scalar
    upper: Scalar
    lower_closed: bool = True
    upper_closed: bool = True

    def is_empty(self) -> bool:
        if lt(self.upper, self.lower):
            return True
        if eq(self.lower, self.upper):
            return not (self.lower_closed and self.upper_closed)
        return False

    def contains(self, x: Scalar) -> bool:
        above = le(self.lower, x) if self.lower_closed else lt(self.lower, x)
        below = le(x, self.upper) if self.upper_closed else lt(x, self.upper)
        return above and below

    def __str__(self) -> str:
        lb = "[" if self.lower_closed else "("
        ub = "]" if self.upper_closed else ")"
        return f"{lb}{scalar_repr(self.lower)}, {scalar_repr(self.upper)}{ub}"

    def to_dict(self) -> dict:
        return {
            "lower": scalar_jsonable(self.lower),
            "upper": scalar_jsonable(self.upper),
            "lower_closed": self.lower_closed,
            "upper_closed": self.upper_closed,
        }


@dataclass(frozen=True)
class RegimeReport:
    """Structured verdict for one theorem-style hypothesis set.

    verdict is InScope iff every entry of `conditions` is satisfied.
    `q_intervals` is the set of nonlinearity powers q that would be
    InScope for the same (N, b) (and eps/small_mass where relevant), so
    verdict and interval membership always agree.  `branches` itemizes
    alternatives inside a compound condition (used by GlobalExtension).
    """

    theorem_tag: str
    verdict: str
    conditions: tuple[Condition, ...]
    q_intervals: tuple[Interval, ...]
    small_data_only: bool = False
    branches: tuple[Condition, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def in_scope(self) -> bool:
        return self.verdict == IN_SCOPE

    def to_dict(self) -> dict:
        return {
            "theorem_tag": self.theorem_tag,
            "verdict": self.verdict,
            "conditions": [c.to_dict() for c in self.conditions],
            "q_intervals": [i.to_dict() for i in self.q_intervals],
            "small_data_only": self.small_data_only,
            "branches": [c.to_dict() for c in self.branches],
            "notes": list(self.notes),
        }


def _verdict(conditions) -> str:
    return IN_SCOPE if all(c.satisfied for c in conditions) else OUT_OF_SCOPE


def classify_energy_local(params: ModelParams) -> RegimeReport:
    """Hypotheses for local well-posedness in the energy space H^2_rd:
    N >= 5, a dimension-dependent bound on b, and
    1 + 2/N + 2b/(N-1) <= q <= q_e (endpoint allowed for small data only).
    """
    N, b, q = params.N, params.b, params.q
    NN = Fraction(N)
    cd = critical_data(params, 2)
    q_lo = 1 + 2 / NN + 2 * b / (NN - 1)

    conditions = [Condition("N >= 5", N >= 5, N, 5)]
    if N >= 6:
        b_hi = (NN - 1) * (4 + 3 * NN) / (3 * NN)
        conditions.append(
            Condition("b <= (N-1)(4+3N)/(3N)", le(b, b_hi), b, b_hi))
        b_ok = le(b, b_hi)
    else:
        # the five-dimensional branch is two-sided
        b_ok = le(Fraction(2, 9), b) and le(b, Fraction(38, 45))
        conditions.append(
            Condition("b >= 2/9", le(Fraction(2, 9), b), b, Fraction(2, 9)))
        conditions.append(
            Condition("b <= 38/45", le(b, Fraction(38, 45)), b, Fraction(38, 45)))
    conditions.append(
        Condition("q >= 1 + 2/N + 2b/(N-1)", le(q_lo, q), q, q_lo))
    conditions.append(Condition("q <= q_e", le(q, cd.q_e), q, cd.q_e))

    intervals: list[Interval] = []
    if N >= 6 and b_ok:
        intervals.append(Interval(q_lo, cd.q_e))
    elif N == 5 and b_ok:
        # two overlapping pieces whose union is exactly [q_lo, q_e]
        intervals.append(Interval(1 + 2 * b / (NN - 1) + 2 / NN,
                                  1 + 2 * b / (NN - 4) + NN / (NN - 2)))
        intervals.append(Interval(1 + 2 * b / (NN - 1) + 2 / (NN - 4), cd.q_e))
    intervals = [i for i in intervals if not i.is_empty()]

    verdict = _verdict(conditions)
    endpoint = verdict == IN_SCOPE and eq(q, cd.q_e)
    notes = ("q = q_e: endpoint regime, small data only",) if endpoint else ()
    return RegimeReport(
        theorem_tag="EnergyLocal",
        verdict=verdict,
        conditions=tuple(conditions),
        q_intervals=tuple(intervals),
        small_data_only=endpoint,
        notes=notes,
    )


def classify_h1_local(params: ModelParams) -> RegimeReport:
    """Hypotheses for local well-posedness with H^1 data:
    N >= 3, b <= 4(N-1), and 1 + 2b/(N-1) <= q <= q_e(1)."""
    N, b, q = params.N, params.b, params.q
    NN = Fraction(N)
    q1e = critical_data(params, 1).q_e
    q_lo = 1 + 2 * b / (NN - 1) if N > 1 else math.inf
    b_hi = 4 * (NN - 1)

    conditions = [
        Condition("N >= 3", N >= 3, N, 3),
        Condition("b <= 4(N-1)", le(b, b_hi), b, b_hi),
        Condition("q >= 1 + 2b/(N-1)", le(q_lo, q), q, q_lo),
        Condition("q <= q_e(1)", le(q, q1e), q, q1e),
    ]
    intervals = []
    if N >= 3 and le(b, b_hi):
        iv = Interval(q_lo, q1e)
        if not iv.is_empty():
            intervals.append(iv)

    verdict = _verdict(conditions)
    endpoint = verdict == IN_SCOPE and eq(q, q1e)
    notes = ("q = q_e(1): endpoint regime, small data only",) if endpoint else ()
    return RegimeReport(
        theorem_tag="H1Local",
        verdict=verdict,
        conditions=tuple(conditions),
        q_intervals=tuple(intervals),
        small_data_only=endpoint,
        notes=notes,
    )


def classify_small_data_global(params: ModelParams) -> RegimeReport:
    """Hypotheses for global existence + scattering with small data:
    N >= 5, q >= 2 + 2b/(N-1) and q_m < q < q_e (both strict)."""
    N, b, q = params.N, params.b, params.q
    NN = Fraction(N)
    cd = critical_data(params, 2)
    strauss_lo = 2 + 2 * b / (NN - 1) if N > 1 else math.inf

    conditions = [
        Condition("N >= 5", N >= 5, N, 5),
        Condition("q >= 2 + 2b/(N-1)", le(strauss_lo, q), q, strauss_lo),
        Condition("q > q_m", lt(cd.q_m, q), q, cd.q_m),
        Condition("q < q_e", lt(q, cd.q_e), q, cd.q_e),
    ]

    # which of the two lower bounds binds (for N >= 8 it is always the
    # radial-decay one)
    if le(cd.q_m, strauss_lo):
        active = "2 + 2b/(N-1)"
        lower, lower_closed = strauss_lo, lt(cd.q_m, strauss_lo)
    else:
        active = "q_m"
        lower, lower_closed = cd.q_m, False
    notes = [f"active lower bound: {active}"]
    if N >= 8:
        notes.append("N >= 8: max(q_m, 2 + 2b/(N-1)) = 2 + 2b/(N-1)")

    intervals = []
    if N >= 5:
        iv = Interval(lower, cd.q_e, lower_closed=lower_closed, upper_closed=False)
        if not iv.is_empty():
            intervals.append(iv)

    return RegimeReport(
        theorem_tag="SmallDataGlobal",
        verdict=_verdict(conditions),
        conditions=tuple(conditions),
        q_intervals=tuple(intervals),
        notes=tuple(notes),
    )


def classify_global_extension(params: ModelParams,
                              small_mass: bool = False) -> RegimeReport:
    """Does a local energy solution extend globally?  One of three branches
    must hold: q < q_m, or q = q_m with small mass, or the defocusing sign
    with q < q_e.  Requires the energy-local hypotheses as a precondition.
    """
    N, b, q = params.N, params.b, params.q
    cd = critical_data(params, 2)
    local = classify_energy_local(params)

    branches = (
        Condition("q < q_m", lt(q, cd.q_m), q, cd.q_m),
        Condition("q = q_m and small mass",
                  bool(eq(q, cd.q_m) and small_mass), q, cd.q_m),
        Condition("eps = +1 and q < q_e",
                  bool(params.eps == 1 and lt(q, cd.q_e)), q, cd.q_e),
    )
    any_branch = any(c.satisfied for c in branches)
    conditions = (
        Condition("energy-local hypotheses hold", local.in_scope,
                  local.verdict, IN_SCOPE),
        Condition("some global branch holds", any_branch, q, cd.q_m),
    )

    intervals: list[Interval] = []
    if local.q_intervals:
        el_lo = min((iv.lower for iv in local.q_intervals), key=float)
        if params.eps == 1:
            iv = Interval(el_lo, cd.q_e, upper_closed=False)
        else:
            iv = Interval(el_lo, cd.q_m, upper_closed=small_mass)
        if not iv.is_empty():
            intervals.append(iv)

    verdict = _verdict(conditions)
    notes = ("global",) if verdict == IN_SCOPE else ("local only",)
    return RegimeReport(
        theorem_tag="GlobalExtension",
        verdict=verdict,
        conditions=conditions,
        q_intervals=tuple(intervals),
        branches=branches,
        notes=notes,
    )


def classify_all(params: ModelParams,
                 small_mass: bool = False) -> list[RegimeReport]:
    return [
        classify_energy_local(params),
        classify_h1_local(params),
        classify_small_data_global(params),
        classify_global_extension(params, small_mass=small_mass),
    ]


# ---------------------------------------------------------------------------
# scattering pair triple
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScatteringPairTriple:
    """The exponent triple used by the scattering estimates:
    r = 2 + nu with nu = q - 1 - 2b/(N-1), s_nu = N/2 - 4/nu, and time
    exponents p, k, m making (p,r), (k,r), (m,r) respectively 0-, s_nu-
    and (-s_nu)-admissible."""

    nu: Scalar
    r: Scalar
    s_nu: Scalar
    p: Scalar
    k: Scalar
    m: Scalar
    residuals: tuple[float, float, float] = field(default=(0.0, 0.0, 0.0))


def scattering_triple(params: ModelParams) -> ScatteringPairTriple:
    """Build the triple and verify the three admissibility identities
    4/p = N(1/2-1/r), 4/k + s_nu = N(1/2-1/r), 4/m - s_nu = N(1/2-1/r).
    """
    N, b, q = params.N, params.b, params.q
    NN = Fraction(N)
    if N < 2:
        raise ValueError("scattering triple needs N >= 2 (divides by N-1)")
    nu = q - 1 - 2 * b / (NN - 1)
    if not lt(0, nu):
        raise ValueError(f"nu = q - 1 - 2b/(N-1) = {scalar_repr(nu)} must be > 0")
    s_nu = NN / 2 - 4 / nu
    if not lt(0, s_nu):
        raise ValueError(f"s_nu = N/2 - 4/nu = {scalar_repr(s_nu)} must be > 0")
    if not lt(s_nu, 2):
        # k's denominator 8 - (N-4) nu changes sign exactly at s_nu = 2
        raise ValueError(
            f"s_nu = {scalar_repr(s_nu)} >= 2: (k, r) leaves the admissible family")
    r = 2 + nu
    p = 8 * (2 + nu) / (NN * nu)
    k = 4 * nu * (2 + nu) / (8 - (NN - 4) * nu)
    m = 4 * nu * (2 + nu) / (NN * nu ** 2 + (NN - 4) * nu - 8)

    rhs = float(N) * (0.5 - 1.0 / float(r))
    residuals = (
        abs(4.0 / float(p) - rhs),
        abs(4.0 / float(k) + float(s_nu) - rhs),
        abs(4.0 / float(m) - float(s_nu) - rhs),
    )
    names = ("(p, r) 0-admissible", "(k, r) s_nu-admissible",
             "(m, r) (-s_nu)-admissible")
    for name, res in zip(names, residuals):
        if res > 1e-12:
            raise ValueError(f"admissibility identity failed for {name}: "
                             f"residual {res:.3e}")
    return ScatteringPairTriple(nu=nu, r=r, s_nu=s_nu, p=p, k=k, m=m,
                                residuals=residuals)
