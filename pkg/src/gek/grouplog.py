"""Generalized group logarithms and exponentials.

Each group function G is strictly increasing with G(0) = 0 and G'(0) = 1.
It induces the logarithm ln_G(x) = G(gamma * ln x), the exponential
exp_G(x) = e^(G^-1(x)/gamma), and the two-argument law
chi(x, y) = G(G^-1(x) + G^-1(y)) that ln_G obeys on products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.optimize import brentq

from .errors import ConvergenceError, DomainError, ParameterError, RangeError
from .series import TruncatedSeries

_Q_LIMIT_CUTOFF = 1e-9  # below this |1 - q| the multiplicative family is evaluated in the q -> 1 limit


class GroupFunction:
    """Base class: an evaluatable G with closed-form or numeric inversion.

    Subclasses must provide ``eval`` and ``deriv``; the default ``inverse``
    and ``chi`` use monotone bracketing plus Brent root-finding, and rely on
    ``domain_min`` / ``range_min`` for admissibility checks.
    """

    name = "group"
    domain_min = -math.inf  # evaluation domain is (domain_min, inf)
    range_min = -math.inf  # range is (range_min, inf)

    def eval(self, t: float) -> float:
        raise NotImplementedError

    def deriv(self, t: float) -> float:
        raise NotImplementedError

    def params(self) -> dict:
        return {}

    def _check_domain(self, t: float) -> None:
        if t <= self.domain_min:
            raise DomainError(
                f"{self.name}: argument {t} is outside the increasing domain (> {self.domain_min})"
            )

    def inverse(self, s: float) -> float:
        """Solve G(t) = s by bracketing from 0 and Brent's method."""
        if not math.isfinite(s):
            raise RangeError(f"{self.name}: cannot invert non-finite value {s}")
        if s <= self.range_min:
            raise RangeError(f"{self.name}: value {s} is at or below the range infimum {self.range_min}")
        if s == 0.0:
            return 0.0
        lo, hi = self._bracket(s)
        if lo == hi:
            return lo
        root = brentq(lambda t: self.eval(t) - s, lo, hi, xtol=1e-15, rtol=8.9e-16)
        return float(root)

    def _bracket(self, s: float) -> tuple[float, float]:
        if s > 0.0:
            t, prev = 1.0, 0.0
            for _ in range(200):
                try:
                    value = self.eval(t)
                except OverflowError:
                    value = math.inf
                if value >= s:
                    if math.isinf(value):
                        # shrink back into the representable region
                        hi = t
                        for _ in range(200):
                            mid = 0.5 * (prev + hi)
                            try:
                                v = self.eval(mid)
                            except OverflowError:
                                v = math.inf
                            if math.isfinite(v) and v >= s:
                                return prev, mid
                            if math.isfinite(v):
                                prev = mid
                            else:
                                hi = mid
                        raise ConvergenceError(f"{self.name}: bracket shrink failed for {s}")
                    return prev, t
                prev, t = t, 2.0 * t
            raise ConvergenceError(f"{self.name}: upward bracket expansion failed for {s}")
        if math.isfinite(self.domain_min):
            # halve the gap toward the open domain floor until G dips below s
            t = 0.5 * self.domain_min
            for _ in range(200):
                if t <= self.domain_min:
                    break
                if self.eval(t) <= s:
                    return t, 0.0
                t = 0.5 * (t + self.domain_min)
            raise ConvergenceError(f"{self.name}: bracket did not reach {s} near the domain floor")
        t = -1.0
        for _ in range(200):
            if self.eval(t) <= s:
                return t, 0.0
            t *= 2.0
        raise ConvergenceError(f"{self.name}: downward bracket expansion failed for {s}")

    def chi(self, x: float, y: float) -> float:
        """The group law G(G^-1(x) + G^-1(y)); overridden where a closed form exists."""
        return self.eval(self.inverse(x) + self.inverse(y))

    def describe(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.name}({inner})" if inner else self.name


class IdentityGroup(GroupFunction):
    """G(t) = t: the additive law, standard logarithm and exponential."""

    name = "identity"

    def eval(self, t: float) -> float:
        return t

    def deriv(self, t: float) -> float:
        return 1.0

    def inverse(self, s: float) -> float:
        return s

    def chi(self, x: float, y: float) -> float:
        return x + y


class MultiplicativeGroup(GroupFunction):
    """G(t) = (e^((1-q) t) - 1)/(1 - q): carrier of x + y + (1-q) x y.

    Induces the q-deformed logarithm (x^(1-q) - 1)/(1-q); near q = 1 the
    removable singularity is evaluated in the limit.
    """

    name = "multiplicative"

    def __init__(self, q: float):
        if q == 1:
            raise ParameterError("multiplicative family requires q != 1")
        self.q = float(q)
        self.r = 1.0 - self.q
        self._limit = abs(self.r) < _Q_LIMIT_CUTOFF
        if not self._limit and self.r > 0:
            self.range_min = -1.0 / self.r

    def params(self) -> dict:
        return {"q": self.q}

    def eval(self, t: float) -> float:
        if self._limit:
            return t
        return math.expm1(self.r * t) / self.r

    def deriv(self, t: float) -> float:
        if self._limit:
            return 1.0
        return math.exp(self.r * t)

    def inverse(self, s: float) -> float:
        if self._limit:
            return s
        u = self.r * s
        if u <= -1.0:
            raise RangeError(f"multiplicative(q={self.q}): {s} outside range")
        return math.log1p(u) / self.r

    def chi(self, x: float, y: float) -> float:
        return x + y + self.r * x * y


class KaniadakisGroup(GroupFunction):
    """G(t) = sinh(k t)/k: carrier of x sqrt(1 + k^2 y^2) + y sqrt(1 + k^2 x^2)."""

    name = "kaniadakis"

    def __init__(self, k: float):
        if not -1.0 < k < 1.0 or k == 0:
            raise ParameterError("kaniadakis family requires -1 < k < 1, k != 0")
        self.k = float(k)

    def params(self) -> dict:
        return {"k": self.k}

    def eval(self, t: float) -> float:
        return math.sinh(self.k * t) / self.k

    def deriv(self, t: float) -> float:
        return math.cosh(self.k * t)

    def inverse(self, s: float) -> float:
        return math.asinh(self.k * s) / self.k

    def chi(self, x: float, y: float) -> float:
        k2 = self.k * self.k
        return x * math.sqrt(1.0 + k2 * y * y) + y * math.sqrt(1.0 + k2 * x * x)


class AbelGroup(GroupFunction):
    """G(t) = (e^(a t) - e^(b t))/(a - b), the two-parameter exponential.

    For min(a, b) > 0 the function is increasing only on an open half-line;
    evaluation outside it is a domain error.  Inversion is numeric.
    """

    name = "abel"

    def __init__(self, a: float, b: float):
        if a == b:
            raise ParameterError("abel family requires a != b")
        if max(a, b) <= 0:
            raise ParameterError("abel family requires max(a, b) > 0")
        self.a = float(a)
        self.b = float(b)
        hi, lo = max(self.a, self.b), min(self.a, self.b)
        if lo > 0:
            self.domain_min = math.log(lo / hi) / (hi - lo)
            self.range_min = self._eval_unchecked(self.domain_min)
        elif lo == 0:
            self.range_min = -1.0 / hi

    def params(self) -> dict:
        return {"a": self.a, "b": self.b}

    def _eval_unchecked(self, t: float) -> float:
        return (math.exp(self.a * t) - math.exp(self.b * t)) / (self.a - self.b)

    def eval(self, t: float) -> float:
        self._check_domain(t)
        return self._eval_unchecked(t)

    def deriv(self, t: float) -> float:
        return (self.a * math.exp(self.a * t) - self.b * math.exp(self.b * t)) / (self.a - self.b)


class SeriesGroup(GroupFunction):
    """A G defined by a truncated series, evaluated by Horner inside a horizon.

    Truncated series are only locally faithful, so evaluation is refused for
    |t| beyond the horizon and inversion is restricted to the corresponding
    value interval.
    """

    name = "series"

    def __init__(self, series: TruncatedSeries, horizon: float = 1.0):
        if series[0] != 0 or series[1] != 1:
            raise ParameterError("series-defined G requires c_0 = 0 and c_1 = 1")
        if horizon <= 0:
            raise ParameterError("horizon must be positive")
        self.series = series
        self.horizon = float(horizon)
        self._coeffs = [float(c) for c in series.coeffs]
        self._dcoeffs = [float(c) for c in series.derivative().coeffs]

    def params(self) -> dict:
        return {"order": self.series.order, "horizon": self.horizon}

    def _check_horizon(self, t: float) -> None:
        if abs(t) > self.horizon:
            raise DomainError(f"series G evaluated at {t} beyond horizon {self.horizon}")

    def eval(self, t: float) -> float:
        self._check_horizon(t)
        return _horner(self._coeffs, t)

    def deriv(self, t: float) -> float:
        self._check_horizon(t)
        return _horner(self._dcoeffs, t)

    def inverse(self, s: float) -> float:
        lo, hi = self.eval(-self.horizon), self.eval(self.horizon)
        if not lo <= s <= hi:
            raise RangeError(f"series G: {s} outside the horizon-limited range [{lo}, {hi}]")
        if s == 0.0:
            return 0.0
        return float(brentq(lambda t: self.eval(t) - s, -self.horizon, self.horizon, xtol=1e-15, rtol=8.9e-16))


def _horner(coeffs: list[float], t: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


_FAMILIES = {
    "id": (IdentityGroup, ()),
    "identity": (IdentityGroup, ()),
    "tsallis": (MultiplicativeGroup, ("q",)),
    "multiplicative": (MultiplicativeGroup, ("q",)),
    "kaniadakis": (KaniadakisGroup, ("k",)),
    "abel": (AbelGroup, ("a", "b")),
}


def group_function(name: str, **params) -> GroupFunction:
    """Construct a named closed-form group function, validating its parameters."""
    key = name.lower()
    if key not in _FAMILIES:
        raise ParameterError(f"unknown group function {name!r}; choose from {sorted(set(_FAMILIES))}")
    cls, wanted = _FAMILIES[key]
    missing = [w for w in wanted if w not in params]
    extra = [p for p in params if p not in wanted]
    if missing or extra:
        raise ParameterError(f"{name} expects parameters {wanted}; missing {missing}, unknown {extra}")
    return cls(**{w: params[w] for w in wanted})


@dataclass(frozen=True)
class GroupLogarithm:
    """ln_G(x) = G(gamma * ln x) together with its inverse exponential."""

    g: GroupFunction
    gamma: float = 1.0

    def __post_init__(self) -> None:
        if self.gamma == 0:
            raise ParameterError("gamma must be nonzero")


def eval_ln_G(lg: GroupLogarithm, x: float) -> float:
    """The generalized logarithm at x > 0; vanishes at x = 1."""
    if x <= 0:
        raise DomainError(f"ln_G requires a positive argument, got {x}")
    return lg.g.eval(lg.gamma * math.log(x))


def eval_G_inverse(g: GroupFunction, s: float) -> float:
    """t with G(t) = s, via closed form where available, else bracketed root-finding."""
    return g.inverse(s)


def eval_exp_G(lg: GroupLogarithm, x: float) -> float:
    """The generalized exponential e^(G^-1(x)/gamma), inverse of eval_ln_G."""
    return math.exp(lg.g.inverse(x) / lg.gamma)


def chi(g: GroupFunction, x: float, y: float) -> float:
    """The composition law G(G^-1(x) + G^-1(y))."""
    return g.chi(x, y)


def check_concavity_condition(a_seq) -> bool:
    """Coefficient test guaranteeing a concave ln_G: a_k > 0 and a_k > (k+1) a_{k+1}."""
    seq = list(a_seq)
    if not seq:
        raise ValueError("need at least one coefficient")
    if any(a <= 0 for a in seq):
        return False
    return all(seq[k] > (k + 2) * seq[k + 1] for k in range(len(seq) - 1))
