"""Exact truncated formal power series and formal group laws.

Everything in this module is computed over exact rationals; floats are
deliberately rejected so that coefficient identities can serve as zero-tolerance
test oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import CompositionDomainError, NormalizationError

Rational = Fraction | int | str


def _frac(value: Rational) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not allowed in exact series arithmetic")
    return Fraction(value)


@dataclass(frozen=True)
class TruncatedSeries:
    """A univariate formal power series kept exactly up to a fixed order.

    ``coeffs[k]`` is the coefficient of ``s**k``; the series is truncated at
    ``order = len(coeffs) - 1``.  Binary operations truncate to the smaller
    order of the two operands, so results never claim more precision than
    their inputs carry.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational], order: int | None = None) -> "TruncatedSeries":
        cs = [_frac(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        """The series ``s`` truncated at ``order``."""
        return cls.from_coeffs([0, 1], order=order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def truncated(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(self.coeffs, order=order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[k] - other[k] for k in range(n + 1)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, ci in enumerate(self.coeffs[: n + 1]):
            if ci == 0:
                continue
            for j in range(n + 1 - i):
                cj = other[j]
                if cj != 0:
                    out[i + j] += ci * cj
        return TruncatedSeries(tuple(out))

    def scaled(self, factor: Rational) -> "TruncatedSeries":
        f = _frac(factor)
        return TruncatedSeries(tuple(c * f for c in self.coeffs))

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries((Fraction(0),))
        return TruncatedSeries(tuple(k * self.coeffs[k] for k in range(1, self.order + 1)))

    def is_identity(self) -> bool:
        return self[0] == 0 and self[1] == 1 and all(c == 0 for c in self.coeffs[2:])

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def series_from_b_sequence(b: Sequence[Rational], order: int) -> TruncatedSeries:
    """Build the series sum_i b_i s^(i+1)/(i+1) from its integral coefficients.

    ``b[0]`` must equal 1; missing coefficients beyond ``len(b)`` are treated
    as zero.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    bs = [_frac(v) for v in b]
    if not bs or bs[0] != 1:
        raise NormalizationError("the leading integral coefficient must be 1")
    coeffs = [Fraction(0)] * (order + 1)
    for i in range(min(len(bs), order)):
        coeffs[i + 1] = bs[i] / (i + 1)
    return TruncatedSeries(tuple(coeffs))


def integral_coefficients(f: TruncatedSeries) -> tuple[Fraction, ...]:
    """Read a series back in the s^(k+1)/(k+1) convention: a_k = (k+1) c_{k+1}."""
    return tuple((k + 1) * f[k + 1] for k in range(f.order))


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """The composition f(g(s)), exact to the shared truncation order."""
    if g[0] != 0:
        raise CompositionDomainError("inner series must have zero constant term")
    n = min(f.order, g.order)
    gn = g.truncated(n)
    # Horner over the outer coefficients; every product is truncated at n.
    acc = TruncatedSeries.from_coeffs([f[n]], order=n)
    for k in range(n - 1, -1, -1):
        acc = acc * gn
        acc = TruncatedSeries(tuple((f[k] if i == 0 else 0) + acc[i] for i in range(n + 1)))
    return acc


def reversion(f: TruncatedSeries) -> TruncatedSeries:
    """The compositional inverse g with f(g(s)) = s up to the truncation order."""
    if f[0] != 0 or f[1] != 1:
        raise NormalizationError("reversion requires c_0 = 0 and c_1 = 1")
    n = f.order
    g = [Fraction(0)] * (n + 1)
    g[1] = Fraction(1)
    # Solve coefficient by coefficient: the unknown g[m] enters f(g) linearly
    # through the c_1 = 1 term, so g[m] = -[s^m] f(g with g[m] = 0).
    for m in range(2, n + 1):
        partial = TruncatedSeries(tuple(g[: m + 1]))
        residual = compose(f.truncated(m), partial)
        g[m] = -residual[m]
    return TruncatedSeries(tuple(g))


@dataclass(frozen=True)
class BivariateTruncatedSeries:
    """A two-variable polynomial truncated at a fixed total degree.

    ``coeffs`` maps exponent pairs ``(i, j)`` with ``i + j <= order`` to exact
    rationals; absent keys are zero.
    """

    coeffs: Mapping[tuple[int, int], Fraction]
    order: int

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0 or i + j > self.order:
                raise ValueError(f"exponent pair {(i, j)} outside total degree {self.order}")
            c = _frac(c)
            if c != 0:
                clean[(i, j)] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def monomials(self):
        """All exponent pairs up to the truncation order, in lexicographic order."""
        for i in range(self.order + 1):
            for j in range(self.order + 1 - i):
                yield (i, j)

    def __add__(self, other: "BivariateTruncatedSeries") -> "BivariateTruncatedSeries":
        n = min(self.order, other.order)
        out: dict[tuple[int, int], Fraction] = {}
        for key in set(self.coeffs) | set(other.coeffs):
            if key[0] + key[1] <= n:
                out[key] = self[key] + other[key]
        return BivariateTruncatedSeries(out, n)

    def __mul__(self, other: "BivariateTruncatedSeries") -> "BivariateTruncatedSeries":
        n = min(self.order, other.order)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j <= n:
                    key = (i, j)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivariateTruncatedSeries(out, n)

    def scaled(self, factor: Rational) -> "BivariateTruncatedSeries":
        f = _frac(factor)
        return BivariateTruncatedSeries({k: c * f for k, c in self.coeffs.items()}, self.order)


def group_law_from_G(g: TruncatedSeries, order: int) -> BivariateTruncatedSeries:
    """Expand G(G^{-1}(x) + G^{-1}(y)) as an exact bivariate polynomial.

    ``g`` must be normalized (zero constant term, unit linear term) and carry
    at least ``order`` coefficients; the result is truncated at total degree
    ``order`` and by construction starts with ``x + y``.
    """
    if g[0] != 0 or g[1] != 1:
        raise NormalizationError("group-law construction requires c_0 = 0 and c_1 = 1")
    if g.order < order:
        raise ValueError(f"series order {g.order} is below the requested expansion order {order}")
    gn = g.truncated(order)
    ginv = reversion(gn)
    u = BivariateTruncatedSeries({(k, 0): c for k, c in enumerate(ginv.coeffs)}, order)
    v = BivariateTruncatedSeries({(0, k): c for k, c in enumerate(ginv.coeffs)}, order)
    w = u + v
    out = BivariateTruncatedSeries({}, order)
    power = BivariateTruncatedSeries({(0, 0): Fraction(1)}, order)
    for k in range(order + 1):
        if k:
            power = power * w
        if gn[k] != 0:
            out = out + power.scaled(gn[k])
    return out


class _TriPoly:
    """Sparse trivariate polynomial truncated at a fixed total degree."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[tuple[int, int, int], Fraction], order: int):
        self.coeffs = {k: c for k, c in coeffs.items() if c != 0}
        self.order = order

    @classmethod
    def constant(cls, value: Fraction, order: int) -> "_TriPoly":
        return cls({(0, 0, 0): Fraction(value)}, order)

    def add_scaled(self, other: "_TriPoly", factor: Fraction) -> "_TriPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + factor * c
        return _TriPoly(out, self.order)

    def __mul__(self, other: "_TriPoly") -> "_TriPoly":
        out: dict[tuple[int, int, int], Fraction] = {}
        n = self.order
        for (a1, b1, c1), v1 in self.coeffs.items():
            for (a2, b2, c2), v2 in other.coeffs.items():
                a, b, c = a1 + a2, b1 + b2, c1 + c2
                if a + b + c <= n:
                    key = (a, b, c)
                    out[key] = out.get(key, Fraction(0)) + v1 * v2
        return _TriPoly(out, n)


def _tri_embed(psi: BivariateTruncatedSeries, axes: tuple[int, int]) -> _TriPoly:
    """Lift a bivariate polynomial into three variables along the given axes."""
    out: dict[tuple[int, int, int], Fraction] = {}
    for (i, j), c in psi.coeffs.items():
        key = [0, 0, 0]
        key[axes[0]] = i
        key[axes[1]] = j
        out[tuple(key)] = c
    return _TriPoly(out, psi.order)


def _tri_substitute(psi: BivariateTruncatedSeries, first: _TriPoly, second: _TriPoly) -> _TriPoly:
    """Evaluate psi(first, second) with trivariate truncated arithmetic."""
    order = psi.order
    max_i = max((i for (i, _) in psi.coeffs), default=0)
    max_j = max((j for (_, j) in psi.coeffs), default=0)
    pow_first = [_TriPoly.constant(Fraction(1), order)]
    for _ in range(max_i):
        pow_first.append(pow_first[-1] * first)
    pow_second = [_TriPoly.constant(Fraction(1), order)]
    for _ in range(max_j):
        pow_second.append(pow_second[-1] * second)
    out = _TriPoly({}, order)
    for (i, j), c in sorted(psi.coeffs.items()):
        out = out.add_scaled(pow_first[i] * pow_second[j], c)
    return out


@dataclass(frozen=True)
class GroupAxiomReport:
    """Outcome of the coefficient-wise formal group axiom checks.

    ``first_failure`` records, per failed axiom, the first offending monomial
    and the coefficient(s) found there.
    """

    identity: bool
    commutativity: bool
    associativity: bool
    first_failure: dict

    @property
    def all_pass(self) -> bool:
        return self.identity and self.commutativity and self.associativity


def verify_group_axioms(psi: BivariateTruncatedSeries) -> GroupAxiomReport:
    """Check identity, commutativity and associativity of a candidate group law.

    Associativity is checked by materializing both trivariate compositions
    truncated at the law's total degree.
    """
    failures: dict = {}

    identity_ok = True
    for axis in (0, 1):
        for k in range(psi.order + 1):
            key = (k, 0) if axis == 0 else (0, k)
            expected = Fraction(1) if k == 1 else Fraction(0)
            if psi[key] != expected:
                identity_ok = False
                failures.setdefault("identity", (key, psi[key], expected))
                break
        if not identity_ok:
            break

    commutative_ok = True
    for (i, j) in sorted({(max(i, j), min(i, j)) for (i, j) in psi.coeffs}):
        if psi[(i, j)] != psi[(j, i)]:
            commutative_ok = False
            failures["commutativity"] = ((i, j), psi[(i, j)], psi[(j, i)])
            break

    left = _tri_substitute(psi, _tri_embed(psi, (0, 1)), _tri_embed_var(2, psi.order))
    right = _tri_substitute(psi, _tri_embed_var(0, psi.order), _tri_embed(psi, (1, 2)))
    associative_ok = True
    for key in sorted(set(left.coeffs) | set(right.coeffs)):
        lv = left.coeffs.get(key, Fraction(0))
        rv = right.coeffs.get(key, Fraction(0))
        if lv != rv:
            associative_ok = False
            failures["associativity"] = (key, lv, rv)
            break

    return GroupAxiomReport(identity_ok, commutative_ok, associative_ok, failures)


def _tri_embed_var(axis: int, order: int) -> _TriPoly:
    key = [0, 0, 0]
    key[axis] = 1
    return _TriPoly({tuple(key): Fraction(1)}, order)


@dataclass(frozen=True)
class AbelCoefficients:
    """Closed-form coefficients of the two-parameter exponential group law."""

    a: Fraction
    b: Fraction
    betas: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.betas and self.betas[0] != self.a + self.b:
            raise ValueError("beta_1 must equal a + b")


def abel_group_coefficients(a: Rational, b: Rational, n: int) -> AbelCoefficients:
    """Bracket coefficients beta_1..beta_n of the Abel-exponential group law.

    beta_1 = a + b and, for m > 1,
    beta_m = (-1)^(m-1) / (m! (m-1)) * prod_{i+j=m-1, i,j>=0} (i a + j b).
    """
    if n < 1:
        raise ValueError("need at least one coefficient")
    af, bf = _frac(a), _frac(b)
    betas = [af + bf]
    for m in range(2, n + 1):
        prod = Fraction(1)
        for i in range(m):
            prod *= i * af + (m - 1 - i) * bf
        betas.append(Fraction((-1) ** (m - 1), math.factorial(m) * (m - 1)) * prod)
    return AbelCoefficients(af, bf, tuple(betas))


def identity_series(order: int) -> TruncatedSeries:
    """G(t) = t; carrier of the additive group law."""
    return TruncatedSeries.identity(order)


def tsallis_exp_series(q: Rational, order: int) -> TruncatedSeries:
    """Exact expansion of (e^((1-q) t) - 1)/(1-q): carrier of x + y + (1-q) x y."""
    qf = _frac(q)
    if qf == 1:
        return identity_series(order)
    r = 1 - qf
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(r ** (n - 1) / math.factorial(n))
    return TruncatedSeries(tuple(coeffs))


def kaniadakis_exp_series(k: Rational, order: int) -> TruncatedSeries:
    """Exact expansion of sinh(k t)/k: carrier of the deformed-sum group law."""
    kf = _frac(k)
    if kf == 0:
        return identity_series(order)
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(0, order + 1, 2):
        if n + 1 <= order:
            coeffs[n + 1] = kf**n / math.factorial(n + 1)
    return TruncatedSeries(tuple(coeffs))


def abel_exp_series(a: Rational, b: Rational, order: int) -> TruncatedSeries:
    """Exact expansion of (e^(a t) - e^(b t))/(a - b).

    The coefficient of t^n/n! is the complete homogeneous symmetric polynomial
    sum_{i+j=n-1} a^i b^j, which stays well-defined at a = b.
    """
    af, bf = _frac(a), _frac(b)
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        h = sum((af**i) * (bf ** (n - 1 - i)) for i in range(n))
        coeffs.append(h / math.factorial(n))
    return TruncatedSeries(tuple(coeffs))
