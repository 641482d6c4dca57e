"""Classical entropy functionals over finite distributions, with their composition laws.

All families here are either members of the generalized-logarithm class
ln_G(sum_i p_i^alpha)/(1 - alpha) or trace-form companions (Boltzmann, the
two-parameter deformed entropy, Landsberg-Vedral).  Every family carries the
two-argument law its values obey on products of independent systems.

Entropies are reported in nats with the Boltzmann constant set to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import InputError, ParameterError
from .grouplog import AbelGroup, GroupFunction, IdentityGroup, group_function

SUM_TOLERANCE = 1e-12


class Distribution:
    """A finite discrete probability vector: entries >= 0 summing to 1.

    Validation is strict by default (total within 1e-12); pass
    ``renormalize=True`` to divide by the total instead.
    """

    __slots__ = ("p",)

    def __init__(self, probs, renormalize: bool = False):
        arr = np.asarray(probs, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise InputError("a distribution must be a nonempty 1-D vector")
        if np.any(arr < 0) or not np.all(np.isfinite(arr)):
            raise InputError("probabilities must be finite and nonnegative")
        total = float(arr.sum())
        if renormalize:
            if total <= 0:
                raise InputError("cannot renormalize a zero vector")
            arr = arr / total
        elif abs(total - 1.0) > SUM_TOLERANCE:
            raise InputError(f"probabilities sum to {total!r}, not 1 within {SUM_TOLERANCE}")
        arr = arr.copy()
        arr.setflags(write=False)
        self.p = arr

    @property
    def size(self) -> int:
        return int(self.p.size)

    @classmethod
    def uniform(cls, w: int) -> "Distribution":
        if w < 1:
            raise InputError("uniform distribution needs at least one outcome")
        return cls(np.full(w, 1.0 / w))

    @classmethod
    def delta(cls, w: int, index: int = 0) -> "Distribution":
        if w < 1 or not 0 <= index < w:
            raise InputError("delta distribution needs 1 <= size and a valid index")
        arr = np.zeros(w)
        arr[index] = 1.0
        return cls(arr)

    def append_zero(self) -> "Distribution":
        return Distribution(np.append(self.p, 0.0))

    def __repr__(self) -> str:
        return f"Distribution({self.p.tolist()})"


def _power_sum_raw(arr: np.ndarray, alpha: float) -> float:
    if alpha <= 0:
        raise ParameterError("power sums are defined for positive exponents only")
    positive = arr[arr > 0]
    return float(np.sum(positive**alpha))


def power_sum(p: Distribution, alpha: float) -> float:
    """sum_i p_i^alpha with the convention 0^alpha = 0."""
    return _power_sum_raw(p.p, alpha)


def product_distribution(p: Distribution, r: Distribution) -> Distribution:
    """Joint distribution of two independent systems (outer product, flattened)."""
    return Distribution(np.outer(p.p, r.p).ravel())


def _check_alpha(alpha: float) -> None:
    if alpha <= 0:
        raise ParameterError("alpha must be positive")
    if alpha == 1:
        raise ParameterError("alpha = 1 is excluded; use the Boltzmann entropy for the limit")


def boltzmann(p: Distribution) -> float:
    """sum_i p_i ln(1/p_i), with 0 ln(1/0) = 0."""
    return _boltzmann_raw(p.p)


def _boltzmann_raw(arr: np.ndarray) -> float:
    positive = arr[arr > 0]
    return float(-np.sum(positive * np.log(positive)))


def renyi(alpha: float, p: Distribution) -> float:
    """ln(sum_i p_i^alpha)/(1 - alpha)."""
    _check_alpha(alpha)
    return math.log(power_sum(p, alpha)) / (1.0 - alpha)


def z_entropy(g: GroupFunction, alpha: float, p: Distribution) -> float:
    """The group entropy G(ln sum_i p_i^alpha)/(1 - alpha)."""
    _check_alpha(alpha)
    return g.eval(math.log(power_sum(p, alpha))) / (1.0 - alpha)


def alt_z_entropy(g: GroupFunction, alpha: float, p: Distribution) -> float:
    """The companion form G(ln(sum_i p_i^alpha)/(1 - alpha)): G applied after the quotient."""
    _check_alpha(alpha)
    return g.eval(renyi(alpha, p))


def tsallis_aq(a: float, q: float, p: Distribution) -> float:
    """The two-parameter deformed trace-form entropy (1 - sum_i p_i^(a(q-1)+1))/(q - 1)."""
    _validate_tsallis_aq(a, q)
    return _tsallis_aq_raw(a, q, p.p)


def _validate_tsallis_aq(a: float, q: float) -> None:
    if a <= 0:
        raise ParameterError("requires a > 0")
    if q == 1:
        raise ParameterError("requires q != 1")
    if a * (q - 1) + 1 <= 0:
        raise ParameterError("requires a(q-1) + 1 > 0")


def _tsallis_aq_raw(a: float, q: float, arr: np.ndarray) -> float:
    exponent = a * (q - 1.0) + 1.0
    return (1.0 - _power_sum_raw(arr, exponent)) / (q - 1.0)


def landsberg_vedral(q: float, p: Distribution) -> float:
    """The normalized deformed entropy S_q / sum_i p_i^q."""
    _validate_lv(q)
    return _landsberg_vedral_raw(q, p.p)


def _validate_lv(q: float) -> None:
    if q == 1:
        raise ParameterError("requires q != 1")
    if q <= 0:
        raise ParameterError("requires q > 0")


def _landsberg_vedral_raw(q: float, arr: np.ndarray) -> float:
    ps = _power_sum_raw(arr, q)
    return (1.0 - ps) / ((q - 1.0) * ps)


def z_q_alpha(q: float, alpha: float, p: Distribution) -> float:
    """The deformed-logarithm member: ln_q(sum_i p_i^alpha)/(1 - alpha)."""
    _check_alpha(alpha)
    if q <= 0:
        raise ParameterError("requires q > 0")
    if q == 1:
        raise ParameterError("q = 1 degenerates to the additive member; use renyi")
    return _z_q_alpha_raw(q, alpha, p.p)


def _z_q_alpha_raw(q: float, alpha: float, arr: np.ndarray) -> float:
    s = _power_sum_raw(arr, alpha)
    return (s ** (1.0 - q) - 1.0) / ((1.0 - q) * (1.0 - alpha))


def z_k_alpha(k: float, alpha: float, p: Distribution) -> float:
    """The deformed-sum member: ((sum p^alpha)^k - (sum p^alpha)^-k)/(2k(1 - alpha))."""
    _check_alpha(alpha)
    if not -1.0 < k < 1.0:
        raise ParameterError("requires -1 < k < 1")
    if k == 0:
        raise ParameterError("k = 0 degenerates to the additive member; use renyi")
    return _z_k_alpha_raw(k, alpha, p.p)


def _z_k_alpha_raw(k: float, alpha: float, arr: np.ndarray) -> float:
    s = _power_sum_raw(arr, alpha)
    return (s**k - s**-k) / (2.0 * k * (1.0 - alpha))


def z_ab(a: float, b: float, alpha: float, p: Distribution) -> float:
    """The two-exponent member: ((sum p^alpha)^a - (sum p^alpha)^b)/((a-b)(1 - alpha))."""
    _check_alpha(alpha)
    _validate_ab(a, b)
    return _z_ab_raw(a, b, alpha, p.p)


def _validate_ab(a: float, b: float) -> None:
    if a == b:
        raise ParameterError("requires a != b")
    if max(a, b) <= 0:
        raise ParameterError("requires a > 0 or b > 0")


def _z_ab_raw(a: float, b: float, alpha: float, arr: np.ndarray) -> float:
    s = _power_sum_raw(arr, alpha)
    return (s**a - s**b) / ((a - b) * (1.0 - alpha))


def composition_phi(g: GroupFunction, alpha: float, x: float, y: float) -> float:
    """The composition law of the group entropy of order alpha for G."""
    _check_alpha(alpha)
    c = 1.0 - alpha
    return g.chi(c * x, c * y) / c


_FAMILY_PARAMS = {
    "boltzmann": (),
    "renyi": ("alpha",),
    "tsallis_aq": ("a", "q"),
    "landsberg_vedral": ("q",),
    "zq": ("q", "alpha"),
    "zk": ("k", "alpha"),
    "zab": ("a", "b", "alpha"),
    "zg": ("alpha",),  # plus a group function
    "altz": ("alpha",),  # plus a group function
    "control": (),
}

_GROUP_FAMILIES = ("zg", "altz")
Z_FAMILIES = ("renyi", "zq", "zk", "zab", "zg")


@dataclass(frozen=True)
class EntropySpec:
    """A validated entropy family tag plus parameter set.

    Bundles the functional itself, the two-argument law it satisfies on
    products, closed-form values on uniform distributions, and a raw
    (validation-free) evaluation used by derivative-based checks.
    """

    family: str
    params: Mapping[str, float]
    group: GroupFunction | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_PARAMS:
            raise ParameterError(
                f"unknown entropy family {self.family!r}; choose from {sorted(_FAMILY_PARAMS)}"
            )
        wanted = _FAMILY_PARAMS[self.family]
        missing = [w for w in wanted if w not in self.params]
        extra = [k for k in self.params if k not in wanted]
        if missing or extra:
            raise ParameterError(
                f"family {self.family} takes parameters {wanted}; missing {missing}, unknown {extra}"
            )
        if self.family in _GROUP_FAMILIES and self.group is None:
            raise ParameterError(f"family {self.family} needs a group function")
        # run the per-family validators once, so bad parameters fail at build time
        p = self.params
        if "alpha" in wanted:
            _check_alpha(p["alpha"])
        if self.family == "tsallis_aq":
            _validate_tsallis_aq(p["a"], p["q"])
        elif self.family == "landsberg_vedral":
            _validate_lv(p["q"])
        elif self.family == "zq":
            if p["q"] <= 0 or p["q"] == 1:
                raise ParameterError("requires q > 0, q != 1")
        elif self.family == "zk":
            if not -1.0 < p["k"] < 1.0 or p["k"] == 0:
                raise ParameterError("requires -1 < k < 1, k != 0")
        elif self.family == "zab":
            _validate_ab(p["a"], p["b"])

    @property
    def alpha(self) -> float | None:
        return self.params.get("alpha")

    @property
    def regime(self) -> str:
        """Concavity regime tag: 'concave' where the supporting theorems apply."""
        if self.family == "boltzmann":
            return "concave"
        if self.family == "tsallis_aq":
            a, q = self.params["a"], self.params["q"]
            in_region = (q < 1 and 0 < a < 1 / (1 - q)) or (q > 1 and a > 0)
            return "concave" if in_region else "non-concave"
        if self.family in ("landsberg_vedral", "control"):
            return "non-concave"
        return "concave" if 0 < self.params["alpha"] < 1 else "non-concave"

    def value(self, p: Distribution) -> float:
        return self._evaluate(p.p)

    def raw_value(self, arr: np.ndarray) -> float:
        """Evaluate the defining formula on any nonnegative vector (off-simplex allowed)."""
        return self._evaluate(np.asarray(arr, dtype=float))

    def _evaluate(self, arr: np.ndarray) -> float:
        f, p = self.family, self.params
        if f == "boltzmann":
            return _boltzmann_raw(arr)
        if f == "renyi":
            return math.log(_power_sum_raw(arr, p["alpha"])) / (1.0 - p["alpha"])
        if f == "tsallis_aq":
            return _tsallis_aq_raw(p["a"], p["q"], arr)
        if f == "landsberg_vedral":
            return _landsberg_vedral_raw(p["q"], arr)
        if f == "zq":
            return _z_q_alpha_raw(p["q"], p["alpha"], arr)
        if f == "zk":
            return _z_k_alpha_raw(p["k"], p["alpha"], arr)
        if f == "zab":
            return _z_ab_raw(p["a"], p["b"], p["alpha"], arr)
        if f == "zg":
            return self.group.eval(math.log(_power_sum_raw(arr, p["alpha"]))) / (1.0 - p["alpha"])
        if f == "altz":
            return self.group.eval(math.log(_power_sum_raw(arr, p["alpha"])) / (1.0 - p["alpha"]))
        if f == "control":
            # deliberately non-composable: quadratically weighted surprise
            positive = arr[arr > 0]
            return float(-np.sum(positive**2 * np.log(positive)))
        raise AssertionError(f)

    def phi(self, x: float, y: float) -> float:
        """The composition law paired with this family."""
        f, p = self.family, self.params
        if f in ("boltzmann", "renyi", "control"):
            return x + y
        if f == "tsallis_aq":
            return x + y + (1.0 - p["q"]) * x * y
        if f == "landsberg_vedral":
            return x + y + (p["q"] - 1.0) * x * y
        if f == "zq":
            return x + y + (1.0 - p["alpha"]) * (1.0 - p["q"]) * x * y
        if f == "zk":
            c = p["k"] * (1.0 - p["alpha"])
            return x * math.sqrt(1.0 + c * c * y * y) + y * math.sqrt(1.0 + c * c * x * x)
        if f == "zab":
            return composition_phi(AbelGroup(p["a"], p["b"]), p["alpha"], x, y)
        if f == "zg":
            return composition_phi(self.group, p["alpha"], x, y)
        if f == "altz":
            return self.group.chi(x, y)
        raise AssertionError(f)

    def uniform_value_log(self, ln_w: float) -> float:
        """Closed-form entropy of the uniform distribution with ln W = ln_w.

        Works far beyond representable W, which extensivity checks need.
        """
        f, p = self.family, self.params
        if f in ("boltzmann", "renyi"):
            return ln_w
        if f == "tsallis_aq":
            a, q = p["a"], p["q"]
            return -math.expm1(-a * (q - 1.0) * ln_w) / (q - 1.0)
        if f == "landsberg_vedral":
            q = p["q"]
            return math.expm1((q - 1.0) * ln_w) / (q - 1.0)
        if f == "zq":
            c = (1.0 - p["q"]) * (1.0 - p["alpha"])
            return math.expm1(c * ln_w) / c
        if f == "zk":
            c = p["k"] * (1.0 - p["alpha"])
            return math.sinh(c * ln_w) / c
        if f == "zab":
            a, b, alpha = p["a"], p["b"], p["alpha"]
            c = 1.0 - alpha
            return (math.exp(a * c * ln_w) - math.exp(b * c * ln_w)) / ((a - b) * c)
        if f == "zg":
            return self.group.eval((1.0 - p["alpha"]) * ln_w) / (1.0 - p["alpha"])
        if f == "altz":
            return self.group.eval(ln_w)
        if f == "control":
            return math.exp(-ln_w) * ln_w
        raise AssertionError(f)

    def uniform_value(self, w: float) -> float:
        if w < 1:
            raise InputError("uniform closed form needs W >= 1")
        return self.uniform_value_log(math.log(w))

    def describe(self) -> str:
        parts = [f"{k}={v}" for k, v in sorted(self.params.items())]
        if self.group is not None:
            parts.append(f"g={self.group.describe()}")
        return f"{self.family}({', '.join(parts)})"


def entropy_spec(family: str, params: Mapping[str, float] | None = None) -> EntropySpec:
    """Build an EntropySpec from a flat parameter mapping, as the CLI supplies it.

    For the group-parameterized families the mapping carries ``g`` (one of
    id, tsallis, kaniadakis, abel) plus that group's own parameters.
    """
    params = dict(params or {})
    family = family.lower()
    group = None
    if family in _GROUP_FAMILIES:
        gname = params.pop("g", None)
        if gname is None:
            raise ParameterError(f"family {family} needs g=<id|tsallis|kaniadakis|abel>")
        gparams = {k: params.pop(k) for k in ("q", "k", "a", "b") if k in params}
        group = group_function(str(gname), **gparams)
    return EntropySpec(family, params, group)
