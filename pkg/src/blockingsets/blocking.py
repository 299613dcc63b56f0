"""Blocking-set verification and the upper-bound formulas.

The authoritative bound tests evaluate integer quadratics exactly.  Square
roots only appear in the ``bound_float`` fields, which are for display.

All checks accept any incidence structure exposing ``num_points``,
``num_blocks``, ``blocks`` (bit sets) and ``blocks_through``: a
ProjectiveSpace (blocks are hyperplanes) or a Design.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from ._bits import as_bits, indices_from_bits
from .errors import (
    NotAchievable,
    NotBlocking,
    NotMinimalBlocking,
    NotPrimePower,
    NotSymmetric,
    OutOfRange,
)
from .galois import prime_power
from .geometry import ProjectiveSpace, theta


@dataclass(frozen=True)
class PointSet:
    """A subset of the points of a geometry or design, as a bit set."""

    geometry: object
    members: int
    provenance: dict | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if self.members < 0 or self.members >> self.geometry.num_points:
            raise ValueError("point set has members outside the geometry")

    @classmethod
    def from_indices(cls, geometry, indices, provenance=None) -> "PointSet":
        return cls(geometry, as_bits(list(indices), geometry.num_points), provenance)

    def __len__(self):
        return self.members.bit_count()

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def __contains__(self, index: int) -> bool:
        return bool(self.members >> index & 1)

    def indices(self) -> list[int]:
        return indices_from_bits(self.members)

    def points(self):
        return [self.geometry.points[i] for i in self.indices()]

    def complement(self) -> "PointSet":
        return PointSet(self.geometry, self.geometry.all_points & ~self.members)

    def __or__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.geometry, self.members | other.members)

    def with_provenance(self, name: str, **params) -> "PointSet":
        return PointSet(self.geometry, self.members, {"construction": name, **params})


def _bits(S) -> tuple[object, int]:
    return S.geometry, S.members


def block_meets(S: PointSet) -> list[int]:
    """|B ∩ S| for every block B, in block order."""
    geom, bits = _bits(S)
    return [(B & bits).bit_count() for B in geom.blocks]


@dataclass
class SecantSpectrum:
    counts: dict[int, int]

    def __getitem__(self, i: int) -> int:
        return self.counts.get(i, 0)

    @property
    def sizes(self) -> list[int]:
        return sorted(self.counts)

    @property
    def min_size(self) -> int:
        return min(self.counts)

    def total(self) -> int:
        return sum(self.counts.values())

    def moment(self, f) -> int:
        return sum(f(i) * li for i, li in self.counts.items())

    def to_json(self) -> dict:
        return {str(i): self.counts[i] for i in sorted(self.counts)}

    def __eq__(self, other):
        if isinstance(other, SecantSpectrum):
            return self.counts == other.counts
        if isinstance(other, dict):
            return self.counts == other
        return NotImplemented


def secant_spectrum(S: PointSet) -> SecantSpectrum:
    return SecantSpectrum(dict(sorted(Counter(block_meets(S)).items())))


def is_t_fold_blocking(S: PointSet, t: int, require_exact: bool = True) -> bool:
    """Every block meets S in at least t points and (by default) some block in exactly t."""
    if t < 1:
        raise OutOfRange("t must be at least 1")
    meets = block_meets(S)
    if min(meets) < t:
        return False
    return t in meets if require_exact else True


def _has_t_secant_through_each(S: PointSet, t: int, meets: list[int]) -> bool:
    geom = S.geometry
    return all(
        any(meets[j] == t for j in geom.blocks_through[x]) for x in S.indices()
    )


def is_minimal_t_fold(S: PointSet, t: int, require_blocking: bool = True) -> bool:
    """Each point of S lies on a block meeting S in exactly t points.

    With ``require_blocking=False`` the t-fold precondition is skipped and
    this becomes the tangency-set test (t = 1) or its t-secant analogue.
    """
    if require_blocking and not is_t_fold_blocking(S, t):
        raise NotBlocking(f"the set is not a {t}-fold blocking set")
    return _has_t_secant_through_each(S, t, block_meets(S))


def removable_points(S: PointSet, t: int) -> list[int]:
    """Points whose removal keeps every block at >= t points."""
    meets = block_meets(S)
    geom = S.geometry
    return [x for x in S.indices() if all(meets[j] > t for j in geom.blocks_through[x])]


# -- bound reports -------------------------------------------------------------


class EqualityCase(str, Enum):
    UNITAL = "Unital"
    BAER_COMPLEMENT = "BaerComplement"
    PLANE_MINUS_POINT = "PlaneMinusPoint"


def larger_root(A: int, B: int, C: int) -> float:
    """Larger real root of A x^2 + B x + C (A > 0), exact when rational."""
    disc = B * B - 4 * A * C
    if disc < 0:
        raise OutOfRange("the quadratic has no real roots")
    r = math.isqrt(disc)
    if r * r == disc:
        return float(Fraction(-B + r, 2 * A))
    return (-B + math.sqrt(disc)) / (2 * A)


def quadratic_value(coeffs, x) -> int:
    A, B, C = coeffs
    return A * x * x + B * x + C


@dataclass
class BoundReport:
    t: int
    n: int
    bound_float: float
    quadratic: tuple[int, int, int]
    achieved: int | None = None
    slack: float | None = None
    equality_case: EqualityCase | None = None
    kind: str = "plane"
    within_bound: bool | None = None
    blocking: bool | None = None
    minimal: bool | None = None
    spectrum: SecantSpectrum | None = None
    extra: dict = field(default_factory=dict)

    @property
    def bound(self) -> float:
        return self.bound_float

    def admits(self, x: int) -> bool:
        return quadratic_value(self.quadratic, x) <= 0

    def with_set(self, size: int) -> "BoundReport":
        """Record an achieved size; equality is read off the exact quadratic."""
        self.achieved = size
        self.slack = self.bound_float - size
        self.within_bound = self.admits(size)
        A, B, _ = self.quadratic
        if quadratic_value(self.quadratic, size) == 0 and 2 * A * size >= -B:
            self.slack = 0.0
        return self

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "t": self.t,
            "bound": self.bound_float,
            "quadratic": list(self.quadratic),
            "achieved": self.achieved,
            "slack": self.slack,
            "equality_case": self.equality_case.value if self.equality_case else None,
            "kind": self.kind,
        }
        if self.within_bound is not None:
            out["within_bound"] = self.within_bound
        if self.blocking is not None:
            out["blocking"] = self.blocking
        if self.minimal is not None:
            out["minimal"] = self.minimal
        if self.spectrum is not None:
            out["spectrum"] = self.spectrum.to_json()
        out.update(self.extra)
        return out


# -- projective planes ---------------------------------------------------------------


def plane_quadratic(n: int, t: int) -> tuple[int, int, int]:
    """x^2 - ((t-1)n + 2t) x - t(n-t)(n^2+n+1), nonpositive on admissible sizes."""
    return (1, -((t - 1) * n + 2 * t), -t * (n - t) * (n * n + n + 1))


def _plane_discriminant(n: int, t: int) -> int:
    return 4 * t * n - (3 * t + 1) * (t - 1)


def main_bound(n: int, t: int) -> BoundReport:
    """Largest possible minimal t-fold blocking set in a plane of order n."""
    if n < 2 or not 1 <= t <= n:
        raise OutOfRange(f"need n >= 2 and 1 <= t <= n, got n={n}, t={t}")
    disc = _plane_discriminant(n, t)
    if disc < 0:
        raise OutOfRange("negative discriminant")
    root = math.isqrt(disc)
    if root * root == disc:
        value = float(Fraction(n * root + (t - 1) * n, 2) + t)
    else:
        value = 0.5 * n * math.sqrt(disc) + 0.5 * (t - 1) * n + t
    return BoundReport(t=t, n=n, bound_float=value, quadratic=plane_quadratic(n, t))


def quadratic_membership(x: int, n: int, t: int) -> bool:
    return quadratic_value(plane_quadratic(n, t), x) <= 0


def plane_roots(n: int, t: int) -> tuple[float, float]:
    """The two roots alpha <= beta of the plane quadratic."""
    s = math.sqrt(_plane_discriminant(n, t))
    mid = (t - 1) * n + 2 * t
    return 0.5 * (mid - n * s), 0.5 * (mid + n * s)


def equality_b(n: int, t: int) -> int:
    """b with |S| = bn + t at equality; NotAchievable if it is not an integer."""
    disc = _plane_discriminant(n, t)
    root = math.isqrt(disc) if disc >= 0 else -1
    if root < 0 or root * root != disc or (root + t - 1) % 2:
        raise NotAchievable(f"the bound for n={n}, t={t} is not an integer of the form bn + t")
    return (root + t - 1) // 2


def equality_secant_sizes(n: int, t: int) -> tuple[int, int]:
    """The two intersection sizes (t, b+1) every line has at equality."""
    return (t, equality_b(n, t) + 1)


@dataclass(frozen=True)
class EqualityConditions:
    """Necessary conditions for equality at (q, t) in a plane of order q."""

    q: int
    t: int
    b: int | None
    integral: bool
    dagger: bool
    star: bool

    @property
    def admissible(self) -> bool:
        return self.integral and self.dagger and self.star


def equality_conditions(q: int, t: int) -> EqualityConditions:
    """b integral, b^2 + b(1-t) - t + t^2 = tq, and (b - t + 1) | q."""
    try:
        b = equality_b(q, t)
    except NotAchievable:
        return EqualityConditions(q, t, None, False, False, False)
    dagger = b * b + b * (1 - t) - t + t * t == t * q
    d = b - t + 1
    star = d > 0 and q % d == 0
    return EqualityConditions(q, t, b, True, dagger, star)


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def case_analysis(q: int, t: int) -> tuple[str, EqualityCase | None]:
    """Route (q, t) through the p-adic case split of the equality argument.

    Writes b - t + 1 = p^h and t = alpha p^l with alpha coprime to p, then
    returns (label, conclusion).  Labels: "non-integral", "divisibility"
    (b - t + 1 is not a power of p), "I" (0 < l < h), "II" (0 < l = h),
    "III" (l = 0 < h), "IV" (h = 0), "l>h" (excluded when h > 0).
    """
    p, k = prime_power(q)
    cond = equality_conditions(q, t)
    if not cond.integral:
        return "non-integral", None
    d = cond.b - t + 1
    if d <= 0 or q % d:
        return "divisibility", None
    h = _valuation(d, p)
    l = _valuation(t, p)
    alpha = t // p**l
    if h == 0:
        # b = t, and b^2 + b(1-t) - t + t^2 = tq collapses to t = q
        return "IV", EqualityCase.PLANE_MINUS_POINT if t == q else None
    if l > h:
        return "l>h", None
    if 0 < l < h:
        return "I", None
    if l == h:
        ok = alpha == p**h - 1 and p ** (2 * h) == q and cond.dagger
        return "II", EqualityCase.BAER_COMPLEMENT if ok else None
    ok = alpha == 1 and p ** (2 * h) == q and cond.dagger
    return "III", EqualityCase.UNITAL if ok else None


def listed_case(q: int, t: int) -> EqualityCase | None:
    """The closed list: t=1 (q square), t=q-sqrt(q) (q square), t=q."""
    p, k = prime_power(q)
    if t == q:
        return EqualityCase.PLANE_MINUS_POINT
    if k % 2 == 0:
        r = p ** (k // 2)
        if t == 1:
            return EqualityCase.UNITAL
        if t == q - r:
            return EqualityCase.BAER_COMPLEMENT
    return None


def classify_equality(q: int, t: int) -> EqualityCase | None:
    """Which extremal family can reach the bound at (q, t), if any.

    The closed case list is cross-checked against the integrality and
    divisibility conditions and against the p-adic case split; any
    disagreement raises AssertionError.
    """
    try:
        prime_power(q)
    except NotPrimePower:
        raise
    if not 1 <= t <= q:
        raise OutOfRange(f"need 1 <= t <= q, got t={t}")
    listed = listed_case(q, t)
    cond = equality_conditions(q, t)
    label, derived = case_analysis(q, t)
    if (listed is not None) != cond.admissible:
        raise AssertionError(f"case list and conditions disagree at q={q}, t={t}")
    if derived != listed:
        raise AssertionError(f"case split ({label}) and case list disagree at q={q}, t={t}")
    if listed is not None:
        assert cond.integral and cond.dagger and cond.star
    return listed


# -- counting and variance -----------------------------------------------------------


def plane_order(geometry) -> int:
    if isinstance(geometry, ProjectiveSpace):
        if geometry.n != 2:
            raise ValueError("not a projective plane")
        return geometry.q
    if getattr(geometry, "lam", None) == 1 and geometry.b == geometry.v:
        return geometry.k - 1
    raise ValueError("not a projective plane")


def counting_identities(S: PointSet) -> dict[str, tuple[int, int]]:
    """(observed, predicted) for the three double-counting identities."""
    n = plane_order(S.geometry)
    spec = secant_spectrum(S)
    x = S.size
    return {
        "lines": (spec.total(), n * n + n + 1),
        "incidences": (spec.moment(lambda i: i), x * (n + 1)),
        "pairs": (spec.moment(lambda i: i * (i - 1)), x * (x - 1)),
    }


def counting_identities_check(S: PointSet) -> bool:
    return all(obs == pred for obs, pred in counting_identities(S).values())


def variance_slack(S: PointSet, t: int) -> Fraction:
    """s - (t - b - 1)^2 (bn + t)/t with s = sum (i - b - 1)^2 l_i and b = (|S| - t)/n."""
    try:
        minimal = is_minimal_t_fold(S, t)
    except NotBlocking:
        minimal = False
    if not minimal:
        raise NotMinimalBlocking(f"the set is not a minimal {t}-fold blocking set")
    n = plane_order(S.geometry)
    spec = secant_spectrum(S)
    x = S.size
    if t * spec[t] < x:
        raise NotMinimalBlocking(f"only {spec[t]} {t}-secants for {x} points")
    b = Fraction(x - t, n)
    s = sum((i - b - 1) ** 2 * li for i, li in spec.counts.items())
    return s - (t - b - 1) ** 2 * (b * n + t) / t


def variance_slack_closed_form(n: int, t: int, size: int) -> Fraction:
    """n(b+1)(-b^2 + (t-1)b + t(n+1) - t^2)/t, depending only on |S|."""
    b = Fraction(size - t, n)
    return n * (b + 1) * (-b * b + (t - 1) * b + t * (n + 1) - t * t) / t


# -- designs and higher dimensions ------------------------------------------------------


def _check_symmetric(v: int, k: int, lam: int):
    if lam * (v - 1) != k * (k - 1):
        raise NotSymmetric(f"({v}, {k}, {lam}) are not symmetric design parameters")


def symmetric_design_bound(v: int, k: int, lam: int) -> float:
    _check_symmetric(v, k, lam)
    s = math.sqrt(k - lam)
    return (1 + s) / (k + s) * v


def symmetric_design_membership(x: int, v: int, k: int, lam: int) -> bool:
    """Exact form of x <= v(1 + sqrt(k-lam))/(k + sqrt(k-lam)).

    Rearranged to xk - v <= sqrt(k-lam)(v - x); squared only when both
    sides are nonnegative.
    """
    _check_symmetric(v, k, lam)
    lhs, rhs_factor = x * k - v, v - x
    if rhs_factor < 0:
        return False
    if lhs <= 0:
        return True
    return lhs * lhs <= (k - lam) * rhs_factor * rhs_factor


def hyperplane_tangency_bound(n: int, q: int):
    """1 + q^((n+1)/2); an int whenever q^(n+1) is a perfect square."""
    if n < 2:
        raise OutOfRange("need n >= 2")
    sq = q ** (n + 1)
    r = math.isqrt(sq)
    if r * r == sq:
        return 1 + r
    return 1 + math.sqrt(sq)


def hyperplane_tangency_membership(x: int, n: int, q: int) -> bool:
    return x <= 1 or (x - 1) ** 2 <= q ** (n + 1)


def hyperplane_quadratic(n: int, q: int, t: int) -> tuple[int, int, int]:
    V, T, Q = theta(n + 1, q), theta(n, q), q ** (n - 1)
    return (
        T * T - Q,
        -2 * T * V * t + Q * (V + t * V),
        t * t * V * V - Q * t * V * V,
    )


def hyperplane_tfold_bound(n: int, q: int, t: int) -> BoundReport:
    """Bound for minimal t-fold blocking sets w.r.t. hyperplanes of PG(n, q)."""
    if n < 2 or not 1 <= t <= theta(n, q):
        raise OutOfRange(f"need n >= 2 and 1 <= t <= theta_n(q), got n={n}, t={t}")
    coeffs = hyperplane_quadratic(n, q, t)
    g = math.gcd(*coeffs)
    reduced = tuple(c // g for c in coeffs)
    rep = BoundReport(t=t, n=n, bound_float=larger_root(*reduced), quadratic=reduced,
                      kind="hyperplane")
    rep.extra = {"q": q, "raw_quadratic": list(coeffs)}
    return rep


@dataclass(frozen=True)
class DesignBound:
    value: float
    trivial: bool


def general_design_bound(v: int, k: int, lam: int) -> DesignBound:
    """(1 + sqrt(r - lam)) v / k, flagged trivial when 1 + sqrt(r - lam) >= k."""
    if k < 2 or (lam * (v - 1)) % (k - 1):
        raise OutOfRange(f"({v}, {k}, {lam}) are not 2-design parameters")
    r = lam * (v - 1) // (k - 1)
    s = math.sqrt(r - lam)
    # 1 + sqrt(r - lam) >= k  <=>  r - lam >= (k - 1)^2
    return DesignBound((1 + s) * v / k, r - lam >= (k - 1) ** 2)


def s_secant_quadratic(n: int, t: int, s: int) -> tuple[int, int, int]:
    N = n * n + n + 1
    return (s, -(2 * s * t * (n + 1) - (s + t) * n), -t * (n - s * t) * N)


def s_secant_bound(n: int, t: int, s: int) -> BoundReport:
    """Sets with at least s t-secants through each point."""
    if s < 1 or t < 1 or n < 2:
        raise OutOfRange("need s >= 1, t >= 1, n >= 2")
    coeffs = s_secant_quadratic(n, t, s)
    rep = BoundReport(t=t, n=n, bound_float=larger_root(*coeffs), quadratic=coeffs,
                      kind="s-secant")
    rep.extra = {"s": s}
    return rep


def semiarc_bound(n: int, s: int) -> float:
    disc = 4 * s * n - 3 * s * s + 2 * s + 1
    if s < 1 or disc < 0:
        raise OutOfRange(f"no real bound for n={n}, s={s}")
    return 1 + n / (2 * s) * ((s - 1) + math.sqrt(disc))


def code_dimension_bound(p: int, h: int, n: int) -> int:
    """Dimension of the F_p code of hyperplanes of PG(n, p^h): C(p+n-1, n)^h + 1."""
    return math.comb(p + n - 1, n) ** h + 1


# -- full verification -------------------------------------------------------------


def verify_point_set(S: PointSet, t: int) -> BoundReport:
    """Blocking/minimality flags, spectrum and bound slack for a set."""
    geom = S.geometry
    if isinstance(geom, ProjectiveSpace) and geom.n > 2:
        rep = hyperplane_tfold_bound(geom.n, geom.q, t)
    else:
        n = plane_order(geom)
        rep = main_bound(n, t)
    rep.with_set(S.size)
    rep.spectrum = secant_spectrum(S)
    rep.blocking = is_t_fold_blocking(S, t)
    rep.minimal = rep.blocking and is_minimal_t_fold(S, t)
    if rep.kind == "plane" and rep.slack == 0.0 and rep.minimal:
        try:
            rep.equality_case = classify_equality(rep.n, t)
        except NotPrimePower:
            rep.equality_case = None
    return rep
