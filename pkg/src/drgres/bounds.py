"""Exact verdicts for the published potential inequalities.

Every check compares two exactly-computed quantities and reports one of
``strict`` / ``equality`` / ``violated``; nothing is decided in floating
point.  Comparisons against sqrt-bounds (the strongly regular case) are
settled by sign analysis and squaring over the integers.

The checks, by name:

* ``tail-bound(m)``       phi_{m+1} + ... + phi_{D-1} < (3m+3) phi_m
* ``phi1-tail-bound``     phi_2 + ... + phi_{D-1} <= phi_1, equality only
                          for the dodecahedron array
* ``global-ratio-bound``  (phi_0 + ... + phi_{D-1})/phi_0 <= 195/101,
                          equality only for the Biggs-Smith array
* ``valency-ratio-bound`` (phi_0 + ... + phi_{D-1})/phi_0 < 1 + 6/k
* ``resistance-cap``      d_D < 4/k
* ``ladder-(i)..(vi)``    the ladder-index relations (see LadderIndices)
* ``srg-b1-bound``        b_1 >= min(5k/16, 2 sqrt(k)/(1+sqrt(2)))
* ``srg-ratio-bound``     (phi_0+phi_1)/phi_0 < 1 + 1/C(k)

Checks whose hypotheses fail (valency below 3, diameter too small) are still
evaluated but flagged ``hypothesis_met=False`` and never rule an array out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .arrays import (
    IntersectionArray,
    MalformedInput,
    NonIntegralLayer,
    ValidationReport,
    parse_array,
    validate,
)
from .potentials import (
    InfeasiblePotential,
    PhiSequence,
    format_decimal,
    format_fraction,
    phi_recursive,
    resistances,
    tail_ratio,
)

STRICT = "strict"
EQUALITY = "equality"
VIOLATED = "violated"

FEASIBLE = "feasible-so-far"
RULED_OUT = "ruled-out"
ERROR = "error"

BIGGS_SMITH_ARRAY = IntersectionArray((3, 2, 2, 2, 1, 1, 1), (1, 1, 1, 1, 1, 1, 3))
DODECAHEDRON_ARRAY = IntersectionArray((3, 2, 1, 1, 1), (1, 1, 1, 2, 3))
GLOBAL_RATIO_CAP = Fraction(195, 101)


class NotApplicable(ValueError):
    """The check does not apply to this input (e.g. complete multipartite)."""


@dataclass(frozen=True)
class BoundCheck:
    """One inequality verdict.

    ``rhs`` is None when the active bound is irrational (the sqrt branch of
    the strongly regular checks); the verdict is still exact and ``detail``
    carries a human-readable form of the bound.
    """

    name: str
    lhs: Fraction
    rhs: Fraction | None
    verdict: str
    hypothesis_met: bool
    detail: str = ""

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": format_fraction(self.lhs),
            "lhs_decimal": format_decimal(self.lhs),
            "rhs": format_fraction(self.rhs) if self.rhs is not None else None,
            "rhs_decimal": format_decimal(self.rhs) if self.rhs is not None else None,
            "verdict": self.verdict,
            "hypothesis_met": self.hypothesis_met,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class BoundReport:
    checks: tuple[BoundCheck, ...]

    def named(self, name: str) -> BoundCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def violations(self, binding_only: bool = True) -> tuple[BoundCheck, ...]:
        return tuple(
            c for c in self.checks
            if c.verdict == VIOLATED and (c.hypothesis_met or not binding_only)
        )

    @property
    def ok(self) -> bool:
        return not self.violations()

    def as_json(self) -> list[dict]:
        return [c.as_json() for c in self.checks]


def _verdict_le(lhs: Fraction, rhs: Fraction) -> str:
    """Verdict for a bound of shape lhs <= rhs (or lhs < rhs)."""
    if lhs < rhs:
        return STRICT
    return EQUALITY if lhs == rhs else VIOLATED


def check_biggs(phi: PhiSequence) -> BoundCheck:
    """Resistance spread (phi_0 + ... + phi_{D-1})/phi_0 against 195/101.

    Equality is attained exactly by the Biggs-Smith array; any other equality
    is surfaced as anomalous in the detail.
    """
    lhs = phi.tail_sum(0) / phi.phi[0]
    verdict = _verdict_le(lhs, GLOBAL_RATIO_CAP)
    detail = "d_D/d_1 vs 195/101; equality expected only for Biggs-Smith"
    if verdict == EQUALITY and phi.array != BIGGS_SMITH_ARRAY:
        detail = "ANOMALOUS equality: array is not Biggs-Smith"
    return BoundCheck("global-ratio-bound", lhs, GLOBAL_RATIO_CAP, verdict, phi.k >= 3, detail)


def check_tail(phi: PhiSequence, m: int) -> BoundCheck:
    """phi_{m+1} + ... + phi_{D-1} vs (3m+3) phi_m; must be strict."""
    if not 0 <= m <= phi.diameter - 1:
        raise IndexError(f"m={m} outside 0..{phi.diameter - 1}")
    lhs = phi.tail_sum(m + 1)
    rhs = (3 * m + 3) * phi.phi[m]
    return BoundCheck(
        f"tail-bound(m={m})", lhs, rhs, _verdict_le(lhs, rhs), phi.k >= 3,
        f"sum of phi beyond index {m} vs (3m+3) phi_{m}",
    )


def check_main(phi: PhiSequence) -> BoundCheck:
    """phi_2 + ... + phi_{D-1} vs phi_1; equality only for the dodecahedron."""
    lhs = phi.tail_sum(2)
    rhs = phi.at(1)
    verdict = _verdict_le(lhs, rhs)
    detail = "equality expected only for the dodecahedron"
    if verdict == EQUALITY and phi.array != DODECAHEDRON_ARRAY:
        detail = "ANOMALOUS equality: array is not the dodecahedron"
    return BoundCheck("phi1-tail-bound", lhs, rhs, verdict, phi.diameter >= 2 and phi.k >= 3, detail)


def check_valency_corollary(phi: PhiSequence) -> BoundCheck:
    """(phi_0 + ... + phi_{D-1})/phi_0 vs 1 + 6/k (needs D >= 3, k >= 3)."""
    lhs = phi.tail_sum(0) / phi.phi[0]
    rhs = 1 + Fraction(6, phi.k)
    hypothesis = phi.diameter >= 3 and phi.k >= 3
    return BoundCheck("valency-ratio-bound", lhs, rhs, _verdict_le(lhs, rhs), hypothesis,
                      "d_D/d_1 vs 1 + 6/k")


def check_resistance_cap(phi: PhiSequence) -> BoundCheck:
    """Maximal resistance d_D vs 4/k."""
    profile = resistances(phi)
    lhs = profile.d[-1]
    rhs = profile.valency_cap
    detail = f"intermediate cap 4 phi_0/(n k) = {format_fraction(profile.phi0_cap)}"
    return BoundCheck("resistance-cap", lhs, rhs, _verdict_le(lhs, rhs), phi.k >= 3, detail)


def max_tail_ratio(phi: PhiSequence) -> tuple[Fraction, int]:
    """Informational: max over m of (phi_{m+1}+...+phi_{D-1})/phi_m.

    Measures the conjectured universal tail constant; no verdict attaches.
    """
    best = Fraction(0)
    best_m = 0
    for m in range(phi.diameter):
        r = tail_ratio(phi, m)
        if r > best:
            best, best_m = r, m
    return best, best_m


# ---------------------------------------------------------------------------
# Ladder indices and their relations


@dataclass(frozen=True)
class LadderIndices:
    """j = min{i : c_i >= b_i} and h = min{i : c_i > b_i}, with b_D = 0.

    Both always exist since c_D >= 1 > 0 = b_D.
    """

    j: int
    h: int


def ladder_indices(arr: IntersectionArray) -> LadderIndices:
    D = arr.diameter
    j = next(i for i in range(1, D + 1) if arr.c_at(i) >= arr.b_at(i))
    h = next(i for i in range(1, D + 1) if arr.c_at(i) > arr.b_at(i))
    return LadderIndices(j, h)


def _aggregate_ge(name: str, pairs: list[tuple[Fraction, Fraction]],
                  hypothesis: bool, detail: str) -> BoundCheck:
    """Combine a family of lhs >= rhs comparisons into one check.

    Verdict is violated if any member fails, equality if the tightest member
    is tight, else strict; lhs/rhs report the tightest member.
    """
    worst = min(pairs, key=lambda p: p[0] - p[1])
    slack = worst[0] - worst[1]
    verdict = STRICT if slack > 0 else (EQUALITY if slack == 0 else VIOLATED)
    return BoundCheck(name, worst[0], worst[1], verdict, hypothesis, detail)


def lemma_relations(arr: IntersectionArray, phi: PhiSequence | None = None) -> tuple[BoundCheck, ...]:
    """Evaluate the six ladder-index relations exactly.

    Relations (with phi_i = 0 for i >= D, and the weaker forms taken when
    c_j = 1):

    i)   D - h <= j - 1
    ii)  0 <= h - j <= j - 1          (<= j when c_j = 1)
    iii) D <= 3j - 2                  (3j - 1 when c_j = 1)
    iv)  phi_{j-1} >= phi_{D-i} + phi_{j-1+i}
                   >= phi_{h+j-1-i} + phi_{j-1+i}   for 0 <= i <= h - j
    v)   phi_{j-1} >= 2 phi_{2j-1}
    vi)  phi_j + ... + phi_{D-1} <= (j-1) phi_{j-1}
                                     ((j - 1/2) phi_{j-1} when c_j = 1)
    """
    if phi is None:
        phi = phi_recursive(arr)
    ladder = ladder_indices(arr)
    j, h = ladder.j, ladder.h
    D = arr.diameter
    unit_cj = arr.c_at(j) == 1
    hyp = D >= 3 and arr.k >= 3
    checks = [
        _aggregate_ge("ladder-(i)", [(Fraction(j - 1), Fraction(D - h))], hyp,
                      f"D - h = {D - h} vs j - 1 = {j - 1}"),
        _aggregate_ge("ladder-(ii)",
                      [(Fraction(h - j), Fraction(0)),
                       (Fraction(j if unit_cj else j - 1), Fraction(h - j))],
                      hyp, f"0 <= h - j = {h - j} <= {'j' if unit_cj else 'j - 1'}"),
        _aggregate_ge("ladder-(iii)", [(Fraction(3 * j - (1 if unit_cj else 2)), Fraction(D))],
                      hyp, f"D = {D} vs {'3j - 1' if unit_cj else '3j - 2'}"),
    ]
    quad_pairs = []
    for i in range(h - j + 1):
        mid = phi.at(D - i) + phi.at(j - 1 + i)
        quad_pairs.append((phi.at(j - 1), mid))
        quad_pairs.append((mid, phi.at(h + j - 1 - i) + phi.at(j - 1 + i)))
    checks.append(_aggregate_ge("ladder-(iv)", quad_pairs, hyp,
                                "phi_{j-1} >= phi_{D-i} + phi_{j-1+i} >= phi_{h+j-1-i} + phi_{j-1+i}"))
    checks.append(_aggregate_ge("ladder-(v)", [(phi.at(j - 1), 2 * phi.at(2 * j - 1))], hyp,
                                "phi_{j-1} vs 2 phi_{2j-1}"))
    vi_cap = (Fraction(2 * j - 1, 2) if unit_cj else Fraction(j - 1)) * phi.at(j - 1)
    vi_sum = sum((phi.at(i) for i in range(j, D)), Fraction(0))
    checks.append(_aggregate_ge("ladder-(vi)", [(vi_cap, vi_sum)], hyp,
                                f"phi_j + ... + phi_{{D-1}} vs {'(j - 1/2)' if unit_cj else '(j-1)'} phi_{{j-1}}"))
    return tuple(checks)


# ---------------------------------------------------------------------------
# Strongly regular (diameter 2) machinery


def _sign_plus_sqrt(a: Fraction, b: Fraction, m: int) -> int:
    """Exact sign of a + b*sqrt(m) for integer m >= 0."""
    if m < 0:
        raise ValueError("negative radicand")
    if b == 0 or m == 0:
        return (a > 0) - (a < 0)
    if b > 0:
        if a >= 0:
            return 1
        return (b * b * m > a * a) - (b * b * m < a * a)
    if a <= 0:
        return -1
    return (a * a > b * b * m) - (a * a < b * b * m)


@dataclass(frozen=True)
class SqrtValue:
    """Exact value a + b*sqrt(m) with rational a, b and integer m >= 0.

    Perfect-square radicands are folded away, so ``is_rational`` is reliable.
    Arithmetic is supported within a single radicand, which is all the
    eigenvalue checks need.
    """

    a: Fraction
    b: Fraction
    m: int

    def __post_init__(self) -> None:
        a, b, m = Fraction(self.a), Fraction(self.b), int(self.m)
        if m < 0:
            raise ValueError("negative radicand")
        root = math.isqrt(m)
        if root * root == m:
            a, b, m = a + b * root, Fraction(0), 0
        if b == 0:
            m = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other: Union["SqrtValue", Fraction, int]) -> "SqrtValue":
        if isinstance(other, SqrtValue):
            if other.m != self.m and not (other.is_rational or self.is_rational):
                raise ValueError("mixed radicands are not supported")
            return other
        return SqrtValue(Fraction(other), Fraction(0), 0)

    def __add__(self, other):
        o = self._coerce(other)
        return SqrtValue(self.a + o.a, self.b + o.b, max(self.m, o.m))

    __radd__ = __add__

    def __neg__(self):
        return SqrtValue(-self.a, -self.b, self.m)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        o = self._coerce(other)
        m = max(self.m, o.m)
        return SqrtValue(self.a * o.a + self.b * o.b * m,
                         self.a * o.b + self.b * o.a, m)

    __rmul__ = __mul__

    def sign(self) -> int:
        return _sign_plus_sqrt(self.a, self.b, self.m)

    def __eq__(self, other) -> bool:
        try:
            return (self - other).sign() == 0
        except (ValueError, TypeError):
            return NotImplemented

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __hash__(self):
        return hash((self.a, self.b, self.m))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __str__(self) -> str:
        if self.is_rational:
            return format_fraction(self.a)
        return f"{format_fraction(self.a)} + {format_fraction(self.b)}*sqrt({self.m})"


@dataclass(frozen=True)
class SrgParameters:
    """Strongly regular parameters (v, k, a1, c2), diameter-2 case.

    Construction enforces v > k >= 1, 1 <= c2 <= k, a1 >= 0, b1 >= 1 and the
    layer identity k (k - a1 - 1) = (v - k - 1) c2.
    """

    v: int
    k: int
    a1: int
    c2: int

    def __post_init__(self) -> None:
        if not (self.v > self.k >= 1):
            raise MalformedInput(f"need v > k >= 1, got v={self.v}, k={self.k}")
        if not 1 <= self.c2 <= self.k:
            raise MalformedInput(f"need 1 <= c2 <= k, got c2={self.c2}")
        if self.a1 < 0:
            raise MalformedInput(f"a1={self.a1} is negative")
        if self.b1 < 1:
            raise MalformedInput("complete-graph parameters (b1 = 0) are out of scope")
        if self.k * self.b1 != (self.v - self.k - 1) * self.c2:
            raise MalformedInput(
                f"inconsistent parameters: k(k-a1-1)={self.k * self.b1} "
                f"but (v-k-1)c2={(self.v - self.k - 1) * self.c2}"
            )

    @property
    def b1(self) -> int:
        return self.k - self.a1 - 1

    @property
    def is_complete_multipartite(self) -> bool:
        return self.c2 == self.k

    def to_array(self) -> IntersectionArray:
        return IntersectionArray((self.k, self.b1), (1, self.c2))

    @classmethod
    def from_array(cls, arr: IntersectionArray) -> "SrgParameters":
        if arr.diameter != 2:
            raise MalformedInput(f"diameter-2 array required, got D={arr.diameter}")
        from .arrays import derive_layers

        profile = derive_layers(arr)
        return cls(profile.n, arr.k, arr.a_at(1), arr.c_at(2))


def conference_parameters(b1: int) -> SrgParameters:
    """The conference-graph family (4 b1 + 1, 2 b1, b1 - 1, b1)."""
    if b1 < 1:
        raise MalformedInput("b1 must be positive")
    return SrgParameters(4 * b1 + 1, 2 * b1, b1 - 1, b1)


@dataclass(frozen=True)
class SrgEigenvalues:
    """Non-trivial eigenvalues theta1 > theta2, exactly.

    Roots of theta^2 - (a1 - c2) theta - (k - c2); ``conference`` means the
    discriminant is not a perfect square, so both roots are irrational and a
    strongly regular graph with these parameters must be a conference graph
    (equal multiplicities).
    """

    theta1: SqrtValue
    theta2: SqrtValue
    discriminant: int
    conference: bool
    conference_parameters: bool
    multiplicities_equal: bool


def srg_eigenvalues(p: SrgParameters) -> SrgEigenvalues:
    """Solve the eigenvalue quadratic and classify; identities are re-verified."""
    tr = p.a1 - p.c2
    disc = tr * tr + 4 * (p.k - p.c2)
    theta1 = SqrtValue(Fraction(tr, 2), Fraction(1, 2), disc)
    theta2 = SqrtValue(Fraction(tr, 2), Fraction(-1, 2), disc)
    conference = not theta1.is_rational
    is_conf_params = (p.v, p.k, p.a1, p.c2) == (4 * p.b1 + 1, 2 * p.b1, p.b1 - 1, p.b1)
    # equal multiplicities <=> 2k + (v-1)(a1-c2) = 0
    mult_equal = 2 * p.k + (p.v - 1) * tr == 0
    product = theta1 * theta2
    if product + p.k != Fraction(p.c2) or theta1 + theta2 != Fraction(tr):
        raise AssertionError("eigenvalue identities failed; this is a bug")
    return SrgEigenvalues(theta1, theta2, disc, conference, is_conf_params, mult_equal)


def _srg_bound_is_rational(k: int) -> bool:
    """True when min(5k/16, 2 sqrt(k)/(1+sqrt(2))) is the rational branch."""
    # compare A = 5k/16 with B = 2 sqrt(k)/(1+sqrt(2)):
    # sign(A - B) = sign(A^2 - B^2) = sign(25k^2/256 - 12k + 8k sqrt(2))
    return _sign_plus_sqrt(Fraction(25 * k * k, 256) - 12 * k, Fraction(8 * k), 2) <= 0


def srg_check(p: SrgParameters) -> BoundCheck:
    """b1 against min(5k/16, 2 sqrt(k)/(1+sqrt(2))); exact on both branches.

    Raises :class:`NotApplicable` for complete multipartite parameters, where
    the bound genuinely fails.
    """
    if p.is_complete_multipartite:
        raise NotApplicable("complete multipartite: c2 = k")
    k = p.k
    lhs = Fraction(p.b1)
    if _srg_bound_is_rational(k):
        rhs = Fraction(5 * k, 16)
        sign = (lhs > rhs) - (lhs < rhs)
        rhs_repr: Fraction | None = rhs
        detail = "bound is 5k/16"
    else:
        # B^2 = 4k/(3+2 sqrt(2)) = 12k - 8k sqrt(2), and both sides are
        # nonnegative, so sign(b1 - B) = sign(b1^2 - 12k + 8k sqrt(2))
        sign = _sign_plus_sqrt(lhs * lhs - 12 * k, Fraction(8 * k), 2)
        rhs_repr = None
        detail = f"bound is 2*sqrt(k)/(1+sqrt(2)) ~ {2 * math.sqrt(k) / (1 + math.sqrt(2)):.6f}"
    verdict = STRICT if sign > 0 else (EQUALITY if sign == 0 else VIOLATED)
    return BoundCheck("srg-b1-bound", lhs, rhs_repr, verdict, True, detail)


def srg_ratio_bound(p: SrgParameters) -> BoundCheck:
    """(phi_0 + phi_1)/phi_0 against 1 + 1/C(k), C(k) the minimum above.

    Complete multipartite parameters use the closed form phi = (v-1, 1) and
    the weaker cap 1 + 1/k.
    """
    phi0 = Fraction(p.v - 1)
    phi1 = (phi0 - p.k) / p.b1
    ratio = (phi0 + phi1) / phi0
    if p.is_complete_multipartite:
        if phi1 != 1:
            raise AssertionError("complete multipartite must have phi_1 = 1")
        rhs = 1 + Fraction(1, p.k)
        return BoundCheck("srg-ratio-bound", ratio, rhs, _verdict_le(ratio, rhs), True,
                          "complete multipartite: ratio = 1 + 1/(v-1) vs 1 + 1/k")
    k = p.k
    q = ratio - 1  # = phi1/phi0
    if _srg_bound_is_rational(k):
        rhs = 1 + Fraction(16, 5 * k)
        return BoundCheck("srg-ratio-bound", ratio, rhs, _verdict_le(ratio, rhs), True,
                          "bound is 1 + 16/(5k)")
    # q vs 1/B = (sqrt(k) + sqrt(2k))/(2k): compare squares of 2kq and
    # sqrt(k)+sqrt(2k); (sqrt(k)+sqrt(2k))^2 = 3k + 2k sqrt(2)
    sign = _sign_plus_sqrt((2 * k * q) ** 2 - 3 * k, Fraction(-2 * k), 2)
    verdict = STRICT if sign < 0 else (EQUALITY if sign == 0 else VIOLATED)
    bound_float = 1 + (1 + math.sqrt(2)) / (2 * math.sqrt(k))
    return BoundCheck("srg-ratio-bound", ratio, None, verdict, True,
                      f"bound is 1 + (1+sqrt(2))/(2*sqrt(k)) ~ {bound_float:.6f}")


# ---------------------------------------------------------------------------
# Whole-array evaluation and stream screening


#: Stages that can rule an array out, in the order they are tried.  The first
#: five validation condition names (see :func:`drgres.arrays.validate`) slot
#: in at the "structure" stage.
SCREEN_ORDER = ("structure", "layer-integral", "phi-monotonic",
                "tail-bound", "phi1-tail-bound", "global-ratio-bound")


@dataclass(frozen=True)
class Evaluation:
    """Everything screening learned about one candidate array."""

    source: str
    array: IntersectionArray | None
    validation: ValidationReport | None
    phi: PhiSequence | None
    report: BoundReport | None
    verdict: str
    reason: str | None = None
    anomalies: tuple[str, ...] = ()

    def verdict_text(self) -> str:
        if self.reason:
            return f"{self.verdict}({self.reason})"
        return self.verdict

    def as_json(self) -> dict:
        return {
            "source": self.source,
            "array": self.array.render() if self.array else None,
            "n": self.phi.n if self.phi else None,
            "verdict": self.verdict,
            "reason": self.reason,
            "anomalies": list(self.anomalies),
            "violated_conditions": (
                list(self.validation.conditions()) if self.validation else []
            ),
            "checks": self.report.as_json() if self.report else [],
        }


def evaluate(arr: IntersectionArray, source: str | None = None) -> Evaluation:
    """Run the full screening pipeline on one array.

    Order of necessary conditions: structural validation, layer integrality,
    potential monotonicity, the tail bounds for m = 0..D-1, the phi_1 tail
    bound, then the global ratio bound.  The first failure names the reason;
    all remaining checks are still evaluated and reported when computable.
    Checks with unmet hypotheses (k <= 2 and similar) never rule out.
    """
    src = source if source is not None else arr.render()
    report = validate(arr)
    if not report.ok:
        return Evaluation(src, arr, report, None, None, RULED_OUT, report.conditions()[0])
    try:
        phi = phi_recursive(arr)
    except NonIntegralLayer:
        return Evaluation(src, arr, report, None, None, RULED_OUT, "layer-integral")
    except InfeasiblePotential:
        return Evaluation(src, arr, report, None, None, RULED_OUT, "phi-monotonic")

    checks: list[BoundCheck] = []
    reason = None
    anomalies: list[str] = []
    for m in range(phi.diameter):
        entry = check_tail(phi, m)
        checks.append(entry)
        if reason is None and entry.hypothesis_met and entry.verdict != STRICT:
            reason = entry.name
    main = check_main(phi)
    checks.append(main)
    if main.verdict == EQUALITY and main.detail.startswith("ANOMALOUS"):
        anomalies.append(main.name)
    if reason is None and main.hypothesis_met and main.verdict == VIOLATED:
        reason = main.name
    biggs = check_biggs(phi)
    checks.append(biggs)
    if biggs.verdict == EQUALITY and biggs.detail.startswith("ANOMALOUS"):
        anomalies.append(biggs.name)
    if reason is None and biggs.hypothesis_met and biggs.verdict == VIOLATED:
        reason = biggs.name
    checks.append(check_valency_corollary(phi))
    checks.append(check_resistance_cap(phi))
    checks.extend(lemma_relations(arr, phi))
    if arr.diameter == 2:
        try:
            params = SrgParameters.from_array(arr)
            try:
                checks.append(srg_check(params))
            except NotApplicable:
                pass
            checks.append(srg_ratio_bound(params))
        except MalformedInput:
            pass
    verdict = RULED_OUT if reason else FEASIBLE
    return Evaluation(src, arr, report, phi, BoundReport(tuple(checks)), verdict,
                      reason, tuple(anomalies))


def screen(items: Iterable[Union[IntersectionArray, str]]) -> Iterator[Evaluation]:
    """Screen a stream of arrays (or raw compact strings), item-independent.

    Parse failures become per-item ``error(...)`` verdicts; the stream never
    aborts.  Output order matches input order.
    """
    for item in items:
        if isinstance(item, IntersectionArray):
            yield evaluate(item)
            continue
        try:
            arr = parse_array(item)
        except MalformedInput as exc:
            yield Evaluation(item, None, None, None, None, ERROR, str(exc))
            continue
        yield evaluate(arr, source=item)
