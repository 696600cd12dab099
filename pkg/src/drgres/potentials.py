"""Exact electric potentials and resistances computed from an intersection array.

The potential sequence phi_0 > phi_1 > ... > phi_{D-1} > 0 satisfies

    phi_0 = n - 1,        b_i phi_i = c_i phi_{i-1} - k   (1 <= i <= D-1)

and has the closed form

    phi_i = k (1/c_{i+1} + b_{i+1}/(c_{i+1} c_{i+2}) + ...
               + b_{i+1}...b_{D-1}/(c_{i+1}...c_D)).

The resistance between two vertices at graph distance j is
d_j = 2 (phi_0 + ... + phi_{j-1}) / (n k).  All arithmetic is rational and
exact; floats appear only in display helpers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrays import IntersectionArray, derive_layers


class InfeasiblePotential(ValueError):
    """The recursion left the admissible range (positive, strictly decreasing)."""


@dataclass(frozen=True)
class PhiSequence:
    """phi_0 ... phi_{D-1} for an array, plus the vertex count and valency.

    Stored values are all positive; ``at(i)`` extends the sequence with the
    convention phi_i = 0 for i >= D.
    """

    phi: tuple[Fraction, ...]
    n: int
    k: int
    array: IntersectionArray

    @property
    def diameter(self) -> int:
        return len(self.phi)

    def at(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError(f"phi_{i} undefined")
        return self.phi[i] if i < len(self.phi) else Fraction(0)

    def tail_sum(self, start: int) -> Fraction:
        """phi_start + ... + phi_{D-1} (zero when start >= D)."""
        return sum(self.phi[start:], Fraction(0))


@dataclass(frozen=True)
class ResistanceProfile:
    """Exact resistances d_1 < ... < d_D, with the classical caps recorded.

    ``within_caps`` records whether d_D < 4 phi_0/(n k); the second cap
    4 phi_0/(n k) < 4/k always holds since phi_0 = n - 1.
    """

    d: tuple[Fraction, ...]
    phi0_cap: Fraction
    valency_cap: Fraction
    within_caps: bool


def phi_recursive(arr: IntersectionArray) -> PhiSequence:
    """Run the defining recursion, checking positivity and strict decrease.

    Raises :class:`InfeasiblePotential` if either fails; an array passing the
    structural feasibility conditions never triggers this, but screening
    inputs are not assumed to pass them.
    """
    profile = derive_layers(arr)
    k = arr.k
    phi = [Fraction(profile.n - 1)]
    for i in range(1, arr.diameter):
        nxt = Fraction(arr.c_at(i) * phi[i - 1] - k, arr.b[i])
        if nxt <= 0:
            raise InfeasiblePotential(f"phi_{i} = {nxt} is not positive for {arr.render()}")
        if nxt >= phi[i - 1]:
            raise InfeasiblePotential(
                f"phi_{i} = {nxt} does not decrease below phi_{i-1} = {phi[i-1]} for {arr.render()}"
            )
        phi.append(nxt)
    return PhiSequence(tuple(phi), profile.n, k, arr)


def phi_closed_form(arr: IntersectionArray, i: int) -> Fraction:
    """Evaluate the closed-form sum for phi_i; agrees exactly with the recursion."""
    D = arr.diameter
    if not 0 <= i <= D - 1:
        raise IndexError(f"phi_{i} undefined for diameter {D}")
    total = Fraction(0)
    term = Fraction(1)
    for t in range(i + 1, D + 1):
        term /= arr.c_at(t)
        total += term
        if t < D:
            term *= arr.b[t]
    return arr.k * total


def resistances(phi: PhiSequence) -> ResistanceProfile:
    """d_j = 2 (phi_0 + ... + phi_{j-1}) / (n k) for 1 <= j <= D."""
    nk = phi.n * phi.k
    d = []
    acc = Fraction(0)
    for value in phi.phi:
        acc += value
        d.append(2 * acc / nk)
    phi0_cap = Fraction(4) * phi.phi[0] / nk
    valency_cap = Fraction(4, phi.k)
    return ResistanceProfile(tuple(d), phi0_cap, valency_cap, d[-1] < phi0_cap)


def tail_ratio(phi: PhiSequence, m: int) -> Fraction:
    """(phi_{m+1} + ... + phi_{D-1}) / phi_m, and 0 once the tail is empty."""
    if m < 0:
        raise IndexError(f"tail ratio undefined for m={m}")
    if m >= phi.diameter - 1:
        return Fraction(0)
    return phi.tail_sum(m + 1) / phi.phi[m]


def format_decimal(x: Fraction, digits: int = 6, trim: bool = True) -> str:
    """Fixed-point rendering, round half to even at ``digits`` places.

    With ``trim`` the trailing zeros are dropped but one fractional digit is
    kept, matching table style ("0.5", "1.0").
    """
    if x < 0:
        return "-" + format_decimal(-x, digits, trim)
    p, q = x.numerator, x.denominator
    scaled, rem = divmod(p * 10**digits, q)
    if 2 * rem > q or (2 * rem == q and scaled % 2 == 1):
        scaled += 1
    if digits == 0:
        return str(scaled)
    s = str(scaled).rjust(digits + 1, "0")
    whole, frac = s[:-digits], s[-digits:]
    if trim:
        frac = frac.rstrip("0") or "0"
    return f"{whole}.{frac}"


def format_fraction(x: Fraction) -> str:
    """``35/29`` for non-integers, plain ``101`` for integers."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
