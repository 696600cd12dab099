"""Intersection arrays of distance-regular graphs: parsing, validation, layers.

An intersection array is the pair of sequences (b_0,...,b_{D-1}; c_1,...,c_D)
attached to a distance-regular graph of diameter D.  Everything here is exact
integer arithmetic; feasibility violations are reported as data, not raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class MalformedInput(ValueError):
    """Text or JSON input does not have the shape of an intersection array."""


class NonIntegralLayer(ValueError):
    """A layer size k_i is not an integer, so no graph can have this array."""


@dataclass(frozen=True)
class IntersectionArray:
    """The data (b_0,...,b_{D-1}; c_1,...,c_D).

    Construction enforces only shape and positivity.  Run :func:`validate`
    for the combinatorial feasibility conditions; they are reported, not
    raised, so that screening pipelines can keep going.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        b = tuple(int(x) for x in self.b)
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if not b or not c:
            raise MalformedInput("both sides of the array must be non-empty")
        if len(b) != len(c):
            raise MalformedInput(
                f"length mismatch: |b|={len(b)} but |c|={len(c)}"
            )
        if any(x <= 0 for x in b) or any(x <= 0 for x in c):
            raise MalformedInput("all entries must be positive integers")

    @property
    def diameter(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        """Valency, k = b_0."""
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i for 0 <= i, with the convention b_i = 0 for i >= D."""
        if i < 0:
            raise IndexError(f"b_{i} undefined")
        return self.b[i] if i < len(self.b) else 0

    def c_at(self, i: int) -> int:
        """c_i for 1 <= i <= D."""
        if not 1 <= i <= len(self.c):
            raise IndexError(f"c_{i} undefined for this array")
        return self.c[i - 1]

    def a_at(self, i: int) -> int:
        """a_i = k - b_i - c_i for 1 <= i <= D (b_D taken as 0)."""
        return self.k - self.b_at(i) - self.c_at(i)

    def render(self) -> str:
        """Canonical compact form, e.g. ``3,2;1,1``."""
        return ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c))

    def as_json(self) -> dict[str, list[int]]:
        return {"b": list(self.b), "c": list(self.c)}

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class LayerProfile:
    """Distance-layer sizes k_0=1, k_1=k, ..., k_D and the vertex count n."""

    k_i: tuple[int, ...]
    n: int


@dataclass(frozen=True)
class Violation:
    """One violated feasibility condition, with the offending indices."""

    condition: str
    indices: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.condition}{list(self.indices)}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def conditions(self) -> tuple[str, ...]:
        return tuple(v.condition for v in self.violations)


def parse_array(text: str) -> IntersectionArray:
    """Parse the compact form ``b_0,...,b_{D-1};c_1,...,c_D``.

    Whitespace and a single pair of surrounding parentheses are tolerated;
    the canonical rendering has neither.
    """
    s = "".join(text.split())
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if s.count(";") != 1:
        raise MalformedInput(f"expected exactly one ';' in {text!r}")
    left, right = s.split(";")
    return IntersectionArray(_int_tokens(left, text), _int_tokens(right, text))


def _int_tokens(side: str, original: str) -> tuple[int, ...]:
    if not side:
        raise MalformedInput(f"empty side in {original!r}")
    out = []
    for tok in side.split(","):
        try:
            val = int(tok)
        except ValueError:
            raise MalformedInput(f"non-integer token {tok!r} in {original!r}") from None
        out.append(val)
    return tuple(out)


def array_from_json(obj: Any) -> IntersectionArray:
    """Build an array from the JSON object form ``{"b": [...], "c": [...]}``."""
    if not isinstance(obj, dict) or set(obj) - {"b", "c"} or "b" not in obj or "c" not in obj:
        raise MalformedInput(f"expected an object with keys 'b' and 'c', got {obj!r}")
    try:
        b = tuple(int(x) for x in obj["b"])
        c = tuple(int(x) for x in obj["c"])
    except (TypeError, ValueError):
        raise MalformedInput(f"non-integer entries in {obj!r}") from None
    return IntersectionArray(b, c)


def validate(arr: IntersectionArray) -> ValidationReport:
    """Check the standard feasibility conditions on an intersection array.

    Reported conditions, in screening order:

    * ``b-monotone``: k = b_0 > b_1 >= ... >= b_{D-1} (strict first step);
    * ``c-start``: c_1 = 1;
    * ``c-monotone``: c_1 <= c_2 <= ... <= c_D;
    * ``cross``: b_i >= c_j whenever i + j <= D;
    * ``a-nonneg``: a_i = k - b_i - c_i >= 0 for 1 <= i <= D;
    * ``layer-integral``: every k_i is a (positive) integer.
    """
    D = arr.diameter
    out: list[Violation] = []
    if D >= 2 and arr.b[0] <= arr.b[1]:
        out.append(Violation("b-monotone", (0, 1), f"b_0={arr.b[0]} must exceed b_1={arr.b[1]}"))
    for i in range(1, D - 1):
        if arr.b[i] < arr.b[i + 1]:
            out.append(Violation("b-monotone", (i, i + 1), f"b_{i}={arr.b[i]} < b_{i+1}={arr.b[i+1]}"))
    if arr.c[0] != 1:
        out.append(Violation("c-start", (1,), f"c_1={arr.c[0]} must be 1"))
    for i in range(D - 1):
        if arr.c[i] > arr.c[i + 1]:
            out.append(Violation("c-monotone", (i + 1, i + 2), f"c_{i+1}={arr.c[i]} > c_{i+2}={arr.c[i+1]}"))
    for i in range(D):
        for j in range(1, D - i + 1):
            if arr.b_at(i) < arr.c_at(j):
                out.append(Violation(
                    "cross", (i, j),
                    f"b_{i}={arr.b_at(i)} < c_{j}={arr.c_at(j)} although i+j={i + j} <= D={D}",
                ))
    for i in range(1, D + 1):
        if arr.a_at(i) < 0:
            out.append(Violation("a-nonneg", (i,), f"a_{i}={arr.a_at(i)} is negative"))
    # k_1 = b_0; thereafter k_{i+1} = k_i b_i / c_{i+1}
    prev = arr.b[0]
    for i in range(1, D):
        num = prev * arr.b[i]
        den = arr.c[i]
        if num % den != 0:
            out.append(Violation(
                "layer-integral", (i + 1,),
                f"k_{i+1} = k_{i}*b_{i}/c_{i+1} = {num}/{den} is not an integer",
            ))
            break
        prev = num // den
    return ValidationReport(tuple(out))


def derive_layers(arr: IntersectionArray) -> LayerProfile:
    """Layer sizes via c_{i+1} k_{i+1} = b_i k_i, and n = 1 + sum k_i.

    Raises :class:`NonIntegralLayer` when the recurrence leaves the integers.
    """
    ks = [1, arr.b[0]]
    for i in range(1, arr.diameter):
        num = ks[i] * arr.b[i]
        den = arr.c[i]
        if num % den != 0:
            raise NonIntegralLayer(
                f"k_{i+1} = {num}/{den} is not an integer for {arr.render()}"
            )
        ks.append(num // den)
    return LayerProfile(tuple(ks), sum(ks))
