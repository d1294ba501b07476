"""Truncated Dirichlet-convolution rings with exact coefficients.

An :class:`ArithFunc` holds the values f(1), ..., f(N) of an arithmetic
function in one of two coefficient domains:

* ``Domain.Q`` -- the field of exact rationals (``fractions.Fraction``),
* ``Domain.Z`` -- the ring of arbitrary-precision integers.

Every operation is exact and every verdict is "at bound N": convolution at
index n consults only indices dividing n, so truncation to 1..N is closed
under the ring operations.  Mixed-bound operands truncate to the smaller
bound.  All values are immutable; operations are pure functions.

Products are Dirichlet convolution, (f * g)(n) = sum of f(d) g(n/d) over
divisor pairs d * (n/d) = n.  Over ``Domain.Z`` the convolution is routed
through the int64 kernels in :mod:`arithring.kernels` whenever overflow is
provably impossible; otherwise an exact big-int divisor-pair loop runs.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import kernels

Coefficient = Union[int, Fraction]


class Domain(Enum):
    """Coefficient domain tag: exact rational field or integer ring."""

    Q = "Q"
    Z = "Z"


class RingError(Exception):
    """Base class for domain/arithmetic failures in this module."""


class NotInDomain(RingError):
    """A value cannot be represented in the requested coefficient domain."""


class DomainMismatch(RingError):
    """Operands live in different coefficient domains."""


class NotAUnit(RingError):
    """Inverse requested for a non-invertible function."""


class NoVisibleRank(RingError):
    """The operation needs a least nonzero index but the function is zero at bound."""


def _zero(domain: Domain) -> Coefficient:
    return Fraction(0) if domain is Domain.Q else 0


def _coerce(value, domain: Domain) -> Coefficient:
    """Validate and convert one coefficient into `domain`. Exact only."""
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise NotInDomain(f"cannot parse coefficient {text!r}") from exc
    if isinstance(value, float):
        raise NotInDomain(f"floating point value {value!r} rejected: arithmetic is exact")
    if isinstance(value, Fraction):
        if domain is Domain.Q:
            return value
        if value.denominator == 1:
            return int(value)
        raise NotInDomain(f"{value} is not an integer (domain Z)")
    if not isinstance(value, int):
        try:
            value = operator.index(value)  # numpy integer scalars and friends
        except TypeError:
            raise NotInDomain(
                f"unsupported coefficient type {type(value).__name__}"
            ) from None
    return Fraction(value) if domain is Domain.Q else value


@dataclass(frozen=True)
class Rank:
    """Least index with a nonzero value, or the not-visible-at-bound marker.

    ``Rank(None, None)`` means the function is zero everywhere at its bound;
    no statement about larger bounds is implied.
    """

    index: Optional[int]
    leading: Optional[Coefficient]

    @property
    def visible(self) -> bool:
        return self.index is not None


NOT_VISIBLE = Rank(None, None)


@dataclass(frozen=True)
class ArithFunc:
    """Arithmetic function truncated to indices 1..N, exact values."""

    domain: Domain
    values: tuple

    def __post_init__(self):
        if not self.values:
            raise ValueError("an arithmetic function needs at least one value")

    @property
    def bound(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Coefficient:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __add__(self, other: "ArithFunc") -> "ArithFunc":
        return add(self, other)

    def __sub__(self, other: "ArithFunc") -> "ArithFunc":
        return add(self, scale(other, -1))

    def __neg__(self) -> "ArithFunc":
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, ArithFunc):
            return convolve(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self.values[:8])
        tail = ", ..." if len(self.values) > 8 else ""
        return f"ArithFunc({self.domain.value}, N={len(self.values)}, [{head}{tail}])"


@dataclass(frozen=True)
class DivisionResult:
    """Outcome of an exact division attempt at a finite bound."""

    quotient: Optional[ArithFunc]
    witness: Optional[int]

    @property
    def divisible(self) -> bool:
        return self.quotient is not None


def make(values: Iterable, domain: Domain = Domain.Q) -> ArithFunc:
    """Build an ArithFunc from f(1), f(2), ... validating every coefficient."""
    vals = tuple(_coerce(v, domain) for v in values)
    if not vals:
        raise ValueError("an arithmetic function needs at least one value")
    return ArithFunc(domain, vals)


def epsilon(bound: int, domain: Domain = Domain.Q) -> ArithFunc:
    """Convolution identity: 1 at index 1, 0 elsewhere."""
    _check_bound(bound)
    z, o = _zero(domain), _coerce(1, domain)
    return ArithFunc(domain, (o,) + (z,) * (bound - 1))


def omega(bound: int, domain: Domain = Domain.Q) -> ArithFunc:
    """Additive identity: the all-zero function."""
    _check_bound(bound)
    return ArithFunc(domain, (_zero(domain),) * bound)


def nu(r: int, bound: int, domain: Domain = Domain.Q) -> ArithFunc:
    """Indicator of a single index r: 1 at r, 0 elsewhere."""
    _check_bound(bound)
    if not 1 <= r <= bound:
        raise ValueError(f"nu index {r} outside 1..{bound}")
    z, o = _zero(domain), _coerce(1, domain)
    return ArithFunc(domain, (z,) * (r - 1) + (o,) + (z,) * (bound - r))


def with_domain(f: ArithFunc, domain: Domain) -> ArithFunc:
    """Re-tag f into `domain` (Z embeds in Q; Q needs integer values for Z)."""
    if f.domain is domain:
        return f
    return ArithFunc(domain, tuple(_coerce(v, domain) for v in f.values))


def _check_bound(bound: int) -> None:
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")


def _common(f: ArithFunc, g: ArithFunc) -> int:
    if f.domain is not g.domain:
        raise DomainMismatch(f"{f.domain.value} vs {g.domain.value}")
    return min(len(f.values), len(g.values))


def add(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    _common(f, g)
    return ArithFunc(f.domain, tuple(x + y for x, y in zip(f.values, g.values)))


def scale(f: ArithFunc, c) -> ArithFunc:
    """Pointwise c * f; identical to convolve(c * epsilon, f)."""
    cc = _coerce(c, f.domain)
    return ArithFunc(f.domain, tuple(cc * v for v in f.values))


def restrict(f: ArithFunc, bound: int) -> ArithFunc:
    """Truncate to the smaller bound 1..M."""
    if not 1 <= bound <= len(f.values):
        raise ValueError(f"restriction bound {bound} outside 1..{len(f.values)}")
    return ArithFunc(f.domain, f.values[:bound])


def rank(f: ArithFunc) -> Rank:
    """Least n with f(n) != 0, with its leading value; units have rank 1."""
    for i, v in enumerate(f.values):
        if v:
            return Rank(i + 1, v)
    return NOT_VISIBLE


def is_unit(f: ArithFunc) -> bool:
    """Over Q: f(1) != 0.  Over Z: f(1) is +1 or -1."""
    lead = f.values[0]
    if f.domain is Domain.Q:
        return lead != 0
    return lead == 1 or lead == -1


def monic(f: ArithFunc) -> ArithFunc:
    """Scale a rational-domain function so its leading value is 1.

    Convenience normalization only: monic form is NOT an invariant of the
    associate class (the unit group is the full set of f(1) != 0 functions).
    """
    if f.domain is not Domain.Q:
        raise NotInDomain("monic scaling divides by the leading value; use Domain.Q")
    r = rank(f)
    if not r.visible:
        raise NoVisibleRank("zero function has no leading value")
    return scale(f, Fraction(1) / r.leading)


# ---------------------------------------------------------------------------
# convolution
# ---------------------------------------------------------------------------


def _try_convolve_i64(a: Sequence[int], b: Sequence[int], n: int):
    """int64 kernel route for Domain.Z; None when safety cannot be proven."""
    if not kernels.int64_paths_enabled():
        return None
    try:
        arr_a = np.zeros(n + 1, np.int64)
        arr_a[1:] = np.fromiter(a, np.int64, count=n)
        arr_b = np.zeros(n + 1, np.int64)
        arr_b[1:] = np.fromiter(b, np.int64, count=n)
    except OverflowError:
        return None
    max_a = max(abs(int(arr_a.max())), abs(int(arr_a.min())))
    max_b = max(abs(int(arr_b.max())), abs(int(arr_b.min())))
    if not kernels.convolution_fits_i64(max_a, max_b, n):
        return None
    return tuple(kernels.convolve_i64(arr_a, arr_b)[1:].tolist())


def _convolve_exact(a: Sequence, b: Sequence, n: int, zero: Coefficient) -> tuple:
    out = [zero] * n
    for i in range(n):
        av = a[i]
        if not av:
            continue
        d = i + 1
        for j in range(n // d):
            bv = b[j]
            if bv:
                out[d * (j + 1) - 1] += av * bv
    return tuple(out)


def convolve(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    """Dirichlet product at the common bound, by divisor-pair iteration.

    Total work is sum of tau(n) for n <= N (about N log N), never
    per-index trial division.
    """
    n = _common(f, g)
    a, b = f.values[:n], g.values[:n]
    if f.domain is Domain.Z:
        fast = _try_convolve_i64(a, b, n)
        if fast is not None:
            return ArithFunc(Domain.Z, fast)
    return ArithFunc(f.domain, _convolve_exact(a, b, n, _zero(f.domain)))


# ---------------------------------------------------------------------------
# inverse and division: triangular solves
# ---------------------------------------------------------------------------


def inverse(f: ArithFunc) -> ArithFunc:
    """Convolution inverse g with f * g = epsilon at bound.

    Solved by the triangular recursion g(1) = 1/f(1),
    g(n) = -1/f(1) * sum of f(d) g(n/d) over divisors d > 1 of n.
    Over Domain.Z the leading value is +-1, so every division is exact.
    """
    if not is_unit(f):
        raise NotAUnit(f"leading value {f.values[0]} is not invertible in {f.domain.value}")
    n = len(f.values)
    a = f.values
    zero = _zero(f.domain)
    if f.domain is Domain.Q:
        inv_lead = Fraction(1) / a[0]
    else:
        inv_lead = a[0]  # +-1 is its own reciprocal
    nonzero = [i + 1 for i in range(1, n) if a[i]]  # indices d >= 2 with f(d) != 0
    g = [zero] * (n + 1)
    acc = [zero] * (n + 1)
    g[1] = inv_lead
    for m in range(1, n + 1):
        if m > 1:
            g[m] = -inv_lead * acc[m]
        gm = g[m]
        if gm:
            for d in nonzero:
                idx = d * m
                if idx > n:
                    break
                acc[idx] += a[d - 1] * gm
    return ArithFunc(f.domain, tuple(g[1:]))


def divide(num: ArithFunc, den: ArithFunc) -> DivisionResult:
    """Solve den * g = num exactly at the common bound N.

    The quotient is determined on indices m <= floor(N / b) (b = rank of
    den) by a triangular solve and taken as zero above that range; every
    index of the residual den * g - num is checked.  Returns the quotient,
    or the first failing index as the non-divisibility witness.  A zero
    numerator is trivially divisible with quotient omega.
    """
    n = _common(num, den)
    a = num.values[:n]
    b = den.values[:n]
    rb = rank(ArithFunc(den.domain, b))
    if not rb.visible:
        raise NoVisibleRank("divisor is zero at the common bound")
    if not any(a):
        return DivisionResult(omega(n, num.domain), None)
    lead_idx, lead = rb.index, rb.leading
    solve_top = n // lead_idx
    zero = _zero(num.domain)
    inv_lead = Fraction(1) / lead if num.domain is Domain.Q else None
    nonzero = [i + 1 for i in range(n) if b[i]]
    g = [zero] * (solve_top + 1)
    acc = [zero] * (n + 1)
    for idx in range(1, n + 1):
        if idx % lead_idx == 0:
            m = idx // lead_idx
            need = a[idx - 1] - acc[idx]
            if num.domain is Domain.Q:
                gm = need * inv_lead
            else:
                gm, rem = divmod(need, lead)
                if rem:
                    return DivisionResult(None, idx)
            g[m] = gm
            if gm:
                for d in nonzero:
                    at = d * m
                    if at > n:
                        break
                    acc[at] += b[d - 1] * gm
        elif acc[idx] != a[idx - 1]:
            return DivisionResult(None, idx)
    quotient = tuple(g[1:]) + (zero,) * (n - solve_top)
    return DivisionResult(ArithFunc(num.domain, quotient), None)


def are_associates(f: ArithFunc, g: ArithFunc) -> bool:
    """True when f and g divide each other at the common bound.

    Cross-checked against the unit-factor characterization (equal ranks and
    a unit quotient); the two must agree.
    """
    n = _common(f, g)
    fa = restrict(f, n)
    ga = restrict(g, n)
    rf, rg = rank(fa), rank(ga)
    if not rf.visible or not rg.visible:
        return rf.visible == rg.visible  # two zero functions are associates
    forward = divide(fa, ga)
    backward = divide(ga, fa)
    two_sided = forward.divisible and backward.divisible
    by_unit = (
        rf.index == rg.index
        and forward.divisible
        and is_unit(forward.quotient)
    )
    if two_sided != by_unit:
        raise RuntimeError(
            "associate characterizations disagree; triangular solve is broken"
        )
    return two_sided
