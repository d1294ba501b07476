"""Shared oracles and hypothesis strategies.

The oracles here are deliberately independent of the library's fast paths:
convolution by per-index trial division, classical functions by per-index
factorization/counting, poset width by exhaustive antichain enumeration.
Expected values frozen into tests were computed with these.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from arithring import ArithFunc, Domain, make

# first call into a cold @njit kernel can blow hypothesis' default deadline
settings.register_profile("arithring", deadline=None)
settings.load_profile("arithring")


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------


def naive_convolve(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    """Trial-division convolution oracle: scan every d <= n for d | n."""
    assert f.domain is g.domain
    n = min(f.bound, g.bound)
    zero = Fraction(0) if f.domain is Domain.Q else 0
    out = []
    for m in range(1, n + 1):
        acc = zero
        for d in range(1, m + 1):
            if m % d == 0:
                acc += f[d] * g[m // d]
        out.append(acc)
    return make(out, f.domain)


def naive_divisor_list(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def trial_division(n: int) -> list[int]:
    """Ascending prime multiset by classic 2,3,5,... trial division."""
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def naive_is_prime(n: int) -> bool:
    return n >= 2 and len(naive_divisor_list(n)) == 2


def naive_mobius(n: int) -> int:
    factors = trial_division(n) if n > 1 else []
    if len(set(factors)) != len(factors):
        return 0
    return (-1) ** len(factors)


def naive_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def naive_tau(n: int) -> int:
    return len(naive_divisor_list(n))


def naive_sigma(n: int, k: int) -> int:
    return sum(d**k for d in naive_divisor_list(n))


def naive_liouville(n: int) -> int:
    return (-1) ** len(trial_division(n)) if n > 1 else 1


def brute_force_width(elements: list[int]) -> int:
    """Maximum antichain size by enumerating all subsets (|elements| <= 20)."""
    n = len(elements)
    assert n <= 20
    comparable = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (
                elements[j] % elements[i] == 0 or elements[i] % elements[j] == 0
            ):
                comparable[i] |= 1 << j
    best = 0
    for subset in range(1 << n):
        size = subset.bit_count()
        if size <= best:
            continue
        ok = True
        for i in range(n):
            if subset >> i & 1 and comparable[i] & subset:
                ok = False
                break
        if ok:
            best = size
    return best


# ---------------------------------------------------------------------------
# hypothesis strategies
# ---------------------------------------------------------------------------


def coefficients(domain: Domain, max_abs: int = 9):
    ints = st.integers(-max_abs, max_abs)
    if domain is Domain.Z:
        return ints
    return st.fractions(
        min_value=-max_abs, max_value=max_abs, max_denominator=6
    )


@st.composite
def arith_funcs(
    draw,
    domain: Domain,
    min_bound: int = 1,
    max_bound: int = 32,
    max_abs: int = 9,
    unit: bool = False,
):
    values = draw(
        st.lists(coefficients(domain, max_abs), min_size=min_bound, max_size=max_bound)
    )
    if unit:
        if domain is Domain.Z:
            lead = draw(st.sampled_from((1, -1)))
        else:
            lead = draw(coefficients(domain, max_abs).filter(lambda v: v != 0))
        values = [lead] + values[1:]
    return make(values, domain)


def units(domain: Domain, min_bound: int = 1, max_bound: int = 32, max_abs: int = 9):
    return arith_funcs(domain, min_bound, max_bound, max_abs, unit=True)


@pytest.fixture
def rng():
    return random.Random(0xA51C)
