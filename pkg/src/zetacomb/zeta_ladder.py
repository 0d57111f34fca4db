"""Exact zeta values at even integers via an antiderivative ladder.

The complex-exponential comb ``sum_n exp(i*n*x)`` vanishes on the open
interval I = (0, 2*pi), so each of its repeated antiderivatives is a
polynomial there.  Writing the k-th antiderivative as

    osc_k(x) + x**k / k!

where ``osc_k`` collects the termwise-antidifferentiated oscillatory modes
(amplitude ``2/n**k``), the polynomial closed form ``Q_k`` on I is pinned
down order by order: antidifferentiate ``Q_k`` and fix the new integration
constant so that the average of ``Q_{k+1}`` over (0, 2*pi) equals the
average of ``x**(k+1)/(k+1)!``, legitimate because every oscillatory mode
has exact zero mean over a full period.  The ladder starts from ``Q_1 = pi``
(the odd sawtooth ``2*sum sin(n*x)/n + x`` is constant pi on I).

At even order 2k the oscillatory part is ``(-1)**k * 2 * sum cos(n*x)/n**2k``,
continuous for 2k >= 2, so letting x -> 0 gives

    zeta(2k) = (-1)**k * (Q_2k(0) - P_2k(0)) / 2,       P_k(x) = x**k / k!

exactly, as a single positive rational multiple of pi**2k.  The classical
Bernoulli-number formula is provided as an independent cross-check oracle.

States are immutable; the ladder cache is guarded by a lock, so the module
is safe for concurrent use and always deterministic.
"""

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import PiNumber, PiPolynomial, PI, TWO_PI

__all__ = [
    "LadderState",
    "ZetaValue",
    "ladder_init",
    "ladder_step",
    "ladder_states",
    "zeta_even",
    "bernoulli_number",
    "bernoulli_oracle",
]

_ZERO = PiNumber.zero()


@dataclass(frozen=True)
class LadderState:
    """Closed form of the order-k antiderivative on (0, 2*pi).

    ``q`` is the polynomial equal to the antiderivative on the interval;
    ``p`` is the pure power part ``x**k / k!`` whose mean fixes q's constant.
    """

    order: int
    q: PiPolynomial
    p: PiPolynomial


@dataclass(frozen=True)
class ZetaValue:
    """zeta(two_k) as an exact positive rational multiple of pi**two_k."""

    two_k: int
    value: PiNumber

    def __post_init__(self):
        terms = self.value.terms
        if len(terms) != 1 or terms[0][0] != self.two_k or terms[0][1] <= 0:
            raise ValueError(
                f"zeta({self.two_k}) must be a single positive multiple of "
                f"pi^{self.two_k}, got {self.value!r}"
            )

    @property
    def coefficient(self) -> Fraction:
        """The rational r in zeta(two_k) = r * pi**two_k."""
        return self.value.coefficient(self.two_k)

    def to_float(self) -> float:
        return self.value.to_float()

    def __str__(self):
        return str(self.value)


def ladder_init() -> LadderState:
    """Order-1 state: Q_1 is the constant pi, P_1(x) = x."""
    return LadderState(order=1, q=PiPolynomial([PI]), p=PiPolynomial.monomial(1))


def ladder_step(state: LadderState) -> LadderState:
    """Advance one order: antidifferentiate, then fix the constant by means.

    The constant is the unique PiNumber making mean(Q_{k+1}) over (0, 2*pi)
    equal mean(P_{k+1}); it exists at every order because antidifferentiation
    introduces exactly one free constant.
    """
    next_order = state.order + 1
    integral = state.q.antiderivative()
    p_next = PiPolynomial.monomial(next_order, Fraction(1, math.factorial(next_order)))
    constant = p_next.mean(0, TWO_PI) - integral.mean(0, TWO_PI)
    return LadderState(order=next_order, q=integral + constant, p=p_next)


_cache: list[LadderState] = []
_cache_lock = threading.Lock()


def ladder_states(order: int) -> tuple[LadderState, ...]:
    """States of orders 1..order, computed incrementally and cached."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    with _cache_lock:
        if not _cache:
            _cache.append(ladder_init())
        while len(_cache) < order:
            _cache.append(ladder_step(_cache[-1]))
        return tuple(_cache[:order])


def _reset_cache() -> None:
    with _cache_lock:
        _cache.clear()


def _require_even(two_k: int) -> None:
    if not isinstance(two_k, int) or two_k < 2 or two_k % 2:
        raise ValueError(f"argument must be an even integer >= 2, got {two_k!r}")


def zeta_even(two_k: int) -> ZetaValue:
    """Exact zeta(two_k) from the ladder: (-1)**k * (Q_2k(0) - P_2k(0)) / 2."""
    _require_even(two_k)
    state = ladder_states(two_k)[-1]
    k = two_k // 2
    endpoint = state.q(_ZERO) - state.p(_ZERO)
    return ZetaValue(two_k, endpoint * Fraction((-1) ** k, 2))


def bernoulli_number(m: int) -> Fraction:
    """B_m from the recurrence sum_{j<=m} C(m+1, j) * B_j = 0, B_0 = 1.

    This convention has B_1 = -1/2.
    """
    if m < 0:
        raise ValueError(f"index must be >= 0, got {m}")
    values = [Fraction(1)]
    for n in range(1, m + 1):
        acc = sum(Fraction(math.comb(n + 1, j)) * values[j] for j in range(n))
        values.append(-acc / (n + 1))
    return values[m]


def bernoulli_oracle(two_k: int) -> ZetaValue:
    """zeta(two_k) by the classical closed form, independent of the ladder.

    zeta(2k) = (-1)**(k+1) * B_2k * (2*pi)**2k / (2 * (2k)!).
    """
    _require_even(two_k)
    k = two_k // 2
    coeff = (
        Fraction((-1) ** (k + 1))
        * bernoulli_number(two_k)
        * Fraction(2) ** two_k
        / (2 * math.factorial(two_k))
    )
    return ZetaValue(two_k, PiNumber.pi_power(two_k, coeff))
