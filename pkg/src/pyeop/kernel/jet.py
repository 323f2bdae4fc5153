"""
Truncated Taylor jets over an extended-precision real context.

A jet of order n carries the normalized Taylor coefficients
``c_k = f^(k)(x) / k!`` for k = 0..n. Arithmetic follows the truncated power
series rules, so derivatives come out exact to working precision instead of
through finite differences.

All jets use a dedicated :class:`mpmath.ctx_mp.MPContext` (never the global
``mpmath.mp``) whose precision comes from :class:`pyeop.config.ComputeConfig`.
"""

import threading
from fractions import Fraction
from typing import Dict, Optional, Sequence

from mpmath.ctx_mp import MPContext

from ..exceptions import DomainError
from .polynomial import UniPoly

_contexts: Dict[int, MPContext] = {}
_contexts_lock = threading.Lock()


def extended_context(precision_bits: Optional[int] = None) -> MPContext:
    """Shared mpmath context for the given (or configured) precision."""
    if precision_bits is None:
        from ..config import get_compute_config
        precision_bits = get_compute_config().precision_bits
    with _contexts_lock:
        ctx = _contexts.get(precision_bits)
        if ctx is None:
            ctx = MPContext()
            ctx.prec = precision_bits
            _contexts[precision_bits] = ctx
        return ctx


def to_mpf(value, ctx: MPContext):
    """Exact-to-precision conversion; Fractions go through numerator/denominator."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    if isinstance(value, int):
        return ctx.mpf(value)
    return ctx.convert(value)


class Jet:
    """
    Truncated Taylor expansion of a real function at one point.

    Attributes:
        coefficients: Normalized Taylor coefficients, c_k = f^(k)/k!
        ctx: Extended-precision context the coefficients live in
    """

    __slots__ = ("coefficients", "ctx")

    def __init__(self, coefficients: Sequence, ctx: Optional[MPContext] = None):
        ctx = ctx or extended_context()
        if not coefficients:
            raise ValueError("A jet needs at least its value")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coefficients", tuple(to_mpf(c, ctx) for c in coefficients))

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    def _new(self, coefficients) -> 'Jet':
        jet = Jet.__new__(Jet)
        object.__setattr__(jet, "ctx", self.ctx)
        object.__setattr__(jet, "coefficients", tuple(coefficients))
        return jet

    @classmethod
    def variable(cls, x, order: int = 2, ctx: Optional[MPContext] = None) -> 'Jet':
        """The identity function at x: (x, 1, 0, ...)."""
        return Jet([x, 1] + [0] * (order - 1), ctx) if order >= 1 else Jet([x], ctx)

    @classmethod
    def constant(cls, value, order: int = 2, ctx: Optional[MPContext] = None) -> 'Jet':
        return Jet([value] + [0] * order, ctx)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def value(self):
        return self.coefficients[0]

    @property
    def first_derivative(self):
        return self.derivative_value(1)

    @property
    def second_derivative(self):
        return self.derivative_value(2)

    def derivative_value(self, k: int):
        """f^(k) at the expansion point."""
        if k > self.order:
            raise ValueError(f"Jet of order {self.order} has no derivative of order {k}")
        return self.coefficients[k] * self.ctx.factorial(k)

    def derivative(self) -> 'Jet':
        """Jet of f' (one order lower)."""
        if self.order == 0:
            raise ValueError("Cannot differentiate an order-0 jet")
        return self._new(k * c for k, c in enumerate(self.coefficients) if k > 0)

    def truncate(self, order: int) -> 'Jet':
        return self._new(self.coefficients[:order + 1])

    # Arithmetic

    def _lift(self, other) -> Optional['Jet']:
        if isinstance(other, Jet):
            return other
        try:
            value = to_mpf(other, self.ctx)
        except (TypeError, ValueError):
            return None
        return self._new([value] + [self.ctx.zero] * self.order)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return self._new(a + b for a, b in zip(self.coefficients[:n + 1], other.coefficients))

    __radd__ = __add__

    def __neg__(self) -> 'Jet':
        return self._new(-c for c in self.coefficients)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            lifted = self._lift(other)
            if lifted is None:
                return NotImplemented
            factor = lifted.value
            return self._new(c * factor for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        n = min(self.order, other.order)
        return self._new(
            self.ctx.fsum(a[j] * b[k - j] for j in range(k + 1)) for k in range(n + 1)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if b[0] == 0:
            raise ZeroDivisionError("Jet division by a function vanishing at the point")
        n = min(self.order, other.order)
        quotient = []
        for k in range(n + 1):
            acc = a[k] - self.ctx.fsum(b[j] * quotient[k - j] for j in range(1, k + 1))
            quotient.append(acc / b[0])
        return self._new(quotient)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if isinstance(exponent, int):
            if exponent < 0:
                return 1 / (self ** -exponent)
            result = self._lift(1)
            base = self
            while exponent:
                if exponent & 1:
                    result = result * base
                base = base * base
                exponent >>= 1
            return result
        return self.real_power(exponent)

    def real_power(self, exponent) -> 'Jet':
        """f**r for real r; requires f > 0 at the point."""
        ctx = self.ctx
        a = self.coefficients
        if a[0] <= 0:
            raise DomainError("Real power of a non-positive jet", x=a[0])
        r = to_mpf(exponent, ctx)
        power = [ctx.power(a[0], r)]
        for k in range(1, self.order + 1):
            acc = ctx.fsum(((r + 1) * j - k) * a[j] * power[k - j] for j in range(1, k + 1))
            power.append(acc / (k * a[0]))
        return self._new(power)

    def exp(self) -> 'Jet':
        ctx = self.ctx
        a = self.coefficients
        result = [ctx.exp(a[0])]
        for k in range(1, self.order + 1):
            result.append(ctx.fsum(j * a[j] * result[k - j] for j in range(1, k + 1)) / k)
        return self._new(result)

    def log(self) -> 'Jet':
        """log|f|; its derivatives are those of log f wherever f is nonzero."""
        ctx = self.ctx
        a = self.coefficients
        if a[0] == 0:
            raise ZeroDivisionError("Logarithm of a jet vanishing at the point")
        result = [ctx.log(abs(a[0]))]
        for k in range(1, self.order + 1):
            acc = a[k] - ctx.fsum(j * result[j] * a[k - j] for j in range(1, k)) / k
            result.append(acc / a[0])
        return self._new(result)

    def _sin_cos(self):
        ctx = self.ctx
        a = self.coefficients
        s = [ctx.sin(a[0])]
        c = [ctx.cos(a[0])]
        for k in range(1, self.order + 1):
            s.append(ctx.fsum(j * a[j] * c[k - j] for j in range(1, k + 1)) / k)
            c.append(-ctx.fsum(j * a[j] * s[k - j] for j in range(1, k + 1)) / k)
        return self._new(s), self._new(c)

    def sin(self) -> 'Jet':
        return self._sin_cos()[0]

    def cos(self) -> 'Jet':
        return self._sin_cos()[1]

    def __abs__(self) -> 'Jet':
        return -self if self.value < 0 else self

    def __repr__(self) -> str:
        shown = ", ".join(self.ctx.nstr(c, 15) for c in self.coefficients)
        return f"Jet([{shown}])"


class Jet2(Jet):
    """Second-order jet built from (f, f', f'')."""

    __slots__ = ()

    def __init__(self, value, first_derivative=0, second_derivative=0,
                 ctx: Optional[MPContext] = None):
        ctx = ctx or extended_context()
        second = to_mpf(second_derivative, ctx) / 2
        super().__init__([value, first_derivative, second], ctx)


def evaluate_on_jet(p: UniPoly, x: Jet) -> Jet:
    """p(x(t)) as a jet, by Horner's rule with exact coefficients lifted once."""
    result = x._lift(0)
    for coefficient in reversed(p.coefficients):
        result = result * x + to_mpf(coefficient, x.ctx)
    return result


def evaluate_numeric(p: UniPoly, x, ctx: Optional[MPContext] = None):
    """p(x) at an extended-precision real."""
    ctx = ctx or extended_context()
    x = to_mpf(x, ctx)
    result = ctx.zero
    for coefficient in reversed(p.coefficients):
        result = result * x + to_mpf(coefficient, ctx)
    return result
