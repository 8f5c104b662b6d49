"""Exact scalars: rationals and Gaussian rationals with conjugation.

``Rational`` is the standard-library ``fractions.Fraction``.  ``GaussScalar``
is an element of the field of Gaussian rationals, stored as a normalized
integer triple ``(a, b, d)`` meaning ``(a + b*i)/d``.  All arithmetic is
exact; floats appear only through :meth:`GaussScalar.to_float`.

Text grammar (used in every file format and CLI argument)::

    rational := ['-'] digits ['/' digits]
    gauss    := rational
              | rational ('+'|'-') [rational] 'i'
              | ['-'] [rational] 'i'

Examples: ``"2"``, ``"-1/3"``, ``"1/2+3/4i"``, ``"-i"`` (meaning 0-1i).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from . import kernel
from .errors import DivisionByZero, FloatOverflow, ParseError

Rational = Fraction

_RAT = r"\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"[+-]?{_RAT}")
_COMPOSITE_RE = re.compile(rf"(?P<re>[+-]?{_RAT})(?P<sign>[+-])(?P<mag>{_RAT})?")
_IMAG_RE = re.compile(rf"(?P<sign>[+-]?)(?P<mag>{_RAT})")


def _triple(re_part: Fraction, im_part: Fraction) -> tuple:
    d = math.lcm(re_part.denominator, im_part.denominator)
    return kernel.qnorm(
        re_part.numerator * (d // re_part.denominator),
        im_part.numerator * (d // im_part.denominator),
        d,
    )


class GaussScalar:
    """An exact element of the Gaussian rational field."""

    __slots__ = ("_t",)

    def __init__(self, re_part=0, im_part=0):
        self._t = _triple(Fraction(re_part), Fraction(im_part))

    @classmethod
    def _wrap(cls, t: tuple) -> GaussScalar:
        z = object.__new__(cls)
        z._t = t
        return z

    @property
    def re(self) -> Fraction:
        a, _, d = self._t
        return Fraction(a, d)

    @property
    def im(self) -> Fraction:
        _, b, d = self._t
        return Fraction(b, d)

    @property
    def triple(self) -> tuple:
        return self._t

    def is_real(self) -> bool:
        return self._t[1] == 0

    def conjugate(self) -> GaussScalar:
        return GaussScalar._wrap(kernel.qconj(self._t))

    def inverse(self) -> GaussScalar:
        try:
            return GaussScalar._wrap(kernel.qinv(self._t))
        except ZeroDivisionError:
            raise DivisionByZero("inverse of zero") from None

    def norm_sq(self) -> Fraction:
        """|z|^2 = z * conj(z), an exact nonnegative rational."""
        a, b, d = self._t
        return Fraction(a * a + b * b, d * d)

    def to_float(self) -> tuple[float, float]:
        """Round each component to the nearest binary64 independently."""
        try:
            return float(self.re), float(self.im)
        except OverflowError:
            raise FloatOverflow(f"{self} exceeds the binary64 range") from None

    def __add__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussScalar._wrap(kernel.qadd(self._t, other._t))

    __radd__ = __add__

    def __sub__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussScalar._wrap(kernel.qsub(self._t, other._t))

    def __rsub__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussScalar._wrap(kernel.qsub(other._t, self._t))

    def __mul__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussScalar._wrap(kernel.qmul(self._t, other._t))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> GaussScalar:
        return GaussScalar._wrap(kernel.qneg(self._t))

    def __pos__(self) -> GaussScalar:
        return self

    def __pow__(self, n: int) -> GaussScalar:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(self._t)

    def __bool__(self) -> bool:
        return not kernel.qis0(self._t)

    def __repr__(self) -> str:
        return f"GaussScalar({str(self)!r})"

    def __str__(self) -> str:
        a, b, d = self._t
        re_s = str(Fraction(a, d)) if a else ""
        if b == 0:
            return re_s or "0"
        im_f = Fraction(b, d)
        if abs(im_f) == 1:
            im_s = "i"
        else:
            im_s = f"{abs(im_f)}i"
        sign = "-" if b < 0 else ("+" if re_s else "")
        return f"{re_s}{sign}{im_s}"

    @classmethod
    def parse(cls, text: str) -> GaussScalar:
        """Parse the gauss-string grammar; raises :class:`ParseError`."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ParseError("empty scalar string")
        try:
            if not s.endswith("i"):
                if not _REAL_RE.fullmatch(s):
                    raise ParseError(f"not a valid scalar: {text!r}")
                return cls(Fraction(s))
            body = s[:-1]
            if body in ("", "+"):
                return cls(0, 1)
            if body == "-":
                return cls(0, -1)
            m = _COMPOSITE_RE.fullmatch(body)
            if m:
                mag = Fraction(m.group("mag")) if m.group("mag") else Fraction(1)
                im_part = -mag if m.group("sign") == "-" else mag
                return cls(Fraction(m.group("re")), im_part)
            m = _IMAG_RE.fullmatch(body)
            if m:
                mag = Fraction(m.group("mag"))
                return cls(0, -mag if m.group("sign") == "-" else mag)
        except ZeroDivisionError as exc:
            raise ParseError(f"zero denominator in scalar: {text!r}") from exc
        raise ParseError(f"not a valid scalar: {text!r}")


ZERO = GaussScalar(0)
ONE = GaussScalar(1)
I = GaussScalar(0, 1)


def coerce(value):
    """Coerce ints, Fractions, strings and GaussScalars to GaussScalar."""
    if isinstance(value, GaussScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussScalar(value)
    if isinstance(value, str):
        return GaussScalar.parse(value)
    return NotImplemented


def parse_rational(text: str) -> Fraction:
    """Parse a real rational string, rejecting imaginary parts."""
    z = GaussScalar.parse(text)
    if not z.is_real():
        raise ParseError(f"expected a real rational, got {text!r}")
    return z.re
