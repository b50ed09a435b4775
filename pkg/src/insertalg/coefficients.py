"""Exact Laurent polynomials in one indeterminate ``t`` over the rationals.

``t`` stands for ``e**k`` so the exponential weight family ``e**(k*m*n)``
is the monomial ``t**(m*n)`` and products of weights stay exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping, Union

Scalar = Union[int, Fraction]


def _normalize(r: Scalar) -> Scalar:
    # ints are kept as ints: Fraction arithmetic dominates the exhaustive searches
    if isinstance(r, Fraction) and r.denominator == 1:
        return r.numerator
    return r


class Coefficient:
    """An element ``sum(r_e * t**e)`` of Q[t, 1/t] in canonical sparse form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {}
        if terms:
            for e, r in terms.items():
                if not isinstance(e, int):
                    raise TypeError(f"exponent must be int, got {e!r}")
                if not isinstance(r, Rational):
                    raise TypeError(f"coefficient must be rational, got {r!r}")
                if r:
                    clean[e] = _normalize(Fraction(r) if not isinstance(r, int) else r)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Coefficient":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, r: Scalar) -> "Coefficient":
        return cls._raw({0: _normalize(r)} if r else {})

    @classmethod
    def monomial(cls, r: Scalar, e: int) -> "Coefficient":
        return cls._raw({e: _normalize(r)} if r else {})

    @classmethod
    def coerce(cls, value: "Coefficient | Scalar") -> "Coefficient":
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, Rational):
            return cls.const(value if isinstance(value, int) else Fraction(value))
        raise TypeError(f"cannot use {value!r} as a coefficient")

    def terms(self) -> dict[int, Scalar]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[int, Scalar]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def constant_value(self) -> Scalar | None:
        """The rational value if this is a constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and 0 in self._terms:
            return self._terms[0]
        return None

    def __add__(self, other):
        if not isinstance(other, Coefficient):
            try:
                other = Coefficient.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, r in other._terms.items():
            s = out.get(e, 0) + r
            if s:
                out[e] = _normalize(s)
            else:
                out.pop(e, None)
        return Coefficient._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Coefficient":
        return Coefficient._raw({e: -r for e, r in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Coefficient):
            try:
                other = Coefficient.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Coefficient):
            try:
                other = Coefficient.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) == 1 and len(b) == 1:
            (ea, ra), = a.items()
            (eb, rb), = b.items()
            return Coefficient._raw({ea + eb: _normalize(ra * rb)})
        out: dict[int, Scalar] = {}
        for ea, ra in a.items():
            for eb, rb in b.items():
                out[ea + eb] = out.get(ea + eb, 0) + ra * rb
        return Coefficient._raw({e: _normalize(r) for e, r in out.items() if r})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Coefficient":
        if n < 0:
            if len(self._terms) != 1:
                raise ZeroDivisionError("only monomials are units in Q[t, 1/t]")
            (e, r), = self._terms.items()
            return Coefficient._raw({e * n: _normalize(1 / Fraction(r) ** -n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, t_value: Scalar) -> Fraction:
        """Specialize ``t`` to a nonzero rational."""
        tv = Fraction(t_value)
        return sum((Fraction(r) * tv**e for e, r in self._terms.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, Coefficient):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def is_single_term(self) -> bool:
        return len(self._terms) <= 1

    def __str__(self) -> str:
        return format_coefficient(self)

    def __repr__(self) -> str:
        return f"Coefficient({format_coefficient(self)!r})"


ZERO = Coefficient._raw({})
ONE = Coefficient._raw({0: 1})
T = Coefficient._raw({1: 1})


def format_magnitude(r: Scalar, e: int) -> str:
    """Format a term's magnitude; the caller handles the sign."""
    r = abs(r)
    num = f"{r.numerator}/{r.denominator}" if isinstance(r, Fraction) else str(r)
    if e == 0:
        return num
    power = "t" if e == 1 else f"t^{e}"
    if r == 1:
        return power
    return f"{num}*{power}"


def format_coefficient(c: Coefficient) -> str:
    """Canonical text, descending exponents: ``3/2*t^6 - 2``; zero is ``0``."""
    parts = []
    for e, r in c:
        body = format_magnitude(r, e)
        if not parts:
            parts.append(f"-{body}" if r < 0 else body)
        else:
            parts.append(f"- {body}" if r < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


_TERM_RE = re.compile(
    r"""^(?:(?P<num>\d+)(?:/(?P<den>\d+))?)?   # rational magnitude
         (?P<star>\*)?
         (?:(?P<t>t)(?:\^(?P<exp>-?\d+))?)?$""",
    re.VERBOSE,
)


def parse_coefficient(text: str) -> Coefficient:
    """Inverse of :func:`format_coefficient`; whitespace is insignificant."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty coefficient text")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    # split at +/- that are not exponent signs
    chunks = []
    start = 0
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] != "^":
            chunks.append(s[start:i])
            start = i
    chunks.append(s[start:])
    out = ZERO
    for chunk in chunks:
        sign = 1
        if chunk and chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        # valid shapes: N, N/D, t, t^E, N*t^E, N/D*t^E
        if (
            not m
            or not (m.group("num") or m.group("t"))
            or bool(m.group("star")) != bool(m.group("num") and m.group("t"))
            or int(m.group("den") or 1) == 0
        ):
            raise ValueError(f"malformed coefficient term {chunk!r} in {text!r}")
        r = Fraction(int(m.group("num") or 1), int(m.group("den") or 1))
        e = 0
        if m.group("t"):
            e = int(m.group("exp")) if m.group("exp") else 1
        out = out + Coefficient.monomial(sign * r, e)
    return out
