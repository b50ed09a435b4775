"""Finite formal linear combinations of words with exact coefficients."""

from __future__ import annotations

from typing import Callable, Iterator, Mapping

from .coefficients import (
    ZERO,
    Coefficient,
    Scalar,
    format_magnitude,
    format_coefficient,
    parse_coefficient,
)
from .errors import AlphabetMismatch
from .words import Alphabet, Word, format_word, parse_word


class Polynomial:
    """An element of the free algebra on an alphabet.

    Terms map words to nonzero coefficients; instances are treated as
    immutable and compare equal iff their canonical term maps agree.
    """

    __slots__ = ("alphabet", "_terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, Coefficient | Scalar] | None = None):
        self.alphabet = alphabet
        clean: dict[Word, Coefficient] = {}
        for w, c in (terms or {}).items():
            alphabet.check(w)
            c = Coefficient.coerce(c)
            if c:
                clean[w] = c
        self._terms = clean

    @classmethod
    def _raw(cls, alphabet: Alphabet, terms: dict[Word, Coefficient]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "Polynomial":
        return cls._raw(alphabet, {})

    @classmethod
    def word(cls, alphabet: Alphabet, w: Word, coeff: Coefficient | Scalar = 1) -> "Polynomial":
        return cls(alphabet, {w: coeff})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, w: Word) -> Coefficient:
        return self._terms.get(w, ZERO)

    def items(self) -> list[tuple[Word, Coefficient]]:
        """Terms in canonical (length-then-lex) word order."""
        key = self.alphabet.sort_key
        return sorted(self._terms.items(), key=lambda kv: key(kv[0]))

    def __iter__(self) -> Iterator[tuple[Word, Coefficient]]:
        return iter(self.items())

    def words(self) -> list[Word]:
        return [w for w, _ in self.items()]

    def _check_same(self, other: "Polynomial") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"{self.alphabet!r} vs {other.alphabet!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                del out[w]
        return Polynomial._raw(self.alphabet, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, c) -> "Polynomial":
        try:
            return scalar_mul(c, self)
        except TypeError:
            return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.alphabet == other.alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.alphabet, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.alphabet.letters!r}, {format_polynomial(self)!r})"


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def scalar_mul(c: Coefficient | Scalar, p: Polynomial) -> Polynomial:
    c = Coefficient.coerce(c)
    if not c:
        return Polynomial.zero(p.alphabet)
    out = {}
    for w, a in p._terms.items():
        prod = c * a
        if prod:
            out[w] = prod
    return Polynomial._raw(p.alphabet, out)


WordProduct = Callable[[Word, Word], Polynomial]


def bilinear_extend(op: WordProduct, p: Polynomial, q: Polynomial) -> Polynomial:
    """Extend a word-level product to ``sum p[u] q[v] op(u, v)``."""
    p._check_same(q)
    acc: dict[Word, Coefficient] = {}
    for u, cu in p._terms.items():
        for v, cv in q._terms.items():
            prod = op(u, v)
            if not prod._terms:
                continue
            c = cu * cv
            for w, cw in prod._terms.items():
                acc[w] = acc.get(w, ZERO) + c * cw
    return Polynomial._raw(p.alphabet, {w: c for w, c in acc.items() if c})


def format_polynomial(p: Polynomial) -> str:
    """Canonical text such as ``abcbc + babcc`` or ``3/2*t^6*ab - ba``."""
    parts = []
    for w, c in p.items():
        word = format_word(w)
        terms = list(c)
        if len(terms) == 1:
            e, r = terms[0]
            negative = r < 0
            if abs(r) == 1 and e == 0:
                body = word
            else:
                body = f"{format_magnitude(r, e)}*{word}"
        else:
            negative = False
            body = f"({format_coefficient(c)})*{word}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"


def _split_terms(text: str) -> list[str]:
    chunks, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        elif ch in "+-" and depth == 0 and i > start and text[i - 1] != "^":
            chunks.append(text[start:i])
            start = i
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    chunks.append(text[start:])
    return chunks


def parse_polynomial(text: str, alphabet: Alphabet) -> Polynomial:
    """Inverse of :func:`format_polynomial`."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Polynomial.zero(alphabet)
    out = Polynomial.zero(alphabet)
    for chunk in _split_terms(s):
        sign = 1
        if chunk[:1] in ("+", "-"):
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        coeff_text, star, word_text = chunk.rpartition("*")
        coeff = parse_coefficient(coeff_text) if star else Coefficient.const(1)
        w = parse_word(word_text, alphabet)
        out = out + Polynomial._raw(alphabet, {w: coeff * sign} if coeff else {})
    return out
