"""The five insertion products on words and their bilinear extension."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .coefficients import Coefficient
from .errors import AlphabetMismatch, InadmissibleInput
from .poly import Polynomial, bilinear_extend
from .weights import WeightFunction
from .words import Alphabet, Word


def _counts_to_poly(alphabet: Alphabet, counts: dict[Word, int]) -> Polynomial:
    return Polynomial._raw(alphabet, {w: Coefficient.const(c) for w, c in counts.items() if c})


def simple_insertion(alphabet: Alphabet, x: Word, y: Word) -> Polynomial:
    """Sum of ``y[:i] + x + y[i:]`` over all ``i`` in ``0..len(y)``."""
    counts: dict[Word, int] = {}
    for i in range(len(y) + 1):
        w = y[:i] + x + y[i:]
        counts[w] = counts.get(w, 0) + 1
    return _counts_to_poly(alphabet, counts)


def weighted_insertion(alphabet: Alphabet, f: WeightFunction, x: Word, y: Word) -> Polynomial:
    weight = f(len(x), len(y))
    if not weight:
        return Polynomial.zero(alphabet)
    base = simple_insertion(alphabet, x, y)
    return Polynomial._raw(alphabet, {w: weight * c for w, c in base._terms.items()})


def delta_restricted_insertion(alphabet: Alphabet, x: Word, y: Word) -> Polynomial:
    """Insert ``x`` just before each letter of ``y`` equal to ``x[0]``.

    No insertion at the very end; empty ``x`` or ``y`` gives zero.
    """
    if not x or not y:
        return Polynomial.zero(alphabet)
    counts: dict[Word, int] = {}
    head = x[0]
    for j, letter in enumerate(y):
        if letter == head:
            w = y[:j] + x + y[j:]
            counts[w] = counts.get(w, 0) + 1
    return _counts_to_poly(alphabet, counts)


def common_prefix_length(x: Word, w: Word) -> int:
    k = 0
    for a, b in zip(x, w):
        if a != b:
            break
        k += 1
    return k


def synchronized_insertion(alphabet: Alphabet, x: Word, y: Word) -> Polynomial:
    """Insert ``x`` before each suffix of ``y``, weighted by their common prefix length."""
    if not x or not y:
        return Polynomial.zero(alphabet)
    counts: dict[Word, int] = {}
    for j in range(len(y)):
        s = common_prefix_length(x, y[j:])
        if s:
            w = y[:j] + x + y[j:]
            counts[w] = counts.get(w, 0) + s
    return _counts_to_poly(alphabet, counts)


def c_closed_form(p: int, q: int) -> Fraction:
    """Coefficient of ``a**(p+q)`` in the one-letter synchronized product ``a**p, a**q``."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if p < q:
        return Fraction(p * (2 * q - p + 1), 2)
    return Fraction(q * (q + 1), 2)


class AdjacencyRelation:
    """Which letters may stand next to each other; symmetric, reflexive."""

    def __init__(self, alphabet: Alphabet, forbidden=()):
        self.alphabet = alphabet
        pairs = set()
        for a, b in forbidden:
            alphabet.check(a + b)
            if a == b:
                raise ValueError(f"a letter is always adjacent to itself: ({a}, {b})")
            pairs.add((a, b))
            pairs.add((b, a))
        self.forbidden = frozenset(pairs)

    @classmethod
    def full(cls, alphabet: Alphabet) -> "AdjacencyRelation":
        return cls(alphabet)

    @classmethod
    def from_json(cls, data: dict) -> "AdjacencyRelation":
        alphabet = Alphabet(data["alphabet"])
        forbidden = [tuple(pair) for pair in data.get("forbidden", [])]
        for pair in forbidden:
            if len(pair) != 2:
                raise ValueError(f"forbidden entries must be letter pairs, got {list(pair)}")
        return cls(alphabet, forbidden)

    @classmethod
    def load(cls, path: str | Path) -> "AdjacencyRelation":
        return cls.from_json(json.loads(Path(path).read_text()))

    def to_json(self) -> dict:
        key = self.alphabet.sort_key
        once = sorted({tuple(sorted(p, key=key)) for p in self.forbidden}, key=lambda p: (key(p[0]), key(p[1])))
        return {"alphabet": self.alphabet.letters, "forbidden": [list(p) for p in once]}

    def allowed(self, a: str, b: str) -> bool:
        return (a, b) not in self.forbidden

    def admissible(self, w: Word) -> bool:
        if not self.forbidden:
            return True
        forbidden = self.forbidden
        return all((w[i], w[i + 1]) not in forbidden for i in range(len(w) - 1))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdjacencyRelation)
            and self.alphabet == other.alphabet
            and self.forbidden == other.forbidden
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.forbidden))

    def __repr__(self) -> str:
        return f"AdjacencyRelation({self.alphabet.letters!r}, forbidden={self.to_json()['forbidden']})"


def adjacency_restricted_insertion(rel: AdjacencyRelation, x: Word, y: Word) -> Polynomial:
    """Simple insertion with every term containing a forbidden pair dropped."""
    for w in (x, y):
        if not rel.admissible(w):
            raise InadmissibleInput(f"word {w!r} contains a forbidden adjacent pair")
    base = simple_insertion(rel.alphabet, x, y)
    return Polynomial._raw(rel.alphabet, {w: c for w, c in base._terms.items() if rel.admissible(w)})


class Kind(enum.Enum):
    SIMPLE = "simple"
    WEIGHTED = "weighted"
    DELTA = "delta"
    SYNC = "sync"
    ADJACENCY = "adjacency"


@dataclass(frozen=True, eq=False)
class InsertionOperator:
    """An insertion product together with the parameters its kind needs."""

    kind: Kind
    weight: WeightFunction | None = None
    relation: AdjacencyRelation | None = None
    _memo: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if (self.kind is Kind.WEIGHTED) != (self.weight is not None):
            raise ValueError("a weight function is required exactly for weighted insertion")
        if (self.kind is Kind.ADJACENCY) != (self.relation is not None):
            raise ValueError("an adjacency relation is required exactly for adjacency insertion")

    @classmethod
    def simple(cls):
        return cls(Kind.SIMPLE)

    @classmethod
    def weighted(cls, f: WeightFunction):
        return cls(Kind.WEIGHTED, weight=f)

    @classmethod
    def delta(cls):
        return cls(Kind.DELTA)

    @classmethod
    def sync(cls):
        return cls(Kind.SYNC)

    @classmethod
    def adjacency(cls, rel: AdjacencyRelation):
        return cls(Kind.ADJACENCY, relation=rel)

    @property
    def description(self) -> str:
        if self.kind is Kind.WEIGHTED:
            return f"weighted[{self.weight.name}]"
        if self.kind is Kind.ADJACENCY:
            forbidden = ",".join(a + b for a, b in self.relation.to_json()["forbidden"])
            return f"adjacency[{self.relation.alphabet.letters};forbidden={forbidden}]"
        return self.kind.value

    def admits_empty(self) -> bool:
        """Whether empty words give non-vacuous products."""
        return self.kind not in (Kind.DELTA, Kind.SYNC)

    def admissible(self, w: Word) -> bool:
        return self.relation.admissible(w) if self.kind is Kind.ADJACENCY else True

    def word_product(self, alphabet: Alphabet, x: Word, y: Word) -> Polynomial:
        key = (alphabet, x, y)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        kind = self.kind
        if kind is Kind.SIMPLE:
            out = simple_insertion(alphabet, x, y)
        elif kind is Kind.WEIGHTED:
            out = weighted_insertion(alphabet, self.weight, x, y)
        elif kind is Kind.DELTA:
            out = delta_restricted_insertion(alphabet, x, y)
        elif kind is Kind.SYNC:
            out = synchronized_insertion(alphabet, x, y)
        else:
            if alphabet != self.relation.alphabet:
                raise AlphabetMismatch(f"{alphabet!r} vs relation over {self.relation.alphabet!r}")
            out = adjacency_restricted_insertion(self.relation, x, y)
        if len(self._memo) < 200_000:
            self._memo[key] = out
        return out


def apply(op: InsertionOperator, p: Polynomial, q: Polynomial) -> Polynomial:
    """Insert ``p`` into ``q``, extended bilinearly."""
    alphabet = p.alphabet
    return bilinear_extend(lambda u, v: op.word_product(alphabet, u, v), p, q)


def right_insertion(op: InsertionOperator, big: Polynomial, small: Polynomial) -> Polynomial:
    """``big . small``: insert ``small`` into ``big`` (argument order reversed)."""
    return apply(op, small, big)
