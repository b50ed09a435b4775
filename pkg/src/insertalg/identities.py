"""Associators, identity defects and bounded searches for counterexamples."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .errors import SearchSpaceTooLarge
from .operations import AdjacencyRelation, InsertionOperator, apply
from .poly import Polynomial, format_polynomial
from .words import Alphabet, Word, format_word

DEFAULT_CEILING = 10**7


class IdentityKind(enum.Enum):
    LEFT_SYMMETRIC = "left-sym"
    RIGHT_SYMMETRIC = "right-sym"
    ASSOCIATIVE = "assoc"
    COMMUTATIVE = "comm"


def associator(op: InsertionOperator, x: Polynomial, y: Polynomial, z: Polynomial) -> Polynomial:
    """``(x o y) o z - x o (y o z)``."""
    return apply(op, apply(op, x, y), z) - apply(op, x, apply(op, y, z))


def identity_defect(op: InsertionOperator, kind: IdentityKind, alphabet: Alphabet,
                    x: Word, y: Word, z: Word) -> Polynomial:
    """Difference of the two sides of one identity instance; zero iff it holds."""
    X, Y, Z = (Polynomial.word(alphabet, w) for w in (x, y, z))
    if kind is IdentityKind.LEFT_SYMMETRIC:
        return associator(op, X, Y, Z) - associator(op, Y, X, Z)
    if kind is IdentityKind.RIGHT_SYMMETRIC:
        return associator(op, X, Y, Z) - associator(op, X, Z, Y)
    if kind is IdentityKind.ASSOCIATIVE:
        return associator(op, X, Y, Z)
    return apply(op, X, Y) - apply(op, Y, X)


@dataclass
class Witness:
    x: Word
    y: Word
    z: Word
    defect: Polynomial

    def to_json(self) -> dict:
        return {
            "x": format_word(self.x),
            "y": format_word(self.y),
            "z": format_word(self.z),
            "defect": format_polynomial(self.defect),
        }


@dataclass
class IdentityReport:
    op: str
    identity: IdentityKind
    alphabet: str
    max_total_length: int
    mode: str
    tuples_checked: int
    witness: Witness | None = None
    include_empty: bool = True

    @property
    def passed(self) -> bool:
        return self.witness is None

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "identity": self.identity.value,
            "alphabet": self.alphabet,
            "max_len": self.max_total_length,
            "mode": self.mode,
            "include_empty": self.include_empty,
            "passed": self.passed,
            "tuples_checked": self.tuples_checked,
            "witness": self.witness.to_json() if self.witness else None,
        }

    def to_text(self) -> str:
        head = (
            f"{self.op} {self.identity.value} over {self.alphabet!r}, "
            f"total length <= {self.max_total_length} ({self.mode}): "
        )
        if self.passed:
            return head + f"holds on {self.tuples_checked} tuples"
        w = self.witness
        return head + (
            f"fails at x={format_word(w.x)} y={format_word(w.y)} z={format_word(w.z)} "
            f"after {self.tuples_checked} tuples; defect = {format_polynomial(w.defect)}"
        )


def _words_by_length(op: InsertionOperator, alphabet: Alphabet, max_len: int, min_len: int) -> list[list[Word]]:
    return [
        [w for w in alphabet.words(n) if op.admissible(w)] if n >= min_len else []
        for n in range(max_len + 1)
    ]


def count_triples(sizes: list[int], max_total: int) -> int:
    """Number of triples with total length at most ``max_total``; sizes[n] words of length n."""
    total = 0
    for a, b in product(range(len(sizes)), repeat=2):
        if a + b > max_total:
            continue
        total += sizes[a] * sizes[b] * sum(sizes[c] for c in range(max_total - a - b + 1))
    return total


def estimate_triples(alphabet: Alphabet, max_total: int, include_empty: bool = True) -> int:
    lo = 0 if include_empty else 1
    sizes = [len(alphabet) ** n if n >= lo else 0 for n in range(max_total + 1)]
    return count_triples(sizes, max_total)


def enumerate_triples(op: InsertionOperator, alphabet: Alphabet, max_total: int,
                      include_empty: bool = True) -> Iterator[tuple[Word, Word, Word]]:
    """Triples in lexicographic order of (x, y, z), words in length-then-lex order."""
    by_len = _words_by_length(op, alphabet, max_total, 0 if include_empty else 1)
    for lx in range(max_total + 1):
        for x in by_len[lx]:
            for ly in range(max_total - lx + 1):
                for y in by_len[ly]:
                    for lz in range(max_total - lx - ly + 1):
                        for z in by_len[lz]:
                            yield x, y, z


def _random_triples(op: InsertionOperator, alphabet: Alphabet, max_total: int, include_empty: bool,
                    seed: int, trials: int) -> Iterator[tuple[Word, Word, Word]]:
    rng = random.Random(seed)
    lo = 0 if include_empty else 1
    shapes = [
        (a, b, c)
        for a, b, c in product(range(lo, max_total + 1), repeat=3)
        if a + b + c <= max_total
    ]
    if not shapes:
        return
    letters = alphabet.letters
    for _ in range(trials):
        shape = rng.choice(shapes)
        words = []
        for n in shape:
            # rejection sampling keeps the draw uniform over admissible words
            for _attempt in range(1000):
                w = "".join(rng.choice(letters) for _ in range(n))
                if op.admissible(w):
                    break
            else:
                w = None
            words.append(w)
        if None not in words:
            yield tuple(words)


def check_identity(op: InsertionOperator, kind: IdentityKind, alphabet: Alphabet, max_total_length: int,
                   mode: str = "exhaustive", seed: int = 0, trials: int = 1000,
                   include_empty: bool | None = None, ceiling: int = DEFAULT_CEILING) -> IdentityReport:
    """Search for the first triple violating ``kind``.

    Exhaustive mode walks every triple with total length at most
    ``max_total_length`` in a fixed order and stops at the first nonzero
    defect. Random mode draws ``trials`` triples from ``seed``.
    """
    if include_empty is None:
        include_empty = op.admits_empty()
    if mode == "exhaustive":
        if max_total_length < 0:
            raise ValueError("max_total_length must be nonnegative")
        estimate = estimate_triples(alphabet, max_total_length, include_empty)
        if estimate > ceiling:
            raise SearchSpaceTooLarge(estimate, ceiling)
        triples = enumerate_triples(op, alphabet, max_total_length, include_empty)
    elif mode == "random":
        triples = _random_triples(op, alphabet, max_total_length, include_empty, seed, trials)
    else:
        raise ValueError(f"unknown search mode {mode!r}")

    report = IdentityReport(
        op=op.description,
        identity=kind,
        alphabet=alphabet.letters,
        max_total_length=max_total_length,
        mode=mode if mode == "exhaustive" else f"random(seed={seed}, trials={trials})",
        tuples_checked=0,
        include_empty=include_empty,
    )
    for x, y, z in triples:
        report.tuples_checked += 1
        if kind is IdentityKind.LEFT_SYMMETRIC and x == y:
            continue  # defect vanishes identically
        defect = identity_defect(op, kind, alphabet, x, y, z)
        if defect:
            report.witness = Witness(x, y, z, defect)
            break
    return report


@dataclass
class AuditCase:
    case: str
    description: str
    claim: str  # "holds" or "fails"
    report: IdentityReport
    note: str = ""

    @property
    def computed(self) -> str:
        return "holds" if self.report.passed else "fails"

    @property
    def agrees_with_claim(self) -> bool:
        return self.computed == self.claim

    def to_json(self) -> dict:
        out = {
            "case": self.case,
            "description": self.description,
            "claimed": self.claim,
            "computed": self.computed,
            "agrees": self.agrees_with_claim,
            "report": self.report.to_json(),
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class AuditReport:
    theorem: str
    max_total_length: int
    cases: list[AuditCase] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(c.agrees_with_claim for c in self.cases)

    def case(self, name: str) -> AuditCase:
        for c in self.cases:
            if c.case == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "max_len": self.max_total_length,
            "all_agree": self.all_agree,
            "cases": [c.to_json() for c in self.cases],
        }


DIVERGENCE_NOTE = (
    "computation contradicts the claimed associativity: "
    "(a o a) o a = 4*aaa but a o (a o a) = 6*aaa; "
    "mixed-letter products of single letters do vanish on both sides"
)


def audit_adjacency_theorem(max_total_length: int) -> AuditReport:
    """Check each case of the adjacency-restricted classification on nonempty words.

    Every case records the claimed outcome next to the computed one; a
    disagreement is reported, never overridden.
    """
    if max_total_length < 3:
        raise ValueError("max_total_length must be at least 3")
    L = max_total_length
    LS, AS = IdentityKind.LEFT_SYMMETRIC, IdentityKind.ASSOCIATIVE

    def run(letters: str, forbidden, kind: IdentityKind) -> IdentityReport:
        ab = Alphabet(letters)
        op = InsertionOperator.adjacency(AdjacencyRelation(ab, forbidden))
        return check_identity(op, kind, ab, L, include_empty=False)

    report = AuditReport("3.1", L)
    report.cases.append(AuditCase("a", "one letter {a}, full relation: left-symmetric", "holds",
                                  run("a", [], LS)))
    report.cases.append(AuditCase("b", "two letters {a,b}, a-b allowed: left-symmetric", "holds",
                                  run("ab", [], LS)))
    assoc = run("ab", [("a", "b")], AS)
    report.cases.append(AuditCase("b'-assoc", "two letters {a,b}, a-b forbidden: associative", "holds",
                                  assoc, note=DIVERGENCE_NOTE if not assoc.passed else ""))
    report.cases.append(AuditCase("b'-leftsym", "two letters {a,b}, a-b forbidden: left-symmetric", "holds",
                                  run("ab", [("a", "b")], LS)))
    report.cases.append(AuditCase("c", "three letters, path a-b-c (a-c forbidden): left-symmetric", "fails",
                                  run("abc", [("a", "c")], LS)))
    report.cases.append(AuditCase("c-full", "three letters, full relation: left-symmetric", "holds",
                                  run("abc", [], LS)))
    return report
