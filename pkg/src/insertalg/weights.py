"""Weight functions ``f(m, n)`` for length-weighted insertion.

A weight function makes weighted insertion left-symmetric exactly when, for
all lengths ``m, n, p``::

    f(m, n) f(m+n, p) == f(n, p) f(m, n+p) == f(m, p) f(n, m+p)

The three products are called ``lhs``, ``mid`` and ``rhs`` below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Callable, Mapping

from .coefficients import ONE, ZERO, Coefficient, Scalar, format_coefficient, parse_coefficient
from .errors import BoundTooLarge, OutOfDomain


class WeightFunction:
    """Base class; subclasses implement :meth:`value`."""

    lower: int = 0
    upper: int | None = None  # None: defined on all of N x N

    def value(self, m: int, n: int) -> Coefficient:
        raise NotImplementedError

    def __call__(self, m: int, n: int) -> Coefficient:
        if m < self.lower or n < self.lower:
            raise OutOfDomain(f"f({m}, {n}) below domain start {self.lower}")
        if self.upper is not None and (m > self.upper or n > self.upper):
            raise OutOfDomain(f"f({m}, {n}) outside table bound {self.upper}")
        return self.value(m, n)

    def in_domain(self, *args: int) -> bool:
        return all(a >= self.lower and (self.upper is None or a <= self.upper) for a in args)

    @property
    def name(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantWeight(WeightFunction):
    constant: Coefficient = ONE

    def value(self, m, n):
        return self.constant

    @property
    def name(self):
        return f"const:{format_coefficient(self.constant)}"


@dataclass(frozen=True)
class ExpBilinear(WeightFunction):
    """``f(m, n) = t**(m*n)``, i.e. ``exp(k*m*n)`` with ``t = e**k``."""

    def value(self, m, n):
        return Coefficient.monomial(1, m * n)

    @property
    def name(self):
        return "exp"


@dataclass(frozen=True)
class ParityWeight(WeightFunction):
    """1 when both lengths are odd, else 0."""

    def value(self, m, n):
        return ONE if (m % 2 == 1 and n % 2 == 1) else ZERO

    @property
    def name(self):
        return "parity"


class TableWeight(WeightFunction):
    """Explicit values on the square ``[lower, upper]**2``."""

    def __init__(self, upper: int, entries, lower: int = 0, label: str = "table"):
        self.upper = upper
        self.lower = lower
        self.label = label
        self.entries = tuple(sorted((tuple(k), Coefficient.coerce(v)) for k, v in entries))
        self._lookup = dict(self.entries)
        missing = [
            (m, n)
            for m, n in product(range(lower, upper + 1), repeat=2)
            if (m, n) not in self._lookup
        ]
        if missing:
            raise ValueError(f"weight table is missing entries, first {missing[0]}")

    def __eq__(self, other):
        if not isinstance(other, TableWeight):
            return NotImplemented
        return (self.upper, self.lower, self.entries) == (other.upper, other.lower, other.entries)

    def __hash__(self):
        return hash((self.upper, self.lower, self.entries))

    def __repr__(self):
        return f"TableWeight(upper={self.upper}, lower={self.lower}, label={self.label!r})"

    @classmethod
    def from_mapping(cls, upper: int, values: Mapping[tuple[int, int], Coefficient | Scalar],
                     lower: int = 0, label: str = "table") -> "TableWeight":
        return cls(upper, values.items(), lower=lower, label=label)

    @classmethod
    def from_function(cls, fn: Callable[[int, int], Coefficient | Scalar], upper: int,
                      lower: int = 0, label: str = "table") -> "TableWeight":
        values = {(m, n): fn(m, n) for m, n in product(range(lower, upper + 1), repeat=2)}
        return cls.from_mapping(upper, values, lower=lower, label=label)

    def value(self, m, n):
        return self._lookup[(m, n)]

    @property
    def name(self):
        return self.label

    def to_json(self) -> dict:
        data = {
            "N": self.upper,
            "entries": [[m, n, format_coefficient(c)] for (m, n), c in self.entries],
        }
        if self.lower:
            data["lower"] = self.lower
        return data


def load_table(path: str | Path) -> TableWeight:
    """Read ``{"N": 4, "entries": [[m, n, "coeff-text"], ...]}``."""
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or "N" not in data or "entries" not in data:
        raise ValueError(f"{path}: expected an object with 'N' and 'entries'")
    upper = int(data["N"])
    lower = int(data.get("lower", 0))
    values = {}
    for entry in data["entries"]:
        m, n, text = entry
        values[(int(m), int(n))] = parse_coefficient(str(text))
    return TableWeight.from_mapping(upper, values, lower=lower, label=f"table:{path}")


def eval_f(f: WeightFunction, m: int, n: int) -> Coefficient:
    return f(m, n)


@dataclass
class Violation:
    m: int
    n: int
    p: int
    lhs: Coefficient
    mid: Coefficient
    rhs: Coefficient

    @property
    def failed(self) -> list[str]:
        """Which links of the chain ``lhs == mid == rhs`` broke."""
        out = []
        if self.lhs != self.mid:
            out.append("lhs!=mid")
        if self.mid != self.rhs:
            out.append("mid!=rhs")
        if self.lhs != self.rhs:
            out.append("lhs!=rhs")
        return out

    def to_json(self) -> dict:
        return {
            "m": self.m, "n": self.n, "p": self.p,
            "lhs": format_coefficient(self.lhs),
            "mid": format_coefficient(self.mid),
            "rhs": format_coefficient(self.rhs),
            "failed": self.failed,
        }


@dataclass
class FGridReport:
    f: str
    bound: int
    violations: list[Violation]
    checked: int
    clamped: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def violated_triples(self) -> set[tuple[int, int, int]]:
        return {(v.m, v.n, v.p) for v in self.violations}

    def to_json(self) -> dict:
        return {
            "f": self.f,
            "bound": self.bound,
            "passed": self.passed,
            "checked": self.checked,
            "clamped": self.clamped,
            "violations": [v.to_json() for v in self.violations],
        }


def chain_products(f: WeightFunction, m: int, n: int, p: int) -> tuple[Coefficient, Coefficient, Coefficient]:
    lhs = f(m, n) * f(m + n, p)
    mid = f(n, p) * f(m, n + p)
    rhs = f(m, p) * f(n, m + p)
    return lhs, mid, rhs


def check_f_equations(f: WeightFunction, bound: int) -> FGridReport:
    """Check the three-way product chain for all ``m, n, p`` in ``[lower, bound]``.

    Table functions only cover their declared square, so triples whose sums
    leave it are skipped and counted in ``clamped``.
    """
    violations = []
    checked = clamped = 0
    rng = range(f.lower, bound + 1)
    for m, n, p in product(rng, repeat=3):
        if not f.in_domain(m, n, p, m + n, n + p, m + p):
            if f.upper is None:
                raise OutOfDomain(f"triple ({m}, {n}, {p}) outside the domain of {f.name}")
            clamped += 1
            continue
        checked += 1
        lhs, mid, rhs = chain_products(f, m, n, p)
        if not (lhs == mid == rhs):
            violations.append(Violation(m, n, p, lhs, mid, rhs))
    return FGridReport(f.name, bound, violations, checked, clamped)


@dataclass
class SymmetryReport:
    f: str
    bound: int
    witnesses: list[tuple[int, int]]

    @property
    def symmetric(self) -> bool:
        return not self.witnesses

    def to_json(self) -> dict:
        return {
            "f": self.f,
            "bound": self.bound,
            "symmetric": self.symmetric,
            "witnesses": [list(w) for w in self.witnesses],
        }


def check_f_symmetry(f: WeightFunction, bound: int) -> SymmetryReport:
    """Pairs ``m < n`` in ``[1, bound]`` with ``f(m, n) != f(n, m)``."""
    witnesses = [
        (m, n)
        for m in range(1, bound + 1)
        for n in range(m + 1, bound + 1)
        if f(m, n) != f(n, m)
    ]
    return SymmetryReport(f.name, bound, witnesses)


def compute_H(f: WeightFunction, m: int, n: int, p: int) -> tuple[Coefficient, Coefficient, Coefficient]:
    """Return ``(H, H1, H2)`` with ``H1 = f(m,n) f(m+n,p)``, ``H2 = f(n,p) f(m,n+p)``."""
    h1 = f(m, n) * f(m + n, p)
    h2 = f(n, p) * f(m, n + p)
    return h1 - h2, h1, h2


MAX_BINARY_BOUND = 4


def checkable_triples(bound: int) -> list[tuple[int, int, int]]:
    """Triples in ``[1, bound]**3`` whose pairwise sums stay within ``bound``."""
    return [
        (m, n, p)
        for m, n, p in product(range(1, bound + 1), repeat=3)
        if m + n <= bound and n + p <= bound and m + p <= bound
    ]


def enumerate_binary_f(bound: int) -> list[TableWeight]:
    """All {0,1}-valued tables on ``[1, bound]**2`` satisfying the chain.

    Only triples from :func:`checkable_triples` constrain the table, so a
    returned table is consistent on those triples and nothing more is claimed.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if bound > MAX_BINARY_BOUND:
        raise BoundTooLarge(f"2**{bound * bound} tables is too many; max bound is {MAX_BINARY_BOUND}")
    cells = list(product(range(1, bound + 1), repeat=2))
    triples = checkable_triples(bound)
    found = []
    for bits in product((0, 1), repeat=len(cells)):
        v = dict(zip(cells, bits))
        if all(
            v[m, n] * v[m + n, p] == v[n, p] * v[m, n + p] == v[m, p] * v[n, m + p]
            for m, n, p in triples
        ):
            found.append(TableWeight.from_mapping(bound, v, lower=1, label="binary"))
    return found
