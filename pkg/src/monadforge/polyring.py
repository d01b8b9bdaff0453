"""Exact multigraded polynomial arithmetic over the integers.

The ambient space throughout the package is the fourfold product

    X = P^n x P^n x P^m x P^m,      dim X = 2n + 2m,

with homogeneous coordinates split into four groups:

    x_0..x_n  on the first factor,
    y_0..y_n  on the second,
    z_0..z_m  on the third,
    t_0..t_m  on the fourth.

Pic(X) = Z^4, so every monomial carries a multidegree (a, b, c, d) counting
total degree in each variable group.  All coefficients are Python ints, so
arithmetic is exact; no floating point enters any code path.

Canonical form: a monomial never stores a zero exponent, a polynomial never
stores a zero coefficient, and terms are kept under a fixed monomial order
(lexicographic on (group, index) with group order x < y < z < t).  Two equal
polynomials therefore have identical representations, which is what makes the
JSON round-trip byte-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

GROUPS: Tuple[str, ...] = ("x", "y", "z", "t")
_GROUP_ORDER: Dict[str, int] = {g: i for i, g in enumerate(GROUPS)}

DEFAULT_PRIME = 2**31 - 1  # Mersenne prime; large enough that random rank drops are negligible


@dataclass(frozen=True)
class SpaceParams:
    """Shape parameters (n, m, k) of the ambient space and the monad family.

    n and m are the projective dimensions of the paired factors, k is the
    number of monad rows/columns.  All three must be >= 1.
    """

    n: int
    m: int
    k: int

    def __post_init__(self) -> None:
        for field in ("n", "m", "k"):
            value = getattr(self, field)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{field} must be a positive integer, got {value!r}")

    @property
    def dim_x(self) -> int:
        return 2 * self.n + 2 * self.m

    def group_dim(self, group: str) -> int:
        """Projective dimension of the factor carrying `group` coordinates."""
        if group in ("x", "y"):
            return self.n
        if group in ("z", "t"):
            return self.m
        raise ValueError(f"unknown variable group {group!r}")


@dataclass(frozen=True)
class Variable:
    """One homogeneous coordinate, identified by its group and index."""

    group: str
    index: int

    def __post_init__(self) -> None:
        if self.group not in _GROUP_ORDER:
            raise ValueError(f"variable group must be one of {GROUPS}, got {self.group!r}")
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"variable index must be a non-negative integer, got {self.index!r}")

    @property
    def name(self) -> str:
        return f"{self.group}{self.index}"

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (_GROUP_ORDER[self.group], self.index)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return self.name


def variable_from_name(name: str) -> Variable:
    """Parse "x0", "t12", ... back into a Variable."""
    if len(name) < 2 or name[0] not in _GROUP_ORDER or not name[1:].isdigit():
        raise ValueError(f"malformed variable name {name!r}")
    return Variable(name[0], int(name[1:]))


def variables_for(params: SpaceParams) -> List[Variable]:
    """All coordinates of X in canonical order."""
    out: List[Variable] = []
    for g in GROUPS:
        for i in range(params.group_dim(g) + 1):
            out.append(Variable(g, i))
    return out


@dataclass(frozen=True)
class MultiDegree:
    """An element of Pic(X) = Z^4, ordered (x-degree, y-degree, z-degree, t-degree)."""

    a: int
    b: int
    c: int
    d: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: "MultiDegree") -> "MultiDegree":
        return MultiDegree(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "MultiDegree") -> "MultiDegree":
        return MultiDegree(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> "MultiDegree":
        return MultiDegree(-self.a, -self.b, -self.c, -self.d)

    def scale(self, r: int) -> "MultiDegree":
        return MultiDegree(r * self.a, r * self.b, r * self.c, r * self.d)

    def min_component(self) -> int:
        return min(self.as_tuple())

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"({self.a},{self.b},{self.c},{self.d})"


ZERO_DEGREE = MultiDegree(0, 0, 0, 0)

_UNIT_DEGREES: Dict[str, MultiDegree] = {
    "x": MultiDegree(1, 0, 0, 0),
    "y": MultiDegree(0, 1, 0, 0),
    "z": MultiDegree(0, 0, 1, 0),
    "t": MultiDegree(0, 0, 0, 1),
}


def unit_degree(group: str) -> MultiDegree:
    return _UNIT_DEGREES[group]


class Monomial:
    """A canonical power product: sorted (Variable, exponent) pairs, exponents >= 1."""

    __slots__ = ("_exps",)

    def __init__(self, exps: Iterable[Tuple[Variable, int]] = ()):
        pairs = [(v, e) for v, e in exps if e != 0]
        for v, e in pairs:
            if e < 0:
                raise ValueError(f"monomial exponent must be non-negative, got {v.name}^{e}")
        pairs.sort(key=lambda ve: ve[0].sort_key)
        names = [v.name for v, _ in pairs]
        if len(set(names)) != len(names):
            raise ValueError("repeated variable in monomial exponent list")
        object.__setattr__(self, "_exps", tuple(pairs))

    @property
    def exps(self) -> Tuple[Tuple[Variable, int], ...]:
        return self._exps

    @staticmethod
    def one() -> "Monomial":
        return _MONOMIAL_ONE

    @staticmethod
    def of(var: Variable, exp: int = 1) -> "Monomial":
        return Monomial([(var, exp)])

    def mul(self, other: "Monomial") -> "Monomial":
        merged: Dict[Variable, int] = dict(self._exps)
        for v, e in other._exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial(merged.items())

    def degree(self) -> MultiDegree:
        totals = {g: 0 for g in GROUPS}
        for v, e in self._exps:
            totals[v.group] += e
        return MultiDegree(totals["x"], totals["y"], totals["z"], totals["t"])

    def total_degree(self) -> int:
        return sum(e for _, e in self._exps)

    def sort_key(self) -> Tuple[Tuple[int, int, int], ...]:
        # Lexicographic on (group, index), exponents breaking ties; enough to
        # give every polynomial a single canonical term order.
        return tuple((v.sort_key[0], v.sort_key[1], -e) for v, e in self._exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return hash(self._exps)

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        parts = []
        for v, e in self._exps:
            parts.append(v.name if e == 1 else f"{v.name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return str(self)


_MONOMIAL_ONE = Monomial()


class Polynomial:
    """A sparse Z-linear combination of monomials.  Immutable by contract.

    The term map never contains a zero coefficient.  Use the module helpers
    x(i), y(i), z(i), t(i) to build coordinate polynomials.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff != 0:
                    clean[mono] = coeff
        object.__setattr__(self, "_terms", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _POLY_ZERO

    @staticmethod
    def constant(c: int) -> "Polynomial":
        return Polynomial({Monomial.one(): c})

    @staticmethod
    def variable(var: Variable) -> "Polynomial":
        return Polynomial({Monomial.of(var): 1})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda tc: tc[0].sort_key())

    def multidegree(self) -> Optional[MultiDegree]:
        """Common multidegree of all terms, or None for 0 / inhomogeneous input."""
        if not self._terms:
            return None
        degs = {mono.degree() for mono in self._terms}
        if len(degs) != 1:
            return None
        return next(iter(degs))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        result = Polynomial.__new__(Polynomial)
        object.__setattr__(result, "_terms", out)
        return result

    def __neg__(self) -> "Polynomial":
        result = Polynomial.__new__(Polynomial)
        object.__setattr__(result, "_terms", {m: -c for m, c in self._terms.items()})
        return result

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1.mul(m2)
                s = out.get(mono, 0) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        result = Polynomial.__new__(Polynomial)
        object.__setattr__(result, "_terms", out)
        return result

    __rmul__ = __mul__

    def scale(self, c: int) -> "Polynomial":
        if c == 0:
            return Polynomial.zero()
        result = Polynomial.__new__(Polynomial)
        object.__setattr__(result, "_terms", {m: c * cf for m, cf in self._terms.items()})
        return result

    def evaluate(self, point: Mapping[Variable, int], prime: int) -> int:
        """Evaluate at a point of F_p^N.  Every variable appearing here must be assigned."""
        total = 0
        for mono, coeff in self._terms.items():
            term = coeff % prime
            for v, e in mono.exps:
                if v not in point:
                    raise KeyError(f"no value assigned to variable {v.name}")
                term = (term * pow(point[v] % prime, e, prime)) % prime
            total = (total + term) % prime
        return total

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self):  # pragma: no cover
        raise TypeError("Polynomial is not hashable")

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: List[str] = []
        for mono, coeff in self.sorted_terms():
            mono_s = str(mono)
            if mono_s == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono_s
            else:
                body = f"{abs(coeff)}*{mono_s}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Polynomial({self})"


_POLY_ZERO = Polynomial()


def x(i: int) -> Polynomial:
    return Polynomial.variable(Variable("x", i))


def y(i: int) -> Polynomial:
    return Polynomial.variable(Variable("y", i))


def z(i: int) -> Polynomial:
    return Polynomial.variable(Variable("z", i))


def t(i: int) -> Polynomial:
    return Polynomial.variable(Variable("t", i))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact product of two polynomials."""
    return p * q


def multidegree_of(p: Polynomial) -> Optional[MultiDegree]:
    """Multidegree of a multihomogeneous polynomial; None for 0 or mixed degrees."""
    return p.multidegree()


class PolyMatrix:
    """A rows x cols matrix of polynomials, stored row-major.

    0 x c and r x 0 matrices are legal (rank 0, empty entry list); they show up
    naturally as degenerate block edges.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Polynomial]):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise ValueError(
                f"entry list has length {len(entries)}, expected {rows}*{cols}={rows * cols}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_entries", tuple(entries))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("PolyMatrix is immutable")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat: List[Polynomial] = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows in matrix literal")
            flat.extend(row)
        return PolyMatrix(r, c, flat)

    @staticmethod
    def zeros(rows: int, cols: int) -> "PolyMatrix":
        return PolyMatrix(rows, cols, [Polynomial.zero()] * (rows * cols))

    def entry(self, i: int, j: int) -> Polynomial:
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> List[Polynomial]:
        return list(self._entries[i * self.cols : (i + 1) * self.cols])

    def iter_entries(self) -> Iterator[Polynomial]:
        return iter(self._entries)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self._entries)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [-p for p in self._entries])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __str__(self) -> str:
        lines = []
        for i in range(self.rows):
            lines.append("[ " + "  ".join(str(p) for p in self.row(i)) + " ]")
        return "\n".join(lines)


def matrix_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    """Exact matrix product; raises ValueError on an inner-dimension mismatch."""
    if A.cols != B.rows:
        raise ValueError(f"dimension mismatch: ({A.rows}x{A.cols}) * ({B.rows}x{B.cols})")
    out: List[Polynomial] = []
    for i in range(A.rows):
        arow = A.row(i)
        for j in range(B.cols):
            acc = Polynomial.zero()
            for l in range(A.cols):
                if not arow[l].is_zero():
                    acc = acc + arow[l] * B.entry(l, j)
            out.append(acc)
    return PolyMatrix(A.rows, B.cols, out)


def hstack(blocks: Sequence[PolyMatrix]) -> PolyMatrix:
    """Concatenate blocks left to right (all row counts must agree)."""
    if not blocks:
        raise ValueError("hstack of no blocks")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ValueError("hstack: row counts differ")
    out: List[Polynomial] = []
    for i in range(rows):
        for b in blocks:
            out.extend(b.row(i))
    return PolyMatrix(rows, sum(b.cols for b in blocks), out)


def vstack(blocks: Sequence[PolyMatrix]) -> PolyMatrix:
    """Concatenate blocks top to bottom (all column counts must agree)."""
    if not blocks:
        raise ValueError("vstack of no blocks")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ValueError("vstack: column counts differ")
    out: List[Polynomial] = []
    for b in blocks:
        out.extend(b.iter_entries())
    return PolyMatrix(sum(b.rows for b in blocks), cols, out)


def evaluate_matrix(
    A: PolyMatrix, point: Mapping[Variable, int], prime: int = DEFAULT_PRIME
) -> List[List[int]]:
    """Evaluate every entry at `point` over F_prime.

    Raises KeyError naming the first variable that has no assigned value.
    """
    return [[A.entry(i, j).evaluate(point, prime) for j in range(A.cols)] for i in range(A.rows)]


def rank_over_field(M: Sequence[Sequence[int]], prime: int) -> int:
    """Rank of an integer matrix over F_prime, by Gaussian elimination.

    The input is not mutated.  A 0 x c or r x 0 matrix has rank 0.
    """
    rows = [list(r) for r in M]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if rows[r][col] % prime != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col] % prime, prime - 2, prime)
        rows[rank] = [(v * inv) % prime for v in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] % prime != 0:
                factor = rows[r][col] % prime
                rows[r] = [(a - factor * b) % prime for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


# ---------------------------------------------------------------------------
# JSON forms.
#
# A polynomial serializes to a list of terms, each {"coeff": "<decimal>",
# "exps": {"x0": 2, ...}}, in canonical term order; coefficients travel as
# decimal strings so arbitrarily large integers survive any JSON reader.
# A matrix serializes to {"rows": r, "cols": c, "entries": [[term-list]]}.
# Serialization and parsing are exact inverses, byte for byte once rendered
# with sorted keys.
# ---------------------------------------------------------------------------


def poly_to_json(p: Polynomial) -> List[dict]:
    out = []
    for mono, coeff in p.sorted_terms():
        out.append(
            {
                "coeff": str(coeff),
                "exps": {v.name: e for v, e in mono.exps},
            }
        )
    return out


def poly_from_json(data: Sequence[Mapping]) -> Polynomial:
    terms: Dict[Monomial, int] = {}
    for item in data:
        coeff = int(item["coeff"])
        mono = Monomial(
            [(variable_from_name(name), int(e)) for name, e in item["exps"].items()]
        )
        terms[mono] = terms.get(mono, 0) + coeff
    return Polynomial(terms)


def matrix_to_json(A: PolyMatrix) -> dict:
    return {
        "rows": A.rows,
        "cols": A.cols,
        "entries": [[poly_to_json(A.entry(i, j)) for j in range(A.cols)] for i in range(A.rows)],
    }


def matrix_from_json(data: Mapping) -> PolyMatrix:
    rows = int(data["rows"])
    cols = int(data["cols"])
    entries = data["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError("matrix JSON has inconsistent shape")
    flat = [poly_from_json(cell) for row in entries for cell in row]
    return PolyMatrix(rows, cols, flat)


def dumps_canonical(doc: object) -> str:
    """Render a JSON document deterministically (sorted keys, fixed separators)."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
