"""Line-bundle cohomology on X = P^n x P^n x P^m x P^m.

Everything here reduces to two classical facts:

* On a single projective space P^n,

      h^0(O(d)) = C(n+d, n)            for d >= 0,
      h^n(O(d)) = C(-d-1, n)           for d <= -n-1,
      h^i(O(d)) = 0                    otherwise,

  so O(d) has cohomology in at most one degree.

* On a product, the dimensions multiply and the degrees add (Kuenneth):

      h^t(O_X(a,b,c,d)) = sum over p+q+r+s=t of
          h^p(P^n,O(a)) h^q(P^n,O(b)) h^r(P^m,O(c)) h^s(P^m,O(d)).

Direct sums of line bundles are the only sheaves the package ever needs
cohomology of, so a `LineBundleSum` (degrees with multiplicities) plus a
dimension table `CohTable` is the entire data model.  Exterior powers of such
sums are again such sums, with multiplicities given by products of binomial
coefficients; that closure property is what makes the later vanishing scans
finite and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple

from .polyring import MultiDegree, SpaceParams


def bott_h(n: int, d: int, i: int) -> int:
    """h^i(P^n, O(d)), exactly.  Raises ValueError unless 0 <= i <= n."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not isinstance(i, int) or i < 0 or i > n:
        raise ValueError(f"cohomological degree i={i!r} out of range [0, {n}]")
    if i == 0:
        return comb(n + d, n) if d >= 0 else 0
    if i == n:
        return comb(-d - 1, n) if -d - n - 1 >= 0 else 0
    return 0


def kunneth_h(params: SpaceParams, deg: MultiDegree, t: int) -> int:
    """h^t(X, O_X(deg)) via the product formula.  t must lie in [0, 2n+2m]."""
    top = params.dim_x
    if not isinstance(t, int) or t < 0 or t > top:
        raise ValueError(f"cohomological degree t={t!r} out of range [0, {top}]")
    options = _factor_options(params, deg)
    total = 0
    for i1, v1 in options[0]:
        for i2, v2 in options[1]:
            partial = i1 + i2
            if partial > t:
                continue
            for i3, v3 in options[2]:
                for i4, v4 in options[3]:
                    if partial + i3 + i4 == t:
                        total += v1 * v2 * v3 * v4
    return total


def _factor_options(
    params: SpaceParams, deg: MultiDegree
) -> List[List[Tuple[int, int]]]:
    """Per-factor list of (degree, dimension) pairs with nonzero dimension."""
    factors = (
        (params.n, deg.a),
        (params.n, deg.b),
        (params.m, deg.c),
        (params.m, deg.d),
    )
    out: List[List[Tuple[int, int]]] = []
    for dim, d in factors:
        opts: List[Tuple[int, int]] = []
        h0 = comb(dim + d, dim) if d >= 0 else 0
        if h0:
            opts.append((0, h0))
        if -d - dim - 1 >= 0:
            hn = comb(-d - 1, dim)
            if hn:
                opts.append((dim, hn))
        out.append(opts)
    return out


@dataclass(frozen=True)
class CohTable:
    """Dimension table h^0..h^top of some sheaf; length is 2n+2m+1."""

    dims: Tuple[int, ...]

    def h(self, t: int) -> int:
        return self.dims[t]

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def euler(self) -> int:
        return sum((-1) ** i * v for i, v in enumerate(self.dims))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.dims)


class LineBundleSum:
    """A finite direct sum of line bundles O_X(deg)^mult in canonical order.

    Summands are merged and sorted by degree tuple, multiplicities are
    positive; the empty sum (rank 0) is legal.
    """

    __slots__ = ("params", "summands")

    def __init__(self, params: SpaceParams, summands: Iterable[Tuple[MultiDegree, int]] = ()):
        merged: Dict[Tuple[int, int, int, int], int] = {}
        for deg, mult in summands:
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"multiplicity must be a non-negative integer, got {mult!r}")
            if mult:
                key = deg.as_tuple()
                merged[key] = merged.get(key, 0) + mult
        canon = tuple(
            (MultiDegree(*key), merged[key]) for key in sorted(merged.keys())
        )
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "summands", canon)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("LineBundleSum is immutable")

    @property
    def rank(self) -> int:
        return sum(mult for _, mult in self.summands)

    def dual(self) -> "LineBundleSum":
        return LineBundleSum(self.params, [(-deg, mult) for deg, mult in self.summands])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LineBundleSum)
            and self.params == other.params
            and self.summands == other.summands
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        inner = " + ".join(f"O{deg}^{mult}" for deg, mult in self.summands)
        return f"LineBundleSum({inner or '0'})"

    def to_json(self) -> dict:
        return {
            "params": {"n": self.params.n, "m": self.params.m, "k": self.params.k},
            "summands": [
                {"degree": list(deg.as_tuple()), "multiplicity": mult}
                for deg, mult in self.summands
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "LineBundleSum":
        p = data["params"]
        params = SpaceParams(int(p["n"]), int(p["m"]), int(p["k"]))
        summands = [
            (MultiDegree(*[int(v) for v in item["degree"]]), int(item["multiplicity"]))
            for item in data["summands"]
        ]
        return LineBundleSum(params, summands)


def line_bundle(params: SpaceParams, deg: MultiDegree, mult: int = 1) -> LineBundleSum:
    return LineBundleSum(params, [(deg, mult)])


def direct_sum(*sums: LineBundleSum) -> LineBundleSum:
    if not sums:
        raise ValueError("direct_sum of no summands")
    params = sums[0].params
    if any(s.params != params for s in sums):
        raise ValueError("direct_sum: mismatched space parameters")
    items: List[Tuple[MultiDegree, int]] = []
    for s in sums:
        items.extend(s.summands)
    return LineBundleSum(params, items)


def twist(S: LineBundleSum, d: MultiDegree) -> LineBundleSum:
    """Tensor every summand by O_X(d)."""
    return LineBundleSum(S.params, [(deg + d, mult) for deg, mult in S.summands])


def sum_cohomology(S: LineBundleSum) -> CohTable:
    """Full dimension table of a direct sum, additively over summands."""
    top = S.params.dim_x
    dims = [0] * (top + 1)
    for deg, mult in S.summands:
        options = _factor_options(S.params, deg)
        for i1, v1 in options[0]:
            for i2, v2 in options[1]:
                for i3, v3 in options[2]:
                    for i4, v4 in options[3]:
                        dims[i1 + i2 + i3 + i4] += mult * v1 * v2 * v3 * v4
    return CohTable(tuple(dims))


def h0_of_sum(S: LineBundleSum) -> int:
    """Global sections of a direct sum without building the whole table."""
    n, m = S.params.n, S.params.m
    total = 0
    for deg, mult in S.summands:
        a, b, c, d = deg.as_tuple()
        if a < 0 or b < 0 or c < 0 or d < 0:
            continue
        total += mult * comb(n + a, n) * comb(n + b, n) * comb(m + c, m) * comb(m + d, m)
    return total


def exterior_power_sum(S: LineBundleSum, q: int) -> LineBundleSum:
    """Lambda^q of a direct sum of line bundles, again as a LineBundleSum.

    Choosing q_i factors from the i-th summand class contributes a line bundle
    of degree sum(q_i * deg_i) with multiplicity prod(C(mult_i, q_i)); the
    result runs over all compositions q = sum(q_i) with 0 <= q_i <= mult_i.
    Raises ValueError unless 1 <= q <= rank(S).
    """
    if not isinstance(q, int) or q < 1 or q > S.rank:
        raise ValueError(f"exterior power q={q!r} out of range [1, {S.rank}]")
    classes = list(S.summands)
    acc: Dict[Tuple[int, int, int, int], int] = {}

    def descend(idx: int, remaining: int, deg: MultiDegree, mult: int) -> None:
        if remaining == 0:
            key = deg.as_tuple()
            acc[key] = acc.get(key, 0) + mult
            return
        if idx == len(classes):
            return
        cls_deg, cls_mult = classes[idx]
        for take in range(0, min(remaining, cls_mult) + 1):
            descend(
                idx + 1,
                remaining - take,
                deg + cls_deg.scale(take),
                mult * comb(cls_mult, take),
            )

    descend(0, q, MultiDegree(0, 0, 0, 0), 1)
    return LineBundleSum(S.params, [(MultiDegree(*key), m) for key, m in acc.items()])
