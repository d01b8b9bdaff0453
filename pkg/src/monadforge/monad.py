"""Construction and verification of the linear monads on X = P^n x P^n x P^m x P^m.

For shape parameters (n, m, k) the monad is the complex

    0 -> O_X(-1,-1,-1,-1)^k --f--> G_n (+) G_m --g--> O_X(1,1,1,1)^k -> 0,

    G_n = O_X(0,-1,0,0)^(n+k) (+) O_X(-1,0,0,0)^(n+k),
    G_m = O_X(0,0,-1,0)^(m+k) (+) O_X(0,0,0,-1)^(m+k),

whose maps are stored exactly as displayed: f is the k x (2n+2m+4k) block row

    f = [ f1 | -f2 | f3 | -f4 ],

with Hankel blocks (f1 in the y's, f2 in the x's: k x (n+k); f3 in the t's,
f4 in the z's: k x (m+k)), and g is the (2n+2m+4k) x k block column

    g = [ g1 ; g2 ; g3 ; g4 ],

with Toeplitz blocks (g1 in the x's, g2 in the y's: (n+k) x k; g3 in the z's,
g4 in the t's: (m+k) x k).  The closed entry formulas are

    f-block(i, j)  =  v_{D+k-1-i-j}   when 0 <= D+k-1-i-j <= D, else 0,
    g-block(i, j)  =  v_{i-j}         when 0 <= i-j <= D,       else 0,

where D is n or m as appropriate.  Writing the products out,

    (f1 g1)_{ij} = sum over a+b = n+k-1-i-j, 0<=a,b<=n of  y_a x_b,

which is symmetric under swapping the roles of the two variable groups, so
f1 g1 = f2 g2 and likewise f3 g3 = f4 g4; the interleaved signs in f then give
f g = f1 g1 - f2 g2 + f3 g3 - f4 g4 = 0 identically.  `verify_composition`
checks this symbolically, with no sampling involved.

The other quantitative claim about the family is that both maps have maximal
rank k at every point of X whose four coordinate groups are each nonzero, and
rank 0 only at the (excluded) origin of the affine cone.  `verify_maximal_rank`
certifies this by seeded sampling over a large prime field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .cohomology import LineBundleSum, direct_sum, line_bundle
from .polyring import (
    DEFAULT_PRIME,
    Monomial,
    MultiDegree,
    PolyMatrix,
    Polynomial,
    SpaceParams,
    Variable,
    evaluate_matrix,
    hstack,
    matrix_from_json,
    matrix_mul,
    matrix_to_json,
    rank_over_field,
    unit_degree,
    variables_for,
    vstack,
)

# Variable group carried by each block, in block order 1..4.
F_BLOCK_GROUPS: Tuple[str, ...] = ("y", "x", "t", "z")
G_BLOCK_GROUPS: Tuple[str, ...] = ("x", "y", "z", "t")


def _block_sizes(params: SpaceParams) -> Tuple[int, int, int, int]:
    n, m, k = params.n, params.m, params.k
    return (n + k, n + k, m + k, m + k)


def build_f_block(which: int, params: SpaceParams) -> PolyMatrix:
    """Block `which` (1..4) of f: a k x (D+k) Hankel matrix of coordinates.

    Entry (i, j) is v_{D+k-1-i-j} when that index lies in [0, D], else 0,
    where (v, D) is (y, n), (x, n), (t, m), (z, m) for which = 1..4.
    The sign interleaving belongs to `assemble_monad`, not to the block.
    """
    if which not in (1, 2, 3, 4):
        raise ValueError(f"f-block index must be 1..4, got {which!r}")
    group = F_BLOCK_GROUPS[which - 1]
    D = params.group_dim(group)
    k = params.k
    entries: List[Polynomial] = []
    for i in range(k):
        for j in range(D + k):
            idx = D + k - 1 - i - j
            if 0 <= idx <= D:
                entries.append(Polynomial.variable(Variable(group, idx)))
            else:
                entries.append(Polynomial.zero())
    return PolyMatrix(k, D + k, entries)


def build_g_block(which: int, params: SpaceParams) -> PolyMatrix:
    """Block `which` (1..4) of g: a (D+k) x k Toeplitz matrix of coordinates.

    Entry (i, j) is v_{i-j} when 0 <= i-j <= D, else 0, where (v, D) is
    (x, n), (y, n), (z, m), (t, m) for which = 1..4.  Each block has exactly
    D+k rows; every coordinate slides down one column per step.
    """
    if which not in (1, 2, 3, 4):
        raise ValueError(f"g-block index must be 1..4, got {which!r}")
    group = G_BLOCK_GROUPS[which - 1]
    D = params.group_dim(group)
    k = params.k
    entries: List[Polynomial] = []
    for i in range(D + k):
        for j in range(k):
            idx = i - j
            if 0 <= idx <= D:
                entries.append(Polynomial.variable(Variable(group, idx)))
            else:
                entries.append(Polynomial.zero())
    return PolyMatrix(D + k, k, entries)


def source_bundle(params: SpaceParams) -> LineBundleSum:
    return line_bundle(params, MultiDegree(-1, -1, -1, -1), params.k)


def middle_bundle(params: SpaceParams) -> LineBundleSum:
    """G_n (+) G_m: four line-bundle classes, multiplicities n+k, n+k, m+k, m+k."""
    n, m, k = params.n, params.m, params.k
    return LineBundleSum(
        params,
        [
            (MultiDegree(0, -1, 0, 0), n + k),
            (MultiDegree(-1, 0, 0, 0), n + k),
            (MultiDegree(0, 0, -1, 0), m + k),
            (MultiDegree(0, 0, 0, -1), m + k),
        ],
    )


def target_bundle(params: SpaceParams) -> LineBundleSum:
    return line_bundle(params, MultiDegree(1, 1, 1, 1), params.k)


@dataclass
class MonadSpec:
    """A fully assembled monad: bundle data plus the two displayed matrices."""

    params: SpaceParams
    source: LineBundleSum
    middle: LineBundleSum
    target: LineBundleSum
    f: PolyMatrix
    g: PolyMatrix

    def structural_problems(self) -> List[str]:
        """Shape and homogeneity defects, as human-readable strings.

        Checks, per block: f entries are 0 or degree-1 forms in the block's
        own variable group (y, x, t, z in block order), g entries likewise
        (x, y, z, t), and the bundle labels carry the expected classes.
        Composition and rank are *not* checked here; those are the jobs of
        `verify_composition` and `verify_maximal_rank`.
        """
        problems: List[str] = []
        params = self.params
        k = params.k
        sizes = _block_sizes(params)
        width = sum(sizes)
        if (self.f.rows, self.f.cols) != (k, width):
            problems.append(f"f has shape {self.f.rows}x{self.f.cols}, expected {k}x{width}")
        if (self.g.rows, self.g.cols) != (width, k):
            problems.append(f"g has shape {self.g.rows}x{self.g.cols}, expected {width}x{k}")
        if not problems:
            offsets = [0]
            for s in sizes:
                offsets.append(offsets[-1] + s)
            for b in range(4):
                f_deg = unit_degree(F_BLOCK_GROUPS[b])
                g_deg = unit_degree(G_BLOCK_GROUPS[b])
                for pos in range(offsets[b], offsets[b + 1]):
                    for i in range(k):
                        p = self.f.entry(i, pos)
                        if not p.is_zero() and p.multidegree() != f_deg:
                            problems.append(
                                f"f entry ({i},{pos}) is not a linear form in the "
                                f"block-{b + 1} group {F_BLOCK_GROUPS[b]!r}"
                            )
                    for j in range(k):
                        p = self.g.entry(pos, j)
                        if not p.is_zero() and p.multidegree() != g_deg:
                            problems.append(
                                f"g entry ({pos},{j}) is not a linear form in the "
                                f"block-{b + 1} group {G_BLOCK_GROUPS[b]!r}"
                            )
        if self.source != source_bundle(params):
            problems.append("source bundle label differs from O(-1,-1,-1,-1)^k")
        if self.middle != middle_bundle(params):
            problems.append("middle bundle label differs from the standard four-class sum")
        if self.target != target_bundle(params):
            problems.append("target bundle label differs from O(1,1,1,1)^k")
        return problems

    def to_json(self) -> dict:
        return {
            "params": {"n": self.params.n, "m": self.params.m, "k": self.params.k},
            "source": self.source.to_json(),
            "middle": self.middle.to_json(),
            "target": self.target.to_json(),
            "f": matrix_to_json(self.f),
            "g": matrix_to_json(self.g),
        }

    @staticmethod
    def from_json(data: Mapping) -> "MonadSpec":
        p = data["params"]
        params = SpaceParams(int(p["n"]), int(p["m"]), int(p["k"]))
        return MonadSpec(
            params=params,
            source=LineBundleSum.from_json(data["source"]),
            middle=LineBundleSum.from_json(data["middle"]),
            target=LineBundleSum.from_json(data["target"]),
            f=matrix_from_json(data["f"]),
            g=matrix_from_json(data["g"]),
        )


def assemble_monad(params: SpaceParams) -> MonadSpec:
    """Build the canonical monad for (n, m, k): f = [f1 | -f2 | f3 | -f4], g stacked."""
    f = hstack(
        [
            build_f_block(1, params),
            -build_f_block(2, params),
            build_f_block(3, params),
            -build_f_block(4, params),
        ]
    )
    g = vstack([build_g_block(which, params) for which in (1, 2, 3, 4)])
    return MonadSpec(
        params=params,
        source=source_bundle(params),
        middle=middle_bundle(params),
        target=target_bundle(params),
        f=f,
        g=g,
    )


def verify_composition(spec: MonadSpec) -> bool:
    """Symbolically check that f * g is the k x k zero matrix."""
    return matrix_mul(spec.f, spec.g).is_zero()


def block_products(spec: MonadSpec) -> Tuple[PolyMatrix, PolyMatrix, PolyMatrix, PolyMatrix]:
    """The four k x k products (f1 g1, f2 g2, f3 g3, f4 g4), signs stripped.

    Cancellation happens pairwise: blocks 1 and 2 agree, blocks 3 and 4 agree.
    """
    sizes = _block_sizes(spec.params)
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    out = []
    for b in range(4):
        fcols = range(offsets[b], offsets[b + 1])
        fblock = PolyMatrix(
            spec.params.k,
            sizes[b],
            [spec.f.entry(i, j) for i in range(spec.params.k) for j in fcols],
        )
        if b in (1, 3):  # assembled with a sign; strip it for the identity
            fblock = -fblock
        gblock = PolyMatrix(
            sizes[b],
            spec.params.k,
            [spec.g.entry(i, j) for i in range(offsets[b], offsets[b + 1]) for j in range(spec.params.k)],
        )
        out.append(matrix_mul(fblock, gblock))
    return tuple(out)  # type: ignore[return-value]


@dataclass
class RankReport:
    """Outcome of the sampled maximal-rank certification.

    `maximal` is True iff every sampled point with all four coordinate groups
    nonzero gave rank k for both f and g.  `group_zero_ranks` records, for
    each group zeroed individually (others random), the observed (rank f,
    rank g) pair -- diagnostic only, no pass/fail meaning.
    """

    params: SpaceParams
    prime: int
    trials: int
    seed: int
    rank_f_samples: Tuple[int, ...]
    rank_g_samples: Tuple[int, ...]
    origin_rank_f: int
    origin_rank_g: int
    group_zero_ranks: Dict[str, Tuple[int, int]]
    maximal: bool

    def to_json(self) -> dict:
        return {
            "params": {"n": self.params.n, "m": self.params.m, "k": self.params.k},
            "prime": self.prime,
            "trials": self.trials,
            "seed": self.seed,
            "rank_f_samples": list(self.rank_f_samples),
            "rank_g_samples": list(self.rank_g_samples),
            "origin_rank_f": self.origin_rank_f,
            "origin_rank_g": self.origin_rank_g,
            "group_zero_ranks": {
                g: {"f": fr, "g": gr} for g, (fr, gr) in sorted(self.group_zero_ranks.items())
            },
            "maximal": self.maximal,
        }


def _trial_rng(seed: int, counter: int) -> random.Random:
    # Counter-based derivation: each trial owns an independent generator, so
    # the report is identical no matter how trials are ordered or batched.
    return random.Random((seed & 0xFFFFFFFFFFFF) * (2**20) + counter)


def _sample_point(
    params: SpaceParams, rng: random.Random, prime: int, zero_groups: Sequence[str] = ()
) -> Dict[Variable, int]:
    point: Dict[Variable, int] = {}
    for group in ("x", "y", "z", "t"):
        dim = params.group_dim(group)
        if group in zero_groups:
            for i in range(dim + 1):
                point[Variable(group, i)] = 0
            continue
        coords = [rng.randrange(prime) for _ in range(dim + 1)]
        while all(c == 0 for c in coords):  # keep the group on the cone minus origin
            coords = [rng.randrange(prime) for _ in range(dim + 1)]
        for i, c in enumerate(coords):
            point[Variable(group, i)] = c
    return point


def verify_maximal_rank(
    spec: MonadSpec,
    trials: int = 20,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
) -> RankReport:
    """Sampled certificate that f and g have rank k away from the origin.

    Every trial draws a point of F_prime^N with each coordinate group nonzero
    and records the ranks of f and g there; the all-zeros point and the four
    single-group-zeroed points are evaluated as well (the former must give
    rank 0, the latter are reported as diagnostics).  Raises ValueError if
    trials < 1.
    """
    if not isinstance(trials, int) or trials < 1:
        raise ValueError(f"trials must be a positive integer, got {trials!r}")
    k = spec.params.k
    rank_f: List[int] = []
    rank_g: List[int] = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        point = _sample_point(spec.params, rng, prime)
        rank_f.append(rank_over_field(evaluate_matrix(spec.f, point, prime), prime))
        rank_g.append(rank_over_field(evaluate_matrix(spec.g, point, prime), prime))

    origin = {v: 0 for v in variables_for(spec.params)}
    origin_f = rank_over_field(evaluate_matrix(spec.f, origin, prime), prime)
    origin_g = rank_over_field(evaluate_matrix(spec.g, origin, prime), prime)

    group_zero: Dict[str, Tuple[int, int]] = {}
    for gi, group in enumerate(("x", "y", "z", "t")):
        rng = _trial_rng(seed, 10**6 + gi)
        point = _sample_point(spec.params, rng, prime, zero_groups=(group,))
        group_zero[group] = (
            rank_over_field(evaluate_matrix(spec.f, point, prime), prime),
            rank_over_field(evaluate_matrix(spec.g, point, prime), prime),
        )

    maximal = all(r == k for r in rank_f) and all(r == k for r in rank_g)
    return RankReport(
        params=spec.params,
        prime=prime,
        trials=trials,
        seed=seed,
        rank_f_samples=tuple(rank_f),
        rank_g_samples=tuple(rank_g),
        origin_rank_f=origin_f,
        origin_rank_g=origin_g,
        group_zero_ranks=group_zero,
        maximal=maximal,
    )


@dataclass(frozen=True)
class FloystadInput:
    """Multiplicities (a, b, c) of a linear monad on P^k.

    a, b, c count the O(-1), O, and O(1) summands; k is the dimension of the
    ambient projective space.
    """

    a: int
    b: int
    c: int
    k: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(
                    f"{name} must be a non-negative integer, got {value!r}"
                )
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    def check(self) -> bool:
        return floystad_check(self.a, self.b, self.c, self.k)


def floystad_check(a: int, b: int, c: int, k: int) -> bool:
    """Existence test for linear monads O(-1)^a -> O^b -> O(1)^c on P^k.

    Here a, b, c are bundle multiplicities (non-negative) and k >= 1 is the
    dimension of the ambient projective space.  The monad exists, with maps
    of maximal rank everywhere, iff

        (b >= 2c + k - 1  and  b >= a + c)   or   b >= a + c + k.

    Both branches are monotone in b: once satisfiable, raising b keeps it so.
    """
    inp = FloystadInput(a, b, c, k)
    return (inp.b >= 2 * inp.c + inp.k - 1 and inp.b >= inp.a + inp.c) or (
        inp.b >= inp.a + inp.c + inp.k
    )
