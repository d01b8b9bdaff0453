"""Long-exact-sequence dimension propagation and the simplicity certificate.

A short exact sequence of sheaves 0 -> A -> B -> C -> 0 induces the long
exact cohomology sequence

    ... -> H^i(A) -> H^i(B) -> H^i(C) -> H^{i+1}(A) -> ...

Knowing two of the three dimension tables pins the third one down to an
interval, using nothing but rank-nullity at each node (connecting maps are
never computable from dimensions alone, and are never needed here):

    unknown C:  h^i(C) <= h^i(B) + h^{i+1}(A)
                h^i(C) >= max(h^i(B) - h^i(A), h^{i+1}(A) - h^{i+1}(B), 0)
    unknown A:  h^i(A) <= h^{i-1}(C) + h^i(B)
                h^i(A) >= max(h^{i-1}(C) - h^{i-1}(B), h^i(B) - h^i(C), 0)
    unknown B:  h^i(B) <= h^i(A) + h^i(C)
                h^i(B) >= max(h^i(A) - h^{i-1}(C), h^i(C) - h^{i+1}(A), 0)

(out-of-range indices contribute 0).  When every interval collapses the
answer is exact — that is precisely what happens in the vanishing deductions
this module exists for.

The simplicity certificate chains two computable facts about the monad
bundles: the vanishing scan for T (stability of T implies T is simple, so
h^0(T (x) T*) = 1), and the collapse of h^0 and h^1 of T*(-1,-1,-1,-1) via
the twisted dual of the defining sequence 0 -> T -> G_n (+) G_m ->
O(1,1,1,1)^k -> 0.  Together these bound 1 <= h^0(E (x) E*) <= h^0(T (x) T*)
= 1 for the cohomology bundle E, which is the simplicity statement; the
tensor-product cohomology itself is deliberately never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .cohomology import (
    CohTable,
    LineBundleSum,
    line_bundle,
    sum_cohomology,
    twist,
)
from .monad import middle_bundle
from .polyring import MultiDegree, SpaceParams
from .stability import StabilityReport, StabilityScanConfig, default_scan_config, run_stability_scan

EXACT = "exact"
UNKNOWN = "unknown"
INTERVAL = "interval"


@dataclass(frozen=True)
class CohProfile:
    """What is known about one member's cohomology table.

    kind is "exact" (table set), "unknown" (nothing known yet) or "interval"
    (per-degree [lo, hi] bounds with 0 <= lo <= hi).
    """

    kind: str
    table: Optional[CohTable] = None
    intervals: Optional[Tuple[Tuple[int, int], ...]] = None

    def __post_init__(self) -> None:
        if self.kind not in (EXACT, UNKNOWN, INTERVAL):
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if self.kind == EXACT and self.table is None:
            raise ValueError("exact profile requires a table")
        if self.kind == INTERVAL:
            if self.intervals is None:
                raise ValueError("interval profile requires intervals")
            for lo, hi in self.intervals:
                if not (0 <= lo <= hi):
                    raise ValueError(f"malformed interval [{lo}, {hi}]")

    @staticmethod
    def exact(table: CohTable) -> "CohProfile":
        return CohProfile(EXACT, table=table)

    @staticmethod
    def unknown() -> "CohProfile":
        return CohProfile(UNKNOWN)

    @staticmethod
    def interval(pairs: List[Tuple[int, int]]) -> "CohProfile":
        return CohProfile(INTERVAL, intervals=tuple((lo, hi) for lo, hi in pairs))

    @staticmethod
    def of_sum(S: LineBundleSum) -> "CohProfile":
        return CohProfile.exact(sum_cohomology(S))

    def bounds(self, i: int, top: int) -> Tuple[int, int]:
        """[lo, hi] for h^i, with 0 outside [0, top]."""
        if i < 0 or i > top:
            return (0, 0)
        if self.kind == EXACT:
            v = self.table.dims[i]
            return (v, v)
        if self.kind == INTERVAL:
            return self.intervals[i]
        raise ValueError("bounds of an unknown profile are undefined")

    def to_json(self) -> dict:
        if self.kind == EXACT:
            return {"kind": EXACT, "dims": list(self.table.dims)}
        if self.kind == INTERVAL:
            return {"kind": INTERVAL, "intervals": [list(p) for p in self.intervals]}
        return {"kind": UNKNOWN}


@dataclass(frozen=True)
class ShortExactSeq:
    """Profiles for 0 -> left -> middle -> right -> 0 on a space with dim 2n+2m."""

    left: CohProfile
    middle: CohProfile
    right: CohProfile
    dim_top: int

    def __post_init__(self) -> None:
        if self.dim_top < 1:
            raise ValueError("dim_top must be positive")
        for name, prof in (("left", self.left), ("middle", self.middle), ("right", self.right)):
            if prof.kind == EXACT and len(prof.table.dims) != self.dim_top + 1:
                raise ValueError(f"{name} table length does not match dim_top+1")
        unknowns = sum(
            1 for prof in (self.left, self.middle, self.right) if prof.kind == UNKNOWN
        )
        if unknowns > 1:
            raise ValueError("at most one profile may be unknown")

    def unknown_slot(self) -> str:
        slots = [
            name
            for name, prof in (("left", self.left), ("middle", self.middle), ("right", self.right))
            if prof.kind == UNKNOWN
        ]
        if len(slots) != 1:
            raise ValueError(
                f"exactly one member must be unknown to propagate; found {len(slots)}"
            )
        return slots[0]


def les_propagate(seq: ShortExactSeq) -> ShortExactSeq:
    """Replace the single unknown profile with per-degree intervals.

    Bounds come from exactness alone (see module docstring).  If every
    interval collapses to a point the result is reported as an exact table.
    Raises ValueError unless exactly one member is unknown.
    """
    slot = seq.unknown_slot()
    top = seq.dim_top
    A, B, C = seq.left, seq.middle, seq.right

    def lo_a(i: int) -> int:
        return A.bounds(i, top)[0]

    def hi_a(i: int) -> int:
        return A.bounds(i, top)[1]

    def lo_b(i: int) -> int:
        return B.bounds(i, top)[0]

    def hi_b(i: int) -> int:
        return B.bounds(i, top)[1]

    def lo_c(i: int) -> int:
        return C.bounds(i, top)[0]

    def hi_c(i: int) -> int:
        return C.bounds(i, top)[1]

    pairs: List[Tuple[int, int]] = []
    for i in range(top + 1):
        if slot == "right":
            hi = hi_b(i) + hi_a(i + 1)
            lo = max(lo_b(i) - hi_a(i), lo_a(i + 1) - hi_b(i + 1), 0)
        elif slot == "left":
            hi = hi_c(i - 1) + hi_b(i)
            lo = max(lo_c(i - 1) - hi_b(i - 1), lo_b(i) - hi_c(i), 0)
        else:  # middle
            hi = hi_a(i) + hi_c(i)
            lo = max(lo_a(i) - hi_c(i - 1), lo_c(i) - hi_a(i + 1), 0)
        pairs.append((lo, hi))

    if all(lo == hi for lo, hi in pairs):
        new_prof = CohProfile.exact(CohTable(tuple(lo for lo, _ in pairs)))
    else:
        new_prof = CohProfile.interval(pairs)
    replaced = {
        "left": seq.left,
        "middle": seq.middle,
        "right": seq.right,
    }
    replaced[slot] = new_prof
    return ShortExactSeq(replaced["left"], replaced["middle"], replaced["right"], top)


def rank_of_E(params: SpaceParams) -> int:
    """Rank of the cohomology bundle E = H(monad): middle rank minus both end ranks.

    Computed as rank(G_n (+) G_m) - 2k and cross-checked against the closed
    form 2n + 2m + 2k (equivalently rank(T) - k).
    """
    w = middle_bundle(params).rank
    k = params.k
    via_ranks = w - 2 * k
    closed = 2 * params.n + 2 * params.m + 2 * k
    if via_ranks != closed:  # pragma: no cover - arithmetic identity
        raise AssertionError(f"rank formulas disagree: {via_ranks} vs {closed}")
    return closed


@dataclass(frozen=True)
class SimplicityCertificate:
    """Audit record of the simplicity argument for E.

    conclusion is "SIMPLE_CERTIFIED" only when the vanishing scan passed
    (t_stable) and both h^0 and h^1 of T*(-1,-1,-1,-1) collapsed to [0,0];
    otherwise "INCONCLUSIVE" with a reason.  The final inequality chain
    1 <= h^0(E (x) E*) <= h^0(T (x) T*) = 1 is recorded, not recomputed.
    """

    params: SpaceParams
    rank_E: int
    h0_T_dual_twisted: Tuple[int, int]
    h1_T_dual_twisted: Tuple[int, int]
    t_stable: bool
    stability: StabilityReport
    sequence: ShortExactSeq
    conclusion: str
    reason: Optional[str] = None

    def to_json(self, include_scan_rows: bool = False) -> dict:
        return {
            "params": {"n": self.params.n, "m": self.params.m, "k": self.params.k},
            "rank_E": self.rank_E,
            "h0_T_dual_twisted": list(self.h0_T_dual_twisted),
            "h1_T_dual_twisted": list(self.h1_T_dual_twisted),
            "t_stable": self.t_stable,
            "stability": self.stability.to_json(include_checked=include_scan_rows),
            "sequence": {
                "left": self.sequence.left.to_json(),
                "middle": self.sequence.middle.to_json(),
                "right": self.sequence.right.to_json(),
                "dim_top": self.sequence.dim_top,
            },
            "conclusion": self.conclusion,
            "reason": self.reason,
            "argument": (
                "T stable => T simple => h0(T x T*) = 1; vanishing of h0 and h1 of "
                "T*(-1,-1,-1,-1) lifts sections along the twisted dual sequence, "
                "giving 1 <= h0(E x E*) <= h0(E x T*) = h0(T x T*) = 1"
            ),
        }


def twisted_dual_sequence(params: SpaceParams) -> ShortExactSeq:
    """The (-1,-1,-1,-1)-twist of the dual of 0 -> T -> G -> O(1,1,1,1)^k -> 0.

    Dualizing and twisting gives

        0 -> O(-2,-2,-2,-2)^k -> G^(-1,-1,-1,-1)-dual-twist -> T*(-1,-1,-1,-1) -> 0,

    where the middle is the summand-wise dual of G_n (+) G_m twisted by
    (-1,-1,-1,-1).  Left and middle are sums of line bundles with exact
    tables; the right member is the unknown the certificate solves for.
    """
    shift = MultiDegree(-1, -1, -1, -1)
    left = line_bundle(params, MultiDegree(-2, -2, -2, -2), params.k)
    middle = twist(middle_bundle(params).dual(), shift)
    return ShortExactSeq(
        left=CohProfile.of_sum(left),
        middle=CohProfile.of_sum(middle),
        right=CohProfile.unknown(),
        dim_top=params.dim_x,
    )


def simplicity_certificate(
    params: SpaceParams, scan_cfg: Optional[StabilityScanConfig] = None
) -> SimplicityCertificate:
    """Run the vanishing scan and the LES collapse; gate the conclusion on both.

    scan_cfg defaults to `default_scan_config(params)`.  A scan verdict other
    than ALL_VANISH yields INCONCLUSIVE with reason "stability scan failed";
    intervals that fail to collapse to [0,0] yield INCONCLUSIVE as well.
    """
    if scan_cfg is None:
        scan_cfg = default_scan_config(params)
    elif scan_cfg.params != params:
        raise ValueError("scan_cfg is configured for different space parameters")

    report = run_stability_scan(scan_cfg)
    t_stable = report.all_vanish

    seq = les_propagate(twisted_dual_sequence(params))
    h0 = seq.right.bounds(0, seq.dim_top)
    h1 = seq.right.bounds(1, seq.dim_top)

    if not t_stable:
        conclusion, reason = "INCONCLUSIVE", "stability scan failed"
    elif h0 != (0, 0) or h1 != (0, 0):
        conclusion, reason = (
            "INCONCLUSIVE",
            "cohomology intervals of T*(-1,-1,-1,-1) did not collapse to zero",
        )
    else:
        conclusion, reason = "SIMPLE_CERTIFIED", None

    return SimplicityCertificate(
        params=params,
        rank_E=rank_of_E(params),
        h0_T_dual_twisted=h0,
        h1_T_dual_twisted=h1,
        t_stable=t_stable,
        stability=report,
        sequence=seq,
        conclusion=conclusion,
        reason=reason,
    )
