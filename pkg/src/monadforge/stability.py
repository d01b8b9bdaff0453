"""Hoppe-criterion vanishing scan for the kernel bundle T = ker(g).

T itself is not a direct sum of line bundles, so h^0(Lambda^q T(twist)) is
not directly computable here.  What the scan uses instead is the injection

    0 -> Lambda^q T(twist) -> Lambda^q (G_n (+) G_m)(twist)

coming from T being a subbundle of the middle term: the right-hand side IS a
sum of line bundles, its h^0 is exact and cheap, and it dominates the left.
Whenever the upper bound is 0 the desired vanishing is certified.

The stability criterion needs h^0(Lambda^q T(-p1,-p2,-p3,-p4)) = 0 for
1 <= q <= rank(T) - 1 and all twists with non-negative weight sum.  The scan
walks the finite box |p_i| <= component_bound, 0 <= sum(p_i) <= max_psum
(configurable, including sums below zero for adversarial probing) and records
every upper bound; the unbounded directions are covered by the structural
fact — testable summand by summand — that every twisted exterior-power
summand keeps a strictly negative degree component whenever sum(p_i) >= 0.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import ceil, comb
from typing import Iterator, List, Optional, Sequence, Tuple

from .chow import BundleInvariants, delta_L, rank_of_T
from .cohomology import LineBundleSum, exterior_power_sum
from .monad import middle_bundle
from .polyring import MultiDegree, SpaceParams

THREADS_ENV_VAR = "MONADFORGE_THREADS"


def _thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def normalization_shift(inv: BundleInvariants, params: SpaceParams) -> int:
    """The unique integer k_E = ceil(mu_L / d), d = delta_L(1,0,0,0).

    Twisting by -k_E in the first slot renormalizes the slope into (-d, 0];
    exact Fraction arithmetic, no floats.
    """
    d = delta_L(MultiDegree(1, 0, 0, 0), params)
    return ceil(inv.slope_L / d)


def h0_wedge_T_upper(params: SpaceParams, q: int, tw: MultiDegree) -> int:
    """Exact h^0(Lambda^q(G_n (+) G_m)(tw)), an upper bound for h^0(Lambda^q T(tw)).

    Valid for 1 <= q <= rank(G_n (+) G_m) = 2n+2m+4k; the stability scan only
    ever uses q < rank(T), but the determinant-line top power is legal too.
    """
    middle = middle_bundle(params)
    if not isinstance(q, int) or q < 1 or q > middle.rank:
        raise ValueError(f"exterior power q={q!r} out of range [1, {middle.rank}]")
    wedge = exterior_power_sum(middle, q)
    return _h0_twisted(params, _flat_summands(wedge), tw.as_tuple())


def _flat_summands(S: LineBundleSum) -> List[Tuple[int, int, int, int, int]]:
    return [(deg.a, deg.b, deg.c, deg.d, mult) for deg, mult in S.summands]


def _h0_twisted(
    params: SpaceParams,
    flat: Sequence[Tuple[int, int, int, int, int]],
    tw: Tuple[int, int, int, int],
) -> int:
    """h^0 of a twisted sum from pre-flattened summands, with early exits."""
    n, m = params.n, params.m
    ta, tb, tc, td = tw
    total = 0
    for a, b, c, d, mult in flat:
        da = a + ta
        if da < 0:
            continue
        db = b + tb
        if db < 0:
            continue
        dc = c + tc
        if dc < 0:
            continue
        dd = d + td
        if dd < 0:
            continue
        total += mult * comb(n + da, n) * comb(n + db, n) * comb(m + dc, m) * comb(m + dd, m)
    return total


@dataclass(frozen=True)
class StabilityScanConfig:
    """Finite scan box: q in [1, max_q], |p_i| <= component_bound,
    min_psum <= p1+p2+p3+p4 <= max_psum.

    min_psum defaults to 0 (the regime the criterion needs); setting it
    negative deliberately walks outside that regime, where nonzero h^0 values
    exist and the scan must report a counterexample rather than a pass.
    """

    params: SpaceParams
    max_q: int
    max_psum: int = 4
    component_bound: int = 4
    min_psum: int = 0

    def __post_init__(self) -> None:
        rank_t = rank_of_T(self.params)
        if not (1 <= self.max_q <= rank_t - 1):
            raise ValueError(
                f"max_q must lie in [1, rank(T)-1] = [1, {rank_t - 1}], got {self.max_q}"
            )
        if self.max_psum < 0 or self.component_bound < 0:
            raise ValueError("max_psum and component_bound must be non-negative")
        if self.min_psum > self.max_psum:
            raise ValueError("min_psum exceeds max_psum")

    def to_json(self) -> dict:
        return {
            "params": {"n": self.params.n, "m": self.params.m, "k": self.params.k},
            "max_q": self.max_q,
            "max_psum": self.max_psum,
            "component_bound": self.component_bound,
            "min_psum": self.min_psum,
        }


def default_scan_config(
    params: SpaceParams,
    max_q: Optional[int] = None,
    max_psum: int = 4,
    component_bound: int = 4,
    min_psum: int = 0,
) -> StabilityScanConfig:
    if max_q is None:
        max_q = min(8, rank_of_T(params) - 1)
    return StabilityScanConfig(
        params=params,
        max_q=max_q,
        max_psum=max_psum,
        component_bound=component_bound,
        min_psum=min_psum,
    )


def enumerate_twists(cfg: StabilityScanConfig) -> Iterator[MultiDegree]:
    """All twists (-p1,-p2,-p3,-p4) in the box, in lexicographic p-order."""
    cb = cfg.component_bound
    lo, hi = cfg.min_psum, cfg.max_psum
    for p1 in range(-cb, cb + 1):
        for p2 in range(-cb, cb + 1):
            for p3 in range(-cb, cb + 1):
                s3 = p1 + p2 + p3
                # p4 in [-cb, cb] and lo <= s3 + p4 <= hi
                for p4 in range(max(-cb, lo - s3), min(cb, hi - s3) + 1):
                    yield MultiDegree(-p1, -p2, -p3, -p4)


@dataclass(frozen=True)
class StabilityReport:
    """Every (q, twist, h0) probed, plus the verdict.

    verdict is "ALL_VANISH" iff every recorded upper bound is zero, else
    "COUNTEREXAMPLE" with the first offending (q, twist) in scan order.
    """

    config: StabilityScanConfig
    checked: Tuple[Tuple[int, MultiDegree, int], ...]
    verdict: str
    counterexample: Optional[Tuple[int, MultiDegree]] = None

    @property
    def all_vanish(self) -> bool:
        return self.verdict == "ALL_VANISH"

    def to_json(self, include_checked: bool = True) -> dict:
        doc = {
            "config": self.config.to_json(),
            "entries_checked": len(self.checked),
            "verdict": self.verdict,
            "counterexample": (
                None
                if self.counterexample is None
                else {
                    "q": self.counterexample[0],
                    "twist": list(self.counterexample[1].as_tuple()),
                }
            ),
        }
        if include_checked:
            doc["checked"] = [
                {"q": q, "twist": list(tw.as_tuple()), "h0": h}
                for q, tw, h in self.checked
            ]
        else:
            doc["nonzero"] = [
                {"q": q, "twist": list(tw.as_tuple()), "h0": h}
                for q, tw, h in self.checked
                if h
            ]
        return doc


def run_stability_scan(
    cfg: StabilityScanConfig, threads: Optional[int] = None
) -> StabilityReport:
    """Probe the whole (q, twist) box and aggregate deterministically.

    The grid rows are independent, so with threads > 1 (default: the
    MONADFORGE_THREADS environment variable, else 1) the q-slices run on a
    thread pool; results are reassembled in (q, twist) order, so the report
    is identical whatever the schedule.
    """
    if threads is None:
        threads = _thread_cap()
    params = cfg.params
    middle = middle_bundle(params)
    twists = list(enumerate_twists(cfg))

    def scan_q(q: int) -> List[Tuple[int, MultiDegree, int]]:
        flat = _flat_summands(exterior_power_sum(middle, q))
        return [
            (q, tw, _h0_twisted(params, flat, tw.as_tuple())) for tw in twists
        ]

    qs = list(range(1, cfg.max_q + 1))
    if threads > 1 and len(qs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            slices = list(pool.map(scan_q, qs))
    else:
        slices = [scan_q(q) for q in qs]

    checked: List[Tuple[int, MultiDegree, int]] = []
    for sl in slices:
        checked.extend(sl)

    counterexample = None
    for q, tw, h in checked:
        if h != 0:
            counterexample = (q, tw)
            break
    return StabilityReport(
        config=cfg,
        checked=tuple(checked),
        verdict="ALL_VANISH" if counterexample is None else "COUNTEREXAMPLE",
        counterexample=counterexample,
    )


def negative_component_violations(
    params: SpaceParams, q: int, tw: MultiDegree
) -> List[MultiDegree]:
    """Twisted Lambda^q summands with NO strictly negative component.

    For every twist with p-sum >= 0 this list is empty — each summand keeps a
    negative degree direction, which is the structural reason the vanishing
    scan passes; returning witnesses (rather than a bare bool) makes failures
    inspectable.
    """
    wedge = exterior_power_sum(middle_bundle(params), q)
    bad: List[MultiDegree] = []
    for deg, _mult in wedge.summands:
        shifted = deg + tw
        if shifted.min_component() >= 0:
            bad.append(shifted)
    return bad
