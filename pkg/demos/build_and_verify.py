"""Build the (1,2,3) monad, eyeball its block layout, and certify it.

Run:  python3 demos/build_and_verify.py
"""

from monadforge import SpaceParams, assemble_monad, verify_composition, verify_maximal_rank
from monadforge.cli import main as cli_main

PRIMES = (2**31 - 1, 10**9 + 7)


def describe(S) -> str:
    return " (+) ".join(
        f"O({deg.a},{deg.b},{deg.c},{deg.d})^{mult}" for deg, mult in S.summands
    )


def main() -> None:
    params = SpaceParams(n=1, m=2, k=3)
    spec = assemble_monad(params)

    print(f"source : {describe(spec.source)}")
    print(f"middle : {describe(spec.middle)}")
    print(f"target : {describe(spec.target)}")
    print()

    # the CLI's text format mirrors the block layout: | fences the four
    # column groups of f, dashed rules separate the four row groups of g
    cli_main(["build", "--n", "1", "--m", "2", "--k", "3", "--format", "text"])
    print()

    print("symbolic composition f*g == 0:", verify_composition(spec))
    print("structural problems:", spec.structural_problems() or "none")

    for prime in PRIMES:
        report = verify_maximal_rank(spec, trials=20, seed=0, prime=prime)
        print(
            f"rank over F_{prime}: samples f={set(report.rank_f_samples)} "
            f"g={set(report.rank_g_samples)}, origin f={report.origin_rank_f}, "
            f"maximal={report.maximal}"
        )


if __name__ == "__main__":
    main()
