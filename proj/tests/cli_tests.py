#!/usr/bin/env python3
"""End-to-end checks for the qpencil command line tool.

Each check runs the binary as a subprocess and asserts on the exit code and
on the single JSON document the tool prints. Golden outputs are compared
byte for byte where the output contract is frozen; everything else is
checked structurally after parsing.
"""

import json
import os
import subprocess
import sys
import tempfile
from fractions import Fraction

BIN = None
TESTS = []


def test(fn):
    TESTS.append(fn)
    return fn


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        raise AssertionError(
            f"exit {proc.returncode}, expected {expect}; "
            f"stdout: {proc.stdout!r} stderr: {proc.stderr!r}"
        )
    return proc.stdout


def run_json(*args, expect=0):
    out = run(*args, expect=expect)
    try:
        return json.loads(out)
    except json.JSONDecodeError as e:
        raise AssertionError(f"output is not a single JSON document: {out!r} ({e})")


def check(cond, what):
    if not cond:
        raise AssertionError(what)


@test
def golden_discriminants_are_byte_exact():
    check(
        run("disc", "--form", "[3,-12,0,11,-11]") == '{"disc":"-40252707"}\n',
        "first golden quartic discriminant line changed",
    )
    check(
        run("disc", "--form", "[-1,2,104,-104,-2764]") == '{"disc":"-146176"}\n',
        "second golden quartic discriminant line changed",
    )
    check(
        run("disc", "--form", "[1,0,1]") == '{"disc":"-4"}\n',
        "x^2 + y^2 discriminant line changed",
    )


@test
def census_single_report_is_byte_exact():
    check(
        run("census", "--n", "2", "--q", "3", "--form", "[1,0,1]")
        == '{"orbits":1,"stab":1,"mass":24}\n',
        "census report line changed",
    )


@test
def discriminant_reduction_mod_p_matches_the_lifted_value():
    d = run_json("disc", "--form", "[1,0,0,1,1]", "--p", "5")
    check(d == {"disc": "4", "p": 5}, f"expected the lifted value 229 mod 5 = 4, got {d}")


@test
def rational_coefficients_cross_the_boundary_as_fraction_strings():
    d = run_json("disc", "--form", '["1/2",0,"1/3"]')
    check(d["disc"] == "-2/3", f"disc of x^2/2 + y^2/3 must be -2/3, got {d['disc']}")


@test
def parity_member_issues_the_odd_rank_sum_conclusion():
    d = run_json("parity", "--form", "[4,0,0,1,0,8]")
    names = [h["name"] for h in d["hypotheses"]]
    check(
        names
        == ["mod-8-congruence", "two-adic-split-node", "two-adic-point", "odd-primes-split"],
        f"hypothesis names changed: {names}",
    )
    check(
        all(h["status"] == "verified" for h in d["hypotheses"]),
        "every hypothesis must verify for the member form",
    )
    check(all(h["witness"] for h in d["hypotheses"]), "witness text must be attached")
    check(d["conclusion"] == "rank-sum-odd", f"conclusion changed: {d['conclusion']}")
    check("statement" in d and "Selmer" in d["statement"], "issued statement missing")
    check(d["form"] == {"n": 5, "coeffs": ["4", "0", "0", "1", "0", "8"]}, "echoed form changed")


@test
def parity_nonmember_is_refused_by_the_first_failed_hypothesis():
    d = run_json("parity", "--form", "[1,0,0,-1221]")
    check(
        d["conclusion"] == "refused: mod-8-congruence",
        f"refusal must name the first failed hypothesis, got {d['conclusion']}",
    )
    check("statement" not in d, "a refused transcript must not carry the statement")


@test
def usage_errors_exit_2_with_an_error_document():
    for args in (
        ("disc", "--form", "[]"),
        ("disc", "--form", "[1.5,0,1]"),
        ("disc", "--form", "[1,0,1]", "--bogus"),
        ("disc", "--form", "not json"),
        ("census", "--n", "2", "--q", "3", "--form", "[1,0,1]", "--all"),
        ("census", "--n", "2", "--q", "3", "--form", "[1,0,1,1]"),
        ("census", "--n", "2", "--q", "3"),
        ("census", "--n", "6", "--q", "13", "--all"),
        ("orbit-verify", "--pencil-file", "/nonexistent/pencil.json"),
        ("descend", "--form", "[-1,0,2,-2,3]", "--bound", "-1"),
        (),
    ):
        d = run_json(*args, expect=2)
        check(d["error"]["code"] == "usage", f"{args}: expected a usage error, got {d}")
        check(d["error"]["message"], f"{args}: usage error must carry a message")


@test
def domain_errors_exit_1_with_an_error_document():
    for args in (
        ("census", "--n", "3", "--q", "5", "--form", "[1,0,0,1]"),
        ("census", "--n", "2", "--q", "9", "--form", "[1,0,1]"),
        ("brute", "--q", "7"),
        ("brute", "--q", "3", "--n", "4"),
        ("orbit-build", "--form", "[1,0,0,1,3]"),
        ("orbit-build", "--form", "[1,0,1,1]"),
        ("disc", "--form", "[1,0,1]", "--p", "4"),
        ("reduce", "--form", "[1,0,0,0,1]"),
        ("twists", "--form", "[1,2,1,2,4,2]"),
    ):
        d = run_json(*args, expect=1)
        check(d["error"]["code"] == "domain", f"{args}: expected a domain error, got {d}")
        check(d["error"]["context"] == args[0], f"{args}: context must name the verb")


@test
def census_sweep_is_sorted_and_agrees_with_the_exhaustive_enumeration():
    sweep = run_json("census", "--n", "2", "--q", "3", "--all")
    check(sweep["count"] == 27 and sweep["mass"] == 24, f"sweep header changed: {sweep}")
    coeffs = [tuple(r["coeffs"]) for r in sweep["forms"]]
    check(coeffs == sorted(coeffs), "sweep rows must be sorted by coefficients")
    check(len(set(coeffs)) == 27, "sweep must enumerate every coefficient vector once")

    brute = run_json("brute", "--q", "3")
    check(
        brute["csv"].splitlines()[0] == "f0,f1,f2,pair_count,orbit_sizes",
        "CSV header changed",
    )
    bmap = {tuple(r["coeffs"]): r for r in brute["rows"]}
    for row in sweep["forms"]:
        b = bmap[tuple(row["coeffs"])]
        check(row["valid"] == b["valid"], f"validity disagrees at {row['coeffs']}")
        if row["valid"]:
            check(
                row["orbits"] == len(b["orbit_sizes"]),
                f"orbit count disagrees with the enumeration at {row['coeffs']}",
            )
            check(b["pairs"] == 24, f"pair count must be 24 at {row['coeffs']}")
            check(sum(b["orbit_sizes"]) == 24, f"orbit sizes must sum to 24 at {row['coeffs']}")


@test
def census_sweep_output_is_independent_of_the_job_count():
    a = run("census", "--n", "2", "--q", "5", "--all", "--jobs", "1")
    b = run("census", "--n", "2", "--q", "5", "--all", "--jobs", "3")
    check(a == b, "sweep output must be byte-identical for any --jobs value")


@test
def orbit_build_round_trips_through_orbit_verify():
    built = run_json("orbit-build", "--form", "[1,0,0,1,4]")
    check(built["alpha"] == ["0", "1", "0", "0"], f"alpha changed: {built['alpha']}")
    check(built["s"] == "2" and built["s_opposite"] == "-2", "oriented scalars changed")
    check(built["invariant"] == built["form"], "round trip must return the input form")
    check(built["ideal"]["den"] == "1", "ideal denominator changed")
    check(built["ideal"]["basis"][0] == ["2", "0", "0", "0"], "first ideal column changed")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "pencil.json")
        with open(path, "w") as fh:
            json.dump(built["pencil"], fh)
        rep = run_json("orbit-verify", "--pencil-file", path, "--form", "[1,0,0,1,4]")
        check(
            rep["matches"] is True and rep["symmetric"] is True and rep["integral"] is True,
            f"verification report changed: {rep}",
        )
        check(rep["invariant"] == built["form"], "verifier must recover the invariant form")
        rep2 = run_json("orbit-verify", "--pencil-file", path, "--form", "[1,0,0,1,5]")
        check(rep2["matches"] is False, "a different expected form must not match")


@test
def orbit_build_handles_sextic_forms():
    built = run_json("orbit-build", "--form", "[1,0,0,1,0,0,9]")
    check(built["s"] == "3", f"expected |s| = 3 for trailing coefficient 9, got {built['s']}")
    check(built["invariant"] == built["form"], "sextic round trip must return the input form")
    check(len(built["pencil"]["A"]) == 6, "sextic pencil must be 6x6")


@test
def orbit_verify_reports_asymmetric_pencils():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "pencil.json")
        with open(path, "w") as fh:
            json.dump({"A": [["0", "1"], ["0", "0"]], "B": [["1", "0"], ["0", "1"]]}, fh)
        rep = run_json("orbit-verify", "--pencil-file", path)
        check(rep["symmetric"] is False, "asymmetry must be reported")
        check(rep["invariant"]["coeffs"] == ["0", "0", "-1"], f"invariant changed: {rep}")
        check(rep["disc"] == "0", "the rank-one invariant form has discriminant 0")


@test
def descend_reports_witness_absence_and_refusal():
    d = run_json("descend", "--form", "[-1,0,2,-2,3]", "--bound", "1")
    check(d["status"] == "witness", f"expected a witness, got {d}")
    norm, root = Fraction(d["norm"]), Fraction(d["root"])
    check(root > 0 and norm == -root * root, "witness must satisfy norm = f_0 * root^2")

    d = run_json("descend", "--form", "[-1,0,0,0,3]", "--bound", "1")
    check(d["status"] == "absent-within-bound" and d["bound"] == 1, f"got {d}")

    d = run_json("descend", "--form", "[-1,0,-1,0,-1]")
    check(d["status"] == "refused-negative-definite", f"got {d}")


@test
def real_classification_matches_the_three_reference_forms():
    check(
        run("real", "--form", "[1,0,1,0,1]")
        == '{"r1":0,"r2":2,"m":0,"definiteness":"positive-definite",'
        '"orbits":2,"soluble":2,"stab":4}\n',
        "positive definite report changed",
    )
    neg = run_json("real", "--form", "[-1,0,-1,0,-1]")
    check(
        neg["definiteness"] == "negative-definite"
        and neg["orbits"] == 0
        and neg["soluble"] == 0,
        f"negative definite report changed: {neg}",
    )
    check(
        run("real", "--form", "[1,0,-5,0,4]")
        == '{"r1":4,"r2":0,"m":2,"definiteness":"indefinite",'
        '"orbits":4,"soluble":2,"stab":4}\n',
        "four-real-root report changed",
    )


@test
def reduce_divides_each_coefficient_by_the_matching_power_of_sixteen():
    d = run_json("reduce", "--form", "[65536,4096,256,16,1]")
    check(d["reduced"]["coeffs"] == ["1", "1", "1", "1", "1"], f"got {d['reduced']}")


@test
def twist_quadruple_lists_f_neg_f_2f_neg_2f():
    d = run_json("twists", "--form", "[4,0,0,1,0,8]")
    base = [int(c) for c in d["form"]]
    tws = [[int(c) for c in t] for t in d["twists"]]
    check(
        tws
        == [base, [-c for c in base], [2 * c for c in base], [-2 * c for c in base]],
        f"twist quadruple changed: {tws}",
    )
    check(d["mod8_family"] is True and len(d["certificate"]) > 0, "member certificate missing")

    d = run_json("twists", "--form", "[1,0,0,-1221]")
    check(d["mod8_family"] is False and d["certificate"] == "", "non-member must get no certificate")


@test
def selftest_passes_and_honours_fast_and_seed():
    full = run_json("selftest")
    names = [i["name"] for i in full["items"]]
    check(
        names
        == ["disc-3x4", "disc-neg-x4", "norm-36", "census-q3", "census-q5", "orbits-roundtrip"],
        f"item names changed: {names}",
    )
    check(
        full["passed"] == 6 and full["failed"] == 0 and full["skipped"] == 0,
        f"full selftest must pass everything: {full}",
    )

    fast = run_json("selftest", "--fast")
    status = {i["name"]: i["status"] for i in fast["items"]}
    check(status["census-q5"] == "skipped", "--fast must skip the q = 5 enumeration")
    check(fast["passed"] == 5 and fast["failed"] == 0 and fast["skipped"] == 1, f"got {fast}")

    a = run("selftest", "--seed", "99")
    b = run("selftest", "--seed", "99")
    check(a == b, "selftest output must be byte-identical for a fixed seed")


def main():
    global BIN
    if len(sys.argv) != 2:
        print("usage: cli_tests.py <path-to-qpencil-binary>")
        return 2
    BIN = sys.argv[1]
    bad = 0
    for t in TESTS:
        try:
            t()
            print(f"PASS {t.__name__}")
        except AssertionError as e:
            bad += 1
            print(f"FAIL {t.__name__}: {e}")
    if bad:
        print(f"{bad} of {len(TESTS)} checks failed")
        return 1
    print(f"all {len(TESTS)} checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
