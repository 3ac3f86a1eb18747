"""Acceptance gate: every promised law over 10,000 seeded trials.

One shared campaign (seed 42, 10,000 trials, tolerance 1e-9 absolute plus
1e-9 relative to operand scale, corner cases mixed in) feeds criteria
1-10; criterion 11 reruns the suite against three deliberately broken
implementations and requires each to be caught within 1,000 trials.
Every criterion prints a pass/fail line into the terminal summary.
"""

import pytest

from paravec import DEFAULT_TOL, run_fuzz

SEED = 42
TRIALS = 10000


@pytest.fixture(scope="session")
def campaign():
    assert DEFAULT_TOL.abs == 1e-9 and DEFAULT_TOL.rel == 1e-9
    return run_fuzz(seed=SEED, trials=TRIALS, tol=DEFAULT_TOL)


def _check(campaign, acceptance_log, number, label, suites):
    fails = campaign.suite_failures(suites)
    names = [
        r.name for r in campaign.properties if r.name.split("/", 1)[0] in set(suites)
    ]
    status = "PASS" if fails == 0 else "FAIL"
    acceptance_log(
        f"criterion {number:>2} {label}: {status} "
        f"({len(names)} properties x {campaign.trials} trials, {fails} failures)"
    )
    if fails:
        detail = [
            (r.name, r.fails, r.counterexample)
            for r in campaign.properties
            if r.fails and r.name.split("/", 1)[0] in set(suites)
        ]
        pytest.fail(f"criterion {number} failed: {detail}")


def test_criterion_01_ring_and_involutions(campaign, acceptance_log):
    _check(campaign, acceptance_log, 1, "ring axioms and involution table", ["ring", "involution"])


def test_criterion_02_determinant_and_vigor_forms(campaign, acceptance_log):
    _check(campaign, acceptance_log, 2, "determinant/vigor closed forms and multiplicativity", ["detvig"])


def test_criterion_03_integrated_product_factorization(campaign, acceptance_log):
    _check(campaign, acceptance_log, 3, "integrated-product factorization and shared scalar part", ["product"])


def test_criterion_04_parallel_perpendicular(campaign, acceptance_log):
    _check(campaign, acceptance_log, 4, "parallelism/perpendicularity equivalences", ["parallel"])


def test_criterion_05_metric_laws(campaign, acceptance_log):
    _check(campaign, acceptance_log, 5, "polarization, Pythagorean, parallelogram laws", ["metric"])


def test_criterion_06_angle_laws(campaign, acceptance_log):
    _check(campaign, acceptance_log, 6, "angle determinant, composition, explement", ["angle"])


def test_criterion_07_rotations(campaign, acceptance_log):
    _check(campaign, acceptance_log, 7, "rotation suite incl. axis-angle oracle", ["rotation"])


def test_criterion_08_mirror_axial(campaign, acceptance_log):
    _check(campaign, acceptance_log, 8, "mirror/axial involutions and compositions", ["mirror"])


def test_criterion_09_matrix_oracles(campaign, acceptance_log):
    _check(campaign, acceptance_log, 9, "matrix homomorphisms with independent LU path", ["matrix"])


def test_criterion_10_orthogonal_transforms(campaign, acceptance_log):
    _check(campaign, acceptance_log, 10, "orthogonal actions and sphere invariance", ["orthogonal"])


@pytest.mark.parametrize("mutant", ["mul-drop-cross", "rev-sign", "matrix-transpose"])
def test_criterion_11_mutants_are_caught(mutant, acceptance_log):
    report = run_fuzz(seed=SEED, trials=1000, tol=DEFAULT_TOL, mutant=mutant)
    caught = [r.name for r in report.properties if r.fails]
    first_trial = min(
        (r.counterexample["trial"] for r in report.properties if r.counterexample),
        default=None,
    )
    status = "PASS" if caught else "FAIL"
    acceptance_log(
        f"criterion 11 mutant {mutant}: {status} "
        f"(caught by {len(caught)} properties, first at trial {first_trial})"
    )
    assert caught, f"mutant {mutant} was not detected within 1000 trials"
