"""Acceptance suite: one test per criterion, exact arithmetic, zero tolerance.

Each criterion prints its own PASS/FAIL line (bypassing pytest capture so the
lines appear inline in any run).  Sweeps are exhaustive over the stated boxes;
no expected value is asserted that was not independently derived.
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import product

from sl3webs import (
    GlobalCoordinate,
    ImageViolation,
    NonIntegral,
    NotInLambda,
    PantsTuple,
    ShearVector,
    TwistTuple,
    canonical_descriptor,
    forward,
    image_check,
    invert,
    lambda_check,
    rotate,
    standard_graph,
    torus_coords,
    torus_kappa,
    torus_reconstruct,
    twist_coords,
    validate,
    verify_genus2,
)


@contextmanager
def criterion(num, name, capfd):
    start = time.monotonic()
    info = {"points": None}
    try:
        yield info
    except BaseException:
        with capfd.disabled():
            print(f"ACCEPTANCE {num} ({name}): FAIL", flush=True)
        raise
    elapsed = time.monotonic() - start
    points = f", {info['points']} points" if info["points"] is not None else ""
    with capfd.disabled():
        print(f"ACCEPTANCE {num} ({name}): PASS [{elapsed:.1f}s{points}]", flush=True)


def test_criterion_1_pants_inverse_exactness(capfd):
    with criterion(1, "pants inverse exactness", capfd) as info:
        checked = 0
        for bound, expected_total in ((1, 3**8), (3, 7**8)):
            total = 0
            rng = range(-bound, bound + 1)
            for vals in product(rng, repeat=8):
                total += 1
                x11, x12, x21, x22, x31, x32, xv, xvp = vals
                if (
                    x11 + x32 < 0
                    or x12 + x31 + xv + xvp < 0
                    or x31 + x22 < 0
                    or x32 + x21 + xv + xvp < 0
                    or x21 + x12 < 0
                    or x22 + x11 + xv + xvp < 0
                ):
                    continue
                x = ShearVector(*vals)
                assert lambda_check(x)
                assert invert(forward(x)) == x
                checked += 1
            assert total == expected_total
        info["points"] = checked


def _tuple_box():
    n_rng = range(5)
    z_rng = range(-6, 7)
    return product(n_rng, n_rng, n_rng, n_rng, n_rng, n_rng, z_rng, z_rng)


def test_criterion_2_image_characterization(capfd):
    with criterion(2, "pants image characterization", capfd) as info:
        members = 0
        total = 0
        for vals in _tuple_box():
            total += 1
            t = PantsTuple(*vals)
            claimed = image_check(t)
            try:
                x = invert(t)
                actual = lambda_check(x) and forward(x) == t
            except (NonIntegral, NotInLambda):
                actual = False
            assert claimed == actual, vals
            members += claimed
        assert total == 5**6 * 13 * 13
        assert members > 0
        info["points"] = total


def test_criterion_3_cyclic_invariance(capfd):
    with criterion(3, "cyclic invariance", capfd) as info:
        total = 0
        for vals in _tuple_box():
            total += 1
            t = PantsTuple(*vals)
            assert image_check(rotate(t)) == image_check(t), vals
            assert rotate(rotate(rotate(t))) == t, vals
        info["points"] = total


def test_criterion_4_congruence_form_agreement(capfd):
    with criterion(4, "congruence form agreement", capfd) as info:
        total = 0
        for n11, n12, n21, n22, n31, n32, tp, hp in _tuple_box():
            total += 1
            form_a = (hp - (n11 - n12 - n21 + n22)) % 3 == 0
            form_b = (hp - (n11 + 2 * n21 - n12 + n22)) % 3 == 0
            assert form_a == form_b, (n11, n12, n21, n22, n31, n32, tp, hp)
        info["points"] = total


def test_criterion_5_torus_image_and_injectivity(capfd):
    with criterion(5, "torus image and round trip", capfd) as info:
        total = 0
        for n1, n2, t1, t2 in product(range(4), range(4), range(-3, 4), range(-3, 4)):
            total += 1
            expected = (n1 > 0 or t1 >= 0) and (n2 > 0 or t2 >= 0)
            try:
                c = torus_kappa(n1, n2, t1, t2)
                accepted = True
            except ImageViolation:
                accepted = False
            assert accepted == expected, (n1, n2, t1, t2)
            if accepted:
                d = torus_reconstruct(c)
                assert d.word0 == d.word1
                assert torus_coords(d) == c
        assert total == 16 * 49
        info["points"] = total


def test_criterion_6_genus2_global_roundtrip(capfd):
    with criterion(6, "genus-2 global round trip", capfd) as info:
        report = verify_genus2(10000, seed=0)
        assert report.checked == 10000
        assert report.failures == []
        info["points"] = report.checked


def test_criterion_7_dimension_identity(capfd):
    with criterion(7, "coordinate dimension identity", capfd):
        for genus in range(2, 7):
            g = standard_graph(genus)
            assert g.coordinate_dimension() == 16 * genus - 16
            assert GlobalCoordinate.zero(g).dimension() == 16 * genus - 16


def test_criterion_8_annulus_image(capfd):
    with criterion(8, "annulus image characterization", capfd) as info:
        total = 0
        for n1, n2, t1, t2 in product(range(4), range(4), range(-3, 4), range(-3, 4)):
            total += 1
            tup = TwistTuple(n1, n2, t1, t2)
            word = "+" * n1 + "-" * n2
            expected = (n1 > 0 or t1 >= 0) and (n2 > 0 or t2 >= 0)
            try:
                d = validate(tup, word, word)
                accepted = True
            except ImageViolation:
                accepted = False
            assert accepted == expected, (n1, n2, t1, t2)
            if accepted:
                assert twist_coords(canonical_descriptor(tup)) == tup
        info["points"] = total


def test_criterion_9_cli_golden(capfd):
    with criterion(9, "CLI golden outputs", capfd):
        zero_shear = {"x11": 0, "x12": 0, "x21": 0, "x22": 0,
                      "x31": 0, "x32": 0, "xv": 0, "xvp": 0}
        cases = [
            (
                ["pants", "invert"],
                json.dumps({"n11": 1, "n12": 0, "n21": 0, "n22": 0,
                            "n31": 0, "n32": 0, "tP": 0, "hP": 0}),
                1,
                {"error": "NonIntegral", "field": "x11"},
            ),
            (
                ["pants", "forward"],
                json.dumps(zero_shear),
                0,
                {"n11": 0, "n12": 0, "n21": 0, "n22": 0,
                 "n31": 0, "n32": 0, "tP": 0, "hP": 0},
            ),
            (["oracle", "pants", "--bound", "1"], "", 0, None),
        ]
        for args, stdin, want_code, want_payload in cases:
            runs = [
                subprocess.run(
                    [sys.executable, "-m", "sl3webs", *args],
                    input=stdin, capture_output=True, text=True,
                )
                for _ in range(2)
            ]
            assert runs[0].stdout == runs[1].stdout, args
            assert runs[0].returncode == runs[1].returncode == want_code, args
            payload = json.loads(runs[0].stdout)
            if want_payload is not None:
                assert payload == want_payload, args
            else:
                assert payload["checked"] == 6561 and payload["failures"] == []
