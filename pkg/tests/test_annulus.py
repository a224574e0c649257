"""Unit tests for annulus web descriptors."""

from itertools import product

import pytest

from sl3webs import (
    AnnulusDescriptor,
    ImageViolation,
    TwistTuple,
    WebKind,
    WordMismatch,
    canonical_descriptor,
    twist_coords,
    validate,
)

EMPTY = canonical_descriptor(TwistTuple(0, 0, 0, 0))


def twist_box(n_bound, t_bound):
    n_rng = range(n_bound + 1)
    t_rng = range(-t_bound, t_bound + 1)
    for n1, n2, t1, t2 in product(n_rng, n_rng, t_rng, t_rng):
        yield n1, n2, t1, t2


def test_twist_coords_examples():
    assert twist_coords(EMPTY) == TwistTuple(0, 0, 0, 0)
    # one increasing line of twist 2 plus three circles
    line_circle = canonical_descriptor(TwistTuple(1, 0, 2, 3))
    assert twist_coords(line_circle) == TwistTuple(1, 0, 2, 3)
    assert line_circle.kind is WebKind.LINE_CIRCLE_LEFT
    # strict braid: increasing twists {1, 0}, decreasing twists {-1}
    braid = TwistTuple.from_strands([1, 0], [-1])
    assert braid == TwistTuple(2, 1, 1, -1)
    assert canonical_descriptor(braid).kind is WebKind.STRICT_BRAID


def test_validate_examples():
    with pytest.raises(ImageViolation):
        validate(TwistTuple(0, 0, -1, 0), "", "")
    d = validate(TwistTuple(1, 0, 5, 0), "+", "+")
    assert d.twists == TwistTuple(1, 0, 5, 0)
    with pytest.raises(WordMismatch):
        validate(TwistTuple(1, 1, 0, 0), "+-", "++")


def test_validate_rejects_bad_lengths_and_symbols():
    with pytest.raises(WordMismatch):
        validate(TwistTuple(1, 0, 0, 0), "+", "++")
    with pytest.raises(WordMismatch):
        validate(TwistTuple(1, 0, 0, 0), "x", "+")


def test_negative_strand_counts_rejected():
    with pytest.raises(ImageViolation):
        TwistTuple(-1, 0, 0, 0)


def test_canonical_examples():
    assert EMPTY.word0 == "" and EMPTY.word1 == ""
    d = canonical_descriptor(TwistTuple(2, 1, 0, 0))
    assert d.word0 == "++-" and d.word1 == "++-"
    circles = canonical_descriptor(TwistTuple(0, 0, 3, 2))
    assert circles.word0 == "" and circles.word1 == ""
    assert circles.kind is WebKind.PURE_CIRCLES


def test_kind_trichotomy():
    cases = {
        (0, 0, 0, 0): WebKind.PURE_CIRCLES,
        (0, 0, 3, 2): WebKind.PURE_CIRCLES,
        (1, 0, 2, 3): WebKind.LINE_CIRCLE_LEFT,
        (0, 2, 4, -1): WebKind.LINE_CIRCLE_RIGHT,
        (2, 1, 1, -1): WebKind.STRICT_BRAID,
        (1, 0, -5, 0): WebKind.STRICT_BRAID,   # no circles: plain twisted lines
        (0, 2, 0, -5): WebKind.STRICT_BRAID,
    }
    for tup, kind in cases.items():
        assert canonical_descriptor(TwistTuple(*tup)).kind is kind


def test_kind_total_on_image_box():
    for n1, n2, t1, t2 in twist_box(3, 3):
        tup = TwistTuple(n1, n2, t1, t2)
        if tup.in_image():
            assert canonical_descriptor(tup).kind in WebKind


def test_image_characterization_exhaustive():
    for n1, n2, t1, t2 in twist_box(3, 3):
        tup = TwistTuple(n1, n2, t1, t2)
        expected = (n1 > 0 or t1 >= 0) and (n2 > 0 or t2 >= 0)
        assert tup.in_image() == expected
        if expected:
            d = canonical_descriptor(tup)
            assert twist_coords(d) == tup
        else:
            with pytest.raises(ImageViolation):
                canonical_descriptor(tup)


def test_descriptor_equality_is_semantic():
    a = validate(TwistTuple(2, 1, 3, -2), "+-+", "++-")
    b = validate(TwistTuple(2, 1, 3, -2), "+-+", "++-")
    c = validate(TwistTuple(2, 1, 3, -2), "++-", "++-")
    assert a == b
    assert a != c


def test_json_round_trip():
    d = validate(TwistTuple(2, 1, 3, -2), "+-+", "++-")
    data = d.to_dict()
    assert data == {"n1": 2, "n2": 1, "t1": 3, "t2": -2, "word0": "+-+", "word1": "++-"}
    assert AnnulusDescriptor.from_dict(data) == d
    with pytest.raises(TypeError):
        AnnulusDescriptor.from_dict({**data, "word0": 5})
    with pytest.raises(TypeError):
        TwistTuple.from_dict({**data, "t1": 1.0})
