"""Unit tests for the verification sweeps, including that they have teeth."""

import pytest

import sl3webs.pants
import sl3webs.surface
from sl3webs import (
    BoxSpec,
    BoxTooLarge,
    CounterexampleFound,
    PantsTuple,
    verify_genus2,
    verify_pants_image,
    verify_torus_image,
)


def test_shear_phase_counts():
    assert verify_pants_image(BoxSpec(shear_bound=0)).checked == 1
    r = verify_pants_image(BoxSpec(shear_bound=1))
    assert r.checked == 3**8 == 6561
    assert r.failures == []


def test_tuple_phase_counts():
    r = verify_pants_image(BoxSpec(n_bound=2, t_bound=3, h_bound=3))
    assert r.checked == 3**6 * 7 * 7
    assert r.failures == []


def test_both_phases_sum():
    r = verify_pants_image(BoxSpec(shear_bound=1, n_bound=1, t_bound=1, h_bound=1))
    assert r.checked == 3**8 + 2**6 * 3 * 3


def test_tuple_phase_requires_all_bounds():
    with pytest.raises(BoxTooLarge):
        verify_pants_image(BoxSpec(n_bound=2))


def test_torus_counts():
    assert verify_torus_image(BoxSpec(n_bound=0, t_bound=0)).checked == 1
    r = verify_torus_image(BoxSpec(n_bound=2, t_bound=2))
    assert r.checked == 9 * 25
    assert r.failures == []
    assert verify_torus_image(BoxSpec(n_bound=3, t_bound=3)).checked == 16 * 49


def test_genus2_deterministic():
    a = verify_genus2(400, seed=3)
    b = verify_genus2(400, seed=3)
    assert a.checked == b.checked == 400
    assert a.failures == b.failures == []
    assert a.to_dict(include_timing=False) == b.to_dict(include_timing=False)
    assert a.seed == 3


def test_genus2_rejects_tiny_boxes():
    with pytest.raises(ValueError):
        verify_genus2(10, n_bound=1)


def test_box_guard():
    with pytest.raises(BoxTooLarge):
        verify_pants_image(BoxSpec(shear_bound=5))
    with pytest.raises(BoxTooLarge):
        verify_torus_image(BoxSpec(n_bound=10**5, t_bound=10**4))


def test_report_serialization():
    r = verify_pants_image(BoxSpec(shear_bound=0))
    full = r.to_dict()
    assert set(full) == {"box", "checked", "failures", "seed", "elapsed_ms"}
    stable = r.to_dict(include_timing=False)
    assert "elapsed_ms" not in stable


def test_sweep_catches_wrong_membership(monkeypatch):
    # verify the oracle detects a deliberately broken library predicate
    def wrong_image_check(t: PantsTuple) -> bool:
        return min(t.n11, t.n12, t.n21, t.n22, t.n31, t.n32) >= 0

    monkeypatch.setattr(sl3webs.pants, "image_check", wrong_image_check)
    with pytest.raises(CounterexampleFound) as err:
        verify_pants_image(BoxSpec(n_bound=1, t_bound=1, h_bound=1))
    assert err.value.prop in ("congruence-form-disagreement", "rotation-invariance")


def test_sweep_catches_wrong_roundtrip(monkeypatch):
    def wrong_kappa(w):
        c = _real_kappa(w)
        return type(c)(c.n1, c.n2, c.t1, c.t2, c.tP, tuple(h + 2 for h in c.hP))

    _real_kappa = sl3webs.surface.kappa
    monkeypatch.setattr(sl3webs.surface, "kappa", wrong_kappa)
    with pytest.raises(CounterexampleFound) as err:
        verify_genus2(50, seed=1)
    assert err.value.prop == "kappa-reconstruct-roundtrip"
