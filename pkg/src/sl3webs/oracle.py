"""Brute-force verification of the coordinate theorems on bounded boxes.

Every sweep recomputes the membership conditions from scratch on plain
integers (using the variant congruence form) instead of calling into the
formulas under test, so the library and the oracle cross-validate rather
than share code.  A sweep raises CounterexampleFound at the first violating
point; a returned report therefore always has an empty failure list.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from random import Random

from . import pants as pants_mod
from . import surface as surface_mod
from .decomposition import standard_graph
from .errors import BoxTooLarge, CounterexampleFound, NotInTheta, SL3WebsError
from .pants import PantsTuple, ShearVector
from .surface import GlobalCoordinate

MAX_POINTS = 10**8


@dataclass(frozen=True)
class BoxSpec:
    """Bounds for enumeration sweeps; a ``None`` bound skips that phase.

    ``shear_bound`` enumerates shear vectors with entries in [-B, B];
    ``n_bound`` / ``t_bound`` / ``h_bound`` bound the intersection, twist,
    and height entries of tuple boxes.
    """

    shear_bound: int | None = None
    n_bound: int | None = None
    t_bound: int | None = None
    h_bound: int | None = None

    def to_dict(self) -> dict:
        return {
            "shear_bound": self.shear_bound,
            "n_bound": self.n_bound,
            "t_bound": self.t_bound,
            "h_bound": self.h_bound,
        }


@dataclass
class Report:
    """Machine-readable sweep summary; ``failures`` is empty by construction."""

    box: dict
    checked: int
    failures: list = field(default_factory=list)
    seed: int | None = None
    elapsed_ms: int = 0

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "box": self.box,
            "checked": self.checked,
            "failures": list(self.failures),
            "seed": self.seed,
        }
        if include_timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _guard(points: int) -> None:
    if points > MAX_POINTS:
        raise BoxTooLarge(f"box holds {points} points, budget is {MAX_POINTS}")


# Membership conditions recomputed independently of pants.image_check, with
# the +2*n21 form of the mod-3 height congruence.
def _pants_conditions(n11, n12, n21, n22, n31, n32, tp, hp) -> bool:
    if min(n11, n12, n21, n22, n31, n32) < 0:
        return False
    col1 = n11 + n21 + n31
    col2 = n12 + n22 + n32
    return (
        (col2 - col1) % 3 == 0
        and (hp + col1) % 2 == 0
        and (hp - (n11 + 2 * n21 - n12 + n22)) % 3 == 0
        and (3 * tp - (col2 - col1)) % 6 == 0
    )


def _torus_condition(n1, n2, t1, t2) -> bool:
    return n1 >= 0 and n2 >= 0 and (n1 > 0 or t1 >= 0) and (n2 > 0 or t2 >= 0)


def verify_pants_image(box: BoxSpec) -> Report:
    """Exhaustively verify the pants image characterization.

    Shear phase (``shear_bound``): every cone point x must satisfy the
    membership congruences after `forward` and invert back to x exactly, and
    cone membership must coincide with the nonnegativity of the raw linear
    output.  Tuple phase (``n_bound``/``t_bound``/``h_bound``): library
    membership must agree with the independent conditions, with invertibility
    into the cone, and with membership of the rotated tuple.
    """
    start = time.monotonic()
    checked = 0

    total = 0
    if box.shear_bound is not None:
        total += (2 * box.shear_bound + 1) ** 8
    if box.n_bound is not None:
        if box.t_bound is None or box.h_bound is None:
            raise BoxTooLarge("tuple phase needs n_bound, t_bound and h_bound")
        total += (box.n_bound + 1) ** 6 * (2 * box.t_bound + 1) * (2 * box.h_bound + 1)
    _guard(total)

    if box.shear_bound is not None:
        rng_ = range(-box.shear_bound, box.shear_bound + 1)
        for vals in product(rng_, repeat=8):
            checked += 1
            x11, x12, x21, x22, x31, x32, xv, xvp = vals
            sums = (
                x11 + x32,
                x12 + x31 + xv + xvp,
                x31 + x22,
                x32 + x21 + xv + xvp,
                x21 + x12,
                x22 + x11 + xv + xvp,
            )
            in_cone = min(sums) >= 0
            x = ShearVector(*vals)
            if pants_mod.lambda_check(x) != in_cone:
                raise CounterexampleFound("cone-vs-nonnegativity", vals)
            if not in_cone:
                continue
            t = pants_mod.forward(x)
            if not _pants_conditions(t.n11, t.n12, t.n21, t.n22, t.n31, t.n32, t.tP, t.hP):
                raise CounterexampleFound("image-conditions-after-forward", vals)
            if not pants_mod.image_check(t):
                raise CounterexampleFound("library-image-check-after-forward", vals)
            if pants_mod.invert(t) != x:
                raise CounterexampleFound("invert-forward-roundtrip", vals)

    if box.n_bound is not None:
        n_rng = range(box.n_bound + 1)
        t_rng = range(-box.t_bound, box.t_bound + 1)
        h_rng = range(-box.h_bound, box.h_bound + 1)
        for vals in product(n_rng, n_rng, n_rng, n_rng, n_rng, n_rng, t_rng, h_rng):
            checked += 1
            member = _pants_conditions(*vals)
            t = PantsTuple(*vals)
            if pants_mod.image_check(t) != member:
                raise CounterexampleFound("congruence-form-disagreement", vals)
            if pants_mod.image_check(pants_mod.rotate(t)) != member:
                raise CounterexampleFound("rotation-invariance", vals)
            try:
                x = pants_mod.invert(t)
                invertible = pants_mod.forward(x) == t
            except SL3WebsError:
                invertible = False
            if invertible != member:
                raise CounterexampleFound("membership-vs-invertibility", vals)

    return Report(
        box=box.to_dict(),
        checked=checked,
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )


def verify_torus_image(box: BoxSpec) -> Report:
    """Exhaustively verify the torus image characterization and round trip.

    Uses ``n_bound`` and ``t_bound``.  Acceptance by `torus_kappa` must equal
    the directly evaluated condition, and every accepted point must round-trip
    through `torus_reconstruct` with equal boundary words.
    """
    start = time.monotonic()
    if box.n_bound is None or box.t_bound is None:
        raise BoxTooLarge("torus sweep needs n_bound and t_bound")
    n_rng = range(box.n_bound + 1)
    t_rng = range(-box.t_bound, box.t_bound + 1)
    _guard(len(n_rng) ** 2 * len(t_rng) ** 2)

    checked = 0
    for n1, n2, t1, t2 in product(n_rng, n_rng, t_rng, t_rng):
        checked += 1
        expected = _torus_condition(n1, n2, t1, t2)
        try:
            c = surface_mod.torus_kappa(n1, n2, t1, t2)
            accepted = True
        except SL3WebsError:
            accepted = False
        if accepted != expected:
            raise CounterexampleFound("torus-image-set", (n1, n2, t1, t2))
        if accepted:
            d = surface_mod.torus_reconstruct(c)
            if d.word0 != d.word1:
                raise CounterexampleFound("torus-word-gluing", (n1, n2, t1, t2))
            if surface_mod.torus_coords(d) != c:
                raise CounterexampleFound("torus-roundtrip", (n1, n2, t1, t2))

    return Report(
        box=box.to_dict(),
        checked=checked,
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )


def _raw_sample(rng: Random, nb: int, tb: int, hb: int) -> GlobalCoordinate:
    return GlobalCoordinate(
        n1=tuple(rng.randint(0, nb) for _ in range(3)),
        n2=tuple(rng.randint(0, nb) for _ in range(3)),
        t1=tuple(rng.randint(-tb, tb) for _ in range(3)),
        t2=tuple(rng.randint(-tb, tb) for _ in range(3)),
        tP=tuple(rng.randint(-tb, tb) for _ in range(2)),
        hP=tuple(rng.randint(-hb, hb) for _ in range(2)),
    )


def _member_sample(rng: Random, graph, nb: int, tb: int, hb: int) -> GlobalCoordinate:
    """Draw a coordinate repaired into the image monoid of the genus-2 graph.

    Both pants of the genus-2 chain see all three curves, one with all-ccw
    and one with all-cw slots, so the two mod-3 balance conditions coincide;
    choosing one n entry in the right residue class, then solving the height
    congruences mod 6 and the twist parity per pants, lands in the monoid by
    construction without rejection.  All entries stay inside the raw box.
    """
    n1 = [rng.randint(0, nb) for _ in range(3)]
    n2 = [0, rng.randint(0, nb), rng.randint(0, nb)]
    need = (sum(n1) - n2[1] - n2[2]) % 3
    n2[0] = rng.choice([v for v in range(nb + 1) if v % 3 == need])
    t1 = [rng.randint(-tb, tb) for _ in range(3)]
    t2 = [rng.randint(-tb, tb) for _ in range(3)]
    for j in range(3):
        if n1[j] == 0:
            t1[j] = abs(t1[j])
        if n2[j] == 0:
            t2[j] = abs(t2[j])

    tP = []
    hP = []
    for pants in graph.pants:
        cols = []
        for slot in pants.slots:
            j = graph.curve_index(slot.curve)
            cols.append((n1[j], n2[j]) if slot.flag == "ccw" else (n2[j], n1[j]))
        (a1, a2), (b1, b2), (c1, c2) = cols
        col1 = a1 + b1 + c1
        col2 = a2 + b2 + c2
        parity = (-col1) % 2
        residue = (a1 + 2 * b1 - a2 + b2) % 3
        h0 = next(h for h in range(6) if h % 2 == parity and h % 3 == residue)
        hP.append(rng.choice([h for h in range(-hb, hb + 1) if h % 6 == h0]))
        t_parity = ((col2 - col1) % 6) // 3
        tP.append(rng.choice([v for v in range(-tb, tb + 1) if v % 2 == t_parity]))

    return GlobalCoordinate(tuple(n1), tuple(n2), tuple(t1), tuple(t2), tuple(tP), tuple(hP))


def verify_genus2(
    samples: int, *, seed: int = 0, n_bound: int = 3, t_bound: int = 4, h_bound: int = 6
) -> Report:
    """Verify the global round trip on the standard genus-2 decomposition.

    Draws ``samples`` deterministic coordinates (alternating raw box points
    with constructed monoid members so that both branches are exercised).
    Members must reconstruct and project back exactly; non-members must be
    rejected with NotInTheta.
    """
    _guard(samples)
    if n_bound < 2 or t_bound < 1 or h_bound < 5:
        raise ValueError("member sampling needs n_bound >= 2, t_bound >= 1, h_bound >= 5")
    start = time.monotonic()
    graph = standard_graph(2)
    rng = Random(seed)

    checked = 0
    for i in range(samples):
        checked += 1
        if i % 2:
            c = _member_sample(rng, graph, n_bound, t_bound, h_bound)
            if not surface_mod.theta_check(graph, c):
                raise CounterexampleFound("constructed-member-rejected", c.to_dict())
        else:
            c = _raw_sample(rng, n_bound, t_bound, h_bound)
        if surface_mod.theta_check(graph, c):
            w = surface_mod.reconstruct(graph, c)
            if surface_mod.kappa(w) != c:
                raise CounterexampleFound("kappa-reconstruct-roundtrip", c.to_dict())
        else:
            try:
                surface_mod.reconstruct(graph, c)
            except NotInTheta:
                pass
            else:
                raise CounterexampleFound("nonmember-not-rejected", c.to_dict())

    return Report(
        box={"n_bound": n_bound, "t_bound": t_bound, "h_bound": h_bound},
        checked=checked,
        seed=seed,
        elapsed_ms=int((time.monotonic() - start) * 1000),
    )
