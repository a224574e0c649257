"""Combinatorial pants decompositions of a closed genus-g surface.

A genus ``g >= 2`` surface decomposes along ``r = 3g - 3`` disjoint oriented
curves into ``2g - 2`` pairs of pants.  Only the incidence and orientation
combinatorics matter here: curves are abstract ids, and each pants has three
slots ``(curve, side, flag)``.  The two sides (0 and 1) of a curve's annular
neighborhood are glued to two pants slots (possibly of the same pants).  The
flag says whether the curve's orientation agrees with the counterclockwise
(``ccw``) or clockwise (``cw``) boundary orientation of that pants; flipping
both flags of a curve swaps which of its two intersection counts plays the
"towards" role on the adjacent pants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadGenus, CountMismatch, DanglingSide, Disconnected

CCW = "ccw"
CW = "cw"


@dataclass(frozen=True, slots=True)
class Slot:
    curve: int
    side: int
    flag: str

    @classmethod
    def from_dict(cls, data: dict) -> "Slot":
        return cls(data["curve"], data["side"], data["flag"])

    def to_dict(self) -> dict:
        return {"curve": self.curve, "side": self.side, "flag": self.flag}


@dataclass(frozen=True, slots=True)
class Pants:
    slots: tuple[Slot, Slot, Slot]

    @classmethod
    def from_dict(cls, data: dict) -> "Pants":
        return cls(tuple(Slot.from_dict(s) for s in data["slots"]))

    def to_dict(self) -> dict:
        return {"slots": [s.to_dict() for s in self.slots]}


@dataclass(frozen=True, slots=True)
class DecompositionGraph:
    genus: int
    curves: tuple[int, ...]
    pants: tuple[Pants, ...]

    def curve_index(self, curve: int) -> int:
        return self.curves.index(curve)

    def coordinate_dimension(self) -> int:
        """Total coordinate count: 4 per curve plus 2 per pants (= 16g - 16)."""
        return 4 * len(self.curves) + 2 * len(self.pants)

    @classmethod
    def from_dict(cls, data: dict) -> "DecompositionGraph":
        return cls(
            genus=data["genus"],
            curves=tuple(data["curves"]),
            pants=tuple(Pants.from_dict(p) for p in data["pants"]),
        )

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "curves": list(self.curves),
            "pants": [p.to_dict() for p in self.pants],
        }


def validate_graph(g: DecompositionGraph) -> DecompositionGraph:
    """Check counts, slot coverage, and connectivity; return ``g`` unchanged.

    Raises CountMismatch when the curve or pants count is wrong for the
    genus (or curve ids repeat, or a pants lacks exactly three slots),
    DanglingSide when some (curve, side) pair is not covered by exactly one
    slot, and Disconnected when the pants incidence graph falls apart.
    """
    if g.genus < 2:
        raise BadGenus(f"pants decompositions require genus >= 2, got {g.genus}")
    r = 3 * g.genus - 3
    if len(g.curves) != r:
        raise CountMismatch(f"expected {r} curves for genus {g.genus}, got {len(g.curves)}")
    if len(set(g.curves)) != len(g.curves):
        raise CountMismatch("curve ids must be distinct")
    if len(g.pants) != 2 * g.genus - 2:
        raise CountMismatch(
            f"expected {2 * g.genus - 2} pants for genus {g.genus}, got {len(g.pants)}"
        )

    curve_set = set(g.curves)
    seen: dict[tuple[int, int], int] = {}
    for p_idx, pants in enumerate(g.pants):
        if len(pants.slots) != 3:
            raise CountMismatch(f"pants {p_idx} has {len(pants.slots)} slots, expected 3")
        for slot in pants.slots:
            if slot.curve not in curve_set:
                raise DanglingSide(f"slot references unknown curve {slot.curve}")
            if slot.side not in (0, 1):
                raise DanglingSide(f"curve {slot.curve}: side must be 0 or 1, got {slot.side}")
            if slot.flag not in (CCW, CW):
                raise DanglingSide(
                    f"curve {slot.curve}: flag must be {CCW!r} or {CW!r}, got {slot.flag!r}"
                )
            key = (slot.curve, slot.side)
            if key in seen:
                raise DanglingSide(f"(curve {slot.curve}, side {slot.side}) used twice")
            seen[key] = p_idx
    for curve in g.curves:
        for side in (0, 1):
            if (curve, side) not in seen:
                raise DanglingSide(f"(curve {curve}, side {side}) is not glued to any pants")

    # Connectivity of the incidence graph: pants as nodes, curves as edges.
    adjacency: dict[int, set[int]] = {i: set() for i in range(len(g.pants))}
    for curve in g.curves:
        a = seen[(curve, 0)]
        b = seen[(curve, 1)]
        adjacency[a].add(b)
        adjacency[b].add(a)
    reached = {0}
    frontier = [0]
    while frontier:
        node = frontier.pop()
        for nb in adjacency[node]:
            if nb not in reached:
                reached.add(nb)
                frontier.append(nb)
    if len(reached) != len(g.pants):
        raise Disconnected(f"only {len(reached)} of {len(g.pants)} pants are reachable")
    return g


def standard_graph(genus: int) -> DecompositionGraph:
    """Deterministic chain decomposition of the genus-``genus`` surface.

    The pants incidence graph is a cycle on the 2g - 2 pants plus one extra
    parallel edge between pants 2i and 2i + 1 for each i; at genus 2 this
    degenerates to two pants joined by all three curves.  Each curve runs
    from its lower-indexed pants (side 0, ccw) to the other (side 1, cw).
    """
    if genus < 2:
        raise BadGenus(f"standard decompositions require genus >= 2, got {genus}")
    n_pants = 2 * genus - 2
    edges = [(i, (i + 1) % n_pants) for i in range(n_pants)]
    edges += [(2 * i, 2 * i + 1) for i in range(genus - 1)]
    slots: list[list[Slot]] = [[] for _ in range(n_pants)]
    for curve, (a, b) in enumerate(edges, start=1):
        tail, head = (a, b) if a <= b else (b, a)
        slots[tail].append(Slot(curve, 0, CCW))
        slots[head].append(Slot(curve, 1, CW))
    pants = tuple(
        Pants(tuple(sorted(ps, key=lambda s: (s.curve, s.side)))) for ps in slots
    )
    graph = DecompositionGraph(genus=genus, curves=tuple(range(1, 3 * genus - 2)), pants=pants)
    return validate_graph(graph)
