"""Parity-preserving cube symmetries: coordinate rotations and even flips.

The subgroup of Aut(Q_n) handled here is generated by the cyclic coordinate
shift (coordinate i of the image is coordinate (i+1) mod n of the input)
together with the maps that flip exactly two coordinates. Shifting commutes
past flips by re-indexing the flipped positions, so every element has the
normal form "rotate first, then flip an even-weight mask". That gives the
pair representation used below:

    element = (shift, flip_mask),  popcount(flip_mask) even
    action:  v  ->  rotate(v, shift) XOR flip_mask

Rotations and even-weight flips both preserve popcount parity, so the whole
group does. There are n choices of shift and 2^(n-1) even-weight masks,
hence n * 2^(n-1) elements, exactly the number of edges of Q_n. The group
in fact acts sharply transitively on edges (one element per ordered edge
pair); verify_sharp_edge_transitivity checks that exhaustively.

Note the packed-int consequence of the string convention in `cube`: a
left shift of the coordinate string is a *right* rotation of the bit word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .cube import Dimension, Edge, all_edges, check_edge, check_vertex
from .errors import DEFAULT_BUDGET, ParseError, check_budget


class Automorphism(NamedTuple):
    """Normal form (shift, flip_mask) of a rotate-then-flip symmetry."""

    shift: int
    flip_mask: int


def check_element(dim: Dimension, g: Automorphism) -> Automorphism:
    if not 0 <= g.shift < dim.n:
        raise ValueError(f"shift {g.shift} outside [0, {dim.n})")
    if not 0 <= g.flip_mask < dim.num_vertices:
        raise ValueError(f"flip mask {g.flip_mask:#x} outside n={dim.n}")
    if g.flip_mask.bit_count() & 1:
        raise ValueError(
            f"flip mask {g.flip_mask:#x} has odd popcount; not parity-preserving"
        )
    return g


def rotate_coords(dim: Dimension, bits: int, shift: int) -> int:
    """Shift the coordinate string left by `shift`: image bit i is input
    bit (i + shift) mod n."""
    n = dim.n
    shift %= n
    if shift == 0:
        return bits
    return ((bits >> shift) | (bits << (n - shift))) & dim.coord_mask


def identity(dim: Dimension) -> Automorphism:
    return Automorphism(0, 0)


def rotation(dim: Dimension, power: int = 1) -> Automorphism:
    """The coordinate shift applied `power` times."""
    return Automorphism(power % dim.n, 0)


def double_flip(dim: Dimension, i: int, j: int) -> Automorphism:
    """The generator flipping exactly coordinates i and j."""
    if i == j:
        raise ValueError("double flip needs two distinct coordinates")
    if not (0 <= i < dim.n and 0 <= j < dim.n):
        raise ValueError(f"flip coordinates ({i}, {j}) outside n={dim.n}")
    return Automorphism(0, (1 << i) | (1 << j))


def apply_vertex(dim: Dimension, g: Automorphism, v: int) -> int:
    check_element(dim, g)
    check_vertex(dim, v)
    return rotate_coords(dim, v, g.shift) ^ g.flip_mask


def compose(dim: Dimension, g2: Automorphism, g1: Automorphism) -> Automorphism:
    """The element acting as g2 after g1.

    Pushing g1's flip mask through g2's rotation re-indexes it, so the
    composite stays in normal form:
        v -> rot(rot(v,s1)^m1, s2)^m2 = rot(v, s1+s2) ^ (rot(m1,s2) ^ m2)
    """
    check_element(dim, g1)
    check_element(dim, g2)
    return Automorphism(
        (g1.shift + g2.shift) % dim.n,
        rotate_coords(dim, g1.flip_mask, g2.shift) ^ g2.flip_mask,
    )


def inverse(dim: Dimension, g: Automorphism) -> Automorphism:
    check_element(dim, g)
    back = (-g.shift) % dim.n
    return Automorphism(back, rotate_coords(dim, g.flip_mask, back))


def apply_edge(dim: Dimension, g: Automorphism, e: Edge) -> Edge:
    """Image of a canonical edge; canonical again because parity is kept.

    The even endpoint maps to the image's even endpoint, and the flipped
    bit index just shifts with the rotation.
    """
    check_element(dim, g)
    check_edge(dim, e)
    return Edge(
        apply_vertex(dim, g, e.even_end),
        (e.bit_index - g.shift) % dim.n,
    )


def group_order(dim: Dimension) -> int:
    return dim.n << (dim.n - 1)


def enumerate_group(
    dim: Dimension, *, budget: int = DEFAULT_BUDGET
) -> list[Automorphism]:
    """All n*2^(n-1) elements, in (shift, flip_mask) lexicographic order."""
    check_budget("group enumeration", group_order(dim), budget)
    return [
        Automorphism(s, m)
        for s in range(dim.n)
        for m in range(dim.num_vertices)
        if m.bit_count() & 1 == 0
    ]


def sample_uniform(dim: Dimension, rng: random.Random) -> Automorphism:
    """One uniformly random element from a caller-owned seeded source.

    The shift is uniform on [0, n). The mask draws one fair bit per
    coordinate except the last, which is set to whatever makes the total
    popcount even; every even-weight mask arises from exactly one draw.
    """
    shift = rng.randrange(dim.n)
    mask = 0
    for i in range(dim.n - 1):
        if rng.getrandbits(1):
            mask |= 1 << i
    if mask.bit_count() & 1:
        mask |= 1 << (dim.n - 1)
    return Automorphism(shift, mask)


@dataclass(frozen=True)
class TransitivityReport:
    """Outcome of the exhaustive sharp-edge-transitivity check."""

    ok: bool
    group_size: int
    edge_count: int
    pair_count: int
    counterexample: Optional[tuple[Edge, Edge]]


def verify_sharp_edge_transitivity(
    dim: Dimension, *, budget: int = DEFAULT_BUDGET
) -> TransitivityReport:
    """Check that every ordered edge pair has exactly one mapping element.

    Since the group and the edge set have equal size, it is enough to see
    that each edge's orbit map g -> g(e) is injective and onto: a repeat
    image and a missing image appear together, and either one is returned
    as a counterexample (source edge, problem edge).
    """
    order = group_order(dim)
    check_budget("edge-pair transitivity sweep", order * dim.num_edges, budget)
    edges = all_edges(dim, budget=budget)
    group = enumerate_group(dim, budget=budget)
    all_edge_set = set(edges)
    for e1 in edges:
        seen: set[Edge] = set()
        duplicate: Optional[Edge] = None
        for g in group:
            img = apply_edge(dim, g, e1)
            if img in seen and duplicate is None:
                duplicate = img
            seen.add(img)
        if duplicate is not None:
            return TransitivityReport(
                False, order, len(edges), order * len(edges), (e1, duplicate)
            )
        if len(seen) != len(edges):
            missing = min(all_edge_set - seen)
            return TransitivityReport(
                False, order, len(edges), order * len(edges), (e1, missing)
            )
    return TransitivityReport(True, order, len(edges), order * len(edges), None)


def element_to_text(dim: Dimension, g: Automorphism) -> str:
    """Log format "s=<shift>;m=<mask as coordinate string>"."""
    check_element(dim, g)
    mask_str = "".join(
        "1" if (g.flip_mask >> i) & 1 else "0" for i in range(dim.n)
    )
    return f"s={g.shift};m={mask_str}"


def parse_element(dim: Dimension, text: str) -> Automorphism:
    """Inverse of element_to_text."""
    try:
        shift_part, mask_part = text.split(";")
        if not shift_part.startswith("s=") or not mask_part.startswith("m="):
            raise ValueError
        shift = int(shift_part[2:])
        mask_str = mask_part[2:]
    except ValueError:
        raise ParseError(f"bad automorphism text {text!r}") from None
    if len(mask_str) != dim.n or set(mask_str) - {"0", "1"}:
        raise ParseError(f"bad flip-mask string in {text!r}")
    mask = 0
    for i, ch in enumerate(mask_str):
        if ch == "1":
            mask |= 1 << i
    try:
        return check_element(dim, Automorphism(shift, mask))
    except ValueError as exc:
        raise ParseError(f"invalid automorphism {text!r}: {exc}") from None
