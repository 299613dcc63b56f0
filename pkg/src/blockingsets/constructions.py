"""Explicit point sets: Hermitian curves and surfaces, Baer subplanes,
elliptic quadrics, and the multiple blocking sets built from them.

Every constructor checks its own output (size formula plus the blocking
property it is supposed to have) and raises RuntimeError on failure; a
failure would be a bug, not a user error.
"""

from __future__ import annotations

import numpy as np

from ._bits import bits_from_indices, indices_from_bits
from .blocking import PointSet, block_meets, is_minimal_t_fold
from .errors import NotSquareOrder, TOutOfRange
from .galois import Field, field_of_order
from .geometry import ProjectiveSpace, pg_create


def _plane(q: int) -> ProjectiveSpace:
    return pg_create(2, field_of_order(q))


def _square_root_order(q: int) -> int:
    F = field_of_order(q)
    if not F.is_square_order:
        raise NotSquareOrder(f"q = {q} is not a square")
    return F.sqrt_order


def _zero_set(space: ProjectiveSpace, values: np.ndarray) -> int:
    return bits_from_indices(np.flatnonzero(values == 0))


def _check(S: PointSet, t: int, size: int) -> PointSet:
    if S.size != size:
        raise RuntimeError(f"{S.provenance}: size {S.size}, expected {size}")
    if not is_minimal_t_fold(S, t):
        raise RuntimeError(f"{S.provenance}: not a minimal {t}-fold blocking set")
    return S


def hermitian_form_values(space: ProjectiveSpace) -> np.ndarray:
    """Sum of x_i^(sqrt(q)+1) at every point of the space."""
    F = space.field
    norms = F.pow_arrays(space.coords, F.sqrt_order + 1)
    acc = norms[:, 0]
    for j in range(1, norms.shape[1]):
        acc = F.add_arrays(acc, norms[:, j])
    return acc


def hermitian_curve(q: int) -> PointSet:
    r = _square_root_order(q)
    space = _plane(q)
    H = PointSet(space, _zero_set(space, hermitian_form_values(space)),
                 {"construction": "hermitian-curve", "q": q})
    return _check(H, 1, q * r + 1)


def _base_point_and_tangent(H: PointSet):
    space = H.geometry
    P = space.points[H.indices()[0]]
    L = space.unitary_polarity(P)
    assert (space.blocks[L.index] & H.members) == 1 << P.index
    return P, L


def secants_through_base_point(q: int) -> list[int]:
    """Hyperplane indices of the q secants through the canonical curve point."""
    H = hermitian_curve(q)
    P, L = _base_point_and_tangent(H)
    return [h for h in H.geometry.blocks_through[P.index] if h != L.index]


def hermitian_tfold(q: int, t: int, line_choice=None) -> PointSet:
    """Hermitian curve plus t-1 secants through a curve point P and their poles.

    ``line_choice`` picks t-1 positions in the list of the q secants
    through P (sorted by line index); the default takes the first t-1.
    """
    r = _square_root_order(q)
    if not 2 <= t <= r + 1:
        raise TOutOfRange(f"need 2 <= t <= {r + 1} for q = {q}")
    H = hermitian_curve(q)
    space = H.geometry
    P, L = _base_point_and_tangent(H)
    secants = [h for h in space.blocks_through[P.index] if h != L.index]
    positions = list(range(t - 1)) if line_choice is None else [int(i) for i in line_choice]
    if len(set(positions)) != t - 1 or any(not 0 <= i < len(secants) for i in positions):
        raise TOutOfRange(f"line_choice must be {t - 1} distinct positions in [0, {q})")
    bits = H.members
    for i in positions:
        line = space.hyperplanes[secants[i]]
        bits |= space.blocks[line.index] | 1 << space.unitary_polarity(line).index
    S = PointSet(space, bits, {"construction": "hermitian-tfold", "q": q, "t": t,
                               "lines": positions})
    S = _check(S, t, q * r + 1 + (t - 1) * (q - r + 1))
    meets = block_meets(S)
    for Q in H.indices():
        tangent = space.unitary_polarity(space.points[Q])
        if meets[tangent.index] != t:
            raise RuntimeError(f"tangent at point {Q} meets the set in {meets[tangent.index]} points")
    return S


def pavese_2fold(q: int) -> PointSet:
    """Hermitian curve with its tangent line at P added and P removed."""
    r = _square_root_order(q)
    H = hermitian_curve(q)
    space = H.geometry
    P, L = _base_point_and_tangent(H)
    bits = (H.members | space.blocks[L.index]) & ~(1 << P.index)
    S = PointSet(space, bits, {"construction": "pavese", "q": q})
    S = _check(S, 2, q * r + q)
    meets = block_meets(S)
    for h in space.blocks_through[P.index]:
        if h != L.index and meets[h] != r:
            raise RuntimeError("a line through P other than the tangent does not meet S in sqrt(q) points")
    return S


def baer_subplane(q: int) -> PointSet:
    """Points whose normalised coordinates all lie in GF(sqrt(q))."""
    r = _square_root_order(q)
    space = _plane(q)
    sub = np.array(space.field.subfield(r))
    inside = np.isin(space.coords, sub).all(axis=1)
    S = PointSet(space, bits_from_indices(np.flatnonzero(inside)),
                 {"construction": "baer-subplane", "q": q})
    if S.size != q + r + 1:
        raise RuntimeError(f"Baer subplane has {S.size} points")
    return S


def baer_complement(q: int) -> PointSet:
    r = _square_root_order(q)
    B = baer_subplane(q)
    S = PointSet(B.geometry, B.complement().members, {"construction": "baer-complement", "q": q})
    return _check(S, q - r, q * q - r)


def plane_minus_point(q: int, point: int = 0) -> PointSet:
    space = _plane(q)
    S = PointSet(space, space.all_points & ~(1 << point),
                 {"construction": "plane-minus-point", "q": q, "point": point})
    return _check(S, q, q * q + q)


# -- PG(3, q) -----------------------------------------------------------------------


def irreducible_binary_form(F: Field) -> tuple[int, int]:
    """Smallest (a, b) with z^2 + a z + b irreducible over F."""
    for a in range(F.q):
        for b in range(1, F.q):
            if all(F.add(F.add(F.mul(z, z), F.mul(a, z)), b) for z in range(F.q)):
                return a, b
    raise AssertionError("every finite field has an irreducible quadratic")


def elliptic_quadric_values(space: ProjectiveSpace) -> np.ndarray:
    """x0 x1 + x2^2 + a x2 x3 + b x3^2 at every point of PG(3, q)."""
    F = space.field
    a, b = irreducible_binary_form(F)
    x0, x1, x2, x3 = (space.coords[:, j] for j in range(4))
    terms = [
        F.mul_arrays(x0, x1),
        F.mul_arrays(x2, x2),
        F.mul_arrays(F.mul_arrays(x2, x3), a),
        F.mul_arrays(F.mul_arrays(x3, x3), b),
    ]
    acc = terms[0]
    for term in terms[1:]:
        acc = F.add_arrays(acc, term)
    return acc


def elliptic_quadric_ovoid(q: int) -> PointSet:
    space = pg_create(3, field_of_order(q))
    O = PointSet(space, _zero_set(space, elliptic_quadric_values(space)),
                 {"construction": "elliptic-quadric", "q": q})
    meets = set(block_meets(O))
    if O.size != q * q + 1 or meets != {1, q + 1}:
        raise RuntimeError(f"ovoid has {O.size} points and plane sizes {sorted(meets)}")
    return O


def tangent_lines_at_base_point(O: PointSet) -> tuple[int, list[int]]:
    """The ovoid's first point P and the q+1 tangent lines through it (bit sets)."""
    space = O.geometry
    P = O.indices()[0]
    tangent_plane = next(h for h in space.blocks_through[P]
                         if (space.blocks[h] & O.members) == 1 << P)
    lines, covered = [], 1 << P
    for R in indices_from_bits(space.blocks[tangent_plane]):
        if covered >> R & 1:
            continue
        line = space.line_through(space.points[P], space.points[R])
        covered |= line
        lines.append(line)
    return P, lines


def ovoid_tfold(q: int, t: int, line_choice=None) -> PointSet:
    """Ovoid plus t-1 tangent lines through one of its points, minus that point."""
    if not 2 <= t <= q:
        raise TOutOfRange(f"need 2 <= t <= {q}")
    O = elliptic_quadric_ovoid(q)
    P, lines = tangent_lines_at_base_point(O)
    positions = list(range(t - 1)) if line_choice is None else [int(i) for i in line_choice]
    if len(set(positions)) != t - 1 or any(not 0 <= i < len(lines) for i in positions):
        raise TOutOfRange(f"line_choice must be {t - 1} distinct positions in [0, {q + 1})")
    bits = O.members
    for i in positions:
        bits |= lines[i]
    bits &= ~(1 << P)
    S = PointSet(O.geometry, bits, {"construction": "ovoid-tfold", "q": q, "t": t,
                                    "lines": positions})
    return _check(S, t, q * q + (t - 1) * q)


def hermitian_surface(q: int) -> PointSet:
    r = _square_root_order(q)
    space = pg_create(3, field_of_order(q))
    S = PointSet(space, _zero_set(space, hermitian_form_values(space)),
                 {"construction": "hermitian-surface", "q": q})
    return _check(S, q * r + 1, r**5 + r**3 + q + 1)


CONSTRUCTIONS = {
    "hermitian-curve": (hermitian_curve, lambda q: 1),
    "hermitian-tfold": (hermitian_tfold, None),
    "pavese": (pavese_2fold, lambda q: 2),
    "baer-subplane": (baer_subplane, lambda q: 1),
    "baer-complement": (baer_complement, lambda q: q - field_of_order(q).sqrt_order),
    "plane-minus-point": (plane_minus_point, lambda q: q),
    "elliptic-quadric": (elliptic_quadric_ovoid, lambda q: 1),
    "ovoid-tfold": (ovoid_tfold, None),
    "hermitian-surface": (hermitian_surface, lambda q: q * field_of_order(q).sqrt_order + 1),
}
