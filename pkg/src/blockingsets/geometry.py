"""PG(n, q) as an explicit point/hyperplane incidence structure.

Points are 1-dimensional subspaces of GF(q)^(n+1), stored as coordinate
tuples whose first nonzero entry is 1.  They are numbered in lexicographic
order of the encoded tuples; hyperplanes use the same normalisation and
numbering for their coefficient vectors.  A vector with ``z`` leading zeros
has index ``theta(n - z) + tail`` where ``tail`` reads the remaining
coordinates as a base-q number, so ranking never needs a lookup table.

Incidence is kept as one Python-int bit set per hyperplane, which makes
intersection sizes a single ``(a & b).bit_count()``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ._bits import bits_from_indices, indices_from_bits
from .errors import EqualPoints, GeometryMismatch, NotSquareOrder, TooLarge
from .galois import Field

MAX_POINTS = 10**6


def theta(m: int, q: int) -> int:
    """Number of points of PG(m-1, q), i.e. (q^m - 1)/(q - 1)."""
    return (q**m - 1) // (q - 1)


def gaussian_coefficient(a: int, b: int, q: int) -> int:
    """Number of b-dimensional subspaces of a-dimensional space over GF(q)."""
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    num = den = 1
    for i in range(b):
        num *= q**a - q**i
        den *= q**b - q**i
    return num // den


def normalized_vectors(field: Field, length: int) -> np.ndarray:
    """All normalised nonzero vectors of the given length, in canonical order."""
    q = field.q
    rows = []
    for zeros in range(length - 1, -1, -1):
        tail_len = length - 1 - zeros
        tails = np.array(list(itertools.product(range(q), repeat=tail_len)), dtype=np.int64)
        tails = tails.reshape(q**tail_len, tail_len)
        block = np.zeros((q**tail_len, length), dtype=np.int64)
        block[:, zeros] = 1
        block[:, zeros + 1:] = tails
        rows.append(block)
    return np.concatenate(rows)


def normalize_rows(field: Field, rows: np.ndarray) -> np.ndarray:
    """Scale each nonzero row so its first nonzero entry is 1."""
    rows = np.asarray(rows, dtype=np.int64)
    nz = rows != 0
    if not nz.any(axis=-1).all():
        raise ValueError("the zero vector is not a projective point")
    lead = rows[np.arange(rows.shape[0]), nz.argmax(axis=-1)]
    inv = field.pow_arrays(lead, field.q - 2)
    return field.mul_arrays(rows, inv[:, None])


def rank_rows(field: Field, rows: np.ndarray) -> np.ndarray:
    """Canonical indices of already-normalised rows."""
    rows = np.asarray(rows, dtype=np.int64)
    q, length = field.q, rows.shape[-1]
    zeros = (rows != 0).argmax(axis=-1)
    tail_len = length - 1 - zeros
    weights = q ** np.arange(length - 1, -1, -1, dtype=np.int64)
    # mask out the leading one and everything before it
    keep = np.arange(length)[None, :] > zeros[:, None]
    tail_val = (rows * keep * weights[None, :]).sum(axis=-1)
    return (q**tail_len - 1) // (q - 1) + tail_val


def combine(field: Field, coeffs: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Rows of ``coeffs @ basis`` over GF(q); batch dimensions broadcast."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    basis = np.asarray(basis, dtype=np.int64)
    out = None
    for i in range(coeffs.shape[-1]):
        term = field.mul_arrays(coeffs[..., :, i:i + 1], basis[..., i:i + 1, :])
        out = term if out is None else field.add_arrays(out, term)
    return out


@dataclass(frozen=True)
class Point:
    coords: tuple[int, ...]
    index: int


@dataclass(frozen=True)
class Hyperplane:
    coeffs: tuple[int, ...]
    index: int


class ProjectiveSpace:
    """PG(n, q) with enumerated points, hyperplanes and incidence bit sets."""

    def __init__(self, n: int, field: Field, max_points: int = MAX_POINTS):
        if n < 2:
            raise ValueError("projective dimension must be at least 2")
        q = field.q
        if theta(n + 1, q) > max_points:
            raise TooLarge(f"PG({n},{q}) has {theta(n + 1, q)} points, limit is {max_points}")
        self.n = n
        self.field = field
        self.q = q
        self.coords = normalized_vectors(field, n + 1)
        self.coords.setflags(write=False)
        self.num_points = len(self.coords)
        self.num_blocks = self.num_points
        self.points = [Point(tuple(row), i) for i, row in enumerate(self.coords.tolist())]
        self.hyperplanes = [Hyperplane(p.coords, p.index) for p in self.points]
        self.blocks = self._hyperplane_bitsets()
        through: list[list[int]] = [[] for _ in range(self.num_points)]
        for h, bits in enumerate(self.blocks):
            for i in indices_from_bits(bits):
                through[i].append(h)
        self.blocks_through = through
        self.all_points = (1 << self.num_points) - 1

    def __repr__(self):
        return f"ProjectiveSpace(n={self.n}, q={self.q})"

    @property
    def incidence(self) -> list[int]:
        return self.blocks

    def _hyperplane_bitsets(self) -> list[int]:
        n, F = self.n, self.field
        coeff_vectors = normalized_vectors(F, n)
        out = []
        chunk = max(1, 200_000 // max(1, len(coeff_vectors)))
        for start in range(0, self.num_points, chunk):
            hyp = self.coords[start:start + chunk]
            bases = np.stack([self._kernel_basis(h) for h in hyp])
            pts = combine(F, coeff_vectors[None, :, :], bases)
            idx = rank_rows(F, normalize_rows(F, pts.reshape(-1, n + 1)))
            for row in idx.reshape(len(hyp), -1):
                out.append(bits_from_indices(row))
        return out

    def _kernel_basis(self, coeffs) -> np.ndarray:
        F, n = self.field, self.n
        lead = next(i for i, c in enumerate(coeffs) if c)
        basis = []
        for j in range(n + 1):
            if j == lead:
                continue
            v = np.zeros(n + 1, dtype=np.int64)
            v[j] = 1
            v[lead] = F.neg(int(coeffs[j]))
            basis.append(v)
        return np.array(basis)

    # -- lookups -----------------------------------------------------------------

    def normalize(self, coords) -> tuple[int, ...]:
        row = normalize_rows(self.field, np.array([coords], dtype=np.int64))[0]
        return tuple(int(c) for c in row)

    def point_index(self, coords) -> int:
        if len(coords) != self.n + 1:
            raise GeometryMismatch(f"expected {self.n + 1} coordinates, got {len(coords)}")
        if any(not 0 <= int(c) < self.q for c in coords):
            raise GeometryMismatch(f"coordinate out of range for GF({self.q}): {coords}")
        if not any(coords):
            raise GeometryMismatch("the zero vector is not a point")
        row = normalize_rows(self.field, np.array([coords], dtype=np.int64))
        return int(rank_rows(self.field, row)[0])

    def point(self, coords) -> Point:
        return self.points[self.point_index(coords)]

    def hyperplane(self, coeffs) -> Hyperplane:
        return self.hyperplanes[self.point_index(coeffs)]

    def incident(self, point: Point, hyperplane: Hyperplane) -> bool:
        F = self.field
        acc = 0
        for a, c in zip(point.coords, hyperplane.coeffs):
            acc = F.add(acc, F.mul(a, c))
        return acc == 0

    def points_of(self, bits: int) -> list[Point]:
        return [self.points[i] for i in indices_from_bits(bits)]

    def span(self, rows) -> int:
        """Bit set of the points in the subspace spanned by the given vectors."""
        basis = np.asarray(rows, dtype=np.int64)
        d = basis.shape[0]
        pts = combine(self.field, normalized_vectors(self.field, d), basis)
        nonzero = (pts != 0).any(axis=1)
        pts = pts[nonzero]
        return bits_from_indices(rank_rows(self.field, normalize_rows(self.field, pts)))

    def line_through(self, P: Point, Q: Point) -> int:
        """Bit set of the q+1 points on the line PQ (any dimension)."""
        if P.index == Q.index:
            raise EqualPoints("a line needs two distinct points")
        return self.span([P.coords, Q.coords])

    def span_line(self, P: Point, Q: Point) -> Hyperplane:
        """The unique line of a projective plane through two distinct points."""
        if self.n != 2:
            raise ValueError("span_line returns a hyperplane only in PG(2,q); use line_through")
        if P.index == Q.index:
            raise EqualPoints("a line needs two distinct points")
        F = self.field
        (x1, y1, z1), (x2, y2, z2) = P.coords, Q.coords
        cross = (
            F.sub(F.mul(y1, z2), F.mul(z1, y2)),
            F.sub(F.mul(z1, x2), F.mul(x1, z2)),
            F.sub(F.mul(x1, y2), F.mul(y1, x2)),
        )
        return self.hyperplane(cross)

    def hyperplanes_through(self, point: Point) -> list[Hyperplane]:
        return [self.hyperplanes[h] for h in self.blocks_through[point.index]]

    # -- subspaces -----------------------------------------------------------------

    def enumerate_k_subspaces(self, k: int, limit: int = MAX_POINTS) -> list[int]:
        """Every k-dimensional subspace as a bit set of its points.

        Subspaces are produced from their reduced row echelon bases, pivot
        columns in lexicographic order, so the list is canonical.
        """
        n, q = self.n, self.q
        if not 0 <= k <= n - 1:
            raise ValueError(f"need 0 <= k <= {n - 1}, got {k}")
        count = gaussian_coefficient(n + 1, k + 1, q)
        if count > limit:
            raise TooLarge(f"{count} subspaces of dimension {k} exceed the limit {limit}")
        d = k + 1
        out = []
        for pivots in itertools.combinations(range(n + 1), d):
            free = [(r, c) for r in range(d) for c in range(pivots[r] + 1, n + 1)
                    if c not in pivots]
            for values in itertools.product(range(q), repeat=len(free)):
                basis = np.zeros((d, n + 1), dtype=np.int64)
                for r, c in enumerate(pivots):
                    basis[r, c] = 1
                for (r, c), val in zip(free, values):
                    basis[r, c] = val
                out.append(self.span(basis))
        return out

    # -- unitary polarity ------------------------------------------------------------

    def unitary_polarity(self, x: Point | Hyperplane) -> Hyperplane | Point:
        """Point (a_i) <-> hyperplane (a_i^sqrt(q)); requires square q.

        Conjugation fixes 0 and 1, so normalised vectors stay normalised.
        """
        if not self.field.is_square_order:
            raise NotSquareOrder(f"GF({self.q}) has no unitary polarity")
        F = self.field
        if isinstance(x, Point):
            return self.hyperplanes[self.point_index([F.conjugate(c) for c in x.coords])]
        if isinstance(x, Hyperplane):
            return self.points[self.point_index([F.conjugate(c) for c in x.coeffs])]
        raise TypeError(f"expected a Point or Hyperplane, got {type(x).__name__}")

    def to_json(self) -> dict:
        return {"type": "PG", "dim": self.n, "field": self.field.to_json()}


_SPACE_CACHE: dict = {}


def pg_create(n: int, field: Field, max_points: int = MAX_POINTS) -> ProjectiveSpace:
    """Build (or fetch the cached) PG(n, q) over ``field``."""
    key = (n, field)
    if key not in _SPACE_CACHE:
        _SPACE_CACHE[key] = ProjectiveSpace(n, field, max_points)
    return _SPACE_CACHE[key]


def enumerate_k_subspaces(space: ProjectiveSpace, k: int) -> list[int]:
    return space.enumerate_k_subspaces(k)


def unitary_polarity(space: ProjectiveSpace, x):
    return space.unitary_polarity(x)


def span_line(space: ProjectiveSpace, P: Point, Q: Point) -> Hyperplane:
    return space.span_line(P, Q)
