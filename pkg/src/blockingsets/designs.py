"""2-(v, k, lambda) designs and the spectral incidence bound.

For a design with replication number r and b blocks, any point subset S and
block subset L satisfy

    | i(S, L) - r|S||L|/b |  <=  sqrt(r - lambda) * sqrt(|S||L|(1 - |S|/v)(1 - |L|/b))

where i(S, L) counts incident (point, block) pairs.  Both sides are compared
squared, as exact fractions, so there is no rounding anywhere.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ._bits import as_bits, bits_from_indices, indices_from_bits
from .errors import IndexOutOfRange, NonConstantLambda, NonUniformBlocks, NotEqualityCase, TooLarge
from .geometry import ProjectiveSpace, gaussian_coefficient, theta


class Design:
    """A validated 2-design on points ``0..v-1`` with blocks as bit sets."""

    def __init__(self, v: int, blocks):
        self.v = int(v)
        self.blocks = [as_bits(B, self.v) for B in blocks]
        if not self.blocks:
            raise NonUniformBlocks("a design needs at least one block")
        sizes = {B.bit_count() for B in self.blocks}
        if len(sizes) != 1 or 0 in sizes:
            raise NonUniformBlocks(f"block sizes {sorted(sizes)} are not a single positive value")
        self.k = sizes.pop()
        self.b = len(self.blocks)
        self.num_points = self.v
        self.num_blocks = self.b
        through: list[list[int]] = [[] for _ in range(self.v)]
        for j, B in enumerate(self.blocks):
            for x in indices_from_bits(B):
                through[x].append(j)
        self.blocks_through = through
        self.all_points = (1 << self.v) - 1
        self.lam = self._pair_coverage()
        if self.k < 2 or self.v < 2:
            raise NonUniformBlocks("blocks need at least two points and v >= 2")
        self.r = self.lam * (self.v - 1) // (self.k - 1)
        if len({len(t) for t in through}) != 1 or len(through[0]) != self.r:
            raise NonConstantLambda("replication number is not constant")

    def _pair_coverage(self) -> int:
        pb = [bits_from_indices(t) for t in self.blocks_through]
        seen = set()
        for x, y in itertools.combinations(range(self.v), 2):
            seen.add((pb[x] & pb[y]).bit_count())
            if len(seen) > 1:
                raise NonConstantLambda(
                    f"pair ({x}, {y}) lies in a different number of blocks than earlier pairs")
        if not seen:
            raise NonConstantLambda("need at least two points")
        return seen.pop()

    @property
    def lambda_(self) -> int:
        return self.lam

    @property
    def params(self) -> tuple[int, int, int, int, int]:
        """(v, b, r, k, lambda)."""
        return (self.v, self.b, self.r, self.k, self.lam)

    @property
    def is_symmetric(self) -> bool:
        return self.b == self.v

    def __repr__(self):
        return f"Design(v={self.v}, b={self.b}, r={self.r}, k={self.k}, lambda={self.lam})"

    def to_json(self) -> dict:
        return {"v": self.v, "blocks": [indices_from_bits(B) for B in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "Design":
        return design_from_blocks(int(data["v"]), data["blocks"])


def design_from_blocks(v: int, blocks) -> Design:
    return Design(v, blocks)


def design_from_geometry(space: ProjectiveSpace, k_dim: int) -> Design:
    """Points versus k_dim-dimensional subspaces of PG(n, q)."""
    n, q = space.n, space.q
    if not 0 <= k_dim <= n - 1:
        raise ValueError(f"need 0 <= k_dim <= {n - 1}")
    blocks = space.blocks if k_dim == n - 1 else space.enumerate_k_subspaces(k_dim)
    d = Design(space.num_points, blocks)
    expected = (
        theta(n + 1, q),
        gaussian_coefficient(n + 1, k_dim + 1, q),
        gaussian_coefficient(n, k_dim, q),
        theta(k_dim + 1, q),
        gaussian_coefficient(n - 1, k_dim - 1, q) if k_dim >= 1 else 0,
    )
    assert d.params == expected, (d.params, expected)
    return d


def _block_indices(design, L) -> list[int]:
    if isinstance(L, int):
        idx = indices_from_bits(L)
    else:
        idx = sorted({int(j) for j in L})
    if any(not 0 <= j < design.num_blocks for j in idx):
        raise IndexOutOfRange(f"block index outside [0, {design.num_blocks})")
    return idx


def incidence_count(design, S, L) -> int:
    """Number of incident pairs (x, B) with x in S and B in L."""
    bits = as_bits(S, design.num_points)
    return sum((design.blocks[j] & bits).bit_count() for j in _block_indices(design, L))


def exact_sqrt(x: Fraction) -> Fraction | None:
    """The rational square root of ``x`` if there is one."""
    if x < 0:
        return None
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


@dataclass
class MixingReport:
    incidences: int
    expected: Fraction
    deviation_sq: Fraction
    rhs_sq: Fraction
    holds: bool
    equality: bool
    degenerate: bool
    size_S: int = 0
    size_L: int = 0

    @property
    def deviation(self) -> Fraction:
        """Signed i(S,L) - r|S||L|/b."""
        return self.incidences - self.expected

    @property
    def rhs(self) -> Fraction | float:
        """Right-hand side; exact when it is rational."""
        root = exact_sqrt(self.rhs_sq)
        return root if root is not None else math.sqrt(self.rhs_sq)

    def to_json(self) -> dict:
        return {
            "incidences": self.incidences,
            "expected": str(self.expected),
            "deviation_sq": str(self.deviation_sq),
            "rhs_sq": str(self.rhs_sq),
            "holds": self.holds,
            "equality": self.equality,
            "degenerate": self.degenerate,
        }


def _report(design, s: int, l: int, i: int) -> MixingReport:
    v, b, r, lam = design.v, design.b, design.r, design.lam
    expected = Fraction(r * s * l, b)
    dev_sq = (i - expected) ** 2
    rhs_sq = (r - lam) * s * l * (1 - Fraction(s, v)) * (1 - Fraction(l, b))
    return MixingReport(
        incidences=i,
        expected=expected,
        deviation_sq=dev_sq,
        rhs_sq=rhs_sq,
        holds=dev_sq <= rhs_sq,
        equality=dev_sq == rhs_sq,
        degenerate=s in (0, v) or l in (0, b),
        size_S=s,
        size_L=l,
    )


def mixing_bound_check(design, S, L) -> MixingReport:
    bits = as_bits(S, design.num_points)
    idx = _block_indices(design, L)
    i = sum((design.blocks[j] & bits).bit_count() for j in idx)
    return _report(design, bits.bit_count(), len(idx), i)


def equality_regularity_check(design, S, L) -> bool:
    """Check the regularity forced by equality in the incidence bound.

    For S' in {S, complement} and L' in {L, complement}: every point of S'
    lies in the same number of blocks of L', and every block of L' meets S'
    in the same number of points.  Only meaningful for non-degenerate
    equality instances.
    """
    rep = mixing_bound_check(design, S, L)
    if not rep.equality:
        raise NotEqualityCase("the incidence bound is strict for this pair")
    if rep.degenerate:
        raise NotEqualityCase("degenerate pair (empty or full subset); regularity is not implied")
    bits = as_bits(S, design.num_points)
    chosen = set(_block_indices(design, L))
    for S_part in (bits, design.all_points & ~bits):
        for L_part in (chosen, set(range(design.num_blocks)) - chosen):
            L_bits = bits_from_indices(L_part)
            degrees = {
                (bits_from_indices(design.blocks_through[x]) & L_bits).bit_count()
                for x in indices_from_bits(S_part)
            }
            meets = {(design.blocks[j] & S_part).bit_count() for j in L_part}
            if len(degrees) > 1 or len(meets) > 1:
                return False
    return True


@dataclass
class MixingScan:
    pairs: int = 0
    violations: list = field(default_factory=list)
    equalities: list = field(default_factory=list)
    degenerate_equalities: int = 0

    @property
    def regularity_failures(self) -> int:
        return sum(1 for e in self.equalities if not e["regular"])

    def to_json(self, max_listed: int = 50) -> dict:
        return {
            "pairs": self.pairs,
            "violations": len(self.violations),
            "violation_examples": self.violations[:max_listed],
            "nondegenerate_equalities": len(self.equalities),
            "regularity_failures": self.regularity_failures,
            "degenerate_equalities": self.degenerate_equalities,
            "equality_examples": self.equalities[:max_listed],
        }


def _scan_pair(design, scan: MixingScan, S_bits: int, L_idx: list[int], meets: list[int]):
    i = sum(meets[j] for j in L_idx)
    rep = _report(design, S_bits.bit_count(), len(L_idx), i)
    scan.pairs += 1
    entry = None
    if not rep.holds or rep.equality:
        entry = {"S": indices_from_bits(S_bits), "L": L_idx}
    if not rep.holds:
        scan.violations.append(entry)
    elif rep.equality:
        if rep.degenerate:
            scan.degenerate_equalities += 1
        else:
            entry["regular"] = equality_regularity_check(design, S_bits, L_idx)
            scan.equalities.append(entry)


def mixing_scan_exhaustive(design, max_pairs: int = 1 << 22) -> MixingScan:
    """Check the incidence bound on every (point subset, block subset) pair."""
    total = 1 << (design.v + design.b)
    if total > max_pairs:
        raise TooLarge(f"{total} subset pairs exceed the exhaustive limit {max_pairs}")
    scan = MixingScan()
    block_subsets = [indices_from_bits(m) for m in range(1 << design.b)]
    for S_bits in range(1 << design.v):
        meets = [(B & S_bits).bit_count() for B in design.blocks]
        for L_idx in block_subsets:
            _scan_pair(design, scan, S_bits, L_idx, meets)
    return scan


def mixing_scan_random(design, samples: int, seed: int = 0) -> MixingScan:
    """Check the bound on uniformly random subset pairs."""
    rng = random.Random(seed)
    scan = MixingScan()
    for _ in range(samples):
        S_bits = rng.getrandbits(design.v)
        L_idx = [j for j in range(design.b) if rng.random() < 0.5]
        meets = [(B & S_bits).bit_count() for B in design.blocks]
        _scan_pair(design, scan, S_bits, L_idx, meets)
    return scan
