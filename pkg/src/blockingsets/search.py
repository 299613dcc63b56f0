"""Largest minimal t-fold blocking sets by exhaustive and heuristic search.

The exhaustive search walks include/exclude decisions in point-index order
and keeps, per block, the number of chosen points and of still-undecided
points.  A branch dies when

* some block can no longer reach t points,
* a chosen point already has every block through it above t points (it can
  never lie on a t-secant, because counts only grow), or
* it cannot beat the best size found so far.

The decision space is split on the membership of the first three points and
each of the eight parts is searched independently, so the result, the
witness order and the ``explored`` count do not depend on ``workers``.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from ._bits import as_bits, bits_from_indices, indices_from_bits
from .blocking import PointSet, is_minimal_t_fold, main_bound, plane_order
from .errors import NotBlocking, TooLarge

MAX_EXHAUSTIVE_POINTS = 25
WITNESS_CAP = 100
PREFIX_LENGTH = 3


@dataclass
class SearchResult:
    t: int
    best_size: int
    witnesses: list[PointSet]
    explored: int
    exhaustive: bool
    seed: int | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        geom = self.witnesses[0].geometry if self.witnesses else None
        out = {
            "t": self.t,
            "best_size": self.best_size,
            "exhaustive": self.exhaustive,
            "explored": self.explored,
            "seed": self.seed,
            "witnesses": [w.indices() for w in self.witnesses],
        }
        if geom is not None and hasattr(geom, "coords"):
            out["geometry"] = geom.to_json()
            out["witness_points"] = [[list(p.coords) for p in w.points()] for w in self.witnesses]
        out.update(self.extra)
        return out


def _structure(geometry):
    return (
        geometry.num_points,
        [indices_from_bits(B) for B in geometry.blocks],
        [list(js) for js in geometry.blocks_through],
    )


def _search_part(structure, t: int, prefix: tuple[int, ...], size_cap, witness_cap: int):
    v, block_pts, through = structure
    cnt = [0] * len(block_pts)
    rem = [len(pts) for pts in block_pts]
    chosen = [False] * v
    best = -1
    witnesses: list[int] = []
    explored = 0

    def dead(y: int) -> bool:
        return all(cnt[j] > t for j in through[y])

    def rec(i: int, size: int, bits: int):
        nonlocal best, explored
        explored += 1
        if size + (v - i) < best:
            return
        if i == v:
            if size > best:
                best, witnesses[:] = size, [bits]
            elif size == best and len(witnesses) < witness_cap:
                witnesses.append(bits)
            return
        options = (prefix[i],) if i < len(prefix) else (1, 0)
        for take in options:
            if take:
                if size_cap is not None and size + 1 > size_cap:
                    continue
                crossed = []
                for j in through[i]:
                    cnt[j] += 1
                    rem[j] -= 1
                    if cnt[j] == t + 1:
                        crossed.append(j)
                chosen[i] = True
                ok = not dead(i) and not any(
                    chosen[y] and dead(y) for j in crossed for y in block_pts[j])
                if ok:
                    rec(i + 1, size + 1, bits | 1 << i)
                chosen[i] = False
                for j in through[i]:
                    cnt[j] -= 1
                    rem[j] += 1
            else:
                for j in through[i]:
                    rem[j] -= 1
                if all(cnt[j] + rem[j] >= t for j in through[i]):
                    rec(i + 1, size, bits)
                for j in through[i]:
                    rem[j] += 1

    rec(0, 0, 0)
    return best, witnesses, explored


def exhaustive_max_minimal(geometry, t: int, size_cap: int | None = None, *,
                           max_points: int = MAX_EXHAUSTIVE_POINTS,
                           witness_cap: int = WITNESS_CAP, workers: int = 1,
                           progress=None) -> SearchResult:
    """Exact maximum size of a minimal t-fold blocking set.

    ``size_cap`` restricts the search to sets of at most that size (for
    example the floor of the plane bound); by default nothing is assumed.
    """
    if geometry.num_points > max_points:
        raise TooLarge(f"{geometry.num_points} points exceed the exhaustive limit {max_points}")
    structure = _structure(geometry)
    k = min(PREFIX_LENGTH, geometry.num_points)
    prefixes = list(product((1, 0), repeat=k))
    args = [(structure, t, p, size_cap, witness_cap) for p in prefixes]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_part, *zip(*args)))
    else:
        parts = []
        for n, a in enumerate(args, 1):
            parts.append(_search_part(*a))
            if progress:
                progress(f"part {n}/{len(args)} done, best so far {max(p[0] for p in parts)}")
    best = max(p[0] for p in parts)
    witnesses = [w for b, ws, _ in parts if b == best for w in ws][:witness_cap]
    explored = sum(p[2] for p in parts)
    sets = [PointSet(geometry, w) for w in witnesses]
    for S in sets:
        assert is_minimal_t_fold(S, t)
    return SearchResult(t=t, best_size=max(best, 0), witnesses=sets, explored=explored,
                        exhaustive=True)


def naive_max_minimal(geometry, t: int, max_points: int = 16) -> SearchResult:
    """Check every subset directly; the reference for the pruned search."""
    if geometry.num_points > max_points:
        raise TooLarge(f"{geometry.num_points} points exceed the naive limit {max_points}")
    best, found = 0, []
    for bits in range(1, 1 << geometry.num_points):
        S = PointSet(geometry, bits)
        try:
            ok = is_minimal_t_fold(S, t)
        except NotBlocking:
            continue
        if ok:
            if S.size > best:
                best, found = S.size, [S]
            elif S.size == best:
                found.append(S)
    return SearchResult(t=t, best_size=best, witnesses=found, explored=(1 << geometry.num_points) - 1,
                        exhaustive=True)


# -- heuristic ---------------------------------------------------------------------


class _LocalState:
    """A point set with per-block counts, kept t-fold and minimal between moves."""

    def __init__(self, structure, t: int, rng: random.Random, bits: int = 0):
        self.v, self.block_pts, self.through = structure
        self.t = t
        self.rng = rng
        self.cnt = [0] * len(self.block_pts)
        self.members: set[int] = set()
        for x in indices_from_bits(bits):
            self.add(x)

    @property
    def size(self) -> int:
        return len(self.members)

    def bits(self) -> int:
        return bits_from_indices(self.members)

    def add(self, x: int):
        self.members.add(x)
        for j in self.through[x]:
            self.cnt[j] += 1

    def remove(self, x: int):
        self.members.discard(x)
        for j in self.through[x]:
            self.cnt[j] -= 1

    def repair(self):
        """Add points on deficient blocks until every block has t points."""
        t, rng = self.t, self.rng
        while True:
            short = [j for j, c in enumerate(self.cnt) if c < t]
            if not short:
                return
            j = rng.choice(short)
            free = [x for x in self.block_pts[j] if x not in self.members]
            self.add(rng.choice(free))

    def removable(self) -> list[int]:
        t = self.t
        return [x for x in sorted(self.members) if all(self.cnt[j] > t for j in self.through[x])]

    def minimalize(self):
        """Drop points without a t-secant, one at a time in random order."""
        cand = self.removable()
        t = self.t
        while cand:
            x = self.rng.choice(cand)
            self.remove(x)
            cand = [y for y in cand if y != x and all(self.cnt[j] > t for j in self.through[y])]

    def snapshot(self):
        return set(self.members), list(self.cnt)

    def restore(self, snap):
        self.members, self.cnt = set(snap[0]), list(snap[1])


def _climb(structure, t: int, steps: int, seed: int, initial: int | None):
    rng = random.Random(seed)
    state = _LocalState(structure, t, rng, initial or 0)
    state.repair()
    state.minimalize()
    best_bits, best_size = state.bits(), state.size
    v = state.v
    for _ in range(steps):
        snap = state.snapshot()
        size_before = state.size
        move = rng.random()
        members = sorted(state.members)
        outside = [x for x in range(v) if x not in state.members]
        if move < 0.45 and members:
            state.remove(rng.choice(members))
        elif move < 0.9 and members and outside:
            state.remove(rng.choice(members))
            state.add(rng.choice(outside))
        else:
            for x in rng.sample(outside, min(len(outside), 1 + rng.randrange(3))):
                state.add(x)
        state.repair()
        state.minimalize()
        if state.size < size_before:
            state.restore(snap)
        elif state.size > best_size:
            best_bits, best_size = state.bits(), state.size
    return best_size, best_bits


def heuristic_max_minimal(geometry, t: int, budget: int = 10_000, seed: int = 0, *,
                          restarts: int | None = None, initial=None, workers: int = 1,
                          witness_cap: int = WITNESS_CAP) -> SearchResult:
    """Restart hill climbing over minimal t-fold blocking sets.

    Moves remove a point, swap one point for another, or add a few points;
    after each move the set is repaired (points added to blocks with fewer
    than t points) and made minimal again (points with no t-secant through
    them removed in random order).  Moves that shrink the set are undone.
    Restart ``i`` uses ``random.Random(seed + i)``; restart 0 starts from
    ``initial`` when one is given.  The budget counts moves over all
    restarts.
    """
    structure = _structure(geometry)
    if restarts is None:
        restarts = max(1, min(32, budget // 500))
    steps = max(1, budget // restarts)
    init_bits = None if initial is None else as_bits(initial, geometry.num_points)
    args = [(structure, t, steps, seed + i, init_bits if i == 0 else None) for i in range(restarts)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_climb, *zip(*args)))
    else:
        runs = [_climb(*a) for a in args]
    best = max(size for size, _ in runs)
    seen, witnesses = set(), []
    for size, bits in runs:
        if size == best and bits not in seen and len(witnesses) < witness_cap:
            seen.add(bits)
            witnesses.append(PointSet(geometry, bits))
    for S in witnesses:
        assert is_minimal_t_fold(S, t)
    return SearchResult(t=t, best_size=best, witnesses=witnesses, explored=steps * restarts,
                        exhaustive=False, seed=seed, extra={"restarts": restarts})


def plane_bound_cap(geometry, t: int) -> int:
    """Largest integer size the plane quadratic admits, for use as ``size_cap``."""
    rep = main_bound(plane_order(geometry), t)
    x = int(rep.bound_float) + 1
    while not rep.admits(x):
        x -= 1
    return x


def verify_certificate(source, t: int):
    """Load a PointSet JSON document (path, text or dict) and verify it at t."""
    from .blocking import verify_point_set
    from .io import load_point_set

    return verify_point_set(load_point_set(source), t)
