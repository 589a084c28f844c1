"""Bounded search in the graph of triangulations connected by moves."""

import random
from dataclasses import dataclass

from trikit.isosig import signature
from trikit.moves import (
    BOUNDARY_KINDS,
    INTERIOR_KINDS,
    MoveError,
    MoveSite,
    apply_move,
    enumerate_moves,
)


@dataclass(frozen=True)
class SearchBudget:
    max_tets: int
    max_moves: int = 64
    max_states: int = 10**6
    allow_boundary_moves: bool = False
    move_kinds: frozenset = None  # optional restriction; closed under inverses

    def __post_init__(self):
        for name in ("max_tets", "max_moves", "max_states"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    @property
    def kinds(self):
        kinds = INTERIOR_KINDS | BOUNDARY_KINDS if self.allow_boundary_moves else INTERIOR_KINDS
        if self.move_kinds is not None:
            wanted = set(self.move_kinds)
            kinds = kinds & (wanted | {k.inverse for k in wanted})
        return frozenset(kinds)


@dataclass(frozen=True)
class MovePath:
    moves: tuple
    start: str
    end: str

    def __len__(self):
        return len(self.moves)


@dataclass(frozen=True)
class Exhausted:
    states: int
    depth: int

    def __str__(self):
        return f"EXHAUSTED states={self.states} depth={self.depth}"


@dataclass
class PathCheck:
    ok: bool
    step: int = -1  # index of the failing move, or len(path) for a wrong endpoint
    reason: str = ""

    def __bool__(self):
        return self.ok


class _Side:
    def __init__(self, tri, sig):
        self.dist = {sig: 0}
        self.rep = {sig: tri}
        self.links = {sig: []}  # sig -> neighbours one step closer to this side's root
        self.frontier = [sig]
        self.depth = 0


def _neighbours(tri, kinds, max_tets):
    """(signature, triangulation) pairs one move away, within the size wall."""
    out = []
    for site in enumerate_moves(tri, kinds):
        if tri.size + site.kind.delta > max_tets:
            continue
        res, _ = apply_move(tri, site)
        out.append((signature(res), res, site))
    return out


def _expand(side, other, kinds, budget, count):
    """Grow ``side`` by one layer, stopping at the first state ``other`` has seen.

    Returns the list of meeting states (empty if none), or None when the state
    budget runs out.  The balls explored so far are disjoint, so every state
    of the new layer that ``other`` knows lies on a shortest path; the first
    one is enough.
    """
    nxt = []
    d = side.depth + 1
    frontier = side.frontier
    side.frontier = nxt
    side.depth = d
    for x in frontier:
        for y, res, _ in _neighbours(side.rep[x], kinds, budget.max_tets):
            seen = side.dist.get(y)
            if seen is None:
                if count[0] >= budget.max_states:
                    return None
                count[0] += 1
                side.dist[y] = d
                side.rep[y] = res
                side.links[y] = [x]
                nxt.append(y)
                if y in other.dist:
                    return [y]
            elif seen == d and x not in side.links[y]:
                side.links[y].append(x)
    return []


def _good(side, meet):
    """States reachable from the meeting set by following links toward the root."""
    good = set(meet)
    stack = list(meet)
    while stack:
        x = stack.pop()
        for y in side.links[x]:
            if y not in good:
                good.add(y)
                stack.append(y)
    return good


def connect(a, b, budget):
    """Shortest move path from ``a`` to ``b`` within ``budget``, or Exhausted.

    The result is deterministic: the search meets at the first shared state
    in expansion order, and the replay takes the least move token that stays
    on a shortest path through it.
    """
    sa, sb = signature(a), signature(b)
    if sa == sb:
        return MovePath((), sa, sb)
    if max(a.size, b.size) > budget.max_tets or budget.max_moves == 0 or budget.max_states == 0:
        return Exhausted(0, 0)
    kinds = budget.kinds
    A, B = _Side(a, sa), _Side(b, sb)
    count = [2]
    while True:
        if A.depth + B.depth >= budget.max_moves or not (A.frontier and B.frontier):
            return Exhausted(count[0], A.depth + B.depth)
        side, other = (A, B) if len(A.frontier) <= len(B.frontier) else (B, A)
        meet = _expand(side, other, kinds, budget, count)
        if meet is None:
            return Exhausted(count[0], A.depth + B.depth)
        if meet:
            break
    length = A.dist[meet[0]] + B.dist[meet[0]]
    good_a = _good(A, meet)
    good_b = _good(B, meet)
    return MovePath(_replay(a, length, kinds, budget, A, B, good_a, good_b), sa, sb)


def _replay(a, length, kinds, budget, A, B, good_a, good_b):
    moves = []
    cur = a
    for i in range(length):
        best = None
        for y, res, site in _neighbours(cur, kinds, budget.max_tets):
            on_path = (y in good_a and A.dist[y] == i + 1) or (
                y in good_b and B.dist[y] == length - i - 1
            )
            if on_path:
                tok = site.token()
                if best is None or tok < best[0]:
                    best = (tok, res)
        moves.append(best[0])
        cur = best[1]
    return tuple(moves)


def scramble(tri, k, seed, kinds=None):
    """Apply ``k`` seeded random moves; returns ``(result, MovePath)``."""
    kinds = INTERIOR_KINDS if kinds is None else frozenset(kinds)
    rng = random.Random(seed)
    cur = tri
    moves = []
    for step in range(k):
        sites = enumerate_moves(cur, kinds)
        if not sites:
            raise MoveError(f"step {step}: no applicable move of the allowed kinds")
        site = rng.choice(sites)
        cur, _ = apply_move(cur, site)
        moves.append(site.token())
    return cur, MovePath(tuple(moves), signature(tri), signature(cur))


def verify_path(a, path):
    """Replay ``path`` from ``a``; the result is truthy iff it ends at ``path.end``."""
    if path.start and signature(a) != path.start:
        return PathCheck(False, 0, "start signature does not match")
    cur = a
    for i, tok in enumerate(path.moves):
        try:
            cur, _ = apply_move(cur, MoveSite.parse(tok) if isinstance(tok, str) else tok)
        except (MoveError, ValueError) as exc:
            return PathCheck(False, i, str(exc))
    if signature(cur) != path.end:
        return PathCheck(False, len(path.moves), "end signature does not match")
    return PathCheck(True)
