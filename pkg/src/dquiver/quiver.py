"""Quivers as skew-symmetric exchange matrices.

A quiver here is a finite directed graph without loops, 2-cycles or
multiple arrows, stored as an n x n integer matrix b with
b[i][j] = (#arrows i->j) - (#arrows j->i).  Mutation follows the usual
exchange-matrix rule; canonical keys give a relabeling-invariant
identifier used to deduplicate mutation classes.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field


class QuiverError(ValueError):
    """Invalid quiver data or malformed quiver description."""


@dataclass(frozen=True)
class Quiver:
    n: int
    b: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise QuiverError("vertex count must be >= 1")
        if len(self.b) != self.n or any(len(row) != self.n for row in self.b):
            raise QuiverError("exchange matrix must be n x n")
        for i in range(self.n):
            if self.b[i][i] != 0:
                raise QuiverError(f"loop at vertex {i}")
            for j in range(self.n):
                if self.b[i][j] != -self.b[j][i]:
                    raise QuiverError(f"matrix not skew-symmetric at ({i},{j})")
                if abs(self.b[i][j]) > 1:
                    raise QuiverError(
                        f"multiple arrow between {i} and {j} (b={self.b[i][j]})"
                    )

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_arrows(n: int, arrows) -> "Quiver":
        b = [[0] * n for _ in range(n)]
        for i, j in arrows:
            if not (0 <= i < n and 0 <= j < n):
                raise QuiverError(f"vertex index out of range in arrow {i}->{j}")
            if i == j:
                raise QuiverError(f"loop at vertex {i}")
            if b[j][i] == 1:
                raise QuiverError(f"2-cycle between {i} and {j}")
            if b[i][j] == 1:
                raise QuiverError(f"multiple arrow {i}->{j}")
            b[i][j] = 1
            b[j][i] = -1
        return Quiver(n, tuple(tuple(row) for row in b))

    # -- basic views ----------------------------------------------------

    def arrows(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(self.n)
            if self.b[i][j] == 1
        ]

    def out_neighbors(self, v: int) -> list[int]:
        return [j for j in range(self.n) if self.b[v][j] == 1]

    def in_neighbors(self, v: int) -> list[int]:
        return [j for j in range(self.n) if self.b[v][j] == -1]

    def neighbors(self, v: int) -> list[int]:
        return [j for j in range(self.n) if self.b[v][j] != 0]

    def degree(self, v: int) -> int:
        return sum(1 for j in range(self.n) if self.b[v][j] != 0)

    def has_arrow(self, i: int, j: int) -> bool:
        return self.b[i][j] == 1

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {0}
        todo = deque([0])
        while todo:
            v = todo.popleft()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.n

    # -- operations -----------------------------------------------------

    def mutate(self, k: int) -> "Quiver":
        """Fomin-Zelevinsky mutation at vertex k (an involution)."""
        if not (0 <= k < self.n):
            raise QuiverError(f"vertex {k} out of range (n={self.n})")
        b = self.b
        new = [list(row) for row in b]
        for i in range(self.n):
            for j in range(self.n):
                if i == k or j == k:
                    new[i][j] = -b[i][j]
                elif b[i][k] * b[k][j] > 0:
                    sign = 1 if b[i][k] > 0 else -1
                    new[i][j] = b[i][j] + sign * b[i][k] * b[k][j]
        return Quiver(self.n, tuple(tuple(row) for row in new))

    def opposite(self) -> "Quiver":
        """Reverse all arrows (matrix negation / transpose)."""
        return Quiver(
            self.n, tuple(tuple(-x for x in row) for row in self.b)
        )

    def permuted(self, perm) -> "Quiver":
        """Relabel: vertex v of the result is perm[v] of self."""
        idx = list(perm)
        return Quiver(
            self.n,
            tuple(
                tuple(self.b[idx[i]][idx[j]] for j in range(self.n))
                for i in range(self.n)
            ),
        )


# -- Dynkin seeds -------------------------------------------------------


def linear_a(n: int) -> Quiver:
    """Linearly oriented A_n quiver 0 -> 1 -> ... -> n-1."""
    return Quiver.from_arrows(n, [(i, i + 1) for i in range(n - 1)])


def dynkin_d(n: int) -> Quiver:
    """D_n quiver: 0 -> 2 <- 1 with a tail 2 -> 3 -> ... -> n-1."""
    if n < 4:
        raise QuiverError("D_n needs n >= 4")
    arrows = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    return Quiver.from_arrows(n, arrows)


def oriented_cycle(m: int) -> Quiver:
    if m < 3:
        raise QuiverError("oriented cycle needs length >= 3")
    return Quiver.from_arrows(m, [(i, (i + 1) % m) for i in range(m)])


# -- parsing / serialization -------------------------------------------


def parse_quiver(text: str) -> Quiver:
    """Parse either the JSON format or the line format "i -> j"."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_lines(text)


def _parse_json(text: str) -> Quiver:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise QuiverError(f"bad JSON quiver: {e}") from None
    if not isinstance(data, dict) or "n" not in data or "arrows" not in data:
        raise QuiverError('JSON quiver needs fields "n" and "arrows"')
    n = data["n"]
    arrows = data["arrows"]
    if not isinstance(n, int):
        raise QuiverError('"n" must be an integer')
    if not isinstance(arrows, list) or any(
        not isinstance(a, list) or len(a) != 2 for a in arrows
    ):
        raise QuiverError('"arrows" must be a list of [i, j] pairs')
    return Quiver.from_arrows(n, [(a[0], a[1]) for a in arrows])


def _parse_lines(text: str) -> Quiver:
    arrows = []
    seen: dict[tuple[int, int], int] = {}
    max_v = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split("->")
        if len(parts) != 2:
            raise QuiverError(f"line {lineno}: expected 'i -> j', got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise QuiverError(
                f"line {lineno}: vertex indices must be integers"
            ) from None
        if i < 0 or j < 0:
            raise QuiverError(f"line {lineno}: vertex index out of range")
        if i == j:
            raise QuiverError(f"line {lineno}: loop at vertex {i}")
        if (i, j) in seen:
            raise QuiverError(
                f"line {lineno}: multiple arrow {i}->{j} (first on line {seen[(i, j)]})"
            )
        if (j, i) in seen:
            raise QuiverError(
                f"line {lineno}: 2-cycle between {i} and {j} "
                f"(reverse arrow on line {seen[(j, i)]})"
            )
        seen[(i, j)] = lineno
        arrows.append((i, j))
        max_v = max(max_v, i, j)
    if max_v < 0:
        raise QuiverError("no arrows found in quiver description")
    return Quiver.from_arrows(max_v + 1, arrows)


def to_json(q: Quiver) -> str:
    return json.dumps({"n": q.n, "arrows": sorted(q.arrows())})


def to_text(q: Quiver) -> str:
    return "\n".join(f"{i} -> {j}" for i, j in sorted(q.arrows()))


# -- canonical labeling -------------------------------------------------
#
# Ordered-partition refinement on (out-degree, in-degree) followed by
# individualization over the first non-singleton cell; the key is the
# minimal matrix encoding over all leaves of the search tree.


def _refine(q: Quiver, cells: list[list[int]]) -> list[list[int]]:
    b = q.b
    while True:
        cell_of = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * (2 * len(cells))
                for w in range(q.n):
                    e = b[v][w]
                    if e == 1:
                        counts[2 * cell_of[w]] += 1
                    elif e == -1:
                        counts[2 * cell_of[w] + 1] += 1
                sig.setdefault(tuple(counts), []).append(v)
            if len(sig) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(sig):
                    new_cells.append(sig[key])
        cells = new_cells
        if not changed:
            return cells


def _encode(q: Quiver, order: list[int]) -> bytes:
    pos = [0] * q.n
    for idx, v in enumerate(order):
        pos[v] = idx
    out = bytearray()
    b = q.b
    for i in order:
        row = b[i]
        for j in order:
            out.append(row[j] + 1)
    return bytes(out)


def canonical_key(q: Quiver) -> bytes:
    """Relabeling-invariant key: equal keys iff isomorphic quivers."""
    init: dict[tuple[int, int], list[int]] = {}
    for v in range(q.n):
        deg = (len(q.out_neighbors(v)), len(q.in_neighbors(v)))
        init.setdefault(deg, []).append(v)
    cells = [init[k] for k in sorted(init)]
    best: list[bytes] = []

    def search(cells: list[list[int]]) -> None:
        cells = _refine(q, cells)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            order = [cell[0] for cell in cells]
            enc = _encode(q, order)
            if not best or enc < best[0]:
                best[:] = [enc]
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search(cells)
    return bytes([q.n]) + best[0]


# -- mutation class enumeration -----------------------------------------

DEFAULT_CAP = 5_000_000


@dataclass
class ClassReport:
    representatives: list[bytes]
    size: int
    generator: Quiver
    truncated: bool
    members: dict[bytes, Quiver] = field(repr=False, default_factory=dict)


def mutation_class(q: Quiver, cap: int = DEFAULT_CAP) -> ClassReport:
    """BFS over mutations with canonical-key dedup.

    Exhaustive when the class has at most ``cap`` members, otherwise the
    ``truncated`` flag is set.  Frontier processing is ordered by key, so
    the report is byte-identical across runs.
    """
    start_key = canonical_key(q)
    seen: dict[bytes, Quiver] = {start_key: q}
    frontier = [(start_key, q)]
    truncated = False
    while frontier:
        frontier.sort(key=lambda kv: kv[0])
        next_frontier = []
        for _, cur in frontier:
            for k in range(cur.n):
                m = cur.mutate(k)
                key = canonical_key(m)
                if key not in seen:
                    if len(seen) >= cap:
                        truncated = True
                        continue
                    seen[key] = m
                    next_frontier.append((key, m))
        frontier = next_frontier
        if truncated and not frontier:
            break
    keys = sorted(seen)
    return ClassReport(
        representatives=keys,
        size=len(keys),
        generator=q,
        truncated=truncated,
        members=seen,
    )
