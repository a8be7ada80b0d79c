"""Defining relations and Cartan matrices of the algebra attached to a
quiver in a Dynkin A or D mutation class.

The algebra is the path algebra modulo zero and commutativity relations
read off the quiver: each oriented triangle inside an A-part contributes
three zero compositions; the skeleta of the four D families contribute
the relations listed in ``quiver_relations``.  Whether a path survives
in the quotient is decided by closing it under commutativity
substitutions and looking for a vanishing subpath.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import Quiver, QuiverError
from .typeforms import (
    Decomposition,
    NotTypeA,
    NotTypeD,
    analyze_type_a,
    decompose,
    oriented_triangles,
)

Path = tuple[int, ...]


@dataclass(frozen=True)
class RelationSet:
    zeros: tuple[Path, ...]
    commutes: tuple[tuple[Path, Path], ...]


def _triangle_zeros(tris) -> list[Path]:
    zeros = []
    for x, y, z in tris:
        zeros += [(x, y, z), (y, z, x), (z, x, y)]
    return zeros


def _cycle_path(cycle: tuple[int, ...], start: int, length: int) -> Path:
    """Path of ``length`` arrows along the cycle, starting at index ``start``."""
    m = len(cycle)
    return tuple(cycle[(start + i) % m] for i in range(length + 1))


def relations_from_decomposition(dec: Decomposition) -> RelationSet:
    zeros: list[Path] = _triangle_zeros(dec.a_triangles)
    commutes: list[tuple[Path, Path]] = []
    if dec.kind == "II":
        u, v, x, y = dec.skeleton  # shared arrow u->v, triangle tips x, y
        zeros += [(u, v, x), (u, v, y), (x, u, v), (y, u, v)]
        commutes.append(((v, x, u), (v, y, u)))
    elif dec.kind == "III":
        c = dec.skeleton
        zeros += [_cycle_path(c, i, 3) for i in range(4)]
    elif dec.kind == "IVCycle":
        c = dec.skeleton
        zeros += [_cycle_path(c, i, len(c) - 1) for i in range(len(c))]
    elif dec.kind == "IV":
        cycle = dec.skeleton
        m = len(cycle)
        spiked = {sp.position: sp for sp in dec.spikes}
        for i in range(m):
            if i in spiked:
                sp = spiked[i]
                a, b = cycle[i], cycle[(i + 1) % m]
                zeros += [(a, b, sp.tip), (sp.tip, a, b)]
                commutes.append(((b, sp.tip, a), _cycle_path(cycle, (i + 1) % m, m - 1)))
            else:
                zeros.append(_cycle_path(cycle, (i + 1) % m, m - 1))
    return RelationSet(tuple(zeros), tuple(commutes))


def quiver_relations(q: Quiver) -> RelationSet:
    """Relations for a quiver in a Dynkin A or D mutation class."""
    try:
        return relations_from_decomposition(decompose(q))
    except NotTypeD:
        pass
    try:
        analyze_type_a(q)
    except NotTypeA:
        raise QuiverError(
            "quiver is in no Dynkin A or D mutation class; no relations defined"
        ) from None
    return RelationSet(tuple(_triangle_zeros(oriented_triangles(q))), ())


class PathOracle:
    """Decides non-vanishing of directed walks in the quotient algebra.

    A walk is zero iff some member of its closure under commutativity
    substitutions contains a zero relation as a contiguous subpath.
    """

    def __init__(self, q: Quiver, rels: RelationSet | None = None):
        self.q = q
        self.rels = rels if rels is not None else quiver_relations(q)
        self._subs: list[tuple[Path, Path]] = []
        for u, v in self.rels.commutes:
            self._subs.append((u, v))
            self._subs.append((v, u))
        self._memo: dict[Path, bool] = {}
        self._max_len = 8 * q.n + 8

    def _is_walk(self, path: Path) -> bool:
        return len(path) >= 1 and all(
            self.q.has_arrow(path[i], path[i + 1]) for i in range(len(path) - 1)
        )

    @staticmethod
    def _find(haystack: Path, needle: Path) -> list[int]:
        k = len(needle)
        return [
            i for i in range(len(haystack) - k + 1) if haystack[i : i + k] == needle
        ]

    def _contains_zero(self, walk: Path) -> bool:
        return any(self._find(walk, z) for z in self.rels.zeros)

    def is_nonzero(self, path: Path) -> bool:
        path = tuple(path)
        if path in self._memo:
            return self._memo[path]
        if not self._is_walk(path):
            raise QuiverError(f"{path} is not a directed walk")
        seen = {path}
        frontier = [path]
        zero = False
        while frontier and not zero:
            nxt = []
            for walk in frontier:
                if self._contains_zero(walk):
                    zero = True
                    break
                for lhs, rhs in self._subs:
                    for i in self._find(walk, lhs):
                        new = walk[:i] + rhs + walk[i + len(lhs) :]
                        if len(new) > self._max_len:
                            raise QuiverError(
                                "commutativity closure exceeded length bound"
                            )
                        if new not in seen:
                            seen.add(new)
                            nxt.append(new)
            frontier = nxt
        self._memo[path] = not zero
        return not zero


def is_nonzero_path(q: Quiver, rels: RelationSet, path) -> bool:
    return PathOracle(q, rels).is_nonzero(tuple(path))


CartanMatrix = tuple[tuple[int, ...], ...]


def cartan_matrix(q: Quiver, oracle: PathOracle | None = None) -> CartanMatrix:
    """0/1 matrix with C[i][j] = 1 iff a nonzero path j -> i exists.

    Only simple paths are walked: in a schurian algebra a nonzero path
    revisiting a vertex would force a diagonal entry above 1.
    """
    if oracle is None:
        oracle = PathOracle(q)
    n = q.n
    C = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def dfs(path: list[int], on_path: set[int]):
        v = path[-1]
        for w in q.out_neighbors(v):
            if w in on_path:
                continue
            path.append(w)
            if oracle.is_nonzero(tuple(path)):
                C[w][path[0]] = 1
                on_path.add(w)
                dfs(path, on_path)
                on_path.remove(w)
            path.pop()

    for j in range(n):
        dfs([j], {j})
    return tuple(tuple(row) for row in C)


def nonzero_simple_paths_from(q: Quiver, oracle: PathOracle, k: int) -> list[Path]:
    """All nontrivial simple nonzero paths starting at ``k``."""
    out: list[Path] = []

    def dfs(path: list[int], on_path: set[int]):
        v = path[-1]
        for w in q.out_neighbors(v):
            if w in on_path:
                continue
            path.append(w)
            if oracle.is_nonzero(tuple(path)):
                out.append(tuple(path))
                on_path.add(w)
                dfs(path, on_path)
                on_path.remove(w)
            path.pop()

    dfs([k], {k})
    return out


def nonzero_simple_paths_to(q: Quiver, oracle: PathOracle, k: int) -> list[Path]:
    """All nontrivial simple nonzero paths ending at ``k``."""
    out: list[Path] = []

    def dfs(path: list[int], on_path: set[int]):
        v = path[0]
        for w in q.in_neighbors(v):
            if w in on_path:
                continue
            path.insert(0, w)
            if oracle.is_nonzero(tuple(path)):
                out.append(tuple(path))
                on_path.add(w)
                dfs(path, on_path)
                on_path.remove(w)
            path.pop(0)

    dfs([k], {k})
    return out
