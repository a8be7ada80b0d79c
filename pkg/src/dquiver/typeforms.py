"""Recognition of quivers in Dynkin A and D mutation classes.

Quivers mutation-equivalent to D_n decompose into one of four families:
a skeleton (fork, double triangle, oriented 4-cycle, or a central cycle
with spikes) with rooted A-class quivers glued at designated vertices.
``classify_type_d`` extracts that decomposition and the parameters;
``realize`` builds the standard representative of a parametric form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from collections import deque

from .quiver import Quiver, QuiverError


class NotTypeA(QuiverError):
    pass


class NotTypeD(QuiverError):
    pass


class InvalidForm(QuiverError):
    pass


# -- type A ---------------------------------------------------------------


@dataclass(frozen=True)
class AShape:
    s: int
    t: int
    root: int | None = None


def oriented_triangles(q: Quiver) -> list[tuple[int, int, int]]:
    """All oriented 3-cycles, each rotated so the smallest vertex is first."""
    tris = set()
    for x, y in q.arrows():
        for z in q.out_neighbors(y):
            if q.has_arrow(z, x):
                m = min(x, y, z)
                if m == x:
                    tris.add((x, y, z))
                elif m == y:
                    tris.add((y, z, x))
                else:
                    tris.add((z, x, y))
    return sorted(tris)


def triangle_arrows(tri: tuple[int, int, int]) -> list[tuple[int, int]]:
    x, y, z = tri
    return [(x, y), (y, z), (z, x)]


def analyze_type_a(q: Quiver, root: int | None = None) -> AShape:
    """Check membership in an A_n mutation class and count lines/triangles.

    A quiver lies in an A_n mutation class iff it is connected, every
    arrow is in at most one oriented triangle, the only cycles are those
    triangles, and each vertex carries at most two of line/triangle
    attachments.  Then n = 1 + s + 2t.
    """
    if root is not None and not (0 <= root < q.n):
        raise NotTypeA(f"root {root} out of range")
    if not q.is_connected():
        raise NotTypeA("quiver is not connected")
    tris = oriented_triangles(q)
    arrow_tris: dict[tuple[int, int], int] = {}
    for tri in tris:
        for a in triangle_arrows(tri):
            arrow_tris[a] = arrow_tris.get(a, 0) + 1
            if arrow_tris[a] > 1:
                raise NotTypeA(f"arrow {a} lies in two oriented triangles")
    arrows = q.arrows()
    t = len(tris)
    if len(arrows) != q.n - 1 + t:
        raise NotTypeA("underlying graph has a cycle that is not a triangle")
    tri_count = [0] * q.n
    line_count = [0] * q.n
    for tri in tris:
        for v in tri:
            tri_count[v] += 1
    for a in arrows:
        if a not in arrow_tris:
            line_count[a[0]] += 1
            line_count[a[1]] += 1
    for v in range(q.n):
        if line_count[v] + tri_count[v] > 2:
            raise NotTypeA(f"vertex {v} has an invalid neighborhood")
    if root is not None and q.n >= 2:
        if line_count[root] + tri_count[root] != 1:
            raise NotTypeA(f"vertex {root} is not a valid root")
    s = len(arrows) - 3 * t
    return AShape(s=s, t=t, root=root)


# -- parametric forms ------------------------------------------------------


@dataclass(frozen=True)
class TypeI:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 0 or self.t < 0:
            raise InvalidForm("type I parameters must be non-negative")

    def vertex_count(self) -> int:
        return 3 + self.s + 2 * self.t

    def __str__(self):
        return f"I({self.s},{self.t})"


@dataclass(frozen=True)
class TypeII:
    s1: int
    t1: int
    s2: int
    t2: int

    def __post_init__(self):
        if min(self.s1, self.t1, self.s2, self.t2) < 0:
            raise InvalidForm("type II parameters must be non-negative")

    def vertex_count(self) -> int:
        return 4 + self.s1 + 2 * self.t1 + self.s2 + 2 * self.t2

    def __str__(self):
        return f"II({self.s1},{self.t1},{self.s2},{self.t2})"


@dataclass(frozen=True)
class TypeIII:
    """Oriented 4-cycle skeleton; the two glued sides are exchangeable,
    so parameters are normalized to the lexicographically smaller order."""

    s1: int
    t1: int
    s2: int
    t2: int

    def __post_init__(self):
        if min(self.s1, self.t1, self.s2, self.t2) < 0:
            raise InvalidForm("type III parameters must be non-negative")
        first, second = (self.s1, self.t1), (self.s2, self.t2)
        if second < first:
            object.__setattr__(self, "s1", second[0])
            object.__setattr__(self, "t1", second[1])
            object.__setattr__(self, "s2", first[0])
            object.__setattr__(self, "t2", first[1])

    def vertex_count(self) -> int:
        return 4 + self.s1 + 2 * self.t1 + self.s2 + 2 * self.t2

    def __str__(self):
        return f"III({self.s1},{self.t1},{self.s2},{self.t2})"


@dataclass(frozen=True)
class TypeIVCycle:
    m: int

    def __post_init__(self):
        if self.m < 3:
            raise InvalidForm("cycle length must be >= 3")

    def vertex_count(self) -> int:
        return self.m

    def __str__(self):
        return f"IVCycle({self.m})"


def _min_rotation(seq: tuple) -> tuple:
    if not seq:
        return seq
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


@dataclass(frozen=True)
class TypeIV:
    """Central cycle with spikes: a cyclic list of (distance, s, t)
    triples, stored in the lexicographically minimal rotation."""

    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        trs = tuple(tuple(t) for t in self.triples)
        if not trs:
            raise InvalidForm("type IV needs at least one spike")
        for d, s, t in trs:
            if d < 1 or s < 0 or t < 0:
                raise InvalidForm(f"bad type IV triple ({d},{s},{t})")
        m = sum(d for d, _, _ in trs)
        if m < 2:
            raise InvalidForm("total cycle length must be >= 2")
        if tuple(d for d, _, _ in trs) == (2,):
            raise InvalidForm("distance sequence (2) is excluded")
        object.__setattr__(self, "triples", _min_rotation(trs))

    @property
    def m(self) -> int:
        return sum(d for d, _, _ in self.triples)

    @property
    def r(self) -> int:
        return len(self.triples)

    def c(self) -> int:
        """Number of spikes at distance 1 from the next spike."""
        return sum(1 for d, _, _ in self.triples if d == 1)

    def vertex_count(self) -> int:
        return sum(d + 1 + s + 2 * t for d, s, t in self.triples)

    def __str__(self):
        inner = ",".join(f"({d},{s},{t})" for d, s, t in self.triples)
        return f"IV({inner})"


TypeDForm = TypeI | TypeII | TypeIII | TypeIVCycle | TypeIV


def normalize_form(form: TypeDForm) -> TypeDForm:
    """Resolve the degenerate overlaps between the four families.

    The bare double triangle is II(0,0,0,0) rather than IV((3,0,0)); the
    bare oriented 4-cycle is III(0,0,0,0) rather than IVCycle(4); and a
    length-2 central cycle with both spikes is the type III quiver.
    """
    if isinstance(form, TypeIV):
        if form.triples == ((3, 0, 0),):
            return TypeII(0, 0, 0, 0)
        if form.m == 2:
            (d1, s1, t1), (d2, s2, t2) = form.triples
            return TypeIII(s1, t1, s2, t2)
    if isinstance(form, TypeIVCycle) and form.m == 4:
        return TypeIII(0, 0, 0, 0)
    return form


def forms_equal(f: TypeDForm, g: TypeDForm) -> bool:
    return normalize_form(f) == normalize_form(g)


# -- form text syntax -------------------------------------------------------

_FORM_RE = re.compile(r"^\s*(IVCycle|IV|III|II|I)\s*\((.*)\)\s*$")


def parse_form(text: str) -> TypeDForm:
    m = _FORM_RE.match(text)
    if not m:
        raise InvalidForm(f"cannot parse form {text!r}")
    tag, inner = m.group(1), m.group(2)
    if tag == "IV":
        triples = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)", inner)
        if not triples:
            raise InvalidForm(f"cannot parse type IV triples in {text!r}")
        return TypeIV(tuple((int(d), int(s), int(t)) for d, s, t in triples))
    try:
        nums = [int(x) for x in inner.split(",")] if inner.strip() else []
    except ValueError:
        raise InvalidForm(f"bad integer parameters in {text!r}") from None
    if tag == "I" and len(nums) == 2:
        return TypeI(*nums)
    if tag == "II" and len(nums) == 4:
        return TypeII(*nums)
    if tag == "III" and len(nums) == 4:
        return TypeIII(*nums)
    if tag == "IVCycle" and len(nums) == 1:
        return TypeIVCycle(nums[0])
    raise InvalidForm(f"wrong number of parameters in {text!r}")


# -- decomposition of type D quivers ----------------------------------------


@dataclass(frozen=True)
class SpikeInfo:
    position: int  # index on the central cycle: spike sits on arrow pos -> pos+1
    tip: int
    part_vertices: frozenset[int]  # A-part glued at the tip (incl. the tip)
    s: int
    t: int


@dataclass(frozen=True)
class Decomposition:
    """Structural decomposition of a quiver in a D_n mutation class."""

    kind: str  # "I" | "II" | "III" | "IVCycle" | "IV"
    form: TypeDForm
    skeleton: tuple[int, ...]  # fork (a,b,c); II (cpp,cp,x,y); III 4-cycle;
    # IV/IVCycle: the central cycle in order
    a_triangles: tuple[tuple[int, int, int], ...]
    parts: tuple[tuple[int, frozenset[int]], ...]  # (root, vertices) per glued part
    spikes: tuple[SpikeInfo, ...] = ()


def _hanging_component(q: Quiver, root: int, blocked: set[int]) -> frozenset[int]:
    """Vertices reachable from ``root`` without entering ``blocked``."""
    seen = {root}
    todo = deque([root])
    while todo:
        v = todo.popleft()
        for w in q.neighbors(v):
            if w not in blocked and w not in seen:
                seen.add(w)
                todo.append(w)
    return frozenset(seen)


def _induced(q: Quiver, vertices: frozenset[int]) -> tuple[Quiver, dict[int, int]]:
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    arrows = [
        (index[i], index[j]) for i, j in q.arrows() if i in vertices and j in vertices
    ]
    return Quiver.from_arrows(len(order), arrows), index


def _part_shape(q: Quiver, root: int, vertices: frozenset[int]) -> AShape:
    sub, index = _induced(q, vertices)
    return analyze_type_a(sub, root=index[root])


def _chordless_long_cycles(q: Quiver, limit: int = 64) -> list[tuple[int, ...]]:
    """Chordless oriented simple cycles of length >= 4, up to rotation."""
    cycles = set()
    n = q.n

    def dfs(start: int, path: list[int], on_path: set[int]):
        if len(cycles) > limit:
            return
        v = path[-1]
        for w in q.out_neighbors(v):
            if w == start and len(path) >= 4:
                cycles.add(_min_rotation(tuple(path)))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                dfs(start, path, on_path)
                on_path.remove(w)
                path.pop()

    for v in range(n):
        dfs(v, [v], {v})
    out = []
    for cyc in sorted(cycles):
        chord = False
        m = len(cyc)
        pos = {v: i for i, v in enumerate(cyc)}
        for i, j in q.arrows():
            if i in pos and j in pos and (pos[i] + 1) % m != pos[j]:
                chord = True
                break
        if not chord:
            out.append(cyc)
    return out


def decompose(q: Quiver) -> Decomposition:
    """Split a quiver into skeleton plus rooted A-parts, or fail."""
    if q.n < 4:
        raise NotTypeD("quivers in D_n mutation classes have n >= 4")
    if not q.is_connected():
        raise NotTypeD("quiver is not connected")
    tris = oriented_triangles(q)
    arrow_tris: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for tri in tris:
        for a in triangle_arrows(tri):
            arrow_tris.setdefault(a, []).append(tri)
    shared = sorted(a for a, ts in arrow_tris.items() if len(ts) == 2)
    if any(len(ts) > 2 for ts in arrow_tris.values()):
        raise NotTypeD("an arrow lies in three oriented triangles")
    long_cycles = _chordless_long_cycles(q)

    if len(long_cycles) > 1:
        raise NotTypeD("more than one chordless cycle of length >= 4")
    if long_cycles:
        if shared:
            raise NotTypeD("long cycle together with a doubled triangle arrow")
        return _decompose_with_cycle(q, long_cycles[0], tris)
    if shared:
        return _decompose_shared(q, shared, arrow_tris, tris)
    return _decompose_fork(q, tris)


def _spikes_on_cycle(
    q: Quiver, cycle: tuple[int, ...]
) -> tuple[list[SpikeInfo | None], set[int]]:
    m = len(cycle)
    on_cycle = set(cycle)
    spike_at: list[SpikeInfo | None] = [None] * m
    tips = set()
    for i in range(m):
        u, v = cycle[i], cycle[(i + 1) % m]
        cand = [c for c in q.in_neighbors(u) if c not in on_cycle and q.has_arrow(v, c)]
        if len(cand) > 1:
            raise NotTypeD(f"two spikes on cycle arrow {u}->{v}")
        if cand:
            tip = cand[0]
            spike_at[i] = SpikeInfo(i, tip, frozenset(), 0, 0)
            tips.add(tip)
    return spike_at, tips


def _decompose_with_cycle(
    q: Quiver, cycle: tuple[int, ...], tris
) -> Decomposition:
    m = len(cycle)
    spike_at, tips = _spikes_on_cycle(q, cycle)
    if not tips:
        return _cycle_no_spikes(q, cycle, tris)
    return _finish_type_iv(q, cycle, spike_at, tips, tris)


def _cycle_no_spikes(q: Quiver, cycle: tuple[int, ...], tris) -> Decomposition:
    m = len(cycle)
    on_cycle = set(cycle)
    attach = [v for v in cycle if q.degree(v) > 2]
    if not attach:
        if q.n != m:
            raise NotTypeD("disconnected material outside the cycle")
        if m == 4:
            form = TypeIII(0, 0, 0, 0)
            return Decomposition("III", form, cycle, (), ())
        return Decomposition("IVCycle", TypeIVCycle(m), cycle, (), ())
    if m != 4:
        raise NotTypeD("rooted parts glued directly to a long central cycle")
    if len(attach) > 2:
        raise NotTypeD("a 4-cycle skeleton admits parts at two opposite vertices")
    i0 = cycle.index(attach[0])
    if len(attach) == 2:
        i1 = cycle.index(attach[1])
        if (i1 - i0) % 4 != 2:
            raise NotTypeD("glued vertices on the 4-cycle are not opposite")
    cp, cpp = cycle[i0], cycle[(i0 + 2) % 4]
    return _finish_type_iii(q, cycle, cp, cpp, tris)


def _finish_type_iii(q, cycle, cp, cpp, tris) -> Decomposition:
    on_cycle = set(cycle)
    part1 = _hanging_component(q, cp, on_cycle - {cp})
    part2 = _hanging_component(q, cpp, on_cycle - {cpp})
    if part1 & part2:
        raise NotTypeD("glued parts of the 4-cycle skeleton intersect")
    if part1 | part2 | on_cycle != set(range(q.n)):
        raise NotTypeD("unreachable vertices outside the skeleton")
    sh1 = _part_shape(q, cp, part1)
    sh2 = _part_shape(q, cpp, part2)
    form = TypeIII(sh1.s, sh1.t, sh2.s, sh2.t)
    a_tris = tuple(
        t for t in tris if set(t) <= part1 or set(t) <= part2
    )
    return Decomposition(
        "III",
        form,
        cycle,
        a_tris,
        ((cp, part1), (cpp, part2)),
    )


def _finish_type_iv(q, cycle, spike_at, tips, tris) -> Decomposition:
    m = len(cycle)
    on_cycle = set(cycle)
    # cycle vertices carry only cycle and spike arrows
    for i, v in enumerate(cycle):
        allowed = 2
        if spike_at[i] is not None:
            allowed += 1
        if spike_at[(i - 1) % m] is not None:
            allowed += 1
        if q.degree(v) != allowed:
            raise NotTypeD(f"cycle vertex {v} has extra attachments")
    blocked = on_cycle | tips
    spikes: list[SpikeInfo] = []
    covered = set(on_cycle)
    a_tris = []
    parts = []
    for i in range(m):
        info = spike_at[i]
        if info is None:
            continue
        part = _hanging_component(q, info.tip, blocked - {info.tip})
        if part & covered:
            raise NotTypeD("spike parts intersect")
        covered |= part
        shape = _part_shape(q, info.tip, part)
        spikes.append(
            SpikeInfo(i, info.tip, part, shape.s, shape.t)
        )
        parts.append((info.tip, part))
        a_tris.extend(t for t in tris if set(t) <= part)
    if covered != set(range(q.n)):
        raise NotTypeD("unreachable vertices outside cycle and spikes")
    positions = [sp.position for sp in spikes]
    r = len(positions)
    triples = []
    for idx, sp in enumerate(spikes):
        nxt = positions[(idx + 1) % r]
        d = (nxt - sp.position) % m
        if d == 0:
            d = m
        triples.append((d, sp.s, sp.t))
    form = TypeIV(tuple(triples))
    return Decomposition("IV", form, cycle, tuple(a_tris), tuple(parts), tuple(spikes))


def _decompose_shared(q, shared, arrow_tris, tris) -> Decomposition:
    """Cases with an arrow in two triangles: type II or a 3-cycle core."""
    if len(shared) == 1:
        (u, v) = shared[0]
        t1, t2 = arrow_tris[(u, v)]
        tip1 = next(x for x in t1 if x not in (u, v))
        tip2 = next(x for x in t2 if x not in (u, v))
        bare1 = q.degree(tip1) == 2
        bare2 = q.degree(tip2) == 2
        if bare1 and bare2:
            return _finish_type_ii(q, u, v, tip1, tip2, tris)
        if bare1 != bare2:
            bare_tip = tip1 if bare1 else tip2
            central = (u, v, bare_tip)
            return _finish_small_cycle(q, central, tris)
        raise NotTypeD("both triangle tips of a doubled arrow carry parts")
    # two or three shared arrows: the central triangle contains them all
    cands = [t for t in tris if set(shared) <= set(triangle_arrows(t))]
    if len(cands) != 1:
        raise NotTypeD("no unique central triangle for the doubled arrows")
    return _finish_small_cycle(q, cands[0], tris)


def _finish_small_cycle(q, central, tris) -> Decomposition:
    spike_at, tips = _spikes_on_cycle(q, central)
    if not tips:
        raise NotTypeD("length-3 cycle without spikes is not of Dynkin type D")
    return _finish_type_iv(q, central, spike_at, tips, tris)


def _finish_type_ii(q, u, v, tip1, tip2, tris) -> Decomposition:
    # shared arrow u -> v; v plays the commuting source (two parallel
    # length-2 paths v -> tip -> u), u the target.
    blocked = {tip1, tip2, u, v}
    part_v = _hanging_component(q, v, blocked - {v})
    part_u = _hanging_component(q, u, blocked - {u})
    if part_v & part_u:
        raise NotTypeD("glued parts of the double triangle intersect")
    if part_v | part_u | blocked != set(range(q.n)):
        raise NotTypeD("unreachable vertices outside the double triangle")
    sh_v = _part_shape(q, v, part_v)
    sh_u = _part_shape(q, u, part_u)
    form = TypeII(sh_v.s, sh_v.t, sh_u.s, sh_u.t)
    a_tris = tuple(t for t in tris if set(t) <= part_v or set(t) <= part_u)
    return Decomposition(
        "II",
        form,
        (u, v, tip1, tip2),
        a_tris,
        ((v, part_v), (u, part_u)),
    )


def _decompose_fork(q, tris) -> Decomposition:
    candidates = []
    for c in range(q.n):
        leaves = [w for w in q.neighbors(c) if q.degree(w) == 1]
        for i in range(len(leaves)):
            for j in range(i + 1, len(leaves)):
                candidates.append((leaves[i], leaves[j], c))
    for a, b, c in candidates:
        rest = frozenset(range(q.n)) - {a, b}
        try:
            sub, index = _induced(q, rest)
            analyze_type_a(sub, root=index[c])
        except QuiverError:
            continue
        shape = _part_shape(q, c, rest)
        a_tris = tuple(t for t in tris if set(t) <= rest)
        return Decomposition(
            "I", TypeI(shape.s, shape.t), (a, b, c), a_tris, ((c, rest),)
        )
    raise NotTypeD("no fork, double triangle or central cycle found")


def classify_type_d(q: Quiver) -> TypeDForm:
    """The unique parametric form of a quiver mutation-equivalent to D_n."""
    return normalize_form(decompose(q).form)


# -- realization ------------------------------------------------------------


def _attach_standard_part(arrows: list, root: int, s: int, t: int, nxt: int) -> int:
    """Append the standard rooted A-quiver (s lines then t fanned
    triangles) at ``root``; returns the next free vertex id."""
    chain = root
    for _ in range(s):
        arrows.append((chain, nxt))
        chain = nxt
        nxt += 1
    for _ in range(t):
        b, u = nxt, nxt + 1
        arrows.append((chain, b))
        arrows.append((b, u))
        arrows.append((u, chain))
        chain = b
        nxt += 2
    return nxt


def realize_type_a(s: int, t: int) -> Quiver:
    """Standard-form A-class quiver with s lines and t triangles,
    rooted at vertex 0."""
    arrows: list[tuple[int, int]] = []
    nxt = _attach_standard_part(arrows, 0, s, t, 1)
    return Quiver.from_arrows(nxt, arrows)


def realize(form: TypeDForm) -> Quiver:
    """Explicit quiver for a parametric form, A-parts in standard form."""
    arrows: list[tuple[int, int]] = []
    if isinstance(form, TypeI):
        # a=0, b=1 -> c=2
        arrows += [(0, 2), (1, 2)]
        nxt = _attach_standard_part(arrows, 2, form.s, form.t, 3)
    elif isinstance(form, TypeII):
        # b=0, a=1, c'=2, c''=3; commuting paths 2->0->3 and 2->1->3
        arrows += [(2, 0), (0, 3), (3, 2), (2, 1), (1, 3)]
        nxt = _attach_standard_part(arrows, 2, form.s1, form.t1, 4)
        nxt = _attach_standard_part(arrows, 3, form.s2, form.t2, nxt)
    elif isinstance(form, TypeIII):
        # 4-cycle c'=0 -> 1 -> c''=2 -> 3 -> 0
        arrows += [(0, 1), (1, 2), (2, 3), (3, 0)]
        nxt = _attach_standard_part(arrows, 0, form.s1, form.t1, 4)
        nxt = _attach_standard_part(arrows, 2, form.s2, form.t2, nxt)
    elif isinstance(form, TypeIVCycle):
        m = form.m
        arrows += [(i, (i + 1) % m) for i in range(m)]
        nxt = m
    elif isinstance(form, TypeIV):
        if form.m == 2:
            return realize(normalize_form(form))
        m = form.m
        arrows += [(i, (i + 1) % m) for i in range(m)]
        nxt = m
        pos = 0
        for d, s, t in form.triples:
            tip = nxt
            nxt += 1
            arrows.append((tip, pos))
            arrows.append(((pos + 1) % m, tip))
            nxt = _attach_standard_part(arrows, tip, s, t, nxt)
            pos = (pos + d) % m
    else:
        raise InvalidForm(f"cannot realize {form!r}")
    return Quiver.from_arrows(nxt if arrows else 1, arrows)
