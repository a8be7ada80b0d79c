"""Definedness of the two algebra mutations at a vertex, good/bad
classification of quiver mutations, and the parametric good and good
double moves between type D forms.

A negative mutation at k is defined iff every nonzero path leaving k
extends to a nonzero path by some arrow into k; positive dually.  A
quiver mutation is good iff the negative side of one endpoint pairs
with the positive side of the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import Quiver
from .relations import (
    PathOracle,
    nonzero_simple_paths_from,
    nonzero_simple_paths_to,
)
from .typeforms import (
    TypeDForm,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    normalize_form,
)


@dataclass(frozen=True)
class Definedness:
    neg: bool
    pos: bool

    def pattern(self) -> str:
        return {
            (True, True): "both",
            (True, False): "neg-only",
            (False, True): "pos-only",
            (False, False): "none",
        }[(self.neg, self.pos)]


@dataclass(frozen=True)
class GoodBadReport:
    k: int
    before: Definedness
    after: Definedness
    verdict: str  # "good" | "bad"


# the only (before, after) combinations that occur
ALLOWED_PATTERNS = {
    ("none", "both"),
    ("neg-only", "pos-only"),
    ("pos-only", "neg-only"),
    ("both", "both"),
    ("both", "none"),
}


def mutation_definedness(
    q: Quiver, k: int, oracle: PathOracle | None = None
) -> Definedness:
    if oracle is None:
        oracle = PathOracle(q)
    ins = q.in_neighbors(k)
    outs = q.out_neighbors(k)
    neg = bool(ins)
    if neg:
        for path in nonzero_simple_paths_from(q, oracle, k):
            if not any(oracle.is_nonzero((j,) + path) for j in ins):
                neg = False
                break
    pos = bool(outs)
    if pos:
        for path in nonzero_simple_paths_to(q, oracle, k):
            if not any(oracle.is_nonzero(path + (j,)) for j in outs):
                pos = False
                break
    return Definedness(neg=neg, pos=pos)


def classify_mutation(q: Quiver, k: int) -> GoodBadReport:
    before = mutation_definedness(q, k)
    after = mutation_definedness(q.mutate(k), k)
    good = (before.neg and after.pos) or (before.pos and after.neg)
    return GoodBadReport(
        k=k, before=before, after=after, verdict="good" if good else "bad"
    )


def mutation_report(q: Quiver) -> list[GoodBadReport]:
    return [classify_mutation(q, k) for k in range(q.n)]


# -- parametric moves -------------------------------------------------------


def _iii_readings(form: TypeIII):
    return {
        (form.s1, form.t1, form.s2, form.t2),
        (form.s2, form.t2, form.s1, form.t1),
    }


def _parts_admit_internal_move(parts: list[tuple[int, int]]) -> bool:
    """A glued rooted A-part admits a parameter-preserving good mutation
    iff it has a line end (sink/source flip) or two chained triangles
    (the double-triangle vertex move)."""
    return any(s >= 1 or t >= 2 for s, t in parts)


def parametric_good_moves(form: TypeDForm) -> list[TypeDForm]:
    """All parametric forms reachable by one good mutation."""
    form = normalize_form(form)
    out: set[TypeDForm] = set()
    if isinstance(form, TypeI):
        # sink/source mutations at the fork vertices keep the form
        out.add(form)
        if form.t >= 1:
            for s1 in range(form.s + 1):
                for t1 in range(form.t):
                    s2, t2 = form.s - s1, form.t - 1 - t1
                    out.add(TypeII(s1 + 1, t1, s2, t2))
                    out.add(TypeII(s1, t1, s2 + 1, t2))
    elif isinstance(form, TypeII):
        s1, t1, s2, t2 = form.s1, form.t1, form.s2, form.t2
        if _parts_admit_internal_move([(s1, t1), (s2, t2)]):
            out.add(form)  # good mutations inside the glued A-parts
        if s1 >= 1:
            out.add(TypeI(s1 - 1 + s2, t1 + t2 + 1))
            out.add(TypeII(s1 - 1, t1, s2 + 1, t2))
        if s2 >= 1:
            out.add(TypeI(s1 + s2 - 1, t1 + t2 + 1))
            out.add(TypeII(s1 + 1, t1, s2 - 1, t2))
        if t1 >= 1:
            for sp in range(s1 + 1):
                for tp in range(t1):
                    s3, t3 = s1 - sp, t1 - 1 - tp
                    out.add(TypeII(sp, tp, s2 + s3, t2 + t3 + 1))
        if t2 >= 1:
            for sp in range(s2 + 1):
                for tp in range(t2):
                    s3, t3 = s2 - sp, t2 - 1 - tp
                    out.add(TypeII(s1 + s3, t1 + t3 + 1, sp, tp))
    elif isinstance(form, TypeIII):
        if _parts_admit_internal_move(
            [(form.s1, form.t1), (form.s2, form.t2)]
        ):
            out.add(form)
        for sa, ta, sb, tb in _iii_readings(form):
            if sa >= 1:
                out.add(TypeIV(((2, sa - 1, ta), (1, sb, tb))))
                out.add(TypeIV(((1, sa - 1, ta), (2, sb, tb))))
    elif isinstance(form, TypeIV):
        trs = form.triples
        if _parts_admit_internal_move([(s, t) for _, s, t in trs]):
            out.add(form)
        r = len(trs)
        for i in range(r):
            rot = trs[i:] + trs[:i]
            (d1, s1, t1), rest = rot[0], rot[1:]
            if d1 >= 4:
                out.add(TypeIV(((1, s1, t1), (d1 - 2, 0, 0)) + rest))
                out.add(TypeIV(((d1 - 2, s1, t1), (1, 0, 0)) + rest))
            if (
                d1 == 1
                and rest
                and rest[0][1] == 0
                and rest[0][2] == 0
                and rest[0][0] >= 2
            ):
                out.add(TypeIV(((rest[0][0] + 2, s1, t1),) + rest[1:]))
            if rest and rest[0] == (1, 0, 0) and d1 >= 2:
                out.add(TypeIV(((d1 + 2, s1, t1),) + rest[1:]))
            if d1 == 2 and rest:
                d2, s2, t2 = rest[0]
                out.add(TypeIV(((1, s1, t1), (d2, s2 + 1, t2)) + rest[1:]))
            if d1 == 1 and rest and rest[0][1] >= 1:
                d2, s2, t2 = rest[0]
                out.add(TypeIV(((2, s1, t1), (d2, s2 - 1, t2)) + rest[1:]))
            if d1 == 2:
                out.add(TypeIV(((1, s1 + 1, t1),) + rest))
            if d1 == 1 and s1 >= 1:
                out.add(TypeIV(((2, s1 - 1, t1),) + rest))
    # a spikeless cycle admits no good mutation at all
    return sorted({normalize_form(f) for f in out}, key=str)


def parametric_double_moves(form: TypeDForm) -> list[TypeDForm]:
    """Forms reachable by one good double mutation."""
    form = normalize_form(form)
    out: set[TypeDForm] = set()
    if isinstance(form, TypeIII):
        for sa, ta, sb, tb in _iii_readings(form):
            if ta >= 1:
                for sp in range(sa + 1):
                    for tp in range(ta):
                        s2, t2 = sa - sp, ta - 1 - tp
                        out.add(TypeIII(sp, tp, sb + s2, tb + t2 + 1))
    elif isinstance(form, TypeIV):
        trs = form.triples
        r = len(trs)
        for i in range(r):
            rot = trs[i:] + trs[:i]
            (d1, s1, t1), rest = rot[0], rot[1:]
            if d1 != 1 or not rest:
                continue
            d2, s2, t2 = rest[0]
            if t1 >= 1:
                for sp in range(s1 + 1):
                    for tp in range(t1):
                        sB, tB = s1 - sp, t1 - 1 - tp
                        out.add(
                            TypeIV(
                                ((1, sp, tp), (d2, s2 + sB, t2 + tB + 1)) + rest[1:]
                            )
                        )
            if t2 >= 1:
                for sp in range(s2 + 1):
                    for tp in range(t2):
                        sB, tB = s2 - sp, t2 - 1 - tp
                        out.add(
                            TypeIV(
                                ((1, s1 + sp, t1 + tp + 1), (d2, sB, tB)) + rest[1:]
                            )
                        )
    return sorted({normalize_form(f) for f in out}, key=str)
