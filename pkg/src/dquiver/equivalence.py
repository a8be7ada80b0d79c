"""Good-mutation equivalence and derived-equivalence standard forms.

Types I and II are handled by closed-form parameter rules; spikeless
cycles are isolated; types III and IV (with spikes) go through the
good-mutation parameter space: a five-class tagged union computed from
interval sums over the triple sequence, compared up to rotation.
Derived standard forms additionally merge triangle material inside
groups of consecutive spikes (the good double moves).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .invariants import associated_polynomial
from .relations import cartan_matrix
from .typeforms import (
    InvalidForm,
    TypeDForm,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    TypeIVCycle,
    normalize_form,
    realize,
)


def _min_rotation(seq: tuple) -> tuple:
    if not seq:
        return seq
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


# -- interval quantities and partitions -------------------------------------


def interval_quantities(seq, indices) -> tuple[int, int, int]:
    """The three interval sums (a, b, s) over a subset of triple positions.

    Distances are split into 1, even, and odd >= 3: odd distances count
    into a; ones and halved even distances (and (d-3)/2 for odd) into b;
    even positions and all line counts into s.
    """
    idx = list(indices)
    if not idx:
        raise ValueError("interval must be non-empty")
    a = b = s = 0
    for i in idx:
        d, si, _ = seq[i]
        if d == 1:
            b += 1
        elif d % 2 == 0:
            b += d // 2
            s += 1
        else:
            a += 1
            b += (d - 3) // 2
        s += si
    return a, b, s


def _positive_intervals(chosen: list[int], r: int) -> list[list[int]]:
    """Cyclic intervals [i_j, ..., i_{j+1}-1] for chosen positions."""
    l = len(chosen)
    out = []
    for j in range(l):
        start = chosen[j]
        end = chosen[(j + 1) % l]
        span = (end - start) % r
        if span == 0:
            span = r
        out.append([(start + k) % r for k in range(span)])
    return out


def _negative_intervals(chosen: list[int], r: int) -> list[list[int]]:
    """Cyclic intervals [i_{j-1}+1, ..., i_j] for chosen positions."""
    l = len(chosen)
    out = []
    for j in range(l):
        prev = chosen[(j - 1) % l]
        end = chosen[j]
        span = (end - prev) % r
        if span == 0:
            span = r
        out.append([(prev + 1 + k) % r for k in range(span)])
    return out


# -- the space of good mutation parameters ----------------------------------


@dataclass(frozen=True)
class ParamsC3:
    """Type III classes: a pair of triangle counts up to swap, plus lines."""

    t1: int
    t2: int
    s: int

    def __post_init__(self):
        if self.t2 < self.t1:
            a, b = self.t2, self.t1
            object.__setattr__(self, "t1", a)
            object.__setattr__(self, "t2", b)


@dataclass(frozen=True)
class ParamsD21:
    b: int
    s: int

    def __post_init__(self):
        if self.b < 3 or self.s < 0:
            raise InvalidForm("class d21 needs b >= 3 and s >= 0")


@dataclass(frozen=True)
class ParamsD22:
    blocks: tuple[tuple[int, int], ...]  # (b_j, T_j), cyclic
    s: int

    def __post_init__(self):
        blocks = tuple(tuple(b) for b in self.blocks)
        if not blocks or any(b < 1 or t < 1 for b, t in blocks):
            raise InvalidForm("class d22 blocks need b_j, T_j >= 1")
        if sum(b for b, _ in blocks) < 3 or self.s < 0:
            raise InvalidForm("class d22 needs total block length >= 3")
        object.__setattr__(self, "blocks", _min_rotation(blocks))


@dataclass(frozen=True)
class ParamsD31:
    b: int
    spikes: tuple[int, ...]  # S_1..S_a, cyclic

    def __post_init__(self):
        spikes = tuple(self.spikes)
        if self.b < 0 or not spikes or any(s < 0 for s in spikes):
            raise InvalidForm("class d31 needs b >= 0 and a non-empty spike list")
        object.__setattr__(self, "spikes", _min_rotation(spikes))


@dataclass(frozen=True)
class ParamsD32:
    segments: tuple[tuple[int, tuple[int, ...], int], ...]  # (b_j, S_j, T_j), cyclic

    def __post_init__(self):
        segs = tuple((b, tuple(ss), t) for b, ss, t in self.segments)
        if not segs:
            raise InvalidForm("class d32 needs at least one segment")
        for b, ss, t in segs:
            if b < 0 or t < 1 or any(s < 0 for s in ss):
                raise InvalidForm("bad d32 segment")
            if b == 0 and not ss:
                raise InvalidForm("d32 segment needs a_j, b_j not both zero")
        if all(not ss for _, ss, _ in segs):
            raise InvalidForm("class d32 needs some odd-distance spike")
        object.__setattr__(self, "segments", _min_rotation(segs))


GoodMutationParams = ParamsC3 | ParamsD21 | ParamsD22 | ParamsD31 | ParamsD32


def params_equal(p: GoodMutationParams, q: GoodMutationParams) -> bool:
    return p == q


def _form_triples(form: TypeDForm) -> tuple[tuple[int, int, int], ...]:
    if isinstance(form, TypeIV):
        return form.triples
    form = normalize_form(form)
    if isinstance(form, TypeIII):
        return ((1, form.s1, form.t1), (1, form.s2, form.t2))
    raise InvalidForm(
        f"good mutation parameters are defined for types III and IV, not {form}"
    )


def good_params(form: TypeDForm) -> GoodMutationParams:
    """The good-mutation class and its parameters (types III / IV)."""
    seq = _form_triples(form)
    r = len(seq)
    everything = list(range(r))
    i_d = [i for i in everything if seq[i][0] >= 3 and seq[i][0] % 2 == 1]
    i_t = [i for i in everything if seq[i][2] > 0]
    if not i_d and not i_t:
        _, b, s = interval_quantities(seq, everything)
        if b >= 3:
            return ParamsD21(b, s)
        return ParamsC3(0, 0, s)
    if not i_d:
        pos = _positive_intervals(i_t, r)
        bs = [interval_quantities(seq, iv)[1] for iv in pos]
        ts = [seq[i][2] for i in i_t]
        _, _, s = interval_quantities(seq, everything)
        if sum(bs) >= 3:
            return ParamsD22(tuple(zip(bs, ts)), s)
        if len(i_t) == 1:
            return ParamsC3(ts[0], 0, s)
        return ParamsC3(ts[0], ts[1], s)
    if not i_t:
        a, b, _ = interval_quantities(seq, everything)
        neg = _negative_intervals(i_d, r)
        spikes = tuple(interval_quantities(seq, iv)[2] for iv in neg)
        return ParamsD31(b, spikes)
    pos = _positive_intervals(i_t, r)
    neg_by_pos = dict(zip(i_d, _negative_intervals(i_d, r)))
    d_set = set(i_d)
    segments = []
    for j, iv in enumerate(pos):
        a_j, b_j, _ = interval_quantities(seq, iv)
        t_j = seq[i_t[j]][2]
        ordered_ds = [i for i in iv if i in d_set]
        s_list = tuple(
            interval_quantities(seq, neg_by_pos[i])[2] for i in ordered_ds
        )
        segments.append((b_j, s_list, t_j))
    return ParamsD32(tuple(segments))


def params_to_form(p: GoodMutationParams) -> TypeDForm:
    """The standard-form quiver parameters of a good-mutation class."""
    if isinstance(p, ParamsC3):
        return TypeIII(p.s, p.t1, 0, p.t2)
    if isinstance(p, ParamsD21):
        return TypeIV(((1, p.s, 0),) + ((1, 0, 0),) * (p.b - 1))
    if isinstance(p, ParamsD22):
        triples: list[tuple[int, int, int]] = []
        for j, (b_j, t_j) in enumerate(p.blocks):
            triples.append((1, p.s if j == 0 else 0, t_j))
            triples.extend([(1, 0, 0)] * (b_j - 1))
        return TypeIV(tuple(triples))
    if isinstance(p, ParamsD31):
        return TypeIV(
            ((1, 0, 0),) * p.b + tuple((3, s_i, 0) for s_i in p.spikes)
        )
    if isinstance(p, ParamsD32):
        triples = []
        for b_j, s_list, t_j in p.segments:
            if b_j > 0:
                triples.append((1, 0, t_j))
                triples.extend([(1, 0, 0)] * (b_j - 1))
                triples.extend((3, s, 0) for s in s_list)
            else:
                triples.append((3, s_list[0], t_j))
                triples.extend((3, s, 0) for s in s_list[1:])
        return TypeIV(tuple(triples))
    raise TypeError(f"not good mutation parameters: {p!r}")


# -- good mutation equivalence ----------------------------------------------


def _good_class_key(form: TypeDForm):
    form = normalize_form(form)
    if isinstance(form, TypeI):
        if form.t == 0:
            return ("orientations", form.s)
        return ("II", form.s + 1, form.t - 1)
    if isinstance(form, TypeII):
        return ("II", form.s1 + form.s2, form.t1 + form.t2)
    if isinstance(form, TypeIVCycle):
        return ("cycle", form.m)
    return ("params", good_params(form))


def good_equivalent(f: TypeDForm, g: TypeDForm) -> bool:
    return _good_class_key(f) == _good_class_key(g)


def good_standard_form(form: TypeDForm) -> TypeDForm:
    """The canonical representative of the good-mutation class."""
    key = _good_class_key(form)
    if key[0] == "orientations":
        return TypeI(key[1], 0)
    if key[0] == "II":
        return TypeII(key[1], key[2], 0, 0)
    if key[0] == "cycle":
        return normalize_form(TypeIVCycle(key[1]))
    return normalize_form(params_to_form(key[1]))


# -- derived standard forms --------------------------------------------------


@dataclass(frozen=True)
class DerA:
    n: int

    def __str__(self):
        return f"A(n={self.n})"


@dataclass(frozen=True)
class DerB:
    s: int
    t: int

    def __str__(self):
        return f"B(s={self.s},t={self.t})"


@dataclass(frozen=True)
class DerC:
    s: int
    t: int

    def __str__(self):
        return f"C(s={self.s},t={self.t})"


@dataclass(frozen=True)
class DerD1:
    n: int

    def __str__(self):
        return f"D1(n={self.n})"


@dataclass(frozen=True)
class DerD2:
    b: int
    s: int
    t: int

    def __str__(self):
        return f"D2(b={self.b},s={self.s},t={self.t})"


@dataclass(frozen=True)
class DerD3:
    b: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", _min_rotation(tuple(self.pairs)))

    def reversed_canonical(self) -> "DerD3":
        return DerD3(self.b, tuple(reversed(self.pairs)))

    def __str__(self):
        inner = ",".join(f"({s},{t})" for s, t in self.pairs)
        return f"D3(b={self.b},pairs=({inner}))"


DerivedStdForm = DerA | DerB | DerC | DerD1 | DerD2 | DerD3


def _reduce_distances(
    triples: tuple[tuple[int, int, int], ...]
) -> list[tuple[int, int, int]]:
    """Shorten all distances to 1 or 3 by the good moves; distance-2
    spikes become consecutive with one extra line."""
    reduced: list[tuple[int, int, int]] = []
    for d, s, t in triples:
        extra = 0
        while d >= 4:
            d -= 2
            extra += 1
        if d == 2:
            d, s = 1, s + 1
        reduced.append((d, s, t))
        reduced.extend([(1, 0, 0)] * extra)
    return reduced


def derived_standard_form(form: TypeDForm) -> DerivedStdForm:
    form = normalize_form(form)
    if isinstance(form, TypeI):
        if form.t == 0:
            return DerA(form.vertex_count())
        return DerB(form.s + 1, form.t - 1)
    if isinstance(form, TypeII):
        return DerB(form.s1 + form.s2, form.t1 + form.t2)
    if isinstance(form, TypeIII):
        return DerC(form.s1 + form.s2, form.t1 + form.t2)
    if isinstance(form, TypeIVCycle):
        if form.m % 2 == 1:
            return DerD1(form.m)
        return derived_standard_form(TypeIV(((1, 0, 0),) * (form.m // 2)))
    reduced = _reduce_distances(form.triples)
    if all(d == 1 for d, _, _ in reduced):
        s = sum(x[1] for x in reduced)
        t = sum(x[2] for x in reduced)
        if len(reduced) >= 3:
            return DerD2(len(reduced), s, t)
        return DerC(s, t)
    b = sum(1 for d, _, _ in reduced if d == 1)
    start = next(i for i, (d, _, _) in enumerate(reduced) if d == 3)
    order = reduced[start + 1 :] + reduced[: start + 1]
    pairs = []
    cur_s = cur_t = 0
    for d, s, t in order:
        cur_s += s
        cur_t += t
        if d == 3:
            pairs.append((cur_s, cur_t))
            cur_s = cur_t = 0
    if b == 0 and pairs == [(0, 0)]:
        return DerB(0, 0)  # the 4-vertex double triangle
    return DerD3(b, tuple(pairs))


def derived_form_parameters(form: DerivedStdForm) -> TypeDForm:
    """A parametric quiver form realizing a derived standard form."""
    if isinstance(form, DerA):
        return TypeI(form.n - 3, 0)
    if isinstance(form, DerB):
        return TypeII(form.s, form.t, 0, 0)
    if isinstance(form, DerC):
        return TypeIII(form.s, form.t, 0, 0)
    if isinstance(form, DerD1):
        return TypeIVCycle(form.n)
    if isinstance(form, DerD2):
        return TypeIV(((1, form.s, form.t),) + ((1, 0, 0),) * (form.b - 1))
    if isinstance(form, DerD3):
        return TypeIV(
            ((1, 0, 0),) * form.b + tuple((3, s, t) for s, t in form.pairs)
        )
    raise TypeError(f"not a derived standard form: {form!r}")


def derived_form_vertices(form: DerivedStdForm) -> int:
    return realize(derived_form_parameters(form)).n


def _weighted_pairs(total: int) -> list[tuple[int, int]]:
    """(s, t) with s + 2t = total."""
    return [(total - 2 * t, t) for t in range(total // 2 + 1)]


def enumerate_standard_forms(
    n: int, op_identify: bool = False
) -> list[DerivedStdForm]:
    """All derived standard forms on n vertices, deterministic order.

    With ``op_identify`` the D3 pair sequences are identified up to order
    reversal as well, matching identification of opposite algebras.
    """
    if n < 4:
        raise ValueError("Dynkin type D needs n >= 4")
    forms: list[DerivedStdForm] = [DerA(n)]
    for s, t in _weighted_pairs(n - 4):
        forms.append(DerB(s, t))
    for s, t in _weighted_pairs(n - 4):
        forms.append(DerC(s, t))
    if n % 2 == 1:
        forms.append(DerD1(n))
    for b in range(3, n // 2 + 1):
        for s, t in _weighted_pairs(n - 2 * b):
            forms.append(DerD2(b, s, t))
    seen_d3 = set()
    for k in range(1, n // 4 + 1):
        for b in range(0, (n - 4 * k) // 2 + 1):
            material = n - 4 * k - 2 * b
            for weights in _compositions(material, k):
                for pairs in product(*[_weighted_pairs(w) for w in weights]):
                    if b == 0 and pairs == ((0, 0),):
                        continue  # coincides with B(0,0)
                    canon = _min_rotation(pairs)
                    if op_identify:
                        canon = min(canon, _min_rotation(tuple(reversed(pairs))))
                    key = (b, canon)
                    if key in seen_d3:
                        continue
                    seen_d3.add(key)
                    forms.append(DerD3(b, canon))
    forms.sort(key=str)
    return forms


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def count_derived_classes(n: int) -> int:
    """Number of distinct associated polynomials over the standard forms.

    Complete as a derived-equivalence count for 4 <= n <= 14; for larger
    n the polynomial count is only a lower bound on nothing in
    particular and callers should consult ``count_is_exact``.
    """
    polys: set[tuple[int, ...]] = set()
    for form in enumerate_standard_forms(n):
        q = realize(derived_form_parameters(form))
        polys.add(associated_polynomial(cartan_matrix(q)).coeffs)
    return len(polys)


def count_is_exact(n: int) -> bool:
    return 4 <= n <= 14
