"""Cohomology spectra of bundle expressions by long-exact-sequence bookkeeping.

For a short exact sequence ``0 -> A -> B -> C -> 0`` the long exact sequence
is determined, dimension-wise, by the ranks r0, r1 of the two connecting maps
H^0(C) -> H^1(A) and H^1(C) -> H^2(A)::

    b0 = a0 + c0 - r0,   b1 = a1 + c1 - r0 - r1,   b2 = a2 + c2 - r1

with ``0 <= r0 <= min(c0, a1)`` and ``0 <= r1 <= min(c1, a2)``.  Whichever
term is unknown (the middle one for an extension, the left one for a kernel)
is an affine function of (r0, r1), so assumptions on the unknown term narrow
the admissible ranks and the narrowed ranks propagate to the other indices.

Rank 2 bundles additionally satisfy E^dual = E(-c1), so Serre duality links
h^i(E(D)) with h^{2-i}(E(K - c1 - D)); both twists are refined together.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from ..errors import IndeterminateError, InconsistencyError, InputError
from ..geometry import DivisorClass, cohom_twist_label, get_surface, h_multiple, slope_twist
from ..linecoh import CohomTriple, cohom_line, cohom_omega_p2
from .expr import BundleExpr, Ext, Ker, Line, OmegaP2, Sum, Twist

_ENUMERATION_LIMIT = 4096


@dataclass(frozen=True, order=True)
class Interval:
    """A dimension known to lie in ``[lo, hi]``; exact when ``lo == hi``."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi:
            raise InputError(f"invalid dimension range {self.lo}..{self.hi}")

    @classmethod
    def exact(cls, n):
        return cls(n, n)

    @property
    def is_exact(self):
        return self.lo == self.hi

    @property
    def value(self):
        if not self.is_exact:
            raise IndeterminateError(f"dimension is only known to lie in {self}")
        return self.lo

    @property
    def is_zero(self):
        return self.hi == 0

    @property
    def is_nonzero(self):
        return self.lo > 0

    def __add__(self, other):
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, n):
        return Interval(n * self.lo, n * self.hi)

    def meet(self, other) -> Optional["Interval"]:
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def __contains__(self, n):
        return self.lo <= n <= self.hi

    def __str__(self):
        return str(self.lo) if self.is_exact else f"{self.lo}..{self.hi}"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        try:
            if ".." in text:
                lo, hi = text.split("..")
                return cls(int(lo), int(hi))
            return cls.exact(int(text))
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"cannot read dimension {text!r}") from None


Triple = tuple  # (Interval, Interval, Interval)


def _exact_triple(t: CohomTriple) -> Triple:
    return tuple(Interval.exact(x) for x in t)


class Infeasible(Exception):
    def __init__(self, index, message):
        self.index = index
        super().__init__(message)


# --- integer range helpers: (lo, hi) with lo > hi meaning empty -------------

def _meet(a, b):
    return (max(a[0], b[0]), min(a[1], b[1]))


def _empty(a):
    return a[0] > a[1]


def _solve_exact(kind, x, y, cons):
    """Admissible dimensions of the unknown term for exact knowns ``x``, ``y``.

    ``kind == "ker"``: x = mid, y = target, unknown = kernel.
    ``kind == "ext"``: x = sub, y = quot, unknown = middle.
    """
    if kind == "ker":
        b, c = x, y
        if b[2] < c[2]:
            raise Infeasible(2, "H2(mid) -> H2(target) cannot be onto")
        p = (b[0] - c[0], b[1] - c[1], b[2] - c[2])
        s = 1
        r0 = (max(0, c[0] - b[0]), c[0])
        r1 = (max(0, c[1] - b[1]), c[1])
    else:
        a, c = x, y
        p = (a[0] + c[0], a[1] + c[1], a[2] + c[2])
        s = -1
        r0 = (0, min(c[0], a[1]))
        r1 = (0, min(c[1], a[2]))

    def pre(target, p_i):
        if s == 1:
            return (target.lo - p_i, target.hi - p_i)
        return (p_i - target.hi, p_i - target.lo)

    # dimensions are non-negative
    nonneg = [Interval(0, 1 << 62)] * 3
    t = [cons.get(i, nonneg[i]) if cons else nonneg[i] for i in range(3)]
    r0 = _meet(r0, pre(t[0], p[0]))
    if _empty(r0):
        raise Infeasible(0, "no admissible rank for H0(C) -> H1(A)")
    r1 = _meet(r1, pre(t[2], p[2]))
    if _empty(r1):
        raise Infeasible(2, "no admissible rank for H1(C) -> H2(A)")
    sigma = _meet((r0[0] + r1[0], r0[1] + r1[1]), pre(t[1], p[1]))
    if _empty(sigma):
        raise Infeasible(1, "no admissible ranks for the connecting maps")
    r0 = _meet(r0, (sigma[0] - r1[1], sigma[1] - r1[0]))
    r1 = _meet(r1, (sigma[0] - r0[1], sigma[1] - r0[0]))

    def image(p_i, rng):
        lo, hi = p_i + s * rng[0], p_i + s * rng[1]
        return (min(lo, hi), max(lo, hi))

    return image(p[0], r0), image(p[1], sigma), image(p[2], r1)


def _hull_bounds(kind, x, y):
    """Per-index bounds for interval knowns, without joint coupling."""
    if kind == "ker":
        b, c = x, y
        u0 = (max(0, b[0].lo - c[0].hi), b[0].hi)
        u1 = (max(0, b[1].lo - c[1].hi) + max(0, c[0].lo - b[0].hi), b[1].hi + c[0].hi)
        u2 = (
            max(0, b[2].lo - c[2].hi, b[2].lo - c[2].hi + c[1].lo - b[1].hi),
            max(0, b[2].hi - c[2].lo + c[1].hi),
        )
    else:
        a, c = x, y
        u0 = (a[0].lo + max(0, c[0].lo - a[1].hi), a[0].hi + c[0].hi)
        u1 = (max(0, a[1].lo - c[0].hi) + max(0, c[1].lo - a[2].hi), a[1].hi + c[1].hi)
        u2 = (max(0, a[2].lo - c[1].hi) + c[2].lo, a[2].hi + c[2].hi)
    return u0, u1, u2


def ses_unknown(kind: str, x: Triple, y: Triple, constraints=None) -> Triple:
    """Dimensions of the unknown term of a short exact sequence.

    ``kind`` is ``"ker"`` (unknown kernel of ``x -> y``) or ``"ext"``
    (unknown middle term of ``0 -> x -> E -> y -> 0``).  ``constraints`` maps
    a cohomology index to an :class:`Interval` the unknown must lie in.
    Raises :class:`Infeasible` when no assignment of connecting-map ranks is
    compatible with the constraints.
    """
    if kind not in ("ker", "ext"):
        raise InputError(f"unknown sequence kind {kind!r}")
    cons = dict(constraints or {})
    x = tuple(Interval.exact(v) if isinstance(v, int) else v for v in x)
    y = tuple(Interval.exact(v) if isinstance(v, int) else v for v in y)
    combos = 1
    for iv in x + y:
        combos *= iv.hi - iv.lo + 1
    if combos <= _ENUMERATION_LIMIT:
        acc = None
        last = None
        for values in product(*(range(iv.lo, iv.hi + 1) for iv in x + y)):
            try:
                got = _solve_exact(kind, values[:3], values[3:], cons)
            except Infeasible as exc:
                last = exc
                continue
            acc = got if acc is None else tuple(
                (min(u[0], g[0]), max(u[1], g[1])) for u, g in zip(acc, got)
            )
        if acc is None:
            raise last
        return tuple(Interval(lo, hi) for lo, hi in acc)
    out = []
    for i, (lo, hi) in enumerate(_hull_bounds(kind, x, y)):
        iv = Interval(lo, hi)
        if i in cons:
            iv = iv.meet(cons[i])
            if iv is None:
                raise Infeasible(i, "constraint is incompatible with the long exact sequence")
        out.append(iv)
    return tuple(out)


def narrow_by_chi(triple: Triple, chi: int) -> Triple:
    """Intersect each entry with what ``h0 - h1 + h2 = chi`` allows."""
    x0, x1, x2 = triple
    for _ in range(3):
        n0 = x0.meet(Interval(max(0, chi + x1.lo - x2.hi), max(0, chi + x1.hi - x2.lo)))
        if n0 is None:
            raise Infeasible(0, f"no h0 compatible with chi = {chi}")
        n1 = x1.meet(Interval(max(0, n0.lo + x2.lo - chi), max(0, n0.hi + x2.hi - chi)))
        if n1 is None:
            raise Infeasible(1, f"no h1 compatible with chi = {chi}")
        n2 = x2.meet(Interval(max(0, chi - n0.hi + n1.lo), max(0, chi - n0.lo + n1.hi)))
        if n2 is None:
            raise Infeasible(2, f"no h2 compatible with chi = {chi}")
        if (n0, n1, n2) == (x0, x1, x2):
            break
        x0, x1, x2 = n0, n1, n2
    return x0, x1, x2


def _flip(triple):
    return {0: triple[2], 1: triple[1], 2: triple[0]}


class Engine:
    """Memoised evaluation of expression nodes at divisor shifts."""

    def __init__(self, duality=True, sections="formula"):
        self.duality = duality
        self.sections = sections
        self._cache = {}

    def evaluate(self, node: BundleExpr, shift: DivisorClass) -> Triple:
        key = (node, shift)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if self.duality and node.rank == 2:
            self._evaluate_pair(node, shift)
        else:
            self._cache[key] = self._local(node, shift, None)
        return self._cache[key]

    def _evaluate_pair(self, node, shift):
        surface = node.surface
        mirror = surface.K - node.c1 - shift
        v = self._local(node, shift, None)
        w = v if mirror == shift else self._local(node, mirror, None)
        for _ in range(16):
            v2 = self._local(node, shift, _flip(w))
            w2 = v2 if mirror == shift else self._local(node, mirror, _flip(v2))
            if v2 == v and w2 == w:
                break
            v, w = v2, w2
        self._cache[(node, shift)] = v
        self._cache[(node, mirror)] = w

    def _constraints(self, node, shift, extra):
        cons = dict(extra or {})
        if node.assumptions:
            t = _twist_of(node, shift)
            if t is not None:
                for a in node.assumptions:
                    if a.covers(t):
                        iv = Interval.exact(a.value)
                        prev = cons.get(a.which)
                        if prev is not None and iv.meet(prev) is None:
                            raise InconsistencyError(
                                cohom_twist_label(node.surface, shift),
                                a.which,
                                f"assumed {a.value} ({a.provenance or 'no provenance'}) but it must lie in {prev}",
                            )
                        cons[a.which] = iv if prev is None else iv.meet(prev)
        return cons

    def _local(self, node, shift, extra):
        cons = self._constraints(node, shift, extra)
        label = cohom_twist_label(node.surface, shift)
        if isinstance(node, Line):
            raw = _exact_triple(cohom_line(node.surface, node.d + shift, sections=self.sections))
        elif isinstance(node, OmegaP2):
            raw = _exact_triple(cohom_omega_p2(node.t + shift.coords[0]))
        elif isinstance(node, Twist):
            raw = self.evaluate(node.expr, shift + node.d)
        elif isinstance(node, Sum):
            parts = [self.evaluate(t, shift) for t in node.terms]
            raw = tuple(_sum(p[i] for p in parts) for i in range(3))
        elif isinstance(node, (Ext, Ker)):
            kind = "ext" if isinstance(node, Ext) else "ker"
            left, right = (node.sub, node.quot) if kind == "ext" else (node.mid, node.target)
            x, y = self.evaluate(left, shift), self.evaluate(right, shift)
            try:
                raw = ses_unknown(kind, x, y, cons)
            except Infeasible as exc:
                raise InconsistencyError(label, exc.index, str(exc)) from None
            cons = {}
        else:
            raise TypeError(f"not a bundle expression: {node!r}")
        out = list(raw)
        for i, iv in cons.items():
            met = out[i].meet(iv)
            if met is None:
                raise InconsistencyError(label, i, f"constrained to {iv} but the sequences force {out[i]}")
            out[i] = met
        try:
            return narrow_by_chi(tuple(out), node.chi(shift))
        except Infeasible as exc:
            raise InconsistencyError(label, exc.index, str(exc)) from None


def _sum(intervals):
    it = iter(intervals)
    acc = next(it)
    for iv in it:
        acc = acc + iv
    return acc


def _twist_of(node, shift):
    return h_multiple(node.surface, shift)


@dataclass(frozen=True)
class Spectrum:
    """Per-twist (h0, h1, h2) over ``window`` as exact values or ranges."""

    kind: str
    window: tuple[int, int]
    entries: dict
    chi: Optional[dict] = field(default=None, compare=False)

    @property
    def twists(self):
        return range(self.window[0], self.window[1] + 1)

    def h(self, i: int, t: int) -> Interval:
        if t not in self.entries:
            raise InputError(f"twist {t} is outside the window {self.window[0]}..{self.window[1]}")
        return self.entries[t][i]

    def value(self, i: int, t: int) -> int:
        iv = self.h(i, t)
        if not iv.is_exact:
            raise IndeterminateError(f"h{i} at twist {t} is only known to lie in {iv}")
        return iv.lo

    def triple(self, t: int) -> CohomTriple:
        return CohomTriple(*(self.value(i, t) for i in range(3)))

    @property
    def is_exact(self):
        return all(iv.is_exact for row in self.entries.values() for iv in row)

    def restrict(self, lo, hi):
        if lo < self.window[0] or hi > self.window[1]:
            raise InputError("restriction must lie inside the window")
        keep = {t: self.entries[t] for t in range(lo, hi + 1)}
        chi = None if self.chi is None else {t: self.chi[t] for t in keep}
        return Spectrum(self.kind, (lo, hi), keep, chi)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["twist", "h0", "h1", "h2"])
        for t in self.twists:
            w.writerow([t] + [str(iv) for iv in self.entries[t]])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, kind: str = "") -> "Spectrum":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or [c.strip() for c in rows[0]] != ["twist", "h0", "h1", "h2"]:
            raise InputError("spectrum CSV must start with the header twist,h0,h1,h2")
        entries = {}
        for row in rows[1:]:
            if not row:
                continue
            entries[int(row[0])] = tuple(Interval.parse(c) for c in row[1:4])
        if not entries:
            raise InputError("spectrum CSV has no rows")
        ts = sorted(entries)
        if ts != list(range(ts[0], ts[-1] + 1)):
            raise InputError("spectrum CSV twists must be consecutive")
        return cls(kind, (ts[0], ts[-1]), entries)


def parse_window(text) -> tuple[int, int]:
    if isinstance(text, tuple):
        lo, hi = text
    else:
        try:
            lo, hi = (int(x) for x in str(text).split(".."))
        except ValueError:
            raise InputError(f"window {text!r} is not of the form a..b") from None
    if lo > hi:
        raise InputError(f"empty window {lo}..{hi}")
    return lo, hi


def default_window(expr: BundleExpr, l_max: int = 12) -> tuple[int, int]:
    c = abs(slope_twist(expr.surface, expr.c1))
    m = c + l_max + 10
    return -m, m


def spectrum(expr: BundleExpr, window=None, assumptions=(), *, duality=True, sections="formula",
             l_max=12, engine: Optional[Engine] = None) -> Spectrum:
    """Cohomology of ``expr(t*h)`` for every ``t`` in ``window``."""
    if assumptions:
        expr = expr.with_assumptions(*assumptions)
    lo, hi = default_window(expr, l_max) if window is None else parse_window(window)
    engine = engine or Engine(duality=duality, sections=sections)
    h = expr.surface.h
    entries, chis = {}, {}
    for t in range(lo, hi + 1):
        entries[t] = engine.evaluate(expr, t * h)
        chis[t] = expr.chi(t * h)
    return Spectrum(expr.kind, (lo, hi), entries, chis)


def ext_group_dim(surface, source: DivisorClass, target: DivisorClass, i: int, sections="formula") -> int:
    """dim Ext^i(O(source), O(target)) = h^i(O(target - source))."""
    if i not in (0, 1, 2):
        raise InputError("Ext index must be 0, 1 or 2 on a surface")
    surface = get_surface(surface)
    return cohom_line(surface, target - source, sections=sections)[i]
