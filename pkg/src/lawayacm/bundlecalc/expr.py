"""Bundle expressions: line bundles, twists of Omega_P2, twists, direct sums,
extensions and kernels, each optionally carrying vanishing assumptions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Optional, Union

from ..errors import FeatureError, InputError
from ..geometry import DivisorClass, Surface, SURFACES, chi_line, h_multiple


@dataclass(frozen=True)
class Assumption:
    """``h^which(E(t)) = value`` for every twist ``t`` in ``ranges``.

    ``ranges`` is a tuple of closed integer intervals ``(lo, hi)`` where either
    end may be ``None`` for an unbounded side.
    """

    which: int
    ranges: tuple[tuple[Optional[int], Optional[int]], ...]
    value: int = 0
    provenance: str = ""

    def __post_init__(self):
        if self.which not in (0, 1, 2):
            raise InputError(f"assumption index must be 0, 1 or 2, not {self.which}")
        if self.value < 0:
            raise InputError("asserted dimensions are non-negative")
        for lo, hi in self.ranges:
            if lo is not None and hi is not None and lo > hi:
                raise InputError(f"empty twist range {lo}..{hi}")

    def covers(self, t: int) -> bool:
        return any((lo is None or t >= lo) and (hi is None or t <= hi) for lo, hi in self.ranges)

    @classmethod
    def parse(cls, text: str) -> "Assumption":
        """Parse ``index:range:value[:provenance]``, e.g. ``h0:t<=-1:0:Eq-VanishingH0H2``.

        A range is a ``|``-separated union of ``t<=n``, ``t>=n``, ``t<n``,
        ``t>n``, ``t=n``, ``n``, ``a..b`` or ``all``.
        """
        parts = text.split(":", 3)
        if len(parts) < 3:
            raise InputError(f"assumption {text!r} is not of the form index:range:value[:provenance]")
        idx = parts[0].strip().lower()
        if idx not in ("h0", "h1", "h2", "0", "1", "2"):
            raise InputError(f"unknown cohomology index {parts[0]!r}")
        try:
            value = int(parts[2])
        except ValueError:
            raise InputError(f"assumed value {parts[2]!r} is not an integer") from None
        prov = parts[3].strip() if len(parts) == 4 else ""
        return cls(int(idx[-1]), parse_twist_ranges(parts[1]), value, prov)

    def __str__(self):
        return f"h{self.which}:{format_twist_ranges(self.ranges)}:{self.value}" + (
            f":{self.provenance}" if self.provenance else ""
        )


def parse_twist_ranges(text: str):
    out = []
    for piece in text.split("|"):
        p = piece.replace(" ", "")
        if p in ("all", "*"):
            out.append((None, None))
            continue
        m = re.fullmatch(r"t(<=|>=|<|>|=|==)([+-]?\d+)", p)
        if m:
            op, n = m.group(1), int(m.group(2))
            out.append(
                {"<=": (None, n), ">=": (n, None), "<": (None, n - 1), ">": (n + 1, None)}.get(op, (n, n))
            )
            continue
        m = re.fullmatch(r"([+-]?\d+)\.\.([+-]?\d+)", p)
        if m:
            out.append((int(m.group(1)), int(m.group(2))))
            continue
        if re.fullmatch(r"[+-]?\d+", p):
            out.append((int(p), int(p)))
            continue
        raise InputError(f"cannot read twist range {piece!r}")
    return tuple(out)


def format_twist_ranges(ranges) -> str:
    pieces = []
    for lo, hi in ranges:
        if lo is None and hi is None:
            pieces.append("all")
        elif lo is None:
            pieces.append(f"t<={hi}")
        elif hi is None:
            pieces.append(f"t>={lo}")
        elif lo == hi:
            pieces.append(f"t={lo}")
        else:
            pieces.append(f"{lo}..{hi}")
    return "|".join(pieces)


class BundleExpr:
    """Common behaviour of the expression nodes."""

    assumptions: tuple

    @property
    def kind(self) -> str:
        raise NotImplementedError

    @property
    def surface(self) -> Surface:
        return SURFACES[self.kind]

    @property
    def rank(self) -> int:
        raise NotImplementedError

    @property
    def c1(self) -> DivisorClass:
        raise NotImplementedError

    def chi(self, shift: DivisorClass) -> int:
        """Euler characteristic of the bundle tensored by O(shift)."""
        raise NotImplementedError

    def with_assumptions(self, *assumptions):
        return replace(self, assumptions=tuple(self.assumptions) + tuple(assumptions))

    def __str__(self):
        from .parser import format_expr

        return format_expr(self)


@dataclass(frozen=True)
class Line(BundleExpr):
    d: DivisorClass
    assumptions: tuple = field(default=(), repr=False)

    @property
    def kind(self):
        return self.d.kind

    @property
    def rank(self):
        return 1

    @property
    def c1(self):
        return self.d

    def chi(self, shift):
        return chi_line(self.surface, self.d + shift)


@dataclass(frozen=True)
class OmegaP2(BundleExpr):
    t: int
    assumptions: tuple = field(default=(), repr=False)

    @property
    def kind(self):
        return "P2"

    @property
    def rank(self):
        return 2

    @property
    def c1(self):
        return SURFACES["P2"].divisor(2 * self.t - 3)

    def chi(self, shift):
        s = self.t + shift.coords[0]
        return s * s - 1


@dataclass(frozen=True)
class Twist(BundleExpr):
    expr: BundleExpr
    d: DivisorClass
    assumptions: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if self.d.kind != self.expr.kind:
            raise InputError(f"twist divisor lives on {self.d.kind}, bundle on {self.expr.kind}")

    @property
    def kind(self):
        return self.expr.kind

    @property
    def rank(self):
        return self.expr.rank

    @property
    def c1(self):
        return self.expr.c1 + self.rank * self.d

    def chi(self, shift):
        return self.expr.chi(shift + self.d)


@dataclass(frozen=True)
class Sum(BundleExpr):
    terms: tuple
    assumptions: tuple = field(default=(), repr=False)

    def __post_init__(self):
        flat = []
        for t in self.terms:
            if isinstance(t, Sum) and not t.assumptions:
                flat.extend(t.terms)
            else:
                flat.append(t)
        if not flat:
            raise InputError("a direct sum needs at least one summand")
        if len({t.kind for t in flat}) != 1:
            raise InputError("all summands must live on the same surface")
        object.__setattr__(self, "terms", tuple(flat))

    @property
    def kind(self):
        return self.terms[0].kind

    @property
    def rank(self):
        return sum(t.rank for t in self.terms)

    @property
    def c1(self):
        out = self.terms[0].c1
        for t in self.terms[1:]:
            out = out + t.c1
        return out

    def chi(self, shift):
        return sum(t.chi(shift) for t in self.terms)


@dataclass(frozen=True)
class Ext(BundleExpr):
    """The middle term E of ``0 -> sub -> E -> quot -> 0``."""

    sub: BundleExpr
    quot: BundleExpr
    assumptions: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if self.sub.kind != self.quot.kind:
            raise InputError("extension terms must live on the same surface")

    @property
    def kind(self):
        return self.sub.kind

    @property
    def rank(self):
        return self.sub.rank + self.quot.rank

    @property
    def c1(self):
        return self.sub.c1 + self.quot.c1

    def chi(self, shift):
        return self.sub.chi(shift) + self.quot.chi(shift)


@dataclass(frozen=True)
class Ker(BundleExpr):
    """The kernel E of a surjection in ``0 -> E -> mid -> target -> 0``."""

    mid: BundleExpr
    target: BundleExpr
    assumptions: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if self.mid.kind != self.target.kind:
            raise InputError("kernel terms must live on the same surface")
        if self.mid.rank - self.target.rank < 1:
            raise InputError(
                f"kernel of a rank {self.mid.rank} -> rank {self.target.rank} surjection has no positive rank"
            )

    @property
    def kind(self):
        return self.mid.kind

    @property
    def rank(self):
        return self.mid.rank - self.target.rank

    @property
    def c1(self):
        return self.mid.c1 - self.target.c1

    def chi(self, shift):
        return self.mid.chi(shift) - self.target.chi(shift)


def direct_sum(*terms) -> BundleExpr:
    if len(terms) == 1:
        return terms[0]
    return Sum(tuple(terms))


def power(expr: BundleExpr, n: int) -> BundleExpr:
    if n < 1:
        raise InputError("a direct-sum power needs n >= 1")
    return direct_sum(*([expr] * n))


def twist_by(expr: BundleExpr, t: int) -> BundleExpr:
    """``expr`` tensored by O(t*h)."""
    return Twist(expr, t * expr.surface.h)


def special_c(expr: BundleExpr) -> Optional[int]:
    return h_multiple(expr.surface, expr.c1)


def dual_rank2(expr: BundleExpr) -> BundleExpr:
    """E^dual as the twist E(-c) of a special rank 2 bundle with c1 = c*h."""
    if expr.rank != 2:
        raise FeatureError(f"rank 2 self-duality needs a rank 2 bundle, got rank {expr.rank}")
    c = special_c(expr)
    if c is None:
        raise FeatureError(f"c1 = {expr.c1.coords} is not a multiple of h")
    return Twist(expr, (-c) * expr.surface.h)


Node = Union[Line, OmegaP2, Twist, Sum, Ext, Ker]
