"""Picard lattices of P2, P1xP1 and the blow-ups of P2 at one to three points.

Divisor classes are integer vectors in a fixed basis:

* ``P2``    -- ``(h)``
* ``P1xP1`` -- ``(h1, h2)``
* ``Bl<n>`` -- ``(k, e1, ..., en)`` with ``k`` the pull-back of a line and
  ``e_i`` the exceptional curves, ``k^2 = 1``, ``e_i^2 = -1``.

The polarization is ``h = h1 + h2`` on P1xP1 and ``h = 3k - sum(e_i)`` on a
blow-up, so ``K = -i_X h`` in every case.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FeatureError, InputError, ParseError

KINDS = ("P2", "P1xP1", "Bl1", "Bl2", "Bl3")


@dataclass(frozen=True)
class DivisorClass:
    kind: str
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown surface kind {self.kind!r}")
        if len(self.coords) != SURFACES[self.kind].rank:
            raise InputError(
                f"{self.kind} divisor needs {SURFACES[self.kind].rank} coordinates, got {len(self.coords)}"
            )

    def _check(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.kind != self.kind:
            raise InputError(f"cannot combine divisors on {self.kind} and {other.kind}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.kind, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.kind, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return DivisorClass(self.kind, tuple(-x for x in self.coords))

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return DivisorClass(self.kind, tuple(n * x for x in self.coords))

    __rmul__ = __mul__

    def __str__(self):
        return format_divisor(self)


@dataclass(frozen=True)
class Surface:
    kind: str
    rank: int
    index: int
    hyperplane: tuple[int, ...]
    canonical: tuple[int, ...]

    @property
    def n_points(self):
        return self.rank - 1 if self.kind.startswith("Bl") else 0

    @property
    def h(self):
        return DivisorClass(self.kind, self.hyperplane)

    @property
    def K(self):
        return DivisorClass(self.kind, self.canonical)

    def divisor(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        return DivisorClass(self.kind, tuple(int(c) for c in coords))

    def zero(self):
        return DivisorClass(self.kind, (0,) * self.rank)

    def __str__(self):
        return self.kind


def _blowup(n):
    return Surface(f"Bl{n}", n + 1, 1, (3,) + (-1,) * n, (-3,) + (1,) * n)


SURFACES = {
    "P2": Surface("P2", 1, 3, (1,), (-3,)),
    "P1xP1": Surface("P1xP1", 2, 2, (1, 1), (-2, -2)),
    "Bl1": _blowup(1),
    "Bl2": _blowup(2),
    "Bl3": _blowup(3),
}
P2 = SURFACES["P2"]
P1xP1 = SURFACES["P1xP1"]
BL1, BL2, BL3 = SURFACES["Bl1"], SURFACES["Bl2"], SURFACES["Bl3"]

_ALIASES = {
    "p2": "P2",
    "p1xp1": "P1xP1",
    "p1p1": "P1xP1",
    "q": "P1xP1",
    "bl1": "Bl1",
    "bl2": "Bl2",
    "bl3": "Bl3",
}


def get_surface(name) -> Surface:
    if isinstance(name, Surface):
        return name
    key = _ALIASES.get(str(name).strip().lower())
    if key is None:
        raise InputError(f"unknown surface {name!r}; expected one of {', '.join(KINDS)}")
    return SURFACES[key]


def _coords(surface, d):
    if d.kind != surface.kind:
        raise InputError(f"divisor lives on {d.kind}, not {surface.kind}")
    return d.coords


def intersect(surface: Surface, d1: DivisorClass, d2: DivisorClass) -> int:
    x, y = _coords(surface, d1), _coords(surface, d2)
    if surface.kind == "P2":
        return x[0] * y[0]
    if surface.kind == "P1xP1":
        return x[0] * y[1] + x[1] * y[0]
    return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))


def serre_dual(surface: Surface, d: DivisorClass) -> DivisorClass:
    """Return ``K_X - d``; h^i(d) = h^{2-i}(serre_dual(d))."""
    _coords(surface, d)
    return surface.K - d


def chi_line(surface: Surface, d: DivisorClass) -> int:
    c = _coords(surface, d)
    if surface.kind == "P2":
        a = c[0]
        return (a + 1) * (a + 2) // 2
    if surface.kind == "P1xP1":
        return (c[0] + 1) * (c[1] + 1)
    a = c[0]
    return (a + 1) * (a + 2) // 2 + sum(b * (1 - b) // 2 for b in c[1:])


def chi_rank2(surface: Surface, c1: DivisorClass, c2: int, t) -> int:
    """Riemann-Roch for a rank 2 bundle with Chern classes ``c1``, ``c2``.

    On P2 ``t`` is the integer twist.  On P1xP1 ``t`` is either an integer
    (twist by ``t*h``) or a bidegree pair ``(a, b)``.
    """
    _coords(surface, c1)
    if surface.kind == "P2":
        (c,) = c1.coords
        i_x = surface.index
        twice = 2 * t * t + (2 * c + 2 * i_x) * t + c * c + i_x * c - 2 * c2 + 4
        return _half(twice)
    if surface.kind == "P1xP1":
        a, b = (t, t) if isinstance(t, int) else t
        x, y = c1.coords
        # c1^2 = 2xy; ((2a+2)h1 + (2b+2)h2).c1 = (2a+2)y + (2b+2)x
        twice = 2 * x * y + (2 * a + 2) * y + (2 * b + 2) * x - 2 * c2 + 4 * a * b + 4 * a + 4 * b + 4
        return _half(twice)
    raise FeatureError(f"rank 2 Riemann-Roch is only provided on P2 and P1xP1, not {surface.kind}")


def _half(n):
    if n % 2:
        raise InputError("Chern data give a non-integral Euler characteristic")
    return n // 2


def degree(surface: Surface, d: DivisorClass) -> int:
    """``d . h``."""
    return intersect(surface, d, surface.h)


def h_multiple(surface: Surface, d: DivisorClass):
    """Return ``c`` when ``d = c*h``, otherwise ``None``."""
    c = _coords(surface, d)
    h = surface.hyperplane
    q = Fraction(c[0], h[0])
    if q.denominator != 1:
        return None
    q = int(q)
    return q if all(x == q * y for x, y in zip(c, h)) else None


def cohom_twist_label(surface: Surface, shift: DivisorClass):
    """The integer twist when ``shift = t*h``, otherwise the divisor text."""
    t = h_multiple(surface, shift)
    return t if t is not None else format_divisor(shift)


def slope_twist(surface: Surface, d: DivisorClass) -> int:
    """``(d.h)/(h.h)`` rounded toward zero."""
    num = degree(surface, d)
    den = intersect(surface, surface.h, surface.h)
    q = abs(num) // den
    return q if num >= 0 else -q


_INT = r"\s*([+-]?\s*\d+)\s*"


def parse_divisor(text: str, surface) -> DivisorClass:
    """Parse ``O(a)``, ``O(a,b)`` or ``O(a;b1,...,bn)`` for ``surface``."""
    surface = get_surface(surface)
    body = re.fullmatch(r"\s*O\s*\((.*)\)\s*", text, flags=re.S)
    if body is None:
        raise ParseError(f"expected a line bundle O(...), got {text!r}", text, 0)
    inner = body.group(1)
    if surface.kind.startswith("Bl"):
        if inner.count(";") != 1:
            raise ParseError(f"{surface.kind} divisors are written O(a;b1,...,bn)", text, 0)
        head, tail = inner.split(";")
        parts = [head] + tail.split(",")
    else:
        if ";" in inner:
            raise ParseError(f"';' is only used on blow-ups, not {surface.kind}", text, inner.index(";") + 2)
        parts = inner.split(",")
    coords = []
    for p in parts:
        m = re.fullmatch(_INT, p)
        if m is None:
            raise ParseError(f"expected an integer, got {p.strip()!r}", text, text.find(p))
        coords.append(int(m.group(1).replace(" ", "")))
    if len(coords) != surface.rank:
        raise ParseError(f"{surface.kind} divisor needs {surface.rank} coordinates, got {len(coords)}", text, 0)
    return DivisorClass(surface.kind, tuple(coords))


def format_divisor(d: DivisorClass) -> str:
    c = d.coords
    if d.kind.startswith("Bl"):
        return f"O({c[0]};{','.join(str(b) for b in c[1:])})"
    return f"O({','.join(str(x) for x in c)})"
