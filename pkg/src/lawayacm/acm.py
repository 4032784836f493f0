"""Predicates on cohomology spectra and classification of l-away ACM line bundles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Callable, Optional

from .bundlecalc import Line, Spectrum, spectrum
from .errors import IndeterminateError, InputError, WindowError
from .geometry import DivisorClass, Surface, get_surface, h_multiple
from .linecoh import cohom_line


@dataclass(frozen=True)
class H1Profile:
    """Where h1 is nonzero across the twists of a spectrum."""

    support: tuple[int, ...]
    k0: Optional[int]
    s: Optional[int]
    l: int
    gaps: tuple[int, ...]
    definite: bool = True

    @property
    def connected(self):
        return not self.gaps

    @property
    def is_acm(self):
        return self.l == 0


def h1_profile(sp: Spectrum) -> H1Profile:
    """Read k0, s and l off ``sp``.

    The two twists at each end of the window must have h1 exactly 0, which is
    taken as evidence that the window covers all of the support.
    """
    lo, hi = sp.window
    if hi - lo < 3:
        raise WindowError(f"window {lo}..{hi} is too short to certify vanishing at its ends")
    for t in (lo, lo + 1, hi - 1, hi):
        iv = sp.h(1, t)
        if not (iv.is_exact and iv.lo == 0):
            raise WindowError(f"h1 at twist {t} is {iv}, not 0; widen the window")
    support = tuple(t for t in sp.twists if sp.h(1, t).is_nonzero)
    definite = not any(sp.h(1, t).lo == 0 < sp.h(1, t).hi for t in sp.twists)
    if not support:
        return H1Profile((), None, None, 0, (), definite)
    k0, top = support[0], support[-1]
    gaps = tuple(t for t in range(k0, top + 1) if t not in support)
    return H1Profile(support, k0, top - k0, len(support), gaps, definite)


def _exact(sp, i, t):
    iv = sp.h(i, t)
    if not iv.is_exact:
        raise IndeterminateError(f"h{i} at twist {t} is only known to lie in {iv}")
    return iv.lo


def is_initialized(sp: Spectrum) -> bool:
    return _exact(sp, 0, 0) > 0 and _exact(sp, 0, -1) == 0


def is_special(surface, c1: DivisorClass) -> Optional[int]:
    """``c`` with ``c1 = c*h``, or None."""
    return h_multiple(get_surface(surface), c1)


@dataclass(frozen=True)
class K0Check:
    c: int
    lower_ok: bool
    upper_ok: bool


def check_k0_bounds(i_x: int, k0: int, s: int) -> K0Check:
    """Constraints tying k0, s and c for a special rank 2 bundle."""
    if s < 0:
        raise InputError("s must be non-negative")
    return K0Check(-2 * k0 - i_x - s, k0 >= -s - 2, k0 <= -i_x + 1)


def weakly_ulrich_conditions(t: int):
    """Indices i with h^i(E(t)) required to vanish (surface case)."""
    m = -t
    out = []
    if m >= 2:
        out.append(0)
    if m <= 0 or m >= 3:
        out.append(1)
    if m <= 1:
        out.append(2)
    return out


def weakly_ulrich_violation(sp: Spectrum):
    """First ``(t, i, value)`` breaking the vanishing conditions, else None."""
    undecided = None
    for t in sp.twists:
        for i in weakly_ulrich_conditions(t):
            iv = sp.h(i, t)
            if iv.is_nonzero:
                return t, i, iv
            if not iv.is_zero and undecided is None:
                undecided = (t, i, iv)
    if undecided is not None:
        t, i, iv = undecided
        raise IndeterminateError(f"h{i} at twist {t} is only known to lie in {iv}")
    return None


def is_weakly_ulrich(sp: Spectrum) -> bool:
    return weakly_ulrich_violation(sp) is None


def chi_polynomial(sp: Spectrum):
    """Coefficients (c0, c1, c2) of the quadratic t -> chi(E(t)), by interpolation."""
    if sp.chi is None:
        raise InputError("spectrum carries no Euler characteristics")
    t0 = sp.window[0]
    y0, y1, y2 = (sp.chi[t0 + k] for k in range(3))
    # Newton form in s = t - t0
    d1 = y1 - y0
    d2 = Fraction(y2 - 2 * y1 + y0, 2)
    c2 = d2
    c1 = d1 - d2 - 2 * d2 * t0
    c0 = y0 - d1 * t0 + d2 * t0 * (t0 + 1)
    coeffs = tuple(Fraction(c) for c in (c0, c1, c2))
    for t in sp.twists:
        if coeffs[0] + coeffs[1] * t + coeffs[2] * t * t != sp.chi[t]:
            raise InputError("Euler characteristic is not quadratic in the twist")
    return coeffs


def integer_roots(coeffs) -> Optional[tuple[int, int]]:
    """Two distinct integer roots of c0 + c1 t + c2 t^2, else None."""
    c0, c1, c2 = (Fraction(c) for c in coeffs)
    if c2 == 0:
        return None
    disc = c1 * c1 - 4 * c2 * c0
    if disc <= 0:
        return None
    num, den = disc.numerator, disc.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    root = Fraction(rn, rd)
    r1, r2 = sorted(((-c1 - root) / (2 * c2), (-c1 + root) / (2 * c2)))
    if r1.denominator != 1 or r2.denominator != 1:
        return None
    return int(r1), int(r2)


def is_supernatural(sp: Spectrum, chi_poly=None) -> bool:
    """At most one nonzero cohomology per twist and distinct integral chi roots."""
    for t in sp.twists:
        nonzero = sum(1 for i in range(3) if _exact(sp, i, t) > 0)
        if nonzero > 1:
            return False
    coeffs = chi_polynomial(sp) if chi_poly is None else chi_poly
    return integer_roots(coeffs) is not None


# --- line bundles -------------------------------------------------------------

def _line_window(d: DivisorClass):
    m = sum(abs(x) for x in d.coords) + 4
    return -m, m


def line_h1_support(surface: Surface, d: DivisorClass, sections="formula") -> tuple[int, ...]:
    """Twists with h1(O(d + t*h)) != 0, certified by vanishing at the window ends."""
    lo, hi = _line_window(d)
    h = surface.h
    vals = {t: cohom_line(surface, d + t * h, sections=sections).h1 for t in range(lo, hi + 1)}
    if any(vals[t] for t in (lo, lo + 1, hi - 1, hi)):
        raise WindowError(f"h1 of {d} does not vanish at the ends of {lo}..{hi}")
    return tuple(t for t in range(lo, hi + 1) if vals[t])


def line_spectrum(surface, d: DivisorClass, window=None) -> Spectrum:
    surface = get_surface(surface)
    return spectrum(Line(d), window=window or _line_window(d), duality=False)


def _bounds(surface: Surface, l: int, bound):
    if isinstance(bound, int):
        bound = (bound,) * surface.rank
    bound = tuple(bound)
    if len(bound) != surface.rank:
        raise InputError(f"{surface.kind} needs {surface.rank} coordinate bounds")
    # the coordinates carrying h need room for 3l+8; exceptional ones for 2l+6
    for i, b in enumerate(bound):
        exceptional = surface.kind.startswith("Bl") and i > 0
        need = 2 * l + 6 if exceptional else 3 * l + 8
        if b < need:
            raise InputError(f"bound {b} on coordinate {i} is below {need}; widen it for l={l}")
    return bound


def classify_laway_lines(surface, l: int, bound=None, sections="formula") -> list[DivisorClass]:
    """All initialized l-away line bundles with ``|coords[i]| <= bound[i]``."""
    surface = get_surface(surface)
    if l < 1:
        raise InputError("l must be at least 1")
    bound = _bounds(surface, l, 3 * l + 9 if bound is None else bound)
    if surface.kind == "P2":
        # no line bundle on P2 has intermediate cohomology
        return []
    h = surface.h
    out = []
    for coords in product(*(range(-b, b + 1) for b in bound)):
        d = DivisorClass(surface.kind, coords)
        if cohom_line(surface, d, sections).h0 == 0 or cohom_line(surface, d - h, sections).h0 != 0:
            continue
        if len(line_h1_support(surface, d, sections)) == l:
            out.append(d)
    return sorted(out, key=lambda d: d.coords)


def bl1_families(l: int, mode: str = "strict") -> Callable[[int, int], bool]:
    """Membership test for the four Bl1 families of l-away line bundles.

    ``mode="strict"`` reads the residue families with ``a`` unrestricted;
    ``mode="proof"`` keeps only ``0 <= a <= 2`` for them.
    """
    if l < 1:
        raise InputError("l must be at least 1")
    if mode not in ("strict", "proof"):
        raise InputError(f"unknown family reading {mode!r}; use strict or proof")

    def member(a, b1):
        for r in (2 * l + 2, 2 * l + 3):
            if (a - r) % 3 == 0 and 3 * b1 == r - a and (mode == "strict" or 0 <= a <= 2):
                return True
        return (a, b1) in ((l + 1, -(l + 1)), (l + 3, -(l + 2)))

    return member


def h1_interval_bl1(a: int, b1: int) -> set[int]:
    """Integers strictly inside (min(b1, m), max(b1 - 1, m)) with m = (-a-b1-1)/2."""
    m = Fraction(-a - b1 - 1, 2)
    lo, hi = min(Fraction(b1), m), max(Fraction(b1 - 1), m)
    first = lo.__floor__() + 1
    return {t for t in range(first, hi.__ceil__()) if lo < t < hi}


__all__ = [
    "H1Profile",
    "K0Check",
    "bl1_families",
    "check_k0_bounds",
    "chi_polynomial",
    "classify_laway_lines",
    "h1_interval_bl1",
    "h1_profile",
    "integer_roots",
    "is_initialized",
    "is_special",
    "is_supernatural",
    "is_weakly_ulrich",
    "line_h1_support",
    "line_spectrum",
    "weakly_ulrich_conditions",
    "weakly_ulrich_violation",
]
