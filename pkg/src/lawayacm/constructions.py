"""The concrete bundles that appear in the classification and existence results."""

from __future__ import annotations

from .bundlecalc import Assumption, BundleExpr, Ext, Ker, Line, OmegaP2, direct_sum, power
from .errors import InputError
from .geometry import BL1, P1xP1, P2, get_surface

# h0(E(t)) = 0 for t <= -1, valid for every initialized rank 2 bundle
H0_VANISHING = Assumption(0, ((None, -1),), 0, "h0 of an initialized rank 2 bundle vanishes below 0")


def _q(a, b):
    return Line(P1xP1.divisor(a, b))


def p2_one_away() -> BundleExpr:
    return OmegaP2(2)


def p2_two_away(item: int) -> BundleExpr:
    """Kernels of the 2-away classification on P2, items 1 and 2."""
    if item == 1:
        return Ker(power(OmegaP2(3), 2), power(Line(P2.divisor(2)), 2))
    if item == 2:
        return Ker(direct_sum(OmegaP2(2), Line(P2.divisor(0))), Line(P2.divisor(1)))
    raise InputError("the P2 2-away classification has items 1 and 2")


def p2_kernel(l: int) -> BundleExpr:
    """ker(Omega(l+1)^l -> O(l)^(2l-2)), an l-away bundle with c1 = l*h."""
    if l < 2:
        raise InputError("the P2 kernel construction needs l >= 2")
    return Ker(power(OmegaP2(l + 1), l), power(Line(P2.divisor(l)), 2 * l - 2))


def q_one_away(item: int) -> BundleExpr:
    if item == 1:
        return Ker(direct_sum(power(_q(2, 1), 2), power(_q(1, 2), 2)), power(_q(2, 2), 2))
    if item == 2:
        return Ker(direct_sum(_q(0, 0), _q(1, 0), _q(0, 1)), _q(1, 1))
    raise InputError("the P1xP1 1-away classification has items 1 and 2")


def q_two_away(item: int, c2: int = 2) -> BundleExpr:
    """Items 1 and 2 of the 2-away classification on P1xP1 (item 2 needs 2 <= c2 <= 4)."""
    if item == 1:
        return Ker(direct_sum(power(_q(3, 2), 3), power(_q(2, 3), 3)), power(_q(3, 3), 4))
    if item == 2:
        if not 2 <= c2 <= 4:
            raise InputError("item 2 needs 2 <= c2 <= 4")
        terms = []
        if 5 - c2:
            terms.append(power(_q(1, 1), 5 - c2))
        if c2 - 2:
            terms += [power(_q(2, 1), c2 - 2), power(_q(1, 2), c2 - 2)]
        return Ker(direct_sum(*terms), power(_q(2, 2), c2 - 1))
    raise InputError("only items 1 and 2 are bundle constructions; item 3 is a monad with unknown maps")


def q_extension(l: int) -> BundleExpr:
    """0 -> O((l+1)h1) -> E -> O((l+1)h2) -> 0."""
    if l < 1:
        raise InputError("l must be at least 1")
    return Ext(_q(l + 1, 0), _q(0, l + 1))


def bl1_rank2(l: int) -> BundleExpr:
    if l < 1:
        raise InputError("l must be at least 1")
    if l == 1:
        return Ext(Line(BL1.divisor(0, 1)), Line(BL1.divisor(2, -2)))
    return Ext(Line(BL1.divisor(l, -l)), Line(BL1.divisor(0, 2)))


def bl23_m_divisor(surface, l: int):
    """(l+1)k - (l+1)e1 - e2 on Bl2 or Bl3."""
    surface = get_surface(surface)
    if surface.kind not in ("Bl2", "Bl3"):
        raise InputError("this line bundle lives on Bl2 or Bl3")
    coords = [l + 1, -(l + 1), -1] + [0] * (surface.n_points - 2)
    return surface.divisor(*coords)


def bl23_e1(surface):
    surface = get_surface(surface)
    return surface.divisor(0, 1, *([0] * (surface.n_points - 1)))


def bl23_extension(surface, l: int) -> BundleExpr:
    """0 -> M -> E -> O(e1) -> 0."""
    return Ext(Line(bl23_m_divisor(surface, l)), Line(bl23_e1(surface)))


__all__ = [
    "H0_VANISHING",
    "bl1_rank2",
    "bl23_e1",
    "bl23_extension",
    "bl23_m_divisor",
    "p2_kernel",
    "p2_one_away",
    "p2_two_away",
    "q_extension",
    "q_one_away",
    "q_two_away",
]
