"""Finite acyclic quivers, Euler forms and the dimension counts built on them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter

from .errors import FeatureError, InputError
from .geometry import get_surface


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InputError("a quiver needs at least one vertex")
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        for s, t in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise InputError(f"arrow {s}>{t} leaves the vertex set 0..{self.vertex_count - 1}")
        graph = {v: set() for v in range(self.vertex_count)}
        for s, t in self.arrows:
            graph[t].add(s)
        try:
            tuple(TopologicalSorter(graph).static_order())
        except CycleError:
            raise InputError("quiver has an oriented cycle") from None

    @classmethod
    def parse_arrows(cls, text: str, vertex_count=None) -> "Quiver":
        """``"0>1,0>1,0>2"`` -> quiver; the vertex count defaults to the largest label + 1."""
        arrows = []
        for piece in text.split(","):
            piece = piece.strip()
            if not piece:
                continue
            m = re.fullmatch(r"(\d+)\s*>\s*(\d+)", piece)
            if m is None:
                raise InputError(f"cannot read arrow {piece!r}; expected s>t")
            arrows.append((int(m.group(1)), int(m.group(2))))
        if vertex_count is None:
            vertex_count = 1 + max((max(a) for a in arrows), default=0)
        return cls(vertex_count, tuple(arrows))

    def __str__(self):
        return ",".join(f"{s}>{t}" for s, t in self.arrows)


@dataclass(frozen=True)
class DimVector:
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if any(d < 0 for d in self.dims):
            raise InputError("dimension vectors are non-negative")

    def __len__(self):
        return len(self.dims)

    def __add__(self, other):
        return DimVector(tuple(a + b for a, b in zip(self.dims, other.dims)))

    def __mul__(self, m):
        return DimVector(tuple(m * d for d in self.dims))

    __rmul__ = __mul__

    @property
    def is_zero(self):
        return not any(self.dims)

    def __str__(self):
        return ",".join(str(d) for d in self.dims)


KRONECKER3 = Quiver(2, ((0, 1),) * 3)
BEILINSON_Q = Quiver(3, ((0, 1), (0, 1), (0, 2), (0, 2)))
SHAPES = {"kronecker3": KRONECKER3, "beilinsonQ": BEILINSON_Q}


def get_shape(name: str) -> Quiver:
    try:
        return SHAPES[name]
    except KeyError:
        raise InputError(f"unknown quiver shape {name!r}; expected {', '.join(SHAPES)}") from None


def _vec(q, d):
    d = d if isinstance(d, DimVector) else DimVector(tuple(d))
    if len(d) != q.vertex_count:
        raise InputError(f"dimension vector has {len(d)} entries, quiver has {q.vertex_count} vertices")
    return d.dims


def euler_form(q: Quiver, a, b) -> int:
    """sum a_i b_i - sum over arrows of a_source b_target."""
    x, y = _vec(q, a), _vec(q, b)
    return sum(u * v for u, v in zip(x, y)) - sum(x[s] * y[t] for s, t in q.arrows)


def _support_connected(q, d):
    support = {i for i, x in enumerate(d) if x}
    if not support:
        return False
    adj = {v: set() for v in support}
    for s, t in q.arrows:
        if s in support and t in support:
            adj[s].add(t)
            adj[t].add(s)
    seen, stack = set(), [min(support)]
    while stack:
        v = stack.pop()
        if v not in seen:
            seen.add(v)
            stack.extend(adj[v] - seen)
    return seen == support


def root_type(q: Quiver, d) -> str:
    """Tits-form verdict: imaginary_candidate, real_candidate or indefinite.

    Only the sign of the form and connectivity of the support are checked;
    being a Schur root is not certified.
    """
    x = _vec(q, d)
    if not any(x):
        raise InputError("root type of the zero vector is undefined")
    value = euler_form(q, x, x)
    if value <= 0 and _support_connected(q, x):
        return "imaginary_candidate"
    if value == 1:
        return "real_candidate"
    return "indefinite"


def moduli_dim(q: Quiver, d, m: int = 1) -> int:
    """1 - <m d, m d>."""
    if m < 1:
        raise InputError("the multiple m must be at least 1")
    return 1 - m * m * euler_form(q, d, d)


def beilinson_dimvec(surface, l: int):
    """Quiver shape and dimension vector read off the rank 2 constructions."""
    surface = get_surface(surface)
    if surface.kind == "P2":
        if l < 2:
            raise InputError("the P2 construction needs l > 1")
        return KRONECKER3, DimVector((l, l + 2))
    if surface.kind == "P1xP1":
        if l < 1:
            raise InputError("l must be at least 1")
        return BEILINSON_Q, DimVector((2 * l, l + 1, l + 1))
    raise FeatureError(f"no Beilinson quiver is set up on {surface.kind}")


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(l?)\s*")


def eval_dim_expr(text: str, l=None) -> int:
    """Evaluate a linear expression in ``l`` such as ``2l+1`` or ``l-2``."""
    s = text.replace(" ", "")
    if not s:
        raise InputError("empty dimension expression")
    pos, total = 0, 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, var = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (not num and not var) or (pos > 0 and not sign):
            raise InputError(f"cannot read dimension expression {text!r}")
        if var and l is None:
            raise InputError(f"{text!r} uses l; pass --l")
        value = int(num) if num else 1
        if var:
            value *= l
        total += -value if sign == "-" else value
        pos = m.end()
    return total


def parse_dimvec(text: str, l=None) -> DimVector:
    return DimVector(tuple(eval_dim_expr(p, l) for p in text.split(",")))


__all__ = [
    "BEILINSON_Q",
    "DimVector",
    "KRONECKER3",
    "Quiver",
    "SHAPES",
    "beilinson_dimvec",
    "euler_form",
    "eval_dim_expr",
    "get_shape",
    "moduli_dim",
    "parse_dimvec",
    "root_type",
]
