"""
Bond incident degree (BID) indices.

An index is I(G) = sum over edges uv of f(d_u, d_v). Every registry entry
carries two independent ways of computing it:

* ``weight``: the edge function f(i, j), summed against the m_{i,j} table;
* ``pipeline``: a linear combination of operator chains applied to the
  M-polynomial and then evaluated at x = y = 1 (or x = 1 after J).

Operator chains are stored in application order, innermost first, so the
harmonic chain ``2 S_x J`` is ``(2, [J, Sx])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, Union

from . import bipoly
from .bipoly import MPoly
from .errors import InvalidParameter, OutOfRange, UndefinedWeight, UnknownIndex, UnsupportedIndex
from .graph import EdgeTypeCounts

Weight = Callable[[int, int], Fraction]


@dataclass(frozen=True)
class Step:
    op: Literal["Dx", "Dy", "Sx", "Sy", "J", "Q"]
    alpha: int | None = None

    def apply(self, p: MPoly) -> MPoly:
        if self.op == "Q":
            return bipoly.op_q(p, self.alpha)
        return _UNARY[self.op](p)

    def __str__(self) -> str:
        return f"Q({self.alpha})" if self.op == "Q" else self.op


_UNARY = {
    "Dx": bipoly.op_dx,
    "Dy": bipoly.op_dy,
    "Sx": bipoly.op_sx,
    "Sy": bipoly.op_sy,
    "J": bipoly.op_j,
}

DX, DY, SX, SY, J = Step("Dx"), Step("Dy"), Step("Sx"), Step("Sy"), Step("J")


@dataclass(frozen=True)
class IndexDef:
    name: str
    weight: Weight = field(compare=False)
    pipeline: tuple[tuple[Fraction, tuple[Step, ...]], ...]
    alpha: int | None = None

    @property
    def label(self) -> str:
        return self.name if self.alpha is None else f"{self.name}({self.alpha})"

    def apply_pipeline(self, p: MPoly) -> MPoly:
        total = bipoly.ZERO
        for coeff, steps in self.pipeline:
            q = p
            for step in steps:
                q = step.apply(q)
            total = total + bipoly.scale(q, coeff)
        return total

    def describe_pipeline(self) -> str:
        parts = []
        for coeff, steps in self.pipeline:
            chain = " ".join(str(s) for s in reversed(steps))
            parts.append(chain if coeff == 1 else f"{bipoly.format_fraction(coeff)} {chain}")
        return " + ".join(parts)


@dataclass(frozen=True)
class IndexValue:
    value: Fraction
    index: str
    source: Literal["direct", "operator"]


def _pipe(*terms: tuple[int | Fraction, list[Step]]):
    return tuple((Fraction(c), tuple(steps)) for c, steps in terms)


def _augmented(i: int, j: int) -> Fraction:
    if i + j == 2:
        raise UndefinedWeight("augmented Zagreb weight is undefined on a (1,1) edge")
    return Fraction(i * j, i + j - 2) ** 3


def _check_alpha(alpha: int) -> None:
    if isinstance(alpha, bool) or not isinstance(alpha, int) or alpha < 1:
        raise InvalidParameter(f"alpha must be a positive integer, got {alpha!r}")


def randic_general(alpha: int) -> IndexDef:
    _check_alpha(alpha)
    return IndexDef(
        "randic_general",
        lambda i, j: Fraction(i * j) ** alpha,
        _pipe((1, [DY] * alpha + [DX] * alpha)),
        alpha,
    )


def randic_inverse_general(alpha: int) -> IndexDef:
    _check_alpha(alpha)
    return IndexDef(
        "randic_inverse_general",
        lambda i, j: Fraction(1, i * j) ** alpha,
        _pipe((1, [SY] * alpha + [SX] * alpha)),
        alpha,
    )


def sum_power_index(r: int, s: int, alpha: int, k: int) -> IndexDef:
    """Index with weight i^r j^s / (i + j + alpha)^k, evaluated as S_x^k Q_alpha J D_x^r D_y^s.

    Requires r, s >= 0 and k >= 1. With alpha == 0 the Q step is the identity
    and is left out of the chain.
    """
    if min(r, s) < 0 or k < 1:
        raise InvalidParameter("need r, s >= 0 and k >= 1")

    def weight(i: int, j: int) -> Fraction:
        return Fraction(i**r * j**s) / Fraction(i + j + alpha) ** k

    shift = [Step("Q", alpha)] if alpha else []
    return IndexDef(
        f"sum_power[r={r},s={s},alpha={alpha},k={k}]",
        weight,
        _pipe((1, [DY] * s + [DX] * r + [J] + shift + [SX] * k)),
    )


ZAGREB1 = IndexDef("zagreb1", lambda i, j: Fraction(i + j), _pipe((1, [DX]), (1, [DY])))
ZAGREB2 = IndexDef("zagreb2", lambda i, j: Fraction(i * j), _pipe((1, [DY, DX])))
MODIFIED_ZAGREB2 = IndexDef("modified_zagreb2", lambda i, j: Fraction(1, i * j), _pipe((1, [SY, SX])))
SYMMETRIC_DIVISION = IndexDef(
    "symmetric_division",
    lambda i, j: Fraction(i * i + j * j, i * j),
    _pipe((1, [SY, DX]), (1, [SX, DY])),
)
HARMONIC = IndexDef("harmonic", lambda i, j: Fraction(2, i + j), _pipe((2, [J, SX])))
INVERSE_SUM = IndexDef("inverse_sum", lambda i, j: Fraction(i * j, i + j), _pipe((1, [DY, DX, J, SX])))
AUGMENTED_ZAGREB = IndexDef(
    "augmented_zagreb",
    _augmented,
    _pipe((1, [DY] * 3 + [DX] * 3 + [J, Step("Q", -2)] + [SX] * 3)),
)

INDEX_NAMES = (
    "zagreb1",
    "zagreb2",
    "modified_zagreb2",
    "randic_general",
    "randic_inverse_general",
    "symmetric_division",
    "harmonic",
    "inverse_sum",
    "augmented_zagreb",
)
PARAMETRIC = {"randic_general": randic_general, "randic_inverse_general": randic_inverse_general}
_FIXED = {d.name: d for d in (ZAGREB1, ZAGREB2, MODIFIED_ZAGREB2, SYMMETRIC_DIVISION,
                              HARMONIC, INVERSE_SUM, AUGMENTED_ZAGREB)}


def registry(alpha: int = 1) -> list[IndexDef]:
    """All nine indices, the two general Randic variants instantiated at ``alpha``."""
    return [get_index(name, alpha) for name in INDEX_NAMES]


def get_index(name: str, alpha: int | None = None) -> IndexDef:
    if name in PARAMETRIC:
        return PARAMETRIC[name](1 if alpha is None else alpha)
    try:
        return _FIXED[name]
    except KeyError:
        raise UnknownIndex(f"unknown index {name!r}; known: {', '.join(INDEX_NAMES)}") from None


def _as_counts(m: Union[EdgeTypeCounts, MPoly]) -> list[tuple[tuple[int, int], Fraction]]:
    if isinstance(m, EdgeTypeCounts):
        return [(k, Fraction(c)) for k, c in m.items()]
    return m.items()


def compute_direct(m: Union[EdgeTypeCounts, MPoly], idx: IndexDef) -> IndexValue:
    total = Fraction(0)
    for (i, j), c in _as_counts(m):
        try:
            w = idx.weight(i, j)
        except ZeroDivisionError:
            raise UndefinedWeight(f"{idx.label} weight undefined at degrees ({i}, {j})") from None
        total += c * w
    return IndexValue(total, idx.label, "direct")


def compute_via_operators(m: Union[EdgeTypeCounts, MPoly], idx: IndexDef) -> IndexValue:
    if isinstance(m, EdgeTypeCounts):
        m = m.to_mpoly()
    # after J there is no y left, so evaluating at (1, 1) is the same as x = 1
    value = bipoly.evaluate(idx.apply_pipeline(m), 1, 1)
    return IndexValue(value, idx.label, "operator")


# Closed forms for the Bethe cacti, one entry per (family, index):
# (a, e, b) encodes a * 3^(n + e) + b.
_TABLE2: dict[str, dict[str, tuple[Fraction, int, Fraction]]] = {
    "D": {
        "zagreb1": (Fraction(4), 1, Fraction(-20)),
        "zagreb2": (Fraction(56), -1, Fraction(-48)),
        "modified_zagreb2": (Fraction(7, 8), -1, Fraction(0)),
        "symmetric_division": (Fraction(13), -1, Fraction(-3)),
        "harmonic": (Fraction(13, 2), -2, Fraction(-1, 3)),
        "inverse_sum": (Fraction(26), -2, Fraction(-16, 3)),
    },
    "C": {
        "zagreb1": (Fraction(16), 0, Fraction(-32)),
        "zagreb2": (Fraction(224), -2, Fraction(-64)),
        "modified_zagreb2": (Fraction(7, 2), -2, Fraction(-1, 4)),
        "symmetric_division": (Fraction(52), -2, Fraction(-8)),
        "harmonic": (Fraction(26), -3, Fraction(-1)),
        "inverse_sum": (Fraction(104), -3, Fraction(-8)),
    },
    "E": {
        "zagreb1": (Fraction(4), 1, Fraction(-38)),
        "zagreb2": (Fraction(56), -1, Fraction(-88)),
        "modified_zagreb2": (Fraction(7, 8), -1, Fraction(-1, 8)),
        "symmetric_division": (Fraction(13), -1, Fraction(-15, 2)),
        "harmonic": (Fraction(13, 2), -2, Fraction(-11, 14)),
        "inverse_sum": (Fraction(26), -2, Fraction(-68, 7)),
    },
}
TABLE2_INDICES = tuple(_TABLE2["D"])


def closed_form(family: str, index: str, n: int) -> Fraction:
    """Closed-form index value of D_n, C_n or E_n (n >= 2).

    For E_n the formulas only agree with the constructed graphs from n = 3 on;
    n = 2 is still evaluated so callers can compare.
    """
    if family not in _TABLE2:
        raise InvalidParameter(f"unknown family {family!r}")
    if index not in _TABLE2[family]:
        raise UnsupportedIndex(f"no closed form for {index!r}; available: {', '.join(TABLE2_INDICES)}")
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise OutOfRange(f"closed forms hold for n >= 2, got {n!r}")
    a, e, b = _TABLE2[family][index]
    return a * Fraction(3) ** (n + e) + b
