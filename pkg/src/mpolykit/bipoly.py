"""
Sparse bivariate polynomials in x and y with exact rational coefficients.

Only what the M-polynomial calculus needs is provided: addition, scalar
multiples, evaluation, and the six operators

    D_x p = x dp/dx           D_y p = y dp/dy
    S_x p = int_0^x p(t,y)/t  S_y p = int_0^y p(x,t)/t
    J p   = p(x, x)           Q_a p = x^a p

Each operator acts termwise on the exponent pair, so the implementation never
leaves the integers/rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DivergentIntegral, ExponentError, InvalidAlpha, ParseError

Number = Union[int, Fraction]
Key = tuple[int, int]


def as_fraction(value: Number | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"exact coefficient required, got {type(value).__name__}")


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class MPoly:
    """Immutable sparse polynomial sum c_ij x^i y^j.

    Terms are kept in canonical form: no zero coefficients, exponents are
    nonnegative integers. Equality compares the term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Number] | None = None):
        clean: dict[Key, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            _check_exponents(i, j)
            c = as_fraction(c)
            if c:
                clean[(i, j)] = c
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, terms: dict[Key, Fraction]) -> "MPoly":
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, i: int, j: int, coeff: Number = 1) -> "MPoly":
        return from_terms([(i, j, coeff)])

    @property
    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def items(self) -> list[tuple[Key, Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == MPoly({(0, 0): other})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            return NotImplemented
        return add(self, other)

    def __neg__(self) -> "MPoly":
        return scale(self, -1)

    def __sub__(self, other: "MPoly") -> "MPoly":
        if not isinstance(other, MPoly):
            return NotImplemented
        return add(self, scale(other, -1))

    def __mul__(self, c: Number) -> "MPoly":
        if isinstance(c, MPoly):
            raise TypeError("polynomial multiplication is not supported")
        return scale(self, c)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def to_records(self) -> list[dict[str, object]]:
        return [{"i": i, "j": j, "coeff": format_fraction(c)} for (i, j), c in self.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, object]]) -> "MPoly":
        try:
            return from_terms(
                (int(r["i"]), int(r["j"]), Fraction(str(r["coeff"]))) for r in records
            )
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad polynomial record: {exc}") from exc


ZERO = MPoly()


def _check_exponents(i: int, j: int) -> None:
    if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
        raise ExponentError(f"exponents must be integers, got ({i!r}, {j!r})")
    if i < 0 or j < 0:
        raise ExponentError(f"negative exponent in x^{i} y^{j}")


def from_terms(terms: Iterable[tuple[int, int, Number]]) -> MPoly:
    """Build a canonical polynomial; repeated exponent pairs are summed."""
    acc: dict[Key, Fraction] = {}
    for i, j, c in terms:
        _check_exponents(i, j)
        acc[(i, j)] = acc.get((i, j), Fraction(0)) + as_fraction(c)
    return MPoly._trusted(acc)


def add(a: MPoly, b: MPoly) -> MPoly:
    acc = dict(a._terms)
    for k, c in b._terms.items():
        acc[k] = acc.get(k, Fraction(0)) + c
    return MPoly._trusted(acc)


def scale(a: MPoly, c: Number) -> MPoly:
    c = as_fraction(c)
    if not c:
        return ZERO
    return MPoly._trusted({k: v * c for k, v in a._terms.items()})


def op_dx(p: MPoly) -> MPoly:
    return MPoly._trusted({(i, j): c * i for (i, j), c in p._terms.items()})


def op_dy(p: MPoly) -> MPoly:
    return MPoly._trusted({(i, j): c * j for (i, j), c in p._terms.items()})


def op_sx(p: MPoly) -> MPoly:
    out = {}
    for (i, j), c in p._terms.items():
        if i == 0:
            raise DivergentIntegral(f"S_x diverges on term with x-exponent 0 (y^{j})")
        out[(i, j)] = c / i
    return MPoly._trusted(out)


def op_sy(p: MPoly) -> MPoly:
    out = {}
    for (i, j), c in p._terms.items():
        if j == 0:
            raise DivergentIntegral(f"S_y diverges on term with y-exponent 0 (x^{i})")
        out[(i, j)] = c / j
    return MPoly._trusted(out)


def op_j(p: MPoly) -> MPoly:
    """Substitute y := x; colliding exponents are merged."""
    acc: dict[Key, Fraction] = {}
    for (i, j), c in p._terms.items():
        k = (i + j, 0)
        acc[k] = acc.get(k, Fraction(0)) + c
    return MPoly._trusted(acc)


def op_q(p: MPoly, alpha: int) -> MPoly:
    if isinstance(alpha, bool) or not isinstance(alpha, int):
        raise InvalidAlpha(f"alpha must be an integer, got {alpha!r}")
    if alpha == 0:
        raise InvalidAlpha("Q_alpha requires alpha != 0")
    out = {}
    for (i, j), c in p._terms.items():
        if i + alpha < 0:
            raise ExponentError(f"Q_{alpha} maps x^{i} to a negative power")
        out[(i + alpha, j)] = c
    return MPoly._trusted(out)


def evaluate(p: MPoly, x0: Number, y0: Number) -> Fraction:
    x0, y0 = as_fraction(x0), as_fraction(y0)
    total = Fraction(0)
    for (i, j), c in p._terms.items():
        total += c * x0**i * y0**j
    return total


def _render_monomial(i: int, j: int) -> str:
    parts = []
    for var, e in (("x", i), ("y", j)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return " ".join(parts)


def render(p: MPoly) -> str:
    """Canonical text form, terms ordered by (i, j), e.g. ``4 x^2 y^2 + 8 x^2 y^4``."""
    if not p._terms:
        return "0"
    chunks = []
    for n, ((i, j), c) in enumerate(p.items()):
        mono = _render_monomial(i, j)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{format_fraction(mag)} {mono}"
        else:
            body = format_fraction(mag)
        if n == 0:
            chunks.append(f"-{body}" if c < 0 else body)
        else:
            chunks.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(chunks)
