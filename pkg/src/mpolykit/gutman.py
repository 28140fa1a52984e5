"""
Degree bookkeeping for chemical graphs (maximum degree 4), extended with
Euler's formula for plane graphs.

Unknowns among n, m, f, n1..n4 and m11..m44 are recovered from the known
ones by exact Gaussian elimination over the rationals. The equations are

    (3) n1 + n2 + n3 + n4 = n
    (4) 2 m11 + m12 + m13 + m14 = n1
    (5) m12 + 2 m22 + m23 + m24 = 2 n2
    (6) m13 + m23 + 2 m33 + m34 = 3 n3
    (7) m14 + m24 + m34 + 2 m44 = 4 n4
    (8) n1 + 2 n2 + 3 n3 + 4 n4 = 2 m
    (E) m = sum of all m_ij                       (edge-sum identity)
    (9) sum m_ij - sum n_i = f - 2                (only when Euler is enabled)

f counts faces including the outer one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Mapping

from .errors import InvalidParameter, ParseError
from .graph import Graph, degree_histogram, edge_type_counts

EDGE_VARS = ("m11", "m12", "m13", "m14", "m22", "m23", "m24", "m33", "m34", "m44")
VERTEX_VARS = ("n1", "n2", "n3", "n4")
VARIABLES = ("n", "m", "f", *VERTEX_VARS, *EDGE_VARS)

# every variable that only makes sense for degree-1 or degree-4 vertices
LOW_HIGH_DEGREE_VARS = ("n1", "n4", "m11", "m12", "m13", "m14", "m24", "m34", "m44")


@dataclass(frozen=True)
class Equation:
    """sum(coeffs[v] * v) == rhs"""

    label: str
    coeffs: Mapping[str, Fraction]
    rhs: Fraction = Fraction(0)

    def residual(self, values: Mapping[str, Fraction]) -> Fraction:
        return sum((c * values[v] for v, c in self.coeffs.items()), Fraction(0)) - self.rhs

    def __str__(self) -> str:
        lhs = " + ".join(v if c == 1 else f"{c}*{v}" for v, c in self.coeffs.items())
        return f"{lhs} = {self.rhs}"


def _eq(label: str, rhs: int = 0, **coeffs: int) -> Equation:
    return Equation(label, {v: Fraction(c) for v, c in coeffs.items() if c}, Fraction(rhs))


def _edge_incidence(d: int) -> dict[str, int]:
    """Coefficients of the m_ij counting edge ends at degree-d vertices."""
    out = {}
    for name in EDGE_VARS:
        i, j = int(name[1]), int(name[2])
        mult = (i == d) + (j == d)
        if mult:
            out[name] = mult
    return out


PAPER_EQUATIONS: tuple[Equation, ...] = (
    _eq("(3)", n1=1, n2=1, n3=1, n4=1, n=-1),
    *(_eq(f"({3 + d})", **_edge_incidence(d), **{f"n{d}": -d}) for d in range(1, 5)),
    _eq("(8)", n1=1, n2=2, n3=3, n4=4, m=-2),
)
EDGE_SUM = _eq("edge-sum", m=-1, **{v: 1 for v in EDGE_VARS})
EULER = _eq("(9)", -2, f=-1, **{v: 1 for v in EDGE_VARS}, **{v: -1 for v in VERTEX_VARS})


@dataclass
class GutmanSystem:
    knowns: dict[str, Fraction] = field(default_factory=dict)
    use_euler: bool = False

    def __post_init__(self) -> None:
        clean = {}
        for name, value in self.knowns.items():
            if name not in VARIABLES:
                raise InvalidParameter(f"unknown variable {name!r}; expected one of {', '.join(VARIABLES)}")
            value = Fraction(value)
            if value < 0:
                raise InvalidParameter(f"{name} must be nonnegative, got {value}")
            clean[name] = value
        self.knowns = clean

    @property
    def unknowns(self) -> list[str]:
        """Variables to solve for; f only takes part when Euler's formula is on."""
        return [v for v in VARIABLES if v not in self.knowns and (self.use_euler or v != "f")]

    def pin_zero(self, names: Iterable[str]) -> "GutmanSystem":
        knowns = dict(self.knowns)
        for name in names:
            knowns.setdefault(name, Fraction(0))
        return GutmanSystem(knowns, self.use_euler)


@dataclass(frozen=True)
class Solution:
    status: Literal["unique", "underdetermined", "inconsistent"]
    values: dict[str, Fraction] = field(default_factory=dict)
    free_variables: list[str] = field(default_factory=list)
    reason: str | None = None

    def format(self) -> str:
        header = f"status: {self.status}"
        if self.reason:
            header += f" ({self.reason})"
        lines = [header]
        if self.free_variables:
            lines.append("free: " + " ".join(self.free_variables))
        for name in VARIABLES:
            if name in self.values:
                lines.append(f"{name} = {_fmt(self.values[name])}")
        return "\n".join(lines) + "\n"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def build_equations(sys: GutmanSystem) -> list[Equation]:
    eqs = [*PAPER_EQUATIONS, EDGE_SUM]
    if sys.use_euler:
        eqs.append(EULER)
    return eqs


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of an exact matrix; returns (matrix, pivot columns).

    The last column is treated like any other, so callers working with an
    augmented matrix must check for a pivot landing there themselves.
    """
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows)[1])


def solve(sys: GutmanSystem) -> Solution:
    eqs = build_equations(sys)
    unknowns = sys.unknowns
    col = {v: k for k, v in enumerate(unknowns)}
    rows = []
    for eq in eqs:
        row = [Fraction(0)] * (len(unknowns) + 1)
        rhs = eq.rhs
        for v, c in eq.coeffs.items():
            if v in col:
                row[col[v]] += c
            else:
                rhs -= c * sys.knowns[v]
        row[-1] = rhs
        rows.append(row)

    reduced, pivots = rref(rows)
    if len(unknowns) in pivots:
        bad = [eq.label for eq, row in zip(eqs, rows) if row[-1] and not any(row[:-1])]
        reason = f"equation {bad[0]} violated by the knowns" if bad else "equations contradict each other"
        return Solution("inconsistent", dict(sys.knowns), reason=reason)

    values = dict(sys.knowns)
    pivot_set = set(pivots)
    free = [unknowns[c] for c in range(len(unknowns)) if c not in pivot_set]
    for r, c in enumerate(pivots):
        row = reduced[r]
        if not any(row[k] for k in range(len(unknowns)) if k != c):
            values[unknowns[c]] = row[-1]

    if free:
        return Solution("underdetermined", values, free)
    negative = [v for v in VARIABLES if v in values and values[v] < 0]
    if negative:
        return Solution("inconsistent", values, reason="negative value for " + ", ".join(negative))
    fractional = [v for v in VARIABLES if v in values and values[v].denominator != 1]
    if fractional:
        return Solution("inconsistent", values, reason="non-integer value for " + ", ".join(fractional))
    return Solution("unique", values)


@dataclass(frozen=True)
class IndependenceReport:
    rank_3_to_7: int
    eq8_dependent: bool
    eq9_independent: bool

    @property
    def ok(self) -> bool:
        return self.rank_3_to_7 == 5 and self.eq8_dependent and self.eq9_independent


def _matrix(eqs: Iterable[Equation]) -> list[list[Fraction]]:
    return [[eq.coeffs.get(v, Fraction(0)) for v in VARIABLES] + [eq.rhs] for eq in eqs]


def verify_independence() -> IndependenceReport:
    """Rank facts about the system.

    m appears in (8) but in none of (3)-(7), so (8) is a consequence of (3)-(7)
    once m is read as the total edge count; the edge-sum identity supplies
    exactly that reading.
    """
    base = list(PAPER_EQUATIONS[:5])
    r = rank(_matrix(base))
    with_identity = base + [EDGE_SUM]
    eq8_dep = rank(_matrix(with_identity + [PAPER_EQUATIONS[5]])) == rank(_matrix(with_identity))
    upto8 = with_identity + [PAPER_EQUATIONS[5]]
    eq9_ind = rank(_matrix(upto8 + [EULER])) > rank(_matrix(upto8))
    return IndependenceReport(r, eq8_dep, eq9_ind)


def graph_values(g: Graph, faces: int | None = None) -> dict[str, Fraction]:
    """Instantiate every variable from a chemical graph.

    ``faces`` (outer face included) must come from a plane embedding; when it
    is omitted ``f`` is left out of the result.
    """
    hist = degree_histogram(g)
    if any(d > 4 for d in hist):
        raise InvalidParameter("graph has a vertex of degree > 4; not a chemical graph")
    if hist.get(0):
        raise InvalidParameter("isolated vertices are outside the degree bookkeeping")
    counts = edge_type_counts(g)
    values = {"n": g.order(), "m": g.size()}
    values.update({f"n{d}": hist.get(d, 0) for d in range(1, 5)})
    values.update({name: counts[(int(name[1]), int(name[2]))] for name in EDGE_VARS})
    if faces is not None:
        values["f"] = faces
    return {k: Fraction(v) for k, v in values.items()}


def lattice_scenario(faces: int, m22: int, n2: int) -> GutmanSystem:
    """Knowns used to recover the lattice M-polynomial: m22, n2, f, degree-1/4 data zero."""
    sys = GutmanSystem({"m22": m22, "n2": n2, "f": faces}, use_euler=True)
    return sys.pin_zero(LOW_HIGH_DEGREE_VARS)


def parse_system(text: str) -> GutmanSystem:
    """Read ``name = value`` lines and an optional ``euler on|off`` directive."""
    knowns: dict[str, Fraction] = {}
    euler = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.split()[0] == "euler":
            parts = line.split()
            if len(parts) != 2 or parts[1] not in ("on", "off"):
                raise ParseError(f"line {lineno}: expected 'euler on' or 'euler off'")
            euler = parts[1] == "on"
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'variable = value'")
        name, value = (s.strip() for s in line.split("=", 1))
        if name not in VARIABLES:
            raise ParseError(f"line {lineno}: unknown variable {name!r}")
        if name in knowns:
            raise ParseError(f"line {lineno}: {name} given twice")
        try:
            knowns[name] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: bad value {value!r}") from None
        if knowns[name] < 0:
            raise ParseError(f"line {lineno}: {name} must be nonnegative")
    return GutmanSystem(knowns, euler)
