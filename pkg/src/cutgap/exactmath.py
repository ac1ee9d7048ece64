"""Exact rational linear algebra and a two-phase simplex solver.

Every routine here works on ``fractions.Fraction`` (or plain ``int``) values.
Nothing ever touches floating point, so the results can be used directly as
certificates.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

Rational = Fraction

LE, EQ, GE = "<=", "==", ">="


class DimensionError(ValueError):
    pass


class InconsistentSystem(ValueError):
    """The linear system has no solution."""


class NonUniqueSolution(ValueError):
    """The linear system is consistent but underdetermined.

    ``direction`` is a nonzero vector of the null space of the coefficient
    matrix, which callers may use to perturb a particular solution.
    """

    def __init__(self, message, direction):
        super().__init__(message)
        self.direction = direction


def as_fraction(value) -> Fraction:
    """Parse ints, Fractions and ``"p/q"`` strings. Floats are rejected."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational string: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def fraction_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _integer_rows(matrix):
    rows = []
    for row in matrix:
        row = [Fraction(v) for v in row]
        den = 1
        for v in row:
            den = lcm(den, v.denominator)
        ints = [v.numerator * (den // v.denominator) for v in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        rows.append(ints)
    return rows


def _shape(matrix):
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    for row in matrix:
        if len(row) != cols:
            raise DimensionError("matrix rows have different lengths")
    return rows, cols


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank via fraction-free (Bareiss) elimination."""
    rows, cols = _shape(matrix)
    a = _integer_rows(matrix)
    r = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == rows:
            break
    return r


def rref(matrix):
    """Reduced row echelon form over the rationals; returns (rows, pivot_columns)."""
    _, cols = _shape(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(matrix, cols=None):
    """Basis of the right null space, as a list of Fraction vectors."""
    if not matrix:
        n = cols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    _, ncols = _shape(matrix)
    reduced, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def solve_unique(a, b):
    """Return the unique solution of ``a x = b``.

    Raises InconsistentSystem when there is no solution and NonUniqueSolution
    (carrying a null-space direction) when there are infinitely many.
    """
    rows, cols = _shape(a) if a else (0, 0)
    if rows != len(b):
        raise DimensionError(f"{rows} equations but {len(b)} right-hand sides")
    if rows == 0:
        if cols == 0:
            return []
        raise NonUniqueSolution("no equations", nullspace([], cols)[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    reduced, pivots = rref(aug)
    if cols in pivots:
        raise InconsistentSystem("system is inconsistent")
    if len(pivots) < cols:
        raise NonUniqueSolution("system is underdetermined", nullspace(a)[0])
    x = [Fraction(0)] * cols
    for row, p in zip(reduced, pivots):
        x[p] = row[cols]
    return x


def mat_vec(a, x):
    return [sum((Fraction(v) * xi for v, xi in zip(row, x) if v), Fraction(0)) for row in a]


class IncrementalBasis:
    """Row space of a growing set of rational rows, kept in echelon form.

    ``add`` reports whether a row increased the rank, which makes it cheap to
    pick an independent subset from a long stream of constraint rows.
    """

    def __init__(self, cols):
        self.cols = cols
        self._rows = {}  # pivot column -> normalized row (pivot entry 1)

    @property
    def rank(self):
        return len(self._rows)

    def copy(self):
        other = IncrementalBasis(self.cols)
        other._rows = dict(self._rows)
        return other

    def reduce(self, row):
        row = [Fraction(v) for v in row]
        for p in sorted(self._rows):
            f = row[p]
            if f:
                basis_row = self._rows[p]
                row = [ri - f * bi for ri, bi in zip(row, basis_row)]
        return row

    def add(self, row) -> bool:
        if len(row) != self.cols:
            raise DimensionError("row length does not match basis width")
        reduced = self.reduce(row)
        pivot = next((j for j, v in enumerate(reduced) if v), None)
        if pivot is None:
            return False
        inv = 1 / reduced[pivot]
        reduced = [v * inv for v in reduced]
        for p, other in self._rows.items():
            f = other[pivot]
            if f:
                self._rows[p] = [oi - f * ri for oi, ri in zip(other, reduced)]
        self._rows[pivot] = reduced
        return True


@dataclass
class LPOutcome:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Optional[Fraction] = None
    x: Optional[list] = None
    duals: Optional[list] = None
    basis: tuple = ()
    pivots: int = 0

    @property
    def optimal(self):
        return self.status == "optimal"


@dataclass
class _Tableau:
    rows: list
    rhs: list
    basis: list
    ncols: int
    pivots: int = 0

    def pivot(self, r, c):
        row = self.rows[r]
        piv = row[c]
        if piv != 1:
            inv = 1 / piv
            row = [v * inv if v else v for v in row]
            self.rows[r] = row
            self.rhs[r] *= inv
        nz = [j for j, v in enumerate(row) if v]
        br = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[c]
            if f:
                for j in nz:
                    other[j] -= f * row[j]
                self.rhs[i] -= f * br
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost):
        d = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                for j, v in enumerate(self.rows[i]):
                    if v:
                        d[j] -= cb * v
        return d

    def run(self, cost, allowed):
        """Bland's rule primal simplex; returns "optimal" or "unbounded"."""
        while True:
            d = self.reduced_costs(cost)
            enter = next((j for j in range(self.ncols) if allowed[j] and d[j] < 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter)


def lp_solve(objective, constraints, lower_bounds=None, maximize=False) -> LPOutcome:
    """Solve a linear program exactly.

    ``constraints`` is a sequence of ``(row, sense, rhs)`` with sense one of
    ``"<="``, ``"=="``, ``">="``. ``lower_bounds[j]`` is a rational lower bound
    on variable j or None for a free variable; the default is 0 for all.

    The returned ``x`` is a basic feasible solution and ``duals`` holds one
    multiplier per constraint, in the sign convention of the minimization form
    (``>=`` rows get nonnegative multipliers, ``<=`` rows nonpositive).
    """
    nvar = len(objective)
    if lower_bounds is None:
        lower_bounds = [0] * nvar
    if len(lower_bounds) != nvar:
        raise DimensionError("lower_bounds length does not match objective")
    for row, sense, _ in constraints:
        if len(row) != nvar:
            raise DimensionError("constraint row length does not match objective")
        if sense not in (LE, EQ, GE):
            raise ValueError(f"unknown constraint sense {sense!r}")

    sign = -1 if maximize else 1
    cost = [sign * Fraction(c) for c in objective]

    # x_j = lb_j + x'_j, or x_j = x+_j - x-_j for free variables.
    columns = []  # (original variable, coefficient)
    for j, lb in enumerate(lower_bounds):
        columns.append((j, 1))
        if lb is None:
            columns.append((j, -1))
    shift = [Fraction(lb) if lb is not None else Fraction(0) for lb in lower_bounds]

    m = len(constraints)
    nstruct = len(columns)
    row_kind = []
    data = []
    rhs = []
    flips = []
    for row, sense, b in constraints:
        b = Fraction(b) - sum((Fraction(a) * s for a, s in zip(row, shift) if a), Fraction(0))
        coeffs = [Fraction(row[j]) * k for j, k in columns]
        flip = b < 0
        if flip:
            b = -b
            coeffs = [-v for v in coeffs]
            sense = {LE: GE, GE: LE, EQ: EQ}[sense]
        data.append(coeffs)
        rhs.append(b)
        row_kind.append(sense)
        flips.append(flip)

    # Column layout: structural | one slack/surplus per inequality | one artificial per row.
    slack_col = {}
    col = nstruct
    for i, sense in enumerate(row_kind):
        if sense != EQ:
            slack_col[i] = col
            col += 1
    art_col = {i: col + i for i in range(m)}
    ncols = col + m

    rows = []
    basis = []
    for i in range(m):
        r = data[i] + [Fraction(0)] * (ncols - nstruct)
        if i in slack_col:
            r[slack_col[i]] = Fraction(1) if row_kind[i] == LE else Fraction(-1)
        r[art_col[i]] = Fraction(1)
        rows.append(r)
        basis.append(slack_col[i] if row_kind[i] == LE else art_col[i])
    tab = _Tableau(rows, list(rhs), basis, ncols)

    is_art = [False] * ncols
    for c in art_col.values():
        is_art[c] = True

    phase1 = [Fraction(int(is_art[j])) for j in range(ncols)]
    needs_phase1 = any(is_art[b] for b in basis)
    if needs_phase1:
        # Artificial columns never re-enter once they leave the basis.
        allowed = [not is_art[j] for j in range(ncols)]
        tab.run(phase1, allowed)
        infeas = sum((tab.rhs[i] for i, b in enumerate(tab.basis) if is_art[b]), Fraction(0))
        if infeas > 0:
            return LPOutcome("infeasible", pivots=tab.pivots)
        # Drive zero-valued artificials out of the basis where possible.
        for i in range(m):
            if is_art[tab.basis[i]]:
                c = next((j for j in range(ncols) if not is_art[j] and tab.rows[i][j] != 0), None)
                if c is not None:
                    tab.pivot(i, c)

    phase2 = [Fraction(0)] * ncols
    for k, (j, coef) in enumerate(columns):
        phase2[k] = cost[j] * coef
    allowed = [not is_art[j] for j in range(ncols)]
    status = tab.run(phase2, allowed)
    if status == "unbounded":
        return LPOutcome("unbounded", pivots=tab.pivots)

    xcols = [Fraction(0)] * ncols
    for i, b in enumerate(tab.basis):
        xcols[b] = tab.rhs[i]
    x = list(shift)
    for k, (j, coef) in enumerate(columns):
        x[j] += coef * xcols[k]
    value = sum((Fraction(c) * xi for c, xi in zip(objective, x)), Fraction(0))

    d = tab.reduced_costs(phase2)
    duals = []
    for i in range(m):
        # Reduced cost of the artificial column e_i equals -y_i.
        y = -d[art_col[i]]
        if flips[i]:
            y = -y
        duals.append(sign * y)
    return LPOutcome("optimal", value, x, duals, tuple(tab.basis), tab.pivots)
