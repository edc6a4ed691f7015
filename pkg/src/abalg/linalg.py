"""Exact dense matrices over the Gaussian rationals.

Just enough linear algebra for the module layer: ring operations,
reduced row echelon form, minimal polynomials by Krylov subspaces with an
LCM over the basis vectors, and the characteristic polynomial by
Faddeev-LeVerrier.  Everything exact, no pivot-size heuristics needed.
"""

from __future__ import annotations

from .coefficients import GaussianRational, ONE, ZERO
from .polynomials import Poly, poly_lcm


class QMatrix:
    """A square or rectangular matrix with GaussianRational entries; immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(GaussianRational.coerce(c) for c in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @staticmethod
    def identity(k: int) -> QMatrix:
        return QMatrix([[ONE if i == j else ZERO for j in range(k)] for i in range(k)])

    @staticmethod
    def zeros(k: int, m: int | None = None) -> QMatrix:
        m = k if m is None else m
        return QMatrix([[ZERO] * m for _ in range(k)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        n, m = self.shape
        return n == m

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return QMatrix([[a + b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return QMatrix([[a - b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return QMatrix([[-a for a in r] for r in self.rows])

    def scaled(self, c) -> QMatrix:
        c = GaussianRational.coerce(c)
        return QMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError("shape mismatch")
        cols = [other.column(j) for j in range(p)]
        return QMatrix([[_dot(row, col) for col in cols] for row in self.rows])

    def apply(self, vec) -> tuple:
        """Matrix times column vector (a sequence of coefficients)."""
        vec = tuple(GaussianRational.coerce(c) for c in vec)
        if len(vec) != self.shape[1]:
            raise ValueError("length mismatch")
        return tuple(_dot(row, vec) for row in self.rows)

    def trace(self) -> GaussianRational:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        out = ZERO
        for i in range(self.shape[0]):
            out = out + self.rows[i][i]
        return out

    @property
    def is_zero(self) -> bool:
        return all(not c for r in self.rows for c in r)

    def __repr__(self):
        body = "; ".join(" ".join(str(c) for c in r) for r in self.rows)
        return f"<QMatrix {self.shape[0]}x{self.shape[1]} [{body}]>"


def _dot(u, v):
    out = ZERO
    for a, b in zip(u, v):
        if a and b:
            out = out + a * b
    return out


def matrix_power_sequence(a: QMatrix, n: int) -> list[QMatrix]:
    """[I, a, a^2, ..., a^n]."""
    out = [QMatrix.identity(a.shape[0])]
    for _ in range(n):
        out.append(out[-1] @ a)
    return out


def solve_dependency(vectors) -> list | None:
    """Coefficients c with sum c_i vectors[i] = 0 and the LAST one = 1, or None.

    Used for Krylov: vectors[:-1] are known independent; returns the
    representation of the last vector over them if dependent.
    """
    if not vectors:
        return None
    n = len(vectors[0])
    m = len(vectors) - 1
    # Solve sum_{i<m} x_i vectors[i] = vectors[m] by Gaussian elimination.
    aug = [[vectors[i][r] for i in range(m)] + [vectors[m][r]] for r in range(n)]
    pivots = []
    row = 0
    for col in range(m):
        pivot = None
        for r in range(row, n):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [inv * v for v in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, n):
        if aug[r][m]:
            return None  # inconsistent: the last vector is independent
    x = [ZERO] * m
    for r, col in enumerate(pivots):
        x[col] = aug[r][m]
    return [-c for c in x] + [ONE]


def vector_annihilator(a: QMatrix, v) -> Poly:
    """The monic polynomial of least degree with p(a) v = 0 (Krylov chain)."""
    chain = [tuple(GaussianRational.coerce(c) for c in v)]
    while True:
        nxt = a.apply(chain[-1])
        dep = solve_dependency(chain + [nxt])
        if dep is not None:
            return Poly(dep)
        chain.append(nxt)


def minimal_polynomial(a: QMatrix) -> Poly:
    """Monic minimal polynomial: lcm of the basis vectors' annihilators."""
    if not a.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    k = a.shape[0]
    out = Poly([1])
    for i in range(k):
        e = [ONE if j == i else ZERO for j in range(k)]
        out = poly_lcm(out, vector_annihilator(a, e))
        if out.degree == k:
            break
    return out


def evaluate_poly_at_matrix(p: Poly, a: QMatrix) -> QMatrix:
    k = a.shape[0]
    out = QMatrix.zeros(k)
    power = QMatrix.identity(k)
    for i, c in enumerate(p.coeffs):
        if c:
            out = out + power.scaled(c)
        if i < p.degree:
            power = power @ a
    return out


def characteristic_polynomial(a: QMatrix) -> Poly:
    """det(xI - a), monic of degree k, by the Faddeev-LeVerrier recursion."""
    if not a.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    k = a.shape[0]
    coeffs = [ZERO] * (k + 1)
    coeffs[k] = ONE
    ident = QMatrix.identity(k)
    am = QMatrix.zeros(k)  # a @ m for the previous step
    for step in range(1, k + 1):
        m = am + ident.scaled(coeffs[k - step + 1])
        am = a @ m
        coeffs[k - step] = -am.trace() / step
    return Poly(coeffs)
