"""Dense exact matrices over a FieldSpec.

Conventions: rows and columns are indexed 0..d. A matrix M represents a map
X in a basis v_0..v_d when X v_j = sum_i M[i][j] v_i. The transition matrix
S from basis u to basis v satisfies v_j = sum_i S[i][j] u_i.
"""

from __future__ import annotations

from .exactfield import QQ, FieldSpec, MixedFields, Scalar


class Singular(ArithmeticError):
    pass


class Matrix:
    __slots__ = ("rows", "field")

    def __init__(self, rows, field: FieldSpec = QQ):
        rows = tuple(tuple(x if isinstance(x, Scalar) and x.field == field else Scalar(x, field) for x in r)
                     for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "field", field)

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, rows, field):
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "field", field)
        return m

    # constructors

    @classmethod
    def zero(cls, n: int, field: FieldSpec = QQ) -> "Matrix":
        z = field.zero
        return cls._raw(tuple((z,) * n for _ in range(n)), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field)

    @classmethod
    def diag(cls, entries, field: FieldSpec = QQ) -> "Matrix":
        entries = [Scalar(e, field) for e in entries]
        n = len(entries)
        z = field.zero
        return cls._raw(tuple(tuple(entries[i] if i == j else z for j in range(n)) for i in range(n)), field)

    @classmethod
    def from_function(cls, n: int, f, field: FieldSpec = QQ) -> "Matrix":
        return cls([[f(i, j) for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_columns(cls, cols, field: FieldSpec = QQ) -> "Matrix":
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)], field)

    # shape and access

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def d(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.n)]

    # arithmetic

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise MixedFields(f"{self.field} vs {other.field}")
        if other.n != self.n:
            raise ValueError("size mismatch")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                           self.field)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                           self.field)

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.field)

    def scale(self, c) -> "Matrix":
        c = Scalar(c, self.field)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.field)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            cols = other.columns()
            zero = self.field.zero
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = zero
                    for a, b in zip(r, c):
                        if a.value and b.value:
                            acc = acc + a * b
                    row.append(acc)
                out.append(tuple(row))
            return Matrix._raw(tuple(out), self.field)
        if isinstance(other, (Scalar, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(Scalar(1, self.field) / c)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.n, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def apply(self, v) -> tuple:
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.rows)), self.field)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self) -> Scalar:
        acc = self.field.zero
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(not a.value for r in self.rows for a in r)

    def is_scalar(self):
        """Return c if self == cI, else None."""
        c = self.rows[0][0]
        if self == Matrix.identity(self.n, self.field).scale(c):
            return c
        return None

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix([{body}], {self.field})"

    def to_lists(self):
        return [[a.to_json() for a in r] for r in self.rows]

    def to_json(self) -> dict:
        return {"d": self.d, "rows": self.to_lists()}

    @classmethod
    def from_json(cls, obj: dict, field: FieldSpec) -> "Matrix":
        m = cls([[Scalar(x, field) for x in r] for r in obj["rows"]], field)
        if "d" in obj and int(obj["d"]) != m.d:
            raise ValueError("declared d does not match row count")
        return m

    # elimination

    def rank(self) -> int:
        return rank_of_rows([list(r) for r in self.rows])

    def inverse(self) -> "Matrix":
        n = self.n
        one, zero = self.field.one, self.field.zero
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col].value), None)
            if piv is None:
                raise Singular("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col].value:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Matrix._raw(tuple(tuple(r[n:]) for r in aug), self.field)

    def kernel(self) -> list:
        return kernel(self.rows, self.field, self.n)

    def solve(self, b) -> tuple:
        """Solve M x = b for invertible M."""
        return self.inverse().apply(b)


def rref(rows: list, ncols: int):
    """Reduced row echelon form with first-nonzero pivoting.

    Returns (reduced rows, pivot column list). Input is not modified.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c].value), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c].value:
                f = m[k][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_of_rows(rows: list) -> int:
    if not rows:
        return 0
    return len(rref(rows, len(rows[0]))[1])


def kernel(rows, field: FieldSpec, ncols: int) -> list:
    """Basis of {x : rows x = 0}, one vector per free column.

    The vector for free column f has a 1 in slot f and 0 in the other free
    slots, so the basis matrix is in reduced column-echelon form.
    """
    if not rows:
        return [tuple(field.one if i == j else field.zero for i in range(ncols)) for j in range(ncols)]
    rows = [[Scalar(x, field) for x in r] for r in rows]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def column_space(vectors: list, field: FieldSpec) -> list:
    """An echelon basis of the span of ``vectors``."""
    vectors = [list(v) for v in vectors if any(x.value for x in v)]
    if not vectors:
        return []
    red, _ = rref(vectors, len(vectors[0]))
    return [tuple(r) for r in red]


def span_rank(vectors: list) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return rank_of_rows(vectors)


def image(M: Matrix) -> list:
    return column_space(M.columns(), M.field)


def intersect(U: list, W: list, field: FieldSpec) -> list:
    """Basis of span(U) ∩ span(W)."""
    if not U or not W:
        return []
    n = len(U[0])
    # solve sum a_k U_k = sum b_l W_l
    cols = list(U) + [tuple(-x for x in w) for w in W]
    rows = [[c[i] for c in cols] for i in range(n)]
    sols = kernel(rows, field, len(cols))
    vecs = []
    for s in sols:
        v = [field.zero] * n
        for a, u in zip(s[: len(U)], U):
            v = [x + a * y for x, y in zip(v, u)]
        vecs.append(tuple(v))
    return column_space(vecs, field)


def contains(U: list, W: list) -> bool:
    """True when span(W) ⊆ span(U)."""
    return span_rank(list(U) + list(W)) == span_rank(list(U))


def solve_linear_system(equations: list, nvars: int, field: FieldSpec) -> list:
    """Basis of solutions of a homogeneous system given as coefficient rows."""
    return kernel([list(e) for e in equations], field, nvars)


# structural constants


def antidiagonal_Z(d: int, field: FieldSpec = QQ) -> Matrix:
    return Matrix.from_function(d + 1, lambda i, j: 1 if i + j == d else 0, field)


def tau(d: int, field: FieldSpec = QQ) -> Matrix:
    return Matrix.from_function(d + 1, lambda i, j: 1 if j == i + 1 else 0, field)


def D_matrix(phi: list, field: FieldSpec = QQ) -> Matrix:
    """diag(1, φ1, φ1φ2, ..., φ1⋯φd)."""
    entries = [field.one]
    for x in phi:
        entries.append(entries[-1] * x)
    return Matrix.diag(entries, field)


def is_upper_toeplitz(M: Matrix):
    """Parameters (α_0..α_d) when M[i][j] = α_{j-i} (i<=j) and M is upper triangular."""
    n = M.n
    alpha = [M[0, j] for j in range(n)]
    for i in range(n):
        for j in range(n):
            want = alpha[j - i] if j >= i else M.field.zero
            if M[i, j] != want:
                return None
    return alpha


def toeplitz_matrix(alpha: list, field: FieldSpec = QQ) -> Matrix:
    n = len(alpha)
    return Matrix.from_function(n, lambda i, j: alpha[j - i] if j >= i else 0, field)


def toeplitz_inverse_params(alpha: list) -> list:
    """β with sum_k α_k β_{j-k} = δ_{j0}."""
    a0inv = alpha[0].inverse()
    beta = [a0inv]
    for j in range(1, len(alpha)):
        acc = alpha[0].field.zero
        for k in range(1, j + 1):
            acc = acc + alpha[k] * beta[j - k]
        beta.append(-acc * a0inv)
    return beta


def is_antidiagonal(M: Matrix) -> bool:
    d = M.d
    return all(not M[i, j].value for i in range(M.n) for j in range(M.n) if i + j != d)


def is_diagonal(M: Matrix) -> bool:
    return all(not M[i, j].value for i in range(M.n) for j in range(M.n) if i != j)


def transition_matrix(frm: list, to: list, field: FieldSpec = QQ) -> Matrix:
    """S with to_j = sum_i S[i][j] frm_i, i.e. S = U^{-1} W."""
    U = Matrix.from_columns(frm, field)
    W = Matrix.from_columns(to, field)
    return U.inverse() * W


def represent(X: Matrix, basis: list) -> Matrix:
    """Matrix of X in the given basis (columns)."""
    S = Matrix.from_columns(basis, X.field)
    return S.inverse() * X * S


def polynomial(coeffs: list, X: Matrix) -> Matrix:
    """sum_i coeffs[i] X^i by Horner."""
    acc = Matrix.zero(X.n, X.field)
    I = Matrix.identity(X.n, X.field)
    for c in reversed(coeffs):
        acc = acc * X + I.scale(c)
    return acc


def charpoly(M: Matrix) -> list:
    """Coefficients c_0..c_n of det(xI - M), lowest degree first.

    Berkowitz recursion: division free, so valid in every characteristic.
    """
    n = M.n
    F = M.field
    A = [list(r) for r in M.rows]
    poly = [F.one, -A[0][0]]  # highest degree first
    for k in range(1, n):
        R = A[k][:k]
        Ccol = [A[i][k] for i in range(k)]
        a = A[k][k]
        Asub = [row[:k] for row in A[:k]]
        vec = [F.one, -a]
        powc = Ccol
        for _ in range(k):
            val = F.zero
            for x, y in zip(R, powc):
                val = val + x * y
            vec.append(-val)
            powc = [sum((Asub[i][j] * powc[j] for j in range(k)), F.zero) for i in range(k)]
        new = []
        for i in range(k + 2):
            acc = F.zero
            for j in range(k + 1):
                if 0 <= i - j < len(vec):
                    acc = acc + vec[i - j] * poly[j]
            new.append(acc)
        poly = new
    return list(reversed(poly))


def poly_eval(coeffs: list, x: Scalar) -> Scalar:
    acc = x.field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_mul(p: list, q: list, field: FieldSpec) -> list:
    out = [field.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def unit_matrix(n: int, a: int, b: int, field: FieldSpec) -> Matrix:
    return Matrix.from_function(n, lambda i, j: 1 if (i, j) == (a, b) else 0, field)


def solve_matrix_equations(maps: list, n: int, field: FieldSpec) -> list:
    """Basis of {X : f(X) = 0 for every linear f in ``maps``}."""
    units = [unit_matrix(n, a, b, field) for a in range(n) for b in range(n)]
    rows = []
    for f in maps:
        images = [f(U) for U in units]
        for i in range(n):
            for j in range(n):
                row = [img[i, j] for img in images]
                if any(x.value for x in row):
                    rows.append(row)
    sols = kernel(rows, field, n * n)
    return [Matrix([[s[i * n + j] for j in range(n)] for i in range(n)], field) for s in sols]


def _nonzero_row(M: Matrix) -> tuple:
    return next(r for r in M.rows if any(x.value for x in r))


def sandwich_kernel(pairs: list, n: int, field: FieldSpec) -> list:
    """Basis of {X : PXQ = 0 for each (P, Q)}, with P and Q of rank one.

    For rank-one P = uwᵗ and Q = u'w'ᵗ the condition is the single equation
    wᵗXu' = 0, so each pair contributes one row.
    """
    rows = []
    for P, Q in pairs:
        w = _nonzero_row(P)
        u = _nonzero_row(Q.T)
        rows.append([w[a] * u[b] for a in range(n) for b in range(n)])
    sols = kernel(rows, field, n * n)
    return [Matrix([[v[i * n + j] for j in range(n)] for i in range(n)], field) for v in sols]


def matrix_span_rank(mats: list) -> int:
    return span_rank([tuple(x for r in M.rows for x in r) for M in mats])
