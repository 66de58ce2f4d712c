"""Recognition and analysis of lowering-raising pairs."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactfield import FieldSpec, Scalar
from .linalg import (
    D_matrix,
    Matrix,
    charpoly,
    contains,
    image,
    intersect,
    poly_mul,
    represent,
    solve_matrix_equations,
    span_rank,
)


class OddDiameter(ValueError):
    pass


class NotRecognized(ValueError):
    """Raised by the strict recognizers; ``reason`` is a short code."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


def product(xs, one):
    acc = one
    for x in xs:
        acc = acc * x
    return acc


def is_nil(A: Matrix) -> bool:
    d = A.d
    P = A**d
    return not P.is_zero() and (P * A).is_zero()


def _flag(X: Matrix) -> list:
    """Bases of X^{d-i} V for i = 0..d."""
    d = X.d
    out = []
    P = Matrix.identity(X.n, X.field)
    powers = [P]
    for _ in range(d):
        P = P * X
        powers.append(P)
    for i in range(d + 1):
        out.append(image(powers[d - i]))
    return out


def raises_flag(X: Matrix, flag: list) -> bool:
    """U_i + X U_i = U_{i+1} for every i < d."""
    for i in range(len(flag) - 1):
        U = flag[i]
        moved = U + [X.apply(u) for u in U]
        if span_rank(moved) != len(flag[i + 1]) or not contains(flag[i + 1], moved):
            return False
    return True


def _leading_normalize(v: tuple) -> tuple:
    lead = next(x for x in v if x.value)
    inv = lead.inverse()
    return tuple(x * inv for x in v)


def canonical_generator(B: Matrix) -> tuple:
    """First nonzero column of B^d, scaled so its first nonzero entry is 1."""
    P = B**B.d
    col = next(c for c in P.columns() if any(x.value for x in c))
    return _leading_normalize(col)


@dataclass(frozen=True)
class LRPair:
    A: Matrix
    B: Matrix
    phi: tuple
    basis: tuple
    idempotents: tuple = dc_field(repr=False)

    @property
    def d(self) -> int:
        return self.A.d

    @property
    def field(self) -> FieldSpec:
        return self.A.field

    @property
    def decomposition(self) -> list:
        """Each V_i as its leading-one spanning vector."""
        return [_leading_normalize(v) for v in self.basis]

    def phi_ext(self, i: int) -> Scalar:
        """φ_i with φ_0 = φ_{d+1} = 0."""
        if 1 <= i <= self.d:
            return self.phi[i - 1]
        return self.field.zero

    def to_json(self) -> dict:
        return {"d": self.d, "A": self.A.to_json(), "B": self.B.to_json(),
                "phi": [x.to_json() for x in self.phi]}


def check_lr_pair(A: Matrix, B: Matrix):
    """None when (A, B) is an LR pair, else the rejection reason code."""
    if A.n != B.n or A.field != B.field:
        raise ValueError("A and B must have the same size and field")
    if not is_nil(A):
        return "NotNilA"
    if not is_nil(B):
        return "NotNilB"
    if not raises_flag(B, _flag(A)) or not raises_flag(A, _flag(B)):
        return "FlagNotRaised"
    return None


def recognize_lr_pair(A: Matrix, B: Matrix, *, strict: bool = False):
    """LRPair for (A, B), or None when they do not form an LR pair.

    With ``strict`` a NotRecognized carrying the reason code is raised instead.
    """
    reason = check_lr_pair(A, B)
    if reason is not None:
        if strict:
            raise NotRecognized(reason)
        return None
    F, d = A.field, A.d
    # v_i = A^{d-i} ξ
    vecs = [canonical_generator(B)]
    for _ in range(d):
        vecs.append(A.apply(vecs[-1]))
    basis = tuple(vecs[d - i] for i in range(d + 1))
    S = Matrix.from_columns(basis, F)
    Bm = S.inverse() * B * S
    phi = []
    for i in range(1, d + 1):
        phi.append(Bm[i, i - 1])
    # B must be strictly subdiagonal in this basis
    for i in range(d + 1):
        for j in range(d + 1):
            if i != j + 1 and Bm[i, j].value:
                raise AssertionError("canonical basis does not carry B to subdiagonal form")
    if any(not x.value for x in phi):
        raise AssertionError("zero entry in parameter sequence")
    Sinv = S.inverse()
    n = d + 1
    E = []
    for i in range(n):
        E.append(Matrix.from_function(n, lambda r, c: S[r, i] * Sinv[i, c], F))
    return LRPair(A, B, tuple(phi), basis, tuple(E))


def pair_decomposition_by_flags(A: Matrix, B: Matrix) -> list:
    """V_i = A^{d-i}V ∩ B^iV, computed directly from images."""
    d = A.d
    fa, fb = _flag(A), _flag(B)
    # B^i V = fb[d - i]
    return [intersect(fa[i], fb[d - i], A.field) for i in range(d + 1)]


def parameter_sequence(p: LRPair) -> tuple:
    return p.phi


def idempotents(p: LRPair) -> tuple:
    return p.idempotents


def idempotent_formulas(p: LRPair):
    """The two closed forms A^{d-i}B^dA^i/π and B^iA^dB^{d-i}/π, π = φ1⋯φd."""
    A, B, d = p.A, p.B, p.d
    pi = product(p.phi, p.field.one)
    powA = [A**k for k in range(d + 1)]
    powB = [B**k for k in range(d + 1)]
    left = [powA[d - i] * powB[d] * powA[i] / pi for i in range(d + 1)]
    right = [powB[i] * powA[d] * powB[d - i] / pi for i in range(d + 1)]
    return left, right


def pair_from_phi(phi, field: FieldSpec) -> tuple:
    """(A, B) with A the superdiagonal of ones and B[i][i-1] = φ_i."""
    phi = [Scalar(x, field) for x in phi]
    n = len(phi) + 1
    A = Matrix.from_function(n, lambda i, j: 1 if j == i + 1 else 0, field)
    B = Matrix.from_function(n, lambda i, j: phi[i - 1] if j == i - 1 and i >= 1 else 0, field)
    return A, B


def canonical_ab_basis(p: LRPair) -> tuple:
    return p.basis


def inverted(basis) -> tuple:
    return tuple(reversed(basis))


def canonical_ba_basis(p: LRPair) -> tuple:
    """(B,A)-basis w_i = B^{d-i}η, η the canonical generator of A^dV."""
    eta = canonical_generator(p.A)
    vecs = [eta]
    for _ in range(p.d):
        vecs.append(p.B.apply(vecs[-1]))
    return tuple(vecs[p.d - i] for i in range(p.d + 1))


def inverter(p: LRPair) -> Matrix:
    """Ψ = Σ (φ1⋯φi)/(φd⋯φ_{d-i+1}) E_i."""
    F, d = p.field, p.d
    out = Matrix.zero(d + 1, F)
    for i in range(d + 1):
        num = product(p.phi[:i], F.one)
        den = product(p.phi[d - i:], F.one)
        out = out + p.idempotents[i].scale(num / den)
    return out


def reflector_conjugator(p: LRPair) -> Matrix:
    """P with P Aᵗ = B P and P Bᵗ = A P, first nonzero entry scaled to 1."""
    A, B = p.A, p.B
    At, Bt = A.T, B.T
    sols = solve_matrix_equations(
        [lambda X: X * At - B * X, lambda X: X * Bt - A * X], A.n, A.field)
    if len(sols) != 1:
        raise AssertionError(f"reflector solution space has dimension {len(sols)}")
    P = sols[0]
    lead = next(x for r in P.rows for x in r if x.value)
    return P / lead


def dagger(p: LRPair, X: Matrix, P: Matrix | None = None) -> Matrix:
    P = reflector_conjugator(p) if P is None else P
    return P * X.T * P.inverse()


def projector(p: LRPair) -> Matrix:
    if p.d % 2:
        raise OddDiameter("projector needs even diameter")
    out = Matrix.zero(p.d + 1, p.field)
    for i in range(0, p.d + 1, 2):
        out = out + p.idempotents[i]
    return out


def outer_inner_split(p: LRPair) -> tuple:
    """(A_out, A_in, B_out, B_in) with X_out = XJ and X_in = JX."""
    J = projector(p)
    return p.A * J, J * p.A, p.B * J, J * p.B


def _roots_of_q_squared(value: Scalar) -> list:
    F = value.field
    if F.p is None:
        r = F.sqrt(value)
        if r is None or r.is_zero():
            return []
        return sorted({r, -r}, key=lambda x: x.value)
    return [x for x in F.elements() if x * x == value]


def weyl_kind(p: LRPair):
    """("Weyl", None), ("QWeyl", [q, ...]) or (None, None)."""
    d, F = p.d, p.field
    if d == 0:
        return None, None
    ph = [p.phi_ext(i) for i in range(d + 2)]
    if all(ph[i + 1] - ph[i] == 1 for i in range(d + 1)):
        return "Weyl", None
    if ph[1] == 1:
        return None, None
    qs = []
    for q in _roots_of_q_squared((1 - ph[1]).inverse()):
        if q * q == 1:
            continue
        qi = q.inverse()
        den = q - qi
        if all((q * ph[i + 1] - qi * ph[i]) / den == 1 for i in range(d + 1)):
            qs.append(q)
    if qs:
        return "QWeyl", qs
    return None, None


def qweyl_theta(q: Scalar, j: int, root: Scalar) -> Scalar:
    """q^{j+1/2} + q^{-j-1/2} for a chosen square root ``root`` of q."""
    a = q**j * root
    return a + a.inverse()


def qweyl_theta_squared(q: Scalar, j: int) -> Scalar:
    """(q^{j+1/2} + q^{-j-1/2})², which lies in the base field."""
    e = q ** (2 * j + 1)
    return e + e.inverse() + 2


def qweyl_expected_charpoly(d: int, q: Scalar) -> list:
    """∏_k (x - θ_k) over k = 0..d, θ_k = q^{k+1/2} + q^{-k-1/2}.

    For standard (d, q) the roots pair up as θ_{d-k} = -θ_k, so the product is
    ∏_{k<d/2} (x² - θ_k²), times x when d is even; every coefficient lies in
    the base field even when the θ_k do not.
    """
    F = q.field
    poly = [F.one]
    for k in range((d + 1) // 2):
        poly = poly_mul(poly, [-qweyl_theta_squared(q, k), F.zero, F.one], F)
    if d % 2 == 0:
        poly = poly_mul(poly, [F.zero, F.one], F)
    return poly


def qweyl_eigenvalue_check(p: LRPair, q) -> dict:
    """Compare the characteristic polynomial of qA + q⁻¹B with the expected roots.

    ``roots`` lists the θ_k when q has a square root in the field, else None.
    """
    q = Scalar(q, p.field)
    M = p.A * q + p.B * q.inverse()
    cp = charpoly(M)
    expected = qweyl_expected_charpoly(p.d, q)
    root = p.field.sqrt(q)
    roots = None
    if root:
        roots = [qweyl_theta(q, k, root) for k in range(p.d + 1)]
        from_roots = [p.field.one]
        for r in roots:
            from_roots = poly_mul(from_roots, [-r, p.field.one], p.field)
        if from_roots != expected:
            raise AssertionError("root pairing failed; (d, q) is not standard")
    return {"charpoly": cp, "expected": expected, "holds": cp == expected, "roots": roots}
