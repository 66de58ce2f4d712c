"""LR triples: recognition and the data attached to them.

Primes follow the usual cyclic convention: unprimed data comes from the pair
(A, B), primed from (B, C) and double primed from (C, A).
"""

from __future__ import annotations

from functools import cached_property

from .exactfield import FieldSpec, Scalar
from .linalg import (
    D_matrix,
    Matrix,
    antidiagonal_Z,
    is_upper_toeplitz,
    polynomial,
    represent,
    sandwich_kernel,
    toeplitz_inverse_params,
    toeplitz_matrix,
    transition_matrix,
)
from .lrpair import (
    LRPair,
    NotRecognized,
    canonical_generator,
    check_lr_pair,
    idempotent_formulas,
    product,
    recognize_lr_pair,
)


class BipartiteInput(ValueError):
    pass


class NotBipartite(ValueError):
    pass


class TrivialInput(ValueError):
    pass


class NotEquitable(ValueError):
    pass


class InconsistentData(ValueError):
    pass


class IdentityViolated(AssertionError):
    pass


def _ext(seq, i, zero):
    """seq_i for 1-based sequences, zero outside 1..d."""
    return seq[i - 1] if 1 <= i <= len(seq) else zero


def _lowered_basis(X: Matrix, xi: tuple) -> tuple:
    """(X^d ξ, ..., Xξ, ξ): the basis v_i = X^{d-i}ξ."""
    vecs = [xi]
    for _ in range(X.d):
        vecs.append(X.apply(vecs[-1]))
    return tuple(reversed(vecs))


def _toeplitz_from_transition(X: Matrix, Y: Matrix, Z: Matrix) -> list:
    """Parameters of the transition from an (X,Z)-basis to a compatible (X,Y)-basis."""
    u = _lowered_basis(X, canonical_generator(Z))
    w = _lowered_basis(X, canonical_generator(Y))
    S = transition_matrix(u, w, X.field)
    alpha = is_upper_toeplitz(S)
    if alpha is None:
        raise IdentityViolated("transition matrix is not upper triangular Toeplitz")
    lead = alpha[0].inverse()
    return [a * lead for a in alpha]


class LRTriple:
    """A recognized LR triple with lazily computed derived data."""

    def __init__(self, A: Matrix, B: Matrix, C: Matrix, pairs: tuple):
        self.A, self.B, self.C = A, B, C
        self.pairs = pairs
        self._spaces = {}

    # basic data

    @property
    def d(self) -> int:
        return self.A.d

    @property
    def field(self) -> FieldSpec:
        return self.A.field

    @property
    def n(self) -> int:
        return self.A.n

    @property
    def phi(self):
        return self.pairs[0].phi

    @property
    def phi1(self):
        return self.pairs[1].phi

    @property
    def phi2(self):
        return self.pairs[2].phi

    @property
    def parameter_array(self) -> tuple:
        return self.phi, self.phi1, self.phi2

    @property
    def E(self):
        return self.pairs[0].idempotents

    @property
    def E1(self):
        return self.pairs[1].idempotents

    @property
    def E2(self):
        return self.pairs[2].idempotents

    def f(self, which: int, i: int) -> Scalar:
        """φ_i (which=0), φ'_i (1) or φ''_i (2), zero outside 1..d."""
        return _ext(self.parameter_array[which], i, self.field.zero)

    @cached_property
    def I(self) -> Matrix:
        return Matrix.identity(self.n, self.field)

    @cached_property
    def trace_data(self) -> tuple:
        a = tuple((self.C * e).trace() for e in self.E)
        a1 = tuple((self.A * e).trace() for e in self.E1)
        a2 = tuple((self.B * e).trace() for e in self.E2)
        return a, a1, a2

    @cached_property
    def toeplitz_data(self) -> tuple:
        """((α, β), (α', β'), (α'', β'')) from transition matrices."""
        A, B, C = self.A, self.B, self.C
        # T: (C,B)-basis to (C,A)-basis; T': (A,C) to (A,B); T'': (B,A) to (B,C)
        alpha = _toeplitz_from_transition(C, A, B)
        alpha1 = _toeplitz_from_transition(A, B, C)
        alpha2 = _toeplitz_from_transition(B, C, A)
        return tuple((tuple(x), tuple(toeplitz_inverse_params(x))) for x in (alpha, alpha1, alpha2))

    @property
    def alpha(self):
        return self.toeplitz_data[0][0]

    @property
    def beta(self):
        return self.toeplitz_data[0][1]

    def toeplitz_matrices(self) -> tuple:
        """(T, T', T'')."""
        return tuple(toeplitz_matrix(list(ab[0]), self.field) for ab in self.toeplitz_data)

    @cached_property
    def theta(self) -> Scalar:
        (al, be), (al1, be1), (al2, be2) = self.toeplitz_data
        d = self.d
        th = al[d] / be[d]
        if al1[d] / be1[d] != th or al2[d] / be2[d] != th:
            raise IdentityViolated("the three Toeplitz ratios disagree")
        return th

    # flags

    @cached_property
    def is_bipartite(self) -> bool:
        return all(not x.value for seq in self.trace_data for x in seq)

    @cached_property
    def is_equitable(self) -> bool:
        (al, _), (al1, _), (al2, _) = self.toeplitz_data
        return al == al1 == al2

    @cached_property
    def is_normalized(self) -> bool:
        if self.d == 0:
            return True
        if not self.is_equitable:
            return False
        if self.is_bipartite:
            return self.alpha[2] == 1
        return self.alpha[1] == 1

    @property
    def is_trivial(self) -> bool:
        return self.d == 0

    def flags(self) -> dict:
        return {"bipartite": self.is_bipartite, "equitable": self.is_equitable,
                "normalized": self.is_normalized}

    # maps built from the data

    @cached_property
    def unipotent_maps(self) -> tuple:
        """(𝔸, 𝔹, ℂ) = (ΣE_{d-i}E''_i, ΣE'_{d-i}E_i, ΣE''_{d-i}E'_i)."""
        d = self.d
        E, E1, E2 = self.E, self.E1, self.E2
        z = Matrix.zero(self.n, self.field)
        AA, BB, CC = z, z, z
        for i in range(d + 1):
            AA = AA + E[d - i] * E2[i]
            BB = BB + E1[d - i] * E[i]
            CC = CC + E2[d - i] * E1[i]
        return AA, BB, CC

    def unipotent_inverses(self) -> tuple:
        d = self.d
        E, E1, E2 = self.E, self.E1, self.E2
        z = Matrix.zero(self.n, self.field)
        AA, BB, CC = z, z, z
        for i in range(d + 1):
            AA = AA + E2[d - i] * E[i]
            BB = BB + E[d - i] * E1[i]
            CC = CC + E1[d - i] * E2[i]
        return AA, BB, CC

    def unipotent_polynomials(self) -> tuple:
        """(Σα'_iA^i, Σα''_iB^i, Σα_iC^i) and the β analogues."""
        (al, be), (al1, be1), (al2, be2) = self.toeplitz_data
        fwd = (polynomial(list(al1), self.A), polynomial(list(al2), self.B), polynomial(list(al), self.C))
        inv = (polynomial(list(be1), self.A), polynomial(list(be2), self.B), polynomial(list(be), self.C))
        return fwd, inv

    def _weighted(self, idem, indices, num_range, den_range) -> Matrix:
        F = self.field
        out = Matrix.zero(self.n, F)
        for i, (nr, dr) in zip(indices, zip(num_range, den_range)):
            w = product([self.f(0, k) for k in nr], F.one) / product([self.f(0, k) for k in dr], F.one)
            out = out + idem[i].scale(w)
        return out

    def _inverter_sum(self, idem) -> Matrix:
        d = self.d
        idx = range(d + 1)
        return self._weighted(idem, idx, [range(1, i + 1) for i in idx],
                              [range(d - i + 1, d + 1) for i in idx])

    def rotator_forms(self) -> tuple:
        """The three expressions whose common value is the rotator."""
        AA, BB, CC = self.unipotent_maps
        return (BB * self._inverter_sum(self.E) * AA,
                CC * self._inverter_sum(self.E1) * BB,
                AA * self._inverter_sum(self.E2) * CC)

    def rotator(self) -> Matrix:
        if self.is_bipartite:
            raise BipartiteInput("rotator needs a nonbipartite triple")
        forms = self.rotator_forms()
        if not (forms[0] == forms[1] == forms[2]):
            raise IdentityViolated("rotator expressions disagree")
        return forms[0]

    def rotators_out_in_forms(self) -> tuple:
        d = self.d
        AA, BB, CC = self.unipotent_maps
        ev = range(0, d + 1, 2)
        od = range(1, d, 2)
        outs, ins = [], []
        for X, Y, idem in ((BB, AA, self.E), (CC, BB, self.E1), (AA, CC, self.E2)):
            w_out = self._weighted(idem, ev, [range(1, i + 1) for i in ev],
                                   [range(d - i + 1, d + 1) for i in ev])
            w_in = self._weighted(idem, od, [range(2, i + 1) for i in od],
                                  [range(d - i + 1, d) for i in od])
            outs.append(X * w_out * Y)
            ins.append(X * w_in * Y)
        return outs, ins

    def rotators_out_in(self) -> tuple:
        if not self.is_bipartite:
            raise NotBipartite("needs a bipartite triple")
        if self.d == 0:
            raise TrivialInput("needs a nontrivial triple")
        outs, ins = self.rotators_out_in_forms()
        if not (outs[0] == outs[1] == outs[2]) or not (ins[0] == ins[1] == ins[2]):
            raise IdentityViolated("outer/inner rotator expressions disagree")
        return outs[0], ins[0]

    @cached_property
    def projector(self) -> Matrix:
        if self.d % 2:
            raise NotBipartite("odd diameter")
        out = Matrix.zero(self.n, self.field)
        for i in range(0, self.d + 1, 2):
            out = out + self.E[i]
        return out

    def out_in(self, X: Matrix) -> tuple:
        J = self.projector
        return X * J, J * X

    def twelve_cycle_product(self) -> Matrix:
        T, T1, T2 = self.toeplitz_matrices()
        F, d = self.field, self.d
        D, D1, D2 = (D_matrix(list(s), F) for s in self.parameter_array)
        Z = antidiagonal_Z(d, F)
        return T1 * D * Z * T2 * D1 * Z * T * D2 * Z

    def twelve_cycle_check(self) -> Scalar:
        (_, be), (_, be1), (_, be2) = self.toeplitz_data
        d = self.d
        c = (self.theta * be[d] * be1[d] * be2[d]).inverse()
        if self.twelve_cycle_product() != self.I.scale(c):
            raise IdentityViolated("twelve-cycle product is not the expected scalar")
        return c

    def theta_trace(self) -> Scalar:
        """tr(E'_d E_0 E''_d E'_0 E_d E''_0)."""
        d = self.d
        E, E1, E2 = self.E, self.E1, self.E2
        return (E1[d] * E[0] * E2[d] * E1[0] * E[d] * E2[0]).trace()

    # relatives

    def relatives(self) -> dict:
        A, B, C = self.A, self.B, self.C
        perms = {"ABC": (A, B, C), "BCA": (B, C, A), "CAB": (C, A, B),
                 "CBA": (C, B, A), "ACB": (A, C, B), "BAC": (B, A, C)}
        out = {}
        for key, (x, y, z) in perms.items():
            out[key] = recognize_lr_triple(x, y, z, strict=True)
            out["~" + key] = recognize_lr_triple(x.T, y.T, z.T, strict=True)
        return out

    # structure spaces

    def idempotent_centralizer_basis(self) -> list:
        if "centralizer" in self._spaces:
            return list(self._spaces["centralizer"])
        # commuting with every E_i of a decomposition means E_j X E_i = 0 for i != j
        pairs = [(e[j], e[i]) for e in (self.E, self.E1, self.E2)
                 for i in range(self.n) for j in range(self.n) if i != j]
        self._spaces["centralizer"] = sandwich_kernel(pairs, self.n, self.field)
        return list(self._spaces["centralizer"])

    def _decomposition_idempotents(self, key: str) -> list:
        d = self.d
        E, E1, E2 = self.E, self.E1, self.E2
        table = {
            "AB": list(E), "BA": [E[d - i] for i in range(d + 1)],
            "BC": list(E1), "CB": [E1[d - i] for i in range(d + 1)],
            "CA": list(E2), "AC": [E2[d - i] for i in range(d + 1)],
        }
        return table[key]

    def double_lowering_basis(self, which: str = "A") -> list:
        """X with XV_i ⊆ V_{i-1} and XV_0 = 0 on both decompositions lowered by ``which``."""
        if which in self._spaces:
            return list(self._spaces[which])
        others = {"A": ("B", "C"), "B": ("C", "A"), "C": ("A", "B")}[which]
        pairs = []
        for other in others:
            idem = self._decomposition_idempotents(which + other)
            pairs += [(idem[j], idem[i]) for i in range(self.d + 1) for j in range(self.d + 1) if j != i - 1]
        self._spaces[which] = sandwich_kernel(pairs, self.n, self.field)
        return list(self._spaces[which])

    # bipartite halves

    def bipartite_halves(self) -> tuple:
        """(outer, inner): A², B², C² restricted to the even/odd canonical basis vectors.

        The inner half is None for the trivial triple.
        """
        if not self.is_bipartite:
            raise NotBipartite("needs a bipartite triple")
        basis = self.pairs[0].basis
        squares = [represent(X * X, list(basis)) for X in (self.A, self.B, self.C)]
        d = self.d
        halves = []
        for idx in (list(range(0, d + 1, 2)), list(range(1, d + 1, 2))):
            if not idx:
                halves.append(None)
                continue
            rest = [k for k in range(d + 1) if k not in idx]
            mats = []
            for M in squares:
                if any(M[r, c].value for r in rest for c in idx):
                    raise IdentityViolated("half is not invariant")
                mats.append(Matrix([[M[r, c] for c in idx] for r in idx], self.field))
            halves.append(recognize_lr_triple(*mats, strict=True))
        return tuple(halves)

    # export

    def to_json(self) -> dict:
        enc = lambda seq: [x.to_json() for x in seq]
        (al, be), _, _ = self.toeplitz_data
        return {
            "d": self.d,
            "field": self.field.to_json(),
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "C": self.C.to_json(),
            "derived": {
                "phi": enc(self.phi),
                "phi1": enc(self.phi1),
                "phi2": enc(self.phi2),
                "a": [enc(s) for s in self.trace_data],
                "alpha": [enc(ab[0]) for ab in self.toeplitz_data],
                "beta": [enc(ab[1]) for ab in self.toeplitz_data],
                "theta": self.theta.to_json(),
                "flags": self.flags(),
            },
        }


def check_lr_triple(A: Matrix, B: Matrix, C: Matrix):
    """None when (A, B, C) is an LR triple, else ``"<pair>:<reason>"``."""
    for name, (x, y) in (("AB", (A, B)), ("BC", (B, C)), ("CA", (C, A))):
        reason = check_lr_pair(x, y)
        if reason is not None:
            return f"{name}:{reason}"
    return None


def recognize_lr_triple(A: Matrix, B: Matrix, C: Matrix, *, strict: bool = False):
    reason = check_lr_triple(A, B, C)
    if reason is not None:
        if strict:
            raise NotRecognized(reason)
        return None
    pairs = (recognize_lr_pair(A, B), recognize_lr_pair(B, C), recognize_lr_pair(C, A))
    return LRTriple(A, B, C, pairs)


def trace_data(t: LRTriple) -> tuple:
    return t.trace_data


def toeplitz_data_via_transition(t: LRTriple) -> tuple:
    return t.toeplitz_data


def _alpha_beta_recursion(phi, phi1, phi2, alpha1, *, second: bool = False):
    """α and β for the pair ordering whose array is (phi; phi1; phi2)."""
    F = alpha1.field
    d = len(phi)
    z = F.zero
    f = lambda i: _ext(phi, i, z)
    f1 = lambda i: _ext(phi1, i, z)
    f2 = lambda i: _ext(phi2, i, z)
    al = [F.one, alpha1]
    be = [F.one, -alpha1]
    b1 = -alpha1
    for i in range(1, d):
        if not second:
            al.append((alpha1 * al[i] * f2(1) + al[i - 1] * f(1) / f1(d)) / f2(i + 1))
            be.append((b1 * be[i] * f2(d) + be[i - 1] * f(d) / f1(1)) / f2(d - i))
        else:
            al.append((alpha1 * al[i] * (f2(d - i) - f2(d - i + 1)) - al[i - 1] * f(d - i + 1) / f1(i)) / f2(d - i))
            be.append((b1 * be[i] * (f2(i + 1) - f2(i)) - be[i - 1] * f(i) / f1(d - i + 1)) / f2(i + 1))
    return al[: d + 1], be[: d + 1]


def toeplitz_data_via_recursion(parameter_array, alpha1) -> tuple:
    """Toeplitz data from the parameter array and the first Toeplitz number.

    Both recursions are run for all three orderings and must agree; the β's
    must also be the Toeplitz inverses of the α's.
    """
    phi, phi1, phi2 = parameter_array
    if not phi:
        raise ValueError("needs d >= 1")
    F = phi[0].field
    alpha1 = Scalar(alpha1, F)
    d = len(phi)
    seeds = (alpha1, alpha1 * phi1[0] / phi[0], alpha1 * phi2[0] / phi[0])
    arrays = ((phi, phi1, phi2), (phi1, phi2, phi), (phi2, phi, phi1))
    out = []
    for seed, arr in zip(seeds, arrays):
        al, be = _alpha_beta_recursion(*arr, seed)
        al2, be2 = _alpha_beta_recursion(*arr, seed, second=True)
        if al != al2 or be != be2:
            raise InconsistentData("the two recursions disagree")
        if toeplitz_inverse_params(al) != be:
            raise InconsistentData("β is not the Toeplitz inverse of α")
        p, p1, p2 = arr
        if d >= 2:
            if seed * al[d] * p2[0] != -al[d - 1] * p[0] / p1[d - 1]:
                raise InconsistentData("endpoint identity for α fails")
            if -seed * be[d] * p2[d - 1] != -be[d - 1] * p[d - 1] / p1[0]:
                raise InconsistentData("endpoint identity for β fails")
        out.append((tuple(al), tuple(be)))
    return tuple(out)


def trace_data_from_parameters(parameter_array, alpha1) -> tuple:
    """a_{d-i} = α'_1(φ''_{i+1} - φ''_i) and its cyclic versions."""
    phi, phi1, phi2 = parameter_array
    F = Scalar(alpha1, phi[0].field).field if phi else None
    d = len(phi)
    if d == 0:
        return ((Scalar(0),),) * 3
    alpha1 = Scalar(alpha1, F)
    al = alpha1
    al1 = alpha1 * phi1[0] / phi[0]
    al2 = alpha1 * phi2[0] / phi[0]
    z = F.zero

    def build(seq, seed):
        res = [None] * (d + 1)
        for i in range(d + 1):
            res[d - i] = seed * (_ext(seq, i + 1, z) - _ext(seq, i, z))
        return tuple(res)

    # a uses (α', φ''), a' uses (α'', φ), a'' uses (α, φ')
    return build(phi2, al1), build(phi, al2), build(phi1, al)


def triple_from_data(phi, phi1, phi2, a, field: FieldSpec) -> tuple:
    """(A, B, C) in the (A,B)-basis from the parameter array and trace data a."""
    phi = [Scalar(x, field) for x in phi]
    phi1 = [Scalar(x, field) for x in phi1]
    phi2 = [Scalar(x, field) for x in phi2]
    a = [Scalar(x, field) for x in a]
    d = len(phi)
    n = d + 1

    def c_entry(i, j):
        if j == i - 1:
            return phi2[d - i]  # φ''_{d-i+1}
        if j == i:
            return a[i]
        if j == i + 1:
            return phi1[d - j] / phi[j - 1]  # φ'_{d-j+1}/φ_j at (j-1, j)
        return 0

    A = Matrix.from_function(n, lambda i, j: 1 if j == i + 1 else 0, field)
    B = Matrix.from_function(n, lambda i, j: phi[i - 1] if j == i - 1 and i >= 1 else 0, field)
    C = Matrix.from_function(n, c_entry, field)
    return A, B, C


# identity suites; each returns {identity id: holds}


def _seq(xs, zero):
    """0-based list lookup that is zero past the end."""
    return lambda k: xs[k] if 0 <= k < len(xs) else zero


def idempotent_formula_checks(t: LRTriple) -> dict:
    out = {}
    for name, pair in zip(("E", "E1", "E2"), t.pairs):
        left, right = idempotent_formulas(pair)
        out[f"idempotent.{name}.left"] = list(left) == list(pair.idempotents)
        out[f"idempotent.{name}.right"] = list(right) == list(pair.idempotents)
    return out


def trace_identity_checks(t: LRTriple) -> dict:
    d, F = t.d, t.field
    z = F.zero
    out = {}
    f = [lambda i, w=w: t.f(w, i) for w in range(3)]
    (al, be), (al1, be1), (al2, be2) = t.toeplitz_data
    toe = {0: (_seq(al, z), _seq(be, z)), 1: (_seq(al1, z), _seq(be1, z)), 2: (_seq(al2, z), _seq(be2, z))}
    a = t.trace_data

    # trace data through Toeplitz data; (target, toeplitz index, sequence index)
    rows = [(0, 1, 2), (0, 2, 1), (1, 2, 0), (1, 0, 2), (2, 0, 1), (2, 1, 0)]
    for k, (tgt, w, s) in enumerate(rows):
        x, y = toe[w]
        out[f"trace_data.{k}"] = all(
            a[tgt][d - i] == x(0) * y(1) * f[s](i) + x(1) * y(0) * f[s](i + 1) for i in range(d + 1))

    # three-term identities: (numerator, denominator, toeplitz, sequence)
    rows = [(1, 2, 1, 0), (2, 0, 2, 1), (0, 1, 0, 2), (2, 1, 2, 0), (0, 2, 0, 1), (1, 0, 1, 2)]
    for k, (nu, de, w, s) in enumerate(rows):
        x, y = toe[w]
        out[f"three_term.{k}"] = all(
            f[nu](i) / f[de](d - i + 1)
            == x(0) * y(2) * f[s](i - 1) + x(1) * y(1) * f[s](i) + x(2) * y(0) * f[s](i + 1)
            for i in range(1, d + 1))

    rows = [(1, 0), (2, 1), (0, 2), (2, 0), (0, 1), (1, 2)]
    for k, (w, s) in enumerate(rows):
        x, y = toe[w]
        ok = True
        for r in range(3, d + 2):
            for i in range(d - r + 2):
                acc = z
                for m in range(r + 1):
                    acc = acc + x(m) * y(r - m) * f[s](i + m)
                ok = ok and not acc
        out[f"long.{k}"] = ok

    A, B, C = t.A, t.B, t.C
    prods = {"AB": A * B, "BA": B * A, "BC": B * C, "CB": C * B, "CA": C * A, "AC": A * C}
    # entry (w, shift): φ^{(w)}_{i+1-shift} style lookups,<0 means reversed index
    table = {
        "E": {"AB": (0, "i+1"), "BA": (0, "i"), "BC": (1, "d-i+1"), "CB": (1, "d-i"),
              "CA": (2, "d-i+1"), "AC": (2, "d-i")},
        "E1": {"AB": (0, "d-i+1"), "BA": (0, "d-i"), "BC": (1, "i+1"), "CB": (1, "i"),
               "CA": (2, "d-i+1"), "AC": (2, "d-i")},
        "E2": {"AB": (0, "d-i+1"), "BA": (0, "d-i"), "BC": (1, "d-i+1"), "CB": (1, "d-i"),
               "CA": (2, "i+1"), "AC": (2, "i")},
    }
    index = {"i+1": lambda i: i + 1, "i": lambda i: i, "d-i+1": lambda i: d - i + 1, "d-i": lambda i: d - i}
    idem = {"E": t.E, "E1": t.E1, "E2": t.E2}
    for en, rowmap in table.items():
        for pn, (w, key) in rowmap.items():
            out[f"trace_table.{en}.{pn}"] = all(
                (prods[pn] * idem[en][i]).trace() == f[w](index[key](i)) for i in range(d + 1))

    E, E1, E2 = t.E, t.E1, t.E2
    rng = range(d + 1)
    zero = lambda M: M.is_zero()
    out["zero_products.low"] = all(
        zero(X[i] * Y[j]) for X, Y in ((E, E1), (E1, E2), (E2, E)) for i in rng for j in rng if i + j < d)
    out["zero_products.high"] = all(
        zero(Y[j] * X[i]) for X, Y in ((E, E1), (E1, E2), (E2, E)) for i in rng for j in rng if i + j > d)
    for k, (X, Y) in enumerate(((E, E1), (E, E2), (E1, E2), (E1, E), (E2, E), (E2, E1))):
        out[f"triple_product.{k}"] = all(
            X[i] * Y[j] * X[i] == (X[i] if i + j == d else X[i].scale(F.zero)) for i in rng for j in rng)
    return out


def toeplitz_checks(t: LRTriple) -> dict:
    out = {}
    if t.d >= 1:
        try:
            rec = toeplitz_data_via_recursion(t.parameter_array, t.alpha[1])
            out["toeplitz.recursion"] = rec == t.toeplitz_data
        except (InconsistentData, ZeroDivisionError):
            out["toeplitz.recursion"] = False
        out["trace_data.from_parameters"] = trace_data_from_parameters(t.parameter_array, t.alpha[1]) == t.trace_data
    (al, be), (al1, be1), (al2, be2) = t.toeplitz_data
    out["toeplitz.inverse"] = all(
        tuple(toeplitz_inverse_params(list(x))) == y for x, y in ((al, be), (al1, be1), (al2, be2)))
    out["toeplitz.normalized"] = al[0] == al1[0] == al2[0] == 1 and all(
        y[1] == -x[1] for x, y in ((al, be), (al1, be1), (al2, be2)) if len(x) > 1)
    out["trace_data.sum"] = all(sum(seq, t.field.zero) == 0 for seq in t.trace_data)
    return out


def unipotent_checks(t: LRTriple) -> dict:
    d = t.d
    maps = t.unipotent_maps
    inv = t.unipotent_inverses()
    fwd_p, inv_p = t.unipotent_polynomials()
    E, E1, E2 = t.E, t.E1, t.E2
    out = {}
    for name, M, Mi, P, Pi in zip("ABC", maps, inv, fwd_p, inv_p):
        out[f"unipotent.{name}.polynomial"] = M == P
        out[f"unipotent.{name}.inverse_polynomial"] = Mi == Pi
        out[f"unipotent.{name}.inverse"] = M * Mi == t.I
    AA, BB, CC = maps
    out["unipotent.A.intertwines"] = all(AA * E2[i] == E[d - i] * AA for i in range(d + 1))
    out["unipotent.B.intertwines"] = all(BB * E[i] == E1[d - i] * BB for i in range(d + 1))
    out["unipotent.C.intertwines"] = all(CC * E1[i] == E2[d - i] * CC for i in range(d + 1))
    return out


def theta_checks(t: LRTriple) -> dict:
    d = t.d
    (al, be), (al1, be1), (al2, be2) = t.toeplitz_data
    E, E1, E2 = t.E, t.E1, t.E2
    th = t.theta
    Ad, Bd, Cd = t.A**d, t.B**d, t.C**d
    return {
        "theta.trace": t.theta_trace() == th,
        "theta.inverse_trace": (E[d] * E1[0] * E2[d] * E[0] * E1[d] * E2[0]).trace() == th.inverse(),
        "theta.ABC_trace": (Ad * Bd * Cd).trace() == th / (al[d] * al1[d] * al2[d]),
        "theta.CBA_trace": (Cd * Bd * Ad).trace() == (th * be[d] * be1[d] * be2[d]).inverse(),
    }


def rotator_checks(t: LRTriple) -> dict:
    out = {}
    d, th = t.d, t.theta
    E, E1, E2 = t.E, t.E1, t.E2
    rng = range(d + 1)
    if not t.is_bipartite:
        forms = t.rotator_forms()
        out["rotator.forms_agree"] = forms[0] == forms[1] == forms[2]
        W = forms[0]
        out["rotator.cube"] = W**3 == t.I.scale(th)
        out["rotator.E"] = all(E[i] * W == W * E1[i] for i in rng)
        out["rotator.E1"] = all(E1[i] * W == W * E2[i] for i in rng)
        out["rotator.E2"] = all(E2[i] * W == W * E[i] for i in rng)
        (al, _), (al1, _), (al2, _) = t.toeplitz_data
        A, B, C = t.A, t.B, t.C
        out["rotator.maps"] = (A * W * al1[1] == W * B * al2[1] and B * W * al2[1] == W * C * al[1]
                               and C * W * al[1] == W * A * al1[1])
        if t.is_equitable:
            out["rotator.equitable"] = A * W == W * B and B * W == W * C and C * W == W * A
    elif d >= 2:
        outs, ins = t.rotators_out_in_forms()
        out["rotator_out.forms_agree"] = outs[0] == outs[1] == outs[2]
        out["rotator_in.forms_agree"] = ins[0] == ins[1] == ins[2]
        Wo, Wi = outs[0], ins[0]
        J = t.projector
        K = t.I - J
        f = t.f
        rho = f(0, 1) * f(1, 1) * f(2, 1) / (f(0, d) * f(1, d) * f(2, d))
        out["rotator_out.cube"] = Wo**3 * J == J.scale(th)
        out["rotator_in.cube"] = Wi**3 * K == K.scale(th / rho)
        out["rotator.out_in_orthogonal"] = (Wo * Wi).is_zero() and (Wi * Wo).is_zero()
        for name, X, Y in (("E", E, E1), ("E1", E1, E2), ("E2", E2, E)):
            out[f"rotator_out.{name}"] = all(
                X[i] * Wo == Wo * Y[i] and (i % 2 == 0 or (X[i] * Wo).is_zero()) for i in rng)
            out[f"rotator_in.{name}"] = all(
                X[i] * Wi == Wi * Y[i] and (i % 2 == 1 or (X[i] * Wi).is_zero()) for i in rng)
        if t.is_equitable:
            A2, B2, C2 = t.A * t.A, t.B * t.B, t.C * t.C
            out["rotator_out.equitable"] = (A2 * Wo == Wo * B2 and B2 * Wo == Wo * C2
                                            and C2 * Wo == Wo * A2)
    return out


def cycle_checks(t: LRTriple) -> dict:
    try:
        t.twelve_cycle_check()
        return {"twelve_cycle": True}
    except IdentityViolated:
        return {"twelve_cycle": False}


def data_suite(t: LRTriple) -> dict:
    out = {}
    out.update(idempotent_formula_checks(t))
    out.update(trace_identity_checks(t))
    out.update(toeplitz_checks(t))
    return out


def rotator_suite(t: LRTriple) -> dict:
    out = {}
    out.update(unipotent_checks(t))
    out.update(theta_checks(t))
    out.update(rotator_checks(t))
    return out
