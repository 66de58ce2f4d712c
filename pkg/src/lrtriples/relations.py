"""Relation catalogues for the classified families and the sl2 / U_q(sl2) module structures."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactfield import Scalar
from .families import FamilyDescriptor
from .linalg import Matrix
from .lrpair import _roots_of_q_squared, weyl_kind
from .lrtriple import LRTriple


class FieldLacksQ(ValueError):
    pass


class BadCharacteristic(ValueError):
    pass


class NotQWeyl(ValueError):
    pass


@dataclass
class RelationReport:
    family: str
    checked: list = dc_field(default_factory=list)  # (id, holds)

    @property
    def all_hold(self) -> bool:
        return all(ok for _, ok in self.checked)

    @property
    def failures(self) -> list:
        return [rid for rid, ok in self.checked if not ok]

    def to_json(self) -> dict:
        return {"family": self.family,
                "results": [{"id": rid, "holds": ok} for rid, ok in self.checked]}


class _Ctx:
    """Maps and scalars a relation is evaluated against."""

    def __init__(self, t: LRTriple, A, B, C, r=None):
        self.t, self.A, self.B, self.C = t, A, B, C
        self.I = t.I
        self.F = t.field
        self.d = t.d
        self.r = r  # (ρ0, ρ0', ρ0'') rotated with the maps
        self._J = None

    @property
    def J(self):
        if self._J is None:
            self._J = self.t.projector
        return self._J

    def s(self, x) -> Scalar:
        return Scalar(x, self.F)


def _cyclic(ctx: _Ctx) -> list:
    """The three cyclic relabellings (A,B,C), (B,C,A), (C,A,B) with ρ's rotated alongside."""
    t = ctx.t
    r = ctx.r
    out = [ctx]
    A, B, C = ctx.A, ctx.B, ctx.C
    for k in (1, 2):
        maps = [(A, B, C), (B, C, A), (C, A, B)][k]
        rr = None if r is None else tuple(r[(k + m) % 3] for m in range(3))
        out.append(_Ctx(t, *maps, rr))
    return out


def _comm(X, Y):
    return X * Y - Y * X


# each catalogue entry: (id, lambda ctx -> (lhs, rhs)); cyclic entries are expanded to .1/.2/.3

def _nbg_q(q):
    qi = q.inverse()

    def cyc():
        return [
            ("aab", lambda c: (c.A * c.A * c.B - c.A * c.B * c.A * (q * (1 + q)) + c.B * c.A * c.A * q**3,
                               c.A * (q * (1 + q)))),
            ("abb", lambda c: (c.A * c.B * c.B - c.B * c.A * c.B * (q * (1 + q)) + c.B * c.B * c.A * q**3,
                               c.B * (q * (1 + q)))),
            ("left", lambda c: (c.A * (c.I + (c.B * c.C - c.C * c.B * q) * (1 - qi)),
                                c.B * q + c.C * qi + c.C * c.B * q - c.B * c.C * qi)),
            ("right", lambda c: ((c.I + (c.B * c.C - c.C * c.B * q) * (1 - qi)) * c.A,
                                 c.B * qi + c.C * q + c.C * c.B * q - c.B * c.C * qi)),
            ("triple", lambda c: (c.A * c.B * c.C - c.B * c.C * c.A + (c.C * c.B * c.A - c.A * c.C * c.B) * q,
                                  (c.B - c.C) * (1 + q))),
        ]

    def once(c):
        A, B, C, d = c.A, c.B, c.C, c.d
        lhs = ((A * B * C + B * C * A + C * A * B) * (1 + 2 * qi)
               - (C * B * A + A * C * B + B * A * C) * (1 + 2 * q))
        k = 3 * (q**d - 1) * (q ** (d + 2) - 1) / (q**d * (q - 1) ** 2)
        return lhs, (A + B + C) * (q - qi) - c.I.scale(k)

    return cyc(), [("sum", once)]


def _nbg_1():
    cyc = [
        ("aab", lambda c: (_comm(c.A, _comm(c.A, c.B)), c.A * 2)),
        ("bba", lambda c: (_comm(c.B, _comm(c.B, c.A)), c.B * 2)),
        ("linear", lambda c: (c.A, c.B + c.C - _comm(c.B, c.C))),
        ("bracket", lambda c: (_comm(c.A, _comm(c.B, c.C)), (c.B - c.C) * 2)),
    ]

    def once(c):
        A, B, C, d = c.A, c.B, c.C, c.d
        lhs = A * B * C + B * C * A + C * A * B - C * B * A - A * C * B - B * A * C
        return lhs, c.I.scale(-d * (d + 2))

    return cyc, [("sum", once)]


def _nbng(t_):
    def cyc():
        w = (1 - t_).inverse()
        return [
            ("aab", lambda c: ((c.A * c.A * c.B - c.B * c.A * c.A * t_) * w, -c.A)),
            ("abb", lambda c: ((c.A * c.B * c.B - c.B * c.B * c.A * t_) * w, -c.B)),
        ]

    def const(c):
        d = c.d
        return -(1 - t_ ** (-(d // 2))) * (1 - t_ ** (1 + d // 2)) / (1 - t_)

    w = (1 - t_).inverse()
    once = [
        ("abc", lambda c: ((c.A * c.B * c.C - c.C * c.B * c.A * t_) * w + c.A + c.C, c.I.scale(const(c)))),
        ("bca", lambda c: ((c.B * c.C * c.A - c.A * c.C * c.B * t_) * w + c.B + c.A, c.I.scale(const(c)))),
        ("cab", lambda c: ((c.C * c.A * c.B - c.B * c.A * c.C * t_) * w + c.C + c.B, c.I.scale(const(c)))),
    ]
    return cyc(), once


def _zero(c):
    return c.I.scale(c.F.zero)


def _bip(t_):
    """J-weighted suite; t_ = 1 gives the suite for the t = 1 and d = 2 families."""

    def rel(name, fn):
        return (name, lambda c: (fn(c), _zero(c)))

    def K(c):
        return c.I - c.J

    def r(c):
        return c.r

    one = t_ == 1

    def c_out(c):
        d = c.d
        if one:
            return c.s(-(d // 2))
        return (1 - t_ ** (-(d // 2))) * t_ / (1 - t_)

    def c_in(c):
        d = c.d
        if one:
            return c.s(-((d + 2) // 2))
        return (1 - t_ ** (-1 - d // 2)) * t_**2 / (1 - t_)

    cyc = [
        rel("ab.out", lambda c: (c.A * c.B * r(c)[0] + c.B * c.A * (r(c)[1] * r(c)[2]) - c.I.scale(c_out(c))) * c.J),
        rel("ab.in", lambda c: (c.A * c.B * (r(c)[1] * r(c)[2]) + c.B * c.A * (r(c)[0] * t_) - c.I.scale(c_in(c))) * K(c)),
        rel("aab.out", lambda c: (c.A * c.A * c.B - c.B * c.A * c.A * t_ - c.A * (t_ / r(c)[0])) * c.J),
        rel("aab.in", lambda c: c.J * (c.A * c.A * c.B - c.B * c.A * c.A * t_ - c.A * r(c)[0])),
        rel("abb.in", lambda c: c.J * (c.A * c.B * c.B - c.B * c.B * c.A * t_ - c.B * (t_ / r(c)[0]))),
        rel("abb.out", lambda c: (c.A * c.B * c.B - c.B * c.B * c.A * t_ - c.B * r(c)[0]) * c.J),
        ("aaab", lambda c: (c.A**3 * c.B + c.A * c.A * c.B * c.A - (c.A * c.B * c.A * c.A + c.B * c.A**3) * t_,
                            c.A * c.A * (r(c)[0] + t_ / r(c)[0]))),
        ("abbb", lambda c: (c.A * c.B**3 + c.B * c.A * c.B * c.B - (c.B * c.B * c.A * c.B + c.B**3 * c.A) * t_,
                            c.B * c.B * (r(c)[0] + t_ / r(c)[0]))),
    ]
    if one:
        cyc += [
            rel("linear.out", lambda c: (c.A - c.B * r(c)[0] - c.C / r(c)[2]) * c.J),
            rel("linear.in", lambda c: c.J * (c.A - c.B / r(c)[0] - c.C * r(c)[2])),
        ]
    else:
        w = (1 - t_).inverse()
        cyc += [
            rel("abc.out", lambda c: (c.A * c.B * c.C - (c.A * t_ - c.B * (r(c)[0] * t_) + c.C * (r(c)[0] * r(c)[1]))
                                      * (w / r(c)[1])) * c.J),
            rel("cba.out", lambda c: (c.C * c.B * c.A - (c.A * t_ - c.B * r(c)[0] + c.C * (r(c)[0] * r(c)[1]))
                                      * (w / r(c)[1])) * c.J),
            rel("abc.in", lambda c: c.J * (c.A * c.B * c.C - (c.A * (r(c)[0] * r(c)[1]) - c.B * (r(c)[1] * t_) + c.C * t_)
                                           * (w / r(c)[0]))),
            rel("cba.in", lambda c: c.J * (c.C * c.B * c.A - (c.A * (r(c)[0] * r(c)[1]) - c.B * r(c)[1] + c.C * t_)
                                           * (w / r(c)[0]))),
            rel("comm.out", lambda c: (c.A * c.B * c.C - c.C * c.B * c.A - c.B * (r(c)[0] / r(c)[1])) * c.J),
            rel("comm.in", lambda c: c.J * (c.A * c.B * c.C - c.C * c.B * c.A - c.B * (r(c)[1] / r(c)[0]))),
        ]
    return cyc, []


def _weyl():
    return [("comm", lambda c: (_comm(c.A, c.B), c.I))], [
        ("sum", lambda c: (c.A + c.B + c.C, c.I.scale(c.t.alpha[1] if c.d >= 1 else c.F.zero)))]


def _qweyl(q):
    qi = q.inverse()
    return [("comm", lambda c: (c.A * c.B * q - c.B * c.A * qi, c.I.scale(q - qi)))], []


def catalogue(desc: FamilyDescriptor):
    """(prefix, cyclic relations, one-off relations, needs ρ's) for a family."""
    tag, F = desc.tag, desc.field
    if tag == "nbg":
        return "nbgq", *_nbg_q(desc["q"]), False
    if tag == "nbg1":
        return "nbg1", *_nbg_1(), False
    if tag == "nbng":
        return "nbng", *_nbng(desc["t"]), False
    if tag == "b":
        return "bt", *_bip(desc["t"]), True
    if tag in ("b1", "b2"):
        return tag, *_bip(F.one), True
    if tag == "weyl":
        return "weyl", *_weyl(), False
    if tag == "qweyl":
        return "qweyl", *_qweyl(desc["q"]), False
    return tag, [], [], False


def verify_relations(t: LRTriple, desc: FamilyDescriptor) -> RelationReport:
    prefix, cyc, once, needs_r = catalogue(desc)
    r = tuple(desc[k] for k in ("rho0", "rho0p", "rho0pp")) if needs_r else None
    base = _Ctx(t, t.A, t.B, t.C, r)
    report = RelationReport(str(desc))
    for name, fn in cyc:
        for k, c in enumerate(_cyclic(base), start=1):
            lhs, rhs = fn(c)
            report.checked.append((f"{prefix}.{name}.{k}", lhs == rhs))
    for name, fn in once:
        lhs, rhs = fn(base)
        report.checked.append((f"{prefix}.{name}", lhs == rhs))
    return report


# modules


def _diag_sum(idem, weights) -> Matrix:
    out = Matrix.zero(idem[0].n, idem[0].field)
    for e, w in zip(idem, weights):
        out = out + e.scale(w)
    return out


def _q_from_family(desc: FamilyDescriptor, q=None) -> Scalar:
    F = desc.field
    if q is not None:
        q = Scalar(q, F)
        if desc.tag != "b2" and (q * q).inverse() != desc["q" if desc.tag == "nbg" else "t"]:
            raise FieldLacksQ("q^-2 does not match the family parameter")
        return q
    if desc.tag == "b2":
        raise FieldLacksQ("d = 2 bipartite family needs q supplied")
    param = desc["q" if desc.tag == "nbg" else "t"]
    roots = [r for r in _roots_of_q_squared(param.inverse()) if r * r != 1]
    if not roots:
        raise FieldLacksQ(f"no q with q^-2 = {param} in {F}")
    return roots[0]


def uq_module(t: LRTriple, desc: FamilyDescriptor, q=None) -> tuple:
    """(X, Y, Z) for an NBG triple with parameter q^-2."""
    if desc.tag != "nbg":
        raise FieldLacksQ("uq_module needs an nbg family")
    q = _q_from_family(desc, q)
    w = [q ** (t.d - 2 * i) for i in range(t.d + 1)]
    return _diag_sum(t.E1, w), _diag_sum(t.E2, w), _diag_sum(t.E, w)


def uq_module_checks(t: LRTriple, desc: FamilyDescriptor, q=None) -> dict:
    q = _q_from_family(desc, q)
    X, Y, Z = uq_module(t, desc, q)
    I, d = t.I, t.d
    qi = q.inverse()
    c = (q - qi).inverse()
    out = {}
    for name, (P, Q) in zip(("xy", "yz", "zx"), ((X, Y), (Y, Z), (Z, X))):
        out[f"uq.equitable.{name}"] = (P * Q * q - Q * P * qi) * c == I
    n = {}
    for name, (P, Q) in zip("xyz", ((Y, Z), (Z, X), (X, Y))):
        left = (I - P * Q) * (q * c)
        right = (I - Q * P) * (qi * c)
        out[f"uq.n{name}.two_forms"] = left == right
        n[name] = left
    out["uq.A_is_nx"] = t.A == n["x"]
    out["uq.B_is_ny"] = t.B == n["y"]
    out["uq.C_is_nz"] = t.C == n["z"]
    q2 = q * q
    for P, nxt, prv, name in ((X, "y", "z", "x"), (Y, "z", "x", "y"), (Z, "x", "y", "z")):
        out[f"uq.{name}.n_{nxt}"] = P * n[nxt] == n[nxt] * P * q2
        out[f"uq.{name}.n_{prv}"] = P * n[prv] == n[prv] * P * q2.inverse()
    den = (q ** (d + 1) + q ** (-d - 1)).inverse()
    for name, M, (P, Q) in (("z", Z, (t.A, t.B)), ("x", X, (t.B, t.C)), ("y", Y, (t.C, t.A))):
        closed = (I.scale(q + qi) - (P * Q * q2 - Q * P * q2.inverse()) * (q - qi)) * den
        out[f"uq.{name}.closed_form"] = M == closed
    out["uq.invertible"] = all(M.rank() == M.n for M in (X, Y, Z))
    return out


def uq_module_bipartite(t: LRTriple, desc: FamilyDescriptor, q=None) -> tuple:
    if desc.tag not in ("b", "b2"):
        raise FieldLacksQ("uq_module_bipartite needs a b or b2 family")
    q = _q_from_family(desc, q)
    h = t.d // 2
    w = [q ** (h - i) for i in range(t.d + 1)]
    return _diag_sum(t.E1, w), _diag_sum(t.E2, w), _diag_sum(t.E, w)


def uq_module_bipartite_checks(t: LRTriple, desc: FamilyDescriptor, q=None) -> dict:
    q = _q_from_family(desc, q)
    X, Y, Z = uq_module_bipartite(t, desc, q)
    I, d, J = t.I, t.d, t.projector
    K = I - J
    A, B, C = t.A, t.B, t.C
    qi = q.inverse()
    c = (q - qi).inverse()
    h = d // 2
    out = {}
    for name, (P, Q) in zip(("xy", "yz", "zx"), ((X, Y), (Y, Z), (Z, X))):
        out[f"uqb.equitable.{name}"] = (P * Q * q - Q * P * qi) * c == I
    n = {}
    for name, (P, Q) in zip("xyz", ((Y, Z), (Z, X), (X, Y))):
        n[name] = (I - P * Q) * (q * c)
        out[f"uqb.n{name}.two_forms"] = n[name] == (I - Q * P) * (qi * c)
    out["uqb.A2_is_nx"] = A * A == n["x"]
    out["uqb.B2_is_ny"] = B * B == n["y"]
    out["uqb.C2_is_nz"] = C * C == n["z"]
    out["uqb.xB"] = X * B == B * X * q
    out["uqb.yC"] = Y * C == C * Y * q
    out["uqb.zA"] = Z * A == A * Z * q
    out["uqb.yA"] = Y * A == A * Y * qi
    out["uqb.zB"] = Z * B == B * Z * qi
    out["uqb.xC"] = X * C == C * X * qi
    out["uqb.J_commutes"] = J * X == X * J and J * Y == Y * J and J * Z == Z * J
    r = [desc[k] for k in ("rho0", "rho0p", "rho0pp")]
    for name, M, (P, Q), rr in (("x", X, (B, C), r[1]), ("y", Y, (C, A), r[2]), ("z", Z, (A, B), r[0])):
        closed = ((I.scale(q ** (-h)) - P * Q * (q ** (1 - h) * (q - qi) * rr)) * J
                  + (I.scale(q ** (1 + h)) - P * Q * (q**h * (q - qi) / rr)) * K)
        out[f"uqb.{name}.closed_form"] = M == closed
    return out


def sl2_module(t: LRTriple) -> tuple:
    if t.field.char == 2:
        raise BadCharacteristic("needs Char != 2")
    d = t.d
    w = [t.field(2 * i - d) for i in range(d + 1)]
    return _diag_sum(t.E1, w), _diag_sum(t.E2, w), _diag_sum(t.E, w)


def sl2_module_checks(t: LRTriple) -> dict:
    X, Y, Z = sl2_module(t)
    A, B, C = t.A, t.B, t.C
    half = t.field(2).inverse()
    out = {
        "sl2.x_closed_form": X == B + C - A,
        "sl2.y_closed_form": Y == C + A - B,
        "sl2.z_closed_form": Z == A + B - C,
    }
    for name, (P, Q) in zip(("xy", "yz", "zx"), ((X, Y), (Y, Z), (Z, X))):
        out[f"sl2.bracket.{name}"] = _comm(P, Q) == (P + Q) * 2
    out["sl2.A"] = A == (Y + Z) * half
    out["sl2.B"] = B == (Z + X) * half
    out["sl2.C"] = C == (X + Y) * half
    return out


def sl2_module_bipartite(t: LRTriple) -> tuple:
    if t.field.char == 2:
        raise BadCharacteristic("needs Char != 2")
    d = t.d
    h = t.field(d) / 2
    w = [t.field(i) - h for i in range(d + 1)]
    return _diag_sum(t.E1, w), _diag_sum(t.E2, w), _diag_sum(t.E, w)


def sl2_module_bipartite_checks(t: LRTriple, desc: FamilyDescriptor) -> dict:
    X, Y, Z = sl2_module_bipartite(t)
    A, B, C, I, J = t.A, t.B, t.C, t.I, t.projector
    K = I - J
    F, d = t.field, t.d
    half = F(2).inverse()
    h, h2 = F(d) * half, F(d + 2) * half
    r = [desc[k] for k in ("rho0", "rho0p", "rho0pp")]
    out = {}
    for name, M, (P, Q), rr in (("x", X, (B, C), r[1]), ("y", Y, (C, A), r[2]), ("z", Z, (A, B), r[0])):
        closed = (P * Q * (2 * rr) + I.scale(h)) * J + (P * Q * (2 / rr) - I.scale(h2)) * K
        out[f"sl2b.{name}.closed_form"] = M == closed
    for name, (P, Q) in zip(("xy", "yz", "zx"), ((X, Y), (Y, Z), (Z, X))):
        out[f"sl2b.bracket.{name}"] = _comm(P, Q) == (P + Q) * 2
    out["sl2b.A2"] = A * A == (Y + Z) * half
    out["sl2b.B2"] = B * B == (Z + X) * half
    out["sl2b.C2"] = C * C == (X + Y) * half
    out["sl2b.Az"] = _comm(A, Z) == A
    out["sl2b.Bx"] = _comm(B, X) == B
    out["sl2b.Cy"] = _comm(C, Y) == C
    out["sl2b.J_commutes"] = all(_comm(J, M).is_zero() for M in (X, Y, Z))
    quarter = F(4).inverse()
    dd = F(d)
    out["sl2b.AB.out"] = ((A * B - (Z * 2 - I.scale(dd)) * (quarter / r[0])) * J).is_zero()
    out["sl2b.BA.out"] = ((B * A - (Z * 2 + I.scale(dd)) * (r[0] * quarter)) * J).is_zero()
    out["sl2b.AB.in"] = ((A * B - (Z * 2 + I.scale(dd + 2)) * (r[0] * quarter)) * K).is_zero()
    out["sl2b.BA.in"] = ((B * A - (Z * 2 - I.scale(dd + 2)) * (quarter / r[0])) * K).is_zero()
    return out


def casimir_check(t: LRTriple, q=None) -> Scalar:
    """Common value of the six Casimir-type expressions, as a scalar."""
    kind, qs = weyl_kind(t.pairs[0])
    if kind != "QWeyl":
        raise NotQWeyl("the (A,B) pair is not of q-Weyl type")
    q = qs[0] if q is None else Scalar(q, t.field)
    if q not in qs:
        raise NotQWeyl(f"{q} is not a q-Weyl parameter for this pair")
    qi = q.inverse()
    A, B, C = t.A, t.B, t.C
    exprs = [
        A * q + B * qi + C * q - A * B * C * q,
        A * qi + B * q + C * qi - C * B * A * qi,
        B * q + C * qi + A * q - B * C * A * q,
        B * qi + C * q + A * qi - A * C * B * qi,
        C * q + A * qi + B * q - C * A * B * q,
        C * qi + A * q + B * qi - B * A * C * qi,
    ]
    value = t.alpha[1] * (q - qi)
    target = t.I.scale(value)
    for k, M in enumerate(exprs):
        if M != target:
            raise AssertionError(f"Casimir expression {k} differs from α₁(q - q⁻¹)I")
    return value


def exp_q(X: Matrix, q, degree=None) -> Matrix:
    """Σ Xⁱ / ([1]_q [2]_q ⋯ [i]_q), truncated at ``degree`` (default: size of X)."""
    F = X.field
    q = Scalar(q, F)
    degree = X.n if degree is None else degree
    out = Matrix.identity(X.n, F)
    P = Matrix.identity(X.n, F)
    den = F.one
    for i in range(1, degree + 1):
        P = P * X
        if P.is_zero():
            break
        den = den * sum((q**k for k in range(i)), F.zero)
        out = out + P / den
    return out


def exp_coefficients(q: Scalar, n: int) -> list:
    F = q.field
    coeffs, den = [F.one], F.one
    for i in range(1, n + 1):
        den = den * sum((q**k for k in range(i)), F.zero)
        coeffs.append(den.inverse())
    return coeffs


def exp_identity_check(t: LRTriple, desc: FamilyDescriptor) -> bool:
    F = t.field
    one = F.one
    tag = desc.tag
    maps = (t.A, t.B, t.C)
    uni = t.unipotent_maps
    inv = t.unipotent_inverses()
    for X, U, Ui in zip(maps, uni, inv):
        if tag == "nbg":
            q = desc["q"]
            fwd, back = exp_q(X, q), exp_q(-X, q.inverse())
        elif tag == "nbg1":
            fwd, back = exp_q(X, one), exp_q(-X, one)
        elif tag == "nbng":
            s = desc["t"]
            X2 = X * X
            fwd = (t.I + X) * exp_q(X2 / (1 - s), s)
            back = (t.I - X) * exp_q(X2 / (1 - s.inverse()), s.inverse())
        elif tag in ("b", "b1", "b2"):
            s = desc["t"] if tag == "b" else one
            fwd, back = exp_q(X * X, s), exp_q(-(X * X), s.inverse())
        else:
            raise ValueError(f"no exponential identity for {tag}")
        if fwd != U or back != Ui:
            return False
    # term-by-term agreement with the Toeplitz data
    al = t.alpha
    d = t.d
    if tag in ("nbg", "nbg1"):
        q = desc["q"] if tag == "nbg" else one
        return list(al) == exp_coefficients(q, d)
    if tag in ("b", "b1", "b2"):
        s = desc["t"] if tag == "b" else one
        c = exp_coefficients(s, d // 2)
        return all(al[i] == (c[i // 2] if i % 2 == 0 else 0) for i in range(d + 1))
    if tag == "nbng":
        s = desc["t"]
        c = exp_coefficients(s, d // 2)
        # α_{2i} = 1/((1-t)(1-t²)⋯(1-t^i)) and α_{2i+1} = α_{2i}
        ok = True
        for i in range(d // 2 + 1):
            want = F.one
            for k in range(1, i + 1):
                want = want / (1 - s**k)
            ok = ok and al[2 * i] == want and (2 * i + 1 > d or al[2 * i + 1] == want)
        return ok
    return True


def module_checks(t: LRTriple, desc: FamilyDescriptor, q=None) -> dict:
    """Whichever module structure applies to the family; empty when none does."""
    tag = desc.tag
    try:
        if tag == "nbg":
            return uq_module_checks(t, desc, q)
        if tag == "b" or (tag == "b2" and q is not None):
            return uq_module_bipartite_checks(t, desc, q)
        if tag == "nbg1" and t.field.char != 2:
            return sl2_module_checks(t)
        if tag in ("b1", "b2") and t.field.char != 2:
            return sl2_module_bipartite_checks(t, desc)
        if tag == "qweyl":
            try:
                casimir_check(t, desc["q"])
                return {"casimir": True}
            except AssertionError:
                return {"casimir": False}
    except FieldLacksQ:
        return {}
    return {}
