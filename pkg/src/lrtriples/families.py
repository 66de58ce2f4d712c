"""Constructors for the classified families, normalization and classification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactfield import (
    QQ,
    FieldSpec,
    GF,
    NoSuchRoot,
    Scalar,
    characteristic_ok,
    find_root_of_unity,
    is_prime,
    multiplicative_order,
    parse_scalar,
    smallest_prime_with_root,
)
from .linalg import Matrix, kernel
from .lrpair import NotRecognized, _roots_of_q_squared, product
from .lrtriple import (
    LRTriple,
    NotEquitable,
    recognize_lr_triple,
    triple_from_data,
)


class BadParameters(ValueError):
    pass


class FieldUnsupported(ValueError):
    pass


class BadCharacteristic(FieldUnsupported):
    pass


class NotStandard(BadParameters):
    pass


class NoSquareRoot(FieldUnsupported):
    pass


class NotNormalized(ValueError):
    pass


class UnclassifiableInconsistency(RuntimeError):
    pass


# tag -> ordered parameter names (besides d)
PARAMS = {
    "trivial": (),
    "d1": (),
    "nbwp": ("j", "q"),
    "nbwm": ("j", "q"),
    "nbwmt": ("t",),
    "nbg": ("q",),
    "nbg1": (),
    "nbng": ("t",),
    "b": ("t", "rho0", "rho0p", "rho0pp"),
    "b1": ("rho0", "rho0p", "rho0pp"),
    "b2": ("rho0", "rho0p", "rho0pp"),
    "weyl": (),
    "qweyl": ("j", "q"),
}
INTEGER_PARAMS = {"j"}
NORMALIZED_TAGS = set(PARAMS) - {"weyl", "qweyl"}


@dataclass(frozen=True)
class FamilyDescriptor:
    tag: str
    d: int
    params: tuple = ()
    field: FieldSpec = QQ

    def __post_init__(self):
        if self.tag not in PARAMS:
            raise BadParameters(f"unknown family {self.tag!r}")

    def __getitem__(self, name):
        for k, v in self.params:
            if k == name:
                return v
        raise KeyError(name)

    def get(self, name, default=None):
        try:
            return self[name]
        except KeyError:
            return default

    def __str__(self):
        parts = [f"d={self.d}"] + [f"{k}={v}" for k, v in self.params]
        return f"{self.tag}:" + ",".join(parts)

    def to_json(self) -> dict:
        out = {"tag": self.tag, "d": self.d, "field": self.field.to_json()}
        for k, v in self.params:
            out[k] = v if isinstance(v, int) else v.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FamilyDescriptor":
        field = FieldSpec.from_json(obj.get("field", {"kind": "q"}))
        text = f"{obj['tag']}:d={obj['d']}" + "".join(
            f",{k}={obj[k]}" for k in PARAMS.get(obj["tag"], ()) if k in obj)
        return parse_descriptor(text, field)


def make(tag: str, d: int, field: FieldSpec = QQ, **params) -> FamilyDescriptor:
    ordered = []
    for name in PARAMS[tag]:
        if name not in params:
            continue
        v = params[name]
        ordered.append((name, int(v) if name in INTEGER_PARAMS else Scalar(v, field)))
    return FamilyDescriptor(tag, d, tuple(ordered), field)


def auto_field(tag: str, d: int) -> FieldSpec:
    """Smallest prime field containing the roots of unity the family needs; ℚ otherwise."""
    if tag in ("nbwp", "nbwm", "qweyl"):
        return GF(smallest_prime_with_root(2 * d + 2, exclude=(2,)))
    if tag == "nbwmt":
        return GF(smallest_prime_with_root(d + 1, exclude=(2,)))
    if tag == "weyl":
        return GF(d + 1) if is_prime(d + 1) else QQ
    return QQ


def parse_descriptor(text: str, field: FieldSpec | None = None) -> FamilyDescriptor:
    """Parse ``tag:d=4,q=2``. Missing roots of unity are filled with the smallest witness
    and a missing ρ''_0 is solved from the product constraint."""
    text = text.strip()
    tag, _, rest = text.partition(":")
    tag = tag.strip().lower()
    if tag not in PARAMS:
        raise BadParameters(f"unknown family {tag!r}")
    raw = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, val = item.partition("=")
        if not eq:
            raise BadParameters(f"malformed parameter {item!r}")
        raw[key.strip()] = val.strip()
    defaults = {"trivial": 0, "d1": 1, "b2": 2}
    if "d" in raw:
        d = int(raw.pop("d"))
    elif tag in defaults:
        d = defaults[tag]
    else:
        raise BadParameters("missing d")
    unknown = set(raw) - set(PARAMS[tag])
    if unknown:
        raise BadParameters(f"unknown parameters {sorted(unknown)}")
    if field is None:
        field = auto_field(tag, d)
    params = {}
    for k, v in raw.items():
        try:
            params[k] = int(v) if k in INTEGER_PARAMS else parse_scalar(v, field)
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParameters(f"bad value for {k}: {v!r}") from exc
    root_order = {"nbwp": 2 * d + 2 if field.char != 2 else d + 1, "nbwm": 2 * d + 2,
                  "qweyl": 2 * d + 2, "nbwmt": d + 1}
    for name in ("q", "t"):
        if name in PARAMS[tag] and name not in params and tag in root_order:
            try:
                params[name] = find_root_of_unity(field, root_order[tag])
            except NoSuchRoot as exc:
                raise FieldUnsupported(str(exc)) from exc
    if tag in ("b", "b1", "b2") and "rho0pp" not in params and {"rho0", "rho0p"} <= set(params):
        t = params.get("t", field.one)
        target = -(t ** (1 - d // 2)) if tag == "b" else field(-1)
        params["rho0pp"] = target / (params["rho0"] * params["rho0p"])
    return make(tag, d, field, **params)


# parameter arrays


def _nb_trace(phi, F) -> list:
    d = len(phi)
    ext = lambda i: phi[i - 1] if 1 <= i <= d else F.zero
    return [ext(d - i + 1) - ext(d - i) for i in range(d + 1)]


def _nbweyl_phi(d, j, q):
    e = q ** (2 * j + 1)
    k = (1 + e) ** 2 / (e * (q - q.inverse()) ** 2)
    return [k * (1 - q ** (-2 * i)) for i in range(1, d + 1)]


def _b_phi(d, t, r):
    F = r.field
    out = []
    for i in range(1, d + 1):
        if i % 2 == 0:
            out.append(r * (1 - t ** (i // 2)) / (1 - t))
        else:
            out.append((t / r) * (1 - t ** ((i - d - 1) // 2)) / (1 - t))
    return out


def _b1_phi(d, r):
    half = Scalar(Fraction(1, 2), r.field)
    return [r * i * half if i % 2 == 0 else (i - d - 1) * half / r for i in range(1, d + 1)]


def _order_is(x: Scalar, n: int) -> bool:
    return multiplicative_order(x) == n


def _require(cond, exc, msg):
    if not cond:
        raise exc(msg)


def validate(desc: FamilyDescriptor) -> None:
    tag, d, F = desc.tag, desc.d, desc.field
    g = desc.get
    if tag == "trivial":
        _require(d == 0, BadParameters, "trivial needs d=0")
    elif tag == "d1":
        _require(d == 1, BadParameters, "d1 needs d=1")
    elif tag == "nbwp":
        _require(d >= 2 and d % 2 == 0, BadParameters, "needs even d >= 2")
        _require(0 <= g("j") < d / 2, BadParameters, "needs 0 <= j < d/2")
        n = d + 1 if F.char == 2 else 2 * d + 2
        _require(F.p is not None, FieldUnsupported, "needs a prime field")
        _require(_order_is(g("q"), n), BadParameters, f"q must have order {n}")
    elif tag == "nbwm":
        _require(characteristic_ok(F, "not_two"), BadCharacteristic, "needs Char != 2")
        _require(d >= 3 and d % 2 == 1, BadParameters, "needs odd d >= 3")
        _require(0 <= g("j") < (d - 1) / 4, BadParameters, "needs 0 <= j < (d-1)/4")
        _require(F.p is not None, FieldUnsupported, "needs a prime field")
        _require(_order_is(g("q"), 2 * d + 2), BadParameters, "q must have order 2d+2")
    elif tag == "nbwmt":
        _require(characteristic_ok(F, "not_two"), BadCharacteristic, "needs Char != 2")
        _require(d >= 5 and d % 4 == 1, BadParameters, "needs d >= 5, d = 1 mod 4")
        _require(F.p is not None, FieldUnsupported, "needs a prime field")
        _require(_order_is(g("t"), d + 1), BadParameters, "t must have order d+1")
    elif tag == "nbg":
        q = g("q")
        _require(d >= 2, BadParameters, "needs d >= 2")
        _require(q is not None and q, BadParameters, "needs nonzero q")
        _require(all(q**i != 1 for i in range(1, d + 1)), BadParameters, "q^i = 1 for some i <= d")
        _require(q ** (d + 1) != -1, BadParameters, "q^(d+1) = -1")
    elif tag == "nbg1":
        _require(d >= 2, BadParameters, "needs d >= 2")
        _require(characteristic_ok(F, "zero_or_greater", d), BadCharacteristic, "needs Char 0 or > d")
    elif tag == "nbng":
        t = g("t")
        _require(d >= 4 and d % 2 == 0, BadParameters, "needs even d >= 4")
        _require(t is not None and t, BadParameters, "needs nonzero t")
        _require(all(t**i != 1 for i in range(1, d // 2 + 1)), BadParameters, "t^i = 1 for some i <= d/2")
        _require(t ** (d + 1) != 1, BadParameters, "t^(d+1) = 1")
    elif tag in ("b", "b1", "b2"):
        rs = [g(k) for k in ("rho0", "rho0p", "rho0pp")]
        _require(all(r is not None and r for r in rs), BadParameters, "needs nonzero rho0, rho0p, rho0pp")
        prod = rs[0] * rs[1] * rs[2]
        if tag == "b":
            t = g("t")
            _require(d >= 4 and d % 2 == 0, BadParameters, "needs even d >= 4")
            _require(t is not None and t, BadParameters, "needs nonzero t")
            _require(all(t**i != 1 for i in range(1, d // 2 + 1)), BadParameters, "t^i = 1 for some i <= d/2")
            _require(prod == -(t ** (1 - d // 2)), BadParameters, "rho product must be -t^(1-d/2)")
        elif tag == "b1":
            _require(d >= 4 and d % 2 == 0, BadParameters, "needs even d >= 4")
            _require(characteristic_ok(F, "zero_or_greater", d // 2) and F.char != 2,
                     BadCharacteristic, "needs Char 0 or > d/2")
            _require(prod == -1, BadParameters, "rho product must be -1")
        else:
            _require(d == 2, BadParameters, "b2 needs d=2")
            _require(prod == -1, BadParameters, "rho product must be -1")
    elif tag == "weyl":
        _require(d >= 1 and is_prime(d + 1), BadParameters, "needs d+1 prime")
        _require(characteristic_ok(F, "equals", d + 1), BadCharacteristic, "needs Char = d+1")
    elif tag == "qweyl":
        _require(0 <= g("j") <= d, BadParameters, "needs 0 <= j <= d")
        _require(is_standard(d, g("q")), NotStandard, "the pair d, q is not standard")


def is_standard(d: int, q: Scalar) -> bool:
    if not q:
        return False
    if q.field.char == 2:
        return d % 2 == 0 and _order_is(q, d + 1)
    return _order_is(q, 2 * d + 2)


def qweyl_first_toeplitz(d: int, j: int, q: Scalar) -> Scalar:
    """(q^{j+1/2} + q^{-j-1/2})/(q - q^{-1}); the numerator has to lie in the field."""
    F = q.field
    e = q ** (2 * j + 1)
    square = e + e.inverse() + 2
    root = F.sqrt(q)
    if root:
        num = q**j * root
        num = num + num.inverse()
    else:
        num = F.sqrt(square)
        if num is None:
            raise NoSquareRoot(f"q^(j+1/2) + q^(-j-1/2) is not in {F} (its square is {square})")
    return num / (q - q.inverse())


def parameter_data(desc: FamilyDescriptor) -> tuple:
    """(φ, φ', φ'', a) for a descriptor; a is the trace data of the (A,B) pair."""
    validate(desc)
    tag, d, F = desc.tag, desc.d, desc.field
    g = desc.get
    one = F.one
    if tag == "trivial":
        return [], [], [], [F.zero]
    if tag == "d1":
        return [F(-1)], [F(-1)], [F(-1)], [one, F(-1)]
    if tag in ("nbwp", "nbwm"):
        phi = _nbweyl_phi(d, g("j"), g("q"))
    elif tag == "nbwmt":
        t = g("t")
        phi = [2 * t * (1 - t**i) / (1 - t) ** 2 for i in range(1, d + 1)]
    elif tag == "nbg":
        q = g("q")
        phi = [q * (q**i - 1) * (q ** (i - d - 1) - 1) / (q - 1) ** 2 for i in range(1, d + 1)]
    elif tag == "nbg1":
        phi = [F(i * (i - d - 1)) for i in range(1, d + 1)]
    elif tag == "nbng":
        t = g("t")
        phi = [t ** (i // 2) - 1 if i % 2 == 0 else t ** ((i - d - 1) // 2) - 1 for i in range(1, d + 1)]
    elif tag in ("b", "b2"):
        if tag == "b2":
            arrays = [[-r.inverse(), r] for r in (g("rho0"), g("rho0p"), g("rho0pp"))]
        else:
            arrays = [_b_phi(d, g("t"), r) for r in (g("rho0"), g("rho0p"), g("rho0pp"))]
        return (*arrays, [F.zero] * (d + 1))
    elif tag == "b1":
        arrays = [_b1_phi(d, r) for r in (g("rho0"), g("rho0p"), g("rho0pp"))]
        return (*arrays, [F.zero] * (d + 1))
    elif tag == "weyl":
        phi = [F(i) for i in range(1, d + 1)]
        alpha1 = one if d == 1 else F.zero
        return phi, phi, phi, [alpha1] * (d + 1)
    elif tag == "qweyl":
        q, j = g("q"), g("j")
        alpha1 = qweyl_first_toeplitz(d, j, q)
        phi = [1 - q ** (-2 * i) for i in range(1, d + 1)]
        return phi, phi, phi, [alpha1 * q ** (2 * i + 1) * (q - q.inverse()) for i in range(d + 1)]
    else:  # pragma: no cover
        raise BadParameters(tag)
    return phi, phi, phi, _nb_trace(phi, F)


def construct(desc: FamilyDescriptor) -> LRTriple:
    """Build the family member in its (A,B)-basis and re-recognize it."""
    phi, phi1, phi2, a = parameter_data(desc)
    if any(not x for x in (*phi, *phi1, *phi2)):
        raise BadParameters("a parameter array entry vanishes")
    A, B, C = triple_from_data(phi, phi1, phi2, a, desc.field)
    try:
        t = recognize_lr_triple(A, B, C, strict=True)
    except NotRecognized as exc:
        raise BadParameters(f"construction is not an LR triple ({exc.reason})") from exc
    if t.parameter_array != (tuple(phi), tuple(phi1), tuple(phi2)):
        raise UnclassifiableInconsistency("recognized parameter array differs from the template")
    if desc.tag in NORMALIZED_TAGS and not t.is_normalized:
        raise UnclassifiableInconsistency(f"{desc} is not normalized after construction")
    if desc.tag == "qweyl":
        q = desc["q"]
        c = q - q.inverse()
        for X, Y in ((A, B), (B, C), (C, A)):
            if X * Y * q - Y * X * q.inverse() != t.I.scale(c):
                raise UnclassifiableInconsistency("q-Weyl relation fails")
    return t


def construct_weyl(d: int, field: FieldSpec) -> LRTriple:
    """Weyl triple with C = α₁I - A - B; cross-checked against the template."""
    desc = make("weyl", d, field)
    validate(desc)
    F = field
    phi = [F(i) for i in range(1, d + 1)]
    alpha1 = F.one if d == 1 else F.zero
    A, B, _ = triple_from_data(phi, phi, phi, [alpha1] * (d + 1), F)
    C = Matrix.identity(d + 1, F).scale(alpha1) - A - B
    t = recognize_lr_triple(A, B, C, strict=True)
    ref = construct(desc)
    if t.parameter_array != ref.parameter_array or t.alpha[1] != ref.alpha[1]:
        raise UnclassifiableInconsistency("the two Weyl constructions disagree")
    return t


def construct_qweyl(d: int, j: int, q, field: FieldSpec) -> LRTriple:
    return construct(make("qweyl", d, field, j=j, q=q))


# normalization


def normalize(t: LRTriple) -> tuple:
    """(normalized triple, scaling report)."""
    if t.d == 0:
        return t, {"A": "1", "B": "1", "C": "1"}
    (al, _), (al1, _), (al2, _) = t.toeplitz_data
    if not t.is_bipartite:
        s = (al1[1], al2[1], al[1])
        out = recognize_lr_triple(t.A.scale(s[0]), t.B.scale(s[1]), t.C.scale(s[2]), strict=True)
        report = dict(zip("ABC", (x.to_json() for x in s)))
    else:
        s = (al1[2], al2[2], al[2])
        J = t.projector
        maps = [X * J * c + J * X for X, c in zip((t.A, t.B, t.C), s)]
        out = recognize_lr_triple(*maps, strict=True)
        report = {f"{k}_out": x.to_json() for k, x in zip("ABC", s)}
        report.update({f"{k}_in": "1" for k in "ABC"})
    if not out.is_normalized:
        raise UnclassifiableInconsistency("normalization did not produce a normalized triple")
    return out, report


# ρ sequences and constrained sequences


def rho_sequence(t: LRTriple):
    """ρ for nonbipartite equitable triples; (ρ, ρ', ρ'') for bipartite ones."""
    if not t.is_equitable:
        raise NotEquitable("needs an equitable triple")
    d = t.d
    if d < 1:
        raise ValueError("needs d >= 1")
    f = t.f
    if not t.is_bipartite:
        return tuple(f(0, i + 1) / f(0, d - i) for i in range(d))
    return (tuple(f(1, i + 1) / f(2, d - i) for i in range(d)),
            tuple(f(2, i + 1) / f(0, d - i) for i in range(d)),
            tuple(f(0, i + 1) / f(1, d - i) for i in range(d)))


@dataclass(frozen=True)
class ConstrainedForm:
    kind: str  # GeometricEven, OddNonGeometric, OddGeometric
    params: tuple
    n: int
    lc_basis: tuple = ()

    @property
    def lc_dim(self) -> int:
        return len(self.lc_basis)

    def reconstruct(self) -> tuple:
        n = self.n
        if self.kind == "GeometricEven":
            eps, r = self.params
            return tuple(eps * r ** (i - n // 2) for i in range(n + 1))
        if self.kind == "OddNonGeometric":
            xi, s = self.params
            return tuple(xi * s ** (i // 2) if i % 2 == 0 else xi.inverse() * s ** ((i - n) // 2)
                         for i in range(n + 1))
        (tt,) = self.params
        return tuple(tt ** (2 * i - n) for i in range(n + 1))


def linear_constraints(rho) -> list:
    """Basis of {(a,b,c): aρ_{i-1} + bρ_i + cρ_{i+1} = 0 for 1 <= i <= n-1}."""
    F = rho[0].field
    rows = [[rho[i - 1], rho[i], rho[i + 1]] for i in range(1, len(rho) - 1)]
    return kernel(rows, F, 3)


def is_geometric(rho) -> bool:
    if any(not x for x in rho):
        return False
    return all(rho[i] * rho[1] == rho[i + 1] * rho[0] for i in range(len(rho) - 1))


def analyze_constrained(rho):
    """ConstrainedForm of a constrained sequence, or None."""
    rho = tuple(rho)
    if not rho or any(not x for x in rho):
        return None
    n = len(rho) - 1
    if any(rho[i] * rho[n - i] != 1 for i in range(n + 1)):
        return None
    lc = linear_constraints(rho)
    if not lc:
        return None
    lc = tuple(tuple(v) for v in lc)
    F = rho[0].field
    if n % 2 == 0:
        if not is_geometric(rho):
            return None
        r = rho[1] / rho[0] if n else F.one
        form = ConstrainedForm("GeometricEven", (rho[n // 2], r), n, lc)
    elif is_geometric(rho):
        form = ConstrainedForm("OddGeometric", (rho[(n + 1) // 2],), n, lc)
    else:
        form = ConstrainedForm("OddNonGeometric", (rho[0], rho[2] / rho[0]), n, lc)
    if form.reconstruct() != rho:
        return None
    return form


# classification


def nbweyl_constraint(t: LRTriple) -> list:
    """Basis of (a,b,c) with a+b+c = 0 and aφ_{i-1} + bφ_i + cφ_{i+1} = 0 (1 <= i <= d)."""
    F, d = t.field, t.d
    f = lambda i: t.f(0, i)
    rows = [[F.one, F.one, F.one]] + [[f(i - 1), f(i), f(i + 1)] for i in range(1, d + 1)]
    return kernel(rows, F, 3)


def in_nbweyl(t: LRTriple) -> bool:
    return t.d >= 2 and t.is_normalized and not t.is_bipartite and bool(nbweyl_constraint(t))


def in_nbg(t: LRTriple) -> bool:
    return (t.d >= 2 and t.is_normalized and not t.is_bipartite and not in_nbweyl(t)
            and is_geometric(rho_sequence(t)))


def in_nbng(t: LRTriple) -> bool:
    return (t.d >= 4 and t.d % 2 == 0 and t.is_normalized and not t.is_bipartite
            and not is_geometric(rho_sequence(t)))


def in_bip(t: LRTriple) -> bool:
    return t.d >= 2 and t.d % 2 == 0 and t.is_normalized and t.is_bipartite


def family_memberships(t: LRTriple) -> dict:
    return {"NBWeyl": in_nbweyl(t), "NBG": in_nbg(t), "NBNG": in_nbng(t), "B": in_bip(t)}


def _candidates_nbweyl(t: LRTriple):
    F, d = t.field, t.d
    a, b, c = nbweyl_constraint(t)[0]
    if not c:
        raise UnclassifiableInconsistency("degenerate NBWeyl constraint")
    tt = a / c
    if tt == 1:
        raise UnclassifiableInconsistency("NBWeyl constraint with t = 1")
    u = t.phi[0] / (1 - tt)
    if d % 4 == 1 and d >= 5 and F.char != 2 and u == 2 * tt / (1 - tt) ** 2:
        yield make("nbwmt", d, F, t=tt)
    for q in _roots_of_q_squared(tt.inverse()):
        for j in range(d + 1):
            tag = "nbwp" if d % 2 == 0 else "nbwm"
            yield make(tag, d, F, j=j, q=q)


def _try(desc: FamilyDescriptor, t: LRTriple) -> bool:
    try:
        phi, phi1, phi2, _ = parameter_data(desc)
    except (BadParameters, FieldUnsupported, ZeroDivisionError):
        return False
    return (tuple(phi), tuple(phi1), tuple(phi2)) == t.parameter_array


def classify(t: LRTriple) -> FamilyDescriptor:
    """Family descriptor of a normalized triple."""
    if not t.is_normalized:
        raise NotNormalized("classify needs a normalized triple")
    F, d = t.field, t.d
    if d == 0:
        return make("trivial", 0, F)
    if d == 1:
        desc = make("d1", 1, F)
    elif t.is_bipartite:
        rho, rho1, rho2 = rho_sequence(t)
        r = dict(rho0=rho[0], rho0p=rho1[0], rho0pp=rho2[0])
        if d == 2:
            desc = make("b2", 2, F, **r)
        else:
            tt = rho[2] / rho[0]
            desc = make("b1", d, F, **r) if tt == 1 else make("b", d, F, t=tt, **r)
    elif nbweyl_constraint(t):
        desc = next((c for c in _candidates_nbweyl(t) if _try(c, t)), None)
        if desc is None:
            raise UnclassifiableInconsistency("NBWeyl member matches no listed example")
        return desc
    elif is_geometric(rho_sequence(t)):
        al = t.alpha
        if not al[2]:
            raise UnclassifiableInconsistency("α₂ = 0 on a nonbipartite normalized triple")
        q = t.beta[2] / al[2]
        desc = make("nbg1", d, F) if q == 1 else make("nbg", d, F, q=q)
    else:
        rho = rho_sequence(t)
        desc = make("nbng", d, F, t=rho[2] / rho[0])
    if not _try(desc, t):
        raise UnclassifiableInconsistency(f"{desc} does not reproduce the parameter array")
    return desc
