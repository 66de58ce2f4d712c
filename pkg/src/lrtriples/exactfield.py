"""Exact scalars over the rationals and prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class FieldError(ValueError):
    pass


class MixedFields(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class NoSuchRoot(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "q" if self.p is None else "gfp"

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, x) -> "Scalar":
        return Scalar(x, self)

    @property
    def zero(self) -> "Scalar":
        return Scalar(0, self)

    @property
    def one(self) -> "Scalar":
        return Scalar(1, self)

    def elements(self):
        """Nonzero elements in increasing residue order (prime fields only)."""
        if self.p is None:
            raise FieldError("the rationals are not enumerable here")
        return [Scalar(k, self) for k in range(1, self.p)]

    def sqrt(self, a: "Scalar") -> "Scalar | None":
        """Smallest square root of ``a`` in the field, or None."""
        a = self(a)
        if a.is_zero():
            return self.zero
        if self.p is None:
            v = a.value
            if v < 0:
                return None
            num, den = _isqrt_exact(v.numerator), _isqrt_exact(v.denominator)
            if num is None or den is None:
                return None
            return Scalar(Fraction(num, den), self)
        for x in self.elements():
            if x * x == a:
                return x
        return None

    def to_json(self) -> dict:
        return {"kind": "q"} if self.p is None else {"kind": "gfp", "p": self.p}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        if obj.get("kind") == "q":
            return cls()
        if obj.get("kind") == "gfp":
            return cls(int(obj["p"]))
        raise FieldError(f"unknown field {obj!r}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``q`` or ``gfp:<p>``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rationals"):
            return cls()
        if text.startswith("gfp:"):
            return cls(int(text[4:]))
        raise FieldError(f"cannot parse field {text!r}")

    def __str__(self):
        return "q" if self.p is None else f"gfp:{self.p}"


QQ = FieldSpec()


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


@total_ordering
class Scalar:
    """An immutable field element.

    Rational values are ``Fraction`` in lowest terms; prime-field values are
    residues in ``[0, p)``. Plain ints and Fractions are coerced on contact.
    """

    __slots__ = ("value", "field")

    def __init__(self, x, field: FieldSpec = QQ):
        if isinstance(x, Scalar):
            if x.field != field:
                raise MixedFields(f"{x.field} vs {field}")
            x = x.value
        if isinstance(x, str):
            x = Fraction(x.strip())
        if field.p is None:
            x = Fraction(x)
        else:
            if isinstance(x, Fraction):
                if x.denominator % field.p == 0:
                    raise DivisionByZero("denominator vanishes mod p")
                x = x.numerator * pow(x.denominator, -1, field.p)
            x = int(x) % field.p
        object.__setattr__(self, "value", x)
        object.__setattr__(self, "field", field)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other, self.field)
        return NotImplemented

    def _new(self, v) -> "Scalar":
        s = object.__new__(Scalar)
        p = self.field.p
        object.__setattr__(s, "value", v if p is None else v % p)
        object.__setattr__(s, "field", self.field)
        return s

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o.value)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.field.p is None:
            return self._new(1 / self.value)
        return self._new(pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.p is None:
            return self._new(self.value**n)
        return self._new(pow(self.value, n, self.field.p))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == Scalar(other, self.field).value
            except DivisionByZero:
                return False
        return NotImplemented

    def __lt__(self, other):
        # only a deterministic sort key; not field order
        o = self._coerce(other)
        return self.value < o.value

    def __hash__(self):
        return hash((self.value, self.field.p))

    def to_json(self) -> str:
        return str(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        if self.field.p is None:
            return f"Scalar({str(self.value)!r})"
        return f"Scalar({self.value}, GF({self.field.p}))"


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise MixedFields(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def multiplicative_order(a: Scalar) -> int | None:
    """Order of ``a`` in the unit group, or None if infinite."""
    if a.is_zero():
        return None
    if a.field.p is None:
        if a == 1:
            return 1
        if a == -1:
            return 2
        return None
    x, k = a, 1
    while x != 1:
        x = x * a
        k += 1
    return k


def find_root_of_unity(field: FieldSpec, n: int) -> Scalar:
    """Smallest element of multiplicative order exactly ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    if field.p is None:
        if n == 1:
            return field.one
        if n == 2:
            return field(-1)
        raise NoSuchRoot(f"no element of order {n} in the rationals")
    if n == 1:
        return field.one
    if (field.p - 1) % n:
        raise NoSuchRoot(f"{n} does not divide {field.p - 1}")
    for w in field.elements():
        if multiplicative_order(w) == n:
            return w
    raise NoSuchRoot(f"no element of order {n} in GF({field.p})")


def smallest_prime_with_root(n: int, *, exclude=(), minimum: int = 2) -> int:
    """Smallest prime p with n | p-1, skipping ``exclude``."""
    p = max(minimum, 2)
    while True:
        if is_prime(p) and (p - 1) % n == 0 and p not in exclude:
            return p
        p += 1


def characteristic_ok(field: FieldSpec, constraint: str, n: int | None = None) -> bool:
    """``constraint`` is one of ``equals``, ``zero_or_greater``, ``not_two``."""
    c = field.char
    if constraint == "equals":
        return c == n
    if constraint == "zero_or_greater":
        return c == 0 or c > n
    if constraint == "not_two":
        return c != 2
    raise ValueError(f"unknown constraint {constraint!r}")


def parse_scalar(text, field: FieldSpec) -> Scalar:
    if isinstance(text, Scalar):
        return Scalar(text, field)
    if isinstance(text, str):
        return Scalar(Fraction(text.strip()), field)
    return Scalar(text, field)
