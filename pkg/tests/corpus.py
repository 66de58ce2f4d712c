"""Shared family instances and hand-written parameter-array oracles."""

from functools import lru_cache

from lrtriples.exactfield import GF, QQ, FieldSpec, Scalar
from lrtriples.families import construct, parse_descriptor

# descriptor text, field text (None = automatic)
NORMALIZED = [
    ("trivial:d=0", None),
    ("d1:d=1", None),
    ("nbg:d=2,q=2", None),
    ("nbg:d=2,q=3", None),
    ("nbg:d=2,q=1/2", None),
    ("nbg:d=3,q=2", None),
    ("nbg:d=4,q=2", None),
    ("nbg:d=5,q=3", None),
    ("nbg:d=6,q=2", None),
    ("nbg:d=3,q=10", "gfp:13"),
    ("nbg1:d=2", None),
    ("nbg1:d=3", None),
    ("nbg1:d=4", None),
    ("nbg1:d=5", None),
    ("nbg1:d=6", None),
    ("nbng:d=4,t=2", None),
    ("nbng:d=4,t=-1/2", None),
    ("nbng:d=6,t=3", None),
    ("nbwp:d=2,j=0", None),
    ("nbwp:d=4,j=1", None),
    ("nbwp:d=6,j=2", None),
    ("nbwm:d=3,j=0", None),
    ("nbwm:d=5,j=0", None),
    ("nbwmt:d=5", None),
    ("b2:d=2,rho0=1,rho0p=1,rho0pp=-1", None),
    ("b2:d=2,rho0=2,rho0p=1/2,rho0pp=-1", None),
    ("b2:d=2,rho0=-1,rho0p=3,rho0pp=1/3", None),
    ("b:d=4,t=2,rho0=1,rho0p=2", None),
    ("b:d=4,t=1/3,rho0=-1,rho0p=1", None),
    ("b:d=6,t=3,rho0=1,rho0p=1", None),
    ("b1:d=4,rho0=1,rho0p=1", None),
    ("b1:d=6,rho0=2,rho0p=-1", None),
]

# types that are not normalized: their data is checked but classify needs normalize first
EXTRA = [
    ("weyl:d=2", None),
    ("weyl:d=4", None),
    ("weyl:d=6", None),
    ("qweyl:d=2,j=1,q=3", "gfp:7"),
    ("qweyl:d=2,j=0,q=4", "gfp:13"),
    ("qweyl:d=5,j=1,q=3", "gfp:73"),
]

ALL = NORMALIZED + EXTRA


def ident(case) -> str:
    text, field = case
    return text if field is None else f"{text}@{field}"


@lru_cache(maxsize=None)
def descriptor(text, field=None):
    return parse_descriptor(text, FieldSpec.parse(field) if field else None)


@lru_cache(maxsize=None)
def built(text, field=None):
    return construct(descriptor(text, field))


def _nbweyl(d, j, q):
    e = q ** (2 * j + 1)
    k = (1 + e) ** 2 / (e * (q - q.inverse()) ** 2)
    return [k * (1 - q ** (-2 * i)) for i in range(1, d + 1)]


def _bip(d, t, r):
    out = []
    for i in range(1, d + 1):
        if i % 2 == 0:
            out.append(r * (1 - t ** (i // 2)) / (1 - t))
        else:
            out.append(t / r * (1 - t ** ((i - d - 1) // 2)) / (1 - t))
    return out


def _bip1(d, r):
    return [r * i / 2 if i % 2 == 0 else Scalar(i - d - 1, r.field) / (2 * r) for i in range(1, d + 1)]


def expected_array(desc) -> tuple:
    """Parameter array straight from the closed forms of each family."""
    F, d, tag = desc.field, desc.d, desc.tag
    s = lambda x: Scalar(x, F)
    same = lambda seq: (tuple(seq),) * 3
    if tag == "trivial":
        return ((), (), ())
    if tag == "d1":
        return same([s(-1)])
    if tag == "nbg":
        q = desc["q"]
        return same([q * (q ** i - 1) * (q ** (i - d - 1) - 1) / (q - 1) ** 2 for i in range(1, d + 1)])
    if tag == "nbg1":
        return same([s(i * (i - d - 1)) for i in range(1, d + 1)])
    if tag == "nbng":
        t = desc["t"]
        return same([t ** (i // 2) - 1 if i % 2 == 0 else t ** ((i - d - 1) // 2) - 1 for i in range(1, d + 1)])
    if tag in ("nbwp", "nbwm"):
        return same(_nbweyl(d, desc["j"], desc["q"]))
    if tag == "nbwmt":
        t = desc["t"]
        return same([2 * t * (1 - t ** i) / (1 - t) ** 2 for i in range(1, d + 1)])
    if tag == "weyl":
        return same([s(i) for i in range(1, d + 1)])
    if tag == "qweyl":
        q = desc["q"]
        return same([1 - q ** (-2 * i) for i in range(1, d + 1)])
    rs = (desc["rho0"], desc["rho0p"], desc["rho0pp"])
    if tag == "b2":
        return tuple((-r.inverse(), r) for r in rs)
    if tag == "b":
        return tuple(tuple(_bip(d, desc["t"], r)) for r in rs)
    if tag == "b1":
        return tuple(tuple(_bip1(d, r)) for r in rs)
    raise KeyError(tag)


def d1_matrices(field=QQ):
    from lrtriples.linalg import Matrix
    return (Matrix([[0, 1], [0, 0]], field), Matrix([[0, 0], [-1, 0]], field),
            Matrix([[1, 1], [-1, -1]], field))


__all__ = ["NORMALIZED", "EXTRA", "ALL", "ident", "descriptor", "built", "expected_array",
           "d1_matrices", "GF", "QQ"]
