from fractions import Fraction
from math import factorial

import pytest

from corpus import ALL, built, d1_matrices, descriptor, ident
from lrtriples.exactfield import GF, QQ
from lrtriples.linalg import Matrix, tau
from lrtriples.lrpair import NotRecognized
from lrtriples.lrtriple import (
    InconsistentData, check_lr_triple, cycle_checks, data_suite, recognize_lr_triple,
    rotator_suite, toeplitz_data_via_recursion, toeplitz_data_via_transition,
    trace_data_from_parameters, triple_from_data,
)


@pytest.fixture(scope="module")
def d1():
    return recognize_lr_triple(*d1_matrices())


def test_trivial_triple():
    Z = Matrix.zero(1)
    t = recognize_lr_triple(Z, Z, Z)
    assert t.is_trivial and t.d == 0
    assert t.toeplitz_data == (((1,), (1,)),) * 3
    assert t.theta == 1
    assert t.unipotent_maps == (Matrix.identity(1),) * 3
    assert t.twelve_cycle_check() == 1
    assert t.flags() == {"bipartite": True, "equitable": True, "normalized": True}
    assert all(r.is_trivial for r in t.relatives().values())
    assert len(t.idempotent_centralizer_basis()) == 1
    assert t.double_lowering_basis("A") == []


def test_d1_triple(d1):
    assert d1.parameter_array == ((-1,), (-1,), (-1,))
    assert d1.trace_data[0] == (1, -1)
    assert d1.toeplitz_data[0] == ((1, 1), (1, -1))
    assert d1.theta == -1
    A = d1.A
    assert d1.unipotent_maps[0] == Matrix.identity(2) + A
    O = d1.rotator()
    assert O == Matrix([[1, 1], [-1, 0]])
    assert O ** 3 == Matrix.identity(2).scale(-1)
    assert d1.is_normalized and not d1.is_bipartite
    # 1/(θβ₁β′₁β″₁) with θ = -1 and every β₁ = -1
    assert d1.twelve_cycle_check() == 1


def test_rejections():
    A, B, _ = d1_matrices()
    assert check_lr_triple(A, B, B) is not None
    assert recognize_lr_triple(A, B, B) is None
    T = tau(1)
    with pytest.raises(NotRecognized) as err:
        recognize_lr_triple(T, T, T, strict=True)
    assert err.value.reason.endswith("FlagNotRaised")


@pytest.mark.parametrize("q", [Fraction(2), Fraction(3), Fraction(1, 2)])
def test_nbg2_data(q):
    t = built(f"nbg:d=2,q={q}")
    q = QQ(q)
    assert t.trace_data[0] == (1 + q, 1 / q - q, -1 - 1 / q)
    (al, be), _, _ = t.toeplitz_data
    assert al[2] == 1 / (1 + q) and be[2] == q / (1 + q)
    assert t.theta == 1 / q
    assert t.flags()["bipartite"] is False and t.is_normalized
    O = t.rotator()
    assert O == Matrix([[1, 1, 1 / (1 + q)], [-1 - 1 / q, -1, 0], [1 + 1 / q, 0, 0]])
    assert len(t.idempotent_centralizer_basis()) == 1
    assert t.double_lowering_basis("A") == [t.A] or len(t.double_lowering_basis("A")) == 1


def test_b2_data():
    t = built("b2:d=2,rho0=2,rho0p=1/2,rho0pp=-1")
    r = QQ(-1)
    assert t.C == Matrix([[0, 1 / r, 0], [r, 0, r], [0, -1 / r, 0]])
    assert t.projector == Matrix.diag([1, 0, 1])
    Oo, Oi = t.rotators_out_in()
    assert Oo == Matrix([[1, 0, 1], [0, 0, 0], [-1, 0, 0]])
    assert Oi == Matrix([[0, 0, 0], [0, 1, 0], [0, 0, 0]])
    assert (Oo * Oi).is_zero() and (Oi * Oo).is_zero()
    assert all(x == 0 for s in t.trace_data for x in s)
    assert t.flags() == {"bipartite": True, "equitable": True, "normalized": True}
    assert not t.is_trivial
    assert len(t.idempotent_centralizer_basis()) == 2
    outer, inner = t.bipartite_halves()
    assert outer.d == 1 and outer.parameter_array == ((-1,), (-1,), (-1,))
    assert inner.is_trivial


def test_closed_forms_nbg_q():
    t = built("nbg:d=5,q=3")
    q = QQ(3)
    al, be = t.toeplitz_data[0]
    acc = QQ(1)
    for i in range(1, 6):
        acc = acc * sum((q ** k for k in range(i)), QQ(0))
        assert al[i] == 1 / acc


def test_closed_forms_nbg_1():
    al, be = built("nbg1:d=6").toeplitz_data[0]
    assert list(al) == [Fraction(1, factorial(i)) for i in range(7)]
    assert list(be) == [Fraction((-1) ** i, factorial(i)) for i in range(7)]


@pytest.mark.parametrize("d,p", [(2, 3), (4, 5), (6, 7)])
def test_closed_forms_weyl(d, p):
    F = GF(p)
    al, _ = built(f"weyl:d={d}").toeplitz_data[0]
    for i in range(d // 2 + 1):
        assert al[2 * i] == F(Fraction((-1) ** i, 2 ** i * factorial(i)))
        if 2 * i + 1 <= d:
            assert al[2 * i + 1] == 0


def test_weyl_d4_alpha2():
    assert built("weyl:d=4").toeplitz_data[0][0][2] == GF(5)(2)


def test_relatives_tables():
    t = built("nbwp:d=4,j=1")
    rel = t.relatives()
    ph, ph1, ph2 = t.parameter_array
    assert rel["BCA"].parameter_array == (ph1, ph2, ph)
    rev = lambda s: tuple(reversed(s))
    assert rel["~ABC"].parameter_array == (rev(ph), rev(ph1), rev(ph2))


def test_recursion_needs_consistent_data():
    t = built("nbg:d=3,q=2")
    bad = list(t.parameter_array)
    bad[0] = (bad[0][0] + 1,) + bad[0][1:]
    with pytest.raises(InconsistentData):
        toeplitz_data_via_recursion(tuple(bad), t.alpha[1])


def test_triple_from_data_rebuilds():
    t = built("nbg:d=3,q=2")
    a = trace_data_from_parameters(t.parameter_array, t.alpha[1])
    assert a == t.trace_data
    A, B, C = triple_from_data(*t.parameter_array, a[0], t.field)
    assert recognize_lr_triple(A, B, C).parameter_array == t.parameter_array


@pytest.mark.parametrize("case", ALL, ids=ident)
def test_suites_hold_on_corpus(case):
    t = built(*case)
    for suite in (data_suite, rotator_suite, cycle_checks):
        res = suite(t)
        assert res and all(res.values()), [k for k, v in res.items() if not v]
    if t.d:
        assert toeplitz_data_via_transition(t) == toeplitz_data_via_recursion(t.parameter_array, t.alpha[1])


@pytest.mark.parametrize("case", ALL, ids=ident)
def test_json_round_trip(case):
    t = built(*case)
    doc = t.to_json()
    F = t.field
    again = recognize_lr_triple(*(Matrix.from_json(doc[k], F) for k in "ABC"))
    assert again.to_json() == doc


@pytest.mark.parametrize("case", ALL, ids=ident)
def test_structure_dimensions(case):
    t = built(*case)
    want = 1 if t.is_trivial or not t.is_bipartite else 2
    assert len(t.idempotent_centralizer_basis()) == want
    dl = 0 if t.is_trivial else want
    assert all(len(t.double_lowering_basis(w)) == dl for w in "ABC")
