import json

import pytest

from corpus import ALL, EXTRA, NORMALIZED, built, descriptor, ident
from lrtriples.exactfield import GF, QQ
from lrtriples.families import make, construct, normalize, classify
from lrtriples.linalg import Matrix
from lrtriples.relations import (
    NotQWeyl, casimir_check, catalogue, exp_coefficients, exp_identity_check, module_checks,
    sl2_module, sl2_module_bipartite, uq_module, uq_module_bipartite, verify_relations,
)


def comm(X, Y):
    return X * Y - Y * X


def test_nbg1_brackets():
    t = built("nbg1:d=2")
    A, B = t.A, t.B
    assert comm(A, comm(A, B)) == A.scale(2)
    I = t.I
    A, B, C = t.A, t.B, t.C
    lhs = A * B * C + B * C * A + C * A * B - C * B * A - A * C * B - B * A * C
    assert lhs == I.scale(-2 * 4)


def test_nbg_q_triple_products():
    t = built("nbg:d=2,q=2")
    q = QQ(2)
    A, B, C = t.A, t.B, t.C
    lhs = A * B * C - B * C * A + (C * B * A - A * C * B).scale(q)
    assert lhs == (B - C).scale(1 + q)
    assert A * A * B - A * B * A * (q * (1 + q)) + B * A * A * q ** 3 == A.scale(q * (1 + q))


@pytest.mark.parametrize("text", ["nbng:d=4,t=2", "nbng:d=6,t=3"])
def test_nbng_constant(text):
    t = built(text)
    desc = descriptor(text)
    tt, d = desc["t"], desc.d
    k = (1 - tt ** (-(d // 2))) * (1 - tt ** (1 + d // 2)) / (1 - tt)
    A, B, C = t.A, t.B, t.C
    lhs = (A * B * C - C * B * A * tt) / (1 - tt) + A + C
    assert lhs == t.I.scale(-k)
    assert (A * A * B - B * A * A * tt) / (1 - tt) == -A
    res = dict(verify_relations(t, desc).checked)
    assert res["nbng.abc"] and res["nbng.bca"] and res["nbng.cab"]


def test_weyl_commutators():
    t = built("weyl:d=2")
    I = t.I
    for X, Y in ((t.A, t.B), (t.B, t.C), (t.C, t.A)):
        assert comm(X, Y) == I


def test_bipartite_projected_relation():
    desc = descriptor("b:d=4,t=2,rho0=1,rho0p=2")
    t = built("b:d=4,t=2,rho0=1,rho0p=2")
    tt, r0 = desc["t"], desc["rho0"]
    A, B, J = t.A, t.B, t.projector
    assert ((A * A * B - B * A * A.scale(tt) - A.scale(tt / r0)) * J).is_zero()


@pytest.mark.parametrize("case", NORMALIZED + EXTRA[:3], ids=ident)
def test_catalogue_holds(case):
    t = built(*case)
    desc = descriptor(*case)
    rep = verify_relations(t, desc)
    if desc.tag in ("trivial", "d1") or desc.tag.startswith("nbw"):
        return
    assert rep.checked
    assert rep.all_hold, rep.failures
    prefix, cyc, once, _ = catalogue(desc)
    assert len(rep.checked) == 3 * len(cyc) + len(once)
    assert all(i.startswith(prefix + ".") for i, _ in rep.checked)
    doc = rep.to_json()
    assert json.loads(json.dumps(doc))["family"]
    assert all(r["holds"] for r in doc["results"])


def test_uq_module_nbg():
    # family parameter q⁻² with q = 2
    t = built("nbg:d=2,q=1/4")
    desc = descriptor("nbg:d=2,q=1/4")
    X, Y, Z = uq_module(t, desc)
    q = QQ(2)
    assert X * Y * q - Y * X * q.inverse() == t.I.scale(q - q.inverse())
    assert Y.rank() == Y.n
    res = module_checks(t, desc)
    assert res and all(res.values())


def test_uq_module_over_gf13():
    F = GF(13)
    res = module_checks(built("nbg:d=3,q=10", "gfp:13"), descriptor("nbg:d=3,q=10", "gfp:13"))
    assert res and all(res.values())


def test_uq_module_b2_with_given_q():
    F = GF(13)
    q = F(5)
    desc = make("b2", 2, F, rho0=1, rho0p=1, rho0pp=-1)
    t = construct(desc)
    # with no q the B(1) reading applies
    assert all(k.startswith("sl2b.") for k in module_checks(t, desc))
    res = module_checks(t, desc, q)
    assert all(k.startswith("uqb.") for k in res)
    assert res and all(res.values())
    X, Y, Z = uq_module_bipartite(t, desc, q)
    assert t.projector * X == X * t.projector
    assert X * t.B == t.B * X * q


def test_uq_module_bipartite_t():
    desc = make("b", 4, QQ, t="1/4", rho0=1, rho0p=1, rho0pp=-4)
    t = construct(desc)
    res = module_checks(t, desc)
    assert res and all(res.values())


def test_sl2_module():
    t = built("nbg1:d=2")
    X, Y, Z = sl2_module(t)
    assert comm(X, Y) == X.scale(2) + Y.scale(2)
    assert t.A == (Y + Z) / QQ(2)
    assert X == t.B + t.C - t.A
    assert all(module_checks(t, descriptor("nbg1:d=2")).values())


def test_sl2_module_bipartite():
    t = built("b1:d=4,rho0=1,rho0p=1")
    desc = descriptor("b1:d=4,rho0=1,rho0p=1")
    X, Y, Z = sl2_module_bipartite(t)
    assert comm(t.A, Z) == t.A
    assert t.A * t.A == (Y + Z) / QQ(2)
    J = t.projector
    for M in (X, Y, Z):
        assert J * M == M * J
    d, r0 = 4, QQ(1)
    assert ((t.A * t.B - (Z.scale(2) - t.I.scale(d)) / (4 * r0)) * J).is_zero()
    assert all(module_checks(t, desc).values())


@pytest.mark.parametrize("case", [c for c in EXTRA if c[0].startswith("qweyl")], ids=ident)
def test_casimir(case):
    t = built(*case)
    desc = descriptor(*case)
    q = desc["q"]
    value = casimir_check(t, q)
    assert value == t.alpha[1] * (q - q.inverse())
    assert module_checks(t, desc) == {"casimir": True}


def test_casimir_rejects_other_types():
    with pytest.raises(NotQWeyl):
        casimir_check(built("nbg:d=2,q=2"))


def test_exp_coefficients_match_toeplitz():
    q = QQ(3)
    t = built("nbg:d=5,q=3")
    assert exp_coefficients(q, 5) == list(t.alpha)


@pytest.mark.parametrize("case", [c for c in NORMALIZED if c[0].split(":")[0] in
                                  ("nbg", "nbg1", "nbng", "b", "b1", "b2")], ids=ident)
def test_exp_identities(case):
    assert exp_identity_check(built(*case), descriptor(*case))
