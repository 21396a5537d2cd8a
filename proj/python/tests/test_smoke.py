import json

import pytest

import matgeg


@pytest.fixture(scope="module")
def alg():
    return matgeg.Algebra()


def test_ratfunc_field():
    s = matgeg.RatFunc("n - 2*p")
    assert str(s / s) == "1"
    q = matgeg.RatFunc("n^2 - 4*p^2") / s
    assert q == matgeg.RatFunc("n + 2*p")
    assert str(s.evaluate(n=4, p=1)) == "2"
    with pytest.raises(matgeg.DivisionByZero):
        (matgeg.RatFunc(1) / s).evaluate(n=2, p=1)
    with pytest.raises(matgeg.MathError):
        matgeg.RatFunc("p /")


def test_generator_products(alg):
    d = [None] + [alg.generator(j) for j in range(1, 5)]
    assert (d[1] * d[2]).is_zero()
    s = matgeg.RatFunc("n - 2*p")
    assert d[4] * d[3] == d[1] * d[1] + d[1].scaled(s)
    assert d[3].tilde() == -d[3]


def test_decompose(alg):
    table = alg.decompose(alg.generator(3) * alg.generator(4))
    assert alg.is_member(alg.generator(3))
    assert json.dumps(table)  # plain Python data
    with pytest.raises(matgeg.NonMember):
        dx = matgeg.DiffOp.from_json({"order": 1, "coeffs": [
            {"size": 2, "coeffs": []},
            {"size": 2, "coeffs": [[["1", "0"], ["0", "1"]]]}]})
        alg.decompose(dx)


def test_center(alg):
    c1, c2 = alg.C1, alg.C2
    assert alg.is_central(c2)
    assert not alg.is_central(alg.generator(1))
    assert matgeg.commutator(c1, c2).is_zero()
    s = matgeg.RatFunc("n - 2*p")
    assert (c1 * c1 * c1 - c2 * c2 - (c1 * c2).scaled(s)).is_zero()
    dec = alg.center_decompose(c1 * c2 + c1)
    assert dec == {"p": ["0", "1"], "q": ["0", "1"]}


def test_json_round_trip(alg):
    c1 = alg.C1
    assert matgeg.DiffOp.from_json(c1.to_json()) == c1


def test_specialised_algebra():
    num = matgeg.Algebra(p="1/2", n=7)
    assert num.C1 == matgeg.Algebra().C1.evaluate(p="1/2", n=7)


def test_presented_algebra():
    nf = matgeg.normal_form("BAB")
    assert nf["I"] == ["0", "1", "0", "-1"]
    assert nf["BB"] == ["0", "2"]
    assert matgeg.word_product_agrees("BB", "BA", presentation="cubic")


def test_centralizer_order_two():
    out = matgeg.centralizer("c1", order=2, deg=4)
    assert out["dimension"] == 5
    assert not out["numeric_specialized"]
    assert all(b.order <= 2 for b in out["basis"])


def test_orthogonality():
    assert matgeg.gram_entry(0, 1, 4, "1") == [["0", "0"], ["0", "0"]]


def test_acceptance_records():
    recs = matgeg.acceptance(10)
    assert matgeg.failing(recs) == []
    assert all("elapsed" not in r for r in recs)


def test_cli_front_end():
    code, out, err = matgeg.run_cli(["eigencheck", "--wmax", "0"])
    assert code == 0 and "5/5 checks passed" in out
    code, out, err = matgeg.run_cli(["bogus"])
    assert code == 2 and err
