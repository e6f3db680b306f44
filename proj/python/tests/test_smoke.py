import pytest

import annular


def test_nc3_listing():
    assert annular.enumerate("nc", [3]) == ["(1)(2)(3)", "(1)(2,3)", "(1,2)(3)", "(1,2,3)", "(1,3)(2)"]
    assert annular.count_closed("nc", [3]) == 5


def test_ps_nc_111():
    items = annular.ps_nc([1, 1, 1])
    assert len(items) == 6
    assert all(v == "{1,2,3}" for v, _, _ in items)


def test_three_routes_agree():
    routes = [annular.alpha([2, 2, 2], r) for r in ("closed", "graphsum", "psnc")]
    assert routes[0] == routes[1] == routes[2]
    assert str(routes[0]) == "8 + 24*k4 + 4*k6"
    assert routes[0].evaluate({"k4": "-1", "k6": "4", "kdiag4": "0"}) == "0"


def test_first_and_second_order():
    assert str(annular.alpha([6])) == "5"
    assert str(annular.alpha([2, 2])) == "2 + 2*k4"


def test_classify_uniloop_example():
    c = annular.classify([8, 3, 3], "{1,5,7,8,9,11,12,14|2,4|3|6|10|13}")
    assert c["kind"] == "UL24"
    assert str(c["weight"]) == "2 + kdiag4"


def test_expand_and_invert():
    assert annular.expand([1, 1]) == annular.Poly.symbol("kappa_2") + annular.Poly.symbol("kappa_1_1")
    k = annular.invert([1, 1])
    assert k.coeff({"alpha_1_1": 1}) == "1"
    assert k.coeff({"alpha_1": 2}) == "1"


def test_verify_suites():
    assert annular.verify("identities", max_m=8, max_closed=12)["ok"]
    assert annular.verify("oracle", max_m=6)["ok"]


def test_bound():
    saved = annular.max_m()
    annular.set_max_m(6)
    try:
        with pytest.raises(annular.BoundExceeded):
            annular.enumerate("nc2", [4, 4])
    finally:
        annular.set_max_m(saved)


def test_simulate_reproducible():
    a = annular.simulate([2, 2], N=20, samples=500, seed=4)
    b = annular.simulate([2, 2], N=20, samples=500, seed=4)
    assert a == b
    assert a["se"] > 0
    assert a["theory"] == 2.0
