import pytest

import resprime

EX1_F = "9x^4+3x^3-2x^2+x-1"
EX1_G = "x^4-x^3-x^2+3x+35"


def test_resultant_routes_agree():
    assert resprime.resultant(EX1_F, EX1_G) == 9794181403
    assert resprime.resultant([-1, 1, -2, 3, 9], [35, 3, -1, -1, 1], method="sylvester") == 9794181403
    f = [92, 1, -3, 3, -1, 1]
    values = {abs(resprime.resultant(f, [1, 0, 1], method=m)) for m in ("prs", "sylvester", "quad_shift", "quad_binet")}
    assert values == {8837}


def test_big_integers_round_trip():
    p = 2**127 - 1
    assert resprime.is_prime(p)
    sign, primes, cofactor = resprime.factorize(-12 * p)
    assert sign == -1 and cofactor == 1
    assert primes == [(2, 2), (3, 1), (p, 1)]
    assert resprime.d_k(336, 2) == 6


def test_certify_and_verify():
    certs = resprime.certify(EX1_F, EX1_G)
    assert certs and all(c.success for c in certs)
    assert "disk_annulus" in {c.criterion for c in certs}
    text = "".join(c.text for c in certs)
    assert all(ok for ok, _ in resprime.verify(text))
    tampered = text.replace("9794181403", "9794181404", 1)
    assert not all(ok for ok, _ in resprime.verify(tampered))


def test_split_pair_gets_nothing():
    assert resprime.certify([15, -8, 1], [24, -10, 1]) == []
    unit, factors = resprime.factor([15, -8, 1])
    assert [f for f, _ in factors] == [[-5, 1], [-3, 1]]


def test_bivariate_and_combinations():
    certs = resprime.certify_bivar("[[x^3+2], [x^2-x], [x-1], [1-x^2], [5x+3]]", "[[-1], [1]]")
    assert "bivar_degree_dominance" in {c.criterion for c in certs}
    c = resprime.combos([-1, 1], [17, 1, 1])
    assert c.success and (1, 1) in c.pairs


def test_errors_surface_as_exceptions():
    with pytest.raises(resprime.ResprimeError, match="ParseError"):
        resprime.resultant("x^2+", "x")
    with pytest.raises(resprime.ResprimeError):
        resprime.resultant([1, 2, 3], [1, 2, 3, 4], method="quad_shift")
