import pytest
import sympy

from gstower.primes import is_prime
from gstower.shanks import cubic_discriminant, shanks_record, shanks_scan


def test_known_fixture():
    (rec,) = shanks_scan(17279, 17279)
    assert rec.p == 298615687 and rec.is_prime
    assert rec.cubic_coeffs == (-17279, -17282, -1)
    assert rec.discriminant == 298615687**2


def test_small_range():
    assert [(r.a, r.p) for r in shanks_scan(1, 2)] == [(1, 13), (2, 19)]
    assert [r.a for r in shanks_scan(1, 10)] == [1, 2, 4, 7, 8, 10]
    assert 3 not in [r.a for r in shanks_scan(3, 3)]


@pytest.mark.parametrize("a,expected", [(1, 169), (0, 81)])
def test_discriminant_examples(a, expected):
    assert cubic_discriminant(-a, -(a + 3), -1) == expected


def test_discriminant_identity():
    for a in range(1, 10**4 + 1):
        assert cubic_discriminant(-a, -(a + 3), -1) == (a * a + 3 * a + 9) ** 2


def test_discriminant_matches_sympy():
    x = sympy.symbols("x")
    for a in (1, 5, 17279):
        assert cubic_discriminant(-a, -(a + 3), -1) == sympy.discriminant(x**3 - a * x**2 - (a + 3) * x - 1, x)


def test_scan_monotone_and_independently_prime():
    recs = shanks_scan(1, 3000)
    assert all(x.a < y.a and x.p < y.p for x, y in zip(recs, recs[1:]))
    assert all(sympy.isprime(r.p) for r in recs)
    assert len(recs) == sum(1 for a in range(1, 3001) if sympy.isprime(a * a + 3 * a + 9))


def test_scan_rejects_bad_range():
    with pytest.raises(ValueError):
        shanks_scan(5, 3)
    with pytest.raises(ValueError):
        shanks_scan(0, 3)


def test_record_for_composite():
    rec = shanks_record(3)
    assert rec.p == 27 and not rec.is_prime and rec.discriminant_ok


def test_is_prime_against_sympy():
    for n in list(range(-5, 3000)) + [2**61 - 1, 2**89 - 1, 2**127 - 1, (2**61 - 1) * (2**31 - 1),
                                     3317044064679887385961981, 10**30 + 57]:
        assert is_prime(n) == sympy.isprime(n), n
