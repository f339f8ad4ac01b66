import pytest

from pythforms.core.errors import EvenInput, NotPrime, OutOfRange
from pythforms.utils.arith import factorize, is_prime, is_qr_mod_p, mod8_class, sqrt_exact, squares_mod
from pythforms.utils.sieve import primes_below, residue_profile


@pytest.mark.parametrize(
    "n, expected",
    [
        (0, False),
        (1, False),
        (2, True),
        (9, False),
        (97, True),
        (1153, True),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (2305843009213693951, True),  # 2^61 - 1
        (2**64 - 59, True),
    ],
)
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_is_prime_agrees_with_sieve():
    sieve = set(primes_below(5000).tolist())
    assert {n for n in range(5000) if is_prime(n)} == sieve


def test_is_prime_rejects_out_of_range():
    with pytest.raises(OutOfRange):
        is_prime(2**64)


@pytest.mark.parametrize(
    "n, factors",
    [
        (1, ()),
        (27, ((3, 3),)),
        (329, ((7, 1), (47, 1))),
        (1153, ((1153, 1),)),
        (1000003**2, ((1000003, 2),)),
        (1000003 * 1000033, ((1000003, 1), (1000033, 1))),
    ],
)
def test_factorize(n, factors):
    assert factorize(n).factors == factors


def test_factorize_multiplies_back():
    for n in range(3, 20001, 2):
        fact = factorize(n)
        product = 1
        for p, k in fact.factors:
            assert is_prime(p)
            product *= p**k
        assert product == n


def test_factorize_even_input():
    with pytest.raises(EvenInput) as exc:
        factorize(4)
    assert str(exc.value) == "even input: 4"


@pytest.mark.parametrize("n", [0, -3, 2**64 + 1])
def test_factorize_out_of_range(n):
    with pytest.raises(OutOfRange):
        factorize(n)


def test_factorization_annotation():
    assert factorize(27).annotation() == "3·3·3"
    assert factorize(85).annotation() == "5·17"
    assert factorize(27).exponent_sum == 3
    assert factorize(105).distinct_primes == 3


@pytest.mark.parametrize("n, root", [(0, 0), (49, 7), (50, None), (-1, None), (10**18, 10**9)])
def test_sqrt_exact(n, root):
    assert sqrt_exact(n) == root


def test_mod8_class():
    assert mod8_class(7) == 7
    assert mod8_class(1153) == 1
    with pytest.raises(EvenInput):
        mod8_class(4)
    with pytest.raises(OutOfRange):
        mod8_class(1)


@pytest.mark.parametrize(
    "c, p, expected",
    [
        (2, 7, True),
        (2, 3, False),
        (-2, 3, True),
        (-2, 5, False),
        (-1, 13, True),
        (0, 7, False),
    ],
)
def test_is_qr_mod_p(c, p, expected):
    assert is_qr_mod_p(c, p) is expected


def test_is_qr_mod_p_matches_exhaustive_squares():
    for p in primes_below(500).tolist()[1:]:
        squares = set(squares_mod(p))
        for c in range(1, p):
            assert is_qr_mod_p(c, p) == (c in squares)


def test_is_qr_mod_p_rejects_bad_modulus():
    with pytest.raises(EvenInput):
        is_qr_mod_p(2, 4)
    with pytest.raises(NotPrime):
        is_qr_mod_p(2, 9)


def test_residue_profile():
    omega, class_mask, exponent_sum = residue_profile(200)
    assert omega[105] == 3
    assert omega[27] == 1 and exponent_sum[27] == 3
    assert class_mask[119] == (1 << 7) | (1 << 1)
    assert exponent_sum[1] == 0
