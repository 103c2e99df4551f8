import random

import pytest

from dickson.fields import FieldError, FrobeniusAut, make_field


# ---------------------------------------------------------------------------
# construction and the default modulus

def test_default_modulus_gf9():
    K = make_field(3, 2)
    assert tuple(K.modulus) == (2, 1, 1)


def test_default_modulus_adjoined_root_generates_units():
    """The default field picks a modulus whose root x is primitive, so
    element literals like "0,1" name a generator of the unit group."""
    for p, n in [(2, 2), (3, 2), (3, 3), (5, 2)]:
        K = make_field(p, n)
        g = K.gen()
        z = K.one()
        seen = set()
        for _ in range(K.order - 1):
            z = z * g
            seen.add(K.element_index(z))
        assert len(seen) == K.order - 1


def test_explicit_modulus_respected():
    K = make_field(3, 2, [1, 0, 1])
    g = K.gen()
    assert (g * g + K.one()).is_zero()


def test_bad_constructions_rejected():
    with pytest.raises(FieldError):
        make_field(3, 2, [1, 2, 1])   # (x+1)^2
    with pytest.raises(FieldError):
        make_field(3, 2, [1, 1])      # wrong degree
    with pytest.raises(FieldError):
        make_field(4, 1)
    with pytest.raises(FieldError):
        make_field(3, 0)


# ---------------------------------------------------------------------------
# field axioms, exhaustive on GF(9) and sampled on GF(27)

def test_gf9_axioms_exhaustive():
    K = make_field(3, 2)
    elems = list(K.elements())
    one = K.one()
    for a in elems:
        assert a + K.zero() == a
        assert a * one == a
        if not a.is_zero():
            assert a * a.inv() == one
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems:
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_gf27_axioms_sampled():
    K = make_field(3, 3)
    rng = random.Random(20260814)
    for _ in range(300):
        a = K.random_element(rng)
        b = K.random_element(rng)
        c = K.random_element(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_element_index_roundtrip():
    K = make_field(5, 2)
    for i in range(K.order):
        assert K.element_index(K.element_at(i)) == i


# ---------------------------------------------------------------------------
# Frobenius

def test_frobenius_is_pth_power():
    for p, n in [(3, 2), (3, 3), (5, 2)]:
        K = make_field(p, n)
        phi = FrobeniusAut(K, 1)
        for a in K.elements():
            pw = K.one()
            for _ in range(p):
                pw = pw * a
            assert phi(a) == pw


def test_frobenius_compose_inverse_order():
    K = make_field(3, 3)
    phi = FrobeniusAut(K, 1)
    assert phi.compose(phi).k == 2
    assert phi.compose(phi.inverse()).is_identity()
    assert phi.order() == 3
    assert FrobeniusAut(K, 0).order() == 1
    x = K.gen()
    assert phi.inverse()(phi(x)) == x


def test_fixed_field_of_frobenius_on_gf9():
    K = make_field(3, 2)
    phi = FrobeniusAut(K, 1)
    fixed = [a for a in K.elements() if phi(a) == a]
    assert sorted(a.literal() for a in fixed) == ["0,0", "1,0", "2,0"]
    sub, basis = phi.fixed_field()
    assert sub.order == 3
    assert len(basis) == 1


def test_fixed_field_intermediate():
    # GF(3^4) with k = 2 fixes a copy of GF(9)
    K = make_field(3, 4)
    tau = FrobeniusAut(K, 2)
    sub, basis = tau.fixed_field()
    assert sub.order == 9
    assert len(basis) == 2
    for b in basis:
        assert tau(b) == b


# ---------------------------------------------------------------------------
# norm, squares, square roots

def test_norm_lands_in_prime_field_and_is_multiplicative():
    K = make_field(3, 2)
    for a in K.elements():
        na = K.norm(a)
        assert all(x == 0 for x in na.coeffs[1:])
        for b in K.elements():
            assert K.norm(a * b) == na * K.norm(b)


def test_norm_is_product_of_conjugates():
    K = make_field(5, 2)
    phi = FrobeniusAut(K, 1)
    for a in K.elements():
        assert K.norm(a) == a * phi(a)


def test_squares_match_enumerated_square_set():
    for p, n in [(3, 2), (5, 2), (3, 3)]:
        K = make_field(p, n)
        squares = {K.element_index(z * z) for z in K.elements()}
        for a in K.elements():
            if a.is_zero():
                continue
            assert K.is_square(a) == (K.element_index(a) in squares)
            if K.is_square(a):
                r = K.sqrt(a)
                assert r * r == a


def test_square_count_in_odd_characteristic():
    K = make_field(3, 3)
    nonzero_squares = sum(1 for a in K.elements()
                          if not a.is_zero() and K.is_square(a))
    assert nonzero_squares == (K.order - 1) // 2


def test_char2_everything_is_a_square():
    K = make_field(2, 2)
    for a in K.elements():
        if a.is_zero():
            continue
        assert K.is_square(a)
        r = K.sqrt(a)
        assert r * r == a


def test_norm_over_intermediate_frobenius():
    K = make_field(3, 4)
    tau = FrobeniusAut(K, 2)
    rng = random.Random(7)
    for _ in range(50):
        a = K.random_element(rng)
        na = K.norm_over(a, tau)
        assert na == a * tau(a)
        assert tau(na) == na
