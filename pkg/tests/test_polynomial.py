from fractions import Fraction

import pytest

from trifree import Poly


def test_normalization_strips_trailing_zeros():
    assert Poly((1, 0, 2, 0, 0)).coeffs == (1, 0, 2)
    assert Poly((0, 0)).coeffs == ()
    assert Poly.zero().is_zero()
    assert Poly.one().degree == 0


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        Poly((1, 0.5))


def test_arithmetic():
    a = Poly((1, 2, 3))
    b = Poly((0, 1))
    assert (a + b).coeffs == (1, 3, 3)
    assert (a - a).is_zero()
    assert (a * b).coeffs == (0, 1, 2, 3)
    assert (b**3).coeffs == (0, 0, 0, 1)
    assert a.scale(-2).coeffs == (-2, -4, -6)
    assert b.shift(2).coeffs == (0, 0, 0, 1)


def test_one_minus_x_power():
    assert Poly.one_minus_x_power(0) == Poly.one()
    assert Poly.one_minus_x_power(3).coeffs == (1, -3, 3, -1)


def test_eval_horner():
    p = Poly((1, 0, 0, -3, 0, 3, 0, -1))
    assert p.eval(0) == 1
    assert p.eval(Fraction(1, 2)) == Fraction(91, 128)
    assert p.eval(1) == 0


def test_exact_division():
    # (1-p)^3 * (1 + p + p^2) recovered by quotient
    prod = Poly.one_minus_x_power(3) * Poly((1, 1, 1))
    assert Poly.one_minus_x_power(3).divides(prod)
    assert prod.quotient(Poly.one_minus_x_power(3)) == Poly((1, 1, 1))
    assert not Poly((1, 1)).divides(Poly((1, 0, 1)))
    with pytest.raises(ValueError):
        Poly((1, 0, 1)).quotient(Poly((1, 1)))
    with pytest.raises(ZeroDivisionError):
        Poly((1,)).divmod_exact(Poly.zero())


def test_divmod_random_reconstruction():
    import random

    from fractions import Fraction as F

    rng = random.Random(99)
    for _ in range(50):
        a = Poly([rng.randint(-9, 9) for _ in range(rng.randint(1, 9))])
        b = Poly([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])
        if b.is_zero():
            continue
        quot, rem = a.divmod_exact(b)
        # a == q*b + r over the rationals, deg r < deg b
        x = F(7, 11)
        qx = sum(c * x**j for j, c in enumerate(quot))
        rx = sum(c * x**j for j, c in enumerate(rem))
        assert a.eval(x) == qx * b.eval(x) + rx
        assert len(rem) < len(b.coeffs)


def test_derivative():
    assert Poly((5, 1, 0, 2)).derivative().coeffs == (1, 0, 6)
    assert Poly((7,)).derivative().is_zero()


def test_text_rendering():
    assert Poly((1, 0, 0, -3, 0, 3, 0, -1)).to_text() == "1 - 3*p^3 + 3*p^5 - p^7"
    assert Poly((0, 1)).to_text() == "p"
    assert Poly((0, -2)).to_text() == "-2*p"
    assert Poly((-1, 0, 1)).to_text() == "-1 + p^2"
    assert Poly.zero().to_text() == "0"
    assert Poly((1, 0, 0, -6, 0, 9, 6, -14, -3, 12, -6, 1)).to_text() == (
        "1 - 6*p^3 + 9*p^5 + 6*p^6 - 14*p^7 - 3*p^8 + 12*p^9 - 6*p^10 + p^11"
    )


def test_json_roundtrip():
    p = Poly((1, 0, -3, 10**40))
    d = p.to_json_dict()
    assert d["coeffs"][-1] == str(10**40)
    assert Poly.from_json_dict(d) == p
