import random

import pytest

import oracles
from depolar import InputError, MonomialIdeal, Ring, minimalize
from depolar.ideals import format_monomial, parse_monomial


def ideal(*gens, names=None):
    n = len(gens[0])
    ring = Ring(names or [f"x{i}" for i in range(1, n + 1)])
    return MonomialIdeal.from_gens(ring, gens)


def test_ring_validation():
    assert Ring(("x", "y")).n == 2
    assert Ring(["x"]).index("x") == 0
    with pytest.raises(InputError):
        Ring([])
    with pytest.raises(InputError):
        Ring(["x", "x"])
    with pytest.raises(InputError):
        Ring(["2bad"])
    with pytest.raises(InputError):
        Ring(["x"]).index("y")


def test_minimalize_drops_multiples():
    assert minimalize([(2, 0), (1, 0), (1, 1), (0, 3)]) == [(0, 3), (1, 0)]
    assert minimalize([]) == []
    assert minimalize([(1, 1), (1, 1)]) == [(1, 1)]


def test_minimalize_matches_oracle(rng):
    for _ in range(300):
        n = rng.randint(1, 5)
        gens = [tuple(rng.randint(0, 3) for _ in range(n))
                for _ in range(rng.randint(1, 8))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        assert minimalize(gens) == oracles.minimal_elements(gens)


def test_constructor_contracts():
    with pytest.raises(InputError):
        MonomialIdeal(Ring(["x"]), [(0,)])  # unit ideal
    with pytest.raises(InputError):
        MonomialIdeal(Ring(["x", "y"]), [(1, 0), (1, 0)])  # not sorted strictly
    with pytest.raises(InputError):
        MonomialIdeal(Ring(["x", "y"]), [(1,)])
    with pytest.raises(InputError):
        MonomialIdeal.from_gens(Ring(["x"]), [("b",)])
    with pytest.raises(InputError):
        MonomialIdeal.from_gens(Ring(["x"]), [(-1,)])
    assert MonomialIdeal(Ring(["x"]), ()).is_zero


def test_basic_queries():
    I = ideal((3, 1, 0), (0, 1, 3), (2, 3, 2))
    assert not I.is_zero
    assert not I.is_squarefree()
    assert I.lcm_exponent() == (3, 3, 3)
    assert I.gcd_exponent() == (0, 1, 0)
    assert I.monomial_span() == (3, 2, 3)
    assert I.contains((3, 1, 5))
    assert not I.contains((1, 1, 1))
    assert ideal((1, 0), (0, 1)).is_squarefree()


def test_intersect_matches_oracle(rng):
    for _ in range(200):
        n = rng.randint(1, 4)
        draw = lambda: [tuple(rng.randint(0, 3) for _ in range(n))
                        for _ in range(rng.randint(1, 5))]
        ga = [g for g in draw() if any(g)]
        gb = [g for g in draw() if any(g)]
        if not ga or not gb:
            continue
        A, B = ideal(*ga), ideal(*gb)
        got = A.intersect(B)
        assert list(got.gens) == oracles.intersect(list(A.gens), list(B.gens))


def test_intersect_needs_common_ring():
    with pytest.raises(InputError):
        ideal((1,)).intersect(ideal((1,), names=["y"]))
    assert ideal((1, 0)).intersect(MonomialIdeal(Ring(["x1", "x2"]), ())).is_zero


def test_lcm_lattice_matches_subset_closure(rng):
    for _ in range(120):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n))
                for _ in range(rng.randint(1, 5))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        I = ideal(*gens)
        assert I.lcm_lattice() == oracles.lcm_closure(list(I.gens))


def test_zero_ideal_has_no_invariants():
    Z = MonomialIdeal(Ring(["x"]), ())
    for op in (Z.lcm_exponent, Z.gcd_exponent, Z.lcm_lattice):
        with pytest.raises(InputError):
            op()


def test_dict_roundtrip():
    I = ideal((3, 1, 0), (0, 1, 3))
    assert MonomialIdeal.from_dict(I.to_dict()) == I
    with pytest.raises(InputError):
        MonomialIdeal.from_dict({"variables": ["x"]})
    with pytest.raises(InputError):
        MonomialIdeal.from_dict({"variables": ["x"], "generators": "bogus"})


def test_monomial_text_roundtrip():
    ring = Ring(["x", "y", "z"])
    assert format_monomial(ring, (2, 1, 0)) == "x^2*y"
    assert format_monomial(ring, (0, 0, 0)) == "1"
    assert parse_monomial(ring, "x^2*y") == (2, 1, 0)
    assert parse_monomial(ring, "1") == (0, 0, 0)
    rng = random.Random(7)
    for _ in range(100):
        m = tuple(rng.randint(0, 4) for _ in range(3))
        assert parse_monomial(ring, format_monomial(ring, m)) == m
    for bad in ("x^0", "w", "x^^2", "x*", ""):
        with pytest.raises(InputError):
            parse_monomial(ring, bad)
