from fractions import Fraction

import pytest

from core.algebra import Parity, SuperDim, validate
from core.errors import InputError, OracleLimitError
from core.oracle import OracleLimits, free_nilpotent, free_superdims, parse_term

E, O = Parity.EVEN, Parity.ODD


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (1, 0, [SuperDim(1, 0), SuperDim(0, 0), SuperDim(0, 0)]),
        (0, 1, [SuperDim(0, 1), SuperDim(1, 0), SuperDim(0, 0)]),
        (2, 0, [SuperDim(2, 0), SuperDim(1, 0), SuperDim(2, 0)]),
        (1, 1, [SuperDim(1, 1), SuperDim(1, 1), SuperDim(1, 1)]),
        (0, 2, [SuperDim(0, 2), SuperDim(3, 0), SuperDim(0, 2)]),
    ],
)
def test_free_superdims(p, q, expected):
    assert free_superdims(p, q, 3) == expected


def test_free_superdims_of_three_even_letters():
    # Witt: 3, 3, 8, 18
    assert [d.even for d in free_superdims(3, 0, 4)] == [3, 3, 8, 18]


def test_free_algebra_on_one_even_one_odd(limits):
    F = free_nilpotent([("x", E), ("y", O)], 3, limits)
    assert F.superdim == SuperDim(3, 3)
    assert F.degree_superdims() == [SuperDim(1, 1)] * 3
    assert sorted(F.word(i) for i in F.indices_of_degree(2, 2)) == ["[x,y]", "[y,y]"]


def test_free_algebra_satisfies_the_axioms(limits):
    for generators, bound in ((["x", "y"], 3), (["x"], 4)):
        F = free_nilpotent([(generators[0], E)] + [(g, O) for g in generators[1:]], bound, limits)
        assert validate(F.algebra).ok
    assert validate(free_nilpotent([("a", E), ("b", E)], 4, limits).algebra).ok
    assert validate(free_nilpotent([("u", O), ("v", O)], 3, limits).algebra).ok


def test_odd_jacobi_relation(limits):
    F = free_nilpotent([("x", E), ("y", O)], 3, limits)
    left = F.evaluate(parse_term("(y (x y))"))
    right = F.evaluate(parse_term("(x (y y))"))
    assert left == {k: c / 2 for k, c in right.items()}
    assert F.evaluate(parse_term("(y (y y))")) == {}


def test_brackets_vanish_past_the_bound(limits):
    F = free_nilpotent([("a", E), ("b", E)], 2, limits)
    assert F.evaluate(parse_term("(a (a b))")) == {}
    assert F.evaluate(parse_term("(b a)")) == {k: -c for k, c in F.evaluate(parse_term("(a b)")).items()}


def test_homomorphism_onto_h1(h1, limits):
    F = free_nilpotent([("x", E), ("y", O)], 3, limits)
    project = F.homomorphism(h1, [{0: Fraction(1)}, {1: Fraction(1)}])
    assert project(F.evaluate(parse_term("(x y)"))) == {2: 1}
    assert project(F.evaluate(parse_term("(y y)"))) == {}
    with pytest.raises(InputError):
        F.homomorphism(h1, [{0: Fraction(1)}])


def test_term_of_reads_back(limits):
    F = free_nilpotent([("x", E), ("y", O)], 3, limits)
    v = F.evaluate(parse_term("(+ (x (x y)) (* 2 (y y)))"))
    assert F.evaluate(F.term_of(v)) == v
    assert F.render(v) == "2*[y,y] + [x,[x,y]]"


def test_generator_order_does_not_matter(limits):
    F = free_nilpotent([("y", O), ("x", E)], 3, limits)
    assert F.superdim == SuperDim(3, 3)
    assert F.generator_vector(0) == {F.generator_index("y"): 1}


def test_refusals():
    with pytest.raises(InputError):
        free_nilpotent([], 2, OracleLimits())
    with pytest.raises(OracleLimitError):
        free_nilpotent([("a", E), ("b", E)], 3, OracleLimits(max_generators=1))
    with pytest.raises(OracleLimitError):
        free_nilpotent([("a", E)], 9, OracleLimits())
    F = free_nilpotent([("a", E)], 2, OracleLimits())
    with pytest.raises(InputError):
        F.generator_index("nope")
