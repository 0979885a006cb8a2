import random

import pytest

from oracles import all_classes
from projgenus.bigmonoid import Big, Fin, NotAGenus, add, check, from_genus, to_genus
from projgenus.genus import parse_genus
from projgenus.traces import TraceIdeal


def test_to_genus_examples(exr1):
    x = Big(TraceIdeal.of({1}, {1}), ((1,), (0,)))
    assert to_genus(exr1, x) == parse_genus("((inf,1),(inf,0))")
    assert from_genus(exr1, parse_genus("((inf,1),(inf,0))")) == x
    assert to_genus(exr1, Fin(parse_genus("((1,1),(2,0))"))) == parse_genus("((1,1),(2,0))")


def test_add_examples(exr1):
    x = from_genus(exr1, parse_genus("((inf,1),(inf,0))"))
    y = from_genus(exr1, parse_genus("((inf,0),(inf,1))"))
    assert to_genus(exr1, add(exr1, x, y)) == parse_genus("((inf,1),(inf,1))")
    f = from_genus(exr1, parse_genus("((3,0),(2,0))"))
    s = add(exr1, f, x)
    assert s == Big(TraceIdeal.of({1}, {1}), ((1,), (0,)))
    # absorbing: the infinite positions swallow the finite summand
    assert to_genus(exr1, s) == parse_genus("((inf,1),(inf,0))")
    z = add(exr1, from_genus(exr1, parse_genus("((0,inf),(inf,0))")), x)
    assert z == Big(TraceIdeal.of({1, 2}, {1}), ((), (0,)))


def test_not_a_genus(exr1):
    with pytest.raises(NotAGenus):
        from_genus(exr1, parse_genus("((1,0),(1,0))"))
    with pytest.raises(NotAGenus):
        from_genus(exr1, parse_genus("((inf,0),(1,0))"))


def test_check_rejects_bad_classes(exr1):
    with pytest.raises(ValueError):
        check(exr1, Big(TraceIdeal(None), ((1, 1), (1, 1))))
    with pytest.raises(ValueError):
        check(exr1, Big(TraceIdeal.of({1}, {1}), ((1, 1), (1,))))
    with pytest.raises(ValueError):
        check(exr1, Fin(parse_genus("((1,0),(0,0))")))


def test_homomorphism_on_second_example(second):
    classes = all_classes(second, 1)
    for x in classes:
        check(second, x)
        assert from_genus(second, to_genus(second, x)) == x
    rng = random.Random(7)
    for x, y in (rng.sample(classes, 2) for _ in range(500)):
        s = add(second, x, y)
        assert s == add(second, y, x)
        assert to_genus(second, s) == to_genus(second, x) + to_genus(second, y)


def test_associative(exr1):
    classes = all_classes(exr1, 1)
    rng = random.Random(3)
    for _ in range(300):
        x, y, z = rng.sample(classes, 3)
        assert add(exr1, add(exr1, x, y), z) == add(exr1, x, add(exr1, y, z))


def test_classes_are_distinct(exr1):
    images = [to_genus(exr1, x) for x in all_classes(exr1, 1)]
    assert len(set(images)) == len(images)
