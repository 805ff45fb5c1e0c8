import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from liepd.freelie import (LieElement, bracketing, embed_assoc, expand_lyndon, from_assoc,
                           is_lyndon, lie_bracket, lie_normal_form, lyndon_basis, lyndon_words,
                           standard_factorization)

X = (1, 2)


def x(i, X=X):
    return LieElement.generator(i, X)


def nf(tree, X=X):
    return lie_normal_form(tree, X)


def test_lyndon_basis_examples():
    assert [str(b) for b in lyndon_basis(X, 2)] == ["x1", "x2", "[x1,x2]"]
    assert [str(b) for b in lyndon_basis(X, 3)][3:] == ["[x1,[x1,x2]]", "[[x1,x2],x2]"]
    assert lyndon_basis((), 4) == []


@pytest.mark.parametrize("q,top", [(1, 4), (2, 7), (3, 5), (4, 3)])
def test_witt_counts(q, top):
    counts = Counter(len(w) for w in lyndon_words(tuple(range(1, q + 1)), top))
    assert [counts[n] for n in range(1, top + 1)] == [oracles.witt(q, n) for n in range(1, top + 1)]


def test_lyndon_predicates():
    assert is_lyndon((1, 1, 2)) and is_lyndon((1, 2, 2))
    assert not is_lyndon((2, 1)) and not is_lyndon((1, 2, 1, 2))
    assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))
    assert standard_factorization((1, 2, 2)) == ((1, 2), (2,))
    assert bracketing((1, 1, 2)) == (1, (1, 2))


def test_expansion_examples():
    assert str(embed_assoc(nf(("bracket", 1, 2)))) == "x1*x2 + -1*x2*x1"
    assert str(embed_assoc(x(1))) == "x1"
    assert expand_lyndon((1, 1, 2)) == {(1, 1, 2): 1, (1, 2, 1): -2, (2, 1, 1): 1}


def test_normal_form_examples():
    assert nf(("bracket", 2, 1)) == -nf(("bracket", 1, 2))
    assert nf(("bracket", 1, 1)).is_zero()
    assert nf(("bracket", ("bracket", 1, 2), 1)) == -nf(("bracket", 1, ("bracket", 1, 2)))


def test_bracket_examples():
    assert str(lie_bracket(x(1), x(2))) == "[x1,x2]"
    b = lie_bracket(lie_bracket(x(1), x(2)), x(2))
    assert str(b) == "[[x1,x2],x2]"
    assert lie_bracket(b, b).is_zero()


def random_lie(rng, X, top=3):
    keys = [b.word for b in lyndon_basis(X, top)]
    return LieElement({rng.choice(keys): rng.randint(-3, 3) for _ in range(3)}, X)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_jacobi_and_antisymmetry(seed):
    rng = random.Random(seed)
    X3 = (1, 2, 3)
    a, b, c = (random_lie(rng, X3) for _ in range(3))
    assert lie_bracket(a, b) == -lie_bracket(b, a)
    jac = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b))
    assert jac.is_zero()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_bracket_agrees_with_commutator(seed):
    rng = random.Random(seed)
    a, b = random_lie(rng, X, 3), random_lie(rng, X, 3)
    ea, eb = embed_assoc(a), embed_assoc(b)
    assert embed_assoc(lie_bracket(a, b)) == ea * eb - eb * ea


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_normal_form_idempotent(seed):
    rng = random.Random(seed)
    tree = oracles.random_tree(rng, [1, 2, 3], 4)
    l = nf(tree, (1, 2, 3))
    assert from_assoc(embed_assoc(l)) == l
    assert embed_assoc(l).terms == oracles.expand(tree)
