import random

import pytest
from hypothesis import given, settings, strategies as st

from liepd.congruence import (CongruencePair, all_homs, beta_related, beta_related_spanning,
                              closed_lattice, closure_report, double_prime, extend_congruence,
                              is_closed, pd_double_prime, restrict_congruence, solutions_of,
                              transport_F, transport_Finv)
from liepd.errors import BudgetError, ContextError, IndeterminateError, RankError
from liepd.freelie import lie_bracket
from liepd.representation import FinRep, FreeRep, RepHom, act
from liepd.scalars import GF

F2 = GF(2)
W = FreeRep((1, 2), (1,))
x1, x2, y1 = W.x(1), W.x(2), W.y(1)
V1 = FreeRep((1,), (1,), F2)
ZERO_ACTION = FinRep(1, {}, 1, [[[0]]], F2)
UNIT_ACTION = FinRep(1, {}, 1, [[[1]]], F2)


def test_ideal_generated_by_x1():
    T = CongruencePair(W, [x1], [], 3)
    for e in (lie_bracket(x1, x2), lie_bracket(x1, lie_bracket(x1, x2)),
              lie_bracket(lie_bracket(x1, x2), x2), act(x1, y1), act(x2, act(x1, y1))):
        assert T.contains(e)
    assert not T.contains(x2) and not T.contains(y1)


def test_closure_examples():
    assert CongruencePair(W, [], [], 3) == CongruencePair.zero(W, 3)
    A = FreeRep((1,), (1,))
    T = CongruencePair(A, [], [A.y(1)], 3)
    assert T.closureL.dim == 0
    assert T.closureV.dim == len(A.module_keys(3))
    assert T.dump() == ["V: y1", "V: x1*y1", "V: x1*x1*y1"]


def _random_gens(rng):
    lk, vk = W.lie_keys(2), W.module_keys(2)
    L = [W.lie({rng.choice(lk): rng.randint(-2, 2), rng.choice(lk): 1}) for _ in range(rng.randint(0, 2))]
    V = [W.module({rng.choice(vk): rng.randint(-2, 2)}) for _ in range(rng.randint(0, 2))]
    return L, V


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_closure_is_a_congruence(seed):
    rng = random.Random(seed)
    L, V = _random_gens(rng)
    d = 3
    T = CongruencePair(W, L, V, d)
    for g in L:
        assert T.contains(g.truncate(d))
    for row in T.closureL.basis():
        l = W.lie(row)
        for b in W.lie_basis(d - l.degree()):
            assert T.contains(lie_bracket(l, b))
        for v in W.module_basis(d - l.degree()):
            assert T.contains(act(l, v))
    for row in T.closureV.basis():
        v = W.module(row)
        for b in W.lie_basis(d - v.degree()):
            assert T.contains(act(b, v))


def test_solutions_examples():
    assert len(list(all_homs(V1, ZERO_ACTION))) == 4
    assert len(solutions_of(CongruencePair.full(V1, 3), ZERO_ACTION)) == 1
    assert len(solutions_of(CongruencePair.zero(V1, 3), ZERO_ACTION)) == 4
    trivial = FinRep(0, {}, 0, [], F2)
    assert double_prime(CongruencePair.zero(V1, 3), trivial) == CongruencePair.full(V1, 3)


def test_budget():
    with pytest.raises(BudgetError):
        list(all_homs(V1, ZERO_ACTION, budget=3))


def _images(h):
    return tuple(sorted(h.phi.items())), tuple(sorted(h.psi.items()))


@pytest.mark.parametrize("H", [ZERO_ACTION, UNIT_ACTION], ids=["zero", "unit"])
def test_galois_laws(H):
    x, y = V1.x(1), V1.y(1)
    small = CongruencePair(V1, [], [act(x, y)], 3)
    big = CongruencePair(V1, [x], [act(x, y)], 3)
    assert small <= big
    for T in (small, big):
        TT = double_prime(T, H)
        assert T <= TT
        assert double_prime(TT, H) == TT
        assert is_closed(TT, H)
    assert {_images(h) for h in solutions_of(big, H)} <= {_images(h) for h in solutions_of(small, H)}
    assert double_prime(small, H) <= double_prime(big, H)


def test_closure_report_lines():
    report = closure_report(CongruencePair(V1, [V1.x(1)], [], 3), UNIT_ACTION)
    text = "\n".join(report.lines())
    assert "finite-model oracle" in text
    assert report.isClosed == (report.double == CongruencePair(V1, [V1.x(1)], [], 3))


def test_closed_lattice_is_meet_closed():
    lattice = closed_lattice(V1, UNIT_ACTION)
    assert CongruencePair.full(V1, 3) in lattice
    for a in lattice:
        assert is_closed(a, UNIT_ACTION)
        for b in lattice:
            assert a.meet(b) in lattice


def test_beta_examples():
    A = FreeRep((1,), (1,))
    h1 = RepHom(A, W, {1: x1}, {1: y1})
    h2 = RepHom(A, W, {1: x2}, {1: y1})
    zero, full = CongruencePair.zero(W, 3), CongruencePair.full(W, 3)
    assert beta_related(h1, h1, zero)
    assert beta_related(h1, h2, full)
    assert not beta_related(h1, h2, zero)
    T = CongruencePair(W, [x1 - x2], [], 3)
    assert beta_related(h1, h2, T)
    assert beta_related_spanning(h1, h2, T, 3)


def test_beta_indeterminate_beyond_truncation():
    A = FreeRep((1,), (1,))
    deep = lie_bracket(x1, lie_bracket(x1, lie_bracket(x1, x2)))
    h1 = RepHom(A, W, {1: deep}, {1: y1})
    h2 = RepHom(A, W, {1: x1}, {1: y1})
    with pytest.raises(IndeterminateError):
        beta_related(h1, h2, CongruencePair.full(W, 3))


def test_restriction_and_extension():
    X2 = FreeRep((1, 2), ())
    X1 = FreeRep((1,), ())
    T = CongruencePair(X2, [X2.x(2)], [], 3)
    assert restrict_congruence(T, X1) == CongruencePair.zero(X1, 3)
    assert restrict_congruence(CongruencePair.full(X2, 3), X1) == CongruencePair.full(X1, 3)
    S = CongruencePair(X1, [X1.x(1)], [], 3)
    assert extend_congruence(S, X2) == CongruencePair(X2, [X2.x(1)], [], 3)
    with pytest.raises(ContextError):
        restrict_congruence(S, X2)


def test_transport_round_trip():
    B = FreeRep((1,), (1,))
    for gens in (([], []), ([B.x(1)], []), ([], [B.y(1)]), ([], [act(B.x(1), B.y(1))])):
        T = CongruencePair(B, *gens, 3)
        assert transport_Finv(transport_F(T)) == T
    with pytest.raises(RankError):
        transport_F(CongruencePair.zero(W, 3))


def test_transport_commutes_with_closure():
    for gens in (([V1.x(1)], []), ([], [act(V1.x(1), V1.y(1))])):
        TT = double_prime(CongruencePair(V1, *gens, 3), UNIT_ACTION)
        assert transport_F(TT) == pd_double_prime(transport_F(TT), UNIT_ACTION)
