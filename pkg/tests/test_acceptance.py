"""One test per acceptance criterion; each prints a single pass/fail line."""
import contextlib
import itertools
import random
import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction

import conftest
import oracles

from liepd import terms
from liepd.congruence import (CongruencePair, beta_related, closed_lattice, double_prime,
                              extend_congruence, is_closed, pd_beta_related, pd_double_prime,
                              restrict_congruence, transport_F, transport_Finv)
from liepd.freelie import embed_assoc, lie_normal_form, lyndon_basis
from liepd.projder import (FreePD, PDHom, functor_F, functor_F_hom, functor_Finv,
                           functor_Finv_hom, pd_bracket, pd_kernel_slice, pd_p, split_kernel)
from liepd.representation import FinRep, FreeRep, RepHom, rank_invariants
from liepd.scalars import GF
from liepd.words import classify


@contextlib.contextmanager
def criterion(n, text):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        line = f"criterion {n}: FAIL  {text}"
        conftest.CRITERIA_LINES.append(line)
        print(line)
        raise
    line = f"criterion {n}: PASS  {text} ({time.perf_counter() - start:.2f}s)"
    conftest.CRITERIA_LINES.append(line)
    print(line)


# -- helpers ---------------------------------------------------------------------

def random_lie(rng, W, max_degree, terms_=3):
    keys = W.lie_keys(max_degree)
    if not keys:
        return W.lzero()
    return W.lie({rng.choice(keys): Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(terms_)})


def random_module(rng, W, max_degree, terms_=3):
    keys = W.module_keys(max_degree)
    if not keys:
        return W.vzero()
    return W.module({rng.choice(keys): Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(terms_)})


def random_pd(rng, F, max_degree):
    return F.element(random_lie(rng, F.base, max_degree), random_module(rng, F.base, max_degree))


def random_free_rep(rng, balanced=True):
    k = rng.randint(0, 3)
    X = rng.sample(range(1, 7), k)
    Y = rng.sample(range(1, 7), k if balanced else rng.randint(0, 3))
    return FreeRep(X, Y)


# -- criteria ----------------------------------------------------------------------------

def test_criterion_1_lyndon_dimensions():
    with criterion(1, "Lyndon basis counts match the Witt formula"):
        start = time.perf_counter()
        for q, top in ((2, 6), (3, 4)):
            counts = Counter(b.degree for b in lyndon_basis(tuple(range(1, q + 1)), top))
            got = [counts[n] for n in range(1, top + 1)]
            assert got == [oracles.witt(q, n) for n in range(1, top + 1)]
        assert [oracles.witt(2, n) for n in range(1, 7)] == [2, 1, 2, 3, 6, 9]
        assert [oracles.witt(3, n) for n in range(1, 5)] == [3, 3, 8, 18]
        assert time.perf_counter() - start < 1.0


def test_criterion_2_normal_form_matches_expansion():
    with criterion(2, "embed(normal form) equals direct expansion on 500 random terms"):
        rng = random.Random(2)
        start = time.perf_counter()
        for _ in range(500):
            q = rng.randint(1, 3)
            X = tuple(range(1, q + 1))
            tree = oracles.random_tree(rng, list(X), 5)
            nf = lie_normal_form(tree, X)
            assert embed_assoc(nf).terms == oracles.expand(tree)
        assert time.perf_counter() - start < 30.0


def test_criterion_3_pd_axioms():
    with criterion(3, "p^2 = p, derivation law, Jacobi, [im p, im p] = 0 on 500 random elements"):
        rng = random.Random(3)
        F = FreePD.on(2)
        for _ in range(500):
            u1, u2, u3 = (random_pd(rng, F, rng.randint(1, 4)) for _ in range(3))
            assert pd_p(pd_p(u1)) == pd_p(u1)
            assert pd_p(pd_bracket(u1, u2)) == pd_bracket(pd_p(u1), u2) + pd_bracket(u1, pd_p(u2))
            jac = (pd_bracket(u1, pd_bracket(u2, u3)) + pd_bracket(u2, pd_bracket(u3, u1))
                   + pd_bracket(u3, pd_bracket(u1, u2)))
            assert jac == F.zero()
            assert pd_bracket(pd_p(u1), pd_p(u2)) == F.zero()


def test_criterion_4_functor_round_trips():
    with criterion(4, "F^-1 F = id and F F^-1 = id on 50 objects and 100 homs"):
        rng = random.Random(4)
        for _ in range(50):
            W = random_free_rep(rng)
            assert functor_Finv(functor_F(W, free=True)) == W
            ctx = functor_F(W, free=True)
            assert functor_F(functor_Finv(ctx), free=True) == ctx
        for k in range(100):
            W, T = random_free_rep(rng), random_free_rep(rng)
            if k % 2 == 0:
                h = RepHom(W, T, {i: random_lie(rng, T, 3) for i in W.X},
                           {j: random_module(rng, T, 3) for j in W.Y})
                back = functor_Finv_hom(functor_F_hom(h))
                assert back.phi == h.phi and back.psi == h.psi
            else:
                src, tgt = FreePD(W), FreePD(T)
                f = PDHom.from_generators(src, tgt, [random_pd(rng, tgt, 3) for _ in range(src.n)])
                g = functor_F_hom(functor_Finv_hom(f))
                for m in src.generators():
                    assert g(m) == f(m)
                for i in W.X:
                    assert g(src.from_L(W.x(i))) == f(src.from_L(W.x(i)))
                for j in W.Y:
                    assert g(src.from_V(W.y(j))) == f(src.from_V(W.y(j)))


def random_finrep(rng):
    """Rational representations with n, m <= 2 from a few families."""
    q = lambda: Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    kind = rng.randrange(4)
    if kind == 0:   # abelian, n = 2, commuting actions (polynomials in one matrix)
        A = [[q(), q()], [q(), q()]]
        a, b = q(), q()
        B = [[a * A[r][s] + (b if r == s else 0) for s in range(2)] for r in range(2)]
        return FinRep(2, {}, 2, [A, B])
    if kind == 1:   # [e1, e2] = e2 acting on a flag
        a, b, u = q(), q(), q()
        return FinRep(2, {(0, 1): {1: 1}}, 2, [[[a + 1, b], [0, a]], [[0, u], [0, 0]]])
    if kind == 2:   # [e1, e2] = e2 on a line: e2 acts by 0
        return FinRep(2, {(0, 1): {1: 1}}, 1, [[[q()]], [[0]]])
    if rng.random() < 0.5:    # n = 1: any single matrix
        return FinRep(1, {}, 2, [[[q(), q()], [q(), q()]]])
    return FinRep(1, {}, 1, [[[q()]]])


def test_criterion_5_kernel_transport():
    with criterion(5, "ker(phi + psi) = ker phi + ker psi on degree <= 3 slices, 50 homs"):
        rng = random.Random(5)
        W = FreeRep((1, 2), (1, 2))
        nontrivial = 0
        for _ in range(50):
            H = random_finrep(rng)
            q = lambda: Fraction(rng.randint(-2, 2), rng.randint(1, 2))
            h = RepHom(W, H, {i: H.lvec([q() for _ in range(H.n)]) for i in W.X},
                       {j: H.vvec([q() for _ in range(H.m)]) for j in W.Y})
            K = pd_kernel_slice(functor_F_hom(h), 3)
            assert K == split_kernel(h, 3)
            nontrivial += 0 < K.dim < len(K.ambient)
        assert nontrivial > 25


def test_criterion_6_word_classification():
    with criterion(6, "word search survivors are exactly alpha[m1,m2], alpha != 0, all inner"):
        start = time.perf_counter()
        rows, survivors = classify(range(-2, 3), 3)
        alphas = set()
        for W, (scalar, plus, bracket, proj), inner in survivors:
            assert (scalar[0].name, scalar[1].name) == ("id", "id")
            assert tuple(plus) == (1, 1, 1, 1)
            assert tuple(proj) == (0, 1)
            assert bracket.beta == -bracket.alpha and bracket.gamma == bracket.alpha
            assert inner.passed and inner.scaling_natural
            alphas.add(bracket.alpha)
        assert alphas == {-2, -1, 1, 2}
        assert len(survivors) == 4
        assert time.perf_counter() - start < 60.0


F2 = GF(2)
W1 = FreeRep((1,), (1,), F2)
W2 = FreeRep((1, 2), (1, 2), F2)


def h_models():
    return [FinRep(1, {}, 1, [[[a]]], F2) for a in (0, 1)]


def small_generator_sets():
    """Every set of <= 2 elements of degree <= 2 in W(x1; y1) over F2."""
    elems = [("L", W1.x(1))]
    for c in itertools.product(range(2), repeat=2):
        if any(c):
            elems.append(("V", W1.module({((), 1): c[0], ((1,), 1): c[1]})))
    sets = [()]
    sets += [(e,) for e in elems]
    sets += list(itertools.combinations(elems, 2))
    return sets


def pair_from(gens, W, d=3):
    return CongruencePair(W, [v for s, v in gens if s == "L"], [v for s, v in gens if s == "V"], d)


def test_criterion_7_galois_correspondence():
    with criterion(7, "T <= T'', T'''' = T'', restriction/extension identities, lattice implication"):
        start = time.perf_counter()
        for H in h_models():
            for gens in small_generator_sets():
                T = pair_from(gens, W1)
                TT = double_prime(T, H)
                assert T <= TT
                assert double_prime(TT, H) == TT
                # closed in W2 restricts to closed in W1
                T2 = double_prime(pair_from(gens, W2), H)
                R = restrict_congruence(T2, W1)
                assert is_closed(R, H)
                # a closed pair of W1 is recovered from its extension to W2
                assert restrict_congruence(double_prime(extend_congruence(TT, W2), H), W1) == TT
        # lattice implication: Cl_H(W2) = Cl_H'(W2) forces equality on W1
        models = h_models()
        models += [H.direct_product(H) for H in h_models()]
        instances = 0
        for A, B in itertools.combinations(models, 2):
            if closed_lattice(W2, A) == closed_lattice(W2, B):
                instances += 1
                assert closed_lattice(W1, A) == closed_lattice(W1, B)
        assert instances >= 2
        assert time.perf_counter() - start < 60.0


def random_hom_into(rng, source, target, max_degree=2):
    def lie():
        keys = target.lie_keys(max_degree)
        return target.lie({k: rng.randint(0, 1) for k in rng.sample(keys, min(2, len(keys)))})

    def mod():
        keys = target.module_keys(max_degree)
        return target.module({k: rng.randint(0, 1) for k in rng.sample(keys, min(2, len(keys)))})

    return RepHom(source, target, {i: lie() for i in source.X}, {j: mod() for j in source.Y})


def test_criterion_8_transport():
    with criterion(8, "transport round trip on closed pairs and beta invariance on 100 pairs"):
        for H in h_models():
            for gens in small_generator_sets():
                TT = double_prime(pair_from(gens, W1), H)
                assert transport_Finv(transport_F(TT)) == TT
                assert transport_F(TT) == pd_double_prime(transport_F(TT), H)
        rng = random.Random(8)
        closed = sorted(closed_lattice(W2, h_models()[1]), key=lambda T: (T.closureL.dim, T.closureV.dim,
                                                                          T.dump()))
        outcomes = Counter()
        for k in range(100):
            T = closed[k % len(closed)]
            h1 = random_hom_into(rng, W1, W2)
            if k % 2:
                shiftL = W2.lie(rng.choice(T.closureL.basis())) if T.closureL.dim else W2.lzero()
                shiftV = W2.module(rng.choice(T.closureV.basis())) if T.closureV.dim else W2.vzero()
                h2 = RepHom(W1, W2, {1: h1.phi[1] + shiftL}, {1: h1.psi[1] + shiftV})
            else:
                h2 = random_hom_into(rng, W1, W2)
            rep_side = beta_related(h1, h2, T)
            pd_side = pd_beta_related(functor_F_hom(h1), functor_F_hom(h2), transport_F(T))
            assert rep_side == pd_side
            outcomes[rep_side] += 1
        assert outcomes[True] > 0 and outcomes[False] > 0


def test_criterion_9_ibn_invariants():
    with criterion(9, "rank invariants equal (|X|, |Y|) and are permutation invariant"):
        for nx, ny in itertools.product((1, 2, 3), repeat=2):
            W = FreeRep(range(1, nx + 1), range(1, ny + 1))
            assert rank_invariants(W, 3) == (nx, ny)
            px = dict(zip(W.X, reversed(W.X)))
            py = dict(zip(W.Y, W.Y[1:] + W.Y[:1]))
            iso = RepHom(W, W, {i: W.x(px[i]) for i in W.X}, {j: W.y(py[j]) for j in W.Y})
            assert rank_invariants(W, 3, via=iso) == (nx, ny)


CLI_RUNS = [
    ["nf", "[x2,x1]"],
    ["nf", "[[x1,x2],x1] - 2*[x2,[x2,x1]]"],
    ["nf", "x2*x1*y1 + 1/2*[x1,x2].y1"],
    ["nf", "--pd", "[m1,m2] + p(m3)"],
    ["rank", "--rep", "W(x1,x2;y1)"],
    ["coproduct", "--rep", "W(x1;y1)", "--rep", "W(x1,x2;y1)"],
    ["word-classify", "--range", "1"],
]


def test_criterion_10_cli_round_trip_and_determinism():
    with criterion(10, "parse(format(t)) = t on 200 terms; CLI output byte-identical across runs"):
        for ast, mode in oracles.term_corpus(200):
            text = terms.format_term(ast)
            assert terms.parse_term(text, mode) == ast
        for argv in CLI_RUNS:
            runs = [subprocess.run([sys.executable, "-m", "liepd", *argv], capture_output=True, check=True).stdout
                    for _ in range(2)]
            assert runs[0] == runs[1] and runs[0]
