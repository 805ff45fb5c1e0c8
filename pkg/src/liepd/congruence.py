"""Congruence pairs (T1, T2) of a free representation, truncated at degree d,
and the Galois closure T -> T'' relative to a finite representation H.

T1 is an ideal of L(X), T2 a submodule of A(X)Y with T1 o V inside T2.  A
pair is stored through its degree <= d slices; everything reported is
"verified up to degree d".  The hom-set enumeration works over GF(p) only:
the symbolic theory is over Q, but Hom(W, H) must be finite to enumerate.
"""
import itertools
from typing import NamedTuple

from .errors import BudgetError, ContextError, IndeterminateError, RankError
from .freeassoc import ModuleElement
from .freelie import LieElement, lie_bracket
from .linalg import Ambient, Subspace, kernel
from .projder import FreePD, PDContext, PDHom, pd_kernel_slice
from .representation import RepHom, act, hom_eval
from .scalars import PrimeField

DEFAULT_DEGREE = 3
DEFAULT_BUDGET = 2 ** 16
CAVEAT = ("finite-model oracle: hom-sets enumerated over a prime field, "
          "not over the rationals")


def _coerce(W, e):
    """Re-home an element of a smaller free representation into W."""
    if isinstance(e, LieElement):
        return LieElement(e.terms, W.X, W.field)
    return ModuleElement(e.terms, W.X, W.Y, W.field)


class CongruencePair:
    """Congruence generated by ``gensL`` (in L(X)) and ``gensV`` (in A(X)Y).

    Closure slices are computed lazily.  Generators of degree above d
    constrain solutions but contribute nothing to the slices; brackets and
    multiples are only formed while they stay within degree d, which is
    exact for homogeneous generators.
    """

    def __init__(self, W, gensL=(), gensV=(), d=DEFAULT_DEGREE):
        if d < 1:
            raise ValueError("truncation degree must be >= 1")
        self.W, self.d = W, d
        self.gensL = [_coerce(W, g) for g in gensL]
        self.gensV = [_coerce(W, g) for g in gensV]
        for g in self.gensL:
            if not isinstance(g, LieElement):
                raise ContextError("L-generators must be Lie elements")
        self._slices = None

    @classmethod
    def from_slices(cls, W, d, Lsub, Vsub):
        """A pair given directly by (already closed) slices."""
        T = cls(W, d=d)
        T.gensL = [W.lie(v) for v in Lsub.basis()]
        T.gensV = [W.module(v) for v in Vsub.basis()]
        T._slices = (Lsub, Vsub)
        return T

    @classmethod
    def full(cls, W, d=DEFAULT_DEGREE):
        return cls.from_slices(W, d, Subspace.full(W.lie_ambient(d), W.field),
                               Subspace.full(W.module_ambient(d), W.field))

    @classmethod
    def zero(cls, W, d=DEFAULT_DEGREE):
        return cls.from_slices(W, d, Subspace(W.lie_ambient(d), W.field),
                               Subspace(W.module_ambient(d), W.field))

    @property
    def closureL(self):
        return self._closed()[0]

    @property
    def closureV(self):
        return self._closed()[1]

    def _closed(self):
        if self._slices is None:
            self._slices = congruence_close_slices(self.W, self.gensL, self.gensV, self.d)
        return self._slices

    def key(self):
        return (self.W, self.d, self.closureL, self.closureV)

    def __eq__(self, other):
        return isinstance(other, CongruencePair) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __le__(self, other):
        return self.closureL <= other.closureL and self.closureV <= other.closureV

    def meet(self, other):
        return CongruencePair.from_slices(self.W, self.d, self.closureL.intersection(other.closureL),
                                          self.closureV.intersection(other.closureV))

    def contains(self, e):
        if isinstance(e, LieElement):
            return self.closureL.contains(e.terms)
        return self.closureV.contains(e.terms)

    def dump(self):
        """Basis vectors in canonical text form, one per line."""
        lines = [f"L: {self.W.lie(v)}" for v in self.closureL.basis()]
        lines += [f"V: {self.W.module(v)}" for v in self.closureV.basis()]
        return lines

    def __repr__(self):
        return f"CongruencePair({self.W!r}, d={self.d}, dims={self.closureL.dim}/{self.closureV.dim})"


def congruence_close_slices(W, gensL, gensV, d):
    la, ma = W.lie_ambient(d), W.module_ambient(d)
    lbasis = W.lie_basis(d)
    mbasis = W.module_basis(d)
    L = Subspace(la, W.field, [g.terms for g in gensL if g.degree() <= d])
    while True:
        new = []
        for row in L.basis():
            v = W.lie(row)
            for b in lbasis:
                if v.degree() + b.degree() <= d:
                    br = lie_bracket(v, b)
                    if br:
                        new.append(br.terms)
        grown = L.join(Subspace(la, W.field, new))
        if grown == L:
            break
        L = grown
    seeds = [g.terms for g in gensV if g.degree() <= d]
    for row in L.basis():
        l = W.lie(row)
        for u in mbasis:
            if l.degree() + u.degree() <= d:
                seeds.append(act(l, u).terms)
    V = Subspace(ma, W.field, seeds)
    xs = [W.assoc({(i,): 1}) for i in W.X]
    while True:
        new = []
        for row in V.basis():
            v = W.module(row)
            if v.degree() < d:
                new.extend((x * v).terms for x in xs)
        grown = V.join(Subspace(ma, W.field, new))
        if grown == V:
            break
        V = grown
    return L, V


def congruence_close(T):
    """The closed pair (its slices computed); idempotent."""
    return CongruencePair.from_slices(T.W, T.d, T.closureL, T.closureV)


# -- finite models -----------------------------------------------------------

def _check_finite(W, H):
    if not isinstance(H.field, PrimeField):
        raise ContextError("hom-set enumeration needs a representation over a prime field")
    if W.field != H.field:
        raise ContextError("free representation and target use different fields")


def all_homs(W, H, budget=DEFAULT_BUDGET):
    """Every hom W -> H (generator assignments are free)."""
    _check_finite(W, H)
    p = H.field.p
    size = p ** (H.n * len(W.X) + H.m * len(W.Y))
    if size > budget:
        raise BudgetError(f"{size} generator assignments exceed the budget of {budget}")
    lvals = [H.lvec(c) for c in itertools.product(range(p), repeat=H.n)]
    vvals = [H.vvec(c) for c in itertools.product(range(p), repeat=H.m)]
    for xs in itertools.product(lvals, repeat=len(W.X)):
        for ys in itertools.product(vvals, repeat=len(W.Y)):
            yield RepHom(W, H, dict(zip(W.X, xs)), dict(zip(W.Y, ys)))


def solutions_of(T, H, budget=DEFAULT_BUDGET):
    """T'_H: the homs W -> H whose kernels contain every generator of T.

    Checking generators suffices because kernels are congruences.
    """
    out = []
    for h in all_homs(T.W, H, budget):
        if all(not hom_eval(h, g) for g in T.gensL) and all(not hom_eval(h, g) for g in T.gensV):
            out.append(h)
    return out


def kernels_of(homs, W, d):
    """(intersection of ker phi, intersection of ker psi) on the degree <= d
    slices; the full slices when ``homs`` is empty."""
    la, ma = W.lie_ambient(d), W.module_ambient(d)
    limgs = [{} for _ in la.keys]
    vimgs = [{} for _ in ma.keys]
    for n, h in enumerate(homs):
        T = h.target
        for i, w in enumerate(la.keys):
            for k, c in T.coords(h.lie_word(w)).items():
                limgs[i][(n, k)] = c
        for i, key in enumerate(ma.keys):
            for k, c in T.coords(h.module_word(key)).items():
                vimgs[i][(n, k)] = c
    return CongruencePair.from_slices(W, d, kernel(la, W.field, limgs), kernel(ma, W.field, vimgs))


def double_prime(T, H, budget=DEFAULT_BUDGET):
    """T''_H = (intersection of ker phi, intersection of ker psi) over T'_H."""
    return kernels_of(solutions_of(T, H, budget), T.W, T.d)


def is_closed(T, H, budget=DEFAULT_BUDGET):
    return double_prime(T, H, budget) == congruence_close(T)


class ClosureReport(NamedTuple):
    primal: list
    double: CongruencePair
    isClosed: bool
    caveat: str = CAVEAT

    def lines(self):
        out = [f"solutions: {len(self.primal)}",
               f"closed: {'yes' if self.isClosed else 'no'}",
               f"verified up to degree {self.double.d}"]
        out += self.double.dump()
        out.append(f"note: {self.caveat}")
        return out


def closure_report(T, H, budget=DEFAULT_BUDGET):
    sols = solutions_of(T, H, budget)
    dbl = kernels_of(sols, T.W, T.d)
    return ClosureReport(sols, dbl, dbl == congruence_close(T))


def _tagged_ambient(W, d):
    return Ambient([("L", k) for k in W.lie_keys(d)] + [("V", k) for k in W.module_keys(d)])


def _functionals(h, W, d):
    """Coordinate functionals of h on the slice: ker h is their common zero set."""
    out = []
    T = h.target
    for sort, keys, ev in (("L", W.lie_keys(d), h.lie_word), ("V", W.module_keys(d), h.module_word)):
        rows = {}
        for key in keys:
            for k, c in T.coords(ev(key)).items():
                rows.setdefault(k, {})[(sort, key)] = c
        out.extend(rows.values())
    return out


def _zero_set(R, W, d):
    """The pair of slices annihilated by the functionals spanning R."""
    la, ma = W.lie_ambient(d), W.module_ambient(d)
    rows = R.basis()
    limgs = [{n: r[("L", k)] for n, r in enumerate(rows) if ("L", k) in r} for k in la.keys]
    vimgs = [{n: r[("V", k)] for n, r in enumerate(rows) if ("V", k) in r} for k in ma.keys]
    return CongruencePair.from_slices(W, d, kernel(la, W.field, limgs), kernel(ma, W.field, vimgs))


def closed_lattice(W, H, d=DEFAULT_DEGREE, budget=DEFAULT_BUDGET):
    """Cl_H(W) at degree d: every intersection of kernel pairs of homs W -> H,
    the empty intersection being the full pair.

    Works dually: an intersection of kernels is the zero set of the span of
    the homs' evaluation functionals, and distinct spans give distinct zero
    sets, so the lattice is the closure of those spans under sums.
    """
    amb = _tagged_ambient(W, d)
    gens = {Subspace(amb, W.field, _functionals(h, W, d)) for h in all_homs(W, H, budget)}
    spans = {Subspace(amb, W.field)}
    # adding one generator at a time keeps the set join-closed
    for g in sorted(gens, key=lambda R: R.dim):
        if g not in spans:
            spans |= {s.join(g) for s in spans}
    return frozenset(_zero_set(R, W, d) for R in spans)


# -- beta relation -----------------------------------------------------------

def beta_related(h1, h2, T):
    """phi1(l) = phi2(l) mod T1 and psi1(v) = psi2(v) mod T2 for all l, v.

    Checked on generators, which suffices since T is a congruence.  T lives
    in the common target of h1 and h2.
    """
    if h1.source != h2.source or h1.target != h2.target or h1.target != T.W:
        raise ContextError("beta relation needs homs with common source and target equal to T's context")
    diffs = [h1.phi[i] - h2.phi[i] for i in h1.source.X] + [h1.psi[j] - h2.psi[j] for j in h1.source.Y]
    for diff in diffs:
        if diff.degree() > T.d:
            raise IndeterminateError(
                f"generator image difference has degree {diff.degree()} > truncation {T.d}")
        if not T.contains(diff):
            return False
    return True


def beta_related_spanning(h1, h2, T, e):
    """The same relation checked on every source basis element of degree
    <= e whose image difference fits in the truncation."""
    W = h1.source
    for l in W.lie_basis(e):
        diff = hom_eval(h1, l) - hom_eval(h2, l)
        if diff.degree() <= T.d and not T.contains(diff):
            return False
    for v in W.module_basis(e):
        diff = hom_eval(h1, v) - hom_eval(h2, v)
        if diff.degree() <= T.d and not T.contains(diff):
            return False
    return True


# -- restriction and extension ----------------------------------------------

def _nested(W1, W2):
    return set(W1.X) <= set(W2.X) and set(W1.Y) <= set(W2.Y) and W1.field == W2.field


def restrict_congruence(T, W1):
    """(T1 meet L(X1), T2 meet A(X1)Y1) for W1 inside T's context."""
    if not _nested(W1, T.W):
        raise ContextError(f"{W1!r} is not contained in {T.W!r}")
    return CongruencePair.from_slices(W1, T.d, T.closureL.restrict(W1.lie_ambient(T.d)),
                                      T.closureV.restrict(W1.module_ambient(T.d)))


def extend_congruence(T, W2):
    """The congruence of W2 generated by T (T's context inside W2)."""
    if not _nested(T.W, W2):
        raise ContextError(f"{T.W!r} is not contained in {W2!r}")
    return CongruencePair(W2, [T.W.lie(v) for v in T.closureL.basis()],
                          [T.W.module(v) for v in T.closureV.basis()], T.d)


# -- transport along F ------------------------------------------------------------

class PDCongruence:
    """A congruence of F(W) given by its degree <= d slice (keys tagged 'L'/'V')."""

    def __init__(self, ctx, d, space):
        self.ctx, self.d, self.space = ctx, d, space

    def __eq__(self, other):
        return (isinstance(other, PDCongruence) and self.ctx == other.ctx
                and self.d == other.d and self.space == other.space)

    def __hash__(self):
        return hash((self.ctx, self.d, self.space))

    def contains(self, u):
        return self.space.contains(self.ctx.coords(u))

    def __repr__(self):
        return f"PDCongruence({self.ctx!r}, d={self.d}, dim={self.space.dim})"


def transport_F(T):
    """T1 + T2 inside F(W); W must have |X| = |Y|."""
    if not T.W.balanced:
        raise RankError(f"{T.W!r} has |X| != |Y|")
    ctx = FreePD(T.W)
    vecs = [{("L", k): c for k, c in v.items()} for v in T.closureL.basis()]
    vecs += [{("V", k): c for k, c in v.items()} for v in T.closureV.basis()]
    return PDCongruence(ctx, T.d, Subspace(ctx.ambient(T.d), T.W.field, vecs))


def transport_Finv(S):
    """(S meet ker p, S meet im p) as a pair of W."""
    W, d = S.ctx.base, S.d
    tagged_l = Ambient([("L", k) for k in W.lie_keys(d)])
    tagged_v = Ambient([("V", k) for k in W.module_keys(d)])
    Lpart = S.space.restrict(tagged_l)
    Vpart = S.space.restrict(tagged_v)
    L = Subspace(W.lie_ambient(d), W.field, [{k: c for (_, k), c in v.items()} for v in Lpart.basis()])
    V = Subspace(W.module_ambient(d), W.field, [{k: c for (_, k), c in v.items()} for v in Vpart.basis()])
    return CongruencePair.from_slices(W, d, L, V)


def all_pd_homs(F, H, budget=DEFAULT_BUDGET):
    """Every PD hom F -> F(H) out of a free PD algebra, by generator images
    m_k -> (l, v) in F(H)."""
    _check_finite(F.base, H)
    p = H.field.p
    size = p ** ((H.n + H.m) * F.n)
    if size > budget:
        raise BudgetError(f"{size} generator assignments exceed the budget of {budget}")
    tgt = PDContext(H)
    vals = [tgt.element(H.lvec(c[:H.n]), H.vvec(c[H.n:]))
            for c in itertools.product(range(p), repeat=H.n + H.m)]
    for images in itertools.product(vals, repeat=F.n):
        yield PDHom.from_generators(F, tgt, list(images))


def pd_double_prime(S, H, budget=DEFAULT_BUDGET):
    """S'' computed on the PD side: intersect kernels of the PD homs
    F(W) -> F(H) whose kernel contains S."""
    F = S.ctx
    amb = F.ambient(S.d)
    out = Subspace.full(amb, F.field)
    for f in all_pd_homs(F, H, budget):
        K = pd_kernel_slice(f, S.d)
        if S.space <= K:
            out = out.intersection(K)
    return PDCongruence(F, S.d, out)


def pd_beta_related(f1, f2, S):
    """f1(m) = f2(m) mod S for all m, checked on the x- and y-generators."""
    W = f1.source.base
    gens = [f1.source.from_L(W.x(i)) for i in W.X] + [f1.source.from_V(W.y(j)) for j in W.Y]
    for g in gens:
        diff = f1(g) - f2(g)
        if diff.degree() > S.d:
            raise IndeterminateError("generator image difference exceeds the truncation")
        if not S.contains(diff):
            return False
    return True
