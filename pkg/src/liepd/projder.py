"""Lie algebras with a projection-derivation (M, p) and the functors
F: (L, V) -> (L + V, p_V) and its inverse (M, p) -> (ker p, im p).

Elements of M are stored split as (l, v); p and r = id - p just pick a part.
"""
from .errors import ContextError, RankError, SortError
from .freelie import LieElement, bracketing
from .linalg import Ambient, kernel
from .representation import FinRep, FreeRep, RepHom
from .scalars import QQ


class PDContext:
    """F(H) for a free or finite representation H."""

    def __init__(self, base):
        if not isinstance(base, (FreeRep, FinRep)):
            raise TypeError("PD contexts wrap a FreeRep or a FinRep")
        self.base = base

    @property
    def field(self):
        return self.base.field

    def __eq__(self, other):
        return isinstance(other, PDContext) and self.base == other.base

    def __hash__(self):
        return hash(("F", self.base))

    def __repr__(self):
        return f"F({self.base!r})"

    def element(self, l=None, v=None):
        l = self.base.lzero() if l is None else l
        v = self.base.vzero() if v is None else v
        return PDElement(self, l, v)

    def zero(self):
        return self.element()

    def from_L(self, l):
        return self.element(l=l)

    def from_V(self, v):
        return self.element(v=v)

    def coords(self, u):
        out = {("L", k): c for k, c in self.base.coords(u.l).items()}
        out.update({("V", k): c for k, c in self.base.coords(u.v).items()})
        return out

    def ambient(self, d):
        """Degree <= d slice of M for a free base, keys tagged 'L' / 'V'."""
        W = self.base
        return Ambient([("L", w) for w in W.lie_keys(d)] + [("V", k) for k in W.module_keys(d)])


class FreePD(PDContext):
    """F(W(X, Y)) with |X| = |Y| = n, freely generated by m_k = x_k + y_k.

    The k-th generator pairs the k-th smallest x-index with the k-th
    smallest y-index.
    """

    def __init__(self, base):
        if not isinstance(base, FreeRep):
            raise TypeError("FreePD needs a free representation")
        if not base.balanced:
            raise RankError(f"{base!r} has |X| != |Y|; it has no free PD generator set")
        super().__init__(base)
        self.n = len(base.X)

    @classmethod
    def on(cls, n, field=None):
        return cls(FreeRep(range(1, n + 1), range(1, n + 1), field or QQ))

    def m(self, k):
        """The k-th free generator, k = 1..n."""
        W = self.base
        return self.element(W.x(W.X[k - 1]), W.y(W.Y[k - 1]))

    def generators(self):
        return [self.m(k) for k in range(1, self.n + 1)]


class PDElement:
    __slots__ = ("ctx", "l", "v")

    def __init__(self, ctx, l, v):
        base = ctx.base
        if not base.owns(l) or not base.owns(v):
            raise ContextError("components do not belong to the PD context")
        if _sort(l) != "L" or _sort(v) != "V":
            raise SortError("PD element needs an L part and a V part")
        self.ctx, self.l, self.v = ctx, l, v

    def _check(self, other):
        if not isinstance(other, PDElement) or (other.ctx is not self.ctx and other.ctx != self.ctx):
            raise ContextError("PD elements from different contexts")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return _raw(self.ctx, self.l + other.l, self.v + other.v)

    __radd__ = __add__

    def __sub__(self, other):
        self._check(other)
        return _raw(self.ctx, self.l - other.l, self.v - other.v)

    def __neg__(self):
        return _raw(self.ctx, -self.l, -self.v)

    def scale(self, c):
        return _raw(self.ctx, self.l.scale(c), self.v.scale(c))

    def __rmul__(self, c):
        return self.scale(c)

    def __bool__(self):
        return bool(self.l) or bool(self.v)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self
        if not isinstance(other, PDElement):
            return NotImplemented
        return self.ctx == other.ctx and self.l == other.l and self.v == other.v

    def __hash__(self):
        return hash((self.l, self.v))

    def degree(self):
        return max(self.l.degree(), self.v.degree())

    def homogeneous_components(self):
        ls, vs = self.l.homogeneous_components(), self.v.homogeneous_components()
        out = {}
        for d in sorted(set(ls) | set(vs)):
            out[d] = PDElement(self.ctx, ls.get(d, self.ctx.base.lzero()), vs.get(d, self.ctx.base.vzero()))
        return out

    def __str__(self):
        parts = [str(x) for x in (self.l, self.v) if x]
        return " + ".join(parts) or "0"

    def __repr__(self):
        return f"PDElement({self})"


def _sort(value):
    if isinstance(value, LieElement):
        return "L"
    return getattr(value, "sort", "V")


def _raw(ctx, l, v):
    """Build a PD element from parts known to be valid."""
    obj = object.__new__(PDElement)
    obj.ctx, obj.l, obj.v = ctx, l, v
    return obj


def pd_bracket(u1, u2):
    """[l1 + v1, l2 + v2] = [l1, l2] + l1 o v2 - l2 o v1."""
    u1._check(u2)
    H = u1.ctx.base
    return _raw(u1.ctx, H.bracket(u1.l, u2.l), H.action(u1.l, u2.v) - H.action(u2.l, u1.v))


def pd_p(u):
    return _raw(u.ctx, u.ctx.base.lzero(), u.v)


def pd_r(u):
    return _raw(u.ctx, u.l, u.ctx.base.vzero())


def functor_F(obj, free=False):
    """F(obj).  With ``free=True`` the result is a FreePD, which needs |X| = |Y|."""
    if free:
        return FreePD(obj)
    return PDContext(obj)


def functor_Finv(ctx):
    return ctx.base


class PDHom:
    """A PD homomorphism out of F(W), given by the images of the x- and
    y-generators of W as PD elements of the target."""

    def __init__(self, source, target, ximages, yimages):
        if not isinstance(source.base, FreeRep):
            raise TypeError("PD homs are defined out of free contexts")
        W = source.base
        self.source, self.target = source, target
        self.ximages, self.yimages = dict(ximages), dict(yimages)
        if set(self.ximages) != set(W.X) or set(self.yimages) != set(W.Y):
            raise ContextError("every generator needs exactly one image")
        for u in list(self.ximages.values()) + list(self.yimages.values()):
            if u.ctx != target:
                raise ContextError("image outside the target context")
        self._cache = {}

    @classmethod
    def from_generators(cls, source, target, images):
        """The extension of m_k -> images[k-1] out of a FreePD: x_k goes to
        r(image), y_k to p(image)."""
        if len(images) != source.n:
            raise ContextError(f"need {source.n} generator images")
        W = source.base
        return cls(source, target,
                   {i: pd_r(u) for i, u in zip(W.X, images)},
                   {j: pd_p(u) for j, u in zip(W.Y, images)})

    def _lie_word(self, w):
        key = ("L", w)
        if key not in self._cache:
            self._cache[key] = self._tree(bracketing(w))
        return self._cache[key]

    def _tree(self, t):
        if isinstance(t, tuple):
            return pd_bracket(self._tree(t[0]), self._tree(t[1]))
        return self.ximages[t]

    def _module_word(self, k):
        key = ("V", k)
        if key not in self._cache:
            w, y = k
            if not w:
                val = self.yimages[y]
            else:
                val = pd_bracket(self.ximages[w[0]], self._module_word((w[1:], y)))
            self._cache[key] = val
        return self._cache[key]

    def __call__(self, u):
        if u.ctx != self.source:
            raise ContextError("element outside the source context")
        out = self.target.zero()
        for w, c in u.l.terms.items():
            out = out + self._lie_word(w).scale(c)
        for k, c in u.v.terms.items():
            out = out + self._module_word(k).scale(c)
        return out


def functor_F_hom(h):
    """F(phi, psi) = phi + psi."""
    src, tgt = PDContext(h.source), PDContext(h.target)
    if h.source.balanced:
        src = FreePD(h.source)
    return PDHom(src, tgt,
                 {i: tgt.from_L(val) for i, val in h.phi.items()},
                 {j: tgt.from_V(val) for j, val in h.psi.items()})


def functor_Finv_hom(f):
    """(r f on ker p, p f on im p)."""
    W = f.source.base
    return RepHom(W, f.target.base,
                  {i: pd_r(f(f.source.from_L(W.x(i)))).l for i in W.X},
                  {j: pd_p(f(f.source.from_V(W.y(j)))).v for j in W.Y})


def identity_pd_hom(ctx):
    W = ctx.base
    return PDHom(ctx, ctx, {i: ctx.from_L(W.x(i)) for i in W.X},
                 {j: ctx.from_V(W.y(j)) for j in W.Y})


def pd_kernel_slice(f, d):
    """ker f on the degree <= d slice of the source."""
    amb = f.source.ambient(d)
    W = f.source.base
    images = []
    for tag, k in amb.keys:
        u = f.source.from_L(W.lie({k: 1})) if tag == "L" else f.source.from_V(W.module({k: 1}))
        images.append(f.target.coords(f(u)))
    return kernel(amb, W.field, images)


def split_kernel(h, d):
    """ker phi + ker psi as a subspace of the tagged PD slice."""
    from .representation import kernel_slices
    from .linalg import Subspace
    kl, kv = kernel_slices(h, d)
    amb = PDContext(h.source).ambient(d)
    vecs = [{("L", k): c for k, c in b.items()} for b in kl.basis()]
    vecs += [{("V", k): c for k, c in b.items()} for b in kv.basis()]
    return Subspace(amb, h.source.field, vecs)


def free_gen_transform(F):
    """([r(m_1), ..., r(m_n)], [p(m_1), ..., p(m_n)])."""
    gens = F.generators()
    return [pd_r(m) for m in gens], [pd_p(m) for m in gens]


def free_gen_extension(F, target, lvals, vvals):
    """The hom F^-1(F) -> target sending r(m_k) -> lvals[k], p(m_k) -> vvals[k].

    Built as F^-1 of the PD hom m_k -> lvals[k] + vvals[k] into F(target);
    this is the extension showing (ker p, im p) is free on the r- and
    p-images of the generators.
    """
    tgt = PDContext(target)
    images = [tgt.element(l, v) for l, v in zip(lvals, vvals)]
    return functor_Finv_hom(PDHom.from_generators(F, tgt, images))
