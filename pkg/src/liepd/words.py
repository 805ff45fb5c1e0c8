"""Word systems and derived operations on free PD algebras.

A word system replaces each basic operation (0, scalar multiplication,
+, bracket, p) by an element of the free algebra of matching arity; the
derived ("starred") operation substitutes its arguments for the free
generators.  The solvers below enumerate low-degree candidate words and keep
those whose starred operations satisfy every PD axiom and make the
generator-fixing map into the starred algebra bijective.
"""
import itertools
from fractions import Fraction
from typing import NamedTuple

from .errors import ContextError
from .linalg import Ambient, Subspace, inverse
from .projder import FreePD, PDHom, functor_Finv_hom, pd_bracket, pd_p, pd_r
from .representation import hom_check
from .scalars import format_scalar

PROBES = tuple(Fraction(x) for x in (0, 1, -1, 2, -2, Fraction(1, 2), Fraction(1, 3)))

F1 = FreePD.on(1)
F2 = FreePD.on(2)
F3 = FreePD.on(3)


# -- scalar words ------------------------------------------------------------

class ScalarMap(NamedTuple):
    """A map k -> k used as phi or psi in lambda * m = phi(l) r(m) + psi(l) p(m)."""
    name: str
    fn: object

    def __call__(self, x):
        return Fraction(self.fn(Fraction(x)))

    def __str__(self):
        return self.name


SCALAR_MAPS = {
    "id": ScalarMap("id", lambda x: x),
    "zero": ScalarMap("zero", lambda x: 0),
    "neg": ScalarMap("neg", lambda x: -x),
    "double": ScalarMap("double", lambda x: 2 * x),
    "square": ScalarMap("square", lambda x: x * x),
    "one": ScalarMap("one", lambda x: 1),
}


class LawReport(NamedTuple):
    passed: bool
    failures: list   # (law, witness text)

    @property
    def first(self):
        return self.failures[0][0] if self.failures else None


def scalar_word_constraints(phi, psi, probes=PROBES):
    """Check that phi and psi are unital ring endomorphisms of k on probes.

    Laws are tried in the order mult_hom, add_hom, unit; pairs (l, m) run
    over probes row by row, so the first witness is the smallest one.
    """
    failures = []
    for law in ("mult_hom", "add_hom", "unit"):
        for name, f in (("phi", phi), ("psi", psi)):
            w = _scalar_law(law, f, probes)
            if w is not None:
                failures.append((law, f"{name}={f}: {w}"))
    return LawReport(not failures, failures)


def _scalar_law(law, f, probes):
    if law == "unit":
        return None if f(1) == 1 else f"f(1) = {format_scalar(f(1))}"
    for l, m in itertools.product(probes, repeat=2):
        if law == "mult_hom" and f(m) * f(l) != f(m * l):
            return f"lambda={format_scalar(l)}, mu={format_scalar(m)}"
        if law == "add_hom" and f(l + m) != f(l) + f(m):
            return f"lambda={format_scalar(l)}, mu={format_scalar(m)}"
    return None


# -- candidate families -----------------------------------------------------

def _r(k, F):
    return pd_r(F.m(k))


def _p(k, F):
    return pd_p(F.m(k))


class BracketWordFamily(NamedTuple):
    """alpha [r1, r2] + beta [r2, p1] + gamma [r1, p2] in F(m1, m2)."""
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def word(self):
        F = F2
        return (pd_bracket(_r(1, F), _r(2, F)).scale(self.alpha)
                + pd_bracket(_r(2, F), _p(1, F)).scale(self.beta)
                + pd_bracket(_r(1, F), _p(2, F)).scale(self.gamma))

    def __str__(self):
        return "bracket(a={}, b={}, c={})".format(*map(format_scalar, self))


class ProjWordFamily(NamedTuple):
    """delta r(m) + eps p(m) in F(m)."""
    delta: Fraction
    eps: Fraction

    def word(self):
        return _r(1, F1).scale(self.delta) + _p(1, F1).scale(self.eps)

    def __str__(self):
        return "proj(d={}, e={})".format(*map(format_scalar, self))


class PlusWordFamily(NamedTuple):
    """a1 r1 + a2 r2 + b1 p1 + b2 p2 in F(m1, m2)."""
    a1: Fraction
    a2: Fraction
    b1: Fraction
    b2: Fraction

    def word(self):
        F = F2
        return (_r(1, F).scale(self.a1) + _r(2, F).scale(self.a2)
                + _p(1, F).scale(self.b1) + _p(2, F).scale(self.b2))

    def __str__(self):
        return "plus(a1={}, a2={}, b1={}, b2={})".format(*map(format_scalar, self))


class WordSystem:
    """{w0, w_lambda, w_plus, w_bracket, w_p}.

    ``scalar`` is a pair (phi, psi) of ScalarMaps; the other words are PD
    elements of F(m1, m2) (plus, bracket) and F(m1) (proj).  w0 is always 0.
    """

    def __init__(self, scalar=None, plus=None, bracket=None, proj=None, label=None):
        ident = SCALAR_MAPS["id"]
        self.scalar = scalar or (ident, ident)
        self.plus = plus if plus is not None else F2.m(1) + F2.m(2)
        self.bracket = bracket if bracket is not None else pd_bracket(F2.m(1), F2.m(2))
        self.proj = proj if proj is not None else pd_p(F1.m(1))
        for word, ctx in ((self.plus, F2), (self.bracket, F2), (self.proj, F1)):
            if word.ctx != ctx:
                raise ContextError("word lives in the wrong free algebra")
        self.label = label
        self._homs = {}

    @classmethod
    def identity(cls):
        return cls(label="identity")

    @classmethod
    def from_families(cls, plus=None, bracket=None, proj=None, scalar=None):
        return cls(scalar=scalar,
                   plus=plus.word() if plus is not None else None,
                   bracket=bracket.word() if bracket is not None else None,
                   proj=proj.word() if proj is not None else None)

    @property
    def w0(self):
        return F1.zero()

    def __repr__(self):
        if self.label:
            return f"WordSystem({self.label})"
        return (f"WordSystem(scalar={self.scalar[0]}/{self.scalar[1]}, plus={self.plus}, "
                f"bracket={self.bracket}, proj={self.proj})")


ARITY = {"zero": 0, "scalar": 1, "plus": 2, "bracket": 2, "proj": 1}


def word_apply(W, op, args, scalar=None):
    """The derived operation op* on ``args`` (PD elements sharing a context).

    For op == "scalar" pass the scalar as ``scalar``.
    """
    args = list(args)
    if len(args) != ARITY[op]:
        raise ContextError(f"{op} takes {ARITY[op]} arguments, got {len(args)}")
    if op == "zero":
        raise ContextError("the nullary operation needs a target context; use ctx.zero()")
    ctx = args[0].ctx
    if any(a.ctx != ctx for a in args):
        raise ContextError("arguments from different contexts")
    if op == "scalar":
        phi, psi = W.scalar
        return pd_r(args[0]).scale(phi(scalar)) + pd_p(args[0]).scale(psi(scalar))
    word, F = {"plus": (W.plus, F2), "bracket": (W.bracket, F2), "proj": (W.proj, F1)}[op]
    return PDHom.from_generators(F, ctx, args)(word)


class Starred:
    """The starred operations of a word system on one context."""

    def __init__(self, W):
        self.W = W
        self._memo = {}

    def _apply(self, op, args, scalar=None):
        key = (op, args, scalar)
        if key not in self._memo:
            self._memo[key] = word_apply(self.W, op, args, scalar=scalar)
        return self._memo[key]

    def plus(self, a, b):
        return self._apply("plus", (a, b))

    def scal(self, c, a):
        return self._apply("scalar", (a,), Fraction(c))

    def br(self, a, b):
        return self._apply("bracket", (a, b))

    def p(self, a):
        return self._apply("proj", (a,))

    def r(self, a):
        return self.plus(a, self.scal(-1, self.p(a)))

    def sigma(self, F, u):
        """The generator-fixing map F -> F*_W evaluated at u.

        x_k -> r*(m_k), y_k -> p*(m_k), brackets -> starred brackets,
        linear combinations -> starred sums and scalings.
        """
        cache = {}

        def gen(tag, k):
            key = (tag, k)
            if key not in cache:
                m = F.m(F.base.X.index(k) + 1) if tag == "x" else F.m(F.base.Y.index(k) + 1)
                cache[key] = self.r(m) if tag == "x" else self.p(m)
            return cache[key]

        def tree(t):
            if isinstance(t, tuple):
                return self.br(tree(t[0]), tree(t[1]))
            return gen("x", t)

        from .freelie import bracketing

        def module(w, y):
            val = gen("y", y)
            for i in reversed(w):
                val = self.br(gen("x", i), val)
            return val

        out = F.zero()
        for w, c in u.l.items():
            out = self.plus(out, self.scal(c, tree(bracketing(w))))
        for (w, y), c in u.v.items():
            out = self.plus(out, self.scal(c, module(w, y)))
        return out


# -- the axiom checker -------------------------------------------------------

class Failure(NamedTuple):
    axiom: str
    witness: str
    residual: object = None

    def __str__(self):
        return f"{self.axiom}: {self.witness}"


class StarReport(NamedTuple):
    passed: bool
    degree: int
    failures: list

    @property
    def first(self):
        return self.failures[0].axiom if self.failures else None

    def __str__(self):
        head = f"{'pass' if self.passed else 'fail'} (verified up to degree {self.degree})"
        return "\n".join([head] + [f"  {f}" for f in self.failures])


def truncate(u, d):
    return u.ctx.element(u.l.truncate(d), u.v.truncate(d))


def _samples(F, d):
    gens = F.generators()
    out = list(gens)
    if d >= 2 and F.n >= 2:
        out += [pd_bracket(gens[0], gens[1]), pd_p(gens[-1]) + gens[0].scale(Fraction(1, 2)),
                pd_r(gens[1]).scale(-2)]
    return [u for u in out if u.degree() <= d]


def _slice_basis(F, d):
    W = F.base
    return ([F.from_L(W.lie({w: 1})) for w in W.lie_keys(d)]
            + [F.from_V(W.module({k: 1})) for k in W.module_keys(d)])


_GROUP_CACHE = {}


def _cached(key, compute):
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = compute()
    return _GROUP_CACHE[key]


def starred_axiom_check(W, d=3, F=None, stop_at_first=False):
    """Check the starred operations of W on F (default F(m1,m2,m3)).

    Checks, in order: scalar unit and multiplicativity, the + and
    scalar-distributivity laws, antisymmetry, bilinearity
    and Jacobi for the starred bracket, linearity and idempotence of p*,
    p* neither zero nor surjective, the derivation law, m1 x m2 != 0,
    p*(m1 x m2) != 0, and bijectivity of the generator-fixing map
    F -> F*_W on the degree <= d slice.  Every failing check is listed,
    at most one per axiom.

    Each group of checks only reads some of the words, so group results
    are memoized on exactly those words; solvers that vary one word at a
    time then pay for the other groups once.
    """
    F = F or F3
    S = Starred(W)
    samples = _samples(F, d)
    gens = samples[:F.n]
    zero = F.zero()
    pairs = [(a, b) for a, b in itertools.product(samples, repeat=2) if a.degree() + b.degree() <= d + 1]
    names = {id(u): f"u{i + 1}" for i, u in enumerate(samples)}

    def nm(*us):
        return ",".join(names[id(u)] for u in us)

    def run(checks):
        out = []
        for axiom, cases in checks:
            for label, lhs, rhs in cases:
                if lhs != rhs:
                    out.append(Failure(axiom, f"{label}: difference {lhs - rhs}", lhs - rhs))
                    break
            if out and stop_at_first:
                break
        return out

    def scalar_group():
        return run([
            ("scalar:unit", ((f"1*{nm(a)}", S.scal(1, a), a) for a in samples)),
            ("scalar:mult", ((f"({format_scalar(l)}*{format_scalar(m)})*{nm(a)}",
                              S.scal(l * m, a), S.scal(l, S.scal(m, a)))
                             for a in samples[:2] for l in PROBES for m in PROBES)),
        ])

    def plus_group():
        return run([
            ("plus:zero", ((f"{nm(a)}+0", S.plus(a, zero), a) for a in samples)),
            ("plus:comm", ((f"{nm(a, b)}", S.plus(a, b), S.plus(b, a)) for a, b in pairs)),
            ("plus:assoc", ((f"{nm(a, b, c)}", S.plus(S.plus(a, b), c), S.plus(a, S.plus(b, c)))
                            for a, b, c in itertools.product(samples[:3], repeat=3))),
            ("plus:inverse", ((f"{nm(a)}", S.plus(a, S.scal(-1, a)), zero) for a in samples)),
            ("scalar:add", ((f"({format_scalar(l)}+{format_scalar(m)})*{nm(a)}",
                             S.scal(l + m, a), S.plus(S.scal(l, a), S.scal(m, a)))
                            for a in samples[:2] for l in PROBES for m in PROBES)),
            ("scalar:distrib", ((f"{format_scalar(l)}*({nm(a, b)})", S.scal(l, S.plus(a, b)),
                                 S.plus(S.scal(l, a), S.scal(l, b)))
                                for a, b in pairs for l in PROBES[2:5])),
        ])

    def bracket_group():
        out = run([
            ("bracket:alternating", ((f"{nm(a)}x{nm(a)}", S.br(a, a), zero) for a in samples)),
            ("bracket:antisymmetry", ((f"{nm(a, b)}", S.br(a, b), -S.br(b, a)) for a, b in pairs)),
            ("bracket:bilinear", itertools.chain(
                ((f"({nm(a)}+{nm(b)})x{nm(c)}", S.br(S.plus(a, b), c), S.plus(S.br(a, c), S.br(b, c)))
                 for a, b in pairs for c in gens),
                ((f"({format_scalar(l)}*{nm(a)})x{nm(b)}", S.br(S.scal(l, a), b), S.scal(l, S.br(a, b)))
                 for a, b in pairs for l in PROBES[2:5]))),
        ])
        if out and stop_at_first:
            return out
        for a, b, c in itertools.combinations(gens, 3):
            jac = S.plus(S.plus(S.br(S.br(a, b), c), S.br(S.br(b, c), a)), S.br(S.br(c, a), b))
            if jac != zero:
                i, j, k = (gens.index(t) + 1 for t in (a, b, c))
                out.append(Failure("bracket:jacobi", f"J(m{i},m{j},m{k}) = {jac}", jac))
                break
        return out

    def proj_group():
        out = run([
            ("proj:linear", itertools.chain(
                ((f"p*({nm(a)}+{nm(b)})", S.p(S.plus(a, b)), S.plus(S.p(a), S.p(b))) for a, b in pairs),
                ((f"p*({format_scalar(l)}*{nm(a)})", S.p(S.scal(l, a)), S.scal(l, S.p(a)))
                 for a in samples for l in PROBES[2:5]))),
            ("proj:idempotent", ((f"p*p*{nm(a)}", S.p(S.p(a)), S.p(a)) for a in samples)),
        ])
        if out and stop_at_first:
            return out
        # p is neither 0 nor bijective on F, so neither may p* be
        basis = _slice_basis(F, d)
        images = [S.p(u) for u in basis]
        if all(x == zero for x in images):
            out.append(Failure("op2:proj-image", "p* vanishes on the slice while p does not"))
        elif _rank([F.coords(truncate(x, d)) for x in images], F.field) == len(basis):
            out.append(Failure("op2:proj-image", "p* is bijective on the slice while p is not"))
        return out

    def mixed_group():
        out = []
        for a, b in pairs:
            lhs = S.p(S.br(a, b))
            rhs = S.plus(S.br(S.p(a), b), S.br(a, S.p(b)))
            if lhs != rhs:
                out.append(Failure(
                    "derivation",
                    f"p*({nm(a)}x{nm(b)}) = {lhs} but p*{nm(a)}x{nm(b)} + {nm(a)}xp*{nm(b)} = {rhs}",
                    lhs - rhs))
                break
        if out and stop_at_first:
            return out
        prod = S.br(gens[0], gens[1])
        if prod == zero:
            out.append(Failure("op2:bracket-image", "m1 x m2 = 0: the degree-2 image collapses"))
        elif S.p(prod) == zero:
            out.append(Failure("op2:proj-bracket",
                               f"p*(m1 x m2) = 0 while p[m1,m2] = {pd_p(pd_bracket(gens[0], gens[1]))}"))
        if out and stop_at_first:
            return out
        if not sigma_bijective(W, F, d):
            out.append(Failure("op2:sigma-bijective",
                               f"generator-fixing map is not bijective up to degree {d}"))
        return out

    base = (W.scalar, W.plus, F, d, stop_at_first)
    groups = [
        (("scalar", W.scalar, F, d, stop_at_first), scalar_group),
        (("plus",) + base, plus_group),
        (("bracket", W.bracket) + base, bracket_group),
        (("proj", W.proj) + base, proj_group),
        (("mixed", W.bracket, W.proj) + base, mixed_group),
    ]
    failures = []
    for key, compute in groups:
        failures.extend(_cached(key, compute))
        if failures and stop_at_first:
            break
    return StarReport(not failures, d, failures)


def _rank(vectors, field):
    keys = sorted({k for v in vectors for k in v}, key=repr)
    return Subspace(Ambient(keys), field, vectors).dim


def sigma_images(W, F, d):
    S = Starred(W)
    basis = _slice_basis(F, d)
    return basis, [S.sigma(F, u) for u in basis]


def sigma_bijective(W, F, d):
    """Do the truncated sigma-images of the degree <= d basis form a basis
    of the slice?"""
    basis, images = sigma_images(W, F, d)
    return _rank([F.coords(truncate(x, d)) for x in images], F.field) == len(basis)


# -- solvers -------------------------------------------------------------------

def _grid(R, k):
    return [tuple(Fraction(x) for x in t) for t in itertools.product(sorted(R), repeat=k)]


def bracket_word_solve(R=range(-2, 3), d=3, with_reports=False):
    """Surviving (alpha, beta, gamma) in R^3, with w_p = p and w_plus = m1 + m2."""
    out = []
    for t in _grid(R, 3):
        fam = BracketWordFamily(*t)
        rep = starred_axiom_check(WordSystem.from_families(bracket=fam), d, stop_at_first=True)
        out.append((fam, rep))
    if with_reports:
        return out
    return [fam for fam, rep in out if rep.passed]


def proj_word_solve(d=3, alpha=1, with_reports=False):
    """Surviving (delta, eps) in {0,1}^2, with w_bracket = alpha [m1, m2]."""
    out = []
    br = BracketWordFamily(Fraction(alpha), Fraction(-alpha), Fraction(alpha))
    for t in _grid((0, 1), 2):
        fam = ProjWordFamily(*t)
        rep = starred_axiom_check(WordSystem.from_families(bracket=br, proj=fam), d, stop_at_first=True)
        out.append((fam, rep))
    if with_reports:
        return out
    return [fam for fam, rep in out if rep.passed]


def plus_word_solve(R=range(-2, 3), d=3, with_reports=False):
    """Surviving (a1, a2, b1, b2) in R^4 for w_plus."""
    out = []
    for t in _grid(R, 4):
        fam = PlusWordFamily(*t)
        rep = starred_axiom_check(WordSystem.from_families(plus=fam), d, stop_at_first=True)
        out.append((fam, rep))
    if with_reports:
        return out
    return [fam for fam, rep in out if rep.passed]


def scalar_word_solve(maps=None):
    """Surviving (phi, psi) pairs from a catalogue of scalar maps."""
    maps = list((maps or SCALAR_MAPS).values())
    out = []
    for phi, psi in itertools.product(maps, repeat=2):
        out.append(((phi, psi), scalar_word_constraints(phi, psi)))
    return out


# -- inner-ness ------------------------------------------------------------------

def scale_by_degree(u, alpha):
    """Multiply the degree-k homogeneous component of u by alpha^(k-1)."""
    out = u.ctx.zero()
    for k, comp in u.homogeneous_components().items():
        out = out + comp.scale(Fraction(alpha) ** (k - 1))
    return out


def default_sample_homs():
    """A few PD homs between free PD algebras of rank 1 and 2."""
    m1, m2 = F2.generators()
    n1 = F1.m(1)
    return [
        PDHom.from_generators(F2, F2, [pd_bracket(m1, m2), m2]),
        PDHom.from_generators(F2, F2, [m1 + pd_p(m2), m1.scale(2)]),
        PDHom.from_generators(F1, F2, [pd_bracket(m1, pd_bracket(m1, m2)) + pd_r(m2)]),
        PDHom.from_generators(F2, F1, [n1, pd_p(n1).scale(Fraction(-1, 3))]),
        PDHom.from_generators(F2, F2, [m2, m1]),
    ]


class InnerReport(NamedTuple):
    passed: bool
    scaling_natural: bool
    literal_natural: bool
    degree: int
    failures: list

    def __str__(self):
        head = (f"{'yes' if self.passed else 'no'} (scaling witness: "
                f"{'ok' if self.scaling_natural else 'fails'}, alpha^-1 witness: "
                f"{'ok' if self.literal_natural else 'fails'}; verified up to degree {self.degree})")
        return "\n".join([head] + [f"  {f}" for f in self.failures])


def bracket_alpha(W):
    """alpha when W's bracket word is alpha [m1, m2], else None."""
    base = pd_bracket(F2.m(1), F2.m(2))
    key, c = next(iter(sorted(base.l.terms.items())))
    alpha = W.bracket.l.coefficient(key)
    return alpha if alpha and W.bracket == base.scale(alpha) else None


def _is_hom_into_starred(c, S, F, d, failures, name):
    """c: F -> F*_W compatible with bracket, p, + and scalars on the slice."""
    basis = _slice_basis(F, d)
    ok = True
    for a, b in itertools.combinations(basis, 2):
        if a.degree() + b.degree() > d:
            continue
        if c(pd_bracket(a, b)) != S.br(c(a), c(b)):
            failures.append(Failure(f"{name}:bracket", f"({a}, {b})"))
            ok = False
            break
    for a in basis:
        if c(pd_p(a)) != S.p(c(a)):
            failures.append(Failure(f"{name}:proj", f"{a}"))
            ok = False
            break
    gens = F.generators()
    for a, b in itertools.product(gens, repeat=2):
        if c(a + b) != S.plus(c(a), c(b)) or c(a.scale(Fraction(1, 2))) != S.scal(Fraction(1, 2), c(a)):
            failures.append(Failure(f"{name}:linear", f"({a}, {b})"))
            ok = False
            break
    return ok


class _SigmaInverse:
    """sigma_F^-1 on the degree <= d slice, by solving against the images."""

    def __init__(self, W, d):
        self.W, self.d = W, d
        self._tables = {}

    def __call__(self, F, u):
        if F not in self._tables:
            basis, images = sigma_images(self.W, F, self.d)
            cols = [F.coords(truncate(x, self.d)) for x in images]
            self._tables[F] = (basis, inverse(cols, F.ambient(self.d), F.field))
        basis, inv = self._tables[F]
        if inv is None or u.degree() > self.d:
            return None
        return _combine(F, basis, inv(F.coords(u)))


def _combine(F, basis, x):
    if x is None:
        return None
    out = F.zero()
    for c, b in zip(x, basis):
        if c:
            out = out + b.scale(c)
    return out


def inner_witness_check(W, homs=None, d=4):
    """Is the automorphism induced by W inner?  For a bracket word
    alpha [m1, m2] two witnesses are tried:

    * c_F scaling degree-k components by alpha^(k-1): a hom F -> F*_W with
      c_F h = h* c_D, where h* = sigma_F h sigma_D^-1 is the transported hom;
    * c_F = alpha^-1 id: a hom F -> F*_W commuting with every h itself.
    """
    homs = homs if homs is not None else default_sample_homs()
    alpha = bracket_alpha(W)
    if alpha is None:
        return InnerReport(False, False, False, d, [Failure("shape", "bracket word is not a multiple of [m1,m2]")])
    S = Starred(W)
    failures = []
    contexts = {F1, F2} | {h.source for h in homs} | {h.target for h in homs}

    def scaling(u):
        return scale_by_degree(u, alpha)

    def literal(u):
        return u.scale(1 / Fraction(alpha))

    scaling_ok = all(_is_hom_into_starred(scaling, S, F, d, failures, "scaling") for F in contexts)
    literal_ok = all(_is_hom_into_starred(literal, S, F, d, failures, "alpha^-1") for F in contexts)

    sigma_inv = _SigmaInverse(W, d)
    for i, h in enumerate(homs):
        D, F = h.source, h.target
        for u in _slice_basis(D, d):
            back = sigma_inv(D, scaling(u))
            if back is None or scaling(h(u)) != S.sigma(F, h(back)):
                failures.append(Failure("scaling:natural", f"hom {i + 1} at {u}"))
                scaling_ok = False
                break
        for u in _slice_basis(D, d):
            if literal(h(u)) != h(literal(u)):
                failures.append(Failure("alpha^-1:natural", f"hom {i + 1} at {u}"))
                literal_ok = False
                break
    return InnerReport(scaling_ok and literal_ok, scaling_ok, literal_ok, d, failures)


def b1_proxy_check(W, homs=None, d=3):
    """sigma_F h sigma_D^-1 is again a PD hom on the degree <= d slice, and
    its image under F^-1 passes hom_check."""
    homs = homs if homs is not None else default_sample_homs()
    S = Starred(W)
    sigma_inv = _SigmaInverse(W, d)
    for h in homs:
        D, F = h.source, h.target
        gens = []
        for m in D.generators():
            back = sigma_inv(D, m)
            if back is None:
                return False
            gens.append(S.sigma(F, h(back)))
        g = PDHom.from_generators(D, F, gens)
        for u in _slice_basis(D, d):
            back = sigma_inv(D, u)
            if back is None or g(u) != S.sigma(F, h(back)):
                return False
        if not hom_check(functor_Finv_hom(g), d).passed:
            return False
    return True


# -- full classification ---------------------------------------------------------

class Row(NamedTuple):
    candidate: str
    verdict: str
    inner: str = ""

    def __str__(self):
        tail = f"\tinner={self.inner}" if self.inner else ""
        return f"{self.candidate}\t{self.verdict}{tail}"


def classify(R=range(-2, 3), d=3, inner_degree=4):
    """Run every solver; returns (rows, survivors).

    Survivors are complete word systems built from the per-operation
    survivors, re-checked together and tested for inner-ness.
    """
    rows = []
    scal = scalar_word_solve()
    for (phi, psi), rep in scal:
        rows.append(Row(f"scalar(phi={phi}, psi={psi})", rep.first or "survivor"))
    plus = plus_word_solve(R, d, with_reports=True)
    for fam, rep in plus:
        rows.append(Row(str(fam), rep.first or "survivor"))
    brs = bracket_word_solve(R, d, with_reports=True)
    for fam, rep in brs:
        rows.append(Row(str(fam), rep.first or "survivor"))
    prs = proj_word_solve(d, with_reports=True)
    for fam, rep in prs:
        rows.append(Row(str(fam), rep.first or "survivor"))

    survivors = []
    for (sc, srep), (pf, prep), (bf, brep), (qf, qrep) in itertools.product(scal, plus, brs, prs):
        if not (srep.passed and prep.passed and brep.passed and qrep.passed):
            continue
        W = WordSystem.from_families(plus=pf, bracket=bf, proj=qf, scalar=sc)
        full = starred_axiom_check(W, d)
        inner = inner_witness_check(W, d=inner_degree) if full.passed else None
        label = f"system[{sc[0]}/{sc[1]}; {pf}; {bf}; {qf}]"
        rows.append(Row(label, full.first or "survivor",
                        ("yes" if inner.passed else "no") if inner else ""))
        if full.passed:
            survivors.append((W, (sc, pf, bf, qf), inner))
    return rows, survivors
