"""2-sorted representations (L, V): free ones W(X,Y), finite-dimensional
ones given by structure constants, and homomorphism pairs (phi, psi).

Every target offers the same small protocol used by hom evaluation:
``bracket``, ``action``, ``lzero``, ``vzero`` and ``coords`` (a sparse dict
view of a value, for linear algebra).
"""
import itertools
import json
from typing import NamedTuple

from .errors import ContextError, SortError, ValidationError
from .freeassoc import AssocElement, ModuleElement, module_key, module_mul
from .freelie import LieElement, embed_assoc, lie_bracket, lyndon_words
from .linalg import Ambient, Subspace
from .scalars import QQ, field_from_name, format_scalar, parse_scalar


def act(l, v):
    """l o v: the action of L(X) on A(X)Y through the associative embedding."""
    if not isinstance(l, LieElement) or not isinstance(v, ModuleElement):
        raise SortError("act needs an L-sorted and a V-sorted argument")
    if l.X != v.X or l.field != v.field:
        raise ContextError("mismatched contexts")
    return module_mul(embed_assoc(l), v)


def module_words(X, Y, d):
    """Basis keys (w, y) of A(X)Y with |w| + 1 <= d, graded-lex ordered."""
    keys = []
    for k in range(d):
        for w in itertools.product(sorted(X), repeat=k):
            for y in sorted(Y):
                keys.append((w, y))
    keys.sort(key=module_key)
    return keys


class RepElement(NamedTuple):
    """A value tagged with its sort, "L" or "V"."""
    sort: str
    value: object


class FreeRep:
    """W(X, Y) = (L(X), A(X)Y) over a field; X, Y are pool indices."""

    def __init__(self, X=(), Y=(), field=QQ):
        X, Y = tuple(X), tuple(Y)
        for pool, name in ((X, "X"), (Y, "Y")):
            if len(set(pool)) != len(pool):
                raise ValueError(f"repeated generator in {name}")
            if any(not isinstance(i, int) or i < 1 for i in pool):
                raise ValueError(f"generators of {name} must be positive pool indices")
        self.X = tuple(sorted(X))
        self.Y = tuple(sorted(Y))
        self.field = field

    def __eq__(self, other):
        return (isinstance(other, FreeRep) and self.X == other.X
                and self.Y == other.Y and self.field == other.field)

    def __hash__(self):
        return hash((self.X, self.Y, self.field))

    def __repr__(self):
        xs = ",".join(f"x{i}" for i in self.X)
        ys = ",".join(f"y{j}" for j in self.Y)
        return f"W({xs};{ys})"

    @property
    def balanced(self):
        """|X| == |Y|: the subfamily where the PD functor has free generators."""
        return len(self.X) == len(self.Y)

    # elements
    def x(self, i):
        if i not in self.X:
            raise ContextError(f"x{i} is not a generator of {self}")
        return LieElement.generator(i, self.X, self.field)

    def y(self, j):
        if j not in self.Y:
            raise ContextError(f"y{j} is not a generator of {self}")
        return ModuleElement.generator(j, self.X, self.Y, self.field)

    def lie(self, terms=None):
        return LieElement(terms, self.X, self.field)

    def module(self, terms=None):
        return ModuleElement(terms, self.X, self.Y, self.field)

    def assoc(self, terms=None):
        return AssocElement(terms, self.X, self.field)

    def lzero(self):
        return self.lie()

    def vzero(self):
        return self.module()

    def owns(self, value):
        if isinstance(value, LieElement):
            return value.X == self.X and value.field == self.field
        if isinstance(value, ModuleElement):
            return value.X == self.X and value.Y == self.Y and value.field == self.field
        return False

    # target protocol
    def bracket(self, a, b):
        return lie_bracket(a, b)

    def action(self, l, v):
        return act(l, v)

    @staticmethod
    def coords(value):
        return dict(value.terms)

    # truncated slices
    def lie_keys(self, d):
        return lyndon_words(self.X, d)

    def module_keys(self, d):
        return module_words(self.X, self.Y, d)

    def lie_ambient(self, d):
        return Ambient(self.lie_keys(d))

    def module_ambient(self, d):
        return Ambient(self.module_keys(d))

    def lie_basis(self, d):
        return [LieElement.basis_element(w, self.X, self.field) for w in self.lie_keys(d)]

    def module_basis(self, d):
        return [self.module({k: 1}) for k in self.module_keys(d)]


class Vec:
    """A value of a finite representation: coordinates plus sort tag."""

    __slots__ = ("coords_", "sort", "field")

    def __init__(self, coords, sort, field):
        self.coords_ = tuple(field(c) for c in coords)
        self.sort = sort
        self.field = field

    def _check(self, other):
        if not isinstance(other, Vec) or other.sort != self.sort or len(other.coords_) != len(self.coords_):
            raise SortError("incompatible finite-model values")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return Vec([a + b for a, b in zip(self.coords_, other.coords_)], self.sort, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        self._check(other)
        return Vec([a - b for a, b in zip(self.coords_, other.coords_)], self.sort, self.field)

    def __neg__(self):
        return Vec([-a for a in self.coords_], self.sort, self.field)

    def scale(self, c):
        c = self.field(c)
        return Vec([c * a for a in self.coords_], self.sort, self.field)

    def __rmul__(self, c):
        return self.scale(c)

    def __bool__(self):
        return any(self.coords_)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self
        return (isinstance(other, Vec) and self.sort == other.sort
                and self.coords_ == other.coords_)

    def __hash__(self):
        return hash((self.sort, self.coords_))

    def __len__(self):
        return len(self.coords_)

    def __getitem__(self, i):
        return self.coords_[i]

    def __str__(self):
        name = "e" if self.sort == "L" else "f"
        parts = []
        for i, c in enumerate(self.coords_):
            if c:
                parts.append(f"{name}{i + 1}" if c == 1 else f"{format_scalar(c)}*{name}{i + 1}")
        return " + ".join(parts) or "0"

    __repr__ = __str__


class FinRep:
    """Finite-dimensional representation (L, V).

    ``c`` maps (i, j) to {k: coefficient} for [e_i, e_j] = sum_k c e_k
    (only one orientation needs to be given), ``act[i]`` is the m x m matrix
    of e_i acting on V, rows indexed by output coordinate.  Indices are
    0-based in Python and 1-based in files.  Validated on construction.
    """

    def __init__(self, n, c, m, act, field=QQ):
        self.n, self.m, self.field = n, m, field
        table = {}
        for (i, j), row in dict(c).items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValidationError(f"structure constant index ({i},{j}) out of range")
            for k, v in row.items():
                v = field(v)
                if not v:
                    continue
                if not 0 <= k < n:
                    raise ValidationError(f"structure constant target {k} out of range")
                if i == j:
                    raise ValidationError(f"[e{i + 1},e{i + 1}] must vanish")
                for key, val in (((i, j), v), ((j, i), -v)):
                    old = table.setdefault(key, {}).get(k)
                    if old is not None and old != val:
                        raise ValidationError(f"structure constants are not antisymmetric at ({i + 1},{j + 1})")
                    table[key][k] = val
        self.c = table
        if len(act) != n:
            raise ValidationError(f"expected {n} action matrices, got {len(act)}")
        mats = []
        for A in act:
            if len(A) != m or any(len(row) != m for row in A):
                raise ValidationError("action matrices must be m x m")
            mats.append(tuple(tuple(field(a) for a in row) for row in A))
        self.act = tuple(mats)
        self._validate()

    # protocol
    def lzero(self):
        return Vec([0] * self.n, "L", self.field)

    def vzero(self):
        return Vec([0] * self.m, "V", self.field)

    def e(self, i):
        return Vec([1 if k == i else 0 for k in range(self.n)], "L", self.field)

    def f(self, i):
        return Vec([1 if k == i else 0 for k in range(self.m)], "V", self.field)

    def lvec(self, coords):
        return Vec(coords, "L", self.field)

    def vvec(self, coords):
        return Vec(coords, "V", self.field)

    def bracket(self, a, b):
        out = [self.field.zero] * self.n
        for i, ai in enumerate(a.coords_):
            if not ai:
                continue
            for j, bj in enumerate(b.coords_):
                if not bj:
                    continue
                for k, v in self.c.get((i, j), {}).items():
                    out[k] = out[k] + ai * bj * v
        return Vec(out, "L", self.field)

    def matrix_of(self, l):
        M = [[self.field.zero] * self.m for _ in range(self.m)]
        for i, li in enumerate(l.coords_):
            if li:
                A = self.act[i]
                for r in range(self.m):
                    for s in range(self.m):
                        M[r][s] = M[r][s] + li * A[r][s]
        return M

    def action(self, l, v):
        M = self.matrix_of(l)
        out = [sum((M[r][s] * v.coords_[s] for s in range(self.m)), self.field.zero)
               for r in range(self.m)]
        return Vec(out, "V", self.field)

    @staticmethod
    def coords(value):
        return {i: c for i, c in enumerate(value.coords_) if c}

    def owns(self, value):
        return isinstance(value, Vec) and value.field == self.field and (
            (value.sort == "L" and len(value) == self.n) or (value.sort == "V" and len(value) == self.m))

    def _validate(self):
        basis = [self.e(i) for i in range(self.n)]
        for a, b, c in itertools.product(basis, repeat=3):
            jac = (self.bracket(a, self.bracket(b, c)) + self.bracket(b, self.bracket(c, a))
                   + self.bracket(c, self.bracket(a, b)))
            if jac:
                raise ValidationError("structure constants violate the Jacobi identity")
        vbasis = [self.f(s) for s in range(self.m)]
        for a, b in itertools.product(basis, repeat=2):
            for v in vbasis:
                lhs = self.action(self.bracket(a, b), v)
                rhs = self.action(a, self.action(b, v)) - self.action(b, self.action(a, v))
                if lhs != rhs:
                    raise ValidationError("action is not a Lie algebra homomorphism into End(V)")

    def __eq__(self, other):
        return (isinstance(other, FinRep) and (self.n, self.m, self.field) == (other.n, other.m, other.field)
                and self.c == other.c and self.act == other.act)

    def __hash__(self):
        return hash((self.n, self.m, self.act))

    def __repr__(self):
        return f"FinRep(n={self.n}, m={self.m}, field={self.field!r})"

    # constructions
    def direct_product(self, other):
        """H1 x H2 with componentwise operations."""
        if self.field != other.field:
            raise ContextError("direct product needs a common field")
        n, m = self.n + other.n, self.m + other.m
        c = {}
        for (i, j), row in self.c.items():
            c[(i, j)] = dict(row)
        for (i, j), row in other.c.items():
            c[(i + self.n, j + self.n)] = {k + self.n: v for k, v in row.items()}
        zero = self.field.zero
        acts = []
        for i in range(n):
            A = [[zero] * m for _ in range(m)]
            if i < self.n:
                for r in range(self.m):
                    for s in range(self.m):
                        A[r][s] = self.act[i][r][s]
            else:
                B = other.act[i - self.n]
                for r in range(other.m):
                    for s in range(other.m):
                        A[self.m + r][self.m + s] = B[r][s]
            acts.append(A)
        return FinRep(n, c, m, acts, self.field)

    # file format
    def to_dict(self):
        c = []
        for (i, j), row in sorted(self.c.items()):
            if i < j:
                for k, v in sorted(row.items()):
                    c.append([i + 1, j + 1, k + 1, format_scalar(v)])
        return {
            "field": self.field.name,
            "n": self.n,
            "c": c,
            "m": self.m,
            "act": [[[format_scalar(a) for a in row] for row in A] for A in self.act],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            field = field_from_name(str(data.get("field", "Q")))
            n, m = int(data["n"]), int(data["m"])
            c = {}
            for i, j, k, v in data.get("c", []):
                c.setdefault((int(i) - 1, int(j) - 1), {})[int(k) - 1] = _scalar(v, field)
            acts = [[[_scalar(a, field) for a in row] for row in A] for A in data["act"]]
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"malformed representation data: {exc}") from None
        return cls(n, c, m, acts, field)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_json(self):
        return json.dumps(self.to_dict(), indent=1)


def _scalar(v, field):
    if isinstance(v, str):
        return field(parse_scalar(v))
    return field(v)


class RepHom:
    """A pair (phi, psi) given on generators, extended homomorphically.

    ``phi`` maps x-indices to L-values of the target, ``psi`` maps
    y-indices to V-values.  ``overrides`` (basis key -> value) replaces the
    extension on individual basis elements; it exists to build deliberately
    broken pairs for testing the checker.
    """

    def __init__(self, source, target, phi, psi, overrides=None):
        self.source, self.target = source, target
        self.phi, self.psi = dict(phi), dict(psi)
        if set(self.phi) != set(source.X) or set(self.psi) != set(source.Y):
            raise ContextError("every generator needs exactly one image")
        for i, val in self.phi.items():
            if not _has_sort(target, val, "L"):
                raise SortError(f"image of x{i} is not L-sorted in the target", val)
        for j, val in self.psi.items():
            if not _has_sort(target, val, "V"):
                raise SortError(f"image of y{j} is not V-sorted in the target", val)
        self.overrides = dict(overrides or {})
        self._lcache = {}
        self._vcache = {}

    def __repr__(self):
        return f"RepHom({self.source!r} -> {self.target!r})"

    def lie_word(self, w):
        if w in self.overrides:
            return self.overrides[w]
        if w not in self._lcache:
            self._lcache[w] = _eval_tree(self, _tree(w))
        return self._lcache[w]

    def module_word(self, key):
        if key in self.overrides:
            return self.overrides[key]
        if key not in self._vcache:
            w, y = key
            if not w:
                val = self.psi[y]
            else:
                val = self.target.action(self.phi[w[0]], self.module_word((w[1:], y)))
            self._vcache[key] = val
        return self._vcache[key]

    def __call__(self, e):
        return hom_eval(self, e)


def _tree(w):
    from .freelie import bracketing
    return bracketing(w)


def _eval_tree(h, t):
    if isinstance(t, tuple):
        return h.target.bracket(_eval_tree(h, t[0]), _eval_tree(h, t[1]))
    return h.phi[t]


def _has_sort(target, value, sort):
    if isinstance(target, FreeRep):
        cls = LieElement if sort == "L" else ModuleElement
        return isinstance(value, cls) and target.owns(value)
    return isinstance(value, Vec) and value.sort == sort and target.owns(value)


def hom_eval(h, e):
    """Value of the homomorphic extension of h at an element of its source."""
    if isinstance(e, RepElement):
        e = e.value
    if not h.source.owns(e):
        raise SortError("element does not belong to the source representation", e)
    if isinstance(e, LieElement):
        out = h.target.lzero()
        for w, c in e.terms.items():
            out = out + h.lie_word(w).scale(c)
        return out
    out = h.target.vzero()
    for k, c in e.terms.items():
        out = out + h.module_word(k).scale(c)
    return out


def identity_hom(W):
    return RepHom(W, W, {i: W.x(i) for i in W.X}, {j: W.y(j) for j in W.Y})


def compose(g, h):
    """g after h."""
    return RepHom(h.source, g.target,
                  {i: hom_eval(g, v) for i, v in h.phi.items()},
                  {j: hom_eval(g, v) for j, v in h.psi.items()})


class HomCheckReport(NamedTuple):
    passed: bool
    degree: int
    violations: list

    def __str__(self):
        head = f"{'pass' if self.passed else 'fail'} (verified up to degree {self.degree})"
        lines = [head] + [f"  {kind}: ({a}, {b})" for kind, a, b in self.violations]
        return "\n".join(lines)


def hom_check(h, d):
    """Check phi(l) o psi(v) = psi(l o v) and phi([a,b]) = [phi a, phi b]
    on all basis pairs of total degree <= d."""
    W = h.source
    T = h.target
    violations = []
    lb = W.lie_basis(d)
    for a, b in itertools.combinations(lb, 2):
        if a.degree() + b.degree() > d:
            continue
        if hom_eval(h, lie_bracket(a, b)) != T.bracket(hom_eval(h, a), hom_eval(h, b)):
            violations.append(("bracket", a, b))
    for l in lb:
        for v in W.module_basis(d - l.degree()):
            if T.action(hom_eval(h, l), hom_eval(h, v)) != hom_eval(h, act(l, v)):
                violations.append(("action", l, v))
    return HomCheckReport(not violations, d, violations)


def kernel_slices(h, d):
    """(ker phi, ker psi) restricted to the degree <= d slices of the source."""
    from .linalg import kernel
    W = h.source
    la, ma = W.lie_ambient(d), W.module_ambient(d)
    limgs = [h.target.coords(h.lie_word(w)) for w in la.keys]
    vimgs = [h.target.coords(h.module_word(k)) for k in ma.keys]
    return kernel(la, W.field, limgs), kernel(ma, W.field, vimgs)


# -- coproducts --------------------------------------------------------------

class Coproduct(NamedTuple):
    obj: FreeRep
    inj1: RepHom
    inj2: RepHom


def coproduct(W1, W2):
    """W1 and W2 glued along disjoint generator sets.  Generators of W2 that
    clash with W1 are renamed to fresh pool indices."""
    if W1.field != W2.field:
        raise ContextError("coproduct needs a common field")

    def rename(mine, theirs):
        used = set(mine) | set(theirs)
        nxt = max(used, default=0) + 1
        out = {}
        for i in theirs:
            if i in mine:
                out[i] = nxt
                nxt += 1
            else:
                out[i] = i
        return out

    xr, yr = rename(W1.X, W2.X), rename(W1.Y, W2.Y)
    W3 = FreeRep(W1.X + tuple(xr.values()), W1.Y + tuple(yr.values()), W1.field)
    inj1 = RepHom(W1, W3, {i: W3.x(i) for i in W1.X}, {j: W3.y(j) for j in W1.Y})
    inj2 = RepHom(W2, W3, {i: W3.x(xr[i]) for i in W2.X}, {j: W3.y(yr[j]) for j in W2.Y})
    return Coproduct(W3, inj1, inj2)


def mediating_hom(cop, a1, a2):
    """The unique hom W3 -> H restricting to a1 and a2 along the injections."""
    if a1.target is not a2.target and a1.target != a2.target:
        raise ContextError("mediating hom needs a common target")
    phi, psi = {}, {}
    for a, inj in ((a1, cop.inj1), (a2, cop.inj2)):
        for i, img in inj.phi.items():
            (k,) = next(iter(img.terms))
            phi[k] = a.phi[i]
        for j, img in inj.psi.items():
            ((_, k),) = img.terms
            psi[k] = a.psi[j]
    return RepHom(cop.obj, a1.target, phi, psi)


# -- IBN invariants -------------------------------------------------------------

def rank_invariants(W, d, via=None):
    """(dim L/[L,L], dim V/<X>V), both computed on degree <= d slices.

    With ``via`` (an isomorphism out of W into a free representation) the
    dimensions are measured on the images instead.
    """
    if d < 1:
        raise ValueError("degree bound must be >= 1")
    h = via if via is not None else identity_hom(W)
    T = h.target
    lb = W.lie_basis(d)
    full_l = [T.coords(hom_eval(h, b)) for b in lb]
    brackets = [T.coords(T.bracket(hom_eval(h, a), hom_eval(h, b)))
                for a, b in itertools.combinations(lb, 2) if a.degree() + b.degree() <= d]
    mb = W.module_basis(d)
    full_v = [T.coords(hom_eval(h, v)) for v in mb]
    moved = [T.coords(T.action(hom_eval(h, W.x(i)), hom_eval(h, v)))
             for i in W.X for v in W.module_basis(d - 1)]
    return (_rank(full_l, W.field) - _rank(brackets, W.field),
            _rank(full_v, W.field) - _rank(moved, W.field))


def _rank(vectors, field):
    keys = sorted({k for v in vectors for k in v}, key=repr)
    return Subspace(Ambient(keys), field, vectors).dim
