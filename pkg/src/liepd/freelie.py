"""The free Lie algebra L(X) on the Lyndon basis.

A basis element is identified with its Lyndon word; its bracketing is the
standard factorization w = uv with v the longest proper Lyndon suffix.  The
associative expansion P(w) of a basis element equals w plus lexicographically
larger words of the same length, which makes reduction from A(X) triangular.
"""
from functools import lru_cache

from .errors import ContextError
from .freeassoc import AssocElement, SparseElement, assoc_mul, word_key
from .scalars import QQ


@lru_cache(maxsize=None)
def is_lyndon(word):
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, n))


def lyndon_words(alphabet, d):
    """All Lyndon words of length <= d over the sorted alphabet (Duval's generator)."""
    alphabet = sorted(alphabet)
    k = len(alphabet)
    if k == 0 or d < 1:
        return []
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(alphabet[i] for i in w))
        m = len(w)
        while len(w) < d:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    out.sort(key=word_key)
    return out


@lru_cache(maxsize=None)
def standard_factorization(word):
    """(u, v) with v the longest proper Lyndon suffix; None for letters."""
    if len(word) == 1:
        return None
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise AssertionError("a word of length >= 2 always has a Lyndon suffix")


@lru_cache(maxsize=None)
def bracketing(word):
    """Bracket tree of a Lyndon word: a letter, or a pair (left, right)."""
    f = standard_factorization(word)
    if f is None:
        return word[0]
    return (bracketing(f[0]), bracketing(f[1]))


def format_tree(tree):
    if isinstance(tree, tuple):
        return f"[{format_tree(tree[0])},{format_tree(tree[1])}]"
    return f"x{tree}"


class LyndonBasisElement:
    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(word)
        if not is_lyndon(word):
            raise ValueError(f"{word} is not a Lyndon word")
        self.word = word

    @property
    def bracketing(self):
        return bracketing(self.word)

    @property
    def degree(self):
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, LyndonBasisElement) and other.word == self.word

    def __hash__(self):
        return hash(self.word)

    def __lt__(self, other):
        return word_key(self.word) < word_key(other.word)

    def __str__(self):
        return format_tree(self.bracketing)

    def __repr__(self):
        return f"LyndonBasisElement({self})"


@lru_cache(maxsize=None)
def _basis(X, d):
    return tuple(LyndonBasisElement(w) for w in lyndon_words(X, d))


def lyndon_basis(X, d):
    """Lyndon basis of L(X) up to degree d, graded-lex ordered."""
    if d < 1:
        raise ValueError("degree bound must be >= 1")
    return list(_basis(tuple(sorted(X)), d))


class LieElement(SparseElement):
    """Element of L(X); keys are Lyndon words."""

    __slots__ = ("X",)

    def __init__(self, terms=None, X=(), field=QQ):
        self.X = tuple(X)
        super().__init__(terms, field)
        letters = set(self.X)
        for w in self.terms:
            if not set(w) <= letters:
                raise ContextError(f"{w} uses letters outside X={self.X}")
            if not is_lyndon(w):
                raise ValueError(f"{w} is not a Lyndon word")

    def context(self):
        return self.X

    _context_slots = ("X",)

    sort_key = staticmethod(word_key)

    @staticmethod
    def key_degree(word):
        return len(word)

    def format_key(self, word):
        return format_tree(bracketing(word))

    @classmethod
    def generator(cls, i, X, field=QQ):
        return cls({(i,): 1}, X, field)

    @classmethod
    def basis_element(cls, word, X, field=QQ):
        return cls({tuple(word): 1}, X, field)


# -- associative embedding ------------------------------------------------

@lru_cache(maxsize=None)
def expand_lyndon(word):
    """P(word) as {assoc word: int}."""
    f = standard_factorization(word)
    if f is None:
        return {word: 1}
    a, b = expand_lyndon(f[0]), expand_lyndon(f[1])
    out = {}
    for u, c in a.items():
        for v, e in b.items():
            out[u + v] = out.get(u + v, 0) + c * e
            out[v + u] = out.get(v + u, 0) - c * e
    return {w: c for w, c in out.items() if c}


def embed_assoc(l):
    """Image of a Lie element in A(X) under [a,b] -> ab - ba."""
    out = {}
    for w, c in l.terms.items():
        for u, e in expand_lyndon(w).items():
            out[u] = out.get(u, 0) + c * e
    return AssocElement(out, l.X, l.field)


def from_assoc(a):
    """Inverse of embed_assoc on its image, by triangular reduction.

    The leading word is the lexicographically smallest word of maximal
    length; for a Lie element it is always Lyndon.
    """
    residual = dict(a.terms)
    field = a.field
    out = {}
    while residual:
        top = max(len(w) for w in residual)
        lead = min(w for w in residual if len(w) == top)
        if not is_lyndon(lead):
            raise ValueError(f"not a Lie element: leading word {lead} is not Lyndon")
        c = residual[lead]
        out[lead] = c
        for u, e in expand_lyndon(lead).items():
            v = residual.get(u, field.zero) - c * e
            if v:
                residual[u] = v
            else:
                residual.pop(u, None)
    return LieElement(out, a.X, field)


def expand_tree(t, X, field=QQ):
    """Associative expansion of a bracket expression.

    Trees are built from: an int i (the generator x_i), a LieElement,
    ``("bracket", a, b)``, ``("sum", a, b, ...)`` and ``("scale", c, a)``.
    """
    if isinstance(t, LieElement):
        return embed_assoc(t)
    if isinstance(t, int):
        return AssocElement.letter(t, X, field)
    tag = t[0]
    if tag == "bracket":
        a, b = expand_tree(t[1], X, field), expand_tree(t[2], X, field)
        return assoc_mul(a, b) - assoc_mul(b, a)
    if tag == "sum":
        out = AssocElement({}, X, field)
        for s in t[1:]:
            out = out + expand_tree(s, X, field)
        return out
    if tag == "scale":
        return expand_tree(t[2], X, field).scale(t[1])
    raise ValueError(f"unknown tree node {tag!r}")


def lie_normal_form(t, X, field=QQ):
    """Normal form of a bracket expression, computed through A(X)."""
    return from_assoc(expand_tree(t, X, field))


# -- direct bracket on Lyndon words ---------------------------------------

@lru_cache(maxsize=None)
def _bracket_words(u, v):
    """[P(u), P(v)] in the Lyndon basis, as a tuple of (word, int) pairs."""
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in _bracket_words(v, u))
    f = standard_factorization(u)
    if f is None or f[1] >= v:
        return ((u + v, 1),)
    u1, u2 = f
    # [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
    out = {}
    for w, c in _bracket_words(u2, v):
        for z, e in _bracket_words(u1, w):
            out[z] = out.get(z, 0) + c * e
    for w, c in _bracket_words(u1, v):
        for z, e in _bracket_words(u2, w):
            out[z] = out.get(z, 0) - c * e
    return tuple(sorted(((w, c) for w, c in out.items() if c), key=lambda t: word_key(t[0])))


def lie_bracket(a, b):
    """Bracket in L(X), bilinear over the cached bracket of basis words."""
    if not isinstance(a, LieElement) or not isinstance(b, LieElement):
        raise ContextError("lie_bracket needs two LieElements")
    if a.X != b.X or a.field != b.field:
        raise ContextError("mismatched contexts")
    out = {}
    for u, c in a.terms.items():
        for v, e in b.terms.items():
            for w, k in _bracket_words(u, v):
                out[w] = out.get(w, 0) + c * e * k
    return a._new(out)
