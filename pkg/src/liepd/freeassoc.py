"""The free unital associative algebra A(X) and the free module A(X)Y.

Generators are pool indices: the letter ``3`` is ``x3`` and the module
generator ``2`` is ``y2``.  A word is a tuple of letters, the empty tuple is
the unit.  Terms are kept in graded-lex order: shorter words first, then
lexicographic on letters, then the y-index.
"""
from .errors import ContextError
from .scalars import QQ, format_scalar


def word_key(word):
    return (len(word), word)


def module_key(term):
    word, y = term
    return (len(word) + 1, word, y)


def format_word(word):
    return "*".join(f"x{i}" for i in word)


class SparseElement:
    """A finite linear combination of basis keys with nonzero coefficients.

    Subclasses fix the context (which alphabets the keys may use), the term
    order and the text form.  Values are immutable.
    """

    __slots__ = ("terms", "field", "_hash")

    def __init__(self, terms=None, field=QQ):
        self.field = field
        clean = {}
        for k, c in (terms or {}).items():
            c = field(c)
            if c:
                clean[k] = c
        self.terms = clean
        self._hash = None

    # -- hooks -------------------------------------------------------------
    def context(self):
        raise NotImplementedError

    _context_slots = ()

    def _new(self, terms):
        """Same context, terms already made of field elements: skip validation."""
        obj = object.__new__(type(self))
        for name in self._context_slots:
            object.__setattr__(obj, name, getattr(self, name))
        obj.field = self.field
        obj.terms = {k: c for k, c in terms.items() if c}
        obj._hash = None
        return obj

    @staticmethod
    def sort_key(key):
        raise NotImplementedError

    # -- linear structure --------------------------------------------------
    def _check(self, other):
        if type(self) is not type(other):
            raise ContextError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if self.context() != other.context() or self.field != other.field:
            raise ContextError("mismatched contexts")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = self.field(c)
        if not c:
            return self._new({})
        return self._new({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, SparseElement):
            return NotImplemented
        return self.scale(c)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(self) is not type(other):
            return NotImplemented
        return (self.context() == other.context() and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.context(),
                               frozenset(self.terms.items())))
        return self._hash

    def items(self):
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def coefficient(self, key):
        return self.terms.get(key, self.field.zero)

    def degree(self):
        return max((self.key_degree(k) for k in self.terms), default=-1)

    def homogeneous_components(self):
        comps = {}
        for k, c in self.terms.items():
            comps.setdefault(self.key_degree(k), {})[k] = c
        return {d: self._new(t) for d, t in sorted(comps.items())}

    def truncate(self, d):
        return self._new({k: c for k, c in self.terms.items() if self.key_degree(k) <= d})

    def format_key(self, key):
        raise NotImplementedError

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.items():
            body = self.format_key(k)
            if c == 1:
                parts.append(body)
            elif body == "1":
                parts.append(format_scalar(c))
            else:
                parts.append(f"{format_scalar(c)}*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class AssocElement(SparseElement):
    """Element of A(X); keys are words (tuples of letters in X)."""

    __slots__ = ("X",)

    def __init__(self, terms=None, X=(), field=QQ):
        self.X = tuple(X)
        super().__init__(terms, field)
        letters = set(self.X)
        for w in self.terms:
            if not set(w) <= letters:
                raise ContextError(f"word {w} uses letters outside X={self.X}")

    def context(self):
        return self.X

    _context_slots = ("X",)

    sort_key = staticmethod(word_key)

    @staticmethod
    def key_degree(word):
        return len(word)

    def format_key(self, word):
        return format_word(word) if word else "1"

    @classmethod
    def unit(cls, X, field=QQ):
        return cls({(): 1}, X, field)

    @classmethod
    def letter(cls, i, X, field=QQ):
        return cls({(i,): 1}, X, field)

    def __mul__(self, other):
        if isinstance(other, AssocElement):
            return assoc_mul(self, other)
        if isinstance(other, ModuleElement):
            return module_mul(self, other)
        return NotImplemented


class ModuleElement(SparseElement):
    """Element of A(X)Y; keys are pairs (word, y) meaning word * y."""

    __slots__ = ("X", "Y")

    def __init__(self, terms=None, X=(), Y=(), field=QQ):
        self.X = tuple(X)
        self.Y = tuple(Y)
        super().__init__(terms, field)
        letters, gens = set(self.X), set(self.Y)
        for w, y in self.terms:
            if not set(w) <= letters or y not in gens:
                raise ContextError(f"term {(w, y)} outside X={self.X}, Y={self.Y}")

    def context(self):
        return (self.X, self.Y)

    _context_slots = ("X", "Y")

    sort_key = staticmethod(module_key)

    @staticmethod
    def key_degree(term):
        return len(term[0]) + 1

    def format_key(self, term):
        w, y = term
        return "*".join([f"x{i}" for i in w] + [f"y{y}"])

    @classmethod
    def generator(cls, j, X, Y, field=QQ):
        return cls({((), j): 1}, X, Y, field)


def assoc_mul(a, b):
    """Concatenation product, extended bilinearly."""
    if not isinstance(a, AssocElement) or not isinstance(b, AssocElement):
        raise ContextError("assoc_mul needs two AssocElements")
    if a.X != b.X or a.field != b.field:
        raise ContextError("mismatched contexts")
    out = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            w = u + v
            out[w] = out.get(w, 0) + c * d
    return a._new(out)


def module_mul(a, v):
    """Left action of A(X) on A(X)Y: (w, (w', y)) -> (ww', y)."""
    if not isinstance(a, AssocElement) or not isinstance(v, ModuleElement):
        raise ContextError("module_mul needs an AssocElement and a ModuleElement")
    if a.X != v.X or a.field != v.field:
        raise ContextError("mismatched contexts")
    out = {}
    for u, c in a.terms.items():
        for (w, y), d in v.terms.items():
            k = (u + w, y)
            out[k] = out.get(k, 0) + c * d
    return v._new(out)
