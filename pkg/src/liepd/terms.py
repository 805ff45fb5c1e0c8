"""Text syntax for terms: tokenizer, recursive-descent parser, printer,
sort checking and evaluation.

    sum     := term (('+' | '-') term)*
    term    := ['-'] NUMBER ['*' chain] | ['-'] chain
    chain   := dotted ('*' dotted)*          x1*x2*y1 = x1.(x2.y1)
    dotted  := primary ('.' primary)*        left-associative action
    primary := GEN | '[' sum ',' sum ']' | 'p(' sum ')' | 'r(' sum ')' | '(' sum ')'

NUMBER is "n" or "n/d"; GEN is x<i>, y<j> or m<i>.  A bare NUMBER is only
meaningful as 0.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, SortError
from .projder import FreePD, pd_bracket, pd_p, pd_r
from .representation import FreeRep, act
from .freelie import lie_bracket
from .scalars import QQ, format_scalar


@dataclass(frozen=True)
class Gen:
    kind: str
    index: int


@dataclass(frozen=True)
class ScalarLit:
    value: Fraction


@dataclass(frozen=True)
class Scaled:
    coef: Fraction
    term: object


@dataclass(frozen=True)
class Sum:
    left: object
    right: object


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


@dataclass(frozen=True)
class Action:
    left: object
    right: object


@dataclass(frozen=True)
class Proj:
    term: object


@dataclass(frozen=True)
class Rej:
    term: object


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<gen>[xym]\d+)
  | (?P<fn>[pr])\s*\(
  | (?P<punct>[\[\],()+\-*.])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(src):
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group(kind) if kind != "fn" else m.group("fn")
        if kind != "ws":
            tokens.append(Token(kind, text, line, col))
        chunk = m.group(0)
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, src):
        self.toks = tokenize(src)
        self.i = 0

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text):
        t = self.peek()
        if t.text != text or t.kind not in ("punct",):
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return self.take()

    def is_punct(self, text, k=0):
        t = self.peek(k)
        return t.kind == "punct" and t.text == text

    def parse(self):
        node = self.sum()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", t.line, t.col)
        return node

    def sum(self):
        node = self.term()
        while self.is_punct("+") or self.is_punct("-"):
            op = self.take().text
            rhs = self.term()
            node = Sum(node, rhs if op == "+" else Scaled(Fraction(-1), rhs))
        return node

    def term(self):
        neg = False
        if self.is_punct("-"):
            self.take()
            neg = True
        t = self.peek()
        if t.kind == "num":
            self.take()
            value = _number(t)
            if neg:
                value = -value
            if self.is_punct("*"):
                self.take()
                return Scaled(value, self.chain())
            return ScalarLit(value)
        node = self.chain()
        return Scaled(Fraction(-1), node) if neg else node

    def chain(self):
        parts = [self.dotted()]
        while self.is_punct("*"):
            self.take()
            parts.append(self.dotted())
        node = parts[-1]
        for p in reversed(parts[:-1]):
            node = Action(p, node)
        return node

    def dotted(self):
        node = self.primary()
        while self.is_punct("."):
            self.take()
            node = Action(node, self.primary())
        return node

    def primary(self):
        t = self.peek()
        if t.kind == "gen":
            self.take()
            return Gen(t.text[0], int(t.text[1:]))
        if t.kind == "fn":
            self.take()
            inner = self.sum()
            self.expect(")")
            return Proj(inner) if t.text == "p" else Rej(inner)
        if self.is_punct("["):
            self.take()
            a = self.sum()
            self.expect(",")
            b = self.sum()
            self.expect("]")
            return Bracket(a, b)
        if self.is_punct("("):
            self.take()
            inner = self.sum()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.line, t.col)


def _number(tok):
    num, _, den = tok.text.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", tok.line, tok.col)
    return Fraction(int(num), int(den) if den else 1)


def parse_term(src, mode="rep"):
    """Parse and sort-check a term; mode is "rep" or "pd"."""
    ast = _Parser(src).parse()
    sort_of(ast, mode)
    return ast


# -- printing -----------------------------------------------------------------

def format_term(node):
    """Text form with parse_term(format_term(a)) == a."""
    if isinstance(node, Gen):
        return f"{node.kind}{node.index}"
    if isinstance(node, ScalarLit):
        return format_scalar(node.value)
    if isinstance(node, Scaled):
        inner = format_term(node.term)
        if isinstance(node.term, (Sum, Scaled, ScalarLit)):
            inner = f"({inner})"
        return f"{format_scalar(node.coef)}*{inner}"
    if isinstance(node, Sum):
        right = format_term(node.right)
        if isinstance(node.right, Sum):
            right = f"({right})"
        return f"{format_term(node.left)} + {right}"
    if isinstance(node, Bracket):
        return f"[{format_term(node.left)},{format_term(node.right)}]"
    if isinstance(node, Action):
        left, right = format_term(node.left), format_term(node.right)
        if isinstance(node.left, (Sum, Scaled, ScalarLit)):
            left = f"({left})"
        if isinstance(node.right, (Sum, Scaled, ScalarLit, Action)):
            right = f"({right})"
        return f"{left}.{right}"
    if isinstance(node, Proj):
        return f"p({format_term(node.term)})"
    if isinstance(node, Rej):
        return f"r({format_term(node.term)})"
    raise TypeError(f"not a term node: {node!r}")


# -- sorts and evaluation -----------------------------------------------------

def _join(a, b):
    if a == "any":
        return b
    if b == "any" or a == b:
        return a
    return "M"


def sort_of(node, mode="rep"):
    """'L', 'V', 'M' (pd mode only) or 'any' (the scalar 0)."""
    if isinstance(node, Gen):
        if node.kind == "m":
            if mode != "pd":
                raise SortError(f"m{node.index} only exists in pd mode", format_term(node))
            return "M"
        return "L" if node.kind == "x" else "V"
    if isinstance(node, ScalarLit):
        if node.value != 0:
            raise SortError("a bare nonzero scalar has no sort", format_term(node))
        return "any"
    if isinstance(node, Scaled):
        return sort_of(node.term, mode)
    if isinstance(node, Sum):
        a, b = sort_of(node.left, mode), sort_of(node.right, mode)
        if mode == "rep" and "any" not in (a, b) and a != b:
            raise SortError("sum of an L-sorted and a V-sorted term", format_term(node))
        return _join(a, b)
    if isinstance(node, Bracket):
        a, b = sort_of(node.left, mode), sort_of(node.right, mode)
        if mode == "rep":
            if a not in ("L", "any") or b not in ("L", "any"):
                raise SortError("brackets take two L-sorted terms", format_term(node))
            return "L"
        if a == "L" and b == "L":
            return "L"
        if {a, b} <= {"V", "any"}:
            return "V"
        if {a, b} <= {"L", "V", "any"}:
            return "V"
        return "M"
    if isinstance(node, Action):
        a, b = sort_of(node.left, mode), sort_of(node.right, mode)
        if a not in ("L", "any") or b not in ("V", "any"):
            raise SortError("the action takes an L-sorted and a V-sorted term", format_term(node))
        return "V"
    if isinstance(node, (Proj, Rej)):
        if mode != "pd":
            raise SortError("p() and r() only exist in pd mode", format_term(node))
        sort_of(node.term, mode)
        return "V" if isinstance(node, Proj) else "L"
    raise TypeError(f"not a term node: {node!r}")


def generators_of(node, acc=None):
    acc = set() if acc is None else acc
    if isinstance(node, Gen):
        acc.add((node.kind, node.index))
    elif isinstance(node, (Scaled, Proj, Rej)):
        generators_of(node.term, acc)
    elif isinstance(node, (Sum, Bracket, Action)):
        generators_of(node.left, acc)
        generators_of(node.right, acc)
    return acc


def rep_context(node, field=QQ):
    """The smallest W(X, Y) containing the generators of a rep-mode term."""
    gens = generators_of(node)
    return FreeRep(sorted(i for k, i in gens if k == "x"), sorted(i for k, i in gens if k == "y"), field)


def pd_context(node, field=QQ):
    """F(m1..mn) with n the largest generator index used."""
    n = max((i for _, i in generators_of(node)), default=0)
    return FreePD(FreeRep(range(1, n + 1), range(1, n + 1), field))


def evaluate(node, ctx, mode="rep"):
    """Value of a term in a FreeRep (rep mode) or a FreePD (pd mode)."""
    if mode == "rep":
        return _eval_rep(node, ctx, sort_of(node, "rep"))
    sort_of(node, "pd")
    return _eval_pd(node, ctx)


def _eval_rep(node, W, sort):
    if isinstance(node, Gen):
        return W.x(node.index) if node.kind == "x" else W.y(node.index)
    if isinstance(node, ScalarLit):
        return W.lzero() if sort == "L" else W.vzero()
    if isinstance(node, Scaled):
        return _eval_rep(node.term, W, sort).scale(node.coef)
    if isinstance(node, Sum):
        return _eval_rep(node.left, W, sort) + _eval_rep(node.right, W, sort)
    if isinstance(node, Bracket):
        return lie_bracket(_eval_rep(node.left, W, "L"), _eval_rep(node.right, W, "L"))
    if isinstance(node, Action):
        return act(_eval_rep(node.left, W, "L"), _eval_rep(node.right, W, "V"))
    raise SortError("not a representation term", format_term(node))


def _eval_pd(node, F):
    W = F.base
    if isinstance(node, Gen):
        if node.kind == "m":
            return F.m(node.index)
        return F.from_L(W.x(node.index)) if node.kind == "x" else F.from_V(W.y(node.index))
    if isinstance(node, ScalarLit):
        return F.zero()
    if isinstance(node, Scaled):
        return _eval_pd(node.term, F).scale(node.coef)
    if isinstance(node, Sum):
        return _eval_pd(node.left, F) + _eval_pd(node.right, F)
    if isinstance(node, (Bracket, Action)):
        return pd_bracket(_eval_pd(node.left, F), _eval_pd(node.right, F))
    if isinstance(node, Proj):
        return pd_p(_eval_pd(node.term, F))
    if isinstance(node, Rej):
        return pd_r(_eval_pd(node.term, F))
    raise TypeError(f"not a term node: {node!r}")


# -- representation specs --------------------------------------------------------

_REP = re.compile(r"^\s*W\s*\((?P<x>[^;]*);(?P<y>[^)]*)\)\s*$")


def parse_rep_spec(src, field=QQ):
    """"W(x1,x2;y1)" -> FreeRep((1, 2), (1,))."""
    m = _REP.match(src)
    if not m:
        raise ParseError(f"expected W(x..;y..), got {src!r}", 1, 1)

    def gens(text, letter):
        out = []
        for part in filter(None, (p.strip() for p in text.split(","))):
            if not re.fullmatch(rf"{letter}\d+", part):
                raise ParseError(f"bad generator {part!r}", 1, src.find(part) + 1)
            out.append(int(part[1:]))
        return out

    return FreeRep(gens(m.group("x"), "x"), gens(m.group("y"), "y"), field)
