"""Parser for the ad-hoc algebra expression language.

Grammar (whitespace-insensitive):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := INT | generator | '-' factor | '(' expr ')'
    generator := 'a' '[' INT ',' INT ']'
               | 'abar' '[' INT ',' INT ']'
               | 'qp' '[' INT ']'
               | 'qpbar' '[' INT ']'

`a[i,alpha]` is the zero mode a^i_alpha, `abar[alpha,i]` the conjugate
abar^alpha_i, `qp[j]`/`qpbar[j]` the weight generators q^{p_j}.  Unbarred
and barred generators cannot be mixed in one expression: they live in the
two chiral algebras.
"""

import re

from .algebra import Algebra
from .field import FieldContext


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.pos = pos
        self.line = line
        self.col = col


_TOKEN = re.compile(
    r"\s*(?:(?P<name>abar|a|qpbar|qp)|(?P<int>\d+)|(?P<op>[-+*()\[\],]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if stripped >= len(text):
                break
            raise ParseError(f"unexpected character {text[stripped]!r}", text, stripped)
        if m.lastgroup is None and not m.group().strip():
            pos = m.end()
            continue
        kind = m.lastgroup
        val = m.group(kind)
        tokens.append((kind, val, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {value or kind}, found {tok[1] or 'end of input'}",
                             self.text, tok[2])
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'}",
                             self.text, tok[2])
        self.k += 1
        return tok

    # AST nodes: ("int", k) | ("gen", name, indices) | ("neg", node)
    #            | ("mul", a, b) | ("add", a, b) | ("sub", a, b)
    def expr(self):
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            node = ("mul", node, self.factor())
        return node

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return ("neg", self.factor())
        if kind == "op" and val == "(":
            self.take()
            node = self.expr()
            self.take("op", ")")
            return node
        if kind == "int":
            self.take()
            return ("int", int(val))
        if kind == "name":
            self.take()
            nargs = 2 if val in ("a", "abar") else 1
            self.take("op", "[")
            idx = [int(self.take("int")[1])]
            for _ in range(nargs - 1):
                self.take("op", ",")
                idx.append(int(self.take("int")[1]))
            self.take("op", "]")
            return ("gen", val, tuple(idx))
        raise ParseError(f"expected an expression, found {val or 'end of input'}",
                         self.text, pos)


def _scan_chirality(node, text):
    names = set()

    def walk(nd):
        if nd[0] == "gen":
            names.add(nd[1])
        for child in nd[1:]:
            if isinstance(child, tuple):
                walk(child)

    walk(node)
    barred = {"abar", "qpbar"} & names
    unbarred = {"a", "qp"} & names
    if barred and unbarred:
        raise ParseError(
            "chirality mixing: barred and unbarred generators in one expression",
            text, 0)
    return "right" if barred else "left"


def parse_expr(text, ctx=None, n=None, h=None, algebra=None):
    """Parse to an AlgElement; raises ParseError with position on bad input."""
    parser = _Parser(text)
    node = parser.expr()
    parser.take("end")
    chirality = _scan_chirality(node, text)
    if algebra is not None:
        alg = algebra
        ctx = alg.ctx
    else:
        if ctx is None:
            ctx = FieldContext(n, h)
        alg = Algebra(ctx, chirality)

    def lower(nd):
        kind = nd[0]
        if kind == "int":
            return alg.unit().scaled(ctx.from_int(nd[1]))
        if kind == "gen":
            name, idx = nd[1], nd[2]
            if name == "a":
                return alg.gen(idx[0], idx[1])
            if name == "abar":
                # abar^alpha_j carries key (j, alpha) in the right algebra
                return alg.gen(idx[1], idx[0])
            return alg.qp_symbol(idx[0])
        if kind == "neg":
            return -lower(nd[1])
        if kind == "mul":
            return lower(nd[1]) * lower(nd[2])
        if kind == "add":
            return lower(nd[1]) + lower(nd[2])
        return lower(nd[1]) - lower(nd[2])

    return lower(node)
