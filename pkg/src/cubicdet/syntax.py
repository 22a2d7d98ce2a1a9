"""Tokenizer and recursive-descent parser for polynomial expressions.

Grammar (whitespace ignored, ``*`` optional between factors)::

    expr   := term (("+" | "-") term)*
    term   := unary (["*" | "/"] unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ["^" INT]
    atom   := INT | "X" | "Y" | "Z" | "w" | "(" expr ")"

The parser produces a small tuple AST that callers fold with
:func:`evaluate` into whatever algebra they need (field constants,
ternary forms).
"""

from .errors import FormSyntaxError

VARIABLES = ("X", "Y", "Z")
GENERATOR = "w"


def tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif c in VARIABLES or c == GENERATOR or c == "ω":
            tokens.append(("name", "w" if c == "ω" else c, i))
            i += 1
        elif c in "+-*/^()":
            tokens.append((c, c, i))
            i += 1
        else:
            raise FormSyntaxError(f"unexpected character {c!r}", text, i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise FormSyntaxError(message, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.unary()
        while True:
            kind = self.peek()[0]
            if kind in ("*", "/"):
                self.take()
                rhs = self.unary()
                node = ("mul" if kind == "*" else "div", node, rhs)
            elif kind in ("int", "name", "("):
                node = ("mul", node, self.power())
            else:
                return node

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return ("neg", self.unary())
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a non-negative integer", tok)
            node = ("pow", node, tok[1])
        return node

    def atom(self):
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return ("int", tok[1])
        if kind == "name":
            return ("gen",) if tok[1] == GENERATOR else ("var", tok[1])
        if kind == "(":
            node = self.expr()
            if self.take()[0] != ")":
                self.fail("expected ')'", self.tokens[self.i - 1])
            return node
        self.fail("expected a number, variable or '('", tok)


def parse(text):
    """Parse ``text`` into an AST; raises ``FormSyntaxError`` with position."""
    return _Parser(text).parse()


def evaluate(node, algebra):
    """Fold an AST using ``algebra`` (an object with const/gen/var/add/... methods)."""
    kind = node[0]
    if kind == "int":
        return algebra.const(node[1])
    if kind == "gen":
        return algebra.gen()
    if kind == "var":
        return algebra.var(node[1])
    if kind == "neg":
        return algebra.neg(evaluate(node[1], algebra))
    if kind == "pow":
        return algebra.pow(evaluate(node[1], algebra), node[2])
    lhs = evaluate(node[1], algebra)
    rhs = evaluate(node[2], algebra)
    return getattr(algebra, kind)(lhs, rhs)
