"""Concrete syntax for formulas.

Grammar, loosest binding first::

    iff     := implies ('<->' implies)*          left associative
    implies := or ('->' implies)?                right associative
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '~' unary | quant | primary
    quant   := ('forall' | 'exists') IDENT '.' iff
    primary := '(' iff ')' | IDENT '(' term (',' term)* ')' | term '=' term | IDENT

A bare identifier in formula position is a nullary atom. In term position an
identifier is a constant when the signature declares it, a variable otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import (
    KEYWORDS, And, Atom, Const, Equals, Exists, ForAll, Iff, Implies, Not, Or,
    Var, check_well_formed, ARITY_MISMATCH, EQUALITY_DISABLED, UNKNOWN_CONSTANT,
    UNKNOWN_PREDICATE,
)

SYNTAX_ERROR = "syntax-error"


@dataclass(frozen=True)
class Parsed:
    formula: object

    @property
    def ok(self):
        return True


@dataclass(frozen=True)
class FormalNonsense:
    """A string that is not a formula of the language.

    ``position`` is a 1-based character offset into the input (0 only for an
    empty input).
    """
    position: int
    reason: str
    kind: str = SYNTAX_ERROR

    @property
    def ok(self):
        return False


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op><->|->|[~&|().,=])|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<bad>\S))"
)


class _Fail(Exception):
    def __init__(self, position, reason, kind=SYNTAX_ERROR):
        super().__init__(reason)
        self.position = position
        self.reason = reason
        self.kind = kind


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break  # trailing whitespace
        start = m.start(m.lastgroup) + 1
        if m.lastgroup == "bad":
            raise _Fail(start, f"unexpected character {m.group('bad')!r}")
        tokens.append((m.group(m.lastgroup), m.lastgroup, start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, sig):
        self.text = text
        self.sig = sig
        self.tokens = _tokenize(text)
        self.i = 0
        self.bound = []

    # -- token helpers
    def peek(self, offset=0):
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else None

    def at(self, value):
        tok = self.peek()
        return tok is not None and tok[1] == "op" and tok[0] == value

    def eof_position(self):
        if self.tokens:
            return self.tokens[-1][2]
        return 1 if self.text else 0

    def fail_here(self, what):
        tok = self.peek()
        if tok is None:
            raise _Fail(self.eof_position(), f"unexpected end of input, expected {what}")
        raise _Fail(tok[2], f"unexpected {tok[0]!r}, expected {what}")

    def expect(self, value):
        if not self.at(value):
            self.fail_here(repr(value))
        self.i += 1

    # -- grammar
    def parse(self):
        f = self.iff()
        if self.peek() is not None:
            self.fail_here("end of input")
        return f

    def iff(self):
        f = self.implies()
        while self.at("<->"):
            self.i += 1
            f = Iff(f, self.implies())
        return f

    def implies(self):
        f = self.disj()
        if self.at("->"):
            self.i += 1
            f = Implies(f, self.implies())
        return f

    def disj(self):
        f = self.conj()
        while self.at("|"):
            self.i += 1
            f = Or(f, self.conj())
        return f

    def conj(self):
        f = self.unary()
        while self.at("&"):
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self):
        if self.at("~"):
            self.i += 1
            return Not(self.unary())
        tok = self.peek()
        if tok is not None and tok[1] == "ident" and tok[0] in KEYWORDS:
            return self.quantified()
        return self.primary()

    def quantified(self):
        word, _, _ = self.peek()
        self.i += 1
        tok = self.peek()
        if tok is None or tok[1] != "ident" or tok[0] in KEYWORDS:
            self.fail_here("a variable name")
        name, _, pos = tok
        if name in self.sig.constants or name in self.sig.predicates:
            raise _Fail(pos, f"cannot bind {name!r}: it is a symbol of the signature")
        self.i += 1
        self.expect(".")
        self.bound.append(name)
        body = self.iff()
        self.bound.pop()
        return ForAll(name, body) if word == "forall" else Exists(name, body)

    def primary(self):
        tok = self.peek()
        if tok is None:
            self.fail_here("a formula")
        value, kind, pos = tok
        if kind == "op":
            if value == "(":
                self.i += 1
                f = self.iff()
                self.expect(")")
                return f
            self.fail_here("a formula")
        nxt = self.peek(1)
        if nxt is not None and nxt[1] == "op" and nxt[0] == "=":
            return self.equation()
        self.i += 1
        args = []
        if self.at("("):
            self.i += 1
            args.append(self.term())
            while self.at(","):
                self.i += 1
                args.append(self.term())
            self.expect(")")
        return self.check_atom(Atom(value, tuple(args)), pos)

    def equation(self):
        left = self.term()
        eq_pos = self.peek()[2]
        self.i += 1
        if self.peek() is None:
            raise _Fail(eq_pos, "'=' needs a term on both sides")
        right = self.term()
        if not self.sig.equality:
            raise _Fail(eq_pos, "'=' is not part of this language", EQUALITY_DISABLED)
        return Equals(left, right)

    def term(self):
        tok = self.peek()
        if tok is None or tok[1] != "ident" or tok[0] in KEYWORDS:
            self.fail_here("a term")
        name, _, pos = tok
        self.i += 1
        if name in self.sig.constants:
            return Const(name)
        if name in self.sig.predicates:
            raise _Fail(pos, f"{name!r} is a predicate, not a term", UNKNOWN_CONSTANT)
        return Var(name)

    def check_atom(self, atom, pos):
        arity = self.sig.predicates.get(atom.predicate)
        if arity is None:
            raise _Fail(pos, f"predicate {atom.predicate!r} is not declared", UNKNOWN_PREDICATE)
        if arity != len(atom.args):
            raise _Fail(
                pos,
                f"{atom.predicate} takes {arity} argument(s), got {len(atom.args)}",
                ARITY_MISMATCH,
            )
        return atom


def parse_formula(text, sig):
    """Parse ``text`` over ``sig``; returns :class:`Parsed` or :class:`FormalNonsense`."""
    try:
        f = _Parser(text, sig).parse()
    except _Fail as e:
        return FormalNonsense(e.position, e.reason, e.kind)
    except RecursionError:
        return FormalNonsense(1 if text else 0, "formula nested too deeply")
    v = check_well_formed(f, sig)
    if v is not None:  # pragma: no cover - the parser checks the same rules inline
        return FormalNonsense(1, v.message, v.kind)
    return Parsed(f)


# -- printing -----------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def print_formula(f) -> str:
    """Canonical text for ``f``, parenthesised only where the grammar needs it."""
    return _fmt(f, 0, True)


def _term(t):
    return t.name


def _fmt(f, min_prec, at_end):
    # at_end: nothing follows this subformula, so a quantifier's scope may run on
    if isinstance(f, Atom):
        if not f.args:
            return f.predicate
        return f"{f.predicate}({', '.join(_term(t) for t in f.args)})"
    if isinstance(f, Equals):
        # '=' is not an operator in the precedence chain: always atomic
        return f"{_term(f.left)} = {_term(f.right)}"
    if isinstance(f, Not):
        return "~" + _fmt(f.body, 5, at_end)
    if isinstance(f, (ForAll, Exists)):
        word = "forall" if isinstance(f, ForAll) else "exists"
        if at_end:
            return f"{word} {f.var}. {_fmt(f.body, 0, True)}"
        return f"({word} {f.var}. {_fmt(f.body, 0, True)})"
    p = _PREC[type(f)]
    if p < min_prec:
        return "(" + _fmt(f, 0, True) + ")"
    if isinstance(f, Implies):
        left = _fmt(f.left, p + 1, False)
        right = _fmt(f.right, p, at_end)
    else:
        left = _fmt(f.left, p, False)
        right = _fmt(f.right, p + 1, at_end)
    return f"{left} {_SYMBOL[type(f)]} {right}"
