"""
merisurf.expr

Expressions in one variable ``u`` for ``fromf:`` and ``kappa:`` profile specs.

Grammar (``^`` binds tightest and is right associative)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' unary)?
    atom   := number | name | name '(' expr ')' | '(' expr ')'

Numbers are read in C locale. Parsed expressions compile to closures over
``numpy`` ufuncs, so they evaluate on scalars and arrays alike.
"""

import re

import numpy as np

from .exceptions import SpecParseError

FUNCTIONS = {
    'sin': np.sin,
    'cos': np.cos,
    'tan': np.tan,
    'sinh': np.sinh,
    'cosh': np.cosh,
    'tanh': np.tanh,
    'exp': np.exp,
    'log': np.log,
    'sqrt': np.sqrt,
    'abs': np.abs,
}

CONSTANTS = {
    'pi': np.pi,
    'e': np.e,
}

VARIABLE = 'u'

TOKEN_RE = re.compile(r'''
    (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
  | (?P<space>\s+)
''', re.VERBOSE)

BINARY = {
    '+': np.add,
    '-': np.subtract,
    '*': np.multiply,
    '/': np.divide,
    '^': np.power,
}


def tokenize(source):
    tokens = []
    pos = 0
    while pos < len(source):
        match = TOKEN_RE.match(source, pos)
        if match is None:
            raise SpecParseError('unexpected character %r at %d in %r' % (source[pos], pos, source))
        pos = match.end()
        kind = match.lastgroup
        if kind != 'space':
            tokens.append((kind, match.group(kind)))
    return tokens


def _constant(value):
    return lambda u: np.full(np.shape(u), value)


def _variable(u):
    return np.asarray(u, dtype=float)


def _apply(func, arg):
    return lambda u: func(arg(u))


def _combine(op, left, right):
    return lambda u: op(left(u), right(u))


class Parser:
    def __init__(self, source):
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, None)

    def advance(self):
        token = self.peek()
        if token[0] is None:
            raise SpecParseError('unexpected end of expression %r' % self.source)
        self.pos += 1
        return token

    def expect(self, text):
        kind, value = self.advance()
        if value != text:
            raise SpecParseError('expected %r, got %r in %r' % (text, value, self.source))

    def parse(self):
        if not self.tokens:
            raise SpecParseError('empty expression')
        node = self.expr()
        if self.pos != len(self.tokens):
            raise SpecParseError('trailing input %r in %r' % (self.peek()[1], self.source))
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ('+', '-'):
            _, op = self.advance()
            node = _combine(BINARY[op], node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ('*', '/'):
            _, op = self.advance()
            node = _combine(BINARY[op], node, self.unary())
        return node

    def unary(self):
        if self.peek()[1] == '-':
            self.advance()
            return _apply(np.negative, self.unary())
        if self.peek()[1] == '+':
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == '^':
            self.advance()
            return _combine(np.power, base, self.unary())
        return base

    def atom(self):
        kind, value = self.advance()
        if kind == 'number':
            return _constant(float(value))
        if value == '(':
            node = self.expr()
            self.expect(')')
            return node
        if kind == 'name':
            if value in FUNCTIONS:
                self.expect('(')
                arg = self.expr()
                self.expect(')')
                return _apply(FUNCTIONS[value], arg)
            if value in CONSTANTS:
                return _constant(CONSTANTS[value])
            if value == VARIABLE:
                return _variable
            raise SpecParseError('unknown name %r in %r' % (value, self.source))
        raise SpecParseError('unexpected %r in %r' % (value, self.source))


class Expression:
    """A compiled expression in ``u``."""

    def __init__(self, source):
        self.source = source
        self._func = Parser(source).parse()

    def __repr__(self):
        return 'Expression(%r)' % self.source

    def __call__(self, u):
        with np.errstate(all='ignore'):
            value = self._func(u)
        value = np.asarray(value, dtype=float)
        if value.ndim == 0:
            return float(value)
        return value


def compile_expression(source):
    return Expression(source)
