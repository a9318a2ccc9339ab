"""Exact arithmetic over the integers and over Z[a_ij].

Ring elements are either plain Python ``int`` values or :class:`Poly`
instances (sparse term maps with integer coefficients).  Mixing the two
promotes the integer to a constant polynomial.  Polynomials compare equal to
integers when they are constant, so ``is_zero`` works uniformly.

Monomials are tuples of ``((i, j), exponent)`` pairs sorted by variable id,
with no zero exponents; the empty tuple is the constant monomial.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Tuple, Union

Var = Tuple[int, int]
Monomial = Tuple[Tuple[Var, int], ...]
RingElement = Union[int, "Poly"]

ONE_MONOMIAL: Monomial = ()


class ParseError(ValueError):
    """Raised for malformed polynomial text; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_sort_key(m: Monomial):
    """Sort key putting monomials in descending graded-lex order.

    Variables are ranked a_1_1 > a_1_2 > ... > a_n_n.  For equal degree,
    comparing the variable multisets written out in increasing id order
    is the same as lex comparison of exponent vectors.
    """
    expanded = tuple(v for v, e in m for _ in range(e))
    return (-len(expanded), expanded)


class Poly:
    """Sparse multivariate polynomial with integer coefficients.

    Treat instances as immutable: every operation returns a new object.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Monomial, int] | None = None):
        self.terms: Dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "Poly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, value: int) -> "Poly":
        return cls._raw({ONE_MONOMIAL: value} if value else {})

    @classmethod
    def var(cls, i: int, j: int) -> "Poly":
        return cls._raw({(((i, j), 1),): 1})

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONOMIAL in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(ONE_MONOMIAL, 0)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: mono_sort_key(t[0]))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int):
            if not other:
                return self
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly._raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Poly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly._raw({})
            return Poly._raw({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Poly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result: Poly = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, int):
            if not other:
                return not self.terms
            return self.terms == {ONE_MONOMIAL: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_expr(self)!r})"

    def __str__(self) -> str:
        return format_expr(self)


def var(i: int, j: int) -> Poly:
    return Poly.var(i, j)


def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def neg(x: RingElement) -> RingElement:
    return -x


def sub(x: RingElement, y: RingElement) -> RingElement:
    return x + (-y)


def is_zero(x: RingElement) -> bool:
    return x == 0


def scalar_times(r: int, x: RingElement) -> RingElement:
    """``r * x`` as r-fold ring addition (r >= 0).

    This is how integers act on an arbitrary commutative ring, so identities
    that carry an integer multiplier never rely on Z-specific scaling.
    """
    if r < 0:
        raise ValueError("multiplier must be non-negative")
    acc: RingElement = 0
    for _ in range(r):
        acc = acc + x
    return acc


def ring_sum(items: Iterable[RingElement]) -> RingElement:
    """Sum many ring elements, accumulating polynomial terms in place."""
    total_int = 0
    terms: Dict[Monomial, int] = {}
    seen_poly = False
    for x in items:
        if isinstance(x, int):
            total_int += x
            continue
        seen_poly = True
        for m, c in x.terms.items():
            terms[m] = terms.get(m, 0) + c
    if not seen_poly:
        return total_int
    if total_int:
        terms[ONE_MONOMIAL] = terms.get(ONE_MONOMIAL, 0) + total_int
    return Poly._raw({m: c for m, c in terms.items() if c})


def ring_prod(items: Iterable[RingElement]) -> RingElement:
    acc: RingElement = 1
    for x in items:
        acc = acc * x
    return acc


def normalize(x: RingElement) -> RingElement:
    """Collapse a constant polynomial to a plain int."""
    if isinstance(x, Poly) and x.is_constant():
        return x.constant_term()
    return x


def as_poly(x: RingElement) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


# ---------------------------------------------------------------------------
# aliases

_ALIAS_LETTERS = "abcdefghi"


def alias_table(n: int) -> Dict[str, Var]:
    """Single-letter names for entries, row-major, only when n <= 3."""
    if n > 3:
        return {}
    out = {}
    for idx in range(n * n):
        out[_ALIAS_LETTERS[idx]] = (idx // n + 1, idx % n + 1)
    return out


# ---------------------------------------------------------------------------
# formatting


def _var_name(v: Var, aliases: Dict[Var, str] | None) -> str:
    if aliases and v in aliases:
        return aliases[v]
    return f"a_{v[0]}_{v[1]}"


def format_expr(x: RingElement, n: int | None = None, aliases: bool = False) -> str:
    """Canonical text for a ring element.

    Terms appear in descending graded-lex order with explicit integer
    coefficients and ``^`` for powers.  With ``aliases=True`` (and n <= 3)
    entries print as single letters written side by side, e.g. ``2ad``.
    """
    if isinstance(x, int):
        return str(x)
    if not x.terms:
        return "0"
    names = None
    if aliases:
        if n is None:
            n = max((max(i, j) for v in x.variables() for i, j in [v]), default=1)
        names = {v: k for k, v in alias_table(n).items()} or None
    joiner = "" if names else "*"
    pieces = []
    for m, c in x.sorted_terms():
        factors = []
        for v, e in m:
            name = _var_name(v, names)
            factors.append(name if e == 1 else f"{name}^{e}")
        body = joiner.join(factors)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{joiner}{body}"
        if not pieces:
            pieces.append(text if c > 0 else f"-{text}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + text)
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<var>a_(?P<i>\d+)_(?P<j>\d+))|(?P<int>\d+)|(?P<letter>[A-Za-z])|(?P<op>[-+*^()]))"
)
_NORMALIZE = str.maketrans({"−": "-", "·": "*", "⋅": "*", "×": "*"})


def _tokenize(text: str, n: int):
    aliases = alias_table(n)
    pos = 0
    toks = []
    text = text.translate(_NORMALIZE)
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup) if m.lastgroup else pos
        if m.group("var"):
            i, j = int(m.group("i")), int(m.group("j"))
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"variable a_{i}_{j} out of range for n={n}", start)
            toks.append(("num_or_var", Poly.var(i, j), start))
        elif m.group("int") is not None:
            toks.append(("num_or_var", int(m.group("int")), start))
        elif m.group("letter"):
            ch = m.group("letter")
            if ch not in aliases:
                raise ParseError(f"unknown variable {ch!r} for n={n}", start)
            toks.append(("num_or_var", Poly.var(*aliases[ch]), start))
        else:
            toks.append((m.group("op"), None, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.k += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                acc = acc * self.unary()
            elif kind in ("num_or_var", "("):
                # implicit multiplication: "2ad", "3bc(a+d)"
                acc = acc * self.power()
            else:
                return acc

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num_or_var")
            if not isinstance(tok[1], int):
                raise ParseError("exponent must be an integer literal", tok[2])
            base = base ** tok[1]
        return base

    def primary(self):
        tok = self.peek()
        if tok[0] == "num_or_var":
            self.take()
            return tok[1]
        if tok[0] == "(":
            self.take()
            val = self.expr()
            self.take(")")
            return val
        raise ParseError(f"unexpected token {tok[0]!r}", tok[2])


def parse_expr(text: str, n: int) -> RingElement:
    """Parse an integer or a polynomial in the entries of an n x n matrix.

    Variables are ``a_i_j`` (1-based); for n <= 3 the letters a..i name the
    entries row-major.  Returns an ``int`` when the value is constant.
    """
    parser = _Parser(_tokenize(text, n))
    if parser.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    value = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected token {tok[0]!r}", tok[2])
    return normalize(value)
