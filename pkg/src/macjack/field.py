"""Exact arithmetic in multivariate rational-function fields, plus numeric evaluation.

Two coefficient fields are supported, one per engine mode:

  * Macdonald mode: Q(a, b, u1, ..., uN) where a and b stand for the quarter
    powers q^(1/4) and t^(1/4).  Every expression in q, t, (t/q)^(1/2),
    (t/q)^(1/4) then becomes a genuine rational function (integer exponents
    only) after clearing denominators.
  * Jack mode: Q(beta, up1, ..., upN), where up_i plays the role of u'_i.

A polynomial is a dict from exponent tuples to nonzero Fraction coefficients.
A rational function keeps its denominator as a multiset of primitive integer
polynomial factors; cancellation is done by trial division against those
factors (plus monomial-content cancellation), never by a multivariate GCD.
Equality is decided by cross-multiplication, so no canonical form is needed.

Numeric evaluation goes through mpmath at a configurable precision
(default 60 significant digits) and rejects points that put any denominator
factor within 1e-30 of zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

import mpmath

Exponent = Tuple[int, ...]

#: Default number of significant digits for numeric evaluation.
DEFAULT_DPS = 60

#: Absolute tolerance below which a denominator factor counts as a pole.
POLE_TOLERANCE = mpmath.mpf("1e-30")


class FieldError(ValueError):
    """Malformed or incompatible field elements."""


class PoleError(ArithmeticError):
    """A numeric evaluation point lies on (or too close to) a pole."""


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ring:
    """An ordered set of variable names together with the engine mode."""

    mode: str            # "macdonald" or "jack"
    n_colors: int
    variables: Tuple[str, ...]

    @staticmethod
    def macdonald(n_colors: int) -> "Ring":
        """Field Q(a, b, u1..uN) with a = q^(1/4), b = t^(1/4)."""
        if n_colors < 1:
            raise FieldError("need at least one color")
        names = ("a", "b") + tuple(f"u{i}" for i in range(1, n_colors + 1))
        return Ring("macdonald", n_colors, names)

    @staticmethod
    def jack(n_colors: int) -> "Ring":
        """Field Q(beta, up1..upN)."""
        if n_colors < 1:
            raise FieldError("need at least one color")
        names = ("beta",) + tuple(f"up{i}" for i in range(1, n_colors + 1))
        return Ring("jack", n_colors, names)

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise FieldError(f"unknown variable {name!r} in {self.mode} ring") from None

    def zero_exp(self) -> Exponent:
        return (0,) * self.arity

    # Element constructors ---------------------------------------------------

    def const(self, value) -> "RationalFunction":
        return RationalFunction.from_poly(Poly.const(self, Fraction(value)))

    @property
    def zero(self) -> "RationalFunction":
        return self.const(0)

    @property
    def one(self) -> "RationalFunction":
        return self.const(1)

    def var(self, name: str) -> "RationalFunction":
        return RationalFunction.from_poly(Poly.variable(self, name))

    def parse(self, text: str) -> "RationalFunction":
        return parse_rational(self, text)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def _grlex_key(exp: Exponent):
    return (sum(exp), exp)


class Poly:
    """Sparse multivariate polynomial with Fraction coefficients.

    Instances are treated as immutable once constructed; the term dict is
    never mutated after __init__ strips zero coefficients.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Dict[Exponent, Fraction]):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}
        self._hash = None

    # Constructors -----------------------------------------------------------

    @staticmethod
    def const(ring: Ring, value: Fraction) -> "Poly":
        value = Fraction(value)
        return Poly(ring, {ring.zero_exp(): value} if value else {})

    @staticmethod
    def variable(ring: Ring, name: str) -> "Poly":
        exp = [0] * ring.arity
        exp[ring.index(name)] = 1
        return Poly(ring, {tuple(exp): Fraction(1)})

    @staticmethod
    def monomial(ring: Ring, exp: Exponent, coeff=Fraction(1)) -> "Poly":
        return Poly(ring, {tuple(exp): Fraction(coeff)})

    # Predicates and views ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return len(self.terms) == 0 or (
            len(self.terms) == 1 and next(iter(self.terms)) == self.ring.zero_exp()
        )

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise FieldError("polynomial is not constant")
        return next(iter(self.terms.values())) if self.terms else Fraction(0)

    def leading(self) -> Tuple[Exponent, Fraction]:
        """Leading term under graded lexicographic order."""
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def monomial_content(self) -> Exponent:
        """Componentwise minimum exponent over all terms."""
        its = iter(self.terms)
        lo = list(next(its))
        for exp in its:
            for i, e in enumerate(exp):
                if e < lo[i]:
                    lo[i] = e
        return tuple(lo)

    def content_and_sign(self) -> Fraction:
        """Rational content carrying the sign of the leading coefficient."""
        nums = 0
        dens = 1
        for c in self.terms.values():
            nums = math.gcd(nums, c.numerator)
            dens = dens * c.denominator // math.gcd(dens, c.denominator)
        content = Fraction(nums, dens)
        if self.leading()[1] < 0:
            content = -content
        return content

    def primitive(self) -> Tuple[Fraction, "Poly"]:
        """Split self = scale * primitive with an integer-primitive,
        positive-leading primitive part."""
        if self.is_zero():
            return Fraction(0), self
        scale = self.content_and_sign()
        prim = Poly(self.ring, {e: c / scale for e, c in self.terms.items()})
        return scale, prim

    # Arithmetic ---------------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise FieldError("polynomials from different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return Poly(self.ring, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.terms or not other.terms:
            return Poly(self.ring, {})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: Dict[Exponent, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Poly(self.ring, out)

    def scale(self, value: Fraction) -> "Poly":
        value = Fraction(value)
        if not value:
            return Poly(self.ring, {})
        return Poly(self.ring, {e: c * value for e, c in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise FieldError("negative power of a polynomial; lift to RationalFunction")
        result = Poly.const(self.ring, Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift_down(self, exp: Exponent) -> "Poly":
        """Divide by the monomial with exponent vector `exp` (must divide)."""
        out = {}
        for e, c in self.terms.items():
            ne = tuple(x - y for x, y in zip(e, exp))
            if any(v < 0 for v in ne):
                raise FieldError("monomial does not divide polynomial")
            out[ne] = c
        return Poly(self.ring, out)

    def exact_divide(self, divisor: "Poly", max_growth: int = 8):
        """Return self / divisor when the division is exact, else None.

        Stops early (returns None) when the running remainder grows well past
        the input sizes, which only happens on non-exact divisions.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        if divisor.is_constant():
            return self.scale(1 / divisor.constant_value())
        d_exp, d_coeff = divisor.leading()
        d_items = list(divisor.terms.items())
        rem = dict(self.terms)
        out: Dict[Exponent, Fraction] = {}
        limit = max_growth * (len(rem) + len(d_items)) + 16
        while rem:
            if len(rem) > limit:
                return None
            e = max(rem, key=_grlex_key)
            diff = tuple(x - y for x, y in zip(e, d_exp))
            if any(v < 0 for v in diff):
                return None
            q = rem[e] / d_coeff
            out[diff] = q
            for de, dc in d_items:
                ne = tuple(x + y for x, y in zip(diff, de))
                s = rem.get(ne, 0) - q * dc
                if s:
                    rem[ne] = s
                elif ne in rem:
                    del rem[ne]
        return Poly(self.ring, out)

    # Comparisons ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # Evaluation and printing ----------------------------------------------------

    def evaluate(self, point: "NumericPoint"):
        values = point.ordered_values()
        total = mpmath.mpf(0)
        for exp, coeff in self.terms.items():
            term = mpmath.mpf(coeff.numerator) / coeff.denominator
            for v, e in zip(values, exp):
                if e:
                    term *= v ** e
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[exp]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self})"


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


def _merge_factor_counts(factors: Iterable[Poly]) -> Dict[Poly, int]:
    counts: Dict[Poly, int] = {}
    for f in factors:
        counts[f] = counts.get(f, 0) + 1
    return counts


class RationalFunction:
    """Element of the fraction field, kept as numerator / product of factors.

    The denominator is stored as a multiset of non-constant primitive integer
    polynomials with positive leading coefficient; its expanded product (the
    public `denominator`) is therefore itself primitive and positive-leading,
    so numerator and denominator never share an integer content.
    """

    __slots__ = ("ring", "num", "factors", "_den_cache")

    def __init__(self, ring: Ring, num: Poly, factors: Tuple[Poly, ...] = ()):
        self.ring = ring
        self.num = num
        self.factors = () if num.is_zero() else factors
        self._den_cache = None

    # Construction ----------------------------------------------------------------

    @staticmethod
    def from_poly(p: Poly) -> "RationalFunction":
        return RationalFunction(p.ring, p)

    @staticmethod
    def from_fraction(ring: Ring, num: Poly, den: Poly) -> "RationalFunction":
        """Build num/den, folding den's rational content into the numerator."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        scale, prim = den.primitive()
        n = num.scale(1 / scale)
        if prim.is_constant():
            return RationalFunction(ring, n)
        return _reduced(ring, n, _merge_factor_counts([prim]))

    # Views -------------------------------------------------------------------------

    @property
    def numerator(self) -> Poly:
        return self.num

    @property
    def denominator(self) -> Poly:
        if self._den_cache is None:
            den = Poly.const(self.ring, Fraction(1))
            for f in self.factors:
                den = den * f
            self._den_cache = den
        return self._den_cache

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return not self.factors and self.num.is_constant() and self.num.constant_value() == 1

    # Field operations ----------------------------------------------------------------

    def _check(self, other: "RationalFunction"):
        if self.ring != other.ring:
            raise FieldError("operands from different rings")

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        mine = _merge_factor_counts(self.factors)
        theirs = _merge_factor_counts(other.factors)
        union: Dict[Poly, int] = dict(mine)
        for f, k in theirs.items():
            union[f] = max(union.get(f, 0), k)
        left = self.num
        for f, k in union.items():
            extra = k - mine.get(f, 0)
            for _ in range(extra):
                left = left * f
        right = other.num
        for f, k in union.items():
            extra = k - theirs.get(f, 0)
            for _ in range(extra):
                right = right * f
        return _reduced(self.ring, left + right, union)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.ring, -self.num, self.factors)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction(self.ring, Poly(self.ring, {}))
        counts = _merge_factor_counts(self.factors + other.factors)
        return _reduced(self.ring, self.num * other.num, counts)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.inverse()

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        num = Poly.const(self.ring, Fraction(1))
        for f in self.factors:
            num = num * f
        scale, prim = self.num.primitive()
        num = num.scale(1 / scale)
        if prim.is_constant():
            return RationalFunction(self.ring, num)
        return _reduced(self.ring, num, _merge_factor_counts([prim]))

    def scale(self, value) -> "RationalFunction":
        value = Fraction(value)
        return RationalFunction(self.ring, self.num.scale(value), self.factors)

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # Comparisons --------------------------------------------------------------------

    def equals(self, other: "RationalFunction") -> bool:
        """Exact equality by cross-multiplication."""
        self._check(other)
        lhs = self.num * other.denominator
        rhs = other.num * self.denominator
        return lhs == rhs

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFunction) and self.equals(other)

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable (no canonical form)")

    # Evaluation -----------------------------------------------------------------------

    def evaluate(self, point: "NumericPoint"):
        """Evaluate at a numeric point; raises PoleError near denominator zeros."""
        if point.ring != self.ring:
            raise FieldError("point belongs to a different ring")
        with mpmath.workdps(point.dps):
            den = mpmath.mpf(1)
            for f in self.factors:
                v = f.evaluate(point)
                if abs(v) < POLE_TOLERANCE:
                    raise PoleError(
                        f"denominator factor {f} evaluates to {mpmath.nstr(v, 5)} "
                        f"(|.| < {mpmath.nstr(POLE_TOLERANCE, 2)})"
                    )
                den *= v
            return self.num.evaluate(point) / den

    # Printing --------------------------------------------------------------------------

    def __str__(self) -> str:
        if not self.factors:
            return str(self.num)
        num = str(self.num)
        den = str(self.denominator)
        return f"({num})/({den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def pretty(self) -> str:
        return pretty(self)


def _reduced(ring: Ring, num: Poly, counts: Dict[Poly, int]) -> RationalFunction:
    """Cancel numerator against denominator factors and build the result.

    Cancellation is heuristic but exact: monomial factors cancel against the
    numerator's monomial content, all other factors by trial division.
    """
    if num.is_zero():
        return RationalFunction(ring, num)
    live = {f: k for f, k in counts.items() if k > 0}
    if live:
        # Monomial factors first: cancel against the numerator's content.
        content = list(num.monomial_content())
        for f in sorted((f for f in live if f.is_monomial()), key=lambda f: str(f)):
            exp = next(iter(f.terms))
            while live.get(f, 0) > 0 and all(c >= e for c, e in zip(content, exp)):
                num = num.shift_down(exp)
                content = [c - e for c, e in zip(content, exp)]
                live[f] -= 1
        # Remaining factors by trial division, smallest first.
        for f in sorted(
            (f for f in live if live[f] > 0 and not f.is_monomial()),
            key=lambda f: (len(f.terms), str(f)),
        ):
            while live.get(f, 0) > 0:
                q = num.exact_divide(f)
                if q is None:
                    break
                num = q
                live[f] -= 1
    factors = []
    for f, k in live.items():
        factors.extend([f] * k)
    factors.sort(key=lambda f: (len(f.terms), str(f)))
    return RationalFunction(ring, num, tuple(factors))


# ---------------------------------------------------------------------------
# Numeric points
# ---------------------------------------------------------------------------


class NumericPoint:
    """High-precision assignment of a value to every ring variable."""

    __slots__ = ("ring", "values", "dps")

    def __init__(self, ring: Ring, values: Dict[str, object], dps: int = DEFAULT_DPS):
        if dps < 50:
            raise FieldError("numeric evaluation requires at least 50 digits")
        missing = set(ring.variables) - set(values)
        if missing:
            raise FieldError(f"point misses variables {sorted(missing)}")
        self.ring = ring
        self.dps = dps
        with mpmath.workdps(dps):
            self.values = {
                name: _to_mpf(values[name]) for name in ring.variables
            }

    def ordered_values(self):
        return tuple(self.values[name] for name in self.ring.variables)

    @property
    def q(self):
        return self.values["a"] ** 4

    @property
    def t(self):
        return self.values["b"] ** 4

    @staticmethod
    def q_deformation(ring: Ring, hbar, beta, uprimes, dps: int = DEFAULT_DPS) -> "NumericPoint":
        """Macdonald-mode point with q = e^hbar, t = q^beta, u_i = q^{up_i}."""
        if ring.mode != "macdonald":
            raise FieldError("q_deformation needs a macdonald-mode ring")
        if len(uprimes) != ring.n_colors:
            raise FieldError("wrong number of up values")
        with mpmath.workdps(dps):
            h = _to_mpf(hbar)
            b = _to_mpf(beta)
            values = {"a": mpmath.e ** (h / 4), "b": mpmath.e ** (b * h / 4)}
            for i, up in enumerate(uprimes, start=1):
                values[f"u{i}"] = mpmath.e ** (_to_mpf(up) * h)
        return NumericPoint(ring, values, dps)

    @staticmethod
    def beta_point(ring: Ring, beta, uprimes, dps: int = DEFAULT_DPS) -> "NumericPoint":
        """Jack-mode point assigning beta and the up_i directly."""
        if ring.mode != "jack":
            raise FieldError("beta_point needs a jack-mode ring")
        if len(uprimes) != ring.n_colors:
            raise FieldError("wrong number of up values")
        values = {"beta": beta}
        for i, up in enumerate(uprimes, start=1):
            values[f"up{i}"] = up
        return NumericPoint(ring, values, dps)


def _to_mpf(value):
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class _Parser:
    """Recursive-descent parser for the canonical rational-function syntax.

    Grammar: expressions over integers and ring variables with + - * / ^ and
    parentheses; exponents are (possibly negative, parenthesised) integers.
    Multiplication is always explicit.
    """

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str):
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(("name", text[i:j]))
                i = j
            elif ch in "+-*/^()":
                tokens.append((ch, ch))
                i += 1
            else:
                raise FieldError(f"unexpected character {ch!r} in expression")
        tokens.append(("end", None))
        return tokens

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> RationalFunction:
        value = self.expr()
        if self.peek() != "end":
            raise FieldError(f"trailing input at token {self.tokens[self.pos]}")
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.peek() in "+-":
            op = self.next()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.peek() in "*/":
            op = self.next()[0]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> RationalFunction:
        if self.peek() == "-":
            self.next()
            return -self.unary()
        if self.peek() == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.next()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        sign = 1
        parens = False
        if self.peek() == "(":
            self.next()
            parens = True
        if self.peek() == "-":
            self.next()
            sign = -1
        kind, value = self.next()
        if kind != "int":
            raise FieldError("exponent must be an integer")
        if parens and self.next()[0] != ")":
            raise FieldError("unbalanced parentheses in exponent")
        return sign * value

    def atom(self) -> RationalFunction:
        kind, value = self.next()
        if kind == "int":
            return self.ring.const(value)
        if kind == "name":
            return self.ring.var(value)
        if kind == "(":
            inner = self.expr()
            if self.next()[0] != ")":
                raise FieldError("unbalanced parentheses")
            return inner
        raise FieldError(f"unexpected token {value!r}")


def parse_rational(ring: Ring, text: str) -> RationalFunction:
    """Parse the canonical string form back into a RationalFunction."""
    return _Parser(ring, text).parse()


# ---------------------------------------------------------------------------
# Pretty-printing (human-readable only)
# ---------------------------------------------------------------------------


def _pretty_monomial(ring: Ring, exp: Exponent) -> str:
    """Render one monomial, mapping a^4 -> q, b^4 -> t and mixed quarter
    powers to (t/q)^(s/4) when the exponents permit."""
    names = ring.variables
    parts = []
    if ring.mode == "macdonald":
        i, j = exp[0], exp[1]
        rest = exp[2:]
        if (i + j) % 4 == 0:
            s = (-i) % 4
            alpha = (i + s) // 4
            beta = (j - s) // 4
            for sym, k in (("q", alpha), ("t", beta)):
                if k == 1:
                    parts.append(sym)
                elif k:
                    parts.append(f"{sym}^{k}")
            if s == 2:
                parts.append("(t/q)^(1/2)")
            elif s in (1, 3):
                parts.append(f"(t/q)^({s}/4)")
        else:
            for name, e in zip(names[:2], (i, j)):
                if e == 1:
                    parts.append(name)
                elif e:
                    parts.append(f"{name}^{e}")
        for name, e in zip(names[2:], rest):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
    else:
        for name, e in zip(names, exp):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
    return "*".join(parts)


def _pretty_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exp in sorted(p.terms, key=_grlex_key, reverse=True):
        coeff = p.terms[exp]
        mono = _pretty_monomial(p.ring, exp)
        if not mono:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mono
        else:
            body = f"{abs(coeff)}*{mono}"
        pieces.append(("-" if coeff < 0 else "+", body))
    head_sign, head = pieces[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def pretty(rf: RationalFunction) -> str:
    """Human-readable form with q, t and (t/q) powers restored where possible."""
    num = _pretty_poly(rf.num)
    if not rf.factors:
        return num
    return f"({num})/({_pretty_poly(rf.denominator)})"
