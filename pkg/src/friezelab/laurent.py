"""Multivariate Laurent polynomials with exact integer coefficients.

A value is a finite map from exponent vectors (tuples of ints, possibly
negative) to nonzero Python ints.  The map is kept canonical at all times:
zero coefficients are dropped on construction, so two values are equal iff
their term maps are equal.  All operations return new objects; instances are
treated as immutable and are safe to share.

Serialization order is graded-lexicographic on exponent vectors (total
degree descending, then lexicographic descending), which makes printed and
JSON forms byte-stable.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotDivisible

Exponent = tuple[int, ...]


def _grlex_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


class LaurentPoly:
    """A Laurent polynomial in a fixed ordered list of variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponent, int] | None = None):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable names")
        object.__setattr__(self, "vars", vs)
        clean: dict[Exponent, int] = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(vs):
                raise ValueError("exponent vector length does not match variable count")
            coef = int(coef)
            if coef:
                clean[exp] = coef
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "LaurentPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Iterable[str], value: int) -> "LaurentPoly":
        vs = tuple(variables)
        return cls(vs, {(0,) * len(vs): int(value)})

    @classmethod
    def one(cls, variables: Iterable[str]) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> "LaurentPoly":
        vs = tuple(variables)
        exp = [0] * len(vs)
        exp[vs.index(name)] = 1
        return cls(vs, {tuple(exp): 1})

    @classmethod
    def monomial(cls, variables: Iterable[str], exponents: Iterable[int], coef: int = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exponents): coef})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise ValueError("variable lists differ: %r vs %r" % (self.vars, other.vars))
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.vars, other)
        raise TypeError("cannot combine LaurentPoly with %r" % type(other).__name__)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            new = terms.get(exp, 0) + coef
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        return LaurentPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(exp, 0) + c1 * c2
                if new:
                    out[exp] = new
                else:
                    out.pop(exp, None)
        return LaurentPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- division ----------------------------------------------------------

    def _leading(self) -> tuple[Exponent, int]:
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def _min_exponents(self) -> Exponent:
        # Per-variable minimum over the support; the Newton-polytope identity
        # min(p*q) = min(p) + min(q) makes this the right shift for division.
        mins = [min(e[i] for e in self.terms) for i in range(len(self.vars))]
        return tuple(mins)

    def div_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Return r with r * divisor == self, or raise NotDivisible."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.vars)
        shift_p = self._min_exponents()
        shift_q = divisor._min_exponents()
        p = {tuple(a - b for a, b in zip(e, shift_p)): c for e, c in self.terms.items()}
        q = LaurentPoly(self.vars, {tuple(a - b for a, b in zip(e, shift_q)): c
                                    for e, c in divisor.terms.items()})
        lt_exp, lt_coef = q._leading()
        quotient: dict[Exponent, int] = {}
        rem = LaurentPoly(self.vars, p)
        while not rem.is_zero():
            rexp, rcoef = rem._leading()
            qexp = tuple(a - b for a, b in zip(rexp, lt_exp))
            if any(x < 0 for x in qexp) or rcoef % lt_coef:
                raise NotDivisible("no exact Laurent quotient exists")
            qcoef = rcoef // lt_coef
            quotient[qexp] = quotient.get(qexp, 0) + qcoef
            rem = rem - q * LaurentPoly.monomial(self.vars, qexp, qcoef)
        back = tuple(a - b for a, b in zip(shift_p, shift_q))
        return LaurentPoly(self.vars, {tuple(a + b for a, b in zip(e, back)): c
                                       for e, c in quotient.items()})

    # -- evaluation --------------------------------------------------------

    def specialize(self, values: Mapping[str, int]) -> Fraction:
        """Exact rational value of the polynomial at an integer point."""
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise ValueError("no value assigned to %s" % ", ".join(missing))
        point = [int(values[v]) for v in self.vars]
        total = Fraction(0)
        for exp, coef in self.terms.items():
            term = Fraction(coef)
            for base, e in zip(point, exp):
                if e == 0:
                    continue
                if base == 0 and e < 0:
                    raise ZeroDivisionError("zero raised to a negative power")
                term *= Fraction(base) ** e
            total += term
        return total

    def specialize_int(self, values: Mapping[str, int]) -> int:
        val = self.specialize(values)
        if val.denominator != 1:
            raise ValueError("value %s is not an integer" % val)
        return val.numerator

    def at_ones(self) -> int:
        return self.specialize_int({v: 1 for v in self.vars})

    # -- serialization -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exp, coef in self.sorted_terms():
            factors = []
            for name, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                mono = str(abs(coef))
            elif abs(coef) == 1:
                mono = "*".join(factors)
            else:
                mono = "%d*%s" % (abs(coef), "*".join(factors))
            sign = "-" if coef < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += " %s %s" % (sign, mono)
        return out

    def __repr__(self) -> str:
        return "LaurentPoly(%r)" % str(self)

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(exp), "coef": str(coef)} for exp, coef in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        terms = {tuple(int(x) for x in t["exp"]): int(t["coef"]) for t in data["terms"]}
        return cls(tuple(data["vars"]), terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")


def parse_laurent(text: str, variables: Iterable[str]) -> LaurentPoly:
    """Parse the textual form produced by str(), e.g. 'x0^-1*x1 + 2*x_a'."""
    vs = tuple(variables)
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError("cannot tokenize %r" % text[pos:])
            break
        tokens.append(m.group().strip())
        pos = m.end()

    result = LaurentPoly.zero(vs)
    i = 0
    sign = 1
    while i < len(tokens):
        tok = tokens[i]
        if tok == "+":
            sign = 1
            i += 1
            continue
        if tok == "-":
            sign = -1
            i += 1
            continue
        coef = sign
        exp = [0] * len(vs)
        while True:
            tok = tokens[i]
            if tok.isdigit():
                coef *= int(tok)
                i += 1
            else:
                if tok not in vs:
                    raise ValueError("unknown variable %r" % tok)
                power = 1
                i += 1
                if i < len(tokens) and tokens[i] == "^":
                    i += 1
                    neg = 1
                    if tokens[i] == "-":
                        neg = -1
                        i += 1
                    power = neg * int(tokens[i])
                    i += 1
                exp[vs.index(tok)] += power
            if i < len(tokens) and tokens[i] == "*":
                i += 1
                continue
            break
        result = result + LaurentPoly.monomial(vs, exp, coef)
        sign = 1
    return result
