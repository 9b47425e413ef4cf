"""Sparse multivariate polynomials over the rationals.

A MultiPoly is an immutable-by-convention pair of an ordered variable
tuple and a dict mapping exponent tuples to nonzero Fraction
coefficients.  All arithmetic is exact; no floating point is used
anywhere in this package.

Serialization (text, JSON, LaTeX) lists terms in graded lexicographic
order, highest total degree first, so equal polynomials always produce
byte-identical output.  The text form round-trips through from_text.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

_TOKEN_RE = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction coefficient, got {type(value).__name__}")


def _term_sort_key(exps: tuple[int, ...]) -> tuple:
    # Graded lex, descending: larger total degree first, then larger
    # exponent vector first.
    return (-sum(exps), tuple(-e for e in exps))


class MultiPoly:
    """Polynomial in named variables with Fraction coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], Scalar] | None = None):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        collected: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != len(names):
                raise ValueError(f"exponent vector {key} does not match variables {names}")
            if any(not isinstance(e, int) or e < 0 for e in key):
                raise ValueError(f"exponents must be nonnegative integers, got {key}")
            value = collected.get(key, Fraction(0)) + _as_fraction(coeff)
            if value:
                collected[key] = value
            else:
                collected.pop(key, None)
        object.__setattr__(self, "variables", names)
        object.__setattr__(self, "terms", collected)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # ------------------------------------------------------------------
    # Constructors

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Iterable[str], value: Scalar) -> "MultiPoly":
        names = tuple(variables)
        return cls(names, {(0,) * len(names): _as_fraction(value)})

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> "MultiPoly":
        names = tuple(variables)
        if name not in names:
            raise ValueError(f"{name!r} is not among variables {names}")
        exps = tuple(1 if v == name else 0 for v in names)
        return cls(names, {exps: Fraction(1)})

    # ------------------------------------------------------------------
    # Queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max exponent sum over terms; the zero polynomial has degree 0."""
        if not self.terms:
            return 0
        return max(sum(exps) for exps in self.terms)

    def degree_in(self, name: str) -> int:
        index = self._var_index(name)
        if not self.terms:
            return 0
        return max(exps[index] for exps in self.terms)

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda item: _term_sort_key(item[0]))

    def _var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"{name!r} is not among variables {self.variables}") from None

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )

    # ------------------------------------------------------------------
    # Ring operations

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            merged[exps] = merged.get(exps, Fraction(0)) + coeff
        return MultiPoly(self.variables, merged)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {exps: -coeff for exps, coeff in self.terms.items()})

    def __mul__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            scale = _as_fraction(other)
            return MultiPoly(self.variables, {exps: coeff * scale for exps, coeff in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        product: dict[tuple[int, ...], Fraction] = {}
        for exps_a, coeff_a in self.terms.items():
            for exps_b, coeff_b in other.terms.items():
                key = tuple(a + b for a, b in zip(exps_a, exps_b))
                product[key] = product.get(key, Fraction(0)) + coeff_a * coeff_b
        return MultiPoly(self.variables, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = MultiPoly.constant(self.variables, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # ------------------------------------------------------------------
    # Evaluation and substitution

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a rational point covering every variable."""
        values = []
        for name in self.variables:
            if name not in point:
                raise ValueError(f"point is missing a value for {name!r}")
            values.append(_as_fraction(point[name]))
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for value, e in zip(values, exps):
                if e:
                    term *= value**e
            total += term
        return total

    def substitute(self, bindings: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Replace every variable by a polynomial.

        All replacement polynomials must share one variable list, which
        becomes the variable list of the result.
        """
        replacements = []
        for name in self.variables:
            if name not in bindings:
                raise ValueError(f"bindings are missing a polynomial for {name!r}")
            replacements.append(bindings[name])
        if not replacements:
            raise ValueError("substitute needs at least one variable")
        target = replacements[0].variables
        for poly in replacements:
            if poly.variables != target:
                raise ValueError("replacement polynomials must share one variable list")
        result = MultiPoly.zero(target)
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(target, coeff)
            for poly, e in zip(replacements, exps):
                if e:
                    term = term * poly**e
            result = result + term
        return result

    def rename(self, variables: Iterable[str]) -> "MultiPoly":
        """Reinterpret over a same-length variable tuple, position by position."""
        names = tuple(variables)
        if len(names) != len(self.variables):
            raise ValueError(f"expected {len(self.variables)} names, got {names}")
        return MultiPoly(names, dict(self.terms))

    # ------------------------------------------------------------------
    # Serialization

    def to_text(self) -> str:
        """Canonical text form, e.g. "3*x^2*y - 1/2*y^3"."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                latex_name = _latex_variable(name)
                if e == 1:
                    factors.append(latex_name)
                elif e > 1:
                    factors.append(f"{latex_name}^{{{e}}}")
            magnitude = abs(coeff)
            if magnitude.denominator == 1:
                scalar = str(magnitude)
            else:
                scalar = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
            if not factors:
                body = scalar
            elif magnitude == 1:
                body = " ".join(factors)
            else:
                body = " ".join([scalar, *factors])
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def to_json_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [
                {"exps": list(exps), "num": str(coeff.numerator), "den": str(coeff.denominator)}
                for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "MultiPoly":
        variables = tuple(data["variables"])
        terms: dict[tuple[int, ...], Fraction] = {}
        for term in data["terms"]:
            exps = tuple(int(e) for e in term["exps"])
            coeff = Fraction(int(term["num"]), int(term["den"]))
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return cls(variables, terms)

    @classmethod
    def from_text(cls, variables: Iterable[str], text: str) -> "MultiPoly":
        """Parse the canonical text form (sums of rational-coefficient monomials)."""
        names = tuple(variables)
        tokens = _tokenize(text)
        parser = _Parser(names, tokens)
        poly = parser.parse()
        return poly

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables!r}, {self.to_text()!r})"


def _latex_variable(name: str) -> str:
    match = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if match:
        return f"{match.group(1)}_{{{match.group(2)}}}"
    return name


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            if text[pos:].strip():
                raise ValueError(f"unexpected character {text[pos:].strip()[0]!r} in polynomial text")
            break
        tokens.append(match.group().strip())
        pos = match.end()
    return tokens


class _Parser:
    """Recursive-descent parser for the textual polynomial form.

    Grammar:  expr := ['-'] term (('+'|'-') term)*
              term := factor ('*' factor)*
              factor := number ['/' number] | name ['^' number]
    """

    def __init__(self, variables: tuple[str, ...], tokens: list[str]):
        self.variables = variables
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise ValueError("unexpected end of polynomial text")
        self.pos += 1
        return token

    def parse(self) -> MultiPoly:
        result = MultiPoly.zero(self.variables)
        sign = 1
        if self.peek() in {"+", "-"}:
            sign = -1 if self.take() == "-" else 1
        result = result + self.parse_term() * sign
        while self.peek() is not None:
            op = self.take()
            if op not in {"+", "-"}:
                raise ValueError(f"expected '+' or '-', got {op!r}")
            sign = -1 if op == "-" else 1
            result = result + self.parse_term() * sign
        return result

    def parse_term(self) -> MultiPoly:
        result = self.parse_factor()
        while self.peek() == "*":
            self.take()
            result = result * self.parse_factor()
        return result

    def parse_factor(self) -> MultiPoly:
        token = self.take()
        if token.isdigit():
            value = Fraction(int(token))
            if self.peek() == "/":
                self.take()
                denom = self.take()
                if not denom.isdigit() or int(denom) == 0:
                    raise ValueError(f"bad denominator {denom!r}")
                value = Fraction(value.numerator, int(denom))
            return MultiPoly.constant(self.variables, value)
        if token in self.variables:
            exponent = 1
            if self.peek() == "^":
                self.take()
                power = self.take()
                if not power.isdigit():
                    raise ValueError(f"bad exponent {power!r}")
                exponent = int(power)
            return MultiPoly.variable(self.variables, token) ** exponent
        raise ValueError(f"unexpected token {token!r} in polynomial text")
