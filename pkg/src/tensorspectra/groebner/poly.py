"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are exponent tuples aligned with an ordered variable registry.  The
registry order is the lex ranking: the first variable is the largest, so lex
comparison of monomials is plain tuple comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from ..errors import NotRationalError, ParseError

__all__ = ["MultiPoly", "to_fraction", "parse_poly"]


def to_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, rational string or float.

    Floats go through their shortest repr, so 0.1 becomes 1/10.
    """
    if isinstance(x, bool):
        raise NotRationalError(f"{x!r} is not a rational number")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise NotRationalError(f"{x!r} is not a rational number")
        return Fraction(repr(float(x)))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise NotRationalError(f"{x!r} is not a rational number") from exc
    if isinstance(x, complex):
        if x.imag != 0:
            raise NotRationalError(f"{x!r} has a nonzero imaginary part")
        return to_fraction(x.real)
    try:
        return to_fraction(float(x)) if float(x) == x else Fraction(x)
    except (TypeError, ValueError) as exc:
        raise NotRationalError(f"{x!r} is not a rational number") from exc


class MultiPoly:
    """Immutable polynomial over Q in the variables of ``registry``."""

    __slots__ = ("registry", "terms", "_lead")

    def __init__(self, registry: Iterable[str], terms: Mapping[tuple, object] | None = None):
        self.registry = tuple(registry)
        if len(set(self.registry)) != len(self.registry):
            raise ValueError(f"duplicate variable names in {self.registry}")
        n = len(self.registry)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"exponent vector {exps} does not fit {n} variables")
            c = to_fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self.terms = {k: v for k, v in clean.items() if v}
        self._lead = None

    @classmethod
    def _raw(cls, registry: tuple, terms: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.registry = registry
        obj.terms = terms
        obj._lead = None
        return obj

    # constructors

    @classmethod
    def constant(cls, registry, c) -> "MultiPoly":
        registry = tuple(registry)
        return cls(registry, {(0,) * len(registry): c})

    @classmethod
    def var(cls, registry, name: str) -> "MultiPoly":
        registry = tuple(registry)
        exps = [0] * len(registry)
        exps[registry.index(name)] = 1
        return cls(registry, {tuple(exps): 1})

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def lead(self) -> tuple[tuple, Fraction]:
        """Leading (monomial, coefficient) under lex."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading term")
            m = max(self.terms)
            self._lead = (m, self.terms[m])
        return self._lead

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self.terms.items(), reverse=True)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            used.update(v for v, e in zip(self.registry, m) if e)
        return used

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        _, lc = self.lead()
        return MultiPoly._raw(self.registry, {m: c / lc for m, c in self.terms.items()})

    def _check(self, other: "MultiPoly") -> None:
        if other.registry != self.registry:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.registry, other)

    # arithmetic

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.registry, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.registry, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MultiPoly._raw(self.registry, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = MultiPoly.constant(self.registry, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_term(self, mono: tuple, coeff: Fraction) -> "MultiPoly":
        """self * coeff * x^mono."""
        return MultiPoly._raw(
            self.registry,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.registry == other.registry and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.registry, frozenset(self.terms.items())))

    # evaluation and conversion

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate with any numeric type (exact for Fractions, float otherwise)."""
        xs = [values[v] for v in self.registry]
        total = 0
        for m, c in self.sorted_terms():
            term = c
            for x, e in zip(xs, m):
                if e:
                    term = term * x ** e
            total = total + term
        return total

    def restrict(self, names: Iterable[str]) -> "MultiPoly":
        """Re-express in the sub-registry ``names``; the other variables must be absent."""
        names = tuple(names)
        pos = [self.registry.index(v) for v in names]
        dropped = [i for i in range(len(self.registry)) if i not in pos]
        out = {}
        for m, c in self.terms.items():
            if any(m[i] for i in dropped):
                raise ValueError("polynomial uses variables outside the requested subring")
            out[tuple(m[i] for i in pos)] = c
        return MultiPoly._raw(names, out)

    def univariate_coeffs(self, name: str) -> list[Fraction]:
        """Coefficients (constant first) of a polynomial in the single variable ``name``."""
        i = self.registry.index(name)
        coeffs: dict[int, Fraction] = {}
        for m, c in self.terms.items():
            if any(e for j, e in enumerate(m) if j != i):
                raise ValueError(f"polynomial is not univariate in {name}")
            coeffs[m[i]] = c
        deg = max(coeffs, default=0)
        return [coeffs.get(d, Fraction(0)) for d in range(deg + 1)]

    def to_text(self) -> str:
        """Canonical text: coeff*var^exp products, descending lex, joined by ' + '."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.registry, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            coeff = str(c)
            parts.append("*".join([coeff] + factors) if factors else coeff)
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r})"


_TERM_SPLIT = re.compile(r"(?<=[^+\-*^/])(?=[+-])")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_COEFF = re.compile(r"^\d+(/\d+)?$")


def parse_poly(text: str, registry: Iterable[str]) -> MultiPoly:
    """Parse polynomial text over ``registry``.

    Accepts the canonical form written by :meth:`MultiPoly.to_text` as well
    as hand-written input such as ``x^2 - 1/2*x*y + 3``.
    """
    registry = tuple(registry)
    text = "".join(text.split())
    if not text:
        raise ParseError("empty polynomial text")
    terms: dict = {}
    for raw in _TERM_SPLIT.split(text):
        body = raw.lstrip("+")
        sign = Fraction(1)
        while body.startswith("-"):
            sign, body = -sign, body[1:]
        if not body:
            raise ParseError(f"empty term in {text!r}")
        coeff = sign
        exps = [0] * len(registry)
        for i, factor in enumerate(body.split("*")):
            if i == 0 and _COEFF.match(factor):
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            if not _NAME.match(name) or name not in registry:
                raise ParseError(f"unknown variable {name!r} in term {raw!r}")
            if power and not power.isdigit():
                raise ParseError(f"bad exponent {power!r} in term {raw!r}")
            exps[registry.index(name)] += int(power) if power else 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return MultiPoly(registry, terms)
