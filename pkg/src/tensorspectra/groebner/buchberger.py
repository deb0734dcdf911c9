"""Multivariate division and Buchberger's algorithm under lex order."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import MultiPoly

__all__ = ["Limits", "GroebnerBasis", "poly_reduce", "s_polynomial", "buchberger", "is_groebner"]


@dataclass(frozen=True)
class Limits:
    max_basis: int = 500
    max_degree: int = 12
    max_seconds: float | None = 60.0


@dataclass(frozen=True)
class GroebnerBasis:
    """Basis polynomials (monic, descending leading terms) and run status.

    ``limits_hit`` names the exhausted resource when the run stopped early;
    the generators are then a partial basis and ``reduced`` is False.
    """

    generators: tuple[MultiPoly, ...]
    registry: tuple[str, ...]
    reduced: bool
    limits_hit: str | None = None
    pairs_processed: int = 0


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_multiple(p: dict, g: MultiPoly, shift: tuple, coeff: Fraction) -> None:
    # p -= coeff * x^shift * g, in place
    for m, c in g.terms.items():
        key = tuple(a + b for a, b in zip(m, shift))
        v = p.get(key, 0) - coeff * c
        if v:
            p[key] = v
        else:
            p.pop(key, None)


def poly_reduce(f: MultiPoly, G: Sequence[MultiPoly]) -> MultiPoly:
    """Remainder of f on full division by G (no remainder term is divisible by any LT)."""
    leads = [(g.lead(), g) for g in G if not g.is_zero()]
    for _, g in leads:
        f._check(g)
    p = dict(f.terms)
    rem = {}
    while p:
        m = max(p)
        c = p[m]
        for (lm, lc), g in leads:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                _sub_multiple(p, g, shift, c / lc)
                break
        else:
            rem[m] = c
            del p[m]
    return MultiPoly._raw(f.registry, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    (mf, cf), (mg, cg) = f.lead(), g.lead()
    l = _lcm(mf, mg)
    a = f.mul_term(tuple(x - y for x, y in zip(l, mf)), 1 / cf)
    b = g.mul_term(tuple(x - y for x, y in zip(l, mg)), 1 / cg)
    return a - b


def _interreduce(G: list[MultiPoly]) -> list[MultiPoly]:
    G = [g.monic() for g in G if not g.is_zero()]
    # drop elements whose leading term is divisible by another's
    G.sort(key=lambda g: g.lead()[0])
    minimal: list[MultiPoly] = []
    for g in G:
        if not any(_divides(h.lead()[0], g.lead()[0]) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(poly_reduce(g, others).monic())
    out.sort(key=lambda g: g.lead()[0], reverse=True)
    return out


def buchberger(gens: Sequence[MultiPoly], limits: Limits | None = None) -> GroebnerBasis:
    """Reduced lex Groebner basis of the ideal generated by ``gens``.

    Pairs are taken smallest-lcm first (the normal strategy) and pairs with
    coprime leading monomials are skipped.  Hitting a limit stops the run
    and returns the partial basis with ``limits_hit`` set.
    """
    limits = limits or Limits()
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("buchberger needs at least one nonzero generator")
    registry = gens[0].registry
    deadline = None if limits.max_seconds is None else time.monotonic() + limits.max_seconds
    G: list[MultiPoly] = []
    for g in gens:
        g._check(gens[0])
        g = g.monic()
        if g not in G:
            G.append(g)
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    processed = 0
    hit = None
    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            hit = "max_seconds"
            break
        i, j = min(pairs, key=lambda ij: (_lcm(G[ij[0]].lead()[0], G[ij[1]].lead()[0]), ij))
        pairs.discard((i, j))
        mi, mj = G[i].lead()[0], G[j].lead()[0]
        lcm = _lcm(mi, mj)
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue
        if sum(lcm) > limits.max_degree:
            hit = "max_degree"
            continue
        processed += 1
        h = poly_reduce(s_polynomial(G[i], G[j]), G)
        if h.is_zero():
            continue
        if len(G) >= limits.max_basis:
            hit = "max_basis"
            break
        G.append(h.monic())
        new = len(G) - 1
        pairs.update((k, new) for k in range(new))
    if hit is not None:
        G.sort(key=lambda g: g.lead()[0], reverse=True)
        return GroebnerBasis(tuple(G), registry, False, hit, processed)
    return GroebnerBasis(tuple(_interreduce(G)), registry, True, None, processed)


def is_groebner(G: Sequence[MultiPoly]) -> bool:
    """Every S-polynomial of G reduces to zero modulo G."""
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not poly_reduce(s_polynomial(G[i], G[j]), G).is_zero():
                return False
    return True
