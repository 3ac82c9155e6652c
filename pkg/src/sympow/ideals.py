"""Monomial ideals in canonical minimal-generator form.

Every constructor funnels through :func:`minimalize`, so two equal ideals
always carry the identical generator tuple and plain ``==`` is exact
ideal equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Monomial, Ring, check_same_ring


@dataclass(frozen=True)
class DegreeStats:
    """Generator-degree summary; max/beg are None for the zero ideal."""

    max_gen_degree: int | None
    beg: int | None
    count: int


def minimalize(ring: Ring, monomials) -> tuple:
    """Unique minimal generating set of the ideal the monomials span.

    Divisibility-reduced, deduplicated, sorted ascending by
    (degree, exponent vector).
    """
    mons = set()
    for m in monomials:
        if m.ring != ring:
            check_same_ring(ring.one(), m)
        mons.add(m)
    out = []
    for u in sorted(mons, key=lambda m: m.sort_key):
        if not any(v.divides(u) for v in out):
            out.append(u)
    return tuple(out)


class MonomialIdeal:
    """A monomial ideal held as its canonical minimal generating set."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: Ring, generators=()):
        self.ring = ring
        self.generators = minimalize(ring, generators)

    @classmethod
    def zero(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring)

    @classmethod
    def unit(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring, (ring.one(),))

    @classmethod
    def from_variables(cls, ring: Ring, indices) -> MonomialIdeal:
        gens = []
        for i in indices:
            exps = [0] * ring.nvars
            exps[i] = 1
            gens.append(Monomial(ring, tuple(exps)))
        return cls(ring, gens)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return bool(self.generators) and self.generators[0].degree == 0

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def contains(self, u: Monomial) -> bool:
        check_same_ring(self.generators[0] if self.generators else self.ring.one(), u)
        return any(g.divides(u) for g in self.generators)

    def issubset(self, other: MonomialIdeal) -> bool:
        return all(other.contains(g) for g in self.generators)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        """Set-theoretic intersection via pairwise lcms of the generators."""
        if self.ring != other.ring:
            check_same_ring(self.ring.one(), other.ring.one())
        gens = [u.lcm(v) for u in self.generators for v in other.generators]
        return MonomialIdeal(self.ring, gens)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        if self.ring != other.ring:
            check_same_ring(self.ring.one(), other.ring.one())
        gens = [u * v for u in self.generators for v in other.generators]
        return MonomialIdeal(self.ring, gens)

    def power(self, n: int) -> MonomialIdeal:
        """I**n by repeated product; n = 0 gives the unit ideal by convention."""
        if n < 0:
            raise ValueError("ideal powers need n >= 0")
        result = MonomialIdeal.unit(self.ring)
        for _ in range(n):
            result = result * self
        return result

    __pow__ = power

    def quotient(self, u: Monomial) -> MonomialIdeal:
        """(I : u), computed generator by generator."""
        return MonomialIdeal(self.ring, [g.colon(u) for g in self.generators])

    def saturate(self, u: Monomial) -> MonomialIdeal:
        """(I : u^inf): iterate quotient until the ideal stops growing."""
        current = self
        while True:
            nxt = current.quotient(u)
            if nxt == current:
                return current
            current = nxt

    def radical(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, [g.radical() for g in self.generators])

    def degree_stats(self) -> DegreeStats:
        if not self.generators:
            return DegreeStats(None, None, 0)
        degrees = [g.degree for g in self.generators]
        return DegreeStats(max(degrees), min(degrees), len(degrees))

    def lcm_of_generators(self) -> Monomial:
        if not self.generators:
            raise ValueError("the zero ideal has no generator lcm")
        out = self.generators[0]
        for g in self.generators[1:]:
            out = out.lcm(g)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"
