"""Decompositions of monomial ideals and the three symbolic-power paths.

Symbolic powers can be computed three ways that must agree:

* ``symbolic_power_squarefree`` -- intersect the n-th powers of the
  minimal primes (squarefree input only);
* ``symbolic_power_from_decomposition`` -- intersect the n-th powers of
  caller-supplied primary components;
* ``symbolic_power_saturation`` -- saturate I**n at the product of the
  variables outside each prime, then intersect.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .ideals import MonomialIdeal
from .rings import Monomial, Ring

KIND_MINIMAL_PRIMES = "minimal_primes"
KIND_IRREDUCIBLE = "irreducible"
KIND_USER_PRIMARY = "user_primary"

SOURCE_COMPUTED = "computed"
SOURCE_USER = "user_supplied"


class NotSquarefreeError(ValueError):
    """The operation needs a squarefree ideal."""


@dataclass(frozen=True)
class VariablePrime:
    """Prime ideal generated by a set of variables (given by index)."""

    ring: Ring
    variables: tuple

    def __post_init__(self):
        if not self.variables:
            raise ValueError("a variable prime needs at least one variable")
        if list(self.variables) != sorted(set(self.variables)):
            raise ValueError("variable indices must be sorted and distinct")
        if self.variables[-1] >= self.ring.nvars or self.variables[0] < 0:
            raise ValueError("variable index out of range")

    @property
    def names(self) -> tuple:
        return tuple(self.ring.variables[i] for i in self.variables)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_variables(self.ring, self.variables)

    def power_ideal(self, n: int) -> MonomialIdeal:
        """P**n written down directly: all degree-n monomials in P's variables."""
        if n < 0:
            raise ValueError("ideal powers need n >= 0")
        if n == 0:
            return MonomialIdeal.unit(self.ring)
        gens = []
        for parts in _compositions(n, len(self.variables)):
            exps = [0] * self.ring.nvars
            for i, e in zip(self.variables, parts):
                exps[i] = e
            gens.append(Monomial(self.ring, tuple(exps)))
        return MonomialIdeal(self.ring, gens)

    def outside_product(self) -> Monomial:
        """Product of the variables not in the prime."""
        inside = set(self.variables)
        exps = tuple(0 if i in inside else 1 for i in range(self.ring.nvars))
        return Monomial(self.ring, exps)

    def __str__(self):
        return "(" + ", ".join(self.names) + ")"


@dataclass(frozen=True)
class Decomposition:
    """Ordered list of components whose intersection is the input ideal."""

    components: tuple
    kind: str
    source: str

    def intersection(self) -> MonomialIdeal:
        return _intersect_fold(list(self.components))


def _compositions(n, k):
    # weak compositions of n into k nonnegative parts
    for bars in combinations(range(n + k - 1), k - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(n + k - 1 - prev - 1)
        yield tuple(parts)


def _require_proper_nonzero(I: MonomialIdeal):
    if I.is_zero():
        raise ValueError("the zero ideal has no decomposition")
    if I.is_unit():
        raise ValueError("the unit ideal has no decomposition")


def _intersect_fold(ideals) -> MonomialIdeal:
    # ascending generator count keeps the intermediate ideals small
    parts = sorted(
        ideals,
        key=lambda J: (len(J.generators), [g.sort_key for g in J.generators]),
    )
    result = parts[0]
    for J in parts[1:]:
        result = result.intersect(J)
    return result


def minimal_covers(edges):
    """All minimal transversals of a hypergraph, as sorted frozensets.

    Branches on the vertices of a smallest uncovered edge; the raw covers
    are then pruned to the antichain of minimal ones.
    """
    found = set()

    def extend(cover, remaining):
        if not remaining:
            found.add(frozenset(cover))
            return
        edge = min(remaining, key=lambda e: (len(e), sorted(e)))
        for v in sorted(edge):
            extend(cover | {v}, [e for e in remaining if v not in e])

    extend(frozenset(), [frozenset(e) for e in edges])
    minimal = []
    for c in sorted(found, key=lambda s: (len(s), sorted(s))):
        if not any(m <= c for m in minimal):
            minimal.append(c)
    return minimal


def minimal_variable_primes(I: MonomialIdeal) -> list:
    """Minimal primes of a squarefree ideal via minimal vertex covers."""
    _require_proper_nonzero(I)
    if not I.is_squarefree():
        raise NotSquarefreeError(
            "minimal primes need a squarefree ideal; pass radical() "
            "or use the irreducible decomposition"
        )
    covers = minimal_covers(g.support() for g in I.generators)
    return [VariablePrime(I.ring, tuple(sorted(c))) for c in covers]


def minimal_primes(I: MonomialIdeal) -> Decomposition:
    primes = minimal_variable_primes(I)
    return Decomposition(
        tuple(p.ideal() for p in primes), KIND_MINIMAL_PRIMES, SOURCE_COMPUTED
    )


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """Irredundant decomposition into ideals generated by pure variable powers.

    Splits any generator u*v with coprime u, v into the two ideals where
    one factor replaces the generator, then drops redundant components.
    """
    _require_proper_nonzero(I)
    ring = I.ring
    components = set()
    seen = set()
    stack = [I.generators]
    while stack:
        gens = stack.pop()
        target = next((g for g in gens if len(g.support()) >= 2), None)
        if target is None:
            components.add(gens)
            continue
        i = target.support()[0]
        left_exps = [0] * ring.nvars
        left_exps[i] = target.exponents[i]
        right_exps = list(target.exponents)
        right_exps[i] = 0
        rest = tuple(g for g in gens if g != target)
        for piece in (Monomial(ring, tuple(left_exps)), Monomial(ring, tuple(right_exps))):
            new = MonomialIdeal(ring, rest + (piece,)).generators
            if new not in seen:
                seen.add(new)
                stack.append(new)
    ideals = [MonomialIdeal(ring, gens) for gens in components]
    ideals = _drop_redundant(ideals)
    ideals.sort(key=lambda J: (len(J.generators), [g.sort_key for g in J.generators]))
    return Decomposition(tuple(ideals), KIND_IRREDUCIBLE, SOURCE_COMPUTED)


def _drop_redundant(components):
    comps = sorted(
        set(components),
        key=lambda J: (len(J.generators), [g.sort_key for g in J.generators]),
    )
    i = 0
    while i < len(comps):
        others = comps[:i] + comps[i + 1 :]
        if others and _intersect_fold(others).issubset(comps[i]):
            comps.pop(i)
            continue
        i += 1
    return comps


def associated_primes(I: MonomialIdeal) -> list:
    """Radicals of the irredundant irreducible components, deduplicated."""
    dec = irreducible_decomposition(I)
    primes = set()
    for comp in dec.components:
        support = set()
        for g in comp.generators:
            support.update(g.support())
        primes.add(VariablePrime(I.ring, tuple(sorted(support))))
    return sorted(primes, key=lambda p: (len(p.variables), p.variables))


def symbolic_power_squarefree(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """Intersection of the n-th powers of the minimal primes."""
    if n < 1:
        raise ValueError("symbolic powers need n >= 1")
    primes = minimal_variable_primes(I)
    return _intersect_fold([p.power_ideal(n) for p in primes])


def symbolic_power_from_decomposition(components, n: int) -> MonomialIdeal:
    """Intersection of the n-th powers of caller-supplied components."""
    components = list(components)
    if not components:
        raise ValueError("need at least one decomposition component")
    if n < 1:
        raise ValueError("symbolic powers need n >= 1")
    ring = components[0].ring
    if any(c.ring != ring for c in components):
        raise ValueError("decomposition components live in different rings")
    return _intersect_fold([c.power(n) for c in components])


def symbolic_power_saturation(I: MonomialIdeal, n: int, primes: str = "min") -> MonomialIdeal:
    """Saturation form of the definition: intersect (I**n : u_p^inf) over primes p.

    ``primes="min"`` uses the minimal primes of radical(I) (every worked
    example in the suite); ``primes="ass"`` uses the associated primes
    from the irreducible decomposition.
    """
    _require_proper_nonzero(I)
    if n < 1:
        raise ValueError("symbolic powers need n >= 1")
    if primes == "min":
        plist = minimal_variable_primes(I.radical())
    elif primes == "ass":
        plist = associated_primes(I)
    else:
        raise ValueError(f"unknown prime selector: {primes!r}")
    power = I.power(n)
    return _intersect_fold([power.saturate(p.outside_product()) for p in plist])


def symbolic_power(
    I: MonomialIdeal,
    n: int,
    method: str = "saturation",
    components=None,
    primes: str = "min",
) -> MonomialIdeal:
    """Dispatch over the three paths."""
    if method == "squarefree":
        return symbolic_power_squarefree(I, n)
    if method == "decomposition":
        if components is None:
            raise ValueError("the decomposition path needs components")
        return symbolic_power_from_decomposition(components, n)
    if method == "saturation":
        return symbolic_power_saturation(I, n, primes=primes)
    raise ValueError(f"unknown method: {method!r}")
