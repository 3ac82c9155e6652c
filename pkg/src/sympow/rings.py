"""Rings of named variables and exponent-vector monomials over them."""

from __future__ import annotations


class RingMismatchError(ValueError):
    """Two operands live in different rings."""


class Ring:
    """Fixed, ordered tuple of variable names.

    The order chosen at construction is used for every canonical ordering
    in the library: generator sorting, lex comparisons, printing.
    """

    __slots__ = ("variables", "_index")

    def __init__(self, variables):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        seen = set()
        for name in names:
            if not name or not name.isascii() or any(ch.isspace() for ch in name):
                raise ValueError(f"invalid variable name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name: {name!r}")
            seen.add(name)
        self.variables = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable: {name!r}") from None

    def one(self) -> Monomial:
        return Monomial(self, (0,) * self.nvars)

    def variable(self, name: str) -> Monomial:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, exponents) -> Monomial:
        return Monomial(self, tuple(exponents))

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"Ring({', '.join(self.variables)})"


def check_same_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatchError(
            f"operands live in different rings: {a.ring!r} vs {b.ring!r}"
        )


class Monomial:
    """Exponent vector in a fixed ring; the degree is the exponent sum."""

    __slots__ = ("ring", "exponents", "degree")

    def __init__(self, ring: Ring, exponents: tuple):
        if len(exponents) != ring.nvars:
            raise ValueError(
                f"expected {ring.nvars} exponents, got {len(exponents)}"
            )
        if any(e < 0 for e in exponents):
            raise ValueError(f"negative exponent in {exponents}")
        self.ring = ring
        self.exponents = exponents
        self.degree = sum(exponents)

    @property
    def sort_key(self):
        # canonical order: ascending degree, then exponent-vector lex
        return (self.degree, self.exponents)

    def is_unit(self) -> bool:
        return self.degree == 0

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def support(self) -> tuple:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def radical(self) -> Monomial:
        return Monomial(self.ring, tuple(min(e, 1) for e in self.exponents))

    def divides(self, other: Monomial) -> bool:
        check_same_ring(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        check_same_ring(self, other)
        return Monomial(
            self.ring,
            tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)),
        )

    def colon(self, other: Monomial) -> Monomial:
        """Generator-level quotient: exponentwise max(self - other, 0)."""
        check_same_ring(self, other)
        return Monomial(
            self.ring,
            tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)),
        )

    def __mul__(self, other: Monomial) -> Monomial:
        check_same_ring(self, other)
        return Monomial(
            self.ring,
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
        )

    def __pow__(self, n: int) -> Monomial:
        if n < 0:
            raise ValueError("monomial powers need n >= 0")
        return Monomial(self.ring, tuple(e * n for e in self.exponents))

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.ring == other.ring
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.ring, self.exponents))

    def __str__(self):
        if self.degree == 0:
            return "1"
        parts = []
        for name, e in zip(self.ring.variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial({self})"
