"""Exact Groebner-basis kernel over the rationals.

Sparse polynomials with Fraction coefficients, monomial orders
(degrevlex, lex, block elimination), multivariate division, Buchberger
with the coprimality and chain criteria, reduced bases, and the ideal
operations built on them: membership, sum, product, power, intersection
by elimination, colon by a polynomial, equality.

Set ``BASIS_LOG`` to a list to record every computed basis as a
:class:`BasisRecord`; :func:`verify_basis` re-checks the Buchberger
post-conditions on a record independently of the main loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from itertools import combinations
from math import gcd, lcm
from typing import NamedTuple

from .rings import Monomial, Ring, RingMismatchError, check_same_ring

AUX_VARIABLE = "@w"  # reserved for elimination; the file grammar rejects it


class InternalInvariantError(RuntimeError):
    """A computation violated one of its own invariants (a bug, not bad input)."""


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """Total, multiplicative well-order on exponent vectors.

    ``key`` maps an exponent tuple to a flat tuple of ints that compares
    the same way the order does (bigger key = bigger monomial).
    """

    kind = "abstract"

    def key(self, exps):
        raise NotImplementedError


class DegRevLex(MonomialOrder):
    kind = "degrevlex"

    def __init__(self, perm=None):
        self.perm = tuple(perm) if perm is not None else None

    def key(self, exps):
        if self.perm is not None:
            exps = tuple(exps[i] for i in self.perm)
        out = [sum(exps)]
        out.extend(-e for e in reversed(exps))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, DegRevLex) and self.perm == other.perm

    def __hash__(self):
        return hash((self.kind, self.perm))

    def __repr__(self):
        return "DegRevLex()" if self.perm is None else f"DegRevLex(perm={self.perm})"


class Lex(MonomialOrder):
    kind = "lex"

    def __init__(self, perm=None):
        self.perm = tuple(perm) if perm is not None else None

    def key(self, exps):
        if self.perm is not None:
            exps = tuple(exps[i] for i in self.perm)
        return tuple(exps)

    def __eq__(self, other):
        return isinstance(other, Lex) and self.perm == other.perm

    def __hash__(self):
        return hash((self.kind, self.perm))

    def __repr__(self):
        return "Lex()" if self.perm is None else f"Lex(perm={self.perm})"


class BlockElimination(MonomialOrder):
    """Compare the first ``first_k`` exponents (degrevlex) before the rest.

    Any basis element whose leading monomial avoids the first block is
    free of the first block entirely, which is what elimination needs.
    """

    kind = "block_elimination"

    def __init__(self, first_k: int):
        if first_k < 1:
            raise ValueError("the first block needs at least one variable")
        self.first_k = first_k

    def key(self, exps):
        k = self.first_k
        head, tail = exps[:k], exps[k:]
        out = [sum(head)]
        out.extend(-e for e in reversed(head))
        out.append(sum(tail))
        out.extend(-e for e in reversed(tail))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, BlockElimination) and self.first_k == other.first_k

    def __hash__(self):
        return hash((self.kind, self.first_k))

    def __repr__(self):
        return f"BlockElimination({self.first_k})"


DEGREVLEX = DegRevLex()
LEX = Lex()


# ---------------------------------------------------------------------------
# polynomials


class Term(NamedTuple):
    monomial: Monomial
    coefficient: Fraction


def _exp_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _exp_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Sparse exact-rational polynomial: a dict from exponent tuple to Fraction.

    Instances are immutable by convention; all arithmetic returns new
    objects. Term order is a presentation concern: ``terms(order)`` sorts
    on demand and never changes the stored term multiset.
    """

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring: Ring, coeffs=None):
        self.ring = ring
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c:
                    clean[e] = c
        self.coeffs = clean
        self._hash = None

    # -- constructors

    @classmethod
    def zero(cls, ring: Ring) -> Polynomial:
        return cls(ring)

    @classmethod
    def constant(cls, ring: Ring, c) -> Polynomial:
        return cls(ring, {(0,) * ring.nvars: Fraction(c)})

    @classmethod
    def variable(cls, ring: Ring, name: str) -> Polynomial:
        exps = [0] * ring.nvars
        exps[ring.index(name)] = 1
        return cls(ring, {tuple(exps): Fraction(1)})

    @classmethod
    def from_monomial(cls, m: Monomial, c=1) -> Polynomial:
        return cls(m.ring, {m.exponents: Fraction(c)})

    # -- basic queries

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def total_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.coeffs)

    def leading(self, order: MonomialOrder = DEGREVLEX):
        """(exponent tuple, coefficient) of the leading term under order."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.coeffs, key=order.key)
        return e, self.coeffs[e]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return Monomial(self.ring, self.leading(order)[0])

    def terms(self, order: MonomialOrder = DEGREVLEX):
        """Terms strictly descending under the order."""
        out = sorted(self.coeffs, key=order.key, reverse=True)
        return [Term(Monomial(self.ring, e), self.coeffs[e]) for e in out]

    def as_monomial(self):
        """(monomial, coefficient) when the polynomial has exactly one term."""
        if len(self.coeffs) != 1:
            return None
        ((e, c),) = self.coeffs.items()
        return Monomial(self.ring, e), c

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            check_same_ring(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial(self.ring)
            return Polynomial(
                self.ring, {e: c * other for e, c in self.coeffs.items()}
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = _exp_mul(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("polynomial powers need n >= 0")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- normal forms of the object itself

    def content_normalized(self) -> Polynomial:
        """Scale to primitive integer coefficients, lex-leading one positive."""
        if not self.coeffs:
            return self
        g = 0
        l = 1
        for c in self.coeffs.values():
            g = gcd(g, c.numerator)
            l = lcm(l, c.denominator)
        scale = Fraction(l, g)
        if self.coeffs[max(self.coeffs)] < 0:
            scale = -scale
        return Polynomial(self.ring, {e: c * scale for e, c in self.coeffs.items()})

    def monic(self, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        _, lc = self.leading(order)
        if lc == 1:
            return self
        inv = 1 / lc
        return Polynomial(self.ring, {e: c * inv for e, c in self.coeffs.items()})

    # -- plumbing

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.coeffs.items())))
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in self.terms(DEGREVLEX):
            mag = abs(c)
            if m.degree == 0:
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}*{m}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# division


def _reduce_dict(p, divisors, order):
    """Remainder of the term dict p modulo the prepared divisors.

    Divisors are (leading exps, leading coeff, coeff dict), tried in list
    order. New monomials introduced by a reduction step are strictly
    smaller than the one cancelled, so a lazy max-heap over the live
    monomials is sound.
    """
    key = order.key
    p = dict(p)
    r = {}
    heap = []
    for e in p:
        heappush(heap, (tuple(-k for k in key(e)), e))
    while heap:
        _, e = heappop(heap)
        c = p.get(e)
        if c is None:
            continue
        for de, dc, dcoeffs in divisors:
            if _exp_divides(de, e):
                factor = c / dc
                shift = tuple(a - b for a, b in zip(e, de))
                del p[e]
                for e2, c2 in dcoeffs.items():
                    if e2 == de:
                        continue
                    tgt = _exp_mul(e2, shift)
                    old = p.get(tgt)
                    v = (old if old is not None else 0) - factor * c2
                    if v:
                        p[tgt] = v
                        if old is None:
                            heappush(heap, (tuple(-k for k in key(tgt)), tgt))
                    elif old is not None:
                        del p[tgt]
                break
        else:
            del p[e]
            r[e] = c
    return r


def _prepare_divisors(G, order):
    out = []
    for g in G:
        if g.is_zero():
            continue
        de, dc = g.leading(order)
        out.append((de, dc, g.coeffs))
    return out


def normal_form(f: Polynomial, G, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Remainder of f on division by G (tried in list order).

    f minus the result lies in the ideal spanned by G, and no remainder
    term is divisible by any leading monomial of G.
    """
    divisors = _prepare_divisors(G, order)
    if not divisors:
        return f
    return Polynomial(f.ring, _reduce_dict(f.coeffs, divisors, order))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    L = _exp_lcm(ef, eg)
    sf = tuple(a - b for a, b in zip(L, ef))
    sg = tuple(a - b for a, b in zip(L, eg))
    out = {}
    for e, c in f.coeffs.items():
        out[_exp_mul(e, sf)] = c / cf
    for e, c in g.coeffs.items():
        tgt = _exp_mul(e, sg)
        v = out.get(tgt, 0) - c / cg
        if v:
            out[tgt] = v
        else:
            out.pop(tgt, None)
    return Polynomial(f.ring, out)


def divide_exact(f: Polynomial, d: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Quotient f / d when d divides f exactly; anything else is a bug here."""
    if d.is_zero():
        raise ValueError("division by the zero polynomial")
    ed, cd = d.leading(order)
    key = order.key
    p = dict(f.coeffs)
    q = {}
    while p:
        e = max(p, key=key)
        if not _exp_divides(ed, e):
            raise InternalInvariantError(
                "exact division left a remainder; the divisor was expected "
                "to divide every element here"
            )
        c = p[e]
        shift = tuple(a - b for a, b in zip(e, ed))
        factor = c / cd
        q[shift] = factor
        for e2, c2 in d.coeffs.items():
            tgt = _exp_mul(e2, shift)
            v = p.get(tgt, 0) - factor * c2
            if v:
                p[tgt] = v
            else:
                p.pop(tgt, None)
    return Polynomial(f.ring, q)


# ---------------------------------------------------------------------------
# Buchberger


@dataclass
class BasisRecord:
    generators: tuple
    basis: tuple
    order: MonomialOrder


BASIS_LOG = None  # set to a list to record every computed basis


def _log_basis(generators, basis, order):
    if BASIS_LOG is not None:
        BASIS_LOG.append(BasisRecord(tuple(generators), tuple(basis), order))


def _reduced_from_basis(G, order):
    """Reduced basis from any Groebner basis G: minimal, tail-reduced, monic."""
    key = order.key
    items = []
    for g in G:
        if not g.is_zero():
            items.append((g, g.leading(order)[0]))
    items.sort(key=lambda t: key(t[1]))
    minimal = []
    for g, lm in items:
        if not any(_exp_divides(lm2, lm) for _, lm2 in minimal):
            minimal.append((g, lm))
    out = []
    for i, (g, lm) in enumerate(minimal):
        others = [h for j, (h, _) in enumerate(minimal) if j != i]
        out.append(normal_form(g, others, order).monic(order))
    out.sort(key=lambda p: key(p.leading(order)[0]), reverse=True)
    return tuple(out)


def buchberger(generators, order: MonomialOrder = DEGREVLEX):
    """Reduced Groebner basis of the ideal the generators span.

    Pair selection is by smallest lcm (degree first); pairs with coprime
    leading monomials are skipped, as are pairs covered by the chain
    criterion. Every accepted element is content-normalized to keep the
    rational arithmetic small. Termination is Dickson's lemma.
    """
    gens = [g for g in generators if isinstance(g, Polynomial) and not g.is_zero()]
    if not gens:
        basis = ()
        _log_basis(generators, basis, order)
        return basis
    ring = gens[0].ring
    for g in gens:
        check_same_ring(gens[0], g)

    key = order.key
    G = []
    lms = []

    def append(poly):
        G.append(poly)
        lms.append(poly.leading(order)[0])

    # light interreduction of the inputs: one pass, keeps the pair queue small
    for g in gens:
        r = normal_form(g, G, order)
        if not r.is_zero():
            append(r.content_normalized())

    pending = set()
    heap = []

    def push_pair(i, j):
        if i > j:
            i, j = j, i
        L = _exp_lcm(lms[i], lms[j])
        heappush(heap, (sum(L), key(L), i, j))
        pending.add((i, j))

    for i, j in combinations(range(len(G)), 2):
        push_pair(i, j)

    while heap:
        _, _, i, j = heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = lms[i], lms[j]
        L = _exp_lcm(li, lj)
        # coprime leading monomials: the S-polynomial always reduces to zero
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion: some k divides the lcm and both mixed pairs are done
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _exp_divides(lms[k], L):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(G[i], G[j], order)
        r = normal_form(s, G, order)
        if not r.is_zero():
            append(r.content_normalized())
            new = len(G) - 1
            for k in range(new):
                push_pair(k, new)

    basis = _reduced_from_basis(G, order)
    _log_basis(generators, basis, order)
    return basis


def verify_basis(record: BasisRecord, recompute: bool = True, shuffle_seed: int = 0):
    """Re-check the Buchberger post-conditions on a recorded basis.

    Raises AssertionError on the first violation. ``recompute`` also
    reruns the construction from a shuffled generator list and demands
    the identical reduced basis.
    """
    import random

    basis = [g for g in record.basis if not g.is_zero()]
    order = record.order
    if not basis:
        for g in record.generators:
            assert g.is_zero(), "zero basis for a nonzero ideal"
        return
    lms = [g.leading(order)[0] for g in basis]
    for i, g in enumerate(basis):
        assert g.leading(order)[1] == 1, f"basis element {i} is not monic"
        for e in g.coeffs:
            for j, lm in enumerate(lms):
                if j != i:
                    assert not _exp_divides(lm, e), (
                        f"basis element {i} has a term reducible by element {j}"
                    )
    for i, j in combinations(range(len(basis)), 2):
        s = s_polynomial(basis[i], basis[j], order)
        if s.is_zero():
            continue
        assert normal_form(s, basis, order).is_zero(), (
            f"S-polynomial of basis elements {i}, {j} does not reduce to zero"
        )
    for g in record.generators:
        if isinstance(g, Polynomial) and not g.is_zero():
            assert normal_form(g, basis, order).is_zero(), (
                "an input generator does not reduce to zero against the basis"
            )
    if recompute:
        gens = [g for g in record.generators if isinstance(g, Polynomial)]
        random.Random(shuffle_seed).shuffle(gens)
        again = buchberger(gens, order)
        assert tuple(again) == tuple(record.basis), (
            "reduced basis depends on the generator order"
        )


# ---------------------------------------------------------------------------
# polynomial ideals


class PolyIdeal:
    """Generator list plus cached reduced Groebner bases, one per order."""

    __slots__ = ("ring", "generators", "_bases", "_gb_hint")

    def __init__(self, ring: Ring, generators=(), gb_hint=None, gb_hint_order=None):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._bases = {}
        self._gb_hint = None
        if gb_hint is not None:
            self._gb_hint = (gb_hint_order or DEGREVLEX, tuple(gb_hint))

    @classmethod
    def zero(cls, ring: Ring) -> PolyIdeal:
        return cls(ring)

    def is_zero(self) -> bool:
        return not self.generators

    def groebner_basis(self, order: MonomialOrder = DEGREVLEX):
        cached = self._bases.get(order)
        if cached is not None:
            return cached
        if self._gb_hint is not None and self._gb_hint[0] == order:
            basis = _reduced_from_basis(list(self._gb_hint[1]), order)
            _log_basis(self.generators, basis, order)
        else:
            basis = buchberger(self.generators, order)
        self._bases[order] = basis
        return basis

    def member(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> bool:
        check_same_ring(
            f, self.generators[0] if self.generators else Polynomial.zero(self.ring)
        )
        if f.is_zero():
            return True
        return normal_form(f, self.groebner_basis(order), order).is_zero()

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"PolyIdeal{self}"


def member(f: Polynomial, I: PolyIdeal) -> bool:
    return I.member(f)


def _check_rings(I: PolyIdeal, J: PolyIdeal):
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")


def ideal_sum(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    _check_rings(I, J)
    gens = list(I.generators)
    for g in J.generators:
        if g not in gens:
            gens.append(g)
    return PolyIdeal(I.ring, gens)


def ideal_product(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    _check_rings(I, J)
    gens = []
    for f in I.generators:
        for g in J.generators:
            fg = f * g
            if fg not in gens:
                gens.append(fg)
    return PolyIdeal(I.ring, gens)


def ideal_power(I: PolyIdeal, n: int) -> PolyIdeal:
    """I**n at generator level; n = 0 gives the unit ideal by convention."""
    if n < 0:
        raise ValueError("ideal powers need n >= 0")
    if n == 0:
        return PolyIdeal(I.ring, (Polynomial.constant(I.ring, 1),))
    result = I
    for _ in range(n - 1):
        result = ideal_product(result, I)
    return result


def _extended_ring(ring: Ring) -> Ring:
    if AUX_VARIABLE in ring.variables:
        raise InternalInvariantError("the auxiliary variable is already in use")
    return Ring((AUX_VARIABLE,) + ring.variables)


def _lift(f: Polynomial, ext: Ring) -> Polynomial:
    return Polynomial(ext, {(0,) + e: c for e, c in f.coeffs.items()})


def _drop_aux(f: Polynomial, ring: Ring) -> Polynomial:
    return Polynomial(ring, {e[1:]: c for e, c in f.coeffs.items()})


def ideal_intersect(I: PolyIdeal, J: PolyIdeal) -> PolyIdeal:
    """I ∩ J by elimination: adjoin w, take w*I + (1-w)*J, drop w.

    The w-free part of the block-order basis is a degrevlex Groebner
    basis of the intersection, so it is attached as a basis hint.
    """
    _check_rings(I, J)
    if I.is_zero() or J.is_zero():
        return PolyIdeal.zero(I.ring)
    ext = _extended_ring(I.ring)
    w = Polynomial.variable(ext, AUX_VARIABLE)
    one_minus_w = Polynomial.constant(ext, 1) - w
    gens = [w * _lift(g, ext) for g in I.generators]
    gens += [one_minus_w * _lift(g, ext) for g in J.generators]
    basis = buchberger(gens, BlockElimination(1))
    keep = []
    for g in basis:
        e, _ = g.leading(BlockElimination(1))
        if e[0] == 0:
            if any(e2[0] for e2 in g.coeffs):
                raise InternalInvariantError(
                    "w-free leading monomial but a w-bearing tail term"
                )
            keep.append(_drop_aux(g, I.ring).content_normalized())
    return PolyIdeal(I.ring, keep, gb_hint=keep, gb_hint_order=DEGREVLEX)


def ideal_quotient(I: PolyIdeal, f: Polynomial) -> PolyIdeal:
    """(I : f) = the exact quotient by f of I intersected with (f)."""
    if f.is_zero():
        raise ValueError("cannot take a colon by the zero polynomial")
    check_same_ring(
        f, I.generators[0] if I.generators else Polynomial.zero(I.ring)
    )
    inter = ideal_intersect(I, PolyIdeal(I.ring, (f,)))
    gens = [divide_exact(g, f) for g in inter.generators]
    # dividing a Groebner basis of I ∩ (f) by f keeps it a Groebner basis
    return PolyIdeal(I.ring, gens, gb_hint=gens, gb_hint_order=DEGREVLEX)


def ideal_equals(I: PolyIdeal, J: PolyIdeal, order: MonomialOrder = DEGREVLEX) -> bool:
    """Reduced bases under a common order coincide exactly."""
    _check_rings(I, J)
    return I.groebner_basis(order) == J.groebner_basis(order)
