"""Ideal-theoretic operations: quotient, annihilator, saturation,
intersection, radical membership, radicals, and the Jacobian test ideal.

The radical follows a two-strategy plan.  Zero-dimensional ideals use
squarefree parts of univariate eliminants (one per variable); adjoining
those parts makes the ideal radical.  Positive-dimensional ideals reduce
to the zero-dimensional case over the rational function field of a
maximal independent variable set: a block order whose dependent block
dominates makes the Groebner basis valid there, pseudo-remainder
sequences keep the squarefree computation denominator-free, and the
contraction back is a saturation by the collected leading coefficients.
The missed locus is recovered by recursing on the ideal plus the product
of those coefficients.
"""
from __future__ import annotations

from itertools import combinations

from .errors import (
    RingMismatch,
    StrategyFailed,
    UnitIdeal,
    UnsupportedCharacteristic,
    ZeroPolynomial,
)
from .groebner import Ideal, dimension, eliminate, independent_sets, normal_form
from .ring import (
    Block,
    DEGREVLEX,
    LEX,
    Polynomial,
    PolyRing,
    divide_with_remainder,
)


class QuotientRingContext:
    """A presentation R = ring/D; D must be proper, and is expected
    reduced (reducedness is the caller's contract, checked on demand)."""

    def __init__(self, ring: PolyRing, defining: Ideal):
        if defining.ring != ring:
            raise RingMismatch("defining ideal lives in a different ring")
        if defining.contains_one():
            raise UnitIdeal("defining ideal is the unit ideal (zero ring)")
        self.ring = ring
        self.defining = defining

    def nf(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.defining)

    def is_zero(self, p: Polynomial) -> bool:
        return self.nf(p).is_zero()

    def __repr__(self):
        return f"{self.ring!r} / {self.defining!r}"


def _fresh_name(ring: PolyRing, stem: str = "_t") -> str:
    name = stem
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{stem}{k}"
    return name


def _adjoined(ring: PolyRing):
    """Ring with one fresh variable in a dominant lex block."""
    name = _fresh_name(ring)
    extended = PolyRing(
        ring.field,
        (name,) + ring.variables,
        Block(((0,), LEX), (tuple(range(1, ring.nvars + 1)), DEGREVLEX)),
    )
    return extended, name


def _back_to(ring: PolyRing, polys):
    return [p.map_to(ring) for p in polys]


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via the t-trick: eliminate t from t*I + (1-t)*J."""
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    ext, name = _adjoined(ring)
    t = ext.var(name)
    gens = [t * g.map_to(ext) for g in I.generators]
    gens += [(ext.one - t) * g.map_to(ext) for g in J.generators]
    elim = eliminate(Ideal(ext, gens), {name})
    out = Ideal(ring, _back_to(ring, elim.groebner_basis()))
    out.groebner_basis()
    return out


def _quotient_by_element(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) for a single nonzero f, via intersection and exact division."""
    ring = I.ring
    inter = intersect(I, Ideal(ring, [f]))
    gens = []
    for g in inter.generators:
        qs, r = divide_with_remainder(g, [f])
        if r:
            raise AssertionError("intersection member not divisible by f")
        gens.append(qs[0])
    out = Ideal(ring, gens)
    out.groebner_basis()
    return out


def ideal_quotient(I: Ideal, J: Ideal, ctx: QuotientRingContext) -> Ideal:
    """Generators of {h : h*J ⊆ I + D} reduced modulo D."""
    if I.ring != ctx.ring or J.ring != ctx.ring:
        raise RingMismatch("quotient arguments live in different rings")
    ring = ctx.ring
    ambient = Ideal(ring, list(I.generators) + list(ctx.defining.generators))
    ambient.groebner_basis()
    parts = []
    for f in J.generators:
        f = ctx.nf(f)
        if f.is_zero():
            continue
        parts.append(_quotient_by_element(ambient, f))
    if not parts:
        # J vanishes modulo D, so every element qualifies
        return Ideal(ring, [ring.one])
    total = parts[0]
    for part in parts[1:]:
        total = intersect(total, part)
    gens = []
    for g in total.groebner_basis():
        r = ctx.nf(g)
        if r and r not in gens:
            gens.append(r)
    out = Ideal(ring, gens)
    out.groebner_basis()
    return out


def annihilator(f: Polynomial, ctx: QuotientRingContext) -> Ideal:
    """(0 : f) in ring/D, i.e. (D : f) reduced modulo D."""
    if f.ring != ctx.ring:
        raise RingMismatch("element lives in a different ring")
    f = ctx.nf(f)
    if f.is_zero():
        return Ideal(ctx.ring, [ctx.ring.one])
    if ctx.defining.is_zero():
        return Ideal(ctx.ring, [])
    quo = _quotient_by_element(ctx.defining, f)
    gens = []
    for g in quo.groebner_basis():
        r = ctx.nf(g)
        if r and r not in gens:
            gens.append(r)
    out = Ideal(ctx.ring, gens)
    out.groebner_basis()
    return out


def saturation(I: Ideal, f: Polynomial) -> Ideal:
    """{h : h*f^m in I for some m}, by one adjoined variable and
    elimination of it."""
    if f.ring != I.ring:
        raise RingMismatch("element lives in a different ring")
    if f.is_zero():
        raise ZeroPolynomial("cannot saturate with respect to zero")
    ring = I.ring
    ext, name = _adjoined(ring)
    t = ext.var(name)
    gens = [g.map_to(ext) for g in I.generators]
    gens.append(ext.one - t * f.map_to(ext))
    elim = eliminate(Ideal(ext, gens), {name})
    out = Ideal(ring, _back_to(ring, elim.groebner_basis()))
    out.groebner_basis()
    return out


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """f in sqrt(I), decided by 1 in I + (1 - t*f)."""
    if f.ring != I.ring:
        raise RingMismatch("element lives in a different ring")
    if f.is_zero():
        return True
    ext, name = _adjoined(f.ring)
    t = ext.var(name)
    gens = [g.map_to(ext) for g in I.generators]
    gens.append(ext.one - t * f.map_to(ext))
    return Ideal(ext, gens).contains_one()


# -- univariate helpers (field coefficients) -------------------------------

def _univariate_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while b:
        _, r = divide_with_remainder(a, [b])
        a, b = b, r
    return a.monic()


def _squarefree_part_field(g: Polynomial, var_index: int, char: int) -> Polynomial:
    deg = g.degree_in(var_index)
    if char and char <= deg:
        raise UnsupportedCharacteristic(
            f"GF({char}) is too small for a squarefree part of degree {deg}")
    dg = g.derivative(var_index)
    if dg.is_zero():
        raise UnsupportedCharacteristic(
            "derivative vanished; characteristic divides every exponent")
    d = _univariate_gcd(g, dg)
    if d.is_constant():
        return g.monic()
    qs, r = divide_with_remainder(g, [d])
    if r:
        raise AssertionError("gcd does not divide its argument")
    return qs[0].monic()


# -- pseudo-division helpers (coefficients in a subring) -------------------

def _leading_coeff_in(p: Polynomial, i: int) -> Polynomial:
    return p.coefficient_in(i, p.degree_in(i))


def _var_power(ring: PolyRing, i: int, e: int) -> Polynomial:
    m = tuple(e if j == i else 0 for j in range(ring.nvars))
    return ring.term(m, ring.field.one)


def _prem(f: Polynomial, g: Polynomial, i: int) -> Polynomial:
    """Pseudo-remainder of f by g, both viewed as univariate in x_i."""
    ring = f.ring
    dg = g.degree_in(i)
    lc_g = _leading_coeff_in(g, i)
    r = f
    while r and r.degree_in(i) >= dg:
        s = _leading_coeff_in(r, i) * _var_power(ring, i, r.degree_in(i) - dg)
        r = lc_g * r - s * g
    return r


def _pquo_exact(f: Polynomial, g: Polynomial, i: int) -> Polynomial:
    """Pseudo-quotient when g divides f over the fraction field of the
    other variables; the pseudo-remainder must vanish."""
    ring = f.ring
    dg = g.degree_in(i)
    lc_g = _leading_coeff_in(g, i)
    r, q = f, ring.zero
    while r and r.degree_in(i) >= dg:
        s = _leading_coeff_in(r, i) * _var_power(ring, i, r.degree_in(i) - dg)
        q = lc_g * q + s
        r = lc_g * r - s * g
    if r:
        raise AssertionError("pseudo-division expected to be exact")
    return q


def _squarefree_part_pseudo(g: Polynomial, i: int, char: int):
    """Squarefree part of g viewed in k(u)[x_i]; stays denominator-free.

    Returns (part, junk) where junk collects the leading-coefficient
    factors picked up along the way (polynomials in the u-variables)."""
    deg = g.degree_in(i)
    if char and char <= deg:
        raise UnsupportedCharacteristic(
            f"GF({char}) is too small for a squarefree part of degree {deg}")
    dg = g.derivative(i)
    if dg.is_zero():
        raise UnsupportedCharacteristic(
            "derivative vanished; characteristic divides every exponent")
    a, b = g, dg
    while b and b.degree_in(i) > 0:
        a, b = b, _prem(a, b, i)
    if b:
        # gcd is trivial over k(u); g is already squarefree there
        return g, [b, _leading_coeff_in(g, i)]
    part = _pquo_exact(g, a, i)
    junk = [_leading_coeff_in(a, i), _leading_coeff_in(part, i)]
    return part, junk


# -- radical ----------------------------------------------------------------

def _certify_radical(original: Ideal, candidate: Ideal):
    for g in original.generators:
        if not normal_form(g, candidate).is_zero():
            raise StrategyFailed("radical certification failed: I not contained")
    for g in candidate.generators:
        if not radical_membership(g, original):
            raise StrategyFailed("radical certification failed: generator escapes")


def _radical_zerodim(I: Ideal, char: int) -> Ideal:
    ring = I.ring
    extra = []
    for i, name in enumerate(ring.variables):
        others = set(ring.variables) - {name}
        elim = eliminate(I, others)
        gens = [g for g in elim.groebner_basis() if g]
        if not gens:
            raise StrategyFailed(
                f"no univariate eliminant in {name}; ideal is not zero-dimensional")
        g = min(gens, key=lambda p: p.degree_in(i))
        extra.append(_squarefree_part_field(g, i, char))
    out = Ideal(ring, list(I.generators) + extra)
    out = Ideal(ring, list(out.groebner_basis()))
    return out


def _dep_leading_data(g: Polynomial, dep: tuple, block: Block):
    """Leading coefficient of g in k[u][dep] under a dep-dominant block
    order: the u-polynomial attached to the maximal dep-monomial."""
    work = g.map_to(g.ring.with_order(block))
    lead_dep = tuple(work.LM[i] for i in dep)
    ring = g.ring
    d = {}
    for m, c in g.terms:
        if tuple(m[i] for i in dep) == lead_dep:
            key = tuple(0 if i in dep else e for i, e in enumerate(m))
            d[key] = d.get(key, ring.field.zero) + c
    return ring.from_dict(d)


def _radical_general(I: Ideal, char: int, depth: int, max_depth: int) -> Ideal:
    if depth > max_depth:
        raise StrategyFailed(f"radical recursion exceeded depth {max_depth}")
    ring = I.ring
    if I.contains_one():
        return Ideal(ring, [ring.one])
    if I.is_zero():
        return I
    sets = independent_sets(I)
    u = tuple(sorted(min(sets, key=lambda s: tuple(sorted(s)))))
    if not u:
        return _radical_zerodim(I, char)
    dep = tuple(i for i in range(ring.nvars) if i not in set(u))
    block = Block((dep, DEGREVLEX), (u, DEGREVLEX))

    factors = []

    def note(h: Polynomial):
        h = h.monic()
        if h and not h.is_constant() and h not in factors:
            factors.append(h)

    for g in I.groebner_basis(block):
        note(_dep_leading_data(g, dep, block))

    extra = []
    for i in dep:
        others = {ring.variables[j] for j in dep if j != i}
        elim = eliminate(I, others)
        gens = [g for g in elim.groebner_basis()
                if g and g.degree_in(i) > 0]
        if not gens:
            raise StrategyFailed(
                f"no eliminant in {ring.variables[i]} over the independent set")
        g = min(gens, key=lambda p: p.degree_in(i))
        part, junk = _squarefree_part_pseudo(g, i, char)
        extra.append(part)
        for h in junk:
            note(h)

    J = Ideal(ring, list(I.generators) + extra)
    for g in J.groebner_basis(block):
        note(_dep_leading_data(g, dep, block))

    contracted = Ideal(ring, list(J.groebner_basis()))
    for h in factors:
        contracted = saturation(contracted, h)
    if not factors:
        return contracted

    h_total = ring.one
    for h in factors:
        h_total = h_total * h
    rest = _radical_general(
        Ideal(ring, list(I.generators) + [h_total]), char, depth + 1, max_depth)
    if rest.contains_one():
        return contracted
    return intersect(contracted, rest)


def radical(I: Ideal, strategy: str = "auto", max_depth: int = 16) -> Ideal:
    """Generators of sqrt(I); the output is certified (containment plus
    radical membership of every generator) before being returned."""
    ring = I.ring
    char = ring.field.characteristic
    if I.is_zero():
        return I
    if I.contains_one():
        return Ideal(ring, [ring.one])
    if strategy not in ("auto", "zerodim", "general"):
        raise ValueError(f"unknown radical strategy {strategy!r}")
    if strategy == "zerodim":
        out = _radical_zerodim(I, char)
    elif strategy == "general":
        out = _radical_general(I, char, 0, max_depth)
    else:
        if dimension(I) == 0:
            out = _radical_zerodim(I, char)
        else:
            out = _radical_general(I, char, 0, max_depth)
    _certify_radical(I, out)
    return out


# -- Jacobian test ideal -----------------------------------------------------

def _determinant(rows):
    n = len(rows)
    if n == 0:
        raise ValueError("empty determinant handled by caller")
    if n == 1:
        return rows[0][0]
    ring = rows[0][0].ring
    total = ring.zero
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = entry * _determinant(minor)
        total = total - term if j % 2 else total + term
    return total


def jacobian_test_ideal(ctx: QuotientRingContext) -> Ideal:
    """D plus the c x c minors of the Jacobian of D's generators, where
    c = (number of variables) - dim(D).  Not radicalized here.

    Entries and minors are reduced modulo D and deduplicated; congruent
    entries give congruent determinants, so the ideal is unchanged while
    the generator list stays small."""
    ring = ctx.ring
    gens = list(ctx.defining.generators)
    c = ring.nvars - dimension(ctx.defining)
    if c <= 0:
        return Ideal(ring, gens + [ring.one])
    jac = [[ctx.nf(g.derivative(j)) for j in range(ring.nvars)] for g in gens]
    minors = []
    seen = set()
    for rows in combinations(range(len(gens)), c):
        for cols in combinations(range(ring.nvars), c):
            det = _determinant([[jac[r][col] for col in cols] for r in rows])
            if not det:
                continue
            if c > 1:
                det = ctx.nf(det)
                if not det:
                    continue
            key = det.monic()
            if key in seen:
                continue
            seen.add(key)
            minors.append(det)
            if det.is_constant():
                break
        else:
            continue
        break
    out = Ideal(ring, gens + minors)
    out.groebner_basis()
    return out
