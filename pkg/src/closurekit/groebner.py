"""Buchberger's algorithm, reduced bases, normal forms, syzygies, lifts,
elimination, and Krull dimension of leading-term ideals.

The pair update uses both standard criteria (coprime leading terms and
the chain criterion) with normal-strategy selection.  Syzygies and lifts
run on a small module-level Buchberger with a position-over-term order
whose slot 0 dominates: basis elements with zero slot 0 then generate
exactly the syzygies, and reducing (p, 0, ..., 0) reads off a lift of p.
"""
from __future__ import annotations

from .errors import NotAMember, RingMismatch
from .ring import (
    Polynomial,
    PolyRing,
    MonomialOrder,
    divide_with_remainder,
    elimination_order,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


class Ideal:
    """An ideal given by nonzero generators, with memoized reduced bases.

    Bases are memoized per order tag; computation is idempotent, so a
    concurrent duplicate computation only wastes work, never corrupts.
    """

    def __init__(self, ring: PolyRing, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch("generator from a different ring")
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._bases: dict = {}

    def groebner_basis(self, order: MonomialOrder | None = None):
        order = order or self.ring.order
        cached = self._bases.get(order.name)
        if cached is None:
            cached = _reduced_groebner(self.generators, self.ring, order)
            self._bases[order.name] = cached
        return cached

    def is_zero(self) -> bool:
        return not self.generators

    def contains_one(self) -> bool:
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0].is_constant()

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"


def _interreduce(polys, ring):
    """Repeatedly reduce each polynomial by the others until stable.
    Change is tracked through the division quotients, not by comparing
    the polynomial lists."""
    current = [p.monic() for p in polys if p]
    changed = True
    while changed:
        changed = False
        reduced = []
        for i, p in enumerate(current):
            others = reduced + current[i + 1:]
            if not others:
                reduced.append(p)
                continue
            qs, r = divide_with_remainder(p, others)
            if any(q.terms for q in qs):
                changed = True
            if r:
                reduced.append(r.monic())
        current = reduced
    return current


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = monomial_lcm(f.LM, g.LM)
    mf = monomial_div(lcm, f.LM)
    mg = monomial_div(lcm, g.LM)
    return f.mul_term(mf, f.LC.inverse()) - g.mul_term(mg, g.LC.inverse())


def _reduced_groebner(gens, ring, order):
    work_ring = ring.with_order(order)
    polys = [g.map_to(work_ring) for g in gens if g]
    basis = _buchberger(polys, work_ring)
    # certify that every input generator reduces to zero
    for g in polys:
        if basis:
            _, r = divide_with_remainder(g, basis)
            if r:
                raise AssertionError("input generator escaped its own basis")
        elif g:
            raise AssertionError("nonzero generator with empty basis")
    if work_ring != ring:
        basis = [b.map_to(ring) for b in basis]
    return tuple(basis)


def _buchberger(polys, ring):
    """Reduced Groebner basis, Becker-Weispfenning style update loop."""
    f = _interreduce(polys, ring)
    if not f:
        return []
    key = ring.order.key

    G: set = set()      # indices of the current basis
    CP: set = set()     # critical pairs (i, j)

    def update(G, CP, h_idx):
        # discard pairs by the coprime and chain criteria
        mh = f[h_idx].LM
        C, D = set(G), set()
        while C:
            g_idx = C.pop()
            mg = f[g_idx].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(k):
                return monomial_div(lcm_hg, monomial_lcm(mh, f[k].LM))

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(k) for k in C)
                and not any(lcm_divides(k) for _, k in D)
            ):
                D.add((h_idx, g_idx))
        E = {(i, j) for i, j in D
             if monomial_mul(mh, f[j].LM) != monomial_lcm(mh, f[j].LM)}
        CP_new = set()
        while CP:
            i, j = CP.pop()
            lcm_ij = monomial_lcm(f[i].LM, f[j].LM)
            if (not monomial_div(lcm_ij, mh)
                    or monomial_lcm(f[i].LM, mh) == lcm_ij
                    or monomial_lcm(f[j].LM, mh) == lcm_ij):
                CP_new.add((i, j))
        CP_new |= E
        G_new = {g for g in G if not monomial_div(f[g].LM, mh)}
        G_new.add(h_idx)
        return G_new, CP_new

    for i in sorted(range(len(f)), key=lambda k: key(f[k].LM)):
        G, CP = update(G, CP, i)

    while CP:
        pair = min(CP, key=lambda ij: (key(monomial_lcm(f[ij[0]].LM, f[ij[1]].LM)),
                                       ij[0], ij[1]))
        CP.remove(pair)
        s = _spoly(f[pair[0]], f[pair[1]])
        reducers = sorted(G, key=lambda g: key(f[g].LM))
        _, r = divide_with_remainder(s, [f[g] for g in reducers]) if reducers else ([], s)
        if r:
            f.append(r.monic())
            G, CP = update(G, CP, len(f) - 1)

    # minimalize, then tail-reduce: the reduced basis is unique
    minimal = [f[g] for g in G]
    minimal = [p for p in minimal
               if not any(q is not p and monomial_divides(q.LM, p.LM) for q in minimal)]
    reduced = []
    for i, p in enumerate(minimal):
        others = [q for q in minimal if q is not p]
        if others:
            _, r = divide_with_remainder(p, others)
        else:
            r = p
        if r:
            reduced.append(r.monic())
    reduced.sort(key=lambda p: key(p.LM), reverse=True)
    return reduced


def buchberger(gens, order: MonomialOrder | None = None) -> Ideal:
    """Build an Ideal carrying its reduced Groebner basis."""
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least a ring; pass Ideal(ring, [])")
    ring = gens[0].ring
    ideal = Ideal(ring, gens)
    ideal.groebner_basis(order)
    return ideal


def normal_form(p: Polynomial, ideal: Ideal) -> Polynomial:
    """Canonical representative of p modulo the ideal."""
    if p.ring != ideal.ring:
        raise RingMismatch("polynomial and ideal live in different rings")
    basis = ideal.groebner_basis()
    if not basis:
        return p
    _, r = divide_with_remainder(p, list(basis))
    return r


def ideal_member(p: Polynomial, ideal: Ideal) -> bool:
    return normal_form(p, ideal).is_zero()


def ideals_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise RingMismatch("ideals live in different rings")
    return a.groebner_basis() == b.groebner_basis()


# -- module engine (position over term, slot 0 dominant) ------------------

def _vec_lead(v):
    for pos, comp in enumerate(v):
        if comp:
            return pos, comp.LM, comp.LC
    return None


def _vec_sub(v, w):
    return tuple(a - b for a, b in zip(v, w))


def _vec_mul_term(v, monomial, coeff):
    return tuple(c.mul_term(monomial, coeff) for c in v)


def _vec_is_zero(v):
    return all(not c for c in v)


def _vec_monic(v):
    lead = _vec_lead(v)
    if lead is None or lead[2].is_one():
        return v
    inv = lead[2].inverse()
    return tuple(c * inv for c in v)


def _vec_reduce(v, basis):
    """Full normal form of a module vector against ``basis``."""
    if not basis:
        return v
    ring = v[0].ring
    result = [ring.zero] * len(v)
    work = v
    while True:
        lead = _vec_lead(work)
        if lead is None:
            return tuple(result)
        pos, m, c = lead
        hit = None
        for w in basis:
            wl = _vec_lead(w)
            if wl is not None and wl[0] == pos:
                q = monomial_div(m, wl[1])
                if q is not None:
                    hit = (w, q, c / wl[2])
                    break
        if hit is None:
            # move the irreducible lead term over and continue on the tail
            result[pos] = result[pos] + ring.term(m, c)
            stripped = list(work)
            stripped[pos] = work[pos] - ring.term(m, c)
            work = tuple(stripped)
        else:
            w, q, coeff = hit
            work = _vec_sub(work, _vec_mul_term(w, q, coeff))


def _module_groebner(vectors):
    """Plain Buchberger over a free module; pairs only share a position.

    The coprime-leading-term shortcut is not valid for modules, so no
    criteria are applied; inputs here are always small.
    """
    basis = [_vec_monic(v) for v in vectors if not _vec_is_zero(v)]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))
             if _vec_lead(basis[i])[0] == _vec_lead(basis[j])[0]]
    while pairs:
        i, j = pairs.pop(0)
        vi, vj = basis[i], basis[j]
        pi, mi, ci = _vec_lead(vi)
        _, mj, cj = _vec_lead(vj)
        lcm = monomial_lcm(mi, mj)
        s = _vec_sub(_vec_mul_term(vi, monomial_div(lcm, mi), ci.inverse()),
                     _vec_mul_term(vj, monomial_div(lcm, mj), cj.inverse()))
        r = _vec_reduce(s, basis)
        if not _vec_is_zero(r):
            r = _vec_monic(r)
            basis.append(r)
            k = len(basis) - 1
            rp = _vec_lead(r)[0]
            pairs.extend((i2, k) for i2 in range(k)
                         if _vec_lead(basis[i2])[0] == rp)
    return basis


def _tagged_module(gens, ambient: Ideal):
    """Vectors (g_j, e_j) plus (d_k, 0) over slots [value, tag_0..tag_t]."""
    ring = gens[0].ring if gens else ambient.ring
    width = 1 + len(gens)
    zero = ring.zero
    vectors = []
    for j, g in enumerate(gens):
        v = [zero] * width
        v[0] = g
        v[1 + j] = ring.one
        vectors.append(tuple(v))
    for d in ambient.generators:
        v = [zero] * width
        v[0] = d
        vectors.append(tuple(v))
    return vectors


class SyzygyModule:
    """Generators of all relations among a list of ring elements, taken
    modulo an ambient defining ideal."""

    def __init__(self, size: int, vectors):
        self.size = size
        self.vectors = tuple(tuple(v) for v in vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __repr__(self):
        return f"SyzygyModule(size={self.size}, {len(self.vectors)} generators)"


def syzygies(gens, ambient: Ideal) -> SyzygyModule:
    """All vectors (a_0..a_t) with sum(a_j g_j) in the ambient ideal."""
    gens = list(gens)
    for g in gens:
        if g.ring != ambient.ring:
            raise RingMismatch("generators and ambient ideal disagree on ring")
    basis = _module_groebner(_tagged_module(gens, ambient))
    out = [v[1:] for v in basis if not v[0]]
    out.sort(key=_syzygy_sort_key, reverse=True)
    return SyzygyModule(len(gens), out)


def _syzygy_sort_key(v):
    lead = _vec_lead(v)
    ring = v[0].ring
    return (-lead[0], ring.order.key(lead[1]))


def lift(p: Polynomial, gens, ambient: Ideal):
    """Coefficients c_j with p - sum(c_j g_j) in the ambient ideal."""
    gens = list(gens)
    if p.ring != ambient.ring:
        raise RingMismatch("element and ambient ideal disagree on ring")
    basis = _module_groebner(_tagged_module(gens, ambient))
    ring = p.ring
    probe = tuple([p] + [ring.zero] * len(gens))
    nf = _vec_reduce(probe, basis)
    if nf[0]:
        raise NotAMember(f"{p} is not in the ideal generated by the lift targets")
    return [-c for c in nf[1:]]


# -- elimination and dimension --------------------------------------------

def eliminate(ideal: Ideal, drop) -> Ideal:
    """Generators of the intersection with the subring that omits ``drop``."""
    ring = ideal.ring
    drop = set(drop)
    for name in drop:
        ring.index(name)  # raises UnknownVariable
    if not drop:
        return ideal
    drop_ix = {ring.index(name) for name in drop}
    order = elimination_order(ring.nvars, drop_ix)
    basis = ideal.groebner_basis(order)
    kept = [g for g in basis if not (g.variables_used() & drop_ix)]
    out = Ideal(ring, kept)
    out.groebner_basis()
    return out


def dimension(ideal: Ideal) -> int:
    """Krull dimension of ring/ideal via independent variable subsets.

    Returns -1 for the unit ideal so callers can branch on an empty
    variety without catching an exception.
    """
    sets = independent_sets(ideal)
    if sets is None:
        return -1
    return max(len(s) for s in sets)


def independent_sets(ideal: Ideal):
    """All maximal-size variable subsets independent modulo LT(ideal);
    None for the unit ideal."""
    ring = ideal.ring
    basis = ideal.groebner_basis()
    if any(g.is_constant() for g in basis):
        return None
    # independence is read off the leading-term ideal only
    supports = [frozenset(i for i, e in enumerate(g.LM) if e) for g in basis]
    n = ring.nvars
    from itertools import combinations

    for size in range(n, -1, -1):
        found = [set(combo) for combo in combinations(range(n), size)
                 if not any(s <= set(combo) for s in supports)]
        if found:
            return found
    return [set()]
