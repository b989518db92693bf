"""Ideals with cached Groebner bases; elimination, saturation and equality."""

from dataclasses import dataclass, field

from .buchberger import buchberger, normal_form_poly
from .mpoly import MPoly, Ring
from .orders import DEGREVLEX, MonomialOrder, block_order


@dataclass(frozen=True)
class IdealBasis:
    ring: Ring
    gens: tuple
    gb: tuple = None
    order: MonomialOrder = field(default=DEGREVLEX)

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(g for g in self.gens if g))
        if self.gb is not None:
            object.__setattr__(self, "gb", tuple(self.gb))

    def is_zero(self):
        return not self.gens

    def with_gb(self, order=DEGREVLEX, token=None):
        if self.gb is not None and self.order == order:
            return self
        return IdealBasis(self.ring, self.gens, tuple(buchberger(list(self.gens), order, token)), order)

    def groebner_basis(self, order=DEGREVLEX, token=None):
        return list(self.with_gb(order, token).gb)

    def contains(self, f, token=None):
        gb = self.with_gb(token=token)
        return not normal_form_poly(f, gb.gb, gb.order)

    def is_proper(self, token=None):
        return not self.contains(self.ring.one(), token)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def groebner(ideal, order=DEGREVLEX, token=None):
    return ideal.with_gb(order, token)


def _restrict(p, small):
    """Drop the (all-zero) exponents of variables missing from ``small``."""
    idx = [p.ring.index(v) for v in small.variables]
    return MPoly(small, {tuple(m[i] for i in idx): c for m, c in p.terms.items()})


def eliminate(ideal, drop, token=None):
    """Generators (a reduced Groebner basis) of ``ideal`` intersected with the ring without ``drop``."""
    drop = set(drop)
    ring = ideal.ring
    unknown = drop - set(ring.variables)
    if unknown:
        raise ValueError(f"cannot eliminate unknown variables {sorted(unknown)}")
    first = [v for v in ring.variables if v in drop]
    keep = [v for v in ring.variables if v not in drop]
    big = Ring(first + keep)
    small = Ring(keep)
    gens = [g.rename(big) for g in ideal.gens]
    gb = buchberger(gens, block_order(len(first)), token)
    kept = [g for g in gb if not (g.variables_used() & drop)]
    out = [_restrict(g, small) for g in kept]
    # kept elements form a Groebner basis of the contraction for degrevlex on ``keep``
    return IdealBasis(small, tuple(out), tuple(out), DEGREVLEX)


def saturate(ideal, m, token=None):
    """``(I : m^inf)`` via ``I + (1 - w*m)`` and elimination of ``w``."""
    if len(m.terms) != 1:
        raise ValueError("saturation is taken with respect to a monomial")
    ring = ideal.ring
    w = "_w"
    while w in ring.variables:
        w += "_"
    big = Ring((w,) + ring.variables)
    gens = [g.rename(big) for g in ideal.gens]
    gens.append(big.one() - big.gen(w) * m.rename(big))
    res = eliminate(IdealBasis(big, tuple(gens)), {w}, token)
    out = tuple(g.rename(ring) for g in res.gens)
    return IdealBasis(ring, out, out, DEGREVLEX)


def ideal_equal(I, J, token=None):
    if I.ring != J.ring:
        raise ValueError("ideal_equal needs ideals of the same ring")
    gi = I.with_gb(token=token)
    gj = J.with_gb(token=token)
    return all(not normal_form_poly(f, gj.gb) for f in I.gens) and all(
        not normal_form_poly(f, gi.gb) for f in J.gens
    )
