"""Randomized and sampled property suites.

Each suite returns a JSON-ready report; a disagreement raises
PropertyViolation carrying the offending instance.
"""

import random
import time

from .cancel import check
from .errors import PropertyViolation, UsageError
from .grobner import DEGREVLEX, MonomialReducer
from .oracles import census_bruteforce, irreducibles, semigroup_elements
from .semigroup import Case, SemigroupSpec, classify, decompose, hilbert_basis
from .toricstructure import check_thm22, check_thm23, monomial_map, toric_ideal

SAMPLE_SEED = 20240601
SAMPLE_SIZE = 50


def random_ell(rng, r_range, lo, hi, accept=None):
    """Uniform entries in ``[lo, hi]``, rejection-sampled until ``accept(ell)``."""
    while True:
        r = rng.randint(*r_range)
        ell = tuple(rng.randint(lo, hi) for _ in range(r))
        if accept is None or accept(ell):
            return ell


def fixed_sample(seed=SAMPLE_SEED, count=SAMPLE_SIZE):
    """The pinned sample of order vectors (r <= 4, entries in [-5, 5])."""
    rng = random.Random(seed)
    return [random_ell(rng, (1, 4), -5, 5) for _ in range(count)]


def _need_count(count):
    if count < 1:
        raise UsageError("count must be at least 1")


def sweep_thm22(seed, count, token=None):
    _need_count(count)
    rng = random.Random(seed)
    for _ in range(count):
        ell = random_ell(rng, (2, 5), -4, 4, lambda e: classify(e).case is Case.III)
        rep = check_thm22(ell, token)
        if not rep.agree:
            raise PropertyViolation(
                f"conditions disagree for ell={list(ell)}",
                {"ell": list(ell), "conditions": rep.conditions},
            )
    return {"kind": "thm22", "seed": seed, "instances": count, "disagreements": 0}


def sweep_thm23(seed, count, oracle_subsample=30, token=None):
    _need_count(count)
    rng = random.Random(seed)
    for i in range(count):
        ell = random_ell(rng, (2, 5), -4, 4, lambda e: classify(e).case is not Case.II)
        rep = check_thm23(ell, token=token)
        bad = not rep.agree
        detail = {"ell": list(ell), "conditions": rep.conditions}
        if i < oracle_subsample:
            brute = check_thm23(ell, census_fn=census_bruteforce, token=token)
            if brute.conditions != rep.conditions or brute.data["L"] != rep.data["L"]:
                bad = True
                detail["bruteForceL"] = brute.data["L"]
                detail["closedFormL"] = rep.data["L"]
        if bad:
            raise PropertyViolation(f"criterion check failed for ell={list(ell)}", detail)
    return {
        "kind": "thm23",
        "seed": seed,
        "instances": count,
        "oracleChecked": min(count, oracle_subsample),
        "disagreements": 0,
    }


def hilbert_oracle(ells, max_degree=12, token=None):
    """Compare low-degree Hilbert basis elements with brute-force irreducibles
    and decompose every semigroup element up to ``max_degree``."""
    decomposed = 0
    for ell in ells:
        spec = SemigroupSpec(ell)
        hb = hilbert_basis(spec, token)
        low = {v for v in hb if sum(v) <= max_degree}
        brute = irreducibles(ell, max_degree)
        if low != brute:
            raise PropertyViolation(
                f"Hilbert basis mismatch for ell={list(ell)}",
                {
                    "ell": list(ell),
                    "missing": sorted(map(list, brute - low)),
                    "extra": sorted(map(list, low - brute)),
                },
            )
        for a in semigroup_elements(ell, max_degree):
            if decompose(spec, a, hb) is None:
                raise PropertyViolation(f"cannot decompose {list(a)} for ell={list(ell)}", {"ell": list(ell), "element": list(a)})
            decomposed += 1
    return {"kind": "hilbert-oracle", "instances": len(ells), "maxDegree": max_degree, "decomposed": decomposed, "mismatches": 0}


def _binomial_pairs(ell, mmap, ideal):
    pairs = []
    for g in ideal.gb:
        lead = max(g.terms, key=DEGREVLEX.key)
        trail = min(g.terms, key=DEGREVLEX.key)
        if mmap.image_exponent(lead) != mmap.image_exponent(trail):
            raise PropertyViolation(
                f"binomial {g} is not in the kernel for ell={list(ell)}", {"ell": list(ell), "binomial": str(g)}
            )
        pairs.append((lead, trail))
    return pairs


def groebner_defect(pairs, reducer):
    """First S-pair of the binomials ``pairs`` whose normal forms differ
    (Buchberger's criterion), or ``None`` when they form a Groebner basis.
    Pairs with coprime leading monomials are skipped."""
    nf = reducer.normal_form
    for i, (l1, t1) in enumerate(pairs):
        for l2, t2 in pairs[i + 1 :]:
            if not any(map(min, l1, l2)):
                continue
            lcm = tuple(map(max, l1, l2))
            left = tuple(c - a + b for c, a, b in zip(lcm, l1, t1))
            right = tuple(c - a + b for c, a, b in zip(lcm, l2, t2))
            if nf(left) != nf(right):
                return (l1, t1), (l2, t2)
    return None


def _decode(code, base, m):
    out = []
    for _ in range(m):
        code, d = divmod(code, base)
        out.append(d)
    return tuple(out)


def box_completeness(mmap, reducer, box=3, token=None, deadline=None):
    """Decide whether every kernel vector with entries in ``[-box, box]``
    reduces to zero, without enumerating the kernel.

    For box monomials ``a, b`` with ``A a = A b`` the vector
    ``(a - c) - (b - c)``, ``c = min(a, b)``, is a kernel vector in the box,
    and conversely ``u+`` and ``u-`` are box monomials. So the check holds
    iff the normal form of ``t^a`` depends only on ``A a`` over the box.
    The box is swept one coordinate at a time keeping one normal form per
    image, using ``NF(a + x e_k) = NF(NF(a) + x e_k)``.

    ``reducer`` must hold a Groebner basis (see ``groebner_defect``);
    normal forms are then canonical. Returns ``(None, images)`` on success, ``(u, images)`` for a
    counterexample ``u``, or ``(False, images)`` when ``deadline`` passes.
    """
    m, r = mmap.m, len(mmap.target_vars)
    if m == 0:
        return None, 1
    # images are nonnegative and coordinatewise below ``top``: pack them into one integer
    top = 1 + box * max(sum(v[i] for v in mmap.target_exponents) for i in range(r))
    step = [sum(v[i] * top**i for i in range(r)) for v in mmap.target_exponents]
    base = box + 1
    states = {0: ((0,) * m, 0)}  # image -> (normal form, box monomial code)
    for k in range(m):
        check(token)
        if deadline is not None and time.monotonic() > deadline:
            return False, len(states)
        grow, place = step[k], base**k
        new = dict(states)
        times = reducer.times_variable
        for y, (n, a) in states.items():
            for _ in range(box):
                y += grow
                a += place
                n = times(n, k)
                seen = new.setdefault(y, (n, a))
                if seen[0] != n:
                    return _witness(_decode(seen[1], base, m), _decode(a, base, m)), len(new)
        states = new
    return None, len(states)


def _witness(a, b):
    return tuple(x - y for x, y in zip(a, b))


def toric_oracle(ells, box=3, deadline=None, token=None):
    """Kernel soundness of every emitted binomial, then completeness: each
    kernel vector with entries in ``[-box, box]`` must reduce to zero.

    With ``deadline`` (a ``time.monotonic`` value) the run stops early and
    the report says how far it got.
    """
    finished = 0
    complete = True
    images = 0
    maps = [(monomial_map(ell, token=token), ell) for ell in ells]
    for mmap, ell in maps:
        ideal = toric_ideal(mmap, token)
        pairs = _binomial_pairs(ell, mmap, ideal)
        reducer = MonomialReducer(pairs)
        defect = groebner_defect(pairs, reducer)
        if defect is not None:
            raise PropertyViolation(
                f"emitted binomials are not a Groebner basis for ell={list(ell)}",
                {"ell": list(ell), "pair": [[list(a), list(b)] for a, b in defect]},
            )
        bad, count = box_completeness(mmap, reducer, box, token, deadline)
        images += count
        if bad is False:
            complete = False
            break
        if bad is not None:
            plus = tuple(max(x, 0) for x in bad)
            minus = tuple(max(-x, 0) for x in bad)
            raise PropertyViolation(
                f"kernel vector {list(bad)} does not reduce to zero for ell={list(ell)}",
                {
                    "ell": list(ell),
                    "vector": list(bad),
                    "inKernel": mmap.image_exponent(bad) == (0,) * len(ell),
                    "normalForms": [list(reducer.normal_form(plus)), list(reducer.normal_form(minus))],
                },
            )
        finished += 1
    return {
        "kind": "toric-oracle",
        "instances": len(ells),
        "instancesCompleted": finished,
        "imagesChecked": images,
        "complete": complete,
        "unfinished": [list(e) for _, e in maps[finished:]] if not complete else [],
        "counterexamples": 0,
    }


def run_sweep(kind, seed=SAMPLE_SEED, count=SAMPLE_SIZE, token=None, deadline=None):
    if kind == "thm22":
        return sweep_thm22(seed, count, token)
    if kind == "thm23":
        return sweep_thm23(seed, count, token=token)
    if kind in ("hilbert-oracle", "toric-oracle"):
        _need_count(count)
        ells = fixed_sample(seed, count)
        if kind == "hilbert-oracle":
            return hilbert_oracle(ells, token=token)
        return toric_oracle(ells, deadline=deadline, token=token)
    raise UsageError(f"unknown sweep kind {kind!r}")
