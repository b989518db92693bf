"""``germring`` command line."""

import argparse
import json
import signal
import sys
import time
from importlib import resources

from . import presentations as pres
from .cancel import CancelToken
from .errors import GermRingError, GoldenMismatch, UsageError
from .exactalg.lattice import same_lattice
from .exactalg.numbers import parse_scalar
from .germ import (
    AbstractGerm,
    GermFamily,
    family_from_exprs,
    family_from_json,
    format_point,
    order_vector,
    parse_point,
    parse_poly,
    parse_ratfunc,
)
from .grobner import IdealBasis, format_mpoly, ideal_equal, parse_mpoly
from .oracles import census_bruteforce
from .semigroup import SemigroupSpec, Variant, classify, hilbert_basis, laurent_generators, support_census
from .sweeps import run_sweep
from .toricstructure import check_thm22, check_thm23, monomial_map, thm24_presentation, toric_ideal

GOLDEN_VERSION = "v1"
EXAMPLES = {"3.6.1": "ex361", "3.6.2": "ex362"}


# -- input helpers -------------------------------------------------------------


def _parse_ell(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"--ell expects comma-separated integers, got {text!r}") from None


def _load_family(args, allow_ell=True):
    sources = sum(bool(x) for x in (args.expr, args.family, allow_ell and getattr(args, "ell", None)))
    if sources != 1:
        raise UsageError("give exactly one of -e/--expr, -f/--family" + (", --ell" if allow_ell else ""))
    if args.expr:
        return family_from_exprs(args.expr, args.at or "0")
    if args.family:
        try:
            with open(args.family) as fh:
                obj = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read family file: {exc}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"family file is not valid JSON: {exc}") from None
        if args.at:
            obj = dict(obj, basePoint=args.at)
        return family_from_json(obj)
    ell = _parse_ell(args.ell)
    members = tuple(AbstractGerm(k, f"f{j + 1}") for j, k in enumerate(ell))
    return GermFamily(members, parse_point(args.at or "0"))


def _ell_from(args):
    if getattr(args, "ell", None) and not (args.expr or args.family):
        return _parse_ell(args.ell)
    return order_vector(_load_family(args))


def _load_relations(path):
    if path is None:
        return None
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read relations file: {exc}") from None
    stripped = text.strip()
    if stripped.startswith("["):
        return [str(x) for x in json.loads(stripped)]
    return [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]


def _parse_matrix(text, parse):
    rows = [row for row in text.split(";") if row.strip()]
    return [[parse(x.strip()) for x in row.split(",")] for row in rows]


def _monomial(v, names):
    parts = []
    for name, e in zip(names, v):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def _ideal_json(ideal):
    gens = ideal.gb if ideal.gb is not None else ideal.gens
    return {
        "variables": list(ideal.ring.variables),
        "generators": [str(g) for g in gens],
        "terms": [g.to_json(ideal.order) for g in gens],
    }


# -- subcommands ---------------------------------------------------------------


def cmd_ord(args, token):
    fam = _load_family(args)
    ell = order_vector(fam)
    payload = {"basePoint": format_point(fam.base_point), "ell": list(ell), "family": fam.to_json()}
    return payload, ",".join(map(str, ell))


def cmd_classify(args, token):
    ell = _ell_from(args)
    rep = classify(ell)
    payload = {"ell": list(ell), "case": rep.case.value, "p": rep.p, "q": rep.q, "permutation": [i + 1 for i in rep.permutation]}
    return payload, f"case {rep.case.value} (p={rep.p}, q={rep.q})"


def cmd_semigroup(args, token):
    ell = _ell_from(args)
    variant = Variant(args.variant)
    r = len(ell)
    names = [f"x{j + 1}" for j in range(r)]
    if variant is Variant.Z:
        units, gen = laurent_generators(ell)
        payload = {"ell": list(ell), "variant": "Z", "units": units, "monoidGenerator": None if gen is None else list(gen)}
        text = "units: " + ", ".join(f"({_monomial(u, names)})^(+-1)" for u in units)
        if gen is not None:
            text += f"\nmonoid: {gen}"
        return payload, text
    if variant is Variant.TILDE:
        names += [f"y{j + 1}" for j in range(r)]
    hb = hilbert_basis(SemigroupSpec(ell, variant), token, cap=args.gen_cap)
    payload = {"ell": list(ell), "variant": variant.value, "generators": [list(v) for v in hb]}
    return payload, "\n".join(_monomial(v, names) for v in hb)


def cmd_census(args, token):
    ell = _ell_from(args)
    c = support_census(ell)
    payload = {"ell": list(ell), "L": {str(t): v for t, v in c.L.items()}, "N": {str(t): v for t, v in c.N.items()}}
    if args.brute:
        payload["bruteForceL"] = {str(t): v for t, v in census_bruteforce(ell).items()}
    text = "\n".join(f"t={t}: L={c.L[t]} N={c.N[t]}" for t in c.L)
    return payload, text


def cmd_toric(args, token):
    ell = _ell_from(args)
    mmap = monomial_map(ell, Variant(args.variant), token=token)
    ideal = toric_ideal(mmap, token)
    gens = {n: _monomial(v, mmap.target_vars) for n, v in zip(mmap.source_vars, mmap.target_exponents)}
    payload = {"ell": list(ell), "variant": args.variant, "map": gens, "ideal": _ideal_json(ideal)}
    text = "\n".join(f"{n} -> {m}" for n, m in gens.items()) + f"\nI = {ideal}"
    return payload, text


def _report(rep, ell):
    payload = dict(rep.to_json(), ell=list(ell))
    text = "\n".join(f"({k}) {'holds' if v else 'fails'}" for k, v in rep.conditions.items())
    return payload, text + f"\nagreement: {'yes' if rep.agree else 'NO'}"


def cmd_thm22(args, token):
    ell = _ell_from(args)
    return _report(check_thm22(ell, token), ell)


def cmd_thm23(args, token):
    ell = _ell_from(args)
    census = census_bruteforce if args.brute else support_census
    return _report(check_thm23(ell, census, token), ell)


def cmd_thm24(args, token):
    res = thm24_presentation(args.p_idx, args.q_idx, args.r_idx)
    names = [f"x{j + 1}" for j in range(args.r_idx)]
    payload = {
        "p": args.p_idx,
        "q": args.q_idx,
        "r": args.r_idx,
        "generators": [list(v) for v in res.generators],
        "laurent": res.laurent,
        "relations": _ideal_json(res.relations),
    }
    text = "generators: " + ", ".join(_monomial(v, names) for v in res.generators)
    return payload, text + f"\nrelations: {res.relations}"


def cmd_relations(args, token):
    fam = _load_family(args, allow_ell=False)
    lat = pres.relation_lattice(fam)
    lines = [f"{list(a)}  constant {c.to_json()['lc']}*exp({c.to_json()['kappa']})" for a, c in zip(lat.basis, lat.constants)]
    return lat.to_json(), "\n".join(lines) or "(trivial lattice)"


def cmd_present(args, token):
    fam = _load_family(args)
    ideal = _load_relations(args.relations_file)
    kw = {"ideal": ideal, "assert_exact": args.assert_exact, "token": token}
    if args.sbar:
        p = pres.present_Sbar(fam, **kw)
    elif args.shol:
        p = pres.present_Shol(fam, **kw)
    elif args.sbarhol:
        p = pres.present_Sbarhol(fam, gen_cap=args.gen_cap, **kw)
    else:
        p = pres.present_S(fam, **kw)
    payload = p.to_json()
    payload["ideal"] = _ideal_json(p.relations)
    return payload, f"variables: {','.join(p.ring.variables)}\nrelations: {p}\nexactness: {p.exactness.value}"


def cmd_indep(args, token):
    if args.wronskian:
        fam = _load_family(args, allow_ell=False)
        nonzero, det = pres.wronskian_over_C(fam)
        return {"nonzero": nonzero, "det": str(det)}, f"det = {det}"
    if not args.poly:
        raise UsageError("indep needs --poly exponents (or --wronskian with a family)")
    polys = [parse_poly(p) for p in args.poly]
    if args.g:
        cert = pres.transformed_independence(_parse_matrix(args.g, parse_ratfunc), polys)
    elif args.phi:
        A = _parse_matrix(args.matrix, parse_scalar) if args.matrix else [
            [int(i == j) for j in range(len(polys) + 1)] for i in range(len(polys) + 1)
        ]
        cert = pres.augmented_independence(parse_ratfunc(args.phi), polys, A)
    elif args.kind == "linear":
        cert = pres.linear_independence(polys)
    elif args.kind == "algebraic":
        cert = pres.algebraic_independence(polys)
    else:
        cert = pres.independence(polys)
    text = cert.verdict.value + (f"  witness {cert.witness}" if cert.witness else "")
    return cert.to_json(), text


# -- goldens -------------------------------------------------------------------


def load_golden(name):
    path = resources.files("germring") / "goldens" / GOLDEN_VERSION / f"{name}.json"
    return json.loads(path.read_text())


def _ideal_from_golden(stage):
    from .grobner import Ring

    ring = Ring(stage["variables"])
    return IdealBasis(ring, tuple(parse_mpoly(g, ring) for g in stage["generators"]))


def _compare(kind, expected, got, token):
    if kind == "ideal":
        if expected["variables"] != got["variables"]:
            return False
        return ideal_equal(_ideal_from_golden(expected), _ideal_from_golden(got), token)
    if kind == "set":
        return sorted(map(tuple, expected)) == sorted(map(tuple, got))
    if kind == "lattice":
        return same_lattice(expected, got) if expected or got else True
    return expected == got


def run_example(name, token=None):
    """Recompute every stage of a worked example and compare with its golden."""
    if name not in EXAMPLES:
        raise UsageError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    golden = load_golden(EXAMPLES[name])
    fam = family_from_json(golden["family"])
    ideal = golden.get("userIdeal")
    got = {}
    ell = order_vector(fam)
    got["ell"] = list(ell)
    if ideal is None:
        lat = pres.relation_lattice(fam)
        got["relationLattice"] = [list(a) for a in lat.basis]
        got["relationConstants"] = [c.to_json() for c in lat.constants]
    S = pres.present_S(fam, ideal=ideal, assert_exact=golden.get("assertExact", False), token=token)
    got["p"] = _ideal_json(S.relations)
    got["pbar"] = _ideal_json(pres.present_Sbar(fam, ideal=ideal, token=token).relations)
    hb = hilbert_basis(SemigroupSpec(ell), token)
    got["holomorphicGenerators"] = [list(v) for v in hb]
    mmap = monomial_map(ell, basis=hb)
    got["toricIdeal"] = _ideal_json(toric_ideal(mmap, token))
    got["Shol"] = _ideal_json(pres.present_Shol(fam, ideal=ideal, token=token).relations)
    stages = []
    for stage in golden["stages"]:
        key, kind = stage["name"], stage.get("kind", "exact")
        ok = key in got and _compare(kind, stage["expected"], got[key], token)
        stages.append({"stage": key, "matched": bool(ok), "got": got.get(key)})
    failed = [s["stage"] for s in stages if not s["matched"]]
    if failed:
        raise GoldenMismatch(f"example {name}: stages {', '.join(failed)} differ from the golden", stages)
    return {"example": name, "stages": stages}


def cmd_example(args, token):
    payload = run_example(args.name, token)
    return payload, "\n".join(f"{s['stage']}: matched" for s in payload["stages"])


def cmd_sweep(args, token):
    deadline = time.monotonic() + args.budget if args.budget else None
    kw = {"token": token, "deadline": deadline}
    if args.seed is not None:
        kw["seed"] = args.seed
    if args.count is not None:
        kw["count"] = args.count
    payload = run_sweep(args.kind, **kw)
    return payload, json.dumps(payload)


# -- parser --------------------------------------------------------------------


def _family_opts(p, ell=True):
    p.add_argument("-e", "--expr", action="append", help="inline germ (repeatable)")
    p.add_argument("-f", "--family", help="family JSON file")
    if ell:
        p.add_argument("--ell", help="order vector a,b,c (abstract family)")
    p.add_argument("--at", help="base point z0 (default 0)")


def build_parser():
    parser = argparse.ArgumentParser(prog="germring", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit the JSON result envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, ell=True, family=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        if family:
            _family_opts(p, ell)
        p.set_defaults(func=func)
        return p

    add("ord", cmd_ord, "order vector at the base point", ell=False)
    add("classify", cmd_classify, "sign-pattern case of the order vector")
    p = add("semigroup", cmd_semigroup, "Hilbert basis / Laurent generators")
    p.add_argument("--variant", choices=[v.value for v in Variant], default="N")
    p.add_argument("--gen-cap", type=int, default=pres.DEFAULT_GEN_CAP)
    p = add("census", cmd_census, "support counts L_t and thresholds N_t")
    p.add_argument("--brute", action="store_true", help="also run the brute-force census")
    p = add("toric", cmd_toric, "monomial map and toric ideal")
    p.add_argument("--variant", choices=["N", "Tilde"], default="N")
    add("check-thm22", cmd_thm22, "five equivalent conditions (mixed signs)")
    p = add("check-thm23", cmd_thm23, "polynomial-ring criterion")
    p.add_argument("--brute", action="store_true", help="use the brute-force census")
    p = add("thm24", cmd_thm24, "closed-form generators and relations", family=False)
    p.add_argument("p_idx", type=int, metavar="p")
    p.add_argument("q_idx", type=int, metavar="q")
    p.add_argument("r_idx", type=int, metavar="r")
    add("relations", cmd_relations, "multiplicative relation lattice", ell=False)
    p = add("present", cmd_present, "ring presentations")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--s", action="store_true", help="S (default)")
    which.add_argument("--sbar", action="store_true")
    which.add_argument("--shol", action="store_true")
    which.add_argument("--sbarhol", action="store_true")
    p.add_argument("--p", "--relations-file", dest="relations_file", help="user-supplied defining ideal")
    p.add_argument("--assert-exact", action="store_true")
    p.add_argument("--gen-cap", type=int, default=pres.DEFAULT_GEN_CAP)
    p = add("indep", cmd_indep, "independence certificates", ell=False)
    p.add_argument("--poly", action="append", help="exponent polynomial P_j (repeatable)")
    p.add_argument("--kind", choices=["auto", "linear", "algebraic"], default="auto")
    p.add_argument("--g", help="rational-function matrix, rows separated by ';'")
    p.add_argument("--phi", help="extra nonconstant rational function")
    p.add_argument("--matrix", help="scalar mixing matrix for --phi")
    p.add_argument("--wronskian", action="store_true")
    p = add("example", cmd_example, "replay a worked example against its golden", family=False)
    p.add_argument("name")
    p = add("sweep", cmd_sweep, "randomized property suites", family=False)
    p.add_argument("kind", choices=["thm22", "thm23", "hilbert-oracle", "toric-oracle"])
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--budget", type=float, help="seconds before the toric oracle stops")
    return parser


def run(argv=None, token=None):
    """Execute one command; returns ``(exit_status, envelope, text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        if code == 0:
            return 0, {"status": "ok", "payload": None}, ""
        return code, {"status": "error", "code": "UsageError", "message": "invalid arguments"}, ""
    token = token or CancelToken()
    try:
        payload, text = args.func(args, token)
    except GermRingError as exc:
        env = {"status": "error", "code": exc.code, "message": str(exc)}
        extra = getattr(exc, "counterexample", None) or getattr(exc, "stages", None)
        if extra is not None:
            env["detail"] = extra
        return exc.exit_status, env, f"error[{exc.code}]: {exc}"
    return 0, {"status": "ok", "payload": payload}, text


def main(argv=None):
    token = CancelToken()
    previous = signal.signal(signal.SIGINT, lambda *_: token.cancel())
    try:
        status, env, text = run(argv, token)
    finally:
        signal.signal(signal.SIGINT, previous)
    args_json = "--json" in (argv if argv is not None else sys.argv[1:])
    if args_json:
        print(json.dumps(env, sort_keys=True))
    elif text:
        print(text, file=sys.stderr if status else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
