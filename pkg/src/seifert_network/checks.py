"""Cross-consistency suite behind ``seifert-network verify``.

Every check is a function ``check(ranges) -> CheckResult``.  Checks are
registered by name and always run and report in name order, so the output
does not depend on scheduling.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .families import (
    EM3Knot,
    GAMMA,
    PreconditionError,
    SurgeryVertex,
    TorusKnot,
    Unknot,
    em1_links,
    em1_vertex,
    em2_links,
    em2_vertex,
    em3_conditions,
    em3_surgery_description,
    em3_vertex,
    gamma_em1,
    gamma_em2,
    torus_reducible_surgery,
)
from .network import em1_path, em2_path, em3_hopf_pair, em3_path
from .rational import INF, ExtendedRational, cf_eval, cf_expand
from .seifert import (
    BaseSurface,
    SeifertInvariants,
    SfsKind,
    is_homeomorphic,
    lens_equivalent,
    montesinos_to_sfs,
    normalize,
    recognize,
)
from .twist import HopfPairState, TwistStep, annular_twist, apply_steps, decompose, hopf_twist_a, hopf_twist_b

__all__ = [
    "DEFAULT_RANGES",
    "CheckResult",
    "CHECKS",
    "run_checks",
    "displayed_space",
    "random_unimodular_state",
    "em3_search",
    "summands_match",
    "h1_order",
]

DEFAULT_RANGES = {"l": (-10, 10), "m": (-10, 10), "n": (-10, 10), "p": (-10, 10)}


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, identity: str, **params):
        where = ", ".join(f"{k}={v}" for k, v in params.items())
        self.failures.append(f"{identity} at {where}")


def _span(ranges, key) -> range:
    lo, hi = ranges[key]
    return range(lo, hi + 1)


def _r(num: int, den: int) -> ExtendedRational | None:
    if num == 0 and den == 0:
        return None
    return ExtendedRational(num, den)


# ---------------------------------------------------------------------------
# displayed Seifert invariants, written out independently of the tangle links


def displayed_space(family: str, params: tuple, minus_one: bool) -> SeifertInvariants | None:
    """Invariants as listed item by item for each family; None at 0/0."""
    S2, RP2 = BaseSurface.SPHERE, BaseSurface.PROJECTIVE_PLANE
    if family == "em1":
        l, n, p = params
        if p == 0 and not minus_one:
            base, cs = RP2, [_r(-6*l*n + 2*l + n - 1, 9*l*n - 3*l + 1), _r(-1, l)]
        elif p == 0:
            base, cs = S2, [_r(-1, 3), _r(6*l*n - 2*l - n + 1, 9*l*n - 3*l - 3*n + 2), _r(l, l + 1)]
        elif not minus_one:
            base, cs = RP2, [_r(-2*l + 1, 3*l - 1), _r(-3*p + 1, 3*l*p - l - p)]
        else:
            base, cs = S2, [_r(-1, 3), _r(2*l - 1, 3*l - 2), _r(3*l*p - l - p, 3*l*p - l + 2*p - 1)]
    elif family == "em2":
        l, m, n, p = params
        if p == 0 and not minus_one:
            cs = [_r(-1, l - 1), _r(-4*m*n + 2*m - 1, 2*m*n - m - n + 1), _r(m, l*m + m - 1)]
        elif p == 0:
            cs = [_r(-1, l + 1), _r(4*m*n - 2*m + 1, 2*m*n - m + n), _r(m, l*m - m - 1)]
        elif not minus_one:
            cs = [_r(-1, l - 1), _r(2*m*p - m - p, 2*l*m*p - l*m - l*p + 2*m*p - m - 3*p + 1),
                  _r(-2*m + 1, m - 1)]
        else:
            cs = [_r(-1, l + 1), _r(2*m*p - m - p, 2*l*m*p - 2*m*p - l*m - l*p + m - p + 1),
                  _r(2*m - 1, m)]
        base = S2
    else:
        raise ValueError(f"no displayed spaces for {family!r}")
    if any(c is None for c in cs):
        return None
    return SeifertInvariants(base, cs)


def h1_order(si: SeifertInvariants) -> int:
    """Order of H_1 of a non-degenerate space (0 if infinite).

    Over S^2 it is ``|e| * prod(alpha_i)`` with ``e`` the sum of the
    coefficients.  Over RP^2 (orientable total space) the relations
    ``2h = 0``, ``alpha_i c_i + beta_i h = 0``, ``2v + sum c_i = 0`` give
    ``4 * prod(alpha_i)`` whatever the ``beta_i``.
    """
    prod = 1
    for c in si.coefficients:
        prod *= c.denominator
    if si.base is BaseSurface.PROJECTIVE_PLANE:
        return 4 * prod
    total = ExtendedRational(0)
    for c in si.coefficients:
        total = total + c
    return abs(total.numerator * prod // total.denominator)


def _space_or_none(build):
    try:
        return build()
    except PreconditionError:
        return None


# ---------------------------------------------------------------------------
# exact-rational


def check_cf_round_trip(ranges) -> CheckResult:
    res = CheckResult("exact-rational.cf-round-trip")
    for num in range(-40, 41):
        for den in range(1, 41):
            r = ExtendedRational(num, den)
            terms = cf_expand(r)
            res.cases += 1
            if cf_eval(terms) != r:
                res.fail("cf_eval(cf_expand(r)) = r", r=r)
            if len(terms) >= 2 and cf_eval(terms) != terms[-1] + cf_eval(terms[:-1]).reciprocal():
                res.fail("cf recurrence", terms=terms)
    return res


# ---------------------------------------------------------------------------
# seifert-spaces


def _family_links(ranges, em2_window: int | None = None):
    """Every (label, base, ratios) for the em1 and em2 tangle fillings in range.

    ``em2_window`` clips the em2 parameters to ``[-w, w]``.
    """
    for l, n in product(_span(ranges, "l"), _span(ranges, "n")):
        for branch, (nn, pp) in (("n", (n, 0)), ("p", (0, n))):
            links = _space_or_none(lambda: em1_links(l, nn, pp, branch))
            if links is None:
                continue
            for k, (base, ratios) in links.items():
                yield f"em1({l},{nn},{pp})+R({k})", base, ratios
    spans = [_span(ranges, k) for k in ("l", "m", "n")]
    if em2_window is not None:
        spans = [[v for v in s if abs(v) <= em2_window] for s in spans]
    for l, m, n in product(*spans):
        for branch, (nn, pp) in (("n", (n, 0)), ("p", (0, n))):
            links = _space_or_none(lambda: em2_links(l, m, nn, pp, branch))
            if links is None:
                continue
            for k, (base, ratios) in links.items():
                yield f"em2({l},{m},{nn},{pp})+R({k})", base, ratios


def check_montesinos(ranges) -> CheckResult:
    res = CheckResult("seifert-spaces.montesinos-coefficients")
    for label, base, ratios in _family_links(ranges):
        si = montesinos_to_sfs(base, ratios)
        res.cases += 1
        if len(si.coefficients) != len(ratios):
            res.fail("one coefficient per tangle", link=label)
        for r, q in zip(ratios, si.coefficients):
            expected = INF if r == 0 else ExtendedRational(-r.denominator, r.numerator)
            if q != expected:
                res.fail("coefficient = -1/r", link=label, r=r)
    return res


def check_normal_forms(ranges) -> CheckResult:
    res = CheckResult("seifert-spaces.normal-form-moves")
    for label, base, ratios in _family_links(ranges, em2_window=5):
        si = montesinos_to_sfs(base, ratios)
        if si.degenerate:
            continue
        res.cases += 1
        canon = normalize(si)
        if normalize(canon) != canon:
            res.fail("normalize idempotent", link=label)
        if recognize(canon) != recognize(si):
            res.fail("recognize(normalize(x)) = recognize(x)", link=label)
        cs = list(si.coefficients)
        rotated = SeifertInvariants(base, cs[1:] + cs[:1])
        shifted = SeifertInvariants(base, [cs[0] + 1, cs[1] - 1] + cs[2:]) if len(cs) >= 2 else si
        if not is_homeomorphic(si, rotated) or not is_homeomorphic(rotated, si):
            res.fail("invariance under permutation", link=label)
        if not is_homeomorphic(si, shifted):
            res.fail("invariance under +1/-1 shift", link=label)
    return res


def check_cross_family(ranges) -> CheckResult:
    res = CheckResult("seifert-spaces.em1-branch-overlap")
    for l in _span(ranges, "l"):
        for k in (0, 1):
            a = _space_or_none(lambda: em1_links(l, 0, 0, "n")[k])
            b = _space_or_none(lambda: em1_links(l, 0, 0, "p")[k])
            if a is None or b is None:
                continue
            res.cases += 1
            if not montesinos_to_sfs(*a).same_multiset(montesinos_to_sfs(*b)):
                res.fail("n-branch space = p-branch space at n=p=0", l=l, filling=k)
    return res


# ---------------------------------------------------------------------------
# surgery-families


def check_displayed(ranges) -> CheckResult:
    res = CheckResult("surgery-families.displayed-spaces")
    for l, n in product(_span(ranges, "l"), _span(ranges, "n")):
        for params in ((l, n, 0), (l, 0, n)):
            for minus_one in (False, True):
                got = _space_or_none(lambda: em1_vertex(*params, minus_one=minus_one))
                want = displayed_space("em1", params, minus_one)
                if got is None or want is None:
                    continue
                res.cases += 1
                if not got.space.same_multiset(want):
                    res.fail("em1 space matches displayed item", params=params, minus_one=minus_one)
    for l, m, n in product(_span(ranges, "l"), _span(ranges, "m"), _span(ranges, "n")):
        for params in ((l, m, n, 0), (l, m, 0, n)):
            for minus_one in (False, True):
                got = _space_or_none(lambda: em2_vertex(*params, minus_one=minus_one))
                want = displayed_space("em2", params, minus_one)
                if got is None or want is None:
                    continue
                res.cases += 1
                if not got.space.same_multiset(want):
                    res.fail("em2 space matches displayed item", params=params, minus_one=minus_one)
    return res


def check_homology_order(ranges) -> CheckResult:
    """|H_1(K(m))| = |m| for every EM II item and the EM I n-branch items."""
    res = CheckResult("surgery-families.homology-order")

    def compare(result, **params):
        if result is None or result.space.degenerate:
            return
        res.cases += 1
        if h1_order(result.space) != abs(result.vertex.slope.numerator):
            res.fail("|H_1| = |slope|", **params)

    for l, n in product(_span(ranges, "l"), _span(ranges, "n")):
        for minus_one in (False, True):
            compare(_space_or_none(lambda: em1_vertex(l, n, 0, minus_one)), l=l, n=n, p=0, minus_one=minus_one)
    for l, m, n in product(_span(ranges, "l"), _span(ranges, "m"), _span(ranges, "n")):
        for params in ((l, m, n, 0), (l, m, 0, n)):
            for minus_one in (False, True):
                compare(_space_or_none(lambda: em2_vertex(*params, minus_one)), params=params,
                        minus_one=minus_one)
    return res


def check_overlap_slopes(ranges) -> CheckResult:
    res = CheckResult("surgery-families.overlap-slopes")
    for l in _span(ranges, "l"):
        res.cases += 1
        if gamma_em1(l, 0, 0, "n") != gamma_em1(l, 0, 0, "p"):
            res.fail("em1 gamma n-branch = p-branch", l=l)
        for m in _span(ranges, "m"):
            res.cases += 1
            if gamma_em2(l, m, 0, 0, "n") != gamma_em2(l, m, 0, 0, "p"):
                res.fail("em2 gamma n-branch = p-branch", l=l, m=m)
    return res


def check_stair_slopes(ranges) -> CheckResult:
    res = CheckResult("surgery-families.em2-stair-slope")
    for l, m in product(_span(ranges, "l"), _span(ranges, "m")):
        res.cases += 1
        if gamma_em2(l, m, 0, 1) != gamma_em2(l, m - 1, 1, 0):
            res.fail("gamma(l,m,0,1) = gamma(l,m-1,1,0)", l=l, m=m)
    return res


def check_stair_spaces(ranges) -> CheckResult:
    res = CheckResult("surgery-families.em2-stair-homeomorphic")
    lo_l, hi_l = ranges["l"]
    lo_m, hi_m = ranges["m"]
    # homeomorphism checks use the narrower [-5, 5] window
    for l in range(max(lo_l, -5), min(hi_l, 5) + 1):
        for m in range(max(lo_m, -5), min(hi_m, 5) + 1):
            for minus_one in (False, True):
                x = _space_or_none(lambda: em2_vertex(l, m, 0, 1, minus_one).space)
                y = _space_or_none(lambda: em2_vertex(l, m - 1, 1, 0, minus_one).space)
                if x is None or y is None or x.degenerate or y.degenerate:
                    continue
                res.cases += 1
                if not is_homeomorphic(x, y):
                    res.fail("K(l,m,0,1) and K(l,m-1,1,0) surgeries homeomorphic",
                             l=l, m=m, minus_one=minus_one)
    return res


def summands_match(found: tuple, expected: tuple) -> bool:
    """Match lens summands one to one, each up to orientation."""
    if len(found) != len(expected):
        return False
    remaining = list(expected)
    for pq in found:
        for i, other in enumerate(remaining):
            if lens_equivalent(pq, other):
                del remaining[i]
                break
        else:
            return False
    return True


def check_reducible(ranges) -> CheckResult:
    res = CheckResult("surgery-families.em2-reducible")
    for l in _span(ranges, "l"):
        if abs(l) < 2:
            continue
        res.cases += 1
        got = recognize(em2_vertex(l, 1, 0, 0).space)
        want = recognize(torus_reducible_surgery(l, 1 - l).space)
        if got.kind is not SfsKind.CONNECTED_SUM:
            res.fail("K(l,1,0,0)(gamma) is a connected sum", l=l)
        elif not summands_match(got.lens, want.lens):
            res.fail("summands match L(l,1-l) # L(1-l,l)", l=l)
        if gamma_em2(l, 1, 0, 0) != l * (1 - l):
            res.fail("gamma(l,1,0,0) = l(1-l)", l=l)
    return res


# ---------------------------------------------------------------------------
# twist-calculus


def random_unimodular_state(rng: random.Random, max_steps: int = 8, max_count: int = 6) -> HopfPairState:
    """Apply a random alternating twist sequence to (oo, oo)."""
    state = HopfPairState(1, 0, 1, 0)
    for i in range(rng.randint(1, max_steps)):
        count = rng.randint(-max_count, max_count)
        state = hopf_twist_a(state, count) if i % 2 == 0 else hopf_twist_b(state, count)
    return state


def _alternates(steps: list[TwistStep]) -> bool:
    if steps and steps[0].component != "A":
        return False
    for i, step in enumerate(steps):
        if step.component != ("A" if i % 2 == 0 else "B"):
            return False
        if step.count == 0 and i != len(steps) - 1:
            return False
    return True


def check_determinant(ranges) -> CheckResult:
    res = CheckResult("twist-calculus.determinant-invariance")
    rng = random.Random(20240611)
    state = HopfPairState(rng.randint(-9, 9), 1, rng.randint(-9, 9), 1)
    det = state.determinant
    for i in range(20_000):
        count = rng.randint(-5, 5)
        state = hopf_twist_a(state, count) if rng.random() < 0.5 else hopf_twist_b(state, count)
        res.cases += 1
        if state.determinant != det:
            res.fail("xs - yt preserved", step=i, count=count)
            break
        if abs(state.x) > 10**6 or abs(state.y) > 10**6:
            state = HopfPairState(rng.randint(-9, 9), 1, rng.randint(-9, 9), 1)
            det = state.determinant
    return res


def check_decompose(ranges) -> CheckResult:
    res = CheckResult("twist-calculus.decompose")
    rng = random.Random(7)
    trivial = HopfPairState(1, 0, 1, 0)
    for _ in range(1000):
        state = random_unimodular_state(rng)
        steps = decompose(state)
        res.cases += 1
        if not apply_steps(state, steps).is_trivial():
            res.fail("forward replay reaches (oo, oo)", state=state)
        if not _alternates(steps):
            res.fail("steps alternate from A, only the last may be 0", state=state)
    if decompose(trivial):
        res.fail("decompose((oo, oo)) is empty", state=trivial)
    return res


def check_annular(ranges) -> CheckResult:
    res = CheckResult("twist-calculus.annular")
    for l, p in product(_span(ranges, "l"), _span(ranges, "p")):
        if p == 0:
            continue
        res.cases += 1
        t, u = annular_twist(p, l), annular_twist(-p, l)
        if t.c1_slope + t.c2_slope != 2 * l:
            res.fail("slopes sum to 2l", p=p, l=l)
        if (u.c1_slope, u.c2_slope) != (t.c2_slope, t.c1_slope):
            res.fail("p -> -p swaps the slopes", p=p, l=l)
    return res


# ---------------------------------------------------------------------------
# network


def _terminal_ok(vertex, expected_knot, expected_slope) -> bool:
    return vertex.knot == expected_knot and vertex.slope == expected_slope


def check_em1_paths(ranges) -> CheckResult:
    res = CheckResult("network.em1-paths")
    for l, n in product(_span(ranges, "l"), _span(ranges, "n")):
        for params in {(l, n, 0), (l, 0, n)}:
            for minus_one in (False, True):
                shift = -1 if minus_one else 0
                path = em1_path(*params, minus_one=minus_one)
                res.cases += 1
                for v in path.vertices():
                    k = v.knot
                    if isinstance(k, Unknot):
                        want = shift
                    else:
                        want = gamma_em1(k.l, k.n, k.p) + shift
                    if v.slope != want:
                        res.fail("recorded slope = gamma formula", params=params, vertex=v.id())
                if not _terminal_ok(path.end, Unknot(), ExtendedRational(shift)):
                    res.fail("path ends at (O, 0) or (O, -1)", params=params, minus_one=minus_one)
                if len(path) > 2:
                    res.fail("at most 2 moves", params=params)
    return res


def check_em2_paths(ranges) -> CheckResult:
    res = CheckResult("network.em2-paths")
    for l, m, n in product(_span(ranges, "l"), _span(ranges, "m"), _span(ranges, "n")):
        if m < 1:
            continue
        for params in {(l, m, n, 0), (l, m, 0, n)}:
            for minus_one in (False, True):
                shift = -1 if minus_one else 0
                path = em2_path(*params, minus_one=minus_one)
                res.cases += 1
                for v in path.vertices():
                    k = v.knot
                    if isinstance(k, TorusKnot):
                        want = k.p * k.q + shift
                    else:
                        want = gamma_em2(k.l, k.m, k.n, k.p) + shift
                    if v.slope != want:
                        res.fail("recorded slope = gamma formula", params=params, vertex=v.id())
                if not _terminal_ok(path.end, TorusKnot(l, 1 - l), ExtendedRational(l * (1 - l) + shift)):
                    res.fail("path ends at (T(l,1-l), l(1-l))", params=params, minus_one=minus_one)
                want_len = (1 if params[2] or params[3] else 0) + 2 * (m - 1)
                if len(path) != want_len:
                    res.fail("path length", params=params, length=len(path))
    return res


def em3_search(limit: int | None = None, bound: int = 5):
    """Trivializable EM III triples found by scanning small fractions.

    Yields ``(a1, a2, a3)`` in a fixed order; ``limit`` caps the count.
    """
    fractions = sorted({ExtendedRational(a, b) for a in range(-bound, bound + 1)
                        for b in range(1, bound + 1) if a != 0}, key=ExtendedRational.sort_key)
    thirds = [ExtendedRational(1, k) for k in range(-bound, bound + 1) if k not in (0,)] + fractions
    seen = set()
    count = 0
    for a1, a2 in product(fractions, fractions):
        for a3 in thirds:
            key = (a1, a2, a3)
            if key in seen:
                continue
            seen.add(key)
            try:
                if not em3_conditions(a1, a2, a3):
                    continue
            except PreconditionError:
                continue
            yield key
            count += 1
            if limit is not None and count >= limit:
                return


def check_em3(ranges) -> CheckResult:
    res = CheckResult("network.em3-paths")
    for a1, a2, a3 in em3_search(limit=300):
        res.cases += 1
        params = f"({a1}, {a2}, {a3})"
        _, state, _ = em3_hopf_pair(a1, a2, a3)
        if abs(state.determinant) != 1:
            res.fail("Hopf pair determinant is +-1", triple=params)
            continue
        path = em3_path(a1, a2, a3)
        end = path.end
        if not (isinstance(end, SurgeryVertex) and end.knot == EM3Knot(a1, a2, a3) and end.slope == GAMMA):
            res.fail("path ends at (K(a1,a2,a3), gamma)", triple=params)
        if not isinstance(path.start.knot, (TorusKnot, Unknot)):
            res.fail("path starts at a torus knot or the unknot", triple=params)
        desc = em3_surgery_description(a1, a2, a3)
        if desc.coefficients[-1] != -1:
            res.fail("k-coefficient is -1", triple=params)
        space = em3_vertex(a1, a2, a3).space
        want = sorted([abs(a1.numerator - 2 * a1.denominator), abs(a2.numerator - 2 * a2.denominator),
                       abs(a3.numerator + a3.denominator)])
        if sorted(space.indices()) != want:
            res.fail("fiber indices |al1-2be1|, |al2-2be2|, |al3+be3|", triple=params)
    return res


CHECKS: dict[str, Callable[[dict], CheckResult]] = {
    "exact-rational.cf-round-trip": check_cf_round_trip,
    "network.em1-paths": check_em1_paths,
    "network.em2-paths": check_em2_paths,
    "network.em3-paths": check_em3,
    "seifert-spaces.em1-branch-overlap": check_cross_family,
    "seifert-spaces.montesinos-coefficients": check_montesinos,
    "seifert-spaces.normal-form-moves": check_normal_forms,
    "surgery-families.displayed-spaces": check_displayed,
    "surgery-families.em2-reducible": check_reducible,
    "surgery-families.em2-stair-homeomorphic": check_stair_spaces,
    "surgery-families.em2-stair-slope": check_stair_slopes,
    "surgery-families.homology-order": check_homology_order,
    "surgery-families.overlap-slopes": check_overlap_slopes,
    "twist-calculus.annular": check_annular,
    "twist-calculus.decompose": check_decompose,
    "twist-calculus.determinant-invariance": check_determinant,
}


def run_checks(names=None, ranges=None) -> list[CheckResult]:
    """Run the named checks (all by default) in name order."""
    ranges = dict(DEFAULT_RANGES, **(ranges or {}))
    selected = sorted(CHECKS) if names is None else sorted(names)
    results = []
    for name in selected:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}")
        start = time.perf_counter()
        result = CHECKS[name](ranges)
        result.seconds = time.perf_counter() - start
        results.append(result)
    return results
