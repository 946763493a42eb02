"""Regression suites: named collections of checks run over corpus frames, spaces and fixtures."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from ._bits import bits, full, popcount, subsets
from .corpus import corpus_frames, topologies
from .filters import (
    GENERIC, PrimeComplement, Tri, all_filters, classify_filter, filt_frame,
    shape_of,
)
from .frames import (
    EMPTY, AllNonEmpty, CofiniteFrame, FiniteFamily, FiniteFrame, StrictlyAbove, cof,
)
from .order import chain
from .raney import (
    Check, Explicit, Extension, Named, RaneyExt, Refusal, adjunction_fixpoints, canonical_extension,
    class_view, classifier_map, extend_morphism, frame_maps, identity_map, is_algebraic, is_compact,
    is_d_morphism, is_exact_morphism, is_subfit, phi_isomorphism, property_suite, psi_homeomorphism,
    raney_interval, same_class, sobrification, spectrum, td_reflection, unique_extension, validate_raney,
)
from .spaces import COFINITE_NAT, COFINITE_NAT_PLUS_GENERIC, FiniteSpace, omega_r
from .sublocales import (
    SublocaleLattice, boolean_sl, brute_force_sublocales, closed_sl, coker, is_sublocale, ker,
    nucleus, open_sl, smallest_sublocale,
)

SCHEMA = "raney-report/1"
SUITES = ("background", "raney-core", "duality", "properties", "morphisms", "sublocales", "fixtures")
FAMILY_LIMIT = 10


@dataclass(frozen=True)
class Params:
    max_points: int = 5
    window: int = 16
    subloc_cap: int = 12


def ok(law: str, cond: bool, witness: str | None = None, detail: str | None = None) -> Check:
    return Check(law, "pass" if cond else "fail", None if cond else witness, detail)


def first_failure(law: str, items, pred, show=str) -> Check:
    for item in items:
        if not pred(item):
            return Check(law, "fail", show(item))
    return Check(law, "pass")


def _families(n: int):
    """Element families to quantify over: every subset on small frames, otherwise
    the empty family, singletons and pairs (larger finite families are iterated pairs)."""
    if n <= FAMILY_LIMIT:
        return list(subsets(full(n)))
    return [0] + [1 << i for i in range(n)] + [1 << i | 1 << j for i, j in combinations(range(n), 2)]


# background


def background_checks(L, cap=None) -> list[Check]:
    n = L.n
    E = range(n)
    lab = L.labels
    out = [
        first_failure(
            "Heyting adjunction: x ∧ a ≤ b iff x ≤ a → b",
            ((a, b, x) for a in E for b in E for x in E),
            lambda t: L.leq(L.meet(t[2], t[0]), t[1]) == L.leq(t[2], L.heyting(t[0], t[1])),
            lambda t: ", ".join(lab[i] for i in t),
        )
    ]
    S = SublocaleLattice(L, cap)
    bottom, top = S.bottom, S.top
    op = [open_sl(L, a) for a in E]
    cl = [closed_sl(L, a) for a in E]
    fams = _families(n)

    out.append(ok("open and closed sublocales are sublocales", all(is_sublocale(L, m) for m in op + cl)))
    out.append(ok("open(1) = L and open(0) = {1}", op[L.top] == top and op[L.bottom] == bottom))
    out.append(ok("closed(1) = {1} and closed(0) = L", cl[L.top] == bottom and cl[L.bottom] == top))
    out.append(first_failure(
        "joins of opens: ⋁ open(aᵢ) = open(⋁ aᵢ)", fams,
        lambda f: S.join_all(op[a] for a in bits(f)) == op[L.join_mask(f)], bin,
    ))
    out.append(first_failure(
        "open(a) ∩ open(b) = open(a ∧ b)", ((a, b) for a in E for b in E),
        lambda t: op[t[0]] & op[t[1]] == op[L.meet(*t)],
    ))
    out.append(first_failure(
        "meets of closeds: ⋂ closed(aᵢ) = closed(⋁ aᵢ)", fams,
        lambda f: _and_all(top, (cl[a] for a in bits(f))) == cl[L.join_mask(f)], bin,
    ))
    out.append(first_failure(
        "closed(a) ∨ closed(b) = closed(a ∧ b)", ((a, b) for a in E for b in E),
        lambda t: S.join(cl[t[0]], cl[t[1]]) == cl[L.meet(*t)],
    ))
    out.append(first_failure(
        "open(a) and closed(a) are complements", E,
        lambda a: op[a] & cl[a] == bottom and S.join(op[a], cl[a]) == top,
    ))
    out.append(first_failure(
        "closed(a) ⊆ open(b) iff a ∨ b = 1, open(a) ⊆ closed(b) iff a ∧ b = 0",
        ((a, b) for a in E for b in E),
        lambda t: (cl[t[0]] & ~op[t[1]] == 0) == (L.join(*t) == L.top)
        and (op[t[0]] & ~cl[t[1]] == 0) == (L.meet(*t) == L.bottom),
    ))

    primes = sorted(L.primes())
    out.append(first_failure(
        "x → p is 1 below p and p elsewhere", ((p, x) for p in primes for x in E),
        lambda t: L.heyting(t[1], t[0]) == (L.top if L.leq(t[1], t[0]) else t[0]),
    ))
    out.append(first_failure(
        "boolean(p) ⊆ open(x) iff x ≰ p", ((p, x) for p in primes for x in E),
        lambda t: (boolean_sl(L, t[0]) & ~op[t[1]] == 0) == (not L.leq(t[1], t[0])),
    ))
    out.append(first_failure(
        "boolean(p) = {1, p} is completely join-prime in S(L)", primes,
        lambda p: boolean_sl(L, p) == (1 << p | 1 << L.top) and S.is_join_prime(boolean_sl(L, p)),
    ))
    joinprimes = {T for T in S.carriers if S.is_join_prime(T)}
    out.append(ok(
        "join-primes of S(L) are exactly the boolean(p), p prime",
        joinprimes == {boolean_sl(L, p) for p in primes},
    ))

    if n <= FAMILY_LIMIT:
        probes = list(subsets(full(n)))
    else:
        probes = [1 << i for i in E] + [1 << i | 1 << j for i, j in combinations(E, 2)]
    out.append(first_failure(
        "smallest sublocale is the least sublocale containing X", probes,
        lambda X: _is_least(S, smallest_sublocale(L, X), X), bin,
    ))
    out.append(ok("S(L) is a coframe", S.is_coframe()))
    out.append(first_failure(
        "complemented sublocales are linear", [T for T in S.carriers if S.complement(T) is not None],
        S.is_linear, bin,
    ))
    out.append(first_failure(
        "join is the intersection of all upper bounds", ((a, b) for a in S.carriers for b in S.carriers),
        lambda t: S.join(*t) == S.join_by_intersection(*t),
    ))
    if n <= 12:
        out.append(ok("enumeration agrees with brute force", S.carriers == brute_force_sublocales(L)))
    out.append(Check("number of sublocales", "pass", detail=str(len(S))))
    return out


def _and_all(acc: int, items) -> int:
    for m in items:
        acc &= m
    return acc


def _is_least(S: SublocaleLattice, small: int, X: int) -> bool:
    if X & ~small or small not in S.index:
        return False
    return all(small & ~T == 0 for T in S.carriers if X & ~T == 0)


# raney-core


def raney_core_checks(L) -> list[Check]:
    frame = FiniteFrame(L)
    filters = all_filters(L)
    principal = sorted({L.up[a] for a in range(L.n)}, key=lambda m: (popcount(m), m))
    out = [ok("every filter is principal", filters == principal)]
    try:
        filt_frame(L)
        out.append(Check("↑ is an isomorphism L^op → Filt(L)", "pass"))
    except Exception as exc:  # noqa: BLE001
        out.append(Check("↑ is an isomorphism L^op → Filt(L)", "fail", str(exc)))
    everything = frozenset(filters)
    out.append(ok(
        "exact = strongly exact = all filters",
        class_view(frame, Named("E")).masks == class_view(frame, Named("SE")).masks == everything,
    ))
    interval = raney_interval(frame)
    out.append(ok("exactly one extension class exists", interval == [everything], f"{len(interval)} classes"))
    RE = unique_extension(frame)
    out.append(ok("the unique extension validates", validate_raney(frame, RE.cstar).ok))
    out.append(adjunction_fixpoints(RE))
    out.append(first_failure(
        "every prime is covered", sorted(L.primes()), frame.is_covered_prime, L.label,
    ))
    pts = {P for P in spectrum(RaneyExt(frame, Named("SE"))).points}
    ptd = {P for P in spectrum(RaneyExt(frame, Named("E"))).points}
    allp = {PrimeComplement(p) for p in L.primes()}
    out.append(ok("points: E-spectrum = SE-spectrum = all primes", pts == ptd == allp))
    out.append(ok("E-compact", bool(is_compact(RE, Named("E")))))
    return out


# properties


def property_checks(L) -> list[Check]:
    frame = FiniteFrame(L)
    RE = unique_extension(frame)
    props = property_suite(RE)
    boolean = L.is_boolean()
    out = [
        ok("finite extensions are sober", bool(props["sober"])),
        ok("finite extensions are TD", bool(props["TD"])),
        ok("finite extensions are spatial", bool(props["spatial"])),
        ok("T1 iff the frame is Boolean", bool(props["T1"]) == boolean, detail=f"boolean={boolean}"),
        ok("algebraic", bool(is_algebraic(RE))),
    ]
    item1 = bool(is_subfit(frame))
    item3 = bool(property_suite(RaneyExt(frame, Named("E")))["T1"])
    item4 = any(
        bool(property_suite(RaneyExt(frame, Explicit.from_masks(frame, c)))["T1"]) for c in raney_interval(frame)
    )
    out.append(ok(
        "subfit, exact class is T1, and some extension is T1 agree",
        item1 == item3 == item4, f"{item1}, {item3}, {item4}", detail=f"subfit={item1}",
    ))
    regular_all = class_view(frame, Named("R")).masks == frozenset(all_filters(L))
    out.append(ok("regular filters are all filters iff subfit", regular_all == item1))
    scattered = bool(props["scattered_subfit"])
    out.append(ok("scattered subfit iff subfit on finite frames", scattered == item1))
    sob, td = sobrification(RE), td_reflection(RE)
    out.append(ok("sobrification leaves a finite extension unchanged", sob.unchanged and sob.validation.ok))
    out.append(ok("TD reflection leaves a finite extension unchanged", td.unchanged and td.validation.ok))
    canon, report = canonical_extension(frame)
    out.append(ok("canonical extension is the unique extension", report.ok and same_class(frame, canon.cstar, RE.cstar)))
    if boolean:
        out.append(ok("Boolean: canonical extension equals the regular class", same_class(frame, canon.cstar, Named("R"))))
    return out


# sublocales


def sublocale_checks(L, cap: int) -> list[Check]:
    S = SublocaleLattice(L, cap)
    E = range(L.n)
    filters = set(all_filters(L))
    out = [
        first_failure("ker(open(a)) = ↑a", E, lambda a: ker(L, open_sl(L, a)) == L.up[a], L.label),
        first_failure("coker(closed(a)) = ↑a", E, lambda a: coker(L, closed_sl(L, a)) == L.up[a], L.label),
        ok("ker({1}) = L", ker(L, S.bottom) == full(L.n)),
    ]
    fitted, joc = S.fitted, S.joins_of_closed
    k = {T: ker(L, T) for T in fitted}
    back = {F: _and_all(S.top, (open_sl(L, a) for a in bits(F))) for F in filters}
    out.append(ok(
        "ker: fitted sublocales ≅ strongly exact filters (order-reversing, inverse by opens)",
        set(k.values()) == filters and len(set(k.values())) == len(k)
        and all(back[k[T]] == T for T in fitted)
        and all((T & ~U == 0) == (k[U] & ~k[T] == 0) for T in fitted for U in fitted),
    ))
    c = {T: coker(L, T) for T in joc}
    back_c = {F: S.join_all(closed_sl(L, a) for a in bits(F)) for F in filters}
    out.append(ok(
        "coker: joins of closed sublocales ≅ exact filters (order-preserving, inverse by closeds)",
        set(c.values()) == filters and len(set(c.values())) == len(c)
        and all(back_c[c[T]] == T for T in joc)
        and all((T & ~U == 0) == (c[T] & ~c[U] == 0) for T in joc for U in joc),
    ))
    exact = set(S.exact)
    out.append(first_failure("exact sublocales include open ones", E, lambda a: open_sl(L, a) in exact, L.label))
    out.append(first_failure("exact sublocales include closed ones", E, lambda a: closed_sl(L, a) in exact, L.label))
    out.append(first_failure(
        "exact sublocales include boolean(p) for covered p", sorted(L.covered_primes()),
        lambda p: boolean_sl(L, p) in exact, L.label,
    ))
    out.append(first_failure(
        "exact sublocales are closed under joins", ((a, b) for a in exact for b in exact),
        lambda t: S.join(*t) in exact,
    ))
    out.append(first_failure(
        "exact sublocales are stable under difference", ((a, b) for a in exact for b in S.carriers),
        lambda t: S.difference(*t) in exact,
    ))
    out.append(first_failure(
        "exact iff the nucleus preserves binary meets", S.carriers,
        lambda T: (T in exact) == all(
            nucleus(L, T, L.meet(x, y)) == L.meet(nucleus(L, T, x), nucleus(L, T, y)) for x in E for y in E
        ),
        bin,
    ))
    dsubs = set(S.d_sublocales)
    out.append(first_failure(
        "D-sublocales are closed under joins", ((a, b) for a in dsubs for b in dsubs), lambda t: S.join(*t) in dsubs,
    ))
    out.append(ok("joins of closed sublocales are D-sublocales", set(joc) <= dsubs))
    out.append(Check("exact and D-sublocales", "pass", detail=f"equal={exact == dsubs}"))
    return out


# morphisms


def morphism_checks(M, N, same: bool = False) -> list[Check]:
    src, tgt = FiniteFrame(M), FiniteFrame(N)
    S, T = unique_extension(src), unique_extension(tgt)
    maps = frame_maps(src, tgt)
    out = [Check("frame maps enumerated", "pass", detail=str(len(maps)))]
    bad = None
    for f in maps:
        r = extend_morphism(f, S, T)
        if not isinstance(r, Extension) or not r.verified:
            bad = f"{list(f.table)}"
            break
    out.append(ok("every frame map extends, restricting to f and preserving meets and finite joins", bad is None, bad))
    out.append(first_failure("every frame map is exact", maps, lambda f: bool(is_exact_morphism(f)), lambda f: str(list(f.table))))
    out.append(first_failure("every frame map is a D-morphism", maps, lambda f: bool(is_d_morphism(f)), lambda f: str(list(f.table))))
    if same:
        r = extend_morphism(identity_map(src), S, S)
        out.append(ok(
            "identity extends to the identity",
            isinstance(r, Extension) and r.verified and all(a == b for a, b in r.mapping),
        ))
    return out


# duality


def duality_t0_checks(X: FiniteSpace) -> list[Check]:
    RE = omega_r(X)
    out = [psi_homeomorphism(X), phi_isomorphism(RE)]
    out.append(ok("saturated sets are the opens", sorted(X.saturated_sets()) == sorted(X.opens)))
    Y = spectrum(RE).as_finite_space()
    lat_x, lat_y = omega_r(X).frame.lattice, omega_r(Y).frame.lattice
    out.append(ok(
        "unit and counit: Ω_R(pt_R(Ω_R X)) ≅ Ω_R X",
        lat_x.n == lat_y.n and len(Y.saturated_sets()) == len(X.saturated_sets()) and bool(psi_homeomorphism(Y)),
    ))
    props = property_suite(RE)
    out.append(ok("sober agrees with the point-set oracle", bool(props["sober"]) == X.pointset_sober()))
    out.append(ok("TD agrees with the point-set oracle", bool(props["TD"]) == X.pointset_td()))
    out.append(ok("T1 agrees with the point-set oracle", bool(props["T1"]) == X.pointset_t1()))
    out.append(ok("T1 implies TD", not props["T1"] or bool(props["TD"])))
    return out


def duality_non_t0_checks(X: FiniteSpace) -> list[Check]:
    psi = X.psi()
    return [ok("ψ is not injective on a non-T0 space", len(set(psi)) < len(psi))]


# fixtures


def fixture_checks(space, window: int) -> list[Check]:
    L = CofiniteFrame(window)
    out = []
    listing = L.enumerate_primes(window)
    covered = [p for p in listing.prefix if L.is_covered_prime(p)]
    out.append(ok(
        "covered primes: every ℕ∖{n} in the window, never ∅",
        covered == [cof(n) for n in range(window)] and not L.is_covered_prime(EMPTY) and not listing.complete,
        detail=listing.tail,
    ))
    out.append(ok(
        "maximal primes are the ℕ∖{n}",
        all(L.is_maximal_prime(cof(n)) for n in range(window)) and not L.is_maximal_prime(EMPTY),
    ))
    flags = classify_filter(L, PrimeComplement(EMPTY))
    out.append(ok(
        "generic filter: completely prime, strongly exact, Scott-open, not exact, not regular",
        flags.completely_prime is Tri.TRUE and flags.strongly_exact is Tri.TRUE and flags.scott_open is Tri.TRUE
        and flags.exact is Tri.FALSE and flags.regular is Tri.FALSE,
        str(flags.to_json()),
    ))
    pflags = [classify_filter(L, PrimeComplement(cof(n))) for n in range(window)]
    out.append(ok(
        "point filters are exact and regular",
        all(f.exact is Tri.TRUE and f.regular is Tri.TRUE for f in pflags),
    ))
    out.append(ok(
        "meets: all nonempty opens meet to ∅, exactly but not strongly exactly",
        L.meet_family(AllNonEmpty()) == EMPTY and L.is_exact_meet(StrictlyAbove(EMPTY))
        and not L.is_strongly_exact_meet(AllNonEmpty()),
    ))
    out.append(ok(
        "finite meets are exact and strongly exact",
        L.meet_family(FiniteFamily([cof(1), cof(2)])) == cof(1, 2)
        and L.is_exact_meet(FiniteFamily([cof(1), cof(2)])) and L.is_strongly_exact_meet(FiniteFamily([cof(1), cof(2)])),
    ))
    sample = L.sample_elements()
    out.append(first_failure(
        "Heyting adjunction on sample elements",
        ((a, b, x) for a in sample for b in sample for x in sample),
        lambda t: L.leq(L.meet(t[2], t[0]), t[1]) == L.leq(t[2], L.heyting(t[0], t[1])),
    ))

    sp_e = spectrum(RaneyExt(L, Named("E")))
    sp_se = spectrum(RaneyExt(L, Named("SE")))
    window_labels = tuple(str(n) for n in range(window))
    out.append(ok("exact spectrum is the ℕ-window", sp_e.labels == window_labels, str(sp_e.labels)))
    out.append(ok(
        "strongly exact spectrum is the ℕ-window plus the generic point",
        sp_se.labels == window_labels + ("★",), str(sp_se.labels),
    ))
    realized = {spectrum(RaneyExt(L, Named(c))).labels for c in ("E", "R", "SE", "ICP", "ISO")}
    out.append(ok("realizable spectra are ℕ and ℕ ∪ {★}", realized == {window_labels, window_labels + ("★",)}))

    RE = omega_r(space, window)
    v = validate_raney(L, RE.cstar)
    out.append(Check("Ω_R(X) validates", "inventory-verified" if v.ok else "fail", None if v.ok else str(v.to_json())))
    props = property_suite(RE)
    for key, oracle in (("sober", space.pointset_sober()), ("TD", space.pointset_td()), ("T1", space.pointset_t1())):
        value = props[key].holds is Tri.TRUE
        out.append(ok(f"{key} = {str(oracle).lower()} matches the point-set oracle", value == oracle, props[key].witness))
    out.append(ok("subfit frame", bool(props["subfit"])))
    sob = sobrification(RE)
    sob_compact = is_compact(sob.result, Named("CP"))
    expected_added = () if space.has_generic else ("★",)
    out.append(ok(
        "sobrification is CP-compact and adds exactly the generic point when missing",
        bool(sob_compact) and sob.added_points == expected_added and sob.validation.ok,
        f"added {sob.added_points}",
    ))
    td = td_reflection(RE)
    expected_removed = ("★",) if space.has_generic else ()
    out.append(ok("TD reflection drops exactly the generic point when present", td.removed_points == expected_removed))
    two = FiniteFrame(chain(2))
    chi = classifier_map(L, two)
    res = extend_morphism(chi, RE, unique_extension(two))
    if space.has_generic:
        out.append(ok("the nonempty-classifier extends", isinstance(res, Extension) and res.verified))
    else:
        out.append(ok(
            "the nonempty-classifier is refused with witness the generic filter",
            isinstance(res, Refusal) and shape_of(L, res.preimage) == GENERIC,
            str(res),
        ))
    out.append(ok("the nonempty-classifier is not exact", not is_exact_morphism(chi)))
    se_res = extend_morphism(chi, RaneyExt(L, Named("SE")), unique_extension(two))
    out.append(ok("the strongly exact extension accepts the classifier", isinstance(se_res, Extension)))
    ident = extend_morphism(identity_map(L), RE, RE)
    out.append(ok("identity extends", isinstance(ident, Extension) and ident.verified))
    out.append(ok(
        "generic filter separates the two extensions",
        class_view(L, RE.cstar).contains(GENERIC) == space.has_generic,
    ))
    out.append(adjunction_fixpoints(RE))
    return out


# drivers


def _targets(suite: str, params: Params) -> list[tuple[str, tuple]]:
    if suite == "fixtures":
        return [(s.kind, (suite, s.kind, params)) for s in (COFINITE_NAT, COFINITE_NAT_PLUS_GENERIC)]
    if suite == "duality":
        out = []
        for n in range(1, min(params.max_points, 4) + 1):
            for i, opens in enumerate(topologies(n)):
                X = FiniteSpace(n, opens)
                if X.is_t0() or n <= 3:
                    out.append((f"space[n={n}#{i}]", (suite, (n, tuple(sorted(opens))), params)))
        return out
    frames = corpus_frames(params.max_points)
    if suite == "morphisms":
        small = [c for c in frames if c.lattice.n <= 4]
        return [(f"{a.name} -> {b.name}", (suite, (a.index, b.index), params)) for a in small for b in small]
    if suite == "sublocales":
        frames = [c for c in frames if c.lattice.n <= params.subloc_cap]
    return [(c.name, (suite, c.index, params)) for c in frames]


def frame_checks(suite: str, L, params: Params = Params()) -> list[Check]:
    """Run one frame-indexed suite on an arbitrary finite frame."""
    if suite == "background":
        return background_checks(L, cap=None)
    if suite == "raney-core":
        return raney_core_checks(L)
    if suite == "properties":
        return property_checks(L)
    if suite == "sublocales":
        return sublocale_checks(L, params.subloc_cap)
    if suite == "morphisms":
        return morphism_checks(L, L, same=True)
    raise ValueError(f"suite {suite!r} does not run on a single frame")


def _run_one(job: tuple) -> list[dict]:
    suite, key, params = job
    frames = corpus_frames(params.max_points)
    if suite in ("background", "raney-core", "properties", "sublocales"):
        checks = frame_checks(suite, frames[key].lattice, params)
    elif suite == "morphisms":
        checks = morphism_checks(frames[key[0]].lattice, frames[key[1]].lattice, key[0] == key[1])
    elif suite == "duality":
        X = FiniteSpace(key[0], key[1])
        checks = duality_t0_checks(X) if X.is_t0() else duality_non_t0_checks(X)
    elif suite == "fixtures":
        space = COFINITE_NAT if key == "CofiniteNat" else COFINITE_NAT_PLUS_GENERIC
        checks = fixture_checks(space, params.window)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return [c.to_json() for c in checks]


def _summary(entries) -> dict:
    summary = {"pass": 0, "fail": 0, "inventory-verified": 0, "unknown": 0}
    for e in entries:
        for c in e["checks"]:
            summary[c["status"]] += 1
    return summary


def report(suite: str, params: Params, entries: list[dict]) -> dict:
    return {
        "schema": SCHEMA,
        "suite": suite,
        "params": {"max_points": params.max_points, "window": params.window, "subloc_cap": params.subloc_cap},
        "targets": entries,
        "summary": _summary(entries),
    }


def run_frame(suite: str, L, name: str, params: Params = Params()) -> dict:
    """Report for one suite on a single named frame outside the corpus."""
    return report(suite, params, [{"target": name, "checks": [c.to_json() for c in frame_checks(suite, L, params)]}])


def run_space(X, name: str, params: Params = Params()) -> dict:
    """Duality report for a single finite space, or the fixture report for a symbolic one."""
    if isinstance(X, FiniteSpace):
        checks = duality_t0_checks(X) if X.is_t0() else duality_non_t0_checks(X)
        return report("duality", params, [{"target": name, "checks": [c.to_json() for c in checks]}])
    return report("fixtures", params, [{"target": name, "checks": [c.to_json() for c in fixture_checks(X, params.window)]}])


def run_suite(suite: str, params: Params = Params(), target: str | None = None, jobs: int = 1) -> dict:
    """Run a suite and return its report.  Output order follows the corpus order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    targets = _targets(suite, params)
    if target is not None:
        targets = [t for t in targets if t[0] == target or t[0].startswith(target + "[")]
    jobs_list = [job for _, job in targets]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, jobs_list))
    else:
        results = [_run_one(j) for j in jobs_list]
    entries = [{"target": name, "checks": checks} for (name, _), checks in zip(targets, results)]
    return report(suite, params, entries)


def run_all(params: Params = Params(), jobs: int = 1) -> dict:
    reports = [run_suite(s, params, jobs=jobs) for s in SUITES]
    summary = {k: sum(r["summary"][k] for r in reports) for k in reports[0]["summary"]}
    return {"schema": SCHEMA, "suite": "all", "reports": reports, "summary": summary}


__all__ = ["SCHEMA", "SUITES", "Params", "frame_checks", "report", "run_frame", "run_space", "run_suite", "run_all"]
