"""Acceptance criteria, one test each.  Every test records a PASS/FAIL line that is
printed in the terminal summary (and directly when this file runs as a script)."""

import json
import time

import pytest

from pointfree.cli import main
from pointfree.corpus import corpus_frames

RESULTS: dict[str, str] = {}

MANYFACTS = [
    "open(1) = L and open(0) = {1}",
    "closed(1) = {1} and closed(0) = L",
    "joins of opens: ⋁ open(aᵢ) = open(⋁ aᵢ)",
    "open(a) ∩ open(b) = open(a ∧ b)",
    "meets of closeds: ⋂ closed(aᵢ) = closed(⋁ aᵢ)",
    "closed(a) ∨ closed(b) = closed(a ∧ b)",
    "open(a) and closed(a) are complements",
    "closed(a) ⊆ open(b) iff a ∨ b = 1, open(a) ⊆ closed(b) iff a ∧ b = 0",
]
PRIME_FACTS = [
    "x → p is 1 below p and p elsewhere",
    "boolean(p) ⊆ open(x) iff x ≰ p",
    "boolean(p) = {1, p} is completely join-prime in S(L)",
    "join-primes of S(L) are exactly the boolean(p), p prime",
]


@pytest.fixture(scope="module")
def full_runs(tmp_path_factory):
    """Two consecutive full runs through the command line, timed."""
    d = tmp_path_factory.mktemp("reports")
    paths, codes = [d / "first.json", d / "second.json"], []
    start = time.perf_counter()
    for p in paths:
        codes.append(main(["verify", "all", "--json", str(p)]))
    elapsed = time.perf_counter() - start
    first = json.loads(paths[0].read_text(encoding="utf-8"))
    return {"report": first, "bytes": [p.read_bytes() for p in paths], "codes": codes, "elapsed": elapsed}


def suite(full_runs, name):
    return next(r for r in full_runs["report"]["reports"] if r["suite"] == name)


def laws_by_target(rep):
    return {t["target"]: {c["law"]: c for c in t["checks"]} for t in rep["targets"]}


def record(criterion: str, ok: bool, note: str = "") -> None:
    RESULTS[criterion] = f"{'PASS' if ok else 'FAIL'}  {criterion}" + (f"  ({note})" if note else "")
    print(RESULTS[criterion])
    assert ok, note


def no_failures(rep) -> bool:
    return rep["summary"]["fail"] == 0 and rep["summary"]["unknown"] == 0


def test_1_background(full_runs):
    rep = suite(full_runs, "background")
    targets = laws_by_target(rep)
    required = MANYFACTS + PRIME_FACTS + [
        "Heyting adjunction: x ∧ a ≤ b iff x ≤ a → b",
        "smallest sublocale is the least sublocale containing X",
    ]
    complete = len(targets) == len(corpus_frames(5)) and all(
        all(law in checks and checks[law]["status"] == "pass" for law in required) for checks in targets.values()
    )
    record("1 background", no_failures(rep) and complete, f"{len(targets)} frames, {rep['summary']['pass']} checks")


def test_2_degenerate_collapse(full_runs):
    rep = suite(full_runs, "raney-core")
    required = [
        "every filter is principal",
        "↑ is an isomorphism L^op → Filt(L)",
        "exact = strongly exact = all filters",
        "exactly one extension class exists",
        "every prime is covered",
        "points: E-spectrum = SE-spectrum = all primes",
    ]
    targets = laws_by_target(rep)
    complete = len(targets) == 87 and all(all(checks[law]["status"] == "pass" for law in required) for checks in targets.values())
    record("2 degenerate collapse", no_failures(rep) and complete, f"{len(targets)} frames")


def test_3_duality(full_runs):
    rep = suite(full_runs, "duality")
    targets = laws_by_target(rep)
    t0 = [c for c in targets.values() if "ψ is a homeomorphism onto the spectrum" in c]
    non_t0 = [c for c in targets.values() if "ψ is not injective on a non-T0 space" in c]
    ok = (
        no_failures(rep)
        # labelled T0 topologies on 1..4 points: 1 + 3 + 19 + 219
        and len(t0) == 242
        # labelled non-T0 topologies on 1..3 points: 0 + 1 + 10
        and len(non_t0) == 11
        and all(c["φ is an isomorphism of extensions"]["status"] == "pass" for c in t0)
    )
    record("3 duality", ok, f"{len(t0)} T0 spaces, {len(non_t0)} non-T0 spaces")


def test_4_ker_coker(full_runs):
    rep = suite(full_runs, "sublocales")
    laws = [
        "ker(open(a)) = ↑a",
        "ker: fitted sublocales ≅ strongly exact filters (order-reversing, inverse by opens)",
        "coker: joins of closed sublocales ≅ exact filters (order-preserving, inverse by closeds)",
    ]
    targets = laws_by_target(rep)
    within_cap = sum(1 for c in corpus_frames(5) if c.lattice.n <= 12)
    ok = len(targets) == within_cap and all(all(checks[law]["status"] == "pass" for law in laws) for checks in targets.values())
    record("4 ker/coker", ok and no_failures(rep), f"{len(targets)} frames with at most 12 elements")


def test_5_exact_sublocales(full_runs):
    rep = suite(full_runs, "sublocales")
    laws = [
        "exact sublocales include open ones",
        "exact sublocales include closed ones",
        "exact sublocales include boolean(p) for covered p",
        "exact sublocales are closed under joins",
        "exact sublocales are stable under difference",
    ]
    targets = laws_by_target(rep)
    ok = all(all(checks[law]["status"] == "pass" for law in laws) for checks in targets.values())
    record("5 exact sublocales", ok and no_failures(rep), f"{len(targets)} frames")


def test_6_fixtures(full_runs):
    rep = suite(full_runs, "fixtures")
    targets = laws_by_target(rep)
    nat, gen = targets["CofiniteNat"], targets["CofiniteNatPlusGeneric"]
    shared = [
        "covered primes: every ℕ∖{n} in the window, never ∅",
        "generic filter: completely prime, strongly exact, Scott-open, not exact, not regular",
        "exact spectrum is the ℕ-window",
        "strongly exact spectrum is the ℕ-window plus the generic point",
    ]
    good = ("pass", "inventory-verified")
    ok = (
        rep["params"]["window"] == 16
        and all(t[law]["status"] == "pass" for t in (nat, gen) for law in shared)
        and all(nat[k]["status"] in good for k in (
            "sober = false matches the point-set oracle",
            "TD = true matches the point-set oracle",
            "T1 = true matches the point-set oracle",
            "sobrification is CP-compact and adds exactly the generic point when missing",
            "the nonempty-classifier is refused with witness the generic filter",
        ))
        and all(gen[k]["status"] in good for k in (
            "sober = true matches the point-set oracle",
            "TD = false matches the point-set oracle",
            "T1 = false matches the point-set oracle",
        ))
        and no_failures(rep)
    )
    record("6 fixtures", ok, "window 16, both cofinite spaces")


def test_7_morphisms(full_runs):
    rep = suite(full_runs, "morphisms")
    small = [c for c in corpus_frames(5) if c.lattice.n <= 4]
    law = "every frame map extends, restricting to f and preserving meets and finite joins"
    targets = laws_by_target(rep)
    maps = sum(int(t["frame maps enumerated"]["detail"]) for t in targets.values())
    ok = len(targets) == len(small) ** 2 and all(t[law]["status"] == "pass" for t in targets.values())
    record("7 morphisms", ok and no_failures(rep), f"{len(targets)} frame pairs, {maps} maps")


def test_8_subfit_t1(full_runs):
    rep = suite(full_runs, "properties")
    targets = laws_by_target(rep)
    agree = all(
        t["subfit, exact class is T1, and some extension is T1 agree"]["status"] == "pass" for t in targets.values()
    )
    booleans = [c for c in corpus_frames(5) if c.lattice.is_boolean()]
    canon = [
        t["Boolean: canonical extension equals the regular class"]
        for t in targets.values()
        if "Boolean: canonical extension equals the regular class" in t
    ]
    ok = agree and len(canon) == len(booleans) and all(c["status"] == "pass" for c in canon)
    record("8 subfit/T1", ok and no_failures(rep), f"{len(targets)} frames, {len(booleans)} Boolean")


def test_9_determinism(full_runs):
    first, second = full_runs["bytes"]
    ok = first == second and full_runs["codes"] == [0, 0]
    record("9 determinism", ok, f"{len(first)} bytes, two runs in {full_runs['elapsed']:.0f}s")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
