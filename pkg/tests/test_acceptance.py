"""One test per acceptance criterion, each with its runtime limit.

Every test prints a ``criterion N: PASS|FAIL`` line (visible with ``-s``)
and records it for the terminal summary.
"""

import functools
import json
import random
import subprocess
import sys
import time

from conftest import CRITERIA
from gogcalc import verify
from gogcalc.freegroup import IDENTITY, centralizes, conjugates_into
from gogcalc.gog import in_edge_subgroupoid, passes_through, reduced_words, words_equal
from gogcalc.lab import (
    build_gamma,
    canonical_family,
    chain_letter_audit,
    coherence_check,
    cocone_check,
    exceeding_chain,
    family_min_vertex_report,
    search_conjugators,
    tree_family,
)
from gogcalc.ordinal import Ordinal, omega_power
from gogcalc.perm import conjugate_by_tau, in_shift_image, shift, swap, verify_hom_on_pair
from gogcalc.sampling import random_finperm, random_kword
from gogcalc.wordsyntax import format_word, parse_word

SEED = 42


def criterion(number, title, limit):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            status = "FAIL"
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - t0
                assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
                status = "PASS"
            finally:
                elapsed = time.perf_counter() - t0
                line = f"criterion {number:2d}: {status} {title} ({elapsed:.2f}s, limit {limit}s)"
                CRITERIA[number] = line
                print(line)
        return run
    return wrap


@criterion(1, "shift equals conjugation by tau", 5)
def test_01_shift_conjugation():
    rng = random.Random(SEED)
    for beta in verify.TAU_BETAS:
        for _ in range(200):
            sigma = random_finperm(beta, rng)
            assert sigma.bound() <= beta
            assert conjugate_by_tau(sigma, beta) == shift(sigma)


@criterion(2, "shift is a homomorphism", 2)
def test_02_shift_homomorphism():
    rng = random.Random(SEED)
    for _ in range(200):
        sigma = random_finperm(omega_power(2), rng)
        rho = random_finperm(omega_power(2), rng)
        assert verify_hom_on_pair(sigma, rho)


@criterion(3, "shift is not surjective", 2)
def test_03_shift_not_surjective():
    w = Ordinal.of("w")
    assert in_shift_image(swap(w, Ordinal.of("w*2"))) is None
    rng = random.Random(SEED)
    for _ in range(200):
        sigma = random_finperm(omega_power(3), rng)
        assert in_shift_image(shift(sigma)) == sigma


@criterion(4, "only the identity centralizes g0 and g1", 10)
def test_04_free_centralizer():
    words = reduced_words([0, 1, 2], 6)
    assert len(words) == 23437
    assert [b for b in words if centralizes(b, {0, 1})] == [IDENTITY]


@criterion(5, "words containing g2 never conjugate <g0,g1> into itself", 60)
def test_05_free_conjugates_into():
    g2 = Ordinal.of(2)
    bs = [b for b in reduced_words([0, 1, 2], 5) if any(i == g2 for i, _ in b)]
    as_ = [a for a in reduced_words([0, 1], 4) if a]
    cases = 0
    for b in bs:
        for a in as_:
            assert not conjugates_into(b, a, {0, 1}), (b, a)
            cases += 1
    assert cases == len(bs) * len(as_) > 600_000


@criterion(6, "normal form invariant under relation moves (10,000 trials)", 120)
def test_06_normal_form_soundness():
    rep = verify.normal_form_soundness(SEED, n=6, trials=10_000)
    assert rep.cases == 10_000
    assert rep.failures == []
    assert set(rep.details["moves"]) == {"reduce", "insert", "push"}


@criterion(7, "normal form agrees with the rewriting closure", 120)
def test_07_rewriting_closure():
    g = build_gamma(4).graph
    words, classes, _ = verify.closure_classes(g, max_edges=2, max_vertex_len=2)
    pairs = 0
    for members in classes:
        first = words[members[0]]
        for k in members[1:]:
            # equality is transitive, so agreeing with one member covers every pair
            assert words_equal(g, first, words[k])
            pairs += 1
    assert len(words) > 30_000 and pairs > 0


@criterion(8, "irreducible words of positive length are not identities", 30)
def test_08_irreducible_not_identity():
    rep = verify.irreducible_not_identity(n=4, max_edges=2, max_vertex_len=2)
    assert rep.cases > 0
    assert rep.failures == []


@criterion(9, "cocone naturality on Gamma_8", 30)
def test_09_cocone():
    rep = cocone_check(build_gamma(8))
    assert rep.cases == sum(b for b in range(2, 8) for a in range(b + 1, 8))
    assert rep.failures == []


@criterion(10, "edge words above gamma conjugate the inclusion (500 trials)", 60)
def test_10_horizontal_forward():
    rep = verify.horizontal_forward(SEED, n=6, trials=500)
    assert rep.cases == 500
    assert rep.failures == []


@criterion(11, "conjugator search on Gamma_6 finds only edge words avoiding vertex 2", 600)
def test_11_horizontal_converse():
    g = build_gamma(6).graph
    hits = search_conjugators(g, 3, 3, 4, max_edges=2, max_vertex_len=2)
    assert hits
    two = Ordinal.of(2)
    for w in hits:
        r = in_edge_subgroupoid(g, w)
        assert r is not None
        assert two not in passes_through(g, r)


@criterion(12, "no loop is both a vertex-group conjugate and an edge-word conjugate unless trivial", 60)
def test_12_noys():
    rep = verify.noys_sweep(SEED, n=6, trials=1000)
    assert rep.cases == 1000
    assert rep.failures == []
    # each verdict class seen, so the sweep is not vacuous
    tally = rep.details["verdicts(vertex,edge,identity)"]
    assert tally.get("111", 0) > 0 and tally.get("100", 0) > 0 and tally.get("010", 0) > 0


@criterion(13, "coherent families on [2,50): canonical flagged, monotone ones audited", 30)
def test_13_incoherence_shadow():
    g = build_gamma(50).graph
    base = Ordinal.of(2)
    canon = canonical_family(g)
    assert coherence_check(g, canon).failures == []
    flags = family_min_vertex_report(g, canon)
    assert all(low for (b, _), (_, low) in flags.items() if b > base)
    rng = random.Random(SEED)
    families = [tree_family(g)] + [tree_family(g, rng, max_jump=j) for j in (2, 3, 2, 3)]
    for fam in families:
        chain = exceeding_chain(g, fam, 5)
        assert chain_letter_audit(g, fam, chain)
        assert fam[(chain[0], chain[-1])].length >= 5


@criterion(14, "verify-all exits 0 and the word grammar round-trips", 300)
def test_14_cli():
    proc = subprocess.run([sys.executable, "-m", "gogcalc", "verify-all", "--n", "6", "--seed", "42", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["ok"] and report["schema_version"] == 1
    assert all(r["failures"] == [] for r in report["reports"])

    g = build_gamma(6).graph
    rng = random.Random(SEED)
    for _ in range(1000):
        text = format_word(g, random_kword(g, rng, 5, 4))
        assert format_word(g, parse_word(g, text)).encode() == text.encode()
