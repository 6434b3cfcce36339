"""Seeded verification sweeps, one per checked statement.

Each function returns a ``Report``; ``verify_all`` bundles them into the JSON
document printed by ``gogcalc verify-all``. Seeds are derived per sweep from
a single integer so reports are reproducible run to run.
"""

from __future__ import annotations

import random
import time

from . import perm as P
from .freegroup import centralizes, conjugates_into
from .gog import (
    GraphOfGroups,
    KWord,
    compose_all,
    edge_path,
    embed,
    enumerate_words,
    invert,
    is_identity_word,
    is_reducible,
    normalize,
    passes_through,
    reduce_once,
    reducible_positions,
    reduced_words,
    vertex_word,
)
from .lab import (
    Report,
    LabError,
    build_gamma,
    canonical_family,
    chain_letter_audit,
    coherence_check,
    cocone_check,
    conjugates_inclusion_check,
    direct_family,
    exceeding_chain,
    family_min_vertex_report,
    noys_check,
    search_conjugators,
    tree_family,
)
from .ordinal import OMEGA, Ordinal, add, omega_power
from .sampling import (
    random_edgeword,
    random_finperm,
    random_freeword,
    random_kword,
    random_kword_between,
    random_relation_move,
    random_walk,
)

SCHEMA_VERSION = 1

TAU_BETAS = (OMEGA, add(OMEGA, OMEGA), omega_power(2))


def _rng(seed, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _timed(rep: Report, t0: float) -> Report:
    rep.elapsed = time.perf_counter() - t0
    return rep


def shift_conjugation(seed: int, trials: int = 200) -> Report:
    t0 = time.perf_counter()
    rng = _rng(seed, "shift-conjugation")
    rep = Report("shift-conjugation")
    for beta in TAU_BETAS:
        for _ in range(trials):
            sigma = random_finperm(beta, rng)
            rep.cases += 1
            if P.conjugate_by_tau(sigma, beta) != P.shift(sigma):
                rep.failures.append({"beta": str(beta), "sigma": str(sigma)})
    return _timed(rep, t0)


def shift_homomorphism(seed: int, trials: int = 200) -> Report:
    t0 = time.perf_counter()
    rng = _rng(seed, "shift-hom")
    rep = Report("shift-homomorphism")
    for _ in range(trials):
        beta = rng.choice(TAU_BETAS)
        s, r = random_finperm(beta, rng), random_finperm(beta, rng)
        rep.cases += 1
        if not P.verify_hom_on_pair(s, r):
            rep.failures.append({"sigma": str(s), "rho": str(r)})
    return _timed(rep, t0)


def shift_not_surjective(seed: int, trials: int = 200) -> Report:
    t0 = time.perf_counter()
    rng = _rng(seed, "shift-image")
    rep = Report("shift-not-surjective")
    witness = P.swap(OMEGA, add(OMEGA, OMEGA))
    rep.cases += 1
    if P.in_shift_image(witness) is not None:
        rep.failures.append({"witness": str(witness)})
    for _ in range(trials):
        s = random_finperm(rng.choice(TAU_BETAS), rng)
        rep.cases += 1
        if P.in_shift_image(P.shift(s)) != s:
            rep.failures.append({"sigma": str(s)})
    return _timed(rep, t0)


def free_centralizer(max_len: int = 6) -> Report:
    t0 = time.perf_counter()
    rep = Report("free-centralizer")
    for b in reduced_words(range(3), max_len):
        rep.cases += 1
        if centralizes(b, {0, 1}) and b:
            rep.failures.append({"b": str(b)})
    return _timed(rep, t0)


def free_conjugates_into(max_b: int = 5, max_a: int = 4) -> Report:
    t0 = time.perf_counter()
    rep = Report("free-conjugates-into")
    two = Ordinal.of(2)
    bs = [b for b in reduced_words(range(3), max_b) if any(i == two for i, _ in b)]
    as_ = [a for a in reduced_words(range(2), max_a) if a]
    S = {0, 1}
    for b in bs:
        for a in as_:
            rep.cases += 1
            if conjugates_into(b, a, S):
                rep.failures.append({"b": str(b), "a": str(a)})
    return _timed(rep, t0)


def normal_form_soundness(seed: int, n: int = 6, trials: int = 10_000) -> Report:
    """``normalize`` is invariant under single relation moves."""
    t0 = time.perf_counter()
    rng = _rng(seed, "soundness")
    g = build_gamma(n).graph
    rep = Report("normal-form-soundness")
    kinds = {}
    for _ in range(trials):
        w = random_kword(g, rng, 4, 3)
        kind, w2 = random_relation_move(g, w, rng)
        kinds[kind] = kinds.get(kind, 0) + 1
        rep.cases += 1
        a, b = normalize(g, w), normalize(g, w2)
        if (a.edges, a.elements) != (b.edges, b.elements):
            rep.failures.append({"move": kind, "w": repr(w), "w2": repr(w2)})
    rep.details = {"moves": kinds}
    return _timed(rep, t0)


def _elementary_moves(g: GraphOfGroups, w: KWord, push_words: dict):
    for i in reducible_positions(g, w):
        yield reduce_once(g, w, i)
    for i in range(1, w.length + 1):
        for h in push_words[w.edges[i - 1]]:
            hinv = h.inverse()
            els = list(w.elements)
            els[i - 1] = h * els[i - 1]
            els[i] = els[i] * hinv
            yield KWord(w.source, w.target, tuple(els), w.edges)


def closure_universe(g: GraphOfGroups, max_edges: int, max_vertex_len: int) -> list[KWord]:
    return [w for v in sorted(g.vertices) for w in enumerate_words(g, v, max_edges, max_vertex_len)]


def closure_classes(g: GraphOfGroups, max_edges: int, max_vertex_len: int, push_len: int = 2):
    """Partition a capped word universe by relation moves.

    Words are joined when one is a reduction of the other or differs by
    sliding an edge-group element of length ``<= push_len`` across an edge,
    and both stay inside the universe. Returns ``(words, classes, links)``
    with ``classes`` a list of index lists.
    """
    words = closure_universe(g, max_edges, max_vertex_len)
    index = {w: k for k, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    push_words = {name: [h for h in reduced_words(sorted(e.edge_indices), push_len) if h]
                  for name, e in g.edges.items()}
    links = 0
    for k, w in enumerate(words):
        for w2 in _elementary_moves(g, w, push_words):
            j = index.get(w2)
            if j is not None:
                links += 1
                a, b = find(k), find(j)
                if a != b:
                    parent[a] = b
    classes = {}
    for k in range(len(words)):
        classes.setdefault(find(k), []).append(k)
    return words, list(classes.values()), links


def rewriting_closure(n: int = 4, max_edges: int = 2, max_vertex_len: int = 2, push_len: int = 2) -> Report:
    """Every class of the capped rewriting closure must have a single normal form."""
    t0 = time.perf_counter()
    g = build_gamma(n).graph
    rep = Report("rewriting-closure")
    words, classes, links = closure_classes(g, max_edges, max_vertex_len, push_len)
    distinct_nf = set()
    for members in classes:
        forms = set()
        for k in members:
            nf = normalize(g, words[k])
            forms.add((nf.source, nf.target, nf.edges, nf.elements))
        rep.cases += len(members)
        if len(forms) != 1:
            rep.failures.append({"class_size": len(members), "normal_forms": len(forms),
                                 "example": repr(words[members[0]])})
        else:
            distinct_nf |= forms
    rep.details = {"words": len(words), "links": links, "classes": len(classes),
                   "distinct_normal_forms": len(distinct_nf)}
    rep.elapsed = time.perf_counter() - t0
    return rep


def irreducible_not_identity(n: int = 4, max_edges: int = 2, max_vertex_len: int = 2) -> Report:
    t0 = time.perf_counter()
    g = build_gamma(n).graph
    rep = Report("irreducible-not-identity")
    for w in closure_universe(g, max_edges, max_vertex_len):
        if w.length == 0 or is_reducible(g, w) is not None:
            continue
        rep.cases += 1
        if is_identity_word(g, w):
            rep.failures.append({"w": repr(w)})
    return _timed(rep, t0)


def cocone_sweep(n_max: int = 8) -> Report:
    t0 = time.perf_counter()
    rep = Report("cocone")
    for n in range(4, n_max + 1):
        sub = cocone_check(build_gamma(n))
        rep.cases += sub.cases
        rep.failures.extend(dict(f, N=n) for f in sub.failures)
    return _timed(rep, t0)


def horizontal_forward(seed: int, n: int = 6, trials: int = 500, max_len: int = 6) -> Report:
    """Edge words that never dip below ``c`` conjugate ``G_c`` at one end onto ``G_c`` at the other."""
    t0 = time.perf_counter()
    rng = _rng(seed, "horizontal-forward")
    g = build_gamma(n).graph
    verts = sorted(g.vertices)
    rep = Report("horizontal-forward")
    for _ in range(trials):
        c = rng.choice(verts)
        allowed = {v for v in verts if v >= c}
        u = random_edgeword(g, rng, max_len, allowed=allowed)
        assert min(passes_through(g, u)) >= c
        rep.cases += 1
        if not conjugates_inclusion_check(g, embed(u), c):
            rep.failures.append({"gamma": str(c), "u": list(u.edges)})
    return _timed(rep, t0)


def horizontal_converse(n: int = 6, bound: int = 3, beta: int = 3, alpha: int = 4,
                        max_edges: int = 2, max_vertex_len: int = 2) -> Report:
    t0 = time.perf_counter()
    g = build_gamma(n).graph
    rep = Report("horizontal-converse")
    try:
        hits = search_conjugators(g, bound, beta, alpha, max_edges, max_vertex_len)
    except AssertionError as exc:
        rep.failures.append({"violation": str(exc)})
        return _timed(rep, t0)
    rep.cases = len(hits)
    if not hits:
        rep.failures.append({"reason": "no conjugator found within the bounds"})
    rep.details = {"hits": len(hits)}
    return _timed(rep, t0)


def _loop_at(g: GraphOfGroups, x, rng: random.Random, max_len: int) -> list[str]:
    walk = random_walk(g, x, rng.randint(1, max_len), rng)
    end = g.edges[walk[-1]].target if walk else x
    if end != x:
        walk.append(g.edge_between(end, x))
    return walk


def noys_sweep(seed: int, n: int = 6, trials: int = 1000) -> Report:
    t0 = time.perf_counter()
    rng = _rng(seed, "noys")
    g = build_gamma(n).graph
    verts = sorted(g.vertices)
    rep = Report("vertex-edge-disjoint")
    tally = {}
    kinds = ("identity", "vertex-conjugate", "edge-conjugate", "vertex-element", "random")
    for t in range(trials):
        kind = kinds[t % len(kinds)]
        x = rng.choice(verts)
        u = random_kword_between(g, rng, x, rng.choice(verts), 3, 2)
        v = random_kword_between(g, rng, x, rng.choice(verts), 3, 2)
        if kind == "identity":
            z = vertex_word(x)
        elif kind == "vertex-conjugate":
            a = random_freeword(g.generators(u.target), rng, 3)
            z = compose_all(invert(g, u), vertex_word(u.target, a), u)
        elif kind == "edge-conjugate":
            loop = edge_path(g, v.target, _loop_at(g, v.target, rng, 4))
            z = compose_all(invert(g, v), embed(loop), v)
        elif kind == "vertex-element":
            z = vertex_word(x, random_freeword(g.generators(x), rng, 3))
        else:
            walk = _loop_at(g, x, rng, 3)
            path = [x] + [g.edges[e].target for e in walk]
            z = KWord(x, x, tuple(random_freeword(g.generators(p), rng, 2) for p in path), tuple(walk))
        verdict = noys_check(g, z, u, v)
        key = f"{int(verdict.in_vertex_groups)}{int(verdict.in_edge_subgroupoid)}{int(verdict.is_identity)}"
        tally[key] = tally.get(key, 0) + 1
        rep.cases += 1
        if not verdict.consistent:
            rep.failures.append({"kind": kind, "z": repr(z), "u": repr(u), "v": repr(v)})
    rep.details = {"verdicts(vertex,edge,identity)": dict(sorted(tally.items()))}
    return _timed(rep, t0)


def incoherence_shadow(seed: int, n: int = 50, m: int = 5, random_families: int = 4) -> Report:
    t0 = time.perf_counter()
    rng = _rng(seed, "incoherence")
    gamma = build_gamma(n)
    g = gamma.graph
    rep = Report("incoherence-shadow")
    base = min(g.vertices)

    canon = canonical_family(g)
    coh = coherence_check(g, canon)
    rep.cases += coh.cases
    if not coh.ok:
        rep.failures.append({"family": "canonical", "coherence_violations": len(coh.failures)})
    flags = family_min_vertex_report(g, canon)
    unflagged = [k for k, (_, low) in flags.items() if k[0] > base and not low]
    rep.cases += len(flags)
    if unflagged:
        rep.failures.append({"family": "canonical", "unflagged": len(unflagged)})
    try:
        chain_letter_audit(g, canon, exceeding_chain(g, canon, 1), check_coherence=False)
        rep.failures.append({"family": "canonical", "reason": "audit accepted a family passing below"})
    except LabError:
        pass

    families = [("consecutive", tree_family(g))]
    for k in range(random_families):
        families.append((f"tree-{k}", tree_family(g, rng, max_jump=2 + k % 2)))
    audits = {}
    for name, fam in families:
        rep.cases += 1
        try:
            chain = exceeding_chain(g, fam, m)
            ok = chain_letter_audit(g, fam, chain)
        except LabError as exc:
            rep.failures.append({"family": name, "error": str(exc)})
            continue
        length = fam[(chain[0], chain[-1])].length
        audits[name] = {"chain": [str(d) for d in chain], "length": length}
        if not ok or length < m:
            rep.failures.append({"family": name, "chain": [str(d) for d in chain], "length": length})
    rep.details = {"audits": audits}
    return _timed(rep, t0)


def direct_family_incoherent(n: int = 8) -> Report:
    """Negative control: direct edges are coherent at no triple."""
    t0 = time.perf_counter()
    g = build_gamma(n).graph
    coh = coherence_check(g, direct_family(g))
    rep = Report("direct-family-incoherent", cases=coh.cases)
    if len(coh.failures) != coh.cases:
        rep.failures.append({"coherent_triples": coh.cases - len(coh.failures)})
    return _timed(rep, t0)


def verify_all(n: int = 6, seed: int = 42) -> dict:
    t0 = time.perf_counter()
    reports = [
        shift_conjugation(seed),
        shift_homomorphism(seed),
        shift_not_surjective(seed),
        free_centralizer(),
        free_conjugates_into(),
        normal_form_soundness(seed, n),
        rewriting_closure(),
        irreducible_not_identity(),
        cocone_sweep(max(n, 8)),
        horizontal_forward(seed, n),
        horizontal_converse(n),
        noys_sweep(seed, n),
        incoherence_shadow(seed),
        direct_family_incoherent(),
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "seed": seed,
        "ok": all(r.ok for r in reports),
        "reports": [r.to_dict() for r in reports],
        "elapsed": round(time.perf_counter() - t0, 3),
    }
