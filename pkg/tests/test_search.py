import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from engine_cases import (SMALL_CASES, brute_force, check_witness,
                          engines_agree, run_counting)
from invmds.gf2m import ANUBIS_POLY, AES_POLY, make_field
from invmds.matgf import (MatrixGF, conjugate, is_involutory, is_mds,
                          transpose)
from invmds.search import (INCONCLUSIVE, NONE_FOUND, WITNESS_FOUND,
                           SearchTask, SymbolPattern, canonical_pattern,
                           circulant, claim_filters, count_order2_family,
                           enumerate_patterns, hadamard, is_order2_form,
                           order2_form_violations, relabel, search,
                           verify_order1, verify_order2)

GF4, GF8, GF16 = make_field(2), make_field(3), make_field(4)


def _patterns_oracle(n, k):
    """All k^(n^2) maps, keep the surjective ones, canonicalise labels."""
    out = set()
    for cells in product(range(k), repeat=n * n):
        if len(set(cells)) == k:
            out.add(relabel(cells))
    return out


@pytest.mark.parametrize("n, k, expected", [(1, 1, 1), (2, 2, 7), (3, 2, 255),
                                            (2, 3, 6), (2, 4, 1), (3, 3, 3025)])
def test_enumerate_patterns_counts(n, k, expected):
    got = [p.cells for p in enumerate_patterns(n, k)]
    assert len(got) == len(set(got)) == expected
    if k ** (n * n) <= 20000:
        assert set(got) == _patterns_oracle(n, k)


def test_enumerate_patterns_rejects_bad_k():
    with pytest.raises(ValueError):
        list(enumerate_patterns(2, 5))
    with pytest.raises(ValueError):
        list(enumerate_patterns(2, 0))


def test_symbol_pattern_requires_canonical_labels():
    with pytest.raises(ValueError):
        SymbolPattern(2, (1, 0, 0, 0))
    p = SymbolPattern(3, (0, 0, 1, 0, 1, 0, 1, 0, 0))
    assert p.k == 2 and str(p) == "a a b; a b a; b a a"


def _orbit_min_via_matrices(p):
    # independent route: treat symbols as field values, act with matgf ops
    f = make_field(4)
    A = MatrixGF(f, [[s + 1 for s in r] for r in p.rows()])
    from itertools import permutations
    images = []
    for P in permutations(range(p.n)):
        C = conjugate(A, P)
        for B in (C, transpose(C)):
            images.append(relabel(tuple(a for r in B.rows for a in r)))
    return min(images)


patterns4 = st.lists(st.integers(0, 3), min_size=16, max_size=16).map(
    lambda cells: SymbolPattern(4, relabel(cells)))


@given(patterns4)
def test_canonical_pattern_properties(p):
    c = canonical_pattern(p)
    assert canonical_pattern(c) == c
    assert c.cells == _orbit_min_via_matrices(p)
    swapped = SymbolPattern(4, relabel(tuple(
        p.cells[(1, 0, 2, 3)[i] * 4 + (1, 0, 2, 3)[j]] for i in range(4) for j in range(4))))
    assert canonical_pattern(swapped) == c
    transposed = SymbolPattern(4, relabel(tuple(p.cells[j * 4 + i] for i in range(4) for j in range(4))))
    assert canonical_pattern(transposed) == c


def test_canonical_pattern_fixed_point():
    p = SymbolPattern(4, (0,) * 16)
    assert canonical_pattern(p) == p


def test_canonical_pattern_spot_check():
    rng = random.Random(11)
    p = SymbolPattern(4, relabel(tuple(rng.randrange(3) for _ in range(16))))
    q = SymbolPattern(4, relabel(tuple(p.cells[(1, 0, 2, 3)[i] * 4 + (1, 0, 2, 3)[j]]
                                       for i in range(4) for j in range(4))))
    assert canonical_pattern(p) == canonical_pattern(q)


# -- search examples --------------------------------------------------------

def test_order3_two_values_involutory_none():
    r = search(SearchTask(field=GF8, n=3, k=2))
    assert r.outcome == NONE_FOUND and not r.witnesses


def test_order3_two_values_plain_witness():
    r = search(SearchTask(field=GF8, n=3, k=2, mode="plain", require_exact_k=True))
    assert r.outcome == WITNESS_FOUND
    for A in r.witnesses:
        assert is_mds(A) and len(set(A.entries())) == 2


@pytest.mark.parametrize("engine", ["pattern", "direct"])
def test_order4_three_values_involutory_none(engine):
    r = search(SearchTask(field=GF8, n=4, k=3, engine=engine))
    assert r.outcome == NONE_FOUND


def test_anubis_hadamard_witness():
    f = make_field(8, ANUBIS_POLY)
    r = search(SearchTask(field=f, n=4, k=4, shape="hadamard", require_exact_k=True,
                          max_witnesses=1))
    assert r.outcome == WITNESS_FOUND
    assert r.witnesses[0] == hadamard(f, (1, 2, 4, 6))


def test_hadamard_and_circulant_builders():
    f = make_field(8, AES_POLY)
    A = circulant(f, (2, 3, 1, 1))
    assert A.rows[1] == (1, 2, 3, 1)
    assert is_mds(A) and not is_involutory(A)
    H = hadamard(f, (1, 2, 4, 6))
    assert H.rows[3] == (6, 4, 2, 1)
    with pytest.raises(ValueError):
        SearchTask(field=GF8, n=3, k=3, shape="hadamard")


def test_shape_engines_agree():
    for shape, mode, k in (("hadamard", "involutory", 4), ("circulant", "plain", 3),
                           ("circulant", "involutory", 4)):
        a = search(SearchTask(field=GF16, n=4, k=k, shape=shape, mode=mode, count=True,
                              max_witnesses=None, engine="pattern"))
        b = search(SearchTask(field=GF16, n=4, k=k, shape=shape, mode=mode, count=True,
                              max_witnesses=None, engine="direct"))
        assert a.count == b.count
        assert {A.rows for A in a.witnesses} == {A.rows for A in b.witnesses}


def test_hadamard_count_matches_direct_enumeration():
    # oracle: every ordered 4-tuple of distinct nonzero values
    count = 0
    for h in product(GF8.nonzero(), repeat=4):
        if len(set(h)) == 4:
            H = hadamard(GF8, h)
            count += is_involutory(H) and is_mds(H)
    r = search(SearchTask(field=GF8, n=4, k=4, shape="hadamard", count=True))
    assert r.count == count > 0


# -- cross-checks -----------------------------------------------------------

@pytest.mark.parametrize("case", SMALL_CASES, ids=lambda c: "-".join(map(str, c)))
def test_engine_equivalence(case):
    ok, a, b = engines_agree(*case)
    assert ok, (a[:2], b[:2])
    assert a[1] == len(a[2])


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)])
@pytest.mark.parametrize("mode", ["involutory", "plain"])
def test_engines_match_brute_force(m, n, mode):
    for k in (1, 2, 3):
        if k > n * n:
            continue
        assert run_counting(m, n, k, mode, "pattern")[2] == brute_force(m, n, k, mode)


SUITE_TASKS = [
    dict(field=GF4, n=3, k=2), dict(field=GF8, n=3, k=2), dict(field=GF16, n=3, k=2),
    dict(field=GF8, n=3, k=2, mode="plain"),
    dict(field=GF8, n=3, k=3, require_exact_k=True),
    dict(field=GF8, n=4, k=3),
]


@pytest.mark.parametrize("kw", SUITE_TASKS)
@pytest.mark.parametrize("engine", ["pattern", "direct"])
def test_symmetry_reduction_preserves_existence(kw, engine):
    on = search(SearchTask(engine=engine, symmetry=True, max_witnesses=1, **kw))
    off = search(SearchTask(engine=engine, symmetry=False, max_witnesses=1, **kw))
    assert on.outcome == off.outcome
    assert on.outcome in (WITNESS_FOUND, NONE_FOUND)


@pytest.mark.parametrize("kw", SUITE_TASKS)
@pytest.mark.parametrize("engine", ["pattern", "direct"])
def test_every_witness_rechecks(kw, engine):
    r = search(SearchTask(engine=engine, max_witnesses=None, symmetry=False, count=True, **kw))
    for A in r.witnesses:
        assert check_witness(A, kw["k"], kw.get("mode", "involutory"))
    assert r.stats["filter_rejected_verified"] == 0


@pytest.mark.parametrize("engine", ["pattern", "direct"])
def test_claim_filters_do_not_change_order4_outcome(engine):
    plain = search(SearchTask(field=GF8, n=4, k=3, engine=engine))
    pruned = search(SearchTask(field=GF8, n=4, k=3, engine=engine, claim_filters=True))
    assert plain.outcome == pruned.outcome == NONE_FOUND
    assert any("claim filters" in note for note in pruned.notes)
    if engine == "direct":
        assert pruned.stats["filter_pruned"] > 0
        assert pruned.nodes_explored < plain.nodes_explored


def test_claim_filters_examples():
    a, b, c = 2, 3, 5
    # first row (b a a a): claim 1 fails
    A = MatrixGF(GF8, [[b, a, a, a], [a, b, c, a], [c, a, b, c], [a, c, a, b]])
    assert not claim_filters(A).claim1 and claim_filters(A).applicable
    # rows and columns each hold a, b, c with off-diagonal entries all distinct
    B = MatrixGF(GF8, [[a, a, b, c], [a, a, c, b], [b, c, a, a], [c, b, a, a]])
    res = claim_filters(B)
    assert res.claim1 and res.claim2 and res.claim3
    # a row missing c
    C = MatrixGF(GF8, [[a, a, b, b], [a, b, c, a], [c, a, b, c], [b, c, a, b]])
    assert not claim_filters(C).claim2
    # outside the hypothesis the filters are vacuous
    res = claim_filters(hadamard(GF8, (1, 2, 4, 6)))
    assert res.all() and not res.applicable


def test_claim_filters_reject_task_combinations():
    with pytest.raises(ValueError):
        SearchTask(field=GF8, n=4, k=3, mode="plain", claim_filters=True)


# -- order 1 and 2 ----------------------------------------------------------

@pytest.mark.parametrize("m", [1, 3, 8, 12])
def test_verify_order1(m):
    r = verify_order1(make_field(m))
    assert r.outcome == "holds"
    assert [A.rows for A in r.witnesses] == [((1,),)]


def _order2_oracle(f):
    count = 0
    for vals in product(f.elements(), repeat=4):
        if len(set(vals)) != 2:
            continue
        A = MatrixGF(f, [vals[:2], vals[2:]])
        count += is_involutory(A) and is_mds(A)
    return count


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_order2_count_against_brute_force(m):
    f = make_field(m)
    assert count_order2_family(f) == _order2_oracle(f)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_order2_family_structure(m):
    f = make_field(m)
    q = f.order
    # the (a, a+1; a+1, a) members number exactly 2^m - 2 ...
    symmetric = [a for a in range(q) if is_order2_form(MatrixGF(f, [[a, a ^ 1], [a ^ 1, a]]))]
    assert len(symmetric) == q - 2
    # ... but (a, a; a + 1/a, a) and its transpose are further members
    extra = order2_form_violations(f)
    assert len(extra) == 2 * (q - 2)
    for a in range(2, q):
        A = MatrixGF(f, [[a, a], [a ^ f.inv(a), a]])
        assert is_involutory(A) and is_mds(A) and len(set(A.entries())) == 2
        assert A in extra and transpose(A) in extra
    assert count_order2_family(f) == 3 * (q - 2)


def test_order2_claim_report_refuted_with_witnesses():
    r = verify_order2(GF4)
    assert r.outcome == "refuted" and r.status == "fail"
    assert r.witnesses and not any(is_order2_form(A) for A in r.witnesses)


# -- budgets ----------------------------------------------------------------

def test_node_budget_gives_inconclusive():
    r = search(SearchTask(field=GF8, n=4, k=3, budget_nodes=1))
    assert r.outcome == INCONCLUSIVE and r.count is None
    assert any("budget" in note for note in r.notes)


def test_time_budget_gives_inconclusive():
    r = search(SearchTask(field=GF16, n=4, k=3, engine="direct", budget_seconds=0.01))
    assert r.outcome == INCONCLUSIVE


def test_witness_cap():
    r = search(SearchTask(field=GF8, n=2, k=2, max_witnesses=3))
    assert r.outcome == WITNESS_FOUND and len(r.witnesses) == 3


def test_reports_are_deterministic():
    a = search(SearchTask(field=GF8, n=3, k=3, require_exact_k=True, engine="direct"))
    b = search(SearchTask(field=GF8, n=3, k=3, require_exact_k=True, engine="direct"))
    assert a.witnesses == b.witnesses and a.nodes_explored == b.nodes_explored


def test_task_validation():
    for bad in (dict(n=0, k=1), dict(n=9, k=1), dict(n=2, k=5), dict(n=2, k=1, mode="x"),
                dict(n=2, k=1, engine="x"), dict(n=2, k=1, shape="x")):
        with pytest.raises(ValueError):
            SearchTask(field=GF8, **bad)
    with pytest.raises(ValueError):
        SearchTask(field=make_field(9), n=2, k=2)
