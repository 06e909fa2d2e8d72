import itertools

import pytest

from covernum.combinat import ODD, Partition, class_size, factorial, partitions_of
from covernum.permengine import (
    CapExceeded,
    ConcreteGroup,
    Perm,
    abelianization_is_p_group,
    act_on_cosets,
    all_subgroups,
    alternating_group,
    block_stabilizer_group,
    close,
    cycle_text,
    derived_subgroup,
    enumerate_class,
    is_cyclic,
    is_cyclic_p_group,
    is_primary,
    is_solvable,
    iter_equal_blocks,
    load_corpus,
    maximal_subgroups,
    maximality_by_joins,
    parse_cycles,
    perm_rank,
    perm_unrank,
    preserved_partitions,
    primary_elements,
    set_stabilizer_group,
    symmetric_group,
)


def test_parse_cycles():
    p = parse_cycles("(1,2)", 3)
    assert p.images == (1, 0, 2)
    q = parse_cycles("(3,4,6,5)", 6)
    assert q.cycle_type() == Partition((4, 1, 1))
    assert q(0) == 0 and q(1) == 1
    assert parse_cycles("()", 4).is_identity()
    with pytest.raises(ValueError):
        parse_cycles("(1,2)(1,3)", 4)
    with pytest.raises(ValueError):
        parse_cycles("(1,9)", 4)
    with pytest.raises(ValueError):
        parse_cycles("(1)", 4)


def test_cycle_text_roundtrip():
    for text in ["(1,2,3)(4,5)", "(2,5,7,8,3,9,4,6)", "()"]:
        p = parse_cycles(text, 9)
        assert parse_cycles(cycle_text(p), 9) == p


def test_perm_algebra():
    p = parse_cycles("(1,2,3,4)(5,6)", 6)
    assert p.order() == 4
    assert parse_cycles("(1,2,3,4,5,6,7,8)", 8).sign() == ODD
    ident = Perm.identity(5)
    assert ident.cycle_type() == Partition((1, 1, 1, 1, 1))
    q = parse_cycles("(1,2)", 6)
    assert (p * q) * p.inverse() == p * (q * p.inverse())
    assert (p * p.inverse()).is_identity()
    r = p.conjugate_by(q)
    assert r.cycle_type() == p.cycle_type()
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    with pytest.raises(ValueError):
        parse_cycles("(1,2)", 3) * parse_cycles("(1,2)", 4)


def test_is_primary():
    assert is_primary(parse_cycles("(1,2,3,4)", 4))
    assert not is_primary(parse_cycles("(1,2,3)(4,5)", 5))
    assert is_primary(Perm.identity(3))
    assert is_primary(parse_cycles("(1,2,3)(4,5,6)", 6))


def test_perm_rank_unrank():
    for n in (1, 3, 5):
        seen = set()
        for p in itertools.permutations(range(n)):
            r = perm_rank(p)
            seen.add(r)
            assert perm_unrank(n, r).images == p
        assert seen == set(range(factorial(n)))


def test_enumerate_class_counts():
    assert len(list(enumerate_class(3, Partition((2, 1))))) == 3
    for n in range(1, 8):
        for lam in partitions_of(n):
            elems = list(enumerate_class(n, lam))
            assert len(elems) == class_size(lam)
            assert len(set(p.images for p in elems)) == len(elems)
            assert all(p.cycle_type() == lam for p in elems)
    with pytest.raises(CapExceeded):
        enumerate_class(10, Partition((4, 4, 2)), max_size=1000)


def test_enumerate_class_large_counts():
    assert sum(1 for _ in enumerate_class(10, Partition((4, 4, 2)))) == 56700
    assert sum(1 for _ in enumerate_class(10, Partition((5, 5)))) == 72576


@pytest.mark.parametrize("n", [8, 9, 10])
def test_enumerate_class_counts_cover_the_group(n):
    total = 0
    for lam in partitions_of(n):
        count = sum(1 for _ in enumerate_class(n, lam))
        assert count == class_size(lam), lam
        total += count
    assert total == factorial(n)


def test_close_basics():
    s3 = close([parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)])
    assert s3.order == 6
    p1 = close([parse_cycles("(3,4,6,5)", 6), parse_cycles("(1,2,3)(4,5,6)", 6)])
    assert p1.order == 120
    f20 = close([parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(2,3,5,4)", 5)])
    assert f20.order == 20
    with pytest.raises(CapExceeded):
        close([parse_cycles("(1,2)", 8), parse_cycles("(1,2,3,4,5,6,7,8)", 8)],
              cap=1000)


def test_close_idempotent():
    g = close([parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(2,3,5,4)", 5)])
    again = close(list(g.iter_perms())[:3] + list(g.generators), degree=5)
    assert again.elements <= g.elements
    full = close(list(g.generators), degree=5)
    assert full.elements == g.elements


def test_symmetric_and_alternating():
    for n in range(2, 7):
        assert symmetric_group(n).order == factorial(n)
        assert alternating_group(n).order == factorial(n) // 2 or n < 2
    a6 = alternating_group(6)
    regen = close(list(a6.generators), degree=6)
    assert regen.elements == a6.elements


def test_set_stabilizer_group():
    g = set_stabilizer_group(6, (1, 2))
    assert g.order == 2 * 24
    assert parse_cycles("(1,2)", 6) in g
    assert parse_cycles("(1,3)", 6) not in g
    regen = close(list(g.generators), degree=6)
    assert regen.elements == g.elements


def test_block_stabilizer_group():
    w = block_stabilizer_group(6, [(1, 2, 3), (4, 5, 6)])
    assert w.order == 6 * 6 * 2
    assert parse_cycles("(1,4)(2,5)(3,6)", 6) in w
    assert parse_cycles("(1,4)", 6) not in w
    assert len(list(iter_equal_blocks(6, 3))) == 10
    assert len(list(iter_equal_blocks(8, 4))) == 35


def test_preserved_partitions():
    eight = parse_cycles("(1,2,3,4,5,6,7,8)", 8)
    systems = preserved_partitions(eight.images, 4)
    assert len(systems) == 1
    (system,) = systems
    assert frozenset({0, 2, 4, 6}) in system
    # brute cross-check at degree 6, blocks of 2: count preserved systems
    g = parse_cycles("(1,2)(3,4)(5,6)", 6)
    found = preserved_partitions(g.images, 2)
    brute = 0
    for blocks in iter_equal_blocks(6, 2):
        blocks0 = [frozenset(p - 1 for p in b) for b in blocks]
        if all(frozenset(g.images[p] for p in b) in blocks0 for b in blocks0):
            brute += 1
    assert len(found) == brute == 7


def test_primary_elements():
    s3 = symmetric_group(3)
    assert len(primary_elements(s3)) == 6
    s5 = symmetric_group(5)
    assert len(primary_elements(s5)) == 120 - 20
    c6 = close([parse_cycles("(1,2,3,4,5,6)", 6)])
    assert len(primary_elements(c6)) == 4


def test_primary_elements_cycle_type_characterization():
    # prime-power order on S_n means all non-fixed cycle lengths are powers
    # of a single prime
    s6 = symmetric_group(6)
    prim = primary_elements(s6).members
    for t in s6.elements:
        parts = [l for l in Perm(t).cycle_type() if l > 1]
        expected = True
        if parts:
            primes = set()
            for l in parts:
                f = 2
                while f * f <= l:
                    if l % f == 0:
                        primes.add(f)
                        while l % f == 0:
                            l //= f
                    f += 1
                if l > 1:
                    primes.add(l)
            expected = len(primes) == 1
        assert (t in prim) == expected


def test_element_set_ranks():
    s3 = symmetric_group(3)
    es = primary_elements(s3)
    assert es.ranks() == tuple(range(6))


def test_derived_subgroup_matches_full_commutator_closure(corpus):
    for name in ("S4", "A4", "D12", "Q8", "F20", "S3xC3"):
        G = corpus[name]
        der = derived_subgroup(G)
        comms = [
            Perm(a) * Perm(b) * Perm(a).inverse() * Perm(b).inverse()
            for a in G.elements
            for b in G.elements
        ]
        full = close(comms, degree=G.degree, cap=G.order + 1)
        assert der.elements == full.elements


def test_abelianization():
    corpus = load_corpus()
    assert abelianization_is_p_group(corpus["S4"]) == ("yes", 2)
    assert abelianization_is_p_group(corpus["C6"]) == ("no", (2, 3))
    assert abelianization_is_p_group(corpus["D12"]) == ("yes", 2)
    assert abelianization_is_p_group(corpus["A4"]) == ("yes", 3)


def test_solvability_and_cyclic_flags(corpus):
    assert is_solvable(corpus["S4"])
    assert not is_solvable(corpus["S5"])
    assert not is_solvable(corpus["A5"])
    assert is_cyclic(corpus["C12"])
    assert not is_cyclic(corpus["V4"])
    assert is_cyclic_p_group(corpus["A3"])
    assert not is_cyclic_p_group(corpus["C6"])


def test_act_on_cosets(corpus):
    c12 = corpus["C12"]
    g = next(iter(c12.generators))
    n = close([g * g], degree=c12.degree, cap=100)  # index-2 subgroup
    q = act_on_cosets(c12, n.elements)
    assert q.order == 2
    s4 = corpus["S4"]
    v4 = close([parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
    q = act_on_cosets(s4, v4.elements)
    assert q.order == 6


def test_all_subgroups_small():
    s3 = symmetric_group(3)
    classes = all_subgroups(s3)
    assert [(c.order, c.count) for c in classes] == [(1, 1), (2, 3), (3, 1), (6, 1)]
    s4 = symmetric_group(4)
    classes4 = all_subgroups(s4)
    assert len(classes4) == 11
    assert sum(c.count for c in classes4) == 30
    c6 = close([parse_cycles("(1,2,3,4,5,6)", 6)])
    mx = maximal_subgroups(c6)
    assert sorted(m.group.order for m in mx) == [2, 3]


def test_all_subgroups_lagrange_and_counts():
    s5 = symmetric_group(5)
    classes = all_subgroups(s5)
    assert sum(c.count for c in classes) == 156
    assert [c.count for c in classes if c.order == 20] == [6]
    for c in classes:
        assert s5.order % c.order == 0
        for conj in c.conjugates:
            assert len(conj) == c.order


def test_maximal_subgroups_lattice_vs_catalog_s5(catalog):
    s5 = symmetric_group(5)
    lat = maximal_subgroups(s5, mode="lattice")
    cat = maximal_subgroups(s5, mode="catalog", catalog=catalog)
    assert len(lat) == 22
    assert {m.group.elements for m in lat} == {m.group.elements for m in cat}
    orders = sorted(m.group.order for m in lat)
    assert orders == [12] * 10 + [20] * 6 + [24] * 5 + [60]


def test_maximal_subgroups_lattice_vs_catalog_s6(catalog):
    s6 = symmetric_group(6)
    lat = maximal_subgroups(s6, mode="lattice")
    cat = maximal_subgroups(s6, mode="catalog", catalog=catalog)
    assert len(cat) == 53
    assert {m.group.elements for m in lat} == {m.group.elements for m in cat}


@pytest.mark.slow
def test_maximal_subgroups_lattice_vs_catalog_s7(catalog):
    s7 = symmetric_group(7)
    lat = maximal_subgroups(s7, mode="lattice")
    cat = maximal_subgroups(s7, mode="catalog", catalog=catalog)
    assert len(cat) == 184
    assert {m.group.elements for m in lat} == {m.group.elements for m in cat}


def test_lattice_maximality_property(corpus):
    # no maximal output contains another; every proper subgroup lies in one
    G = corpus["S4"]
    classes = all_subgroups(G)
    mx = maximal_subgroups(G, mode="lattice")
    mx_sets = [m.group.elements for m in mx]
    for a in mx_sets:
        for b in mx_sets:
            assert not (a < b)
    for cls in classes:
        if cls.order == G.order:
            continue
        for conj in cls.conjugates:
            assert any(conj <= m for m in mx_sets)


def test_degree8_catalog_maximality(catalog):
    s8 = ConcreteGroup(
        8,
        [parse_cycles("(1,2)", 8), parse_cycles("(1,2,3,4,5,6,7,8)", 8)],
        set(itertools.permutations(range(8))),
        name="S8",
    )
    entry = catalog.entries_for(8)[0]
    assert maximality_by_joins(catalog.group(entry), s8)


def test_family_members(catalog):
    from covernum.families import ALTERNATING, BLOCKSTAB, PRIMITIVE, SETSTAB, FamilySpec
    from covernum.permengine import family_members

    members = family_members(5, FamilySpec(SETSTAB, 5, m=1))
    assert len(members) == 5 and all(g.order == 24 for g in members)
    members = family_members(6, FamilySpec(BLOCKSTAB, 6, d=3))
    assert len(members) == 10 and all(g.order == 72 for g in members)
    members = family_members(6, FamilySpec(ALTERNATING, 6))
    assert len(members) == 1 and members[0].order == 360
    members = family_members(6, FamilySpec(PRIMITIVE, 6, catalog_id="PGL(2,5)"),
                             catalog=catalog)
    assert len(members) == 6 and all(g.order == 120 for g in members)
    with pytest.raises(CapExceeded):
        family_members(13, FamilySpec(SETSTAB, 13, m=1))
    with pytest.raises(KeyError):
        family_members(6, FamilySpec(PRIMITIVE, 6, catalog_id="nope"),
                       catalog=catalog)


def test_corpus_loads(corpus):
    assert len(corpus) >= 15
    expected_orders = {
        "C6": 6, "C12": 12, "S3": 6, "S4": 24, "A4": 12, "D8": 8, "D10": 10,
        "D12": 12, "Q8": 8, "F20": 20, "C3:C4": 12, "C5:C4": 20,
        "S3xC3": 18, "A4xC2": 24, "S6": 720,
    }
    for name, order in expected_orders.items():
        assert corpus[name].order == order
    assert all(G.order <= 720 for G in corpus.values())
    q8 = corpus["Q8"]
    assert sum(1 for t in q8.elements if Perm(t).order() == 2) == 1
