from collections import Counter
from itertools import product

import pytest

from conftest import coprime_pairs
from frozen import EXAMPLE_1_3, EXAMPLE_2_5, parse_table_entry
from lagconcord.dga_engine import (DGA, QUADRANT_SIGNS, Generator, build_dga, c0, c1,
                                   check_d_squared, dga_to_dict, enumerate_disks,
                                   external_generators, internal_dga)
from lagconcord.diagram_builder import build_diagram
from lagconcord.ncpoly import NCPoly


def P(text):
    return parse_table_entry(text)


# ---------------------------------------------------------------- internal

def test_internal_examples():
    G = internal_dga(3)
    assert G.d(c0(1, 3)) == NCPoly.monomial([c0(1, 2), c0(2, 3)])
    assert G.d(c0(1, 2)).is_zero()
    assert internal_dga(1).d(c1(1, 1)) == NCPoly.unit()


def test_internal_c1_formula():
    G = internal_dga(3)
    want = NCPoly({(0, ()): 1, (0, (c0(1, 2), c1(2, 1))): 1, (0, (c0(1, 3), c1(3, 1))): 1})
    assert G.d(c1(1, 1)) == want
    want = NCPoly({(0, (c0(1, 2), c1(2, 2))): 1, (0, (c0(1, 3), c1(3, 2))): 1,
                   (0, (c1(1, 1), c0(1, 2))): 1})
    assert G.d(c1(1, 2)) == want


def test_gradings():
    G = build_dga(build_diagram(2, 5))
    assert all(G.grading(x) == 0 for x in G.external())
    assert G.grading(c0(1, 4)) == -1 and G.grading(c1(4, 1)) == 1


@pytest.mark.parametrize("q", range(1, 13))
def test_internal_d_squared(q):
    assert check_d_squared(internal_dga(q)).ok


# ---------------------------------------------------------------- disks

def test_disks_for_a():
    disks = enumerate_disks(build_diagram(1, 3), "a")
    assert [d.word for d in disks] == [(c0(1, 2),)]


def test_disks_for_b3():
    disks = enumerate_disks(build_diagram(1, 3), "b3")
    assert sorted(d.word for d in disks) == sorted(
        [(c0(1, 3),), ("b2", c0(2, 3)), (c0(2, 3), "b1")])


def test_disks_for_b1_with_marked_point():
    disks = enumerate_disks(build_diagram(2, 5), "b1")
    assert sorted((d.t_power, d.word) for d in disks) == [(0, (c0(1, 2),)), (1, (c0(4, 5),))]


def test_every_disk_has_one_chord():
    for p, q in coprime_pairs(8):
        D = build_diagram(p, q)
        for x in external_generators(D):
            for disk in enumerate_disks(D, x):
                assert sum(1 for g in disk.word if g.startswith("c0_")) == 1
                assert disk.sign in (1, -1)


# ---------------------------------------------------------------- worked examples

@pytest.mark.parametrize("pq,table", [((1, 3), EXAMPLE_1_3), ((2, 5), EXAMPLE_2_5)])
def test_worked_examples_over_gf2(pq, table, dga_cache):
    G = dga_cache(*pq)
    assert G.external() == list(table)
    for name, text in table.items():
        assert G.d(name).mod2() == P(text), name


def test_one_three_signs():
    G = build_dga(build_diagram(1, 3))
    assert G.d("a") == P("c12")
    assert G.d("b1") == -P("c23")
    assert G.d("b2") == P("c23") - P("c12")


def test_one_two():
    G = build_dga(build_diagram(1, 2))
    assert G.d("a") == P("c12")
    assert G.d("b1") == -P("c12")


def test_printed_signs_are_not_consistent_over_z():
    G = build_dga(build_diagram(1, 3))
    printed = dict(G.differential)
    for name, text in EXAMPLE_1_3.items():
        printed[name] = P(text)
    H = DGA(3, G.generators, printed)
    dd = H.d_squared("b3")
    assert not dd.is_zero() and dd.mod2().is_zero()


# ---------------------------------------------------------------- d^2

@pytest.mark.parametrize("p,q", coprime_pairs(12))
def test_d_squared_over_z(p, q, dga_cache):
    rep = check_d_squared(dga_cache(p, q))
    assert rep.ok, sorted(rep.failures)


def test_flipped_sign_is_detected():
    G = build_dga(build_diagram(1, 3))
    broken = dict(G.differential)
    terms = G.d("a1").terms()
    c, tp, w = terms[0]
    broken["a1"] = G.d("a1") - NCPoly({(tp, w): 2 * c})
    rep = check_d_squared(DGA(3, G.generators, broken))
    assert "a1" in rep.failures and not rep.ok


def test_grading_violation_is_detected():
    G = build_dga(build_diagram(1, 2))
    broken = dict(G.differential)
    broken["a"] = NCPoly.gen("b1")
    rep = check_d_squared(DGA(2, G.generators, broken), ["a"])
    assert rep.grading_failures == ("a",)


def test_quadrant_sign_table_is_forced():
    # every uniform table of quadrant signs, checked on small diagrams
    passing = []
    for signs in product((1, -1), repeat=4):
        quad = dict(zip("NSEW", signs))
        ok = all(check_d_squared(build_dga(build_diagram(p, q), quad),
                                 external_generators(build_diagram(p, q))).ok
                 for p, q in coprime_pairs(6))
        if ok:
            passing.append(quad)
    neg = {k: -v for k, v in QUADRANT_SIGNS.items()}
    assert sorted(map(sorted, (d.items() for d in passing))) == \
        sorted(map(sorted, (QUADRANT_SIGNS.items(), neg.items())))


# ---------------------------------------------------------------- family laws

@pytest.mark.parametrize("p,q", coprime_pairs(12))
def test_family_laws(p, q, dga_cache):
    G = dga_cache(p, q)
    for x in G.external():
        for _, _, w in G.d(x).terms():
            assert sum(1 for g in w if g.startswith("c0_")) == 1
            assert not any(g.startswith("c1_") for g in w)
            assert G.word_grading(w) == -1
    assert G.d("a").mod2() == NCPoly.gen(c0(p, p + 1))
    assert G.d(f"b{p}").mod2() == NCPoly.gen(c0(q - p, q - p + 1))
    support = ["a"] + [f"b{i}" for i in range(1, q)]
    t_terms = [(x, w) for x in support for _, tp, w in G.d(x).terms() if tp]
    if p > 1:
        assert t_terms == [(f"b{p - 1}", (c0(q - p + 1, q - p + 2),))]
    else:
        assert t_terms == []
    chords = Counter(w for x in support for _, _, w in G.d(x).terms())
    assert all(len(w) == 1 for w in chords)
    assert chords == Counter({(c0(i, i + 1),): 2 for i in range(1, q)})


def test_dga_to_dict_is_stable():
    G = build_dga(build_diagram(1, 3))
    d = dga_to_dict(G, True)
    assert d["d_squared_ok"] is True
    assert d["differentials"]["a"] == [{"coeff": 1, "t_power": 0, "word": [c0(1, 2)]}]
    assert dga_to_dict(build_dga(build_diagram(1, 3)), True) == d


def test_generator_order():
    G = build_dga(build_diagram(2, 5))
    names = [g.name for g in G.generators]
    assert names[:6] == ["a", "a1", "a2", "a3", "a4", "a5"]
    assert names[6:16] == [f"b{i}" for i in range(1, 11)]
    assert isinstance(G.generators[0], Generator)
