import pytest
from hypothesis import given, settings

from conftest import complexes, cx
from icmkit.betti import (
    IDEAL,
    BettiTable,
    extremal_betti_count,
    extremal_entries,
    hochster_betti,
    invariants_from_table,
)
from icmkit.complex import alexander_dual, h_degree, h_polynomial, generator_degrees, simplex, void_complex
from icmkit.errors import EnumerationLimitError, IcmkitError, VoidComplexError
from icmkit.graphs import cycle_graph, independence_complex, path_graph
from icmkit.homology import FieldSpec
from icmkit.invariants import depth, is_cohen_macaulay, regularity_of_ideal


def test_two_points():
    t = hochster_betti(cx(2, "1", "2"))
    assert t.entries == {(0, 0): 1, (1, 2): 1}
    assert invariants_from_table(t) == {"pdim": 1, "reg": 1}
    ideal = t.to_ideal()
    assert ideal.entries == {(0, 2): 1}
    assert invariants_from_table(ideal) == {"pdim": 0, "reg": 2, "deg": 2}
    assert extremal_betti_count(t) == 1


def test_simplex():
    t = hochster_betti(simplex(4))
    assert t.entries == {(0, 0): 1}
    assert invariants_from_table(t) == {"pdim": 0, "reg": 0}


def test_path_three():
    t = hochster_betti(independence_complex(path_graph(3)))
    assert t.pdim == 2 == 3 - depth(independence_complex(path_graph(3)))


def test_cycle_seven_extremal_positions(c7_independence):
    t = hochster_betti(c7_independence)
    assert t.pdim == 5 and t.reg == 2
    assert t.total == {0: 1, 1: 7, 2: 14, 3: 14, 4: 7, 5: 1}
    assert extremal_entries(t) == [(5, 7)]
    assert t[(5, 7)] == 1
    # single corner: pdim + reg = deg h + ht
    h = h_polynomial(c7_independence)
    assert t.pdim + t.reg == h_degree(h) + (7 - 3)


def test_known_edge_ideal_of_c5():
    # K[x]/I(C_5): Betti numbers 1, 5, 5, 1 in degrees 0, 2, 3, 5
    t = hochster_betti(independence_complex(cycle_graph(5)))
    assert t.entries == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}


def test_ghost_vertex_contributes_linear_generator():
    t = hochster_betti(cx(3, "12"))
    assert t.entries == {(0, 0): 1, (1, 1): 1}


def test_errors():
    with pytest.raises(VoidComplexError):
        hochster_betti(void_complex(2))
    with pytest.raises(EnumerationLimitError):
        hochster_betti(simplex(5), limit=4)
    with pytest.raises(IcmkitError):
        invariants_from_table(BettiTable({}, 0))


def test_render_grid():
    text = hochster_betti(independence_complex(cycle_graph(5))).render()
    assert text.splitlines()[1].split(":")[1].split() == ["1", "5", "5", "1"]


@settings(max_examples=120, deadline=None)
@given(complexes(nmax=6))
def test_table_shape(c):
    t = hochster_betti(c)
    assert t[(0, 0)] == 1
    assert [k for k in t.entries if k[0] == 0] == [(0, 0)]
    assert all(b > 0 for b in t.entries.values())


@settings(max_examples=120, deadline=None)
@given(complexes(nmax=6))
def test_terai_and_eagon_reiner(c):
    degs = generator_degrees(c)
    if degs is None:
        return
    ideal = hochster_betti(c).to_ideal()
    assert ideal.subject == IDEAL
    inv = invariants_from_table(ideal)
    assert inv["deg"] == degs[1]
    assert inv["reg"] == regularity_of_ideal(c) == c.n - depth(alexander_dual(c))
    single = len(ideal.diagonals()) == 1
    assert single == (degs[0] == degs[1] and is_cohen_macaulay(alexander_dual(c)))


@settings(max_examples=60, deadline=None)
@given(complexes(nmax=6))
def test_cm_tables_have_one_extremal_entry(c):
    if is_cohen_macaulay(c):
        assert extremal_betti_count(hochster_betti(c)) == 1


def test_field_sensitivity_of_tables():
    from test_homology import RP2

    q = hochster_betti(RP2)
    f2 = hochster_betti(RP2, FieldSpec(2))
    assert q != f2
    assert f2.pdim == 4 and q.pdim == 3


def _extremal_rhs(c):
    from icmkit.complex import skeleton

    s = skeleton(c, int(c.indim))
    t = hochster_betti(s)
    return extremal_betti_count(t) == 1 and t.reg == h_degree(h_polynomial(s))


def test_unique_extremal_criterion_exhaustive():
    from icmkit.complex import SimplicialComplex, default_labels
    from icmkit.invariants import is_icm
    from test_connectivity import antichains

    non_icm = 0
    for n in range(1, 6):
        for facets in antichains(n):
            c = SimplicialComplex(default_labels(n), facets)
            icm = is_icm(c)
            non_icm += not icm
            assert icm == _extremal_rhs(c), c
    assert non_icm > 100


@settings(max_examples=150, deadline=None)
@given(complexes(nmax=7))
def test_unique_extremal_criterion_random(c):
    from icmkit.invariants import is_icm

    assert is_icm(c) == _extremal_rhs(c)
