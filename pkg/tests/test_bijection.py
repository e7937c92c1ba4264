import pytest

from crossmap.arcs import (
    Arc,
    CLASSICAL,
    ENHANCED,
    arcs_classical,
    arcs_enhanced,
    distance_multiset,
)
from crossmap.bijection import forward, reverse, witness_forward, witness_reverse
from crossmap.crossings import (
    CROSSING,
    NESTING,
    CrossingWitness,
    count_k_witnesses,
    find_k_crossing,
    find_k_nesting,
    max_crossing_number,
    max_nesting_number,
    oracle_find,
)
from crossmap.errors import NotFull
from crossmap.partition import (
    PartialPartition,
    enumerate_full,
    enumerate_partial,
    from_blocks,
    parse_text,
)

PAPER_PI = "9:1,4,7,9/2,5/3/6"
PAPER_PI_HAT = "10:1,5/2,6,7,10/3,4,8/9"


class TestForward:
    def test_paper_worked_example(self):
        assert forward(parse_text(PAPER_PI)).to_text() == PAPER_PI_HAT

    def test_empty_maps_to_all_singletons(self):
        q = forward(parse_text("3:"))
        assert q.to_text() == "4:1/2/3/4"

    def test_singleton_rule(self):
        assert forward(parse_text("1:1")).to_text() == "2:1,2"

    def test_image_is_always_full(self):
        for p in enumerate_partial(6):
            q = forward(p)
            assert q.n == p.n + 1 and q.is_full


class TestReverse:
    def test_paper_worked_example(self):
        assert reverse(parse_text(PAPER_PI_HAT)).to_text() == PAPER_PI

    def test_all_singletons_maps_to_empty(self):
        q = from_blocks(5, [[e] for e in range(1, 6)])
        assert reverse(q).to_text() == "4:"

    def test_unit_block(self):
        assert reverse(parse_text("2:1,2")).to_text() == "1:1"

    def test_rejects_non_full(self):
        with pytest.raises(NotFull):
            reverse(PartialPartition(3, (1, 0, 1)))


class TestBijectivity:
    @pytest.mark.parametrize("n", range(7))
    def test_reverse_of_forward(self, n):
        for p in enumerate_partial(n):
            assert reverse(forward(p)) == p

    @pytest.mark.parametrize("n", range(7))
    def test_forward_of_reverse(self, n):
        for q in enumerate_full(n + 1):
            assert forward(reverse(q)) == q


class TestWitnessTransport:
    def test_witness_forward_example(self):
        w = CrossingWitness(CROSSING, ENHANCED, (Arc(1, 4), Arc(2, 5), Arc(4, 7)))
        assert witness_forward(w).arcs == (Arc(1, 5), Arc(2, 6), Arc(4, 8))

    def test_loop_becomes_unit_arc(self):
        w = CrossingWitness(CROSSING, ENHANCED, (Arc(3, 3),))
        assert witness_forward(w).arcs == (Arc(3, 4),)

    def test_nesting_transport_is_valid_in_image(self):
        p = parse_text("3:1,3/2")
        w = find_k_nesting(arcs_enhanced(p), 2)
        assert w.arcs == (Arc(1, 3), Arc(2, 2))
        image = witness_forward(w)
        assert image.arcs == (Arc(1, 4), Arc(2, 3))
        q_arcs = arcs_classical(forward(p))
        assert oracle_find(q_arcs, 2, NESTING, CLASSICAL).arcs == image.arcs

    def test_witness_reverse_inverts(self):
        w = CrossingWitness(CROSSING, ENHANCED, (Arc(1, 4), Arc(2, 5)))
        assert witness_reverse(witness_forward(w)) == w

    def test_transported_witnesses_are_witnesses(self):
        # every enhanced witness of p maps to a valid classical witness of forward(p)
        for p in enumerate_partial(5):
            a = arcs_enhanced(p)
            q_arcs = set(arcs_classical(forward(p)).arcs)
            for k in range(1, 4):
                for finder, kind in ((find_k_crossing, CROSSING), (find_k_nesting, NESTING)):
                    w = finder(a, k, ENHANCED)
                    if w is None:
                        continue
                    image = witness_forward(w)
                    assert set(image.arcs) <= q_arcs
                    from crossmap.crossings import _is_witness

                    assert _is_witness(image.arcs, kind, strict=True)


class TestStatisticTransport:
    @pytest.mark.parametrize("n", range(7))
    def test_counts_and_maxima(self, n):
        for p in enumerate_partial(n):
            a = arcs_enhanced(p)
            b = arcs_classical(forward(p))
            assert len(a) == len(b)
            assert max_crossing_number(a, ENHANCED) == max_crossing_number(b, CLASSICAL)
            assert max_nesting_number(a, ENHANCED) == max_nesting_number(b, CLASSICAL)
            for k in range(1, 5):
                for kind in (CROSSING, NESTING):
                    assert count_k_witnesses(a, k, kind, ENHANCED) == count_k_witnesses(
                        b, k, kind, CLASSICAL
                    )

    @pytest.mark.parametrize("n", range(7))
    def test_distance_shift(self, n):
        for p in enumerate_partial(n):
            shifted = [d + 1 for d in distance_multiset(arcs_enhanced(p))]
            assert shifted == distance_multiset(arcs_classical(forward(p)))
