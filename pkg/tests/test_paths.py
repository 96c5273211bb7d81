import pytest
from hypothesis import given, settings, strategies as st

from pbratteli.core import DiagramError, VertexId, vertex_to_hook
from pbratteli.diagram import floor_vertices
from pbratteli.paths import (
    digit_domain,
    enumerate_paths,
    path_count,
    path_from_digits,
    replay_blocks,
)

from oracles import count_paths_up, downward_edge_map, block_sequences


def blocks(P):
    return [(b.horiz, b.vert) for b in P.blocks]


def test_digit_domain_examples():
    d = digit_domain(VertexId(5, 10, 2, 9))
    assert d.fixed == (4, 1) and d.free == ((0, 4), (0, 4), (0, 3))
    d = digit_domain(VertexId(3, 4, 0, 0))
    assert d.fixed == () and d.free == ((0, 2), (0, 1))
    assert digit_domain(VertexId(3, 2, 0, 0)).free == ((0, 1),)
    with pytest.raises(DiagramError):
        digit_domain(VertexId(3, 4, 2, 0))


def test_path_from_digits_examples():
    v = VertexId(3, 4, 0, 0)
    P = path_from_digits(v, (0, 0))
    assert blocks(P) == [(0, 1), (2, 0), (0, 2)]
    assert (vertex_to_hook(P.terminal).size, vertex_to_hook(P.terminal).leg) == (2, 0)
    assert blocks(path_from_digits(v, (2, 1))) == [(1, 0), (0, 2), (2, 0)]


def test_top_block_with_s1_uses_p_minus_2():
    # s = 1 on floor 6: the top block has p^k (p - 2) cells
    P = path_from_digits(VertexId(5, 6, 2, 5), (0,))
    assert (P.block(5).horiz, P.block(5).vert) == (0, 75)


def test_full_digit_vector_is_accepted():
    v = VertexId(5, 10, 2, 9)
    assert path_from_digits(v, (4, 1, 0, 0, 0)) == path_from_digits(v, (0, 0, 0))
    with pytest.raises(DiagramError):
        path_from_digits(v, (3, 1, 0, 0, 0))
    with pytest.raises(DiagramError):
        path_from_digits(v, (0, 0, 4))


@pytest.mark.parametrize("v,n", [((5, 10, 2, 9), 100), ((3, 4, 0, 0), 6), ((3, 2, 0, 0), 2)])
def test_counts(v, n):
    v = VertexId(*v)
    assert sum(1 for _ in enumerate_paths(v)) == n == path_count(v)


def test_end_leg_filter():
    v = VertexId(5, 10, 2, 9)
    got = list(enumerate_paths(v, end_leg=2))
    assert len(got) == path_count(v, end_leg=2) == 25
    assert all(P.digits[-1] == 2 for P in got)


def test_enumeration_is_lexicographic():
    v = VertexId(3, 8, 1, 2)
    ds = [P.digits for P in enumerate_paths(v)]
    assert ds == sorted(ds) and len(set(ds)) == len(ds)


@pytest.mark.parametrize("p,max_floor", [(3, 10), (5, 8)])
def test_count_matches_upward_dp(p, max_floor):
    # a downward path from v is the reverse of an upward path into v
    up = count_paths_up(p, max_floor)
    for f in range(2, max_floor + 1, 2):
        for v in floor_vertices(p, f):
            if not v.is_top:
                assert up[v] == path_count(v)


@pytest.mark.parametrize("p,max_floor", [(3, 8), (5, 6)])
def test_blocks_match_upward_rules(p, max_floor):
    below = downward_edge_map(p, max_floor)
    for f in range(2, max_floor + 1, 2):
        for v in floor_vertices(p, f):
            if v.is_top:
                continue
            ours = sorted(tuple(blocks(P)) for P in enumerate_paths(v))
            theirs = sorted(block_sequences(v, below))
            assert ours == theirs


@pytest.mark.parametrize("p,max_floor", [(3, 10), (5, 8)])
def test_block_digit_laws(p, max_floor):
    for f in range(2, max_floor + 1, 2):
        for v in floor_vertices(p, f):
            if v.is_top:
                continue
            k, r = v.class_k, v.r
            for P in enumerate_paths(v):
                assert replay_blocks(P)
                for j in range(k + 1, r):
                    assert P.block(2 * j + 1).horiz == p**k * P.digits[k + r - j - 1]
                assert P.block(2 * k + 1).horiz == p**k * P.digits[r - 1]
                assert P.block(2 * k + 1).size == p**k * (p - 2)
                for j in range(1, k + 1):
                    assert P.block(2 * j - 1).is_empty
                    assert P.block(2 * j).size == p ** (j - 1) * (p - 1) ** 2
                for i in range(2 * k + 2, 2 * r):
                    assert P.block(i).size == p**k * (p - 1)


def test_even_block_vertical_counts():
    # n_{2j} = (p-1) * pos_below + t for the digit chosen one floor lower
    p = 5
    for v in floor_vertices(p, 8):
        if v.is_top:
            continue
        for P in enumerate_paths(v):
            for i in range(2, 2 * v.r, 2):
                odd = P.vertices[len(P.blocks) - i]
                below = P.vertices[len(P.blocks) - i + 1]
                assert P.block(i).vert == (p - 1) * below.pos + odd.pos % p


@settings(max_examples=80)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 5), st.data())
def test_random_path_reconstructs(p, r, data):
    k = data.draw(st.integers(0, r - 1))
    v = VertexId(p, 2 * r, k, data.draw(st.integers(0, p**k - 1)))
    dom = digit_domain(v)
    free = tuple(data.draw(st.integers(lo, hi)) for lo, hi in dom.free)
    P = path_from_digits(v, free)
    assert replay_blocks(P)
    assert sum(b.size for b in P.blocks) == vertex_to_hook(v).size - (p - 1)
