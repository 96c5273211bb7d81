import pytest
from hypothesis import given, settings, strategies as st

from pbratteli.core import DiagramError, VertexId, vertex_to_hook
from pbratteli.diagram import (
    add_children,
    components,
    floor_cardinality,
    floor_edges,
    floor_vertices,
    projection,
    remove_children,
)


def cells(v):
    h = vertex_to_hook(v)
    return {(0, j) for j in range(h.arm)} | {(i, 0) for i in range(1, h.leg + 1)}


def test_floor_vertices_p3_floor4():
    fs = floor_vertices(3, 4)
    assert len(fs) == 10
    assert [len(fs.by_class(k)) for k in (2, 1, 0)] == [6, 3, 1]
    assert [v.class_k for v in fs][:6] == [2] * 6


def test_floor_one():
    fs = floor_vertices(3, 1)
    assert [(vertex_to_hook(v).size, vertex_to_hook(v).leg) for v in fs] == [(2, 0), (2, 1)]


def test_floor_ten_class_two():
    cls = floor_vertices(5, 10).by_class(2)
    assert len(cls) == 25
    assert {vertex_to_hook(v).size for v in cls} == {575}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_floor_cardinality(p):
    for f in range(1, 9):
        assert len(floor_vertices(p, f)) == floor_cardinality(p, f)


def test_add_children_examples():
    es = add_children(VertexId(3, 2, 0, 0))
    assert [e.upper.pos for e in es] == [0, 1, 2]
    assert [(e.block.horiz, e.block.vert) for e in es] == [(2, 0), (1, 1), (0, 2)]
    es = add_children(VertexId(3, 1, 0, 0))
    top = [e for e in es if e.upper.is_top]
    assert len(top) == 1 and top[0].block.is_empty and vertex_to_hook(top[0].upper).size == 2


def test_add_children_floor8():
    # the children of (8, 2, 1) on floor 9 are the positions p*l + t
    es = add_children(VertexId(5, 8, 2, 1))
    assert [e.upper.pos for e in es] == [5, 6, 7, 8, 9]
    for e in es:
        assert e.lower in [x.lower for x in remove_children(e.upper)]


def test_remove_children_examples():
    assert [e.lower.pos for e in remove_children(VertexId(5, 10, 2, 9))] == [9, 34, 59, 84, 109]
    assert [e.lower.pos for e in remove_children(VertexId(5, 9, 2, 34))] == [6]
    es = remove_children(VertexId(3, 2, 0, 0))
    assert [(e.lower.pos, e.block.horiz, e.block.vert) for e in es] == [(0, 0, 1), (1, 1, 0)]
    with pytest.raises(DiagramError):
        remove_children(VertexId(3, 1, 0, 0))


def test_projection():
    assert projection(3, 1, 4) == 1
    assert projection(5, 2, 34) == 6
    assert projection(7, 3, 0) == 0
    with pytest.raises(DiagramError):
        projection(5, 2, 125)


def test_components():
    assert [c.pos for c in components(VertexId(5, 10, 2, 9))] == [1, 6, 11, 16, 21]
    assert [c.pos for c in components(VertexId(3, 6, 1, 0))] == [0, 1, 2]
    assert [c.pos for c in components(VertexId(5, 8, 2, 24))] == [4, 9, 14, 19, 24]
    with pytest.raises(DiagramError):
        components(VertexId(3, 6, 0, 0))
    with pytest.raises(DiagramError):
        components(VertexId(3, 6, 3, 0))


@pytest.mark.parametrize("p,max_floor", [(3, 10), (5, 8), (7, 6)])
def test_edges_are_cell_differences(p, max_floor):
    for f in range(2, max_floor + 1):
        for e in floor_edges(p, f):
            U, L = cells(e.upper), cells(e.lower)
            assert L <= U
            diff = U - L
            assert len(diff) == e.block.size
            assert sum(1 for i, _ in diff if i == 0) == e.block.horiz


@pytest.mark.parametrize("p,max_floor", [(3, 10), (5, 8), (7, 6)])
def test_up_and_down_edges_agree(p, max_floor):
    for f in range(2, max_floor + 1):
        down = {(e.upper, e.lower, e.block) for e in floor_edges(p, f)}
        up = {(e.upper, e.lower, e.block) for v in floor_vertices(p, f - 1) for e in add_children(v)}
        assert down == up


@pytest.mark.parametrize("p", [3, 5])
def test_block_sizes_by_family(p):
    for f in range(2, 10):
        for e in floor_edges(p, f):
            u, r = e.upper, e.upper.r
            if u.is_even and u.is_top:
                want = 0
            elif u.is_even and u.class_k == r - 1:
                want = p ** (r - 1) * (p - 2)
            elif not u.is_even and u.is_top:
                want = p ** (r - 2) * (p - 1) ** 2
            else:
                want = p**u.class_k * (p - 1)
            assert e.block.size == want


@settings(max_examples=60)
@given(st.sampled_from([3, 5, 7]), st.integers(2, 9), st.data())
def test_every_vertex_above_floor_one_has_a_parent_below(p, f, data):
    vs = floor_vertices(p, f).vertices
    v = data.draw(st.sampled_from(vs))
    es = remove_children(v)
    assert es and all(e.lower.floor == f - 1 for e in es)
    assert all(e.block.idx == f - 1 for e in es)
