#!/usr/bin/env python3
"""
图核心 (Graph / BFS / 距离分布) 单元测试 (pytest)
"""

import sys
import os
import pytest
import networkx as nx
from hypothesis import given, settings, strategies as st

# 添加项目根目录到 Python 路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from mycielski_hosoya.errors import GraphError
from mycielski_hosoya.graph import (
    UNREACHABLE, Graph, DistanceDistribution,
    from_edge_list, bfs_distances, all_pairs_distances,
    distance_distribution, diameter, is_connected,
    delete_vertex, induced_subgraph, degree, has_isolated_vertex,
)
from mycielski_hosoya.constructions import cycle, path, complete, empty

from strategies import graphs, connected_graphs, to_networkx


@pytest.fixture
def p2():
    """P_2 = v1 v2 v3"""
    return from_edge_list(3, [(1, 2), (2, 3)])


@pytest.fixture
def two_edges():
    """4 个顶点上的两条不相交边"""
    return from_edge_list(4, [(1, 2), (3, 4)])


# ============================================================
# 构造测试
# ============================================================

class TestFromEdgeList:
    """from_edge_list 测试"""

    def test_path_as_drawn(self, p2):
        """测试 P_2 的顶点和边"""
        assert p2.vertex_count == 3
        assert p2.edges == frozenset({(1, 2), (2, 3)})
        assert p2.neighbors(2) == (1, 3)

    def test_single_vertex(self):
        """测试单顶点图"""
        g = from_edge_list(1, [])
        assert g.vertex_count == 1
        assert g.edge_count == 0

    def test_order_insensitive(self):
        """测试边顺序和端点顺序无关"""
        a = from_edge_list(3, [(1, 2), (2, 3)])
        b = from_edge_list(3, [(3, 2), (2, 1)])
        assert a == b

    def test_duplicate_edge(self):
        """测试规范化后的重复边"""
        with pytest.raises(GraphError, match="duplicate"):
            from_edge_list(3, [(1, 2), (2, 1)])

    def test_self_loop(self):
        """测试自环"""
        with pytest.raises(GraphError, match="self-loop"):
            from_edge_list(3, [(2, 2)])

    def test_out_of_range(self):
        """测试越界端点"""
        with pytest.raises(GraphError, match="out of range"):
            from_edge_list(3, [(1, 4)])

    def test_non_positive_vertex_count(self):
        """测试顶点数必须为正"""
        with pytest.raises(GraphError):
            from_edge_list(0, [])

    def test_adjacency_consistent_with_edges(self):
        """测试邻接表与边集一致"""
        g = cycle(5)
        for u in g.vertices:
            for v in g.neighbors(u):
                assert u in g.neighbors(v)
                assert g.has_edge(u, v)

    def test_unnormalized_edge_rejected(self):
        """测试 Graph 直接构造时要求 i < j"""
        with pytest.raises(GraphError):
            Graph(3, frozenset({(2, 1)}))


# ============================================================
# BFS 测试
# ============================================================

class TestBfsDistances:
    """bfs_distances 测试"""

    def test_path(self, p2):
        """测试路径上的距离"""
        assert bfs_distances(p2, 1) == [0, 1, 2]

    def test_cycle_profile(self):
        """测试 C_5 上每个顶点有两个距离 1 和两个距离 2"""
        g = cycle(5)
        for v in g.vertices:
            distances = bfs_distances(g, v)
            assert sorted(distances) == [0, 1, 1, 2, 2]

    def test_disconnected(self, two_edges):
        """测试不可达顶点标记为 UNREACHABLE"""
        assert bfs_distances(two_edges, 1) == [0, 1, UNREACHABLE, UNREACHABLE]

    def test_unreachable_is_not_a_number(self):
        """测试 UNREACHABLE 不是数字"""
        assert not isinstance(UNREACHABLE, int)
        with pytest.raises(TypeError):
            UNREACHABLE + 1

    def test_out_of_range_source(self, p2):
        """测试越界源点"""
        with pytest.raises(GraphError):
            bfs_distances(p2, 4)
        with pytest.raises(GraphError):
            bfs_distances(p2, 0)

    def test_all_pairs_symmetric(self):
        """测试所有顶点对距离对称"""
        rows = all_pairs_distances(path(4))
        for i in range(5):
            for j in range(5):
                assert rows[i][j] == rows[j][i]

    @settings(max_examples=50)
    @given(graphs())
    def test_matches_networkx(self, g):
        """测试与 networkx 最短路长度一致"""
        nxg = to_networkx(g)
        for source in g.vertices:
            expected = nx.single_source_shortest_path_length(nxg, source)
            distances = bfs_distances(g, source)
            for v in g.vertices:
                assert distances[v - 1] == expected.get(v, UNREACHABLE)

    @settings(max_examples=50)
    @given(graphs())
    def test_adjacent_vertices_differ_by_at_most_one(self, g):
        """测试相邻顶点的距离相差不超过 1"""
        for source in g.vertices:
            distances = bfs_distances(g, source)
            for i, j in g.edges:
                a, b = distances[i - 1], distances[j - 1]
                if a is UNREACHABLE or b is UNREACHABLE:
                    assert a is b
                else:
                    assert abs(a - b) <= 1


# ============================================================
# 距离分布测试
# ============================================================

class TestDistanceDistribution:
    """distance_distribution 测试"""

    def test_path(self, p2):
        """测试 P_2"""
        dist = distance_distribution(p2)
        assert dist.counts == (2, 1)
        assert dist.unreachable_pairs == 0

    def test_cycle(self):
        """测试 C_5"""
        dist = distance_distribution(cycle(5))
        assert dist.counts == (5, 5)
        assert dist.unreachable_pairs == 0

    def test_disconnected(self, two_edges):
        """测试跨分量顶点对不可达"""
        dist = distance_distribution(two_edges)
        assert dist.counts == (2,)
        assert dist.unreachable_pairs == 4

    def test_single_vertex(self):
        """测试单顶点图分布为空"""
        dist = distance_distribution(complete(1))
        assert dist.counts == ()
        assert dist.unreachable_pairs == 0
        assert dist.max_distance == 0

    def test_count_beyond_diameter(self, p2):
        """测试超出最大距离的 a_k 为 0"""
        assert distance_distribution(p2).count(7) == 0

    def test_invalid_total_rejected(self):
        """测试总数不等于 n(n-1)/2 时报错"""
        with pytest.raises(GraphError):
            DistanceDistribution((2,), 0, 3)

    def test_trailing_zero_rejected(self):
        """测试末项为 0 时报错"""
        with pytest.raises(GraphError):
            DistanceDistribution((3, 0), 0, 3)

    @settings(max_examples=50)
    @given(graphs())
    def test_pair_conservation(self, g):
        """测试各距离对数加不可达对数等于 n(n-1)/2，且不可达为 0 当且仅当连通"""
        dist = distance_distribution(g)
        n = g.vertex_count
        assert dist.pair_count == n * (n - 1) // 2
        assert sum(dist.counts) + dist.unreachable_pairs == dist.pair_count
        assert dist.count(1) == g.edge_count
        if n >= 2:
            assert (dist.unreachable_pairs == 0) == is_connected(g)


# ============================================================
# 直径与连通性测试
# ============================================================

class TestDiameter:
    """diameter / is_connected 测试"""

    def test_path(self, p2):
        """测试 P_2 直径为 2"""
        assert diameter(p2) == 2

    def test_single_vertex(self):
        """测试单顶点图直径为 0"""
        assert diameter(complete(1)) == 0

    def test_disconnected(self, two_edges):
        """测试不连通图直径为 UNREACHABLE"""
        assert diameter(two_edges) is UNREACHABLE
        assert not is_connected(two_edges)

    def test_complete(self):
        """测试完全图直径为 1"""
        assert diameter(complete(5)) == 1
        assert is_connected(complete(5))

    @settings(max_examples=50)
    @given(connected_graphs())
    def test_matches_networkx(self, g):
        """测试与 networkx 直径一致"""
        assert diameter(g) == nx.diameter(to_networkx(g))


# ============================================================
# 子图测试
# ============================================================

class TestSubgraphs:
    """delete_vertex / induced_subgraph / degree 测试"""

    def test_delete_middle_of_path(self, p2):
        """测试删除中间顶点后剩下两个孤立顶点"""
        g = delete_vertex(p2, 2)
        assert g.vertex_count == 2
        assert g.edge_count == 0

    def test_delete_endpoint_relabels(self, p2):
        """测试删除端点后顶点保序重编号"""
        g = delete_vertex(p2, 1)
        assert g == from_edge_list(2, [(1, 2)])

    def test_delete_cycle_vertex_gives_path(self):
        """测试 C_5 删点得到 4 顶点路径"""
        g = delete_vertex(cycle(5), 3)
        assert nx.is_isomorphic(to_networkx(g), nx.path_graph(4))

    def test_delete_only_vertex(self):
        """测试不能删除唯一顶点"""
        with pytest.raises(GraphError):
            delete_vertex(complete(1), 1)

    def test_delete_out_of_range(self, p2):
        """测试越界删点"""
        with pytest.raises(GraphError):
            delete_vertex(p2, 5)

    def test_induced_subgraph(self):
        """测试诱导子图重编号"""
        g = induced_subgraph(cycle(5), [2, 3, 4])
        assert g == from_edge_list(3, [(1, 2), (2, 3)])

    def test_induced_subgraph_empty(self):
        """测试空顶点集报错"""
        with pytest.raises(GraphError):
            induced_subgraph(cycle(5), [])

    def test_degree_and_isolated(self, p2):
        """测试度数和孤立顶点"""
        assert degree(p2, 2) == 2
        assert degree(p2, 1) == 1
        assert not has_isolated_vertex(p2)
        assert has_isolated_vertex(empty(2))

    @settings(max_examples=60)
    @given(st.data())
    def test_delete_vertex_never_shortens_distances(self, data):
        """测试 G - k 中可达且距离为 d 的顶点对在 G 中距离不超过 d"""
        g = data.draw(graphs(min_n=2))
        k = data.draw(st.integers(min_value=1, max_value=g.vertex_count))
        reduced = delete_vertex(g, k)

        def original(v):
            return v if v < k else v + 1

        for a in reduced.vertices:
            row_reduced = bfs_distances(reduced, a)
            row_full = bfs_distances(g, original(a))
            for b in reduced.vertices:
                d = row_reduced[b - 1]
                if d is UNREACHABLE:
                    continue
                full = row_full[original(b) - 1]
                assert full is not UNREACHABLE
                assert full <= d
