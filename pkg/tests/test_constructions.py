#!/usr/bin/env python3
"""
图构造、生成器规格与 Mycielskian 单元测试 (pytest)
"""

import sys
import os
import pytest
import networkx as nx
from hypothesis import given, settings

# 添加项目根目录到 Python 路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from mycielski_hosoya.errors import GraphError, PreconditionError, SpecGrammarError
from mycielski_hosoya.graph import (
    UNREACHABLE, all_pairs_distances, degree, diameter, from_edge_list, induced_subgraph, is_connected,
)
from mycielski_hosoya.constructions import (
    Family, GeneratorSpec, JoinSpec,
    parse_generator_spec, generate,
    path, cycle, star, complete, complete_bipartite, empty,
    mycielskian, mycielskian_layout, join, predicted_mycielskian_diameter,
)

from strategies import connected_graphs, graphs, to_networkx


# ============================================================
# 生成器规格解析测试
# ============================================================

class TestParseGeneratorSpec:
    """parse_generator_spec 测试"""

    def test_simple(self):
        """测试单族规格"""
        assert parse_generator_spec("path:2") == GeneratorSpec(Family.PATH, (2,))
        assert parse_generator_spec("kbip:2,3") == GeneratorSpec(Family.COMPLETE_BIPARTITE, (2, 3))

    def test_join(self):
        """测试 join 规格"""
        spec = parse_generator_spec("join:path:2+star:3")
        assert spec == JoinSpec(GeneratorSpec(Family.PATH, (2,)), GeneratorSpec(Family.STAR, (3,)))

    @pytest.mark.parametrize("text", ["path:7", "cycle:5", "kbip:2,4", "join:cycle:4+complete:3"])
    def test_str_round_trip(self, text):
        """测试 str(spec) 还原规格文本"""
        assert str(parse_generator_spec(text)) == text

    def test_cycle_minimum(self):
        """测试 cycle:2 低于下限"""
        with pytest.raises(SpecGrammarError) as exc:
            parse_generator_spec("cycle:2")
        assert exc.value.position == 6

    def test_unknown_family(self):
        """测试未知族名"""
        with pytest.raises(SpecGrammarError, match="unknown family"):
            parse_generator_spec("wheel:5")

    def test_error_keeps_full_text(self):
        """测试 join 右操作数的错误携带完整规格文本"""
        with pytest.raises(SpecGrammarError) as exc:
            parse_generator_spec("join:path:2+wheel:5")
        assert exc.value.text == "join:path:2+wheel:5"
        assert exc.value.text[exc.value.position:].startswith("wheel")

    def test_bad_parameter_position(self):
        """测试非数字参数的位置"""
        with pytest.raises(SpecGrammarError) as exc:
            parse_generator_spec("kbip:2,x")
        assert exc.value.position == 7

    def test_unicode_digits_rejected(self):
        """测试非 ASCII 数字被拒绝"""
        with pytest.raises(SpecGrammarError):
            parse_generator_spec("path:٣")

    def test_wrong_arity(self):
        """测试参数个数错误"""
        with pytest.raises(SpecGrammarError, match="parameter"):
            parse_generator_spec("kbip:2")

    def test_missing_colon(self):
        """测试缺少冒号"""
        with pytest.raises(SpecGrammarError) as exc:
            parse_generator_spec("path")
        assert exc.value.position == 0

    def test_join_needs_two_operands(self):
        """测试 join 缺少 '+'"""
        with pytest.raises(SpecGrammarError) as exc:
            parse_generator_spec("join:path:2")
        assert exc.value.position == len("join:path:2")

    def test_join_too_many_operands(self):
        """测试 join 多于两个操作数时指向第二个 '+'"""
        with pytest.raises(SpecGrammarError) as exc:
            parse_generator_spec("join:path:2+path:2+path:2")
        assert exc.value.position == 18

    def test_join_right_operand_position(self):
        """测试右操作数错误的位置偏移"""
        with pytest.raises(SpecGrammarError) as exc:
            parse_generator_spec("join:path:2+cycle:1")
        assert exc.value.position == 18

    def test_spec_validation(self):
        """测试直接构造 GeneratorSpec 也会校验"""
        with pytest.raises(GraphError):
            GeneratorSpec(Family.CYCLE, (2,))
        with pytest.raises(GraphError):
            GeneratorSpec(Family.PATH, (1, 2))


# ============================================================
# 生成器测试
# ============================================================

class TestGenerators:
    """命名族生成器测试"""

    def test_path_has_n_plus_one_vertices(self):
        """测试 path:N 为长度 N 的路径"""
        g = path(2)
        assert g.vertex_count == 3
        assert g.edges == frozenset({(1, 2), (2, 3)})

    def test_cycle(self):
        """测试圈"""
        g = cycle(5)
        assert g.vertex_count == 5
        assert g.edge_count == 5
        assert all(degree(g, v) == 2 for v in g.vertices)

    def test_star(self):
        """测试星图中心为顶点 1"""
        g = star(3)
        assert g.vertex_count == 4
        assert degree(g, 1) == 3

    def test_complete(self):
        """测试完全图"""
        assert complete(1).edge_count == 0
        assert complete(5).edge_count == 10

    def test_kbip(self):
        """测试 kbip:2,2 有 4 个顶点 4 条边"""
        g = generate(parse_generator_spec("kbip:2,2"))
        assert (g.vertex_count, g.edge_count) == (4, 4)
        assert g == complete_bipartite(2, 2)
        assert nx.is_isomorphic(to_networkx(g), nx.complete_bipartite_graph(2, 2))

    def test_join_of_paths(self):
        """测试 join:path:2+path:2 有 6 个顶点 13 条边"""
        g = generate(parse_generator_spec("join:path:2+path:2"))
        assert (g.vertex_count, g.edge_count) == (6, 13)

    def test_join_matches_networkx(self):
        """测试 join 与 networkx 的 full_join 同构"""
        g = join(cycle(4), star(2))
        expected = nx.full_join(nx.cycle_graph(4), nx.star_graph(2), rename=("a", "b"))
        assert nx.is_isomorphic(to_networkx(g), expected)

    def test_join_of_two_k1(self):
        """测试 join(K_1, K_1) 为单条边"""
        g = join(complete(1), complete(1))
        assert g == from_edge_list(2, [(1, 2)])
        assert diameter(g) == 1

    @settings(max_examples=60)
    @given(graphs(max_n=7), graphs(max_n=7))
    def test_join_diameter_at_most_two(self, first, second):
        """测试任意两个图的 join 连通且直径不超过 2"""
        g = join(first, second)
        assert is_connected(g)
        assert diameter(g) <= 2
        n1, n2 = first.vertex_count, second.vertex_count
        assert g.vertex_count == n1 + n2
        assert g.edge_count == first.edge_count + second.edge_count + n1 * n2

    def test_empty(self):
        """测试空图"""
        g = empty(3)
        assert g.edge_count == 0
        assert not is_connected(g)


# ============================================================
# Mycielskian 测试
# ============================================================

class TestMycielskian:
    """mycielskian 构造测试"""

    def test_path2_size(self):
        """测试 mu(P_2) 有 7 个顶点 9 条边"""
        m = mycielskian(path(2))
        assert (m.vertex_count, m.edge_count) == (7, 9)

    def test_path1_is_c5(self):
        """测试 mu(P_1) 同构于 C_5"""
        m = mycielskian(path(1))
        assert nx.is_isomorphic(to_networkx(m), nx.cycle_graph(5))

    def test_k1(self):
        """测试 mu(K_1) 为 3 个顶点 1 条边且不连通"""
        m = mycielskian(complete(1))
        assert (m.vertex_count, m.edge_count) == (3, 1)
        assert not is_connected(m)

    def test_layout(self):
        """测试固定顶点布局"""
        layout = mycielskian_layout(3)
        assert [layout.v(i) for i in layout.v_vertices] == [1, 2, 3]
        assert [layout.u(i) for i in layout.v_vertices] == [4, 5, 6]
        assert list(layout.u_vertices) == [4, 5, 6]
        assert layout.w == 7

    def test_shadow_neighbors(self):
        """测试 u_i 与 v_i 的邻居相连，w 与所有 u_i 相连"""
        g = path(2)
        m = mycielskian(g)
        layout = mycielskian_layout(3)
        assert set(m.neighbors(layout.u(2))) == {1, 3, layout.w}
        assert set(m.neighbors(layout.w)) == set(layout.u_vertices)

    @settings(max_examples=40)
    @given(connected_graphs())
    def test_matches_networkx(self, g):
        """测试与 networkx.mycielskian 同构"""
        ours = to_networkx(mycielskian(g))
        theirs = nx.mycielskian(nx.convert_node_labels_to_integers(to_networkx(g)))
        assert nx.is_isomorphic(ours, theirs)

    @settings(max_examples=40)
    @given(connected_graphs())
    def test_size_and_degree_law(self, g):
        """测试顶点数 2n+1、边数 3m+n 与度数律"""
        n, m_edges = g.vertex_count, g.edge_count
        m = mycielskian(g)
        layout = mycielskian_layout(n)
        assert m.vertex_count == 2 * n + 1
        assert m.edge_count == 3 * m_edges + n
        assert degree(m, layout.w) == n
        for i in g.vertices:
            assert degree(m, layout.v(i)) == 2 * degree(g, i)
            assert degree(m, layout.u(i)) == degree(g, i) + 1
        assert induced_subgraph(m, layout.v_vertices) == g

    @settings(max_examples=40)
    @given(connected_graphs())
    def test_distance_claims(self, g):
        """测试 w、u_i、v_i 之间的距离关系"""
        n = g.vertex_count
        layout = mycielskian_layout(n)
        dg = all_pairs_distances(g)
        dm = all_pairs_distances(mycielskian(g))
        w = layout.w - 1
        for i in g.vertices:
            u_i, v_i = layout.u(i) - 1, layout.v(i) - 1
            assert dm[w][u_i] == 1
            assert dm[u_i][v_i] == 2
            assert dm[w][v_i] == 2
            for j in range(i + 1, n + 1):
                assert dm[u_i][layout.u(j) - 1] == 2
                assert dm[v_i][layout.v(j) - 1] == min(dg[i - 1][j - 1], 4)


# ============================================================
# 直径公式测试
# ============================================================

class TestDiameterLaw:
    """predicted_mycielskian_diameter 测试"""

    @pytest.mark.parametrize("graph,expected", [
        (path(1), 2),
        (complete(4), 2),
        (path(3), 3),
        (path(7), 4),
        (cycle(9), 4),
    ])
    def test_known_values(self, graph, expected):
        """测试已知直径"""
        assert predicted_mycielskian_diameter(graph) == expected
        assert diameter(mycielskian(graph)) == expected

    def test_isolated_vertex_rejected(self):
        """测试孤立顶点"""
        with pytest.raises(PreconditionError):
            predicted_mycielskian_diameter(complete(1))

    def test_disconnected_rejected(self):
        """测试不连通图"""
        two_edges = from_edge_list(4, [(1, 2), (3, 4)])
        with pytest.raises(PreconditionError, match="connected"):
            predicted_mycielskian_diameter(two_edges)

    @settings(max_examples=50)
    @given(connected_graphs())
    def test_law_holds(self, g):
        """测试 D(mu(G)) = min(max(2, D(G)), 4)"""
        d = diameter(mycielskian(g))
        assert d is not UNREACHABLE
        assert d == predicted_mycielskian_diameter(g)
