"""
Hosoya 多项式

H(G, x) = sum_{k=1}^{D} d(G, k) x^k，由 BFS 距离分布暴力计算；
以及 Mycielskian 相关的全部闭式：主系数定理、直径 2 引理、join / 星 /
完全二部图 / 路径推论。

闭式函数接受数值摘要 (n, m, a2, a3)；*_from_graph 包装函数先校验定理前提。
不连通图的 Hosoya 多项式只统计有限距离的顶点对。
"""

import logging
from dataclasses import dataclass

from .errors import DisconnectedGraphError, PreconditionError
from .graph import Graph, UNREACHABLE, diameter, distance_distribution, has_isolated_vertex, is_connected
from .polynomial import IntPolynomial

log = logging.getLogger(__name__)


# ============================================================
# 暴力计算
# ============================================================

def hosoya(graph: Graph) -> IntPolynomial:
    """x^k 的系数为 d(G, k)；不可达顶点对不计入"""
    return IntPolynomial(distance_distribution(graph).counts)


# ============================================================
# 主定理
# ============================================================

@dataclass(frozen=True)
class SourceStats:
    """G 的数值摘要：顶点数、边数、距离为 2 和 3 的顶点对数"""
    n: int
    m: int
    a2: int
    a3: int


@dataclass(frozen=True)
class MycielskianCoefficients:
    """
    H(mu(G), x) = b1 x + b2 x^2 + b3 x^3 + b4 x^4

    不变量: b1 + b2 + b3 + b4 = 2n^2 + n，b1 = 3m + n
    """
    b1: int
    b2: int
    b3: int
    b4: int
    source_stats: SourceStats

    def __post_init__(self):
        n, m = self.source_stats.n, self.source_stats.m
        if self.b1 + self.b2 + self.b3 + self.b4 != 2 * n * n + n:
            raise PreconditionError(f"coefficients {self.as_tuple()} do not cover {2 * n * n + n} pairs")
        if self.b1 != 3 * m + n:
            raise PreconditionError(f"b1={self.b1} differs from 3m+n={3 * m + n}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.b1, self.b2, self.b3, self.b4)

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.as_tuple())


def mycielskian_hosoya_closed_form(n: int, m: int, a2: int, a3: int) -> MycielskianCoefficients:
    """
    由 G 的 (n, m, a2, a3) 计算 H(mu(G), x) 的系数

    前提: G 为简单连通图且 n >= 2。

    Raises:
        PreconditionError: 输入不可能来自连通简单图，或得到负系数
    """
    pairs = n * (n - 1) // 2
    if n < 2:
        raise PreconditionError(f"main theorem requires n >= 2, got n={n}")
    if m < n - 1:
        raise PreconditionError(f"a connected graph on {n} vertices needs >= {n - 1} edges, got m={m}")
    if a2 < 0 or a3 < 0:
        raise PreconditionError(f"pair counts must be non-negative, got a2={a2}, a3={a3}")
    if m + a2 + a3 > pairs:
        raise PreconditionError(f"m + a2 + a3 = {m + a2 + a3} exceeds {pairs} vertex pairs")

    b1 = 3 * m + n
    b2 = (n * n + 3 * n) // 2 + 3 * a2
    b3 = n * n - 2 * m - n + a3 - 2 * a2
    b4 = pairs - m - a2 - a3
    if min(b1, b2, b3, b4) < 0:
        raise PreconditionError(
            f"inconsistent inputs (n={n}, m={m}, a2={a2}, a3={a3}) give negative coefficient {(b1, b2, b3, b4)}"
        )
    return MycielskianCoefficients(b1, b2, b3, b4, SourceStats(n, m, a2, a3))


def source_stats(graph: Graph) -> SourceStats:
    dist = distance_distribution(graph)
    return SourceStats(graph.vertex_count, graph.edge_count, dist.count(2), dist.count(3))


def mycielskian_hosoya_from_graph(graph: Graph) -> MycielskianCoefficients:
    """校验 G 连通且 n >= 2 后应用主定理"""
    if graph.vertex_count < 2:
        raise PreconditionError("main theorem requires at least 2 vertices")
    if not is_connected(graph):
        raise DisconnectedGraphError("main theorem requires a connected graph")
    stats = source_stats(graph)
    log.debug(f"main theorem inputs: n={stats.n}, m={stats.m}, a2={stats.a2}, a3={stats.a3}")
    return mycielskian_hosoya_closed_form(stats.n, stats.m, stats.a2, stats.a3)


# ============================================================
# 直径为 2 的情形
# ============================================================

def diameter2_mycielskian_hosoya(n: int, m: int) -> IntPolynomial:
    """D(mu(G)) = 2 时 H(mu(G), x) = (3m + n) x + (2n^2 - 3m) x^2"""
    return IntPolynomial((3 * m + n, 2 * n * n - 3 * m))


def _require_mycielskian_diameter2(graph: Graph, name: str) -> None:
    # D(mu(G)) = 2  <=>  G 连通、无孤立顶点且 D(G) <= 2
    if has_isolated_vertex(graph):
        raise PreconditionError(f"{name}: graph has an isolated vertex")
    if not is_connected(graph):
        raise DisconnectedGraphError(f"{name}: graph is disconnected")
    d = diameter(graph)
    if d is UNREACHABLE or d > 2:
        raise PreconditionError(f"{name}: diameter {d} > 2, so mu(G) has diameter above 2")


def diameter2_mycielskian_hosoya_from_graph(graph: Graph) -> IntPolynomial:
    _require_mycielskian_diameter2(graph, "diameter-2 lemma")
    return diameter2_mycielskian_hosoya(graph.vertex_count, graph.edge_count)


# ============================================================
# 推论
# ============================================================

def join_hosoya_closed_form(n1: int, m1: int, n2: int, m2: int) -> tuple[IntPolynomial, IntPolynomial]:
    """
    (H(G1 ⊕ G2, x), H(mu(G1 ⊕ G2), x))

    前提: G1、G2 均连通且直径至少为 2。
    """
    join_poly = IntPolynomial((
        m1 + m2 + n1 * n2,
        (n1 * n1 + n2 * n2 - n1 - n2 - 2 * m1 - 2 * m2) // 2,
    ))
    mycielskian_poly = IntPolynomial((
        3 * m1 + 3 * m2 + 3 * n1 * n2 + n1 + n2,
        2 * n1 * n1 + 2 * n2 * n2 + n1 * n2 - 3 * m1 - 3 * m2,
    ))
    return join_poly, mycielskian_poly


def join_hosoya_from_graphs(first: Graph, second: Graph) -> tuple[IntPolynomial, IntPolynomial]:
    for label, g in (("G1", first), ("G2", second)):
        if not is_connected(g):
            raise DisconnectedGraphError(f"join corollary: {label} is disconnected")
        d = diameter(g)
        if d < 2:
            raise PreconditionError(f"join corollary: {label} has diameter {d} < 2")
    return join_hosoya_closed_form(first.vertex_count, first.edge_count, second.vertex_count, second.edge_count)


def star_mycielskian_hosoya(n: int) -> IntPolynomial:
    """H(mu(S_n), x) = (4n + 1) x + (2n^2 + n + 2) x^2，n >= 2"""
    if n < 2:
        raise PreconditionError(f"star corollary requires n >= 2, got {n}")
    return IntPolynomial((4 * n + 1, 2 * n * n + n + 2))


def kbip_mycielskian_hosoya(n: int, m: int) -> IntPolynomial:
    """H(mu(K_{n,m}), x) = (3nm + n + m) x + (2n^2 + 2m^2 + nm) x^2，n, m >= 2"""
    if n < 2 or m < 2:
        raise PreconditionError(f"complete bipartite corollary requires n, m >= 2, got ({n}, {m})")
    return IntPolynomial((3 * n * m + n + m, 2 * n * n + 2 * m * m + n * m))


def path_hosoya(n: int) -> IntPolynomial:
    """H(P_n, x) = sum_{k=1}^{n} (n - k + 1) x^k，P_n 为长度 n 的路径"""
    if n < 1:
        raise PreconditionError(f"path length must be >= 1, got {n}")
    return IntPolynomial(tuple(n - k + 1 for k in range(1, n + 1)))


def path_mycielskian_hosoya(n: int) -> IntPolynomial:
    """H(mu(P_n), x)，n >= 2，次数至多为 4"""
    if n < 2:
        raise PreconditionError(f"path corollary requires n >= 2, got {n}")
    return IntPolynomial((
        4 * n + 1,
        (n * n + 11 * n - 2) // 2,
        n * n - 2 * n,
        (n * n - 5 * n + 6) // 2,
    ))
