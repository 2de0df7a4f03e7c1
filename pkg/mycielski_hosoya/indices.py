"""
拓扑指数与脆弱性度量

由 Hosoya 多项式精确计算:
- Wiener W = H'(1)
- Hyper-Wiener WW = f''(1) / 2，f(x) = x H(x)
- TSZ = g'''(1) / 6，g(x) = x^2 H(x)
- Harary = ∫_0^1 H(x)/x dx = sum c_k / k
- n 阶 Wiener = H^(n)(1)
- closeness C(G) = 2 H(1/2)

直接由图计算: 顶点 closeness、VRC、betweenness（精确最短路计数）。
另有 Mycielskian 指数闭式及 TSZ 勘误表。所有数值为 int 或 Fraction。
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import DisconnectedGraphError, PreconditionError
from .graph import UNREACHABLE, Graph, all_pairs_distances, bfs_distances, delete_vertex, is_connected
from .hosoya import hosoya, mycielskian_hosoya_closed_form
from .polynomial import IntPolynomial, derivative, eval_rational, render_rational, shift_multiply

log = logging.getLogger(__name__)


# ============================================================
# 由 Hosoya 多项式计算的指数
# ============================================================

def _check_hosoya(H: IntPolynomial) -> None:
    if H.constant != 0 or any(c < 0 for c in H.coefficients):
        raise ValueError(f"not a Hosoya polynomial: {H}")


def wiener(H: IntPolynomial) -> int:
    _check_hosoya(H)
    return int(eval_rational(derivative(H, 1), 1))


def hyper_wiener(H: IntPolynomial) -> Fraction:
    _check_hosoya(H)
    return eval_rational(derivative(shift_multiply(H, 1), 2), 1) / 2


def tsz(H: IntPolynomial) -> Fraction:
    _check_hosoya(H)
    return eval_rational(derivative(shift_multiply(H, 2), 3), 1) / 6


def harary(H: IntPolynomial) -> Fraction:
    # x^{k-1} 在 [0, 1] 上的积分为 1/k
    _check_hosoya(H)
    return sum((Fraction(c, k) for k, c in enumerate(H.coefficients, start=1)), Fraction(0))


def nth_wiener(H: IntPolynomial, order: int) -> int:
    """sum_k a_k k(k-1)...(k-order+1)；order 超过次数时为 0"""
    _check_hosoya(H)
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")
    return int(eval_rational(derivative(H, order), 1))


def closeness(H: IntPolynomial) -> Fraction:
    _check_hosoya(H)
    return 2 * eval_rational(H, Fraction(1, 2))


# ============================================================
# 由图直接计算的度量
# ============================================================

def closeness_vertex(graph: Graph, i: int) -> Fraction:
    """C(i) = sum_{j != i, 可达} 2^{-d(i, j)}"""
    total = Fraction(0)
    for d in bfs_distances(graph, i):
        if d is UNREACHABLE or d == 0:
            continue
        total += Fraction(1, 2 ** d)
    return total


def vertex_residual_closeness(graph: Graph) -> Fraction:
    """R(G) = min_k C(G - k)"""
    if graph.vertex_count < 2:
        raise PreconditionError("vertex residual closeness requires at least 2 vertices")
    best: Optional[Fraction] = None
    for k in graph.vertices:
        value = closeness(hosoya(delete_vertex(graph, k)))
        log.debug(f"C(G - {k}) = {render_rational(value)}")
        if best is None or value < best:
            best = value
    return best


def _shortest_path_dag(graph: Graph, source: int) -> tuple[list[int], list[int], list[list[int]]]:
    """
    单源 BFS 最短路计数

    Returns:
        (order, sigma, preds): BFS 访问顺序、最短路条数、最短路前驱（均按 v - 1 下标）
    """
    n = graph.vertex_count
    dist = [-1] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    order: list[int] = []

    s = source - 1
    dist[s] = 0
    sigma[s] = 1
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        for neighbor in graph.adjacency[v]:
            w = neighbor - 1
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, sigma, preds


def betweenness_all(graph: Graph) -> list[Fraction]:
    """
    每个顶点的 betweenness B_w（无序顶点对）

    逐源累加依赖值 delta[v] = sum_w sigma[v] / sigma[w] * (1 + delta[w])。
    取 L = lcm(sigma)，以整数 T[w] = L * (1 + delta[w]) / sigma[w] 累加，
    则 delta[v] = sigma[v] * sum_w T[w] / L，累加过程只用整数。
    按源求和统计的是有序对，最后除以 2。
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("betweenness requires a connected graph")

    n = graph.vertex_count
    totals = [Fraction(0)] * n
    for source in graph.vertices:
        order, sigma, preds = _shortest_path_dag(graph, source)
        scale = lcm(*sigma)
        below = [0] * n  # sum_w T[w]，w 为 v 的最短路后继
        for w in reversed(order):
            carried = scale // sigma[w] + below[w]
            for v in preds[w]:
                below[v] += carried
        s = source - 1
        for v in range(n):
            if v != s and below[v]:
                totals[v] += Fraction(sigma[v] * below[v], scale)
    return [t / 2 for t in totals]


def betweenness_vertex(graph: Graph, w: int) -> Fraction:
    graph._check_vertex(w)
    return betweenness_all(graph)[w - 1]


def betweenness_centrality(graph: Graph) -> Fraction:
    """B^-(G) = (1/n) sum_w B_w"""
    values = betweenness_all(graph)
    return sum(values, Fraction(0)) / graph.vertex_count


def betweenness_from_wiener(W: int, n: int) -> Fraction:
    """B^-(G) = W(G)/n - (n - 1)/2（连通图）"""
    return Fraction(W, n) - Fraction(n - 1, 2)


# ============================================================
# 逐对定义式（校验用）
# ============================================================

def _finite_pair_distances(graph: Graph) -> list[int]:
    rows = all_pairs_distances(graph)
    distances = []
    for i, row in enumerate(rows):
        for d in row[i + 1:]:
            if d is not UNREACHABLE:
                distances.append(d)
    return distances


def wiener_by_pairs(graph: Graph) -> int:
    return sum(_finite_pair_distances(graph))


def hyper_wiener_by_pairs(graph: Graph) -> Fraction:
    return Fraction(sum(d * d + d for d in _finite_pair_distances(graph)), 2)


def tsz_by_pairs(graph: Graph) -> Fraction:
    ds = _finite_pair_distances(graph)
    return (
        Fraction(sum(d ** 3 for d in ds), 6)
        + Fraction(sum(d * d for d in ds), 2)
        + Fraction(sum(ds), 3)
    )


def harary_by_pairs(graph: Graph) -> Fraction:
    return sum((Fraction(1, d) for d in _finite_pair_distances(graph)), Fraction(0))


def closeness_by_vertices(graph: Graph) -> Fraction:
    return sum((closeness_vertex(graph, v) for v in graph.vertices), Fraction(0))


# ============================================================
# IndexReport
# ============================================================

@dataclass(frozen=True)
class IndexReport:
    """
    单个图的全部指数，均为精确值

    betweenness_centrality 在不连通时为 None；vrc 仅在请求时计算。
    """
    wiener: int
    hyper_wiener: Fraction
    tsz: Fraction
    harary: Fraction
    nth_wiener: tuple = field(default=())
    closeness: Fraction = Fraction(0)
    betweenness_centrality: Optional[Fraction] = None
    vrc: Optional[Fraction] = None

    def __post_init__(self):
        if self.nth_wiener and self.nth_wiener[0] != self.wiener:
            raise ValueError(f"first-order Wiener {self.nth_wiener[0]} differs from W={self.wiener}")

    def to_json(self) -> dict:
        def rational(q: Optional[Fraction]) -> Optional[str]:
            return None if q is None else render_rational(q)

        return {
            "wiener": self.wiener,
            "hyper_wiener": rational(self.hyper_wiener),
            "tsz": rational(self.tsz),
            "harary": rational(self.harary),
            "closeness": rational(self.closeness),
            "betweenness_centrality": rational(self.betweenness_centrality),
            "vrc": rational(self.vrc),
            "nth_wiener": list(self.nth_wiener),
        }

    def rows(self) -> list[tuple[str, object]]:
        """(名称, 值) 列表，供表格输出"""
        return [
            ("wiener", self.wiener),
            ("hyper_wiener", self.hyper_wiener),
            ("tsz", self.tsz),
            ("harary", self.harary),
            ("closeness", self.closeness),
            ("betweenness_centrality", self.betweenness_centrality),
            ("vrc", self.vrc),
            *((f"nth_wiener[{k}]", v) for k, v in enumerate(self.nth_wiener, start=1)),
        ]


def report_from_hosoya(H: IntPolynomial) -> IndexReport:
    """仅由 Hosoya 多项式能得到的字段；betweenness 与 vrc 留空"""
    return IndexReport(
        wiener=wiener(H),
        hyper_wiener=hyper_wiener(H),
        tsz=tsz(H),
        harary=harary(H),
        nth_wiener=tuple(nth_wiener(H, k) for k in range(1, H.degree + 1)),
        closeness=closeness(H),
    )


def index_report(graph: Graph, include_vrc: bool = False) -> IndexReport:
    H = hosoya(graph)
    base = report_from_hosoya(H)

    betweenness = None
    if is_connected(graph):
        betweenness = betweenness_centrality(graph)
    else:
        log.warning("Graph is disconnected; betweenness centrality omitted")

    vrc = None
    if include_vrc:
        if graph.vertex_count < 2:
            log.warning("VRC needs at least 2 vertices; omitted")
        else:
            vrc = vertex_residual_closeness(graph)

    return IndexReport(
        wiener=base.wiener,
        hyper_wiener=base.hyper_wiener,
        tsz=base.tsz,
        harary=base.harary,
        nth_wiener=base.nth_wiener,
        closeness=base.closeness,
        betweenness_centrality=betweenness,
        vrc=vrc,
    )


# ============================================================
# Mycielskian 指数闭式与勘误
# ============================================================

@dataclass(frozen=True)
class TszFormula:
    """TSZ(mu(G)) = c_nn n^2 + c_n n + c_m m + c_a2 a2 + c_a3 a3"""
    c_nn: int
    c_n: int
    c_m: int
    c_a2: int
    c_a3: int

    def evaluate(self, n: int, m: int, a2: int, a3: int) -> int:
        return self.c_nn * n * n + self.c_n * n + self.c_m * m + self.c_a2 * a2 + self.c_a3 * a3

    def __str__(self) -> str:
        return f"{self.c_nn}n^2 {self.c_n:+d}n {self.c_m:+d}m {self.c_a2:+d}a2 {self.c_a3:+d}a3"


# 由 b1 + 4b2 + 10b3 + 20b4 展开得到
TSZ_DERIVED = TszFormula(22, -13, -37, -28, -10)
# 文献印刷版本，与 C_5 = mu(P_1) 的直接计算不符
TSZ_PRINTED = TszFormula(22, -8, -22, -28, -10)

ERRATA = {
    "tsz_mycielskian": (TSZ_PRINTED, TSZ_DERIVED),
}


def printed_tsz(n: int, m: int, a2: int, a3: int) -> int:
    return TSZ_PRINTED.evaluate(n, m, a2, a3)


def mycielskian_index_closed_forms(n: int, m: int, a2: int, a3: int) -> IndexReport:
    """
    由 G 的 (n, m, a2, a3) 直接给出 mu(G) 的指数

    前提同主定理（简单连通，n >= 2）；TSZ 使用推导一致的系数。
    """
    coeffs = mycielskian_hosoya_closed_form(n, m, a2, a3)
    b = coeffs.as_tuple()

    # sum_{i=1}^{4} i(i-1)...(i-k+1) b_i
    def falling(i: int, k: int) -> int:
        result = 1
        for t in range(k):
            result *= i - t
        return result

    degree = coeffs.polynomial().degree
    nth = tuple(sum(falling(i, k) * b[i - 1] for i in range(1, 5)) for k in range(1, degree + 1))

    return IndexReport(
        wiener=6 * n * n - n - 7 * m - 4 * a2 - a3,
        hyper_wiener=Fraction(25 * n * n - 11 * n, 2) - 19 * m - 13 * a2 - 4 * a3,
        tsz=Fraction(TSZ_DERIVED.evaluate(n, m, a2, a3)),
        harary=Fraction(17 * n * n + 31 * n + 50 * m + 14 * a2 + 2 * a3, 24),
        nth_wiener=nth,
        closeness=Fraction(9 * n * n + 23 * n + 38 * m + 14 * a2 + 2 * a3, 16),
        betweenness_centrality=Fraction(4 * n * n - 2 * n - 7 * m - 4 * a2 - a3, 2 * n + 1),
    )


# ============================================================
# 路径与星的推论
# ============================================================

def path_mycielskian_wiener(n: int) -> int:
    """W(mu(P_n)) = 6n^2 - n + 11，n >= 2"""
    return 6 * n * n - n + 11


def path_mycielskian_closeness(n: int) -> Fraction:
    return Fraction(9 * n * n + 95 * n + 14, 16)


def path_mycielskian_betweenness(n: int) -> Fraction:
    return Fraction(4 * n * n - 6 * n + 8, 2 * n + 3)


def star_mycielskian_closeness(n: int) -> Fraction:
    return Fraction(16 * n * n + 72 * n + 32, 16)


def star_mycielskian_betweenness(n: int) -> Fraction:
    return Fraction(2 * n * n + n + 2, 2 * n + 3)


def star_path_closeness_difference(n: int) -> Fraction:
    """C(mu(S_n)) - C(mu(P_n)) = (7n^2 - 23n + 18) / 16"""
    return Fraction(7 * n * n - 23 * n + 18, 16)
