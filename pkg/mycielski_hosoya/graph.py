"""
图核心

不可变简单无向图，以及基于 BFS 的距离计算：单源距离、距离分布 d(G, k)、
直径、连通性和删点。

约定:
- 顶点对外使用 1-based 编号 1..n
- 不可达距离用 UNREACHABLE 标记，绝不用大数代替
- 距离分布只统计不同顶点对，k 从 1 开始（多项式常数项为 0）
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

from .errors import GraphError


# ============================================================
# 不可达标记
# ============================================================

class Unreachable(Enum):
    """不可达标记：不是数字，不能参与任何算术"""
    INFINITY = "inf"

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __str__(self) -> str:
        return "inf"


UNREACHABLE = Unreachable.INFINITY

Distance = Union[int, Unreachable]


# ============================================================
# Graph 类
# ============================================================

@dataclass(frozen=True)
class Graph:
    """
    简单无向图

    edges 中每条边规范化为 (i, j)，1 <= i < j <= n。
    adjacency 与 masks 由 edges 派生:
    - adjacency[v - 1]: 顶点 v 的有序邻居元组
    - masks[v - 1]: 顶点 v 的邻居位集（第 u - 1 位表示邻居 u）
    """
    vertex_count: int
    edges: frozenset
    adjacency: tuple = field(init=False, repr=False, compare=False)
    masks: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))

        neighbors: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for edge in self.edges:
            i, j = edge
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (1 <= i < j <= n):
                raise GraphError(f"edge {edge} is not normalized within 1..{n}")
            neighbors[i - 1].append(j)
            neighbors[j - 1].append(i)
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)

        object.__setattr__(self, "adjacency", tuple(tuple(sorted(adj)) for adj in neighbors))
        object.__setattr__(self, "masks", tuple(masks))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self, v: int) -> tuple:
        self._check_vertex(v)
        return self.adjacency[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        """按字典序排列的边（写出边列表时使用）"""
        return sorted(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not (1 <= v <= self.vertex_count):
            raise GraphError(f"vertex {v!r} out of range 1..{self.vertex_count}")


# ============================================================
# DistanceDistribution 类
# ============================================================

@dataclass(frozen=True)
class DistanceDistribution:
    """
    距离分布

    counts[k - 1] = a_k，即距离恰为 k 的无序顶点对数；
    unreachable_pairs 为不可达的无序顶点对数。
    """
    counts: tuple
    unreachable_pairs: int
    vertex_count: int

    def __post_init__(self):
        total = self.pair_count
        if sum(self.counts) + self.unreachable_pairs != total:
            raise GraphError(
                f"distance distribution does not cover {total} pairs: "
                f"{list(self.counts)} + {self.unreachable_pairs} unreachable"
            )
        if self.counts and self.counts[-1] == 0:
            raise GraphError(f"trailing zero in distance distribution {list(self.counts)}")

    def count(self, k: int) -> int:
        """a_k，超出最大距离时为 0"""
        if 1 <= k <= len(self.counts):
            return self.counts[k - 1]
        return 0

    @property
    def max_distance(self) -> int:
        return len(self.counts)

    @property
    def pair_count(self) -> int:
        return self.vertex_count * (self.vertex_count - 1) // 2


# ============================================================
# 构造
# ============================================================

def from_edge_list(n: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """
    由边列表构造图

    边的顺序和端点顺序无关；自环、越界端点和（规范化后）重复边都会报错。
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")

    edges: set[tuple[int, int]] = set()
    for pair in edge_pairs:
        i, j = pair
        if i == j:
            raise GraphError(f"self-loop at vertex {i}")
        for endpoint in (i, j):
            if not isinstance(endpoint, int) or not (1 <= endpoint <= n):
                raise GraphError(f"endpoint {endpoint!r} of edge {pair} out of range 1..{n}")
        edge = (min(i, j), max(i, j))
        if edge in edges:
            raise GraphError(f"duplicate edge {edge[0]}-{edge[1]}")
        edges.add(edge)

    return Graph(n, frozenset(edges))


# ============================================================
# BFS 距离
# ============================================================

def _bfs_levels(graph: Graph, source: int) -> list[int]:
    """
    位集 BFS，返回各层顶点位集

    levels[k] 是与 source 距离恰为 k 的顶点集合（第 v - 1 位表示顶点 v）。
    """
    masks = graph.masks
    frontier = 1 << (source - 1)
    visited = frontier
    levels = [frontier]
    while True:
        reached = 0
        pending = frontier
        while pending:
            low = pending & -pending
            reached |= masks[low.bit_length() - 1]
            pending ^= low
        reached &= ~visited
        if not reached:
            return levels
        visited |= reached
        levels.append(reached)
        frontier = reached


def bfs_distances(graph: Graph, source: int) -> list[Distance]:
    """
    单源最短距离

    返回长度为 n 的列表，下标 v - 1 对应顶点 v；不可达顶点为 UNREACHABLE。
    """
    graph._check_vertex(source)
    distances: list[Distance] = [UNREACHABLE] * graph.vertex_count
    for k, level in enumerate(_bfs_levels(graph, source)):
        while level:
            low = level & -level
            distances[low.bit_length() - 1] = k
            level ^= low
    return distances


def all_pairs_distances(graph: Graph) -> list[list[Distance]]:
    """所有顶点的 BFS 距离行，rows[i - 1][j - 1] = d(i, j)"""
    return [bfs_distances(graph, v) for v in graph.vertices]


def distance_distribution(graph: Graph) -> DistanceDistribution:
    """统计各有限距离的无序顶点对数 a_k 以及不可达对数"""
    ordered: list[int] = []
    for v in graph.vertices:
        levels = _bfs_levels(graph, v)
        if len(levels) - 1 > len(ordered):
            ordered.extend([0] * (len(levels) - 1 - len(ordered)))
        for k in range(1, len(levels)):
            ordered[k - 1] += levels[k].bit_count()

    # 每个无序对从两端各统计一次
    counts = tuple(c // 2 for c in ordered)
    n = graph.vertex_count
    unreachable = n * (n - 1) // 2 - sum(counts)
    return DistanceDistribution(counts, unreachable, n)


def diameter(graph: Graph) -> Distance:
    """最大有限两两距离；不连通时为 UNREACHABLE，单顶点图为 0"""
    if graph.vertex_count == 1:
        return 0
    dist = distance_distribution(graph)
    if dist.unreachable_pairs:
        return UNREACHABLE
    return dist.max_distance


def is_connected(graph: Graph) -> bool:
    levels = _bfs_levels(graph, 1)
    return sum(level.bit_count() for level in levels) == graph.vertex_count


# ============================================================
# 子图
# ============================================================

def delete_vertex(graph: Graph, k: int) -> Graph:
    """
    删除顶点 k 及其关联边

    剩余顶点保序重新编号为 1..n-1（大于 k 的编号减一）。
    """
    graph._check_vertex(k)
    if graph.vertex_count == 1:
        raise GraphError("cannot delete the only vertex of a graph")

    def shift(v: int) -> int:
        return v - 1 if v > k else v

    edges = frozenset(
        (shift(i), shift(j)) for i, j in graph.edges if i != k and j != k
    )
    return Graph(graph.vertex_count - 1, edges)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """由给定顶点诱导的子图，顶点按升序重新编号为 1..len(vertices)"""
    chosen = sorted(set(vertices))
    if not chosen:
        raise GraphError("induced subgraph needs at least one vertex")
    for v in chosen:
        graph._check_vertex(v)
    index = {v: pos + 1 for pos, v in enumerate(chosen)}
    edges = frozenset(
        (index[i], index[j]) for i, j in graph.edges if i in index and j in index
    )
    return Graph(len(chosen), edges)


def degree(graph: Graph, v: int) -> int:
    return len(graph.neighbors(v))


def has_isolated_vertex(graph: Graph) -> bool:
    return any(not adj for adj in graph.adjacency)
