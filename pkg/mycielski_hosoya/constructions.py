"""
图构造与生成器

Mycielskian、join 以及路径、圈、星、完全图、完全二部图生成器，
外加 Mycielskian 直径公式 D(mu(G)) = min(max(2, D(G)), 4)。

生成器规格语法:
    path:N  cycle:N  star:N  complete:N  kbip:N,M  join:SPEC+SPEC

注意 path:N 表示长度为 N 的路径，共 N + 1 个顶点；star:N 为中心加 N 片叶子。
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import GraphError, PreconditionError, SpecGrammarError
from .graph import Graph, UNREACHABLE, diameter, has_isolated_vertex, is_connected

log = logging.getLogger(__name__)


# ============================================================
# 生成器规格
# ============================================================

class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "kbip"


# 每个族的参数个数和参数下限
FAMILY_ARITY = {
    Family.PATH: 1,
    Family.CYCLE: 1,
    Family.STAR: 1,
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE: 2,
}

FAMILY_MINIMUM = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.STAR: 1,
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE: 1,
}


@dataclass(frozen=True)
class GeneratorSpec:
    """命名图族的生成参数"""
    family: Family
    params: tuple

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.params) != FAMILY_ARITY[family]:
            raise GraphError(
                f"{family.value} takes {FAMILY_ARITY[family]} parameter(s), got {len(self.params)}"
            )
        minimum = FAMILY_MINIMUM[family]
        for p in self.params:
            if not isinstance(p, int) or p < minimum:
                raise GraphError(f"{family.value} parameter must be >= {minimum}, got {p!r}")

    def __str__(self) -> str:
        return f"{self.family.value}:{','.join(str(p) for p in self.params)}"


@dataclass(frozen=True)
class JoinSpec:
    left: GeneratorSpec
    right: GeneratorSpec

    def __str__(self) -> str:
        return f"join:{self.left}+{self.right}"


AnySpec = Union[GeneratorSpec, JoinSpec]

_SIMPLE_SPEC = re.compile(r"([a-z_]+):(\S*)")
_DIGITS = re.compile(r"[0-9]+")


def parse_generator_spec(text: str) -> AnySpec:
    """
    解析生成器规格字符串

    Raises:
        SpecGrammarError: 语法错误，position 指向出错的列
    """
    if text.startswith("join:"):
        body_start = len("join:")
        body = text[body_start:]
        plus_count = body.count("+")
        if plus_count != 1:
            if plus_count == 0:
                pos = len(text)
            else:
                pos = body_start + body.index("+", body.index("+") + 1)
            raise SpecGrammarError(pos, "join expects exactly two operands 'SPEC+SPEC'", text)
        plus = body.index("+")
        left = _parse_simple_spec(body[:plus], body_start, text)
        right = _parse_simple_spec(body[plus + 1:], body_start + plus + 1, text)
        return JoinSpec(left, right)
    return _parse_simple_spec(text, 0, text)


def _parse_simple_spec(token: str, offset: int, text: str) -> GeneratorSpec:
    match = _SIMPLE_SPEC.fullmatch(token)
    if not match:
        raise SpecGrammarError(offset, f"expected FAMILY:PARAMS, got {token!r}", text)

    name, raw_params = match.group(1), match.group(2)
    try:
        family = Family(name)
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise SpecGrammarError(offset, f"unknown family {name!r} (known: {known}, join)", text) from None

    params_offset = offset + len(name) + 1
    params = []
    cursor = params_offset
    for field in raw_params.split(","):
        if not _DIGITS.fullmatch(field):
            raise SpecGrammarError(cursor, f"expected a non-negative integer, got {field!r}", text)
        params.append(int(field))
        cursor += len(field) + 1

    if len(params) != FAMILY_ARITY[family]:
        raise SpecGrammarError(
            params_offset, f"{name} takes {FAMILY_ARITY[family]} parameter(s), got {len(params)}", text
        )
    minimum = FAMILY_MINIMUM[family]
    cursor = params_offset
    for field, value in zip(raw_params.split(","), params):
        if value < minimum:
            raise SpecGrammarError(cursor, f"{name} parameter must be >= {minimum}, got {value}", text)
        cursor += len(field) + 1

    return GeneratorSpec(family, tuple(params))


# ============================================================
# 生成器
# ============================================================

def generate(spec: AnySpec) -> Graph:
    """按规格生成图"""
    if isinstance(spec, JoinSpec):
        return join(generate(spec.left), generate(spec.right))

    family = spec.family
    if family is Family.PATH:
        (n,) = spec.params
        return Graph(n + 1, frozenset((i, i + 1) for i in range(1, n + 1)))
    if family is Family.CYCLE:
        (n,) = spec.params
        edges = {(i, i + 1) for i in range(1, n)}
        edges.add((1, n))
        return Graph(n, frozenset(edges))
    if family is Family.STAR:
        (n,) = spec.params
        return Graph(n + 1, frozenset((1, leaf) for leaf in range(2, n + 2)))
    if family is Family.COMPLETE:
        (n,) = spec.params
        return Graph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))
    if family is Family.COMPLETE_BIPARTITE:
        n, m = spec.params
        return Graph(n + m, frozenset((i, j) for i in range(1, n + 1) for j in range(n + 1, n + m + 1)))
    raise GraphError(f"unsupported family {family!r}")


def path(n: int) -> Graph:
    return generate(GeneratorSpec(Family.PATH, (n,)))


def cycle(n: int) -> Graph:
    return generate(GeneratorSpec(Family.CYCLE, (n,)))


def star(n: int) -> Graph:
    return generate(GeneratorSpec(Family.STAR, (n,)))


def complete(n: int) -> Graph:
    return generate(GeneratorSpec(Family.COMPLETE, (n,)))


def complete_bipartite(n: int, m: int) -> Graph:
    return generate(GeneratorSpec(Family.COMPLETE_BIPARTITE, (n, m)))


def empty(n: int) -> Graph:
    """n 个孤立顶点"""
    return Graph(n, frozenset())


# ============================================================
# Mycielskian 与 join
# ============================================================

@dataclass(frozen=True)
class MycielskianLayout:
    """
    mu(G) 的固定顶点布局

    v_i -> i, u_i -> n + i, w -> 2n + 1
    """
    n: int

    def v(self, i: int) -> int:
        return i

    def u(self, i: int) -> int:
        return self.n + i

    @property
    def w(self) -> int:
        return 2 * self.n + 1

    @property
    def v_vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def u_vertices(self) -> range:
        return range(self.n + 1, 2 * self.n + 1)


def mycielskian_layout(n: int) -> MycielskianLayout:
    return MycielskianLayout(n)


def mycielskian(graph: Graph) -> Graph:
    """
    Mycielskian 图 mu(G)

    边集 = E(G) ∪ {w u_i} ∪ {u_i v_j, u_j v_i : v_i v_j ∈ E(G)}，
    结果有 2n + 1 个顶点、3m + n 条边。
    """
    n = graph.vertex_count
    layout = MycielskianLayout(n)
    edges = set(graph.edges)
    for i in layout.v_vertices:
        edges.add((layout.u(i), layout.w))
    for i, j in graph.edges:
        # u 的编号总是大于 v 的编号
        edges.add((layout.v(j), layout.u(i)))
        edges.add((layout.v(i), layout.u(j)))

    result = Graph(2 * n + 1, frozenset(edges))
    log.debug(f"mycielskian: n={n}, m={graph.edge_count} -> n={result.vertex_count}, m={result.edge_count}")
    return result


def join(first: Graph, second: Graph) -> Graph:
    """
    join 图 G1 ⊕ G2

    G2 的顶点整体平移 n1；加入所有跨部分的边。
    """
    n1 = first.vertex_count
    n2 = second.vertex_count
    edges = set(first.edges)
    edges.update((i + n1, j + n1) for i, j in second.edges)
    edges.update((i, n1 + j) for i in range(1, n1 + 1) for j in range(1, n2 + 1))
    return Graph(n1 + n2, frozenset(edges))


# ============================================================
# 直径公式
# ============================================================

def predicted_mycielskian_diameter(graph: Graph) -> int:
    """
    按 min(max(2, D(G)), 4) 预测 mu(G) 的直径

    Raises:
        PreconditionError: G 含孤立顶点或不连通
    """
    if has_isolated_vertex(graph):
        raise PreconditionError("diameter law requires a graph without isolated vertices")
    if not is_connected(graph):
        raise PreconditionError("diameter law is only validated for connected graphs")
    d = diameter(graph)
    assert d is not UNREACHABLE
    return min(max(2, d), 4)
