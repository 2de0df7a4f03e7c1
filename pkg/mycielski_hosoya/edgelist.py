"""
边列表文本格式

格式 (UTF-8):
+--------------------+------------------------------------------+
| # ...              | 注释行，忽略                              |
| n                  | 第一个有效行：顶点数                      |
| i j                | 之后每个有效行：一条边，1-based，空白分隔 |
+--------------------+------------------------------------------+

空行同样忽略。写出时边按 i < j 规范化并按字典序排列。
"""

import logging
from pathlib import Path
from typing import Union

from .constants import COMMENT_PREFIX
from .errors import EdgeListParseError, GraphError
from .graph import Graph, from_edge_list

log = logging.getLogger(__name__)

PathLike = Union[str, Path]


def parse_edge_list(text: str) -> Graph:
    """
    从边列表文本解析图

    Raises:
        EdgeListParseError: 格式错误或图非法，携带出错行号
    """
    n = None
    header_line = 0
    pairs: dict[tuple[int, int], int] = {}  # 边 -> 首次出现的行号

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIX):
            continue

        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise EdgeListParseError(line_no, f"expected vertex count, got {line!r}")
            n = _parse_int(fields[0], line_no)
            if n < 1:
                raise EdgeListParseError(line_no, f"vertex count must be positive, got {n}")
            header_line = line_no
            continue

        if len(fields) != 2:
            raise EdgeListParseError(line_no, f"expected 'i j', got {line!r}")
        i, j = (_parse_int(f, line_no) for f in fields)

        # 逐条校验，以便报告行号
        if i == j:
            raise EdgeListParseError(line_no, f"self-loop at vertex {i}")
        for endpoint in (i, j):
            if not (1 <= endpoint <= n):
                raise EdgeListParseError(line_no, f"endpoint {endpoint} out of range 1..{n}")
        edge = (min(i, j), max(i, j))
        if edge in pairs:
            first = pairs[edge]
            raise EdgeListParseError(
                line_no, f"duplicate edge {edge[0]}-{edge[1]} (first on line {first})"
            )
        pairs[edge] = line_no

    if n is None:
        raise EdgeListParseError(max(header_line, 1), "missing vertex count")

    try:
        return from_edge_list(n, pairs)
    except GraphError as e:
        raise EdgeListParseError(header_line, str(e)) from e


def format_edge_list(graph: Graph, comment: str = "") -> str:
    """将图写成规范边列表文本"""
    lines = []
    if comment:
        lines.extend(f"{COMMENT_PREFIX} {c}" for c in comment.splitlines())
    lines.append(str(graph.vertex_count))
    lines.extend(f"{i} {j}" for i, j in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: PathLike) -> Graph:
    """
    读取边列表文件

    逐行按 UTF-8 解码，非法字节报告所在行号。
    """
    lines = []
    for line_no, raw in enumerate(Path(path).read_bytes().split(b"\n"), start=1):
        try:
            lines.append(raw.decode("utf-8"))
        except UnicodeDecodeError:
            raise EdgeListParseError(line_no, "invalid UTF-8") from None
    graph = parse_edge_list("\n".join(lines))
    log.debug(f"Read {path}: n={graph.vertex_count}, m={graph.edge_count}")
    return graph


def write_edge_list(graph: Graph, path: PathLike, comment: str = "") -> None:
    Path(path).write_text(format_edge_list(graph, comment), encoding="utf-8")
    log.info(f"Wrote {path}: n={graph.vertex_count}, m={graph.edge_count}")


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListParseError(line_no, f"not an integer: {token!r}") from None
