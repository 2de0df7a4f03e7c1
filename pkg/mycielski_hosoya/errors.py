"""
异常定义

图输入、生成器语法、定理前提以及算术溢出相关的异常。
"""

from typing import Optional


class GraphError(ValueError):
    """图数据非法（自环、越界端点、重复边等）"""
    pass


class EdgeListParseError(GraphError):
    """边列表文本解析失败，line_no 为 1-based 行号"""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        self.message = message
        super().__init__(f"line {line_no}: {message}")


class SpecGrammarError(GraphError):
    """生成器规格字符串语法错误，position 为 0-based 列位置"""

    def __init__(self, position: int, message: str, text: Optional[str] = None):
        self.position = position
        self.message = message
        self.text = text
        super().__init__(f"position {position}: {message}")


class PreconditionError(ValueError):
    """定理或运算的前提条件不满足"""
    pass


class DisconnectedGraphError(PreconditionError):
    pass


class ArithmeticOverflowError(OverflowError):
    """精确值无法转换为目标表示"""
    pass
