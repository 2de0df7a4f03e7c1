"""
Mycielski Hosoya Package

精确计算图的 Hosoya 多项式、Mycielskian 构造以及基于距离的拓扑指数和脆弱性度量
（Wiener 系列、Harary、closeness、VRC、betweenness），并用暴力距离计算交叉验证
Mycielskian 闭式系数定理。
"""

__version__ = "1.0.0"
__all__ = [
    "constants",
    "errors",
    "graph",
    "edgelist",
    "constructions",
    "polynomial",
    "hosoya",
    "indices",
    "verify",
    "cli",
]
