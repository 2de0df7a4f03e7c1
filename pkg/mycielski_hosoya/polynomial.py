"""
精确整数多项式与有理数

Hosoya 多项式和基于导数的指数公式的计算基础。

- IntPolynomial: 稠密整数系数多项式，coefficients = (c_1, ..., c_D)，
  constant 为常数项（Hosoya 多项式恒为 0，求导后可能非 0）
- Rational: fractions.Fraction，始终为最简形式，分母为正

Python int 为任意精度，整数运算不会回绕。
"""

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation, Overflow, localcontext
from fractions import Fraction
from numbers import Integral
from typing import Iterable, Union

from .constants import DECIMAL_DIGITS
from .errors import ArithmeticOverflowError

Rational = Fraction
Number = Union[int, Fraction]


# ============================================================
# IntPolynomial 类
# ============================================================

@dataclass(frozen=True)
class IntPolynomial:
    """
    整数系数多项式 constant + c_1 x + ... + c_D x^D

    不变量: c_D != 0，除非 D = 0（系数元组为空）。
    """
    coefficients: tuple = ()
    constant: int = 0

    def __post_init__(self):
        coeffs = [_as_int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "constant", _as_int(self.constant))

    @classmethod
    def from_dense(cls, dense: Iterable[int]) -> "IntPolynomial":
        """由 x^0, x^1, ... 的系数序列构造"""
        dense = list(dense)
        if not dense:
            return cls()
        return cls(tuple(dense[1:]), dense[0])

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients and self.constant == 0

    def dense(self) -> list[int]:
        """x^0, x^1, ..., x^D 的系数"""
        return [self.constant, *self.coefficients]

    def coefficient(self, k: int) -> int:
        if k == 0:
            return self.constant
        if 1 <= k <= self.degree:
            return self.coefficients[k - 1]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.dense(), other.dense()
        size = max(len(a), len(b))
        a += [0] * (size - len(a))
        b += [0] * (size - len(b))
        return IntPolynomial.from_dense(x + y for x, y in zip(a, b))

    def __str__(self) -> str:
        return render_polynomial(self)

    def to_json(self) -> list[int]:
        """JSON 系数数组 [c_1, ..., c_D]"""
        return list(self.coefficients)


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise ValueError(f"polynomial coefficients must be integers, got {value!r}")
    return int(value)


# ============================================================
# 多项式运算
# ============================================================

def eval_rational(p: IntPolynomial, q: Number) -> Fraction:
    """精确计算 p(q)（Horner 法）"""
    q = Fraction(q)
    value = Fraction(0)
    for c in reversed(p.dense()):
        value = value * q + c
    return value


def derivative(p: IntPolynomial, order: int = 1) -> IntPolynomial:
    """形式导数，求 order 次"""
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"derivative order must be a non-negative integer, got {order!r}")
    dense = p.dense()
    for _ in range(order):
        if len(dense) <= 1:
            return IntPolynomial()
        dense = [k * c for k, c in enumerate(dense)][1:]
    return IntPolynomial.from_dense(dense)


def shift_multiply(p: IntPolynomial, power: int) -> IntPolynomial:
    """乘以 x^power，系数整体上移"""
    if not isinstance(power, int) or power < 1:
        raise ValueError(f"shift power must be a positive integer, got {power!r}")
    if p.is_zero:
        return IntPolynomial()
    return IntPolynomial.from_dense([0] * power + p.dense())


# ============================================================
# 文本渲染
# ============================================================

def render_polynomial(p: IntPolynomial) -> str:
    """
    规范文本 "c1*x + c2*x^2 + ..."

    省略零项；系数 1 省略为 "x^k"；负系数以 " - " 连接；零多项式为 "0"。
    """
    terms: list[tuple[int, str]] = []
    for k, c in enumerate(p.dense()):
        if c == 0:
            continue
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        terms.append((c, body))

    if not terms:
        return "0"

    first_c, first_body = terms[0]
    parts = [f"-{first_body}" if first_c < 0 else first_body]
    for c, body in terms[1:]:
        parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def render_rational(q: Number) -> str:
    """最简分数 "p/q"，分母为 1 时为整数"""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_decimal(q: Number, digits: int = DECIMAL_DIGITS) -> str:
    """
    精确值的十进制近似（仅供人工阅读）

    Raises:
        ArithmeticOverflowError: 数值超出十进制上下文可表示范围
    """
    q = Fraction(q)
    try:
        with localcontext() as ctx:
            ctx.prec = 28 + digits
            value = Decimal(q.numerator) / Decimal(q.denominator)
            return str(value.quantize(Decimal(1).scaleb(-digits)))
    except (InvalidOperation, Overflow) as e:
        raise ArithmeticOverflowError(
            f"{render_rational(q)} cannot be rendered with {digits} decimal digits"
        ) from e
