"""
常量定义

包含 mycielski-hosoya 使用的全局常量：退出码、验证语料库默认参数、输出格式。
"""

# 退出码
EXIT_OK = 0
ERR_USAGE = 1      # 用法错误 / 解析错误
ERR_VERIFY = 2     # 验证失败
ERR_OVERFLOW = 3   # 算术溢出

# 验证语料库默认配置
DEFAULT_SEED = 0
DEFAULT_COUNT = 200
DEFAULT_MAX_N = 40
DEFAULT_FAMILY_MAX = 50
JOIN_OPERAND_MAX_N = 12         # join 语料的操作数顶点数上限
MAX_RESAMPLE_ATTEMPTS = 1000    # 每个实例的连通性重采样上限
EDGE_PROBABILITY_RANGE = (0.1, 0.9)

# 输出
DECIMAL_DIGITS = 6

# 环境变量
VERBOSE_ENV = "MYCIELSKI_HOSOYA_VERBOSE"

# 边列表文件
COMMENT_PREFIX = "#"
