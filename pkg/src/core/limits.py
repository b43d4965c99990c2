"""
QThermo-Py 数值定义域上限

数值模块与运行配置验证共用的 |β| 上限。
"""

# 超过此值 I_n(β) 在双精度下溢出
POISSON_MAX_ABS_BETA = 700.0

# β 上的 Fisher 信息与 Jeffreys 先验只在此范围内计算
FISHER_MAX_ABS_BETA = 100.0
