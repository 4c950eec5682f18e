"""herfam - 遗传集合族的极值计算与定理/猜想验证工具."""

__version__ = "0.1.0"
