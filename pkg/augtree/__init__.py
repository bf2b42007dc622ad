"""
k-DOAT toolchain
树加捷径直径计算、精确/近似求解与下界实例生成
"""

__version__ = "1.0.0"
