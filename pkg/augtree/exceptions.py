"""
领域异常

所有领域错误都继承 AugTreeError，CLI 将其映射为退出码 1。
"""


class AugTreeError(Exception):
    """领域错误基类"""


class TreeError(AugTreeError):
    """树结构非法（边数、连通性、编号、代价）"""


class DoatParseError(AugTreeError):
    """DOAT 文本格式解析失败"""


class HeaderError(DoatParseError):
    pass


class EdgeCountError(DoatParseError):
    pass


class CostFormatError(DoatParseError):
    pass


class CostOverflowError(DoatParseError):
    pass


class ShortcutError(AugTreeError):
    """捷径集合非法"""


class ForestError(AugTreeError):
    """动态森林的 link/cut 前置条件不满足"""


class TerminalError(AugTreeError):
    """终端点操作非法（重复标记、对非终端设置 α、空终端集）"""


class RollbackError(AugTreeError):
    """回滚令牌不符合 LIFO 顺序"""


class RangeQueryError(AugTreeError, IndexError):
    """祖先/路径查询越界"""


class WorkBudgetExceeded(AugTreeError):
    """枚举工作量超过预算"""


class ReductionError(AugTreeError):
    """约简实例无法构造（η > n）"""


class InvalidLowerBoundParams(AugTreeError):
    """下界实例参数非法"""


class NotAPathError(AugTreeError):
    pass


class NonBinaryTreeError(AugTreeError):
    pass
