# Copyright (c) Opendatalab. All rights reserved.

"""异常层次：每个异常携带退出码，由 client.py 统一转换"""


class BBError(Exception):
    """所有错误的基类"""
    exit_code = 3

    def __init__(self, err_msg: str):
        super().__init__(err_msg)
        self.err_msg = err_msg

    def __str__(self):
        return self.err_msg


class GraphParseError(BBError):
    """输入文件解析错误"""
    exit_code = 2

    def __init__(self, err_msg: str, line: int = 0):
        if line:
            err_msg = f"line {line}: {err_msg}"
        super().__init__(err_msg)
        self.line = line


class LoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class DuplicateVertexError(GraphParseError):
    pass


class UnknownVertexError(GraphParseError):
    pass


class EmptyInputError(GraphParseError):
    pass


class MalformedLineError(GraphParseError):
    pass


class PreconditionError(BBError):
    """输入不满足操作的前置条件"""
    exit_code = 3


class GraphError(PreconditionError):
    """图构造非法（自环、越界、宿主不一致等）"""


class DisconnectedGraphError(PreconditionError):
    pass


class InvalidTreeError(PreconditionError):
    pass


class WordError(PreconditionError):
    pass


class TriangleError(PreconditionError):
    pass


class FavourableTriangleError(PreconditionError):
    pass


class UnfavourableTriangleError(PreconditionError):
    pass


class PeelError(PreconditionError):
    pass


class NotInFamilyError(PreconditionError):
    pass


class FavourableGraphError(PreconditionError):
    pass


class CertificateError(PreconditionError):
    pass


class EnumerationMismatchError(BBError):
    """枚举计数与 Kirchhoff 计数不一致"""


class BudgetExhaustedError(BBError):
    """搜索预算耗尽，结果未知"""
    exit_code = 4
