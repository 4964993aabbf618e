class RoughSetError(ValueError):
    """Base class for validation failures raised by this package."""


class TableFormatError(RoughSetError):
    pass


class UnknownAttributeError(RoughSetError):
    pass


class UnknownObjectError(RoughSetError):
    pass


class EmptyTargetError(RoughSetError):
    pass


class SystemMismatchError(RoughSetError):
    pass


class GraphError(RoughSetError):
    pass


class UnknownVertexError(GraphError):
    pass


class OverlappingVerticesError(GraphError):
    pass
