"""Exception hierarchy shared by every module."""


class NoncrossError(Exception):
    """Base class for library errors."""


class GeneralPositionError(NoncrossError, ValueError):
    pass


class DuplicatePointError(GeneralPositionError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"duplicate point at indices {self.pair}")


class CollinearTripleError(GeneralPositionError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(f"collinear triple at indices {self.triple}")


class CrossingError(NoncrossError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"edges {self.pair[0]} and {self.pair[1]} cross")


class StructureError(NoncrossError, ValueError):
    pass


class ProjectionTie(NoncrossError):
    pass


class UnbalancedError(NoncrossError, ValueError):
    pass


class NoVisibleEdge(NoncrossError):
    pass


class NotExterior(NoncrossError, ValueError):
    pass


class FrameRequired(NoncrossError, ValueError):
    pass


class NoValidClosure(NoncrossError):
    pass


class OracleCapExceeded(NoncrossError):
    """Brute-force search refused because the instance is above the size cap."""

    def __init__(self, n, cap, what):
        self.n, self.cap, self.what = n, cap, what
        super().__init__(f"{what}: n={n} exceeds cap {cap}")


class GenerationFailed(NoncrossError):
    pass


class ParseError(NoncrossError, ValueError):
    def __init__(self, line, msg):
        self.line = line
        super().__init__(f"line {line}: {msg}")
