"""Exception hierarchy for kmroots."""


class KmRootsError(Exception):
    """Base class for all library errors."""


class NotSymmetrizable(KmRootsError):
    pass


class InvalidCartanMatrix(KmRootsError):
    pass


class NonIntegralReflection(KmRootsError):
    pass


class NotRealRoot(KmRootsError):
    pass


class RankDeficient(KmRootsError):
    pass


class NotSublattice(KmRootsError):
    pass


class NotCrystallographic(KmRootsError):
    pass


class AcutePair(KmRootsError):
    pass


class DependentRoots(KmRootsError):
    pass


class NotDoublingFacet(KmRootsError):
    pass


class NotHyperbolicSubtype(KmRootsError):
    pass


class HeightBoundTooSmall(KmRootsError):
    pass


class MismatchedChain(KmRootsError):
    pass


class Exceeded(KmRootsError):
    """Coset enumeration ran past its coset budget.  Not a proof of infinite index."""

    def __init__(self, max_cosets: int):
        super().__init__(f"coset enumeration exceeded {max_cosets} cosets")
        self.max_cosets = max_cosets


class UnverifiedRecord(KmRootsError):
    pass


class DiagramParseError(KmRootsError):
    """Base for diagram DSL errors; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DiagramSyntaxError(DiagramParseError):
    pass


class DuplicateEdge(DiagramParseError):
    pass


class BadLabel(DiagramParseError):
    pass


class SelfLoop(DiagramParseError):
    pass


class IndexOutOfRange(DiagramParseError):
    pass


class SchemaError(KmRootsError):
    """Catalog JSON does not match the schema; ``path`` locates the problem."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{path}: {message}")
        self.path = path
