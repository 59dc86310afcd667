"""Exception hierarchy.

Every error raised by the library derives from :class:`QuandleError`, which is
itself a ``ValueError`` so callers that only care about bad input can catch
that.
"""


class QuandleError(ValueError):
    pass


# permutations

class DegreeZero(QuandleError):
    pass


class DegreeMismatch(QuandleError):
    pass


class NotAPermutation(QuandleError):
    pass


# groups

class OrderZero(QuandleError):
    pass


class NotSquare(QuandleError):
    pass


class NoIdentity(QuandleError):
    pass


class NoInverse(QuandleError):
    def __init__(self, a):
        super().__init__(f"element {a} has no inverse")
        self.element = a


class NotAssociative(QuandleError):
    def __init__(self, a, b, c):
        super().__init__(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")
        self.witness = (a, b, c)


class NotLatin(QuandleError):
    def __init__(self, kind, index):
        super().__init__(f"{kind} {index} is not a permutation of the carrier")
        self.kind = kind
        self.index = index


class NotAnAutomorphism(QuandleError):
    pass


class NotAbelian(QuandleError):
    pass


# quandles

class Q1Violation(QuandleError):
    def __init__(self, x):
        super().__init__(f"idempotence fails at element {x}: s_{x}({x}) != {x}")
        self.element = x


class Q2Violation(QuandleError):
    def __init__(self, x):
        super().__init__(f"point symmetry at element {x} is not a bijection")
        self.element = x


class Q3Violation(QuandleError):
    def __init__(self, x, y, z):
        super().__init__(
            f"self-distributivity fails at x={x}, y={y}, z={z}: "
            f"s_x(s_y(z)) != s_(s_x(y))(s_x(z))"
        )
        self.witness = (x, y, z)


class DiagonalNonzero(QuandleError):
    def __init__(self, v):
        super().__init__(f"weight d[{v}][{v}] is not the identity of the weight group")
        self.vertex = v


class SearchBudgetExceeded(QuandleError):
    """The automorphism search visited more nodes than its budget allows.

    This is not a "no" answer; the question is left open.
    """


# closure

class EmptyDegree(QuandleError):
    pass


class MixedDegrees(QuandleError):
    pass


# spec parsing

class SpecError(QuandleError):
    pass


class SpecSyntaxError(SpecError):
    def __init__(self, message, line=None, column=None):
        loc = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"invalid JSON{loc}: {message}")
        self.line = line
        self.column = column


class UnknownType(SpecError):
    def __init__(self, tag, path=""):
        super().__init__(f"{path or '/'}: unknown type {tag!r}")
        self.tag = tag
        self.path = path


class SchemaError(SpecError):
    def __init__(self, path, message):
        super().__init__(f"{path} {message}")
        self.path = path
