"""Exception types shared across the package."""


class CategoryError(Exception):
    """Base class for malformed category data."""


class ParseError(CategoryError):
    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


class MissingComposite(CategoryError):
    def __init__(self, g, f):
        self.g, self.f = g, f
        super().__init__(f"no composite declared for {g!r} . {f!r}")


class NonAssociative(CategoryError):
    def __init__(self, f, g, h):
        self.f, self.g, self.h = f, g, h
        super().__init__(f"({h!r} . {g!r}) . {f!r} != {h!r} . ({g!r} . {f!r})")


class BrokenUnit(CategoryError):
    def __init__(self, f):
        self.f = f
        super().__init__(f"unit law fails at {f!r}")


class DanglingId(CategoryError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown identifier {name!r}")


class UnknownObject(CategoryError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown object {name!r}")


class NotComposable(CategoryError):
    def __init__(self, g, f):
        super().__init__(f"{g!r} . {f!r}: codomain/domain mismatch")


class BoundExceeded(CategoryError):
    def __init__(self, estimate, bound):
        self.estimate, self.bound = estimate, bound
        super().__init__(f"enumeration estimate {estimate} exceeds bound {bound}")


class FunctorError(CategoryError):
    pass


class MissingStructure(Exception):
    """A universal construction required by a computation is not available."""


class MissingProduct(MissingStructure):
    pass


class MissingPullback(MissingStructure):
    pass


class MissingExponential(MissingStructure):
    pass


class BudgetExceeded(Exception):
    pass


class MissingEqualizer(MissingStructure):
    pass


class MissingDependentProduct(MissingStructure):
    pass


class NoTerminalInBase(MissingStructure):
    pass


class NotAFibration(CategoryError):
    pass


class NotCloven(CategoryError):
    pass
