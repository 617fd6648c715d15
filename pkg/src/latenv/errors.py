"""Exception hierarchy shared by every module."""


class LatticeError(Exception):
    """Base class for all errors raised by latenv."""


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class Unbounded(NotALattice):
    """No least or greatest element; ``pair`` names two minimal (or maximal) elements."""


class NotDistributive(LatticeError):
    pass


class SizeExceeded(LatticeError):
    """A configured enumeration cap was hit; the computation was aborted."""


class PreconditionViolated(LatticeError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotDistributiveCodomain(PreconditionViolated):
    pass


class NotAdjoint(LatticeError):
    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


class NotDoublyDense(LatticeError):
    def __init__(self, msg, element=None):
        super().__init__(msg)
        self.element = element


class NotTSCP(LatticeError):
    pass


class NotDaDLMorphism(LatticeError):
    def __init__(self, msg, square=None):
        super().__init__(msg)
        self.square = square


class TheoremViolation(LatticeError):
    """A checked theorem failed. Always indicates a bug in this package."""


class ParseError(LatticeError):
    def __init__(self, msg, position=None):
        super().__init__(msg if position is None else f"{msg} (at {position})")
        self.position = position
