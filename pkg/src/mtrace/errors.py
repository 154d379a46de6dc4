"""Exception hierarchy shared by every layer of the package."""


class MtraceError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(MtraceError):
    pass


class DivisionByZero(MtraceError, ZeroDivisionError):
    pass


class DimensionMismatch(MtraceError):
    pass


class SchemaError(MtraceError):
    pass


class AxiomViolation(MtraceError):
    """An algebraic axiom failed; ``axiom`` names it and ``witness`` locates it."""

    def __init__(self, axiom, witness=(), detail=""):
        self.axiom = axiom
        self.witness = tuple(witness)
        msg = f"{axiom} violated at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class UnsupportedCharacteristic(MtraceError):
    pass


class NotSplit(MtraceError):
    pass


class NotARepresentation(MtraceError):
    def __init__(self, witness, detail=""):
        self.witness = tuple(witness)
        super().__init__(f"representation law fails for basis pair {self.witness} {detail}".rstrip())


class AlgebraMismatch(MtraceError):
    pass


class ShapeMismatch(MtraceError):
    pass


class NotAbsIndec(MtraceError):
    pass


class HomNotLine(MtraceError):
    def __init__(self, side, dim):
        self.side = side
        self.dim = dim
        super().__init__(f"Hom space on the {side} side has dimension {dim}, expected 1")


class ZeroMorphism(MtraceError):
    pass


class NotInIdeal(MtraceError):
    pass


class NotAbsIrred(MtraceError):
    pass
