"""Exception hierarchy shared by every scverify module."""


class ScverifyError(Exception):
    pass


class NotInvertible(ScverifyError, ValueError):
    pass


class PrimeMismatch(ScverifyError, ValueError):
    pass


class DivisionByZero(ScverifyError, ZeroDivisionError):
    pass


class PrecisionError(ScverifyError, ValueError):
    """A residue was requested beyond the precision the value is known to."""


class DenominatorNotUnit(ScverifyError, ValueError):
    pass


class InapplicablePrime(ScverifyError, ValueError):
    pass


class WrongResidueClass(ScverifyError, ValueError):
    pass


class BudgetExceeded(ScverifyError, RuntimeError):
    pass


class ConfigInvalid(ScverifyError, ValueError):
    pass
