"""Exception hierarchy shared by all xmhopf modules."""


class XmhopfError(Exception):
    """Base class for all errors raised by this package."""


class MixedFieldsError(XmhopfError):
    """Operands live over different ground fields."""


class DivisionByZeroError(XmhopfError):
    """Division or inversion of the zero scalar."""


class ShapeMismatchError(XmhopfError):
    """Matrix or tensor shapes do not compose."""


class NonComposableError(XmhopfError):
    """Arrows or graded homs whose endpoints do not match."""


class NotNormalError(XmhopfError):
    """A conjugate escapes the image of the embedding."""


class NotAbelianError(XmhopfError):
    """Construction requires an abelian group."""


class MissingAntipodeError(XmhopfError):
    """Operation needs an antipode that has not been computed."""


class NotGrouplikeError(XmhopfError):
    """Candidate family fails the grouplike conditions."""


class NotBicharacterError(XmhopfError):
    """Pairing table is not multiplicative in both arguments."""


class NotAlgebraAutomorphismError(XmhopfError):
    """A map fails to be an algebra automorphism."""


class NotHomomorphismError(XmhopfError):
    """A map table fails to be a group homomorphism."""


class NotPivotalError(XmhopfError):
    """Grouplike family is not pivotal."""


class NotHomogeneousError(XmhopfError):
    """Module is not concentrated in a single degree."""


class NotIntegralError(XmhopfError):
    """Covector family fails the integral conditions."""


class NotInvertibleError(XmhopfError):
    """A structure map expected to be invertible is singular."""


class DefiningIdentityFailedError(XmhopfError):
    """A computed element fails its defining identity (invalid input)."""


class AxiomCheckFailedError(XmhopfError):
    """A construction that must be self-verifying failed its own axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
