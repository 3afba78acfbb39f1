class NdgsError(Exception):
    """Base class for solver and harness failures."""


class MaxIters(NdgsError):
    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NonConcaveStep(NdgsError):
    """The inner objective decreased after a full line search."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class CapViolation(NdgsError):
    pass


class GapViolation(NdgsError):
    pass


class NoBracket(NdgsError):
    pass


class DegenerateFit(NdgsError):
    def __init__(self, message, fit=None):
        super().__init__(message)
        self.fit = fit


class TailTooShort(NdgsError):
    pass


class SweepFailed(NdgsError):
    def __init__(self, message, records=None, failures=None):
        super().__init__(message)
        self.records = records or []
        self.failures = failures or []


class FieldFormatError(NdgsError):
    pass


class BadMagic(FieldFormatError):
    pass


class VersionMismatch(FieldFormatError):
    pass


class TruncatedPayload(FieldFormatError):
    pass
