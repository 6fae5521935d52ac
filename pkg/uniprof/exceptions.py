"""Exceptions raised by uniprof."""

__all__ = ["InputError", "WorkCapExceeded", "VerificationError"]


class InputError(ValueError):
    """Malformed input or violated precondition.

    ``line`` (1-based line of an input file), ``index`` (position in an
    edge or arc sequence) and ``pair`` (offending vertex pair) are set
    when known.
    """
    def __init__(self, message, line=None, index=None, pair=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.index = index
        self.pair = pair


class WorkCapExceeded(RuntimeError):
    """Operation refused because its predicted cost exceeds a limit."""
    def __init__(self, what, estimate, limit, hint=None):
        message = (f"{what}: estimated cost {float(estimate):.3g} exceeds "
                   f"the limit {float(limit):.3g}")
        if hint is not None:
            message += f"; {hint}"
        super().__init__(message)
        self.estimate = estimate
        self.limit = limit


class VerificationError(RuntimeError):
    """An exact identity, oracle comparison or reference value failed."""
