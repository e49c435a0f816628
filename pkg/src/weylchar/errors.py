"""Exception types shared across the engine."""


class InputError(ValueError):
    """Malformed or inconsistent user-supplied data (shapes, sizes, files)."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree produced different answers: a bug sentinel."""
