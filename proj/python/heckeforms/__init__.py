from ._heckeforms import (  # noqa: F401
    Context,
    Form,
    Matrix,
    GrammarError,
    DomainValueError,
    InternalDiagnostic,
)

__all__ = [
    "Context",
    "Form",
    "Matrix",
    "GrammarError",
    "DomainValueError",
    "InternalDiagnostic",
]
