"""
Exception hierarchy for oddprod
Every error carries a machine-readable rule id so the CLI and the document
loaders can report failures consistently
"""

from typing import Optional


class OddProdError(Exception):
    """
    Base class for all oddprod errors.

    Carries a rule id (e.g. ``host.index``) alongside the human message and,
    when the error wraps another, the original exception.
    """

    rule_id: str = "oddprod"

    def __init__(
        self,
        message: str,
        rule_id: Optional[str] = None,
        original_exception: Optional[Exception] = None,
    ):
        super().__init__(message)
        if rule_id is not None:
            self.rule_id = rule_id
        self.original_exception = original_exception

    def __str__(self) -> str:
        return f"[{self.rule_id}] {super().__str__()}"


class InvalidParameterError(OddProdError):
    """A generator or command received parameters outside their domain"""

    rule_id = "param"


class InvalidVertexError(OddProdError):
    """A product vertex has coordinates outside the factor ranges"""

    rule_id = "vertex.range"


class ContractError(OddProdError):
    """A caller violated an operation precondition (e.g. a partial colouring)"""

    rule_id = "contract"


class DocumentError(OddProdError):
    """Base class for on-disk document failures"""

    rule_id = "document"


class DocumentSyntaxError(DocumentError):
    """The document is not well-formed JSON"""

    rule_id = "document.syntax"

    def __init__(self, message: str, line: int, column: int, **kwargs):
        super().__init__(f"{message} (line {line}, column {column})", **kwargs)
        self.line = line
        self.column = column


class DocumentSemanticError(DocumentError):
    """The document parses but describes an invalid object"""

    rule_id = "document.semantic"


class DocumentVersionError(DocumentError):
    """The document declares a format version this build cannot read"""

    rule_id = "document.version"


class OracleRefusalError(OddProdError):
    """The exact oracle refuses inputs above its vertex cap"""

    rule_id = "oracle.cap"


class PaletteExhaustedError(OddProdError):
    """
    No colour was free for a vertex.

    With the default palette this signals a bug or an invalid instance; with a
    palette override below the bound it is an expected experimental outcome.
    """

    rule_id = "palette.exhausted"

    def __init__(self, message: str, vertex: tuple, palette: int, **kwargs):
        super().__init__(message, **kwargs)
        self.vertex = vertex
        self.palette = palette
