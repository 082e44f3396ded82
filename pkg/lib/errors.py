"""
Exception hierarchy for mapper-signatures.
Every library error carries a stable machine-readable code.
"""
from typing import Any, Dict, List, Optional


class MapperSignatureError(Exception):
    """Base class for library errors."""
    code = "MAPPER_ERROR"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a JSON-ready dictionary."""
        return {"code": self.code, "message": str(self)}


class InvalidParameters(MapperSignatureError):
    code = "INVALID_PARAMETERS"


class CoverValidationError(MapperSignatureError):
    """Raised by validate_gomic; lists every violation found."""
    code = "INVALID_COVER"

    def __init__(self, violations: List[Any]):
        self.violations = list(violations)
        kinds = ", ".join(sorted({v.kind for v in self.violations}))
        super().__init__(f"Cover is not a gomic ({kinds})")

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["violations"] = [v.to_dict() for v in self.violations]
        return payload


class BandOccupied(MapperSignatureError):
    code = "BAND_OCCUPIED"


class DegenerateCover(MapperSignatureError):
    code = "DEGENERATE_COVER"


class NonGenericValues(MapperSignatureError):
    code = "NON_GENERIC_VALUES"


class SlabAttachmentAmbiguous(MapperSignatureError):
    code = "SLAB_ATTACHMENT_AMBIGUOUS"


class EndpointCollision(MapperSignatureError):
    code = "ENDPOINT_COLLISION"


class ForkExpected(MapperSignatureError):
    """A critical value inside an intersection is not the fork canonicalization needs."""
    code = "FORK_EXPECTED"


class InvalidEpsilon(MapperSignatureError):
    code = "INVALID_EPSILON"


class OutOfRange(MapperSignatureError):
    code = "OUT_OF_RANGE"


class UncoveredValue(MapperSignatureError):
    code = "UNCOVERED_VALUE"


class ParseError(MapperSignatureError):
    """Input file could not be parsed."""
    code = "PARSE_ERROR"

    def __init__(self, message: str, path: Optional[str] = None,
                 line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{location}{message}")

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["path"] = self.path
        payload["line"] = self.line
        return payload


__all__ = [
    'MapperSignatureError', 'InvalidParameters', 'CoverValidationError',
    'BandOccupied', 'DegenerateCover', 'NonGenericValues',
    'SlabAttachmentAmbiguous', 'EndpointCollision', 'InvalidEpsilon',
    'OutOfRange', 'UncoveredValue', 'ParseError'
]
