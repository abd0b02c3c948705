from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .javafront.lexer import SourceSpan


class Code(enum.Enum):
    MALFORMED_SQL = "OOPS001"
    UNSUPPORTED_SQL = "OOPS002"
    UNEXTRACTABLE_SQL = "OOPS003"
    PARAM_INDEX_OOB = "OOPS004"
    COLUMN_INDEX_OOB = "OOPS005"
    COLUMN_NAME_UNKNOWN = "OOPS006"
    SETTER_TYPE_MISMATCH = "OOPS007"
    GETTER_TYPE_MISMATCH = "OOPS008"
    NONLOCAL_ACCESS = "OOPS009"
    UNCHECKED_ACCESS = "OOPS010"
    UNEXTRACTABLE_INDEX = "OOPS011"
    ANNOTATION_ARG_MISMATCH = "OOPS012"
    ANNOTATION_RETURN_MISMATCH = "OOPS013"
    OUT_OF_SCOPE = "OOPS014"
    SUBSET_VIOLATION = "OOPS015"


class Severity(enum.IntEnum):
    INFO = 0
    WARNING = 1
    ERROR = 2

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class Diagnostic:
    code: Code
    severity: Severity
    span: SourceSpan
    message: str
    expected: Optional[str] = None
    actual: Optional[str] = None

    def sort_key(self):
        return (self.span.file, self.span.line, self.span.column, self.code.value,
                self.message, -int(self.severity))

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR
