from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    FAILURE = 1
    CONFIG = 2
    IO = 3
    DOMAIN = 4


class NullModelError(Exception):
    """Base class for every error raised by nullmodels"""

    exit_code = ExitCode.FAILURE


class ConfigError(NullModelError):
    exit_code = ExitCode.CONFIG


class GraphIOError(NullModelError):
    exit_code = ExitCode.IO


class EdgeListParseError(GraphIOError):
    def __init__(self, path, line_number: int, line: str):
        self.path = path
        self.line_number = line_number
        self.line = line
        super().__init__(f"{path}:{line_number}: malformed edge line {line!r}")


class DomainError(NullModelError, ValueError):
    exit_code = ExitCode.DOMAIN


class StructuralError(DomainError):
    """Graph input violating vertex-id bounds"""


class InsufficientDataError(DomainError):
    """Too few points for a fit"""
