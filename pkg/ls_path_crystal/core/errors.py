from typing import Any, Optional


class LSCrystalError(Exception):
    pass


class UnsupportedTypeError(LSCrystalError):
    pass


class InvalidInputError(LSCrystalError, ValueError):
    pass


class NotARootError(LSCrystalError):
    pass


class WeightError(LSCrystalError):
    pass


class NotComparableError(LSCrystalError):
    pass


class PathError(LSCrystalError, ValueError):
    pass


class NotLSPathError(LSCrystalError):
    pass


class SignatureError(LSCrystalError):
    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class CapExceededError(LSCrystalError):
    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


class ExportFormatError(LSCrystalError):
    pass


class ConfigError(LSCrystalError):
    pass
