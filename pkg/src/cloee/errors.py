"""Exception types shared across the package."""


class InvalidFrameError(ValueError):
    """Raised when a frame size cannot form a valid PSDU (e.g. shorter than one codeword)."""


class ConfigError(ValueError):
    """Raised on scenario config problems; message carries the offending key path."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")
