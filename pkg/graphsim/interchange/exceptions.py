class ParseError(ValueError):
    """Malformed input file; ``line`` is 1-based"""

    def __init__(self, line: int, message: str, path=None):
        self.line = line
        self.path = path
        super().__init__(f"line {line}: {message}")

    def located(self) -> str:
        return f"{self.path}: {self}" if self.path else str(self)
