"""
Errors raised by the experiment runners
"""


class HypothesisViolation(ValueError):
    """A configuration breaks a precondition of the statement being checked"""

    def __init__(self, inequality: str, detail: str = ""):
        self.inequality = inequality
        message = f"hypothesis violated: {inequality}"
        super().__init__(f"{message} ({detail})" if detail else message)


class CheckFailed(RuntimeError):
    """A statistical check ran to completion and did not pass"""
