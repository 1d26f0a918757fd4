class DegenerateMeasureError(ArithmeticError):
    """A measure's denominator vanished, so the value is undefined"""

    def __init__(self, measure: str, reason: str):
        self.measure = measure
        self.reason = reason
        super().__init__(f"{measure} is undefined: {reason}")
