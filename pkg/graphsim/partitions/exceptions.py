"""
Errors raised while building graphs, partitions and edge classifications
"""


class GraphError(ValueError):
    """Invalid graph input: bad endpoint, self-loop, duplicate edge, or a
    disconnected graph where a connected one is required"""


class PartitionError(ValueError):
    """Invalid partition input or an infeasible number of parts"""


def check_length(expected: int, actual: int, what: str) -> None:
    if expected != actual:
        raise PartitionError(f"{what} has length {actual}, expected {expected}")
