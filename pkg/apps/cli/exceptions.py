class ProbeRefusedError(Exception):
    """The requested probe would build graded pieces beyond the configured size."""

    def __init__(self, message, dimension):
        super().__init__(message)
        self.dimension = dimension
