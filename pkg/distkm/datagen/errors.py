class DatasetError(Exception):
    """Raised when a dataset cannot be generated or read."""


class CsvParseError(DatasetError):
    """Raised when a CSV cell is not a finite number."""

    def __init__(self, row: int, column: int, message: str):
        super().__init__(f'Row {row}, column {column}: {message}')
        self.row = row
        self.column = column


class InconsistentDimensionError(DatasetError):
    """Raised when the rows of a CSV file have different lengths."""

    def __init__(self, row: int, expected: int, actual: int):
        super().__init__(f'Row {row} has {actual} values, '
                         f'expected {expected}.')
        self.row = row
        self.expected = expected
        self.actual = actual
