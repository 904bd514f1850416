import csv
import logging
import math
from pathlib import Path
from typing import Optional, Sequence, Union

from distkm.geometry import Dataset
from distkm.datagen.errors import DatasetError, CsvParseError, \
    InconsistentDimensionError


logger = logging.getLogger(__name__)


def _parse(cell: str, row: int, column: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise CsvParseError(row, column, f'{cell!r} is not a number.') from None
    if not math.isfinite(value):
        raise CsvParseError(row, column, f'{cell!r} is not finite.')
    return value


def load_csv(path: Union[str, Path],
             delimiter: str = ',',
             header: bool = False,
             columns: Optional[Sequence[int]] = None) -> Dataset:
    """Reads one point per row of a CSV file.

    Blank lines are skipped. The dimension is set by the first data row and
    every later row must match it.

    Args:
        path: The file to read, UTF-8 encoded.
        delimiter: The field delimiter.
        header: Whether the first row is a header to skip.
        columns: Zero-based positions of the fields to use. Defaults to all
            fields.

    Returns:
        The points, indexed in file order.

    Raises:
        CsvParseError: Raised for a cell that is not a finite number, with
            its one-based row (the line in the file) and column.
        InconsistentDimensionError: Raised for a row whose length differs
            from the first row.
        DatasetError: Raised when the file cannot be read or decoded, is
            not valid CSV, has no data rows or a selected column does not
            exist.
    """

    rows, dim, reader = [], None, None

    try:
        with open(path, newline='', encoding='utf-8') as file:
            reader = csv.reader(file, delimiter=delimiter)
            for number, fields in enumerate(reader, start=1):
                if header and number == 1:
                    continue
                if not fields or all(not f.strip() for f in fields):
                    continue

                if dim is None:
                    dim = len(fields)
                elif len(fields) != dim:
                    raise InconsistentDimensionError(number, dim, len(fields))

                if columns is None:
                    selected = range(len(fields))
                else:
                    selected = columns
                    missing = [c for c in columns if not 0 <= c < len(fields)]
                    if missing:
                        raise DatasetError(f'Row {number} has no column '
                                           f'{missing[0] + 1}.')

                rows.append([_parse(fields[c].strip(), number, c + 1)
                             for c in selected])
    except OSError as exc:
        raise DatasetError(f'Cannot read {path}: {exc}') from exc
    except UnicodeDecodeError as exc:
        raise DatasetError(f'{path} is not UTF-8 text: {exc.reason}.') from exc
    except csv.Error as exc:
        line = reader.line_num if reader is not None else 0
        raise DatasetError(f'{path}, line {line}: {exc}') from exc

    if not rows:
        raise DatasetError(f'{path} has no data rows.')

    logger.info('Loaded %d points of dimension %d from %s.',
                len(rows), len(rows[0]), path)
    return Dataset(rows)


def save_csv(dataset: Dataset,
             path: Union[str, Path],
             delimiter: str = ',',
             header: Optional[Sequence[str]] = None):
    """Writes one point per row, with the shortest exact float notation."""

    with open(path, 'w', newline='', encoding='utf-8') as file:
        writer = csv.writer(file, delimiter=delimiter)
        if header is not None:
            writer.writerow(header)
        writer.writerows(dataset.points.tolist())

    logger.info('Saved %d points to %s.', len(dataset), path)
