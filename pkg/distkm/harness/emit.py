import csv
import io
from pathlib import Path
from typing import List, Optional, Sequence, Union

import numpy as np

from distkm.harness.config import OutputFormat
from distkm.harness.rows import ResultRow, FIELDS, TIMING_FIELDS


def columns(timing: bool = True) -> List[str]:
    """Returns the table columns, optionally without the timing ones."""
    return [name for name in FIELDS if timing or name not in TIMING_FIELDS]


def format_value(value) -> str:
    """Formats a cell with a '.' decimal point and no thousands separator.

    Floats use their shortest exact notation, so a parsed cell equals the
    original value.

    Examples:
        >>> format_value(3.0), format_value(None), format_value(12)
        ('3.0', '', '12')
    """

    if value is None:
        return ''
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _table(rows: Sequence[ResultRow], timing: bool) -> List[List[str]]:
    names = columns(timing)
    return [names] + [[format_value(getattr(row, name)) for name in names]
                      for row in rows]


def to_csv(rows: Sequence[ResultRow], timing: bool = True) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator='\n').writerows(_table(rows, timing))
    return buffer.getvalue()


def to_markdown(rows: Sequence[ResultRow], timing: bool = True) -> str:
    table = _table(rows, timing)
    widths = [max(len(line[i]) for line in table) for i in range(len(table[0]))]

    def line(cells):
        return '| ' + ' | '.join(c.ljust(w) for c, w in zip(cells, widths)) + ' |'

    rule = '|' + '|'.join('-' * (w + 2) for w in widths) + '|'
    return '\n'.join([line(table[0]), rule] + [line(t) for t in table[1:]]) + '\n'


def emit(rows: Sequence[ResultRow],
         format: Union[OutputFormat, str] = OutputFormat.CSV,
         path: Optional[Union[str, Path]] = None,
         timing: bool = True) -> str:
    """Renders rows as a CSV or markdown table and writes it to `path`.

    Args:
        rows: The rows, at least one.
        format: The table format.
        path: The file to write, if any.
        timing: Whether to include the timing columns.

    Returns:
        The rendered table.

    Raises:
        ValueError: Raised when there are no rows.
        OSError: Raised when the file cannot be written.
    """

    if not rows:
        raise ValueError('There are no rows to emit.')

    if OutputFormat(format) is OutputFormat.CSV:
        text = to_csv(rows, timing)
    else:
        text = to_markdown(rows, timing)

    if path is not None:
        Path(path).write_text(text, encoding='utf-8')
    return text
