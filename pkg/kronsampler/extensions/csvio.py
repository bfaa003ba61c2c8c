"""
Matrix CSV: a ``rows,cols`` header line followed by ``rows`` lines of
``cols`` comma-separated values. Vectors are matrices with one column.

Values are written with 17 significant digits so that they read back
exactly.
"""
import csv
import io

import numpy as np

from .. import helpers
from ..errors import InvalidInputError, DimensionMismatchError


def _parse_header(row, path):
    try:
        rows, cols = (int(x) for x in row)
    except (TypeError, ValueError):
        raise InvalidInputError(
            '{}: the first line must be "rows,cols", not {!r}'
            .format(path, ','.join(row))) from None
    if rows < 1 or cols < 1:
        raise InvalidInputError('{}: empty {}x{} matrix'.format(path, rows, cols))
    return rows, cols


def loads_matrix(text, *, path='<string>'):
    """Parses the matrix CSV held in ``text``."""
    reader = csv.reader(line for line in io.StringIO(text) if line.strip())
    try:
        header = next(reader)
    except StopIteration:
        raise InvalidInputError('{}: empty file'.format(path)) from None

    rows, cols = _parse_header(header, path)
    data = np.empty((rows, cols))
    count = 0
    for i, row in enumerate(reader):
        if i >= rows:
            raise DimensionMismatchError('{} rows'.format(path), rows, 'more')
        if len(row) != cols:
            raise DimensionMismatchError(
                '{} line {}'.format(path, i + 2), cols, len(row))
        try:
            data[i] = [float(x) for x in row]
        except ValueError as e:
            raise InvalidInputError('{} line {}: {}'.format(path, i + 2, e)) from None
        count += 1

    if count != rows:
        raise DimensionMismatchError('{} rows'.format(path), rows, count)
    if not np.all(np.isfinite(data)):
        raise InvalidInputError('{} has non-finite entries'.format(path))
    return data


def dumps_matrix(m, digits=17):
    m = np.atleast_2d(np.asarray(m, dtype=np.float64))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(m.shape)
    for row in m:
        writer.writerow([helpers.format_float(x, digits) for x in row])
    return out.getvalue()


def read_matrix(path):
    """Reads a matrix CSV file into a float64 array."""
    with open(path, encoding='utf-8') as f:
        return loads_matrix(f.read(), path=str(path))


def write_matrix(path, m, digits=17):
    """Writes ``m`` as matrix CSV, creating the parent directory if needed."""
    helpers.ensure_parent_dir_exists(path)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(dumps_matrix(m, digits))


def read_vector(path):
    m = read_matrix(path)
    if m.shape[1] != 1:
        raise DimensionMismatchError('{} columns'.format(path), 1, m.shape[1])
    return m[:, 0]


def write_vector(path, x, digits=17):
    write_matrix(path, np.asarray(x, dtype=np.float64).reshape(-1, 1), digits)
