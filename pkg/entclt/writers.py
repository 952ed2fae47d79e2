"""
Table writers.
"""


#
# Entclt, exact computations for the discrete entropic CLT.
# Copyright (C) 2026  Entclt developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#


import csv
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, TextIO, Union

from entclt.flavors import OutputFormat


__all__ = (
    'Writer',
    'CsvWriter',
    'JsonWriter',
    'create_writer',
)


PathSpec = Union[None, Path, str]


def format_value(value: Any) -> str:
    """
    Formats one CSV cell.
    """
    if value is None:
        return ''
    elif isinstance(value, bool):
        return 'true' if value else 'false'
    elif isinstance(value, float):
        return '%.12g' % value
    else:
        return str(value)


class Writer():
    """
    Abstract base class for table writers.

    Output goes to standard output unless a path is given.
    """

    def __init__(self, columns: Sequence[str], path: PathSpec = None):
        """
        Constructor.

        Args:
            columns: Keys of every row, in output order.
            path: File to write, or None for standard output.
        """
        self.columns = tuple(columns)
        self.path = path
        self.stream: Optional[TextIO] = None
        self.closed = False

    def open(self) -> TextIO:
        """
        Returns the output stream, opening it on first use.
        """
        if self.stream is not None:
            return self.stream

        if self.path is None:
            self.stream = sys.stdout
        else:
            self.stream = open(
                self.path, 'wt', encoding='utf-8', newline='',
            )

        return self.stream

    def write(self, row: Mapping[str, Any]) -> None:
        """
        Emits one row.

        Args:
            row: Mapping with a value for every column.

        Raises:
            KeyError: If the row misses a column.
            IOError: If writing failed.
        """
        raise NotImplementedError()

    def close(self) -> None:
        """
        Finalizes writes and closes owned files.
        """
        stream = self.stream
        self.closed = True

        if stream is None:
            return

        stream.flush()

        if self.path is not None:
            stream.close()

        self.stream = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()


class CsvWriter(Writer):
    """
    Writes a header line and one line per row.
    """

    def __init__(self, columns: Sequence[str], path: PathSpec = None):
        super().__init__(columns, path)
        self.writer: Optional[Any] = None

    def write(self, row: Mapping[str, Any]) -> None:
        if self.writer is None:
            self.writer = csv.writer(self.open(), lineterminator='\n')
            self.writer.writerow(self.columns)

        cells = [format_value(row[key]) for key in self.columns]
        self.writer.writerow(cells)

    def close(self) -> None:
        if self.closed:
            return

        if self.writer is None and self.columns:
            self.writer = csv.writer(self.open(), lineterminator='\n')
            self.writer.writerow(self.columns)

        self.writer = None
        super().close()


class JsonWriter(Writer):
    """
    Writes all rows as one JSON array when closed.
    """

    def __init__(self, columns: Sequence[str], path: PathSpec = None):
        super().__init__(columns, path)
        self.rows: List[Dict[str, Any]] = []

    def write(self, row: Mapping[str, Any]) -> None:
        self.rows.append({key: row[key] for key in self.columns})

    def close(self) -> None:
        if self.closed:
            return

        stream = self.open()
        json.dump(self.rows, stream, indent=2, allow_nan=False)
        stream.write('\n')

        self.rows = []
        super().close()


def create_writer(
        fmt: OutputFormat,
        columns: Sequence[str],
        path: PathSpec = None,
        ) -> Writer:
    """
    Returns a writer for the output format.
    """
    if fmt is OutputFormat.JSON:
        return JsonWriter(columns, path)
    else:
        return CsvWriter(columns, path)
