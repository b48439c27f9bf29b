# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Writers module.

Both writers produce canonical output: sorted keys, numbers of modules as
decimal strings, one trailing newline. Without a file path the output is
kept in memory and returned by ``getvalue``.
"""

import io
import json
from abc import ABC, abstractmethod
from pathlib import Path

from .errors import WriterError


class BaseWriter(ABC):
    """Base writer."""

    @abstractmethod
    def write(self, stream_entry, *args, **kwargs):
        """Writes the input stream entry to the target output.

        :returns: A StreamEntry. The result of writing the entry.
                  Raises WriterException in case of errors.

        """
        pass


class BufferedWriter(BaseWriter):
    """Writes rendered entries to a file or to a buffer."""

    def __init__(self, filepath=None, *args, **kwargs):
        """Constructor.

        :param filepath: path of the output file; truncated on the first
            write.
        """
        self._filepath = Path(filepath) if filepath else None
        self._buffer = io.StringIO()
        self._started = False
        super().__init__(*args, **kwargs)

    @abstractmethod
    def render(self, entry):
        """Text of one entry."""
        pass

    def write(self, stream_entry, *args, **kwargs):
        """Renders the entry and appends it to the output."""
        try:
            text = self.render(stream_entry.entry)
        except (TypeError, ValueError) as err:
            raise WriterError(f"Cannot render entry: {str(err)}")
        if self._filepath is None:
            self._buffer.write(text)
        else:
            mode = "a" if self._started else "w"
            try:
                with open(self._filepath, mode, encoding="utf-8") as file:
                    file.write(text)
            except OSError as err:
                raise WriterError(f"Cannot write {self._filepath}: {err.strerror}")
        self._started = True
        return stream_entry

    def getvalue(self):
        """Everything written so far to the in-memory buffer."""
        return self._buffer.getvalue()


class JsonWriter(BufferedWriter):
    """Writes the entries as canonical JSON documents."""

    def render(self, entry):
        """Sorted keys, two-space indent and a trailing newline."""
        return json.dumps(entry, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _order(key):
    """Degrees in numeric order, other keys alphabetically."""
    try:
        return (0, int(key), "")
    except (TypeError, ValueError):
        return (1, 0, str(key))


def _format(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_format(v) for v in value) + "]"
    return str(value)


def _flatten(data, prefix=""):
    """``(dotted key, value)`` pairs of a nested mapping."""
    if isinstance(data, dict):
        if not data and prefix:
            yield prefix, "{}"
        for key in sorted(data, key=_order):
            yield from _flatten(data[key], f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(data, list) and any(isinstance(v, dict) for v in data):
        for i, value in enumerate(data):
            yield from _flatten(value, f"{prefix}.{i}")
    else:
        yield prefix, _format(data)


def _table_rows(data, depth):
    """Rows of a mapping nested ``depth`` times over module reports."""
    if depth == 0:
        return [[data["module"] if isinstance(data, dict) and "module" in data else _format(data)]]
    rows = []
    for key in sorted(data, key=_order):
        for row in _table_rows(data[key], depth - 1):
            rows.append([str(key)] + row)
    return rows


def columns(header, rows):
    """Fixed-width columns, two spaces apart, padded to the widest cell."""
    lines = [header] + rows
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    return [
        "  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
        for line in lines
    ]


class TextWriter(BufferedWriter):
    """Writes the entries as aligned plain text.

    Tables of module values get one column per nesting level; every other
    field is listed as ``key  value``.
    """

    TABLES = {
        "table": ("method", "object", "degree", "module"),
        "homology": ("degree", "object", "module"),
    }

    def render(self, entry):
        """Plain-text projection of the entry."""
        if not entry:
            return "{}\n"
        lines = []
        rest = dict(entry)
        for key, header in self.TABLES.items():
            if isinstance(rest.get(key), dict):
                rows = _table_rows(rest.pop(key), len(header) - 1)
                lines.extend(columns(list(header), rows))
                lines.append("")
        pairs = [list(pair) for pair in _flatten(rest)]
        if pairs:
            lines.extend(columns(["key", "value"], pairs))
        return "\n".join(lines).rstrip("\n") + "\n"
