# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Reader, transformer and writer pipeline."""

from .errors import ReaderError, TransformerError, WriterError


class StreamEntry:
    """A document or report travelling through a stream, with its errors."""

    def __init__(self, entry, errors=None):
        """Constructor."""
        self.entry = entry
        self.errors = errors or []


def _failed(reader, entry, err):
    return StreamEntry(entry=entry, errors=[f"{reader.read.__qualname__}: {err}"])


class DataStream:
    """Chains readers into transformers into writers.

    Readers after the first are piped: each one reads the items yielded by
    the previous one.
    """

    def __init__(self, readers, writers, transformers=None):
        """Constructor.

        :param readers: an ordered list of readers.
        :param writers: an ordered list of writers.
        :param transformers: an ordered list of transformers to apply.
        """
        self._readers = readers
        self._transformers = transformers or []
        self._writers = writers

    def total(self):
        """Entries the origin reader announces, or ``None`` if unknown before reading."""
        return self._readers[0].total() if self._readers else 0

    def process(self):
        """Iterates over the entries.

        Entries with reading or transformation errors are yielded as they
        are; every other entry is yielded after writing.
        """
        for stream_entry in self.read():
            if not stream_entry.errors:
                stream_entry = self.transform(stream_entry)
            if stream_entry.errors:
                yield stream_entry
            else:
                yield self.write(stream_entry)

    def read(self):
        """Entries of the last reader.

        A reader failing on its own input yields a single entry carrying the
        error, and the stream goes on with the next input.
        """

        def pipe(readers, item=None):
            reader, rest = readers[0], readers[1:]
            try:
                for value in reader.read(item):
                    if rest:
                        yield from pipe(rest, value)
                    else:
                        yield StreamEntry(value)
            except ReaderError as err:
                yield _failed(reader, item, err)

        if self._readers:
            yield from pipe(self._readers)

    def transform(self, stream_entry):
        """Applies the transformers in order, stopping at the first error."""
        for transformer in self._transformers:
            try:
                stream_entry = transformer.apply(stream_entry)
            except TransformerError as err:
                stream_entry.errors.append(f"{transformer.__class__.__name__}: {err}")
                break
        return stream_entry

    def write(self, stream_entry):
        """Applies every writer; failures are collected on the entry."""
        for writer in self._writers:
            try:
                writer.write(stream_entry)
            except WriterError as err:
                stream_entry.errors.append(f"{writer.__class__.__name__}: {err}")
        return stream_entry
