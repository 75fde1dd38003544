"""GCOL1 binary colouring files.

Layout (little endian)::

    b"GCOL1"                      magic
    uint32  N                     vertex count
    uint8   label_count           at most 16
    label_count x (uint8 len, ASCII name)
    payload                       ceil(C(N, 2) / 2) bytes

The payload holds one 4-bit label index per edge (u, v), u < v, in
lexicographic order, two per byte with the low nibble first, padded with
zeros to a byte boundary.
"""

from __future__ import annotations

import io
import struct
from pathlib import Path
from typing import BinaryIO

import numpy as np

from .construct import EdgeColoring

MAGIC = b"GCOL1"
MAX_LABELS = 16


class ColoringFileError(ValueError):
    pass


class BadMagicError(ColoringFileError):
    pass


class TruncatedFileError(ColoringFileError):
    pass


class InvalidLabelIndexError(ColoringFileError):
    pass


def payload_size(n: int) -> int:
    return (n * (n - 1) // 2 + 1) // 2


def encode_coloring(c: EdgeColoring, sink: BinaryIO) -> None:
    if len(c.labels) > MAX_LABELS:
        raise ValueError(f"at most {MAX_LABELS} labels fit in 4 bits, got {len(c.labels)}")
    sink.write(MAGIC)
    sink.write(struct.pack("<IB", c.N, len(c.labels)))
    for name in c.labels:
        raw = name.encode("ascii")
        if len(raw) > 255:
            raise ValueError(f"label name too long: {name!r}")
        sink.write(struct.pack("<B", len(raw)) + raw)
    values = c.matrix[np.triu_indices(c.N, 1)]
    if len(values) % 2:
        values = np.append(values, np.uint8(0))
    packed = (values[0::2] | (values[1::2] << 4)).astype(np.uint8)
    sink.write(packed.tobytes())


def encode_bytes(c: EdgeColoring) -> bytes:
    buf = io.BytesIO()
    encode_coloring(c, buf)
    return buf.getvalue()


def _read(source: BinaryIO, n: int, what: str) -> bytes:
    data = source.read(n)
    if len(data) != n:
        raise TruncatedFileError(f"file ends inside {what}")
    return data


def decode_coloring(source: BinaryIO) -> EdgeColoring:
    magic = source.read(len(MAGIC))
    if magic != MAGIC:
        raise BadMagicError(f"bad magic {magic!r}, expected {MAGIC!r}")
    n, label_count = struct.unpack("<IB", _read(source, 5, "header"))
    if label_count > MAX_LABELS:
        raise ColoringFileError(f"label count {label_count} exceeds {MAX_LABELS}")
    labels = []
    for _ in range(label_count):
        (length,) = _read(source, 1, "label table")
        labels.append(_read(source, length, "label table").decode("ascii"))
    edges = n * (n - 1) // 2
    raw = np.frombuffer(_read(source, payload_size(n), "payload"), dtype=np.uint8)
    if source.read(1):
        raise ColoringFileError("trailing bytes after payload")
    values = np.empty(2 * len(raw), dtype=np.uint8)
    values[0::2] = raw & 0x0F
    values[1::2] = raw >> 4
    if len(values) > edges and values[edges]:
        raise ColoringFileError("non-zero padding nibble")
    values = values[:edges]
    if np.any(values >= label_count):
        bad = int(np.argmax(values >= label_count))
        raise InvalidLabelIndexError(
            f"invalid label index {int(values[bad])} at edge {bad} (label_count={label_count})")
    matrix = np.zeros((n, n), dtype=np.uint8)
    iu = np.triu_indices(n, 1)
    matrix[iu] = values
    matrix.T[iu] = values
    return EdgeColoring(labels, matrix)


def decode_bytes(data: bytes) -> EdgeColoring:
    return decode_coloring(io.BytesIO(data))


def write_coloring(c: EdgeColoring, path: str | Path) -> None:
    with open(path, "wb") as fh:
        encode_coloring(c, fh)


def read_coloring(path: str | Path) -> EdgeColoring:
    with open(path, "rb") as fh:
        return decode_coloring(fh)
