"""On-disk cache of materialized operator matrices.

One file per (n, factor rep kinds, label).  Layout: 4-byte magic "LBOP",
one version byte, row and column counts as little-endian uint32, then the
row-major complex entries as little-endian float64 (real, imag) pairs.
Writes go to a temp file first and are renamed into place, so concurrent
writers are safe.
"""

import os
import re
import struct
import tempfile
from pathlib import Path

import numpy as np

__all__ = ["OperatorCache", "MAGIC", "VERSION"]

MAGIC = b"LBOP"
VERSION = 1
_HEADER = struct.Struct("<4sBII")


def _slug(text):
    return re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_")


class OperatorCache:
    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def path_for(self, n, rep_kinds, label):
        name = f"n{n}_{rep_kinds[0]}-{rep_kinds[1]}_{_slug(str(label))}.lbop"
        return self.directory / name

    def load(self, n, rep_kinds, label, expect_dim=None):
        """The cached matrix, or None when absent.  Corrupt files raise."""
        path = self.path_for(n, rep_kinds, label)
        if not path.exists():
            return None
        blob = path.read_bytes()
        if len(blob) < _HEADER.size:
            raise ValueError(f"cache file {path} is truncated")
        magic, version, rows, cols = _HEADER.unpack_from(blob)
        if magic != MAGIC:
            raise ValueError(f"cache file {path} has wrong magic {magic!r}")
        if version != VERSION:
            raise ValueError(f"cache file {path} has unsupported version {version}")
        expected_len = _HEADER.size + rows * cols * 16
        if len(blob) != expected_len:
            raise ValueError(f"cache file {path} has wrong payload size")
        if expect_dim is not None and (rows, cols) != (expect_dim, expect_dim):
            raise ValueError(
                f"cache file {path} holds a {rows}x{cols} matrix, expected {expect_dim}"
            )
        data = np.frombuffer(blob, dtype="<c16", offset=_HEADER.size)
        return data.reshape(rows, cols).astype(complex)

    def save(self, n, rep_kinds, label, matrix):
        path = self.path_for(n, rep_kinds, label)
        arr = np.ascontiguousarray(matrix, dtype="<c16")
        rows, cols = arr.shape
        payload = _HEADER.pack(MAGIC, VERSION, rows, cols) + arr.tobytes()
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path
