"""Binary field snapshots.

Little-endian header (magic, version, N, L, m, c, p, tau) followed by
4 N^3 complex128 values, component-major with x varying fastest.
"""
import hashlib
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from core.constants import FIELD_MAGIC, FIELD_VERSION
from core.exceptions import (
    BadMagic,
    FieldFormatError,
    TruncatedPayload,
    VersionMismatch,
)
from spectral_core.fields import SpinorField
from spectral_core.grid import GridSpec

logger = logging.getLogger(__name__)

HEADER_DTYPE = np.dtype([
    ('magic', 'S4'),
    ('version', '<u4'),
    ('n', '<u4'),
    ('box', '<f8'),
    ('m', '<f8'),
    ('c', '<f8'),
    ('p', '<f8'),
    ('tau', '<f8'),
])
PAYLOAD_DTYPE = np.dtype('<c16')


@dataclass(frozen=True)
class FieldHeader:
    version: int
    n: int
    box: float
    m: float
    c: float
    p: float
    tau: float

    @property
    def payload_size(self):
        return 4 * self.n ** 3 * PAYLOAD_DTYPE.itemsize

    def grid(self):
        return GridSpec(
            n=self.n, box=self.box, m=self.m, c=self.c, p=self.p,
            tau=self.tau,
        )


def encode_field(u):
    grid = u.grid
    header = np.zeros(1, dtype=HEADER_DTYPE)
    header[0] = (
        FIELD_MAGIC, FIELD_VERSION, grid.n, grid.box, grid.m, grid.c,
        grid.p, grid.tau,
    )
    payload = np.ascontiguousarray(
        u.data.transpose(0, 3, 2, 1), dtype=PAYLOAD_DTYPE
    )
    return header.tobytes() + payload.tobytes()


def save_field(u, path):
    """Write ``u`` and return the SHA-256 digest of the file."""
    raw = encode_field(u)
    Path(path).write_bytes(raw)
    digest = hashlib.sha256(raw).hexdigest()
    logger.debug('Saved field %s (%d bytes)', path, len(raw))
    return digest


def file_digest(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _parse_header(raw):
    if len(raw) < len(FIELD_MAGIC):
        raise TruncatedPayload('File ends inside the magic number.')
    if raw[:len(FIELD_MAGIC)] != FIELD_MAGIC:
        raise BadMagic(f'Unexpected magic {raw[:len(FIELD_MAGIC)]!r}.')
    if len(raw) < HEADER_DTYPE.itemsize:
        raise TruncatedPayload('File ends inside the header.')
    record = np.frombuffer(raw[:HEADER_DTYPE.itemsize], HEADER_DTYPE)[0]
    version = int(record['version'])
    if version != FIELD_VERSION:
        raise VersionMismatch(
            f'Field format version {version}, expected {FIELD_VERSION}.'
        )
    return FieldHeader(
        version=version,
        n=int(record['n']),
        box=float(record['box']),
        m=float(record['m']),
        c=float(record['c']),
        p=float(record['p']),
        tau=float(record['tau']),
    )


def read_field_header(path):
    """Header only; the payload is not read."""
    with open(path, 'rb') as file:
        raw = file.read(HEADER_DTYPE.itemsize)
    return _parse_header(raw)


def decode_field(raw):
    header = _parse_header(raw)
    payload = raw[HEADER_DTYPE.itemsize:]
    if len(payload) < header.payload_size:
        raise TruncatedPayload(
            f'Payload holds {len(payload)} bytes, '
            f'{header.payload_size} expected.'
        )
    if len(payload) > header.payload_size:
        raise FieldFormatError('Trailing bytes after the payload.')
    n = header.n
    data = np.frombuffer(payload, PAYLOAD_DTYPE).reshape(4, n, n, n)
    data = data.transpose(0, 3, 2, 1).astype(np.complex128)
    return SpinorField(data, header.grid())


def load_field(path):
    return decode_field(Path(path).read_bytes())
