"""Binary memory-image files.

Layout (all integers little-endian)::

    "WOMC"  version:u8  scheme:u8  round:u8  plen:u16  params:u32 * (plen/4)
    ncells:u32  cells: ceil(ncells/8) bytes

Cell ``c`` lives in byte ``c // 8`` at bit ``c % 8`` (bit 0 least significant).
"""

from __future__ import annotations

import struct

from .errors import (BadMagic, BadVersion, ParamOutOfRange, TruncatedFile, ValidationError)
from .f2linalg import BitVector
from .image import MemoryImage, Scheme

MAGIC = b"WOMC"
VERSION = 1
_HEADER = struct.Struct("<4sBBBH")
_MAX_ROUND = {Scheme.WOM2: 2, Scheme.WOM3: 3, Scheme.RS: 2, Scheme.LOOKUPFREE: 2, Scheme.DEFECT: 1}


def image_save(img: MemoryImage) -> bytes:
    if img.cells.length == 0:
        raise ValidationError("cannot save an empty image")
    params = b"".join(struct.pack("<I", v) for v in img.params)
    n = img.cells.length
    return (_HEADER.pack(MAGIC, VERSION, int(img.scheme), img.round, len(params))
            + params
            + struct.pack("<I", n)
            + img.cells.bits.to_bytes((n + 7) // 8, "little"))


def _expected_cells(scheme: Scheme, params: tuple[int, ...]) -> int:
    # local imports: the scheme modules import image.py, not this module
    if scheme == Scheme.WOM2:
        from .womcode2 import Wom2Params
        return Wom2Params(*params).n_cells
    if scheme == Scheme.WOM3:
        from .womcode3 import Wom3Params
        return Wom3Params.from_tuple(params).n_cells
    if scheme == Scheme.RS:
        (nsym,) = params
        return 3 * nsym
    if scheme == Scheme.LOOKUPFREE:
        from math import comb
        m, w, *rows = params
        if not 0 < w < m <= 32 or len(rows) != m - w or any(r >> m for r in rows):
            raise ValidationError("bad lookup-free matrix block")
        return comb(m, w) * m
    from .stuckat import image_length
    from .wozencraft import WozParams
    k, b, chunks = params
    return image_length(WozParams(k, b), chunks)


def image_load(data: bytes) -> MemoryImage:
    if len(data) < _HEADER.size:
        if not MAGIC.startswith(data[:4]):
            raise BadMagic("not a WOMC image")
        raise TruncatedFile("header truncated")
    magic, version, scheme, rnd, plen = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BadMagic(f"bad magic {magic!r}")
    if version != VERSION:
        raise BadVersion(f"unsupported format version {version}")
    try:
        scheme = Scheme(scheme)
    except ValueError:
        raise ParamOutOfRange(f"unknown scheme id {scheme}") from None
    if plen % 4:
        raise ParamOutOfRange("parameter block length is not a multiple of 4")
    pos = _HEADER.size
    if len(data) < pos + plen + 4:
        raise TruncatedFile("parameter block truncated")
    params = struct.unpack_from(f"<{plen // 4}I", data, pos)
    pos += plen
    (n,) = struct.unpack_from("<I", data, pos)
    pos += 4
    if n == 0:
        raise ParamOutOfRange("image has no cells")
    nbytes = (n + 7) // 8
    if len(data) < pos + nbytes:
        raise TruncatedFile(f"expected {nbytes} cell bytes, found {len(data) - pos}")
    if len(data) > pos + nbytes:
        raise ParamOutOfRange("trailing bytes after the cell array")
    if rnd > _MAX_ROUND[scheme]:
        raise ParamOutOfRange(f"round {rnd} out of range for {scheme.name}")
    try:
        expected = _expected_cells(scheme, params)
    except (ValidationError, ValueError) as e:
        raise ParamOutOfRange(f"bad {scheme.name} parameters {params}: {e}") from None
    if expected != n:
        raise ParamOutOfRange(f"{scheme.name} parameters need {expected} cells, file has {n}")
    bits = int.from_bytes(data[pos:pos + nbytes], "little")
    if bits >> n:
        raise ParamOutOfRange("padding bits after the last cell are set")
    return MemoryImage(scheme, rnd, params, BitVector(n, bits))


def read_image(path) -> MemoryImage:
    with open(path, "rb") as fh:
        return image_load(fh.read())


def write_image(path, img: MemoryImage):
    data = image_save(img)
    with open(path, "wb") as fh:
        fh.write(data)
