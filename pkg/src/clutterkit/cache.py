"""Persistent verdict caches keyed by canonical key bytes.

A cache file holds one or more named sections (all integers little-endian)::

    b"CLKC"  u8 version  u8 section-count
    per section:  u8 name-length  name (ascii)  u32 count
                  count x ( u8 key-length  key  u8 value )

``value`` is 0 (false), 1 (true) or 2 (undecided).  Sections and entries are
written in sorted order, so identical contents give byte-identical files.
"""

from __future__ import annotations

import os
import struct
from pathlib import Path
from typing import Iterator, Mapping

MAGIC = b"CLKC"
VERSION = 1
UNDECIDED = 2
CACHE_DIR_ENV = "CLUTTERKIT_CACHE_DIR"


class CacheFormatError(ValueError):
    pass


class VerdictCache:
    """Map from canonical key bytes to a small verdict.

    Entries are deterministic functions of their key, so concurrent writers
    racing on the same key always store the same value.
    """

    def __init__(self, kind: str = "verdict") -> None:
        self.kind = kind
        self._data: dict[bytes, int] = {}

    def __contains__(self, key: bytes) -> bool:
        return key in self._data

    def __len__(self) -> int:
        return len(self._data)

    def __iter__(self) -> Iterator[bytes]:
        return iter(self._data)

    def get(self, key: bytes) -> int | None:
        return self._data.get(key)

    def put(self, key: bytes, value: int) -> None:
        self._data[key] = int(value)

    def items(self):
        return self._data.items()

    def merge(self, other: "VerdictCache") -> None:
        self._data.update(other._data)


class ChordalityCache(VerdictCache):
    def __init__(self) -> None:
        super().__init__("chordal")


def dump_caches(path: str | os.PathLike, caches: Mapping[str, VerdictCache]) -> None:
    chunks = [MAGIC, struct.pack("<BB", VERSION, len(caches))]
    for name in sorted(caches):
        data = caches[name]._data
        raw = name.encode("ascii")
        chunks.append(struct.pack("<B", len(raw)) + raw + struct.pack("<I", len(data)))
        for key in sorted(data):
            chunks.append(struct.pack("<B", len(key)) + key + struct.pack("<B", data[key]))
    tmp = Path(str(path) + ".tmp")
    tmp.write_bytes(b"".join(chunks))
    os.replace(tmp, path)


def load_caches(path: str | os.PathLike) -> dict[str, VerdictCache]:
    raw = Path(path).read_bytes()
    if raw[:4] != MAGIC:
        raise CacheFormatError(f"{path}: not a verdict cache")
    version, sections = struct.unpack_from("<BB", raw, 4)
    if version != VERSION:
        raise CacheFormatError(f"{path}: unsupported cache version {version}")
    pos = 6
    out: dict[str, VerdictCache] = {}
    try:
        for _ in range(sections):
            nlen = raw[pos]
            name = raw[pos + 1 : pos + 1 + nlen].decode("ascii")
            pos += 1 + nlen
            (count,) = struct.unpack_from("<I", raw, pos)
            pos += 4
            cache = ChordalityCache() if name == "chordal" else VerdictCache(name)
            for _ in range(count):
                klen = raw[pos]
                key = raw[pos + 1 : pos + 1 + klen]
                cache._data[key] = raw[pos + 1 + klen]
                pos += klen + 2
            out[name] = cache
    except (IndexError, struct.error):
        raise CacheFormatError(f"{path}: truncated cache file") from None
    return out


def default_cache_dir() -> Path | None:
    d = os.environ.get(CACHE_DIR_ENV)
    return Path(d) if d else None
