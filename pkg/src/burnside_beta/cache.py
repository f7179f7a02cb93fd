"""On-disk cache of subgroup class tables.

File layout (all integers little-endian)::

    b"BTOM1"  u16 version  u64 payload length  32-byte sha256 of payload  payload

The payload holds the group's degree and generators, then each class
representative as a list of generating permutations, then the table of marks.
Entries are keyed by a fingerprint of the group's degree and sorted generators.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import struct
from pathlib import Path

import numpy as np

from .burnside import SubgroupClassTable, has_class_table, install_class_table, subgroup_classes
from .group_core import PermGroup

MAGIC = b"BTOM1"
VERSION = 1
_HEAD = struct.Struct("<5sHQ32s")

log = logging.getLogger(__name__)


class CacheCorrupt(Exception):
    pass


def default_dir() -> Path | None:
    env = os.environ.get("BURNSIDE_CACHE")
    return Path(env) if env else None


def fingerprint(G: PermGroup) -> str:
    gens = sorted(tuple(int(v) for v in g) for g in G.generators)
    h = hashlib.sha256()
    h.update(struct.pack("<I", G.degree))
    for g in gens:
        h.update(np.asarray(g, dtype="<i4").tobytes())
    return h.hexdigest()


class _Writer:
    def __init__(self):
        self.parts: list[bytes] = []

    def u32(self, v: int):
        self.parts.append(struct.pack("<I", v))

    def i64s(self, values):
        arr = np.asarray(values, dtype="<i8").reshape(-1)
        self.u32(len(arr))
        self.parts.append(arr.tobytes())

    def perms(self, perms, degree: int):
        self.u32(len(perms))
        for p in perms:
            self.parts.append(np.asarray(p, dtype="<i4").reshape(degree).tobytes())

    def bytes(self) -> bytes:
        return b"".join(self.parts)


class _Reader:
    def __init__(self, data: bytes):
        self.data, self.pos = data, 0

    def _take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise CacheCorrupt("truncated payload")
        out = self.data[self.pos:self.pos + n]
        self.pos += n
        return out

    def u32(self) -> int:
        return struct.unpack("<I", self._take(4))[0]

    def i64s(self) -> np.ndarray:
        n = self.u32()
        return np.frombuffer(self._take(8 * n), dtype="<i8").astype(np.int64)

    def perms(self, degree: int) -> list[np.ndarray]:
        n = self.u32()
        return [np.frombuffer(self._take(4 * degree), dtype="<i4").astype(np.int64) for _ in range(n)]


def encode_table(table: SubgroupClassTable) -> bytes:
    G = table.group
    w = _Writer()
    w.u32(G.degree)
    w.perms(G.generators, G.degree)
    w.u32(len(table))
    for S in table.class_reps:
        w.u32(S.order)
        w.perms([G.elements[g] for g in S.generators], G.degree)
    w.i64s([int(v) for v in table.marks.reshape(-1)])
    payload = w.bytes()
    return _HEAD.pack(MAGIC, VERSION, len(payload), hashlib.sha256(payload).digest()) + payload


def decode_table(G: PermGroup, blob: bytes) -> SubgroupClassTable:
    """Rebuild a table for ``G``; raises :class:`CacheCorrupt` on any mismatch."""
    if len(blob) < _HEAD.size:
        raise CacheCorrupt("short header")
    magic, version, length, digest = _HEAD.unpack_from(blob)
    if magic != MAGIC or version != VERSION:
        raise CacheCorrupt("bad magic or version")
    payload = blob[_HEAD.size:]
    if len(payload) != length or hashlib.sha256(payload).digest() != digest:
        raise CacheCorrupt("checksum mismatch")
    r = _Reader(payload)
    degree = r.u32()
    if degree != G.degree:
        raise CacheCorrupt("degree mismatch")
    gens = r.perms(degree)
    if sorted(map(tuple, gens)) != sorted(tuple(int(v) for v in g) for g in G.generators):
        raise CacheCorrupt("generator mismatch")
    reps = []
    for _ in range(r.u32()):
        order = r.u32()
        S = G.subgroup_from_perms(r.perms(degree))
        if S.order != order:
            raise CacheCorrupt("class representative has the wrong order")
        reps.append(S)
    marks = r.i64s()
    if len(marks) != len(reps) ** 2:
        raise CacheCorrupt("marks have the wrong shape")
    return SubgroupClassTable(G, reps, [int(v) for v in marks])


def table_to_json(table: SubgroupClassTable) -> dict:
    return {
        "group": str(table.group),
        "degree": table.group.degree,
        "classes": [{"label": lab, "order": order, "generators": gens}
                    for lab, order, gens in table.legend()],
        "marks": [[int(v) for v in row] for row in table.marks],
    }


class LatticeCache:
    """Content-addressed store of class tables in one directory."""

    def __init__(self, directory: str | os.PathLike):
        self.dir = Path(directory)

    def path(self, G: PermGroup) -> Path:
        return self.dir / f"{fingerprint(G)[:32]}.btom"

    def store(self, table: SubgroupClassTable) -> Path:
        path = self.path(table.group)
        try:
            self.dir.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_bytes(encode_table(table))
            tmp.replace(path)
        except OSError as exc:
            log.warning("could not write cache entry %s: %s", path, exc)
        return path

    def load(self, G: PermGroup) -> SubgroupClassTable | None:
        """The cached table, or None on a miss or a corrupt entry (which is reported)."""
        path = self.path(G)
        try:
            blob = path.read_bytes()
        except FileNotFoundError:
            return None
        except OSError as exc:
            log.warning("could not read cache entry %s: %s", path, exc)
            return None
        try:
            return decode_table(G, blob)
        except CacheCorrupt as exc:
            log.warning("corrupt cache entry %s (%s); recomputing", path, exc)
            return None

    def table(self, G: PermGroup) -> tuple[SubgroupClassTable, bool]:
        """Load or compute (and store) the table of ``G``; the flag says whether it was a hit."""
        if G.__dict__.get("_class_table") is not None:
            return G._class_table, False
        tab = self.load(G)
        if tab is not None:
            install_class_table(G, tab)
            return tab, True
        tab = subgroup_classes(G)
        self.store(tab)
        return tab, False

    def entries(self) -> list[Path]:
        return sorted(self.dir.glob("*.btom")) if self.dir.exists() else []

    def clear(self) -> int:
        n = 0
        for p in self.entries():
            p.unlink()
            n += 1
        return n


def warm(G: PermGroup, directory=None) -> SubgroupClassTable:
    """``subgroup_classes(G)`` through the cache when a directory is configured."""
    directory = directory or default_dir()
    if directory is None or not has_class_table(G):
        return subgroup_classes(G)
    return LatticeCache(directory).table(G)[0]


def describe(blob: bytes) -> str:
    magic, version, length, _ = _HEAD.unpack_from(blob)
    return json.dumps({"magic": magic.decode(), "version": version, "payload_bytes": length})


__all__ = ["LatticeCache", "CacheCorrupt", "encode_table", "decode_table", "table_to_json",
           "fingerprint", "warm", "default_dir"]
