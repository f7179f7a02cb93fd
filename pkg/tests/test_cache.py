import logging

import numpy as np
import pytest

from burnside_beta.burnside import subgroup_classes
from burnside_beta.cache import CacheCorrupt, LatticeCache, decode_table, encode_table, fingerprint
from burnside_beta.group_core import symmetric_group
from burnside_beta.parsing import parse_group

D8 = "perm(4): (0 1 2 3), (0 2)"


def test_round_trip_is_byte_identical():
    S4 = symmetric_group(4)
    blob = encode_table(subgroup_classes(S4))
    back = decode_table(S4, blob)
    assert np.array_equal(back.marks, subgroup_classes(S4).marks)
    assert encode_table(back) == blob


def test_corrupt_blobs_are_rejected():
    S3 = symmetric_group(3)
    blob = bytearray(encode_table(subgroup_classes(S3)))
    with pytest.raises(CacheCorrupt):
        decode_table(S3, bytes(blob[:10]))
    blob[-1] ^= 0xFF
    with pytest.raises(CacheCorrupt):
        decode_table(S3, bytes(blob))
    with pytest.raises(CacheCorrupt):
        decode_table(symmetric_group(4), encode_table(subgroup_classes(S3)))


def test_miss_then_hit(tmp_path):
    cache = LatticeCache(tmp_path)
    tab, hit = cache.table(parse_group(D8))
    assert not hit and len(tab) == 8
    assert len(cache.entries()) == 1
    tab2, hit2 = cache.table(parse_group(D8))
    assert hit2
    assert np.array_equal(tab2.marks, tab.marks)


def test_corrupt_entry_warns_and_recomputes(tmp_path, caplog):
    cache = LatticeCache(tmp_path)
    G = parse_group(D8)
    cache.table(G)
    path = cache.path(G)
    path.write_bytes(path.read_bytes()[:-5])
    with caplog.at_level(logging.WARNING):
        tab, hit = cache.table(parse_group(D8))
    assert not hit and len(tab) == 8
    assert "corrupt cache entry" in caplog.text
    # the recomputed table replaced the broken file
    assert decode_table(parse_group(D8), path.read_bytes()) is not None


def test_fingerprint_ignores_generator_order():
    a = parse_group("perm(4): (0 1 2 3), (0 2)")
    b = parse_group("perm(4): (0 2), (0 1 2 3)")
    assert fingerprint(a) == fingerprint(b)
    assert fingerprint(a) != fingerprint(symmetric_group(4))


def test_clear(tmp_path):
    cache = LatticeCache(tmp_path)
    cache.table(parse_group(D8))
    assert cache.clear() == 1
    assert cache.entries() == []
