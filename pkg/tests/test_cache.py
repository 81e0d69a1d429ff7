import json

import pytest

from orbivcd.cache import CacheCorruptionError, SignatureCache
from orbivcd.models import EnumOptions, Signature


@pytest.fixture
def cache(tmp_path):
    return SignatureCache(tmp_path / "cache")


def test_empty(cache):
    assert cache.records() == []
    assert cache.info()["records"] == 0
    assert cache.clear() == 0


def test_miss_then_hit(cache):
    opts = EnumOptions()
    assert cache.get(2, 2, opts) is None
    first = cache.signatures(2, 2, opts)
    assert first == [Signature(0, (2,) * 6), Signature(1, (2, 2))]
    assert cache.get(2, 2, opts) == first
    assert cache.signatures(2, 2, opts) == first
    assert cache.info()["records"] == 1


def test_options_change_the_key(cache):
    cache.signatures(2, 5)
    assert cache.get(2, 5, EnumOptions(periods_divide_order=False)) is None
    cache.signatures(2, 5, EnumOptions(periods_divide_order=False))
    assert cache.info()["records"] == 2


def test_header_and_records(cache):
    cache.signatures(2, 3)
    lines = cache.path.read_text().splitlines()
    assert json.loads(lines[0]) == {"format": "orbivcd-signatures", "version": 1}
    record = cache.records()[0]
    assert (record.g, record.order, record.record) == (2, 3, 2)
    assert record.key == EnumOptions().fingerprint()


def test_unknown_version_rejected(cache):
    cache.signatures(2, 2)
    lines = cache.path.read_text().splitlines()
    lines[0] = json.dumps({"format": "orbivcd-signatures", "version": 2})
    cache.path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CacheCorruptionError) as exc:
        cache.records()
    assert exc.value.record == 1


def test_key_mismatch_rejected(cache):
    cache.signatures(2, 2)
    header, line = cache.path.read_text().splitlines()
    record = json.loads(line)
    record["key"] = "0" * 16
    cache.path.write_text(f"{header}\n{json.dumps(record)}\n")
    with pytest.raises(CacheCorruptionError) as exc:
        cache.get(2, 2, EnumOptions())
    assert exc.value.record == 2


def test_verify_sample(cache):
    for order in range(1, 7):
        cache.signatures(3, order)
    checked, invalid = cache.verify(sample=3, seed=7)
    assert (checked, invalid) == (3, [])
    checked, invalid = cache.verify()
    assert (checked, invalid) == (6, [])


def test_clear_works_on_corrupt_file(cache):
    cache.signatures(2, 2)
    cache.path.write_text("garbage\n{broken\n")
    assert cache.clear() == 1
    assert not cache.path.exists()
