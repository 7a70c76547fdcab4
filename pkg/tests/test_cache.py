import json
import logging

from abelsq.cache import ResultCache, cache_load, cache_store
from abelsq.search import min_over_parikh

FIELDS = {"schema", "version", "n", "x", "min_theta", "minimizers", "words_examined", "elapsed_ms"}


def test_store_then_load(tmp_path):
    path = tmp_path / "results.jsonl"
    r = min_over_parikh(5, 18)
    cache_store(path, r)
    assert cache_load(path, 18, 5) == r
    rec = json.loads(path.read_text().splitlines()[0])
    assert set(rec) == FIELDS
    assert rec["schema"] == 1 and rec["minimizers"] == [w.text for w in r.minimizers]


def test_missing_key_is_none(tmp_path):
    path = tmp_path / "results.jsonl"
    assert cache_load(path, 10, 2) is None
    cache_store(path, min_over_parikh(2, 10))
    assert cache_load(path, 10, 3) is None


def test_truncated_final_line(tmp_path, caplog):
    path = tmp_path / "results.jsonl"
    cache_store(path, min_over_parikh(2, 10))
    line = json.dumps(min_over_parikh(3, 10).to_record())
    with open(path, "a") as fh:
        fh.write(line[: len(line) // 2])
    cache = ResultCache(path)
    with caplog.at_level(logging.WARNING):
        records = cache.load()
    assert set(records) == {(10, 2)}
    assert cache.corrupt and cache.corrupt[0][1] == "truncated final record"
    assert "corrupt" in caplog.text
    # resuming appends a clean record after the torn one
    cache.store(min_over_parikh(3, 10))
    fresh = ResultCache(path)
    assert set(fresh.load()) == {(10, 2), (10, 3)}
    assert len(fresh.corrupt) == 1


def test_corrupt_middle_line_reported(tmp_path):
    path = tmp_path / "results.jsonl"
    good = json.dumps(min_over_parikh(1, 9).to_record())
    path.write_text(good + "\n{not json}\n" + json.dumps({"schema": 1}) + "\n")
    cache = ResultCache(path)
    assert set(cache.load()) == {(9, 1)}
    assert [lineno for lineno, _ in cache.corrupt] == [2, 3]


def test_version_mismatch_is_ignored(tmp_path):
    path = tmp_path / "results.jsonl"
    ResultCache(path, version="0").store(min_over_parikh(2, 8))
    assert ResultCache(path).get(8, 2) is None
    assert ResultCache(path, version="0").get(8, 2) is not None


def test_min_over_parikh_uses_cache(tmp_path):
    path = tmp_path / "results.jsonl"
    cache = ResultCache(path)
    first = min_over_parikh(4, 12, cache=cache)
    assert len(path.read_text().splitlines()) == 1
    again = min_over_parikh(4, 12, cache=ResultCache(path))
    assert again.payload() == first.payload()
    assert len(path.read_text().splitlines()) == 1
