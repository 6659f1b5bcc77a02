import threading

from flagcat.cache import ResultCache, cache_key, default_dir


def test_key_depends_on_all_parts():
    base = cache_key("0.1.0", "jh", {"label": "I[1;1]", "n": 2})
    assert base == cache_key("0.1.0", "jh", {"n": 2, "label": "I[1;1]"})
    assert base != cache_key("0.2.0", "jh", {"label": "I[1;1]", "n": 2})
    assert base != cache_key("0.1.0", "jh-T", {"label": "I[1;1]", "n": 2})
    assert base != cache_key("0.1.0", "jh", {"label": "I[1;1]", "n": 3})


def test_get_put(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key("v", "c", {})
    assert cache.get(key) is None
    cache.put(key, {"x": [1, 2]})
    assert cache.get(key) == {"x": [1, 2]}
    assert not list(tmp_path.rglob("*.tmp"))


def test_corrupt_entry_is_a_miss(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key("v", "c", {})
    cache.put(key, 1)
    next(tmp_path.rglob("*.json")).write_text("{not json")
    assert cache.get(key) is None


def test_concurrent_writers(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key("v", "c", {"k": 1})
    threads = [threading.Thread(target=cache.put, args=(key, {"value": 7})) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert cache.get(key) == {"value": 7}


def test_default_dir(monkeypatch, tmp_path):
    monkeypatch.setenv("FLAGCAT_CACHE_DIR", str(tmp_path))
    assert default_dir() == tmp_path
    monkeypatch.delenv("FLAGCAT_CACHE_DIR")
    assert default_dir().name == "flagcat"
