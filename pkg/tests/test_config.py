import json

import pytest

from abacus_partitions.config import Settings, get_settings, load_settings, use_settings
from abacus_partitions.logger import log_danger, log_info, set_verbose
from abacus_partitions.series.identities import verify_gauss
from abacus_partitions.utils.export import to_csv, to_json


def test_defaults():
    settings = load_settings()
    assert settings == Settings()
    assert settings.max_n == 5000
    assert settings.precision_digits == 50


def test_environment_overrides_defaults(monkeypatch):
    monkeypatch.setenv("ABACUS_MAX_N", "300")
    monkeypatch.setenv("ABACUS_WORKERS", "2")
    settings = load_settings()
    assert (settings.max_n, settings.workers) == (300, 2)


def test_explicit_overrides_win(monkeypatch):
    monkeypatch.setenv("ABACUS_MAX_N", "300")
    assert load_settings(max_n=50).max_n == 50


@pytest.mark.parametrize("name, value", [
    ("ABACUS_MAX_N", "lots"),
    ("ABACUS_MAX_N", "-1"),
    ("ABACUS_PRECISION", "10"),
    ("ABACUS_WORKERS", "0"),
])
def test_invalid_settings(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError):
        load_settings()


def test_use_settings_replaces_the_process_settings():
    use_settings(load_settings(max_n=7))
    assert get_settings().max_n == 7
    use_settings(None)
    assert get_settings().max_n == 5000


def test_info_messages_need_verbose(capsys):
    log_info("quiet please")
    log_danger("always shown")
    err = capsys.readouterr().err
    assert "quiet please" not in err
    assert "always shown" in err

    set_verbose(True)
    log_info("now visible")
    assert "now visible" in capsys.readouterr().err


def test_json_export_writes_integers_as_decimal_strings():
    big = 10 ** 40 + 1
    assert json.loads(to_json({"n": 3, "values": [1, big], "ok": True})) == {
        "n": "3", "values": ["1", str(big)], "ok": True,
    }
    exported = json.loads(to_json(verify_gauss(10)))
    assert exported == {"identity": "gauss", "order": 10, "equal": True}


def test_csv_export_quotes_partitions():
    assert to_csv(["partition", "size"], [["6,3,3,1", 13]]) == 'partition,size\n"6,3,3,1",13'
