import pytest

from supercong.src.config import (
    NUM_THREADS_ENV,
    ConfigError,
    RunConfig,
    get_num_threads,
)


def test_defaults():
    config = RunConfig(command="sweep")
    assert (config.p_lo, config.p_hi) == (3, 100)
    assert not config.json
    assert RunConfig(command="sweep", output_format="json").json


@pytest.mark.parametrize(
    "kwargs",
    [
        {"p_lo": 50, "p_hi": 10},
        {"output_format": "xml"},
        {"precision": 10},
        {"grid": (0, 12)},
        {"num_thread": 0},
    ],
)
def test_invalid_config(kwargs):
    with pytest.raises(ConfigError):
        RunConfig(command="sweep", **kwargs)


def test_config_error_is_a_value_error():
    assert issubclass(ConfigError, ValueError)


def test_num_threads_from_environment(monkeypatch):
    monkeypatch.setenv(NUM_THREADS_ENV, "3")
    assert get_num_threads() == 3
    assert get_num_threads(default=8) == 3


def test_num_threads_default(monkeypatch, mocker):
    monkeypatch.delenv(NUM_THREADS_ENV, raising=False)
    assert get_num_threads(default=2) == 2
    mocker.patch("supercong.src.config.os.cpu_count", return_value=None)
    assert get_num_threads() == 1


@pytest.mark.parametrize("value", ["many", "0", "-2"])
def test_bad_thread_count(monkeypatch, value):
    monkeypatch.setenv(NUM_THREADS_ENV, value)
    with pytest.raises(ConfigError):
        get_num_threads()
