import os
from dataclasses import dataclass
from typing import Optional, Tuple

NUM_THREADS_ENV = "SUPERCONG_NUM_THREADS"
MIN_PRECISION = 15


class ConfigError(ValueError):
    pass


def get_num_threads(default: Optional[int] = None) -> int:
    """
    Thread count from SUPERCONG_NUM_THREADS, else `default`, else every core.
    """
    value = os.environ.get(NUM_THREADS_ENV)
    if value is None:
        return default if default is not None else (os.cpu_count() or 1)
    try:
        num_thread = int(value)
    except ValueError as err:
        raise ConfigError(f"{NUM_THREADS_ENV}={value!r} is not an integer") from err
    if num_thread < 1:
        raise ConfigError(f"{NUM_THREADS_ENV} must be at least 1, got {num_thread}")
    return num_thread


@dataclass(frozen=True)
class RunConfig:
    command: str
    check_ids: Tuple[str, ...] = ()
    p_lo: int = 3
    p_hi: int = 100
    parallel: bool = False
    num_thread: int = 1
    output_format: str = "human"
    precision: int = 30
    grid: Tuple[int, int] = (12, 12)

    def __post_init__(self):
        if self.p_lo > self.p_hi:
            raise ConfigError(f"p_lo={self.p_lo} is larger than p_hi={self.p_hi}")
        if self.output_format not in ("human", "json"):
            raise ConfigError(f"Unknown output format {self.output_format}")
        if self.precision < MIN_PRECISION:
            raise ConfigError(
                f"precision must be at least {MIN_PRECISION} digits, "
                f"got {self.precision}"
            )
        if min(self.grid) < 1:
            raise ConfigError(f"grid bounds must be at least 1, got {self.grid}")
        if self.num_thread < 1:
            raise ConfigError(f"num_thread must be at least 1, got {self.num_thread}")

    @property
    def json(self) -> bool:
        return self.output_format == "json"
