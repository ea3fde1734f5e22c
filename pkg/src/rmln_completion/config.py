"""Configuration module for the completion library and experiment CLI."""

from pydantic_settings import BaseSettings, SettingsConfigDict

from rmln_completion import constants


class Settings(BaseSettings):
    """Application settings. Environment variables use the ``RMLN_`` prefix."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="RMLN_",
        case_sensitive=False,
        extra="ignore",
    )

    # Solver hyperparameters
    lam: float = constants.DEFAULT_LAMBDA
    eps: float = constants.DEFAULT_EPS
    mu0: float = constants.DEFAULT_MU0
    rho: float = constants.DEFAULT_RHO
    gamma: float = constants.DEFAULT_GAMMA
    c: float = constants.DEFAULT_C
    p: float = constants.DEFAULT_P
    outer_iters: int = constants.DEFAULT_OUTER_ITERS
    inner_iters: int = constants.DEFAULT_INNER_ITERS
    strategy: str = "reweighted"
    method: str = "rmln"

    # Output clipping and metric peak
    value_min: float = constants.PIXEL_MIN
    value_max: float = constants.PIXEL_MAX
    peak: float = constants.PEAK_8BIT

    # Data paths
    output_dir: str = "results"
    raw_data_dir: str = "data/raw"
    datasets_dir: str = "data/datasets"

    # Execution
    workers: int = 1
    record_timing: bool = True
    write_traces: bool = False
    debug_checks: bool = False
    log_level: str = "INFO"

    # Dataset downloads
    download_timeout: int = 60


# Global settings instance
settings = Settings()
