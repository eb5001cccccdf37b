from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

PACKAGE_DIR = Path(__file__).resolve().parent


class BaseAppSettings(BaseSettings):
    """Settings that are safe to version control."""

    model_config = SettingsConfigDict(
        env_file='.env',
        env_file_encoding='utf-8',
        extra='ignore',
    )

    APP_VERSION: str = '0.1.0'
    REPORT_VERSION: str = '1'
    LOG_LEVEL: str = 'WARNING'

    # Versioned fixture directory
    DATA_DIR: Path = PACKAGE_DIR / 'data' / 'v1'

    # Cover defaults
    DEFAULT_COVER_ORDER: int = 3
    DEFAULT_TREE_GENERATOR: str = 'y'

    # Search bounds
    MAX_LEVEL_MOVES: int = 512
    MAX_REALIZATION_ATTEMPTS: int = 2_000_000

    # Multi-handle addition subsets
    PARALLEL_SUBSETS: bool = False
    MAX_PARALLEL_WORKERS: int = 4


class Settings(BaseAppSettings):
    pass


def get_settings() -> Settings:
    """
    Returns the project settings.

    :return: Project settings.
    """
    return Settings()
