"""Environment configuration settings for the toolkit.

This module defines the application settings using Pydantic's BaseSettings.
It includes logging switches, computation limits and the verification defaults.
"""
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.utils.env_util import get_env, get_env_bool, get_env_int, get_env_weights, is_env_set


class Settings(BaseSettings):
    """Application settings: logging, computation limits and suite defaults."""

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    # Application metadata
    app_name: str = get_env("APP_NAME", "vknot")
    app_description: str = get_env(
        "APP_DESCRIPTION",
        "Convert virtual link diagrams to normal ones through cut-system double coverings",
    )
    app_version: str = get_env("APP_VERSION", "0.1.0")

    # Logging
    log_level: str = get_env("VKNOT_LOG_LEVEL", "WARNING")
    no_color: bool = is_env_set("NO_COLOR")

    # Computation limits
    state_limit: int = get_env_int("VKNOT_STATE_LIMIT", 20, minimum=0)
    workers: int = get_env_int("VKNOT_WORKERS", 1, minimum=1)

    # Cut-system search
    cut_search_per_gap: int = get_env_int("VKNOT_CUT_SEARCH_PER_GAP", 2, minimum=1)
    cut_search_factor: int = get_env_int("VKNOT_CUT_SEARCH_FACTOR", 2, minimum=1)
    random_cut_points: int = get_env_int("VKNOT_RANDOM_CUT_POINTS", 6, minimum=0)

    # Random walks and verification
    default_seed: int = get_env_int("VKNOT_SEED", 0)
    timing: bool = get_env_bool("VKNOT_TIMING", "false")
    walk_weights: dict[str, int] = Field(
        default_factory=lambda: get_env_weights("VKNOT_WALK_WEIGHTS", {"r1": 40, "r2": 40, "r3": 10, "flype": 10}),
    )
