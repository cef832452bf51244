"""
Configuration management for the toric class engine.

All values come from command-line flags: environment variables and
dotenv files are not read.
"""

from typing import Any, Literal, Optional, Tuple, Type

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings, populated from CLI flags."""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        validate_assignment=True,
        extra="ignore",
    )

    # Application
    app_name: str = "toric-classes"
    app_version: str = "1.0.0"

    # Logging
    log_level: str = "WARNING"
    log_format: Literal["text", "json"] = "text"
    log_file: Optional[str] = None
    enable_color: bool = False

    # Execution
    threads: int = Field(default=1, ge=1, le=64)
    output_format: Literal["json", "text"] = "json"

    # Limits
    polytope_rank_cap: int = Field(default=3, ge=1)
    reciprocity_dilations: int = Field(default=3, ge=1)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)

    @property
    def is_parallel(self) -> bool:
        """Check if internal parallelism is enabled."""
        return self.threads > 1

    @property
    def is_json_logging(self) -> bool:
        """Check if log records are emitted as JSON lines."""
        return self.log_format == "json"

    def apply(self, **overrides: Any) -> "Settings":
        """
        Update settings in place from parsed flags.

        Args:
            **overrides: Field values; None entries are skipped

        Returns:
            The updated settings instance
        """
        for key, value in overrides.items():
            if value is not None:
                setattr(self, key, value)
        return self


# Global settings instance
settings = Settings()
