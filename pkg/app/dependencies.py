"""Defines the dependency injection setup for the command line application.

It provides functions to retrieve instances of settings, repositories, and services.
Settings and repositories are cached so that the same instance is reused across commands.
"""
from functools import lru_cache

from app.config.environment import Settings
from app.repositories.diagram_file_repository_impl import DiagramFileRepository
from app.repositories.diagram_repository_interface import DiagramRepositoryInterface
from app.services.analysis_service import AnalysisService
from app.services.verification_service import VerificationService


@lru_cache
def get_env_settings() -> Settings:
    """Get the application settings instance.

    Returns:
        Settings: The application settings instance with environment variables loaded.

    """
    return Settings()


@lru_cache
def get_diagram_repository() -> DiagramRepositoryInterface:
    """Get the diagram repository instance.

    Returns:
        DiagramFileRepository: The file based diagram repository.

    """
    return DiagramFileRepository()


def get_analysis_service(settings: Settings | None = None) -> AnalysisService:
    """Get an Analysis service instance.

    Args:
        settings (Settings, optional): Settings with command line overrides applied.
            Defaults to the environment settings.

    Returns:
        AnalysisService: The Analysis service instance.

    """
    return AnalysisService(
        diagram_repository=get_diagram_repository(),
        settings=settings or get_env_settings(),
    )


def get_verification_service(settings: Settings | None = None) -> VerificationService:
    """Get a Verification service instance.

    Args:
        settings (Settings, optional): Settings with command line overrides applied.
            Defaults to the environment settings.

    Returns:
        VerificationService: The Verification service instance.

    """
    return VerificationService(settings=settings or get_env_settings())
