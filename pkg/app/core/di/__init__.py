from app.core.di.container import (
    AutoInjectMeta,
    DIContainer,
    get_container,
    injected,
    setup_di_container
)

__all__ = [
    "AutoInjectMeta",
    "DIContainer",
    "get_container",
    "injected",
    "setup_di_container"
]
