from app.core.util.components_loader import WorkbenchSettings, load_components, load_settings
from app.core.util.mp_manager import MultiprocessManager, get_multiprocess_manager

__all__ = [
    "MultiprocessManager",
    "WorkbenchSettings",
    "get_multiprocess_manager",
    "load_components",
    "load_settings"
]
