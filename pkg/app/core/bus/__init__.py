from app.core.bus.events import EventType
from app.core.bus.event_bus import (
    EventBus,
    EventPriority,
    event,
    event_bus,
    get_event_bus,
    register_component_handlers,
)
from app.core.bus.event_models import (
    BaseEvent,
    CellLoadedEvent,
    RefutationEvent,
    SuiteCompletedEvent,
    VerifyCompletedEvent,
    VerifyStartedEvent,
)

__all__ = [
    "EventType",
    "EventBus",
    "EventPriority",
    "event",
    "event_bus",
    "get_event_bus",
    "register_component_handlers",
    "BaseEvent",
    "CellLoadedEvent",
    "RefutationEvent",
    "SuiteCompletedEvent",
    "VerifyCompletedEvent",
    "VerifyStartedEvent",
]
