from app.core.handler.message_handler import CommandDispatcher

__all__ = ["CommandDispatcher"]
