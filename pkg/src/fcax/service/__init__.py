from .app import create_app
from .store import ConflictError, NotFoundError, Session, SessionStore

__all__ = ["ConflictError", "NotFoundError", "Session", "SessionStore", "create_app"]
