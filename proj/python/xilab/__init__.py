"""Python surface of the xi workbench core."""

try:
    from ._xilab import *  # noqa: F401,F403
    from ._xilab import __doc__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _xilab import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
