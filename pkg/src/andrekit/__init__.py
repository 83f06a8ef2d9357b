from .facade import AndreKit

__all__ = ["AndreKit"]
