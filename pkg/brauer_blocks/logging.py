import logging


class MoveTraceFilter(logging.Filter):
    """
    Drops the per-move records emitted while a reduction runs.

    Records carrying a ``move`` attribute (set through ``extra=``) are only
    let through when the filter is enabled.
    """

    def __init__(self, enabled=False):
        super().__init__()
        self.enabled = enabled

    def filter(self, record):
        if getattr(record, "move", None) is None:
            return True
        return bool(self.enabled)
