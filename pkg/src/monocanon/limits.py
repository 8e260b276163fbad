"""Resource limits shared by the poset and homology engines."""

import time


class ResourceError(RuntimeError):
    """A configured limit was hit; the answer is unknown rather than negative."""


class BoxCapError(ResourceError):
    """The bounding box has more cells than the configured cap."""


class SearchBudgetError(ResourceError):
    """The partition search ran out of its node budget."""


class TimeLimitError(ResourceError):
    """The wall-clock deadline passed mid-computation."""


def deadline_from_timeout(seconds):
    """Absolute monotonic deadline for a timeout in seconds (None passes through)."""
    return None if seconds is None else time.monotonic() + seconds


def check_deadline(deadline):
    if deadline is not None and time.monotonic() >= deadline:
        raise TimeLimitError("wall-clock deadline exceeded")
