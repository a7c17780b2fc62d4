"""Shared error type and size guard for the exhaustive enumerators."""

DEFAULT_MAX_ENUMERATION = 10**7


class ResourceCapError(RuntimeError):
    """An enumeration would exceed the configured size cap."""


def check_cap(predicted: int, max_count, what: str) -> None:
    """Refuse up front when `predicted` structures exceed `max_count`.

    `max_count=None` disables the guard.
    """
    if max_count is not None and predicted > max_count:
        raise ResourceCapError(
            f"{what}: {predicted} structures predicted, cap is {max_count} "
            "(raise or disable the cap to proceed)"
        )
