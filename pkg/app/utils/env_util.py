"""Environment variable readers for the vknot settings.

Every reader names the variable in its error, so a bad ``.env`` entry fails with
the variable to fix. They are used as field defaults of ``Settings``.
"""

import os

WALK_MOVES = ("r1", "r2", "r3", "flype")


def get_env(var_name: str, default: str) -> str:
    """Get an environment variable or return a default value if not set.

    Args:
        var_name: The name of the environment variable to retrieve
        default: The default value to return if the variable is not set

    Returns:
        The value of the environment variable or the default value if not set

    """
    return os.getenv(var_name, default)


def get_env_int(var_name: str, default: int, minimum: int | None = None) -> int:
    """Read an integer setting such as ``VKNOT_STATE_LIMIT``.

    Args:
        var_name: The name of the environment variable to retrieve
        default: The value used when the variable is not set
        minimum: Smallest accepted value, if any

    Returns:
        The parsed value, or ``default``.

    Raises:
        ValueError: If the value is not an integer or is below ``minimum``.

    """
    raw = os.getenv(var_name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as e:
        msg = f"{var_name} must be an integer, got {raw!r}"
        raise ValueError(msg) from e
    if minimum is not None and value < minimum:
        msg = f"{var_name} must be at least {minimum}, got {value}"
        raise ValueError(msg)
    return value


def get_env_bool(var_name: str, default: str) -> bool:
    """Read a switch such as ``VKNOT_TIMING``.

    Returns:
        True for 'true', '1', 'yes' and 'on' (case insensitive), False otherwise.

    """
    value = os.getenv(var_name, default)
    if value is None:
        return False
    return value.strip().lower() in ("true", "1", "yes", "on")


def is_env_set(var_name: str) -> bool:
    """Tell whether an environment variable is present and non-empty.

    Used for presence-style switches such as ``NO_COLOR``, where any value counts.
    """
    return bool(os.getenv(var_name))


def get_env_weights(var_name: str, default: dict[str, int]) -> dict[str, int]:
    """Read random walk weights written as ``r1=40,r2=40,r3=10,flype=10``.

    Moves left out get weight 0.

    Args:
        var_name: The name of the environment variable to retrieve
        default: Weights used when the variable is not set or empty

    Returns:
        A weight for every move in ``WALK_MOVES``.

    Raises:
        ValueError: If an entry is malformed, names an unknown move, is negative,
            or if every weight is 0.

    """
    raw = os.getenv(var_name, "").strip()
    if not raw:
        return dict(default)
    weights = dict.fromkeys(WALK_MOVES, 0)
    for entry in raw.split(","):
        move, sep, number = entry.partition("=")
        move = move.strip().lower()
        if not sep or move not in weights:
            msg = f"{var_name}: expected one of {', '.join(WALK_MOVES)} as move=weight, got {entry.strip()!r}"
            raise ValueError(msg)
        try:
            weights[move] = int(number)
        except ValueError as e:
            msg = f"{var_name}: weight of {move} must be an integer, got {number.strip()!r}"
            raise ValueError(msg) from e
        if weights[move] < 0:
            msg = f"{var_name}: weight of {move} must not be negative"
            raise ValueError(msg)
    if not any(weights.values()):
        msg = f"{var_name}: at least one weight must be positive"
        raise ValueError(msg)
    return weights
