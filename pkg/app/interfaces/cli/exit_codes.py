"""Process exit codes of the command line."""

from enum import IntEnum


class ExitCode(IntEnum):
    """Exit statuses; the usage, data, file and service codes follow sysexits."""

    OK = 0
    INVALID = 2
    NOT_FOUND = 3
    VERIFICATION_FAILED = 4
    USAGE = 64
    DATA_ERROR = 65
    FILE_ERROR = 66
    STATE_LIMIT = 69
    INTERNAL = 70
