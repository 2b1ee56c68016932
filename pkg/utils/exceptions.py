import logging

from utils.logger import logger

EXIT_VALIDATION = 1
EXIT_NON_GENERIC = 2
EXIT_INTERNAL = 3


class CustomException(Exception):
    exit_code = EXIT_INTERNAL
    log_level = logging.ERROR

    def __init__(self, error_message, error_detail=None):
        super().__init__(error_message)
        self.error_message = error_message
        self.error_detail = error_detail
        logger.log(
            self.log_level,
            f"{type(self).__name__}: {error_message} - Detail: {error_detail}",
        )

    def __str__(self):
        return self.error_message


class ValidationError(CustomException):
    """Bad input: the request cannot be interpreted."""
    exit_code = EXIT_VALIDATION


class ZeroVector(ValidationError):
    pass


class NotCalabiYau(ValidationError):
    pass


class ZeroColumn(ValidationError):
    pass


class RankDeficient(ValidationError):
    pass


class MalformedInput(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class NotWallStratum(ValidationError):
    pass


class AdjointUnsolvable(ValidationError):
    pass


class NonGenericLinearization(CustomException):
    """The character sits on a wall or produces a tie between candidates."""
    exit_code = EXIT_NON_GENERIC
    # near-wall searches raise and catch this routinely
    log_level = logging.DEBUG


class EmptyFeasibleRegion(CustomException):
    pass


class DegenerateFan(CustomException):
    pass


class NoFlippedStratum(CustomException):
    pass
