"""
Exception hierarchy and the throw helper
"""

from typing import NoReturn

from vcloud.vcloud_mpc.utils.logger import logger


class VCloudError(Exception):
    exit_code = 3


class ParameterError(VCloudError):
    """Invalid parameter, profile, width or table"""

    exit_code = 2


class InputArityError(ParameterError):
    pass


class CircuitError(ParameterError):
    """Structurally invalid circuit"""


class CircuitParseError(CircuitError):
    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(message)
        self.line_no = line_no


class ClassificationError(ParameterError):
    """Gate handed to the wrong evaluation path"""


class ProtocolError(VCloudError):
    pass


class OtAbort(ProtocolError):
    def __init__(self, message: str, session: tuple | int | None = None):
        super().__init__(message)
        self.session = session


class SessionMismatch(ProtocolError):
    pass


class SchedulingError(ProtocolError):
    pass


class LivelockError(SchedulingError):
    pass


class ChannelClosed(ProtocolError):
    def __init__(self, message: str, peer=None):
        super().__init__(message)
        self.peer = peer


class CombinerError(ProtocolError):
    def __init__(self, message: str, party: int | None = None):
        super().__init__(message)
        self.party = party


class EvaluatorError(ProtocolError):
    pass


class GarbledCircuitReuse(EvaluatorError):
    pass


class ClientError(ProtocolError):
    pass


def throw(message: str, exc: type[VCloudError] = ParameterError, **fields) -> NoReturn:
    """Log ``message`` and raise it as ``exc``; extra keyword fields go to the exception"""
    logger().error(message)
    raise exc(message, **fields)
