# -*- coding: utf-8 -*-

# PgBufferSim Exceptions are defined here
from typing import Any, Optional


class PgBufferSimException(Exception):
    """ The default exception for PgBufferSim

    """

    def __init__(self, message: str):
        super(PgBufferSimException, self).__init__(message)
        self.message = message

    def __str__(self):
        return self.message


class PgBufferSimValidationException(PgBufferSimException):
    """ Parent of all exceptions caused by bad input (parameters, files, config)

    """
    pass


class InvalidParameterException(PgBufferSimValidationException):

    def __init__(self, parameter: str, value: Any, reason: str):
        self.parameter = parameter
        self.value = value
        self.reason = reason
        super(InvalidParameterException, self).__init__(
            f"Invalid value {value!r} for parameter '{parameter}': {reason}")


class TraceParseException(PgBufferSimValidationException):

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super(TraceParseException, self).__init__(f"Malformed trace file at line {line_number}: {reason}")


class TraceValidationException(PgBufferSimValidationException):
    pass


class ConfigException(PgBufferSimValidationException):
    pass


class InvalidStateException(PgBufferSimException):
    pass


class PinUnderflowException(PgBufferSimException):

    def __init__(self, slot: int):
        self.slot = slot
        super(PinUnderflowException, self).__init__(f"Unpin of slot {slot} with refcount 0")


class NoVictimException(PgBufferSimException):

    def __init__(self, policy: str, seq: Optional[int] = None):
        self.policy = policy
        self.seq = seq
        super(NoVictimException, self).__init__(self._build_message())

    def _build_message(self) -> str:
        message = f"Policy '{self.policy}' found no victim: every slot is pinned"
        if self.seq is not None:
            message += f" (request seq {self.seq})"
        return message

    def with_seq(self, seq: int) -> 'NoVictimException':
        self.seq = seq
        self.message = self._build_message()
        return self


class PolicyContractViolation(PgBufferSimException):
    """ Raised when a policy returns a slot that may not be evicted.

    Aborts the simulation. The request ordinal is attached by the harness once known.
    """

    def __init__(self, policy: str, slot: Any, reason: str, seq: Optional[int] = None):
        self.policy = policy
        self.slot = slot
        self.reason = reason
        self.seq = seq
        super(PolicyContractViolation, self).__init__(self._build_message())

    def _build_message(self) -> str:
        message = f"Policy '{self.policy}' returned slot {self.slot!r}: {self.reason}"
        if self.seq is not None:
            message += f" (request seq {self.seq})"
        return message

    def with_seq(self, seq: int) -> 'PolicyContractViolation':
        self.seq = seq
        self.message = self._build_message()
        return self


class SimulationException(PgBufferSimException):

    def __init__(self, trace_name: str, policy: str, cause: Exception):
        self.trace_name = trace_name
        self.policy = policy
        self.cause = cause
        super(SimulationException, self).__init__(
            f"Run of policy '{policy}' on trace '{trace_name}' failed: {cause}")


class UsageException(PgBufferSimValidationException):
    """ Bad command line: unknown flag, missing argument or malformed value

    """
    pass
