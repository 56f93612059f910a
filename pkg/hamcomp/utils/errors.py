class HamcompError(Exception):
    """Base class for every error the CLI turns into an exit code"""

    exit_code = 1

    def to_dict(self):
        return {
            'error': type(self).__name__,
            'message': str(self),
            'exit_code': self.exit_code
        }


class ParameterError(HamcompError, ValueError):
    exit_code = 2


class GraphParseError(ParameterError):
    """Malformed graph text; keeps the 1-based line number of the offence"""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class ContractError(HamcompError):
    """A caller broke an operation's precondition"""

    exit_code = 2


class CapacityError(HamcompError):
    """An exact method was asked to handle an instance above its size cap"""

    exit_code = 3

    def __init__(self, message, size=None, cap=None):
        super().__init__(message)
        self.size = size
        self.cap = cap
