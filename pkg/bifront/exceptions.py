class BaseError(Exception):
    """Base bifront exceptions"""


class UsageError(BaseError):
    """Exception raised for invalid arguments or instances"""


class ParseError(UsageError):
    """Exception raised when an instance file cannot be read"""


class MatchNotFoundError(ParseError):
    """Exception raised when a header or data line does not match its pattern"""

    def __init__(self, regex: str, string: str):
        self.regex = regex
        self.string = string
        super().__init__(
            f"Could not locate match for regex: '{regex}' in string: '{string}'"
        )


class InvalidPointError(UsageError):
    """Exception raised when a point does not lie on the boundary of an upper image"""


class RegistryError(BaseError):
    """Exception raised when an algorithm is unknown or registered twice"""


class CapacityError(BaseError):
    """Exception raised when an instance exceeds a configured size cap"""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has size {size} which exceeds the cap of {cap}.")


class InfeasibleError(BaseError):
    """Exception raised when a scalarization or LP has no feasible solution"""


class EmptyFrontError(InfeasibleError):
    """Exception raised when an enumerator finds no image point at all"""


class UnboundedError(BaseError):
    """Exception raised when an objective is unbounded below"""


class LPError(BaseError):
    """Exception raised when the LP machinery fails internally"""


class EncoderError(BaseError):
    """Exception raised when an object cannot be written in the requested format"""
