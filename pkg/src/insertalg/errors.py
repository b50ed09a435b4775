class InsertAlgError(Exception):
    """Base class for domain errors raised by this package."""


class UnknownLetter(InsertAlgError):
    def __init__(self, letter: str, alphabet: str = ""):
        self.letter = letter
        super().__init__(f"letter {letter!r} is not in alphabet {alphabet!r}")


class InvalidAlphabet(InsertAlgError):
    pass


class PositionOutOfRange(InsertAlgError):
    pass


class AlphabetMismatch(InsertAlgError):
    pass


class InadmissibleInput(InsertAlgError):
    pass


class OutOfDomain(InsertAlgError):
    pass


class BoundTooLarge(InsertAlgError):
    pass


class SearchSpaceTooLarge(InsertAlgError):
    def __init__(self, estimate: int, ceiling: int):
        self.estimate = estimate
        self.ceiling = ceiling
        super().__init__(f"search space of ~{estimate} tuples exceeds ceiling {ceiling}")
