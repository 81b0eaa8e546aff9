"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An argument violated a documented precondition."""


class InitFailure(RuntimeError):
    """Recognizer initialization could not produce distinct hashed items."""


class OnionFormatError(ValueError):
    """Onion address has the wrong shape (length or alphabet)."""


class OnionVersionError(OnionFormatError):
    """Onion address version byte is not 3."""


class OnionChecksumError(OnionFormatError):
    """Onion address checksum does not match its public key."""


class UnknownWordError(ValueError):
    """A passphrase word is not in the wordlist (position is 1-based)."""

    def __init__(self, word: str, position: int):
        super().__init__(f"unknown word {word!r} at position {position}")
        self.word = word
        self.position = position


class OutOfRangeError(ValueError):
    """A passphrase decodes to an integer outside the key space."""


class InsufficientPoolError(ValueError):
    """Not enough pool words survive the distance filter."""


class StoreError(ValueError):
    """A database file failed validation."""


class NotARecognizerDb(StoreError):
    """File does not start with the database magic."""


class CorruptDb(StoreError):
    """File is truncated or fails its checksum."""


class InvalidDbParams(StoreError):
    """File decodes but its parameters violate the recognizer bounds."""
