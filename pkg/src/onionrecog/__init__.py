"""Password-keyed domain recognizers with short visual fingerprints.

The core object is a recognizer: a small public database plus a secret
key, built over a set of onion domains. Testing any stored domain yields
one shared m-bit fingerprint, rendered as an image a human can recognize;
the database alone reveals nothing about which domains were stored.
"""

from .core import (
    Key,
    RecognizerInstance,
    RecognizerParams,
    SecurityLevel,
    compute_epsilon,
    parameter_table,
    rec_init,
    rec_test,
    select_m,
)
from .errors import (
    ContractViolation,
    CorruptDb,
    InitFailure,
    InsufficientPoolError,
    InvalidDbParams,
    NotARecognizerDb,
    OnionChecksumError,
    OnionFormatError,
    OnionVersionError,
    OutOfRangeError,
    StoreError,
    UnknownWordError,
)
from .onionaddr import encode_onion, parse_onion
from .passcode import decode_key, encode_key, load_wordlist, validate_entry
from .store import load_db, save_db
from .visualhash import scene_of, svg_of

__all__ = [
    "Key",
    "RecognizerInstance",
    "RecognizerParams",
    "SecurityLevel",
    "compute_epsilon",
    "parameter_table",
    "rec_init",
    "rec_test",
    "select_m",
    "ContractViolation",
    "CorruptDb",
    "InitFailure",
    "InsufficientPoolError",
    "InvalidDbParams",
    "NotARecognizerDb",
    "OnionChecksumError",
    "OnionFormatError",
    "OnionVersionError",
    "OutOfRangeError",
    "StoreError",
    "UnknownWordError",
    "encode_onion",
    "parse_onion",
    "decode_key",
    "encode_key",
    "load_wordlist",
    "validate_entry",
    "load_db",
    "save_db",
    "scene_of",
    "svg_of",
]

__version__ = "1.0.0"
