"""Trapezoidal words: factor complexity, special factors, open/closed classes."""
from .classify import (
    Classification,
    Closedness,
    classify,
    closedness,
    is_balanced,
    is_rich,
    is_sturmian,
    is_trapezoidal,
)
from .complexity import complexity_profile, parameters
from .structure import dalessandro_factorize, minimal_pathological_pair
from .words import Word, parse_word

__version__ = "0.1.0"
