"""Binary self-dual codes with automorphisms of order 2p."""

from .codes import LinearCode, dual, is_doubly_even, is_self_dual, min_distance, weight_enumerator
from .constructions import extended_hamming8, golay24, xqr
from .perms import Perm, aut_type, parse_perm

__all__ = [
    "LinearCode",
    "Perm",
    "aut_type",
    "dual",
    "extended_hamming8",
    "golay24",
    "is_doubly_even",
    "is_self_dual",
    "min_distance",
    "parse_perm",
    "weight_enumerator",
    "xqr",
]
