"""Exact enumeration of pattern-avoiding nonnesting permutations.

Thin wrapper over the compiled extension; see the individual functions'
docstrings. Patterns are given as comma-separated compact words, e.g.
``"123,231"``; the empty string means no constraints. Words are lists of
positive integers.
"""

from ._nonnesting import (  # noqa: F401
    __version__,
    avoids_all,
    catalog,
    catalog_evaluate,
    check_factorization,
    complement,
    contains_pattern,
    count_avoiders,
    count_nonnesting,
    count_sn_avoiders,
    descent_count,
    descent_polynomial,
    duplicate,
    dyck_decode,
    dyck_encode,
    format_word,
    generate_avoiders,
    grand_dyck_encode,
    is_nonnesting,
    narayana,
    parse_word,
    reverse,
    reverse_complement,
    sequence,
    sn_descent_polynomial,
    standardize,
    symmetry_orbit,
    to_dyck,
    underlying_permutation,
    undup,
    verify_catalog,
)
