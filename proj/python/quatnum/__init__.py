"""Exact arithmetic for rational quaternion algebras, quaternary quadratic
forms, integer quaternion division, and Fibonacci quaternions.

Everything is computed with arbitrary-precision integers and rationals; big
values cross the Python boundary as ``int`` or as strings like ``"3/2"``.
"""

from ._core import (  # noqa: F401
    __version__,
    are_isomorphic,
    check_identity,
    classify,
    classify_over_gaussian,
    compose,
    conic_solutions,
    count_residues,
    fib,
    fib_quaternion,
    hilbert_symbol,
    is_prime,
    is_prime_quaternion,
    is_right_congruent,
    is_unit,
    isqrt,
    legendre,
    lucas,
    monoid_fib,
    monoid_op,
    pisano,
    quat_conj,
    quat_inverse,
    quat_mul,
    quat_norm,
    quat_trace,
    represent,
    represent_rational,
    residue_system,
    right_divide,
    scaled_divide,
    special_fib_product,
    subring_norm,
    to_residue,
    verify_conic_point,
    verify_universal,
)
