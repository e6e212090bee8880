from .checks import (
    check_biggest_weight_two,
    check_sign_balance,
    check_signature_zero,
    check_smallest_weight_balance,
    check_top_weight_double,
    check_two_points,
    check_weight_parity,
    validate_all,
)

__all__ = [
    "check_biggest_weight_two",
    "check_sign_balance",
    "check_signature_zero",
    "check_smallest_weight_balance",
    "check_top_weight_double",
    "check_two_points",
    "check_weight_parity",
    "validate_all",
]
