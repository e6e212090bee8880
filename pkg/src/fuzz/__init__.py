from .harness import FuzzRecord, FuzzResult, random_connected_sum, random_generator, run_fuzz, run_iteration

__all__ = [
    "FuzzRecord",
    "FuzzResult",
    "random_connected_sum",
    "random_generator",
    "run_fuzz",
    "run_iteration",
]
