from .complex_weights import ComplexWeights, complex_data_to_real, complex_to_real
from .connected_sum import connected_sum
from .manifolds import gen_cp3, gen_s6, gen_z2sum, gen_zn, generate

__all__ = [
    "ComplexWeights",
    "complex_data_to_real",
    "complex_to_real",
    "connected_sum",
    "gen_cp3",
    "gen_s6",
    "gen_z2sum",
    "gen_zn",
    "generate",
]
