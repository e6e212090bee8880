"""Fixed point data of circle actions on 6-manifolds: validation, reduction and certificates."""
