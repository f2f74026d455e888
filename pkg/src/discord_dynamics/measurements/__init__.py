from ._operators import (
    ZERO_PROBABILITY,
    BlochDirection,
    WeakMeasurementPair,
    bloch_vectors,
    conditioned_state_prob,
    conditioned_states,
    projector_stack,
    projectors,
    weak_operators,
    weak_weights,
)

__all__ = [
    "ZERO_PROBABILITY",
    "BlochDirection",
    "WeakMeasurementPair",
    "bloch_vectors",
    "conditioned_state_prob",
    "conditioned_states",
    "projector_stack",
    "projectors",
    "weak_operators",
    "weak_weights",
]
