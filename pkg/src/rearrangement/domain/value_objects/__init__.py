from src.rearrangement.domain.value_objects.direction import Direction
from src.rearrangement.domain.value_objects.estimate_vector import EstimateVector
from src.rearrangement.domain.value_objects.power_bound_input import PowerBoundInput
from src.rearrangement.domain.value_objects.s_vector import SVector
from src.rearrangement.domain.value_objects.test_decision import TestDecision

__all__ = ["Direction", "EstimateVector", "PowerBoundInput", "SVector", "TestDecision"]
