from src.estimators.domain.value_objects.regression_fit import RegressionFit
from src.estimators.domain.value_objects.unit_effects import UnitEffects

__all__ = ["RegressionFit", "UnitEffects"]
