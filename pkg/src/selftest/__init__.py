from .fixture import SelfTestReport, Step, StepResult, Suite
from .manager import FixtureManager
from .runner import SelfTestRunner

__all__ = ["SelfTestReport", "Step", "StepResult", "Suite", "FixtureManager", "SelfTestRunner"]
