"""
Pydantic models for selftest fixtures and their results.
"""
import logging
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class Step(BaseModel):
    """A single check in a fixture suite."""
    name: str = Field(..., description="The name of the step.")
    check: str = Field(..., description="The name of the check handler that runs this step.")
    input: Dict[str, Any] = Field(default_factory=dict, description="Arguments passed to the check handler.")
    expected: Dict[str, Any] = Field(default_factory=dict, description="What the handler's result must match.")
    description: Optional[str] = Field(None, description="The claim this step reproduces.")


class Suite(BaseModel):
    """An ordered group of checks loaded from one JSON file."""
    name: str = Field(..., description="The name of the suite.")
    description: Optional[str] = Field(None, description="A description of the suite's purpose.")
    steps: List[Step] = Field(..., description="The sequence of checks in the suite.")


class StepResult(BaseModel):
    suite: str
    step: str
    check: str
    passed: bool
    detail: str = ""
    observed: Dict[str, Any] = Field(default_factory=dict)


class SelfTestReport(BaseModel):
    passed: bool
    total: int
    failed: int
    results: List[StepResult]
