"""
Fixture Manager: loads selftest suites from JSON files.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Union

from pydantic import ValidationError

from src.core.exceptions import UsageError

from .fixture import Suite

logger = logging.getLogger(__name__)


class FixtureManager:
    """
    Manages the loading of selftest suites, one suite per JSON file.
    """
    def __init__(self, fixture_dir: Union[str, Path]):
        self.fixture_dir = Path(fixture_dir)
        self.suites: Dict[str, Suite] = self._load_suites()

    def _load_suites(self) -> Dict[str, Suite]:
        """Loads all suite JSON files from the fixture directory, in file-name order."""
        if not self.fixture_dir.is_dir():
            raise UsageError(f"Fixture directory not found: {self.fixture_dir}", error_code="missing_fixtures")

        suites: Dict[str, Suite] = {}
        for file_path in sorted(self.fixture_dir.glob("*.json")):
            try:
                with open(file_path, "r", encoding="utf-8") as f:
                    suite = Suite(**json.load(f))
            except json.JSONDecodeError as e:
                raise UsageError(f"Failed to decode JSON from {file_path}: {e}", error_code="bad_fixture") from e
            except ValidationError as e:
                raise UsageError(f"Invalid suite in {file_path}: {e.errors()[0]['msg']}", error_code="bad_fixture") from e
            if suite.name in suites:
                logger.warning(f"Duplicate suite name '{suite.name}' found. Overwriting.")
            suites[suite.name] = suite
            logger.info(f"Loaded suite {suite.name} ({len(suite.steps)} steps)")
        return suites

    def get_suite(self, name: str) -> Suite:
        suite = self.suites.get(name)
        if not suite:
            raise UsageError(f"Suite '{name}' not found.", error_code="unknown_suite")
        return suite

    def list_suites(self) -> List[str]:
        return list(self.suites.keys())
