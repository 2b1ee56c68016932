import json
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from typing import Any, Dict

from pydantic import ValidationError

from report.models import AnalysisRequest
from utils.config import Config
from utils.exceptions import MalformedInput
from utils.logger import logger


class InputLoader:
    """Loads analysis inputs (weight matrices, labels, task parameters) from disk"""

    def __init__(self):
        self.supported_extensions = {
            ".json": self._load_json,
            ".toml": self._load_toml,
        }

    def load_raw(self, file_path: str) -> Dict[str, Any]:
        """Read an input file into a plain dictionary"""
        if not os.path.exists(file_path):
            raise MalformedInput(f"Input file not found: {file_path}")

        file_ext = os.path.splitext(file_path)[1].lower()
        if file_ext not in self.supported_extensions:
            raise MalformedInput(f"Unsupported input type: {file_ext}")

        data = self.supported_extensions[file_ext](file_path)
        if not isinstance(data, dict):
            raise MalformedInput(f"{file_path} must contain a table at top level")

        schema = data.get("schema", Config.INPUT_SCHEMA_VERSION)
        if schema != Config.INPUT_SCHEMA_VERSION:
            raise MalformedInput(f"{file_path}: unsupported schema version {schema}")

        logger.info(f"Successfully loaded: {file_path}")
        return data

    def load_request(self, file_path: str, **overrides) -> AnalysisRequest:
        """Load an input file and merge command-line overrides into a request"""
        data = self.load_raw(file_path)
        data.update({key: value for key, value in overrides.items() if value is not None})
        return build_request(data)

    # _method_name use for internal use within the class
    def _load_json(self, file_path: str) -> Any:
        try:
            with open(file_path, "r", encoding="utf-8") as file:
                return json.load(file)
        except json.JSONDecodeError as e:
            raise MalformedInput(f"Failed to parse JSON file {file_path}: {e}")

    def _load_toml(self, file_path: str) -> Any:
        try:
            with open(file_path, "rb") as file:
                return tomllib.load(file)
        except tomllib.TOMLDecodeError as e:
            raise MalformedInput(f"Failed to parse TOML file {file_path}: {e}")


def build_request(data: Dict[str, Any]) -> AnalysisRequest:
    try:
        return AnalysisRequest.model_validate(data)
    except ValidationError as e:
        raise MalformedInput(f"Invalid analysis request: {e.error_count()} problem(s)", str(e))
