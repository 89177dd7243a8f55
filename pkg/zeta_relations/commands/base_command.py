from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from pydantic import ValidationError

from ..models import RunConfig
from ..utils.errors import ZetaRelationsError
from ..utils.logger import get_logger

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class BaseCommand(ABC):
    def __init__(self, name: str, config: RunConfig):
        self.name = name
        self.config = config
        self.logger = get_logger(f"commands.{name}")

    @abstractmethod
    def process_task(self) -> Dict[str, Any]:
        """Return format_success_response(...) with the document to emit."""

    def run(self) -> Dict[str, Any]:
        try:
            result = self.process_task()
        except ZetaRelationsError as e:
            result = self.format_error_response(str(e), EXIT_FAILED)
        except (ValueError, ValidationError) as e:
            result = self.format_error_response(str(e), EXIT_USAGE)
        self.log_execution(result)
        return result

    def format_success_response(self, document: Any, message: str = "Success",
                                context: Optional[Dict[str, Any]] = None,
                                passed: bool = True) -> Dict[str, Any]:
        return {
            "success": True,
            "message": message,
            "document": document,
            "context": context or {},
            "exit_code": EXIT_OK if passed else EXIT_FAILED,
        }

    def format_error_response(self, error: str, exit_code: int = EXIT_FAILED,
                              details: Optional[Dict] = None) -> Dict[str, Any]:
        response = {
            "success": False,
            "error": error,
            "exit_code": exit_code,
        }
        if details:
            response["details"] = details
        return response

    def log_execution(self, result: Dict[str, Any]):
        if result.get("success"):
            self.logger.info(f"Command {self.name} finished: {result.get('message')}")
        else:
            self.logger.error(f"Command {self.name} failed: {result.get('error')}")

    def get_status(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "config": self.config.model_dump(),
        }
