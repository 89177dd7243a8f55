from typing import Any, Dict

from mpmath import nstr

from ..models import RunConfig
from ..numeric import verify_relations
from .base_command import BaseCommand


class VerifyCommand(BaseCommand):
    def __init__(self, config: RunConfig):
        super().__init__("verify", config)

    def process_task(self) -> Dict[str, Any]:
        report = verify_relations(
            self.config.m,
            self.config.sequence.selector,
            precision=self.config.precision,
            guard_digits=self.config.guard_digits,
            cross_check_max_m=self.config.cross_check_max_m,
            progress=self.config.progress,
        )
        document = report.to_json(nstr)
        failed = sum(1 for r in report.residuals if not r.passed)
        return self.format_success_response(
            document,
            message=f"{len(report.residuals) - failed}/{len(report.residuals)} relations within tolerance",
            passed=report.passed,
        )
