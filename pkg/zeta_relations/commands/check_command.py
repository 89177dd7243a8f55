from typing import Any, Dict

from mpmath import nstr

from ..models import CheckName, RunConfig
from ..numeric import check_closed_forms_numeric, check_fib8, check_lemma54_points, make_context
from .base_command import BaseCommand


class CheckCommand(BaseCommand):
    """check lemma54 | fib8 | closedforms"""

    def __init__(self, config: RunConfig):
        super().__init__("check", config)

    def process_task(self) -> Dict[str, Any]:
        if self.config.check is None:
            raise ValueError("check needs one of: lemma54, fib8, closedforms")
        name = CheckName(self.config.check)
        if name == CheckName.LEMMA54:
            return self._lemma54()
        elif name == CheckName.FIB8:
            return self._fib8()
        return self._closed_forms()

    def _lemma54(self) -> Dict[str, Any]:
        points, tol = check_lemma54_points(
            self.config.points, self.config.seed, self.config.precision,
            self.config.guard_digits, self.config.pole_threshold,
        )
        passed = all(p.passed for p in points)
        document = {
            "check": "lemma54",
            "precision": self.config.precision,
            "tolerance": nstr(tol, 5),
            "passed": passed,
            "points": [
                {"z": repr(p.z), "k2": repr(p.k2), "residual": nstr(p.residual, 5), "passed": p.passed}
                for p in points
            ],
        }
        return self.format_success_response(document, message=f"{len(points)} points checked", passed=passed)

    def _fib8(self) -> Dict[str, Any]:
        residual = check_fib8(self.config.precision, self.config.guard_digits)
        ctx = make_context(self.config.precision, self.config.guard_digits)
        tol = ctx.mpf(10) ** (self.config.guard_digits - self.config.precision)
        passed = residual < tol
        document = {
            "check": "fib8",
            "precision": self.config.precision,
            "tolerance": nstr(tol, 5),
            "residual": nstr(residual, 5),
            "passed": passed,
        }
        return self.format_success_response(document, message="quartic Fibonacci identity", passed=passed)

    def _closed_forms(self) -> Dict[str, Any]:
        checks, tol = check_closed_forms_numeric(
            self.config.max_s, self.config.sequence.selector, self.config.precision,
            self.config.guard_digits, progress=self.config.progress,
        )
        passed = all(c.passed for c in checks)
        document = {
            "check": "closedforms",
            "precision": self.config.precision,
            "sequence": self.config.sequence.selector,
            "tolerance": nstr(tol, 5),
            "passed": passed,
            "series": [
                {"s": c.s, "kind": c.kind.value, "value": nstr(c.direct, 20),
                 "difference": nstr(c.difference, 5), "passed": c.passed}
                for c in checks
            ],
        }
        return self.format_success_response(document, message=f"{len(checks)} closed forms checked", passed=passed)
