from typing import Any, Dict

from ..models import OutputFormat, RunConfig
from ..relations import format_relation, relation_space
from .base_command import BaseCommand


class BasisCommand(BaseCommand):
    def __init__(self, config: RunConfig):
        super().__init__("basis", config)

    def process_task(self) -> Dict[str, Any]:
        basis = relation_space(self.config.m, self.config.cross_check_max_m)
        style = self.config.style
        context = {
            "relations": [format_relation(v, style, OutputFormat.TEXT) for v in basis.vectors],
            "relations_latex": [format_relation(v, style, OutputFormat.LATEX) for v in basis.vectors],
            "dual_path_checked": basis.dual_path_checked,
        }
        return self.format_success_response(
            basis.to_json(),
            message=f"dim V_{basis.m} = {basis.dim}",
            context=context,
        )
