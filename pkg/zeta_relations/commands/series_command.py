from typing import Any, Dict

from ..algebra import rat_to_str
from ..models import CoeffFamily, RunConfig
from ..series import build_laurent_table, build_trig_table
from .base_command import BaseCommand


class SeriesCommand(BaseCommand):
    def __init__(self, config: RunConfig):
        super().__init__("series", config)

    def process_task(self) -> Dict[str, Any]:
        family = CoeffFamily(self.config.family)
        max_j = self.config.max_j

        if family in (CoeffFamily.A, CoeffFamily.B):
            table = build_trig_table(max_j)
            values = table.a if family == CoeffFamily.A else table.b
            coefficients = {str(j): rat_to_str(values[j]) for j in range(max_j + 1)}
            lines = [f"{family.value}_{j} = {rat_to_str(values[j])}" for j in range(max_j + 1)]
        else:
            if max_j < 1:
                raise ValueError("c, d, e, f tables start at j = 1; use --max-j >= 1")
            polys = build_laurent_table(max_j).family(family.value)
            coefficients = {str(j): polys[j].to_json() for j in range(1, max_j + 1)}
            lines = [f"{family.value}_{j} = {polys[j]}" for j in range(1, max_j + 1)]

        document = {"family": family.value, "max_j": max_j, "coefficients": coefficients}
        return self.format_success_response(
            document,
            message=f"{family.value}_j up to j={max_j}",
            context={"lines": lines},
        )
