from typing import Any, Dict

from ..models import RunConfig
from ..relations import assemble_for
from .base_command import BaseCommand


class MatrixCommand(BaseCommand):
    """matrix dump: block form of the relation matrix, optionally with the scalar expansion."""

    def __init__(self, config: RunConfig):
        super().__init__("matrix", config)

    def process_task(self) -> Dict[str, Any]:
        matrix = assemble_for(self.config.m)
        document = matrix.to_json(scalar=self.config.scalar)
        return self.format_success_response(
            document,
            message=f"{matrix.n_block_rows}x{matrix.n_cols} relation matrix for m={matrix.m}",
        )
