from typing import Any, Dict

from ..models import RunConfig
from ..series import AuxFamily, build_aux, build_laurent_table, closed_form_identities, xi_kernel
from .base_command import BaseCommand

_KEYS = {
    AuxFamily.THETA_MINUS: "theta_minus",
    AuxFamily.THETA_PLUS: "theta_plus",
    AuxFamily.LAMBDA_MINUS: "lambda_minus",
    AuxFamily.LAMBDA_PLUS: "lambda_plus",
}


class AuxCommand(BaseCommand):
    def __init__(self, config: RunConfig):
        super().__init__("aux", config)

    def process_task(self) -> Dict[str, Any]:
        max_j = self.config.max_j
        if max_j < 1:
            raise ValueError("auxiliary polynomials start at j = 1; use --max-j >= 1")
        aux = build_aux(build_laurent_table(max_j))
        js = range(1, max_j + 1)

        document = {"max_j": max_j}
        lines = []
        for family, key in _KEYS.items():
            document[key] = {str(j): aux.poly(family, j).to_json() for j in js}
            lines.extend(f"{family.value}_{j} = {aux.poly(family, j)}" for j in js)
        kernels = {j: xi_kernel(aux, j) for j in js}
        document["xi_kernel"] = {str(j): [str(x) for x in v] for j, v in kernels.items()}
        lines.extend(f"v_{j} = ({', '.join(str(x) for x in v)})" for j, v in kernels.items())

        identities = {j: closed_form_identities(aux, j) for j in range(2, max_j + 2)}
        document["closed_forms"] = {str(j): all(r.values()) for j, r in identities.items()}
        passed = all(document["closed_forms"].values())
        lines.extend(
            f"coefficient identities j={j}: {'ok' if ok else 'FAILED'}"
            for j, ok in document["closed_forms"].items()
        )
        return self.format_success_response(
            document,
            message=f"auxiliary polynomials up to j={max_j}",
            context={"lines": lines},
            passed=passed,
        )
