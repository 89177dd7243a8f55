import json
import os
from typing import Any, Dict, Optional

from jinja2 import Template

from ..utils.logger import get_logger


BASIS_TEXT = """V_{{ doc.m }}: dim {{ doc.dim }}, zero pattern {{ 'ok' if doc.zero_pattern_ok else 'violated' }}
{% for relation in ctx.relations %}{{ relation }}
{% endfor %}"""

BASIS_LATEX = """% V_{{ doc.m }}, dimension {{ doc.dim }}
\\begin{align*}
{% for relation in ctx.relations_latex %}  {{ relation }}{% if not loop.last %} \\\\{% endif %}
{% endfor %}\\end{align*}
"""

MATRIX_TEXT = """relation matrix m={{ doc.m }} ({{ doc.rows }}x{{ doc.cols }})
columns: {{ doc.column_labels | join(' ') }}
{% for row in doc.blocks %}[{{ loop.index }}] {% for entry in row %}{{ entry.term if entry is mapping else entry }}{% if not loop.last %} | {% endif %}{% endfor %}
{% endfor %}{% if doc.scalar %}scalar expansion ({{ doc.scalar.rows | length }} rows)
{% for row in doc.scalar.rows %}{{ doc.scalar.row_labels[loop.index0] }}: {{ row | join(' ') }}
{% endfor %}{% endif %}"""

MATRIX_LATEX = """\\begin{pmatrix}
{% for row in doc.blocks %}  {% for entry in row %}{{ entry.term if entry is mapping else entry }}{% if not loop.last %} & {% endif %}{% endfor %}{% if not loop.last %} \\\\{% endif %}
{% endfor %}\\end{pmatrix}
"""

LINES_TEXT = """{% for line in ctx.lines %}{{ line }}
{% endfor %}"""

LINES_LATEX = """\\begin{align*}
{% for line in ctx.lines %}  {{ line | replace('=', '&=') }}{% if not loop.last %} \\\\{% endif %}
{% endfor %}\\end{align*}
"""

VERIFY_TEXT = """verify m={{ doc.m }} sequence={{ doc.sequence }} precision={{ doc.precision }} guard={{ doc.guard_digits }} tolerance={{ doc.tolerance }}
{% for r in doc.relations %}[{{ 'PASS' if r.passed else 'FAIL' }}] {{ r.residual }}  {{ r.relation }}
{% endfor %}{{ 'all relations pass' if doc.passed else 'verification FAILED' }}
"""

VERIFY_LATEX = """\\begin{tabular}{rl}
{% for r in doc.relations %}  ${{ r.residual }}$ & {{ 'pass' if r.passed else 'fail' }} \\\\
{% endfor %}\\end{tabular}
"""

CHECK_TEXT = """check {{ doc.check }} precision={{ doc.precision }} tolerance={{ doc.tolerance }}
{% if doc.check == 'fib8' %}residual {{ doc.residual }}
{% elif doc.check == 'lemma54' %}{% for p in doc.points %}[{{ 'PASS' if p.passed else 'FAIL' }}] z={{ p.z }} k2={{ p.k2 }} residual {{ p.residual }}
{% endfor %}{% else %}{% for c in doc.series %}[{{ 'PASS' if c.passed else 'FAIL' }}] {{ c.kind }}_{{ 2 * c.s }} = {{ c.value }} (difference {{ c.difference }})
{% endfor %}{% endif %}{{ 'passed' if doc.passed else 'FAILED' }}
"""

CHECK_LATEX = """% check {{ doc.check }} at precision {{ doc.precision }}: {{ 'passed' if doc.passed else 'failed' }}
"""

TEMPLATES = {
    ("basis", "text"): BASIS_TEXT,
    ("basis", "latex"): BASIS_LATEX,
    ("matrix", "text"): MATRIX_TEXT,
    ("matrix", "latex"): MATRIX_LATEX,
    ("series", "text"): LINES_TEXT,
    ("series", "latex"): LINES_LATEX,
    ("aux", "text"): LINES_TEXT,
    ("aux", "latex"): LINES_LATEX,
    ("verify", "text"): VERIFY_TEXT,
    ("verify", "latex"): VERIFY_LATEX,
    ("check", "text"): CHECK_TEXT,
    ("check", "latex"): CHECK_LATEX,
}


class ReportGenerator:
    def __init__(self):
        self.logger = get_logger("tools.report_generator")

    def render(self, command: str, document: Any, fmt: str = "text",
               context: Optional[Dict[str, Any]] = None) -> str:
        if fmt == "json":
            return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

        source = TEMPLATES.get((command, fmt))
        if source is None:
            raise ValueError(f"No {fmt} template for command {command}")

        content = Template(source).render(doc=document, ctx=context or {})
        if not content.endswith("\n"):
            content += "\n"
        return content

    def write(self, content: str, path: str) -> str:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)

        with open(path, 'w', encoding='utf-8') as f:
            f.write(content)

        self.logger.info(f"Wrote {len(content)} characters to {path}")
        return path
