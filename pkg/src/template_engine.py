"""Template engine for SVG plots and text reports"""

from typing import Dict, Any, Optional, List
from pathlib import Path
from jinja2 import Environment, FileSystemLoader, StrictUndefined, TemplateNotFound, select_autoescape


class TemplateEngine:
    """Template engine for rendering report templates"""

    def __init__(self, template_dir: Optional[str] = None):
        """
        Initialize template engine

        Args:
            template_dir: Directory containing templates (default: ./templates in the project root)
        """
        if template_dir:
            self.template_dir = Path(template_dir)
        else:
            project_root = Path(__file__).parent.parent
            self.template_dir = project_root / "templates"

        if not self.template_dir.is_dir():
            raise FileNotFoundError(f"Template directory not found: {self.template_dir}")

        self.env = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            autoescape=select_autoescape(['html', 'xml', 'svg']),
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

        self.env.filters['fixed'] = self._fixed
        self.env.filters['display_number'] = self._display_number

    def _fixed(self, value: float, digits: int = 2) -> str:
        """Fixed-point text, independent of locale"""
        return f"{float(value):.{digits}f}"

    def _display_number(self, value: float) -> str:
        """Integers without decimals, everything else with up to 4 significant digits"""
        value = float(value)
        if value.is_integer():
            return str(int(value))
        return f"{value:.4g}"

    def render(self, template_name: str, context: Dict[str, Any]) -> str:
        """
        Render a template with the given context

        Args:
            template_name: Name of the template file
            context: Dictionary of variables to pass to template

        Returns:
            Rendered template as string
        """
        try:
            template = self.env.get_template(template_name)
        except TemplateNotFound:
            raise FileNotFoundError(
                f"Template '{template_name}' not found in {self.template_dir}. "
                f"Available: {', '.join(self.get_available_templates())}"
            )
        return template.render(**context)

    def render_to_file(self, template_name: str, context: Dict[str, Any], output_path) -> Path:
        """Render a template and write it with LF line endings"""
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w", encoding="utf-8", newline="") as f:
            f.write(self.render(template_name, context))
        return output_path

    def get_available_templates(self) -> List[str]:
        """Get list of available template files"""
        return sorted(p.name for p in self.template_dir.iterdir() if p.is_file() and not p.name.startswith("README"))
