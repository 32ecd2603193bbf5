"""Run manifest: what was run, with which configuration, and what it wrote"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

import yaml

from .. import __version__

MANIFEST_NAME = "manifest.yaml"


@dataclass
class RunManifest:
    """Resolved config echo, seed, artifact paths, tool version and wall-clock duration"""

    command: str
    seed: int
    config: Dict[str, Any]
    artifacts: List[str] = field(default_factory=list)
    duration_seconds: float = 0.0
    tool_version: str = __version__

    def add_artifact(self, path) -> None:
        self.artifacts.append(Path(path).as_posix())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tool_version": self.tool_version,
            "command": self.command,
            "seed": self.seed,
            "duration_seconds": round(self.duration_seconds, 3),
            "artifacts": list(self.artifacts),
            "config": dict(self.config),
        }


def write_manifest(manifest: RunManifest, output_dir) -> Path:
    """Write manifest.yaml into the output directory; `parse_config` can read it back"""
    path = Path(output_dir) / MANIFEST_NAME
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        yaml.safe_dump(manifest.to_dict(), f, sort_keys=False, default_flow_style=False)
    return path
