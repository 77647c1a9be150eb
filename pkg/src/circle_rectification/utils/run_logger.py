"""
Run logging utility for saving a record of command-line runs.

This module provides functionality to save each run's command, seed,
tolerances, verdict and report summary as a markdown file for review.
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence


class RunLogger:
    """
    Utility class for logging command-line runs.

    Saves run logs as markdown files with the command, the arguments, the
    seed and tolerances used, the verdict and a JSON summary of the report.
    """

    def __init__(self, log_directory: str = "run_logs"):
        """
        Initialize the run logger.

        Args:
            log_directory: Directory to save run logs (default: "run_logs")
        """
        self.log_directory = Path(log_directory)
        self._ensure_log_directory()

    def _ensure_log_directory(self):
        """Create the log directory if it doesn't exist."""
        self.log_directory.mkdir(parents=True, exist_ok=True)

    def log_run(self, command: str, argv: Sequence[str], seed: int, tolerances: Dict[str, float],
                verdict: str, summary: Optional[Dict[str, Any]] = None) -> str:
        """
        Log a run to a markdown file.

        Args:
            command: Subcommand name, e.g. "bundle rectify"
            argv: Full argument vector of the run
            seed: Seed of the run
            tolerances: Tolerances in effect
            verdict: "pass", "fail" or "error"
            summary: Optional report summary

        Returns:
            str: Path to the created log file
        """
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
        filename = f"{command.replace(' ', '_')}_{timestamp}.md"
        filepath = self.log_directory / filename

        log_content = self._format_log_content(command, argv, seed, tolerances, verdict, summary)

        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(log_content)

        return str(filepath)

    def _format_log_content(self, command: str, argv: Sequence[str], seed: int,
                            tolerances: Dict[str, float], verdict: str,
                            summary: Optional[Dict[str, Any]]) -> str:
        display_timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")

        content = f"""# Run Log

## Run Information
- **Timestamp**: {display_timestamp}
- **Command**: {command}
- **Arguments**: `{' '.join(argv)}`
- **Seed**: {seed}
- **Verdict**: {verdict}

## Tolerances
"""
        for name, value in sorted(tolerances.items()):
            content += f"- **{name}**: {value!r}\n"

        if summary:
            content += f"""
## Report Summary
```json
{json.dumps(summary, indent=2, sort_keys=True, default=str)}
```
"""
        content += """
---
*Log generated automatically by circle-rectify*
"""
        return content

    def get_latest_log_path(self) -> Optional[str]:
        """
        Get the path of the most recent run log.

        Returns:
            str: Path to the newest log file, or None if there are none
        """
        logs = self.list_logs()
        return logs[-1] if logs else None

    def list_logs(self) -> List[str]:
        """
        List all run logs, oldest first.

        Returns:
            list: Paths of the log files sorted by modification time
        """
        files = sorted(self.log_directory.glob("*.md"), key=lambda p: (p.stat().st_mtime, p.name))
        return [str(p) for p in files]
