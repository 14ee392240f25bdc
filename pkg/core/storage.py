"""
Local storage for verification reports and export to markdown/ZIP
"""

import json
import os
from datetime import datetime
from typing import List, Optional
from zipfile import ZipFile

from .config import get_settings
from .models import VerdictReport


class LocalStorage:
    """Manage local storage of verdict reports and exports"""

    def __init__(self, storage_dir: Optional[str] = None):
        self.storage_dir = storage_dir or get_settings().data_dir
        self._ensure_directories()

    def _ensure_directories(self):
        """Create storage directories if they don't exist"""
        dirs = [
            self.storage_dir,
            os.path.join(self.storage_dir, "reports"),
            os.path.join(self.storage_dir, "exports"),
        ]

        for dir_path in dirs:
            os.makedirs(dir_path, exist_ok=True)

    def save_report(self, report: VerdictReport) -> str:
        """Save a verdict report as JSON"""
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
        filename = f"{report.theorem.value}_n{report.bound}_{timestamp}.json"
        filepath = os.path.join(self.storage_dir, "reports", filename)

        with open(filepath, "w", encoding="utf-8") as f:
            f.write(report.to_json())

        return filepath

    def list_reports(self) -> List[str]:
        """List saved reports, oldest first"""
        report_dir = os.path.join(self.storage_dir, "reports")
        return sorted(f for f in os.listdir(report_dir) if f.endswith(".json"))

    def load_report(self, filename: str) -> VerdictReport:
        """Load a verdict report from JSON"""
        filepath = os.path.join(self.storage_dir, "reports", filename)
        with open(filepath, "r", encoding="utf-8") as f:
            data = json.load(f)
        return VerdictReport(**data)

    def export_to_markdown(self, report: VerdictReport) -> str:
        """Export a verdict report as markdown"""
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
        filename = f"{report.theorem.value}_n{report.bound}_{timestamp}.md"
        filepath = os.path.join(self.storage_dir, "exports", filename)

        verdict = "PASSED" if report.passed else f"{len(report.counterexamples)} counterexample(s)"
        tallies = "\n".join(f"- **{k}:** {v}" for k, v in report.tallies.items()) or "- none"
        rows = "\n".join(
            f"| `{c.input}` | {c.detail} |" for c in report.counterexamples
        ) or "| - | - |"

        markdown = f"""# Verification Report: {report.theorem.value}

**Bound:** n = {report.bound}
**Checked:** {report.checked}
**Verdict:** {verdict}
**Elapsed:** {report.elapsed_ms} ms on {report.jobs} worker(s)

---

## Tallies

{tallies}

---

## Counterexamples

| Input | Detail |
|-------|--------|
{rows}

---

*Generated by ShiftLab*
"""

        with open(filepath, "w", encoding="utf-8") as f:
            f.write(markdown)

        return filepath

    def create_export_zip(self, name: str = "shiftlab_export") -> str:
        """Create ZIP archive of all reports and exports"""
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        zip_filename = f"{name}_{timestamp}.zip"
        zip_filepath = os.path.join(self.storage_dir, "exports", zip_filename)

        with ZipFile(zip_filepath, "w") as zipf:
            for root, dirs, files in os.walk(self.storage_dir):
                for file in files:
                    if file.endswith((".json", ".md")):
                        file_path = os.path.join(root, file)
                        arcname = os.path.relpath(file_path, self.storage_dir)
                        zipf.write(file_path, arcname)

        return zip_filepath
