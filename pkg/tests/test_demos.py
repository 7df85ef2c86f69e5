import subprocess
import sys
from pathlib import Path

import pytest

from mvgraph.casestudy import case_study
from mvgraph.frame_io import dump_frame, load_frame

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("script", sorted(DEMOS.glob("*.py")), ids=lambda p: p.name)
def test_demo_runs(script):
    proc = subprocess.run([sys.executable, str(script)], capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()


def test_bundled_frame_file_matches_embedded_case_study():
    assert dump_frame(load_frame(DEMOS / "casestudy.json")) == dump_frame(case_study())
