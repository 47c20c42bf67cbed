import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run_script(*args):
    return subprocess.run([sys.executable, *map(str, args)], capture_output=True, text=True, check=False)


def test_run_sweeps_writes_reports(tmp_path):
    proc = run_script(SCRIPTS / "run_sweeps.py", "--out", tmp_path, "--only", "families", "critical-n5")
    assert proc.returncode == 0, proc.stderr
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["families"]["ok"] and summary["critical-n5"]["checked"] == 177
    assert json.loads((tmp_path / "critical-n5.json").read_text())["critical"] == 177


def test_census_csv(tmp_path):
    out = tmp_path / "census.csv"
    proc = run_script(SCRIPTS / "census.py", "--max-hypergraph-n", "5", "--max-tournament-n", "5", "--csv", out)
    assert proc.returncode == 0, proc.stderr
    rows = out.read_text().splitlines()
    assert rows[0].startswith("kind,n,total")
    assert "3-hypergraph,5,1024,873,177,208,5,12,165" in rows
