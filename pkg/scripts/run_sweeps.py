"""Run every verification suite and write one JSON report per suite.

    python3 scripts/run_sweeps.py --out results/

Exits 1 if any suite reports a failure. Known disagreements of the
construction criteria are reported, not hidden.
"""

import argparse
import json
import logging
import time
from pathlib import Path

from crithyper.enumeration import (verify_families, verify_realizable_critical, verify_schmerl_trotter,
                                   verify_theorem1, verify_theorem2, verify_theorem3_removal)

SUITES = {
    "families": lambda: verify_families((5, 7, 9)),
    "critical-n5": lambda: verify_theorem1(5),
    "critical-n6": lambda: verify_theorem1(6),
    "realizable-critical-n5": lambda: verify_realizable_critical(5),
    "removal-n4": lambda: verify_theorem3_removal(4),
    "removal-n5": lambda: verify_theorem3_removal(5),
    "construction-criteria": lambda: verify_theorem2(9),
    "critical-tournaments-n5": lambda: verify_schmerl_trotter(5),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--only", nargs="*", choices=sorted(SUITES))
    args = ap.parse_args()
    logging.basicConfig(level=logging.CRITICAL)

    args.out.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name in args.only or SUITES:
        start = time.perf_counter()
        rep = SUITES[name]()
        out = rep.to_json()
        out["seconds"] = round(time.perf_counter() - start, 3)
        (args.out / f"{name}.json").write_text(json.dumps(out, indent=2) + "\n")
        summary[name] = {"ok": rep.ok, "checked": rep.checked, "failures": len(rep.failures),
                         "seconds": out["seconds"]}
        print(f"{'ok  ' if rep.ok else 'FAIL'} {name:26s} checked={rep.checked:<8d} "
              f"failures={len(rep.failures):<3d} {out['seconds']:.2f}s")
    (args.out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    raise SystemExit(0 if all(s["ok"] for s in summary.values()) else 1)


if __name__ == "__main__":
    main()
