"""Run verification suites over the bounded instance family and summarize.

Usage: python scripts/run_sweep.py [--max-cells 8] [--out sweep.json] [suite ...]
"""
import argparse
import json
import time

from genkostka.verify import ALL_SUITES, Bounds, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("suites", nargs="*", default=list(ALL_SUITES))
    ap.add_argument("--max-cells", type=int, default=Bounds.max_cells)
    ap.add_argument("--max-rect", type=int, default=Bounds.max_rect)
    ap.add_argument("--max-seq", type=int, default=Bounds.max_seq)
    ap.add_argument("--out", help="write failing reports and the summary as JSON")
    args = ap.parse_args()
    b = Bounds(max_cells=args.max_cells, max_rect=args.max_rect, max_seq=args.max_seq)
    summary, witnesses = {}, []
    for name in args.suites:
        t0 = time.perf_counter()
        reps = run_suite(name, b)
        bad = [r.to_json() for r in reps if not r.ok]
        skipped = sum(c.status == "skipped-cap" for r in reps for c in r.checks)
        sec = time.perf_counter() - t0
        summary[name] = {"instances": len(reps), "failures": len(bad), "skipped": skipped, "seconds": round(sec, 2)}
        witnesses += bad
        print(f"{name:14s} {len(reps):6d} instances  {len(bad):4d} failures  {skipped:4d} skipped  {sec:7.1f}s", flush=True)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"bounds": vars(b), "summary": summary, "witnesses": witnesses}, fh, indent=1, sort_keys=True)
    return 1 if witnesses else 0


if __name__ == "__main__":
    raise SystemExit(main())
