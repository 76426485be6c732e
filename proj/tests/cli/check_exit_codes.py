"""Exit codes and key outputs of the essv binary."""
import subprocess
import sys
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"


def run(essv, *args):
    return subprocess.run([essv, *args], capture_output=True, text=True)


def main() -> int:
    essv = sys.argv[1]
    bsbs = str(DATA / "lang_bSbS.json")
    cases = [
        (["join-li", "J", bsbs], 0, None),
        (["join-li", "G", bsbs], 1, None),
        (["join-li", "J1", "anything.json"], 2, "criterion (A) fails for J1"),
        (["uofe", "(a b)^w a = (a b)^w"], 0, "x^w y (a b)^w a z t^w = x^w y (a b)^w z t^w"),
        (["uofe", "x ="], 2, None),
        (["check-identity", "x^w = 1", str(DATA / "monoid_z2.json")], 0, None),
        (["check-identity", "x^w x = x^w", str(DATA / "monoid_z2.json")], 1, None),
        (["synmon", str(DATA / "missing.json")], 2, None),
        (["synmon", str(DATA / "broken.json")], 2, None),
        (["demo", "j1"], 0, None),
        (["no-such-verb"], 2, None),
    ]
    failures = 0
    for args, code, needle in cases:
        for _ in range(2):
            r = run(essv, *args)
            text = r.stdout + r.stderr
            ok = r.returncode == code and (needle is None or needle in text)
            if not ok:
                print(f"FAIL {' '.join(args)}: exit {r.returncode}, expected {code}")
                failures += 1
    print(f"{2 * len(cases) - failures}/{2 * len(cases)} invocations as expected")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
