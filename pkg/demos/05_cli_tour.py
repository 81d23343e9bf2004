"""Driving the command line: JSON documents in, reports and SVG out.

Documents are {"n": ..., "entries": [["0", "1/2"], ...]} with exact
rational strings.  Exit codes: 0 member/success, 1 non-member, 2 usage or
parse error.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

DOC_MEMBER = '{"n": 3, "entries": [["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]]}'
DOC_NON = '{"n": 2, "entries": [["0", "-1"], ["-1", "0"]]}'


def cli(*args, stdin=None):
    result = subprocess.run(
        [sys.executable, "-m", "troppsd", *args],
        input=stdin,
        capture_output=True,
        text=True,
    )
    print(f"$ troppsd {' '.join(args)}   -> exit {result.returncode}")
    print(result.stdout, end="")
    if result.stderr:
        print("stderr:", result.stderr, end="")
    print()
    return result


with tempfile.TemporaryDirectory() as tmp:
    member = Path(tmp) / "member.json"
    member.write_text(DOC_MEMBER)

    cli("check", str(member))
    cli("check", "-", stdin=DOC_NON)
    cli("check", "-", "--method", "subdivision", stdin=DOC_NON)
    cli("witness", str(member), "--signs", "+-+", "--specialize", "1/1000")
    cli("decompose", str(member))
    cli("rank", str(member))
    cli("--json", "factor", str(member))
    cli("--seed", "7", "random", "--n", "3", "--member", "--count", "2")

    out = Path(tmp) / "subdivision.svg"
    # svg only draws the planar case, so an n = 2 document exits with code 2
    cli("svg", "-", "--out", str(out), stdin=DOC_NON)
    cli("svg", str(member), "--out", str(out))
    print("svg bytes written:", out.stat().st_size)
