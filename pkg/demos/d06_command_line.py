"""
Driving the command line tool from Python
=========================================

The ``dpcodes`` command wraps construction, verification, scans and operator
certificates.  ``main`` takes an argument list and returns the exit code.
"""

import tempfile
from pathlib import Path

from dpcodes.cli import main

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "d3.code"
    main(["construct", "d3", "--m", "3", "--op", "matrix3", "--out", str(path)])
    print("".join(path.read_text().splitlines(keepends=True)[:12]))
    status = main(["verify", "--file", str(path), "--suite", "all"])
    print("exit status", status)

main(["cert", "--m", "5", "--op", "gold:2"])
print("exit status", main(["cert", "--m", "4", "--op", "inv"]))
