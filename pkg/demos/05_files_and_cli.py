#!/usr/bin/env python
# coding: utf-8

# Instance files and reports. The command line runs the same code:
#   geomcut gen --mode disk --n 500 --seed 3 --out inst.txt
#   geomcut solve --input inst.txt --output report.json --check
#   geomcut verify --input inst.txt --result report.json

import tempfile
from pathlib import Path

from geomcut import GraphClass, random_instance
from geomcut.cli import main
from geomcut.fileformat import dumps_instance, loads_instance, loads_report, write_instance


inst = random_instance(GraphClass.UNIT_SQUARE, 6, seed=3)
print(dumps_instance(inst))
print(loads_instance(dumps_instance(inst)) == inst)


tmp = Path(tempfile.mkdtemp())
write_instance(tmp / "inst.txt", random_instance(GraphClass.DISK, 500, seed=3))
rc = main(["solve", "--input", str(tmp / "inst.txt"), "--output", str(tmp / "report.json"), "--check"])
print("solve exit code", rc)
report = loads_report((tmp / "report.json").read_text())
print(report["value"], report["phases"], report["lambda_t"])


print(main(["verify", "--input", str(tmp / "inst.txt"), "--result", str(tmp / "report.json")]))


print(main(["bench", "--mode", "unit-disk", "--sizes", "1024,2048,4096", "--seeds", "1,2"]))
