#!/usr/bin/env python3
"""Validate corpus inputs, stored reports and a few live CLI outputs against schemas/."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "schemas"
CORPUS = ROOT / "tests" / "corpus"


def load_registry():
    registry = Registry()
    docs = {}
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        Draft202012Validator.check_schema(doc)
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
        docs[path.name] = doc
    return registry, docs


def main():
    chowq = sys.argv[1] if len(sys.argv) > 1 else None
    registry, docs = load_registry()

    def validator(name):
        return Draft202012Validator(docs[name], registry=registry)

    failures = 0
    checked = 0

    def check(schema_name, instance, label):
        nonlocal failures, checked
        checked += 1
        errors = sorted(validator(schema_name).iter_errors(instance), key=lambda e: list(e.path))
        for e in errors[:3]:
            print(f"{label}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)

    for path in sorted((CORPUS / "inputs").glob("*.json")):
        doc = json.loads(path.read_text())
        check(f"{doc['command']}.input.schema.json", doc, path.name)
        out = json.loads((CORPUS / "expected" / path.name).read_text())
        check(f"{out['command']}.output.schema.json", out, "expected/" + path.name)

    if chowq:
        def run(*args):
            res = subprocess.run([chowq, *args], capture_output=True, text=True)
            return json.loads(res.stdout)

        with tempfile.TemporaryDirectory() as tmp:
            qf_in = {
                "schema_version": 1,
                "command": "quotient-fan",
                "fan": {"dim": 3, "rays": [["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]],
                        "lineality": [], "cones": [[0, 1, 2]]},
                "p": {"rows": 2, "cols": 3, "data": [["1", "0", "-1"], ["0", "1", "-1"]]},
            }
            path = Path(tmp) / "qf.json"
            path.write_text(json.dumps(qf_in))
            check("quotient-fan.input.schema.json", qf_in, "quotient-fan input")
            check("quotient-fan.output.schema.json", run("quotient-fan", "-i", str(path)), "quotient-fan output")
        check("coxring.output.schema.json", run("coxring", "-w", "-3,3,-3,3,-2,2,-1,1"), "coxring failure")
        check("tropres.output.schema.json", run("tropres", "-w", "1,2,3,4"), "tropres failure")
        check("corpus.output.schema.json", run("corpus", "--count", "5"), "corpus output")

    print(f"{checked - failures} of {checked} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
