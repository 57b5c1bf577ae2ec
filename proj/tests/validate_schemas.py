#!/usr/bin/env python3
# Copyright 2026 The montyhall Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates every command's JSON output against the shipped schemas."""

import argparse
import json
import pathlib
import re
import subprocess
import sys
import tempfile
import urllib.request

import jsonschema
import referencing

CASES = [
    ("build-matrix", ["build-matrix", "C"]),
    ("build-matrix", ["build-matrix", "c3"]),
    ("build-matrix", ["build-matrix", "gamma"]),
    ("build-matrix", ["build-matrix", "beta:Q*:1/2,1/2,1/2"]),
    ("reduce", ["reduce", "C", "--kind", "weak"]),
    ("reduce", ["reduce", "C", "--kind", "strict"]),
    ("solve", ["solve", "C", "--method", "all"]),
    ("solve", ["solve", "c3", "--method", "all"]),
    ("solve", ["solve", "diag:-1,-1,-1", "--method", "diagonal"]),
    ("enumerate-minimax", ["enumerate-minimax", "C", "--side", "contestant"]),
    ("enumerate-minimax", ["enumerate-minimax", "C", "--side", "host"]),
    ("nash", ["nash", "gamma", "--mode", "all"]),
    ("nash", ["nash", "delta", "--mode", "mixed"]),
    ("nash", ["nash", "alpha", "--mode", "pure"]),
    ("best-response", ["best-response", "--pi", "1/2,1/3,1/6", "--lambda", "1/2,1/2,1/2"]),
    ("best-response", ["best-response", "--host", "Q*:1,1,1"]),
    ("simulate", ["simulate", "--trials", "20000", "--seed", "3"]),
    ("paper-report", ["paper-report"]),
]

SERVICE_CASES = [
    ("solve", "/solve", {"source": "C"}),
    ("nash", "/nash", {"source": "gamma", "mode": "pure"}),
    ("best-response", "/best-response", {"host": "Q*:1/2,1/2,1/2"}),
]


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        contents = json.loads(path.read_text())
        resources.append((contents["$id"], referencing.Resource.from_contents(contents)))
    return referencing.Registry().with_resources(resources)


def validator_for(schema_dir, registry, name):
    schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
    cls = jsonschema.validators.validator_for(schema)
    cls.check_schema(schema)
    return cls(schema, registry=registry)


def run_cli(cli, args):
    proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True,
                          check=False)
    if proc.returncode != 0:
        raise RuntimeError(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr.strip()}")
    return json.loads(proc.stdout)


def post(port, path, body):
    req = urllib.request.Request(f"http://127.0.0.1:{port}{path}", data=json.dumps(body).encode(),
                                 headers={"Content-Type": "application/json"}, method="POST")
    with urllib.request.urlopen(req, timeout=60) as resp:
        return json.loads(resp.read())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("cli")
    parser.add_argument("schemas", type=pathlib.Path)
    args = parser.parse_args()

    registry = load_registry(args.schemas)
    failures = 0

    def check(name, label, doc):
        nonlocal failures
        errors = sorted(validator_for(args.schemas, registry, name).iter_errors(doc),
                        key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
        else:
            print(f"ok   {label}")

    for name, argv in CASES:
        check(name, " ".join(argv), run_cli(args.cli, argv))

    with tempfile.TemporaryDirectory() as tmp:
        original = run_cli(args.cli, ["build-matrix", "C"])
        path = pathlib.Path(tmp) / "c.json"
        path.write_text(json.dumps(original))
        again = run_cli(args.cli, ["build-matrix", str(path)])
        solved = run_cli(args.cli, ["solve", str(path)])
        if again != original or solved["value"] != "2/3":
            failures += 1
            print("FAIL matrix file round trip")
        else:
            print("ok   matrix file round trip")

    server = subprocess.Popen([args.cli, "serve", "--port", "0"], stderr=subprocess.PIPE, text=True)
    try:
        banner = server.stderr.readline()
        match = re.search(r":(\d+)\s*$", banner)
        if not match:
            raise RuntimeError(f"unexpected serve banner: {banner!r}")
        port = int(match.group(1))
        for name, path, body in SERVICE_CASES:
            check(name, f"POST {path}", post(port, path, body))
    finally:
        server.terminate()
        server.wait(timeout=10)

    print(f"{failures} schema failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
