"""Run the CLI over the corpus: schema validation or byte-level determinism."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

RUNS = [
    ("check-d2", "resolution_a3"),
    ("check-d2", "pi2_point"),
    ("check-d2 --via ginzburg3", "ginzburg_triangle"),
    ("ginzburg3", "ginzburg_triangle"),
    ("rel-ginzburg3", "ice_triangle"),
    ("cy-complete --n 2", "preproj_a3"),
    ("cy-complete --n 3", "a2"),
    ("rel-preproj2", "relative_a3"),
    ("rel-preproj2", "framed_d4"),
    ("rel-preproj2", "a4_bifrozen"),
    ("relation-complete", "a3_relation"),
    ("weights --via ginzburg3", "ginzburg_triangle"),
    ("weights", "resolution_a3"),
    ("weights", "pi2_point"),
    ("cohomology --max-weight 4 --min-degree -2 --via rel-preproj2", "relative_a3"),
    ("cohomology --max-weight 5 --min-degree -3", "resolution_a3"),
    ("stalk --via rel-preproj2", "relative_a3"),
    ("stalk --via rel-ginzburg3", "ice_triangle"),
    ("stalk --via cy-complete --n 2", "a2"),
    ("stalk --max-weight 6 --via cy-complete --n 2", "kronecker"),
    ("h0 --via ginzburg3", "ginzburg_triangle"),
    ("h0", "resolution_a3"),
    ("dims --max-len 10", "auslander_kx3"),
    ("dims --max-len 8 --via ginzburg3", "ginzburg_triangle"),
    ("dims --max-len 6", "kronecker"),
    ("hochschild --max-n 2", "dual_numbers"),
    ("hochschild --max-n 3 --field p2", "dual_numbers"),
    ("hochschild --max-n 2", "a3_relation"),
    ("cyclic --max-n 2", "dual_numbers"),
    ("cyclic --max-n 2", "point"),
    ("negative-cyclic --max-n 2 --cols 2", "dual_numbers"),
    ("rel-cyclic --max-n 3", "relative_a3"),
    ("rel-cyclic --max-n 2", "a4_bifrozen"),
    # failures
    ("weights", "point"),
    ("hochschild --basis-cap 4", "kronecker"),
    ("stalk --via cy-complete --n 2 --basis-cap 3", "kronecker"),
    ("cyclic --max-n 2", "pi2_point"),
]


def commands(cyq, corpus, extra):
    for args, name in RUNS:
        yield [cyq] + args.split() + [str(corpus / f"{name}.quiver")]
    yield [cyq, "self-test", "--trials", "5", "--seed", "3"]
    yield [cyq, "dims", "--max-len", "12", "--via", "rel-preproj2", str(corpus / "relative_a3.quiver"),
           "--against", str(corpus / "auslander_kx3.quiver")]
    for path in extra:
        yield [cyq, "ginzburg3", str(path)]


def main():
    mode, cyq, corpus, schema_path = sys.argv[1], sys.argv[2], pathlib.Path(sys.argv[3]), sys.argv[4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        bad = pathlib.Path(tmp) / "bad.quiver"
        bad.write_text("vertex 1\narrow x : 1 -> 2\nrelation x*y\n")
        empty = pathlib.Path(tmp) / "empty.quiver"
        empty.write_text("")
        for cmd in commands(cyq, corpus, [bad, empty]):
            first = subprocess.run(cmd, capture_output=True)
            label = " ".join(pathlib.Path(c).name if "/" in c else c for c in cmd[1:])
            if first.returncode not in (0, 1, 2, 3):
                print(f"FAIL {label}: exit {first.returncode}")
                failures += 1
                continue
            if mode == "schema":
                try:
                    doc = json.loads(first.stdout)
                except json.JSONDecodeError as e:
                    print(f"FAIL {label}: invalid JSON ({e})")
                    failures += 1
                    continue
                errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
                if errors:
                    print(f"FAIL {label}: {errors[0].message}")
                    failures += 1
                else:
                    print(f"ok   {label} (exit {first.returncode})")
            else:
                second = subprocess.run(cmd, capture_output=True)
                if first.stdout != second.stdout or first.returncode != second.returncode:
                    print(f"FAIL {label}: outputs differ")
                    failures += 1
                else:
                    print(f"ok   {label}")
    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
