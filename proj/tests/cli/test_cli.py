"""End-to-end checks of the legcord command line: values, schema, text/JSON agreement, exit codes."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = os.environ.get("LEGCORD_CLI", "build/legcord")
ROOT = os.environ.get("LEGCORD_ROOT", ".")
SCHEMA = json.load(open(os.path.join(ROOT, "schemas", "legcord.schema.json")))


def path(*parts):
    return os.path.join(ROOT, *parts)


def run(*args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=e)


def run_json(*args, env=None):
    p = run(*args, env=env)
    doc = json.loads(p.stdout)
    jsonschema.validate(doc, SCHEMA)
    return p.returncode, doc


def run_text(*args):
    p = run("--format", "text", *args)
    return p.returncode, p.stdout


class GridCommands(unittest.TestCase):
    def test_m9_46_invariants(self):
        rc, doc = run_json("grid", "invariants", path("data", "census", "m9_46.json"))
        self.assertEqual(rc, 0)
        self.assertEqual((doc["tb"], doc["r"]), (-1, 0))

    def test_invariants_text_agrees(self):
        _, doc = run_json("grid", "invariants", path("data", "census", "m13n3158.json"))
        _, text = run_text("grid", "invariants", path("data", "census", "m13n3158.json"))
        fields = dict(line.split() for line in text.strip().splitlines())
        for key in ("tb", "r", "writhe", "components", "size"):
            self.assertEqual(int(fields[key]), doc[key])

    def test_simplify_unlink(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump({"size": 4, "x": [1, 2, 3, 4], "o": [2, 1, 4, 3]}, f)
        rc, doc = run_json("grid", "simplify", f.name, "--budget", "1000", "--seed", "7")
        self.assertEqual(rc, 0)
        self.assertEqual(doc["outcome"], "split-unlink-of-unknots")
        self.assertEqual(doc["seed"], 7)
        self.assertEqual(len(doc["finals"]), 2)

    def test_budget_from_environment(self):
        rc, doc = run_json("grid", "simplify", path("data", "census", "m9_46.json"), env={"LEGCORD_BUDGET": "5"})
        self.assertEqual(rc, 0)
        self.assertEqual(doc["budget"], 5)


class FrontCommands(unittest.TestCase):
    def test_trefoil_invariants(self):
        rc, doc = run_json("front", "invariants", path("data", "fronts", "trefoil_right.front"))
        self.assertEqual(rc, 0)
        self.assertEqual((doc["tb"], doc["r"], doc["components"]), (1, 0, 1))

    def test_delta2_satellite_of_unknot(self):
        rc, doc = run_json("front", "satellite", path("data", "fronts", "unknot.front"), "--pattern", "delta2")
        self.assertEqual(rc, 0)
        self.assertEqual(doc["tb"], -3)
        _, text = run_text("front", "satellite", path("data", "fronts", "unknot.front"), "--pattern", "delta2")
        self.assertEqual(text.strip(), doc["front"])

    def test_pinch_and_certify(self):
        rc, doc = run_json("front", "certify", path("data", "census", "m9_46.json"))
        self.assertEqual(rc, 0)
        cert = doc["certificate"]
        self.assertTrue(cert["replayed"])
        rc, pinched = run_json("front", "pinch", path("data", "census", "m9_46.json"),
                               "--slice", str(cert["slice"]), "--pos", str(cert["pos"]))
        self.assertEqual(rc, 0)
        self.assertEqual(pinched["front"], cert["pinched_front"])
        self.assertEqual(pinched["components"], 2)

    def test_certify_rejects_wrong_tb(self):
        p = run("front", "certify", path("data", "fronts", "trefoil_right.front"))
        self.assertEqual(p.returncode, 2)


class RulingCommands(unittest.TestCase):
    def test_m9_46_polynomial(self):
        rc, text = run_text("rulings", "--d", "1", "--mode", "poly", path("data", "census", "m9_46.json"))
        self.assertEqual(rc, 0)
        self.assertEqual(text.strip(), "2")

    def test_list_and_two_agree(self):
        _, listed = run_json("rulings", "--mode", "list", path("data", "census", "m9_46.json"))
        _, two = run_json("rulings", "--mode", "two", path("data", "census", "m9_46.json"))
        self.assertEqual(listed["count"], 2)
        self.assertTrue(two["exists_two"])
        self.assertEqual(sorted(map(tuple, listed["rulings"])), sorted(map(tuple, two["rulings"])))


class ObstructCommands(unittest.TestCase):
    def test_m9_46(self):
        rc, doc = run_json("obstruct", path("data", "census", "m9_46.json"))
        self.assertEqual(rc, 0)
        self.assertEqual(doc["verdict"], "obstructed")
        self.assertEqual(doc["theorem"], "two-rulings")
        self.assertEqual(len(doc["witness"]["rulings"]), 2)

    def test_m12n768_cable_test(self):
        rc, doc = run_json("obstruct", path("data", "census", "m12n768.json"), "--max-cable", "2",
                           "--assert-slice", "--skip-a2")
        self.assertEqual(rc, 0)
        self.assertEqual(doc["theorem"], "cable-test")
        self.assertEqual(doc["witness"]["polynomial"], "z^12 + 12z^10 + 49z^8 + 78z^6 + 41z^4 + 4z^2 + 1")

    def test_unknot_not_obstructed(self):
        rc, doc = run_json("obstruct", path("data", "fronts", "unknot.front"), "--max-cable", "3", "--assert-slice")
        self.assertEqual(rc, 0)
        self.assertEqual(doc["verdict"], "not-obstructed-by-these-tests")

    def test_filters(self):
        _, doc = run_json("obstruct", path("data", "census", "m9_46.json"), "--filters")
        f = doc["filters"]
        self.assertEqual(f["determinant"], 9)
        self.assertEqual(f["signature"], 0)
        self.assertTrue(f["fox_milnor"])


class SkeinCommands(unittest.TestCase):
    def test_formats_agree(self):
        pd = tempfile.NamedTemporaryFile("w", suffix=".pd", delete=False)
        pd.write("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]\n")
        pd.close()
        values = set()
        for f in (pd.name, path("data", "fronts", "figure_eight.front")):
            rc, doc = run_json("skein", "homfly", f)
            self.assertEqual(rc, 0)
            values.add(doc["polynomial"])
        self.assertEqual(values, {"a^2 - z^2 - 1 + a^-2"})

    def test_kauffman_text(self):
        rc, doc = run_json("skein", "kauffman", path("data", "fronts", "unknot.front"))
        self.assertEqual(doc["polynomial"], "1")
        rc, text = run_text("skein", "kauffman", path("data", "fronts", "unknot.front"))
        self.assertEqual(text.strip(), "1")

    def test_crossing_cap(self):
        p = run("skein", "homfly", path("data", "census", "m14n22150.json"))
        self.assertEqual(p.returncode, 2)


class CensusCommand(unittest.TestCase):
    def test_m12n768_entry(self):
        rc, doc = run_json("census", "verify", "--entry", "m12n768")
        self.assertEqual(rc, 0)
        self.assertEqual(doc["diff_count"], 0)
        (entry,) = doc["entries"]
        self.assertEqual(entry["cable2"], "z^12 + 12z^10 + 49z^8 + 78z^6 + 41z^4 + 4z^2 + 1")
        self.assertEqual(entry["verdict"], "obstructed")

    def test_unknown_entry_is_usage_error(self):
        self.assertEqual(run("census", "verify", "--entry", "nonesuch").returncode, 2)


class Usage(unittest.TestCase):
    def test_unknown_flag(self):
        self.assertEqual(run("rulings", "--bogus", path("data", "fronts", "unknot.front")).returncode, 2)

    def test_missing_subcommand(self):
        self.assertEqual(run().returncode, 2)

    def test_bad_mode(self):
        self.assertEqual(run("rulings", "--mode", "sum", path("data", "fronts", "unknot.front")).returncode, 2)

    def test_missing_file(self):
        self.assertEqual(run("front", "invariants", "/nonexistent.front").returncode, 2)

    def test_malformed_front(self):
        with tempfile.NamedTemporaryFile("w", suffix=".front", delete=False) as f:
            f.write("L1 X3 R1\n")
        self.assertEqual(run("front", "invariants", f.name).returncode, 2)

    def test_help(self):
        self.assertEqual(run("--help").returncode, 0)


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0], "-v"])
