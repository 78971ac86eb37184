import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from symmetry.families import Family, FamilySpec, build
from symmetry.graph_io import to_graph6
from symmetry.models import ClaimRecord, VerificationRun

GOLDEN = Path(__file__).parent / "golden"


def run(*args, **options):
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


class GenCommandTests(SimpleTestCase):
    def test_q3_graph6_golden(self):
        self.assertEqual(run("gen", "Q3", format="graph6"), (GOLDEN / "q3.g6").read_text())

    def test_dot(self):
        output = run("gen", "H(5,2)", format="dot")
        self.assertTrue(output.startswith('graph "H(5,2)" {'))
        self.assertEqual(output.count("label="), 20)
        self.assertEqual(output, run("gen", "H(5,2)", format="dot"))

    def test_null_graph(self):
        with self.assertRaisesMessage(CommandError, "null graph") as ctx:
            run("gen", "H(4,2)")
        self.assertEqual(ctx.exception.returncode, 2)


class AutCommandTests(SimpleTestCase):
    def test_bipartite_kneser(self):
        output = run("aut", "H(5,2)")
        self.assertIn("order 240\n", output)
        self.assertIn("swapping", output)

    def test_kneser(self):
        self.assertIn("order 120\n", run("aut", "K(5,2)"))

    def test_petersen_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "petersen.g6"
            path.write_text(to_graph6(build(FamilySpec(Family.KNESER, 5, 2))) + "\n")
            output = run("aut", file=str(path))
        self.assertIn("graph petersen\n", output)
        self.assertIn("order 120\n", output)

    def test_json(self):
        payload = json.loads(run("aut", "J(4,2)", json=True))
        self.assertEqual(payload["order"], 48)
        self.assertEqual(payload["vertices"], 6)
        self.assertTrue(all(gen["action"] is None for gen in payload["generators"]))

    def test_parts_coloring(self):
        self.assertIn("order 120\n", run("aut", "H(5,2)", coloring="parts"))

    def test_trace(self):
        output = run("aut", "Q3", trace=True)
        self.assertTrue(output.startswith("node 1 depth 0"))

    def test_budget(self):
        with self.assertRaises(CommandError) as ctx:
            run("aut", "H(5,2)", budget=2)
        self.assertEqual(ctx.exception.returncode, 3)

    def test_spec_and_file_are_exclusive(self):
        with self.assertRaises(CommandError) as ctx:
            run("aut", "H(5,2)", file="x.g6")
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError):
            run("aut")


class VerifyCommandTests(SimpleTestCase):
    def test_single_claim(self):
        lines = run("verify", "Thm3_6", max_n=5).splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[0].startswith("PASS Thm3_6 H(5,2) expected="))
        self.assertEqual(lines[1], "1 reports, 1 passed, 0 failed")

    def test_connectivity_listing(self):
        lines = run("verify", "Cor1_3", max_n=7).splitlines()[:-1]
        self.assertEqual(len(lines), 9)
        self.assertEqual(lines[3], "PASS Cor1_3 H(5,2) expected=3 observed=3")
        self.assertEqual(lines[-1], "PASS Cor1_3 H(7,3) expected=4 observed=4")

    def test_json_records(self):
        lines = run("verify", "Lemma3_5", "EKR", max_n=5, json=True).splitlines()
        records = [json.loads(line) for line in lines]
        self.assertEqual(records[0]["claim_id"], "Lemma3_5")
        self.assertTrue(all(r["passed"] for r in records))
        self.assertEqual([r["instance"] for r in records[1:]], ["K(3,1)", "K(4,1)", "K(5,1)", "K(5,2)"])

    def test_timings(self):
        line = run("verify", "Lemma3_5", timings=True).splitlines()[0]
        self.assertRegex(line, r" elapsed_us=\d+$")

    def test_unknown_claim(self):
        with self.assertRaisesMessage(CommandError, "Valid ids:") as ctx:
            run("verify", "Thm9_9")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_budget_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            run("verify", "Thm3_6", max_n=5, budget=2)
        self.assertEqual(ctx.exception.returncode, 3)

    def test_byte_identical_runs(self):
        first = run("verify", all=True, max_n=7)
        second = run("verify", all=True, max_n=7)
        self.assertEqual(first, second)
        self.assertTrue(first.endswith(" 0 failed\n"))


class PropsCommandTests(SimpleTestCase):
    def test_bipartite_kneser(self):
        output = run("props", "H(5,2)").splitlines()
        self.assertIn("vertices 20", output)
        self.assertIn("edges 30", output)
        self.assertIn("regular_degree 3", output)
        self.assertIn("connectivity 3", output)
        self.assertIn("parts 10 10", output)

    def test_json(self):
        summary = json.loads(run("props", "K(5,2)", json=True))
        self.assertEqual(summary["vertices"], 10)
        self.assertEqual(summary["regular_degree"], 3)
        self.assertEqual(summary["diameter"], 2)
        self.assertFalse(summary["bipartite"])
        self.assertIsNone(summary["parts"])

    def test_johnson(self):
        summary = json.loads(run("props", "J(4,2)", json=True))
        self.assertEqual((summary["vertices"], summary["regular_degree"]), (6, 4))


class ExportCommandTests(SimpleTestCase):
    def test_graph(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "q3.g6"
            run("export", "Q3", output=str(path))
            self.assertEqual(path.read_text(), (GOLDEN / "q3.g6").read_text())

    def test_generators(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "gens.txt"
            run("export", "K(5,2)", output=str(path), generators=True)
            lines = path.read_text().splitlines()
        self.assertTrue(lines)
        self.assertTrue(all(line.startswith("(") for line in lines))


class VerifySaveTests(TestCase):
    def test_save_persists_run(self):
        output = run("verify", "Cor1_3", "EKR", max_n=5, save=True)
        run_ = VerificationRun.objects.get()
        self.assertEqual(run_.max_n, 5)
        self.assertEqual(run_.failed, 0)
        self.assertEqual(run_.records.count(), len(output.splitlines()) - 1)
        self.assertTrue(ClaimRecord.objects.filter(claim_id="EKR", instance="K(5,2)", passed=True).exists())
