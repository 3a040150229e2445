import io
import json

import pytest

from causaltiers.cli import main

from conftest import FIXTURES

EXPECTED = FIXTURES / "expected"


def run_cli(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def fixture(name):
    return str(FIXTURES / name)


class TestGoldenExamples:
    """End-to-end byte-exact runs of every figure example."""

    @pytest.mark.parametrize(
        "expected, argv",
        [
            (
                "wave_mpdag.txt",
                ["orient", "wave_cpdag.txt", "--tiers", "wave_tiers3.txt"],
            ),
            (
                "wave_mpdag_via_two_waves.txt",
                ["orient", "wave_cpdag.txt", "--tiers", "wave_tiers2.txt"],
            ),
            (
                "triangle_total.txt",
                ["orient", "triangle_cpdag.txt", "--tiers", "triangle_tiers_total.txt"],
            ),
            (
                "triangle_single.txt",
                ["orient", "triangle_cpdag.txt", "--tiers", "triangle_tiers_single.txt"],
            ),
            (
                "triangle_a_first.txt",
                ["orient", "triangle_cpdag.txt", "--tiers", "triangle_tiers_a_first.txt"],
            ),
            (
                "triangle_c_last.txt",
                ["orient", "triangle_cpdag.txt", "--tiers", "triangle_tiers_c_last.txt"],
            ),
            (
                "compare_wave_tiers.txt",
                [
                    "compare-tiers",
                    "wave_cpdag.txt",
                    "wave_tiers3.txt",
                    "wave_tiers2.txt",
                ],
            ),
            (
                "compare_fine_vs_coarse_late.txt",
                [
                    "compare-tiers",
                    "wave_cpdag.txt",
                    "wave_tiers_fine_late.txt",
                    "wave_tiers_coarse_late.txt",
                ],
            ),
            (
                "compare_triangle.txt",
                [
                    "compare-tiers",
                    "triangle_cpdag.txt",
                    "triangle_tiers_a_first.txt",
                    "triangle_tiers_c_last.txt",
                ],
            ),
            (
                "pair_mpdag.txt",
                ["orient", "pair_cpdag.txt", "--tiers", "pair_tiers.txt"],
            ),
        ],
    )
    def test_byte_exact(self, expected, argv):
        argv = [argv[0]] + [
            fixture(a) if a.endswith(".txt") else a for a in argv[1:]
        ]
        code, out = run_cli(*argv)
        assert code == 0
        assert out == (EXPECTED / expected).read_text()

    def test_triangle_outputs_are_pairwise_distinct(self):
        outputs = {
            (EXPECTED / f"triangle_{name}.txt").read_text()
            for name in ("total", "single", "a_first", "c_last")
        }
        assert len(outputs) == 4

    @pytest.mark.parametrize(
        "tiers, expected",
        [
            ("cohort_waves.txt", "cohort_waves_mpdag.txt"),
            ("cohort_expert.txt", "cohort_expert_mpdag.txt"),
        ],
    )
    def test_cohort_example(self, tiers, expected):
        """The applied two-wave example: wave timing orients two more
        edges; the refined early-life ordering orients everything."""
        code, out = run_cli(
            "orient", fixture("cohort_cpdag.txt"), "--tiers", fixture(tiers)
        )
        assert code == 0
        assert out == (EXPECTED / expected).read_text()
        if "expert" in tiers:
            assert " -- " not in out


class TestSubcommands:
    def test_validate(self):
        code, out = run_cli("validate", fixture("wave_dag.txt"))
        assert code == 0
        assert out == "ok: 7 nodes, 7 edges (7 directed, 0 undirected)\n"

    def test_validate_json(self):
        code, out = run_cli("validate", fixture("wave_cpdag.txt"), "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] and len(payload["undirected"]) == 5

    def test_dsep(self):
        code, out = run_cli(
            "dsep", fixture("wave_dag.txt"), "--a", "B", "--b", "D", "--c", "C"
        )
        assert (code, out) == (0, "separated\n")
        code, out = run_cli(
            "dsep", fixture("wave_dag.txt"), "--a", "B", "--b", "D", "--c", "C,E"
        )
        assert (code, out) == (0, "connected\n")

    def test_classify_path(self):
        code, out = run_cli(
            "classify-path", fixture("wave_cpdag.txt"), "--path", "A,C,F,G"
        )
        assert code == 0
        assert out == "possibly-causal: yes\nb-possibly-causal: yes\n"

    def test_classify_path_backward(self):
        code, out = run_cli(
            "classify-path", fixture("wave_dag.txt"), "--path", "E,D,C"
        )
        assert code == 0
        assert out == "possibly-causal: no\nb-possibly-causal: no\n"

    def test_ida_local(self):
        code, out = run_cli(
            "ida",
            str(EXPECTED / "wave_mpdag.txt"),
            "--x",
            "B",
        )
        assert code == 0
        assert out == "{} x1\n{A} x1\n"

    def test_ida_joint(self):
        code, out = run_cli(
            "ida", str(EXPECTED / "wave_mpdag.txt"), "--joint", "A,B"
        )
        assert code == 0
        assert out == "({}, {A}) x1\n({B}, {}) x1\n"

    def test_orient_trace(self, capsys):
        code, out = run_cli(
            "orient",
            fixture("wave_cpdag.txt"),
            "--tiers",
            fixture("wave_tiers3.txt"),
            "--trace",
        )
        assert code == 0
        err = capsys.readouterr().err
        assert "rule1: C->D" in err and "rule1: F->G" in err

    def test_orient_rules_all_matches_rule_1(self):
        _, via_one = run_cli(
            "orient", fixture("wave_cpdag.txt"), "--tiers", fixture("wave_tiers3.txt")
        )
        _, via_all = run_cli(
            "orient",
            fixture("wave_cpdag.txt"),
            "--tiers",
            fixture("wave_tiers3.txt"),
            "--rules",
            "all",
        )
        assert via_one == via_all

    def test_orient_out_file(self, tmp_path):
        target = tmp_path / "result.txt"
        code, out = run_cli(
            "orient",
            fixture("wave_cpdag.txt"),
            "--tiers",
            fixture("wave_tiers3.txt"),
            "--out",
            str(target),
        )
        assert code == 0 and out == ""
        assert target.read_text() == (EXPECTED / "wave_mpdag.txt").read_text()

    def test_orient_json(self):
        code, out = run_cli(
            "orient",
            fixture("wave_cpdag.txt"),
            "--tiers",
            fixture("wave_tiers3.txt"),
            "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert ["A", "C"] in payload["graph"]["directed"]
        assert payload["trace"]

    def test_compare_tiers_json(self):
        code, out = run_cli(
            "compare-tiers",
            fixture("wave_cpdag.txt"),
            fixture("wave_tiers_fine_late.txt"),
            fixture("wave_tiers_coarse_late.txt"),
            "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["equivalent"] is False
        assert payload["witness"] == ["A", "C"]
        assert payload["informativeness"] == "first-more-informative"

    def test_simulate(self, tmp_path):
        out_csv = tmp_path / "r.csv"
        code, out = run_cli(
            "simulate",
            "--nodes", "8",
            "--density", "sparse",
            "--generator", "er",
            "--reps", "5",
            "--seed", "7",
            "--out", str(out_csv),
        )
        assert code == 0
        assert out.startswith("scheme count min q1 median q3 max\n")
        lines = out_csv.read_text().splitlines()
        assert lines[0] == "nodes,density,generator,scheme,rep,n_edges,n_dir_cpdag,n_dir_mpdag,gain_frac"
        assert len(lines) == 1 + 5 * 5


class TestExitCodes:
    def test_missing_file_is_usage_error(self, capsys):
        code, _ = run_cli("validate", "no/such/file.txt")
        assert code == 2
        assert "no such file" in capsys.readouterr().err

    def test_bad_flag_is_usage_error(self, capsys):
        code, _ = run_cli("validate", fixture("wave_dag.txt"), "--frobnicate")
        assert code == 2

    def test_simulate_zero_reps_is_usage_error(self, capsys, tmp_path):
        code, _ = run_cli(
            "simulate",
            "--nodes", "8",
            "--density", "sparse",
            "--generator", "er",
            "--reps", "0",
            "--out", str(tmp_path / "r.csv"),
        )
        assert code == 2

    def test_inconsistent_tiers_is_domain_error(self, capsys, tmp_path):
        bad = tmp_path / "bad_tiers.txt"
        bad.write_text("tier 1: E\ntier 2: A B C D F G\n")
        code, _ = run_cli(
            "orient", fixture("wave_cpdag.txt"), "--tiers", str(bad)
        )
        assert code == 1
        assert "contradicts" in capsys.readouterr().err

    def test_unparsable_graph_is_domain_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("nodes: A B\nA => B\n")
        code, _ = run_cli("validate", str(bad))
        assert code == 1

    def test_ida_requires_target(self, capsys):
        code, _ = run_cli("ida", fixture("wave_cpdag.txt"))
        assert code == 2
