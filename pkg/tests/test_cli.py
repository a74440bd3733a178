import pytest

from maxcsp.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def tiny_cnf(tmp_path, capsys):
    path = tmp_path / "tiny.cnf"
    code, out, _ = run_cli(capsys, "gen", "--n", "6", "--m", "12", "--k", "3", "--seed", "1")
    assert code == 0
    path.write_text(out, encoding="utf-8")
    return str(path)


class TestGen:
    def test_deterministic(self, capsys):
        a = run_cli(capsys, "gen", "--n", "5", "--m", "3", "--k", "3", "--seed", "1")
        b = run_cli(capsys, "gen", "--n", "5", "--m", "3", "--k", "3", "--seed", "1")
        assert a == b
        assert a[0] == 0

    def test_output_parses(self, capsys):
        from maxcsp import parse_cnf

        code, out, _ = run_cli(capsys, "gen", "--n", "7", "--m", "9", "--k", "4", "--seed", "2")
        assert code == 0
        inst, _ = parse_cnf(out)
        assert inst.num_constraints == 9
        assert all(c.arity == 4 for c in inst.constraints)

    def test_k_above_n(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--n", "2", "--m", "1", "--k", "3", "--seed", "0")
        assert code == 4
        assert "error" in err


class TestSolve:
    def test_report_fields_and_determinism(self, capsys, tiny_cnf):
        a = run_cli(capsys, "solve", tiny_cnf, "--eps", "0.1", "--seed", "7")
        b = run_cli(capsys, "solve", tiny_cnf, "--eps", "0.1", "--seed", "7")
        assert a == b
        code, out, _ = a
        assert code == 0
        report = dict(line.split("=", 1) for line in out.splitlines())
        assert report["n"] == "6"
        assert report["m"] == "12"
        assert report["guarantee"] == "additive"
        assert set(report["assignment"]) <= {"0", "1"}
        assert len(report["assignment"]) == 6
        assert int(report["iterations"]) == int(report["iterations_budget"])

    def test_parallelism_does_not_change_output(self, capsys, tiny_cnf):
        outs = set()
        for p in ("1", "2", "8"):
            code, out, _ = run_cli(
                capsys, "solve", tiny_cnf, "--eps", "0.1", "--seed", "7", "--parallelism", p
            )
            assert code == 0
            outs.add(out)
        assert len(outs) == 1

    def test_parse_error_exit_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.cnf"
        bad.write_text("p cnf 2 1\n1 5 0\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "solve", str(bad), "--eps", "0.1")
        assert code == 2
        assert "line 2" in err

    def test_hard_clause_exit_2(self, tmp_path, capsys):
        hard = tmp_path / "hard.wcnf"
        hard.write_text("p wcnf 2 1 10\n10 1 2 0\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "solve", str(hard), "--eps", "0.1")
        assert code == 2
        assert "hard constraints out of scope" in err

    def test_budget_overflow_exit_3(self, tmp_path, capsys):
        from maxcsp import random_ekcnf, serialize

        big = tmp_path / "big.cnf"
        big.write_text(serialize(random_ekcnf(90, 150, 3, seed=0), "cnf"), encoding="utf-8")
        code, _, err = run_cli(capsys, "solve", str(big), "--eps", "0.01")
        assert code == 3
        assert "max_iterations" in err

    def test_max_iters_cap(self, tmp_path, capsys):
        from maxcsp import random_ekcnf, serialize

        big = tmp_path / "big.cnf"
        big.write_text(serialize(random_ekcnf(90, 150, 3, seed=0), "cnf"), encoding="utf-8")
        code, out, _ = run_cli(
            capsys, "solve", str(big), "--eps", "0.01", "--max-iters", "400"
        )
        assert code == 0
        report = dict(line.split("=", 1) for line in out.splitlines())
        assert report["clamped"] == "1"
        assert report["iterations"] == "400"

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "solve", "/nonexistent/x.cnf", "--eps", "0.1")
        assert code == 2

    def test_format_override(self, tmp_path, capsys):
        p = tmp_path / "inst.txt"
        p.write_text("csp 2\nt 1 2 1 2 0110\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "solve", str(p), "--eps", "0.5", "--format", "csp")
        assert code == 0
        assert "best_weight=1.0" in out

    def test_wcnf_weights(self, tmp_path, capsys):
        p = tmp_path / "inst.wcnf"
        p.write_text("p wcnf 2 2\n2.5 1 0\n0.5 -2 0\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "solve", str(p), "--eps", "0.3", "--seed", "2")
        assert code == 0
        assert "w=3.0" in out
        assert "best_weight=3.0" in out  # x1=1, x2=0 satisfies both


class TestExponent:
    def test_hirsch2_value(self, capsys):
        code, out, _ = run_cli(capsys, "exponent", "--method", "hirsch2", "--k", "3", "--eps", "0.1")
        assert code == 0
        assert "exponent=0.9556059" in out

    def test_ours_value(self, capsys):
        code, out, _ = run_cli(capsys, "exponent", "--method", "ours", "--k", "4", "--eps", "0.04")
        assert code == 0
        assert "exponent=0.9537019" in out
        assert "delta_star=" in out
        assert "base=" in out and "x=" in out

    def test_delta2(self, capsys):
        code, out, _ = run_cli(
            capsys, "exponent", "--method", "ours-delta2", "--k", "3", "--eps", "0.1"
        )
        assert code == 0
        assert "exponent=0.9388542" in out
        assert "delta_star=2.000000000" in out

    def test_ept_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "exponent", "--method", "ept", "--eps", "0.9")
        assert code == 4
        assert "error" in err

    def test_ept_ok(self, capsys):
        code, out, _ = run_cli(capsys, "exponent", "--method", "ept", "--eps", "0.1")
        assert code == 0
        assert "exponent=0.5098039" in out
        assert "alpha=0.796" in out

    def test_missing_k(self, capsys):
        code, _, err = run_cli(capsys, "exponent", "--method", "ours", "--eps", "0.1")
        assert code == 4
        assert "--k" in err


class TestTable:
    def test_row_count(self, capsys):
        code, out, _ = run_cli(capsys, "table")
        assert code == 0
        assert len(out.splitlines()) == 27

    def test_check_passes(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--check")
        assert code == 0
        assert "check=ok" in out

    def test_specific_row(self, capsys):
        _, out, _ = run_cli(capsys, "table")
        assert "k=6 eps=1/64 hirsch2=0.9962960 ours=0.9834889" in out

    def test_human_rendering(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--human")
        assert code == 0
        assert out.splitlines()[0].split() == ["k", "eps", "hirsch2", "ours"]


class TestVerify:
    def test_passes_on_generated(self, capsys, tiny_cnf):
        code, out, _ = run_cli(capsys, "verify", tiny_cnf, "--eps", "0.25")
        assert code == 0
        assert "all_pass=1" in out

    def test_passes_full_relaxation(self, capsys, tiny_cnf):
        code, out, _ = run_cli(capsys, "verify", tiny_cnf, "--eps", "1")
        assert code == 0

    def test_complementary_units(self, tmp_path, capsys):
        p = tmp_path / "two.cnf"
        p.write_text("p cnf 1 2\n1 0\n-1 0\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "verify", str(p), "--eps", "0.5")
        assert code == 0
        assert "d_exact=2" in out

    def test_cap_maps_to_domain_exit(self, tmp_path, capsys):
        from maxcsp import random_ekcnf, serialize

        p = tmp_path / "n16.cnf"
        p.write_text(serialize(random_ekcnf(16, 10, 3, seed=0), "cnf"), encoding="utf-8")
        code, _, err = run_cli(capsys, "verify", str(p), "--eps", "0.5", "--max-n", "12")
        assert code == 4
