"""Sweeps, persistence, figures, and the command-line interface."""

import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

import c4energy.cli as cli
from c4energy.constructions import exceptional_trees
from c4energy.graphs import canonical_code, parse_graph6, write_graph6
from c4energy.report import (
    CSV_HEADER,
    outcome_to_csv,
    outcome_to_json,
    parse_report_json,
    write_conjecture_table,
    write_report,
)
from c4energy.spectra import EnergyReport
from c4energy.sweeps import (
    OrderStat,
    RunConfig,
    VerifyOutcome,
    classify_energy_vs_order,
    conjecture_table,
    fact1_sweep,
    theorem1_sweep,
    theorem2_sweep,
    theorem3_sweep,
)


class TestClassification:
    def test_single_edge_is_equality(self):
        from c4energy.constructions import path

        e, relation = classify_energy_vs_order(path(2))
        assert relation == "equal"
        assert abs(e - 2.0) < 1e-12

    def test_star_below(self):
        from c4energy.constructions import star

        _, relation = classify_energy_vs_order(star(3))
        assert relation == "below"

    def test_cycle_above(self):
        from c4energy.constructions import cycle

        _, relation = classify_energy_vs_order(cycle(5))
        assert relation == "above"


class TestFact1Sweep:
    def test_max_order_2(self):
        o = fact1_sweep(2)
        # the single edge has energy exactly 2, not below its order
        assert [r.n for r in o.counterexamples] == [1]
        assert not o.borderline

    def test_max_order_7_finds_all_four(self):
        o = fact1_sweep(7)
        got = {parse_graph6(r.key).n for r in o.counterexamples}
        assert got == {1, 3, 4, 7}
        exp = {canonical_code(t) for t in exceptional_trees()}
        found = {canonical_code(parse_graph6(r.key)) for r in o.counterexamples}
        assert found == exp
        assert o.total == sum((1, 1, 1, 2, 2, 4, 6))

    def test_max_order_12_no_new_exceptions(self):
        o = fact1_sweep(12)
        assert len(o.counterexamples) == 4
        assert not o.borderline
        assert o.total == 284

    def test_outcome_invariants(self):
        o = fact1_sweep(9)
        keys = {r.key for r in o.counterexamples} & {r.key for r in o.borderline}
        assert not keys
        assert o.total >= len(o.counterexamples) + len(o.borderline)
        assert [s.order for s in o.order_stats] == sorted(
            s.order for s in o.order_stats
        )

    def test_flagged_reports_satisfy_moment_identities(self):
        # sweep output stays re-derivable: every persisted row decodes to a
        # graph whose spectrum passes the power-sum identities
        from c4energy.spectra import moment, spectrum, verify_moment_identities

        o = fact1_sweep(8)
        for rep in o.counterexamples + o.borderline:
            g = parse_graph6(rep.key)
            assert (g.n, g.m) == (rep.n, rep.m)
            r2, r4 = verify_moment_identities(g)
            scale = max(1.0, moment(spectrum(g), 4))
            assert r2 <= 1e-8 * scale and r4 <= 1e-8 * scale

    def test_jobs_equivalence(self):
        a = fact1_sweep(11, jobs=1)
        b = fact1_sweep(11, jobs=3)
        assert outcome_to_csv(a) == outcome_to_csv(b)
        assert outcome_to_json(a) == outcome_to_json(b)


class TestTheoremSweeps:
    def test_thm3_small(self):
        o = theorem3_sweep(12)
        assert not o.counterexamples and not o.borderline
        assert o.total == 284 - 4

    def test_thm2_small(self):
        o = theorem2_sweep(8)
        assert not o.counterexamples and not o.borderline
        # includes the 5-cycle, which passes comfortably
        assert any(s.order == 5 for s in o.order_stats)

    def test_thm2_rejects_large_order(self):
        with pytest.raises(ValueError):
            theorem2_sweep(11)

    def test_thm1_small(self):
        for d in (3, 4):
            o = theorem1_sweep(8, d)
            assert not o.counterexamples and not o.borderline

    def test_thm1_hypothesis_gate(self):
        # at d = 3 the gate is m >= n, matching the thm2 corpus
        a = theorem1_sweep(7, 3)
        b = theorem2_sweep(7)
        assert a.total == b.total


class TestConjectureTable:
    def test_first_rows(self):
        rows = conjecture_table(2)
        assert rows[0].order == 4
        assert abs(rows[0].energy - 2 * math.sqrt(3)) < 1e-12
        assert abs(rows[0].ratio - math.sqrt(3) / 2) < 1e-12
        assert rows[2].order == 22

    def test_rejects_large_k(self):
        with pytest.raises(ValueError):
            conjecture_table(10)

    def test_rows_reproduce(self):
        a = conjecture_table(3)
        b = conjecture_table(3)
        assert a == b


class TestReports:
    def sample_outcome(self):
        rep = EnergyReport(key="CF", n=4, m=3, energy=2 * math.sqrt(3),
                           mu1=math.sqrt(3), deficit=2 * math.sqrt(3) - 4)
        return VerifyOutcome(
            sweep="fact1", total=10, counterexamples=(rep,), borderline=(),
            order_stats=(OrderStat(order=4, graphs=2, min_margin=rep.deficit),),
            wall_time=1.23,
        )

    def test_csv_header_exact(self):
        assert CSV_HEADER == "sweep,order,edges,canonical_code,energy,mu1,deficit,status"
        text = outcome_to_csv(self.sample_outcome())
        lines = text.strip().split("\n")
        assert lines[0] == CSV_HEADER
        assert lines[1].startswith("fact1,4,3,CF,") and lines[1].endswith("exception")

    def test_empty_outcome_header_only(self):
        empty = VerifyOutcome(sweep="thm3", total=5, counterexamples=(),
                              borderline=(), order_stats=(), wall_time=0.1)
        assert outcome_to_csv(empty) == CSV_HEADER + "\n"

    def test_json_roundtrip(self):
        o = self.sample_outcome()
        back = parse_report_json(outcome_to_json(o))
        assert back.sweep == o.sweep and back.total == o.total
        assert back.counterexamples == o.counterexamples
        assert back.order_stats == o.order_stats

    def test_json_excludes_wall_time(self):
        data = json.loads(outcome_to_json(self.sample_outcome()))
        assert "wall_time" not in data

    def test_rows_sorted(self):
        r1 = EnergyReport(key="Z", n=3, m=2, energy=1, mu1=1, deficit=-2)
        r2 = EnergyReport(key="A", n=3, m=2, energy=1, mu1=1, deficit=-2)
        r3 = EnergyReport(key="B", n=2, m=1, energy=1, mu1=1, deficit=-1)
        o = VerifyOutcome(sweep="x", total=3, counterexamples=(r1, r2, r3),
                          borderline=(), order_stats=(), wall_time=0)
        lines = outcome_to_csv(o).strip().split("\n")[1:]
        assert [ln.split(",")[3] for ln in lines] == ["B", "A", "Z"]

    def test_write_report_io_error(self, tmp_path):
        o = self.sample_outcome()
        with pytest.raises(OSError, match="no/such"):
            write_report(o, tmp_path / "no" / "such" / "dir" / "x.csv")

    def test_write_files(self, tmp_path):
        o = self.sample_outcome()
        p1 = write_report(o, tmp_path / "out.csv", "csv")
        p2 = write_report(o, tmp_path / "out.json", "json")
        assert p1.read_text().startswith(CSV_HEADER)
        assert json.loads(p2.read_text())["sweep"] == "fact1"
        rows = conjecture_table(1)
        p3 = write_conjecture_table(rows, tmp_path / "conj.csv")
        assert p3.read_text().startswith("k,order,energy,ratio")


class TestRunConfig:
    def test_validates_jobs(self):
        with pytest.raises(ValueError):
            RunConfig(max_order=5, jobs=0)
        assert RunConfig(max_order=5).jobs == 1


class TestPlots:
    def test_sweep_figure(self, tmp_path):
        from c4energy.plots import sweep_figure

        o = fact1_sweep(7)
        out = sweep_figure(o, tmp_path / "sweep.png")
        assert out.exists() and out.stat().st_size > 1000

    def test_conjecture_figure(self, tmp_path):
        from c4energy.plots import conjecture_figure

        out = conjecture_figure(conjecture_table(2), tmp_path / "bn.png")
        assert out.exists() and out.stat().st_size > 1000


class TestCli:
    def test_energy_csv(self, tmp_path, capsys):
        p = tmp_path / "in.g6"
        p.write_text("A_\nCF\n")
        assert cli.main(["energy", "--in", str(p)]) == 0
        out = capsys.readouterr().out.strip().split("\n")
        assert out[0] == CSV_HEADER
        assert out[1].endswith("pass")       # single edge: energy equals order
        assert out[2].endswith("exception")  # the 4-star sits below its order

    def test_energy_json(self, tmp_path, capsys):
        p = tmp_path / "in.g6"
        p.write_text(write_graph6(exceptional_trees()[3]) + "\n")
        assert cli.main(["energy", "--in", str(p), "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["reports"][0]["n"] == 7

    def test_energy_bad_input(self, tmp_path, capsys):
        p = tmp_path / "in.g6"
        p.write_text("not graph6 at all\n")
        assert cli.main(["energy", "--in", str(p)]) == 2

    def test_energy_missing_file(self, capsys):
        assert cli.main(["energy", "--in", "/no/such/file.g6"]) == 2

    def test_alpha(self, capsys):
        assert cli.main(["alpha", "--d", "4"]) == 0
        out = capsys.readouterr().out
        assert "alpha(4)" in out and "bracket" in out
        assert cli.main(["alpha", "--d", "2"]) == 2

    def test_sweep_fact1_writes_report_and_figure(self, tmp_path, capsys):
        out = tmp_path / "f.csv"
        code = cli.main(["sweep", "fact1", "--max-order", "7", "--jobs", "2",
                         "--out", str(out)])
        assert code == 0
        text = out.read_text()
        assert text.startswith(CSV_HEADER)
        assert len(text.strip().split("\n")) == 5  # header + 4 exceptions
        assert (tmp_path / "f.png").exists()

    def test_sweep_thm_clean_exit(self, capsys):
        assert cli.main(["sweep", "thm3", "--max-order", "9"]) == 0
        assert cli.main(["sweep", "thm2", "--max-order", "6"]) == 0

    def test_sweep_usage_errors(self, capsys):
        assert cli.main(["sweep", "thm2", "--max-order", "11"]) == 2
        assert cli.main(["sweep", "thm2"]) == 2  # only fact1 has a default order
        assert cli.main(["sweep", "fact1", "--max-order", "0"]) == 2
        assert cli.main(["sweep", "fact1", "--max-order", "5", "--jobs", "0"]) == 2
        with pytest.raises(SystemExit) as exc:
            cli.main(["sweep", "nope", "--max-order", "5"])
        assert exc.value.code == 2

    def test_conjecture(self, tmp_path, capsys):
        out = tmp_path / "bn.csv"
        assert cli.main(["conjecture", "bn", "--max-k", "1", "--out", str(out)]) == 0
        assert out.read_text().startswith("k,order,energy,ratio")
        assert (tmp_path / "bn.png").exists()
        assert cli.main(["conjecture", "bn", "--max-k", "10"]) == 2

    def test_gen_trees(self, capsys):
        assert cli.main(["gen", "trees", "--n", "6", "--dmax", "3"]) == 0
        seqs = capsys.readouterr().out.strip().split("\n")
        assert len(seqs) == 4
        assert cli.main(["gen", "trees", "--n", "6", "--dmax", "3", "--graph6"]) == 0
        g6 = capsys.readouterr().out.strip().split("\n")
        assert all(parse_graph6(s).n == 6 for s in g6)

    def test_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "c4energy.cli", "alpha", "--d", "3"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "alpha(3) = 1.0" in proc.stdout
