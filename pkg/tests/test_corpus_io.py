import json

import numpy as np
import pytest

from centauts import (
    RunConfig,
    analyze_group,
    emit_report,
    group_file_text,
    invariants,
    parse_group_file,
    parse_group_text,
    scan_corpus,
    serialize_group,
)
from centauts.cli import main
from centauts.corpus import catalog, catalog_group, has_failures
from centauts.errors import ConfigError, NotAGroup, ParseError


class TestCatalog:
    def test_q8_has_one_involution(self, groups):
        q8 = groups["Q8"]
        assert q8.n == 8
        assert sum(1 for o in q8.element_orders() if o == 2) == 1

    def test_heis3_profile(self, groups):
        g = groups["Heis3"]
        assert g.n == 27 and g.nilpotency_class() == 2 and g.exponent() == 3

    def test_d8xq8_center_type(self, groups):
        g = groups["D8xQ8"]
        assert g.n == 64
        assert invariants(g.center().as_group(), 2).exps == (1, 1)

    def test_construction_is_deterministic(self):
        entries = catalog()
        for name in ("D8", "Q8", "M16", "Heis3", "D8cpD8"):
            a, b = entries[name](), entries[name]()
            assert np.array_equal(a.mul, b.mul), name

    def test_names_match_orders(self, groups):
        assert groups["D8xD8"].n == 64
        assert groups["Heis3cpC9"].n == 81
        assert groups["C9sdC9"].n == 81

    def test_catalog_group_unknown(self):
        with pytest.raises(ParseError):
            catalog_group("NoSuchGroup")


class TestGroupFiles:
    def test_parse_cayley_c2(self):
        g = parse_group_text('{"name": "C2", "format": "cayley", "n": 2, "table": [[0,1],[1,0]]}')
        assert g.n == 2 and g.name == "C2"

    def test_parse_perm_d8(self):
        doc = {
            "name": "D8",
            "format": "perm",
            "degree": 4,
            "generators": [[1, 2, 3, 0], [2, 1, 0, 3]],
        }
        g = parse_group_text(json.dumps(doc))
        assert g.n == 8

    def test_parse_product_of_catalog_names(self):
        doc = {"name": "both", "format": "product", "factors": ["D8", "C2"]}
        g = parse_group_text(json.dumps(doc))
        assert g.n == 16 and g.name == "both"

    def test_parse_nested_product(self):
        doc = {
            "format": "product",
            "factors": [
                {"format": "cayley", "table": [[0, 1], [1, 0]]},
                "C2",
            ],
        }
        assert parse_group_text(json.dumps(doc)).n == 4

    def test_malformed_json(self):
        with pytest.raises(ParseError, match="line"):
            parse_group_text("{not json")

    def test_bad_table_is_rejected(self):
        with pytest.raises(NotAGroup):
            parse_group_text('{"format": "cayley", "table": [[0,1],[1,1]]}')

    def test_missing_fields(self):
        with pytest.raises(ParseError, match="table"):
            parse_group_text('{"format": "cayley"}')
        with pytest.raises(ParseError, match="format"):
            parse_group_text('{"table": [[0]]}')

    def test_wrong_n_field(self):
        with pytest.raises(ParseError, match="'n'"):
            parse_group_text('{"format": "cayley", "n": 3, "table": [[0,1],[1,0]]}')

    def test_roundtrip_through_file(self, tmp_path, groups):
        for name in ("D8", "Q8", "Heis3"):
            g = groups[name]
            path = tmp_path / f"{name}.json"
            path.write_text(group_file_text(g))
            back = parse_group_file(path)
            assert np.array_equal(back.mul, g.mul), name
            again = parse_group_text(group_file_text(back))
            assert np.array_equal(again.mul, g.mul), name

    def test_file_stem_used_when_unnamed(self, tmp_path):
        path = tmp_path / "mystery.json"
        path.write_text('{"format": "cayley", "table": [[0,1],[1,0]]}')
        assert parse_group_file(path).name == "mystery"


class TestRunConfig:
    def test_empty_checks_rejected(self):
        with pytest.raises(ConfigError, match="empty"):
            RunConfig(checks=())

    def test_unknown_check_rejected(self):
        with pytest.raises(ConfigError, match="unknown"):
            RunConfig(checks=("theorem", "bogus"))

    def test_max_order_bounds(self):
        with pytest.raises(ConfigError):
            RunConfig(max_order=0)
        with pytest.raises(ConfigError):
            RunConfig(max_order=100000)

    def test_bad_format(self):
        with pytest.raises(ConfigError):
            RunConfig(output_format="xml")

    def test_env_var_overrides_cache_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("CENTAUTS_CACHE_DIR", str(tmp_path / "env"))
        cfg = RunConfig(cache_dir=str(tmp_path / "cfg"))
        assert cfg.resolved_cache_dir() == tmp_path / "env"
        monkeypatch.delenv("CENTAUTS_CACHE_DIR")
        assert cfg.resolved_cache_dir() == tmp_path / "cfg"


SMALL_CFG = dict(max_order=16, primes=(2, 3), checks=("theorem", "cor1", "lemma0a"))


class TestScan:
    def test_reports_cover_catalog_within_caps(self):
        cfg = RunConfig(**SMALL_CFG)
        reports = scan_corpus(cfg)
        expected = [
            name
            for name, make in catalog().items()
            if make().n <= 16 and (make().p_group_prime() in (2, 3, None))
        ]
        assert [r.group_id for r in reports] == expected
        assert not has_failures(reports)

    def test_lemma4_adds_sweep_rows(self):
        cfg = RunConfig(max_order=16, primes=(2,), checks=("lemma4",))
        reports = scan_corpus(cfg)
        assert reports[-1].group_id == "lemma4-sweep-p2"
        assert reports[-1].lemma_checks == {"lemma4": "pass"}

    def test_deterministic_byte_identical(self):
        cfg = RunConfig(**SMALL_CFG)
        first = emit_report(scan_corpus(cfg), "json")
        second = emit_report(scan_corpus(cfg), "json")
        assert first == second
        first_csv = emit_report(scan_corpus(cfg), "csv")
        second_csv = emit_report(scan_corpus(cfg), "csv")
        assert first_csv == second_csv

    def test_cache_round_trip(self, tmp_path):
        cfg = RunConfig(cache_dir=str(tmp_path), **SMALL_CFG)
        fresh = scan_corpus(cfg)
        assert any(tmp_path.iterdir())
        cached = scan_corpus(cfg)
        assert emit_report(fresh, "json") == emit_report(cached, "json")
        no_cache = scan_corpus(RunConfig(**SMALL_CFG))
        assert emit_report(no_cache, "json") == emit_report(cached, "json")

    def test_extra_groups_are_analyzed(self, groups):
        cfg = RunConfig(max_order=8, primes=(2,), checks=("theorem",))
        reports = scan_corpus(cfg, extra_groups=[groups["M16"]])
        assert "M16" not in [r.group_id for r in reports]  # above the cap
        cfg2 = RunConfig(max_order=16, primes=(2,), checks=("theorem",))
        reports2 = scan_corpus(cfg2, extra_groups=[groups["M16"]])
        assert reports2[-1].group_id == "M16"


class TestEmission:
    def test_empty_csv_is_header_only(self):
        out = emit_report([], "csv")
        assert out.splitlines() == [
            "groupId,check,order,prime,class,rEqS,residualIso,expEq,all,"
            "autcentOrder,autZZOrder,innOrder,verdict"
        ]

    def test_json_round_trip(self, groups):
        rep = analyze_group(groups["D8"], ("theorem",))
        text = emit_report([rep], "json")
        doc = json.loads(text)
        entry = doc["reports"][0]
        assert entry["groupId"] == "D8"
        assert entry["conditionSide"]["all"] is True
        assert entry["oracleSide"]["autcentOrder"] == 4
        assert entry["lemmaChecks"] == {"theorem": "pass"}
        assert json.loads(emit_report([rep], "json")) == doc

    def test_csv_row_per_group_and_check(self, groups):
        reports = [
            analyze_group(groups["D8"], ("theorem", "cor1")),
            analyze_group(groups["C4"], ("theorem", "cor1")),
        ]
        lines = emit_report(reports, "csv").splitlines()
        assert len(lines) == 1 + 2 * 2
        assert lines[1].startswith("D8,cor1,8,2,2,True,True,True,True,4,4,4,pass")
        assert lines[4].endswith("not-applicable")

    def test_serialize_group_shape(self, groups):
        doc = serialize_group(groups["C2"])
        assert doc == {"name": "C2", "format": "cayley", "n": 2, "table": [[0, 1], [1, 0]]}


class TestCli:
    def test_analyze_catalog_name(self, capsys):
        rc = main(["analyze", "D8", "--check", "theorem", "--check", "cor1"])
        out = capsys.readouterr().out
        assert rc == 0
        doc = json.loads(out)
        assert doc["reports"][0]["groupId"] == "D8"
        assert doc["reports"][0]["verdict"] == "agree"

    def test_analyze_file(self, tmp_path, capsys, groups):
        path = tmp_path / "q8.json"
        path.write_text(group_file_text(groups["Q8"]))
        rc = main(["analyze", str(path), "--check", "lemma0a", "--format", "csv"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out.splitlines()[1].startswith("Q8,lemma0a,8,2,2")

    def test_analyze_unknown_is_error(self, capsys):
        rc = main(["analyze", "NoSuchThing"])
        assert rc == 2
        assert "neither" in capsys.readouterr().err

    def test_scan_small(self, capsys):
        rc = main(["scan", "--max-order", "8", "--prime", "2", "--check", "theorem"])
        out = capsys.readouterr().out
        assert rc == 0
        doc = json.loads(out)
        ids = [r["groupId"] for r in doc["reports"]]
        assert "D8" in ids and "Q8" in ids

    def test_sweep_lemma4(self, capsys):
        rc = main(["sweep-lemma4", "--prime", "2", "--max-exp", "3"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "verdict=agree" in out and "triples=" in out

    def test_list_catalog(self, capsys):
        rc = main(["list-catalog"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "D8xQ8" in out and "Heis5" in out

    def test_bad_group_file_reports_error(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{")
        rc = main(["analyze", str(path)])
        assert rc == 2
        assert "error" in capsys.readouterr().err
