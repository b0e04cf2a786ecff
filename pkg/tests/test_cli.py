import json
import pathlib

import pytest

from ratdyn.cli import parse_map, run
from ratdyn.dynamics import KBMap, QuadraticMap
from ratdyn.errors import DomainError

GOLDEN = pathlib.Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "orbit_quad_c-13_p3.json": ["orbit", "--map", "quad:c=-13", "--point", "3"],
    "orbit_kb_24-7_p3.json": ["orbit", "--map", "kb:k=24/7,b=-300/7", "--point", "3"],
    "period_kb_43_p2.json": ["period", "--map", "kb:k=4/3,b=-10/3", "--point", "2"],
    "dynatomic_quad_c-3_n2.json": ["dynatomic", "--map", "quad:c=-3", "--n", "2"],
    "dynatomic_kb_factor4.json": [
        "dynatomic", "--map", "kb:k=1,b=1", "--n", "4", "--which", "factor4",
    ],
    "classify_quad_c-29-16.json": ["classify", "--map", "quad:c=-29/16"],
    "classify_kb_43.json": ["classify", "--map", "kb:k=4/3,b=-10/3"],
    "family_fixed_p32.json": [
        "family", "--kind", "fixed", "--p", "3/2", "--n", "1", "--q", "1",
    ],
    "family_period3_tau1.json": [
        "family", "--kind", "period3", "--tau", "1", "--i", "2", "--n", "1", "--q", "16",
    ],
    "family_kbpair_row3.json": [
        "family", "--kind", "kbpair", "--row", "3", "--p", "3/5", "--s1", "2", "--s2", "1/3",
    ],
    "family_intersect_mixed_p3.json": [
        "family", "--kind", "intersect-mixed", "--p", "3", "--sign", "1",
    ],
    "intersect_c-13.json": [
        "intersect", "--map1", "quad:c=-13", "--map2", "kb:k=24/7,b=-300/7", "--point", "3",
    ],
    "shared_q101-40.json": ["shared", "--q", "101/40"],
    "simul_a1_b2.json": ["simul", "--a", "1", "--b", "2"],
    "simul_a1_b-1.json": ["simul", "--a", "1", "--b", "-1"],
    "scan_kb_h3.json": [
        "scan", "--kind", "kb", "--height-k", "3", "--height-b", "3",
        "--height-point", "20", "--periods", "1,2",
    ],
    "quartic_curve1_h50.json": ["quartic", "--coeffs", "1,6,7,2,1", "--height", "50"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_outputs_frozen(name):
    code, out = run(GOLDEN_CASES[name])
    assert code == 0
    assert out + "\n" == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_json_round_trips_bytes(name):
    code, out = run(GOLDEN_CASES[name])
    assert code == 0
    reparsed = json.dumps(json.loads(out), sort_keys=True, separators=(",", ":"))
    assert reparsed == out


def test_parse_map():
    assert parse_map("quad:c=-13") == QuadraticMap(-13)
    m = parse_map("kb:k=24/7,b=-300/7")
    assert isinstance(m, KBMap)
    for bad in ["quad:", "kb:k=1", "z^2+c", "quad:c=1.5", "kb:b=1,k=1"]:
        with pytest.raises(DomainError):
            parse_map(bad)


def test_exit_codes():
    code, out = run(["family", "--kind", "fixed", "--p", "0", "--n", "1", "--q", "1"])
    assert code == 1 and out == "parameter excluded: p=0"
    code, _ = run(["nonsense"])
    assert code == 2
    code, _ = run(["orbit", "--map", "quad:c=-13"])  # missing --point
    assert code == 2
    code, _ = run(["orbit", "--map", "quad:c=-13", "--point", "3", "--bad-flag", "1"])
    assert code == 2
    code, _ = run(["--help"])
    assert code == 0
    code, out = run(["intersect", "--map1", "quad:c=0", "--map2", "kb:k=1,b=1", "--point", "2"])
    assert code == 1 and "not a common periodic point" in out


def test_domain_error_for_degenerate_kb():
    code, out = run(["orbit", "--map", "kb:k=0,b=1", "--point", "3"])
    assert code == 1 and "parameter excluded" in out


def test_table_format():
    code, out = run(["classify", "--map", "quad:c=-3", "--format", "table"])
    assert code == 0 and "points" in out
    code, out = run(["orbit", "--map", "quad:c=-13", "--point", "3", "--format", "table"])
    assert code == 0 and "periodic" in out


def test_scan_csv_format():
    code, out = run(
        ["scan", "--kind", "kb", "--height-k", "2", "--height-b", "2",
         "--height-point", "10", "--periods", "1", "--format", "csv"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "scan_kind,map,point,period"


def test_scan_worker_flag_byte_identical():
    base = ["scan", "--kind", "kb", "--height-k", "3", "--height-b", "3",
            "--height-point", "20", "--periods", "1,2,4"]
    code1, out1 = run(base + ["--workers", "1"])
    code8, out8 = run(base + ["--workers", "8"])
    assert code1 == code8 == 0
    assert out1 == out8


def test_config_file_supplies_scan_bounds(tmp_path):
    cfg = tmp_path / "scan.cfg"
    cfg.write_text("height_k = 2\nheight_b = 2\nheight_point = 10\n# comment\n")
    code, out = run(["scan", "--kind", "kb", "--periods", "1", "--config", str(cfg)])
    assert code == 0
    data = json.loads(out)
    assert data["parameter_box"] == {"height_k": 2, "height_b": 2, "height_point": 10}
    # flags override the file
    code, out = run(
        ["scan", "--kind", "kb", "--periods", "1", "--config", str(cfg), "--height-k", "3"]
    )
    assert json.loads(out)["parameter_box"]["height_k"] == 3


def test_quartic_csv():
    code, out = run(["quartic", "--coeffs", "1,6,7,2,1", "--height", "20", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[0] == "tau,y"
    assert "0,1" in out.splitlines()


def test_orbit_inf_point():
    code, out = run(["orbit", "--map", "kb:k=2,b=3", "--point", "inf"])
    assert code == 0
    data = json.loads(out)
    assert data["cycle"] == ["inf"]


def test_orbit_zero_point_kb_goes_to_infinity():
    code, out = run(["orbit", "--map", "kb:k=2,b=3", "--point", "0"])
    assert code == 0
    data = json.loads(out)
    assert data["tail"] == ["0"] and data["cycle"] == ["inf"]
