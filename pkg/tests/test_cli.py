import json

import pytest

from gstower.cli import main
from gstower.cohomology import Verdict, replay_certificate
from gstower.report import certificate_from_dict, certificate_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_certified(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "2", "--e", "32", "--f", "1", "--g", "17", "--no-timing")
    rep = json.loads(out)
    assert code == 0
    res = rep["results"]
    assert res["verdict"] == "InfiniteByCutting" and res["d"] == 289 and res["r"] == 9553
    assert res["t0"] == {"num": "289", "den": "19106"}
    assert "timingMs" not in rep
    assert replay_certificate(certificate_from_dict(res)) is Verdict.INFINITE_BY_CUTTING


def test_analyze_inconclusive_exit_2(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "3", "--e", "2", "--f", "1", "--g", "1")
    assert code == 2 and json.loads(out)["results"]["verdict"] == "Inconclusive"


def test_analyze_even_degree_two_places(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "2", "--e", "1", "--f", "1", "--g", "2")
    assert code == 2


def test_analyze_odd_degree_usage_error(capsys):
    code, out, err = run(capsys, "analyze", "--p", "2", "--e", "1", "--f", "1", "--g", "3")
    assert code == 1 and out == "" and "odd" in err


def test_analyze_missing_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--p", "2", "--e", "1"])
    assert exc.value.code == 1


def test_hminus(capsys):
    code, out, _ = run(capsys, "hminus", "--p", "2", "--s", "6", "--threads", "1")
    assert code == 0 and json.loads(out)["results"]["hMinus"] == 17


def test_hminus_oracle(capsys):
    code, out, _ = run(capsys, "hminus", "--p", "23", "--s", "1", "--oracle", "--threads", "1")
    res = json.loads(out)["results"]
    assert code == 0 and res["hMinus"] == 3 and res["oracleAgrees"] is True


def test_hminus_threads(capsys):
    code, out, _ = run(capsys, "hminus", "--p", "5", "--s", "3", "--threads", "2", "--no-timing")
    assert code == 0 and json.loads(out)["results"]["hMinus"] == 57708445601


def test_hminus_bad_modulus(capsys):
    code, _, err = run(capsys, "hminus", "--p", "2", "--s", "1")
    assert code == 1 and err


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "--rows", "2:6,3:4,5:3,29:1,7:2", "--threads", "1", "--no-timing")
    rows = json.loads(out)["results"]["rows"]
    assert code == 0
    assert [r["hMinus"] for r in rows[:3]] == [17, 2593, 57708445601]
    assert all(r["matches"] and r["certificate"]["verdict"] == "InfiniteByCutting" for r in rows)
    assert rows[3]["hMinus"] >= 8 and rows[4]["hMinus"] >= 43
    for r in rows:
        replay_certificate(certificate_from_dict(r["certificate"]))


def test_table_skip_slow_filters(capsys):
    code, out, _ = run(capsys, "table", "--rows", "2:6,17:2", "--skip-slow", "--threads", "1")
    assert [r["modulus"] for r in json.loads(out)["results"]["rows"]] == [64]


def test_table_bad_row(capsys):
    code, _, _ = run(capsys, "table", "--rows", "6:1")
    assert code == 1


def test_shanks_json_and_csv(capsys):
    code, out, _ = run(capsys, "shanks", "--a-min", "17279", "--a-max", "17279")
    (rec,) = json.loads(out)["results"]
    assert code == 0 and rec["p"] == 298615687 and int(rec["discriminant"]) == 298615687**2
    assert rec["discriminantIsPSquared"]
    code, out, _ = run(capsys, "shanks", "--a-min", "1", "--a-max", "10", "--csv")
    lines = out.strip().splitlines()
    assert lines[0].startswith("a,p,") and [int(l.split(",")[0]) for l in lines[1:]] == [1, 2, 4, 7, 8, 10]


def test_shanks_inverted(capsys):
    code, _, _ = run(capsys, "shanks", "--a-min", "5", "--a-max", "3")
    assert code == 1


def test_csv_only_for_shanks(capsys):
    code, _, _ = run(capsys, "hminus", "--p", "3", "--s", "1", "--csv")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["analyze", "--p", "2", "--e", "32", "--f", "1", "--g", "17"],
    ["table", "--rows", "2:6,3:4", "--threads", "1"],
    ["table", "--rows", "2:6,3:4", "--threads", "2"],
    ["shanks", "--a-min", "1", "--a-max", "50"],
])
def test_deterministic_output(capsys, argv):
    _, first, _ = run(capsys, *argv, "--no-timing")
    _, second, _ = run(capsys, *argv, "--no-timing")
    assert first == second
    assert json.dumps(json.loads(first), sort_keys=True, indent=2, ensure_ascii=False) == first.rstrip("\n")


def test_certificate_dict_round_trip():
    from gstower.cohomology import FieldParams, analyze_tower

    cert = analyze_tower(FieldParams(p=5, e=100, f=1, g=57708445601))
    d = certificate_to_dict(cert)
    assert d["params"]["g"] == 57708445601
    assert certificate_to_dict(certificate_from_dict(json.loads(json.dumps(d)))) == d


def test_exact_threshold_flag(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "2", "--e", "1", "--f", "1", "--g", "8",
                       "--exact-threshold", "1", "--no-timing")
    res = json.loads(out)["results"]
    assert code == 0 and res["cutLevelK"] == 2 and res["exactThreshold"] == 2
