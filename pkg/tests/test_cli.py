import io
import json

from weilsieve import cli


def _run(argv):
    sink = io.StringIO()
    parser = cli.build_parser()
    args = parser.parse_args(argv)
    code = cli.run(args, sink)
    return code, sink.getvalue()


def test_single_candidate_text():
    code, out = _run(["--q", "8", "--h", "57,102,58,13,1"])
    assert code == cli.EXIT_OK
    assert "verdict: ELIMINATED" in out
    assert "pp_ordinary_simple: no_pp" in out


def test_single_candidate_jsonlines():
    code, out = _run(["--q", "8", "--h", "57,102,58,13,1",
                      "--format", "jsonlines"])
    assert code == cli.EXIT_OK
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 1
    row = rows[0]
    assert row["q"] == 8 and row["g"] == 4
    assert row["h"] == [57, 102, 58, 13, 1]
    assert row["verdict"] == "ELIMINATED"
    names = [t["name"] for t in row["tests"]]
    assert names[-1] == "pp_ordinary_simple"
    assert row["tests"][-1]["status"] == "no_pp"
    assert row["tests"][-1]["certificate"]["norm"] == 39601


def test_batch_run_and_summary():
    code, out = _run(["--q", "2", "--g", "2", "--defect", "1"])
    assert code == cli.EXIT_OK
    assert "candidates:" in out.splitlines()[-1]


def test_jsonlines_reruns_are_byte_identical():
    argv = ["--q", "2", "--g", "2", "--format", "jsonlines"]
    _, first = _run(argv)
    _, second = _run(argv)
    assert first == second
    for line in first.splitlines():
        json.loads(line)


def test_test_subset_selection():
    code, out = _run(["--q", "8", "--h", "57,102,58,13,1",
                      "--tests", "nonneg_places,resultant1",
                      "--format", "jsonlines"])
    assert code == cli.EXIT_OK
    row = json.loads(out.splitlines()[0])
    assert {t["name"] for t in row["tests"]} <= {"nonneg_places", "resultant1"}
    assert row["verdict"] != "ELIMINATED"


def test_usage_errors():
    assert _run(["--q", "6", "--g", "2"])[0] == cli.EXIT_USAGE
    assert _run(["--q", "2", "--g", "2", "--tests", "bogus"])[0] == \
        cli.EXIT_USAGE
    assert _run(["--q", "2", "--h", "1,2,banana"])[0] == cli.EXIT_USAGE
    assert _run(["--q", "2"])[0] == cli.EXIT_USAGE
    assert _run(["--q", "2", "--g", "0"])[0] == cli.EXIT_USAGE
    assert _run(["--q", "2", "--h=-3,1"])[0] == cli.EXIT_USAGE
    # Contradictory constraints: 4 points at q=2, g=2 implies defect 3.
    assert _run(["--q", "2", "--g", "2", "--points", "4",
                 "--defect", "1"])[0] == cli.EXIT_USAGE


def test_main_argv_handling(tmp_path):
    out_path = tmp_path / "report.jsonl"
    code = cli.main(["--q", "2", "--g", "1", "--format", "jsonlines",
                     "--out", str(out_path)])
    assert code == cli.EXIT_OK
    rows = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert len(rows) == 5
    assert cli.main(["--q", "2", "--nonsense"]) == cli.EXIT_USAGE
