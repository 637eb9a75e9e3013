import io
import json
import subprocess
import sys

import jsonschema
import pytest

from wordlab import cli
from wordlab.schemas import PAYLOADS, RUN_DOCUMENT, payload_schema


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def doc_of(*argv):
    code, out, err = call(*argv, "--no-timing")
    d = json.loads(out)
    jsonschema.validate(d, RUN_DOCUMENT)
    jsonschema.validate(d["payload"], payload_schema(d["kind"]))
    return code, d


def test_spec_examples():
    code, d = doc_of("rational", "--group", "S3", "--word", "[x1,x2]", "--mode", "full")
    assert code == 0 and d["payload"]["holds"] is True
    code, d = doc_of("verify", "ra", "--group", "A5", "--D", "5A", "--C", "5B", "--e", "2")
    p = d["payload"]
    assert code == 0 and p["N_brute"] == p["N_brute_e"] and p["holds"]
    code, _, err = call("group", "info", "NOSUCH")
    assert code == 2 and "error" in err


ALL_COMMANDS = [
    ("group_info", ["group", "info", "A5"]),
    ("group_list", ["group", "list"]),
    ("word_eval", ["word", "eval", "--group", "S3", "--word", "[x1,x2]", "--assign", "x1=(0 1)", "--assign", "x2=(1 2)"]),
    ("word_image", ["word", "image", "--group", "Q8", "--word", "x1^2"]),
    ("verbal_subgroup", ["word", "verbal", "--group", "S4", "--word", "[x1,x2]"]),
    ("rationality", ["rational", "--group", "D4", "--word", "x1^2 x2^2", "--mode", "weak"]),
    ("rationality", ["rational", "--group", "D4", "--word", "x1^2 x2^2", "--mode", "full"]),
    ("character_table", ["chartab", "--group", "PSL(2,7)", "--lift", "--mod-p"]),
    ("character_table", ["chartab", "--group", "C3", "--mod-p"]),
    ("triple_count", ["verify", "ra", "--group", "S4", "--D", "4A", "--C", "3A", "--e", "5"]),
    ("triple_count_sweep", ["verify", "ra", "--group", "SL(2,3)", "--all"]),
    ("corollary", ["verify", "corollary", "--exponents", "1,1", "--groups", "S3,S4,D4,Q8"]),
    ("concise", ["verify", "concise", "--group", "S3", "--word", "[x1,x2]", "--fam"]),
    ("power_closed", ["check", "power-closed", "--group", "A5", "--class-union", "1A,3A"]),
]


@pytest.mark.parametrize("kind, argv", ALL_COMMANDS)
def test_every_subcommand_json(kind, argv):
    code, d = doc_of(*argv)
    assert code == 0 and d["kind"] == kind
    assert d["command"] == argv + ["--no-timing"]


@pytest.mark.parametrize("kind, argv", ALL_COMMANDS)
def test_every_subcommand_table(kind, argv):
    code, out, _ = call(*argv, "--format", "table")
    assert code == 0 and out.strip()
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_every_payload_kind_emitted():
    assert {k for k, _ in ALL_COMMANDS} == set(PAYLOADS)


@pytest.mark.parametrize("kind, argv", ALL_COMMANDS[:6] + ALL_COMMANDS[9:10])
def test_deterministic_bytes(kind, argv):
    first = call(*argv, "--no-timing")[1]
    again = call(*argv, "--no-timing")[1]
    assert first == again


def test_jobs_do_not_change_payload():
    base = ["word", "image", "--group", "A5", "--word", "[x1,x2]", "--no-timing"]
    a = json.loads(call(*base)[1])
    b = json.loads(call(*base, "--jobs", "4")[1])
    assert a["payload"] == b["payload"]


def test_timing_present_by_default():
    d = json.loads(call("group", "list")[1])
    assert d["elapsed_s"] >= 0
    jsonschema.validate(d, RUN_DOCUMENT)


def test_false_verdicts_exit_one():
    code, d = doc_of("verify", "concise", "--group", "Q8", "--word", "[x1,x2]", "--fam")
    assert code == 1 and d["payload"]["fam_bound"]["holds"] is False
    code, d = doc_of("check", "power-closed", "--group", "A5", "--class-union", "1A,5A")
    assert code == 1 and d["payload"]["witness"]["e"] == 2
    code, out, _ = call("check", "power-closed", "--group", "A5", "--class-union", "1A,5A", "--format", "table")
    assert code == 1 and "witness" in out


def test_refusals_exit_three(monkeypatch):
    code, _, err = call("word", "image", "--group", "A5", "--word", "[x1,x2,x3,x4,x5]", "--budget", "1000")
    assert code == 3 and "refused" in err
    code, _, err = call("group", "info", "S5", "--cap", "100")
    assert code == 3
    code, _, _ = call("verify", "corollary", "--exponents", "1,1", "--groups", "S5", "--cap", "100")
    assert code == 3
    monkeypatch.setenv("WORDLAB_BUDGET", "10")
    code, _, _ = call("rational", "--group", "S3", "--word", "[x1,x2]")
    assert code == 3


@pytest.mark.parametrize("argv", [
    ["rational", "--group", "S3", "--word", "[x1,"],
    ["rational", "--group", "S3"],
    ["rational", "--word", "x1"],
    ["rational", "--group", "S3", "--gens-file", "x", "--word", "x1"],
    ["word", "eval", "--group", "S3", "--word", "x1 x2", "--assign", "x1=0"],
    ["word", "eval", "--group", "S3", "--word", "x1", "--assign", "x1"],
    ["word", "eval", "--group", "S3", "--word", "x1", "--assign", "x1=(0 5)"],
    ["verify", "ra", "--group", "S3", "--D", "3A"],
    ["verify", "ra", "--group", "S3", "--D", "9Z", "--C", "3A", "--e", "5"],
    ["verify", "ra", "--group", "A5", "--D", "2A", "--C", "5A", "--e", "2"],
    ["verify", "corollary", "--exponents", "a,b"],
    ["verify", "corollary", "--exponents", "1,1", "--groups", "NOPE"],
    ["verify", "concise", "--group", "S3", "--word", "x1^2", "--fam"],
    ["check", "power-closed", "--group", "A5", "--class-union", "7Q"],
    ["group", "info"],
    ["frobnicate"],
])
def test_usage_errors_exit_two(argv):
    assert call(*argv)[0] == 2


def test_gens_file(tmp_path):
    f = tmp_path / "s3.txt"
    f.write_text("# S3 on three points\n(0 1)\n\n(0 1 2)\n")
    code, d = doc_of("group", "info", "--gens-file", str(f))
    assert code == 0 and d["payload"]["order"] == 6
    code, d = doc_of("rational", "--gens-file", str(f), "--word", "[x1,x2]")
    assert code == 0 and d["payload"]["holds"]
    code, d = doc_of("chartab", "--gens-file", str(f))
    assert sorted(d["payload"]["degrees"]) == [1, 1, 2]


def test_verify_ra_table_mentions_effective_exponent():
    code, out, _ = call("verify", "ra", "--group", "A5", "--D", "5A", "--C", "5B", "--e", "2", "--format", "table")
    assert code == 0 and "acting as 17" in out and out.strip().endswith("PASS")


def test_concise_table_lines():
    code, out, _ = call("verify", "concise", "--group", "S3", "--word", "[x1,x2]", "--format", "table")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("S3")
    assert all(line.rstrip().endswith(("PASS", "FAIL", "info")) for line in lines[1:])


def test_version_and_help():
    assert call("--version")[0] == 0
    assert call("--help")[0] == 0


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "wordlab.cli", "group", "list", "--format", "table"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "PSL(2,7)" in r.stdout
