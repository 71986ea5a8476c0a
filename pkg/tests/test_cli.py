import json

import pytest

from genusone.cli import main
from genusone.exact_linalg import FgAbelianGroup, group_from_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sl2z_single_values(capsys):
    code, out, _ = run(capsys, "sl2z", "--k", "0", "--p", "2")
    assert code == 0 and out.strip() == "Z/12"
    code, out, _ = run(capsys, "sl2z", "--k", "2", "--p", "1")
    assert code == 0 and out.strip() == "Z + Z/2"
    code, out, _ = run(capsys, "sl2z", "--k", "0", "--p", "0")
    assert code == 0 and out.strip() == "Z"


def test_sl2z_mod_and_invert(capsys):
    code, out, _ = run(capsys, "sl2z", "--k", "2", "--p", "1", "--mod", "2")
    assert code == 0 and out.strip() == "Z/2 + Z/2"
    code, out, _ = run(capsys, "sl2z", "--k", "4", "--p", "1",
                       "--invert", "2")
    assert code == 0 and out.strip() == "Z[1/2] + Z/3"
    code, out, _ = run(capsys, "sl2z", "--k", "4", "--p", "1",
                       "--invert", "2", "--invert", "3")
    assert code == 0 and out.strip() == "Z[1/6]"


def test_sl2z_json_round_trip(capsys):
    code, out, _ = run(capsys, "sl2z", "--k", "4", "--p", "1",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 4 and payload["p"] == 1
    assert group_from_json(payload["group"]) == FgAbelianGroup(1, [12])


def test_sl2z_usage_errors(capsys):
    code, _, err = run(capsys, "sl2z", "--k", "-1", "--p", "0")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "sl2z", "--k", "1", "--p", "1", "--mod", "6")
    assert code == 2 and "error:" in err


def test_table_sl2z_markdown(capsys):
    code, out, _ = run(capsys, "table", "sl2z", "--max-k", "2", "--max-p", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("| k \\ p |")
    assert len(lines) == 5
    assert lines[2].startswith("| Sym^0 | Z |")


def test_table_moduli_markdown_two_rows(capsys):
    code, out, _ = run(capsys, "table", "moduli")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert lines[2].startswith("| pointed space |")
    assert lines[3].startswith("| complement |")
    assert "Z/12" in lines[2]


def test_table_moduli_half_inverts_two(capsys):
    code, out, _ = run(capsys, "table", "moduli-half", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,Z[1/2] cohomology"
    assert len(lines) == 11
    assert lines[10].startswith("9,Z[1/2] + Z/3")
    assert all("Z/2 " not in line and not line.endswith("Z/2")
               for line in lines[1:])


def test_table_moduli_beyond_the_proved_range(capsys):
    code, _, err = run(capsys, "table", "moduli", "--max-n", "10")
    assert code == 2
    assert "degeneration unproven beyond degree 9" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "torsor")
    assert code == 0
    assert out.startswith("suite: torsor\nseed: 0\n")
    assert "[pass]" in out and "[FAIL]" not in out
    code, out, _ = run(capsys, "verify", "tables")
    assert code == 1
    assert out.count("[FAIL]") == 2
    assert "1/3 checks passed" in out


def test_verify_unknown_suite_is_a_parse_error(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])
    capsys.readouterr()


def test_torsor_demo_is_deterministic(capsys):
    code, first, _ = run(capsys, "torsor", "demo")
    assert code == 0
    code, second, _ = run(capsys, "torsor", "demo")
    assert first == second
    assert "cycle type (4,)" in first
    assert "order-2 H^1" in first


def test_cocycles_output(capsys):
    code, out, _ = run(capsys, "cocycles")
    assert code == 0
    assert "group of order 96" in out
    assert "H^1 dimension over F_2: 1" in out


def test_out_writes_a_file(tmp_path, capsys):
    target = tmp_path / "group.txt"
    code = main(["sl2z", "--k", "0", "--p", "2", "--out", str(target)])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == ""
    assert target.read_text(encoding="utf-8") == "Z/12\n"
