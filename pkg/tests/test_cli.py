import io
import json
import subprocess
import sys

import pytest

from mpolykit.cli import run


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv, out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def gen(*params):
    code, out, _ = call(["gen", *params])
    assert code == 0
    return out


def test_gen_d2_pipe_mpoly():
    code, out, _ = call(["mpoly", "-"], gen("D", "2"))
    assert (code, out) == (0, "6 x^2 y^2 + 8 x^2 y^4 + 2 x^4 y^4\n")


def test_gen_lattice_pipe_mpoly():
    assert call(["mpoly", "-"], gen("G", "3", "4"))[1] == "12 x^2 y^2 + 52 x^2 y^3 + 157 x^3 y^3\n"


def test_index_both(tmp_path):
    f = tmp_path / "d2.txt"
    f.write_text(gen("D", "2"))
    code, out, _ = call(["index", str(f), "--index", "symmetric_division", "--method", "both"])
    assert (code, out) == (0, "36 (direct) = 36 (operator)\n")


def test_index_alpha_and_decimal():
    code, out, _ = call(["index", "-", "--index", "randic_inverse_general", "--alpha", "2", "--decimal", "3"],
                        gen("C", "1"))
    assert (code, out) == (0, "0.250\n")
    # closed form 13/2 * 3 - 11/14
    assert call(["index", "-", "--index", "harmonic", "--method", "operator"], gen("E", "3"))[1] == "131/7\n"


def cycle_text(n):
    return "".join(f"{i} {(i + 1) % n}\n" for i in range(n))


def test_decimal_rounds_half_even():
    # harmonic index of C_n is n/2, an exact tie for odd n
    assert call(["index", "-", "--index", "harmonic"], cycle_text(5))[1] == "5/2\n"
    assert call(["index", "-", "--index", "harmonic", "--decimal", "0"], cycle_text(5))[1] == "2\n"
    assert call(["index", "-", "--index", "harmonic", "--decimal", "0"], cycle_text(7))[1] == "4\n"
    assert call(["index", "-", "--index", "harmonic", "--decimal", "2"], cycle_text(7))[1] == "3.50\n"


def test_index_json():
    code, out, _ = call(["index", "-", "--index", "zagreb1", "--method", "both", "--json"], gen("D", "2"))
    assert json.loads(out) == {"index": "zagreb1", "direct": "88", "operator": "88", "agree": True}


def test_mpoly_json():
    payload = json.loads(call(["mpoly", "-", "--json"], "0 1\n")[1])
    assert payload["mpoly"] == [{"i": 1, "j": 1, "coeff": "1"}]
    assert payload["edges"] == 1


def test_gen_out_file(tmp_path):
    f = tmp_path / "g.txt"
    assert call(["gen", "E", "2", "--out", str(f)])[0] == 0
    assert call(["mpoly", str(f)])[1] == "6 x^2 y^2 + 4 x^2 y^3 + 2 x^2 y^4 + 2 x^3 y^4\n"


def test_gen_json():
    payload = json.loads(call(["gen", "D", "1", "--json"])[1])
    assert payload["edges"] == [[0, 1], [0, 3], [1, 2], [2, 3]]


def test_output_deterministic():
    assert gen("G", "2", "3") == gen("G", "2", "3")
    assert call(["verify", "--max-n", "3", "--max-pq", "2"]) == call(["verify", "--max-n", "3", "--max-pq", "2"])


def test_table2():
    code, out, _ = call(["table2", "D", "2"])
    assert code == 0
    assert "zagreb1" in out and "formula 88  graph 88  match" in out
    code, out, _ = call(["table2", "E", "2", "--json"])
    rows = {r["index"]: r for r in json.loads(out)["rows"]}
    assert code == 1 and rows["zagreb1"]["match"] and not rows["zagreb2"]["match"]


def test_gutman_text():
    code, out, _ = call(["gutman", "-"], "m22 = 12\nn2 = 38\nf = 63\neuler on\n"
                        "n1 = 0\nn4 = 0\nm11 = 0\nm12 = 0\nm13 = 0\nm14 = 0\nm24 = 0\nm34 = 0\nm44 = 0\n")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "status: unique"
    assert {"m23 = 52", "n3 = 122", "m33 = 157"} <= set(lines)


def test_verify_passes():
    code, out, _ = call(["verify", "--max-n", "4", "--max-pq", "3"])
    assert code == 0
    assert "FAIL" not in out
    assert "E_2 (informational)" in out


@pytest.mark.parametrize("argv,stdin,code", [
    (["mpoly", "-"], "0 0\n", 2),
    (["mpoly", "-"], "0 1\n1 0\n", 2),
    (["mpoly", "/nonexistent/file"], "", 2),
    (["index", "-", "--index", "nope"], "0 1\n", 2),
    (["index", "-", "--index", "zagreb1", "--alpha", "2"], "0 1\n", 2),
    (["index", "-", "--index", "augmented_zagreb"], "0 1\n", 3),
    (["index", "-", "--index", "augmented_zagreb", "--method", "operator"], "0 1\n", 3),
    (["gen", "D", "0"], "", 2),
    (["gen", "G", "3"], "", 2),
    (["gen", "X", "3"], "", 2),
    (["table2", "D", "1"], "", 2),
    (["gutman", "-"], "euler sometimes\n", 2),
    ([], "", 2),
])
def test_exit_codes(argv, stdin, code, capsys):
    try:
        got = call(argv, stdin)[0]
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_error_message_is_one_line():
    code, out, err = call(["index", "-", "--index", "augmented_zagreb"], "0 1\n")
    assert code == 3 and out == "" and err.count("\n") == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mpolykit", "gen", "C", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("# C_2\n")
