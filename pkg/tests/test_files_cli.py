import json

import pytest

from ebugs import Colouring, CyclicWord
from ebugs.cli import run
from ebugs.files import ColouringFile, dumps, loads, read_colouring, write_colouring

FOUR_EBUGS = ["10111110", "01000001", "00110110", "00111001"]


def four_ebug_file(tmp_path, name="c.txt"):
    c = Colouring(2, 8, 5, [CyclicWord(w) for w in FOUR_EBUGS])
    path = tmp_path / name
    write_colouring(path, ColouringFile(c))
    return path


def test_dumps_loads_round_trip():
    c = Colouring(2, 8, 5, [CyclicWord(w) for w in FOUR_EBUGS])
    text = dumps(ColouringFile(c))
    assert text == "2 8 5 4\n10111110\n01000001\n00110110\n00111001\n"
    cf = loads(text)
    assert cf.mode is None
    assert dumps(cf) == text


def test_walks_mode_round_trip():
    c = Colouring(2, 6, 3, [CyclicWord("000000"), CyclicWord("010101")])
    text = dumps(ColouringFile(c, "walks"))
    assert text.startswith("# mode=walks\n")
    assert loads(text).mode == "walks"


def test_loads_errors():
    with pytest.raises(ValueError):
        loads("2 8 5 4\n10111110")  # no trailing newline
    with pytest.raises(ValueError):
        loads("2 8 5 4\n10111110\n")  # word count mismatch
    with pytest.raises(ValueError):
        loads("2 8 5\n")  # short header
    with pytest.raises(ValueError):
        loads("# only a comment\n")


def test_cli_gen_fkm(capsys):
    assert run(["gen", "fkm", "--q", "2", "--l", "3"]) == 0
    out = capsys.readouterr().out
    assert out == "2 8 3 1\n00010111\n"


def test_cli_gen_translate_fixture(tmp_path, capsys):
    out = tmp_path / "t.txt"
    code = run(["gen", "lfsr-translate", "--q", "3", "--l", "4",
                "--coeffs", "2,1,0", "--fixture", "-o", str(out)])
    assert code == 0
    cf = read_colouring(out)
    assert cf.colouring.n == 3 and cf.colouring.k == 27


def test_cli_gen_precondition_exit(capsys):
    assert run(["gen", "lfsr-translate", "--q", "2", "--l", "2"]) == 3
    assert "error" in capsys.readouterr().err


def test_cli_verify(tmp_path, capsys):
    path = four_ebug_file(tmp_path)
    assert run(["verify", "--file", str(path)]) == 0
    assert "valid=true" in capsys.readouterr().out

    # corrupt one symbol: validity must fail with exit 2 and a conflict
    text = path.read_text().replace("00111001", "00111000")
    bad = tmp_path / "bad.txt"
    bad.write_text(text)
    assert run(["verify", "--file", str(bad), "--json"]) == 2
    payload = json.loads(capsys.readouterr().out)
    assert payload["valid"] is False
    assert "conflict" in payload


def test_cli_verify_missing_file(capsys):
    assert run(["verify", "--file", "/nonexistent/x.txt"]) == 1


def test_cli_verify_walks(tmp_path, capsys):
    assert run(["gen", "walks", "--q", "2", "--k", "6", "--l", "3",
                "-o", str(tmp_path / "w.txt")]) == 0
    assert run(["verify", "--file", str(tmp_path / "w.txt")]) == 0


def test_cli_decode(tmp_path, capsys):
    path = four_ebug_file(tmp_path)
    assert run(["decode", "--file", str(path), "--window", "00101"]) == 0
    assert capsys.readouterr().out == "ebug=1 rotation=5\n"
    assert run(["decode", "--file", str(path), "--window", "001"]) == 2


def test_cli_bound(capsys):
    assert run(["bound", "--q", "4", "--k", "16", "--l", "6"]) == 0
    assert capsys.readouterr().out == "upper 256\nlower 8\n"


def test_cli_count(capsys):
    assert run(["count", "necklaces", "--q", "2", "--l", "4"]) == 0
    assert capsys.readouterr().out == "6\n"
    assert run(["count", "moreau", "--q", "2", "--l", "4"]) == 0
    assert capsys.readouterr().out == "3\n"
    assert run(["count", "debruijn", "--q", "2", "--l", "4"]) == 0
    assert capsys.readouterr().out == "16\n"
    assert run(["count", "debruijn", "--q", "4", "--l", "4"]) == 3  # overflow


def test_cli_combine_product(tmp_path, capsys):
    a = tmp_path / "a.txt"
    assert run(["gen", "fkm", "--q", "2", "--l", "3", "-o", str(a)]) == 0
    out = tmp_path / "p.txt"
    assert run(["combine", "product", "--a", str(a), "--b", str(a),
                "-o", str(out)]) == 0
    cf = read_colouring(out)
    assert (cf.colouring.q, cf.colouring.n) == (4, 8)


def test_cli_combine_interleave(tmp_path, capsys):
    a = tmp_path / "a.txt"
    assert run(["gen", "fkm", "--q", "2", "--l", "3", "-o", str(a)]) == 0
    assert run(["combine", "interleave", "--in", str(a), "--t", "2"]) == 0
    header = capsys.readouterr().out.splitlines()[0]
    assert header == "2 16 6 4"
    assert run(["combine", "interleave", "--in", str(a), "--t", "3"]) == 3


def test_cli_gen_list_k(capsys):
    assert run(["gen", "list-k", "--q", "2", "--l", "4"]) == 0
    assert capsys.readouterr().out == "5\n15\n"


def test_cli_search(capsys):
    assert run(["search", "--q", "2", "--k", "4", "--l", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["best_count"] == 2 and payload["exhausted"] is True
    assert run(["search", "--q", "2", "--k", "14", "--l", "7",
                "--budget", "0.002"]) == 4


def test_cli_export(capsys):
    assert run(["export", "dot", "--q", "2", "--l", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph") and '"00" -> "01"' in out
    assert run(["export", "dot-necklace", "--q", "2", "--l", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph") and '"001" -- "011"' in out


def test_cli_canonicalizes_by_default(capsys):
    assert run(["gen", "lfsr-db", "--q", "2", "--l", "3"]) == 0
    word = capsys.readouterr().out.splitlines()[1]
    assert word == min(word[i:] + word[:i] for i in range(len(word)))
