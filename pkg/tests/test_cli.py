import io
import json
import subprocess
import sys

import pytest

from combclass.cli import BIJECTIONS, CLASSES, main

INVERSES = [("stol", "ltos"), ("jtoseq", "seqtoj"), ("rtof", "ftor"), ("jtof", "ftoj")]


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), stdout=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def enumerate_text(cls, n):
    code, text = run("enumerate", cls, "--n", str(n))
    assert code == 0
    return text


class TestCount:
    def test_catalan(self):
        assert run("count", "R", "--n", "7") == (0, "2162160\n")

    def test_json(self):
        code, text = run("count", "windmill", "--n", "4", "--format", "json")
        assert json.loads(text) == ["0", "1", "2", "9", "68"]

    @pytest.mark.parametrize("cls", CLASSES)
    @pytest.mark.parametrize("n", range(1, 5))
    def test_count_matches_enumerate(self, cls, n):
        code, text = run("count", cls, "--n", str(n))
        assert int(text) == len(enumerate_text(cls, n).splitlines())

    def test_unknown_class(self):
        with pytest.raises(SystemExit) as info:
            run("count", "zzz", "--n", "3")
        assert info.value.code == 2


class TestEnumerate:
    def test_deterministic(self):
        assert enumerate_text("cp", 4) == enumerate_text("cp", 4)

    def test_json_array(self):
        code, text = run("enumerate", "op", "--n", "2", "--format", "json")
        assert json.loads(text) == [[[1, 2]], [[1], [2]], [[2], [1]]]

    def test_cap(self, monkeypatch):
        assert run("enumerate", "op", "--n", "7")[0] == 2
        monkeypatch.setenv("COMBCLASS_MAX_N", "1")
        assert run("enumerate", "op", "--n", "2")[0] == 2
        assert run("enumerate", "op", "--n", "2", "--force")[0] == 0
        monkeypatch.setenv("COMBCLASS_MAX_N", "x")
        assert run("enumerate", "op", "--n", "1")[0] == 2


class TestMap:
    @pytest.mark.parametrize("forward, backward", INVERSES + [(b, a) for a, b in INVERSES])
    def test_inverse_pairs(self, forward, backward):
        kind = BIJECTIONS[forward][0]
        if kind == "seq":
            _, text = run("map", "jtoseq", stdin=enumerate_text("jewellery", 4))
        else:
            text = enumerate_text(kind, 4)
        code, mid = run("map", forward, stdin=text)
        assert code == 0
        code, back = run("map", backward, stdin=mid)
        assert code == 0 and back == text

    def test_malformed(self):
        assert run("map", "ltos", stdin="[[1],[1]]\n")[0] == 2
        assert run("map", "ltos", stdin="not json\n")[0] == 2

    def test_worked_example(self):
        code, out = run("map", "ltos", stdin="[[8,12],[2,5],[10],[11],[1,3,4],[7,9],[6]]\n")
        assert json.loads(out) == [
            {"cyc": [[1, 3, 4], [7, 9], [6]]},
            {"cyc": [[2, 5], [10], [11]]},
            {"cyc": [[8, 12]]},
        ]


class TestEval:
    def test_plain(self):
        assert run("eval", "Seq(Set(X)+)", "--order", "5", "--format", "plain") == (0, "1 1 3 13 75 541\n")

    def test_json(self):
        code, text = run("eval", "Set(Set(X)+)", "--order", "4")
        assert json.loads(text) == ["1", "1", "2", "5", "15"]

    def test_parse_error(self, capsys):
        code, _ = run("eval", "Seq(Set(X)")
        assert code == 2
        assert "11" in capsys.readouterr().err


class TestLyndon:
    def test_string(self):
        assert run("lyndon", "ababbababaaababa") == (0, "ababb.ab.ab.aaabab.a\n")

    def test_json_word(self):
        assert run("lyndon", "[8,2,10,11,1,7,6]") == (0, "[[8],[2,10,11],[1,7,6]]\n")

    def test_json_format(self):
        code, text = run("lyndon", "abab", "--format", "json")
        assert json.loads(text) == [["a", "b"], ["a", "b"]]

    def test_bad_json(self):
        assert run("lyndon", "[1,2")[0] == 2


class TestVerify:
    def test_all_passes(self):
        code, text = run("verify", "--suite", "all", "--max-n", "5")
        assert code == 0
        assert "FAIL" not in text
        assert "NOTE" in text

    def test_single_suite(self):
        code, text = run("verify", "--suite", "lyndon", "--max-n", "4")
        assert code == 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "combclass", "count", "r", "--n", "7"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "2162160\n"
