import io
import json

import pytest

from liepd.cli import main

FIN = {"field": "F2", "n": 1, "c": [], "m": 1, "act": [[["1"]]]}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_nf():
    assert run("nf", "[x2,x1]") == (0, "-1*[x1,x2]\n", "")
    assert run("nf", "[[x1,x2],x1]")[1] == "-1*[x1,[x1,x2]]\n"
    assert run("nf", "--pd", "[m1,m2]")[1] == "[x1,x2] + x1*y2 + -1*x2*y1\n"


@pytest.mark.parametrize("argv,code", [
    (("nf", "[x1,"), 1),
    (("nf", "[y1,y1]"), 2),
    (("rank", "--rep", "W(x1"), 1),
    (("check-hom", "no-such-file.json"), 3),
])
def test_exit_codes(argv, code):
    got, _, err = run(*argv)
    assert got == code and err


def test_rank_and_coproduct():
    assert run("rank", "--rep", "W(x1,x2;y1)")[1] == "2 1\n"
    code, out, _ = run("coproduct", "--rep", "W(x1;y1)", "--rep", "W(x1;y1)")
    assert code == 0 and out.splitlines()[0] == "W(x1,x2;y1,y2)"


def test_check_hom_files(tmp_path):
    good = write(tmp_path, "good.json", {"source": "W(x1;y1)", "target": "W(x1,x2;y1)",
                                         "phi": {"x1": "[x1,x2]"}, "psi": {"y1": "x2*y1"}})
    assert run("check-hom", good)[1].startswith("pass")
    fin = write(tmp_path, "fin.json", {"source": "W(x1;y1)", "target": FIN, "field": "F2",
                                       "phi": {"x1": [1]}, "psi": {"y1": [1]}})
    assert run("check-hom", fin, "--degree", "4")[1] == "pass (verified up to degree 4)\n"
    wrong_sort = write(tmp_path, "bad.json", {"source": "W(x1;y1)", "target": "W(x1;y1)",
                                              "phi": {"x1": "y1"}, "psi": {"y1": "y1"}})
    assert run("check-hom", wrong_sort)[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{\n  \"source\": ")
    assert run("check-hom", str(broken))[0] == 1


def test_functor_commands(tmp_path):
    hom = write(tmp_path, "hom.json", {"source": "W(x1;y1)", "target": "W(x1,x2;y1)",
                                       "phi": {"x1": "[x1,x2]"}, "psi": {"y1": "x2*y1"}})
    assert run("f-apply", "--hom", hom)[1].splitlines()[-1] == "m1 -> [x1,x2] + x2*y1"
    assert run("f-apply", "--rep", "W(x1;y1)")[1] == "F(W(x1;y1)) free on m1 = x1 + y1\n"
    pd = write(tmp_path, "pd.json", {"source": 1, "target": 2, "images": ["[m1,m2] + p(m2)"]})
    assert run("finv-apply", "--hom", pd)[1] == "x1 -> [x1,x2]\ny1 -> y2 + x1*y2 + -1*x2*y1\n"
    assert run("finv-apply", "--pd", "2")[1] == "W(x1,x2;y1,y2)\n"


def test_closure_command(tmp_path):
    fin = write(tmp_path, "fin.json", FIN)
    code, out, _ = run("closure", "--field", "F2", "--finrep", fin, "--rep", "W(x1;y1)", "--gens", "x1")
    assert code == 0
    assert out.splitlines()[:4] == ["solutions: 2", "closed: yes", "verified up to degree 3", "L: x1"]
    assert "finite-model oracle" in out
    h1 = write(tmp_path, "h1.json", {"source": "W(x1;y1)", "target": "W(x1;y1)", "field": "F2",
                                     "phi": {"x1": "x1"}, "psi": {"y1": "y1"}})
    h2 = write(tmp_path, "h2.json", {"source": "W(x1;y1)", "target": "W(x1;y1)", "field": "F2",
                                     "phi": {"x1": "0"}, "psi": {"y1": "y1 + x1*y1"}})
    code, out, _ = run("closure", "--field", "F2", "--finrep", fin, "--rep", "W(x1;y1)",
                       "--gens", "x1", "--beta", h1, h2)
    assert code == 0 and out.splitlines()[-1] == "beta: yes"
    code, _, _ = run("closure", "--field", "F3", "--finrep", fin, "--rep", "W(x1;y1)")
    assert code == 3


def test_budget_exceeded_exit_code(tmp_path):
    fin = write(tmp_path, "fin.json", FIN)
    code, _, err = run("closure", "--field", "F2", "--finrep", fin, "--rep", "W(x1,x2;y1)", "--budget", "4")
    assert code == 3 and "budget" in err


def test_word_classify_small_range():
    code, out, _ = run("word-classify", "--range", "1")
    assert code == 0
    survivors = [line for line in out.splitlines() if line.startswith("alpha=")]
    assert [line.split("\t")[0] for line in survivors] == ["alpha=-1", "alpha=1"]
    assert all(line.endswith("inner=yes") for line in survivors)
