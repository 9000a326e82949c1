import json

from nonarch.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_eval_norm_disc_radius(tmp_path, capsys):
    form = write(tmp_path, "disc-dT.json", {"l": 1, "m": 1, "entries": [{"e": [[1]], "coeff": "t1"}]})
    code, out, err = invoke(
        capsys, "eval-norm", "--field", "piadic-q", "--n", "1", "--point", "1", "--form", form
    )
    assert code == 0, err
    doc = json.loads(out)
    assert doc["value"] == {"num": 1, "den": 1}
    assert doc["certificate"] == "tame"
    assert doc["seminorm"] == "geometric-kahler"


def test_eval_norm_translated_chart(tmp_path, capsys):
    form = write(tmp_path, "form.json", {"l": 1, "m": 1, "entries": [{"e": [[1]], "coeff": "1"}]})
    chart = write(tmp_path, "chart.json", {"substitutions": ["1+s1"]})
    code, out, _ = invoke(
        capsys, "eval-norm", "--field", "piadic-q", "--n", "1", "--point", "1",
        "--form", form, "--chart", chart,
    )
    assert code == 0
    assert json.loads(out)["value"] == {"num": 1, "den": 1}


def test_max_locus_constant_form(tmp_path, capsys):
    form = write(tmp_path, "const.json", {"l": 2, "m": 1, "entries": [{"e": [[1, 2]], "coeff": "1"}]})
    # --n is inferred from the skeleton spec
    code, out, _ = invoke(
        capsys, "max-locus", "--field", "piadic-q", "--semistable", "2,2", "--form", form,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["m_star"] == {"num": 0, "den": 1}
    assert len(doc["locus"]) == 1
    face = doc["locus"][0]
    assert face["tight"] == []
    assert len(face["vertices"]) == 3


def test_weight_compare(capsys):
    code, out, _ = invoke(
        capsys, "weight-compare", "--field", "padic:3", "--n", "1", "--kummer", "1:2", "--m", "1"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "wt": {"num": 1, "den": 1},
        "omega": {"num": 0, "den": 1},
        "delta_log": {"num": 0, "den": 1},
        "holds": True,
    }


def test_smith_content_index_adic(tmp_path, capsys):
    matrix = write(tmp_path, "m.json", {"entries": [["2", "1"], ["4", "8"]]})
    code, out, _ = invoke(capsys, "smith", "--field", "padic:2", "--matrix", matrix)
    assert code == 0
    assert json.loads(out) == {"divisors": [{"num": 0, "den": 1}, {"num": 2, "den": 1}], "free_rank": 0}

    diag = write(tmp_path, "d.json", {"entries": [["2", "0"], ["0", "4"]]})
    code, out, _ = invoke(capsys, "content", "--field", "padic:2", "--matrix", diag)
    assert json.loads(out) == {"content": {"num": 3, "den": 1}}

    pair = write(tmp_path, "ml.json", {"M": [["1", "0"], ["0", "1"]], "L": [["2", "0"], ["0", "2"]]})
    code, out, _ = invoke(capsys, "index", "--field", "padic:2", "--matrix", pair)
    assert json.loads(out) == {"index": {"num": -2, "den": 1}}

    adic = write(tmp_path, "a.json", {"divisors": ["2"], "free_rank": 0, "coords": ["2"]})
    code, out, _ = invoke(capsys, "adic", "--field", "padic:2", "--matrix", adic)
    assert json.loads(out) == {"value": {"num": 1, "den": 1}}

    adic_inf = write(tmp_path, "ai.json", {"divisors": ["2"], "free_rank": 0, "coords": ["4"]})
    code, out, _ = invoke(capsys, "adic", "--field", "padic:2", "--matrix", adic_inf)
    assert json.loads(out) == {"value": "inf"}


def test_matrix_entries_with_gauss_variables(tmp_path, capsys):
    # the ramified one-relation presentation (4*t1^3) at v(t1) = 1/4
    ram = write(tmp_path, "r.json", {"nvars": 1, "entries": [["4*t1^3"]]})
    code, out, _ = invoke(
        capsys, "content", "--field", "padic:2", "--matrix", ram, "--point", "1/4"
    )
    assert code == 0
    assert json.loads(out) == {"content": {"num": 11, "den": 4}}  # 2 + 3/4

    pair = write(tmp_path, "ml2.json", {"nvars": 1, "M": [["t1"]], "L": [["1"]]})
    code, out, _ = invoke(
        capsys, "index", "--field", "padic:2", "--matrix", pair, "--point", "1/2"
    )
    assert json.loads(out) == {"index": {"num": 1, "den": 2}}


def test_smith_zero_matrix(tmp_path, capsys):
    zero = write(tmp_path, "z.json", {"entries": [["0", "0"], ["0", "0"]]})
    code, out, _ = invoke(capsys, "smith", "--field", "padic:2", "--matrix", zero)
    assert json.loads(out) == {"divisors": [], "free_rank": 2}


def test_retract_and_tame_check(tmp_path, capsys):
    chart = write(tmp_path, "c.json", {"substitutions": ["pi + s1"]})
    code, out, _ = invoke(
        capsys, "retract", "--field", "piadic-q", "--n", "1", "--point", "2", "--chart", chart
    )
    assert json.loads(out) == {"point": [{"num": 1, "den": 1}]}

    cube = write(tmp_path, "cube.json", {"substitutions": ["s1^3"]})
    code, out, _ = invoke(
        capsys, "tame-check", "--field", "padic:3", "--n", "1", "--point", "1", "--chart", cube
    )
    assert json.loads(out) == {"certificate": "wild"}


def test_trop_and_grid(tmp_path, capsys):
    form = write(tmp_path, "f.json", {"l": 1, "m": 1, "entries": [{"e": [[1]], "coeff": "1 + t1"}]})
    code, out, _ = invoke(capsys, "trop", "--field", "piadic-q", "--n", "1", "--form", form)
    doc = json.loads(out)
    assert doc["terms"] == [
        {"c": {"num": 0, "den": 1}, "I": [0]},
        {"c": {"num": 0, "den": 1}, "I": [1]},
    ]

    code, out, _ = invoke(
        capsys, "grid", "--field", "piadic-q", "--n", "1", "--form", form,
        "--semistable", "1,2", "--grid", "4",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "rho1,value"
    assert lines[1] == "0,0"
    assert lines[-1] == "2,0"
    assert len(lines) == 6


def test_trivial_field_and_polytope_file(tmp_path, capsys):
    form = write(tmp_path, "f.json", {"l": 1, "m": 1, "entries": [{"e": [[1]], "coeff": "5 + 7*t1"}]})
    code, out, _ = invoke(
        capsys, "eval-norm", "--field", "trivial", "--n", "1", "--point", "2", "--form", form
    )
    assert code == 0
    assert json.loads(out)["value"] == {"num": 0, "den": 1}  # trivial valuation, min(0, 0+2)

    box = write(tmp_path, "box.json", {
        "n": 1,
        "constraints": [{"a": ["1"], "b": "1"}, {"a": ["-1"], "b": "0"}],
    })
    code, out, _ = invoke(
        capsys, "max-locus", "--field", "trivial", "--form", form, "--polytope", box
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["m_star"] == {"num": 0, "den": 1}
    # the constant slope-0 term is minimal on the whole box
    assert doc["locus"][0]["tight"] == []

    code, out, _ = invoke(
        capsys, "grid", "--field", "trivial", "--form", form, "--polytope", box, "--grid", "2"
    )
    assert out.splitlines() == ["rho1,value", "0,0", "1/2,0", "1,0"]


def test_epsilon_rendering(tmp_path, capsys):
    matrix = write(tmp_path, "m.json", {"entries": [["4"]]})
    code, out, _ = invoke(
        capsys, "content", "--field", "padic:2", "--matrix", matrix, "--epsilon", "0.5"
    )
    doc = json.loads(out)
    assert doc["content"]["num"] == 2 and doc["content"]["approx"] == 0.25


def test_exit_codes(tmp_path, capsys):
    bad_form = write(tmp_path, "bad.json", {"l": 1, "m": 1, "entries": [{"e": [[1]], "coeff": "t1 +"}]})
    code, _, err = invoke(
        capsys, "eval-norm", "--field", "piadic-q", "--n", "1", "--point", "1", "--form", bad_form
    )
    assert code == 2
    assert "line" in err and "column" in err

    code, _, err = invoke(capsys, "eval-norm", "--field", "nosuch", "--n", "1")
    assert code == 3

    # domain error: zero denominator polytope input
    form = write(tmp_path, "f.json", {"l": 1, "m": 1, "entries": [{"e": [[1]], "coeff": "t1"}]})
    code, _, err = invoke(
        capsys, "max-locus", "--field", "piadic-q", "--n", "1", "--form", form,
        "--semistable", "1,0",
    )
    assert code == 3
    assert "positive" in err

    code, _, _ = invoke(capsys, "no-such-command")
    assert code == 2


def test_output_determinism(tmp_path, capsys):
    form = write(tmp_path, "f.json", {"l": 1, "m": 1, "entries": [{"e": [[1]], "coeff": "pi + t1 + t1^-2"}]})
    runs = []
    for _ in range(2):
        code, out, _ = invoke(
            capsys, "eval-norm", "--field", "piadic-q", "--n", "1", "--point", "1/3", "--form", form
        )
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]
