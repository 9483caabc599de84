import json

from aschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def jlines(text):
    return [json.loads(line) for line in text.strip().splitlines()]


def test_weyl_length(capsys):
    code, out, _ = run(capsys, "weyl", "length", "--r", "3", "--images", "1,2,3")
    assert code == 0 and out.strip() == "0"


def test_weyl_compose_structured(capsys):
    code, out, _ = run(
        capsys, "weyl", "compose", "--r", "3",
        "--a", "rho^1 * [1,2,3]", "--b", "[2,1,3]", "--format", "structured",
    )
    assert code == 0
    (rec,) = jlines(out)
    assert rec["schema"] == "aschur.perm/1"
    assert rec["z"] == 1 and rec["r"] == 3
    # round-trip through the schema
    from aschur.aweyl import AffinePerm

    w = AffinePerm(rec["r"], rec["z"], tuple(rec["window"]))
    assert w == AffinePerm.rho(3) * AffinePerm.s(3, 1)


def test_weyl_reduced_and_coset(capsys):
    code, out, _ = run(capsys, "weyl", "reduced", "--r", "3", "--images", "2,1,3")
    assert code == 0 and "s1" in out
    code, out, _ = run(
        capsys, "weyl", "coset", "--r", "3", "--perm", "[3,1,2]", "--pi", "1",
    )
    assert code == 0 and "distinguished" in out
    code, out, _ = run(
        capsys, "weyl", "mincoset", "--r", "3", "--perm", "[2,1,3]",
        "--pi1", "1", "--pi2", "1",
    )
    assert code == 0 and out.strip() == "rho^0 * [1,2,3]"


def test_hecke_commands(capsys):
    code, out, _ = run(capsys, "hecke", "mul", "--r", "3", "--a", "[2,1,3]", "--b", "[2,1,3]")
    assert code == 0 and "v^2" in out
    code, out, _ = run(
        capsys, "hecke", "xlambda", "--r", "3", "--lambda", "2,1,0",
        "--format", "structured",
    )
    assert code == 0
    (rec,) = jlines(out)
    assert rec["schema"] == "aschur.hecke/1" and len(rec["terms"]) == 2


def test_schur_commands(capsys):
    code, out, _ = run(
        capsys, "schur", "phi", "--n", "3", "--r", "2",
        "--lambda", "2,0,0", "--mu", "2,0,0", "--d", "[1,2]",
    )
    assert code == 0 and "T[" in out
    code, out, _ = run(
        capsys, "schur", "mul", "--n", "3", "--r", "2",
        "--a", "1,1,0 | [1,2] | 2,0,0", "--b", "2,0,0 | [1,2] | 1,1,0",
        "--format", "structured",
    )
    assert code == 0
    (rec,) = jlines(out)
    assert rec["schema"] == "aschur.schur/1" and len(rec["terms"]) == 2
    code, out, _ = run(capsys, "schur", "embed", "--n", "3", "--r", "2", "--perm", "[2,1]")
    assert code == 0 and "phi[" in out


def test_tensor_commands(capsys):
    code, out, _ = run(
        capsys, "tensor", "act", "--n", "3",
        "--word", "E1", "--vector", "1,2",
    )
    assert code == 0 and out.strip() == "(1)*e[1,1]"
    code, out, _ = run(
        capsys, "tensor", "weightspace", "--n", "3", "--lambda", "1,1,0",
        "--lo", "1", "--hi", "3", "--format", "structured",
    )
    assert code == 0
    (rec,) = jlines(out)
    assert rec["vectors"] == [[1, 2], [2, 1]]


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "schur-presentation", "--n", "3", "--r", "2")
    assert code == 0
    assert "4/4 checks passed" in out
    # usage error: affine suite needs n > r
    code, _, err = run(capsys, "verify", "--suite", "qaffine", "--n", "2", "--r", "2")
    assert code == 2 and "n > r" in err


def test_verify_structured_records(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "extended", "--n", "3", "--r", "2",
        "--format", "structured",
    )
    assert code == 0
    recs = jlines(out)
    assert all(rec["schema"] == "aschur.check/1" and rec["passed"] for rec in recs)


def test_monomial_commands(capsys):
    code, out, _ = run(
        capsys, "monomial", "m1", "--n", "9", "--r", "7",
        "--lambda", "2,0,0,3,0,0,0,0,2",
    )
    assert code == 0 and "mu=(2,3,2,0,0,0,0,0,0)" in out
    code, out, _ = run(
        capsys, "monomial", "factor-en", "--n", "4", "--r", "3", "--lambda", "2,1,0,0",
    )
    assert code == 0 and "holds: True" in out
    code, _, err = run(capsys, "monomial", "m", "--n", "3", "--r", "3", "--lambda", "2,1,0")
    assert code == 2


def test_matrix_commands(capsys):
    code, out, _ = run(
        capsys, "matrix", "from-coset", "--n", "3", "--r", "2",
        "--lambda", "1,1,0", "--mu", "1,1,0", "--d", "[1,2]",
        "--format", "structured",
    )
    assert code == 0
    (rec,) = jlines(out)
    assert rec["entries"] == [[1, 1, 1], [2, 2, 1]]
    code, out, _ = run(
        capsys, "matrix", "to-coset", "--n", "3", "--r", "2",
        "--entries", "1,1,1;2,2,1",
    )
    assert code == 0 and "d=rho^0 * [1,2]" in out
    code, out, _ = run(
        capsys, "matrix", "dstat", "--n", "2", "--r", "2", "--entries", "1,2,1;2,1,1",
    )
    assert code == 0 and out.strip().isdigit()
    code, out, _ = run(
        capsys, "matrix", "aperiodic", "--n", "2", "--r", "2", "--entries", "1,2,1;2,3,1",
    )
    assert code == 0 and out.strip() == "false"


def test_usage_error_reports_flag(capsys):
    code, _, err = run(capsys, "weyl", "length", "--r", "3", "--images", "1,4,3")
    assert code == 2 and "usage error" in err
