import pytest

from cycleset import CycleSet
from cycleset.cli import run
from cycleset.cys import format_cys, parse_census, parse_census_text, parse_cys
from cycleset.perms import from_cycles


def cys_text(n, specs):
    rows = tuple(from_cycles(n, cycs) for cycs in specs)
    return format_cys(CycleSet(n, rows))


EX1 = "4\n2 3 4 1\n4 1 2 3\n1 4 3 2\n3 2 1 4\n"
TRIVIAL2 = "2\n1 2\n1 2\n"
CYCLIC6 = "6\n" + "\n".join("2 3 4 5 6 1" for _ in range(6)) + "\n"
ZAPPA_S1 = cys_text(
    5, [[(1, 2, 3, 4)], [(1, 4, 3, 2)], [(1, 2, 3, 4)], [(1, 4, 3, 2)], []]
)
ZAPPA_S2 = cys_text(
    5, [[(3, 5, 4)], [(3, 5, 4)], [(3, 4, 5)], [(3, 4, 5)], [(3, 4, 5)]]
)
INVALID5 = cys_text(
    5,
    [
        [(1, 2, 4), (3, 5)],
        [(1, 5, 3, 2)],
        [(1, 2, 5, 4)],
        [(1, 3, 2), (4, 5)],
        [(3, 5, 4)],
    ],
)
EXDEC = cys_text(
    8,
    [
        [(1, 2), (3, 6), (4, 7), (5, 8)],
        [(1, 6, 5, 8), (2, 3, 4, 7)],
        [(1, 8, 3, 4), (2, 7, 6, 5)],
        [(1, 2), (3, 8), (4, 5), (6, 7)],
        [(1, 4, 3, 8), (2, 5, 6, 7)],
        [(1, 8, 5, 6), (2, 7, 4, 3)],
        [(1, 6), (2, 3), (4, 5), (7, 8)],
        [(1, 4), (2, 5), (3, 6), (7, 8)],
    ],
)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_validate_valid(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    assert run(["validate", path]) == 0
    assert capsys.readouterr().out == "Valid\n"


def test_validate_invalid_witness(tmp_path, capsys):
    path = write(tmp_path, "bad.cys", INVALID5)
    assert run(["validate", path]) == 1
    out = capsys.readouterr().out
    assert out == "Invalid (witness 1 2 1: left s_1, right s_4)\n"


def test_validate_not_a_permutation(tmp_path, capsys):
    path = write(tmp_path, "bad.cys", "2\n1 1\n1 2\n")
    assert run(["validate", path]) == 1
    out = capsys.readouterr().out
    assert out.startswith("ERR not-a-permutation:")


def test_missing_file_is_io_error(capsys):
    assert run(["validate", "/nonexistent/x.cys"]) == 1
    assert capsys.readouterr().out.startswith("ERR io:")


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 2


def test_info(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    assert run(["info", path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "n=4" in out
    assert "square_free=false" in out
    assert "T=(1 2)" in out
    assert "o_T=2" in out
    assert "G_order=8" in out
    assert "G_abelian=false" in out
    assert "G_transitive=true" in out
    assert "orbits=1,2,3,4" in out
    assert "components=1" in out
    assert "class_d=2" in out
    assert all(line.endswith("pass") for line in out if line.startswith("check "))


def test_pi(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    assert run(["pi", path, "--word", "1,2,3,4"]) == 0
    out = capsys.readouterr().out
    assert out == "tuple=1,1,3,2\ncp=2,1,1,0\nlambda=4\n"


def test_equal(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    # the defining relation s_1 (s_1 * s_2) = s_2 (s_2 * s_1)
    assert run(["equal", path, "--w1", "1,3", "--w2", "2,4"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert run(["equal", path, "--w1", "1,2", "--w2", ""]) == 0
    assert capsys.readouterr().out == "false\n"
    assert run(["equal", path, "--w1", "1,2", "--w2", "", "--mod-d"]) == 0
    assert capsys.readouterr().out == "true\n"


def test_gcd_lcm_divides(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    assert run(["gcd", path, "--a", "cp:1,0,1,0", "--b", "cp:1,1,0,0"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "cp=1,0,0,0"

    assert run(["lcm", path, "--a", "cp:1,0,1,0", "--b", "cp:0,1,0,1"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "cp=1,1,1,1"

    assert run(["divides", path, "--a", "1", "--b", "1,2,3,4"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert run(["divides", path, "--a", "cp:0,2,0,0", "--b", "cp:1,1,1,1"]) == 0
    assert capsys.readouterr().out == "false\n"


def test_divides_two_by_two(tmp_path, capsys):
    path = write(tmp_path, "s2.cys", "2\n2 1\n2 1\n")
    assert run(["divides", path, "--a", "cp:3,0", "--b", "cp:4,0"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert run(["divides", path, "--a", "cp:3,0", "--b", "cp:4,0", "--side", "right"]) == 0
    assert capsys.readouterr().out == "false\n"


def test_delta(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    assert run(["delta", path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "cp=1,1,1,1"


def test_class(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    assert run(["class", path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "d=2" in out
    assert "per_generator=2,2,2,2" in out


def test_germ(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    assert run(["germ", path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "d=2" in out and "order=16" in out and "permutation_free=true" in out


def test_germ_invalid_candidate_with_modulus(tmp_path, capsys):
    path = write(tmp_path, "bad.cys", INVALID5)
    assert run(["germ", path, "--modulus", "6"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "permutation_free=false" in out


def test_retract_roundtrips(tmp_path, capsys):
    path = write(tmp_path, "c6.cys", CYCLIC6)
    assert run(["retract", path, "--k", "2"]) == 0
    out = capsys.readouterr().out
    cs = parse_cys(out)
    assert format_cys(cs) == out
    assert cs.rows == ((3, 4, 5, 6, 1, 2),) * 6


def test_zappa_worked_example(tmp_path, capsys):
    p1 = write(tmp_path, "s1.cys", ZAPPA_S1)
    p2 = write(tmp_path, "s2.cys", ZAPPA_S2)
    assert run(["zappa", p1, p2]) == 0
    out = capsys.readouterr().out
    block, verdict = out.rsplit("\n\n", 1)
    assert parse_cys(block).rows == parse_cys(INVALID5).rows
    assert verdict == "invalid (witness 1 2 1)\n"


def test_sylow_roundtrip(tmp_path, capsys):
    path = write(tmp_path, "exdec.cys", EXDEC)
    assert run(["sylow", path, "--recompose"]) == 0
    out = capsys.readouterr().out
    assert "factor p=2 a=1 beta=3 class=2" in out
    assert "factor p=3 a=1 beta=2 class=3" in out
    assert out.rstrip().endswith("round_trip=exact")
    # each emitted block parses back
    blocks, _ = parse_census_text(
        "\n".join(l for l in out.splitlines() if not l.startswith(("factor", "round_trip")))
    )
    assert len(blocks) == 2


def test_sylow_trivial_class_error(tmp_path, capsys):
    path = write(tmp_path, "triv.cys", TRIVIAL2)
    assert run(["sylow", path]) == 1
    assert capsys.readouterr().out.startswith("ERR trivial-class:")


def test_census_summary(tmp_path, capsys):
    assert run(["census", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert out == "total=12\ndmax=3\nhist 1=1\nhist 2=9\nhist 3=2\n"


def test_census_iso_and_out(tmp_path, capsys):
    out_file = tmp_path / "n3.census"
    assert run(["census", "--n", "3", "--iso", "--out", str(out_file)]) == 0
    printed = capsys.readouterr().out
    blocks, footer = parse_census(str(out_file))
    assert printed.splitlines() == footer
    assert footer[0] == f"total={len(blocks)}"
    # every block round-trips byte-identically
    text = out_file.read_text()
    for b in blocks:
        assert format_cys(b) in text


def test_census_cap_error(capsys):
    assert run(["census", "--n", "9"]) == 1
    assert capsys.readouterr().out.startswith("ERR cap-exceeded:")


def test_zappa_not_coprime(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    assert run(["zappa", path, path]) == 1
    assert capsys.readouterr().out.startswith("ERR not-coprime:")


def test_bounds(capsys):
    assert run(["bounds", "--n", "5"]) == 0
    assert capsys.readouterr().out == "a_n=6 g_n=6\n"
    assert run(["bounds", "--n", "10"]) == 0
    assert capsys.readouterr().out == "a_n=30 g_n=30\n"


def test_exit_codes_stable(tmp_path, capsys):
    path = write(tmp_path, "ex1.cys", EX1)
    for _ in range(2):
        assert run(["validate", path]) == 0
        capsys.readouterr()
