"""File formats, caching, and the command-line surface."""

import json

import pytest

from minhit.cli import main
from minhit.errors import FileFormatError
from minhit.io import (
    parse_family,
    parse_hypergraph,
    parse_mnmc_cache,
    serialize_family,
    serialize_hypergraph,
    serialize_mnmc_cache,
)
from minhit.rows import SetFamily

H2_TEXT = "6 5\n1 2 5\n3 4\n4 5 6\n1 3 5\n2 6\n"


def test_parse_serialize_roundtrip():
    h = parse_hypergraph(H2_TEXT)
    assert h.width == 6 and h.edge_count == 5
    assert serialize_hypergraph(h) == H2_TEXT
    assert parse_hypergraph(serialize_hypergraph(h)) == h


def test_comments_and_blank_lines():
    h = parse_hypergraph("# comment\n\n6 2  # inline\n1 2\n3 4 5 6\n")
    assert h.edge_count == 2


@pytest.mark.parametrize("bad, fragment", [
    ("", "empty"),
    ("6\n1 2\n", "header"),
    ("6 2\n1 2\n", "announces 2"),
    ("6 1\n0 2\n", "line 2"),
    ("6 1\n2 7\n", "outside"),
    ("6 1\n2 1\n", "ascending"),
    ("6 1\n\n", "announces"),
    ("6 1\nx y\n", "non-integer"),
])
def test_parse_errors(bad, fragment):
    with pytest.raises(FileFormatError, match=fragment):
        parse_hypergraph(bad)


def test_family_roundtrip():
    fam = SetFamily.from_sets(5, [{1, 3}, {2, 4, 5}])
    assert parse_family(serialize_family(fam)) == fam


def test_mnmc_cache_hash_guard():
    fam = SetFamily.from_sets(6, [{1, 2}])
    cached = serialize_mnmc_cache(fam, H2_TEXT)
    assert parse_mnmc_cache(cached, H2_TEXT) == fam
    assert parse_mnmc_cache(cached, H2_TEXT + "# edit\n") is None
    assert parse_mnmc_cache(serialize_family(fam), H2_TEXT) is None


@pytest.fixture
def h2_file(tmp_path):
    p = tmp_path / "h2.txt"
    p.write_text(H2_TEXT)
    return str(p)


def test_cli_mhs_first_grade(h2_file, capsys):
    assert main(["mhs", h2_file]) == 0
    out = capsys.readouterr().out
    assert "count 9" in out


def test_cli_json_output(h2_file, capsys):
    assert main(["mhs", h2_file, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 9
    assert len(payload["rows"]) == 4


def test_cli_hs_cutoff(h2_file, capsys):
    assert main(["hs", h2_file, "--cutoff", "3"]) == 0
    rows = [l for l in capsys.readouterr().out.splitlines()
            if not l.startswith("count")]
    assert len(rows) == 4


def test_cli_determinism(h2_file, capsys):
    main(["classify", h2_file, "--seed", "3"])
    first = capsys.readouterr().out
    main(["classify", h2_file, "--seed", "3"])
    assert capsys.readouterr().out == first


def test_cli_mnmc_cache_roundtrip(h2_file, tmp_path, capsys):
    cache = str(tmp_path / "h2.mnmc")
    assert main(["minnotmc", h2_file, "-o", cache]) == 0
    capsys.readouterr()
    assert main(["mhs", h2_file, "--mnmc-cache", cache]) == 0
    assert "count 9" in capsys.readouterr().out


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("nonsense\n")
    assert main(["ehs", str(bad)]) == 2
    assert main(["nope"]) == 1
    assert main(["gen", "4", "1", "2"]) == 1  # k*h < w
    capsys.readouterr()


def test_cli_gen_then_count(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["gen", "10", "6", "3", "--seed", "4", "-o", str(out)]) == 0
    assert main(["count", str(out), "--op", "hs"]) == 0
    n = int(capsys.readouterr().out.strip())
    assert 0 < n < 1 << 10


def test_cli_sample(h2_file, capsys):
    assert main(["sample", h2_file, "5", "--seed", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5


def test_cli_matchings(tmp_path, capsys):
    g = tmp_path / "c4.txt"
    g.write_text("1 2\n2 3\n3 4\n4 1\n")
    assert main(["matchings", str(g)]) == 0
    assert "count 2" in capsys.readouterr().out
