import json

from johansson import cli, covers, diagram, groups


def run_json(capsys, argv):
    code = cli.run(["--format", "json"] + argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_validate(capsys):
    code, payload = run_json(capsys, ["validate", "s2xs1_sphere"])
    assert code == 0 and payload["status"] == "valid"
    assert payload["q"] == 2


def test_validate_invalid(tmp_path, capsys):
    bad = tmp_path / "bad.jd"
    bad.write_text("jd v1\ncrossings 1\ntheta\n0 1 2 3\ntau\n0 1 2 3\n")
    code, payload = run_json(capsys, ["validate", str(bad)])
    assert code == 1 and payload["status"] == "invalid"
    assert payload["violations"]


def test_missing_file(capsys):
    code = cli.run(["validate", "/does/not/exist.jd"])
    assert code == 2
    assert "not found" in capsys.readouterr().err


def test_malformed_file(tmp_path, capsys):
    bad = tmp_path / "garbage.jd"
    bad.write_text("garbage\n")
    code = cli.run(["validate", str(bad)])
    assert code == 2


def test_info(capsys):
    code, payload = run_json(capsys, ["info", "s2xs1_sphere"])
    assert code == 0
    assert payload == {
        "crossings": 6,
        "q": 2,
        "curve_pairs": 2,
        "genus": 0,
        "faces": 8,
        "euler_characteristic": 2,
        "r_required": 4,
    }


def test_checker(capsys):
    code, payload = run_json(capsys, ["checker", "s2xs1_sphere"])
    assert code == 0 and payload["checkered"]
    code, payload = run_json(capsys, ["checker", "s2xs1_torus"])
    assert code == 0 and not payload["checkered"]


def test_pi1_and_homology(capsys):
    for method in ("cw", "paper"):
        code, payload = run_json(capsys, ["pi1", "s2xs1_sphere", "--method", method])
        assert code == 0 and payload["generators"]
        code, payload = run_json(
            capsys, ["homology", "s2xs1_sphere", "--ring", "z", "--method", method]
        )
        assert code == 0 and payload["group"] == "Z"


def test_agree(capsys):
    code, payload = run_json(capsys, ["agree", "s2xs1_torus"])
    assert code == 0 and payload["verdict"] == "consistent"


def test_cover(tmp_path, capsys, sphere):
    p = groups.pi1_paper(sphere)
    G = groups.cyclic_group(2)
    images = next(
        im for im in groups.find_homs(p, G) if any(x != G.identity for x in im)
    )
    rep = covers.rep_from_hom(p, G, images)
    repfile = tmp_path / "z2.rep"
    repfile.write_text(covers.serialize_rep(rep))
    code, payload = run_json(capsys, ["cover", "s2xs1_sphere", "--rep", str(repfile)])
    assert code == 0 and payload["sheets"] == 2 and payload["crossings"] == 12
    lifted = diagram.parse_diagram(payload["diagram"])
    assert lifted.validate(mode="components").ok


def test_pipe(capsys):
    code, payload = run_json(capsys, ["pipe", "s2xs1_sphere", "--triple", "0"])
    assert code == 0 and payload["q"] == 4 and payload["genus"] == 1
    piped = diagram.parse_diagram(payload["diagram"])
    assert piped.validate().ok
    code, payload = run_json(capsys, ["pipe", "s2xs1_sphere", "--triple", "9"])
    assert code == 1


def test_bounds(capsys):
    code, payload = run_json(
        capsys, ["bounds", "--genus", "3", "--assume", "filling,z2hs"]
    )
    assert code == 0 and payload["bound"] == 8
    code = cli.run(["bounds", "--genus", "1", "--assume", "bogus"])
    assert code == 2


def test_certify(capsys):
    code, payload = run_json(capsys, ["certify", "s2xs1_sphere"])
    assert code == 0
    assert payload["q"] == 2 and payload["genus"] == 0 and payload["checkered"]
    assert payload["h1_z"] == "Z"


def test_enumerate(capsys):
    code, payload = run_json(capsys, ["enumerate", "--q", "1"])
    assert code == 0 and payload["count"] == 7 and payload["complete"]
    for text in payload["diagrams"]:
        assert diagram.parse_diagram(text).validate().ok


def test_spectrum(capsys):
    code, payload = run_json(
        capsys,
        [
            "spectrum",
            "--seeds", "s2xs1_sphere,s2xs1_torus",
            "--rules", "filling,parity",
            "--max-genus", "4",
        ],
    )
    assert code == 0 and payload["values"] == [2, 1, 3, 5, 7]
    assert payload["height"] == 1
    code, payload = run_json(
        capsys,
        ["spectrum", "--seeds", "abstract:0:2", "--rules", "filling,z2hs", "--max-genus", "3"],
    )
    assert code == 0 and payload["values"] == [2, 4, 6, 8]
    assert payload["height"] == 0


def test_corpus_env_var(tmp_path, capsys, monkeypatch, sphere):
    (tmp_path / "mine.jd").write_text(diagram.serialize_diagram(sphere))
    monkeypatch.setenv("JD_CORPUS", str(tmp_path))
    code, payload = run_json(capsys, ["validate", "mine"])
    assert code == 0 and payload["status"] == "valid"
