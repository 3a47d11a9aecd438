import json

from groupcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def build_fixture_files(tmp_path, capsys):
    group = tmp_path / "d6.grp"
    code = tmp_path / "repsum.code"
    assert main(["build-group", "dihedral:3", "-o", str(group)]) == 0
    assert main(["build-code", "rep-sum:2,3", "--field", "2", "-o", str(code)]) == 0
    capsys.readouterr()
    return code, group


class TestBuilders:
    def test_build_code_stdout(self, capsys):
        rc, out, _ = run(capsys, "build-code", "rep-sum:2,3", "--field", "2")
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0] == "field=2 n=6"
        assert lines[1:] == ["1,1,1,0,0,0", "0,0,0,1,1,1"]

    def test_build_group_file(self, tmp_path, capsys):
        path = tmp_path / "g.grp"
        rc, *_ = run(capsys, "build-group", "cyclic:6", "-o", str(path))
        assert rc == 0
        text = path.read_text()
        assert text.startswith("degree 6")

    def test_build_group_prescribed_unsupported(self, capsys):
        rc, out, _ = run(capsys, "build-group", "prescribed:2,2")
        assert rc == 2
        payload = json.loads(out)
        assert payload["supported"] is False and "reason" in payload

    def test_unknown_spec_is_usage_error(self, capsys):
        rc, _, err = run(capsys, "build-group", "sporadic:1")
        assert rc == 1 and "error" in err

    def test_bad_flags_exit_one(self, capsys):
        assert main(["build-code", "rep-sum:2,3"]) == 1  # --field missing
        capsys.readouterr()


class TestPAut:
    def test_rep_code_paut(self, tmp_path, capsys):
        code = tmp_path / "rep4.code"
        main(["build-code", "rep-sum:1,4", "--field", "2", "-o", str(code)])
        capsys.readouterr()
        rc, out, _ = run(capsys, "paut", str(code))
        assert rc == 0
        payload = json.loads(out)
        assert payload["order"] == 24 and payload["degree"] == 4

    def test_missing_file(self, capsys):
        rc, _, err = run(capsys, "paut", "/no/such/file")
        assert rc == 1


class TestCertifyCommands:
    def test_certify_left_and_group(self, tmp_path, capsys):
        # the block code of rep-sum:2,3 is the dihedral ideal code under the
        # identity bijection, so the regular dihedral group certifies it
        code, group = build_fixture_files(tmp_path, capsys)
        for cmd in ("certify-left", "certify-group"):
            rc, out, _ = run(capsys, cmd, str(code), str(group))
            assert rc == 0
            assert all(c["holds"] for c in json.loads(out)["claims"])

    def test_certify_group_failure_report(self, tmp_path, capsys):
        # a non-regular group on the full space: claim "group_is_regular" false
        code = tmp_path / "full.code"
        code.write_text("field=2 n=4\n1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\n")
        group = tmp_path / "swap.grp"
        group.write_text("degree 4\n(1 2)\n")
        rc, out, _ = run(capsys, "certify-group", str(code), str(group))
        assert rc == 2
        payload = json.loads(out)
        assert payload["ok"] is False
        assert {"holds": False, "name": "group_is_regular"} in payload["claims"]

    def test_certify_group_success(self, tmp_path, capsys):
        code = tmp_path / "full.code"
        code.write_text("field=2 n=4\n1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\n")
        group = tmp_path / "c4.grp"
        group.write_text("degree 4\n(1 2 3 4)\n")
        rc, out, _ = run(capsys, "certify-group", str(code), str(group))
        assert rc == 0
        payload = json.loads(out)
        assert all(c["holds"] for c in payload["claims"])


class TestPipelines:
    def test_prop1_then_replay(self, tmp_path, capsys):
        witness_path = tmp_path / "w.json"
        rc, *_ = run(capsys, "prop1", "dihedral:3", "--field", "2", "-o", str(witness_path))
        assert rc == 0
        rc, out, _ = run(capsys, "replay", str(witness_path))
        assert rc == 0
        report = json.loads(out)
        assert report["ok"] is True and all(c["holds"] for c in report["claims"])

    def test_prop1_deterministic_output(self, capsys):
        rc1, out1, _ = run(capsys, "prop1", "gpqm:2,3,2", "--field", "3")
        rc2, out2, _ = run(capsys, "prop1", "gpqm:2,3,2", "--field", "3")
        assert rc1 == rc2 == 0 and out1.encode() == out2.encode()

    def test_replay_rejects_tampered_witness(self, tmp_path, capsys):
        witness_path = tmp_path / "w.json"
        main(["prop1", "cyclic:4", "--field", "2", "-o", str(witness_path)])
        capsys.readouterr()
        data = json.loads(witness_path.read_text())
        data["claims"][0]["name"] = "forged"
        witness_path.write_text(json.dumps(data))
        rc, out, _ = run(capsys, "replay", str(witness_path))
        assert rc == 2 and json.loads(out)["ok"] is False

    def test_divisibility_and_embedding_via_files(self, tmp_path, capsys):
        # produce the ideal code and group through the library, then drive
        # the file-based CLI surface end to end
        from groupcodes.certify import coset_rep_sum_code
        from groupcodes.codes import write_code_file
        from groupcodes.constructions import build_dihedral
        from groupcodes.ffield import parse_field_spec
        from groupcodes.perms import write_group_file

        C, phi, _ = coset_rep_sum_code(build_dihedral(3), parse_field_spec("2"))
        code_path = tmp_path / "ideal.code"
        write_code_file(C, code_path)
        group_path = tmp_path / "g.grp"
        write_group_file(phi.group, group_path)
        phi_path = tmp_path / "phi.json"
        phi_path.write_text(json.dumps({"phi": [j + 1 for j in phi.phi]}))

        rc, out, _ = run(
            capsys, "check-divisibility", str(code_path), str(group_path),
            "--phi", str(phi_path), "--side", "left",
        )
        assert rc == 0
        witness = json.loads(out)
        assert witness["params"]["t"] == 3

        rc, out, _ = run(
            capsys, "embed-repsum", str(code_path), str(group_path),
            "--phi", str(phi_path),
        )
        assert rc == 0
        assert json.loads(out)["kind"] == "rep-sum-embedding"

    def test_certify_abelian_and_cyclic_via_decomposition(self, tmp_path, capsys):
        from groupcodes.certify import coset_rep_sum_code
        from groupcodes.codes import write_code_file
        from groupcodes.constructions import build_dihedral
        from groupcodes.ffield import parse_field_spec
        from groupcodes.perms import format_cycles, write_group_file

        C, phi, _ = coset_rep_sum_code(build_dihedral(3), parse_field_spec("2"))
        G = phi.group
        code_path = tmp_path / "ideal.code"
        write_code_file(C, code_path)
        group_path = tmp_path / "g.grp"
        write_group_file(G, group_path)

        three = next(g for g in G.elements if g.order() == 3)
        two = next(g for g in G.elements if g.order() == 2)
        rc, out, _ = run(
            capsys, "certify-abelian", str(code_path), str(group_path),
            "--A", format_cycles(three), "--B", format_cycles(two),
        )
        assert rc == 0 and json.loads(out)["kind"] == "abelian-group-code"

        rc, out, _ = run(
            capsys, "certify-cyclic", str(code_path), str(group_path),
            "--A", format_cycles(two), "--B", format_cycles(three),
        )
        assert rc == 0 and json.loads(out)["kind"] == "cyclic-group-code"

        phi_path = tmp_path / "phi.json"
        phi_path.write_text(json.dumps({"phi": [j + 1 for j in phi.phi]}))
        rc, out, _ = run(
            capsys, "certify-cyclic", str(code_path), str(group_path),
            "--via-hall", "--phi", str(phi_path),
        )
        assert rc == 0 and json.loads(out)["kind"] == "cyclic-group-code-hall"

        rc, out, _ = run(
            capsys, "certify-abelian", str(code_path), str(group_path),
            "--via-trivial-action", "--phi", str(phi_path),
        )
        assert rc == 0 and json.loads(out)["kind"] == "abelian-group-code-transfer"

    def test_missing_mode_flags_usage_error(self, tmp_path, capsys):
        code, group = build_fixture_files(tmp_path, capsys)
        rc, _, err = run(capsys, "certify-abelian", str(code), str(group))
        assert rc == 1

    def test_via_hall_without_phi_on_nonabelian_group(self, tmp_path, capsys):
        code, group = build_fixture_files(tmp_path, capsys)
        rc, _, err = run(capsys, "certify-cyclic", str(code), str(group), "--via-hall")
        assert rc == 1 and "bijection" in err

    def test_timing_sidecar_log(self, tmp_path, capsys):
        log = tmp_path / "timing.log"
        out = tmp_path / "w.json"
        assert main(["prop1", "cyclic:3", "--field", "2", "-o", str(out),
                     "--log", str(log)]) == 0
        capsys.readouterr()
        line = log.read_text().strip()
        assert line.startswith("prop1 exit=0 elapsed=")
        # the witness itself stays timestamp-free and deterministic
        assert "elapsed" not in out.read_text()

    def test_derived_ideal_pipeline_nonidentity_layout(self, tmp_path, capsys):
        # for this group the coset bijection is not the identity, so the
        # block code and the group file live in different coordinates; the
        # derived-ideal builder gives the aligned code
        group = tmp_path / "g21.grp"
        block = tmp_path / "block.code"
        ideal = tmp_path / "ideal.code"
        assert main(["build-group", "gpqm:3,7,2", "-o", str(group)]) == 0
        assert main(["build-code", "rep-sum:3,7", "--field", "2", "-o", str(block)]) == 0
        assert main(["build-code", "derived-ideal:gpqm:3,7,2", "--field", "2",
                     "-o", str(ideal)]) == 0
        capsys.readouterr()
        # mismatched coordinates are honestly rejected
        rc, out, _ = run(capsys, "certify-left", str(block), str(group))
        assert rc == 2
        # the aligned ideal code certifies and its witness replays
        rc, out, _ = run(capsys, "check-divisibility", str(ideal), str(group),
                         "--phi", "identity")
        assert rc == 0
        witness = json.loads(out)
        assert (witness["params"]["s"], witness["params"]["t"]) == (3, 7)
        w_path = tmp_path / "w.json"
        w_path.write_text(out)
        rc, *_ = run(capsys, "replay", str(w_path))
        assert rc == 0


def test_every_emitted_witness_replays(tmp_path, capsys):
    """Round trip: witnesses from all certifying subcommands pass replay."""
    from groupcodes.certify import coset_rep_sum_code
    from groupcodes.codes import write_code_file
    from groupcodes.constructions import build_dihedral
    from groupcodes.ffield import parse_field_spec
    from groupcodes.perms import format_cycles, write_group_file

    C, phi, _ = coset_rep_sum_code(build_dihedral(3), parse_field_spec("2"))
    G = phi.group
    code_path = tmp_path / "ideal.code"
    write_code_file(C, code_path)
    group_path = tmp_path / "g.grp"
    write_group_file(G, group_path)
    phi_path = tmp_path / "phi.json"
    phi_path.write_text(json.dumps({"phi": [j + 1 for j in phi.phi]}))
    three = format_cycles(next(g for g in G.elements if g.order() == 3))
    two = format_cycles(next(g for g in G.elements if g.order() == 2))

    commands = [
        ["certify-left", str(code_path), str(group_path)],
        ["certify-group", str(code_path), str(group_path)],
        ["certify-abelian", str(code_path), str(group_path), "--A", three, "--B", two],
        ["certify-cyclic", str(code_path), str(group_path), "--A", two, "--B", three],
        ["certify-abelian", str(code_path), str(group_path),
         "--via-trivial-action", "--phi", str(phi_path)],
        ["certify-cyclic", str(code_path), str(group_path),
         "--via-hall", "--phi", str(phi_path)],
        ["check-divisibility", str(code_path), str(group_path), "--phi", str(phi_path)],
        ["embed-repsum", str(code_path), str(group_path), "--phi", str(phi_path)],
        ["prop1", "dihedral:3", "--field", "2"],
    ]
    for i, argv in enumerate(commands):
        out_path = tmp_path / f"w{i}.json"
        assert main(argv + ["-o", str(out_path)]) == 0, argv
        capsys.readouterr()
        assert main(["replay", str(out_path)]) == 0, argv
        capsys.readouterr()
