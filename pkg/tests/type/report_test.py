import ls_path_crystal as ls


def test_report_passes_when_clean():
    r = ls.VerificationReport("simple", {"type": "A1~1"})
    r.add_row({"vertices": 2})
    assert r.passed == True
    assert r.get_dict == {
        "kind": "simple",
        "params": {"type": "A1~1"},
        "passed": True,
        "rows": [{"vertices": 2}],
        "violations": [],
    }


def test_report_violations_and_partial():
    r = ls.VerificationReport("comps")
    r.violate("disjoint", "components share a vertex.", {"key": "k"})
    r.note("a")
    r.note("a")
    assert r.passed == False
    assert r.get_dict["violations"] == [{"check": "disjoint", "message": "components share a vertex.", "witness": {"key": "k"}}]
    assert r.get_dict["notes"] == ["a"]

    other = ls.VerificationReport("comps")
    other.partial = True
    assert other.passed == False
    assert other.get_dict["partial"] == True
