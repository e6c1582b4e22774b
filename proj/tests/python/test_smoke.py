import pytest

import indcat


def test_fixture_registry():
    names = indcat.fixture_names()
    assert len(names) == 19
    report = indcat.run_fixtures()
    assert report["schema"] == 1
    assert report["pass"] is True
    assert all(row["pass"] for row in report["rows"])


def test_unknown_fixture():
    with pytest.raises(indcat.IndcatError, match="UnknownFixture"):
        indcat.run_fixtures(["no-such"])


def test_gra_is_cubic_and_pos_is_not():
    gra = indcat.check("gra", "3-amalg", 3, seed=1, jobs=2)
    assert gra["rows"][0]["status"] == "Holds"
    pos = indcat.check("pos", "3-amalg", 3, jobs=2)
    row = pos["rows"][0]
    assert row["status"] == "Fails"
    assert indcat.recheck("3-amalg", row["witness"])["status"] == "Fails"


def test_binfunc_classification():
    report = indcat.classify("binfunc", 2, jobs=2)
    assert report["label"] == "NSOP₁-like-up-to-bound"


def test_enumeration_counts():
    report = indcat.enumerate_objects("gra", 5)
    assert [row["count"] for row in report["rows"]] == [1, 1, 2, 4, 11, 34]


def test_kdist_labels_and_render():
    report = indcat.check("kdist", "basic", 2, labels=[0, 1])
    assert {row["axiom"] for row in report["rows"]} == {
        "invariance", "monotonicity", "transitivity", "symmetry", "existence"}
    assert "axiom" in indcat.render(report, "tsv").splitlines()[0]


def test_sampling_is_deterministic():
    a = indcat.check("pos", "uniqueness", 3, sample=25, seed=3, jobs=1)
    b = indcat.check("pos", "uniqueness", 3, sample=25, seed=3, jobs=4)
    a.pop("timing", None)
    b.pop("timing", None)
    assert a == b
