import pytest

import yangian


def test_list_checks():
    names = [name for name, _, _ in yangian.list_checks()]
    assert "rtt" in names
    assert "braid" in names
    assert "appendix-x-identities" in names


def test_vector_module_entries():
    # T_12(u) on V_z sends e_2 to e_1 with coefficient 1/(u + z)
    v = yangian.vector_module(2, "1/3")
    assert v.dim == 2
    assert v.entry(1, 2, 0, 1) == "(1)/(u + 1/3)"
    assert v.entry(1, 1, 0, 0) == "(u + 4/3)/(u + 1/3)"
    assert v.entry(1, 2, 1, 0) == "0"


def test_check_rtt():
    m = yangian.tensor([yangian.vector_module(2, "1/3"), yangian.vector_module(2, "2/7", dual=True)])
    assert m.dim == 4
    ok, witness = yangian.check_rtt(m)
    assert ok and witness is None


def test_run_report():
    report = yangian.run(
        {"theta": 1, "n": 2, "p": 0, "q": 2, "mu": ["1/3", "2/7"], "nu": [1, 1], "checks": ["rtt", "hw-scalar"]},
        timing=False,
    )
    assert report["summary"]["status"] == "pass"
    assert [c["name"] for c in report["checks"]] == ["rtt", "hw-scalar"]
    assert "timing_ms" not in report["checks"][0]


def test_genericity_is_a_config_error():
    with pytest.raises(yangian.ConfigError, match="genericity"):
        yangian.run({"theta": 1, "n": 2, "p": 0, "q": 2, "mu": ["0", "1"], "nu": [1, 1], "checks": ["rtt"]})
