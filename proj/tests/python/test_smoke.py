import _loophecke as m


def test_alexander_anchors():
    assert m.alexander("s1 s1 s1", 2) == "t^2 - t + 1"
    assert m.alexander("s1 s2^-1 s1 s2^-1", 3) == "t^2 - 3t + 1"
    assert m.alexander("s1", 2) == "1"


def test_verify_tensor_rep_passes():
    r = m.verify("fe", 3, "2")
    assert r["all_pass"]
    assert r["failures"] == []


def test_verify_naive_extension_fails_mixed_relation():
    r = m.verify("naive", 3, "2", "loop-braid")
    assert not r["all_pass"]
    assert r["failures"] == ["mixed2_1"]


def test_lh_dim_generic_and_special():
    assert m.lh_dim(3, "2")["dim"] == 10
    assert m.lh_dim(3, "7/5")["dim"] == 10
    assert m.lh_dim(4, "-1")["dim"] == 42
    assert m.lh_dim(4, "1")["dim"] == 114


def test_lh_dim_budget_exceeded():
    r = m.lh_dim(3, "0", "r1ii")
    assert r["dim"] is None
    assert r["budget_exceeded"]


def test_sp_structure_report():
    s = m.sp_structure(3, "2")
    assert s["dim"] == 10
    assert s["radical_dim"] == 4
    assert s["ss_dim"] == 6
    assert s["block_dims"] == [1, 3, 3, 1]
    assert s["all_pass"]


def test_idem_ranks_hooks():
    rows = m.idem_ranks(3, "2")
    assert len(rows) == 3
    assert all(r["rank"] == 2 and r["nonzero"] for r in rows)


def test_mixed_parameter_check():
    assert m.mixed_parameter_check("2", "5") == (True, False)
    assert m.mixed_parameter_check("2", "1") == (True, True)
    assert m.mixed_parameter_check("2", "2") == (True, True)
