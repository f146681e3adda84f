import plethysm


def test_partition_helpers():
    assert plethysm.conjugate([6, 6, 6, 2]) == [4, 4, 3, 3, 3, 3]
    assert plethysm.conjugate(plethysm.conjugate([5, 3, 2])) == [5, 3, 2]
    assert plethysm.is_even([4, 2])
    assert not plethysm.is_even([3, 1])
    assert plethysm.schur_dim([2, 1], 3) == 8
    assert plethysm.schur_dim([1], 7) == 7


def test_multiplicity_and_basis():
    assert plethysm.mult(3, 2, [4, 2]) == 1
    assert plethysm.hwv_dim(3, 2, [2, 2, 1, 1], 4) == 1

    tabs = plethysm.pieri_tableaux(3, 2, [4, 2])
    assert tabs == [[[1, 2], [1, 2], [1], [2]]]

    basis = plethysm.hwv_basis(3, 2, [4, 2])
    assert len(basis) == 1
    terms = basis[0]["w"]
    assert sorted(t["coeff"] for t in terms) == ["-1", "1"]
    factor_sets = {tuple(map(tuple, t["factors"])) for t in terms}
    assert ((1, 2, 3), (1, 2, 4)) in factor_sets
    assert ((1, 2, 4), (1, 2, 3)) in factor_sets


def test_weintraub_witness():
    doc = plethysm.weintraub([4, 2], 2)
    assert [s["step"] for s in doc["steps"]] == ["B", "B", "A"]
    assert doc["highest_weight"]["nonzero"]
    assert doc["highest_weight"]["killed"]
    assert doc["q"]["coefficient"] == "8"
    assert doc["q"]["positive"]
    assert doc["q"]["all_paired"]

    trace_only = plethysm.weintraub([6, 6, 6, 2], 4, skip_expand=True)
    assert [s["step"] for s in trace_only["steps"]] == ["B", "C", "B", "A", "B", "B"]
    assert "q" not in trace_only


def test_oracle():
    table = plethysm.decompose(2, 2, 4)
    comps = {tuple(c["partition"]): c["multiplicity"] for c in table["components"]}
    assert comps == {(2, 2): "1", (1, 1, 1, 1): "1"}
    assert table["dimension_sum"] == table["ambient_dimension"] == "21"

    tuple_table = plethysm.decompose_tuple(3, 2, 4)
    tuple_comps = {tuple(c["partition"]) for c in tuple_table["components"]}
    assert tuple_comps == {(2, 2, 2), (2, 2, 1, 1)}

    assert plethysm.duality(2, 2, 4)


def test_asymptotics():
    assert plethysm.s_kd([2, 1], 3, 3) == 2
    row = plethysm.stabilization([2], 2, 5)
    assert row["values"] == [0, 1, 1, 1, 1]
    assert row["stable"] == "1"
    assert row["stabilized"] and row["nondecreasing"] and row["bijection_ok"]
