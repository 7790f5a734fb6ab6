import pytest

from fmzv.indices import Index, compositions
from fmzv.pipeline import PipelineConfig, run_pipeline
from fmzv.tableio import (
    DISCOVERY_PRIMES_W10,
    RelationTable,
    TableFormatError,
    dumps_csv,
    dumps_json,
    load_builtin,
    loads_csv,
    loads_json,
    read_table,
    resolve_table,
)

W10_BASIS = (Index((8, 1, 1)), Index((7, 2, 1)), Index((6, 3, 1)))


def sample_table():
    return RelationTable(
        3,
        (Index((2, 1)),),
        ((Index((3,)), (0, 1)), (Index((1, 2)), (1, 1)), (Index((1, 1, 1)), (0, 1))),
    )


def test_csv_round_trip_is_bit_exact():
    table = sample_table()
    text = dumps_csv(table)
    assert loads_csv(text) == table
    assert dumps_csv(loads_csv(text)) == text


def test_json_round_trip():
    table = sample_table()
    assert loads_json(dumps_json(table)) == table
    cfg = PipelineConfig(weight=3, primes=(101, 103), bound=5)
    residues = [{101: 0, 103: 0}] * len(table.rows)
    text = dumps_json(table, cfg, residues)
    assert loads_json(text) == table
    assert '"primes"' in text and '"residues"' in text


def test_table_validation():
    with pytest.raises(TableFormatError):
        RelationTable(3, (Index((2, 1)),), ((Index((3,)), (0, 1, 1)),))  # arity
    with pytest.raises(TableFormatError):
        RelationTable(3, (Index((2, 1)),), ((Index((3,)), (0, 0)),))  # last coeff
    with pytest.raises(TableFormatError):
        RelationTable(3, (Index((2, 1)),), ((Index((4,)), (0, 1)),))  # weight


@pytest.mark.parametrize(
    "text",
    [
        "target,coefficients\n(3),\"(0,1)\"\n",  # missing headers
        "# weight=3\n# basis=(2,1)\nwrong,header\n(3),\"(0,1)\"\n",
        "# weight=3\n# basis=(2,1)\n# extra=1\ntarget,coefficients\n",
        "# weight=3\n# basis=(2,1)\ntarget,coefficients\n(3),\"(0,1)\",x\n",
        "# weight=3\n# basis=(2,1)\ntarget,coefficients\n(3),\"()\"\n",
        "# weight=3\n# basis=(2,1)\ntarget,coefficients\nnotanindex,\"(0,1)\"\n",
    ],
)
def test_csv_parse_errors(text):
    with pytest.raises(TableFormatError):
        loads_csv(text)


def test_json_parse_errors():
    with pytest.raises(TableFormatError):
        loads_json("{not json")
    with pytest.raises(TableFormatError):
        loads_json('{"weight": 3}')


def test_builtin_table_shape():
    table = load_builtin("builtin-w10")
    assert table.weight == 10
    assert table.basis == W10_BASIS
    assert len(table.rows) == 509
    assert all(coeffs[-1] >= 1 for _, coeffs in table.rows)
    expected_targets = [k for k in compositions(10) if k not in W10_BASIS]
    assert [t for t, _ in table.rows] == expected_targets
    with pytest.raises(KeyError):
        load_builtin("builtin-w11")


def test_builtin_round_trip():
    table = load_builtin()
    assert loads_csv(dumps_csv(table)) == table


def test_discovery_primes_constant():
    assert len(DISCOVERY_PRIMES_W10) == 11
    n = 1
    for p in DISCOVERY_PRIMES_W10:
        n *= p
    assert n == 106700590455862347842907841856033238416352421


def test_read_and_resolve(tmp_path):
    table = sample_table()
    csv_path = tmp_path / "t.csv"
    csv_path.write_text(dumps_csv(table))
    assert read_table(str(csv_path)) == table
    json_path = tmp_path / "t.json"
    json_path.write_text(dumps_json(table))
    assert read_table(str(json_path)) == table
    assert resolve_table(str(csv_path)) == table
    assert resolve_table("builtin-w10").weight == 10


def test_from_result_matches_records():
    result = run_pipeline(PipelineConfig(weight=4, primes=(101, 103), bound=5))
    table = RelationTable.from_result(result)
    assert table.weight == 4
    assert [r.target for r in table.records()] == [r.target for r in result.relations]
    assert tuple(table.records()) == result.relations


def test_round_trip_empty_basis():
    # weight 4 has no basis at all: every composition is a zero row
    result = run_pipeline(PipelineConfig(weight=4, primes=(101, 103), bound=5))
    table = RelationTable.from_result(result)
    assert table.basis == ()
    text = dumps_csv(table)
    assert loads_csv(text) == table and dumps_csv(loads_csv(text)) == text


def test_round_trip_empty_index_basis():
    # weight 0: the single empty composition is itself the basis
    result = run_pipeline(PipelineConfig(weight=0, primes=(5, 7), bound=2))
    table = RelationTable.from_result(result)
    assert table.basis == (Index(),) and table.rows == ()
    assert loads_csv(dumps_csv(table)) == table
