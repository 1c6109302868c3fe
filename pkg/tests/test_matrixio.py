import json

import numpy as np
import pytest

from schurbounds.errors import MatrixFormatError
from schurbounds.matrixio import (
    infer_format,
    matrix_to_json,
    parse_json_matrix,
    parse_matrix_market,
    read_matrix,
)

HERMITIAN_3 = np.array([[1, 2 - 1j, 0], [2 + 1j, 3, 0.5j], [0, -0.5j, -1]])


def test_json_real_and_complex_entries():
    doc = {"n": 2, "entries": [[1, {"re": 0, "im": 1}], [{"re": 0, "im": -1}, 2.5]]}
    a = parse_json_matrix(json.dumps(doc))
    assert np.array_equal(a, [[1, 1j], [-1j, 2.5]])


def test_json_round_trip():
    doc = matrix_to_json(HERMITIAN_3)
    assert np.array_equal(parse_json_matrix(json.dumps(doc)), HERMITIAN_3)


def test_json_n_is_optional():
    assert parse_json_matrix('{"entries": [[4]]}').tolist() == [[4]]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("not json", "invalid JSON"),
        ('{"n": 2}', "'entries'"),
        ('{"n": 3, "entries": [[1, 2], [2, 1]]}', "'n' is 3"),
        ('{"n": 2, "entries": [[1, 2], [2]]}', "row 2"),
        ('{"n": 2, "entries": [[1, "x"], [2, 1]]}', "entry (1, 2)"),
        ('{"n": 2, "entries": [[1, {"im": 1}], [2, 1]]}', "entry (1, 2)"),
        ('{"n": 1, "entries": [[true]]}', "entry (1, 1)"),
    ],
)
def test_json_errors_name_location(text, fragment):
    with pytest.raises(MatrixFormatError, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        parse_json_matrix(text)


def test_mm_coordinate_hermitian_lower_triangle():
    text = """%%MatrixMarket matrix coordinate complex hermitian
% comment
3 3 5
1 1 1 0
2 1 2 1
2 2 3 0
3 2 0 -0.5
3 3 -1 0
"""
    assert np.array_equal(parse_matrix_market(text), HERMITIAN_3)


def test_mm_coordinate_upper_entry_is_mirrored():
    text = "%%MatrixMarket matrix coordinate complex hermitian\n2 2 1\n1 2 0 1\n"
    assert np.array_equal(parse_matrix_market(text), [[0, 1j], [-1j, 0]])


def test_mm_array_symmetric_real():
    text = "%%MatrixMarket matrix array real symmetric\n3 3\n2\n1\n1\n2\n1\n3\n"
    assert np.array_equal(parse_matrix_market(text), [[2, 1, 1], [1, 2, 1], [1, 1, 3]])


def test_mm_array_general_complex():
    vals = "\n".join(f"{x.real} {x.imag}" for x in HERMITIAN_3.T.ravel())
    text = f"%%MatrixMarket matrix array complex general\n3 3\n{vals}\n"
    assert np.array_equal(parse_matrix_market(text), HERMITIAN_3)


def test_mm_coordinate_general_integer():
    text = "%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 4\n2 2 -1\n"
    assert np.array_equal(parse_matrix_market(text), [[4, 0], [0, -1]])


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty"),
        ("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n1 1\n", "pattern"),
        ("%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 1\n", "skew-symmetric"),
        ("%%MatrixMarket vector coordinate real general\n", "line 1"),
        ("%%MatrixMarket matrix coordinate real general\n2 3 0\n", "square"),
        ("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n", "declares 2"),
        ("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n", r"entry \(3, 1\)"),
        ("%%MatrixMarket matrix coordinate complex general\n2 2 1\n1 2 1\n", r"line 3, entry \(1, 2\)"),
        ("%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n", "expected 3"),
        ("%%MatrixMarket matrix array real general\n1 1\nabc\n", "cannot parse"),
    ],
)
def test_mm_errors(text, fragment):
    with pytest.raises(MatrixFormatError, match=fragment):
        parse_matrix_market(text)


def test_infer_and_read(tmp_path):
    assert infer_format("x.json") == "json" and infer_format("x.MTX") == "mm"
    with pytest.raises(MatrixFormatError):
        infer_format("x.txt")
    p = tmp_path / "m.txt"
    p.write_text('{"entries": [[1]]}')
    assert read_matrix(p, "json").tolist() == [[1]]
