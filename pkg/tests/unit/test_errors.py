"""
Unit tests for the error hierarchy and validation reports
"""

import json

from oddprod.core.report import ValidationReport
from oddprod.core.product import ProductVertex
from oddprod.utils.errors import (
    ContractError,
    DocumentError,
    DocumentSyntaxError,
    InvalidParameterError,
    OddProdError,
    PaletteExhaustedError,
)


class TestErrors:
    """Test suite for OddProdError and subclasses"""

    def test_rule_id_in_str(self):
        assert str(InvalidParameterError("bad r")) == "[param] bad r"

    def test_rule_id_override(self):
        error = ContractError("x", rule_id="contract.prefix")
        assert error.rule_id == "contract.prefix"
        assert ContractError.rule_id == "contract"

    def test_original_exception(self):
        cause = ValueError("boom")
        error = OddProdError("wrapped", original_exception=cause)
        assert error.original_exception is cause

    def test_syntax_error_position(self):
        error = DocumentSyntaxError("Expecting value", line=3, column=9)

        assert isinstance(error, DocumentError)
        assert (error.line, error.column) == (3, 9)
        assert "line 3, column 9" in str(error)

    def test_palette_exhausted_carries_vertex(self):
        error = PaletteExhaustedError("no colour", vertex=(1, 2), palette=4)
        assert error.vertex == (1, 2)
        assert error.palette == 4
        assert error.rule_id == "palette.exhausted"


class TestValidationReport:
    """Test suite for ValidationReport"""

    def test_empty_is_ok(self):
        report = ValidationReport()
        assert report.ok
        assert str(report) == "ok"
        assert report.to_json_lines() == ""

    def test_rules_in_first_seen_order(self):
        report = ValidationReport()
        report.add("b", (1,), "first")
        report.add("a", (2,), "second")
        report.add("b", (3,), "third")
        assert report.rules() == ["b", "a"]

    def test_json_lines(self):
        report = ValidationReport()
        report.add("proper.monochromatic", (ProductVertex(1, 1), ProductVertex(1, 2)), "same")
        line = json.loads(report.to_json_lines())

        assert line["rule"] == "proper.monochromatic"
        assert line["indices"] == [[1, 1, None], [1, 2, None]]

    def test_extend(self):
        a, b = ValidationReport(), ValidationReport()
        b.add("x", (), "m")
        assert not a.extend(b).ok
