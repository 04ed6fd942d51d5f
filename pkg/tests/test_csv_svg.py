"""CSV exactness and SVG validity/determinism."""
import math
import xml.etree.ElementTree as ET

import pytest

from ecokmap.csvio import format_value, read_csv, render_csv, write_csv
from ecokmap.svgplot import count_data_elements, heatmap_svg, line_svg, scatter_svg


class TestCsv:
    def test_float_formatting_is_lossless(self):
        values = [1 / 3, math.pi, 0.1, 1e-300, -4.9e15, 2.0, 0.0]
        for v in values:
            assert float(format_value(v)) == v

    def test_nan_round_trips_as_nan(self):
        s = format_value(math.nan)
        assert s == "nan"
        assert math.isnan(float(s))

    def test_ints_written_without_decimal_point(self):
        assert format_value(42) == "42"

    def test_write_read_cycle_exact(self, tmp_path):
        rows = [(1, 0.1 + 0.2, -1 / 7), (2, 5e-324, 1e308)]
        path = tmp_path / "t.csv"
        write_csv(path, ["n", "a", "b"], rows)
        header, got = read_csv(path)
        assert header == ["n", "a", "b"]
        for (n, a, b), row in zip(rows, got):
            assert int(row[0]) == n
            assert float(row[1]) == a
            assert float(row[2]) == b

    def test_rendering_is_deterministic_with_unix_newlines(self):
        rows = [(1, 2.5)]
        text = render_csv(["n", "v"], rows)
        assert text == "n,v\n1,2.5\n"
        assert render_csv(["n", "v"], rows) == text


POINTS = [(0.1, 0.5), (0.2, 0.9), (0.35, 0.2), (0.8, 0.4)]


class TestSvg:
    @pytest.mark.parametrize(
        "render",
        [
            lambda xs, ys: scatter_svg(xs, ys, xlabel="x", ylabel="y", title="t"),
            lambda xs, ys: line_svg(xs, ys, xlabel="x", ylabel="y", title="t"),
            lambda xs, ys: heatmap_svg(xs, ys, ys, xlabel="x", ylabel="y", title="t"),
        ],
        ids=["scatter", "line", "heatmap"],
    )
    def test_valid_xml_and_point_count(self, render):
        xs = [p[0] for p in POINTS]
        ys = [p[1] for p in POINTS]
        svg = render(xs, ys)
        root = ET.fromstring(svg)  # raises on malformed XML
        assert root.tag.endswith("svg")
        assert count_data_elements(svg) == len(POINTS)

    def test_repeated_render_byte_identical(self):
        xs = [p[0] for p in POINTS]
        ys = [p[1] for p in POINTS]
        a = scatter_svg(xs, ys, xlabel="x", ylabel="y", title="t")
        b = scatter_svg(xs, ys, xlabel="x", ylabel="y", title="t")
        assert a == b

    def test_degenerate_range_still_renders(self):
        svg = scatter_svg([1.0, 1.0], [2.0, 2.0], xlabel="x", ylabel="y", title="t")
        ET.fromstring(svg)
        assert count_data_elements(svg) == 2

    def test_heatmap_handles_nan_cells(self):
        svg = heatmap_svg(
            [0.0, 0.1, 0.2], [0.0, 0.0, 0.0], [0.5, math.nan, -0.5],
            xlabel="c2", ylabel="c3", title="t",
        )
        ET.fromstring(svg)
        assert count_data_elements(svg) == 3
        assert "#b0b0b0" in svg

    def test_title_is_escaped(self):
        svg = scatter_svg([0.0], [0.0], xlabel="x", ylabel="y", title="a < b & c")
        ET.fromstring(svg)
