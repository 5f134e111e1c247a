import re
import xml.etree.ElementTree as ET

import pytest

from latpath.count import count_complex, count_real, count_welschinger
from latpath.geometry import DirectionOrder
from latpath.real import PLUS_PLUS
from latpath.render import RenderSpec, render

X_MINUS = DirectionOrder((1, 0), (0, -1))
NS = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("select, expected", [("nonzero", 5), ("all", 8)])
def test_svg_panels_and_captions(tri3, select, expected):
    report = count_complex(tri3, X_MINUS, 1)
    doc = render(report, RenderSpec(select=select))
    root = ET.fromstring(doc.split("\n", 1)[1])
    panels = root.findall(f"{NS}g")
    assert len(panels) == expected == (report.nonzero if select == "nonzero" else report.enumerated)
    values = [int(re.search(r"= (\d+)$", p.find(f"{NS}text").text).group(1)) for p in panels]
    assert sum(values) == 12
    for panel, entry in zip(panels, [e for e in report.entries if e.contribution or select == "all"]):
        markers = [c for c in panel.findall(f"{NS}circle") if c.get("class") == "marker"]
        assert len(markers) == len(entry.path) == report.n + 1


def test_svg_orientation(tri3):
    report = count_complex(tri3, X_MINUS, 1)
    root = ET.fromstring(render(report, RenderSpec(select=(0,), cell=10)).split("\n", 1)[1])
    panel = root.find(f"{NS}g")
    first = [c for c in panel.findall(f"{NS}circle") if c.get("class") == "marker"][0]
    # the path starts at (0,3), the top-left corner of the panel
    assert (first.get("cx"), first.get("cy")) == ("10", "10")


def test_empty_selection_draws_polygon_only(tri3):
    report = count_complex(tri3, X_MINUS, 1)
    root = ET.fromstring(render(report, RenderSpec(select=())).split("\n", 1)[1])
    assert root.find(f"{NS}g/{NS}polygon") is not None
    assert root.find(f"{NS}g/{NS}polyline") is None
    text = render(report, RenderSpec(select=(), fmt="ascii"))
    assert "*" not in text and text.count(".") == 10


def test_ascii_markers(tri4):
    report = count_real(tri4, X_MINUS, 2, [PLUS_PLUS] * 12)
    text = render(report, RenderSpec(select=(5,), fmt="ascii"))
    grid = text.split("path:")[0]
    assert grid.count("*") == 13
    assert "μR" in text


def test_welschinger_caption(tri2):
    report = count_welschinger(tri2, X_MINUS, 1)
    assert "ν" in render(report, RenderSpec(select="all", fmt="ascii"))


def test_rendering_leaves_report_alone(tri3):
    report = count_complex(tri3, X_MINUS, 1)
    before = report.to_json()
    render(report, RenderSpec(select="all"))
    render(report, RenderSpec(select="all", fmt="ascii"))
    assert report.to_json() == before


def test_bad_spec():
    with pytest.raises(ValueError):
        RenderSpec(cell=0)
    with pytest.raises(ValueError):
        RenderSpec(fmt="png")
