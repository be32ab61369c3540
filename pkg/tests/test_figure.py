import re
import xml.etree.ElementTree as ET

import pytest

from sl3coh.cohomology import andersen_criterion
from sl3coh.figure import MAX_EXTENT, is_prime, render_svg, shaded_regions, st_labels

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg.encode())


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_golden_labels_at_five():
    root = parse(render_svg(5, 5))
    texts = {(t.get("data-kind"), t.get("data-r"), t.get("data-s")): t.text
             for t in root.iter(NS + "text")}
    assert texts[("S", "15", "-20")] == "6"
    assert texts[("T", "18", "-17")] == "7"


def test_output_is_deterministic():
    assert render_svg(3, 4) == render_svg(3, 4)
    assert "<svg" in render_svg(3, 4) and not re.search(r"\d{4}-\d\d-\d\d", render_svg(3, 4))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_regions_cover_exactly_the_two_degree_weights(p):
    extent = p * p
    inside = set()
    for n, t, swapped, corners in shaded_regions(p, extent):
        rs = [c[0] for c in corners]
        ss = [c[1] for c in corners]
        for r in range(int(min(rs)) - 1, int(max(rs)) + 2):
            for s in range(int(min(ss)) - 1, int(max(ss)) + 2):
                if min(rs) < r < max(rs) and min(ss) < s < max(ss):
                    inside.add((r, s))
    for r in range(-extent, extent + 1):
        for s in range(-extent, extent + 1):
            assert ((r, s) in inside) == andersen_criterion((r, s), p), (r, s)


def test_one_polygon_per_region_and_one_text_per_label():
    root = parse(render_svg(3, 4))
    polys = list(root.iter(NS + "polygon"))
    texts = list(root.iter(NS + "text"))
    assert len(polys) == len(shaded_regions(3, 3 * 5))
    assert len(texts) == len(st_labels(3, 4))
    assert root.find(f".//{NS}line[@id='fundamental-line']") is not None


def test_no_labels_at_two():
    root = parse(render_svg(2, 3))
    assert not list(root.iter(NS + "text"))
    assert list(root.iter(NS + "polygon"))


def test_errors():
    with pytest.raises(ValueError):
        render_svg(4, 3)
    with pytest.raises(ValueError):
        render_svg(5, -1)
    with pytest.raises(ValueError):
        render_svg(7, MAX_EXTENT)
