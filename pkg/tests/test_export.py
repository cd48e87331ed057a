import re
import warnings

import numpy as np
import pytest

from planarcurv.embedding import build_from_rotation_system
from planarcurv.errors import LayoutSingular
from planarcurv.export import export_dot, export_svg, layout, ring_layout, tutte_layout
from planarcurv.generators import cube, rhombille, sharp_big_face, square_lattice


def _segments_cross(p, q, r, s):
    def orient(a, b, c):
        return np.sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
    return (orient(p, q, r) * orient(p, q, s) < 0) and (orient(r, s, p) * orient(r, s, q) < 0)


def test_cube_drawing_is_planar():
    c = cube()
    pos, residual = tutte_layout(c)
    assert residual <= 1e-9
    edges = c.map.edges
    for i, (a, b) in enumerate(edges):
        for u, v in edges[i + 1:]:
            if {a, b} & {u, v}:
                continue
            assert not _segments_cross(pos[a], pos[b], pos[u], pos[v])
    svg = export_svg(c)
    assert svg.count("<polyline") == 12
    assert len(re.findall(r"<text data-face", svg)) == 6


def test_sharp_coloring():
    svg = export_svg(sharp_big_face(12, 3), color_curvature=True)
    assert svg.count('class="vertex positive"') == 12
    assert svg.count('class="vertex negative"') == 0


def test_rhombille_labels():
    r = rhombille(3)
    svg = export_svg(r)
    labels = re.findall(r'data-face="\d+" x="[^"]+" y="[^"]+">(\d+)<', svg)
    assert labels and set(labels) == {"4"}
    assert len(labels) == len(r.inner_faces())


def test_patch_residual():
    _, residual = tutte_layout(square_lattice(8, 8))
    assert residual <= 1e-9


def test_layout_singular():
    t = build_from_rotation_system([[1], [0], [3], [2]], strict=False)
    with pytest.raises(LayoutSingular):
        tutte_layout(t, face=0)


def test_ring_fallback(monkeypatch):
    import planarcurv.export as ex
    monkeypatch.setattr(ex, "RESIDUAL_TOL", -1.0)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        pos = layout(cube())
    assert any("ring layout" in str(w.message) for w in caught)
    assert np.allclose(pos, ring_layout(cube()))


def test_dot():
    dot = export_dot(cube())
    assert dot.startswith("graph G {") and dot.count(" -- ") == 12
    assert 'curvature="1/4"' in dot
