from __future__ import annotations

import pytest

from domino3d.geometry import (
    BLACK,
    WHITE,
    Cell,
    Cube,
    EmptyFloor,
    FloorPlan,
    GeometryError,
    NotConnected,
    NotSimplyConnected,
    box_floor,
    box_region,
    cell_color,
    cube_color,
    duplex_region,
    make_region,
    normalize_region,
    parse_region,
    region_to_text,
)


def test_cell_color_convention() -> None:
    assert cell_color(Cell(0, 0)) == WHITE
    assert cell_color(Cell(1, 0)) == BLACK
    assert cell_color(Cell(3, 4)) == BLACK


def test_cube_color_convention() -> None:
    assert cube_color(Cube(0, 0, 0)) == WHITE
    assert cube_color(Cube(0, 0, 1)) == BLACK
    # the two cubes over any cell always have opposite colors
    for x in range(3):
        for y in range(3):
            assert cube_color(Cube(x, y, 0)) != cube_color(Cube(x, y, 1))


def test_duplex_region_has_no_holes() -> None:
    region = make_region(box_floor(3, 3), box_floor(3, 3))
    assert region.is_duplex
    assert region.holes == ()
    assert region.sources == ()
    assert region.sinks == ()
    assert len(region.cubes) == 18


def test_shifted_floors_classify_holes_by_parity() -> None:
    top = box_floor(2, 2)
    bottom = top.translated(1, 0)
    region = make_region(top, bottom)
    assert not region.is_duplex
    assert len(region.holes) == 4  # column x=0 in top only, column x=2 in bottom only
    # classification: hole cube color decides source (white) vs sink (black)
    expected_sources = sorted(
        Cube(c.x, c.y, z)
        for c, z in region.holes
        if cube_color(Cube(c.x, c.y, z)) == WHITE
    )
    assert sorted(region.sources) == expected_sources
    assert len(region.sources) == 2
    assert len(region.sinks) == 2


def test_unequal_floor_fixture_one_source_one_sink() -> None:
    # 3x3 top; bottom moves cell (2,2) to (3,1): one hole per floor.
    top = box_floor(3, 3)
    bottom_cells = set(top.cells) - {Cell(2, 2)} | {Cell(3, 1)}
    region = make_region(top, FloorPlan(bottom_cells))
    assert len(region.sources) == 1
    assert len(region.sinks) == 1
    # (2,2,0): 2+2+0 even -> white cube -> source; (3,1,1): odd -> black -> sink
    assert region.sources == (Cube(2, 2, 0),)
    assert region.sinks == (Cube(3, 1, 1),)


def test_empty_floor_rejected() -> None:
    with pytest.raises(EmptyFloor):
        FloorPlan([])


def test_disconnected_floor_rejected() -> None:
    with pytest.raises(NotConnected):
        FloorPlan([Cell(0, 0), Cell(2, 0)])
    # diagonal contact is not edge contact
    with pytest.raises(NotConnected):
        FloorPlan([Cell(0, 0), Cell(1, 1)])


def test_floor_with_pocket_rejected() -> None:
    ring = [
        Cell(x, y)
        for x in range(3)
        for y in range(3)
        if (x, y) != (1, 1)
    ]
    with pytest.raises(NotSimplyConnected):
        FloorPlan(ring)


def test_simply_connected_flood_fill_property() -> None:
    # any solid rectangle and an L-shape pass; the ring above fails
    box_floor(5, 4)
    FloorPlan([Cell(0, 0), Cell(0, 1), Cell(1, 1)])


def test_color_count() -> None:
    white, black = box_floor(7, 3).color_count()
    assert (white, black) == (11, 10)


def test_normalize_region_even_translation() -> None:
    region = box_region(2, 3).translated(2, 4)  # even-sum offset
    norm = normalize_region(region)
    assert norm.top.bbox() == (0, 0, 1, 2)

    odd = box_region(2, 3).translated(1, 0)  # odd-sum offset
    norm = normalize_region(odd)
    # translation back by (-1, 0) would flip colors; lands at x=1 instead
    assert norm.top.bbox() == (1, 0, 2, 2)
    anchor = min(norm.top.cells, key=lambda c: (c.y, c.x))
    assert cell_color(anchor) == cell_color(min(odd.top.cells, key=lambda c: (c.y, c.x)))


def test_parse_region_single_block_duplex() -> None:
    text = "; a comment\n###\n###\n###\n"
    region = parse_region(text)
    assert region.is_duplex
    assert len(region.top) == 9


def test_parse_region_two_blocks() -> None:
    text = "###\n###\n###\n\n.##\n###\n###\n"
    region = parse_region(text)
    assert not region.is_duplex
    assert Cell(0, 0) in region.top
    assert Cell(0, 0) not in region.bottom
    assert region.holes == ((Cell(0, 0), 0),)


def test_parse_region_row_col_mapping() -> None:
    text = "#..\n.#.\n"
    with pytest.raises(NotConnected):
        parse_region(text)
    region = parse_region("##.\n.##\n")
    assert Cell(2, 1) in region.top
    assert Cell(2, 0) not in region.top


def test_region_text_round_trip() -> None:
    top = box_floor(3, 3)
    bottom_cells = set(top.cells) - {Cell(2, 2)} | {Cell(3, 1)}
    region = make_region(top, FloorPlan(bottom_cells))
    again = parse_region(region_to_text(region))
    assert again.top.cells == region.top.cells
    assert again.bottom.cells == region.bottom.cells

    dup = box_region(4, 2)
    assert parse_region(region_to_text(dup)).is_duplex


def test_parse_rejects_bad_block_counts() -> None:
    with pytest.raises(GeometryError):
        parse_region("")
    with pytest.raises(GeometryError):
        parse_region("##\n\n##\n\n##\n")
    with pytest.raises(GeometryError):
        parse_region("#x\n")


def test_cubes_sorted_z_y_x() -> None:
    region = box_region(2, 2)
    assert region.cubes == tuple(
        Cube(x, y, z) for z in (0, 1) for y in (0, 1) for x in (0, 1)
    )
