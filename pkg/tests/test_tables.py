"""The four published-data verifiers must reproduce every row exactly."""

import pytest

from hypermaps.catalog import (
    CATALOG_NAMES,
    build_named,
    full_catalog,
    verify_table1,
    verify_table2,
    verify_table3,
    verify_theorem_mk,
)
from hypermaps import ParseError


import pytest as _pytest


@_pytest.fixture(scope="module")
def t1rows():
    return verify_table1()


@_pytest.fixture(scope="module")
def t2rows():
    return verify_table2()


@_pytest.fixture(scope="module")
def t3rows():
    return verify_table3()


@_pytest.fixture(scope="module")
def mkrows():
    return verify_theorem_mk()


def by_id(rows):
    return {row.row_id: row for row in rows}


def assert_all_match(rows):
    bad = [(r.row_id, r.mismatches()) for r in rows if not r.matches]
    assert not bad, f"mismatched rows: {bad}"


class TestRegistry:
    def test_catalog_has_at_least_sixty_entries(self):
        assert len(CATALOG_NAMES) >= 60
        assert len(full_catalog()) == len(CATALOG_NAMES)

    def test_named_builds_are_cached_and_consistent(self):
        a = build_named("wal(T)")
        b = build_named("wal(T)")
        assert a is b

    def test_nested_expressions(self):
        h = build_named("dual02(dual02(P3))")
        assert h == build_named("P3")

    def test_bad_names_rejected(self):
        for bad in ("", "Q3", "wal(", "dual03(T)", "P0", "walsh(T)"):
            with pytest.raises(ParseError):
                build_named(bad)


class TestTable1:
    def test_all_rows_match(self, t1rows):
        assert_all_match(t1rows)

    def test_row_count(self, t1rows):
        # two parameterized families at k <= 6 plus three fixed rows
        assert len(t1rows) == 15

    def test_spot_checks(self, t1rows):
        rows = by_id(t1rows)
        assert rows["3"].expected["flags"] == 24
        assert rows["3"].expected["mon_order"] == 24
        assert rows["4"].expected["flags"] == 48
        assert rows["5"].expected["flags"] == 120
        assert rows["1[k=4]"].expected["flags"] == 8
        assert rows["2[k=5]"].expected["flags"] == 20


class TestTable2:
    def test_all_rows_match(self, t2rows):
        assert_all_match(t2rows)

    def test_row_count(self, t2rows):
        # 16 fixed rows, 7 parameterized at n <= 6, plus 6 overlap rows
        assert len(t2rows) == 16 + 7 * 6 + 6

    def test_doubled_tetrahedron_row(self, t2rows):
        row = by_id(t2rows)["14"]
        assert row.expected["vertex_profile"] == ((2, 6), (3, 4))
        assert row.expected["edge_profile"] == (2, 12)
        assert row.expected["face_profile"] == (6, 4)
        assert row.expected["flags"] == 48

    def test_doubled_prism_row_at_n4(self, t2rows):
        row = by_id(t2rows)["2[n=4]"]
        assert row.expected["vertex_profile"] == ((1, 8), (2, 4))
        assert row.expected["edge_profile"] == (4, 4)
        assert row.expected["face_profile"] == (8, 2)
        assert row.expected["flags"] == 32

    def test_doubled_dipole_row_at_n2(self, t2rows):
        row = by_id(t2rows)["23[n=2]"]
        assert row.expected["vertex_profile"] == ((2, 1), (2, 1))
        assert row.expected["edge_profile"] == (2, 2)
        assert row.expected["face_profile"] == (2, 2)
        assert row.expected["flags"] == 8

    def test_every_row_is_spherical_and_bipartite_regular(self, t2rows):
        for row in t2rows:
            if "chi" in row.expected:
                assert row.expected["chi"] == 2
                assert row.expected["bipartite_regular"] is True


class TestTable3:
    def test_all_rows_match(self, t3rows):
        assert_all_match(t3rows)

    def test_row_count(self, t3rows):
        # 16 fixed rows, 7 parameterized at n <= 5
        assert len(t3rows) == 16 + 7 * 5

    def test_doubled_tetrahedron_row(self, t3rows):
        row = by_id(t3rows)["6"]
        assert row.expected["cc_type"] == (1, 2, 2)
        assert row.expected["cc_flags"] == 4
        assert row.expected["core_type"] == (3, 4, 6)
        assert row.expected["core_flags"] == 576
        assert row.expected["core_genus"] == 37
        assert row.expected["iota"] == 12
        assert row.expected["upsilon"] == "Alt4"

    def test_doubled_prism_row_at_n2(self, t3rows):
        row = by_id(t3rows)["2[n=2]"]
        assert row.expected["iota"] == 2
        assert row.expected["upsilon"] == "Cyclic(2)"
        assert row.expected["core_flags"] == 32
        assert row.expected["core_genus"] == 1

    def test_doubled_prism_wal_row_at_n3(self, t3rows):
        row = by_id(t3rows)["13[n=3]"]
        assert row.expected["iota"] == 1
        assert row.expected["cc_flags"] == 24
        assert row.expected["core_flags"] == 24
        assert row.label == "wal(P3)"

    def test_largest_rows_reach_published_genera(self, t3rows):
        rows = by_id(t3rows)
        genera = {rows["8"].expected["core_genus"], rows["16"].expected["core_genus"],
                  rows["18"].expected["core_genus"], rows["22"].expected["core_genus"],
                  rows["10"].expected["core_genus"], rows["5"].expected["core_genus"]}
        assert {841, 1141, 1381, 661} <= genera
        assert rows["8"].expected["core_flags"] == 14400


class TestTheoremMk:
    def test_all_rows_match(self, mkrows):
        assert_all_match(mkrows)

    def test_row_count(self, mkrows):
        assert len(mkrows) == 8

    def test_odd_case(self, mkrows):
        row = by_id(mkrows)["k=3"]
        assert row.expected["genus"] == 1
        assert row.expected["iota_pin"] == 3
        assert row.expected["iota_wal"] == 6
        assert row.expected["ups_wal"] == "Cyclic(6)"
        assert row.expected["ups_pin_order"] == 3

    def test_even_case(self, mkrows):
        row = by_id(mkrows)["k=2"]
        assert row.expected["genus"] == 1
        assert row.expected["iota_pin"] == 4
        assert row.expected["iota_wal"] == 4
        assert row.expected["ups_pin_order"] == 4

    def test_every_mk_is_regular_and_orientable(self, mkrows):
        for row in mkrows:
            assert row.expected["regular"] is True
            assert row.expected["orientable"] is True
