import io

import pytest

from polyak.presentation import (
    RelationVector,
    build_generators,
    build_presentation,
    g2_relations,
    g3_relations,
    load_presentation,
    save_presentation,
    truncate_term,
)
from polyak.words import GaussWord, enumerate_canonical, has_adjacent_double

W = GaussWord.from_text


class TestGeneratorTable:
    def test_degree2(self):
        table = build_generators(2)
        assert [str(w) for w in table.words] == ["ABAB"]

    def test_degree1_empty(self):
        assert len(build_generators(1)) == 0

    def test_counts(self):
        assert len(build_generators(4)) == 42
        assert len(build_generators(5)) == 371

    def test_rank_major_lexicographic(self):
        table = build_generators(4)
        keys = [(w.rank, w.raw) for w in table.words]
        assert keys == sorted(keys)
        assert all(not has_adjacent_double(w) for w in table.words)

    def test_index_round_trip(self):
        table = build_generators(4)
        for i, w in enumerate(table.words):
            assert table.id_of(w) == i


class TestTruncateTerm:
    def test_adjacent_double_drops(self):
        table = build_generators(4)
        assert truncate_term(table, W("AABB")) is None

    def test_rank_bound_drops(self):
        table = build_generators(4)
        rank5 = enumerate_canonical(5)[500]
        assert truncate_term(table, rank5) is None

    def test_empty_drops(self):
        table = build_generators(4)
        assert truncate_term(table, W("-")) is None

    def test_generator_id(self):
        table = build_generators(4)
        assert truncate_term(table, W("ABAB")) == table.id_of(W("ABAB"))


class TestRelationVector:
    def test_sign_normalization(self):
        assert RelationVector([(3, -1), (5, 2)]).terms == ((3, 1), (5, -2))

    def test_drops_zeros(self):
        assert RelationVector([(1, 0), (2, 1)]).terms == ((2, 1),)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            RelationVector([(1, 0)])

    def test_duplicate_ids_rejected(self):
        with pytest.raises(ValueError):
            RelationVector([(1, 1), (1, 1)])


class TestRelations:
    def test_g2_example_vector(self):
        table = build_generators(3)
        rels, raw = g2_relations(3, table)
        expected = RelationVector(
            [(table.id_of(W("ABCACB")), 1), (table.id_of(W("ABAB")), 2)]
        )
        assert expected in rels
        assert raw >= len(rels)

    def test_g2_degree4_raw_count(self):
        _, raw = g2_relations(4)
        assert raw == 161

    def test_g3_example_vector(self):
        # Expanding the eight terms at the unique site of ABACBC leaves
        # [ABACBC] + [ABAB] - [ABCBCA] after truncation and merging.
        table = build_generators(3)
        rels, raw = g3_relations(3, table)
        expected = RelationVector(
            [
                (table.id_of(W("ABACBC")), 1),
                (table.id_of(W("ABAB")), 1),
                (table.id_of(W("ABCBCA")), -1),
            ]
        )
        assert expected in rels

    def test_g3_degree4_raw_count(self):
        _, raw = g3_relations(4)
        assert raw == 62

    def test_coefficient_ranges_degree4(self, pres4):
        table = pres4.generators
        g2, _ = g2_relations(4, table)
        for rel in g2:
            assert set(c for _, c in rel.terms) <= {1, 2}
        g3, _ = g3_relations(4, table)
        for rel in g3:
            assert all(-2 <= c <= 2 and c != 0 for _, c in rel.terms)

    def test_valid_ids_and_distinct(self, pres5):
        seen = set()
        for rel in pres5.relations:
            assert rel.terms not in seen
            seen.add(rel.terms)
            for g, _ in rel.terms:
                assert 0 <= g < len(pres5.generators)


class TestBuildPresentation:
    def test_degree4(self, pres4):
        assert len(pres4.generators) == 42
        assert len(pres4.relations) == 97
        assert pres4.raw_counts == (161, 62)

    def test_degree5(self, pres5):
        assert len(pres5.generators) == 371
        assert len(pres5.relations) == 998
        assert pres5.raw_counts == (1806, 672)

    def test_degree1_trivial(self):
        pres = build_presentation(1)
        assert len(pres.generators) == 0
        assert pres.relations == ()

    def test_deterministic_serialization(self, pres4):
        again = build_presentation(4)
        a, b = io.StringIO(), io.StringIO()
        save_presentation(pres4, a)
        save_presentation(again, b)
        assert a.getvalue() == b.getvalue()

    def test_worker_fanout_matches_sequential(self, pres4):
        parallel = build_presentation(4, workers=2)
        a, b = io.StringIO(), io.StringIO()
        save_presentation(pres4, a)
        save_presentation(parallel, b)
        assert a.getvalue() == b.getvalue()


class TestSerialization:
    def test_round_trip(self, pres4):
        buf = io.StringIO()
        save_presentation(pres4, buf)
        buf.seek(0)
        loaded = load_presentation(buf)
        assert loaded.degree == pres4.degree
        assert loaded.generators.words == pres4.generators.words
        assert loaded.relations == pres4.relations

    def test_header_line(self, pres4):
        buf = io.StringIO()
        save_presentation(pres4, buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == "# polyak-presentation v1"
        assert lines[1] == "degree 4"
        assert lines[2] == "generators 42"

    def test_bad_header_rejected(self):
        with pytest.raises(ValueError):
            load_presentation(io.StringIO("# something else\n"))

    def test_bad_relation_id_rejected(self, pres4):
        buf = io.StringIO()
        save_presentation(pres4, buf)
        text = buf.getvalue().rstrip("\n").splitlines()
        text[-1] = "99999:1"
        with pytest.raises(ValueError):
            load_presentation(io.StringIO("\n".join(text) + "\n"))
