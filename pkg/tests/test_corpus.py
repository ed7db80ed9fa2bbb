import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bibrank.corpus import (
    load_corpus,
    normalize_author,
    normalize_term,
    record_from_dict,
    tokenize,
)
from bibrank.errors import CorpusError


def write_lines(path, lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def jsonl(*objs):
    return [json.dumps(obj) for obj in objs]


class TestLoadCorpus:
    def test_three_wellformed_lines(self, tmp_path):
        path = write_lines(
            tmp_path / "c.jsonl",
            jsonl(
                {"id": "d1", "title": "One"},
                {"id": "d2", "title": "Two"},
                {"id": "d3", "title": "Three"},
            ),
        )
        corpus = load_corpus(path)
        assert len(corpus) == 3
        assert [r.id for r in corpus] == ["d1", "d2", "d3"]
        assert corpus.by_id["d2"].title == "Two"

    def test_duplicate_id_names_the_id(self, tmp_path):
        path = write_lines(
            tmp_path / "c.jsonl",
            jsonl({"id": "d1", "title": "a"}, {"id": "d1", "title": "b"}),
        )
        with pytest.raises(CorpusError, match="d1"):
            load_corpus(path)

    def test_duplicate_author_deduplicated(self, tmp_path):
        path = write_lines(
            tmp_path / "c.jsonl",
            jsonl(
                {
                    "id": "d1",
                    "title": "T",
                    "authors": ["Luhmann, Niklas", "Luhmann, Niklas"],
                }
            ),
        )
        record = load_corpus(path).records[0]
        assert record.authors == ("Luhmann, Niklas",)

    def test_casefold_dedup_keeps_first_display(self):
        record = record_from_dict(
            {"id": "d1", "authors": ["LUHMANN, NIKLAS", "Luhmann,  Niklas"]}
        )
        assert record.authors == ("LUHMANN, NIKLAS",)

    def test_malformed_line_names_line_number(self, tmp_path):
        path = write_lines(
            tmp_path / "c.jsonl", [json.dumps({"id": "d1"}), "{not json"]
        )
        with pytest.raises(CorpusError, match="line 2"):
            load_corpus(path)

    def test_non_object_line_rejected(self, tmp_path):
        path = write_lines(tmp_path / "c.jsonl", [json.dumps({"id": "d1"}), "[1,2]"])
        with pytest.raises(CorpusError, match="line 2"):
            load_corpus(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text("", encoding="utf-8")
        with pytest.raises(CorpusError, match="no records"):
            load_corpus(path)

    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_corpus(tmp_path / "absent.jsonl")

    def test_blank_lines_skipped(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(
            json.dumps({"id": "d1"}) + "\n\n" + json.dumps({"id": "d2"}) + "\n",
            encoding="utf-8",
        )
        assert len(load_corpus(path)) == 2

    def test_unknown_fields_ignored(self):
        record = record_from_dict({"id": "d1", "title": "T", "publisher": "X"})
        assert record.id == "d1"

    def test_missing_id_rejected(self):
        with pytest.raises(CorpusError, match="'id'"):
            record_from_dict({"title": "T"})

    def test_year_must_be_nonnegative_int(self):
        with pytest.raises(CorpusError, match="year"):
            record_from_dict({"id": "d1", "year": -3})
        with pytest.raises(CorpusError, match="year"):
            record_from_dict({"id": "d1", "year": True})
        with pytest.raises(CorpusError, match="year"):
            record_from_dict({"id": "d1", "year": "2010"})
        assert record_from_dict({"id": "d1"}).year == 0

    def test_empty_list_entries_dropped(self):
        record = record_from_dict(
            {"id": "d1", "descriptors": ["  ", "Data Quality", ""]}
        )
        assert record.descriptors == ("Data Quality",)

    def test_load_is_deterministic(self, tmp_path):
        path = write_lines(
            tmp_path / "c.jsonl",
            jsonl(
                {"id": "d1", "title": "A", "authors": ["X, Y"]},
                {"id": "d2", "title": "B"},
            ),
        )
        assert load_corpus(path).records == load_corpus(path).records


class TestTokenize:
    def test_lowercase_and_split(self):
        assert tokenize("Data Quality") == ["data", "quality"]

    def test_empty(self):
        assert tokenize("") == []

    def test_punctuation_and_digits(self):
        assert tokenize("party-system (2)") == ["party", "system", "2"]

    def test_underscore_splits(self):
        assert tokenize("a_b") == ["a", "b"]

    def test_unicode_letters_kept(self):
        assert tokenize("Datenqualität überprüfen") == ["datenqualität", "überprüfen"]

    def test_duplicates_and_order_preserved(self):
        assert tokenize("data data quality data") == ["data", "data", "quality", "data"]

    @given(st.text(max_size=80))
    def test_roundtrip_through_space_join(self, text):
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens


class TestNormalizeAuthor:
    def test_trim_collapse_casefold(self):
        assert normalize_author("  Luhmann,  Niklas ") == "luhmann, niklas"

    def test_case_variants_share_key(self):
        assert normalize_author("LUHMANN, NIKLAS") == normalize_author(
            "Luhmann, Niklas"
        )

    def test_already_canonical(self):
        assert normalize_author("Kneer, Georg") == "kneer, georg"

    @given(st.text(max_size=60))
    def test_idempotent(self, name):
        once = normalize_author(name)
        assert normalize_author(once) == once

    @given(st.text(max_size=60))
    def test_term_normalization_idempotent(self, term):
        once = normalize_term(term)
        assert normalize_term(once) == once
