import logging

import pytest

import corefkit as kit
from corefkit import taxonomy


def test_categories_cover_every_relation_once():
    assert [i.letter for i in taxonomy.CATEGORIES] == list("SODNCMFRWLPT")
    rows = taxonomy.category_table()
    assert len(rows) == 37
    relations = [relation for _, _, relation in rows]
    assert len(set(relations)) == 37
    assert rows[0] == ("S", "core arguments_subject", "nsubj")


@pytest.mark.parametrize("deprel, letter", [
    ("nsubj", "S"),
    ("nsubj:pass", "S"),
    ("obj", "O"),
    ("iobj", "O"),
    ("obl:tmod", "D"),
    ("nmod:poss", "N"),
    ("appos", "N"),
    ("acl:relcl", "C"),
    ("amod", "M"),
    ("det", "F"),
    ("conj", "R"),
    ("flat:name", "W"),
    ("parataxis", "L"),
    ("orphan", "P"),
    ("root", "T"),
    ("punct", "T"),
])
def test_ud_category(deprel, letter):
    assert kit.ud_category(deprel).letter == letter


def test_unknown_relation_is_other(monkeypatch, caplog):
    monkeypatch.setattr(taxonomy, "_unknown_relations", set())
    with caplog.at_level(logging.WARNING, logger="corefkit"):
        assert kit.ud_category("madeup:rel") is taxonomy.CATEGORY_OTHER
        assert kit.ud_category("madeup") is taxonomy.CATEGORY_OTHER
        assert kit.ud_category("_") is taxonomy.CATEGORY_OTHER
    warnings = [i.getMessage() for i in caplog.records if i.levelno == logging.WARNING]
    assert warnings == [
        "[WARNING] Unknown dependency relation `madeup`, counted as T.",
        "[WARNING] Unknown dependency relation `_`, counted as T.",
    ]


def test_mention_types(john):
    types = [kit.filters.mention_type(i) for i in john.mentions]
    assert types == [
        kit.MentionType.ProperNoun,
        kit.MentionType.OvertPronoun,
        kit.MentionType.NominalNoun,
        kit.MentionType.OvertPronoun,
    ]
    verb = john.sentences[0].tokens[1]
    assert kit.classify_mention_type(verb) is kit.MentionType.Other
