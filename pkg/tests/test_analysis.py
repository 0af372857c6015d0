from fractions import Fraction

import pytest

import corefkit as kit
from corefkit import analysis
from conftest import document_text, parse

ZERO = [
    [
        ("1", "Anna", "PROPN", "Gender=Fem|Number=Sing", "2", "nsubj"),
        ("2", "said", "VERB", "_", "0", "root"),
        ("2.1", "_", "PRON", "Gender=Fem|Number=Sing", "_", "_", "3:nsubj"),
        ("3", "left", "VERB", "_", "2", "ccomp"),
        ("4", ".", "PUNCT", "_", "2", "punct"),
    ],
]
ZERO_GOLD = [["Entity=(e1-person-1)", "_", "Entity=(e1-person-1)", "_", "_"]]

VLOG = [[
    ("1", "I", "PRON", "Number=Sing|Person=1|PronType=Prs", "2", "nsubj"),
    ("2", "think", "VERB", "_", "0", "root"),
    ("3", "you", "PRON", "Person=2|PronType=Prs", "2", "obj"),
    ("4", ".", "PUNCT", "_", "2", "punct"),
]]
ACADEMIC = [[
    ("1", "Results", "NOUN", "Number=Plur", "2", "nsubj"),
    ("2", "vary", "VERB", "_", "0", "root"),
    ("3", ".", "PUNCT", "_", "2", "punct"),
]]


@pytest.fixture
def anna_corpus(anna):
    return kit.Corpus([anna], dataset="en_test", language="en")


@pytest.fixture
def zero_corpus():
    return parse(document_text("cs_zero", ZERO, ZERO_GOLD), dataset="cs_test", language="cs")


def test_corpus_statistics(john_corpus):
    report = analysis.corpus_statistics(john_corpus)
    assert report["docs"] == 1
    assert report["sentences"] == 2
    assert report["tokens"] == 8
    assert report["sents_per_doc"] == 2
    assert report["tokens_per_sent"] == 4
    assert report["entities"] == 2
    assert report["mentions"] == 4
    assert report["mentions_per_entity"] == 2
    assert report.get("tokens_per_sent").render() == "4.00"


def test_corpus_statistics_of_empty_corpus():
    report = analysis.corpus_statistics(kit.Corpus(dataset="empty"))
    assert report["docs"] == 0
    assert report["sents_per_doc"] is None
    assert report.get("sents_per_doc").render() == "n/a"


def test_head_position(john_corpus, anna_corpus):
    report = analysis.head_position_stats(john_corpus)
    assert report["pre_modified"] == 1
    assert report["pre_modified_all_mentions"] == Fraction(1, 4)
    assert report.get("pre_modified").render() == "100.00"
    assert report.get("pre_modified_all_mentions").render() == "25.00"
    assert analysis.head_position_stats(anna_corpus)["pre_modified"] is None


def test_mention_type_distribution(john_corpus):
    report = analysis.mention_type_distribution(john_corpus)
    assert report["OvertPronoun"] == Fraction(1, 2)
    assert report["ProperNoun"] == Fraction(1, 4)
    assert report["NominalNoun"] == Fraction(1, 4)
    assert report["ZeroPronoun"] == 0
    assert sum(row.value for row in report.rows) == 1


def test_anaphor_antecedent_ranking(john_corpus):
    ranking = analysis.anaphor_antecedent_ranking(john_corpus, kit.MentionType.OvertPronoun)
    assert [(category.letter, count) for category, count in ranking] == [("O", 1), ("S", 1)]
    assert analysis.anaphor_antecedent_ranking(john_corpus, kit.MentionType.NominalNoun) == []
    report = analysis.anaphor_antecedent_report(john_corpus)
    assert [row.key for row in report.rows] == ["OvertPronoun:1:O", "OvertPronoun:2:S"]


def test_first_mentions(john_corpus):
    report = analysis.first_mention_stats(john_corpus)
    assert report["first_is_longest"] == 1
    assert report["first_is_nominal_or_proper"] == 1


def test_entity_size(anna_corpus):
    report = analysis.entity_size_stats(anna_corpus)
    assert report["mentions_per_entity"] == Fraction(3, 2)
    assert report["mentions_per_entity_without_singletons"] == 2


def test_competing_antecedents(anna_corpus, john_corpus, zero_corpus):
    assert analysis.competing_antecedents(anna_corpus, "overt") == (1, 1)
    assert analysis.competing_antecedents(john_corpus, "overt") == (1, 0)
    assert analysis.competing_antecedents(zero_corpus, "zero") == (1, 0)
    assert analysis.competing_antecedents(zero_corpus, "overt") == (None, None)
    report = analysis.competing_antecedents_report(anna_corpus)
    assert report["overt_valid_examinations"] == 1
    assert report["overt_mean_competitors"] == 1
    assert report["zero_valid_examinations"] is None
    for kind in analysis.PRONOUN_KINDS:
        for corpus in [anna_corpus, john_corpus, zero_corpus]:
            valid, competitors = analysis.competing_antecedents(corpus, kind)
            report = analysis.competing_antecedents_report(corpus)
            assert report["{}_valid_examinations".format(kind)] == valid
            assert report["{}_mean_competitors".format(kind)] == competitors


def test_genre_pronoun_frequency():
    text = document_text("GUM_vlog_one", VLOG) + document_text("GUM_academic_two", ACADEMIC)
    corpus = parse(text)
    assert analysis.genre_pronoun_frequency(corpus) == [("academic", 0), ("vlog", 4000)]
    assert analysis.genre_of(corpus.documents[0], r"^GUM_(v)") == "v"
    assert analysis.genre_of(corpus.documents[1], r"^nothing") == "unknown"
    report = analysis.genre_report(corpus)
    assert report.get("vlog").render() == "4000.00"
    assert report.get("vlog").denominator == 4


def test_genre_stored_on_the_document():
    corpus = parse(document_text("GUM_vlog_one", VLOG))
    document = corpus.documents[0]
    assert document.genre == "vlog"
    document.genre = "news"
    assert analysis.genre_of(document) == "news"
    assert analysis.genre_of(document, r"^GUM_(v)") == "v"
    assert analysis.genre_pronoun_frequency(corpus) == [("news", 4000)]


def test_semantic_distance(john_corpus):
    vectors = kit.MentionVectors({
        ("doc1", 1, "1"): [0.0, 0.0],
        ("doc1", 1, "3"): [3.0, 4.0],
        ("doc1", 1, "3,4"): [1.0, 1.0],
        ("doc1", 2, "1"): [1.0, 1.0],
    })
    mean, variance, pairs = analysis.semantic_distance(john_corpus, vectors)
    assert pairs == 2
    assert mean == pytest.approx(2.5)
    assert variance == pytest.approx(6.25)


def test_semantic_distance_names_missing_vectors(john_corpus):
    vectors = kit.MentionVectors({("doc1", 1, "1"): [0.0, 0.0]})
    with pytest.raises(kit.MissingVectorsError) as info:
        analysis.semantic_distance(john_corpus, vectors)
    assert len(info.value.missing) == 3
    assert ("doc1", 2, "1") in info.value.missing


def test_vectors_file(tmp_path):
    path = tmp_path / "vectors.tsv"
    path.write_text("# doc sentence span values\ndoc1\t1\t3,4\t0.5\t1\n", encoding="utf-8")
    vectors = kit.MentionVectors.read(str(path))
    assert len(vectors) == 1
    assert list(vectors.get(("doc1", 1, "3,4"))) == [0.5, 1.0]
    path.write_text("doc1\t1\t1\t0.5\ndoc1\t1\t3\t0.5\t1\n", encoding="utf-8")
    with pytest.raises(kit.CorefkitError):
        kit.MentionVectors.read(str(path))


def test_analyze_selects_statistics(john_corpus):
    reports = analysis.analyze(john_corpus)
    assert [i.statistic for i in reports] == analysis.STATISTICS[:-1]
    reports = analysis.analyze(john_corpus, statistics=["genre", "head-position"])
    assert [i.statistic for i in reports] == ["head-position", "genre"]
