import itertools
import random

import pytest

import corefkit as kit
from corefkit import metrics
from corefkit.metrics import ClusterSet
from conftest import JOHN, document_text, parse_document

# "The mother of John left ." with a head-initial mention
MOTHER = [[
    ("1", "The", "DET", "_", "2", "det"),
    ("2", "mother", "NOUN", "Gender=Fem|Number=Sing", "5", "nsubj"),
    ("3", "of", "ADP", "_", "4", "case"),
    ("4", "John", "PROPN", "Gender=Masc|Number=Sing", "2", "nmod"),
    ("5", "left", "VERB", "_", "0", "root"),
    ("6", ".", "PUNCT", "_", "5", "punct"),
]]
MOTHER_GOLD = [["Entity=(e1-person-2", "_", "_", "Entity=(e2-person-1)e1)", "_", "_"]]
MOTHER_PRED = [["Entity=(c1-person-2", "_", "Entity=c1)", "Entity=(c2-person-1)", "_", "_"]]


def clusters(*groups, policy="include"):
    return ClusterSet([set(i) for i in groups], policy)


def test_identity_scores(john):
    for match in metrics.MATCH_MODES:
        for policy in metrics.SINGLETON_POLICIES:
            report = metrics.ScoreReport.from_counts(metrics.score_documents(john, john, match, policy))
            assert report.muc == (1.0, 1.0, 1.0)
            assert report.bcub == (1.0, 1.0, 1.0)
            assert report.ceafe == (1.0, 1.0, 1.0)
            assert report.conll_f1 == 1.0


def test_muc_worked_example():
    gold = clusters("abc", "d")
    pred = clusters("ab", "cd")
    assert metrics.muc(gold, pred) == pytest.approx((0.5, 0.5, 0.5))


def test_b_cubed_worked_example():
    gold = clusters("abc", "d")
    pred = clusters("ab", "cd")
    p, r, f1 = metrics.b_cubed(gold, pred)
    assert r == pytest.approx(2 / 3)
    assert p == pytest.approx(3 / 4)
    assert f1 == pytest.approx(2 * p * r / (p + r))


def test_ceafe_worked_example():
    gold = clusters("ab", "cd")
    pred = clusters("abcd")
    p, r, _ = metrics.ceafe(gold, pred)
    assert r == pytest.approx(1 / 3)
    assert p == pytest.approx(2 / 3)


def test_empty_prediction():
    gold = clusters("abc", "d")
    pred = clusters()
    assert metrics.b_cubed(gold, pred) == (0.0, 0.0, 0.0)
    assert metrics.ceafe(gold, pred) == (0.0, 0.0, 0.0)
    assert metrics.muc(clusters(), clusters()) == (0.0, 0.0, 0.0)


def test_singleton_predictions_recover_no_links():
    gold = clusters("abc", policy="exclude")
    pred = clusters("a", "b", "c", policy="exclude")
    assert pred.clusters == []
    assert metrics.muc(gold, pred)[1] == 0.0


def test_cluster_set_invariants():
    cluster_set = ClusterSet([{"a", "b"}, {"c"}, set(), {"d"}], "exclude")
    assert cluster_set.clusters == [frozenset("ab")]
    with pytest.raises(ValueError):
        ClusterSet([{"a", "b"}, {"b", "c"}], "exclude")
    with pytest.raises(ValueError):
        ClusterSet([{"a", "b"}, {"b"}], "exclude")
    assert ClusterSet([{"d"}], "include").clusters == [frozenset("d")]
    with pytest.raises(ValueError):
        ClusterSet([], "sometimes")


def test_removing_a_correct_link_never_raises_muc_recall():
    gold = clusters("abcd", "efg")
    full = metrics.muc(gold, clusters("abcd", "efg"))[1]
    split = metrics.muc(gold, clusters("ab", "cd", "efg"))[1]
    assert split < full


def test_permutation_invariance():
    rng = random.Random(7)
    gold = [set("abc"), set("de"), set("fgh")]
    pred = [set("ab"), set("cde"), set("fg"), set("hx")]
    expected = [f(clusters(*gold), clusters(*pred)) for f in (metrics.muc, metrics.b_cubed, metrics.ceafe)]
    for _ in range(20):
        rng.shuffle(gold)
        rng.shuffle(pred)
        found = [f(clusters(*gold), clusters(*pred)) for f in (metrics.muc, metrics.b_cubed, metrics.ceafe)]
        for a, b in zip(expected, found):
            assert a == pytest.approx(b)


def random_clusters(rng, mentions, count):
    pool = list(mentions)
    rng.shuffle(pool)
    groups = []
    for _ in range(count):
        if not pool:
            break
        size = rng.randint(1, min(4, len(pool)))
        groups.append(set(pool[:size]))
        pool = pool[size:]
    return groups


def brute_force_ceafe_similarity(gold, pred):
    small, large = (gold, pred) if len(gold) <= len(pred) else (pred, gold)
    best = 0.0
    for chosen in itertools.permutations(range(len(large)), len(small)):
        best = max(best, sum(metrics.phi4(small[i], large[j]) for i, j in enumerate(chosen)))
    return best


def test_ceafe_matches_brute_force():
    rng = random.Random(2023)
    for _ in range(1000):
        mentions = range(rng.randint(1, 14))
        gold = clusters(*random_clusters(rng, mentions, rng.randint(1, 6)))
        pred = clusters(*random_clusters(rng, mentions, rng.randint(1, 6)))
        similarity, _, _, _ = metrics.ceafe_counts(gold, pred)
        expected = brute_force_ceafe_similarity(gold.clusters, pred.clusters)
        assert similarity == pytest.approx(expected)


def test_scores_stay_in_range():
    rng = random.Random(99)
    for _ in range(10000):
        mentions = range(rng.randint(0, 10))
        policy = rng.choice(metrics.SINGLETON_POLICIES)
        gold = clusters(*random_clusters(rng, mentions, rng.randint(0, 5)), policy=policy)
        pred = clusters(*random_clusters(rng, list(mentions) + ["x", "y"], rng.randint(0, 5)), policy=policy)
        for metric in (metrics.muc, metrics.b_cubed, metrics.ceafe):
            p, r, f1 = metric(gold, pred)
            assert 0.0 <= p <= 1.0 + 1e-9
            assert 0.0 <= r <= 1.0 + 1e-9
            assert 0.0 <= f1 <= max(p, r) + 1e-9


def test_conll_and_macro_average():
    report = metrics.ScoreReport(muc=(0, 0, 0.3), bcub=(0, 0, 0.6), ceafe=(0, 0, 0.9))
    assert metrics.conll_f1(report) == pytest.approx(0.6)
    assert metrics.macro_average([50.0, 60.0]) == pytest.approx(55.0)
    assert metrics.macro_average([report]) == pytest.approx(0.6)
    with pytest.raises(ValueError):
        metrics.macro_average([])


def test_align_mentions_modes():
    gold = parse_document(document_text("m", MOTHER, MOTHER_GOLD))
    pred = parse_document(document_text("m", MOTHER, MOTHER_PRED))
    exact = metrics.align_mentions(gold, pred, "exact")
    assert [(p.span_id, g.span_id) for p, g in exact.pairs] == [("4", "4")]
    head = metrics.align_mentions(gold, pred, "head")
    assert sorted((p.span_id, g.span_id) for p, g in head.pairs) == [("1,2,3", "1,2,3,4"), ("4", "4")]
    assert all(head.is_detected(i) for i in gold.mentions)


def test_align_mentions_is_one_to_one(john):
    alignment = metrics.align_mentions(john, john, "head")
    assert len(alignment) == 4
    assert len({id(g) for _, g in alignment.pairs}) == 4
    assert all(p.key == g.key for p, g in alignment.pairs)


def test_disjoint_spans_do_not_match():
    gold = parse_document(document_text("m", MOTHER, [["_", "_", "_", "_", "Entity=(e1-event-1)", "_"]]))
    pred = parse_document(document_text("m", MOTHER, [["Entity=(c1-person-1)", "_", "_", "_", "_", "_"]]))
    for mode in metrics.MATCH_MODES:
        assert len(metrics.align_mentions(gold, pred, mode)) == 0


def test_segmentation_mismatch(john, anna):
    with pytest.raises(kit.SegmentationError):
        metrics.align_mentions(john, anna)
    shorter = parse_document(document_text("doc1", [MOTHER[0]]))
    with pytest.raises(kit.SegmentationError):
        metrics.align_mentions(john, shorter)


def test_score_corpora(john_corpus):
    report = metrics.score_corpora(john_corpus, john_corpus)
    assert report.conll_f1 == 1.0
    assert report.documents == 1
    assert report.dataset == "en_test"
    rows = metrics.score_rows([report])
    assert rows[-1] == ["macro", "conll", "_", "_", "1.000000"]
    assert rows[0] == ["en_test", "muc", "1.000000", "1.000000", "1.000000"]


def test_score_corpora_missing_document(john_corpus, anna):
    with pytest.raises(kit.SegmentationError):
        metrics.score_corpora(john_corpus, kit.Corpus([anna], dataset="en_test"))


def test_span_shared_by_two_entities():
    entities = [
        ["Entity=(e1-person-1)(e3-person-1)", "_", "Entity=(e2-person-2(e1-person-1)", "Entity=e2)", "_"],
        ["Entity=(e2-person-1)(e3-person-1)", "_", "_"],
    ]
    gold = parse_document(document_text("d", JOHN, entities))
    assert len(gold.mentions) == 6
    alignment = metrics.align_mentions(gold, gold)
    gold_set, pred_set = metrics.cluster_sets(gold, gold, alignment)
    assert len(gold_set.mentions) == 6
    assert [len(i) for i in gold_set.clusters] == [2, 2, 2]
    assert pred_set.mentions == gold_set.mentions
    report = metrics.ScoreReport.from_counts(metrics.score_documents(gold, gold))
    assert report.conll_f1 == 1.0
