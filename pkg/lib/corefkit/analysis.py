"""
Corpus statistics over gold coreference annotation.

Every function takes a parsed Corpus (one dataset) and returns plain values
or a DatasetReport whose rows carry exact rationals and their denominators.
"""

import collections
import itertools
import logging
import re
from fractions import Fraction

import numpy as np

import corefkit as kit
from corefkit.objects.report import DatasetReport, Row

logger = logging.getLogger(__name__)

MentionType = kit.MentionType

STATISTICS = [
    "corpus",
    "head-position",
    "mention-types",
    "anaphor-antecedent",
    "first-mention",
    "entity-size",
    "competing-antecedents",
    "genre",
    "semantic-distance",
]

PRONOUN_KINDS = {
    "overt": MentionType.OvertPronoun,
    "zero": MentionType.ZeroPronoun,
}


def _dataset(corpus):
    return corpus.dataset or "unknown"


def head_position_stats(corpus):
    mentions = corpus.mentions
    multi_token = [i for i in mentions if i.width > 1]
    pre_modified = sum(1 for i in multi_token if kit.filters.is_pre_modified(i))
    report = DatasetReport(_dataset(corpus), "head-position")
    report.add(Row.ratio("pre_modified", pre_modified, len(multi_token)))
    report.add(Row.ratio("pre_modified_all_mentions", pre_modified, len(mentions)))
    return report


def mention_type_distribution(corpus):
    counts = collections.Counter(kit.filters.mention_type(i) for i in corpus.mentions)
    total = sum(counts.values())
    report = DatasetReport(_dataset(corpus), "mention-types")
    for mention_type in kit.taxonomy.MENTION_TYPES:
        report.add(Row.ratio(mention_type.name, counts[mention_type], total))
    return report


def _anaphor_antecedent_pairs(corpus):
    """
    (anaphor, closest antecedent) for every non-first mention of every entity.
    """
    for entity in corpus.entities:
        for antecedent, anaphor in zip(entity.mentions, entity.mentions[1:]):
            yield anaphor, antecedent


def anaphor_antecedent_ranking(corpus, mention_type):
    """
    :return: [(UdCategory, count)] of closest antecedents of anaphors of the
        given type, most frequent first, ties in letter order
    """
    counts = collections.Counter(
        kit.filters.head_category(antecedent)
        for anaphor, antecedent in _anaphor_antecedent_pairs(corpus)
        if kit.filters.mention_type(anaphor) is mention_type
    )
    return sorted(counts.items(), key=lambda i: (-i[1], i[0].letter))


def anaphor_antecedent_report(corpus, mention_types=None):
    report = DatasetReport(_dataset(corpus), "anaphor-antecedent")
    for mention_type in kit.fallback(mention_types, kit.taxonomy.MENTION_TYPES):
        ranking = anaphor_antecedent_ranking(corpus, mention_type)
        total = sum(count for _, count in ranking)
        for rank, (category, count) in enumerate(ranking, 1):
            report.add(Row(
                "{}:{}:{}".format(mention_type.name, rank, category.letter),
                count,
                total,
                kind = "count",
            ))
    return report


def first_mention_stats(corpus):
    entities = [i for i in corpus.entities if not i.is_singleton]
    longest = 0
    nominal = 0
    for entity in entities:
        first = entity.first_mention
        if all(first.width >= i.width for i in entity.mentions[1:]):
            longest += 1
        if kit.filters.is_nominal(first):
            nominal += 1
    report = DatasetReport(_dataset(corpus), "first-mention")
    report.add(Row.ratio("first_is_longest", longest, len(entities)))
    report.add(Row.ratio("first_is_nominal_or_proper", nominal, len(entities)))
    return report


def entity_size_stats(corpus):
    entities = corpus.entities
    non_singletons = [i for i in entities if not i.is_singleton]
    report = DatasetReport(_dataset(corpus), "entity-size")
    report.add(Row.ratio(
        "mentions_per_entity",
        sum(len(i.mentions) for i in entities),
        len(entities),
        kind = "mean",
    ))
    report.add(Row.ratio(
        "mentions_per_entity_without_singletons",
        sum(len(i.mentions) for i in non_singletons),
        len(non_singletons),
        kind = "mean",
    ))
    return report


def _competition_counts(document, mention_type):
    """
    :return: (pronouns of the type, valid examinations, total competitors)
    """
    by_sentence = collections.defaultdict(list)
    for mention in document.mentions:
        by_sentence[mention.sentence_index].append(mention)

    pronouns = valid = competitors = 0
    for entity in document.entities:
        for i, anaphor in enumerate(entity.mentions):
            if kit.filters.mention_type(anaphor) is not mention_type:
                continue
            pronouns += 1
            head = anaphor.head
            if i == 0 or not kit.filters.has_agreement_features(head):
                continue
            antecedent = entity.mentions[i - 1]
            if kit.filters.sentence_distance(antecedent, anaphor) not in (0, 1):
                continue
            valid += 1
            window = by_sentence[anaphor.sentence_index - 1] + by_sentence[anaphor.sentence_index]
            competitors += sum(
                1 for candidate in window
                if candidate.entity_id != anaphor.entity_id
                and candidate.end < anaphor.start
                and kit.filters.agrees(head, candidate.head)
            )
    return pronouns, valid, competitors


def competition_counts(corpus, kind="overt"):
    """
    :param kind: "overt" or "zero" (or a MentionType)
    :return: (pronouns of that kind, valid examinations, total competitors)
    """
    mention_type = PRONOUN_KINDS.get(kind, kind)
    pronouns = valid = competitors = 0
    for document in corpus.documents:
        counts = _competition_counts(document, mention_type)
        pronouns += counts[0]
        valid += counts[1]
        competitors += counts[2]
    return pronouns, valid, competitors


def competing_antecedents(corpus, kind="overt"):
    """
    :return: (valid examinations / pronouns of that kind, mean competitors per
        valid examination); None where the denominator is zero
    """
    pronouns, valid, competitors = competition_counts(corpus, kind)
    valid_fraction = Fraction(valid, pronouns) if pronouns else None
    mean_competitors = Fraction(competitors, valid) if valid else None
    return valid_fraction, mean_competitors


def competing_antecedents_report(corpus):
    report = DatasetReport(_dataset(corpus), "competing-antecedents")
    for kind in PRONOUN_KINDS:
        pronouns, valid, competitors = competition_counts(corpus, kind)
        report.add(Row.ratio("{}_valid_examinations".format(kind), valid, pronouns))
        report.add(Row.ratio("{}_mean_competitors".format(kind), competitors, valid, kind="mean"))
    return report


def genre_of(document, genre_rule=None):
    """
    The genre stored on the document at parse time, unless another rule is given.
    """
    if genre_rule is None and document.genre:
        return document.genre
    pattern = kit.fallback(genre_rule, kit.constants.GENRE_PATTERN_DEFAULT)
    match = re.match(pattern, document.doc_id)
    if not match:
        return kit.constants.GENRE_UNKNOWN
    genre = match.group(1) if match.groups() else match.group(0)
    return genre or kit.constants.GENRE_UNKNOWN


def genre_pronoun_frequency(corpus, genre_rule=None):
    """
    :return: [(genre, personal pronouns per 8000 surface tokens)] sorted by genre
    """
    pronouns = collections.Counter()
    tokens = collections.Counter()
    for document in corpus.documents:
        genre = genre_of(document, genre_rule)
        for token in document.surface_tokens:
            tokens[genre] += 1
            if kit.filters.is_personal_pronoun(token):
                pronouns[genre] += 1
    window = kit.constants.PRONOUN_RATE_WINDOW
    return [
        (genre, Fraction(pronouns[genre] * window, tokens[genre]) if tokens[genre] else Fraction(0))
        for genre in sorted(tokens)
    ]


def genre_report(corpus, genre_rule=None):
    report = DatasetReport(_dataset(corpus), "genre")
    tokens = collections.Counter()
    for document in corpus.documents:
        tokens[genre_of(document, genre_rule)] += len(document.surface_tokens)
    for genre, rate in genre_pronoun_frequency(corpus, genre_rule):
        report.add(Row(genre, rate, tokens[genre], kind="mean"))
    return report


def corpus_statistics(corpus):
    documents = corpus.documents
    sentences = corpus.sentences
    tokens = sum(len(i.surface_tokens) for i in sentences)
    entities = corpus.entities
    mentions = sum(len(i.mentions) for i in entities)
    non_singletons = [i for i in entities if not i.is_singleton]
    report = DatasetReport(_dataset(corpus), "corpus")
    report.add(Row("docs", len(documents), kind="count"))
    report.add(Row("sentences", len(sentences), kind="count"))
    report.add(Row("tokens", tokens, kind="count"))
    report.add(Row.ratio("sents_per_doc", len(sentences), len(documents), kind="mean"))
    report.add(Row.ratio("tokens_per_sent", tokens, len(sentences), kind="mean"))
    report.add(Row("entities", len(entities), kind="count"))
    report.add(Row("mentions", mentions, kind="count"))
    report.add(Row.ratio("mentions_per_entity", mentions, len(entities), kind="mean"))
    report.add(Row("entities_without_singletons", len(non_singletons), kind="count"))
    report.add(Row("mentions_without_singletons", sum(len(i.mentions) for i in non_singletons), kind="count"))
    return report


def semantic_distance(corpus, vectors):
    """
    Euclidean distances over all unordered mention pairs within each entity.

    :return: (mean, population variance, number of pairs); mean and variance
        are None without pairs
    """
    missing = []
    distances = []
    for document in corpus.documents:
        for entity in document.non_singletons:
            entity_vectors = []
            for mention in entity.mentions:
                key = kit.MentionVectors.key_of(document, mention)
                vector = vectors.get(key)
                if vector is None:
                    missing.append(key)
                entity_vectors.append(vector)
            if missing:
                continue
            for a, b in itertools.combinations(entity_vectors, 2):
                distances.append(float(np.linalg.norm(a - b)))
    if missing:
        raise kit.MissingVectorsError(missing)
    if not distances:
        return None, None, 0
    distances = np.asarray(distances)
    return float(distances.mean()), float(distances.var()), len(distances)


def semantic_distance_report(corpus, vectors):
    mean, variance, pairs = semantic_distance(corpus, vectors)
    report = DatasetReport(_dataset(corpus), "semantic-distance")
    report.add(Row("mean", mean, pairs, kind="value"))
    report.add(Row("variance", variance, pairs, kind="value"))
    return report


def analyze(corpus, statistics=None, genre_rule=None, vectors=None):
    """
    :return: DatasetReports for the requested statistics, in STATISTICS order
    """
    statistics = kit.fallback(statistics, STATISTICS)
    reports = []
    for statistic in STATISTICS:
        if statistic not in statistics:
            continue
        if statistic == "corpus":
            reports.append(corpus_statistics(corpus))
        elif statistic == "head-position":
            reports.append(head_position_stats(corpus))
        elif statistic == "mention-types":
            reports.append(mention_type_distribution(corpus))
        elif statistic == "anaphor-antecedent":
            reports.append(anaphor_antecedent_report(corpus))
        elif statistic == "first-mention":
            reports.append(first_mention_stats(corpus))
        elif statistic == "entity-size":
            reports.append(entity_size_stats(corpus))
        elif statistic == "competing-antecedents":
            reports.append(competing_antecedents_report(corpus))
        elif statistic == "genre":
            reports.append(genre_report(corpus, genre_rule))
        elif statistic == "semantic-distance":
            if vectors is None:
                logger.info("[SKIPPED] semantic-distance needs a vectors file.")
                continue
            reports.append(semantic_distance_report(corpus, vectors))
    return reports
