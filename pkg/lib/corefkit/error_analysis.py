"""
Why system output misses gold entities.

The chain narrows step by step:

    non-singleton gold entities
      -> unresolved (no gold link recovered)                      A
        -> with exactly two mentions                              B
          -> their mentions never detected                        C
            -> short (<= 2 tokens), pre-modified, mean width      D, E, F

Two-mention unresolved entities whose mentions were both detected are
profiled for sentence distance, mention type pairs and the UD category of
the first mention.
"""

import collections
import functools
import logging
from fractions import Fraction

import corefkit as kit
from corefkit.objects.report import DatasetReport, Row, format_fixed, NOT_AVAILABLE

logger = logging.getLogger(__name__)

UNRESOLVED_DEFINITIONS = ["links", "mentions"]

TABLE_COLUMNS = ["A", "B", "C", "D", "E", "F"]


def _pred_entity_ids(pred):
    return {
        id(mention): entity.entity_id
        for entity in pred.entities
        for mention in entity.mentions
    }


def unresolved_entities(gold, pred, mode="exact", definition="links", alignment=None):
    """
    :param definition: "links": no predicted cluster holds two or more of the
        entity's mentions; "mentions": none of its mentions is detected at all
    :return: non-singleton gold entities the system failed to resolve, in gold order
    """
    if definition not in UNRESOLVED_DEFINITIONS:
        raise ValueError("Unknown unresolved definition: {}".format(definition))
    if alignment is None:
        alignment = kit.metrics.align_mentions(gold, pred, mode)
    entity_of = _pred_entity_ids(pred)
    unresolved = []
    for entity in gold.non_singletons:
        matches = [alignment.pred_for(i) for i in entity.mentions]
        matches = [i for i in matches if i is not None]
        if definition == "mentions":
            if not matches:
                unresolved.append(entity)
            continue
        clusters = collections.Counter(entity_of[id(i)] for i in matches)
        if not any(count >= 2 for count in clusters.values()):
            unresolved.append(entity)
    return unresolved


def two_mention_breakdown(unresolved):
    """
    :return: (share of entities with exactly two mentions or None, those entities)
    """
    two_mention = [i for i in unresolved if len(i.mentions) == 2]
    share = Fraction(len(two_mention), len(unresolved)) if unresolved else None
    return share, two_mention


def undetected_mentions(entities, gold, pred, mode="exact", alignment=None):
    """
    A gold mention is detected when aligned with any predicted mention,
    whatever cluster it sits in.

    :return: (undetected mentions, their share of all mentions of `entities` or None)
    """
    if alignment is None:
        alignment = kit.metrics.align_mentions(gold, pred, mode)
    mentions = [m for entity in entities for m in entity.mentions]
    undetected = [m for m in mentions if not alignment.is_detected(m)]
    share = Fraction(len(undetected), len(mentions)) if mentions else None
    return undetected, share


class UndetectedProfile(object):
    """
    Counts over undetected mentions. Shares are None when there are no mentions.
    """

    def __init__(self, mentions=()):
        self.total = 0
        self.short_count = 0
        self.pre_modified_count = 0
        self.width_sum = 0
        self.type_counts = collections.Counter()
        for mention in mentions:
            self.add(mention)

    def add(self, mention):
        self.total += 1
        if mention.width <= 2:
            self.short_count += 1
        if kit.filters.is_pre_modified(mention):
            self.pre_modified_count += 1
        self.width_sum += mention.width
        self.type_counts[kit.filters.mention_type(mention).name] += 1

    def merge(self, other):
        self.total += other.total
        self.short_count += other.short_count
        self.pre_modified_count += other.pre_modified_count
        self.width_sum += other.width_sum
        self.type_counts.update(other.type_counts)
        return self

    def _share(self, count):
        return Fraction(count, self.total) if self.total else None

    @property
    def types(self):
        return {i.name: self._share(self.type_counts[i.name]) for i in kit.taxonomy.MENTION_TYPES}

    @property
    def short(self):
        return self._share(self.short_count)

    @property
    def pre_modified(self):
        return self._share(self.pre_modified_count)

    @property
    def mean_width(self):
        return self._share(self.width_sum)


def undetected_profile(undetected):
    """
    Mention type distribution, share with at most two tokens, share pre-modified
    and mean width of undetected mentions.
    """
    return UndetectedProfile(undetected)


def distance_bucket(distance):
    buckets = kit.constants.DISTANCE_BUCKETS
    return buckets[min(distance, len(buckets) - 1)]


class LinkProfile(object):

    def __init__(self):
        self.distances = collections.Counter()
        self.type_pairs = collections.Counter()
        self.relations = collections.Counter()

    def update(self, other):
        self.distances.update(other.distances)
        self.type_pairs.update(other.type_pairs)
        self.relations.update(other.relations)


LINKED_TYPES = [kit.MentionType.NominalNoun, kit.MentionType.OvertPronoun]


def missing_link_profile(entities):
    """
    :param entities: two-mention entities whose mentions were both detected
    """
    profile = LinkProfile()
    for entity in entities:
        first, second = entity.mentions[0], entity.mentions[1]
        profile.distances[distance_bucket(kit.filters.sentence_distance(first, second))] += 1
        first_type = kit.filters.mention_type(first)
        second_type = kit.filters.mention_type(second)
        profile.type_pairs["{}-{}".format(first_type.name, second_type.name)] += 1
        if second_type in LINKED_TYPES:
            category = kit.filters.head_category(first)
            profile.relations["{}:{}".format(second_type.name, category.letter)] += 1
    return profile


def _describe(mention, alignment):
    return {
        "sentence": mention.sentence_index + 1,
        "span": mention.span_id,
        "text": " ".join(i.form for i in mention.span),
        "type": kit.filters.mention_type(mention).name,
        "width": mention.width,
        "detected": alignment.is_detected(mention),
    }


class ErrorReport(object):
    """
    Counts behind columns A to F and the accompanying distributions.
    Reports of single documents merge into a dataset report.
    """

    COUNTS = ["non_singletons", "unresolved", "two_mention", "two_mention_mentions"]

    def __init__(self, dataset="unknown"):
        self.dataset = dataset
        self.non_singletons = 0
        self.unresolved = 0
        self.two_mention = 0
        self.two_mention_mentions = 0
        self.profile = UndetectedProfile()
        self.detected_links = LinkProfile()
        self.all_distances = collections.Counter()
        self.details = []

    @property
    def undetected(self):
        return self.profile.total

    @property
    def undetected_types(self):
        return self.profile.type_counts

    @property
    def A(self):
        return Fraction(self.unresolved, self.non_singletons) if self.non_singletons else None

    @property
    def B(self):
        return Fraction(self.two_mention, self.unresolved) if self.unresolved else None

    @property
    def C(self):
        return Fraction(self.undetected, self.two_mention_mentions) if self.two_mention_mentions else None

    @property
    def D(self):
        return self.profile.short

    @property
    def E(self):
        return self.profile.pre_modified

    @property
    def F(self):
        return self.profile.mean_width

    def merge(self, other):
        for name in self.COUNTS:
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.profile.merge(other.profile)
        self.detected_links.update(other.detected_links)
        self.all_distances.update(other.all_distances)
        self.details.extend(other.details)
        return self

    def table_row(self):
        cells = [self.dataset]
        for column in TABLE_COLUMNS:
            value = getattr(self, column)
            if value is None:
                cells.append(NOT_AVAILABLE)
            elif column == "F":
                cells.append(format_fixed(value, kit.constants.PERCENT_DIGITS))
            else:
                cells.append(format_fixed(value * 100, kit.constants.PERCENT_DIGITS))
        return cells

    def to_report(self):
        report = DatasetReport(self.dataset, "errors")
        report.add(Row.ratio("A_unresolved", self.unresolved, self.non_singletons))
        report.add(Row.ratio("B_two_mention", self.two_mention, self.unresolved))
        report.add(Row.ratio("C_undetected", self.undetected, self.two_mention_mentions))
        report.add(Row.ratio("D_short", self.profile.short_count, self.undetected))
        report.add(Row.ratio("E_pre_modified", self.profile.pre_modified_count, self.undetected))
        report.add(Row.ratio("F_mean_width", self.profile.width_sum, self.undetected, kind="mean"))
        for mention_type in kit.taxonomy.MENTION_TYPES:
            report.add(Row.ratio(
                "undetected_type:" + mention_type.name,
                self.undetected_types[mention_type.name],
                self.undetected,
            ))
        linked = sum(self.detected_links.distances.values())
        for bucket in kit.constants.DISTANCE_BUCKETS:
            report.add(Row.ratio("distance:" + bucket, self.detected_links.distances[bucket], linked))
        unresolved_pairs = sum(self.all_distances.values())
        for bucket in kit.constants.DISTANCE_BUCKETS:
            report.add(Row.ratio("distance_all:" + bucket, self.all_distances[bucket], unresolved_pairs))
        for pair in sorted(self.detected_links.type_pairs):
            report.add(Row.ratio("type_pair:" + pair, self.detected_links.type_pairs[pair], linked))
        for second_type in LINKED_TYPES:
            keys = sorted(
                (i for i in self.detected_links.relations if i.startswith(second_type.name + ":")),
                key = lambda i: (-self.detected_links.relations[i], i),
            )
            total = sum(self.detected_links.relations[i] for i in keys)
            for key in keys:
                report.add(Row.ratio("antecedent:" + key, self.detected_links.relations[key], total))
        return report

    def to_dict(self):
        return {
            "dataset": self.dataset,
            "columns": {
                column: (None if getattr(self, column) is None else float(getattr(self, column)))
                for column in TABLE_COLUMNS
            },
            "unresolved_entities": self.details,
        }


def analyze_document(gold, pred, mode="exact", definition="links"):
    alignment = kit.metrics.align_mentions(gold, pred, mode)
    report = ErrorReport(dataset=gold.dataset or "unknown")
    report.non_singletons = len(gold.non_singletons)

    unresolved = unresolved_entities(gold, pred, mode, definition, alignment)
    _, two_mention = two_mention_breakdown(unresolved)
    undetected, _ = undetected_mentions(two_mention, gold, pred, mode, alignment)

    report.unresolved = len(unresolved)
    report.two_mention = len(two_mention)
    report.two_mention_mentions = 2 * len(two_mention)
    report.profile = undetected_profile(undetected)

    both_detected = [
        i for i in two_mention
        if all(alignment.is_detected(m) for m in i.mentions)
    ]
    report.detected_links = missing_link_profile(both_detected)
    report.all_distances = missing_link_profile(two_mention).distances

    two_mention_ids = {id(i) for i in two_mention}
    for entity in unresolved:
        report.details.append({
            "doc_id": gold.doc_id,
            "entity_id": entity.entity_id,
            "two_mention": id(entity) in two_mention_ids,
            "mentions": [_describe(i, alignment) for i in entity.mentions],
        })
    return report


def _analyze_pair(pair, mode, definition):
    return analyze_document(pair[0], pair[1], mode, definition)


def analyze_corpora(gold_corpus, pred_corpus, mode="exact", definition="links", jobs=1):
    pairs = kit.metrics.pair_documents(gold_corpus, pred_corpus)
    analyzer = functools.partial(_analyze_pair, mode=mode, definition=definition)
    report = ErrorReport(dataset=gold_corpus.dataset or "unknown")
    for document_report in kit.map_jobs(analyzer, pairs, jobs):
        report.merge(document_report)
    return report


TABLE_HEADER = ["dataset"] + TABLE_COLUMNS
