"""
Coreference scores over aligned gold/system documents: MUC, B-cubed, CEAFe
and the CoNLL average.

Numerators and denominators are summed over the documents of a dataset
before precision, recall and F1 are taken.
"""

import collections
import functools
import logging

import numpy as np
from scipy.optimize import linear_sum_assignment

import corefkit as kit
from corefkit.objects.report import format_fixed

logger = logging.getLogger(__name__)

MATCH_MODES = ["exact", "head"]
SINGLETON_POLICIES = ["exclude", "include"]
METRICS = ["muc", "bcub", "ceafe"]


class ClusterSet(object):
    """
    Disjoint, non-empty clusters of mention keys. Overlapping clusters are
    rejected; singletons are dropped under the "exclude" policy.
    """

    def __init__(self, clusters=None, singleton_policy="exclude"):
        if singleton_policy not in SINGLETON_POLICIES:
            raise ValueError("Unknown singleton policy: {}".format(singleton_policy))
        self.singleton_policy = singleton_policy
        self.clusters = []
        seen = set()
        for cluster in clusters or []:
            cluster = frozenset(cluster)
            shared = cluster & seen
            if shared:
                raise ValueError("Mention keys in more than one cluster: {}".format(sorted(map(str, shared))))
            seen.update(cluster)
            if not cluster:
                continue
            if singleton_policy == "exclude" and len(cluster) == 1:
                continue
            self.clusters.append(cluster)

    def __repr__(self):
        return "<ClusterSet {} clusters, singletons {}>".format(len(self.clusters), self.singleton_policy)

    @property
    def mentions(self):
        return {m for cluster in self.clusters for m in cluster}

    def cluster_map(self):
        return {m: i for i, cluster in enumerate(self.clusters) for m in cluster}


class Alignment(object):
    """
    One-to-one links between predicted and gold mentions of one document.
    Mentions are tracked by identity.
    """

    def __init__(self, pairs=None):
        self.pairs = []
        self._gold_of = {}
        self._pred_of = {}
        for pred, gold in pairs or []:
            self.add(pred, gold)

    def add(self, pred, gold):
        self.pairs.append((pred, gold))
        self._gold_of[id(pred)] = gold
        self._pred_of[id(gold)] = pred

    def gold_for(self, pred):
        return self._gold_of.get(id(pred))

    def pred_for(self, gold):
        return self._pred_of.get(id(gold))

    def is_detected(self, gold):
        return id(gold) in self._pred_of

    def __len__(self):
        return len(self.pairs)


def check_segmentation(gold, pred):
    if gold.doc_id != pred.doc_id:
        raise kit.SegmentationError(
            "Document mismatch: gold `{}`, system `{}`.".format(gold.doc_id, pred.doc_id)
        )
    if len(gold.sentences) != len(pred.sentences):
        raise kit.SegmentationError(
            "Document `{}`: gold has {} sentences, system has {}.".format(
                gold.doc_id, len(gold.sentences), len(pred.sentences),
            )
        )
    for gold_sentence, pred_sentence in zip(gold.sentences, pred.sentences):
        if len(gold_sentence.surface_tokens) != len(pred_sentence.surface_tokens):
            raise kit.SegmentationError(
                "Document `{}`, sentence `{}`: gold has {} tokens, system has {}.".format(
                    gold.doc_id,
                    gold_sentence.sent_id or gold_sentence.index + 1,
                    len(gold_sentence.surface_tokens),
                    len(pred_sentence.surface_tokens),
                )
            )


def align_mentions(gold, pred, mode="exact"):
    """
    Greedy one-to-one alignment, predicted mentions taken shortest first.

    exact  the two spans cover the same tokens
    head   the predicted span holds the gold head and lies within the gold span

    Among several gold candidates the shortest, then the leftmost, wins.
    """
    if mode not in MATCH_MODES:
        raise ValueError("Unknown matching mode: {}".format(mode))
    check_segmentation(gold, pred)

    index = collections.defaultdict(list)
    for mention in gold.mentions:
        if mode == "exact":
            index[mention.key].append(mention)
        else:
            index[mention.head.ref].append(mention)

    alignment = Alignment()
    matched = set()
    for mention in sorted(pred.mentions, key=lambda i: (i.width, i.key)):
        refs = set(mention.key)
        if mode == "exact":
            candidates = index.get(mention.key, [])
        else:
            candidates = [
                candidate
                for ref in mention.key
                for candidate in index.get(ref, [])
                if refs.issubset(candidate.key)
            ]
        candidates = [i for i in candidates if id(i) not in matched]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: (i.width, i.key))
        matched.add(id(best))
        alignment.add(mention, best)
    return alignment


def mention_keys(document, mentions, *prefix):
    """
    :return: {id(mention): key}; a span annotated more than once gets an
        occurrence number, so every mention keeps a key of its own
    """
    occurrences = collections.Counter()
    keys = {}
    for mention in mentions:
        occurrences[mention.key] += 1
        keys[id(mention)] = (document.doc_id,) + prefix + (mention.key, occurrences[mention.key])
    return keys


def cluster_sets(gold, pred, alignment, singleton_policy="exclude"):
    """
    :return: (gold ClusterSet, predicted ClusterSet) over a shared key space;
        matched predicted mentions take the key of their gold mention
    """
    gold_keys = mention_keys(gold, gold.mentions)
    pred_keys = mention_keys(pred, pred.mentions, "system")
    gold_clusters = [
        [gold_keys[id(mention)] for mention in entity.mentions]
        for entity in gold.entities
    ]
    pred_clusters = []
    for entity in pred.entities:
        cluster = []
        for mention in entity.mentions:
            match = alignment.gold_for(mention)
            if match is not None:
                cluster.append(gold_keys[id(match)])
            else:
                cluster.append(pred_keys[id(mention)])
        pred_clusters.append(cluster)
    return (
        ClusterSet(gold_clusters, singleton_policy),
        ClusterSet(pred_clusters, singleton_policy),
    )


def muc_counts(gold, pred):
    """
    :return: (precision numerator, precision denominator, recall numerator, recall denominator)
    """
    def partitioned(keys, response):
        mapping = response.cluster_map()
        num = den = 0
        for cluster in keys.clusters:
            linked = set()
            unlinked = 0
            for m in cluster:
                if m in mapping:
                    linked.add(mapping[m])
                else:
                    unlinked += 1
            num += len(cluster) - len(linked) - unlinked
            den += len(cluster) - 1
        return num, den

    r_num, r_den = partitioned(gold, pred)
    p_num, p_den = partitioned(pred, gold)
    return p_num, p_den, r_num, r_den


def b_cubed_counts(gold, pred):
    def overlap(keys, response):
        mapping = response.cluster_map()
        num = 0.0
        den = 0
        for cluster in keys.clusters:
            counts = collections.Counter(mapping[m] for m in cluster if m in mapping)
            num += sum(count * count for count in counts.values()) / len(cluster)
            den += len(cluster)
        return num, den

    r_num, r_den = overlap(gold, pred)
    p_num, p_den = overlap(pred, gold)
    return p_num, p_den, r_num, r_den


def phi4(key, response):
    return 2 * len(key & response) / (len(key) + len(response))


def ceafe_counts(gold, pred):
    if not gold.clusters or not pred.clusters:
        return 0.0, len(pred.clusters), 0.0, len(gold.clusters)
    scores = np.zeros((len(gold.clusters), len(pred.clusters)))
    for i, key in enumerate(gold.clusters):
        for j, response in enumerate(pred.clusters):
            scores[i, j] = phi4(key, response)
    row_ind, col_ind = linear_sum_assignment(scores, maximize=True)
    similarity = float(scores[row_ind, col_ind].sum())
    return similarity, len(pred.clusters), similarity, len(gold.clusters)


def prf(p_num, p_den, r_num, r_den):
    precision = p_num / p_den if p_den else 0.0
    recall = r_num / r_den if r_den else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return float(precision), float(recall), float(f1)


def muc(gold, pred):
    return prf(*muc_counts(gold, pred))


def b_cubed(gold, pred):
    return prf(*b_cubed_counts(gold, pred))


def ceafe(gold, pred):
    return prf(*ceafe_counts(gold, pred))


METRIC_COUNTS = {
    "muc": muc_counts,
    "bcub": b_cubed_counts,
    "ceafe": ceafe_counts,
}


class ScoreReport(object):

    def __init__(
        self,
        muc = (0.0, 0.0, 0.0),
        bcub = (0.0, 0.0, 0.0),
        ceafe = (0.0, 0.0, 0.0),
        match = "exact",
        singleton_policy = "exclude",
        dataset = "unknown",
        documents = 0,
    ):
        self.muc = tuple(muc)
        self.bcub = tuple(bcub)
        self.ceafe = tuple(ceafe)
        self.match = match
        self.singleton_policy = singleton_policy
        self.dataset = dataset
        self.documents = documents

    @classmethod
    def from_counts(cls, counts, **kwargs):
        return cls(
            muc = prf(*counts["muc"]),
            bcub = prf(*counts["bcub"]),
            ceafe = prf(*counts["ceafe"]),
            **kwargs
        )

    @property
    def conll_f1(self):
        return conll_f1(self)

    def to_dict(self):
        return {
            "dataset": self.dataset,
            "match": self.match,
            "singletons": self.singleton_policy,
            "documents": self.documents,
            "metrics": {
                name: dict(zip(["precision", "recall", "f1"], getattr(self, name)))
                for name in METRICS
            },
            "conll_f1": self.conll_f1,
        }


def conll_f1(report):
    return (report.muc[2] + report.bcub[2] + report.ceafe[2]) / 3


def macro_average(reports):
    """
    :param reports: ScoreReports or plain CoNLL F1 values, one per dataset
    """
    values = [i.conll_f1 if isinstance(i, ScoreReport) else float(i) for i in reports]
    if not values:
        raise ValueError("Macro average over no datasets.")
    return sum(values) / len(values)


def score_documents(gold, pred, match="exact", singleton_policy="exclude"):
    """
    :return: {metric: (p_num, p_den, r_num, r_den)} for one document pair
    """
    alignment = align_mentions(gold, pred, match)
    gold_set, pred_set = cluster_sets(gold, pred, alignment, singleton_policy)
    return {name: METRIC_COUNTS[name](gold_set, pred_set) for name in METRICS}


def _score_pair(pair, match, singleton_policy):
    return score_documents(pair[0], pair[1], match, singleton_policy)


def pair_documents(gold_corpus, pred_corpus):
    """
    :return: [(gold document, system document)] in gold order
    """
    pred_documents = {i.doc_id: i for i in pred_corpus.documents}
    pairs = []
    for document in gold_corpus.documents:
        pred = pred_documents.pop(document.doc_id, None)
        if pred is None:
            raise kit.SegmentationError(
                "Document `{}` is missing from the system output.".format(document.doc_id)
            )
        pairs.append((document, pred))
    if pred_documents:
        raise kit.SegmentationError(
            "System output has documents absent from gold: {}.".format(", ".join(sorted(pred_documents)))
        )
    return pairs


def score_corpora(gold_corpus, pred_corpus, match="exact", singleton_policy="exclude", jobs=1):
    pairs = pair_documents(gold_corpus, pred_corpus)
    scorer = functools.partial(_score_pair, match=match, singleton_policy=singleton_policy)
    totals = {name: [0, 0, 0, 0] for name in METRICS}
    for counts in kit.map_jobs(scorer, pairs, jobs):
        for name in METRICS:
            for i, value in enumerate(counts[name]):
                totals[name][i] += value
    report = ScoreReport.from_counts(
        totals,
        match = match,
        singleton_policy = singleton_policy,
        dataset = gold_corpus.dataset or "unknown",
        documents = len(pairs),
    )
    logger.debug("[SCORED] %s: CoNLL F1 %.6f", report.dataset, report.conll_f1)
    return report


SCORE_HEADER = ["dataset", "metric", "precision", "recall", "f1"]

def score_rows(reports):
    """
    Rendered table rows: three metric rows and a CoNLL row per dataset, then the macro average.
    """
    fixed = functools.partial(format_fixed, digits=kit.constants.SCORE_DIGITS)
    rows = []
    for report in reports:
        for name in METRICS:
            rows.append([report.dataset, name] + [fixed(i) for i in getattr(report, name)])
        rows.append([report.dataset, "conll", "_", "_", fixed(report.conll_f1)])
    if reports:
        rows.append(["macro", "conll", "_", "_", fixed(macro_average(reports))])
    return rows
