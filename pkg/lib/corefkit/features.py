"""
Span and document features for coreference model training, written as JSON
lines with a vocabulary sidecar.
"""

import functools
import json
import logging

import corefkit as kit

logger = logging.getLogger(__name__)

TARGETS = ["gold", "all-spans"]

SPAN_FIELDS = ["width_bucket", "head_upos", "head_deprel", "mention_type", "ud_category"]
DOC_FIELDS = ["language", "word_order"]
VOCABULARY_FIELDS = SPAN_FIELDS + DOC_FIELDS

HEAD_NOTE = "span heads are syntactic heads: the span token whose parent lies outside the span"


class SpanFeatures(object):

    def __init__(self, width_bucket, head_upos, head_deprel, mention_type, ud_category):
        self.width_bucket = width_bucket
        self.head_upos = head_upos
        self.head_deprel = head_deprel
        self.mention_type = mention_type
        self.ud_category = ud_category

    def to_dict(self):
        return {
            "width_bucket": self.width_bucket,
            "head_upos": self.head_upos,
            "head_deprel": self.head_deprel,
            "mention_type": self.mention_type.name,
            "ud_category": self.ud_category.letter,
        }


class DocFeatures(object):

    def __init__(self, language, word_order):
        self.language = language
        self.word_order = word_order

    def to_dict(self):
        return {"language": self.language, "word_order": self.word_order}


def extract_span_features(mention, document):
    head = kit.mention_head(mention, document, rule="syntactic")
    return SpanFeatures(
        width_bucket = kit.constants.width_bucket(mention.width),
        head_upos = head.upos,
        head_deprel = kit.taxonomy.base_relation(head.deprel),
        mention_type = kit.classify_mention_type(head),
        ud_category = kit.ud_category(head.deprel),
    )


def extract_doc_features(document, word_order_table):
    if not document.language:
        raise kit.WordOrderError("Document `{}` has no language code.".format(document.doc_id))
    return DocFeatures(
        language = document.language,
        word_order = word_order_table.lookup(document.language),
    )


def all_spans(sentence, max_width):
    """
    Contiguous runs of surface tokens, shortest first at each start position.
    """
    tokens = sentence.surface_tokens
    for start in range(len(tokens)):
        for width in range(1, max_width + 1):
            if start + width > len(tokens):
                break
            yield tokens[start:start + width]


def _record(document, mention, doc_features, entity_id):
    record = {
        "doc_id": document.doc_id,
        "sentence": mention.sentence_index + 1,
        "span": mention.span_id,
        "width": mention.width,
        "entity_id": entity_id,
    }
    record.update(extract_span_features(mention, document).to_dict())
    record.update(doc_features.to_dict())
    return record


def document_records(document, word_order_table, target="gold", max_width=None):
    doc_features = extract_doc_features(document, word_order_table)
    records = []
    if target == "gold":
        mentions = sorted(document.mentions, key=lambda i: (i.sort_key, i.entity_id))
        for mention in mentions:
            records.append(_record(document, mention, doc_features, mention.entity_id))
    elif target == "all-spans":
        if not max_width or max_width < 1:
            raise kit.UsageError("all-spans export needs a positive maximum width.")
        gold_spans = {}
        for mention in document.mentions:
            gold_spans.setdefault(mention.key, mention.entity_id)
        for sentence in document.sentences:
            for span in all_spans(sentence, max_width):
                candidate = kit.Mention(entity_id="", span=span)
                records.append(_record(document, candidate, doc_features, gold_spans.get(candidate.key)))
    else:
        raise kit.UsageError("Unknown export target: {}".format(target))
    return records


def _document_records(document, word_order_table, target, max_width):
    return document_records(document, word_order_table, target, max_width)


def export_features(corpus, word_order_table, target="gold", max_width=None, jobs=1):
    """
    :return: (header, records) with records in document, then span order
    """
    for document in corpus.documents:
        document.language = document.language or corpus.language
    exporter = functools.partial(
        _document_records,
        word_order_table = word_order_table,
        target = target,
        max_width = max_width,
    )
    records = [
        record
        for records in kit.map_jobs(exporter, corpus.documents, jobs)
        for record in records
    ]
    header = {
        "meta": {
            "dataset": corpus.dataset,
            "target": target,
            "max_width": max_width if target == "all-spans" else None,
            "head": "syntactic",
            "head_note": HEAD_NOTE,
            "records": len(records),
        }
    }
    return header, records


def vocabulary(records):
    """
    :return: sorted (field, value) pairs of every categorical value used
    """
    values = set()
    for record in records:
        for name in VOCABULARY_FIELDS:
            values.add((name, record[name]))
    return sorted(values, key=lambda i: (VOCABULARY_FIELDS.index(i[0]), i[1]))


class FeatureFile(kit.BaseFile):

    def __init__(self, header, records, name=None, abstract_directory=None):
        super().__init__(
            kit.fallback(name, "features"),
            file_format = "JSONL",
            abstract_directory = abstract_directory,
        )
        self.header = header
        self.records = records

    def generate(self):
        lines = [json.dumps(self.header, sort_keys=True, ensure_ascii=False)]
        for record in self.records:
            lines.append(json.dumps(record, sort_keys=True, ensure_ascii=False))
        return lines


class VocabularyFile(kit.BaseFile):

    def __init__(self, records, name=None, abstract_directory=None):
        super().__init__(
            kit.fallback(name, "vocabulary"),
            file_format = "TSV",
            abstract_directory = abstract_directory,
        )
        self.records = records

    def generate(self):
        return ["field\tvalue"] + ["{}\t{}".format(name, value) for name, value in vocabulary(self.records)]
