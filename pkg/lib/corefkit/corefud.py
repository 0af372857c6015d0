"""
Reading and writing CoNLL-U files with CorefUD coreference annotation.

Token lines are split into the ten CoNLL-U columns; ID, FEATS, HEAD and DEPS
values are decoded with the `conllu` package. The raw columns are kept on
every token, so writing a parsed corpus back reproduces canonical input
byte for byte. Coreference is read from the `Entity` attribute of MISC:

    (e1-person-2     opens a mention of entity e1 with attributes
    e1)              closes it
    (e2)             single-token mention
    (e3[1/2] e3[1/2])  first part of a discontinuous mention
"""

import collections
import functools
import io
import logging
import os
import re

from conllu.exceptions import ParseException
from conllu.parser import parse_dict_value, parse_id_value, parse_int_value, parse_paired_list_value
from tqdm import tqdm

import corefkit as kit

logger = logging.getLogger(__name__)

COLUMNS = 10

NEWDOC = re.compile(r"^#\s*newdoc(?:\s+id\s*=\s*(?P<id>.*?))?\s*$")
SENT_ID = re.compile(r"^#\s*sent_id\s*=\s*(?P<value>.*?)\s*$")
TEXT = re.compile(r"^#\s*text\s*=\s*(?P<value>.*)$")
GLOBAL_ENTITY = re.compile(r"^#\s*global\.Entity\s*=\s*(?P<value>.*?)\s*$")

ENTITY_PIECE = re.compile(r"\((?P<single>[^()]+)\)|\((?P<open>[^()]+)|(?P<close>[^()]+)\)")
ENTITY_ID = re.compile(r"^(?P<eid>[^\[\]]+?)(?:\[(?P<part>\d+)/(?P<total>\d+)\])?$")

HEAD_RULES = ["annotated", "syntactic"]


def _as_index(value):
    if isinstance(value, int):
        return value, 0
    if isinstance(value, tuple) and len(value) == 3 and value[1] == ".":
        return value[0], value[2]
    return None


def parse_misc(value):
    """
    MISC as a dictionary in column order; attributes without a value map to None.
    """
    return dict(parse_dict_value(value) or {})


class _SentenceBuilder(object):

    def __init__(self, path, first_line):
        self.path = path
        self.first_line = first_line
        self.comments = []
        self.lines = []

    def add(self, line_number, line):
        if line.startswith("#"):
            if self.lines:
                raise kit.FormatError("Comment line inside a sentence.", self.path, line_number)
            self.comments.append(line)
        else:
            self.lines.append((line_number, line))

    def match_comment(self, pattern):
        for comment in self.comments:
            match = pattern.match(comment)
            if match:
                return match
        return None

    def build(self, sentence_index):

        if not self.lines:
            raise kit.FormatError("Sentence without token lines.", self.path, self.first_line)

        tokens = []
        ranges = {}
        line_numbers = {}
        expected_surface = 1
        last_empty = None

        for line_number, line in self.lines:

            parts = line.split("\t")
            if len(parts) != COLUMNS:
                raise kit.FormatError(
                    "Expected {} tab-separated columns, found {}.".format(COLUMNS, len(parts)),
                    self.path, line_number,
                )

            try:
                raw_id = parse_id_value(parts[0])
            except ParseException as e:
                raise kit.FormatError(str(e), self.path, line_number)

            if isinstance(raw_id, tuple) and raw_id[1] == "-":
                start, _, end = raw_id
                if start != expected_surface or end < start:
                    raise kit.FormatError("Misplaced multiword token range `{}`.".format(parts[0]), self.path, line_number)
                ranges.setdefault(len(tokens), []).append(line)
                continue

            index = _as_index(raw_id)
            if index is None:
                raise kit.FormatError("Invalid token id `{}`.".format(parts[0]), self.path, line_number)
            if index[1] == 0:
                if index[0] != expected_surface:
                    raise kit.FormatError(
                        "Token id {} out of order, expected {}.".format(index[0], expected_surface),
                        self.path, line_number,
                    )
                expected_surface += 1
                last_empty = None
            else:
                if index[0] != expected_surface - 1 or (last_empty is not None and index <= last_empty):
                    raise kit.FormatError("Empty node id `{}` out of order.".format(parts[0]), self.path, line_number)
                last_empty = index

            try:
                feats = parse_dict_value(parts[5]) or {}
                head = parse_int_value(parts[6])
                enhanced = parse_paired_list_value(parts[8])
                misc = parse_misc(parts[9])
            except ParseException as e:
                raise kit.FormatError(str(e), self.path, line_number)

            head = (head, 0) if head is not None else None
            deprel = parts[7]
            if head is None and isinstance(enhanced, list) and enhanced:
                # empty nodes only carry the enhanced graph
                relation, enhanced_head = enhanced[0]
                head = _as_index(enhanced_head)
                if deprel == "_":
                    deprel = relation

            token = kit.Token(
                index = index,
                form = parts[1],
                lemma = parts[2],
                upos = parts[3],
                xpos = parts[4],
                feats = dict(feats),
                head = head,
                deprel = deprel,
                deps = parts[8],
                misc = misc,
                columns = tuple(parts),
                sentence_index = sentence_index,
            )
            tokens.append(token)
            line_numbers[index] = line_number

        indices = {i.index for i in tokens}
        for token in tokens:
            if token.head is not None and token.head != (0, 0) and token.head not in indices:
                raise kit.FormatError(
                    "Head `{}` of token `{}` refers to a nonexistent token.".format(token.columns[6], token.id),
                    self.path, line_numbers[token.index],
                )

        sent_id = self.match_comment(SENT_ID)
        text = self.match_comment(TEXT)
        return kit.Sentence(
            sent_id = sent_id.group("value") if sent_id else None,
            tokens = tokens,
            text = text.group("value") if text else None,
            comments = list(self.comments),
            ranges = ranges,
            index = sentence_index,
        )


def _derive_genre(doc_id):
    match = re.match(kit.constants.GENRE_PATTERN_DEFAULT, doc_id)
    return match.group(1) if match else None


def parse_conllu(stream, dataset=None, language=None, path=None, head_rule="annotated"):
    """
    :param stream: text stream, iterable of lines or a string
    :return: Corpus with one Document per `# newdoc` block
    """

    if isinstance(stream, str):
        stream = io.StringIO(stream)

    corpus = kit.Corpus(dataset=dataset, language=language)
    state = {
        "document": None,
        "position": 0,
        "sent_ids": set(),
        "entity_attributes": list(kit.constants.ENTITY_ATTRIBUTES_DEFAULT),
    }

    def finish_document():
        document = state["document"]
        if document is not None:
            document.entities = resolve_entities(document, head_rule=head_rule)
            corpus.add(document)
        state["document"] = None

    def finish_sentence(builder):
        # the declaration holds for every document that follows it in the file
        global_entity = builder.match_comment(GLOBAL_ENTITY)
        if global_entity:
            state["entity_attributes"] = global_entity.group("value").split("-")
        newdoc = builder.match_comment(NEWDOC)
        if newdoc or state["document"] is None:
            finish_document()
            doc_id = newdoc.group("id") if newdoc and newdoc.group("id") else None
            if doc_id is None:
                stem = os.path.splitext(os.path.basename(path))[0] if path else "doc"
                doc_id = "{}-{}".format(stem, len(corpus.documents) + 1)
            state["document"] = kit.Document(
                doc_id = doc_id,
                sentences = [],
                genre = _derive_genre(doc_id),
                language = language,
                dataset = dataset,
                entity_attributes = list(state["entity_attributes"]),
                path = path,
            )
            state["position"] = 0
            state["sent_ids"] = set()
        document = state["document"]
        if global_entity:
            document.entity_attributes = list(state["entity_attributes"])
        sentence = builder.build(len(document.sentences))
        for token in sentence.tokens:
            token.position = state["position"]
            state["position"] += 1
        if sentence.sent_id is not None:
            if sentence.sent_id in state["sent_ids"]:
                logger.warning("[WARNING] Duplicated sent_id `%s` in document `%s`.", sentence.sent_id, document.doc_id)
            state["sent_ids"].add(sentence.sent_id)
        document.sentences.append(sentence)

    builder = None
    for line_number, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if not line.strip():
            if builder is not None:
                finish_sentence(builder)
                builder = None
            continue
        if builder is None:
            builder = _SentenceBuilder(path, line_number)
        builder.add(line_number, line)
    if builder is not None:
        finish_sentence(builder)
    finish_document()

    return corpus


class _Pending(object):
    """Parts of a discontinuous mention collected so far."""

    def __init__(self, total, attributes):
        self.total = total
        self.attributes = attributes
        self.parts = []


def _span_between(tokens, start, end):
    # interior empty nodes are elided material, not part of the mention
    return [
        token for token in tokens[start.position:end.position + 1]
        if not token.is_empty or token is start or token is end
    ]


def resolve_entities(document, head_rule="annotated"):
    """
    Decode the Entity attributes of a document into entities with resolved heads.
    """

    tokens = document.tokens
    names = kit.fallback(document.entity_attributes or None, kit.constants.ENTITY_ATTRIBUTES_DEFAULT)
    stacks = collections.defaultdict(list)
    pending = collections.defaultdict(list)
    mentions = collections.OrderedDict()

    def sent_id_of(token):
        return document.sentences[token.sentence_index].sent_id

    def fail(message, token, entity_id):
        raise kit.EntityAnnotationError(message, document.path, sent_id_of(token), entity_id)

    def split_id(content, token):
        fields = content.split("-")
        match = ENTITY_ID.match(fields[0])
        if not match:
            fail("Malformed entity reference `{}`.".format(content), token, None)
        part = int(match.group("part")) if match.group("part") else None
        total = int(match.group("total")) if match.group("total") else None
        attributes = collections.OrderedDict()
        for i, value in enumerate(fields[1:], 1):
            if value:
                name = names[i] if i < len(names) else "field{}".format(i)
                attributes[name] = value
        return match.group("eid"), part, total, attributes

    def complete(entity_id, part, total, attributes, span, token):
        if part is None:
            mention = kit.Mention(entity_id=entity_id, span=span, attributes=attributes)
            mentions.setdefault(entity_id, []).append(mention)
            return
        if part == 1:
            collected = _Pending(total, attributes)
            pending[entity_id].append(collected)
        else:
            candidates = [
                i for i in pending[entity_id]
                if i.total == total and len(i.parts) == part - 1
            ]
            if not candidates:
                fail("Part {}/{} without its preceding part.".format(part, total), token, entity_id)
            collected = candidates[-1]
        collected.parts.append(span)
        if len(collected.parts) == collected.total:
            pending[entity_id].remove(collected)
            merged = {i.position: i for part_span in collected.parts for i in part_span}
            mention = kit.Mention(
                entity_id = entity_id,
                span = [merged[i] for i in sorted(merged)],
                part_index = collected.total,
                attributes = collected.attributes,
                parts = collected.parts,
            )
            mentions.setdefault(entity_id, []).append(mention)

    for token in tokens:
        value = token.misc.get("Entity")
        if not value:
            continue
        end = 0
        for match in ENTITY_PIECE.finditer(value):
            if match.start() != end:
                break
            end = match.end()
            if match.group("single") is not None:
                entity_id, part, total, attributes = split_id(match.group("single"), token)
                complete(entity_id, part, total, attributes, [token], token)
            elif match.group("open") is not None:
                entity_id, part, total, attributes = split_id(match.group("open"), token)
                stacks[entity_id, part].append((token, total, attributes))
            else:
                entity_id, part, total, _ = split_id(match.group("close"), token)
                if not stacks[entity_id, part]:
                    fail("Closing bracket without an open mention.", token, entity_id)
                start, total, attributes = stacks[entity_id, part].pop()
                complete(entity_id, part, total, attributes, _span_between(tokens, start, token), token)
        if end != len(value):
            fail("Malformed Entity attribute `{}`.".format(value), token, None)

    for (entity_id, part), stack in stacks.items():
        if stack:
            fail("Unbalanced brackets: mention never closed.", stack[0][0], entity_id)
    for entity_id, collected in pending.items():
        if collected:
            fail("Discontinuous mention with missing parts.", collected[0].parts[0][0], entity_id)

    entities = []
    for entity_id, entity_mentions in mentions.items():
        for mention in entity_mentions:
            mention.head = mention_head(mention, document, rule=head_rule)
        entity_mentions.sort(key=lambda i: i.sort_key)
        entities.append(kit.Entity(entity_id=entity_id, mentions=entity_mentions))
    entities.sort(key=lambda i: (i.first_mention.sort_key, i.entity_id))
    return entities


def _annotated_head(mention):
    value = mention.attributes.get("head")
    if value is None or not value.isdigit():
        return None
    number = int(value)
    if 1 <= number <= len(mention.span):
        return mention.span[number - 1]
    return None


def mention_head(mention, document, rule="annotated"):
    """
    The span token whose syntactic parent lies outside the span; among several,
    the one closest to the root, then the leftmost. A head index annotated on
    the mention wins when `rule` is "annotated".
    """
    if rule not in HEAD_RULES:
        raise ValueError("Unknown head rule: {}".format(rule))
    span = mention.span
    if len(span) == 1:
        return span[0]
    if rule == "annotated":
        head = _annotated_head(mention)
        if head is not None:
            return head
    refs = {i.ref for i in span}
    candidates = [
        i for i in span
        if i.head is None or (i.sentence_index,) + i.head not in refs
    ]
    if not candidates:
        return span[0]
    return min(candidates, key=lambda i: (document.depth(i), i.position))


def check_document(document):
    """
    :return: list of invariant violations, empty for a valid document
    """
    problems = []
    seen_ids = set()
    tokens = document.tokens
    for entity in document.entities:
        if entity.entity_id in seen_ids:
            problems.append("Entity id `{}` used twice.".format(entity.entity_id))
        seen_ids.add(entity.entity_id)
        if not entity.mentions:
            problems.append("Entity `{}` has no mentions.".format(entity.entity_id))
        for mention in entity.mentions:
            positions = [i.position for i in mention.span]
            if not positions or positions != sorted(set(positions)):
                problems.append("Mention `{}` of `{}` is not strictly ordered.".format(mention.span_id, entity.entity_id))
            elif any(tokens[i] is not token for i, token in zip(positions, mention.span)):
                problems.append("Mention `{}` of `{}` does not resolve.".format(mention.span_id, entity.entity_id))
            if mention.head is None or not mention.contains(mention.head):
                problems.append("Head of mention `{}` of `{}` is outside its span.".format(mention.span_id, entity.entity_id))
    for sentence in document.sentences:
        indices = sentence.tokens_by_index
        for token in sentence.tokens:
            if token.head is not None and token.head != (0, 0) and token.head not in indices:
                problems.append("Token `{}` of sentence `{}` has a dangling head.".format(token.id, sentence.sent_id))
    return problems


def serialize(corpus):
    lines = []
    for document in corpus.documents:
        for sentence in document.sentences:
            lines.extend(sentence.comments)
            for i, token in enumerate(sentence.tokens):
                lines.extend(sentence.ranges.get(i, []))
                lines.append("\t".join(token.columns))
            lines.append("")
    return "".join(line + "\n" for line in lines)


def write_file(corpus, path):
    kit.makedirs(os.path.dirname(os.path.abspath(path)))
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize(corpus))
    logger.info("[WRITTEN] %s", path)


def read_file(path, dataset=None, language=None, head_rule="annotated"):
    name, code, _ = kit.constants.parse_path(path)
    with open(path, encoding="utf-8") as f:
        corpus = parse_conllu(
            f,
            dataset = kit.fallback(dataset, name),
            language = kit.fallback(language, code),
            path = path,
            head_rule = head_rule,
        )
    logger.info("[PARSED] %s (%d documents)", path, len(corpus.documents))
    return corpus


def find_files(paths, split=None):
    """
    Expand directories into the .conllu files below them, sorted for a stable order.
    """
    found = []
    for path in paths:
        if os.path.isdir(path):
            for directory, _, filenames in os.walk(path):
                for filename in filenames:
                    if filename.endswith(".conllu"):
                        found.append(os.path.join(directory, filename))
        else:
            found.append(path)
    if split:
        found = [i for i in found if kit.constants.parse_filename(os.path.basename(i))[2] == split]
    return sorted(found)


def read_paths(paths, dataset=None, language=None, head_rule="annotated", jobs=1, progress=False):
    """
    :return: one Corpus per dataset, files of a dataset concatenated in path order
    """
    reader = functools.partial(read_file, dataset=dataset, language=language, head_rule=head_rule)
    if jobs and jobs > 1:
        results = kit.map_jobs(reader, paths, jobs)
    else:
        results = (reader(i) for i in tqdm(paths, desc="reading", unit="file", disable=not progress))
    corpora = collections.OrderedDict()
    for corpus in results:
        key = corpus.dataset or "unknown"
        if key in corpora:
            corpora[key].extend(corpus)
        else:
            corpora[key] = corpus
    return [corpora[i] for i in sorted(corpora)]
