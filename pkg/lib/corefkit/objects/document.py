import functools

import corefkit as kit


class Token(object):
    """
    One node of a sentence. Surface tokens have index (n, 0), empty nodes
    (n, m) with m > 0. `columns` keeps the ten raw fields for writing back.
    """

    def __init__(
        self,
        index,
        form,
        lemma = "_",
        upos = "_",
        xpos = "_",
        feats = None,
        head = None,
        deprel = "_",
        deps = "_",
        misc = None,
        columns = None,
        sentence_index = 0,
        position = 0,
    ):
        self.index = index
        self.form = form
        self.lemma = lemma
        self.upos = upos
        self.xpos = xpos
        self.feats = kit.fallback(feats, {})
        self.head = head
        self.deprel = deprel
        self.deps = deps
        self.misc = kit.fallback(misc, {})
        self.columns = columns
        self.sentence_index = sentence_index
        self.position = position

    def __repr__(self):
        return "<Token {}:{} {}>".format(self.sentence_index + 1, self.id, self.form)

    @property
    def is_empty(self):
        return self.index[1] != 0

    @property
    def id(self):
        if self.columns:
            return self.columns[0]
        major, minor = self.index
        return "{}.{}".format(major, minor) if minor else str(major)

    @property
    def ref(self):
        """(sentence index, major, minor)"""
        return (self.sentence_index,) + self.index


class Sentence(object):

    def __init__(
        self,
        sent_id,
        tokens,
        text = None,
        comments = None,
        ranges = None,
        index = 0,
    ):
        self.sent_id = sent_id
        self.tokens = tokens
        self.text = text
        self.comments = kit.fallback(comments, [])
        # offset into `tokens` -> raw multiword-token lines written before that token
        self.ranges = kit.fallback(ranges, {})
        self.index = index

    @property
    def surface_tokens(self):
        return [i for i in self.tokens if not i.is_empty]

    @functools.cached_property
    def tokens_by_index(self):
        return {i.index: i for i in self.tokens}


class Mention(object):

    def __init__(
        self,
        entity_id,
        span,
        part_index = None,
        head = None,
        attributes = None,
        parts = None,
    ):
        self.entity_id = entity_id
        self.span = span
        self.part_index = part_index
        self.head = head
        self.attributes = kit.fallback(attributes, {})
        self.parts = parts or [list(span)]

    def __repr__(self):
        return "<Mention {} {}>".format(self.entity_id, self.span_id)

    @property
    def start(self):
        return self.span[0].position

    @property
    def end(self):
        return self.span[-1].position

    @property
    def width(self):
        return len(self.span)

    @property
    def sentence_index(self):
        return self.span[0].sentence_index

    @property
    def key(self):
        return tuple(i.ref for i in self.span)

    @property
    def sort_key(self):
        return self.start, self.end, self.width

    @property
    def span_id(self):
        """
        Token ids joined by "," within a part and "+" between parts, e.g. "3,4+7".
        """
        return "+".join(",".join(i.id for i in part) for part in self.parts)

    @property
    def is_zero(self):
        return len(self.span) == 1 and self.span[0].is_empty

    def contains(self, token):
        return token.position in {i.position for i in self.span}


class Entity(object):

    def __init__(self, entity_id, mentions):
        self.entity_id = entity_id
        self.mentions = mentions

    def __repr__(self):
        return "<Entity {} ({} mentions)>".format(self.entity_id, len(self.mentions))

    @property
    def is_singleton(self):
        return len(self.mentions) == 1

    @property
    def first_mention(self):
        return self.mentions[0]


class Document(object):

    def __init__(
        self,
        doc_id,
        sentences,
        entities = None,
        genre = None,
        language = None,
        dataset = None,
        entity_attributes = None,
        path = None,
    ):
        self.doc_id = doc_id
        self.sentences = sentences
        self.entities = kit.fallback(entities, [])
        self.genre = genre
        self.language = language
        self.dataset = dataset
        self.entity_attributes = kit.fallback(entity_attributes, [])
        self.path = path

    def __repr__(self):
        return "<Document {}>".format(self.doc_id)

    @property
    def tokens(self):
        return [token for sentence in self.sentences for token in sentence.tokens]

    @property
    def surface_tokens(self):
        return [token for sentence in self.sentences for token in sentence.surface_tokens]

    @property
    def mentions(self):
        return sorted(
            (mention for entity in self.entities for mention in entity.mentions),
            key = lambda i: i.sort_key,
        )

    @property
    def non_singletons(self):
        return [i for i in self.entities if not i.is_singleton]

    def find_token(self, sentence_index, index):
        if index is None or not 0 <= sentence_index < len(self.sentences):
            return None
        return self.sentences[sentence_index].tokens_by_index.get(index)

    def parent(self, token):
        if token.head is None or token.head == (0, 0):
            return None
        return self.find_token(token.sentence_index, token.head)

    def depth(self, token):
        """
        Number of arcs between the token and the root; cycles count as infinitely deep.
        """
        depth = 0
        seen = {token.index}
        current = self.parent(token)
        while current is not None:
            if current.index in seen:
                return float("inf")
            seen.add(current.index)
            depth += 1
            current = self.parent(current)
        return depth


class Corpus(object):
    """
    The documents of one dataset. Document ids are unique within a corpus.
    """

    def __init__(self, documents=None, dataset=None, language=None):
        self.documents = []
        self.dataset = dataset
        self.language = language
        for document in documents or []:
            self.add(document)

    def __repr__(self):
        return "<Corpus {} ({} documents)>".format(self.dataset, len(self.documents))

    @property
    def doc_ids(self):
        return [i.doc_id for i in self.documents]

    def add(self, document):
        for existing in self.documents:
            if existing.doc_id == document.doc_id:
                raise kit.DuplicateDocumentError(document.doc_id, existing.path, document.path)
        self.documents.append(document)

    @property
    def sentences(self):
        return [sentence for document in self.documents for sentence in document.sentences]

    @property
    def entities(self):
        return [entity for document in self.documents for entity in document.entities]

    @property
    def mentions(self):
        return [mention for document in self.documents for mention in document.mentions]

    def extend(self, other):
        for document in other.documents:
            self.add(document)
        self.dataset = self.dataset or other.dataset
        self.language = self.language or other.language
