import pytest

import corefkit as kit

DATASET = "en_test"
LANGUAGE = "en"

# (id, form, upos, feats, head, deprel)
JOHN = [
    [
        ("1", "John", "PROPN", "Gender=Masc|Number=Sing", "2", "nsubj"),
        ("2", "saw", "VERB", "_", "0", "root"),
        ("3", "his", "PRON", "Gender=Masc|Number=Sing|PronType=Prs", "4", "nmod:poss"),
        ("4", "mother", "NOUN", "Gender=Fem|Number=Sing", "2", "obj"),
        ("5", ".", "PUNCT", "_", "2", "punct"),
    ],
    [
        ("1", "She", "PRON", "Gender=Fem|Number=Sing|PronType=Prs", "2", "nsubj"),
        ("2", "smiled", "VERB", "_", "0", "root"),
        ("3", ".", "PUNCT", "_", "2", "punct"),
    ],
]

JOHN_GOLD = [
    ["Entity=(e1-person-1)", "_", "Entity=(e2-person-2(e1-person-1)", "Entity=e2)", "_"],
    ["Entity=(e2-person-1)", "_", "_"],
]

ANNA = [
    [
        ("1", "Anna", "PROPN", "Gender=Fem|Number=Sing", "2", "nsubj"),
        ("2", "met", "VERB", "_", "0", "root"),
        ("3", "Maria", "PROPN", "Gender=Fem|Number=Sing", "2", "obj"),
        ("4", ".", "PUNCT", "_", "2", "punct"),
    ],
    [
        ("1", "She", "PRON", "Gender=Fem|Number=Sing|PronType=Prs", "2", "nsubj"),
        ("2", "left", "VERB", "_", "0", "root"),
        ("3", ".", "PUNCT", "_", "2", "punct"),
    ],
]

ANNA_GOLD = [
    ["Entity=(e1-person-1)", "_", "Entity=(e2-person-1)", "_"],
    ["Entity=(e1-person-1)", "_", "_"],
]


def token_line(row, misc="_"):
    # empty nodes carry a seventh field, their enhanced dependencies
    index, form, upos, feats, head, deprel = row[:6]
    deps = row[6] if len(row) > 6 else "_"
    return "\t".join([index, form, "_", upos, "_", feats, head, deprel, deps, misc])


def sentence_block(sent_id, rows, entities=None, comments=()):
    entities = entities or ["_"] * len(rows)
    lines = list(comments)
    lines.append("# sent_id = " + sent_id)
    lines.append("# text = " + " ".join(row[1] for row in rows if "." not in row[0]))
    lines.extend(token_line(row, misc) for row, misc in zip(rows, entities))
    return "".join(line + "\n" for line in lines) + "\n"


def document_text(doc_id, sentences, entities=None, declare=True):
    """
    CoNLL-U text of one document; `entities` holds one MISC value per token.
    """
    entities = entities or [None] * len(sentences)
    blocks = []
    for i, (rows, misc) in enumerate(zip(sentences, entities)):
        comments = []
        if i == 0:
            if declare:
                comments.append("# global.Entity = eid-etype-head-other")
            comments.append("# newdoc id = " + doc_id)
        blocks.append(sentence_block("{}-s{}".format(doc_id, i + 1), rows, misc, comments))
    return "".join(blocks)


def parse(text, head_rule="annotated", dataset=DATASET, language=LANGUAGE):
    return kit.parse_conllu(text, dataset=dataset, language=language, head_rule=head_rule)


def parse_document(text, **kwargs):
    return parse(text, **kwargs).documents[0]


@pytest.fixture
def john_text():
    return document_text("doc1", JOHN, JOHN_GOLD)


@pytest.fixture
def john(john_text):
    return parse_document(john_text)


@pytest.fixture
def john_corpus(john_text):
    return parse(john_text)


@pytest.fixture
def anna():
    return parse_document(document_text("doc2", ANNA, ANNA_GOLD))
