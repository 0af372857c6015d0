import enum, logging

logger = logging.getLogger(__name__)

class MentionType(enum.Enum):
    NominalNoun = "nominal noun"
    ProperNoun = "proper noun"
    OvertPronoun = "overt pronoun"
    ZeroPronoun = "zero pronoun"
    Other = "others"

MENTION_TYPES = list(MentionType)

UPOS_TO_MENTION_TYPES = {
    "NOUN": MentionType.NominalNoun,
    "PROPN": MentionType.ProperNoun,
    "PRON": MentionType.OvertPronoun,
}

class UdCategory(object):

    def __init__(self, letter, name, relations):
        self.letter = letter
        self.name = name
        self.relations = relations

    def __repr__(self):
        return "UdCategory({})".format(self.letter)

    def __str__(self):
        return self.letter

    def __lt__(self, other):
        return self.letter < other.letter

CATEGORIES = [
    UdCategory("S", "core arguments_subject", ["nsubj"]),
    UdCategory("O", "core arguments_object", ["obj", "iobj"]),
    UdCategory("D", "non-core dependents_nominals", ["obl", "vocative", "expl", "dislocated"]),
    UdCategory("N", "nominal dependents_nominals", ["nmod", "appos", "nummod"]),
    UdCategory("C", "clauses", ["csubj", "ccomp", "xcomp", "advcl", "acl"]),
    UdCategory("M", "modifier words", ["advmod", "discourse", "amod"]),
    UdCategory("F", "function words", ["aux", "cop", "mark", "det", "clf", "case"]),
    UdCategory("R", "coordination", ["conj", "cc"]),
    UdCategory("W", "MWE", ["fixed", "flat", "compound"]),
    UdCategory("L", "loose", ["list", "parataxis"]),
    UdCategory("P", "special", ["orphan", "goeswith", "reparandum"]),
    UdCategory("T", "other", ["punct", "root", "dep"]),
]

LETTERS_TO_CATEGORIES = {}
RELATIONS_TO_CATEGORIES = {}
for category in CATEGORIES:
    LETTERS_TO_CATEGORIES[category.letter] = category
    for relation in category.relations:
        RELATIONS_TO_CATEGORIES[relation] = category

CATEGORY_OTHER = LETTERS_TO_CATEGORIES["T"]

_unknown_relations = set()

def base_relation(deprel):
    """
    nsubj:pass -> nsubj
    """
    if deprel is None:
        return "_"
    return deprel.partition(":")[0]

def ud_category(deprel):
    relation = base_relation(deprel)
    category = RELATIONS_TO_CATEGORIES.get(relation)
    if category is None:
        if relation not in _unknown_relations:
            _unknown_relations.add(relation)
            logger.warning("[WARNING] Unknown dependency relation `%s`, counted as T.", relation)
        category = CATEGORY_OTHER
    return category

def classify_mention_type(head):
    """
    Empty nodes are zero pronouns whatever their UPOS says.
    """
    if head.is_empty:
        return MentionType.ZeroPronoun
    return UPOS_TO_MENTION_TYPES.get(head.upos, MentionType.Other)

def category_table():
    """
    :return: (letter, name, relation) rows in category order, one per base relation
    """
    return [
        (category.letter, category.name, relation)
        for category in CATEGORIES
        for relation in category.relations
    ]
