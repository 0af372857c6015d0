import corefkit as kit

AGREEMENT_FEATURES = ["Gender", "Number"]

def is_personal_pronoun(token):
    """
    :param token:
    :return: True for a surface PRON with PronType=Prs
    """
    return (
        not token.is_empty
        and token.upos == "PRON"
        and token.feats.get("PronType") == "Prs"
    )

def mention_type(mention):
    return kit.classify_mention_type(mention.head)

def head_category(mention):
    return kit.ud_category(mention.head.deprel)

def is_nominal(mention):
    """
    :param mention:
    :return: True when headed by a common or a proper noun
    """
    return mention_type(mention) in (kit.MentionType.NominalNoun, kit.MentionType.ProperNoun)

def is_pre_modified(mention):
    """
    :param mention:
    :return: True if the mention has several tokens and all of them precede the head
    """
    if mention.width < 2:
        return False
    return mention.head.position == max(i.position for i in mention.span)

def has_agreement_features(token):
    return all(token.feats.get(i) for i in AGREEMENT_FEATURES)

def agrees(token, other):
    """
    Exact equality of Gender and Number; a missing feature never agrees.
    """
    return has_agreement_features(other) and all(
        token.feats.get(i) == other.feats.get(i) for i in AGREEMENT_FEATURES
    )

def sentence_distance(antecedent, anaphor):
    return anaphor.sentence_index - antecedent.sentence_index
