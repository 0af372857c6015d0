import os, re

import corefkit as kit

ENTITY_ATTRIBUTES_DEFAULT = ["eid", "etype", "head", "other"]

WIDTH_BUCKETS = [
    ("1",     1,    1),
    ("2",     2,    2),
    ("3",     3,    3),
    ("4",     4,    4),
    ("5-7",   5,    7),
    ("8-15",  8,   15),
    ("16-31", 16,  31),
    ("32+",   32, None),
]

WORD_ORDERS = "SOV SVO VSO VOS OVS OSV NoDominant".split()

DISTANCE_BUCKETS = ["0", "1", "2", "3+"]

GENRE_PATTERN_DEFAULT = r"^[^_]+_([^_]+)"
GENRE_UNKNOWN = "unknown"
PRONOUN_RATE_WINDOW = 8000

PERCENT_DIGITS = 2
SCORE_DIGITS = 6

class Dataset(object):
    def __init__(
        self,
        name,
        language,
        directory,
        aliases = None,
    ):
        self.name = name
        self.language = language
        self.directory = directory
        self.aliases = kit.fallback(aliases, [])

DATASETS = [
    Dataset(
        name = "ca_ancora",
        language = "ca",
        directory = "CorefUD_Catalan-AnCora",
    ),
    Dataset(
        name = "cs_pcedt",
        language = "cs",
        directory = "CorefUD_Czech-PCEDT",
    ),
    Dataset(
        name = "cs_pdt",
        language = "cs",
        directory = "CorefUD_Czech-PDT",
    ),
    Dataset(
        name = "en_gum",
        language = "en",
        directory = "CorefUD_English-GUM",
    ),
    Dataset(
        name = "hu_szegedkoref",
        language = "hu",
        directory = "CorefUD_Hungarian-SzegedKoref",
    ),
    Dataset(
        name = "pl_pcc",
        language = "pl",
        directory = "CorefUD_Polish-PCC",
    ),
    Dataset(
        name = "es_ancora",
        language = "es",
        directory = "CorefUD_Spanish-AnCora",
    ),
    Dataset(
        name = "lt_lcc",
        language = "lt",
        directory = "CorefUD_Lithuanian-LCC",
    ),
    Dataset(
        name = "fr_democrat",
        language = "fr",
        directory = "CorefUD_French-Democrat",
    ),
    Dataset(
        name = "de_parcorfull",
        language = "de",
        directory = "CorefUD_German-ParCorFull",
    ),
    Dataset(
        name = "de_potsdamcc",
        language = "de",
        directory = "CorefUD_German-PotsdamCC",
    ),
    Dataset(
        name = "en_parcorfull",
        language = "en",
        directory = "CorefUD_English-ParCorFull",
    ),
    Dataset(
        name = "ru_rucor",
        language = "ru",
        directory = "CorefUD_Russian-RuCor",
    ),
    Dataset(
        name = "hu_korkor",
        language = "hu",
        directory = "CorefUD_Hungarian-KorKor",
    ),
    Dataset(
        name = "no_bokmaalnarc",
        language = "no",
        directory = "CorefUD_Norwegian-BokmaalNARC",
        aliases = ["nb_bokmaalnarc"],
    ),
    Dataset(
        name = "no_nynorsknarc",
        language = "no",
        directory = "CorefUD_Norwegian-NynorskNARC",
        aliases = ["nn_nynorsknarc"],
    ),
    Dataset(
        name = "tr_itcc",
        language = "tr",
        directory = "CorefUD_Turkish-ITCC",
    ),
]

DATASET_NAMES_TO_DATASETS = {}
DATASET_DIRECTORIES_TO_DATASETS = {}
for dataset in DATASETS:
    DATASET_NAMES_TO_DATASETS[dataset.name] = dataset
    DATASET_DIRECTORIES_TO_DATASETS[dataset.directory] = dataset
    for alias in dataset.aliases:
        DATASET_NAMES_TO_DATASETS[alias] = dataset

# ca_ancora-corefud-train.conllu, en_gum-corefud-dev.conllu, ...
FILENAME_PATTERN = re.compile(r"^(?P<dataset>(?P<language>[a-z]{2,3})_[a-z0-9]+)(?:-corefud)?(?:-(?P<split>[a-z]+))?\.conllu$")

def parse_filename(filename):
    """
    :param filename: base name of a CorefUD release file
    :return: (dataset, language, split); unknown parts are None
    """
    match = FILENAME_PATTERN.match(filename)
    if not match:
        return None, None, None
    name = match.group("dataset")
    dataset = DATASET_NAMES_TO_DATASETS.get(name)
    if dataset:
        return dataset.name, dataset.language, match.group("split")
    return name, match.group("language"), match.group("split")

def parse_path(path):
    """
    Like `parse_filename`, falling back on the release directory holding the file.
    """
    name, language, split = parse_filename(os.path.basename(path))
    if name is None:
        dataset = DATASET_DIRECTORIES_TO_DATASETS.get(os.path.basename(os.path.dirname(os.path.abspath(path))))
        if dataset:
            return dataset.name, dataset.language, None
    return name, language, split

def width_bucket(width):
    for label, low, high in WIDTH_BUCKETS:
        if width >= low and (high is None or width <= high):
            return label
    raise ValueError("Span width must be positive: {}".format(width))

def get_default_word_order_path():
    return kit.relative_to_package("data/word-order.txt")

@kit.memoize
def get_default_word_order_table():
    return kit.WordOrderTable(get_default_word_order_path())
