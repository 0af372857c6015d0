import argparse, logging, os
import corefkit as kit

logger = logging.getLogger(__name__)

ENVIRONMENT_DATA = "COREFUD_DATA"

SUBCOMMANDS = ["validate", "stats", "analyze", "score", "errors", "export-features", "taxonomy"]

# subcommands writing more than one file per dataset
FILE_SUBCOMMANDS = ["errors", "export-features"]


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise kit.UsageError(message)


class RunConfig(object):
    """
    Options of one command-line run. Defaults live in `options`; parsed
    arguments override them in `_finalize_options`.
    """

    def __init__(self, argv=None, options={}, environ=None):

        self.environ = kit.fallback(environ, os.environ)

        self.options = {

            "subcommand": None,
            "paths": [],
            "gold": None,
            "pred": None,
            "split": None,
            "dataset": None,
            "language": None,

            "match": "exact",
            "singletons": "exclude",
            "head_rule": "annotated",
            "unresolved": "links",
            "genre_pattern": kit.constants.GENRE_PATTERN_DEFAULT,

            "statistics": None,
            "vectors": None,
            "word_order": None,
            "target": "gold",
            "max_width": 10,

            "output_dir": None,
            "format": "tsv",
            "figure_data": False,
            "jobs": 1,
            "progress": False,
            "verbosity": logging.INFO,

        }

        self.options.update(options)

        self._finalize_options(argv)

    def __getitem__(self, key):
        return self.options[key]

    @staticmethod
    def make_parser():

        parser = ArgumentParser(
            prog = "corefkit",
            description = "Analyse, score and export features from CorefUD coreference corpora.",
        )

        common = ArgumentParser(add_help=False)
        common.add_argument(
            "--verbose", action = "store_true",
            help = "log debugging messages.",
        )
        common.add_argument(
            "--quiet", action = "store_true",
            help = "log warnings and errors only.",
        )
        common.add_argument(
            "--jobs", action = "store", type = int, default = 1,
            help = "worker processes; output does not depend on it.",
        )
        common.add_argument(
            "--progress", action = "store_true",
            help = "show progress bars on standard error.",
        )
        common.add_argument(
            "--head-rule", action = "store", choices = ["annotated", "syntactic"], default = "annotated",
            help = '"annotated" honours a head index on the mention, "syntactic" always uses the tree.',
        )
        common.add_argument("--dataset", action="store", help="dataset label overriding the file name.")
        common.add_argument("--language", action="store", help="language code overriding the file name.")
        common.add_argument("--split", action="store", help='only files of this split, e.g. "train" or "dev".')

        output = ArgumentParser(add_help=False)
        output.add_argument(
            "--output-dir", action = "store",
            help = "write one report per dataset below this directory instead of standard output.",
        )
        output.add_argument(
            "--format", action = "store", choices = ["tsv", "json"], default = "tsv",
        )

        corpus = ArgumentParser(add_help=False)
        corpus.add_argument(
            "paths", nargs = "*",
            help = "CoNLL-U files or directories; defaults to ${}.".format(ENVIRONMENT_DATA),
        )

        pair = ArgumentParser(add_help=False)
        pair.add_argument("--gold", action="store", required=True, help="gold file or directory.")
        pair.add_argument("--pred", action="store", required=True, help="system file or directory.")
        pair.add_argument(
            "--match", "--mode", dest = "match", action = "store", choices = kit.metrics.MATCH_MODES, default = "exact",
            help = "mention matching: identical spans or head containment.",
        )

        subparsers = parser.add_subparsers(dest="subcommand", parser_class=ArgumentParser)

        subparsers.add_parser(
            "validate", parents = [common, corpus],
            help = "parse files and check annotation invariants.",
        )
        subparsers.add_parser(
            "stats", parents = [common, corpus, output],
            help = "document, sentence, token, entity and mention counts.",
        )

        analyze = subparsers.add_parser(
            "analyze", parents = [common, corpus, output],
            help = "linguistic statistics over gold annotation.",
        )
        analyze.add_argument(
            "--stat", dest = "statistics", action = "append", choices = kit.analysis.STATISTICS,
            help = "statistic to compute; repeat for several, all by default.",
        )
        analyze.add_argument("--genre-pattern", action="store", default=kit.constants.GENRE_PATTERN_DEFAULT)
        analyze.add_argument("--vectors", action="store", help="mention vectors TSV for semantic-distance.")
        analyze.add_argument("--figure-data", action="store_true", help="also write long-format plotting data.")

        score = subparsers.add_parser(
            "score", parents = [common, pair, output],
            help = "MUC, B-cubed, CEAFe and CoNLL F1.",
        )
        score.add_argument(
            "--singletons", action = "store", choices = kit.metrics.SINGLETON_POLICIES, default = "exclude",
        )

        errors = subparsers.add_parser(
            "errors", parents = [common, pair, output],
            help = "unresolved entity analysis, columns A to F.",
        )
        errors.add_argument(
            "--unresolved", action = "store", choices = kit.error_analysis.UNRESOLVED_DEFINITIONS, default = "links",
            help = '"links": no gold link recovered; "mentions": no mention detected.',
        )

        export = subparsers.add_parser(
            "export-features", parents = [common, corpus, output],
            help = "span and document features as JSON lines.",
        )
        export.add_argument("--word-order", action="store", help="language to word order TSV.")
        export.add_argument("--target", action="store", choices=kit.features.TARGETS, default="gold")
        export.add_argument("--max-width", action="store", type=int, default=10)

        taxonomy = subparsers.add_parser(
            "taxonomy", parents = [output],
            help = "dump the UD relation categories.",
        )
        taxonomy.set_defaults(paths=[])

        return parser

    def _finalize_options(self, argv):

        parser = self.make_parser()
        self.args = parser.parse_args(argv)

        if not self.args.subcommand:
            raise kit.UsageError("a subcommand is required: {}".format(", ".join(SUBCOMMANDS)))

        for key, value in vars(self.args).items():
            if key in self.options and value is not None:
                self.options[key] = value

        if getattr(self.args, "verbose", False):
            self.options["verbosity"] = logging.DEBUG
        elif getattr(self.args, "quiet", False):
            self.options["verbosity"] = logging.WARNING

        if self.options["jobs"] < 1:
            raise kit.UsageError("--jobs must be at least 1.")
        if self.options["max_width"] < 1:
            raise kit.UsageError("--max-width must be at least 1.")

        if self.options["subcommand"] in FILE_SUBCOMMANDS and not self.options["output_dir"]:
            raise kit.UsageError("{} needs --output-dir.".format(self.options["subcommand"]))

        if self.options["subcommand"] in ["validate", "stats", "analyze", "export-features"]:
            if not self.options["paths"]:
                root = self.environ.get(ENVIRONMENT_DATA)
                if not root:
                    raise kit.UsageError("no input paths given and ${} is not set.".format(ENVIRONMENT_DATA))
                self.options["paths"] = [root]

        for path in self.input_paths:
            if not os.path.exists(path):
                raise kit.UsageError("no such file or directory: {}".format(path))

    @property
    def input_paths(self):
        paths = list(self.options["paths"])
        for key in ["gold", "pred", "vectors", "word_order"]:
            if self.options[key]:
                paths.append(self.options[key])
        return paths
