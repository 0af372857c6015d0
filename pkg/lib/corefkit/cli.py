"""
Command-line entry point: `corefkit <subcommand> ...`.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

import logging
import os
import sys

import corefkit as kit
from corefkit.objects.report import ReportFile, FigureDataFile, TableFile, JsonFile

logger = logging.getLogger("corefkit")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


def configure_logging(verbosity):
    for handler in list(logger.handlers):
        if getattr(handler, "_corefkit", False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    handler._corefkit = True
    logger.addHandler(handler)
    logger.setLevel(verbosity)


class Runner(object):

    def __init__(self, config, stdout=None):
        self.config = config
        self.stdout = kit.fallback(stdout, sys.stdout)

    def read(self, paths):
        files = kit.corefud.find_files(paths, self.config["split"])
        if not files:
            raise kit.CorefkitError("No .conllu files found in {}.".format(", ".join(paths)))
        return kit.read_paths(
            files,
            dataset = self.config["dataset"],
            language = self.config["language"],
            head_rule = self.config["head_rule"],
            jobs = self.config["jobs"],
            progress = self.config["progress"],
        )

    def emit(self, files, dataset=None):
        """
        Write files below the output directory (per dataset when given), else to standard output.
        """
        output_dir = self.config["output_dir"]
        for file in files:
            if output_dir:
                file.abstract_directory = os.path.join(output_dir, dataset) if dataset else output_dir
                file.prepare()
            else:
                self.stdout.write(file.render())

    @property
    def file_format(self):
        return self.config["format"].upper()

    def validate(self):
        problems = 0
        corpora = self.read(self.config["paths"])
        for corpus in corpora:
            for document in corpus.documents:
                for problem in kit.check_document(document):
                    problems += 1
                    logger.error("[INVALID] %s: document `%s`: %s", document.path, document.doc_id, problem)
        if problems:
            raise kit.CorefkitError("{} annotation problems found.".format(problems))
        logger.info(
            "[VALID] %d datasets, %d documents.",
            len(corpora),
            sum(len(i.documents) for i in corpora),
        )

    def stats(self):
        for corpus in self.read(self.config["paths"]):
            report = kit.analysis.corpus_statistics(corpus)
            self.emit([ReportFile(report, file_format=self.file_format)], report.dataset)

    def analyze(self):
        vectors = None
        if self.config["vectors"]:
            vectors = kit.MentionVectors.read(self.config["vectors"])
        reports = []
        for corpus in self.read(self.config["paths"]):
            dataset_reports = kit.analysis.analyze(
                corpus,
                statistics = self.config["statistics"],
                genre_rule = self.config["genre_pattern"],
                vectors = vectors,
            )
            self.emit(
                [ReportFile(i, file_format=self.file_format) for i in dataset_reports],
                corpus.dataset or "unknown",
            )
            reports.extend(dataset_reports)
        if self.config["figure_data"]:
            self.emit([FigureDataFile(reports)])

    def pair_corpora(self):
        gold = self.read([self.config["gold"]])
        pred = {i.dataset: i for i in self.read([self.config["pred"]])}
        pairs = []
        for corpus in gold:
            if corpus.dataset not in pred:
                raise kit.SegmentationError(
                    "Dataset `{}` has no system output.".format(corpus.dataset)
                )
            pairs.append((corpus, pred[corpus.dataset]))
        return pairs

    def score(self):
        reports = [
            kit.metrics.score_corpora(
                gold,
                pred,
                match = self.config["match"],
                singleton_policy = self.config["singletons"],
                jobs = self.config["jobs"],
            )
            for gold, pred in self.pair_corpora()
        ]
        if self.file_format == "JSON":
            self.emit([JsonFile("scores", {
                "datasets": [i.to_dict() for i in reports],
                "macro_conll_f1": kit.metrics.macro_average(reports),
            })])
        else:
            self.emit([TableFile("scores", kit.metrics.SCORE_HEADER, kit.metrics.score_rows(reports))])

    def errors(self):
        reports = [
            kit.error_analysis.analyze_corpora(
                gold,
                pred,
                mode = self.config["match"],
                definition = self.config["unresolved"],
                jobs = self.config["jobs"],
            )
            for gold, pred in self.pair_corpora()
        ]
        table = TableFile(
            "errors",
            kit.error_analysis.TABLE_HEADER,
            [i.table_row() for i in reports],
            file_format = self.file_format,
        )
        self.emit([table, JsonFile("errors-detail", [i.to_dict() for i in reports])])
        for report in reports:
            self.emit([ReportFile(report.to_report(), file_format=self.file_format)], report.dataset)

    def export_features(self):
        if self.config["word_order"]:
            table = kit.WordOrderTable(self.config["word_order"])
        else:
            table = kit.constants.get_default_word_order_table()
        for corpus in self.read(self.config["paths"]):
            header, records = kit.features.export_features(
                corpus,
                table,
                target = self.config["target"],
                max_width = self.config["max_width"],
                jobs = self.config["jobs"],
            )
            files = [kit.features.FeatureFile(header, records), kit.features.VocabularyFile(records)]
            self.emit(files, corpus.dataset or "unknown")

    def taxonomy(self):
        rows = [list(i) for i in kit.taxonomy.category_table()]
        self.emit([TableFile("taxonomy", ["letter", "category", "relation"], rows, file_format=self.file_format)])

    def run(self):
        subcommand = self.config["subcommand"].replace("-", "_")
        getattr(self, subcommand)()


def run(argv=None, stdout=None, environ=None):
    """
    :return: exit code
    """
    try:
        config = kit.RunConfig(argv, environ=environ)
    except kit.UsageError as e:
        configure_logging(logging.INFO)
        logger.error("[ERROR] %s", e)
        return EXIT_USAGE
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE

    configure_logging(config["verbosity"])
    try:
        Runner(config, stdout).run()
    except kit.UsageError as e:
        logger.error("[ERROR] %s", e)
        return EXIT_USAGE
    except kit.CorefkitError as e:
        logger.error("[ERROR] %s", e)
        return EXIT_DATA
    except OSError as e:
        logger.error("[ERROR] %s", e)
        return EXIT_DATA
    return EXIT_OK


def main():
    sys.exit(run())
