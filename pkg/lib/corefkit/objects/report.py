import json
from fractions import Fraction

import corefkit as kit

NOT_AVAILABLE = "n/a"


def format_fixed(value, digits):
    """
    Fixed-point rendering that never prints "-0.00".
    """
    text = "{:.{}f}".format(float(value), digits)
    if text.startswith("-") and float(text) == 0:
        text = text[1:]
    return text


class Row(object):
    """
    One statistic. `kind` decides the rendering:

    percent  a Fraction in [0, 1], rendered as 0-100 with two decimals
    mean     a Fraction or float, two decimals
    count    an integer
    score    a float in [0, 1], six decimals
    value    any real, six decimals
    """

    def __init__(self, key, value, denominator=None, kind="percent"):
        self.key = key
        self.value = value
        self.denominator = denominator
        self.kind = kind

    def __repr__(self):
        return "<Row {} = {}>".format(self.key, self.rational)

    @classmethod
    def ratio(cls, key, numerator, denominator, kind="percent"):
        value = Fraction(numerator, denominator) if denominator else None
        return cls(key, value, denominator, kind)

    @property
    def percentage(self):
        if self.value is None or self.kind != "percent":
            return None
        return float(self.value * 100)

    @property
    def rational(self):
        if isinstance(self.value, Fraction):
            return "{}/{}".format(self.value.numerator, self.value.denominator)
        if isinstance(self.value, int):
            return str(self.value)
        return "_"

    def render(self):
        if self.value is None:
            return NOT_AVAILABLE
        if self.kind == "percent":
            return format_fixed(self.value * 100, kit.constants.PERCENT_DIGITS)
        if self.kind == "mean":
            return format_fixed(self.value, 2)
        if self.kind == "count":
            return str(int(self.value))
        return format_fixed(self.value, kit.constants.SCORE_DIGITS)

    def number(self):
        """
        :return: plot-ready float (percent rows in 0-100), None when undefined
        """
        if self.value is None:
            return None
        if self.kind == "percent":
            return round(float(self.value * 100), 6)
        if self.kind == "count":
            return int(self.value)
        return round(float(self.value), 6)


class DatasetReport(object):

    def __init__(self, dataset, statistic, rows=None):
        self.dataset = dataset
        self.statistic = statistic
        self.rows = kit.fallback(rows, [])

    def add(self, row):
        self.rows.append(row)
        return row

    def get(self, key):
        for row in self.rows:
            if row.key == key:
                return row
        raise KeyError(key)

    def __getitem__(self, key):
        return self.get(key).value

    def to_dict(self):
        return {
            "dataset": self.dataset,
            "statistic": self.statistic,
            "rows": [
                {
                    "key": row.key,
                    "value": row.number(),
                    "rational": row.rational,
                    "denominator": row.denominator,
                    "kind": row.kind,
                }
                for row in self.rows
            ],
        }


class ReportFile(kit.BaseFile):

    HEADER = ["dataset", "statistic", "key", "value", "rational", "denominator"]

    def __init__(self, report, file_format="TSV", abstract_directory=None):
        super().__init__(
            report.statistic,
            file_format = file_format,
            abstract_directory = abstract_directory,
        )
        self.report = report

    def generate(self):
        if self.file_format.upper() == "JSON":
            return json.dumps(self.report.to_dict(), indent=2, ensure_ascii=False).splitlines()
        lines = ["\t".join(self.HEADER)]
        for row in self.report.rows:
            lines.append("\t".join([
                self.report.dataset,
                self.report.statistic,
                row.key,
                row.render(),
                row.rational,
                NOT_AVAILABLE if row.denominator is None else str(row.denominator),
            ]))
        return lines


class FigureDataFile(kit.BaseFile):
    """
    Long-format data for plotting: one line per (dataset, statistic, key).
    """

    HEADER = ["dataset", "statistic", "key", "value"]

    def __init__(self, reports, name="figure-data", abstract_directory=None):
        super().__init__(name, file_format="TSV", abstract_directory=abstract_directory)
        self.reports = reports

    def generate(self):
        lines = ["\t".join(self.HEADER)]
        for report in self.reports:
            for row in report.rows:
                number = row.number()
                lines.append("\t".join([
                    report.dataset,
                    report.statistic,
                    row.key,
                    NOT_AVAILABLE if number is None else format_fixed(number, 6),
                ]))
        return lines


class TableFile(kit.BaseFile):
    """
    A plain table of already rendered cells.
    """

    def __init__(self, name, header, rows, file_format="TSV", abstract_directory=None):
        super().__init__(name, file_format=file_format, abstract_directory=abstract_directory)
        self.header = header
        self.rows = rows

    def generate(self):
        if self.file_format.upper() == "JSON":
            payload = [dict(zip(self.header, row)) for row in self.rows]
            return json.dumps(payload, indent=2, ensure_ascii=False).splitlines()
        return ["\t".join(self.header)] + ["\t".join(row) for row in self.rows]


class JsonFile(kit.BaseFile):

    def __init__(self, name, payload, abstract_directory=None):
        super().__init__(name, file_format="JSON", abstract_directory=abstract_directory)
        self.payload = payload

    def generate(self):
        return json.dumps(self.payload, indent=2, ensure_ascii=False).splitlines()
