import collections
import corefkit as kit

class WordOrderTable(object):
    """
    Language code -> dominant word order, read from a two-column TSV with
    "#" comments.
    """

    @staticmethod
    def split(line):
        return line.partition("#")[0].split()

    def __init__(self, path=None):

        self.path = kit.fallback(path, kit.constants.get_default_word_order_path())
        self.dictionary = collections.OrderedDict()

        with open(self.path, encoding="utf-8") as f:
            for line_number, line in enumerate(f, 1):
                parts = self.split(line)
                if not parts:
                    continue
                if len(parts) != 2:
                    raise kit.WordOrderError(
                        "{}:{}: expected `language<TAB>order`, found {} fields.".format(self.path, line_number, len(parts))
                    )
                language, order = parts
                if order not in kit.constants.WORD_ORDERS:
                    raise kit.WordOrderError(
                        "{}:{}: unknown word order `{}`.".format(self.path, line_number, order)
                    )
                if language in self.dictionary:
                    raise kit.WordOrderError(
                        "{}:{}: duplicate row for language `{}`.".format(self.path, line_number, language)
                    )
                self.dictionary[language] = order

    def __contains__(self, language):
        return language in self.dictionary

    def lookup(self, language):
        try:
            return self.dictionary[language]
        except KeyError:
            raise kit.WordOrderError(
                "No word order for language `{}` in {}.".format(language, self.path)
            )
