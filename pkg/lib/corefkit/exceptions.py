class CorefkitError(Exception):
    """Base class of every data error the toolkit reports."""


class FormatError(CorefkitError):

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        location = ":".join(str(i) for i in (path, line) if i is not None)
        super().__init__("{}: {}".format(location, message) if location else message)


class EntityAnnotationError(CorefkitError):

    def __init__(self, message, path=None, sent_id=None, entity_id=None):
        self.path = path
        self.sent_id = sent_id
        self.entity_id = entity_id
        details = []
        if path:
            details.append(str(path))
        if sent_id:
            details.append("sentence " + sent_id)
        if entity_id:
            details.append("entity " + entity_id)
        super().__init__("{}: {}".format(", ".join(details), message) if details else message)


class DuplicateDocumentError(CorefkitError):

    def __init__(self, doc_id, *paths):
        self.doc_id = doc_id
        self.paths = []
        for path in paths:
            if path and path not in self.paths:
                self.paths.append(path)
        where = " in {}".format(", ".join(self.paths)) if self.paths else ""
        super().__init__("Document id `{}` used twice{}.".format(doc_id, where))


class SegmentationError(CorefkitError):
    pass


class MissingVectorsError(CorefkitError):

    def __init__(self, missing):
        self.missing = list(missing)
        shown = ", ".join(" ".join(str(j) for j in i) for i in self.missing[:20])
        if len(self.missing) > 20:
            shown += ", ... ({} more)".format(len(self.missing) - 20)
        super().__init__("Missing vectors for {} mentions: {}".format(len(self.missing), shown))


class WordOrderError(CorefkitError):
    pass


class UsageError(CorefkitError):
    pass
