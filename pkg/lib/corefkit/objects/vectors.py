import collections

import numpy as np

import corefkit as kit

class MentionVectors(object):
    """
    Externally computed mention embeddings, keyed by (doc_id, sentence, span).

    File format, one mention per line, tab-separated:
    doc_id, 1-based sentence number, span ids ("3,4,5" or "3,4+7"), then d floats.
    """

    def __init__(self, vectors=None):
        self.vectors = collections.OrderedDict()
        self.dimension = None
        for key, vector in (vectors or {}).items():
            self.add(key, vector)

    @staticmethod
    def key_of(document, mention):
        return document.doc_id, mention.sentence_index + 1, mention.span_id

    def add(self, key, vector):
        vector = np.asarray(vector, dtype=float)
        if vector.ndim != 1:
            raise kit.CorefkitError("Vector for {} is not one-dimensional.".format(key))
        if self.dimension is None:
            self.dimension = vector.shape[0]
        elif vector.shape[0] != self.dimension:
            raise kit.CorefkitError(
                "Vector for {} has dimension {}, expected {}.".format(key, vector.shape[0], self.dimension)
            )
        if not np.all(np.isfinite(vector)):
            raise kit.CorefkitError("Vector for {} has non-finite components.".format(key))
        self.vectors[tuple(key)] = vector

    def get(self, key):
        return self.vectors.get(tuple(key))

    def __len__(self):
        return len(self.vectors)

    @classmethod
    def read(cls, path):
        vectors = cls()
        with open(path, encoding="utf-8") as f:
            for line_number, line in enumerate(f, 1):
                line = line.rstrip("\r\n")
                if not line or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) < 4:
                    raise kit.FormatError("Expected doc_id, sentence, span and at least one value.", path, line_number)
                try:
                    key = (parts[0], int(parts[1]), parts[2])
                    values = [float(i) for i in parts[3:]]
                except ValueError as e:
                    raise kit.FormatError(str(e), path, line_number)
                vectors.add(key, values)
        return vectors
