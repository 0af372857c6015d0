import os, functools, logging, multiprocessing

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

def relative_to_package(path):
    return os.path.join(__path__[0], path)

def memoize(obj):
    """
    Decorator to add caching in function.
    """
    memoized = {}
    @functools.wraps(obj)
    def memoizer(*args, **kwargs):
        k = str(args) + str(kwargs)
        if k not in memoized:
            memoized[k] = obj(*args, **kwargs)
        return memoized[k]
    return memoizer

def makedirs(path):
    try:
        os.makedirs(path)
    except OSError:
        if not os.path.isdir(path):
            raise

def fallback(*candidates):
    """
    :param candidates:
    :return: First argument which is not None
    """
    for i in candidates:
        if i is not None:
            return i

def map_jobs(function, items, jobs=1):
    """
    Ordered map, spread over `jobs` worker processes when jobs > 1.
    The result order never depends on the number of workers.
    """
    items = list(items)
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [function(i) for i in items]
    with multiprocessing.Pool(min(jobs, len(items))) as pool:
        return pool.map(function, items)

"""
To have a import functionality of library at single entry point
"""
from corefkit import exceptions
from corefkit import constants
from corefkit import taxonomy
from corefkit import filters
from corefkit import corefud

from corefkit.exceptions import (CorefkitError, FormatError, EntityAnnotationError, DuplicateDocumentError,
                                 SegmentationError, MissingVectorsError, WordOrderError, UsageError)
from corefkit.taxonomy import MentionType, UdCategory, classify_mention_type, ud_category
from corefkit.objects.document import Token, Sentence, Mention, Entity, Document, Corpus
from corefkit.objects.base import BaseFile
from corefkit.objects.report import Row, DatasetReport, ReportFile, FigureDataFile, TableFile, JsonFile
from corefkit.objects.wordorder import WordOrderTable
from corefkit.objects.vectors import MentionVectors
from corefkit.objects.run import RunConfig

from corefkit.corefud import (parse_conllu, read_file, read_paths, resolve_entities, serialize, write_file,
                              mention_head, check_document)
from corefkit import analysis
from corefkit import metrics
from corefkit import error_analysis
from corefkit import features
