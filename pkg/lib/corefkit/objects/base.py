import logging, os
import corefkit as kit

logger = logging.getLogger(__name__)

class BaseFile(object):

    def __init__(
        self,
        name,
        file_format = None,
        abstract_directory = None,
    ):

        self.name = name
        self.file_format = file_format
        self.abstract_directory = kit.fallback(abstract_directory, "")

        self._filename = None
        self._extension = None
        self._filename_with_extension = None
        self._path = None

    @property
    def filename(self):
        return kit.fallback(self._filename, self.name)

    @property
    def extension(self):
        return kit.fallback(
            self._extension,
            self.file_format.lower() if self.file_format else None,
        )

    @property
    def filename_with_extension(self):
        return kit.fallback(
            self._filename_with_extension,
            self.filename + (("." + self.extension) if self.extension else ""),
        )

    def get_directory(self):
        return self.abstract_directory

    def get_path(self):
        return kit.fallback(
            self._path,
            os.path.join(self.get_directory(), self.filename_with_extension),
        )

    def render(self):
        return "".join(line + "\n" for line in self.generate())

    def prepare(self):
        """
        Write the generated lines to `get_path()`, creating directories on the way.
        """
        kit.makedirs(os.path.dirname(os.path.abspath(self.get_path())))
        with open(self.get_path(), "w", encoding="utf-8", newline="\n") as f:
            f.write(self.render())
        logger.info("[WRITTEN] %s", self.get_path())

    def generate(self):
        raise NotImplementedError("[CAN'T GENERATE] " + self.get_path())
