import logging
import os
from typing import Dict, List, Optional

from forge.config import Config
from forge.util import read_json, sha256_of_file, write_json


class ArtifactStore:
    """
    Writes JSON artifacts under the output folder and remembers their hashes for the run manifest.
    """
    instance = None

    def __init__(self, folder: Optional[str] = None) -> None:
        self.logger = logging.getLogger("forge")
        self.folder = folder if folder is not None else Config.output_folder
        self.artifacts: Dict[str, str] = {}

    @classmethod
    def get_instance(cls) -> "ArtifactStore":
        if cls.instance is None:
            cls.instance = cls()
        return cls.instance

    @classmethod
    def reset(cls, folder: Optional[str] = None) -> "ArtifactStore":
        cls.instance = cls(folder)
        return cls.instance

    def path_of(self, name: str) -> str:
        return name if os.path.isabs(name) else os.path.join(self.folder, name)

    def store(self, name: str, document, path: Optional[str] = None) -> str:
        """
        Writes the document (to `path` if given, else under the output folder) and returns its path.
        """
        target = path if path is not None else self.path_of(name)
        digest = write_json(target, document)
        self.artifacts[target] = digest
        self.logger.debug(f"Stored {name} at {target} (sha256 {digest[:12]})")
        return target

    def load(self, path: str):
        return read_json(path)

    def input_hash(self, path: str) -> str:
        return sha256_of_file(path)

    def stored_paths(self) -> List[str]:
        return sorted(self.artifacts)
