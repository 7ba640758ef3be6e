"""
File and JSON helpers. Every artifact is written as canonical JSON (sorted keys, fixed
separators, trailing newline) so that equal contents give equal bytes.
"""
import hashlib
import json
import os


def canonical_json(document) -> str:
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def sha256_of_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def sha256_of_file(path: str) -> str:
    if not os.path.isfile(path):
        raise AttributeError("Could not find file at '%s'" % path)
    digest = hashlib.sha256()
    with open(path, "rb") as file:
        for chunk in iter(lambda: file.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_json(path: str, document) -> str:
    """
    Writes the document and returns the sha256 of the written text.
    """
    folder = os.path.dirname(path)
    if folder and not os.path.exists(folder):
        os.makedirs(folder)
    text = canonical_json(document)
    with open(path, "w", encoding="utf-8") as file:
        file.write(text)
    return sha256_of_text(text)


def read_json(path: str):
    if not os.path.isfile(path):
        raise AttributeError("Could not find file at '%s'" % path)
    with open(path, "r", encoding="utf-8") as file:
        return json.load(file)
