"""Bundled example triangulations, loaded by name."""

from functools import lru_cache
from importlib import resources

from trikit.triangulation import parse


def names():
    files = resources.files("trikit") / "corpus"
    return sorted(f.name[:-4] for f in files.iterdir() if f.name.endswith(".tri"))


@lru_cache(maxsize=None)
def load(name):
    path = resources.files("trikit") / "corpus" / f"{name}.tri"
    if not path.is_file():
        raise KeyError(f"no bundled triangulation named {name!r}")
    return parse(path.read_text())


def corpus(max_size=None):
    """``(name, triangulation)`` pairs, smallest first."""
    items = [(n, load(n)) for n in names()]
    if max_size is not None:
        items = [(n, T) for n, T in items if T.size <= max_size]
    return sorted(items, key=lambda item: (item[1].size, item[0]))
