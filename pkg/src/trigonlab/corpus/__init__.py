"""Access to the bundled example programs (the .geo files in this package)."""

from __future__ import annotations

from importlib import resources


def corpus_names() -> tuple[str, ...]:
    """Program names in numeric order, without the .geo suffix."""
    names = [
        entry.name[: -len(".geo")]
        for entry in resources.files(__name__).iterdir()
        if entry.name.endswith(".geo")
    ]
    return tuple(sorted(names, key=lambda n: (len(n), n)))


def corpus_source(name: str) -> str:
    """The program text for one bundled example."""
    candidate = resources.files(__name__) / f"{name}.geo"
    if not candidate.is_file():
        known = ", ".join(corpus_names())
        raise KeyError(f"no bundled program {name!r}; have {known}")
    return candidate.read_text(encoding="utf-8")
