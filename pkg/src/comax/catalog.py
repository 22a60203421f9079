"""Ring catalogs: the built-in desk-scale sweep and catalog files.

A catalog file is either a JSON array of ring-spec strings or plain text
with one spec per line (``#`` starts a comment). Table paths inside a
catalog file are resolved relative to the file's directory.

Run ``python -m comax.catalog [DIR]`` to regenerate the bundled
upper-triangular table rings.
"""

from __future__ import annotations

import itertools
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .dsl import GF, Mat, Product, RingSpec, Table, Zmod, data_path, parse_spec
from .errors import InvalidSpecError
from .ring import table_ring_json, upper_triangular

UPPER_TRIANGULAR_TABLES = {2: "t2_gf2.json", 3: "t2_gf3.json"}


@dataclass(frozen=True)
class Catalog:
    entries: tuple[RingSpec, ...]
    base_dir: Path | None = field(default=None, compare=False)

    def __post_init__(self):
        labels = [str(e) for e in self.entries]
        dupes = sorted({x for x in labels if labels.count(x) > 1})
        if dupes:
            raise InvalidSpecError(f"duplicate catalog entries: {dupes}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def default_catalog() -> Catalog:
    entries: list[RingSpec] = [Zmod(n) for n in range(2, 61)]
    fields = [GF(2), GF(3), GF(2, 2), GF(5)]
    for r in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(fields, r):
            entries.append(combo[0] if r == 1 else Product(combo))
    entries += [Mat(2, f) for f in fields]
    entries += [Table(name) for name in UPPER_TRIANGULAR_TABLES.values()]
    entries.append(Product((Zmod(2), Zmod(2), Zmod(2))))
    return Catalog(tuple(entries))


def load_catalog(path: str | Path) -> Catalog:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidSpecError(f"cannot read catalog {path}: {exc}") from exc
    if text.lstrip().startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidSpecError(f"catalog {path} is not valid JSON: {exc}") from exc
        if not all(isinstance(x, str) for x in items):
            raise InvalidSpecError(f"catalog {path} must be an array of ring-spec strings")
    else:
        items = [line.split("#", 1)[0].strip() for line in text.splitlines()]
        items = [x for x in items if x]
    return Catalog(tuple(parse_spec(x) for x in items), path.parent)


def is_m2_over_field(spec: RingSpec) -> int | None:
    """q when the spec is M2(GF(q)), else None."""
    if isinstance(spec, Mat) and spec.n == 2 and isinstance(spec.base, GF):
        return spec.base.q
    return None


def is_boolean_cube(spec: RingSpec) -> bool:
    """True for the spec Z2 x Z2 x Z2 (the GF(2) spelling is a separate catalog entry)."""
    return spec == Product((Zmod(2), Zmod(2), Zmod(2)))


def write_upper_triangular_tables(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for q, name in UPPER_TRIANGULAR_TABLES.items():
        out = directory / name
        out.write_text(json.dumps(table_ring_json(upper_triangular(q))) + "\n", encoding="utf-8")
        written.append(out)
    return written


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    target = Path(argv[0]) if argv else data_path("")
    for p in write_upper_triangular_tables(target):
        print(p)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
