"""Ring-spec mini-language.

    ring    := factor ("x" factor)*
    factor  := "Z" int | "GF(" int ["," int] ")" | "M" int "(" ring ")" | "table:" path

Whitespace between tokens is ignored. ``GF(q)`` with a single prime-power
argument is accepted alongside ``GF(p,k)``. Table paths end at whitespace
or a closing parenthesis; relative paths are resolved against a base
directory and then against the bundled data directory.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Union

from .errors import InvalidSpecError
from .fields import is_prime, prime_power
from .ring import (
    FiniteRing,
    gf_label,
    load_table_ring,
    make_gf,
    make_matrix_ring,
    make_product,
    make_zmod,
)


@dataclass(frozen=True)
class Zmod:
    n: int

    def __str__(self) -> str:
        return f"Z{self.n}"


@dataclass(frozen=True)
class GF:
    p: int
    k: int = 1

    @property
    def q(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return gf_label(self.q)


@dataclass(frozen=True)
class Mat:
    n: int
    base: "RingSpec"

    def __str__(self) -> str:
        return f"M{self.n}({self.base})"


@dataclass(frozen=True)
class Product:
    factors: tuple["RingSpec", ...]

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class Table:
    path: str

    def __str__(self) -> str:
        return f"table:{self.path}"


RingSpec = Union[Zmod, GF, Mat, Product, Table]

_TOKEN = re.compile(r"\s*(?:(table:)([^\s()]+)|(\d+)|(GF|Z|M|x|\(|\)|,))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InvalidSpecError(f"unexpected input at position {pos}: {text[pos:]!r}")
        if m.group(1):
            out.append(("path", m.group(2)))
        elif m.group(3):
            out.append(("int", m.group(3)))
        else:
            out.append(("sym", m.group(4)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind: str, value: str | None = None) -> str:
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = "end of input" if tok is None else repr(tok[1])
            raise InvalidSpecError(f"expected {want!r} but found {got} in {self.text!r}")
        self.i += 1
        return tok[1]

    def ring(self) -> RingSpec:
        factors = [self.factor()]
        while self.peek() == ("sym", "x"):
            self.i += 1
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> RingSpec:
        tok = self.peek()
        if tok is None:
            raise InvalidSpecError(f"unexpected end of spec {self.text!r}")
        if tok[0] == "path":
            self.i += 1
            return Table(tok[1])
        head = self.take("sym")
        if head == "Z":
            n = int(self.take("int"))
            if n < 2:
                raise InvalidSpecError(f"Z{n}: modulus must be at least 2")
            return Zmod(n)
        if head == "GF":
            self.take("sym", "(")
            a = int(self.take("int"))
            if self.peek() == ("sym", ","):
                self.i += 1
                k = int(self.take("int"))
                self.take("sym", ")")
                if not is_prime(a) or k < 1:
                    raise InvalidSpecError(f"GF({a},{k}): need a prime and an exponent >= 1")
                return GF(a, k)
            self.take("sym", ")")
            pk = prime_power(a)
            if pk is None:
                raise InvalidSpecError(f"GF({a}): {a} is not a prime power")
            return GF(*pk)
        if head == "M":
            n = int(self.take("int"))
            if n < 1:
                raise InvalidSpecError("matrix size must be at least 1")
            self.take("sym", "(")
            inner = self.ring()
            self.take("sym", ")")
            return Mat(n, inner)
        raise InvalidSpecError(f"unexpected {head!r} in {self.text!r}")


def parse_spec(text: str) -> RingSpec:
    p = _Parser(text)
    spec = p.ring()
    if p.peek() is not None:
        raise InvalidSpecError(f"trailing input {p.toks[p.i][1]!r} in {text!r}")
    return spec


def data_path(name: str) -> Path:
    return Path(str(resources.files("comax") / "data" / name))


def resolve_table(path: str, base_dir: Path | None = None) -> Path:
    p = Path(path)
    candidates = [p] if p.is_absolute() else [(base_dir or Path.cwd()) / p, data_path(p.name)]
    for c in candidates:
        if c.is_file():
            return c
    raise InvalidSpecError(f"table file not found: {path}")


def build_ring(spec: RingSpec | str, base_dir: Path | None = None) -> FiniteRing:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, Zmod):
        return make_zmod(spec.n)
    if isinstance(spec, GF):
        return make_gf(spec.p, spec.k)
    if isinstance(spec, Mat):
        return make_matrix_ring(build_ring(spec.base, base_dir), spec.n)
    if isinstance(spec, Product):
        return make_product([build_ring(f, base_dir) for f in spec.factors])
    if isinstance(spec, Table):
        return load_table_ring(resolve_table(spec.path, base_dir))
    raise TypeError(f"not a ring spec: {spec!r}")
