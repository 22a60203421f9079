"""Finite unital rings as element-indexed arithmetic tables.

Every ring has elements ``0 .. size-1``. Element 0 is the additive identity
and element 1 the multiplicative identity (when size >= 2), whatever the
constructor. A codec translates ids to structured literals (residues,
coefficient vectors, matrices, tuples) and back.
"""

from __future__ import annotations

import functools
import json
import os
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .errors import InvalidSpecError, RingAxiomError, SizeLimitError
from .fields import gf_tables, is_prime, prime_power

DEFAULT_SIZE_CAP = 4096
EXHAUSTIVE_AXIOM_LIMIT = 256
SAMPLED_TRIPLES = 100_000


def size_cap() -> int:
    """Element cap, overridable through the COMAX_SIZE_CAP environment variable."""
    raw = os.environ.get("COMAX_SIZE_CAP")
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidSpecError(f"COMAX_SIZE_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InvalidSpecError("COMAX_SIZE_CAP must be positive")
    return cap


def check_size(n: int, what: str) -> None:
    cap = size_cap()
    if n > cap:
        raise SizeLimitError(f"{what} has {n} elements, above the cap of {cap}")


# --------------------------------------------------------------------------
# Codecs
# --------------------------------------------------------------------------


class Codec:
    """Identity codec: the literal of an element is its id."""

    def decode(self, a: int) -> Any:
        return int(a)

    def encode(self, literal: Any) -> int:
        return int(literal)

    def format(self, a: int) -> str:
        return str(self.decode(a))


class ResidueCodec(Codec):
    pass


class FieldCodec(Codec):
    """GF(p^k) elements as coefficient vectors, constant term first."""

    def __init__(self, p: int, k: int):
        self.p, self.k = p, k

    def decode(self, a: int) -> tuple[int, ...]:
        return tuple((int(a) // self.p**i) % self.p for i in range(self.k))

    def encode(self, literal: Sequence[int]) -> int:
        if len(literal) != self.k or any(not 0 <= c < self.p for c in literal):
            raise ValueError(f"not a GF({self.p}^{self.k}) coefficient vector: {literal!r}")
        return sum(int(c) * self.p**i for i, c in enumerate(literal))

    def format(self, a: int) -> str:
        """Polynomial in the generator x, highest degree first: ``x+1``, ``2x^2+1``."""
        if self.k == 1:
            return str(int(a))
        terms = []
        for i, c in reversed(list(enumerate(self.decode(a)))):
            if c == 0:
                continue
            coef = "" if c == 1 and i > 0 else str(c)
            terms.append(coef + ("" if i == 0 else "x" if i == 1 else f"x^{i}"))
        return "+".join(terms) or "0"


class TupleCodec(Codec):
    """Tuples of component ids, used by products and matrix rings.

    Tuples are ordered by mixed-radix code (first component most significant);
    ids are then assigned zero first, unity second, the rest in code order.
    """

    def __init__(self, components: Sequence["FiniteRing"], matrix_dim: int | None = None):
        self.components = tuple(components)
        self.matrix_dim = matrix_dim
        self.radix = np.array([c.size for c in components], dtype=np.int64)
        self.weights = np.ones(len(components), dtype=np.int64)
        for i in range(len(components) - 2, -1, -1):
            self.weights[i] = self.weights[i + 1] * self.radix[i + 1]
        total = int(np.prod(self.radix))
        if matrix_dim is None:
            one_digits = [c.one for c in components]
        else:
            one_digits = [
                components[0].one if i == j else 0
                for i in range(matrix_dim)
                for j in range(matrix_dim)
            ]
        one_code = int(np.dot(one_digits, self.weights))
        order = [0] + ([one_code] if one_code != 0 else [])
        order += [c for c in range(total) if c not in (0, one_code)]
        self.code_of_id = np.array(order, dtype=np.int64)
        self.id_of_code = np.empty(total, dtype=np.int64)
        self.id_of_code[self.code_of_id] = np.arange(total)

    @property
    def size(self) -> int:
        return len(self.code_of_id)

    def digits(self) -> np.ndarray:
        """Component ids of every element, shape (size, len(components))."""
        codes = self.code_of_id[:, None]
        return (codes // self.weights[None, :]) % self.radix[None, :]

    def decode(self, a: int):
        code = int(self.code_of_id[a])
        flat = tuple(int(d) for d in (code // self.weights) % self.radix)
        if self.matrix_dim is None:
            return flat
        n = self.matrix_dim
        return tuple(flat[i * n:(i + 1) * n] for i in range(n))

    def encode(self, literal) -> int:
        flat = [x for row in literal for x in row] if self.matrix_dim is not None else list(literal)
        if len(flat) != len(self.components):
            raise ValueError(f"literal has wrong shape: {literal!r}")
        for x, r in zip(flat, self.radix):
            if not 0 <= int(x) < r:
                raise ValueError(f"component id out of range in {literal!r}")
        return int(self.id_of_code[int(np.dot(flat, self.weights))])

    def format(self, a: int) -> str:
        lit = self.decode(a)
        if self.matrix_dim is None:
            parts = [c.format(x) for c, x in zip(self.components, lit)]
            return "(" + ",".join(parts) + ")"
        base = self.components[0]
        return "[" + ";".join(",".join(base.format(x) for x in row) for row in lit) + "]"


class LabelCodec(Codec):
    """Table-ring elements with stored display labels; literals remain ids."""

    def __init__(self, labels: Sequence[str]):
        self.labels = tuple(labels)

    def format(self, a: int) -> str:
        return self.labels[a]


class SubsetCodec(Codec):
    """Elements of a ring carved out of a parent ring, labelled by the parent's literals."""

    def __init__(self, parent: "FiniteRing", parent_ids: Sequence[int], fmt: Callable[[int], str] | None = None):
        self.parent = parent
        self.parent_ids = np.asarray(parent_ids, dtype=np.int64)
        self._index = {int(p): i for i, p in enumerate(self.parent_ids)}
        self._fmt = fmt

    def decode(self, a: int):
        return self.parent.decode(int(self.parent_ids[a]))

    def encode(self, literal) -> int:
        return self._index[self.parent.encode(literal)]

    def format(self, a: int) -> str:
        if self._fmt is not None:
            return self._fmt(int(self.parent_ids[a]))
        return self.parent.format(int(self.parent_ids[a]))


# --------------------------------------------------------------------------
# The ring type
# --------------------------------------------------------------------------


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class FiniteRing:
    """A finite unital ring given by addition and multiplication tables.

    Instances are immutable; derived data (units, ideals, graphs) is memoised
    per instance through :func:`memoize`.
    """

    def __init__(self, add_table, mul_table, label: str, codec: Codec | None = None):
        add = np.array(add_table, dtype=np.int32)
        mul = np.array(mul_table, dtype=np.int32)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
            raise RingAxiomError("tables must be square and of equal size")
        n = add.shape[0]
        if n == 0:
            raise RingAxiomError("ring must be nonempty")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise RingAxiomError("table entry out of range")
        neg = np.argmax(add == 0, axis=1).astype(np.int32)
        bad = np.flatnonzero(add[np.arange(n), neg] != 0)
        if bad.size:
            raise RingAxiomError("additive inverse missing", (int(bad[0]),))
        self.size = n
        self.label = label
        self.codec = codec or Codec()
        self.add_table = _readonly(add)
        self.mul_table = _readonly(mul)
        self.neg_table = _readonly(neg)
        self._memo: dict = {}

    zero = 0

    @property
    def one(self) -> int:
        return 1 if self.size > 1 else 0

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def decode(self, a: int):
        return self.codec.decode(a)

    def encode(self, literal) -> int:
        return self.codec.encode(literal)

    def format(self, a: int) -> str:
        return self.codec.format(a)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, size={self.size})"


def memoize(fn):
    """Cache a pure function of (ring, *hashable args) on the ring instance."""

    @functools.wraps(fn)
    def wrapper(R: FiniteRing, *args):
        key = (fn.__module__, fn.__qualname__, args)
        try:
            return R._memo[key]
        except KeyError:
            value = R._memo[key] = fn(R, *args)
            return value

    return wrapper


# --------------------------------------------------------------------------
# Constructors
# --------------------------------------------------------------------------


def make_zmod(n: int) -> FiniteRing:
    if not isinstance(n, int) or n < 2:
        raise InvalidSpecError(f"Z/n needs n >= 2, got {n!r}")
    check_size(n, f"Z{n}")
    r = np.arange(n)
    return FiniteRing(np.add.outer(r, r) % n, np.multiply.outer(r, r) % n, f"Z{n}", ResidueCodec())


def gf_label(q: int) -> str:
    return f"GF({q})"


def make_gf(p: int, k: int = 1) -> FiniteRing:
    """GF(p^k) modulo the lexicographically smallest monic irreducible of degree k."""
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidSpecError(f"GF(p, k) needs a prime p, got {p!r}")
    if not isinstance(k, int) or k < 1:
        raise InvalidSpecError(f"GF(p, k) needs k >= 1, got {k!r}")
    check_size(p**k, gf_label(p**k))
    add, mul, modulus = gf_tables(p, k)
    R = FiniteRing(add, mul, gf_label(p**k), FieldCodec(p, k))
    R.modulus = modulus
    return R


def make_gf_order(q: int) -> FiniteRing:
    pk = prime_power(q)
    if pk is None:
        raise InvalidSpecError(f"GF(q) needs a prime power, got {q!r}")
    return make_gf(*pk)


def make_matrix_ring(base: FiniteRing, n: int) -> FiniteRing:
    """Full ring of n x n matrices over base; element literals are row-major base-id arrays."""
    if not isinstance(n, int) or n < 1:
        raise InvalidSpecError(f"matrix size must be >= 1, got {n!r}")
    label = f"M{n}({base.label})"
    total = base.size ** (n * n)
    check_size(total, label)
    codec = TupleCodec([base] * (n * n), matrix_dim=n)
    d = codec.digits().reshape(total, n, n)
    badd, bmul = base.add_table, base.mul_table
    weights = codec.weights.reshape(n, n)
    add_code = np.zeros((total, total), dtype=np.int64)
    mul_code = np.zeros((total, total), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            add_code += badd[d[:, None, i, j], d[None, :, i, j]] * weights[i, j]
            acc = bmul[d[:, None, i, 0], d[None, :, 0, j]]
            for k in range(1, n):
                acc = badd[acc, bmul[d[:, None, i, k], d[None, :, k, j]]]
            mul_code += acc * weights[i, j]
    return FiniteRing(codec.id_of_code[add_code], codec.id_of_code[mul_code], label, codec)


def make_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    factors = list(factors)
    if not factors:
        raise InvalidSpecError("a product needs at least one factor")
    label = " x ".join(f.label if " x " not in f.label else f"({f.label})" for f in factors)
    total = int(np.prod([f.size for f in factors]))
    check_size(total, label)
    codec = TupleCodec(factors)
    d = codec.digits()
    add_code = np.zeros((total, total), dtype=np.int64)
    mul_code = np.zeros((total, total), dtype=np.int64)
    for i, f in enumerate(factors):
        add_code += f.add_table[d[:, None, i], d[None, :, i]] * codec.weights[i]
        mul_code += f.mul_table[d[:, None, i], d[None, :, i]] * codec.weights[i]
    return FiniteRing(codec.id_of_code[add_code], codec.id_of_code[mul_code], label, codec)


def make_table_ring(add_table, mul_table, label: str = "table", codec: Codec | None = None) -> FiniteRing:
    """Ring backed by explicit tables; every ring axiom is checked before returning."""
    add = np.asarray(add_table)
    mul = np.asarray(mul_table)
    if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
        raise RingAxiomError("tables must be square and of equal size")
    check_size(add.shape[0], label)
    R = FiniteRing(add, mul, label, codec)
    check_axioms(R)
    return R


def load_table_ring(path: str | os.PathLike) -> FiniteRing:
    """Read ``{"size": n, "add": [[...]], "mul": [[...]]}`` and validate it.

    Optional keys: "label" (ring name) and "labels" (per-element display strings).
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidSpecError(f"cannot read table ring {path}: {exc}") from exc
    try:
        size = int(data["size"])
        add, mul = data["add"], data["mul"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpecError(f"{path}: table ring needs size, add and mul") from exc
    if len(add) != size or len(mul) != size:
        raise InvalidSpecError(f"{path}: table dimensions disagree with size {size}")
    labels = data.get("labels")
    codec = LabelCodec(labels) if labels is not None and len(labels) == size else None
    return make_table_ring(add, mul, data.get("label") or f"table:{path.name}", codec)


def table_ring_json(R: FiniteRing) -> dict:
    return {
        "label": R.label,
        "size": R.size,
        "add": R.add_table.tolist(),
        "mul": R.mul_table.tolist(),
        "labels": [R.format(a) for a in R.elements()],
    }


# --------------------------------------------------------------------------
# Axioms
# --------------------------------------------------------------------------


def _axiom_failures(add: np.ndarray, mul: np.ndarray, a, b, c):
    """Yield (name, mask) for each three-variable axiom evaluated on broadcast index arrays."""
    yield "addition not associative", add[add[a, b], c] != add[a, add[b, c]]
    yield "multiplication not associative", mul[mul[a, b], c] != mul[a, mul[b, c]]
    yield "left distributivity fails", mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]
    yield "right distributivity fails", mul[add[a, b], c] != add[mul[a, c], mul[b, c]]


def check_axioms(R: FiniteRing, exhaustive_limit: int = EXHAUSTIVE_AXIOM_LIMIT,
                 samples: int = SAMPLED_TRIPLES, seed: int = 0) -> None:
    """Raise RingAxiomError naming the first failing axiom and a witness.

    Exhaustive over all triples up to ``exhaustive_limit`` elements, sampled above.
    """
    n = R.size
    add, mul = R.add_table, R.mul_table
    e = np.arange(n)
    one = R.one

    def first(mask: np.ndarray) -> tuple[int, ...]:
        return tuple(int(x) for x in np.argwhere(mask)[0])

    if (add[0] != e).any() or (add[:, 0] != e).any():
        raise RingAxiomError("zero not neutral", first(np.stack([add[0] != e, add[:, 0] != e])))
    if (add != add.T).any():
        raise RingAxiomError("addition not commutative", first(add != add.T))
    if (mul[one] != e).any() or (mul[:, one] != e).any():
        bad = np.flatnonzero((mul[one] != e) | (mul[:, one] != e))
        raise RingAxiomError("unity not neutral", (int(bad[0]),))

    if n <= exhaustive_limit:
        for a in range(n):
            for name, mask in _axiom_failures(add, mul, a, e[:, None], e[None, :]):
                if mask.any():
                    raise RingAxiomError(name, (a,) + first(mask))
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        for name, mask in _axiom_failures(add, mul, a, b, c):
            if mask.any():
                i = int(np.flatnonzero(mask)[0])
                raise RingAxiomError(name, (int(a[i]), int(b[i]), int(c[i])))


# --------------------------------------------------------------------------
# Element-level queries
# --------------------------------------------------------------------------


@memoize
def _left_invertible_mask(R: FiniteRing) -> np.ndarray:
    return _readonly((R.mul_table == R.one).any(axis=0))


@memoize
def _unit_mask(R: FiniteRing) -> np.ndarray:
    eq = R.mul_table == R.one
    return _readonly(eq.any(axis=0) & eq.any(axis=1))


def unit_mask(R: FiniteRing) -> np.ndarray:
    return _unit_mask(R)


def left_invertible_mask(R: FiniteRing) -> np.ndarray:
    return _left_invertible_mask(R)


@memoize
def units(R: FiniteRing) -> frozenset[int]:
    """Elements with a two-sided inverse."""
    return frozenset(int(a) for a in np.flatnonzero(_unit_mask(R)))


def is_left_invertible(R: FiniteRing, a: int) -> bool:
    return bool(_left_invertible_mask(R)[a])


@memoize
def idempotents(R: FiniteRing) -> frozenset[int]:
    return frozenset(int(a) for a in np.flatnonzero(np.diag(R.mul_table) == np.arange(R.size)))


@memoize
def central_idempotents(R: FiniteRing) -> frozenset[int]:
    mul = R.mul_table
    return frozenset(e for e in idempotents(R) if (mul[e, :] == mul[:, e]).all())


@memoize
def is_commutative(R: FiniteRing) -> bool:
    return bool((R.mul_table == R.mul_table.T).all())


def noncommuting_pair(R: FiniteRing) -> tuple[int, int] | None:
    hits = np.argwhere(R.mul_table != R.mul_table.T)
    return (int(hits[0][0]), int(hits[0][1])) if hits.size else None


@memoize
def additive_orders(R: FiniteRing) -> tuple[int, ...]:
    add = R.add_table
    orders = []
    for a in range(R.size):
        k, x = 1, a
        while x != 0:
            x = int(add[x, a])
            k += 1
        orders.append(k)
    return tuple(orders)


def characteristic(R: FiniteRing) -> int:
    return additive_orders(R)[R.one]


@memoize
def multiplicative_orders(R: FiniteRing) -> dict[int, int]:
    """Order of each unit in the unit group."""
    mul = R.mul_table
    out = {}
    for u in sorted(units(R)):
        k, x = 1, u
        while x != R.one:
            x = int(mul[x, u])
            k += 1
        out[u] = k
    return out


# --------------------------------------------------------------------------
# Subrings
# --------------------------------------------------------------------------


def subring_closure(R: FiniteRing, generators: Iterable[int]) -> list[int]:
    """Sorted element ids of the smallest unital subring containing the generators."""
    members = np.zeros(R.size, dtype=bool)
    members[[0, R.one, *generators]] = True
    while True:
        idx = np.flatnonzero(members)
        grown = members.copy()
        grown[R.add_table[np.ix_(idx, idx)].ravel()] = True
        grown[R.mul_table[np.ix_(idx, idx)].ravel()] = True
        grown[R.neg_table[idx]] = True
        if grown.sum() == members.sum():
            return [int(x) for x in idx]
        members = grown


def restrict(R: FiniteRing, elements: Sequence[int], unity: int, label: str,
             fmt: Callable[[int], str] | None = None) -> FiniteRing:
    """Ring on a closed subset of R whose unity is ``unity``, reindexed so 0 and unity come first.

    The subset must be closed under R's operations; the result is axiom-checked.
    """
    rest = sorted(int(x) for x in elements if x not in (0, unity))
    order = [0] + ([unity] if unity != 0 else []) + rest
    if len(order) != len(set(elements) | {0, unity}):
        raise ValueError("subset must contain zero and the chosen unity")
    pos = np.full(R.size, -1, dtype=np.int64)
    pos[order] = np.arange(len(order))
    sub = np.array(order)
    add = pos[R.add_table[np.ix_(sub, sub)]]
    mul = pos[R.mul_table[np.ix_(sub, sub)]]
    if (add < 0).any() or (mul < 0).any():
        raise ValueError("subset is not closed under the ring operations")
    return make_table_ring(add, mul, label, SubsetCodec(R, sub, fmt))


def upper_triangular(q: int) -> FiniteRing:
    """T2(GF(q)) as the subring of M2(GF(q)) generated by scalar multiples of E11, E12, E22."""
    M = make_matrix_ring(make_gf_order(q), 2)
    gens = [M.encode(((a, 0), (0, 0))) for a in range(q)]
    gens += [M.encode(((0, a), (0, 0))) for a in range(q)]
    gens += [M.encode(((0, 0), (0, a))) for a in range(q)]
    return restrict(M, subring_closure(M, gens), M.one, f"T2({gf_label(q)})")
