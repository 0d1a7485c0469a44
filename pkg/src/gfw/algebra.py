"""Free and truncated graded-commutative algebras over the rationals.

A monomial is a tuple of ``(generator id, exponent)`` pairs with ids strictly
ascending; odd generators appear with exponent 1.  Products are brought to
this canonical order with the Koszul sign, i.e. one factor of ``-1`` per
transposition of two odd generators.

Two kinds of relations are supported, both applied inside the normal form:

* truncations ``(S, B)``: a monomial whose ``S``-part has degree ``> B`` is zero;
* square rewrites ``g**2 -> m`` for an even generator ``g`` and a monomial ``m``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Generator", "Truncation", "GradedAlgebra", "Element", "Derivation", "Morphism",
    "define_algebra", "normal_form", "multiply", "basis_of_degree",
    "extend_derivation", "apply_morphism", "adjoin", "transfer",
]

Monomial = tuple[tuple[int, int], ...]
ONE: Monomial = ()


@dataclass(frozen=True)
class Generator:
    id: int
    name: str
    degree: int

    @property
    def parity(self) -> int:
        return self.degree % 2

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


@dataclass(frozen=True)
class Truncation:
    """Kill every monomial whose part in ``ids`` has degree above ``bound``."""
    ids: frozenset[int]
    bound: int


_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class GradedAlgebra:
    """A presentation: generators with degrees plus normal-form relations.

    Instances are immutable; caches of products and bases are filled lazily.
    """

    def __init__(self, generators: Sequence[tuple[str, int]],
                 truncations: Iterable[tuple[Iterable[str], int]] = (),
                 square_rewrites: Mapping[str, Mapping[str, int]] | None = None):
        gens = []
        seen: set[str] = set()
        for i, (name, deg) in enumerate(generators):
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            if int(deg) != deg or deg < 1:
                raise ValueError(f"generator {name!r} has nonpositive degree {deg}")
            seen.add(name)
            gens.append(Generator(i, name, int(deg)))
        self.generators: tuple[Generator, ...] = tuple(gens)
        self._by_name = {g.name: g for g in gens}

        truncs = []
        for names, bound in truncations:
            ids = frozenset(self._id(n) for n in names)
            if not ids:
                raise ValueError("truncation needs at least one generator")
            top = max(self.generators[i].degree for i in ids)
            if bound < top:
                raise ValueError(f"truncation bound {bound} below generator degree {top}")
            truncs.append(Truncation(ids, int(bound)))
        self.truncations: tuple[Truncation, ...] = tuple(truncs)

        rewrites: dict[int, Monomial] = {}
        for name, target in (square_rewrites or {}).items():
            g = self._by_name.get(name)
            if g is None:
                raise ValueError(f"unknown generator {name!r} in rewrite")
            if g.is_odd:
                raise ValueError(f"square rewrite on odd generator {name!r}")
            mono = tuple(sorted((self._id(n), int(e)) for n, e in target.items() if e))
            if any(i == g.id for i, _ in mono):
                raise ValueError(f"rewrite of {name}^2 must not involve {name}")
            if self.monomial_degree(mono) != 2 * g.degree:
                raise ValueError(f"rewrite of {name}^2 is not of degree {2 * g.degree}")
            rewrites[g.id] = mono
        self.square_rewrites: dict[int, Monomial] = rewrites

        self._mul_cache: dict[tuple[Monomial, Monomial], tuple[int, Monomial] | None] = {}
        self._basis_cache: dict[int, tuple[Monomial, ...]] = {}

    # -- identity ---------------------------------------------------------
    def _key(self):
        return (tuple((g.name, g.degree) for g in self.generators),
                tuple(sorted((tuple(sorted(t.ids)), t.bound) for t in self.truncations)),
                tuple(sorted(self.square_rewrites.items())))

    def __eq__(self, other):
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"GradedAlgebra({gens})"

    # -- generators -------------------------------------------------------
    def _id(self, name: str) -> int:
        try:
            return self._by_name[name].id
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def generator(self, name: str) -> Generator:
        return self.generators[self._id(name)]

    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def gen(self, name: str) -> "Element":
        return Element(self, {((self._id(name), 1),): Fraction(1)})

    def gens(self, names: str) -> tuple["Element", ...]:
        return tuple(self.gen(n) for n in names.split())

    def one(self) -> "Element":
        return Element(self, {ONE: Fraction(1)})

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return Element(self, {ONE: Fraction(c)})

    def monomial(self, m: Monomial, coeff=1) -> "Element":
        return Element(self, {m: Fraction(coeff)})

    # -- normal form ------------------------------------------------------
    def monomial_degree(self, m: Monomial) -> int:
        return sum(self.generators[i].degree * e for i, e in m)

    def _survives(self, m: Monomial) -> bool:
        for t in self.truncations:
            if sum(self.generators[i].degree * e for i, e in m if i in t.ids) > t.bound:
                return False
        return True

    def _rewrite(self, exps: dict[int, int]) -> dict[int, int]:
        changed = True
        while changed:
            changed = False
            for g, target in self.square_rewrites.items():
                e = exps.get(g, 0)
                if e >= 2:
                    q, r = divmod(e, 2)
                    if r:
                        exps[g] = r
                    else:
                        del exps[g]
                    for i, k in target:
                        exps[i] = exps.get(i, 0) + q * k
                    changed = True
        return exps

    def normal_form(self, word: Sequence[int | str]) -> tuple[int, Monomial] | None:
        """Canonical ``(sign, monomial)`` for a product of generators in word order.

        Returns ``None`` when the product vanishes (repeated odd generator or a
        truncation fires).
        """
        ids = [self._id(w) if isinstance(w, str) else w for w in word]
        odd = [i for i in ids if self.generators[i].is_odd]
        if len(set(odd)) != len(odd):
            return None
        inversions = sum(1 for a in range(len(odd)) for b in range(a + 1, len(odd))
                         if odd[a] > odd[b])
        exps: dict[int, int] = {}
        for i in ids:
            exps[i] = exps.get(i, 0) + 1
        return self._finish(-1 if inversions % 2 else 1, exps)

    def _finish(self, sign: int, exps: dict[int, int]) -> tuple[int, Monomial] | None:
        if self.square_rewrites:
            exps = self._rewrite(exps)
            if any(e > 1 and self.generators[i].is_odd for i, e in exps.items()):
                return None
        m = tuple(sorted(exps.items()))
        if not self._survives(m):
            return None
        return sign, m

    def mul_monomials(self, a: Monomial, b: Monomial) -> tuple[int, Monomial] | None:
        key = (a, b)
        try:
            return self._mul_cache[key]
        except KeyError:
            pass
        res = self._mul_monomials(a, b)
        self._mul_cache[key] = res
        return res

    def _mul_monomials(self, a: Monomial, b: Monomial) -> tuple[int, Monomial] | None:
        if not a:
            return 1, b
        if not b:
            return 1, a
        gens = self.generators
        a_odd = [i for i, _ in a if gens[i].is_odd]
        exps = dict(a)
        swaps = 0
        for i, e in b:
            if gens[i].is_odd:
                if i in exps:
                    return None
                # b's odd generator moves left past a's odd generators with larger id
                swaps += sum(1 for j in a_odd if j > i)
            exps[i] = exps.get(i, 0) + e
        return self._finish(-1 if swaps % 2 else 1, exps)

    # -- bases ------------------------------------------------------------
    def basis_of_degree(self, k: int) -> tuple[Monomial, ...]:
        """Canonical monomials of degree ``k``, lexicographically descending in exponents."""
        if k < 0:
            raise ValueError("degree must be non-negative")
        try:
            return self._basis_cache[k]
        except KeyError:
            pass
        out: list[Monomial] = []
        gens = self.generators
        n = len(gens)

        def rec(pos: int, remaining: int, acc: list[tuple[int, int]]):
            if remaining == 0:
                m = tuple(acc)
                if self._survives(m):
                    out.append(m)
                return
            if pos == n:
                return
            g = gens[pos]
            if g.is_odd:
                top = 1
            elif g.id in self.square_rewrites:
                top = 1
            else:
                top = remaining // g.degree
            for e in range(min(top, remaining // g.degree), -1, -1):
                if e:
                    acc.append((g.id, e))
                    if self._survives(tuple(acc)):
                        rec(pos + 1, remaining - e * g.degree, acc)
                    acc.pop()
                else:
                    rec(pos + 1, remaining, acc)

        rec(0, k, [])
        res = tuple(out)
        self._basis_cache[k] = res
        return res

    # -- text -------------------------------------------------------------
    def format_monomial(self, m: Monomial) -> str:
        if not m:
            return "1"
        parts = []
        for i, e in m:
            name = self.generators[i].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def parse(self, text: str) -> "Element":
        """Parse ``"c2*h1*h3 - c1*h2*h3 + 3/2*p1^2"``-style text.

        Factors are multiplied in the order written, so ``"h3*h2"`` parses to
        ``-h2*h3``.
        """
        return _parse(self, text)

    # -- serialization ----------------------------------------------------
    def to_dict(self) -> dict:
        gens = self.generators
        return {
            "generators": [{"name": g.name, "degree": g.degree} for g in gens],
            "truncations": [{"generators": [gens[i].name for i in sorted(t.ids)],
                             "bound": t.bound} for t in self.truncations],
            "square_rewrites": {gens[g].name: {gens[i].name: e for i, e in m}
                                for g, m in sorted(self.square_rewrites.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "GradedAlgebra":
        return cls([(g["name"], g["degree"]) for g in data["generators"]],
                   [(t["generators"], t["bound"]) for t in data.get("truncations", [])],
                   data.get("square_rewrites") or None)

    @classmethod
    def from_json(cls, text: str) -> "GradedAlgebra":
        return cls.from_dict(json.loads(text))


class Element:
    """A rational linear combination of canonical monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GradedAlgebra, terms: Mapping[Monomial, object] | None = None):
        self.algebra = algebra
        self.terms: dict[Monomial, Fraction] = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    # arithmetic
    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.algebra != self.algebra:
                raise ValueError("elements live in different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Element(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Element(self.algebra, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self.algebra, self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # grading
    def degrees(self) -> set[int]:
        return {self.algebra.monomial_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Degree of a nonzero homogeneous element; ``None`` for zero or mixed."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def coefficient(self, m: Monomial | str) -> Fraction:
        if isinstance(m, str):
            e = self.algebra.parse(m)
            ((m, c),) = e.terms.items()
            return self.terms.get(m, Fraction(0)) / c
        return self.terms.get(m, Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        alg = self.algebra

        def key(item):
            m = item[0]
            dense = [0] * len(alg.generators)
            for i, e in m:
                dense[i] = e
            return (alg.monomial_degree(m), [-x for x in dense])
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = self.algebra.format_monomial(m)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Element({self})"

    def to_dict(self) -> dict:
        alg = self.algebra
        return {"terms": [{"monomial": {alg.generators[i].name: e for i, e in m},
                           "coeff": f"{c.numerator}/{c.denominator}"}
                          for m, c in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, algebra: GradedAlgebra, data: Mapping) -> "Element":
        out = algebra.zero()
        for t in data["terms"]:
            word = [n for n, e in t["monomial"].items() for _ in range(e)]
            nf = algebra.normal_form(word)
            if nf is not None:
                out = out + algebra.monomial(nf[1], nf[0] * Fraction(t["coeff"]))
        return out

    @classmethod
    def from_json(cls, algebra: GradedAlgebra, text: str) -> "Element":
        return cls.from_dict(algebra, json.loads(text))


# -- module-level operations ----------------------------------------------

def define_algebra(gens: Mapping[str, int] | Sequence[tuple[str, int]] = (),
                   truncation: tuple[Iterable[str], int] | Sequence[tuple[Iterable[str], int]] | None = None,
                   square_rewrites: Mapping[str, Mapping[str, int]] | None = None) -> GradedAlgebra:
    """Validated presentation from ``{name: degree}`` and an optional truncation."""
    if isinstance(gens, Mapping):
        gens = list(gens.items())
    truncs: list = []
    if truncation is not None:
        if len(truncation) == 2 and isinstance(truncation[1], int):
            truncs = [truncation]
        else:
            truncs = list(truncation)
    return GradedAlgebra(list(gens), truncs, square_rewrites)


def normal_form(alg: GradedAlgebra, word: Sequence[int | str]) -> tuple[int, Monomial] | None:
    return alg.normal_form(word)


def multiply(alg: GradedAlgebra, a: Element, b: Element) -> Element:
    terms: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            r = alg.mul_monomials(ma, mb)
            if r is None:
                continue
            sign, m = r
            terms[m] = terms.get(m, 0) + sign * ca * cb
    return Element(alg, terms)


def basis_of_degree(alg: GradedAlgebra, k: int) -> tuple[Monomial, ...]:
    return alg.basis_of_degree(k)


def _expand(alg: GradedAlgebra, m: Monomial) -> Iterator[int]:
    for i, e in m:
        for _ in range(e):
            yield i


class Derivation:
    """A derivation of cohomological degree ``shift`` with Koszul-signed Leibniz rule.

    ``delta(a*b) = delta(a)*b + (-1)**(shift*|a|) * a*delta(b)``.
    """

    def __init__(self, algebra: GradedAlgebra, shift: int, values: Mapping[int, Element]):
        self.algebra = algebra
        self.shift = shift
        self.values: dict[int, Element] = {}
        for gid, v in values.items():
            if v.algebra != algebra:
                raise ValueError("derivation value lives in a different algebra")
            g = algebra.generators[gid]
            if v and v.degrees() != {g.degree + shift}:
                raise ValueError(f"value on {g.name} has degrees {sorted(v.degrees())}, "
                                 f"expected {g.degree + shift}")
            if v:
                self.values[gid] = v
        self._cache: dict[Monomial, Element] = {}

    def on(self, name: str) -> Element:
        return self.values.get(self.algebra._id(name), self.algebra.zero())

    def apply_monomial(self, m: Monomial) -> Element:
        try:
            return self._cache[m]
        except KeyError:
            pass
        alg = self.algebra
        gens = alg.generators
        total = alg.zero()
        prefix_deg = 0
        for pos, (i, e) in enumerate(m):
            v = self.values.get(i)
            if v is not None:
                left = m[:pos] + (((i, e - 1),) if e > 1 else ())
                right = m[pos + 1:]
                sign = -1 if (self.shift * prefix_deg) % 2 else 1
                term = alg.monomial(left, sign * e) * v * alg.monomial(right)
                total = total + term
            prefix_deg += gens[i].degree * e
        self._cache[m] = total
        return total

    def __call__(self, a: Element) -> Element:
        if a.algebra != self.algebra:
            raise ValueError("element lives in a different algebra")
        terms: dict[Monomial, Fraction] = {}
        for m, c in a.terms.items():
            for m2, c2 in self.apply_monomial(m).terms.items():
                terms[m2] = terms.get(m2, 0) + c * c2
        return Element(self.algebra, terms)


def extend_derivation(alg: GradedAlgebra, shift: int,
                      values: Mapping[str | int, Element | str]) -> Derivation:
    """Derivation determined by its values on generators (missing ones map to 0)."""
    vals = {}
    for k, v in values.items():
        gid = alg._id(k) if isinstance(k, str) else k
        vals[gid] = alg.parse(v) if isinstance(v, str) else v
    return Derivation(alg, shift, vals)


class Morphism:
    """A degree-preserving algebra map given on generators."""

    def __init__(self, source: GradedAlgebra, target: GradedAlgebra,
                 values: Mapping[int, Element]):
        self.source = source
        self.target = target
        self.values: dict[int, Element] = {}
        for g in source.generators:
            if g.id not in values:
                raise ValueError(f"no image given for generator {g.name}")
            v = values[g.id]
            if v.algebra != target:
                raise ValueError(f"image of {g.name} lives in a different algebra")
            if v and v.degrees() != {g.degree}:
                raise ValueError(f"image of {g.name} has degrees {sorted(v.degrees())}, "
                                 f"expected {g.degree}")
            self.values[g.id] = v
        self._cache: dict[Monomial, Element] = {}

    @classmethod
    def from_names(cls, source: GradedAlgebra, target: GradedAlgebra,
                   values: Mapping[str, Element | str] | None = None,
                   same_name: bool = False) -> "Morphism":
        """Build from ``{name: image}``; with ``same_name`` unlisted generators go to
        the generator of the same name in the target."""
        values = dict(values or {})
        vals = {}
        for g in source.generators:
            if g.name in values:
                v = values[g.name]
                vals[g.id] = target.parse(v) if isinstance(v, str) else v
            elif same_name:
                vals[g.id] = target.gen(g.name)
        unknown = set(values) - set(source.names())
        if unknown:
            raise KeyError(f"unknown source generators {sorted(unknown)}")
        return cls(source, target, vals)

    def on(self, name: str) -> Element:
        return self.values[self.source._id(name)]

    def apply_monomial(self, m: Monomial) -> Element:
        try:
            return self._cache[m]
        except KeyError:
            pass
        out = self.target.one()
        for i in _expand(self.source, m):
            out = out * self.values[i]
            if not out:
                break
        self._cache[m] = out
        return out

    def __call__(self, a: Element) -> Element:
        return apply_morphism(self, a)


def apply_morphism(f: Morphism, a: Element) -> Element:
    if a.algebra != f.source:
        raise ValueError("element does not live in the morphism's source")
    terms: dict[Monomial, Fraction] = {}
    for m, c in a.terms.items():
        for m2, c2 in f.apply_monomial(m).terms.items():
            terms[m2] = terms.get(m2, 0) + c * c2
    return Element(f.target, terms)


def adjoin(a: GradedAlgebra, b: GradedAlgebra,
           rename: Mapping[str, str] | None = None) -> GradedAlgebra:
    """Tensor product as a disjoint union of generators (``a``'s first).

    ``rename`` maps names of ``b`` to fresh names.
    """
    rename = dict(rename or {})
    bnames = {g.name: rename.get(g.name, g.name) for g in b.generators}
    clash = set(a.names()) & set(bnames.values())
    if clash:
        raise ValueError(f"generator names clash: {sorted(clash)}")
    gens = [(g.name, g.degree) for g in a.generators] + \
           [(bnames[g.name], g.degree) for g in b.generators]
    truncs = [([a.generators[i].name for i in sorted(t.ids)], t.bound) for t in a.truncations]
    truncs += [([bnames[b.generators[i].name] for i in sorted(t.ids)], t.bound)
               for t in b.truncations]
    rewrites = {a.generators[g].name: {a.generators[i].name: e for i, e in m}
                for g, m in a.square_rewrites.items()}
    rewrites.update({bnames[b.generators[g].name]: {bnames[b.generators[i].name]: e for i, e in m}
                     for g, m in b.square_rewrites.items()})
    return GradedAlgebra(gens, truncs, rewrites or None)


def transfer(a: Element, target: GradedAlgebra) -> Element:
    """Carry ``a`` into ``target`` by matching generator names."""
    src = a.algebra
    out = target.zero()
    for m, c in a.terms.items():
        word = [src.generators[i].name for i in _expand(src, m)]
        nf = target.normal_form(word)
        if nf is not None:
            out = out + target.monomial(nf[1], nf[0] * c)
    return out


# -- parser -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z][A-Za-z0-9_]*)|(\^)|(\*)|([+-])|(\()|(\)))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        num, name, caret, star, pm, lp, rp = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        elif caret:
            out.append(("^", caret))
        elif star:
            out.append(("*", star))
        elif pm:
            out.append(("pm", pm))
        elif lp:
            out.append(("(", lp))
        elif rp:
            out.append((")", rp))
    return out


def _parse(alg: GradedAlgebra, text: str) -> Element:
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind):
        nonlocal pos
        t = peek()
        if t[0] != kind:
            raise ValueError(f"expected {kind} in {text!r}, got {t[1]!r}")
        pos += 1
        return t[1]

    def expr() -> Element:
        total = alg.zero()
        sign = 1
        if peek()[0] == "pm":
            sign = -1 if take("pm") == "-" else 1
        total = total + sign * term()
        while peek()[0] == "pm":
            sign = -1 if take("pm") == "-" else 1
            total = total + sign * term()
        return total

    def term() -> Element:
        out = factor()
        while peek()[0] == "*":
            take("*")
            out = out * factor()
        return out

    def factor() -> Element:
        kind = peek()[0]
        if kind == "num":
            base = alg.scalar(Fraction(take("num")))
        elif kind == "name":
            name = take("name")
            if name not in alg:
                raise ValueError(f"unknown generator {name!r} in {text!r}")
            base = alg.gen(name)
        elif kind == "(":
            take("(")
            base = expr()
            take(")")
        else:
            raise ValueError(f"unexpected token {peek()[1]!r} in {text!r}")
        if peek()[0] == "^":
            take("^")
            base = base ** int(take("num"))
        return base

    if not toks:
        raise ValueError("empty expression")
    result = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return result
