"""Noncommutative polynomials over Q and bounded overlap completion.

Words are tuples of generator names; the empty word is the constant 1.
Monomial order is deglex: longer words are larger, words of equal length
compare lexicographically by generator rank, where a generator later in the
generator list is larger.

``complete`` runs a degree-truncated Buchberger/Knuth-Bendix completion in the
free algebra: overlap ambiguities are resolved in order of increasing degree
and ambiguities above the cap are recorded rather than processed. Reduction
never raises the degree, so a Zero verdict is always sound; a nonzero normal
form only certifies non-membership when every ambiguity was resolved.
"""

from __future__ import annotations

import enum
import heapq
import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .exact_linalg import scalar

__all__ = [
    "NCPolynomial",
    "RewriteSystem",
    "Verdict",
    "Membership",
    "InconclusiveReduction",
    "complete",
    "normal_form",
    "is_zero_mod",
    "default_degree_cap",
    "parse_polynomial",
]

Word = tuple


class PolynomialSyntaxError(ValueError):
    pass


class InconclusiveReduction(RuntimeError):
    """Raised when a reduction would have to work above the degree cap of a capped system."""


class NCPolynomial:
    """Immutable element of the free algebra ``Q<generators>``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Word, object]] = None):
        clean: dict = {}
        if terms:
            for w, c in terms.items():
                c = scalar(c)
                if c:
                    clean[tuple(w)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "NCPolynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "NCPolynomial":
        return cls({(): c})

    @classmethod
    def gen(cls, name: str) -> "NCPolynomial":
        return cls._raw({(name,): Fraction(1)})

    @classmethod
    def monomial(cls, word: Sequence[str], coeff=1) -> "NCPolynomial":
        return cls({tuple(word): coeff})

    @classmethod
    def parse(cls, text: str) -> "NCPolynomial":
        return parse_polynomial(text)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, word: Sequence[str]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def generators(self) -> set:
        return {g for w in self._terms for g in w}

    def __len__(self) -> int:
        return len(self._terms)

    @staticmethod
    def _coerce(other) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            return other
        return NCPolynomial.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NCPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, NCPolynomial):
            c = scalar(other)
            if not c:
                return NCPolynomial()
            return NCPolynomial._raw({w: c * v for w, v in self._terms.items()})
        out: dict = defaultdict(Fraction)
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                out[w1 + w2] += c1 * c2
        return NCPolynomial._raw({w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = NCPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NCPolynomial):
            return self._terms == other._terms
        try:
            return self == NCPolynomial.constant(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, images: Mapping[str, "NCPolynomial"]) -> "NCPolynomial":
        """Algebra map sending each generator in ``images`` to its image; others are kept."""
        out = NCPolynomial()
        cache: dict = {}
        for w, c in self._terms.items():
            term = NCPolynomial.constant(c)
            for g in w:
                img = cache.get(g)
                if img is None:
                    img = images[g] if g in images else NCPolynomial.gen(g)
                    cache[g] = img
                term = term * img
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        """Substitute scalars for every generator."""
        total = Fraction(0)
        for w, c in self._terms.items():
            v = c
            for g in w:
                v *= scalar(values[g])
                if not v:
                    break
            total += v
        return total

    def sorted_terms(self, order: Optional[Sequence[str]] = None) -> list:
        """Terms in decreasing deglex order (by ``order`` if given, else by name)."""
        if order is not None:
            rank = {g: i for i, g in enumerate(order)}
            extra = sorted(self.generators() - rank.keys())
            for g in extra:
                rank[g] = len(rank)
            key = lambda w: (len(w), tuple(rank[g] for g in w))  # noqa: E731
        else:
            key = lambda w: (len(w), w)  # noqa: E731
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def format(self, order: Optional[Sequence[str]] = None) -> str:
        terms = self.sorted_terms(order)
        if not terms:
            return "0"
        parts = []
        for idx, (w, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            word = "*".join(w)
            if not w:
                body = str(a)
            elif a == 1:
                body = word
            else:
                body = f"{a}*{word}"
            if idx == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"NCPolynomial({self.format()!r})"


# parsing -----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][\w'.]*)|(.))")


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, ident, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("num", int(num), start))
        elif ident is not None:
            out.append(("id", ident, start))
        elif op in "+-*/^()":
            out.append(("op", op, start))
        else:
            raise PolynomialSyntaxError(f"unexpected character {op!r} at position {start}")
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse_polynomial(text: str) -> NCPolynomial:
    """Parse strings such as ``"3/2*u0_11*u0_12 - u0_21"`` (``^``, parentheses allowed)."""
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos]

    def take(kind=None, value=None):
        nonlocal pos
        t = toks[pos]
        if (kind and t[0] != kind) or (value is not None and t[1] != value):
            got = "end of input" if t[0] == "end" else repr(t[1])
            raise PolynomialSyntaxError(f"expected {value or kind} at position {t[2]}, got {got}")
        pos += 1
        return t

    def expr():
        p = term()
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            q = term()
            p = p + q if op == "+" else p - q
        return p

    def term():
        p = unary()
        while peek()[0] == "op" and peek()[1] in "*/":
            op = take()[1]
            q = unary()
            if op == "*":
                p = p * q
            else:
                if q.degree() > 0 or q.is_zero():
                    raise PolynomialSyntaxError(f"can only divide by a nonzero number (position {toks[pos - 1][2]})")
                p = p * (1 / q.coefficient(()))
        return p

    def unary():
        if peek()[0] == "op" and peek()[1] == "-":
            take()
            return -unary()
        if peek()[0] == "op" and peek()[1] == "+":
            take()
            return unary()
        return power()

    def power():
        p = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            p = p ** take("num")[1]
        return p

    def atom():
        t = peek()
        if t[0] == "num":
            take()
            return NCPolynomial.constant(t[1])
        if t[0] == "id":
            take()
            return NCPolynomial.gen(t[1])
        if t[0] == "op" and t[1] == "(":
            take()
            p = expr()
            take("op", ")")
            return p
        if t[0] == "end":
            raise PolynomialSyntaxError(f"unexpected end of input at position {t[2]}")
        raise PolynomialSyntaxError(f"unexpected {t[1]!r} at position {t[2]}")

    result = expr()
    if peek()[0] != "end":
        t = peek()
        raise PolynomialSyntaxError(f"unexpected {t[1]!r} at position {t[2]}")
    return result


# rewriting ---------------------------------------------------------------------


class Verdict(enum.Enum):
    ZERO = "Zero"
    NONZERO = "NonzeroWitness"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Membership:
    verdict: Verdict
    normal_form: NCPolynomial
    status: str

    @property
    def is_zero(self) -> bool:
        return self.verdict is Verdict.ZERO


def _key(w: tuple) -> tuple:
    return (len(w), w)


def _heap_key(w: tuple) -> tuple:
    return (-len(w), tuple(-x for x in w))


def _reduce(rules: dict, lengths: Sequence[int], poly: dict) -> dict:
    """Full reduction of an integer-word polynomial; largest words first, leftmost match."""
    if () in rules:
        return {}
    work = dict(poly)
    heap = [_heap_key(w) for w in work]
    heapq.heapify(heap)
    out = {}
    while heap:
        hk = heapq.heappop(heap)
        w = tuple(-x for x in hk[1])
        c = work.pop(w, None)
        if not c:
            continue
        n = len(w)
        hit = None
        for start in range(n):
            for length in lengths:
                end = start + length
                if end > n:
                    break
                sub = w[start:end]
                if sub in rules:
                    hit = (start, end, rules[sub])
                    break
            if hit:
                break
        if hit is None:
            out[w] = c
            continue
        start, end, repl = hit
        pre, post = w[:start], w[end:]
        for tw, tc in repl.items():
            nw = pre + tw + post
            v = work.get(nw)
            if v is None:
                work[nw] = c * tc
                heapq.heappush(heap, _heap_key(nw))
            else:
                v += c * tc
                if v:
                    work[nw] = v
                else:
                    del work[nw]
    return out


def _lead(poly: dict) -> tuple:
    return max(poly, key=_key)


class RewriteSystem:
    """Oriented rules ``lead -> replacement`` over a ranked generator list.

    ``status`` is ``"complete"`` when every overlap ambiguity of the final
    rules was resolved, ``"capped"`` when some ambiguity exceeded the cap.
    """

    def __init__(self, generators: Sequence[str], rules: Mapping[tuple, Mapping[tuple, Fraction]],
                 degree_cap: int, status: str = "complete", skipped: int = 0):
        self.generators = tuple(generators)
        self._rank = {g: i for i, g in enumerate(self.generators)}
        self._rules = {tuple(k): dict(v) for k, v in rules.items()}
        self._lengths = sorted({len(k) for k in self._rules})
        self.degree_cap = degree_cap
        self.status = status
        self.skipped_overlaps = skipped

    @property
    def is_complete(self) -> bool:
        return self.status == "complete"

    def __len__(self):
        return len(self._rules)

    def _encode(self, p: NCPolynomial) -> tuple[dict, list]:
        names = list(self.generators)
        rank = dict(self._rank)
        for g in sorted(p.generators() - rank.keys()):
            rank[g] = len(names)
            names.append(g)
        return {tuple(rank[g] for g in w): c for w, c in p.items()}, names

    def _decode(self, poly: dict, names: Sequence[str]) -> NCPolynomial:
        return NCPolynomial._raw({tuple(names[i] for i in w): c for w, c in poly.items()})

    def rules(self) -> list[tuple[NCPolynomial, NCPolynomial]]:
        """``(lead word, replacement)`` pairs in increasing order of the lead."""
        out = []
        for lead in sorted(self._rules, key=_key):
            out.append((
                NCPolynomial.monomial([self.generators[i] for i in lead]),
                self._decode(self._rules[lead], self.generators),
            ))
        return out

    def normal_form(self, p: NCPolynomial) -> NCPolynomial:
        if not self.is_complete and p.degree() > self.degree_cap:
            raise InconclusiveReduction(
                f"degree {p.degree()} exceeds cap {self.degree_cap} of an incomplete rewrite system"
            )
        enc, names = self._encode(p)
        return self._decode(_reduce(self._rules, self._lengths, enc), names)

    def membership(self, p: NCPolynomial) -> Membership:
        try:
            nf = self.normal_form(p)
        except InconclusiveReduction:
            return Membership(Verdict.INCONCLUSIVE, p, self.status)
        if nf.is_zero():
            return Membership(Verdict.ZERO, nf, self.status)
        if self.is_complete:
            return Membership(Verdict.NONZERO, nf, self.status)
        return Membership(Verdict.INCONCLUSIVE, nf, self.status)

    def unresolved_overlaps(self, max_degree: Optional[int] = None) -> list:
        """Recheck local confluence of the final rules from scratch.

        Returns the overlap words (of degree at most ``max_degree``, default the
        cap) whose two one-step reductions have different normal forms.
        """
        bound = self.degree_cap if max_degree is None else max_degree
        bad = []
        for l1, r1 in self._rules.items():
            for l2, r2 in self._rules.items():
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] != l2[:k] or len(l1) + len(l2) - k > bound:
                        continue
                    a, cw = l1[: len(l1) - k], l2[k:]
                    s: dict = defaultdict(Fraction)
                    for w, v in r1.items():
                        s[w + cw] += v
                    for w, v in r2.items():
                        s[a + w] -= v
                    s = {w: v for w, v in s.items() if v}
                    if _reduce(self._rules, self._lengths, s):
                        bad.append(tuple(self.generators[i] for i in l1 + cw))
        return bad

    def __repr__(self):
        return f"RewriteSystem({len(self._rules)} rules, cap={self.degree_cap}, status={self.status!r})"


@dataclass
class _Completion:
    cap: int
    rules: dict = field(default_factory=dict)        # lead -> replacement
    ids: dict = field(default_factory=dict)          # lead -> rule id
    alive: dict = field(default_factory=dict)        # rule id -> lead
    queue: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    counter: int = 0
    lengths: list = field(default_factory=list)

    def _refresh_lengths(self):
        self.lengths = sorted({len(k) for k in self.rules})

    def reduce(self, poly: dict) -> dict:
        return _reduce(self.rules, self.lengths, poly)

    def add(self, poly: dict) -> None:
        pending = [poly]
        while pending:
            p = self.reduce(pending.pop())
            if not p:
                continue
            lead = _lead(p)
            c = p[lead]
            repl = {w: -v / c for w, v in p.items() if w != lead}
            # rules whose lead contains the new lead are no longer reduced
            for old in [k for k in self.rules if _contains(k, lead)]:
                old_repl = self.rules.pop(old)
                del self.alive[self.ids.pop(old)]
                back = dict(old_repl)
                back = {w: -v for w, v in back.items()}
                back[old] = Fraction(1)
                pending.append(back)
            rid = self.counter
            self.counter += 1
            self.rules[lead] = repl
            self.ids[lead] = rid
            self.alive[rid] = lead
            self._refresh_lengths()
            self._queue_overlaps(rid, lead)

    def _queue_overlaps(self, rid: int, lead: tuple) -> None:
        for oid, other in list(self.alive.items()):
            pairs = [(rid, lead, oid, other)]
            if oid != rid:
                pairs.append((oid, other, rid, lead))
            for id1, l1, id2, l2 in pairs:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        deg = len(l1) + len(l2) - k
                        if deg > self.cap:
                            self.skipped.append((id1, id2))
                        else:
                            heapq.heappush(self.queue, (deg, id1, id2, k))

    def run(self) -> None:
        while self.queue:
            deg, id1, id2, k = heapq.heappop(self.queue)
            l1 = self.alive.get(id1)
            l2 = self.alive.get(id2)
            if l1 is None or l2 is None:
                continue
            r1 = self.rules[l1]
            r2 = self.rules[l2]
            a = l1[: len(l1) - k]
            cw = l2[k:]
            s: dict = defaultdict(Fraction)
            for w, v in r1.items():
                s[w + cw] += v
            for w, v in r2.items():
                s[a + w] -= v
            s = {w: v for w, v in s.items() if v}
            if s:
                self.add(s)

    def interreduce_tails(self) -> None:
        for lead in sorted(self.rules, key=_key):
            self.rules[lead] = self.reduce(self.rules[lead])

    def capped(self) -> int:
        return sum(1 for id1, id2 in self.skipped if id1 in self.alive and id2 in self.alive)


def _contains(word: tuple, sub: tuple) -> bool:
    n, m = len(word), len(sub)
    if m > n:
        return False
    return any(word[i:i + m] == sub for i in range(n - m + 1))


def default_degree_cap(relations: Iterable[NCPolynomial]) -> int:
    return 2 * max((r.degree() for r in relations), default=1)


def complete(relations: Sequence[NCPolynomial], degree_cap: Optional[int] = None,
             generators: Optional[Sequence[str]] = None) -> RewriteSystem:
    """Complete ``relations`` into an inter-reduced rewrite system up to ``degree_cap``.

    ``generators`` fixes the generator order (later = larger); by default the
    names occurring in the relations, sorted.
    """
    relations = [r for r in relations if not r.is_zero()]
    if degree_cap is None:
        degree_cap = default_degree_cap(relations)
    names = set()
    for r in relations:
        names |= r.generators()
    if generators is None:
        generators = sorted(names)
    else:
        generators = list(generators)
        missing = sorted(names - set(generators))
        if missing:
            raise ValueError(f"relations use undeclared generators: {missing}")
    rank = {g: i for i, g in enumerate(generators)}
    state = _Completion(cap=degree_cap)
    encoded = [{tuple(rank[g] for g in w): c for w, c in r.items()} for r in relations]
    encoded.sort(key=lambda p: _key(_lead(p)))
    for p in encoded:
        state.add(p)
    state.run()
    state.interreduce_tails()
    skipped = state.capped()
    return RewriteSystem(generators, state.rules, degree_cap, "capped" if skipped else "complete", skipped)


@lru_cache(maxsize=64)
def _cached_system(relations: tuple, degree_cap: Optional[int], generators: Optional[tuple]) -> RewriteSystem:
    return complete(list(relations), degree_cap, generators)


def normal_form(system: RewriteSystem, p: NCPolynomial) -> NCPolynomial:
    return system.normal_form(p)


def is_zero_mod(relations: Sequence[NCPolynomial], p: NCPolynomial, degree_cap: Optional[int] = None,
                generators: Optional[Sequence[str]] = None) -> Membership:
    """Decide ``p`` in the two-sided ideal of ``relations`` as far as the cap allows.

    Completions are cached per (relations, cap, generator order).
    """
    system = _cached_system(tuple(relations), degree_cap, tuple(generators) if generators is not None else None)
    return system.membership(p)
