"""Rewriting rules that preserve Parikh matrices, linear and circular.

All rules are stated for a ternary ordered alphabet {a < b < c} (roles are
taken from the alphabet's order, whatever the actual symbols are):

* E1 (linear): swap one factor ac <-> ca; the linear Parikh matrix is
  unchanged.
* E2 (linear): rewrite x·αb·y·bα·z into x·bα·y·αb·z for α in {a, c} and
  y over {α, b} only; the linear Parikh matrix is unchanged.
* CE1 (circular): a rotation x·ac·y·ca becomes x·ca·y·ac.  The circular
  matrices agree exactly when |y|_b (|x|_a - |x|_c) = |x|_b (|y|_a - |y|_c).
* CE2 (circular): a rotation x·αb·y·bα becomes x·bα·y·αb, α in {a, c},
  y unrestricted.  The circular matrices agree exactly when
  |x|_ᾱ (|y| + |y|_b + 3) = |y|_ᾱ (|x| + |x|_b + 3), ᾱ the third letter.

Circular rule sites are searched over every rotation of the canonical
representative, since a circular word has no distinguished start.  The
swap pattern is matched in its forward orientation only: the reverse
application of a rule at one rotation is the forward application at
another, so the sweep already yields a symmetric (involutive) move set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .circular import CircularWord, avg_count, canonicalize, m_equivalent
from .words import Alphabet, parikh_vector

RULE_NAMES = ("E1", "E2", "CE1", "CE2")


def _require_ternary(alphabet: Alphabet) -> None:
    if alphabet.size != 3:
        raise ValueError(
            f"rewriting rules require a ternary alphabet, got size {alphabet.size}"
        )


@dataclass(frozen=True)
class RuleApplication:
    """One rule site: rotation index of the representative scanned, the
    lengths of the x and y parts (which pin the swap positions), the α
    symbol for CE2, both sides of the side condition, and the resulting
    circular word.  The application preserves M-equivalence iff `valid`."""

    rule: str
    rotation: int
    x_len: int
    y_len: int
    alpha: str | None
    condition_lhs: int
    condition_rhs: int
    result: CircularWord

    @property
    def valid(self) -> bool:
        return self.condition_lhs == self.condition_rhs


def apply_e1(alphabet: Alphabet, word: str) -> set:
    """All words reachable from one ac <-> ca factor swap."""
    _require_ternary(alphabet)
    alphabet.validate(word)
    a, _, c = alphabet.symbols
    ac, ca = a + c, c + a
    out = set()
    for i in range(len(word) - 1):
        pair = word[i : i + 2]
        if pair == ac:
            out.add(word[:i] + ca + word[i + 2 :])
        elif pair == ca:
            out.add(word[:i] + ac + word[i + 2 :])
    return out


def apply_e2(alphabet: Alphabet, word: str) -> set:
    """All words reachable from one x·αb·y·bα·z <-> x·bα·y·αb·z swap with
    y restricted to {α, b}."""
    _require_ternary(alphabet)
    alphabet.validate(word)
    a, b, c = alphabet.symbols
    n = len(word)
    out = set()
    for alpha in (a, c):
        allowed = {alpha, b}
        head, tail = alpha + b, b + alpha
        for i in range(n - 3):
            first = word[i : i + 2]
            if first != head and first != tail:
                continue
            for j in range(i + 2, n - 1):
                second = word[j : j + 2]
                y = word[i + 2 : j]
                if not set(y) <= allowed:
                    continue
                if first == head and second == tail:
                    out.add(word[:i] + tail + y + head + word[j + 2 :])
                elif first == tail and second == head:
                    out.add(word[:i] + head + y + tail + word[j + 2 :])
    return out


def find_ce1(cw: CircularWord) -> list:
    """Every CE1 site of [w]: each rotation r of the canonical word that
    factors as x·ac·y·ca, with its side condition evaluated."""
    _require_ternary(cw.alphabet)
    a, b, c = cw.alphabet.symbols
    ac, ca = a + c, c + a
    w = cw.canonical
    n = len(w)
    apps = []
    if n < 4:
        return apps
    doubled = w + w
    for r in range(n):
        rot = doubled[r : r + n]
        if rot[-2:] != ca:
            continue
        for i in range(n - 3):
            if rot[i : i + 2] != ac:
                continue
            x, y = rot[:i], rot[i + 2 : n - 2]
            lhs = y.count(b) * (x.count(a) - x.count(c))
            rhs = x.count(b) * (y.count(a) - y.count(c))
            result = canonicalize(cw.alphabet, x + ca + y + ac)
            apps.append(
                RuleApplication("CE1", r, len(x), len(y), None, lhs, rhs, result)
            )
    return apps


def find_ce2(cw: CircularWord) -> list:
    """Every CE2 site of [w]: each rotation r of the canonical word that
    factors as x·αb·y·bα (α in {a, c}, y arbitrary), with its condition."""
    _require_ternary(cw.alphabet)
    a, b, c = cw.alphabet.symbols
    w = cw.canonical
    n = len(w)
    apps = []
    if n < 4:
        return apps
    doubled = w + w
    for r in range(n):
        rot = doubled[r : r + n]
        for alpha, bar in ((a, c), (c, a)):
            head, tail = alpha + b, b + alpha
            if rot[-2:] != tail:
                continue
            for i in range(n - 3):
                if rot[i : i + 2] != head:
                    continue
                x, y = rot[:i], rot[i + 2 : n - 2]
                lhs = x.count(bar) * (len(y) + y.count(b) + 3)
                rhs = y.count(bar) * (len(x) + x.count(b) + 3)
                result = canonicalize(cw.alphabet, x + tail + y + head)
                apps.append(
                    RuleApplication("CE2", r, len(x), len(y), alpha, lhs, rhs, result)
                )
    return apps


@dataclass(frozen=True)
class NaiveFailure:
    """A documented counterexample to applying a linear rule circularly."""

    rule: str
    left: CircularWord
    right: CircularWord
    pattern: str
    left_count: Fraction
    right_count: Fraction
    equivalent: bool


def naive_rule_failure_examples() -> list:
    """The two fixed counterexamples showing that E1 and E2, applied to
    circular words as if they were linear, do not preserve M-equivalence."""
    abc = Alphabet("abc")

    def entry(rule, w1, w2, pattern):
        c1 = canonicalize(abc, w1)
        c2 = canonicalize(abc, w2)
        return NaiveFailure(
            rule,
            c1,
            c2,
            pattern,
            avg_count(c1, pattern),
            avg_count(c2, pattern),
            m_equivalent(c1, c2),
        )

    return [entry("E1", "acb", "cab", "ab"), entry("E2", "abbac", "baabc", "abc")]


@dataclass(frozen=True)
class RewriteEdge:
    source: CircularWord
    target: CircularWord
    application: RuleApplication


@dataclass(frozen=True)
class RewriteGraph:
    """Closure of valid rule applications: nodes in discovery order, one
    edge per (source, target, rule).  `complete` is False when the node
    budget stopped the expansion."""

    nodes: tuple
    edges: tuple
    complete: bool

    def to_dot(self) -> str:
        lines = ["graph rewrites {"]
        for node in self.nodes:
            lines.append(f'  "{node.canonical}" [label="[{node.canonical}]"];')
        for edge in self.edges:
            app = edge.application
            if app.rule == "CE1":
                label = f"CE1@r={app.rotation},|x|={app.x_len}"
            else:
                label = f"CE2@r={app.rotation},α={app.alpha}"
            lines.append(
                f'  "{edge.source.canonical}" -- "{edge.target.canonical}" '
                f'[label="{label}"];'
            )
        lines.append("}")
        return "\n".join(lines)


_FINDERS = {"CE1": find_ce1, "CE2": find_ce2}


def rewrite_closure(cw: CircularWord, rules=("CE1", "CE2"), max_steps: int = 100000) -> RewriteGraph:
    """Breadth-first closure of valid CE1/CE2 applications from [w].

    Every node is canonical and all nodes are pairwise M-equivalent.  The
    closure is finite (length and letter counts are preserved); max_steps
    caps the number of nodes as a guard.
    """
    _require_ternary(cw.alphabet)
    rules = tuple(rules)
    for rule in rules:
        if rule not in _FINDERS:
            raise ValueError(f"unknown rule {rule!r}; circular rules are CE1, CE2")
    nodes = {cw.canonical: cw}
    order = [cw]
    edges = []
    seen_edges = set()
    complete = True
    queue = deque([cw])
    while queue:
        source = queue.popleft()
        for rule in rules:
            for app in _FINDERS[rule](source):
                if not app.valid:
                    continue
                target = app.result
                edge_key = (source.canonical, target.canonical, rule)
                if edge_key not in seen_edges:
                    seen_edges.add(edge_key)
                    edges.append(RewriteEdge(source, target, app))
                if target.canonical not in nodes:
                    if len(nodes) >= max_steps:
                        complete = False
                        continue
                    nodes[target.canonical] = target
                    order.append(target)
                    queue.append(target)
    return RewriteGraph(tuple(order), tuple(edges), complete)


def parikh_vector_sufficiency(alphabet: Alphabet, x: str, y: str, alpha: str, beta: str) -> bool:
    """Whether x and y have equal Parikh vectors.  When they do, the swap
    [x·αβ·y·βα] -> [x·βα·y·αβ] preserves M-equivalence for any distinct
    symbols α, β of the ternary alphabet."""
    _require_ternary(alphabet)
    if alpha not in alphabet or beta not in alphabet:
        raise ValueError(f"swap symbols must belong to alphabet {alphabet}")
    if alpha == beta:
        raise ValueError("swap symbols must be distinct")
    return parikh_vector(alphabet, x) == parikh_vector(alphabet, y)
