"""
wordgroups.freegroup
--------------------

Elements of the free group F(A) on an alphabet, and its finitely generated
subgroups, represented by folded based graphs.

An element is a reduced sequence of (letter, sign) pairs, with sign +1 or -1.
Its text form lists the letters separated by spaces, with a prime on inverse
letters: ``0 2' 1`` stands for 0 2^{-1} 1. The identity prints as epsilon.

"""
import logging

import networkx as nx
from networkx.algorithms import isomorphism

import wordgroups.digraph as dg
from wordgroups.utils import DomainError, EMPTY_WORD_SYMBOL

logger = logging.getLogger(__name__)


def reduce(letters):
    """
    Freely reduce a sequence of (letter, sign) pairs.
    """
    out = []
    for a, sign in letters:
        if sign not in (1, -1):
            raise DomainError("Sign must be +1 or -1, got %r" % (sign,))
        if out and out[-1] == (a, -sign):
            out.pop()
        else:
            out.append((a, sign))
    return tuple(out)


class GroupElement(object):
    """
    A reduced element of a free group.

    Parameters
    ----------
    letters : iterable of (str, int)
        Letters with signs; reduced on construction.
    """
    __slots__ = ('letters',)

    def __init__(self, letters=()):
        self.letters = reduce(letters)

    @classmethod
    def from_word(cls, w):
        """
        The positive element spelled by the word `w`.
        """
        return cls((a, 1) for a in w)

    @classmethod
    def parse(cls, text):
        """
        Parse the text form (``"0 2' 1"``, or ``"02'1"``).
        """
        text = text.strip()
        if text == EMPTY_WORD_SYMBOL or text == '':
            return cls()
        letters = []
        for ch in text:
            if ch.isspace():
                continue
            if ch == "'":
                if not letters:
                    raise DomainError("Dangling inverse mark in %r" % text)
                a, sign = letters[-1]
                letters[-1] = (a, -sign)
            else:
                letters.append((ch, 1))
        return cls(letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.letters == other.letters

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return GroupElement(self.letters + other.letters)

    def inverse(self):
        return GroupElement((a, -sign) for a, sign in reversed(self.letters))

    __invert__ = inverse

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** -n
        out = GroupElement()
        for i in range(n):
            out = out * self
        return out

    def conjugate(self, g):
        """
        g^{-1} self g.
        """
        return g.inverse() * self * g

    def is_identity(self):
        return len(self.letters) == 0

    def is_positive(self):
        return all(sign == 1 for a, sign in self.letters)

    def word(self):
        """
        The word spelled by a positive element.
        """
        if not self.is_positive():
            raise DomainError("%s is not a positive element" % self)
        return ''.join(a for a, sign in self.letters)

    def __str__(self):
        if self.is_identity():
            return EMPTY_WORD_SYMBOL
        return ' '.join(a if sign == 1 else a + "'"
                        for a, sign in self.letters)

    def __repr__(self):
        return "GroupElement.parse(%r)" % str(self)


def _flower(alphabet, generators):
    """
    The bouquet of cycles spelling the generators, based at vertex 0.
    """
    edges = []
    count = 0
    for g in generators:
        if g.is_identity():
            continue
        v = 0
        for i, (a, sign) in enumerate(g.letters):
            alphabet.check(a)
            if i == len(g) - 1:
                w = 0
            else:
                count += 1
                w = count
            if sign == 1:
                edges.append((v, a, w))
            else:
                edges.append((w, a, v))
            v = w
    return dg.LabeledDigraph(alphabet, range(count + 1), edges)


class Subgroup(object):
    """
    A finitely generated subgroup of F(A).

    Parameters
    ----------
    alphabet : Alphabet
    graph : LabeledDigraph
        A folded, connected graph.
    base : vertex of `graph`
    basis : list of GroupElement
        A free basis of the group of `graph` at `base`.

    Notes
    -----
    Use `subgroup_from` or `digraph.group_at` rather than calling this
    directly; the constructor trusts its arguments.
    """
    def __init__(self, alphabet, graph, base, basis):
        self.alphabet = alphabet
        self.graph = graph
        self.base = base
        self.basis = list(basis)
        self._delta = {}
        for o, a, t in graph.edges:
            self._delta[(o, a, 1)] = t
            self._delta[(t, a, -1)] = o

    def __repr__(self):
        return "Subgroup(<%s>)" % ', '.join(str(b) for b in self.basis)

    @property
    def rank(self):
        return len(self.basis)

    def read(self, g, start=None):
        """
        The end of the path labeled `g` from `start` (default: the base), or
        None if the folded graph has no such path.
        """
        v = self.base if start is None else start
        for a, sign in g.letters:
            v = self._delta.get((v, a, sign))
            if v is None:
                return None
        return v

    def contains(self, g):
        return self.read(g) == self.base

    __contains__ = contains

    def is_subgroup_of(self, other):
        _check_same(self, other)
        return all(other.contains(b) for b in self.basis)

    def equals(self, other):
        return self.is_subgroup_of(other) and other.is_subgroup_of(self)

    def conjugate(self, g):
        """
        The subgroup g^{-1} H g.
        """
        return subgroup_from([b.conjugate(g) for b in self.basis],
                             self.alphabet)

    def core(self):
        """
        The folded graph with all hanging trees pruned (the base is
        forgotten).
        """
        vertices = set(self.graph.vertices)
        edges = set(self.graph.edges)
        degree = dict((v, 0) for v in vertices)
        for o, a, t in edges:
            degree[o] += 1
            degree[t] += 1
        leaves = [v for v in vertices if degree[v] <= 1]
        while leaves:
            v = leaves.pop()
            if v not in vertices:
                continue
            vertices.discard(v)
            for e in [e for e in edges if e[0] == v or e[2] == v]:
                edges.discard(e)
                other = e[2] if e[0] == v else e[0]
                if other in vertices:
                    degree[other] -= 1
                    if degree[other] <= 1:
                        leaves.append(other)
        return dg.LabeledDigraph(self.alphabet, vertices, edges,
                                 key=self.graph.key)

    def is_conjugate(self, other):
        """
        Whether the two subgroups are conjugate, by comparing their cores.
        """
        _check_same(self, other)
        c1 = self.core()
        c2 = other.core()
        if (c1.n_vertices != c2.n_vertices or c1.n_edges != c2.n_edges):
            return False
        match = isomorphism.categorical_multiedge_match('label', None)
        return nx.is_isomorphic(c1.to_networkx(), c2.to_networkx(),
                                edge_match=match)

    def to_dict(self):
        return {'basis': [str(b) for b in self.basis],
                'rank': self.rank,
                'base': str(self.base),
                'graph': self.graph.to_dict()}


def _check_same(h1, h2):
    if h1.alphabet != h2.alphabet:
        raise DomainError("Subgroups of free groups on different alphabets")


def subgroup_from(generators, alphabet):
    """
    The subgroup generated by `generators`.

    Parameters
    ----------
    generators : iterable of GroupElement
    alphabet : Alphabet

    Returns
    -------
    Subgroup
        With the basis read off the folded flower graph.
    """
    generators = list(generators)
    h = dg.group_at(_flower(alphabet, generators), 0)
    logger.debug("%d generators span a subgroup of rank %d",
                 len(generators), h.rank)
    return h


def contains(h, g):
    return h.contains(g)


def leq(h1, h2):
    """
    Whether h1 is a subgroup of h2.
    """
    return h1.is_subgroup_of(h2)


def equal(h1, h2):
    return h1.equals(h2)


def conjugate(h, g):
    """
    g^{-1} h g.
    """
    return h.conjugate(g)


def is_conjugate(h1, h2):
    return h1.is_conjugate(h2)


def is_free_subset(elements, alphabet):
    """
    Whether the elements are distinct and form a free basis of the subgroup
    they generate.

    Parameters
    ----------
    elements : iterable of GroupElement or str
        Plain strings are read as positive words.
    alphabet : Alphabet
    """
    given = [g if isinstance(g, GroupElement) else GroupElement.from_word(g)
             for g in elements]
    elements = set(given)
    if len(elements) != len(given):
        return False
    return subgroup_from(elements, alphabet).rank == len(elements)


def full_group(alphabet):
    """
    F(A) itself.
    """
    return subgroup_from([GroupElement.from_word(a) for a in alphabet],
                         alphabet)


def trivial(alphabet):
    return subgroup_from([], alphabet)
