"""
wordgroups.rauzy
----------------

k-labeled Rauzy graphs and Rauzy groups.

G_{m,k} has the factors of length m as vertices and one edge per factor x of
length m + 1, going from init(x) to tail(x) and labeled by the letter x[k].
The Rauzy group H_{u,v} is the group of G_{|uv|,|u|} at the vertex uv.

"""
import collections
import logging
import warnings

import wordgroups.digraph as dg
import wordgroups.extension as ext
from wordgroups.utils import DomainError, PreconditionError

logger = logging.getLogger(__name__)

LevelMorphisms = collections.namedtuple('LevelMorphisms', ['init', 'tail'])


class RauzyGraph(object):
    """
    The Rauzy graph G_{m,k} of a language.

    Parameters
    ----------
    oracle : LanguageOracle
    level : int
        m, the length of the vertices.
    label_index : int
        k, the position of the label letter in the edge windows.
    graph : LabeledDigraph
    """
    def __init__(self, oracle, level, label_index, graph):
        self.oracle = oracle
        self.level = level
        self.label_index = label_index
        self.graph = graph

    def __repr__(self):
        return "RauzyGraph(m=%d, k=%d, %d vertices, %d edges)" % (
            self.level, self.label_index, self.graph.n_vertices,
            self.graph.n_edges)

    def edge(self, x):
        """
        The edge of the window `x` (a factor of length m + 1).
        """
        if len(x) != self.level + 1:
            raise DomainError("Edge windows have length %d" % (self.level + 1))
        return (x[:-1], x[self.label_index], x[1:])

    def window(self, e):
        """
        The factor of length m + 1 an edge stands for.
        """
        o, a, t = e
        if self.level == 0:
            return a
        return o + t[-1]

    def group(self, w):
        """
        The group of the graph at the vertex `w`.
        """
        return dg.group_at(self.graph, w)

    def to_dot(self, base=None):
        return self.graph.to_dot(name='G_%d_%d' % (self.level,
                                                   self.label_index),
                                 base=base)

    def to_dict(self, groups=False):
        out = {'level': self.level,
               'label_index': self.label_index,
               'graph': self.graph.to_dict()}
        if groups:
            out['groups'] = dict(
                (w, [str(b) for b in self.group(w).basis])
                for w in self.graph.sorted_vertices())
        return out


def rauzy_graph(o, m, k):
    """
    Build G_{m,k}, 0 <= k <= m.
    """
    if m < 0 or k < 0 or k > m:
        raise DomainError("Need 0 <= k <= m, got m=%d, k=%d" % (m, k))
    o.require(m + 1)
    edges = [(x[:-1], x[k], x[1:]) for x in o.factor_sets[m + 1]]
    graph = dg.LabeledDigraph(o.alphabet, o.factor_sets[m], edges,
                              key=o.alphabet.key)
    return RauzyGraph(o, m, k, graph)


def level_morphisms(g):
    """
    The maps init: G_{m,k} -> G_{m-1,k} (for k <= m - 1) and
    tail: G_{m,k} -> G_{m-1,k-1} (for k >= 1), as digraph morphisms.

    Returns
    -------
    LevelMorphisms
        With None in place of a map whose index condition fails.
    """
    m = g.level
    k = g.label_index
    if m < 1:
        raise DomainError("Level morphisms need m >= 1")
    vertices = g.graph.vertices
    init_map = None
    tail_map = None
    if k <= m - 1:
        target = rauzy_graph(g.oracle, m - 1, k).graph
        init_map = dg.DigraphMorphism(g.graph, target,
                                      dict((w, w[:-1]) for w in vertices))
    if k >= 1:
        target = rauzy_graph(g.oracle, m - 1, k - 1).graph
        tail_map = dg.DigraphMorphism(g.graph, target,
                                      dict((w, w[1:]) for w in vertices))
    for f in (init_map, tail_map):
        if f is not None and not f.is_onto():
            raise AssertionError("Level map of %r is not onto" % g)
    return LevelMorphisms(init_map, tail_map)


def rauzy_group(o, u, v):
    """
    The Rauzy group H_{u,v}: the group of G_{|uv|,|u|} at uv.
    """
    w = u + v
    o.require(len(w) + 1)
    if not o.contains(w):
        raise DomainError("%r is not in the language" % w)
    return rauzy_graph(o, len(w), len(u)).group(w)


def lemma_path(g, x):
    """
    The positive path of G_{m,k} from x[:m] to x[-m:] through the successive
    windows of `x`; its label is x[k:k+d] with d = |x| - m.
    """
    m = g.level
    d = len(x) - m
    if d < 1:
        raise DomainError("%r is too short for level %d" % (x, m))
    if not g.oracle.contains(x):
        raise DomainError("%r is not in the language" % x)
    steps = [(g.edge(x[i:i + m + 1]), 1) for i in range(d)]
    return dg.Path(g.graph, steps, start=x[:m])


def _precondition(ok, message, strict):
    if ok:
        return
    if strict:
        raise PreconditionError(message)
    warnings.warn(message)


def check_ker_tail_group_preserving(o, m, k, e, strict=False):
    """
    Whether ker(tail) is a group-preserving equivalence of G_{m,k}.

    Parameters
    ----------
    o : LanguageOracle
    m, k : int
        The Rauzy graph, 1 <= m, e <= k <= m.
    e : int
        The depth bound of the hypothesis: the language is expected to be
        (m-1, e)-suffix-connected.
    strict : bool
        Raise PreconditionError when the hypothesis fails, instead of
        warning and deciding anyway.

    Returns
    -------
    bool
    """
    if m < 1 or e < 1:
        raise DomainError("Need m >= 1 and e >= 1")
    _precondition(e <= k <= m, "Need e <= k <= m, got e=%d, k=%d, m=%d"
                  % (e, k, m), strict)
    _precondition(ext.is_me_suffix_connected(o, m - 1, e),
                  "The language is not (%d, %d)-suffix-connected" % (m - 1, e),
                  strict)
    g = rauzy_graph(o, m, k).graph
    kernel = dg.VertexEquivalence.kernel(g.vertices, lambda w: w[1:],
                                         key=g.key)
    return dg.is_group_preserving(g, kernel)


def check_ker_init_group_preserving(o, m, k, strict=False):
    """
    Whether ker(init) is a group-preserving equivalence of G_{m,k}, for
    0 <= k <= m - 1; the hypothesis is that every factor of length m - 1
    has a connected extension graph.
    """
    if m < 1:
        raise DomainError("Need m >= 1")
    _precondition(0 <= k <= m - 1, "Need 0 <= k <= m - 1, got k=%d, m=%d"
                  % (k, m), strict)
    connected = all(ext.extension_graph(o, w).is_connected()
                    for w in o.words(m - 1))
    _precondition(connected, "The language is not %d-connected" % (m - 1),
                  strict)
    g = rauzy_graph(o, m, k).graph
    kernel = dg.VertexEquivalence.kernel(g.vertices, lambda w: w[:-1],
                                         key=g.key)
    return dg.is_group_preserving(g, kernel)


def check_suffix_group_collapse(o, max_len):
    """
    For each non-empty factor u with |u| <= max_len, whether H_{u,e} equals
    H_{b,e}, b the last letter of u.

    Returns
    -------
    OrderedDict
        Maps u to the outcome, in shortlex order.
    """
    out = collections.OrderedDict()
    letters = dict((b, rauzy_group(o, b, '')) for b in o.alphabet)
    for n in range(1, max_len + 1):
        for u in o.words(n):
            out[u] = rauzy_group(o, u, '').equals(letters[u[-1]])
    logger.info("Suffix collapse up to length %d: %d of %d pass", max_len,
                sum(out.values()), len(out))
    return out


def positive_paths(g, length, start=None, end=None):
    """
    All positive paths of the given length, as (origin, terminus, word)
    triples, optionally restricted to a start or end vertex.
    """
    graph = g.graph
    if start is not None:
        frontier = set([(start, start, '')])
    else:
        frontier = set((v, v, '') for v in graph.vertices)
    for i in range(length):
        frontier = set((o, e[2], w + e[1]) for o, v, w in frontier
                       for e in graph.out_edges(v))
    if end is not None:
        frontier = set(p for p in frontier if p[1] == end)
    return frontier


def check_positive_paths(o, m, k):
    """
    Whether the labels of positive paths of length j in G_{m,k} are exactly
    the factors of length j, for every j <= m + 1.
    """
    g = rauzy_graph(o, m, k)
    for j in range(m + 2):
        labels = set(w for _, _, w in positive_paths(g, j))
        if labels != set(o.factor_sets[j]):
            logger.info("Positive path labels of length %d differ from the"
                        " factors", j)
            return False
    return True


def _suffix_comparable(x, y):
    return x.endswith(y) or y.endswith(x)


def _prefix_comparable(x, y):
    return x.startswith(y) or y.startswith(x)


def check_path_comparability(o, u, v, length):
    """
    In G_{|uv|,|u|}: every positive path of the given length into uv is
    labeled by a word suffix-comparable with u, and every positive path out
    of uv by a word prefix-comparable with v. When the length is |u| (or
    |v|) some path into (out of) uv must be labeled exactly u (v).
    """
    w = u + v
    o.require(len(w) + 1)
    if not o.contains(w):
        raise DomainError("%r is not in the language" % w)
    g = rauzy_graph(o, len(w), len(u))
    into = set(x for _, _, x in positive_paths(g, length, end=w))
    out = set(x for _, _, x in positive_paths(g, length, start=w))
    if not all(_suffix_comparable(x, u) for x in into):
        return False
    if not all(_prefix_comparable(x, v) for x in out):
        return False
    if length == len(u) and u not in into:
        return False
    if length == len(v) and v not in out:
        return False
    return True
