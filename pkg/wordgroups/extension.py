"""
wordgroups.extension
--------------------

Extensions of factors, bipartite extension graphs, suffix extension graphs
and suffix-connectedness.

For a factor w, ext_{k,l}(w) is the bipartite graph whose left vertices are
the words u of length k with uw in L, whose right vertices are the words v of
length l with wv in L, and which has an edge (u, v) whenever uwv is in L. The
two sides are kept apart even when they share words; in DOT output they are
written ``L_u`` and ``R_v``.

"""
import collections
import logging

import numpy as np
import scipy.sparse as sps
import scipy.sparse.csgraph as csgraph

from wordgroups.utils import (DomainError, HorizonExceeded, dot_document,
                              dot_quote, show_word)

logger = logging.getLogger(__name__)

Specialness = collections.namedtuple('Specialness',
                                     ['left_special', 'right_special',
                                      'bispecial'])


def left_extensions(o, w, k=1):
    """
    The words u of length `k` with uw in the language.
    """
    n = len(w)
    o.require(n + k)
    return frozenset([x[:k] for x in o.factor_sets[n + k] if x[k:] == w])


def right_extensions(o, w, k=1):
    """
    The words v of length `k` with wv in the language.
    """
    n = len(w)
    o.require(n + k)
    return frozenset([x[n:] for x in o.factor_sets[n + k] if x[:n] == w])


class ExtensionGraph(object):
    """
    The bipartite extension graph ext_{k,l}(w).

    Parameters
    ----------
    center : str
        The word w.
    left, right : iterable of str
        Left and right vertices.
    edges : iterable of (str, str)
        Pairs (u, v) with uwv in the language.
    alphabet : Alphabet
        Used to order the vertices.
    left_order, right_order : int
        The lengths k and l of the extensions.
    """
    def __init__(self, center, left, right, edges, alphabet,
                 left_order=1, right_order=1):
        self.center = center
        self.alphabet = alphabet
        self.left_order = left_order
        self.right_order = right_order
        self.left = tuple(alphabet.sorted(set(left)))
        self.right = tuple(alphabet.sorted(set(right)))
        self.edges = frozenset(edges)
        for u, v in self.edges:
            if u not in self.left or v not in self.right:
                raise DomainError("Edge (%s, %s) has no endpoint in the graph"
                                  % (u, v))
        self._labels = None

    def __repr__(self):
        return ("ExtensionGraph(%r, %d left, %d right, %d edges)"
                % (self.center, len(self.left), len(self.right),
                   len(self.edges)))

    @property
    def n_vertices(self):
        return len(self.left) + len(self.right)

    @property
    def n_edges(self):
        return len(self.edges)

    def sorted_edges(self):
        key = self.alphabet.key
        return sorted(self.edges, key=lambda e: (key(e[0]), key(e[1])))

    def adjacency(self):
        """
        The symmetric adjacency matrix, left vertices first.
        """
        nl = len(self.left)
        n = self.n_vertices
        li = dict((u, i) for i, u in enumerate(self.left))
        ri = dict((v, nl + i) for i, v in enumerate(self.right))
        rows = [li[u] for u, v in self.edges]
        cols = [ri[v] for u, v in self.edges]
        data = np.ones(len(rows), dtype=np.int8)
        A = sps.coo_matrix((data, (rows, cols)), shape=(n, n))
        return (A + A.T).tocsr()

    def _component_labels(self):
        if self._labels is None:
            n_comp, labels = csgraph.connected_components(self.adjacency(),
                                                          directed=False)
            self._n_components = n_comp
            self._labels = labels
        return self._labels

    @property
    def n_components(self):
        if self.n_vertices == 0:
            return 0
        self._component_labels()
        return self._n_components

    def components(self):
        """
        The connected components, as a list of (left words, right words)
        pairs of frozensets, ordered by their first vertex.
        """
        if self.n_vertices == 0:
            return []
        labels = self._component_labels()
        nl = len(self.left)
        out = collections.OrderedDict()
        for i, c in enumerate(labels):
            out.setdefault(c, ([], []))
            if i < nl:
                out[c][0].append(self.left[i])
            else:
                out[c][1].append(self.right[i - nl])
        return [(frozenset(l), frozenset(r)) for l, r in out.values()]

    def same_component(self, lefts=(), rights=()):
        """
        Whether all the given left and right vertices lie in one component.
        """
        labels = self._component_labels()
        nl = len(self.left)
        li = dict((u, i) for i, u in enumerate(self.left))
        ri = dict((v, nl + i) for i, v in enumerate(self.right))
        try:
            found = set([labels[li[u]] for u in lefts] +
                        [labels[ri[v]] for v in rights])
        except KeyError as e:
            raise DomainError("%r is not a vertex of %r" % (e.args[0], self))
        return len(found) <= 1

    def is_connected(self):
        return self.n_components == 1

    @property
    def characteristic(self):
        """
        Vertices minus edges.
        """
        return self.n_vertices - self.n_edges

    def is_forest(self):
        # A graph is acyclic iff edges = vertices - components.
        return self.n_edges == self.n_vertices - self.n_components

    def is_tree(self):
        return self.is_connected() and self.is_forest()

    def to_dict(self):
        return {'center': self.center,
                'left': list(self.left),
                'right': list(self.right),
                'edges': [list(e) for e in self.sorted_edges()],
                'components': self.n_components,
                'characteristic': self.characteristic,
                'tree': self.is_tree()}

    def to_dot(self, embedded=()):
        """
        Graphviz text. Left vertices in `embedded` are drawn dashed.
        """
        def ident(side, w):
            return dot_quote('%s_%s' % (side, show_word(w)))
        st = ['rankdir=LR']
        for u in self.left:
            style = ', style=dashed' if u in embedded else ''
            st.append('%s [label=%s, shape=box%s]'
                      % (ident('L', u), dot_quote(show_word(u)), style))
        for v in self.right:
            st.append('%s [label=%s, shape=ellipse]'
                      % (ident('R', v), dot_quote(show_word(v))))
        for u, v in self.sorted_edges():
            st.append('%s -- %s' % (ident('L', u), ident('R', v)))
        return dot_document('ext(%s)' % show_word(self.center), st,
                            directed=False)


def extension_graph(o, w, k=1, l=1):
    """
    Build ext_{k,l}(w).

    Parameters
    ----------
    o : LanguageOracle
    w : str
        A factor of the language.
    k, l : int
        Lengths of the left and right extensions (default: 1).

    Returns
    -------
    ExtensionGraph
    """
    n = len(w)
    o.require(n + k + l)
    if not o.contains(w):
        raise DomainError("%r is not in the language" % w)
    edges = [(x[:k], x[k + n:]) for x in o.factor_sets[n + k + l]
             if x[k:k + n] == w]
    return ExtensionGraph(w, left_extensions(o, w, k),
                          right_extensions(o, w, l), edges, o.alphabet,
                          left_order=k, right_order=l)


def classify(o, w):
    """
    Whether `w` is left special, right special and bispecial.
    """
    lext = left_extensions(o, w)
    rext = right_extensions(o, w)
    return Specialness(len(lext) >= 2, len(rext) >= 2,
                       len(lext) >= 2 and len(rext) >= 2)


def connected_components(g):
    return g.components()


def characteristic(g):
    return g.characteristic


def is_tree_graph(g):
    return g.is_tree()


def is_forest(g):
    return g.is_forest()


def is_neutral(o, w):
    """
    Whether ext(w) has characteristic one.
    """
    return extension_graph(o, w).characteristic == 1


class SuffixEmbedding(object):
    """
    The natural embedding of lext(w) into the suffix extension graph
    ext_{d,d}(w[d-1:]), sending a to a w[:d-1].
    """
    def __init__(self, word, depth, graph, embedded):
        self.word = word
        self.depth = depth
        self.graph = graph
        self.embedded = embedded

    def __repr__(self):
        return "SuffixEmbedding(%r, depth=%d)" % (self.word, self.depth)

    def is_connected(self):
        """
        Whether the embedded vertices lie in one connected component.
        """
        return self.graph.same_component(lefts=self.embedded.values())

    def to_dot(self):
        return self.graph.to_dot(embedded=set(self.embedded.values()))

    def to_dict(self):
        return {'word': self.word,
                'depth': self.depth,
                'embedding': dict(self.embedded),
                'connected': self.is_connected(),
                'graph': self.graph.to_dict()}


def suffix_embedding(o, w, d):
    """
    The natural embedding of lext(w) at depth `d`, 1 <= d <= |w| + 1.
    """
    if d < 1 or d > len(w) + 1:
        raise DomainError("Depth %d out of range for a word of length %d"
                          % (d, len(w)))
    host = w[d - 1:]
    graph = extension_graph(o, host, d, d)
    embedded = {}
    for a in o.alphabet.sorted(left_extensions(o, w)):
        image = a + w[:d - 1]
        if image not in graph.left:
            raise DomainError("%r is not a left vertex of the suffix graph"
                              % image)
        embedded[a] = image
    return SuffixEmbedding(w, d, graph, embedded)


def _connected_at(o, w, d):
    return suffix_embedding(o, w, d).is_connected()


def suffix_connected_depth(o, w, max_depth=None):
    """
    The smallest depth at which `w` is suffix-connected.

    Parameters
    ----------
    o : LanguageOracle
    w : str
        A non-empty factor.
    max_depth : int, optional
        Largest depth to try. Default: |w| + 1, the largest meaningful
        depth.

    Returns
    -------
    int or None
        None if `w` is not suffix-connected at any depth up to `max_depth`.
    """
    if len(w) == 0:
        raise DomainError("Suffix-connectedness is defined for non-empty"
                          " words only")
    if not o.contains(w):
        raise DomainError("%r is not in the language" % w)
    if max_depth is None:
        max_depth = len(w) + 1
    if max_depth < 1:
        raise DomainError("max_depth must be at least 1, got %d" % max_depth)
    top = min(max_depth, len(w) + 1)
    for d in range(1, top + 1):
        required = len(w) + d + 1
        if required > o.horizon:
            raise HorizonExceeded(required, o.horizon, depth=d)
        if _connected_at(o, w, d):
            logger.debug("%s is suffix-connected at depth %d", w, d)
            return d
    return None


def prefix_connected_depth(o, w, max_depth=None):
    """
    The smallest depth at which `w` is prefix-connected: the mirror image
    of `suffix_connected_depth`, computed on the reversed language.
    """
    return suffix_connected_depth(o.mirror(), w[::-1], max_depth)


def is_me_suffix_connected(o, m, e):
    """
    Whether every factor of length `m` is suffix-connected at some depth
    at most `e`.

    For m = 0 this asks for lext(epsilon) to lie in one component of
    ext(epsilon), the only depth available for the empty word.
    """
    if m < 0 or e < 1:
        raise DomainError("Need m >= 0 and e >= 1, got m=%d, e=%d" % (m, e))
    top = min(e, m + 1)
    o.require(m + top + 1)
    for w in o.words(m):
        if not any(_connected_at(o, w, d) for d in range(1, top + 1)):
            logger.info("%s is not suffix-connected up to depth %d", w, top)
            return False
    return True


def extension_counts(o, k):
    """
    Number of left and of right extensions of every factor of length `k`.
    """
    o.require(k + 1)
    nleft = collections.Counter()
    nright = collections.Counter()
    for x in o.factor_sets[k + 1]:
        nleft[x[1:]] += 1
        nright[x[:-1]] += 1
    return nleft, nright


def bispecial_words(o, max_len):
    """
    All bispecial factors of length at most `max_len`, sorted shortlex.
    """
    out = []
    for k in range(max_len + 1):
        nleft, nright = extension_counts(o, k)
        out.extend(w for w in o.words(k) if nleft[w] >= 2 and nright[w] >= 2)
    return out


def disconnected_words(o, max_len):
    """
    The non-empty factors of length at most `max_len` with a disconnected
    extension graph, sorted shortlex.

    Only bispecial factors are examined: the extension graph of any other
    factor is a star.
    """
    o.require(max_len + 2)
    return [w for w in bispecial_words(o, max_len)
            if len(w) > 0 and not extension_graph(o, w).is_connected()]


def is_connected_language(o, max_len):
    """
    Whether ext(w) is connected for every non-empty factor of length at most
    `max_len`.
    """
    return len(disconnected_words(o, max_len)) == 0


def is_neutral_language(o, max_len):
    """
    Whether every non-empty factor of length at most `max_len` is neutral.
    """
    o.require(max_len + 2)
    return all(is_neutral(o, w) for w in bispecial_words(o, max_len)
               if len(w) > 0)


def is_tree_set(o, max_len):
    """
    Whether ext(epsilon) is a forest and ext(w) is a tree for every other
    factor of length at most `max_len`.
    """
    o.require(max_len + 2)
    if not extension_graph(o, '').is_forest():
        return False
    return all(extension_graph(o, w).is_tree()
               for w in bispecial_words(o, max_len) if len(w) > 0)
