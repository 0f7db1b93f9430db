"""
wordgroups.digraph
------------------

Labeled digraphs over an alphabet, paths with formal inverses, quotients by
vertex equivalences, and Stallings folding.

A labeled digraph is a set of vertices and a set of edge triples (origin,
label, terminus). Two edges with the same triple are the same edge, so
quotients collapse parallel edges with equal labels automatically.

Graph files, as read by `read_graph`, hold one edge per line::

    # origin label terminus
    x a y
    x b y

A line with a single token declares an isolated vertex.

"""
import collections
import logging

import networkx as nx

import wordgroups.freegroup as fg
from wordgroups.language import Alphabet
from wordgroups.utils import (DisjointSet, DomainError, default_key,
                              dot_document, dot_quote)

logger = logging.getLogger(__name__)


class LabeledDigraph(object):
    """
    A digraph with edges labeled by letters.

    Parameters
    ----------
    alphabet : Alphabet
    vertices : iterable of hashable
    edges : iterable of (origin, letter, terminus)
    key : callable, optional
        Sort key for vertices, used for every ordered traversal and for
        output. Default: shorter string renderings first.
    """
    def __init__(self, alphabet, vertices, edges, key=None):
        self.alphabet = alphabet
        self.key = default_key if key is None else key
        self.vertices = frozenset(vertices)
        self.edges = frozenset(tuple(e) for e in edges)
        self._out = collections.defaultdict(list)
        self._in = collections.defaultdict(list)
        for e in self.edges:
            o, a, t = e
            if o not in self.vertices or t not in self.vertices:
                raise DomainError("Edge %r has an endpoint outside the graph"
                                  % (e,))
            if a not in alphabet:
                raise DomainError("Edge %r has a label outside %r"
                                  % (e, alphabet.letters))
            self._out[o].append(e)
            self._in[t].append(e)

    def __repr__(self):
        return ("LabeledDigraph(%d vertices, %d edges)"
                % (self.n_vertices, self.n_edges))

    def __eq__(self, other):
        return (isinstance(other, LabeledDigraph) and
                self.alphabet == other.alphabet and
                self.vertices == other.vertices and
                self.edges == other.edges)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.vertices, self.edges))

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    def out_edges(self, v):
        return list(self._out.get(v, ()))

    def in_edges(self, v):
        return list(self._in.get(v, ()))

    def edge_key(self, e):
        o, a, t = e
        return (self.key(o), self.alphabet.index(a), self.key(t))

    def sorted_vertices(self):
        return sorted(self.vertices, key=self.key)

    def sorted_edges(self):
        return sorted(self.edges, key=self.edge_key)

    def is_folded(self):
        """
        Whether no vertex has two outgoing, or two incoming, edges with the
        same label.
        """
        for index in (self._out, self._in):
            for v, edges in index.items():
                labels = [e[1] for e in edges]
                if len(labels) != len(set(labels)):
                    return False
        return True

    def to_networkx(self):
        """
        A networkx MultiDiGraph with the letter in the 'label' edge
        attribute.
        """
        G = nx.MultiDiGraph()
        G.add_nodes_from(self.vertices)
        for o, a, t in self.edges:
            G.add_edge(o, t, label=a)
        return G

    def is_connected(self):
        """
        Connectivity, ignoring edge directions.
        """
        if self.n_vertices == 0:
            return False
        return nx.is_weakly_connected(self.to_networkx())

    def component(self, v):
        """
        The subgraph spanned by the (undirected) component of `v`.
        """
        if v not in self.vertices:
            raise DomainError("%r is not a vertex" % (v,))
        G = self.to_networkx().to_undirected()
        return self.induced(nx.node_connected_component(G, v))

    def induced(self, vertices):
        vertices = frozenset(vertices)
        return LabeledDigraph(self.alphabet, vertices,
                              [e for e in self.edges
                               if e[0] in vertices and e[2] in vertices],
                              key=self.key)

    def to_dict(self):
        return {'vertices': [str(v) for v in self.sorted_vertices()],
                'edges': [[str(o), a, str(t)]
                          for o, a, t in self.sorted_edges()]}

    def to_text(self):
        """
        The graph in the file format read by `read_graph`.
        """
        lines = []
        touched = set()
        for o, a, t in self.sorted_edges():
            lines.append('%s %s %s' % (o, a, t))
            touched.update([o, t])
        for v in self.sorted_vertices():
            if v not in touched:
                lines.append(str(v))
        return '\n'.join(lines) + '\n'

    def to_dot(self, name='G', base=None):
        st = []
        for v in self.sorted_vertices():
            shape = 'doublecircle' if v == base else 'circle'
            st.append('%s [shape=%s]' % (dot_quote(v), shape))
        for o, a, t in self.sorted_edges():
            st.append('%s -> %s [label=%s]' % (dot_quote(o), dot_quote(t),
                                               dot_quote(a)))
        return dot_document(name, st)

    @classmethod
    def parse(cls, text, alphabet=None):
        """
        Read a graph from text (see the module docstring for the format).
        Without an `alphabet`, the labels in order of first appearance are
        used.
        """
        vertices = []
        edges = []
        labels = []
        for number, line in enumerate(text.splitlines()):
            line = line.split('#', 1)[0].split()
            if len(line) == 0:
                continue
            if len(line) == 1:
                vertices.append(line[0])
            elif len(line) == 3:
                o, a, t = line
                vertices.extend([o, t])
                edges.append((o, a, t))
                if a not in labels:
                    labels.append(a)
            else:
                raise DomainError("Line %d: expected 'origin label terminus',"
                                  " got %r" % (number + 1, ' '.join(line)))
        if alphabet is None:
            alphabet = Alphabet(labels if labels else ['0'])
        return cls(alphabet, vertices, edges)


def read_graph(path, alphabet=None):
    """
    Read a labeled digraph from a file.
    """
    with open(path) as f:
        return LabeledDigraph.parse(f.read(), alphabet)


class Path(object):
    """
    A path in a labeled digraph: a sequence of edges, each traversed forward
    (sign +1) or backward (sign -1).

    Parameters
    ----------
    graph : LabeledDigraph
    steps : iterable of (edge, sign)
    start : vertex, optional
        The origin; required for the empty path.
    """
    def __init__(self, graph, steps=(), start=None):
        self.graph = graph
        self.steps = tuple((tuple(e), s) for e, s in steps)
        if start is None:
            if len(self.steps) == 0:
                raise DomainError("The empty path needs a start vertex")
            e, s = self.steps[0]
            start = e[0] if s == 1 else e[2]
        v = start
        for e, s in self.steps:
            if e not in graph.edges:
                raise DomainError("%r is not an edge" % (e,))
            if s == 1:
                head, end = e[0], e[2]
            elif s == -1:
                head, end = e[2], e[0]
            else:
                raise DomainError("Sign must be +1 or -1, got %r" % (s,))
            if head != v:
                raise DomainError("Step %r does not start at %r" % (e, v))
            v = end
        self.origin = start
        self.terminus = v

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return "Path(%r -> %r, label %s)" % (self.origin, self.terminus,
                                             self.label)

    @property
    def label(self):
        """
        The label, as an element of the free group.
        """
        return fg.GroupElement((e[1], s) for e, s in self.steps)

    def is_positive(self):
        return all(s == 1 for e, s in self.steps)

    def word(self):
        """
        The label of a positive path, as a word.
        """
        if not self.is_positive():
            raise DomainError("Only positive paths spell words")
        return ''.join(e[1] for e, s in self.steps)

    def vertices(self):
        out = [self.origin]
        for e, s in self.steps:
            out.append(e[2] if s == 1 else e[0])
        return out

    def inverse(self):
        return Path(self.graph, [(e, -s) for e, s in reversed(self.steps)],
                    start=self.terminus)

    def __mul__(self, other):
        if self.terminus != other.origin:
            raise DomainError("Paths are not consecutive")
        return Path(self.graph, self.steps + other.steps, start=self.origin)


class VertexEquivalence(object):
    """
    An equivalence relation on a finite vertex set, kept as a disjoint-set
    forest.

    Parameters
    ----------
    vertices : iterable
    pairs : iterable of (vertex, vertex), optional
        Generating pairs; the relation is the least equivalence containing
        them.
    key : callable, optional
        Sort key; the smallest member of a class represents it.
    """
    def __init__(self, vertices, pairs=(), key=None):
        self.vertices = frozenset(vertices)
        self.key = default_key if key is None else key
        self._sets = DisjointSet(self.vertices)
        for x, y in pairs:
            if x not in self._sets or y not in self._sets:
                raise DomainError("(%r, %r) relates vertices outside the set"
                                  % (x, y))
            self._sets.union(x, y)
        self._reps = None

    @classmethod
    def identity(cls, vertices, key=None):
        return cls(vertices, key=key)

    @classmethod
    def kernel(cls, vertices, f, key=None):
        """
        The kernel of the map `f`: vertices with equal images are related.
        """
        first = {}
        pairs = []
        for v in vertices:
            image = f(v)
            if image in first:
                pairs.append((first[image], v))
            else:
                first[image] = v
        return cls(vertices, pairs, key=key)

    @classmethod
    def _from_sets(cls, sets, key=None):
        new = cls((), key=key)
        new.vertices = frozenset(sets)
        new._sets = sets
        return new

    def _representatives(self):
        if self._reps is None:
            reps = {}
            for root, members in self._sets.groups().items():
                rep = min(members, key=self.key)
                for v in members:
                    reps[v] = rep
            self._reps = reps
        return self._reps

    def representative(self, v):
        return self._representatives()[v]

    def related(self, x, y):
        return self._sets.find(x) == self._sets.find(y)

    def classes(self):
        """
        The classes as frozensets, ordered by their representatives.
        """
        groups = self._sets.groups().values()
        return sorted((frozenset(g) for g in groups),
                      key=lambda c: self.key(min(c, key=self.key)))

    @property
    def n_classes(self):
        return len(self._sets.groups())

    def merged(self, pairs):
        """
        The least equivalence containing this one and `pairs`.
        """
        sets = self._sets.copy()
        for x, y in pairs:
            sets.union(x, y)
        return VertexEquivalence._from_sets(sets, self.key)

    def is_subrelation_of(self, other):
        if self.vertices != other.vertices:
            raise DomainError("Equivalences on different vertex sets")
        reps = self._representatives()
        return all(other.related(v, reps[v]) for v in self.vertices)

    def __repr__(self):
        return "VertexEquivalence(%d classes on %d vertices)" % (
            self.n_classes, len(self.vertices))


def quotient(g, e):
    """
    The quotient digraph of `g` by the vertex equivalence `e`.

    Each class is represented by its smallest member.
    """
    if e.vertices != g.vertices:
        raise DomainError("The equivalence does not partition the vertices"
                          " of the graph")
    rep = e.representative
    return LabeledDigraph(g.alphabet, [rep(v) for v in g.vertices],
                          [(rep(o), a, rep(t)) for o, a, t in g.edges],
                          key=g.key)


class DigraphMorphism(object):
    """
    A vertex map between labeled digraphs, extended to edges by keeping
    labels.
    """
    def __init__(self, source, target, vertex_map):
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)

    def __call__(self, v):
        return self.vertex_map[v]

    def edge_image(self, e):
        o, a, t = e
        return (self.vertex_map[o], a, self.vertex_map[t])

    def is_morphism(self):
        return all(self.edge_image(e) in self.target.edges
                   for e in self.source.edges)

    def is_onto(self):
        """
        Whether the map is a morphism hitting every vertex and every edge.
        """
        return (self.is_morphism() and
                set(self.vertex_map.values()) == set(self.target.vertices) and
                set(self.edge_image(e) for e in self.source.edges) ==
                set(self.target.edges))

    def kernel(self):
        return VertexEquivalence.kernel(self.source.vertices, self,
                                        key=self.source.key)


def stallings_fold(g):
    """
    Fold `g` until no vertex has two outgoing or two incoming edges with the
    same label.

    Returns
    -------
    equiv : VertexEquivalence
        The Stallings equivalence, the least equivalence closed under both
        folding rules.
    folded : LabeledDigraph
        The quotient of `g` by `equiv`.

    Notes
    -----
    Every class keeps one outgoing and one incoming neighbor per label. When
    two classes merge, clashing labels put the two neighbors on the work
    list to be merged in turn.
    """
    sets = DisjointSet(g.vertices)
    out_map = dict((v, {}) for v in g.vertices)
    in_map = dict((v, {}) for v in g.vertices)
    pending = []
    for o, a, t in g.sorted_edges():
        if a in out_map[o]:
            pending.append((out_map[o][a], t))
        else:
            out_map[o][a] = t
        if a in in_map[t]:
            pending.append((in_map[t][a], o))
        else:
            in_map[t][a] = o
    merges = 0
    while pending:
        x, y = pending.pop()
        rx = sets.find(x)
        ry = sets.find(y)
        if rx == ry:
            continue
        root = sets.union(rx, ry)
        gone = ry if root == rx else rx
        merges += 1
        for maps in (out_map, in_map):
            keep = maps[root]
            for a, w in maps.pop(gone).items():
                if a in keep:
                    pending.append((keep[a], w))
                else:
                    keep[a] = w
    equiv = VertexEquivalence._from_sets(sets, g.key)
    folded = quotient(g, equiv)
    logger.debug("Folded %d vertices / %d edges into %d / %d (%d merges)",
                 g.n_vertices, g.n_edges, folded.n_vertices, folded.n_edges,
                 merges)
    return equiv, folded


def spanning_tree_labels(g, base):
    """
    Breadth-first spanning tree of the component of `base`, scanning the
    edges at each vertex in (label, neighbor) order.

    Returns
    -------
    labels : dict
        Maps each vertex of the component to the label of its tree path from
        `base`.
    tree : set
        The tree edges.
    """
    labels = {base: fg.GroupElement()}
    tree = set()
    queue = collections.deque([base])
    while queue:
        v = queue.popleft()
        steps = [(e, 1, e[2]) for e in g.out_edges(v)]
        steps += [(e, -1, e[0]) for e in g.in_edges(v)]
        steps.sort(key=lambda s: (g.alphabet.index(s[0][1]), g.key(s[2]),
                                  -s[1]))
        for e, sign, w in steps:
            if w not in labels:
                labels[w] = labels[v] * fg.GroupElement([(e[1], sign)])
                tree.add(e)
                queue.append(w)
    return labels, tree


def group_at(g, base):
    """
    The group of `g` at `base`: the labels of closed paths at `base`.

    The graph is folded first; the basis has one element per edge of the
    folded component of `base` outside a breadth-first spanning tree.

    Returns
    -------
    Subgroup
    """
    if base not in g.vertices:
        raise DomainError("%r is not a vertex" % (base,))
    equiv, folded = stallings_fold(g)
    b = equiv.representative(base)
    comp = folded.component(b)
    labels, tree = spanning_tree_labels(comp, b)
    basis = []
    for e in comp.sorted_edges():
        if e in tree:
            continue
        o, a, t = e
        basis.append(labels[o] * fg.GroupElement([(a, 1)]) *
                     labels[t].inverse())
    return fg.Subgroup(g.alphabet, comp, b, basis)


def rank(g):
    """
    The rank of the group of a connected graph: edges minus vertices plus
    one, after folding.
    """
    if not g.is_connected():
        raise DomainError("rank() needs a connected graph; use component()")
    folded = stallings_fold(g)[1]
    return folded.n_edges - folded.n_vertices + 1


def is_group_preserving(g, e, budget=None):
    """
    Whether the quotient by `e` leaves the group of the connected graph `g`
    unchanged.

    The group of the quotient always contains that of `g`, so it is enough
    to test its basis for membership. The decision is exact; `budget` is
    accepted and ignored.
    """
    if not g.is_connected():
        raise DomainError("Group preservation is tested on connected graphs")
    base = g.sorted_vertices()[0]
    h = group_at(g, base)
    hq = group_at(quotient(g, e), e.representative(base))
    return hq.is_subgroup_of(h)
