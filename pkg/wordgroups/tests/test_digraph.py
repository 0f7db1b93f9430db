import os

import numpy as np
import numpy.testing as npt

import wordgroups
import wordgroups.digraph as dg
import wordgroups.freegroup as fg
from wordgroups.language import Alphabet
from wordgroups.utils import DomainError

data_path = os.path.join(wordgroups.__path__[0], 'tests', 'data')
fold_file = os.path.join(data_path, 'fold_example.txt')

AB = Alphabet('ab')


def random_digraph(rs, max_vertices=5, max_edges=8):
    nv = rs.randint(1, max_vertices + 1)
    ne = rs.randint(0, max_edges + 1)
    edges = [(int(rs.randint(nv)), 'ab'[rs.randint(2)], int(rs.randint(nv)))
             for i in range(ne)]
    return dg.LabeledDigraph(AB, range(nv), edges)


def reachable_labels(g, start, max_len):
    """
    The pairs (vertex, reduced label) reached from `start` by paths whose
    reduced prefix labels never exceed `max_len` letters.
    """
    seen = set([(start, ())])
    frontier = [(start, ())]
    while frontier:
        v, label = frontier.pop()
        steps = [((a, 1), t) for o, a, t in g.out_edges(v)]
        steps += [((a, -1), o) for o, a, t in g.in_edges(v)]
        for x, w in steps:
            if label and label[-1] == (x[0], -x[1]):
                new = label[:-1]
            else:
                new = label + (x,)
            if len(new) <= max_len and (w, new) not in seen:
                seen.add((w, new))
                frontier.append((w, new))
    return seen


def reduced_words(letters, max_len):
    signed = [(a, s) for a in letters for s in (1, -1)]
    out = [()]
    level = [()]
    for n in range(max_len):
        level = [w + (x,) for w in level for x in signed
                 if not (w and w[-1] == (x[0], -x[1]))]
        out.extend(level)
    return out


def classes(e):
    return set(e.classes())


def test_parse_and_text():
    """
    Test reading a graph file and writing it back
    """
    g = dg.read_graph(fold_file)
    npt.assert_equal(g.alphabet.letters, 'abc')
    npt.assert_equal(g.n_vertices, 4)
    npt.assert_equal(g.n_edges, 5)
    again = dg.LabeledDigraph.parse(g.to_text(), g.alphabet)
    npt.assert_equal(again, g)
    npt.assert_(not g.is_folded())
    lone = dg.LabeledDigraph.parse("x a y\nz # isolated\n")
    npt.assert_equal(lone.n_vertices, 3)
    npt.assert_(not lone.is_connected())
    npt.assert_raises(DomainError, dg.LabeledDigraph.parse, "x a\n")


def test_fold_example():
    """
    Test folding the example graph file
    """
    g = dg.read_graph(fold_file)
    equiv, folded = dg.stallings_fold(g)
    npt.assert_equal(classes(equiv),
                     set([frozenset('wx'), frozenset('yz')]))
    npt.assert_equal(folded.sorted_edges(),
                     [('w', 'a', 'y'), ('w', 'c', 'w'), ('y', 'b', 'w')])
    npt.assert_(folded.is_folded())
    npt.assert_equal(dg.rank(g), 2)
    h = dg.group_at(g, 'x')
    npt.assert_equal([str(b) for b in h.basis], ['c', 'a b'])
    npt.assert_equal(h.base, 'w')


def test_fold_joins_trivial_paths():
    """
    Test that the fold relates two vertices exactly when a path with trivial
    label joins them
    """
    rs = np.random.RandomState(42)
    for trial in range(120):
        g = random_digraph(rs)
        equiv, folded = dg.stallings_fold(g)
        npt.assert_(folded.is_folded())
        # Each merge adds at most one letter to the height of the paths
        bound = g.n_vertices - 1
        for x in g.vertices:
            joined = set(v for v, label in reachable_labels(g, x, bound)
                         if len(label) == 0)
            npt.assert_equal(joined, set(v for v in g.vertices
                                         if equiv.related(x, v)))


def test_fold_is_idempotent():
    """
    Test that folding a folded graph changes nothing
    """
    rs = np.random.RandomState(8)
    for trial in range(60):
        folded = dg.stallings_fold(random_digraph(rs))[1]
        equiv, again = dg.stallings_fold(folded)
        npt.assert_equal(equiv.n_classes, folded.n_vertices)
        npt.assert_equal(again.sorted_vertices(), folded.sorted_vertices())
        npt.assert_equal(again.sorted_edges(), folded.sorted_edges())


def test_group_against_closed_paths():
    """
    Test membership of short words against closed paths of the unfolded
    graph
    """
    rs = np.random.RandomState(5)
    for trial in range(60):
        g = random_digraph(rs, max_vertices=4, max_edges=7)
        h = dg.group_at(g, 0)
        bound = 3 + g.n_vertices - 1
        closed = set(label for v, label in reachable_labels(g, 0, bound)
                     if v == 0 and len(label) <= 3)
        members = set(w for w in reduced_words('ab', 3)
                      if h.contains(fg.GroupElement(w)))
        npt.assert_equal(members, closed)


def test_rank_against_cycle_rank():
    """
    Test the rank of a fold against the cycles of the unfolded graph
    """
    rs = np.random.RandomState(6)
    for trial in range(100):
        comp = random_digraph(rs).component(0)
        h = dg.group_at(comp, 0)
        folded = dg.stallings_fold(comp)[1]
        npt.assert_equal(h.rank, folded.n_edges - folded.n_vertices + 1)
        npt.assert_equal(dg.rank(comp), h.rank)
        cycles = comp.n_edges - comp.n_vertices + 1
        npt.assert_(h.rank <= cycles)
        if comp.is_folded():
            npt.assert_equal(h.rank, cycles)
        labels, tree = dg.spanning_tree_labels(comp, 0)
        gens = [labels[o] * fg.GroupElement([(a, 1)]) * labels[t].inverse()
                for o, a, t in comp.edges if (o, a, t) not in tree]
        spanned = fg.subgroup_from(gens, AB)
        npt.assert_(spanned.equals(h))
        npt.assert_equal(spanned.rank, h.rank)


def test_subrelations_preserve_groups():
    """
    Test that equivalences finer than the fold preserve the group
    """
    rs = np.random.RandomState(12)
    for trial in range(60):
        comp = random_digraph(rs).component(0)
        equiv = dg.stallings_fold(comp)[0]
        npt.assert_(dg.is_group_preserving(comp, equiv))
        pairs = []
        for c in equiv.classes():
            members = sorted(c)
            rs.shuffle(members)
            pairs.extend((x, y) for x, y in zip(members, members[1:])
                         if rs.randint(2))
        sub = dg.VertexEquivalence(comp.vertices, pairs)
        npt.assert_(sub.is_subrelation_of(equiv))
        npt.assert_(dg.is_group_preserving(comp, sub))


def test_group_contains_cycles():
    """
    Test that labels of closed paths at the base lie in the group
    """
    g = dg.read_graph(fold_file)
    h = dg.group_at(g, 'x')
    loop = dg.Path(g, [(('x', 'a', 'y'), 1), (('y', 'b', 'x'), 1)])
    npt.assert_equal(loop.origin, loop.terminus)
    npt.assert_(h.contains(loop.label))
    detour = dg.Path(g, [(('x', 'a', 'z'), 1), (('z', 'b', 'w'), 1),
                         (('w', 'c', 'x'), 1)])
    npt.assert_equal(str(detour.label), 'a b c')
    npt.assert_(h.contains(detour.label * loop.label))
    npt.assert_(not h.contains(fg.GroupElement.parse('a')))


def test_paths():
    """
    Test path labels, inverses and concatenation
    """
    g = dg.read_graph(fold_file)
    p = dg.Path(g, [(('x', 'a', 'y'), 1), (('y', 'b', 'x'), 1)])
    npt.assert_equal(p.word(), 'ab')
    npt.assert_equal(p.vertices(), ['x', 'y', 'x'])
    q = p.inverse()
    npt.assert_equal(str(q.label), "b' a'")
    npt.assert_(not q.is_positive())
    npt.assert_raises(DomainError, q.word)
    npt.assert_((p * q).label.is_identity())
    npt.assert_raises(DomainError, dg.Path, g, [(('y', 'b', 'x'), 1),
                                                (('y', 'b', 'x'), 1)])
    npt.assert_raises(DomainError, dg.Path, g, [])
    npt.assert_equal(len(dg.Path(g, [], start='x')), 0)


def test_quotient_and_morphisms():
    """
    Test quotients, kernels and onto morphisms
    """
    g = dg.read_graph(fold_file)
    e = dg.VertexEquivalence(g.vertices, [('y', 'z')])
    q = dg.quotient(g, e)
    npt.assert_equal(q.n_vertices, 3)
    npt.assert_equal(q.n_edges, 4)
    f = dg.DigraphMorphism(g, q, dict((v, e.representative(v))
                                      for v in g.vertices))
    npt.assert_(f.is_onto())
    npt.assert_equal(classes(f.kernel()), classes(e))
    npt.assert_(dg.VertexEquivalence.identity(g.vertices).is_subrelation_of(e))
    npt.assert_(not e.is_subrelation_of(
        dg.VertexEquivalence.identity(g.vertices)))
    npt.assert_raises(DomainError, dg.quotient, g,
                      dg.VertexEquivalence(['x', 'y']))


def test_group_preserving():
    """
    Test group preservation: folding never changes the group, a collapse does
    """
    g = dg.read_graph(fold_file)
    equiv, folded = dg.stallings_fold(g)
    npt.assert_(dg.is_group_preserving(g, equiv))
    everything = dg.VertexEquivalence(g.vertices, [('x', 'y'), ('y', 'z'),
                                                   ('z', 'w')])
    npt.assert_(not dg.is_group_preserving(g, everything))


def test_output():
    """
    Test the dictionary and DOT forms of a labeled digraph
    """
    g = dg.read_graph(fold_file)
    folded = dg.stallings_fold(g)[1]
    d = folded.to_dict()
    npt.assert_equal(d['vertices'], ['w', 'y'])
    dot = folded.to_dot(name='F', base='w')
    npt.assert_('"w" [shape=doublecircle]' in dot)
    npt.assert_('"w" -> "y" [label="a"]' in dot)
    G = folded.to_networkx()
    npt.assert_equal(G.number_of_edges(), 3)
