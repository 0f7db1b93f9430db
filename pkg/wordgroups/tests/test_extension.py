import functools

import numpy.testing as npt

import wordgroups.extension as ext
from wordgroups.language import LanguageOracle, Substitution
from wordgroups.utils import DomainError, HorizonExceeded

PHI = "0:0001,1:02,2:001"
FIBONACCI = "0:01,1:0"
THUE_MORSE = "0:01,1:10"
W0 = '001000100010'


@functools.lru_cache(maxsize=None)
def oracle(text, horizon):
    return LanguageOracle(Substitution.from_string(text), horizon)


def test_extensions():
    """
    Test left and right extension sets of short factors
    """
    o = oracle(PHI, 16)
    npt.assert_equal(ext.left_extensions(o, '00'), frozenset('012'))
    npt.assert_equal(ext.right_extensions(o, '00'), frozenset('01'))
    npt.assert_equal(ext.right_extensions(o, '10'), frozenset('02'))
    npt.assert_equal(ext.left_extensions(o, '000'), frozenset('12'))
    npt.assert_equal(ext.left_extensions(o, '001'), frozenset('01'))
    npt.assert_equal(ext.right_extensions(o, '', 2),
                     frozenset(['00', '01', '02', '10', '20']))


def test_empty_word_graph():
    """
    Test that ext(epsilon) of phi is a tree with five edges
    """
    g = ext.extension_graph(oracle(PHI, 16), '')
    npt.assert_equal(g.sorted_edges(),
                     [('0', '0'), ('0', '1'), ('0', '2'), ('1', '0'),
                      ('2', '0')])
    npt.assert_equal(g.n_vertices, 6)
    npt.assert_equal(g.characteristic, 1)
    npt.assert_(g.is_tree())
    npt.assert_(ext.is_tree_graph(g))
    npt.assert_equal(ext.characteristic(g), 1)


def test_letter_graph():
    """
    Test the extension graph of a letter
    """
    g = ext.extension_graph(oracle(PHI, 16), '0')
    npt.assert_equal(g.sorted_edges(),
                     [('0', '0'), ('0', '1'), ('1', '0'), ('1', '2'),
                      ('2', '0')])
    npt.assert_(g.is_tree())


def test_smallest_disconnected_word():
    """
    Test the two components of ext(001000100010)
    """
    o = oracle(PHI, 16)
    g = ext.extension_graph(o, W0)
    npt.assert_equal(g.sorted_edges(), [('0', '2'), ('1', '0')])
    npt.assert_equal(g.n_components, 2)
    npt.assert_equal(ext.connected_components(g),
                     [(frozenset('0'), frozenset('2')),
                      (frozenset('1'), frozenset('0'))])
    npt.assert_equal(g.characteristic, 2)
    npt.assert_(g.same_component(lefts=['0'], rights=['2']))
    npt.assert_(not g.same_component(lefts=['0', '1']))
    npt.assert_(ext.is_forest(g))
    npt.assert_raises(DomainError, g.same_component, ['2'])


def test_non_neutral_word():
    """
    Test that 000100010 has characteristic zero
    """
    o = oracle(PHI, 16)
    npt.assert_equal(ext.extension_graph(o, '000100010').characteristic, 0)
    npt.assert_(not ext.is_neutral(o, '000100010'))
    npt.assert_(ext.is_neutral(o, ''))


def test_classify():
    """
    Test left, right and bispecial classification
    """
    o = oracle(PHI, 16)
    npt.assert_equal(tuple(ext.classify(o, '00')), (True, True, True))
    npt.assert_equal(tuple(ext.classify(o, '02')), (False, False, False))
    npt.assert_equal(tuple(ext.classify(o, '10')), (False, True, False))


def test_extension_graph_errors():
    """
    Test the domain and horizon checks of extension graphs
    """
    o = oracle(PHI, 16)
    npt.assert_raises(DomainError, ext.extension_graph, o, '11')
    npt.assert_raises(HorizonExceeded, ext.extension_graph, o, W0, 3, 2)


def test_bispecial_census():
    """
    Test the bispecial factors starting with 001 and the disconnected ones
    """
    o = oracle(PHI, 16)
    found = [w for w in ext.bispecial_words(o, 12) if w.startswith('001')]
    npt.assert_equal(found, ['0010', '00100', '00100010', W0])
    npt.assert_equal(ext.disconnected_words(o, 12), [W0])
    npt.assert_(ext.is_connected_language(o, 11))
    npt.assert_(not ext.is_connected_language(o, 12))
    npt.assert_(not ext.is_neutral_language(o, 12))
    npt.assert_(not ext.is_tree_set(o, 12))


def test_extension_counts():
    """
    Test that the counts agree with the extension sets
    """
    o = oracle(PHI, 16)
    nleft, nright = ext.extension_counts(o, 5)
    for w in o.words(5):
        npt.assert_equal(nleft[w], len(ext.left_extensions(o, w)))
        npt.assert_equal(nright[w], len(ext.right_extensions(o, w)))


def test_suffix_embedding():
    """
    Test the natural embedding of lext(w_0) at depth 4
    """
    o = oracle(PHI, 18)
    emb = ext.suffix_embedding(o, W0, 4)
    npt.assert_equal(emb.embedded, {'0': '0001', '1': '1001'})
    npt.assert_(emb.is_connected())
    npt.assert_(not ext.suffix_embedding(o, W0, 1).is_connected())
    npt.assert_('style=dashed' in emb.to_dot())
    npt.assert_equal(emb.to_dict()['depth'], 4)
    npt.assert_raises(DomainError, ext.suffix_embedding, o, W0, 14)


def test_suffix_connected_depth():
    """
    Test the smallest depth of suffix-connectedness
    """
    o = oracle(PHI, 18)
    npt.assert_equal(ext.suffix_connected_depth(o, W0), 4)
    npt.assert_equal(ext.suffix_connected_depth(o, '00'), 1)
    npt.assert_raises(DomainError, ext.suffix_connected_depth, o, '')
    npt.assert_raises(DomainError, ext.suffix_connected_depth, o, '11')
    tm = oracle(THUE_MORSE, 10)
    npt.assert_equal(ext.suffix_connected_depth(tm, '010', max_depth=4),
                     None)
    npt.assert_raises(DomainError, ext.suffix_connected_depth, o, '0',
                      max_depth=0)
    npt.assert_raises(DomainError, ext.prefix_connected_depth, o, '0',
                      max_depth=-1)


def test_suffix_connected_depth_horizon():
    """
    Test that the search reports the horizon it would need
    """
    o = oracle(PHI, 14)
    try:
        ext.suffix_connected_depth(o, W0)
    except HorizonExceeded as e:
        npt.assert_equal((e.required, e.depth), (15, 2))
    else:
        raise AssertionError("HorizonExceeded was not raised")


def test_me_suffix_connected():
    """
    Test (m, e)-suffix-connectedness on phi and Thue-Morse
    """
    o = oracle(PHI, 18)
    npt.assert_(ext.is_me_suffix_connected(o, 0, 1))
    npt.assert_(ext.is_me_suffix_connected(o, 3, 4))
    npt.assert_raises(DomainError, ext.is_me_suffix_connected, o, 2, 0)
    tm = oracle(THUE_MORSE, 10)
    npt.assert_(not ext.is_me_suffix_connected(tm, 3, 4))


def test_sturmian_tree_set():
    """
    Test that the Fibonacci language is a neutral, connected tree set
    """
    o = oracle(FIBONACCI, 12)
    npt.assert_(ext.is_tree_set(o, 8))
    npt.assert_(ext.is_neutral_language(o, 8))
    npt.assert_(ext.is_connected_language(o, 8))
    for w in o.words(6):
        npt.assert_equal(ext.suffix_connected_depth(o, w), 1)
        npt.assert_equal(ext.prefix_connected_depth(o, w), 1)


def test_thue_morse_empty_graph():
    """
    Test that ext(epsilon) of Thue-Morse is a four-cycle
    """
    g = ext.extension_graph(oracle(THUE_MORSE, 10), '')
    npt.assert_equal(g.n_edges, 4)
    npt.assert_equal(g.characteristic, 0)
    npt.assert_(g.is_connected())
    npt.assert_(not g.is_forest())


def test_graph_output():
    """
    Test the dictionary and DOT forms of an extension graph
    """
    g = ext.extension_graph(oracle(PHI, 16), W0)
    d = g.to_dict()
    npt.assert_equal(d['edges'], [['0', '2'], ['1', '0']])
    npt.assert_equal(d['components'], 2)
    dot = g.to_dot()
    npt.assert_(dot.startswith('graph'))
    npt.assert_('"L_0" -- "R_2"' in dot)


def test_extensions_grow_under_suffixes():
    """
    Test that rext(x) is contained in rext(tail x), and dually for lext
    """
    for text in [PHI, THUE_MORSE]:
        o = oracle(text, 16)
        for k in range(2, 9):
            for x in o.words(k):
                npt.assert_(ext.right_extensions(o, x) <=
                            ext.right_extensions(o, x[1:]))
                npt.assert_(ext.left_extensions(o, x) <=
                            ext.left_extensions(o, x[:-1]))


def test_edges_agree_with_oracle():
    """
    Test that (u, v) is an edge exactly when uwv is a factor
    """
    o = oracle(PHI, 16)
    for n in range(6):
        for w in o.words(n):
            for k, l in [(1, 1), (2, 1), (1, 2), (2, 2)]:
                g = ext.extension_graph(o, w, k, l)
                for u in g.left:
                    for v in g.right:
                        npt.assert_equal((u, v) in g.edges,
                                         o.contains(u + w + v))


def test_depth_one_suffix_graph():
    """
    Test that the depth 1 suffix extension graph is ext(w) itself
    """
    o = oracle(PHI, 16)
    for n in range(1, 8):
        for w in o.words(n):
            emb = ext.suffix_embedding(o, w, 1)
            g = ext.extension_graph(o, w)
            npt.assert_equal(emb.graph.left, g.left)
            npt.assert_equal(emb.graph.right, g.right)
            npt.assert_equal(emb.graph.edges, g.edges)
            npt.assert_equal(emb.embedded, dict((a, a) for a in g.left))


def test_suffix_embedding_is_injective():
    """
    Test that the natural embedding is injective at every depth
    """
    for text in [PHI, THUE_MORSE]:
        o = oracle(text, 16)
        for n in range(1, 7):
            for w in o.words(n):
                lext = ext.left_extensions(o, w)
                for d in range(1, n + 2):
                    emb = ext.suffix_embedding(o, w, d)
                    images = set(emb.embedded.values())
                    npt.assert_equal(len(images), len(lext))
                    npt.assert_(images <= set(emb.graph.left))
