import functools
import warnings

import numpy.testing as npt

import wordgroups.freegroup as fg
import wordgroups.rauzy as rz
from wordgroups.language import LanguageOracle, Substitution
from wordgroups.utils import DomainError, PreconditionError

PHI = "0:0001,1:02,2:001"
THUE_MORSE = "0:01,1:10"


@functools.lru_cache(maxsize=None)
def oracle(text, horizon):
    return LanguageOracle(Substitution.from_string(text), horizon)


def test_rauzy_graph():
    """
    Test the vertices and edges of G_{1,1} for phi
    """
    g = rz.rauzy_graph(oracle(PHI, 10), 1, 1)
    npt.assert_equal(g.graph.sorted_vertices(), ['0', '1', '2'])
    npt.assert_equal(g.graph.sorted_edges(),
                     [('0', '0', '0'), ('0', '1', '1'), ('0', '2', '2'),
                      ('1', '0', '0'), ('2', '0', '0')])
    npt.assert_equal(g.edge('01'), ('0', '1', '1'))
    npt.assert_equal(g.window(('1', '0', '0')), '10')
    npt.assert_raises(DomainError, g.edge, '010')
    npt.assert_raises(DomainError, rz.rauzy_graph, oracle(PHI, 10), 1, 2)


def test_small_levels_give_full_group():
    """
    Test that G_{1,1} folds to a bouquet and the small groups are F(A)
    """
    o = oracle(PHI, 10)
    g = rz.rauzy_graph(o, 1, 1)
    h = g.group('0')
    npt.assert_equal(h.graph.n_vertices, 1)
    npt.assert_equal(h.graph.n_edges, 3)
    full = fg.full_group(o.alphabet)
    npt.assert_(h.equals(full))
    npt.assert_(rz.rauzy_group(o, '', '').equals(full))
    npt.assert_(rz.rauzy_group(o, '', '0').equals(full))
    npt.assert_raises(DomainError, rz.rauzy_group, o, '1', '1')


def test_lemma_path():
    """
    Test the positive path spelled by the windows of a factor
    """
    o = oracle(PHI, 10)
    g = rz.rauzy_graph(o, 2, 1)
    p = rz.lemma_path(g, '0010')
    npt.assert_equal(p.vertices(), ['00', '01', '10'])
    npt.assert_equal(p.word(), '01')
    npt.assert_raises(DomainError, rz.lemma_path, g, '00')
    npt.assert_raises(DomainError, rz.lemma_path, g, '0000')


def test_level_morphisms():
    """
    Test the init and tail maps between levels
    """
    o = oracle(PHI, 10)
    maps = rz.level_morphisms(rz.rauzy_graph(o, 2, 1))
    npt.assert_(maps.init.is_onto())
    npt.assert_(maps.tail.is_onto())
    npt.assert_equal(maps.init('01'), '0')
    npt.assert_equal(maps.tail('01'), '1')
    top = rz.level_morphisms(rz.rauzy_graph(o, 2, 2))
    npt.assert_equal(top.init, None)
    npt.assert_(top.tail.is_onto())
    npt.assert_raises(DomainError, rz.level_morphisms,
                      rz.rauzy_graph(o, 0, 0))


def test_ker_tail():
    """
    Test that ker(tail) is group-preserving under the depth hypothesis
    """
    o = oracle(PHI, 10)
    npt.assert_(rz.check_ker_tail_group_preserving(o, 2, 1, 1))
    npt.assert_(rz.check_ker_tail_group_preserving(o, 3, 2, 2))
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        tm = oracle(THUE_MORSE, 10)
        npt.assert_(rz.check_ker_tail_group_preserving(tm, 3, 3, 3))


def test_preconditions():
    """
    Test that failed hypotheses warn, or raise when strict
    """
    o = oracle(PHI, 10)
    npt.assert_raises(PreconditionError, rz.check_ker_tail_group_preserving,
                      o, 2, 0, 1, strict=True)
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter('always')
        rz.check_ker_tail_group_preserving(o, 2, 0, 1)
        npt.assert_(len(w) >= 1)
    npt.assert_raises(PreconditionError, rz.check_ker_init_group_preserving,
                      o, 2, 2, strict=True)


def test_ker_init():
    """
    Test that ker(init) is group-preserving for a connected language
    """
    o = oracle(PHI, 10)
    npt.assert_(rz.check_ker_init_group_preserving(o, 2, 0))
    npt.assert_(rz.check_ker_init_group_preserving(o, 3, 1))


def test_suffix_group_collapse():
    """
    Test that H_{u,e} only depends on the last letter of u
    """
    out = rz.check_suffix_group_collapse(oracle(PHI, 10), 3)
    npt.assert_equal(list(out)[:3], ['0', '1', '2'])
    npt.assert_(all(out.values()))
    npt.assert_equal(len(out), 3 + 5 + 7)


def test_positive_paths():
    """
    Test that positive path labels are exactly the factors
    """
    o = oracle(PHI, 10)
    npt.assert_(rz.check_positive_paths(o, 2, 1))
    npt.assert_(rz.check_positive_paths(oracle(THUE_MORSE, 10), 3, 2))
    g = rz.rauzy_graph(o, 1, 0)
    into = set(w for _, _, w in rz.positive_paths(g, 1, end='1'))
    npt.assert_equal(into, set(['0']))


def test_path_comparability():
    """
    Test comparability of path labels into and out of uv
    """
    o = oracle(PHI, 10)
    for u, v in [('0', '0'), ('00', '1'), ('1', '00')]:
        for length in range(1, 4):
            npt.assert_(rz.check_path_comparability(o, u, v, length))


def test_rauzy_lattice():
    """
    Test the inclusions along tail and init and the shift conjugation
    """
    for text in [PHI, THUE_MORSE]:
        o = oracle(text, 10)
        for n in range(1, 4):
            for w in o.words(n):
                for i in range(n + 1):
                    u, v = w[:i], w[i:]
                    h = rz.rauzy_group(o, u, v)
                    if len(u) > 0:
                        npt.assert_(h.is_subgroup_of(
                            rz.rauzy_group(o, u[1:], v)))
                        a = u[-1]
                        shifted = rz.rauzy_group(o, u[:-1], a + v)
                        a_el = fg.GroupElement.from_word(a)
                        npt.assert_(h.equals(shifted.conjugate(a_el)))
                    if len(v) > 0:
                        npt.assert_(h.is_subgroup_of(
                            rz.rauzy_group(o, u, v[:-1])))


def test_to_dict():
    """
    Test the dictionary form with groups
    """
    g = rz.rauzy_graph(oracle(PHI, 10), 1, 1)
    d = g.to_dict(groups=True)
    npt.assert_equal((d['level'], d['label_index']), (1, 1))
    npt.assert_equal(sorted(d['groups']), ['0', '1', '2'])
    npt.assert_(g.to_dot(base='0').startswith('digraph'))
