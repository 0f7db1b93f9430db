import functools

import numpy.testing as npt

import wordgroups.casestudy as cs
import wordgroups.extension as ext
from wordgroups.language import LanguageOracle
from wordgroups.utils import (HorizonExceeded, PreconditionError,
                              UnsupportedSubstitution)


@functools.lru_cache(maxsize=None)
def oracle(horizon):
    return LanguageOracle(cs.PHI, horizon)


def test_presets():
    """
    Test the bundled substitutions
    """
    npt.assert_equal(str(cs.PHI), "0:0001,1:02,2:001")
    npt.assert_equal(list(cs.PRESETS)[:3], ['phi', 'thue-morse', 'fibonacci'])
    npt.assert_equal(len(cs.OPEN_CANDIDATES), 3)
    for s in cs.PRESETS.values():
        npt.assert_(s.is_primitive())


def test_sequences():
    """
    Test the words w_k, x_k, y_k and the depths d_k
    """
    seq = cs.CaseStudySequences(2)
    npt.assert_equal(seq.w[0], cs.W0)
    npt.assert_equal([len(w) for w in seq.w], [12, 44, 156])
    npt.assert_equal(seq.d, [4, 11, 36])
    npt.assert_equal(seq.x, ['', '00', '000100010'])
    npt.assert_equal(seq.y[0], cs.Y0)
    npt.assert_equal(seq.w[1], cs.PHI(cs.W0) + '00')
    npt.assert_equal(seq.required_horizon(2), 193)


def test_cutting_points():
    """
    Test cutting points and deconcatenation of images
    """
    npt.assert_equal(cs.cutting_points(cs.PHI, '02'), frozenset([0, 4]))
    npt.assert_equal(cs.deconcatenate(cs.PHI, '000102'), '01')
    npt.assert_equal(cs.deconcatenate(cs.PHI, cs.PHI(cs.W0)), cs.W0)
    npt.assert_equal(cs.deconcatenate(cs.PHI, '00'), None)
    npt.assert_raises(UnsupportedSubstitution, cs.deconcatenate,
                      cs.FIBONACCI, '010')


def test_step1():
    """
    Test the special factors of length 2 and 3 and their descendants
    """
    rep = cs.verify_step1(oracle(64))
    npt.assert_(rep.passed)
    npt.assert_equal(rep.step, 1)
    npt.assert_(len(rep.claims) >= 7)


def test_step2():
    """
    Test the four bispecial factors starting with 001
    """
    rep = cs.verify_step2(oracle(64))
    npt.assert_(rep.passed)
    npt.assert_('0010, 00100, 00100010, 001000100010' in
                rep.claims[0].description)


def test_step3():
    """
    Test the stability of extension graphs on both kinds of endings
    """
    o = oracle(64)
    for x in ['00010', '000100', '000100010']:
        npt.assert_(cs.verify_step3(o, x).passed)
    npt.assert_raises(PreconditionError, cs.verify_step3, o, '0010')
    loose = cs.verify_step3(o, '0010', strict=False)
    npt.assert_(not loose.passed)
    npt.assert_(cs.verify_step3_all(o, 40).passed)


def test_step4():
    """
    Test that the disconnected factors are exactly the w_k
    """
    rep = cs.verify_step4(oracle(193), 2)
    npt.assert_(rep.passed)
    npt.assert_equal(ext.disconnected_words(oracle(193), 191),
                     cs.CaseStudySequences(2).w)


def test_step5():
    """
    Test suffix-connectedness of w_0, w_1 and w_2 at depth d_k
    """
    rep = cs.verify_step5(oracle(193), 2)
    npt.assert_(rep.passed)
    npt.assert_equal(ext.suffix_connected_depth(oracle(193), cs.W0), 4)


def test_step5_horizon():
    """
    Test that step 5 reports the horizon it needs
    """
    try:
        cs.verify_step5(oracle(64), 2)
    except HorizonExceeded as e:
        npt.assert_equal(e.required, 193)
    else:
        raise AssertionError("HorizonExceeded was not raised")
    npt.assert_(cs.verify_step5(oracle(64), 1).passed)


def test_case_study_report():
    """
    Test the full report and its markdown and dictionary forms
    """
    reports = cs.verify_case_study(oracle(193), 2)
    npt.assert_equal([r.step for r in reports], [1, 2, 3, 4, 5])
    npt.assert_(all(r.passed for r in reports))
    md = reports[4].to_markdown()
    npt.assert_(md.startswith('## Step 5'))
    npt.assert_(md.rstrip().endswith('**PASS**'))
    d = reports[0].to_dict()
    npt.assert_equal(sorted(d), ['claims', 'passed', 'step', 'title'])
    npt.assert_equal(sorted(d['claims'][0]), ['description', 'detail',
                                              'passed'])
