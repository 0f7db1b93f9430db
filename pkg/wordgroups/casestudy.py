"""
wordgroups.casestudy
--------------------

The substitution phi: 0 -> 0001, 1 -> 02, 2 -> 001, whose language has
infinitely many disconnected factors and is nevertheless suffix-connected,
checked step by step:

1. the right special factors of length 2 and left special factors of
   length 3, which fix the extensions of all longer special factors;
2. the bispecial factors starting with 001, the longest of which, w_0, is
   the smallest disconnected factor;
3. the stability of extension graphs under x -> phi(x)0 and
   x -> phi(x)00;
4. the disconnected factors are exactly the words w_k;
5. every w_k is suffix-connected at depth d_k.

The module also bundles a few other substitutions used as examples.

"""
import collections
import logging

import wordgroups.extension as ext
from wordgroups.language import Substitution
from wordgroups.utils import (HorizonExceeded, PreconditionError,
                              UnsupportedSubstitution, show_set, show_word)

logger = logging.getLogger(__name__)

PHI = Substitution.from_string("0:0001,1:02,2:001")
THUE_MORSE = Substitution.from_string("0:01,1:10")
FIBONACCI = Substitution.from_string("0:01,1:0")

# Likely suffix-connected; for experiments only.
OPEN_CANDIDATES = (Substitution.from_string("0:100,1:032,2:232,3:03"),
                   Substitution.from_string("0:01,1:2,2:3,3:02"),
                   Substitution.from_string("0:12,1:2,2:01"))

PRESETS = collections.OrderedDict([('phi', PHI),
                                   ('thue-morse', THUE_MORSE),
                                   ('fibonacci', FIBONACCI),
                                   ('candidate-1', OPEN_CANDIDATES[0]),
                                   ('candidate-2', OPEN_CANDIDATES[1]),
                                   ('candidate-3', OPEN_CANDIDATES[2])])

W0 = '001000100010'
Y0 = '000100010'

# Fixes 0 and swaps 1 and 2:
SIGMA = {'0': '0', '1': '2', '2': '1'}


class CaseStudySequences(object):
    """
    The words w_k, x_k, y_k and depths d_k for k = 0, ..., k_max.

    w_0 = 001000100010 and w_{k+1} = phi(w_k)00 for even k, phi(w_k)0 for
    odd k; d_k = |phi^k(001)| + 1; x_k = init(phi^k(2)); y_k is w_k without
    its first d_k - 1 letters.
    """
    def __init__(self, k_max=2, substitution=PHI):
        s = substitution
        self.k_max = k_max
        self.substitution = s
        self.w = [W0]
        for k in range(k_max):
            self.w.append(s(self.w[k]) + ('00' if k % 2 == 0 else '0'))
        self.d = [s.image_length('001', k) + 1 for k in range(k_max + 1)]
        self.x = [s.power('2', k)[:-1] for k in range(k_max + 1)]
        self.y = [self.w[k][self.d[k] - 1:] for k in range(k_max + 1)]

    def __repr__(self):
        return "CaseStudySequences(k_max=%d)" % self.k_max

    def required_horizon(self, k):
        """
        The horizon needed to build the depth-d_k suffix extension graph of
        w_k.
        """
        return len(self.w[k]) + self.d[k] + 1


def cutting_points(s, z):
    """
    The positions of s(z) where the image of a letter of z starts.
    """
    return frozenset(len(s(z[:i])) for i in range(len(z)))


def deconcatenate(s, image):
    """
    The word z with s(z) = image, or None when there is none.

    Raises UnsupportedSubstitution unless the images form a prefix code.
    """
    if not s.is_prefix_code():
        raise UnsupportedSubstitution("The images of %s are not a prefix code"
                                      % s)
    s.alphabet.check(image)
    out = []
    i = 0
    while i < len(image):
        for a in s.alphabet:
            if image.startswith(s.images[a], i):
                out.append(a)
                i += len(s.images[a])
                break
        else:
            return None
    return ''.join(out)


Claim = collections.namedtuple('Claim', ['description', 'passed', 'detail'])


class StepReport(object):
    """
    A list of claims checked for one step, each passed or failed.
    """
    def __init__(self, step, title):
        self.step = step
        self.title = title
        self.claims = []

    def check(self, description, passed, detail=''):
        passed = bool(passed)
        self.claims.append(Claim(description, passed, detail))
        if not passed:
            logger.info("Step %s: failed: %s %s", self.step, description,
                        detail)
        return passed

    @property
    def passed(self):
        return all(c.passed for c in self.claims)

    def to_dict(self):
        return {'step': self.step, 'title': self.title,
                'passed': self.passed,
                'claims': [c._asdict() for c in self.claims]}

    def to_markdown(self):
        lines = ['## Step %s: %s' % (self.step, self.title), '']
        for c in self.claims:
            mark = 'x' if c.passed else ' '
            line = '- [%s] %s' % (mark, c.description)
            if c.detail:
                line += ' (%s)' % c.detail
            lines.append(line)
        lines.append('')
        lines.append('**%s**' % ('PASS' if self.passed else 'FAIL'))
        return '\n'.join(lines) + '\n'


def _set(o, words):
    return show_set(words, o.alphabet.key)


def verify_step1(o, max_len=None):
    """
    Special factors: 00 and 10 are the only right special factors of length
    2, with right extensions {0, 1} and {0, 2}; 000 and 001 the only left
    special factors of length 3, with left extensions {1, 2} and {0, 1}.

    Every longer right (left) special factor, up to `max_len` (default:
    horizon - 1), ends (starts) with one of them and has the same
    extensions.
    """
    o.require(6)
    if max_len is None:
        max_len = o.horizon - 1
    rep = StepReport(1, 'special factors')
    right = dict((w, ext.right_extensions(o, w)) for w in o.words(2))
    right = dict((w, r) for w, r in right.items() if len(r) >= 2)
    rep.check('the right special factors of length 2 are 00 and 10',
              set(right) == set(['00', '10']), _set(o, right))
    rep.check('rext(00) = {0, 1}',
              ext.right_extensions(o, '00') == frozenset('01'))
    rep.check('rext(10) = {0, 2}',
              ext.right_extensions(o, '10') == frozenset('02'))
    left = dict((w, ext.left_extensions(o, w)) for w in o.words(3))
    left = dict((w, l) for w, l in left.items() if len(l) >= 2)
    rep.check('the left special factors of length 3 are 000 and 001',
              set(left) == set(['000', '001']), _set(o, left))
    rep.check('lext(000) = {1, 2}',
              ext.left_extensions(o, '000') == frozenset('12'))
    rep.check('lext(001) = {0, 1}',
              ext.left_extensions(o, '001') == frozenset('01'))
    stated_right = {'00': frozenset('01'), '10': frozenset('02')}
    stated_left = {'000': frozenset('12'), '001': frozenset('01')}
    bad = []
    for n in range(2, max_len + 1):
        nleft, nright = ext.extension_counts(o, n)
        for w in o.words(n):
            if nright[w] >= 2:
                r = ext.right_extensions(o, w)
                if stated_right.get(w[-2:]) != r:
                    bad.append(w)
            if n >= 3 and nleft[w] >= 2:
                l = ext.left_extensions(o, w)
                if stated_left.get(w[:3]) != l:
                    bad.append(w)
    rep.check('longer special factors up to length %d inherit these'
              ' extensions' % max_len, len(bad) == 0, _set(o, bad))
    return rep


def verify_step2(o, max_len=12):
    """
    The bispecial factors starting with 001 are 0010, 00100, 00100010 and
    w_0, and w_0 is the smallest disconnected factor.
    """
    o.require(max_len + 2)
    rep = StepReport(2, 'bispecial factors starting with 001')
    found = [w for w in ext.bispecial_words(o, max_len) if w.startswith('001')]
    expected = ['0010', '00100', '00100010', W0]
    rep.check('the bispecial factors starting with 001 are %s'
              % ', '.join(expected), found == expected, ', '.join(found))
    disconnected = ext.disconnected_words(o, max_len)
    rep.check('every factor shorter than %d is connected' % len(W0),
              all(len(w) >= len(W0) for w in disconnected),
              ', '.join(disconnected))
    rep.check('%s is disconnected' % W0, W0 in disconnected)
    for w in ['00010', '000100', '000100010']:
        g = ext.extension_graph(o, w)
        rep.check('%s is bispecial and connected' % w,
                  ext.classify(o, w).bispecial and g.is_connected())
    return rep


def _stability_target(s, x):
    if x.endswith('00'):
        return s(x) + '0'
    if x.endswith('10'):
        return s(x) + '00'
    return None


def verify_step3(o, x, strict=True):
    """
    For a bispecial x starting with 000, the permutation fixing 0 and
    swapping 1 and 2 maps ext(x) isomorphically onto ext(y), where
    y = phi(x)0 if x ends with 00 and y = phi(x)00 if x ends with 10.

    Raises PreconditionError when x is not such a word and `strict` is set;
    otherwise that is reported as a failed claim.
    """
    rep = StepReport(3, 'stability of %s' % show_word(x))
    s = o.substitution
    target = _stability_target(s, x)
    ok = (x.startswith('000') and target is not None and o.contains(x) and
          ext.classify(o, x).bispecial)
    if not ok:
        msg = '%s is not a bispecial factor starting with 000' % x
        if strict:
            raise PreconditionError(msg)
        rep.check(msg, False)
        return rep
    o.require(len(target) + 2)
    gx = ext.extension_graph(o, x)
    gy = ext.extension_graph(o, target)

    def sigma(w):
        return ''.join(SIGMA[a] for a in w)

    rep.check('%s is bispecial' % target, ext.classify(o, target).bispecial)
    rep.check('the permutation is bijective on left vertices',
              set(sigma(a) for a in gx.left) == set(gy.left),
              '%s -> %s' % (_set(o, gx.left), _set(o, gy.left)))
    rep.check('the permutation is bijective on right vertices',
              set(sigma(b) for b in gx.right) == set(gy.right),
              '%s -> %s' % (_set(o, gx.right), _set(o, gy.right)))
    rep.check('the permutation maps the edges onto the edges',
              set((sigma(a), sigma(b)) for a, b in gx.edges) ==
              set(gy.edges))
    return rep


def verify_step3_all(o, max_len):
    """
    Step 3 on every bispecial factor starting with 000 of length at most
    `max_len` whose target fits the horizon.
    """
    s = o.substitution
    rep = StepReport(3, 'stability of bispecial factors up to length %d'
                     % max_len)
    tested = 0
    for x in ext.bispecial_words(o, max_len):
        if not x.startswith('000'):
            continue
        target = _stability_target(s, x)
        if target is None or len(target) + 2 > o.horizon:
            continue
        sub = verify_step3(o, x)
        tested += 1
        rep.check('ext(%s) is isomorphic to ext(%s)' % (x, target),
                  sub.passed)
    logger.info("Step 3 checked on %d words", tested)
    return rep


def verify_step4(o, k_max=2, len_max=None):
    """
    The disconnected factors of length at most `len_max` (default: horizon
    - 2) are exactly the words w_k of that length.
    """
    if len_max is None:
        len_max = o.horizon - 2
    o.require(len_max + 2)
    seq = CaseStudySequences(k_max, o.substitution)
    while len(seq.w[-1]) <= len_max:
        seq = CaseStudySequences(seq.k_max + 1, o.substitution)
    rep = StepReport(4, 'disconnected factors')
    expected = [w for w in seq.w if len(w) <= len_max]
    found = ext.disconnected_words(o, len_max)
    rep.check('the disconnected factors of length at most %d are w_0, ...,'
              ' w_%d' % (len_max, len(expected) - 1), found == expected,
              ', '.join(found))
    for k in range(k_max + 1):
        w = seq.w[k]
        rep.check('w_%d ends with %s' % (k, '10' if k % 2 == 0 else '00'),
                  w.endswith('10' if k % 2 == 0 else '00'))
        if k >= 1:
            rep.check('w_%d starts with 000' % k, w.startswith('000'))
    rep.check('the lengths of w_k increase',
              all(len(a) < len(b) for a, b in zip(seq.w, seq.w[1:])))
    return rep


def verify_step5(o, k_max=2):
    """
    Each w_k, k <= k_max, is suffix-connected at depth d_k, together with
    the word identities behind it.
    """
    s = o.substitution
    seq = CaseStudySequences(k_max, s)
    required = max(seq.required_horizon(k) for k in range(k_max + 1))
    if required > o.horizon:
        raise HorizonExceeded(required, o.horizon)
    rep = StepReport(5, 'suffix-connectedness of the w_k')
    rep.check('d_0 = 4 and y_0 = %s' % Y0, seq.d[0] == 4 and seq.y[0] == Y0)
    rep.check('lext_4(y_0) = {0001, 0102, 1001}',
              ext.left_extensions(o, Y0, 4) ==
              frozenset(['0001', '0102', '1001']))
    rep.check('rext_4(y_0) = {2000, 0010}',
              ext.right_extensions(o, Y0, 4) == frozenset(['2000', '0010']))
    for k in range(k_max + 1):
        w, d, x, y = seq.w[k], seq.d[k], seq.x[k], seq.y[k]
        p = s.power('001', k)
        rep.check('d_%d = |phi^%d(001)| + 1 = %d' % (k, k, d),
                  d == len(p) + 1)
        rep.check('w_%d = phi^%d(001) y_%d' % (k, k, k), w == p + y)
        rep.check('phi^%d(y_0) x_%d = y_%d' % (k, k, k),
                  s.power(Y0, k) + x == y)
        rep.check('x_%d is a prefix of phi^%d(2000) and phi^%d(0010)'
                  % (k, k, k),
                  s.power('2000', k).startswith(x) and
                  s.power('0010', k).startswith(x))
        rep.check('x_%d 0 is a prefix of phi^%d(0)' % (k, k),
                  s.power('0', k).startswith(x + '0'))
        if k < k_max:
            step = '00' if k % 2 == 0 else '0'
            rep.check('x_%d = phi(x_%d)%s' % (k + 1, k, step),
                      seq.x[k + 1] == s(x) + step)
        emb = ext.suffix_embedding(o, w, d)
        rep.check('the natural embedding of lext(w_%d) is right'
                  ' multiplication by phi^%d(001)' % (k, k),
                  all(img == a + p for a, img in emb.embedded.items()))
        if k >= 1:
            rep.check('lext(w_%d) = {1, 2}' % k,
                      set(emb.embedded) == set('12'))
        rep.check('w_%d is suffix-connected at depth %d' % (k, d),
                  emb.is_connected())
    return rep


def verify_case_study(o, k_max=2):
    """
    All five steps, with step 3 run on every eligible bispecial factor.
    """
    step3_len = min(o.horizon - 2, 64)
    return [verify_step1(o),
            verify_step2(o),
            verify_step3_all(o, step3_len),
            verify_step4(o, k_max),
            verify_step5(o, k_max)]
