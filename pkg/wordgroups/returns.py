"""
wordgroups.returns
------------------

Return sets and return groups, and the checks that tie them to Rauzy groups.

For uv in L, the return set Ret_{u,v} is the set of words r such that urv is
in L, starts and ends with uv, and contains exactly two occurrences of uv.
The return group K_{u,v} is the subgroup of the free group generated by
Ret_{u,v}. With uv empty, every letter is a return word.

Return sets are found by scanning a prefix of a fixed point of a power of the
substitution. A scan is accepted when the collected set did not change over
two doublings of the prefix and the longest stretch without an occurrence of
uv is under a quarter of the prefix.

"""
import collections
import logging
import warnings

import wordgroups.extension as ext
import wordgroups.freegroup as fg
import wordgroups.rauzy as rz
from wordgroups.language import fixed_point_prefix, occurrences
from wordgroups.utils import (DomainError, HorizonExceeded, show_set,
                              show_word)

logger = logging.getLogger(__name__)


class ReturnSet(object):
    """
    The return set Ret_{u,v}.

    Parameters
    ----------
    u, v : str
    words : iterable of str
    alphabet : Alphabet
    complete : bool
        Whether the scan met its stopping criterion.
    scan_length : int
        Length of the fixed-point prefix scanned last.
    """
    def __init__(self, u, v, words, alphabet, complete=True, scan_length=0):
        self.u = u
        self.v = v
        self.alphabet = alphabet
        self.words = tuple(alphabet.sorted(set(words)))
        self.complete = complete
        self.scan_length = scan_length

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, r):
        return r in self.words

    def __repr__(self):
        return "ReturnSet(%r, %r, %s)" % (self.u, self.v,
                                          show_set(self.words,
                                                   self.alphabet.key))

    def longest(self):
        """
        The shortlex-greatest word among the longest return words.
        """
        return self.words[-1]

    def elements(self):
        return [fg.GroupElement.from_word(r) for r in self.words]

    def to_dict(self):
        return {'u': self.u, 'v': self.v,
                'words': list(self.words),
                'complete': self.complete,
                'scan_length': self.scan_length}


def _scan(x, u, v):
    w = u + v
    occ = occurrences(x, w)
    found = set()
    if len(occ) == 0:
        return found, len(x)
    gaps = [occ[0], len(x) - occ[-1]]
    for j1, j2 in zip(occ, occ[1:]):
        found.add(x[j1 + len(u):j2 + len(u)])
        gaps.append(j2 - j1)
    return found, max(gaps)


def return_set(o, u, v, initial_scan=None, max_scan=2 ** 16):
    """
    Compute Ret_{u,v}.

    Parameters
    ----------
    o : LanguageOracle
    u, v : str
        With uv in the language.
    initial_scan : int, optional
        First prefix length. Default: the larger of 64 and 8 |uv|.
    max_scan : int
        The prefix is never doubled beyond this length (default: 2 ** 16).

    Returns
    -------
    ReturnSet
        With complete=False (and a warning) when the scan hit `max_scan`
        before settling.

    Notes
    -----
    Every word found is checked against the definition through the oracle,
    which therefore needs a horizon of at least the longest |urv|.
    """
    w = u + v
    if not o.contains(w):
        raise DomainError("%r is not in the language" % w)
    scan = initial_scan if initial_scan else max(64, 8 * len(w))
    previous = None
    stable = 0
    doublings = 0
    while True:
        x = fixed_point_prefix(o.substitution, scan)
        found, gap = _scan(x, u, v)
        if found == previous and gap < scan / 4.0:
            stable += 1
        else:
            stable = 0
        if stable >= 2:
            complete = True
            break
        if 2 * scan > max_scan:
            complete = False
            warnings.warn("Return set of (%s, %s) did not settle within a"
                          " prefix of length %d" % (show_word(u),
                                                    show_word(v), scan))
            break
        previous = found
        scan *= 2
        doublings += 1
    logger.debug("Return set of (%s, %s): %d words, prefix %d, %d doublings",
                 show_word(u), show_word(v), len(found), scan, doublings)
    if found:
        required = max(len(u + r + v) for r in found)
        if required > o.horizon:
            raise HorizonExceeded(required, o.horizon)
    for r in found:
        z = u + r + v
        if not (o.contains(z) and z.startswith(w) and z.endswith(w) and
                len(occurrences(z, w)) == 2):
            raise DomainError("%r is not a return word of (%s, %s); the"
                              " oracle disagrees with the fixed point"
                              % (r, show_word(u), show_word(v)))
    return ReturnSet(u, v, found, o.alphabet, complete, scan)


def return_group(o, u, v, returns=None):
    """
    The return group K_{u,v}, generated by a complete return set.
    """
    if returns is None:
        returns = return_set(o, u, v)
    if not returns.complete:
        raise DomainError("The return set of (%s, %s) is incomplete"
                          % (show_word(u), show_word(v)))
    return fg.subgroup_from(returns.elements(), o.alphabet)


class ZigzagReport(object):
    """
    The two inclusions K_{u,v} <= H_{u,v} and H_{u,sv} <= K_{u,v}, with s
    the longest return word.
    """
    def __init__(self, u, v, longest, k_in_h, h_in_k):
        self.u = u
        self.v = v
        self.longest = longest
        self.k_in_h = k_in_h
        self.h_in_k = h_in_k

    @property
    def passed(self):
        return self.k_in_h and self.h_in_k

    def to_dict(self):
        return {'u': self.u, 'v': self.v, 'longest': self.longest,
                'zigzag1': self.k_in_h, 'zigzag2': self.h_in_k}


def check_zigzag(o, u, v, returns=None):
    """
    Check that K_{u,v} <= H_{u,v} and H_{u,sv} <= K_{u,v}.

    The second group lives on the Rauzy graph of level |usv|, so the oracle
    needs a horizon of |usv| + 1.
    """
    if returns is None:
        returns = return_set(o, u, v)
    k = return_group(o, u, v, returns)
    s = returns.longest()
    o.require(len(u) + len(s) + len(v) + 1)
    h = rz.rauzy_group(o, u, v)
    h_sv = rz.rauzy_group(o, u, s + v)
    return ZigzagReport(u, v, s, k.is_subgroup_of(h), h_sv.is_subgroup_of(k))


def pairs(o, max_len):
    """
    All splittings (u, v) of factors uv of length at most `max_len`, in
    shortlex order of uv, then by |u|.
    """
    for m in range(max_len + 1):
        for w in o.words(m):
            for i in range(len(w) + 1):
                yield w[:i], w[i:]


class PairRecord(object):
    """
    The outcome of the rank, conjugacy and Rauzy group checks on one pair
    (u, v).
    """
    def __init__(self, u, v, returns, rank):
        self.u = u
        self.v = v
        self.returns = returns
        self.rank = rank
        self.rank_ok = None
        self.conjugate_to = None
        self.conjugate = None
        self.theorem = None
        self.zigzag = None

    @property
    def cardinality(self):
        return len(self.returns)

    @property
    def passed(self):
        checks = [self.rank_ok, self.conjugate, self.theorem]
        if self.zigzag is not None:
            checks.append(self.zigzag.passed)
        return all(c is not False for c in checks)

    def to_dict(self):
        zz = self.zigzag
        return {'u': self.u, 'v': self.v,
                'returnWords': list(self.returns.words),
                'cardinality': self.cardinality,
                'rank': self.rank,
                'conjugacyWitness': self.conjugate_to,
                'checks': {'rank': self.rank_ok,
                           'conjugate': self.conjugate,
                           'zigzag1': zz.k_in_h if zz else None,
                           'zigzag2': zz.h_in_k if zz else None,
                           'theorem': self.theorem}}


class TheoremReport(object):
    """
    Verification of the rank and conjugacy class of the return groups.
    """
    def __init__(self, n, c, suffix_connected, records):
        self.n = n
        self.c = c
        self.suffix_connected = suffix_connected
        self.records = records

    @property
    def expected_rank(self):
        return self.n - self.c + 1

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]

    @property
    def passed(self):
        return len(self.failures) == 0

    def to_dict(self):
        return {'n': self.n, 'c': self.c,
                'expectedRank': self.expected_rank,
                'suffixConnected': dict((str(m), ok) for m, ok in
                                        self.suffix_connected.items()),
                'passed': self.passed,
                'records': [r.to_dict() for r in self.records]}

    def to_text(self):
        lines = ['n = %d, c = %d, expected rank %d'
                 % (self.n, self.c, self.expected_rank)]
        for m, ok in self.suffix_connected.items():
            state = {True: 'yes', False: 'no', None: 'unknown'}[ok]
            lines.append('(%d, %d)-suffix-connected: %s' % (m, m + 1, state))
        for r in self.records:
            lines.append('(%s, %s): card %d, rank %d  %s'
                         % (show_word(r.u), show_word(r.v), r.cardinality,
                            r.rank, 'ok' if r.passed else 'FAIL'))
        lines.append('PASS' if self.passed else 'FAIL')
        return '\n'.join(lines) + '\n'


def verify_main_theorem(o, max_len, zigzag=True):
    """
    Check, for every (u, v) with |uv| <= max_len, that K_{u,v} has rank
    n - c + 1, that all the K_{u,v} are conjugate, and that K_{u,v} equals
    v H_{b,e} v^{-1} with b the last letter of uv.

    Parameters
    ----------
    o : LanguageOracle
    max_len : int
    zigzag : bool
        Also run `check_zigzag` on every pair (default: True).

    Returns
    -------
    TheoremReport

    Notes
    -----
    Suffix-connectedness is reported for the lengths up to `max_len` (None
    where the horizon is too small), never assumed. The pair (e, e) has
    every letter as return word: it is expected to have rank n, and it is
    left out of the conjugacy check when ext(e) is disconnected.
    """
    alphabet = o.alphabet
    n = len(alphabet)
    c = ext.extension_graph(o, '').n_components
    suffix_connected = collections.OrderedDict()
    for m in range(1, max_len + 1):
        try:
            suffix_connected[m] = ext.is_me_suffix_connected(o, m, m + 1)
        except HorizonExceeded:
            suffix_connected[m] = None
    letter_groups = dict((b, rz.rauzy_group(o, b, '')) for b in alphabet)
    empty_group = rz.rauzy_group(o, '', '')
    records = []
    reference = None
    for u, v in pairs(o, max_len):
        returns = return_set(o, u, v)
        k = return_group(o, u, v, returns)
        rec = PairRecord(u, v, returns, k.rank)
        w = u + v
        if len(w) == 0:
            rec.rank_ok = k.rank == n
            rec.theorem = k.equals(empty_group)
        else:
            rec.rank_ok = k.rank == n - c + 1
            v_inv = fg.GroupElement.from_word(v).inverse()
            rec.theorem = k.equals(letter_groups[w[-1]].conjugate(v_inv))
        if len(w) > 0 or c == 1:
            if reference is None:
                reference = (rec, k)
            rec.conjugate_to = [reference[0].u, reference[0].v]
            rec.conjugate = k.is_conjugate(reference[1])
        if zigzag:
            rec.zigzag = check_zigzag(o, u, v, returns)
        records.append(rec)
        logger.debug("(%s, %s): card %d, rank %d", show_word(u),
                     show_word(v), rec.cardinality, rec.rank)
    report = TheoremReport(n, c, suffix_connected, records)
    logger.info("Return groups up to length %d: %d pairs, %d failures",
                max_len, len(records), len(report.failures))
    return report


class CorollaryRecord(object):
    def __init__(self, u, v, cardinality, rank, generates_full):
        self.u = u
        self.v = v
        self.cardinality = cardinality
        self.rank = rank
        self.generates_full = generates_full

    @property
    def free(self):
        return self.cardinality == self.rank

    def to_dict(self):
        return {'u': self.u, 'v': self.v, 'cardinality': self.cardinality,
                'rank': self.rank, 'generatesFull': self.generates_full,
                'free': self.free}


class CorollaryReport(object):
    """
    The two equivalence triples on return sets, instantiated on the pairs
    (u, v) with |uv| <= max_len.

    Attributes
    ----------
    generation : dict
        'all_full' (every return set generates the free group), 'some_rank_n'
        (some return group has full rank) and 'empty_connected' (ext(e) is
        connected); these must agree.
    freeness : dict
        'connected' and 'neutral' (the hypotheses, checked up to `scale`),
        'some_free', 'all_free' and 'tree_set'; the last three must agree
        when both hypotheses hold.
    cardinality : bool or None
        Under neutrality, whether every return set has n - chi(ext(e)) + 1
        elements.
    """
    def __init__(self, records, generation, freeness, cardinality, scale):
        self.records = records
        self.generation = generation
        self.freeness = freeness
        self.cardinality = cardinality
        self.scale = scale

    @property
    def histogram(self):
        return collections.Counter(r.cardinality for r in self.records)

    @property
    def generation_consistent(self):
        return len(set(self.generation.values())) == 1

    @property
    def freeness_consistent(self):
        """
        None when the hypotheses fail.
        """
        f = self.freeness
        if not (f['connected'] and f['neutral']):
            return None
        return f['some_free'] == f['all_free'] == f['tree_set']

    @property
    def passed(self):
        return (self.generation_consistent and
                self.freeness_consistent is not False and
                self.cardinality is not False)

    def to_dict(self):
        return {'generation': dict(self.generation),
                'freeness': dict(self.freeness),
                'cardinalityFormula': self.cardinality,
                'scale': self.scale,
                'histogram': dict((str(k), v) for k, v in
                                  sorted(self.histogram.items())),
                'passed': self.passed,
                'records': [r.to_dict() for r in self.records]}

    def to_text(self):
        lines = []
        for name, ok in sorted(self.generation.items()):
            lines.append('generation %s: %s' % (name, ok))
        for name, ok in sorted(self.freeness.items()):
            lines.append('freeness %s: %s' % (name, ok))
        lines.append('cardinality formula: %s' % self.cardinality)
        lines.append('cardinalities: %s' % ', '.join(
            '%d x %d' % (k, v) for k, v in sorted(self.histogram.items())))
        lines.append('PASS' if self.passed else 'FAIL')
        return '\n'.join(lines) + '\n'


def verify_corollaries(o, max_len):
    """
    Instantiate the generation and freeness equivalences on the pairs
    (u, v) with |uv| <= max_len.

    Connectedness, neutrality and the tree-set property are checked on all
    factors up to the length of the longest complete return seen (capped by
    the horizon), since shorter scales can miss the bispecial factors that
    govern those return sets.

    Returns
    -------
    CorollaryReport
    """
    alphabet = o.alphabet
    n = len(alphabet)
    full = fg.full_group(alphabet)
    empty = ext.extension_graph(o, '')
    records = []
    longest = max_len
    for u, v in pairs(o, max_len):
        returns = return_set(o, u, v)
        k = return_group(o, u, v, returns)
        records.append(CorollaryRecord(u, v, len(returns), k.rank,
                                       k.equals(full)))
        longest = max([longest] + [len(u + r + v) for r in returns])
    scale = min(o.horizon - 2, longest)
    generation = {'all_full': all(r.generates_full for r in records),
                  'some_rank_n': any(r.rank == n for r in records),
                  'empty_connected': empty.is_connected()}
    neutral = ext.is_neutral_language(o, scale)
    freeness = {'connected': ext.is_connected_language(o, scale),
                'neutral': neutral,
                'some_free': any(r.free for r in records),
                'all_free': all(r.free for r in records),
                'tree_set': ext.is_tree_set(o, scale)}
    cardinality = None
    if neutral:
        expected = n - empty.characteristic + 1
        cardinality = all(r.cardinality == expected for r in records)
    logger.info("Corollaries up to length %d (scale %d): %d pairs", max_len,
                scale, len(records))
    return CorollaryReport(records, generation, freeness, cardinality, scale)
