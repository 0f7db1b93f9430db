"""
wordgroups.language
-------------------

Alphabets, words and substitutions, and a bounded view of the language of a
primitive substitution.

Words are plain Python strings. Every letter is a single character, so
slicing, concatenation and reversal are the string operations, and the
empty word is ``''``. The order of the letters of an `Alphabet` decides the
shortlex order used for all sorted output.

"""
import logging

import numpy as np

from wordgroups.utils import (DomainError, HorizonExceeded,
                              UnsupportedSubstitution)

logger = logging.getLogger(__name__)


class Alphabet(object):
    """
    A finite ordered set of single-character letters.

    Parameters
    ----------
    letters : iterable of str
        The letters, in the order that defines shortlex comparison.
    """
    def __init__(self, letters):
        letters = tuple(letters)
        if len(letters) == 0:
            raise DomainError("An alphabet needs at least one letter")
        for a in letters:
            if not isinstance(a, str) or len(a) != 1:
                raise DomainError("Letters must be single characters, got %r"
                                  % (a,))
        if len(set(letters)) != len(letters):
            raise DomainError("Repeated letter in %r" % (letters,))
        self.letters = ''.join(letters)
        self._rank = dict((a, i) for i, a in enumerate(letters))
        self._table = str.maketrans(dict((a, chr(i))
                                         for i, a in enumerate(letters)))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, a):
        return a in self._rank

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Alphabet(%r)" % self.letters

    def index(self, a):
        return self._rank[a]

    def check(self, w):
        """
        Raise DomainError if `w` uses a letter outside the alphabet.
        """
        for a in w:
            if a not in self._rank:
                raise DomainError("Letter %r is not in the alphabet %r"
                                  % (a, self.letters))
        return w

    def key(self, w):
        """
        Shortlex sort key: shorter words first, then lexicographic in the
        order of the alphabet.
        """
        return (len(w), w.translate(self._table))

    def sorted(self, words):
        return sorted(words, key=self.key)


def tail(w, d=1):
    """
    Drop the first `d` letters of `w`.
    """
    if d > len(w):
        raise DomainError("Cannot drop %d letters from a word of length %d"
                          % (d, len(w)))
    return w[d:]


def init(w, d=1):
    """
    Drop the last `d` letters of `w`.
    """
    if d > len(w):
        raise DomainError("Cannot drop %d letters from a word of length %d"
                          % (d, len(w)))
    return w[:len(w) - d]


def reverse(w):
    return w[::-1]


def occurrences(x, w):
    """
    Start positions of all (possibly overlapping) occurrences of `w` in `x`.
    """
    if len(w) == 0:
        return list(range(len(x) + 1))
    out = []
    i = x.find(w)
    while i >= 0:
        out.append(i)
        i = x.find(w, i + 1)
    return out


class Substitution(object):
    """
    A non-erasing substitution on an ordered alphabet.

    Parameters
    ----------
    images : dict
        Maps each letter to its (non-empty) image word.
    alphabet : Alphabet, optional
        The alphabet. Default: the keys of `images`, in insertion order.

    Examples
    --------
    >>> phi = Substitution.from_string("0:0001,1:02,2:001")
    >>> phi("2")
    '001'
    """
    def __init__(self, images, alphabet=None):
        if alphabet is None:
            alphabet = Alphabet(list(images))
        if set(images) != set(alphabet.letters):
            raise DomainError("Images must be given for exactly the letters"
                              " of %r" % alphabet.letters)
        self.alphabet = alphabet
        self.images = dict((a, alphabet.check(images[a])) for a in alphabet)
        for a in alphabet:
            if len(self.images[a]) == 0:
                raise DomainError("The image of %r is empty" % a)

    @classmethod
    def from_string(cls, text):
        """
        Parse ``"0:0001,1:02,2:001"``. The rules give the alphabet order.
        """
        images = {}
        order = []
        for rule in text.split(','):
            rule = ''.join(rule.split())
            if len(rule) == 0:
                continue
            parts = rule.split(':')
            if len(parts) != 2 or len(parts[0]) != 1:
                raise DomainError("Malformed substitution rule %r" % rule)
            a, image = parts
            if a in images:
                raise DomainError("Letter %r has two rules" % a)
            images[a] = image
            order.append(a)
        if len(order) == 0:
            raise DomainError("Empty substitution text %r" % text)
        return cls(images, Alphabet(order))

    def __str__(self):
        return ','.join('%s:%s' % (a, self.images[a]) for a in self.alphabet)

    def __repr__(self):
        return "Substitution.from_string(%r)" % str(self)

    def __eq__(self, other):
        return (isinstance(other, Substitution) and
                self.alphabet == other.alphabet and
                self.images == other.images)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(str(self))

    def apply(self, w):
        """
        The image of `w`: the concatenation of the images of its letters.
        """
        self.alphabet.check(w)
        return ''.join([self.images[a] for a in w])

    __call__ = apply

    def power(self, w, k):
        """
        Apply the substitution `k` times to `w`.
        """
        for i in range(k):
            w = self.apply(w)
        return w

    def occurrence_matrix(self):
        """
        The matrix M with M[i, j] the number of occurrences of letter i in the
        image of letter j.
        """
        n = len(self.alphabet)
        M = np.zeros((n, n), dtype=np.int64)
        for j, b in enumerate(self.alphabet):
            for a in self.images[b]:
                M[self.alphabet.index(a), j] += 1
        return M

    def parikh(self, w):
        """
        Letter counts of `w`, as a vector in alphabet order.
        """
        v = np.zeros(len(self.alphabet), dtype=np.int64)
        for a in self.alphabet.check(w):
            v[self.alphabet.index(a)] += 1
        return v

    def image_length(self, w, k=1):
        """
        The length of the k-th image of `w`, from the occurrence matrix.
        """
        M = np.linalg.matrix_power(self.occurrence_matrix(), k)
        return int(np.sum(np.dot(M, self.parikh(w))))

    def primitivity_exponent(self):
        """
        The least p with every letter occurring in the p-th image of every
        letter, or None if there is no such p (not primitive).

        Notes
        -----
        A primitive n x n matrix has a positive power of order at most
        (n - 1) ** 2 + 1, so checking up to n ** 2 is conclusive.
        """
        n = len(self.alphabet)
        support = (self.occurrence_matrix() > 0).astype(np.int64)
        P = support
        for p in range(1, n * n + 1):
            if np.all(P > 0):
                return p
            P = np.minimum(np.dot(P, support), 1)
        return None

    def is_primitive(self):
        return self.primitivity_exponent() is not None

    def is_prefix_code(self):
        """
        Whether no image is a prefix of the image of another letter.
        """
        imgs = [self.images[a] for a in self.alphabet]
        for i, x in enumerate(imgs):
            for j, y in enumerate(imgs):
                if i != j and y.startswith(x):
                    return False
        return True

    def reversed(self):
        """
        The substitution with every image reversed. Its language is the set
        of reversals of the words of this one.
        """
        return Substitution(dict((a, reverse(self.images[a]))
                                 for a in self.alphabet), self.alphabet)

    def periodic_seed(self):
        """
        The smallest p, then the first letter a in alphabet order, such that
        the p-th image of a starts with a.
        """
        n = len(self.alphabet)
        for p in range(1, n + 1):
            for a in self.alphabet:
                first = a
                for i in range(p):
                    first = self.images[first][0]
                if first == a:
                    return p, a
        # The first-letter map always has a cycle of length at most n:
        raise AssertionError("No periodic letter found")

    def _check_growing(self):
        if not self.is_primitive():
            raise UnsupportedSubstitution("%s is not primitive" % self)
        if all(len(self.images[a]) == 1 for a in self.alphabet):
            raise UnsupportedSubstitution("%s does not grow" % self)


def apply(s, w):
    """
    Apply substitution `s` to the word `w`.
    """
    return s.apply(w)


def _harvest(s, k):
    """
    The set of factors of length `k` of the language of `s`.

    Iterates `s` on every letter and collects the length-k factors of the
    images. Once every image is at least k long, the length-k factors of the
    next round are a function of those of the current round. The iteration
    stops when two successive rounds agree under that condition (and after
    the primitivity exponent).
    """
    if k == 0:
        return set([''])
    p = s.primitivity_exponent()
    words = dict((a, a) for a in s.alphabet)
    previous = None
    previous_short = 0
    rounds = 0
    while True:
        rounds += 1
        words = dict((a, s.apply(w)) for a, w in words.items())
        current = set()
        for w in words.values():
            current.update(w[i:i + k] for i in range(len(w) - k + 1))
        if (previous is not None and rounds > p and previous_short >= k and
                current == previous):
            break
        previous = current
        previous_short = min(len(w) for w in words.values())
    logger.debug("Factors of length %d of %s: %d words after %d rounds",
                 k, s, len(current), rounds)
    return current


def factors(s, k):
    """
    The set of words of length `k` in the language of `s`.

    Parameters
    ----------
    s : Substitution
        A primitive, growing substitution.
    k : int
        The length.

    Returns
    -------
    frozenset of str
    """
    if k < 0:
        raise DomainError("Negative length %d" % k)
    s._check_growing()
    return frozenset(_harvest(s, k))


def fixed_point_prefix(s, min_len):
    """
    A prefix of length `min_len` of a fixed point of a power of `s`.

    The seed is the smallest p, then the first letter a, with the p-th image
    of a starting with a; the p-th images of a are then prefixes of each
    other.
    """
    if min_len < 0:
        raise DomainError("Negative length %d" % min_len)
    s._check_growing()
    p, a = s.periodic_seed()
    w = a
    while len(w) < min_len:
        w = s.power(w, p)
    return w[:min_len]


class LanguageOracle(object):
    """
    The factors of length at most `horizon` of the language of a primitive
    substitution.

    Parameters
    ----------
    substitution : Substitution
        A primitive, growing substitution.
    horizon : int
        The largest factor length materialized (default: 64).

    Notes
    -----
    Only the top level is harvested from iterated images; shorter levels are
    its prefixes and suffixes, which is exact since every factor extends on
    both sides.
    """
    def __init__(self, substitution, horizon=64, factor_sets=None):
        if horizon < 1:
            raise DomainError("The horizon must be at least 1, got %d"
                              % horizon)
        self.substitution = substitution
        self.alphabet = substitution.alphabet
        self.horizon = horizon
        if factor_sets is None:
            substitution._check_growing()
            top = _harvest(substitution, horizon)
            factor_sets = [None] * (horizon + 1)
            factor_sets[horizon] = frozenset(top)
            for k in range(horizon - 1, -1, -1):
                upper = factor_sets[k + 1]
                factor_sets[k] = frozenset([x[:-1] for x in upper] +
                                           [x[1:] for x in upper])
            logger.info("Oracle for %s up to length %d: %d factors on top",
                        substitution, horizon, len(top))
        self.factor_sets = list(factor_sets)
        if set(self.factor_sets[1]) != set(self.alphabet):
            raise UnsupportedSubstitution("Some letter of %r does not occur"
                                          " in the language"
                                          % self.alphabet.letters)
        self._sorted = {}

    def __repr__(self):
        return "LanguageOracle(%r, horizon=%d)" % (self.substitution,
                                                   self.horizon)

    def require(self, n):
        """
        Raise HorizonExceeded unless factors of length `n` are available.
        """
        if n > self.horizon:
            raise HorizonExceeded(n, self.horizon)

    def contains(self, w):
        """
        Whether `w` is a factor of the language.
        """
        self.require(len(w))
        return w in self.factor_sets[len(w)]

    __contains__ = contains

    def words(self, k):
        """
        The factors of length `k`, sorted shortlex.
        """
        self.require(k)
        if k not in self._sorted:
            self._sorted[k] = tuple(self.alphabet.sorted(self.factor_sets[k]))
        return self._sorted[k]

    def complexity(self):
        """
        Number of factors of each length 0, ..., horizon.
        """
        return [len(f) for f in self.factor_sets]

    def mirror(self):
        """
        The oracle of the language of reversed words, at the same horizon.
        """
        sets = [frozenset(reverse(x) for x in f) for f in self.factor_sets]
        return LanguageOracle(self.substitution.reversed(), self.horizon,
                              factor_sets=sets)


def contains(o, w):
    """
    Membership of the word `w` in the language seen by oracle `o`.
    """
    return o.contains(w)


def complexity(o):
    """
    The factor complexity k -> Card(L & A^k), for k up to the horizon.
    """
    return o.complexity()
