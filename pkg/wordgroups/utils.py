"""
wordgroups.utils
----------------

Errors shared by all modules and a few small helpers: a disjoint-set forest
for vertex equivalences, rendering of words and word sets, and Graphviz/JSON
text output.

"""
import json

EMPTY_WORD_SYMBOL = u'ε'


class DomainError(ValueError):
    """
    An argument lies outside the domain of an operation (a letter outside
    the alphabet, a word outside the language, malformed input text).
    """


class UnsupportedSubstitution(ValueError):
    """
    The substitution lacks a property the operation relies on (primitivity,
    growth, or the prefix-code property of its images).
    """


class PreconditionError(ValueError):
    """
    A verification routine was asked to run outside its hypotheses.
    """


class HorizonExceeded(ValueError):
    """
    A query needs factors longer than the oracle materialized.

    Parameters
    ----------
    required : int
        The smallest horizon that would have answered the query.
    horizon : int
        The horizon of the oracle that was asked.
    depth : int, optional
        For suffix-connectedness searches, the depth at which the budget ran
        out.
    """
    def __init__(self, required, horizon, depth=None):
        self.required = required
        self.horizon = horizon
        self.depth = depth
        msg = ("factors of length %d needed, oracle horizon is %d"
               % (required, horizon))
        if depth is not None:
            msg += " (at depth %d)" % depth
        ValueError.__init__(self, msg)


class DisjointSet(object):
    """
    Union-find over hashable elements, with union by size and path
    compression.
    """
    def __init__(self, elements=()):
        self.parent = {}
        self.size = {}
        for e in elements:
            self.add(e)

    def add(self, e):
        if e not in self.parent:
            self.parent[e] = e
            self.size[e] = 1

    def __contains__(self, e):
        return e in self.parent

    def __iter__(self):
        return iter(self.parent)

    def __len__(self):
        return len(self.parent)

    def find(self, e):
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        # Compress the path we just walked:
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, a, b):
        """
        Merge the classes of `a` and `b`. Returns the surviving root, or None
        when the two were already in the same class.
        """
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return None
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra

    def copy(self):
        new = DisjointSet()
        new.parent = dict(self.parent)
        new.size = dict(self.size)
        return new

    def groups(self):
        """
        The classes, as a dict from root to the list of members.
        """
        out = {}
        for e in self.parent:
            out.setdefault(self.find(e), []).append(e)
        return out


def default_key(v):
    """
    Sort key for vertices of unknown type: shorter renderings first, then
    lexicographic.
    """
    s = str(v)
    return (len(s), s)


def show_word(w):
    """
    Render a word for text output; the empty word prints as epsilon.
    """
    return w if len(w) > 0 else EMPTY_WORD_SYMBOL


def read_word(text):
    """
    Parse a word from the command line: the empty string and the epsilon
    symbol both denote the empty word.
    """
    text = text.strip()
    if text == EMPTY_WORD_SYMBOL:
        return ''
    return text


def show_set(words, key=None):
    """
    Render a set of words as ``{a, b, c}``, sorted by `key`.
    """
    if key is None:
        key = default_key
    return '{' + ', '.join(show_word(w) for w in sorted(words, key=key)) + '}'


def dot_quote(name):
    """
    Quote a vertex identifier for the DOT language.
    """
    return '"' + str(name).replace('\\', '\\\\').replace('"', '\\"') + '"'


def dot_document(name, statements, directed=True):
    """
    Assemble a DOT document from a list of statements (without trailing
    semicolons).
    """
    head = 'digraph' if directed else 'graph'
    lines = ['%s %s {' % (head, dot_quote(name))]
    for s in statements:
        lines.append('    ' + s + ';')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def dumps(obj):
    """
    Deterministic JSON text for reports.
    """
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
