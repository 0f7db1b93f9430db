"""
wordgroups.cli
--------------

The ``wordgroups`` command: every analysis of the package behind one
argparse front end, with text, JSON or DOT output on stdout.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors (including a horizon too small for the query, in which case the
required horizon is printed).

"""
import argparse as arg
import logging
import os
import sys

import wordgroups.casestudy as cs
import wordgroups.digraph as dg
import wordgroups.extension as ext
import wordgroups.rauzy as rz
import wordgroups.returns as ret
from wordgroups.language import LanguageOracle, Substitution
from wordgroups.utils import (DomainError, HorizonExceeded,
                              PreconditionError, UnsupportedSubstitution,
                              dumps, read_word, show_set, show_word)

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 64
HORIZON_VARIABLE = 'WORDGROUPS_HORIZON'


class RunConfig(object):
    """
    Settings shared by all sub-commands.

    Parameters
    ----------
    substitution : Substitution
    horizon : int
        Largest factor length the oracle materializes.
    output_format : str
        One of 'text', 'json' and 'dot'.
    verbosity : int
        0 for warnings only, 1 for info, 2 or more for debug messages.
    """
    def __init__(self, substitution, horizon=DEFAULT_HORIZON,
                 output_format='text', verbosity=0):
        if horizon < 1:
            raise DomainError("The horizon must be at least 1, got %d"
                              % horizon)
        self.substitution = substitution
        self.horizon = horizon
        self.output_format = output_format
        self.verbosity = verbosity
        self._oracle = None

    @classmethod
    def from_args(cls, args, environ=None):
        """
        Build the configuration from parsed arguments; the horizon falls back
        on the WORDGROUPS_HORIZON environment variable, then on 64.
        """
        if environ is None:
            environ = os.environ
        if args.substitution is not None:
            s = Substitution.from_string(args.substitution)
        else:
            s = cs.PRESETS[args.preset]
        horizon = args.horizon
        if horizon is None:
            text = environ.get(HORIZON_VARIABLE)
            if text:
                try:
                    horizon = int(text)
                except ValueError:
                    raise DomainError("%s must be an integer, got %r"
                                      % (HORIZON_VARIABLE, text))
            else:
                horizon = DEFAULT_HORIZON
        return cls(s, horizon, args.format, args.verbose)

    @property
    def level(self):
        if self.verbosity >= 2:
            return logging.DEBUG
        if self.verbosity == 1:
            return logging.INFO
        return logging.WARNING

    def require(self, n):
        """
        Raise HorizonExceeded unless the horizon covers length `n`.
        """
        if n > self.horizon:
            raise HorizonExceeded(n, self.horizon)

    def oracle(self):
        if self._oracle is None:
            self._oracle = LanguageOracle(self.substitution, self.horizon)
        return self._oracle


def _emit(cfg, text=None, data=None, dot=None):
    fmt = cfg.output_format
    if fmt == 'json':
        out = dumps(data)
    elif fmt == 'dot':
        if dot is None:
            raise DomainError("This command has no DOT output")
        out = dot
    else:
        out = text
    sys.stdout.write(out if out.endswith('\n') else out + '\n')


def cmd_factors(cfg, args):
    cfg.require(args.k)
    o = cfg.oracle()
    if args.count:
        p = o.complexity()[:args.k + 1]
        text = '\n'.join('%d %d' % (n, c) for n, c in enumerate(p))
        _emit(cfg, text, {'complexity': p})
        return 0
    words = list(o.words(args.k))
    _emit(cfg, '\n'.join(show_word(w) for w in words),
          {'length': args.k, 'words': words})
    return 0


def cmd_extgraph(cfg, args):
    w = read_word(args.word)
    cfg.require(len(w) + args.k + args.l)
    g = ext.extension_graph(cfg.oracle(), w, args.k, args.l)
    key = cfg.substitution.alphabet.key
    lines = ['ext(%s)' % show_word(w),
             'left: %s' % show_set(g.left, key),
             'right: %s' % show_set(g.right, key),
             'edges: %s' % ' '.join('(%s, %s)' % (show_word(u), show_word(v))
                                    for u, v in g.sorted_edges()),
             'components: %d' % g.n_components,
             'characteristic: %d' % g.characteristic,
             'tree: %s' % ('yes' if g.is_tree() else 'no')]
    _emit(cfg, '\n'.join(lines), g.to_dict(), g.to_dot())
    return 0


def cmd_suffix_connected(cfg, args):
    w = read_word(args.word)
    top = len(w) + 1
    if args.max_depth is not None:
        top = min(args.max_depth, top)
    cfg.require(len(w) + top + 1)
    o = cfg.oracle()
    if args.prefix:
        d = ext.prefix_connected_depth(o, w, args.max_depth)
        o, w = o.mirror(), w[::-1]
    else:
        d = ext.suffix_connected_depth(o, w, args.max_depth)
    dot = None
    if cfg.output_format == 'dot':
        dot = ext.suffix_embedding(o, w, d if d is not None else top).to_dot()
    _emit(cfg, 'none' if d is None else str(d),
          {'word': read_word(args.word), 'depth': d,
           'side': 'prefix' if args.prefix else 'suffix'}, dot)
    return 0


def cmd_rauzy(cfg, args):
    cfg.require(args.m + 1)
    g = rz.rauzy_graph(cfg.oracle(), args.m, args.k)
    lines = [g.graph.to_text().rstrip('\n')]
    for w in g.graph.sorted_vertices():
        basis = g.group(w).basis
        lines.append('H at %s: <%s>' % (show_word(w),
                                         ', '.join(str(b) for b in basis)))
    _emit(cfg, '\n'.join(lines), g.to_dict(groups=True), g.to_dot())
    return 0


def cmd_fold(cfg, args):
    g = dg.read_graph(args.graph_file)
    equiv, folded = dg.stallings_fold(g)
    classes = [[str(v) for v in sorted(c, key=equiv.key)]
               for c in equiv.classes()]
    data = {'classes': classes,
            'folded': folded.to_dict()}
    lines = ['%d vertices, %d edges folded into %d vertices, %d edges'
             % (g.n_vertices, g.n_edges, folded.n_vertices, folded.n_edges)]
    lines.append(folded.to_text().rstrip('\n'))
    base = None
    if args.base is not None:
        h = dg.group_at(g, args.base)
        base = h.base
        data['basis'] = [str(b) for b in h.basis]
        data['rank'] = h.rank
        lines.append('basis at %s: <%s>'
                     % (args.base, ', '.join(data['basis'])))
        lines.append('rank: %d' % h.rank)
    _emit(cfg, '\n'.join(lines), data, folded.to_dot(name='fold', base=base))
    return 0


def cmd_returns(cfg, args):
    u = read_word(args.u)
    v = read_word(args.v)
    cfg.require(len(u + v))
    o = cfg.oracle()
    returns = ret.return_set(o, u, v)
    data = returns.to_dict()
    lines = ['Ret(%s, %s) = %s' % (show_word(u), show_word(v),
                                   show_set(returns.words, o.alphabet.key)),
             'cardinality: %d' % len(returns)]
    if not returns.complete:
        lines.append('incomplete')
        _emit(cfg, '\n'.join(lines), data)
        return 1
    k = ret.return_group(o, u, v, returns)
    data['rank'] = k.rank
    data['basis'] = [str(b) for b in k.basis]
    lines.append('rank: %d' % k.rank)
    lines.append('basis: <%s>' % ', '.join(data['basis']))
    _emit(cfg, '\n'.join(lines), data)
    return 0


def cmd_verify_theorem(cfg, args):
    cfg.require(args.max_len + 2)
    report = ret.verify_main_theorem(cfg.oracle(), args.max_len,
                                     zigzag=not args.no_zigzag)
    _emit(cfg, report.to_text(), report.to_dict())
    return 0 if report.passed else 1


def cmd_verify_corollaries(cfg, args):
    cfg.require(args.max_len + 2)
    report = ret.verify_corollaries(cfg.oracle(), args.max_len)
    _emit(cfg, report.to_text(), report.to_dict())
    return 0 if report.passed else 1


def cmd_casestudy(cfg, args):
    o = cfg.oracle()
    step = args.step
    if args.word is not None and step != 3:
        raise DomainError("--word applies to step 3 only")
    if step in (None, 5):
        seq = cs.CaseStudySequences(args.kmax, cfg.substitution)
        cfg.require(max(seq.required_horizon(k)
                        for k in range(args.kmax + 1)))
    if step is None:
        reports = cs.verify_case_study(o, args.kmax)
    elif step == 1:
        reports = [cs.verify_step1(o)]
    elif step == 2:
        reports = [cs.verify_step2(o)]
    elif step == 3 and args.word is not None:
        reports = [cs.verify_step3(o, read_word(args.word))]
    elif step == 3:
        reports = [cs.verify_step3_all(o, min(o.horizon - 2, 64))]
    elif step == 4:
        reports = [cs.verify_step4(o, args.kmax)]
    else:
        reports = [cs.verify_step5(o, args.kmax)]
    _emit(cfg, '\n'.join(r.to_markdown() for r in reports),
          [r.to_dict() for r in reports])
    return 0 if all(r.passed for r in reports) else 1


def make_parser():
    parser = arg.ArgumentParser(
        prog='wordgroups',
        description='Return groups and Rauzy groups of substitution'
                    ' languages')
    source = parser.add_mutually_exclusive_group()
    source.add_argument('-s', '--substitution', action='store',
                        metavar='Spec',
                        help='Substitution, as "0:0001,1:02,2:001"')
    source.add_argument('-p', '--preset', action='store', metavar='Name',
                        choices=list(cs.PRESETS), default='phi',
                        help='Bundled substitution (default: phi; one of'
                             ' %s)' % ', '.join(cs.PRESETS))
    parser.add_argument('--horizon', action='store', type=int,
                        metavar='Int',
                        help='Largest factor length (default: $%s or %d)'
                             % (HORIZON_VARIABLE, DEFAULT_HORIZON))
    parser.add_argument('--format', action='store', default='text',
                        choices=['text', 'json', 'dot'],
                        help='Output format (default: text)')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='More logging; repeat for debug output')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('factors', help='Factors of a given length')
    p.add_argument('k', type=int)
    p.add_argument('--count', action='store_true',
                   help='Print the factor complexity up to k instead')
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser('extgraph', help='Extension graph of a factor')
    p.add_argument('word')
    p.add_argument('--k', type=int, default=1,
                   help='Length of left extensions (default: 1)')
    p.add_argument('--l', type=int, default=1,
                   help='Length of right extensions (default: 1)')
    p.set_defaults(func=cmd_extgraph)

    p = sub.add_parser('suffix-connected',
                       help='Smallest depth of suffix-connectedness')
    p.add_argument('word')
    p.add_argument('--max-depth', type=int, default=None)
    p.add_argument('--prefix', action='store_true',
                   help='Prefix-connectedness instead')
    p.set_defaults(func=cmd_suffix_connected)

    p = sub.add_parser('rauzy', help='Rauzy graph G_{m,k} and its groups')
    p.add_argument('m', type=int)
    p.add_argument('k', type=int)
    p.set_defaults(func=cmd_rauzy)

    p = sub.add_parser('fold', help='Stallings folding of a graph file')
    p.add_argument('graph_file')
    p.add_argument('--base', default=None,
                   help='Vertex at which to read off a free basis')
    p.set_defaults(func=cmd_fold)

    p = sub.add_parser('returns', help='Return set and return group')
    p.add_argument('u')
    p.add_argument('v')
    p.set_defaults(func=cmd_returns)

    p = sub.add_parser('verify-theorem',
                       help='Rank, conjugacy and Rauzy group checks on all'
                            ' return groups')
    p.add_argument('--max-len', type=int, default=3)
    p.add_argument('--no-zigzag', action='store_true')
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser('verify-corollaries',
                       help='Generation and freeness of return sets')
    p.add_argument('--max-len', type=int, default=3)
    p.set_defaults(func=cmd_verify_corollaries)

    p = sub.add_parser('casestudy', help='The five steps for phi')
    p.add_argument('--step', type=int, choices=[1, 2, 3, 4, 5], default=None)
    p.add_argument('--kmax', type=int, default=1)
    p.add_argument('--word', default=None,
                   help='Word for the step 3 stability check')
    p.set_defaults(func=cmd_casestudy)
    return parser


def main(argv=None):
    """
    Run the command line; returns the exit status.
    """
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        cfg = RunConfig.from_args(args)
        logging.basicConfig(level=cfg.level,
                            format='%(name)s %(levelname)s: %(message)s')
        logger.debug("Running %s on %s, horizon %d", args.command,
                     cfg.substitution, cfg.horizon)
        return args.func(cfg, args)
    except HorizonExceeded as e:
        sys.stderr.write('wordgroups: %s; rerun with --horizon %d\n'
                         % (e, e.required))
        return 2
    except (DomainError, UnsupportedSubstitution, PreconditionError) as e:
        sys.stderr.write('wordgroups: error: %s\n' % e)
        return 2
