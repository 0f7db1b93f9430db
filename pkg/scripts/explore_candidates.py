#!/usr/bin/env python
"""
Scan the bundled candidate substitutions for (m, m+1)-suffix-connectedness
and print, for each, the disconnected factors found and the rank of the
return groups of short factors.

Nothing is asserted: the output is a starting point for experiments.
"""
import argparse as arg
import logging

import wordgroups.casestudy as cs
import wordgroups.extension as ext
import wordgroups.returns as ret
from wordgroups.language import LanguageOracle
from wordgroups.utils import DomainError, HorizonExceeded

parser = arg.ArgumentParser(description=__doc__)
parser.add_argument('--horizon', type=int, default=48,
                    help='Length of the longest factor enumerated')
parser.add_argument('--max-m', type=int, default=6,
                    help='Largest factor length m to test')
parser.add_argument('--ret-len', type=int, default=2,
                    help='Largest length of uv for the return group ranks')

if __name__ == "__main__":
    args = parser.parse_args()
    logging.basicConfig(level=logging.WARNING)
    for i, s in enumerate(cs.OPEN_CANDIDATES):
        o = LanguageOracle(s, args.horizon)
        print("candidate-%d: %s" % (i + 1, s))
        for m in range(args.max_m + 1):
            try:
                ok = ext.is_me_suffix_connected(o, m, m + 1)
            except HorizonExceeded as e:
                print("  m=%d: needs horizon %d" % (m, e.required))
                break
            print("  (%d, %d)-suffix-connected: %s" % (m, m + 1, ok))
        scale = min(args.horizon - 2, 3 * args.max_m)
        bad = ext.disconnected_words(o, scale)
        print("  disconnected factors up to length %d: %s" %
              (scale, ', '.join(bad) if bad else 'none'))
        ranks = set()
        for u, v in ret.pairs(o, args.ret_len):
            try:
                ranks.add(ret.return_group(o, u, v).rank)
            except HorizonExceeded as e:
                print("  Ret(%s, %s) needs horizon %d" % (u, v, e.required))
            except DomainError as e:
                print("  %s" % e)
        print("  return group ranks: %s" % sorted(ranks))
