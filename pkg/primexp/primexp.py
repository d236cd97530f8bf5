#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse
import logging
import os
import sys

from .arithmetic import frobenius, GeneratorSet
from .bounds import (formula_thm33, girth_threshold_proof, girth_threshold_stated, lemma23_bound, lemma25_bound,
                     lemma26_bound, lemma32_bound, lemma34_bound, thm36_range, z_of_w)
from .config import DEFAULT_CONFIG_FILE, get_config
from .digraph import from_matrix, girth, simple_cycles, to_matrix
from .errors import MatrixParseError, PrimexpError
from .exponent import c_walk_distances, exponent, lemma22_bound
from .families import FamilySpec, KINDS, parse_family_spec, format_family_spec
from .iso import are_isomorphic, cycle_notation
from .matrix import parse_matrix, serialize_matrix
from .verification import (census, Runner, verify_bounds, verify_lemma24, verify_lemma34, verify_thm33,
                           verify_thm36)

log = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

EXIT_OK = 0
EXIT_ASSERT = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

BOUNDS = ('lemma22', 'lemma23', 'lemma25', 'lemma26', 'lemma32', 'lemma34', 'formula-thm33', 'range-thm36',
          'z-thm36', 'threshold-thm36')
VERIFY_VERBS = ('bounds', 'lemma24', 'thm33', 'lemma34', 'thm36', 'census')


class UsageError(Exception):
    pass


def int_list(text):
    try:
        return [int(v) for v in text.replace(',', ' ').split()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected a comma separated list of integers, got {0!r}'.format(text))


def add_input_options(op):
    group = op.add_mutually_exclusive_group(required=True)
    group.add_argument("-f", "--file", dest="file", help="Matrix text file ('-' for stdin)")
    group.add_argument("--family", dest="family", help="Inline family spec, e.g. d_gN:n=10,g=3,N=1,2")


class Primexp(object):
    """Main program class"""
    opt = None
    config = None

    def __init__(self):
        self.op = self.build_parser()

    def build_parser(self):
        op = argparse.ArgumentParser(prog='primexp',
                                     description='Exponents of primitive Boolean matrices and their digraphs.')
        op.add_argument("-c", "--config", dest="cfile",
                        default=DEFAULT_CONFIG_FILE,
                        help="Configuration file")
        op.add_argument("-d", "--debug", dest="debug",
                        help="Log at DEBUG level",
                        default=False, action="store_true")
        op.add_argument("-v", "--verbose", dest="verbose",
                        help="Log at INFO level and print details next to values",
                        default=False, action="store_true")
        sub = op.add_subparsers(dest="verb", metavar="VERB")
        sub.required = True

        p = sub.add_parser("exp", help="Exponent of a primitive matrix")
        add_input_options(p)

        p = sub.add_parser("girth", help="Length of a shortest cycle")
        add_input_options(p)

        p = sub.add_parser("cycles", help="Cycle-length set C(S)")
        add_input_options(p)
        p.add_argument("--cap", dest="cap", type=int, default=None, help="Simple-cycle enumeration cap")

        p = sub.add_parser("frobenius", help="Frobenius number of a generator set")
        p.add_argument("values", nargs='+', type=int)

        p = sub.add_parser("cwalk", help="C(S)-walk distances")
        add_input_options(p)

        p = sub.add_parser("bound", help="Evaluate a closed-form bound or formula")
        p.add_argument("name", choices=BOUNDS)
        p.add_argument("--n", dest="n", type=int)
        p.add_argument("--g", dest="g", type=int)
        p.add_argument("--q", dest="q", type=int)
        p.add_argument("--r", dest="r", type=int)
        p.add_argument("--w", dest="w", type=int)
        group = p.add_mutually_exclusive_group()
        group.add_argument("-f", "--file", dest="file", help="Matrix file (lemma22 only)")
        group.add_argument("--family", dest="family", help="Inline family spec (lemma22 only)")

        p = sub.add_parser("family", help="Construct a named digraph")
        p.add_argument("kind", choices=KINDS)
        p.add_argument("--n", dest="n", type=int, required=True)
        p.add_argument("--g", dest="g", type=int)
        p.add_argument("--N", dest="N", type=int_list, default=[])
        p.add_argument("--k", dest="k", type=int)
        p.add_argument("--mask", dest="mask", type=int)
        p.add_argument("--q", dest="q", type=int, help="Longer cycle length (theta only)")
        p.add_argument("-o", "--output", dest="output", help="Write the matrix here instead of stdout")
        p.add_argument("--spec", dest="spec", default=False, action="store_true",
                       help="Print the inline family spec instead of the matrix")

        p = sub.add_parser("iso", help="Isomorphism test with witness")
        p.add_argument("-a", dest="a", required=True, help="Matrix file or inline family spec")
        p.add_argument("-b", dest="b", required=True, help="Matrix file or inline family spec")

        p = sub.add_parser("verify", help="Check claims against brute-force oracles")
        p.add_argument("what", choices=VERIFY_VERBS)
        p.add_argument("--out", dest="out", help="Report path (<stem>.jsonl, <stem>.csv, ...)")
        p.add_argument("--seed", dest="seed", type=int, help="Seed for random sampling")
        p.add_argument("--jobs", dest="jobs", type=int, help="Worker threads")
        p.add_argument("--block-size", dest="block_size", type=int, help="Indices per work item")
        p.add_argument("--cycle-cap", dest="cycle_cap", type=int, help="Simple-cycle enumeration cap")
        p.add_argument("--dry-run", dest="dry_run", default=False, action="store_true",
                       help="Log the statsd metrics instead of sending them")
        p.add_argument("--n", dest="n", type=int)
        p.add_argument("--n-min", dest="n_min", type=int)
        p.add_argument("--n-max", dest="n_max", type=int)
        p.add_argument("--g", dest="g", type=int)
        p.add_argument("--samples", dest="samples", type=int)
        p.add_argument("--chord", dest="chord", type=int_list, action="append",
                       help="Chord family (n,g) for verify bounds; repeatable")
        p.add_argument("--start", dest="start", type=int, default=0, help="First census index")
        p.add_argument("--stop", dest="stop", type=int, help="Census index to stop before")
        p.add_argument("--append", dest="append", default=False, action="store_true",
                       help="Merge census counts into the table at --out")
        return op

    def setup_logging(self):
        level = self.config.get('logging', {}).get('level', 'WARNING').upper()
        if self.opt.debug:
            level = 'DEBUG'
        elif self.opt.verbose:
            level = 'INFO'
        logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT, level=level, force=True)

    def run(self, argv=None):
        try:
            self.opt = self.op.parse_args(argv)
        except SystemExit as ex:
            return ex.code if isinstance(ex.code, int) else EXIT_USAGE

        try:
            self.config = get_config(self.opt.cfile)
            self.setup_logging()
            return getattr(self, 'do_' + self.opt.verb)()
        except UsageError as ex:
            sys.stderr.write('primexp {0}: error: {1}\n'.format(self.opt.verb, ex))
            return EXIT_USAGE
        except (PrimexpError, OSError) as ex:
            sys.stderr.write('primexp: {0}\n'.format(ex))
            return EXIT_INPUT

    def out(self, line):
        sys.stdout.write('{0}\n'.format(line))

    def usage_error(self, message):
        raise UsageError(message)

    def load(self, path=None, spec=None):
        if spec is not None:
            return parse_family_spec(spec).build()
        if path == '-':
            data = sys.stdin.buffer.read()
        else:
            with open(path, 'rb') as fh:
                data = fh.read()
        try:
            text = data.decode('utf-8')
        except UnicodeDecodeError as ex:
            line = data[:ex.start].count(b'\n') + 1
            raise MatrixParseError(line, 'undecodable byte {0!r}'.format(data[ex.start:ex.start + 1]))
        return from_matrix(parse_matrix(text))

    def load_either(self, value):
        """A matrix file, or an inline family spec when no such file exists."""
        kind = value.partition(':')[0]
        if not os.path.exists(value) and kind in KINDS:
            return self.load(spec=value)
        return self.load(path=value)

    def input_digraph(self):
        return self.load(self.opt.file, self.opt.family)

    def do_exp(self):
        result = exponent(self.input_digraph())
        if self.opt.verbose and result.certificate:
            self.out('{0} no walk of length {1} from {2} to {3}'.format(
                result.value, result.certificate_length, *result.certificate))
        else:
            self.out(result.value)
        return EXIT_OK

    def do_girth(self):
        value = girth(self.input_digraph())
        self.out('acyclic' if value is None else value)
        return EXIT_OK

    def do_cycles(self):
        d = self.input_digraph()
        cap = self.opt.cap if self.opt.cap is not None else int(self.config['verify']['cycle_cap'])
        cycles, profile = simple_cycles(d, cap)
        if profile.cycle_count_cap_hit:
            sys.stderr.write('primexp: cycle enumeration truncated at {0}; C(S) may be incomplete\n'.format(cap))
        self.out(','.join(str(p) for p in profile.lengths))
        if self.opt.verbose:
            for v in d.vertices():
                self.out('{0}: {1}'.format(v, ','.join(str(p) for p in sorted(profile.per_vertex[v]))))
        return EXIT_OK

    def do_frobenius(self):
        self.out(frobenius(GeneratorSet(self.opt.values)))
        return EXIT_OK

    def do_cwalk(self):
        d = self.input_digraph()
        walks = c_walk_distances(d, int(self.config['verify']['cycle_cap']))
        self.out(walks.max)
        if self.opt.verbose:
            self.out('arg_max {0} {1}'.format(*walks.arg_max))
            for row in walks.per_pair:
                self.out(' '.join(str(v) for v in row))
        return EXIT_OK

    def require(self, *names):
        missing = [name for name in names if getattr(self.opt, name) is None]
        if missing:
            raise UsageError('bound {0} needs {1}'.format(
                self.opt.name, ' '.join('--' + name for name in missing)))
        return [getattr(self.opt, name) for name in names]

    def do_bound(self):
        name = self.opt.name
        if name == 'lemma22':
            if self.opt.file is None and self.opt.family is None:
                return self.usage_error('lemma22 needs -f FILE or --family SPEC')
            d = self.input_digraph()
            value = lemma22_bound(d, int(self.config['verify']['cycle_cap']))
        elif name == 'lemma23':
            value = lemma23_bound(*self.require('n', 'g'))
        elif name == 'lemma25':
            value = lemma25_bound(*self.require('n'))
        elif name == 'lemma26':
            value = lemma26_bound(*self.require('n', 'g', 'q'))
        elif name == 'lemma32':
            value = lemma32_bound(*self.require('n', 'g'))
        elif name == 'lemma34':
            value = lemma34_bound(*self.require('n', 'g'))
        elif name == 'formula-thm33':
            value = formula_thm33(*self.require('n', 'g', 'r'))
        elif name == 'range-thm36':
            value = '{0} {1}'.format(*thm36_range(*self.require('n', 'g')))
        elif name == 'z-thm36':
            value = z_of_w(*self.require('n', 'g', 'w'))
        else:
            n, = self.require('n')
            value = '{0} {1}'.format(girth_threshold_stated(n), girth_threshold_proof(n))
        self.out(value)
        return EXIT_OK

    def do_family(self):
        opt = self.opt
        spec = FamilySpec(opt.kind, opt.n, g=opt.g, N=opt.N, k=opt.k, mask=opt.mask, q=opt.q)
        d = spec.build()
        if opt.spec:
            self.out(format_family_spec(spec))
            return EXIT_OK
        text = serialize_matrix(to_matrix(d))
        if opt.output:
            with open(opt.output, 'w', newline='\n') as fh:
                fh.write(text)
            log.info('wrote %s to %s', format_family_spec(spec), opt.output)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    def do_iso(self):
        a = self.load_either(self.opt.a)
        b = self.load_either(self.opt.b)
        result = are_isomorphic(a, b, int(self.config['verify']['cycle_cap']))
        if result:
            self.out('true ({0})'.format(cycle_notation(result.witness)))
        else:
            self.out('false')
        return EXIT_OK

    def report_path(self):
        out = self.opt.out
        if out is None:
            return None
        if os.path.dirname(out):
            return out
        return os.path.join(self.config['verify'].get('out_dir', '.'), out)

    def do_verify(self):
        opt = self.opt
        params = dict((key, value) for key, value in (
            ('n', opt.n), ('n_min', opt.n_min), ('n_max', opt.n_max), ('g', opt.g)) if value is not None)
        if opt.what == 'bounds':
            samples = 10000 if opt.samples is None else opt.samples
            if samples and opt.seed is None:
                return self.usage_error('verify bounds samples randomly and needs --seed')
            params.pop('n', None)
            params.pop('g', None)
            params.pop('n_min', None)
            params['samples'] = samples
            params['seed'] = opt.seed or 0
            if opt.chord:
                if any(len(pair) != 2 for pair in opt.chord):
                    return self.usage_error('--chord takes n,g')
                params['chord_params'] = [tuple(pair) for pair in opt.chord]
        if opt.append and (opt.what != 'census' or opt.out is None):
            return self.usage_error('--append needs verify census with --out')

        path = self.report_path()
        runner = Runner.from_config(self.config, dry_run=opt.dry_run, jobs=opt.jobs,
                                    block_size=opt.block_size, cycle_cap=opt.cycle_cap)
        runner.handle_signals = True
        with runner:
            if opt.what == 'census':
                table = census(runner, n=params.get('n', 4), start=opt.start, stop=opt.stop,
                               append_to=path if opt.append else None)
                return self.emit_census(table, path)
            report = self.dispatch(runner, opt.what, params)
        return self.emit_report(report, path)

    def dispatch(self, runner, what, params):
        def pick(*names):
            return dict((name, params[name]) for name in names if name in params)

        if what == 'bounds':
            return verify_bounds(runner, **pick('n_max', 'samples', 'seed', 'chord_params'))
        elif what == 'lemma24':
            return verify_lemma24(runner, **pick('n'))
        elif what == 'thm33':
            return verify_thm33(runner, **pick('n_min', 'n_max'))
        elif what == 'lemma34':
            return verify_lemma34(runner, **pick('n_max'))
        return verify_thm36(runner, **pick('n', 'g'))

    def emit_report(self, report, path):
        if path is None:
            sys.stdout.write(report.jsonl())
            for finding in report.findings:
                sys.stderr.write(finding + '\n')
            sys.stderr.write(report.status_line() + '\n')
        else:
            report.write(path)
            self.out(report.status_line())
        return EXIT_OK if report.ok else EXIT_ASSERT

    def emit_census(self, table, path):
        if path is None:
            sys.stdout.write(table.jsonl())
            sys.stderr.write(table.status_line() + '\n')
        else:
            table.write(path)
            self.out(table.status_line())
        return EXIT_OK


def run(argv=None):
    return Primexp().run(argv)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
