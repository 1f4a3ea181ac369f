"""Command-line front end: ``vmilnor <command> ...``.

Exit status is 0 on success, 1 when ``--assert-slice`` is given and an
obstruction is found, and 2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import artin, cobordism, hall, invariants, magnus
from .gauss import GaussCodeError, KnotTable, parse_gauss_code, shift_basepoint
from .presentation import extended_presentation, group_presentation
from .words import parse_word

FORMATS = ('json', 'csv', 'text')
EXPENSIVE_ORDER = 7       # zh-bar order 7 means q = 8


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    max_order: int = 5
    max_q: int = 6
    shift: int = 0
    format: str = 'json'
    jobs: int = 1
    assert_slice: bool = False
    expensive: bool = False
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.max_order < 2:
            raise InputError('--max-order must be >= 2')
        if self.max_q < 2:
            raise InputError('--max-q must be >= 2')
        if self.format not in FORMATS:
            raise InputError('--format must be one of %s' % ', '.join(FORMATS))


def _read_code(arg):
    """A literal Gauss code, or a file holding one code (or a knot table)."""
    if arg is not None and os.path.isfile(arg):
        with open(arg, encoding='utf-8') as fh:
            text = fh.read()
        if '\t' in text:
            table = KnotTable.from_text(text, arg)
            if not len(table):
                raise InputError('%s: empty knot table' % arg)
            return table.entries[0][1]
        for line in text.splitlines():
            line = line.strip()
            if line and not line.startswith('#'):
                return parse_gauss_code(line)
        return parse_gauss_code('')
    return parse_gauss_code(arg or '')


# -- invariants --------------------------------------------------------------

def knot_report(name, code, shift, max_order):
    d = parse_gauss_code(code) if isinstance(code, str) else code
    if shift:
        d = shift_basepoint(d, 0, shift)
    res = invariants.first_nonvanishing(d, max_order)
    out = {'name': name, 'code': str(d), 'shift': shift}
    if isinstance(res, invariants.AllVanish):
        out.update(first_order=None, values={}, verdict='vanish',
                   max_order=max_order)
    else:
        out.update(first_order=res.order,
                   values={J: v.as_dict() for J, v in res.values.items()},
                   verdict='obstructed' if res.obstructed else 'vanish')
    return out


def _report_job(args):
    return knot_report(*args)


def _render_reports(reports, fmt):
    if fmt == 'json':
        return json.dumps(reports if len(reports) != 1 else reports[0], indent=2)
    if fmt == 'csv':
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator='\n')
        w.writerow(['name', 'code', 'shift', 'order', 'J', 'raw', 'modulus',
                    'residue', 'verdict'])
        for r in reports:
            if not r['values']:
                w.writerow([r['name'], r['code'], r['shift'], '', '', '', '',
                            '', r['verdict']])
            for J, v in r['values'].items():
                w.writerow([r['name'], r['code'], r['shift'], r['first_order'],
                            J, v['raw'], v['modulus'], v['residue'],
                            r['verdict']])
        return buf.getvalue().rstrip('\n')
    lines = []
    for r in reports:
        if r['first_order'] is None:
            lines.append('%s\tall vanish through order %d'
                         % (r['name'], r['max_order']))
            continue
        vals = ' '.join('%s=%s' % (J, v['raw'] if not v['modulus']
                                   else '%d mod %d' % (v['residue'], v['modulus']))
                        for J, v in r['values'].items())
        lines.append('%s\torder %d\t%s\t%s' % (r['name'], r['first_order'],
                                              vals, r['verdict']))
    return '\n'.join(lines)


def cmd_invariants(cfg, out):
    if cfg.max_order >= EXPENSIVE_ORDER and not cfg.expensive:
        raise InputError('--max-order %d needs q >= 8; pass --expensive'
                         % cfg.max_order)
    jobs = []
    if cfg.extra.get('file'):
        try:
            table = KnotTable.read(cfg.extra['file'])
        except OSError as exc:
            raise InputError(str(exc)) from None
        jobs = [(name, str(d), cfg.shift, cfg.max_order) for name, d in table]
    if cfg.extra.get('code') is not None:
        jobs.append(('code', cfg.extra['code'], cfg.shift, cfg.max_order))
    if not jobs:
        raise InputError('invariants needs --code or --file')
    for _, code, _, _ in jobs:
        parse_gauss_code(code)          # fail fast on bad input
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            reports = list(pool.map(_report_job, jobs))
    else:
        reports = [_report_job(j) for j in jobs]
    print(_render_reports(reports, cfg.format), file=out)
    if cfg.assert_slice and any(r['verdict'] == 'obstructed' for r in reports):
        return 1
    return 0


def cmd_spanning_set(cfg, out):
    n = cfg.extra['n']
    try:
        s = invariants.spanning_set(n, cfg.extra.get('lex_least', False))
    except invariants.OrderOutOfRange as exc:
        raise InputError(str(exc)) from None
    if cfg.format == 'json':
        print(json.dumps({'order': n, 'rank': s.rank,
                          'sequences': list(s.sequences)}, indent=2), file=out)
    elif cfg.format == 'csv':
        print('order,rank,J', file=out)
        for J in s.sequences:
            print('%d,%d,%s' % (n, s.rank, J), file=out)
    else:
        print('E_%d = %d' % (n, s.rank), file=out)
        print(' '.join(s.sequences), file=out)
    return 0


def _obstruction_dict(res, basis_limit=7):
    if isinstance(res, artin.Obstruction):
        out = {'first_failing_q': res.q,
               'witness': ''.join(map(str, res.witness)),
               'coefficient': res.coefficient}
        if res.q - 1 <= basis_limit:
            try:
                out['normal_form'] = res.normal_form().format()
            except hall.CollectionError:
                pass
        return out
    return {'first_failing_q': None, 'max_q': res.max_q,
            'result': type(res).__name__}


def _emit(obj, fmt, out):
    if fmt == 'json':
        print(json.dumps(obj, indent=2), file=out)
    elif fmt == 'csv':
        w = csv.writer(out, lineterminator='\n')
        w.writerow(list(obj))
        w.writerow([obj[k] for k in obj])
    else:
        for k, v in obj.items():
            print('%s: %s' % (k, v), file=out)


def _check_q(cfg):
    if cfg.max_q > 8 and not cfg.expensive:
        raise InputError('--max-q %d is expensive; pass --expensive' % cfg.max_q)


def cmd_artin_compare(cfg, out):
    _check_q(cfg)
    a, b = (_read_code(x) for x in cfg.inputs)
    res = artin.concordance_obstruction(a, b, cfg.max_q)
    obj = {'A': str(a), 'B': str(b)}
    obj.update(_obstruction_dict(res))
    _emit(obj, cfg.format, out)
    return 1 if cfg.assert_slice and isinstance(res, artin.Obstruction) else 0


def cmd_slice_factor(cfg, out):
    _check_q(cfg)
    d = _read_code(cfg.inputs[0])
    if cfg.shift:
        d = shift_basepoint(d, 0, cfg.shift)
    res = artin.slice_factor_test(d, cfg.extra['cut'], cfg.max_q)
    obj = {'code': str(d), 'cut': cfg.extra['cut']}
    obj.update(_obstruction_dict(res))
    _emit(obj, cfg.format, out)
    return 1 if cfg.assert_slice and isinstance(res, artin.Obstruction) else 0


def cmd_movie_verify(cfg, out):
    try:
        script = cobordism.read_movie(cfg.inputs[0])
    except OSError as exc:
        raise InputError(str(exc)) from None
    rep = cobordism.verify_movie(script)
    obj = rep.as_dict()
    if rep.failed_step is not None:
        obj['failed_line'] = script.lines[rep.failed_step]
    _emit(obj, cfg.format, out)
    if cfg.assert_slice and not rep.is_concordance:
        return 1
    return 0


def cmd_vlk(cfg, out):
    d = _read_code(cfg.extra['code'])
    i, j = cfg.extra['i'], cfg.extra['j']
    if not (0 <= i < len(d) and 0 <= j < len(d)):
        raise InputError('component index out of range')
    try:
        val = invariants.vlk(d, i, j)
    except invariants.SameComponent as exc:
        raise InputError(str(exc)) from None
    _emit({'code': str(d), 'i': i, 'j': j, 'vlk': val}, cfg.format, out)
    return 0


def cmd_collect(cfg, out):
    u = parse_word(cfg.extra['word'])
    nf = hall.collect(u, cfg.extra['q'])
    if cfg.format == 'json':
        print(json.dumps({'q': nf.q, 'exponents': {'g%d' % k: v for k, v
                                                   in sorted(nf.exponents.items())},
                          'normal_form': nf.format()}, indent=2), file=out)
    else:
        print(nf.format(), file=out)
    return 0


def cmd_magnus(cfg, out):
    u = parse_word(cfg.extra['word'])
    s = magnus.expand(u, cfg.extra['degree'], {0: 1, 'v': 2}, 2) \
        if all(g.cls in (0, 'v') for g in u.generators()) \
        else magnus.expand(u, cfg.extra['degree'])
    coeffs = [(''.join(map(str, J)), c) for J, c in s.items(1)]
    if cfg.format == 'json':
        print(json.dumps({'word': str(u), 'degree': s.degree,
                          'coefficients': dict(coeffs)}, indent=2), file=out)
    elif cfg.format == 'csv':
        w = csv.writer(out, lineterminator='\n')
        w.writerow(['J', 'coefficient'])
        w.writerows(coeffs)
    else:
        for J, c in coeffs:
            print('%s\t%d' % (J, c), file=out)
    return 0


def cmd_present(cfg, out):
    d = _read_code(cfg.extra['code'])
    p = group_presentation(d) if cfg.extra.get('plain') else extended_presentation(d)
    if cfg.format == 'json':
        print(json.dumps({'generators': [g.name() for g in p.generators()],
                          'relations': ['%s = %s' % r for r in p.relations()]},
                         indent=2), file=out)
    else:
        print('generators: ' + ' '.join(g.name() for g in p.generators()), file=out)
        for lhs, rhs in p.relations():
            print('%s = %s' % (lhs, rhs), file=out)
    return 0


COMMANDS = {
    'invariants': cmd_invariants,
    'spanning-set': cmd_spanning_set,
    'artin-compare': cmd_artin_compare,
    'slice-factor': cmd_slice_factor,
    'movie-verify': cmd_movie_verify,
    'vlk': cmd_vlk,
    'collect': cmd_collect,
    'magnus': cmd_magnus,
    'present': cmd_present,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', default='json', choices=FORMATS)
    common.add_argument('--assert-slice', action='store_true',
                        help='exit 1 when an obstruction is found')
    common.add_argument('--expensive', action='store_true',
                        help='allow orders with q >= 8 (slow)')
    ap = argparse.ArgumentParser(prog='vmilnor', description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest='command', required=True)

    p = sub.add_parser('invariants', parents=[common])
    p.add_argument('--code')
    p.add_argument('--file')
    p.add_argument('--shift', type=int, default=0)
    p.add_argument('--max-order', type=int, default=5)
    p.add_argument('--jobs', type=int, default=1)

    p = sub.add_parser('spanning-set', parents=[common])
    p.add_argument('n', type=int)
    p.add_argument('--lex-least', action='store_true',
                   help='lexicographically least set instead of the reporting set')

    p = sub.add_parser('artin-compare', parents=[common])
    p.add_argument('a')
    p.add_argument('b')
    p.add_argument('--max-q', type=int, default=6)

    p = sub.add_parser('slice-factor', parents=[common])
    p.add_argument('knot')
    p.add_argument('--cut', type=int, required=True)
    p.add_argument('--shift', type=int, default=0)
    p.add_argument('--max-q', type=int, default=6)

    p = sub.add_parser('movie-verify', parents=[common])
    p.add_argument('file')

    p = sub.add_parser('vlk', parents=[common])
    p.add_argument('--code', required=True)
    p.add_argument('i', type=int)
    p.add_argument('j', type=int)

    p = sub.add_parser('collect', parents=[common])
    p.add_argument('--word', required=True)
    p.add_argument('--q', type=int, required=True)

    p = sub.add_parser('magnus', parents=[common])
    p.add_argument('--word', required=True)
    p.add_argument('--degree', type=int, default=3)

    p = sub.add_parser('present', parents=[common])
    p.add_argument('--code', required=True)
    p.add_argument('--plain', action='store_true',
                   help='ordinary link group instead of the extended group')
    return ap


def _config(ns):
    extra = {k: getattr(ns, k) for k in ('code', 'file', 'n', 'cut', 'i', 'j',
                                         'word', 'q', 'degree', 'plain',
                                         'lex_least')
             if hasattr(ns, k)}
    inputs = [getattr(ns, k) for k in ('a', 'b', 'knot', 'file')
              if hasattr(ns, k) and ns.command != 'invariants']
    inputs = [x for x in inputs if x is not None]
    return RunConfig(ns.command, inputs,
                     max_order=getattr(ns, 'max_order', 5),
                     max_q=getattr(ns, 'max_q', 6),
                     shift=getattr(ns, 'shift', 0),
                     format=ns.format,
                     jobs=getattr(ns, 'jobs', 1),
                     assert_slice=ns.assert_slice,
                     expensive=ns.expensive,
                     extra=extra)


def run(cfg, out=None):
    out = out or sys.stdout
    try:
        return COMMANDS[cfg.command](cfg, out)
    except (InputError, GaussCodeError, cobordism.MovieSyntaxError,
            ValueError, OSError) as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 2


def main(argv=None):
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = _config(ns)
    except InputError as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == '__main__':
    sys.exit(main())
