"""
Verification rows and the report store.

A report is written as three files sharing a stem: ``<stem>.jsonl`` (one
object per row), ``<stem>.csv`` (per-claim agree/total counts) and
``<stem>.findings.txt`` (report-only findings). Output is byte-identical for
identical inputs: rows are sorted by (claim, phase, instance) and every
object is serialized with a fixed key order.
"""
import csv
import io
import json
import logging
from collections import OrderedDict
from pathlib import Path

log = logging.getLogger(__name__)

CLAIMS = ('L2.2', 'L2.3', 'L2.4', 'L2.5', 'C2.1', 'L2.6', 'L3.2', 'T3.3', 'L3.4', 'T3.6', 'C3.7', 'C3.8')


def _le(predicted, oracle):
    return oracle <= predicted


def _eq(predicted, oracle):
    return oracle == predicted


def _member(predicted, oracle):
    return oracle in predicted


# comparison rules, keyed by the name stored in each row
RULES = {
    'le': _le,
    'eq': _eq,
    'in': _member,
}


def _sortable(value):
    if isinstance(value, list):
        return tuple(value)
    return value


class VerificationRow(object):
    """One claim check: the claim's prediction, the oracle value and whether they agree."""
    __slots__ = ('claim', 'phase', 'instance', 'predicted', 'oracle', 'rule', 'agree', 'asserted', 'notes')

    def __init__(self, claim, instance, predicted, oracle, rule='le', asserted=False, notes='', phase=''):
        if claim not in CLAIMS:
            raise ValueError('unknown claim id {0!r}'.format(claim))
        if rule not in RULES:
            raise ValueError('unknown comparison rule {0!r}'.format(rule))
        self.claim = claim
        self.phase = phase
        self.instance = list(instance)
        self.predicted = predicted
        self.oracle = oracle
        self.rule = rule
        self.agree = bool(RULES[rule](predicted, oracle))
        self.asserted = asserted
        self.notes = notes

    def sort_key(self):
        return (self.claim, self.phase, tuple((k, _sortable(v)) for k, v in self.instance))

    def to_dict(self):
        out = OrderedDict()
        out['claim'] = self.claim
        if self.phase:
            out['phase'] = self.phase
        for key, value in self.instance:
            out[key] = value
        out['predicted'] = self.predicted
        out['oracle'] = self.oracle
        out['rule'] = self.rule
        out['agree'] = self.agree
        out['assert'] = self.asserted
        out['notes'] = self.notes
        return out

    def to_json(self):
        return json.dumps(self.to_dict())

    def __repr__(self):
        return 'VerificationRow({0})'.format(self.to_json())


def recompute_agree(obj):
    """Recompute a serialized row's agree flag from predicted and oracle alone."""
    return bool(RULES[obj['rule']](obj['predicted'], obj['oracle']))


def _stem(path):
    path = Path(path)
    if path.suffix == '.jsonl':
        return path.with_suffix('')
    return path


class Report(object):
    """Sorted rows of one verify run plus its report-only findings."""

    def __init__(self, verb, params, rows, findings=()):
        self.verb = verb
        self.params = params
        self.rows = sorted(rows, key=VerificationRow.sort_key)
        self.findings = list(findings)

    @property
    def failures(self):
        return [row for row in self.rows if row.asserted and not row.agree]

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        """Per claim: [asserted agree, asserted total, reported agree, reported total]."""
        counts = OrderedDict()
        for row in self.rows:
            entry = counts.setdefault(row.claim, [0, 0, 0, 0])
            offset = 0 if row.asserted else 2
            entry[offset + 1] += 1
            if row.agree:
                entry[offset] += 1
        return counts

    def jsonl(self):
        return ''.join(row.to_json() + '\n' for row in self.rows)

    def csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['claim', 'asserted_agree', 'asserted_total', 'reported_agree', 'reported_total'])
        for claim, entry in self.summary().items():
            writer.writerow([claim] + entry)
        return buf.getvalue()

    def findings_text(self):
        return ''.join(finding + '\n' for finding in self.findings)

    def write(self, path):
        stem = _stem(path)
        written = []
        for suffix, content in (('.jsonl', self.jsonl()), ('.csv', self.csv()),
                                ('.findings.txt', self.findings_text())):
            target = Path(str(stem) + suffix)
            with open(str(target), 'w', newline='\n') as fh:
                fh.write(content)
            written.append(target)
        log.info('wrote %d rows to %s', len(self.rows), written[0])
        return written

    def status_line(self):
        asserted = sum(1 for row in self.rows if row.asserted)
        return 'rows={0} asserted={1} failures={2} findings={3}'.format(
            len(self.rows), asserted, len(self.failures), len(self.findings))


class CensusTable(object):
    """Isomorphism classes of primitive matrices of one order, with labeled counts."""

    def __init__(self, order, entries=None):
        self.order = order
        self.entries = OrderedDict()
        for entry in entries or ():
            self.add(entry['canonical'], entry['girth'], entry['C'], entry['exponent'], entry['count'])

    def add(self, canonical, girth, lengths, exponent, count=1):
        key = canonical
        if key in self.entries:
            self.entries[key]['count'] += count
        else:
            self.entries[key] = OrderedDict([
                ('canonical', canonical),
                ('n', self.order),
                ('girth', girth),
                ('C', list(lengths)),
                ('exponent', exponent),
                ('count', count),
            ])

    def merge(self, other):
        for entry in other.entries.values():
            self.add(entry['canonical'], entry['girth'], entry['C'], entry['exponent'], entry['count'])

    def rows(self):
        return [self.entries[key] for key in sorted(self.entries)]

    def by_exponent(self, exponent):
        return [row for row in self.rows() if row['exponent'] == exponent]

    def max_exponent(self):
        return max(row['exponent'] for row in self.entries.values()) if self.entries else None

    def jsonl(self):
        return ''.join(json.dumps(row) + '\n' for row in self.rows())

    def csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['exponent', 'classes', 'labeled'])
        totals = OrderedDict()
        for row in sorted(self.rows(), key=lambda r: r['exponent']):
            entry = totals.setdefault(row['exponent'], [0, 0])
            entry[0] += 1
            entry[1] += row['count']
        for exponent, (classes, labeled) in totals.items():
            writer.writerow([exponent, classes, labeled])
        return buf.getvalue()

    @classmethod
    def load(cls, path, order):
        table = cls(order)
        with open(str(path)) as fh:
            for line in fh:
                if line.strip():
                    entry = json.loads(line)
                    table.add(entry['canonical'], entry['girth'], entry['C'], entry['exponent'], entry['count'])
        return table

    def write(self, path):
        stem = _stem(path)
        written = []
        for suffix, content in (('.jsonl', self.jsonl()), ('.csv', self.csv())):
            target = Path(str(stem) + suffix)
            with open(str(target), 'w', newline='\n') as fh:
                fh.write(content)
            written.append(target)
        return written

    def status_line(self):
        return 'classes={0} labeled={1} max_exponent={2}'.format(
            len(self.entries), sum(e['count'] for e in self.entries.values()), self.max_exponent())
