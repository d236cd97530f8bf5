"""
Exact Boolean matrices of order 2..64.

Every row is held as a Python int used as a bit-set: bit ``j`` of row ``i``
set means entry ``a[i][j] == 1`` (arc ``i+1 -> j+1`` in the associated
digraph). Values are immutable.
"""
import hashlib

from .errors import DimensionError, MatrixParseError

MIN_ORDER = 2
MAX_ORDER = 64


class BoolMatrix(object):
    """Square (0,1) matrix with Boolean arithmetic."""
    __slots__ = ('order', 'rows')

    def __init__(self, order, rows):
        if not MIN_ORDER <= order <= MAX_ORDER:
            raise DimensionError(
                'order {0} outside {1}..{2}'.format(order, MIN_ORDER, MAX_ORDER))
        rows = tuple(rows)
        if len(rows) != order:
            raise DimensionError('expected {0} rows, got {1}'.format(order, len(rows)))
        limit = 1 << order
        for i, row in enumerate(rows):
            if row < 0 or row >= limit:
                raise DimensionError('row {0} has bits outside 0..{1}'.format(i + 1, order - 1))
        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'rows', rows)

    def __setattr__(self, name, value):
        raise AttributeError('BoolMatrix is immutable')

    @classmethod
    def identity(cls, order):
        return cls(order, [1 << i for i in range(order)])

    @classmethod
    def zeros(cls, order):
        return cls(order, [0] * order)

    @classmethod
    def ones(cls, order):
        return cls(order, [(1 << order) - 1] * order)

    @classmethod
    def from_index(cls, order, index):
        """Matrix number ``index`` in the row-major enumeration of all 2^(n*n) matrices."""
        full = (1 << order) - 1
        return cls(order, [(index >> (i * order)) & full for i in range(order)])

    @property
    def full_row(self):
        return (1 << self.order) - 1

    def entry(self, i, j):
        """Entry at 0-based (i, j)."""
        return (self.rows[i] >> j) & 1

    def arc_count(self):
        return sum(bin(row).count('1') for row in self.rows)

    def __le__(self, other):
        """Entrywise comparison."""
        _check_orders(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __eq__(self, other):
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.order, self.rows))

    def __repr__(self):
        return 'BoolMatrix({0}, {1!r})'.format(self.order, self.rows)

    def digest(self):
        """Short stable hash of the serialized matrix, used as a report key."""
        return hashlib.sha1(serialize_matrix(self).encode('ascii')).hexdigest()[:16]


def _check_orders(a, b):
    if a.order != b.order:
        raise DimensionError('order mismatch: {0} vs {1}'.format(a.order, b.order))


def multiply(a, b):
    """Boolean product: row i of the result is the OR of b's rows selected by a's row i."""
    _check_orders(a, b)
    b_rows = b.rows
    result = []
    for row in a.rows:
        acc = 0
        while row:
            low = row & -row
            acc |= b_rows[low.bit_length() - 1]
            row ^= low
        result.append(acc)
    return BoolMatrix(a.order, result)


def power(a, k):
    """A^k by repeated squaring; A^0 is the identity."""
    if k < 0:
        raise ValueError('exponent must be nonnegative, got {0}'.format(k))
    result = BoolMatrix.identity(a.order)
    base = a
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def is_all_positive(a):
    full = a.full_row
    return all(row == full for row in a.rows)


def first_positive_power(a, limit):
    """Least k in 1..limit with A^k all-positive, by repeated multiplication; None if there is none."""
    product = a
    for k in range(1, limit + 1):
        if is_all_positive(product):
            return k
        product = multiply(product, a)
    return None


def union(a, b):
    _check_orders(a, b)
    return BoolMatrix(a.order, [x | y for x, y in zip(a.rows, b.rows)])


def parse_matrix(text):
    """Parse the matrix text format.

    Line 1 is the decimal order n, followed by n lines of exactly n
    characters from {0,1}. Trailing whitespace and CRLF endings are
    tolerated; the final newline is optional.
    """
    lines = [line.rstrip() for line in text.split('\n')]
    while lines and lines[-1] == '':
        lines.pop()
    if not lines:
        raise MatrixParseError(1, 'missing dimension line')

    header = lines[0].strip()
    if not header.isdigit():
        raise MatrixParseError(1, 'bad dimension line {0!r}'.format(header))
    order = int(header)
    if not MIN_ORDER <= order <= MAX_ORDER:
        raise MatrixParseError(1, 'order {0} outside {1}..{2}'.format(order, MIN_ORDER, MAX_ORDER))

    if len(lines) - 1 < order:
        raise MatrixParseError(len(lines) + 1, 'expected {0} rows, got {1}'.format(order, len(lines) - 1))
    if len(lines) - 1 > order:
        raise MatrixParseError(order + 2, 'unexpected content after row {0}'.format(order))

    rows = []
    for i in range(order):
        line_no = i + 2
        line = lines[i + 1]
        if len(line) != order:
            raise MatrixParseError(line_no, 'row length {0} != {1}'.format(len(line), order))
        row = 0
        for j, char in enumerate(line):
            if char == '1':
                row |= 1 << j
            elif char != '0':
                raise MatrixParseError(line_no, 'character {0!r} outside {{0,1}}'.format(char))
        rows.append(row)
    return BoolMatrix(order, rows)


def serialize_matrix(a):
    out = [str(a.order)]
    for row in a.rows:
        out.append(''.join('1' if (row >> j) & 1 else '0' for j in range(a.order)))
    return '\n'.join(out) + '\n'
