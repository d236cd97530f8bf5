from ..digraph import DEFAULT_CYCLE_CAP, to_matrix


class Check(object):
    """A claim check over an indexed universe of instances.

    ``process(index)`` handles one instance and returns its rows; workers
    call it for disjoint index blocks, so it must not depend on call order.
    ``finalize`` derives rows that need every instance, ``summarize``
    returns report-only findings.
    """
    name = 'check'

    def __init__(self, cycle_cap=DEFAULT_CYCLE_CAP, **kwargs):
        self.cycle_cap = cycle_cap

    def size(self):
        return 0

    def process(self, index):
        return []

    def finalize(self, rows):
        return []

    def summarize(self, rows):
        return []

    def params(self):
        return {}


def matrix_instance(d, sample=None):
    fields = []
    if sample is not None:
        fields.append(('sample', sample))
    fields += [('n', d.order), ('matrix', to_matrix(d).digest())]
    return fields
