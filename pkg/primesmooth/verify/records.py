from fractions import Fraction

import param

from primesmooth.base.model_base import Model
from primesmooth.verify.envelopes import THEOREMS

CSV_HEADER = [
    'theorem', 'p', 'H', 'K', 'M', 'N', 'h', 'u', 'v', 'S', 'T', 'set_size', 'delta',
    'exact_count', 'main_term_num', 'main_term_den', 'abs_error',
    'envelope_new', 'envelope_old', 'ratio_new', 'ratio_old', 'seed',
]

QUERY_FIELDS = ['H', 'K', 'M', 'N', 'h', 'u', 'v', 'S', 'T', 'set_size']
REAL_FIELDS = ['envelope_new', 'envelope_old', 'ratio_new', 'ratio_old']


def format_real(x: float) -> str:
    return f"{x:.12g}"


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class SweepRecord(Model):
    """
    One sweep measurement. Query parameters that do not apply to the
    theorem are None and print as empty CSV cells.
    """
    theorem = param.Selector(objects=[str(k) for k in THEOREMS], default='THM1', constant=True)
    p = param.Integer(default=3, bounds=(2, None), constant=True)
    H = param.Integer(default=None, allow_None=True, constant=True)
    K = param.Integer(default=None, allow_None=True, constant=True)
    M = param.Integer(default=None, allow_None=True, constant=True)
    N = param.Integer(default=None, allow_None=True, constant=True)
    h = param.Integer(default=None, allow_None=True, constant=True)
    u = param.Integer(default=None, allow_None=True, constant=True)
    v = param.Integer(default=None, allow_None=True, constant=True)
    S = param.Integer(default=None, allow_None=True, constant=True)
    T = param.Integer(default=None, allow_None=True, constant=True)
    set_size = param.Integer(default=None, allow_None=True, constant=True)
    delta = param.Number(default=None, allow_None=True, constant=True, doc="""
        Spectral flatness of X (THM4 only)""")
    exact_count = param.Integer(default=0, bounds=(0, None), constant=True)
    main_term = param.ClassSelector(class_=Fraction, default=Fraction(0), constant=True)
    abs_error = param.ClassSelector(class_=Fraction, default=Fraction(0), constant=True, doc="""
        |exact_count - main_term|, exact""")
    envelope_new = param.Number(default=1.0, bounds=(0.0, None), inclusive_bounds=(False, True), constant=True)
    envelope_old = param.Number(default=1.0, bounds=(0.0, None), inclusive_bounds=(False, True), constant=True)
    ratio_new = param.Number(default=0.0, bounds=(0.0, None), constant=True)
    ratio_old = param.Number(default=0.0, bounds=(0.0, None), constant=True)
    seed = param.Integer(default=0, constant=True, doc="""
        Derived per-trial seed state that reproduces the drawn parameters""")
    cell = param.Integer(default=0, bounds=(0, None), constant=True, doc="""
        Position of the grid cell within its (theorem, p) grid""")
    trial = param.Integer(default=0, bounds=(0, None), constant=True)

    @property
    def sort_key(self) -> tuple:
        return (self.theorem, self.p, self.cell, self.trial)

    def to_row(self) -> dict:
        """CSV cells as strings, in header order"""
        row = {'theorem': self.theorem, 'p': str(self.p)}
        for name in QUERY_FIELDS:
            value = getattr(self, name)
            row[name] = '' if value is None else str(value)
        row['delta'] = '' if self.delta is None else format_real(self.delta)
        row['exact_count'] = str(self.exact_count)
        row['main_term_num'] = str(self.main_term.numerator)
        row['main_term_den'] = str(self.main_term.denominator)
        row['abs_error'] = format_fraction(self.abs_error)
        for name in REAL_FIELDS:
            row[name] = format_real(getattr(self, name))
        row['seed'] = str(self.seed)
        return row

    def to_json(self) -> dict:
        """Same field names as the CSV header, with native JSON types"""
        out = {'theorem': self.theorem, 'p': self.p}
        for name in QUERY_FIELDS + ['delta']:
            out[name] = getattr(self, name)
        out.update(
            exact_count=self.exact_count,
            main_term_num=self.main_term.numerator,
            main_term_den=self.main_term.denominator,
            abs_error=format_fraction(self.abs_error))
        for name in REAL_FIELDS:
            out[name] = getattr(self, name)
        out['seed'] = self.seed
        return out

    @classmethod
    def from_row(cls, row: dict, cell: int = 0) -> 'SweepRecord':
        """Inverse of to_row; reals come back at their printed precision"""
        params = {'theorem': row['theorem'], 'p': int(row['p']), 'cell': cell}
        for name in QUERY_FIELDS:
            if row.get(name, '') != '':
                params[name] = int(row[name])
        if row.get('delta', '') != '':
            params['delta'] = float(row['delta'])
        for name in REAL_FIELDS:
            params[name] = float(row[name])
        return cls(
            exact_count=int(row['exact_count']),
            main_term=Fraction(int(row['main_term_num']), int(row['main_term_den'])),
            abs_error=Fraction(row['abs_error']),
            seed=int(row['seed']),
            **params)
