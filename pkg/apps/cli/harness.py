"""
Seeded probe of the weak Lefschetz property in degree d-1 for random forms.
Sample i uses derive_seed(master_seed, i), so rows do not depend on which
worker ran them or in what order.
"""
import csv
from dataclasses import asdict, dataclass
import logging
import time

from django.conf import settings

from apps.exactla.fields import FieldSpec
from apps.jacobian.ring import JacobianRingModel
from apps.jacobian.services import SmoothnessStatus, smoothness_check
from apps.lefschetz.services import multiplication_map
from apps.multipoly.monomials import ring_dimension
from apps.multipoly.sampling import derive_seed, random_homogeneous, random_linear_form

from .exceptions import ProbeRefusedError

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('n', 'd', 'char', 'sample', 'seed', 'smooth', 'wlp_injective', 'kernel_dim', 'ms')

SAMPLE_ERROR = 'error'


@dataclass(frozen=True)
class ProbeRecord:
    n: int
    d: int
    char: int
    sample: int
    seed: int
    smooth: str
    wlp_injective: bool
    kernel_dim: int
    ms: int


def probe_dimension(n, d):
    """dim R_d for forms of degree d in n+1 variables."""
    return ring_dimension(n + 1, d)


def check_probe_budget(n, d):
    if n < 1 or d < 2:
        raise ProbeRefusedError(f'need n >= 1 and d >= 2, got ({n}, {d})', 0)
    dimension = probe_dimension(n, d)
    limit = getattr(settings, 'PROBE_MAX_RING_DIMENSION', 2000)
    if dimension > limit:
        raise ProbeRefusedError(
            f'(n, d) = ({n}, {d}) has dim R_d = {dimension}, above the limit {limit}',
            dimension,
        )
    return dimension


def run_probe_sample(n, d, field_label, master_seed, index):
    """
    One row: a random form of degree d in n+1 variables, its smoothness, and
    ×L from degree d-1 for one random L. Returns a plain dict.
    """
    field = FieldSpec.parse(field_label)
    seed = derive_seed(master_seed, index)
    started = time.perf_counter()
    row = {'n': n, 'd': d, 'char': field.characteristic, 'sample': index, 'seed': seed,
           'smooth': SAMPLE_ERROR, 'wlp_injective': None, 'kernel_dim': None}
    try:
        F = random_homogeneous(n + 1, d, field, seed)
        verdict = smoothness_check(F)
        row['smooth'] = verdict.status
        if verdict.status == SmoothnessStatus.SMOOTH:
            L = random_linear_form(n + 1, field, derive_seed(seed, 'hyperplane'))
            mm = multiplication_map(JacobianRingModel(F), L, d - 1)
            row['wlp_injective'] = mm.is_injective
            row['kernel_dim'] = mm.kernel_dimension
    except Exception as exc:
        logger.error(f'probe sample {index} for (n, d) = ({n}, {d}) failed: {exc}')
        row['smooth'] = SAMPLE_ERROR
    row['ms'] = int((time.perf_counter() - started) * 1000)
    return row


def run_probe(n, d, field, samples, master_seed, use_workers=None):
    """ProbeRecords sorted by sample index."""
    from .tasks import probe_sample

    check_probe_budget(n, d)
    if use_workers is None:
        use_workers = getattr(settings, 'PROBE_USE_WORKERS', False)
    args = [(n, d, field.label, master_seed, i) for i in range(samples)]
    if use_workers:
        from celery import group
        rows = group(probe_sample.s(*a) for a in args).apply_async().get()
    else:
        rows = [probe_sample(*a) for a in args]
    records = sorted((ProbeRecord(**row) for row in rows), key=lambda r: r.sample)
    logger.info(f'probe ({n}, {d}) over {field.label}: {len(records)} samples')
    return records


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return value


def write_probe_csv(records, stream, include_timing=True):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for record in records:
        row = asdict(record)
        if not include_timing:
            row['ms'] = ''
        writer.writerow([_cell(row[c]) for c in CSV_COLUMNS])
