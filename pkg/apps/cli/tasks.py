from celery import shared_task

from .harness import run_probe_sample


@shared_task
def probe_sample(n, d, field_label, master_seed, index):
    return run_probe_sample(n, d, field_label, master_seed, index)
