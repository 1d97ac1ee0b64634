# apps/core/conf.py
from django.conf import settings

DEFAULTS = {
    'BOUND': 12,
    'CAP': 1_000_000,
    'SEED': 0x5EED,
    'CESARO_N': 400,
    'SPLIT_ATTEMPTS': 64,
    'CLASSIFY_MAX_STATES': 12,
    'WORKERS': 4,
    'CORPUS_DIR': None,
}


def birec_setting(name: str):
    """Read one entry of ``settings.BIREC``, falling back to the built-in default."""
    configured = getattr(settings, 'BIREC', {})
    if name in configured:
        return configured[name]
    return DEFAULTS[name]
