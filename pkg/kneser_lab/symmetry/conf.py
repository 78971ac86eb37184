"""Access to ``settings.SYMMETRY`` with built-in defaults."""

from django.conf import settings

DEFAULTS = {
    "NODE_BUDGET": 10_000_000,
    "BRUTE_FORCE_MAX_VERTICES": 10,
    "INDEPENDENCE_MAX_VERTICES": 64,
    "MAIN_THEOREM_MAX_N": 9,
    "HYPERCUBE_MAX_N": 6,
    "DEFAULT_MAX_N": 7,
    "SEED": 0,
    "RANDOM_SAMPLES": 1000,
    "LIFT_SAMPLES": 100,
    "WORKERS": 1,
    "INITIAL_COLORING": "unit",
}


def get_setting(name):
    """Return ``settings.SYMMETRY[name]``, or the default when unset.

    Works without a configured settings module so the computational modules
    stay usable as a plain library.
    """
    if name not in DEFAULTS:
        raise KeyError(f"Unknown symmetry setting {name!r}.")
    if not settings.configured:
        return DEFAULTS[name]
    return getattr(settings, "SYMMETRY", {}).get(name, DEFAULTS[name])


def resolve(name, value):
    """Use an explicit keyword override when given, the setting otherwise."""
    return get_setting(name) if value is None else value
