"""Time-frequency localization operators on Z^n x T^n."""

import json

from ._tfloc import *  # noqa: F401,F403
from ._tfloc import run_config as _run_config


def run_checks(config=None):
    """Run a verification config (dict or JSON text) and return parsed report rows."""
    if config is None:
        config = {}
    text = config if isinstance(config, str) else json.dumps(config)
    return [json.loads(line) for line in _run_config(text).splitlines()]
